//! Worked examples beyond the acceptance criteria: printed coordinate
//! vectors, printed bases, the colored-path change of coordinates and the
//! staged-tree and Gaussian parametrizations behind the fixture ideals.

mod common;

use common::*;
use num_traits::Zero;
use symlie::*;

fn half(v: i64, imag: bool) -> Scalar {
    let r = num_rational::BigRational::new(v.into(), 2.into());
    if imag {
        Scalar::new(Zero::zero(), r)
    } else {
        Scalar::from_rational(r)
    }
}

#[test]
fn reference_vector_in_three_variables() {
    let r = PolyRing::numbered("x", 3).unwrap();
    let p = parse_polynomial("x1^2 + 2*x1*x3 - x2*x3", &r).unwrap();
    let want: Vec<Scalar> = [0, -1, 2, 0, 0, 1].iter().map(|&v| Scalar::from_int(v)).collect();
    assert_eq!(p.vectorize(2).unwrap(), want);
}

#[test]
fn staged_tree_generator_vectors() {
    let ideal = fixture_ideal("staged_tree");
    let mut expected = [vec![0i64; 36], vec![0; 36], vec![0; 36]];
    for (k, v) in [(6, 1), (7, 1), (11, -1), (12, -1)] {
        expected[0][k] = v;
    }
    for (k, v) in [(7, 1), (14, 1), (19, -1), (24, -1)] {
        expected[1][k] = v;
    }
    for (k, v) in [(18, 1), (22, -1)] {
        expected[2][k] = v;
    }
    for (p, want) in ideal.generators().iter().zip(&expected) {
        let want: Vec<Scalar> = want.iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(p.vectorize(2).unwrap(), want, "vector of {p}");
    }
    // the three generators are already a basis of the degree-2 component
    assert_eq!(graded_basis(&ideal, 2).members(), ideal.generators());
}

#[test]
fn staged_tree_star_vector_samples() {
    // a few coordinates of vec(g * p1), read off symbolically by using E_ab.
    // The listed vector is the negative of ours (E_ab * p = -x_b dp/dx_a);
    // an overall sign does not change the stabilizer system.
    let ideal = fixture_ideal("staged_tree");
    let p1 = &ideal.generators()[0];
    let frame = monomial_basis(8, 2);
    let coordinate = |a: usize, b: usize, k: usize| star_action_elementary(a - 1, b - 1, p1).vectorize(2).unwrap()[k].clone();
    // first entry is g18 + g28 up to sign: the x8^2 coefficient
    assert_eq!(frame[0], Monomial::new(vec![0, 0, 0, 0, 0, 0, 0, 2]));
    assert_eq!(coordinate(1, 8, 0), Scalar::from_int(-1));
    assert_eq!(coordinate(2, 8, 0), Scalar::from_int(-1));
    assert_eq!(coordinate(3, 8, 0), Scalar::zero());
    // last entry is g81 up to sign: the x1^2 coefficient
    assert_eq!(coordinate(8, 1, 35), Scalar::from_int(-1));
    assert_eq!(coordinate(1, 1, 35), Scalar::zero());
}

#[test]
fn colored_path_printed_basis_elements_are_members() {
    let alg = symmetry_lie_algebra(&fixture_ideal("colored_path")).unwrap();
    let m1 = sparse(6, &[(1, 1, 1), (5, 5, -1), (6, 3, 1), (6, 6, -1)]);
    let m2 = sparse(6, &[(2, 1, 1), (5, 4, 1), (6, 2, -2)]);
    for m in [m1, m2] {
        assert!(alg.contains(&m).unwrap(), "{m}");
    }
    // the third listed element is already in the new coordinates: it lies in
    // B^-1 g B but not in g itself
    let mut m3 = ScalarMatrix::zeros(6, 6);
    m3[(0, 1)] = -Scalar::i();
    m3[(1, 5)] = half(1, false);
    m3[(2, 5)] = half(1, false);
    m3[(3, 2)] = Scalar::i();
    assert!(!alg.contains(&m3).unwrap());
    let b = fixture_matrix("colored_path_b.matrix");
    let conj = alg.conjugate(&b).unwrap();
    let mut span = EchelonBasis::new(36);
    for c in &conj {
        span.insert(c.as_row_major());
    }
    assert!(span.contains(m3.as_row_major()));
}

#[test]
fn colored_path_change_of_coordinates() {
    let ideal = fixture_ideal("colored_path");
    let b = fixture_matrix("colored_path_b.matrix");
    let r = ideal.ring();
    let e = |s: &str| parse_polynomial(s, r).unwrap();
    let p1 = ideal.generators()[0].change_variables(&b).unwrap();
    let p2 = ideal.generators()[1].change_variables(&b).unwrap();
    assert_eq!(p1, e("-i*s12^2 + i*s22^2 - s11*s33 - s13*s33"));
    assert_eq!(p2, e("-2*s12^2 - 2*s22^2 + 2*i*s11*s33 - 2*i*s13*s33"));
    let quarter = Scalar::from_ratio(1, 4);
    let q1 = (&p1.scale(&Scalar::from_int(2)) + &p2.scale(&Scalar::i())).scale(&quarter);
    let q2 = (&p1.scale(&Scalar::from_int(2)) - &p2.scale(&Scalar::i())).scale(&quarter);
    // the combination lands on the negative of the listed first binomial
    assert_eq!(q1, e("-i*s12^2 - s11*s33"));
    assert_eq!(q2, e("i*s22^2 - s13*s33"));

    // both pairs generate the same ideal
    let gb = buchberger(r, &[p1.clone(), p2.clone()], MonomialOrder::Grevlex).unwrap();
    assert!(normal_form(&q1, &gb).unwrap().is_zero());
    let gq = buchberger(r, &[q1, q2], MonomialOrder::Grevlex).unwrap();
    assert!(gq.contains(&p1).unwrap() && gq.contains(&p2).unwrap());
}

#[test]
fn sphere_conjugated_basis() {
    let alg = symmetry_lie_algebra(&fixture_ideal("sphere")).unwrap();
    let b = fixture_matrix("sphere_b.matrix");
    let conj = conjugate_matrices(&sphere_displayed(), &b).unwrap();
    assert_eq!(conj[0], ScalarMatrix::identity(3));
    let mut rot12 = ScalarMatrix::zeros(3, 3);
    rot12[(0, 1)] = Scalar::from_int(-1);
    rot12[(0, 2)] = Scalar::from_int(1);
    rot12[(1, 0)] = half(1, false);
    rot12[(2, 0)] = half(-1, false);
    assert_eq!(conj[1], rot12);
    // the printed (1,3) entry of this element reads 1; exact arithmetic gives i
    let mut rot13 = ScalarMatrix::zeros(3, 3);
    rot13[(0, 1)] = Scalar::i();
    rot13[(0, 2)] = Scalar::i();
    rot13[(1, 0)] = half(1, true);
    rot13[(2, 0)] = half(1, true);
    assert_eq!(conj[2], rot13);
    let torus = ScalarMatrix::diagonal(&[Scalar::zero(), -Scalar::i(), Scalar::i()]);
    assert_eq!(conj[3], torus);
    // the displayed list spans the computed algebra
    assert_eq!(diagonal_subalgebra_dim(&conj), 2);
    assert_eq!(alg.dim(), 4);
    // after the substitution the generator is the binomial y1^2 − y2*y3, up to a unit
    let p = fixture_ideal("sphere").generators()[0].change_variables(&b).unwrap();
    assert_eq!(p, parse_polynomial("x1^2 - 4*x2*x3", p.ring()).unwrap());
}

#[test]
fn binary_staged_tree_parametrizes_the_fixture_ideal() {
    let tree = fixture_tree("binary_staged.tree");
    assert_eq!(tree.num_leaves(), 8);
    assert_eq!(tree.num_stages(), 4);
    let ok = verify_staged_kernel(&tree, fixture_ideal("staged_tree").generators()).unwrap();
    assert_eq!(ok, [true, true, true]);
}

#[test]
fn caterpillar_tree_parametrizes_the_minors() {
    let tree = fixture_tree("caterpillar.tree");
    assert_eq!(tree.num_stages(), 1);
    let param = staged_tree_parametrization(&tree).unwrap();
    // z-exponent is 9 minus the leaf depth
    let z = param.z_index();
    let depths = [2, 3, 3, 4, 4, 4, 2, 1, 1];
    for (img, d) in param.images().iter().zip(depths) {
        let (m, _) = img.leading_term().unwrap();
        assert_eq!(m.exponents()[z], 9 - d);
        assert_eq!(m.degree(), 9);
    }
    let ok = verify_staged_kernel(&tree, fixture_ideal("caterpillar_minors").generators()).unwrap();
    assert!(ok.iter().all(|&b| b));
}

#[test]
fn caterpillar_entry_needs_all_seven_leaves() {
    // with x1+…+x6 in the corner the minors leave the kernel of the tree
    let tree = fixture_tree("caterpillar.tree");
    let r = PolyRing::numbered("x", 9).unwrap();
    let minor = parse_polynomial("(x1 + x2 + x3 + x4 + x5 + x6)*x3 - x2*x8", &r).unwrap();
    assert_eq!(verify_staged_kernel(&tree, &[minor]).unwrap(), [false]);
}

#[test]
fn colored_path_graph() {
    let g = fixture_graph("colored_path.graph");
    let map = gaussian_cofactor_map(&g).unwrap();
    // four free parameters, and k22 = k33 with the 2-3 entry a structural zero
    assert_eq!(map.k_ring().arity(), 4);
    assert_eq!(map.k_matrix()[1][1], map.k_matrix()[2][2]);
    assert!(map.k_matrix()[1][2].is_zero());
    assert!(map.adjugate_identity_holds());
    let ok = verify_gaussian_kernel(&g, fixture_ideal("colored_path").generators()).unwrap();
    assert_eq!(ok, [true, true]);
}

#[test]
fn four_cycle_cofactors_are_cubics() {
    let map = gaussian_cofactor_map(&fixture_graph("four_cycle.graph")).unwrap();
    assert_eq!(map.k_ring().arity(), 8);
    for row in map.adjugate() {
        for entry in row {
            assert_eq!(entry.homogeneity(), Homogeneity::Degree(3));
        }
    }
}

#[test]
fn adjugate_identity_small_graphs() {
    let graphs = [
        ColoredGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap(),
        ColoredGraph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap(),
        ColoredGraph::new(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap(),
        ColoredGraph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap(),
    ];
    for g in graphs {
        assert!(gaussian_cofactor_map(&g).unwrap().adjugate_identity_holds());
    }
}

#[test]
fn staged_tree_elimination_agrees_with_verification() {
    let tree = StagedTree::parse(
        "tree:\nedge r a\nedge r b\nedge a l1\nedge a l2\nedge b l3\nedge b l4\nstages:\nr 0\na 1\nb 1\n",
    )
    .unwrap();
    let param = staged_tree_parametrization(&tree).unwrap();
    let kernel = kernel_via_elimination(param.images(), &param.stage_relations())
        .unwrap()
        .unwrap();
    let ok = verify_staged_kernel(&tree, kernel.generators()).unwrap();
    assert!(ok.iter().all(|&b| b));
    let mut reversed = kernel.generators().to_vec();
    reversed.reverse();
    let mut back = verify_staged_kernel(&tree, &reversed).unwrap();
    back.reverse();
    assert_eq!(back, ok);
}

#[test]
fn nonprime_intersection() {
    // ⟨x1^2, x2^3⟩: degree 2 forces g12 = 0, degree 3 also forces g21 = 0
    let r = PolyRing::numbered("x", 2).unwrap();
    let i = IdealSpec::parse(&r, &["x1^2", "x2^3"]).unwrap().with_asserted_prime(false);
    let at2 = graded_symmetry_algebra(&i, 2, true).unwrap();
    let at3 = graded_symmetry_algebra(&i, 3, false).unwrap();
    let both = symmetry_lie_algebra_multidegree(&i, &[2, 3]).unwrap();
    assert_eq!((at2.dim(), at3.dim(), both.dim()), (3, 2, 2));
    assert_eq!(both.diagonal_subalgebra_dim(), 2);

    // in three variables compare with dim U + dim V − dim(U + V)
    let r = PolyRing::numbered("x", 3).unwrap();
    let i = IdealSpec::parse(&r, &["x1^2 - x2*x3", "x3^3 + x1*x2^2"]).unwrap().with_asserted_prime(false);
    let u = graded_symmetry_algebra(&i, 2, true).unwrap();
    let v = graded_symmetry_algebra(&i, 3, false).unwrap();
    let mut sum = EchelonBasis::new(9);
    for m in u.basis().iter().chain(v.basis()) {
        sum.insert(m.as_row_major());
    }
    let both = symmetry_lie_algebra_multidegree(&i, &[2, 3]).unwrap();
    assert_eq!(both.dim(), u.dim() + v.dim() - sum.rank());
    for m in both.basis() {
        assert!(u.contains(m).unwrap() && v.contains(m).unwrap());
    }
}

#[test]
fn coin_flip_becomes_binomial() {
    // x1 = y1 + y2, x2 = y1, x3 = y3, found by searching {-1, 0, 1} matrices
    let ring = PolyRing::numbered("x", 3).unwrap();
    let f = parse_polynomial("x1*x3 - x2*x3 - x2^2", &ring).unwrap();
    let b = dense(&[&[1, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let g = f.change_variables(&b).unwrap();
    assert_eq!(g, parse_polynomial("x2*x3 - x1^2", &ring).unwrap());
    assert!(is_binomial_set(std::slice::from_ref(&g)));

    // a nondegenerate ternary quadric: scalars plus an orthogonal algebra
    let before = symmetry_lie_algebra(&IdealSpec::new(&ring, vec![f]).unwrap()).unwrap();
    let after = symmetry_lie_algebra(&IdealSpec::new(&ring, vec![g]).unwrap()).unwrap();
    assert_eq!(before.dim(), 4);
    assert_eq!(after.dim(), 4);
    let b_inv = b.inverse().unwrap();
    for a in before.basis() {
        assert!(after.contains(&(&(&b_inv * a) * &b)).unwrap());
    }
}
