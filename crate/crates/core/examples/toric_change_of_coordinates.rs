//! An inconclusive verdict and what to do with it: diagonalize part of the
//! symmetry algebra by conjugation, then change coordinates so the ideal
//! becomes binomial.
//!
//!     cargo run --example toric_change_of_coordinates

use std::path::Path;

use symlie::report::{read_ideal_file, read_matrix_file};
use symlie::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let ideal = read_ideal_file(&data.join("colored_path.ideal"))?;
    let b = read_matrix_file(&data.join("colored_path_b.matrix"))?;

    let algebra = symmetry_lie_algebra(&ideal)?;
    let conj = algebra.conjugate(&b)?;
    println!(
        "dim g = {}, diagonal part {} before and {} after conjugation",
        algebra.dim(),
        algebra.diagonal_subalgebra_dim(),
        diagonal_subalgebra_dim(&conj)
    );

    let moved: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.change_variables(&b))
        .collect::<Result<_, _>>()?;
    for p in &moved {
        println!("  {p}");
    }

    // p1 and p2 are not binomials, but their span contains two
    let quarter = Scalar::from_ratio(1, 4);
    let two = Scalar::from_int(2);
    let i = Scalar::i();
    let q1 = (&moved[0].scale(&two) + &moved[1].scale(&i)).scale(&quarter);
    let q2 = (&moved[0].scale(&two) - &moved[1].scale(&i)).scale(&quarter);
    println!("binomial basis:\n  {q1}\n  {q2}");
    assert!(is_binomial_set(&[q1, q2]));
    Ok(())
}
