//! Gröbner bases in three orders, normal forms, Krull dimension and
//! elimination.
//!
//!     cargo run --example groebner

use symlie::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(["x", "y", "z"])?;
    let gens: Vec<Polynomial> = ["x^2 - y*z", "x*y - z^2"]
        .iter()
        .map(|s| parse_polynomial(s, &ring))
        .collect::<Result<_, _>>()?;

    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(1)] {
        let gb = buchberger(&ring, &gens, order)?;
        println!("{order:?}:");
        for g in gb.elements() {
            println!("  {g}");
        }
    }

    let gb = buchberger(&ring, &gens, MonomialOrder::Grevlex)?;
    let p = parse_polynomial("x^3 + y^3", &ring)?;
    println!("normal form of {p}: {}", normal_form(&p, &gb)?);

    let ideal = IdealSpec::new(&ring, gens)?;
    println!("Krull dimension: {}", krull_dimension(&ideal)?);

    // implicitize the twisted cubic by eliminating the parameters
    let r = PolyRing::new(["s", "t", "a", "b", "c", "d"])?;
    let param = ["a - s^3", "b - s^2*t", "c - s*t^2", "d - t^3"]
        .iter()
        .map(|s| parse_polynomial(s, &r))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(e) = elimination_ideal(&IdealSpec::new_affine(&r, param)?, &[0, 1])? {
        println!("twisted cubic:");
        for g in e.generators() {
            println!("  {g}");
        }
    }
    Ok(())
}
