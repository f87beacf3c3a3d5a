//! Symmetry Lie algebra of a binary quadric: the linear system, its basis
//! and a closure check.
//!
//!     cargo run --example lie_algebra

use symlie::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::numbered("x", 2)?;
    let ideal = IdealSpec::parse(&ring, &["x1^2 + x1*x2 + x2^2"])?;

    let system = stabilizer_system(&ideal, 2, false)?;
    println!("{} equations in {} unknowns", system.rows().len(), system.num_unknowns());
    for eq in symlie::cli::system_equations(&system)? {
        println!("  {eq} = 0");
    }

    let algebra = system.solve();
    println!("dim g = {}", algebra.dim());
    for (k, m) in algebra.basis().iter().enumerate() {
        println!("basis element {}:\n{m}", k + 1);
    }
    println!("bracket closed: {}", algebra.is_bracket_closed());

    // the identity is always a symmetry of a homogeneous ideal
    assert!(algebra.contains(&ScalarMatrix::identity(2))?);
    Ok(())
}
