//! The non-toricity test on the staged-tree ideal shipped in `data/`:
//! a prime ideal whose symmetry algebra is smaller than its dimension
//! cannot be toric in any linear coordinates.
//!
//!     cargo run --example non_toric_certificate

use std::path::Path;

use symlie::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/staged_tree.ideal");
    let report = analyze(&path, &AnalyzeOptions::default())?;
    println!("lie dimension:   {}", report.lie_dimension);
    println!("ideal dimension: {:?}", report.ideal_dimension);
    println!("verdict:         {:?}", report.verdict);
    assert_eq!(report.verdict, Verdict::NotToric);

    // the same report as JSON, stable across runs
    print!("{}", emit_report(&report, ReportFormat::Json));
    Ok(())
}
