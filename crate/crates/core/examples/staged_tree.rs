//! Staged tree parametrization: leaf monomials, kernel membership of a
//! candidate ideal, and the kernel itself for a small tree.
//!
//!     cargo run --example staged_tree

use std::path::Path;

use symlie::report::read_ideal_file;
use symlie::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let tree = StagedTree::parse(&std::fs::read_to_string(data.join("binary_staged.tree"))?)?;
    let param = staged_tree_parametrization(&tree)?;
    println!("{} leaves, {} stages", tree.num_leaves(), tree.num_stages());
    for (k, img) in param.images().iter().enumerate() {
        println!("  x{} -> {img}", k + 1);
    }

    let ideal = read_ideal_file(&data.join("staged_tree.ideal"))?;
    let ok = verify_staged_kernel(&tree, ideal.generators())?;
    println!("fixture generators in the kernel: {ok:?}");

    // two independent coins: the kernel is a single 2x2 minor
    let small = StagedTree::new(
        &[("r", "a"), ("r", "b"), ("a", "l1"), ("a", "l2"), ("b", "l3"), ("b", "l4")],
        &[("r", "0"), ("a", "1"), ("b", "1")],
    )?;
    let p = staged_tree_parametrization(&small)?;
    match kernel_via_elimination(p.images(), &p.stage_relations())? {
        Some(k) => k.generators().iter().for_each(|g| println!("kernel: {g}")),
        None => println!("kernel: 0"),
    }
    Ok(())
}
