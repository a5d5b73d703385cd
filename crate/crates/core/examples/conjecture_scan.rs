//! Scanning whole groups for (H, A₀) structure below the 2 − 1/(n+1) threshold.
//!
//! cargo run --release --example conjecture_scan -- [n] [max_order]

use std::env;

use quotset::census::{conjecture_scan, find_structure_witness, CensusConfig};
use quotset::group::{build_group, catalog};
use quotset::subgroup::all_subgroups;
use quotset::ElemSet;

fn main() -> quotset::Result<()> {
    let mut args = env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let max_order: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);

    let g = build_group("cyclic 12")?;
    let a = ElemSet::from_indices(12, [0, 4, 8, 1, 5, 9])?;
    if let Some(w) = find_structure_witness(&g, &a, 2, &all_subgroups(&g)?)? {
        println!("A = {a}: H = {}, A₀ = {}, clauses {:?}", w.subgroup.elements(), w.a0, w.clauses);
    }

    let config = CensusConfig::default();
    for spec in catalog(max_order) {
        let g = build_group(&spec)?;
        let r = conjecture_scan(&g, n, &config)?;
        println!(
            "n={n} {:<44} below threshold {:>5}  witnessed {:>5}  missing {:>3}  sharpness {}/{}",
            r.group_spec,
            r.qualifying_classes,
            r.witnessed_classes,
            r.counterexamples.len(),
            r.sharpness_violations.len(),
            r.sharpness_checked
        );
    }
    Ok(())
}
