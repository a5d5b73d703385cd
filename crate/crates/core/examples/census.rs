//! Exhaustive census over the catalog.
//!
//! cargo run --release --example census -- [max_order] [jobs]

use std::env;

use quotset::census::{theorem_census, CensusConfig};
use quotset::group::{build_group, catalog};

fn main() -> quotset::Result<()> {
    let mut args = env::args().skip(1);
    let max_order: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    let jobs: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let config = CensusConfig {
        jobs,
        ..CensusConfig::default()
    };
    for spec in catalog(max_order) {
        let g = build_group(&spec)?;
        let r = theorem_census(&g, &config)?;
        println!(
            "{:<48} classes {:>9}  small {:>6}  (i) {:>5}  (ii) {:>5}  violations {}  {:.2?}",
            r.group_spec,
            r.canonical_classes,
            r.small_classes,
            r.cond_i_classes,
            r.cond_ii_classes,
            r.violations.len(),
            r.runtime
        );
    }
    Ok(())
}
