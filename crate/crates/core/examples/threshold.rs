//! Sets sitting exactly at |A⁻¹A| = 5/3 |A| without either structure.
//!
//! cargo run --example threshold

use quotset::classify::{classify, construct_threshold_example};
use quotset::group::build_group;
use quotset::subgroup::{all_subgroups, Subgroup};
use quotset::{ElemSet, ElementId};

fn main() -> quotset::Result<()> {
    let cases: &[(&str, &[usize], usize)] = &[
        ("cyclic 7", &[0], 1),
        ("cyclic 10", &[0, 5], 1),
        ("cyclic 15", &[0, 5, 10], 1),
        ("dihedral 6", &[0], 1),
        ("cyclic 8", &[0], 2),
    ];
    for &(spec, h, x) in cases {
        let g = build_group(spec)?;
        let h = Subgroup::from_set(&g, ElemSet::from_indices(g.order(), h.iter().copied())?)?;
        match construct_threshold_example(&g, &h, ElementId::new(x)) {
            Ok(a) => {
                let c = classify(&g, &a, &all_subgroups(&g)?)?;
                println!(
                    "{spec:<12} H = {:<12} g = {x}: A = {a}  3|Q| = {} = 5|A| = {}  {:?}",
                    h.elements().to_string(),
                    c.ratio.three_q,
                    c.ratio.five_a,
                    c.kind
                );
            }
            Err(e) => println!("{spec:<12} H = {:<12} g = {x}: {e}", h.elements().to_string()),
        }
    }
    Ok(())
}
