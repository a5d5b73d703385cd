//! Deciding the structure of sets with small quotient set.
//!
//! cargo run --example classify

use quotset::classify::{check_sufficiency, classify, verify_structure, Kind};
use quotset::group::build_group;
use quotset::subgroup::all_subgroups;
use quotset::ElemSet;

fn show(spec: &str, ids: &[usize]) -> quotset::Result<()> {
    let g = build_group(spec)?;
    let subgroups = all_subgroups(&g)?;
    let a = ElemSet::from_indices(g.order(), ids.iter().copied())?;
    let c = classify(&g, &a, &subgroups)?;
    println!(
        "{spec}: A = {a}  |A⁻¹A| = {}  3|Q| = {} vs 5|A| = {}  -> {:?}",
        c.quotient.len(),
        c.ratio.three_q,
        c.ratio.five_a,
        c.kind
    );
    if let Some(h) = &c.subgroup {
        println!("  H = {}", h.elements());
    }
    if matches!(c.kind, Kind::CondI | Kind::CondII) {
        print!("{}", verify_structure(&g, &a, &c)?);
    }
    if let (Kind::CondII, Some(h), Some(x), Some(y)) = (c.kind, &c.subgroup, c.a, c.b) {
        print!("{}", check_sufficiency(&g, h, x, y, &a)?);
    }
    Ok(())
}

fn main() -> quotset::Result<()> {
    show("cyclic 5", &[0, 1, 2, 3])?;
    show("cyclic 12", &[0, 4, 8, 1, 5, 9])?;
    show("cyclic 7", &[0, 1, 6])?;
    show("symmetric 3", &[0, 1, 2, 3])?;
    // A union of two cosets of {1, s} whose quotient set is small, although
    // r ∉ N({1, s}).
    show("dihedral 4", &[0, 1, 4, 5])?;
    Ok(())
}
