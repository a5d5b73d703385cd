//! Product sets, quotient sets and representation counts.
//!
//! cargo run --example quotient_sets

use quotset::algebra::{check_box_kw, product_set, quotient_counts, quotient_set, representation_counts, RepForm};
use quotset::group::build_group;
use quotset::ElemSet;

fn main() -> quotset::Result<()> {
    let g = build_group("cyclic 7")?;
    let a = ElemSet::from_indices(7, [0, 1, 6])?;
    let q = quotient_set(&g, &a)?;
    let r = quotient_counts(&g, &a)?;
    println!("A = {a} in {}", g.spec());
    println!("A⁻¹A = {q}, |A⁻¹A| = {}", q.len());
    println!("r = {:?} (total {} = |A|²)", r.counts, r.total());

    let b = ElemSet::from_indices(7, [0, 1])?;
    let ab = product_set(&g, &a, &b);
    let rp = representation_counts(&g, &a, &b, RepForm::Product)?;
    println!("\nB = {b}, AB = {ab}, product counts {:?}", rp.counts);
    println!("{}", check_box_kw(&g, &a, &b)?);

    let s3 = build_group("symmetric 3")?;
    let t = ElemSet::from_indices(6, [0, 1, 2])?;
    println!("{}: A = {t}, A⁻¹A = {}", s3.spec(), quotient_set(&s3, &t)?);
    Ok(())
}
