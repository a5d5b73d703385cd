//! Subgroups, normalizers and the coset partitions of a small non-abelian group.
//!
//! cargo run --example coset_lemmas

use quotset::group::build_group;
use quotset::subgroup::{all_subgroups, check_coset_lemmas, coset_partition, Side};

fn main() -> quotset::Result<()> {
    let g = build_group("dihedral 4")?;
    let subgroups = all_subgroups(&g)?;
    println!("{} has {} subgroups", g.spec(), subgroups.len());
    for (i, h) in subgroups.iter().enumerate() {
        let norm = subgroups.normalizer(i);
        let doubles = coset_partition(&g, h, Side::Double)?;
        let sizes: Vec<usize> = doubles.blocks.iter().map(|b| b.len()).collect();
        let lemmas = check_coset_lemmas(&g, h)?;
        println!(
            "  H = {:<24} N(H) = {:<24} double coset sizes {:?}  lemmas {}",
            h.elements().to_string(),
            norm.elements().to_string(),
            sizes,
            if lemmas.passed() { "ok" } else { "FAILED" }
        );
    }

    let h = subgroups.get(1);
    println!("\nleft and right cosets of {}:", h.elements());
    for side in [Side::Left, Side::Right] {
        let p = coset_partition(&g, h, side)?;
        let blocks: Vec<String> = p.blocks.iter().map(|b| b.to_string()).collect();
        println!("  {side:?}: {}", blocks.join(" "));
    }
    println!("\n{}", check_coset_lemmas(&g, h)?);
    Ok(())
}
