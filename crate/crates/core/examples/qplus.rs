//! The sets Q⁺ and F = ⟨Q⁺⟩ and the stability of A⁻¹A under F.
//!
//! cargo run --example qplus

use quotset::classify::qplus_diagnostics;
use quotset::group::build_group;
use quotset::ElemSet;

fn main() -> quotset::Result<()> {
    let cases: &[(&str, &[usize])] = &[
        ("cyclic 7", &[0, 1, 6]),
        ("cyclic 12", &[0, 4, 8, 1, 5, 9]),
        ("cyclic 9", &[0, 1, 3]),
        ("dihedral 4", &[0, 1, 4, 5]),
    ];
    for &(spec, ids) in cases {
        let g = build_group(spec)?;
        let a = ElemSet::from_indices(g.order(), ids.iter().copied())?;
        let d = qplus_diagnostics(&g, &a)?;
        println!("{spec}: A = {a}");
        println!("  Q = {}  Q⁺ = {}  F = {}  AF = {}", d.quotient, d.qplus, d.f.elements(), d.af);
        println!(
            "  r-gap bounds {:?}, observed {:?}",
            d.r_gap_bounds, d.r_partial_range
        );
        print!("{}{}", d.stability, d.r_gap);
    }
    Ok(())
}
