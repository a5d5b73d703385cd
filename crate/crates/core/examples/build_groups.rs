//! Building groups from spec strings and checking their tables.
//!
//! cargo run --example build_groups

use quotset::group::{build_group, catalog, parse_group_specs, verify_group_axioms};

const SPECS: &str = "
# one spec per line
cyclic 6
dihedral 4            # order 8: rotations r^i then reflections r^i s
dicyclic 2            # the quaternion group
symmetric 3
product cyclic 2 ; cyclic 6
perm degree=4 gens=[(2 3 1 4),(2 1 4 3)]
";

fn main() -> quotset::Result<()> {
    for (line, spec) in parse_group_specs(SPECS)? {
        let g = build_group(&spec.to_string())?;
        let axioms = verify_group_axioms(&g);
        println!(
            "line {line:>2}: {:<44} order {:>2}  abelian {:<5}  axioms {}",
            g.spec(),
            g.order(),
            g.is_abelian(),
            if axioms.passed() { "ok" } else { "FAILED" }
        );
    }

    let s3 = build_group("perm degree=3 gens=[(2 1 3),(2 3 1)]")?;
    println!("\nelement names of {}:", s3.spec());
    for x in s3.elements() {
        println!("  {:>2}  {:<8} inverse {}", x.index(), s3.name(x), s3.inv(x));
    }

    println!("\ncatalog up to order 8:");
    for spec in catalog(8) {
        println!("  {spec}");
    }

    match build_group("cyclic -3") {
        Err(e) => println!("\nrejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
