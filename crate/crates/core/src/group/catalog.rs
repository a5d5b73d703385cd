//! The built-in catalog of small groups used by the census and the tests.

/// Largest order covered by the catalog.
pub const EXTENDED_CATALOG_ORDER: usize = 24;

/// A4 as the closure of `(1 2 3)` and `(1 2)(3 4)`.
const ALTERNATING_4: &str = "perm degree=4 gens=[(2 3 1 4),(2 1 4 3)]";

const PRODUCTS: &[(usize, &str)] = &[
    (4, "product cyclic 2 ; cyclic 2"),
    (8, "product cyclic 2 ; cyclic 4"),
    (8, "product cyclic 2 ; cyclic 2 ; cyclic 2"),
    (9, "product cyclic 3 ; cyclic 3"),
    (12, "product cyclic 2 ; cyclic 6"),
    (16, "product cyclic 2 ; cyclic 8"),
    (16, "product cyclic 4 ; cyclic 4"),
    (16, "product cyclic 2 ; cyclic 2 ; cyclic 4"),
    (16, "product cyclic 2 ; cyclic 2 ; cyclic 2 ; cyclic 2"),
    (16, "product cyclic 2 ; dihedral 4"),
    (16, "product cyclic 2 ; dicyclic 2"),
    (18, "product cyclic 3 ; cyclic 6"),
    (18, "product cyclic 3 ; symmetric 3"),
    (20, "product cyclic 2 ; cyclic 10"),
    (24, "product cyclic 2 ; cyclic 12"),
    (24, "product cyclic 2 ; cyclic 2 ; cyclic 6"),
];

/// Catalog group specs of order at most `max_order`, sorted by order and
/// then by family listing order.
///
/// Covers every cyclic group, dihedral groups `dihedral n` for `n >= 3`,
/// every dicyclic group, `symmetric 3`, `symmetric 4`, A4 as a perm spec,
/// all non-cyclic abelian groups of order up to 16 plus a few larger ones,
/// and three non-abelian direct products.
pub fn catalog(max_order: usize) -> Vec<String> {
    let mut out: Vec<(usize, usize, String)> = Vec::new();
    let mut push = |order: usize, spec: String| {
        if order <= max_order {
            let rank = out.len();
            out.push((order, rank, spec));
        }
    };
    for n in 1..=max_order {
        push(n, format!("cyclic {n}"));
    }
    for n in 3..=max_order / 2 {
        push(2 * n, format!("dihedral {n}"));
    }
    for m in 2..=max_order / 4 {
        push(4 * m, format!("dicyclic {m}"));
    }
    push(6, "symmetric 3".into());
    push(24, "symmetric 4".into());
    push(12, ALTERNATING_4.into());
    for &(order, spec) in PRODUCTS {
        push(order, spec.into());
    }
    out.sort();
    out.into_iter().map(|(_, _, s)| s).collect()
}
