use std::collections::{HashMap, VecDeque};

use super::spec::{parse_group_spec, GroupSpec};
use super::GroupTable;
use crate::error::{Error, Result};

/// Default bound on the order of any constructed group (7!).
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// Parses and builds a group with the default order cap.
pub fn build_group(spec: &str) -> Result<GroupTable> {
    build_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_with_cap(spec: &str, cap: usize) -> Result<GroupTable> {
    build_spec(&parse_group_spec(spec)?, cap)
}

/// Builds the table for an already parsed spec.
///
/// Labeling conventions:
/// * `cyclic n`: id = residue mod `n`.
/// * `dihedral n`: ids `0..n` are rotations `r^i`, ids `n..2n` are `r^i s`.
/// * `dicyclic m`: ids `0..2m` are `a^i`, ids `2m..4m` are `a^i x`.
/// * `symmetric k`: permutations in lexicographic order of their one-line images.
/// * `product`: id = mixed-radix number, first factor most significant.
/// * `perm`: breadth-first closure from the identity, generators in listed order.
pub fn build_spec(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    let order = nominal_order(spec);
    if let Some(order) = order {
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
    }
    let text = spec.to_string();
    Ok(match spec {
        GroupSpec::Cyclic(n) => cyclic(text, *n),
        GroupSpec::Dihedral(n) => dihedral(text, *n),
        GroupSpec::Dicyclic(m) => dicyclic(text, *m),
        GroupSpec::Symmetric(k) => symmetric(text, *k),
        GroupSpec::Product(factors) => {
            let tables = factors
                .iter()
                .map(|f| build_spec(f, cap))
                .collect::<Result<Vec<_>>>()?;
            let order = tables.iter().fold(1usize, |acc, t| acc.saturating_mul(t.order()));
            if order > cap {
                return Err(Error::OrderCap { order, cap });
            }
            let mut acc = tables.last().unwrap().clone();
            for t in tables.iter().rev().skip(1) {
                acc = direct_product(String::new(), t, &acc);
            }
            acc.spec = text;
            acc
        }
        GroupSpec::Perm { degree, gens } => perm_closure(text, *degree, gens, cap)?,
    })
}

fn nominal_order(spec: &GroupSpec) -> Option<usize> {
    match spec {
        GroupSpec::Cyclic(n) => Some(*n),
        GroupSpec::Dihedral(n) => Some(n.saturating_mul(2)),
        GroupSpec::Dicyclic(m) => Some(m.saturating_mul(4)),
        GroupSpec::Symmetric(k) => Some((1..=*k).product()),
        GroupSpec::Product(fs) => fs
            .iter()
            .try_fold(1usize, |acc, f| Some(acc.saturating_mul(nominal_order(f)?))),
        GroupSpec::Perm { .. } => None,
    }
}

fn from_fn(text: String, order: usize, names: Vec<String>, f: impl Fn(usize, usize) -> usize) -> GroupTable {
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            mul.push(f(x, y) as u32);
        }
    }
    GroupTable::from_flat(text, order, mul, names)
}

fn cyclic(text: String, n: usize) -> GroupTable {
    let names = (0..n).map(|i| i.to_string()).collect();
    from_fn(text, n, names, |x, y| (x + y) % n)
}

fn dihedral(text: String, n: usize) -> GroupTable {
    // r^i s^a · r^j s^b = r^(i + (-1)^a j) s^(a+b)
    let names = (0..2 * n)
        .map(|x| if x < n { format!("r^{x}") } else { format!("r^{} s", x - n) })
        .collect();
    from_fn(text, 2 * n, names, |x, y| {
        let (i, a) = (x % n, x / n);
        let (j, b) = (y % n, y / n);
        let rot = if a == 0 { (i + j) % n } else { (i + n - j) % n };
        rot + n * ((a + b) % 2)
    })
}

fn dicyclic(text: String, m: usize) -> GroupTable {
    // <a, x | a^(2m) = 1, x^2 = a^m, x^-1 a x = a^-1>, elements a^i x^e.
    let k = 2 * m;
    let names = (0..2 * k)
        .map(|x| if x < k { format!("a^{x}") } else { format!("a^{} x", x - k) })
        .collect();
    from_fn(text, 2 * k, names, |x, y| {
        let (i, e) = (x % k, x / k);
        let (j, f) = (y % k, y / k);
        match (e, f) {
            (0, _) => (i + j) % k + k * f,
            (_, 0) => (i + k - j) % k + k,
            _ => (i + k - j + m) % k,
        }
    })
}

fn direct_product(text: String, left: &GroupTable, right: &GroupTable) -> GroupTable {
    let nr = right.order();
    let order = left.order() * nr;
    let names = (0..order)
        .map(|x| format!("({},{})", left.names()[x / nr], right.names()[x % nr]))
        .collect();
    from_fn(text, order, names, |x, y| {
        left.mul_index(x / nr, y / nr) * nr + right.mul_index(x % nr, y % nr)
    })
}

/// Cycle notation on points `1..=degree`; the identity is `()`.
pub(crate) fn cycle_notation(images: &[u16]) -> String {
    let mut seen = vec![false; images.len()];
    let mut out = String::new();
    for start in 0..images.len() {
        if seen[start] || images[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push((p + 1).to_string());
            p = images[p] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// "Apply `x`, then `y`".
fn compose(x: &[u16], y: &[u16]) -> Vec<u16> {
    x.iter().map(|&i| y[i as usize]).collect()
}

fn table_from_perms(text: String, perms: &[Vec<u16>]) -> GroupTable {
    let index: HashMap<&[u16], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    from_fn(text, perms.len(), names, |x, y| index[compose(&perms[x], &perms[y]).as_slice()])
}

fn symmetric(text: String, k: usize) -> GroupTable {
    let mut perms = Vec::new();
    let mut current: Vec<u16> = (0..k as u16).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    table_from_perms(text, &perms)
}

fn next_permutation(p: &mut [u16]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn perm_closure(text: String, degree: usize, gens: &[Vec<usize>], cap: usize) -> Result<GroupTable> {
    let mut gen_perms = Vec::with_capacity(gens.len());
    for (gi, g) in gens.iter().enumerate() {
        let bad = Error::NotAPermutation {
            index: gi,
            degree,
        };
        if g.len() != degree {
            return Err(bad);
        }
        let mut hit = vec![false; degree];
        for &v in g {
            if v == 0 || v > degree || hit[v - 1] {
                return Err(bad);
            }
            hit[v - 1] = true;
        }
        gen_perms.push(g.iter().map(|&v| (v - 1) as u16).collect::<Vec<u16>>());
    }

    let identity: Vec<u16> = (0..degree as u16).collect();
    let mut perms = vec![identity.clone()];
    let mut index: HashMap<Vec<u16>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in &gen_perms {
            let y = compose(&perms[x], g);
            if !index.contains_key(&y) {
                if perms.len() == cap {
                    return Err(Error::OrderCap {
                        order: perms.len() + 1,
                        cap,
                    });
                }
                index.insert(y.clone(), perms.len());
                queue.push_back(perms.len());
                perms.push(y);
            }
        }
    }
    Ok(table_from_perms(text, &perms))
}
