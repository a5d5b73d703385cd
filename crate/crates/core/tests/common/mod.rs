//! Naive reference implementations. Nothing here calls the library's
//! algorithms; groups are rebuilt from permutations or read off a table
//! through `mul_index`/`inv_index` only.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use quotset::GroupTable;

type Perm = Vec<usize>;

/// A group as plain vectors: `mul[x][y]` is `x` then `y`, identity at 0.
#[derive(Debug, Clone)]
pub struct Naive {
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl Naive {
    pub fn order(&self) -> usize {
        self.mul.len()
    }

    /// Reads the table of a library group one product at a time.
    pub fn from_table(g: &GroupTable) -> Self {
        let n = g.order();
        Naive {
            mul: (0..n).map(|x| (0..n).map(|y| g.mul_index(x, y)).collect()).collect(),
            inv: (0..n).map(|x| g.inv_index(x)).collect(),
        }
    }

    fn from_perms(elems: Vec<Perm>) -> Self {
        let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let compose = |p: &Perm, q: &Perm| -> Perm { p.iter().map(|&i| q[i]).collect() };
        let mul = elems
            .iter()
            .map(|p| elems.iter().map(|q| index[&compose(p, q)]).collect())
            .collect::<Vec<Vec<usize>>>();
        let inv = (0..elems.len())
            .map(|x| (0..elems.len()).find(|&y| mul[x][y] == 0).unwrap())
            .collect();
        Naive { mul, inv }
    }

    fn closure(gens: &[Perm]) -> Self {
        let id: Perm = (0..gens[0].len()).collect();
        let mut elems = vec![id.clone()];
        let mut seen: BTreeSet<Perm> = BTreeSet::from([id]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let y: Perm = elems[i].iter().map(|&k| g[k]).collect();
                if seen.insert(y.clone()) {
                    elems.push(y);
                }
            }
            i += 1;
        }
        Self::from_perms(elems)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::closure(&[(0..n).map(|i| (i + 1) % n).collect()])
    }

    pub fn dihedral(n: usize) -> Self {
        Self::closure(&[(0..n).map(|i| (i + 1) % n).collect(), (0..n).map(|i| (n - i) % n).collect()])
    }

    pub fn symmetric(k: usize) -> Self {
        let mut gens = vec![(0..k).map(|i| (i + 1) % k).collect::<Perm>()];
        let mut t: Perm = (0..k).collect();
        t.swap(0, 1);
        gens.push(t);
        Self::closure(&gens)
    }

    /// `a^i x^e` with `a^{2m} = 1`, `x² = a^m`, `x a x⁻¹ = a⁻¹`, acting on
    /// itself by right multiplication.
    pub fn dicyclic(m: usize) -> Self {
        let k = 2 * m;
        let mul = |(i, e): (usize, usize), (j, f): (usize, usize)| match (e, f) {
            (0, _) => ((i + j) % k, f),
            (_, 0) => ((i + k - j) % k, 1),
            _ => ((i + k - j + m) % k, 0),
        };
        let elems: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..k).map(move |i| (i, e))).collect();
        let pos = |x: (usize, usize)| elems.iter().position(|&y| y == x).unwrap();
        let gens: Vec<Perm> = [(1, 0), (0, 1)]
            .iter()
            .map(|&g| elems.iter().map(|&x| pos(mul(x, g))).collect())
            .collect();
        Self::closure(&gens)
    }

    /// Every subset closed under products, by brute force.
    pub fn subgroups(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        assert!(n <= 16, "brute force only");
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            if mask & 1 == 0 {
                continue;
            }
            let has = |x: usize| mask >> x & 1 == 1;
            let closed = (0..n).filter(|&x| has(x)).all(|x| (0..n).filter(|&y| has(y)).all(|y| has(self.mul[x][y])));
            if closed {
                out.push((0..n).map(has).collect());
            }
        }
        out
    }

    pub fn quotient(&self, a: &[usize]) -> Vec<bool> {
        let mut q = vec![false; self.order()];
        for &x in a {
            for &y in a {
                q[self.mul[self.inv[x]][y]] = true;
            }
        }
        q
    }

    /// `r(g) = #{(x, y) ∈ A × A : x⁻¹y = g}`.
    pub fn quotient_counts(&self, a: &[usize]) -> Vec<usize> {
        let mut r = vec![0; self.order()];
        for &x in a {
            for &y in a {
                r[self.mul[self.inv[x]][y]] += 1;
            }
        }
        r
    }

    /// `#{(x, y) ∈ A × B : xy = g}`.
    pub fn product_counts(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut r = vec![0; self.order()];
        for &x in a {
            for &y in b {
                r[self.mul[x][y]] += 1;
            }
        }
        r
    }

    pub fn double_coset(&self, h: &[usize], x: usize) -> Vec<bool> {
        let mut out = vec![false; self.order()];
        for &p in h {
            for &q in h {
                out[self.mul[self.mul[p][x]][q]] = true;
            }
        }
        out
    }

    pub fn in_normalizer(&self, h: &[bool], g: usize) -> bool {
        (0..self.order())
            .filter(|&x| h[x])
            .all(|x| h[self.mul[self.mul[self.inv[g]][x]][g]])
    }

    /// Whether some `H` and cosets witness one of the two structures:
    /// `A ⊆ aH` with `5|A| > 3|H|`, or `A ⊆ aH ∪ bH` with `5|A| > 9|H|`,
    /// `a⁻¹b ∈ N(H)` and `(a⁻¹b)² ∉ H`.
    pub fn has_structure(&self, a: &[usize], subgroups: &[Vec<bool>]) -> bool {
        let n = self.order();
        let k = a.len();
        let a0 = self.inv[a[0]];
        for h in subgroups {
            let size = h.iter().filter(|&&b| b).count();
            if 5 * k > 3 * size && a.iter().all(|&x| h[self.mul[a0][x]]) {
                return true;
            }
            if 5 * k <= 9 * size {
                continue;
            }
            for x in 0..n {
                for y in 0..n {
                    let g = self.mul[self.inv[x]][y];
                    if !self.in_normalizer(h, g) || h[self.mul[g][g]] {
                        continue;
                    }
                    if a.iter().all(|&z| h[self.mul[self.inv[x]][z]] || h[self.mul[self.inv[y]][z]]) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

pub fn members(v: &[bool]) -> Vec<usize> {
    (0..v.len()).filter(|&i| v[i]).collect()
}

/// Minimum `|A⁻¹A|` for each size `1..=n`, and the number of subsets with
/// `3|A⁻¹A| < 5|A|` and neither structure.
pub fn exhaustive_summary(g: &Naive) -> (Vec<usize>, usize) {
    let n = g.order();
    let subgroups = g.subgroups();
    let mut min_q = vec![usize::MAX; n];
    let mut unstructured = 0;
    for mask in 1u32..1 << n {
        let a: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let q = g.quotient(&a).iter().filter(|&&b| b).count();
        let k = a.len();
        min_q[k - 1] = min_q[k - 1].min(q);
        if 3 * q < 5 * k && !g.has_structure(&a, &subgroups) {
            unstructured += 1;
        }
    }
    (min_q, unstructured)
}
