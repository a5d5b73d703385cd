//! Word-sized enumeration kernel for groups of order at most 64.
//!
//! A subset is a `u64` mask. Left translation `x ↦ gx` is applied a byte at a
//! time through precomputed tables, so `gA` costs `⌈N/8⌉` lookups.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroup::SubgroupList;

pub(crate) const KERNEL_MAX_ORDER: usize = 64;

pub(crate) struct Kernel {
    chunks: usize,
    table: Vec<u64>,
    inv: Vec<usize>,
    square: Vec<usize>,
    /// `(mask, order, normalizer mask)` in list order.
    subgroups: Vec<(u64, usize, u64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum FastWitness {
    CondI(usize),
    CondII(usize, usize),
}

impl Kernel {
    pub fn new(g: &GroupTable, subgroups: &SubgroupList) -> Self {
        let n = g.order();
        assert!(n <= KERNEL_MAX_ORDER);
        let chunks = n.div_ceil(8);
        let mut table = vec![0u64; n * chunks * 256];
        for x in 0..n {
            let row = g.row(x);
            for c in 0..chunks {
                let base = (x * chunks + c) * 256;
                for byte in 1..256usize {
                    let low = byte.trailing_zeros() as usize;
                    let y = c * 8 + low;
                    let bit = if y < n { 1u64 << row[y] } else { 0 };
                    table[base + byte] = table[base + (byte & (byte - 1))] | bit;
                }
            }
        }
        let mask = |s: &crate::set::ElemSet| s.to_mask().expect("order <= 64");
        Self {
            chunks,
            table,
            inv: (0..n).map(|x| g.inv_index(x)).collect(),
            square: (0..n).map(|x| g.mul_index(x, x)).collect(),
            subgroups: subgroups
                .iter()
                .enumerate()
                .map(|(i, h)| (mask(h.elements()), h.order(), mask(subgroups.normalizer(i).elements())))
                .collect(),
        }
    }

    /// `gA`.
    #[inline]
    pub fn translate(&self, g: usize, a: u64) -> u64 {
        let base = g * self.chunks * 256;
        let mut out = 0;
        for c in 0..self.chunks {
            out |= self.table[base + c * 256 + ((a >> (8 * c)) & 0xff) as usize];
        }
        out
    }

    /// `Some(stabilizer size)` when `a` (containing the identity) is the
    /// smallest of its translates `x⁻¹A`, `x ∈ A`.
    #[inline]
    pub fn canonical_stabilizer(&self, a: u64) -> Option<usize> {
        let mut stab = 0;
        let mut rest = a;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let t = self.translate(self.inv[x], a);
            if t < a {
                return None;
            }
            stab += usize::from(t == a);
        }
        Some(stab)
    }

    /// `A⁻¹A = ∪_{x ∈ A} x⁻¹A`.
    #[inline]
    pub fn quotient(&self, a: u64) -> u64 {
        let mut q = 0;
        let mut rest = a;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            q |= self.translate(self.inv[x], a);
        }
        q
    }

    /// The structural hypotheses for a set containing the identity as its
    /// smallest element, same search order as the full classifier.
    pub fn witness(&self, a: u64) -> Option<FastWitness> {
        let k = a.count_ones() as usize;
        for (i, &(h, order, _)) in self.subgroups.iter().enumerate() {
            if 3 * order >= 5 * k {
                break;
            }
            if a & !h == 0 {
                return Some(FastWitness::CondI(i));
            }
        }
        for (i, &(h, order, norm)) in self.subgroups.iter().enumerate() {
            if 9 * order >= 5 * k {
                break;
            }
            let outside = a & !h;
            if outside == 0 {
                continue;
            }
            let b = outside.trailing_zeros() as usize;
            if a & !(h | self.translate(b, h)) != 0 {
                continue;
            }
            if norm >> b & 1 == 1 && h >> self.square[b] & 1 == 0 {
                return Some(FastWitness::CondII(i, b));
            }
        }
        None
    }
}

/// One slice of the subset space: the membership of ids `1..=bits` is fixed
/// to `pattern`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Part {
    pub bits: usize,
    pub pattern: u64,
}

impl Part {
    /// Calls `f` on every mask of popcount `k` containing the identity and
    /// matching this part, in increasing order of the free bits.
    pub fn for_each(&self, n: usize, k: usize, mut f: impl FnMut(u64)) {
        let fixed = self.pattern.count_ones() as usize;
        if k == 0 || k - 1 < fixed {
            return;
        }
        let free = n - 1 - self.bits;
        let r = k - 1 - fixed;
        if r > free {
            return;
        }
        let head = 1 | self.pattern << 1;
        let shift = self.bits + 1;
        if r == 0 {
            f(head);
            return;
        }
        let limit = 1u128 << free;
        let mut c: u64 = (1u64 << r) - 1;
        loop {
            f(head | c << shift);
            // Gosper's hack: next integer with the same popcount.
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            c = (((ripple ^ c) >> 2) / low) | ripple;
            if u128::from(c) >= limit || ripple == 0 {
                break;
            }
        }
    }
}

/// Splits the space into `2^p` parts, `p = ⌈log₂ jobs⌉` capped by `n − 1`,
/// and maps them on a pool of `jobs` threads. Results come back in part
/// order whatever the scheduling.
pub(crate) fn run_parts<T, F>(n: usize, jobs: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Part) -> T + Sync,
{
    let jobs = jobs.max(1);
    let bits = (usize::BITS - (jobs - 1).leading_zeros()) as usize;
    let bits = bits.min(n.saturating_sub(1));
    let parts: Vec<Part> = (0..1u64 << bits).map(|pattern| Part { bits, pattern }).collect();
    if jobs == 1 {
        return Ok(parts.into_iter().map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(|| parts.into_par_iter().map(&f).collect()))
}
