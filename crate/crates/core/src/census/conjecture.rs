//! Search for `(H, A₀)` structure in sets with `|A⁻¹A| < (2 − 1/(n+1))|A|`.
//!
//! Structure means: `A₀ ⊆ A` with `|A₀| <= n`, `A₀` inside one left
//! `N(H)`-coset, `A ⊆ A₀H`, `|A₀H| = |A₀||H|`, and
//! `(2n+1)|A| > (n+1)(2|A₀|−1)|H|`; the expected consequences are
//! `A⁻¹A = A₀⁻¹A₀H` and `|A⁻¹A| = (2|A₀|−1)|H|`. The case `n = 1` is a
//! classical theorem and `n = 2` is the small-quotient classification, so
//! missing structure there is a fatal finding; `n >= 3` is open and the
//! scan only reports.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::kernel::{run_parts, Kernel};
use super::CensusConfig;
use crate::algebra::{inverse_set, product_set, quotient_set};
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable};
use crate::set::ElemSet;
use crate::subgroup::{all_subgroups, ensure_universe, left_coset, Subgroup, SubgroupList};

/// How the size clause is read.
pub const SIZE_CLAUSE_NOTE: &str = "size clause read as |A⁻¹A| = (2|A₀|−1)·|H|";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClauseChecks {
    pub size_at_most_n: bool,
    pub single_normalizer_coset: bool,
    pub covered: bool,
    pub product_size: bool,
    pub lower_bound: bool,
    pub quotient_equals: bool,
    pub quotient_size: bool,
    /// `|A| <= |A₀H|` and `(2n+1)|A₀H| < (2n+1)|A| + n|H|`.
    pub dense: bool,
}

impl ClauseChecks {
    /// The hypotheses alone (first five clauses).
    pub fn hypotheses(&self) -> bool {
        self.size_at_most_n && self.single_normalizer_coset && self.covered && self.product_size && self.lower_bound
    }

    pub fn all(&self) -> bool {
        self.hypotheses() && self.quotient_equals && self.quotient_size && self.dense
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureWitness {
    pub subgroup: Subgroup,
    pub a0: ElemSet,
    pub n: usize,
    pub clauses: ClauseChecks,
}

fn clauses(g: &GroupTable, a: &ElemSet, q: &ElemSet, n: usize, h: &Subgroup, norm: &Subgroup, reps: &[ElementId]) -> (ElemSet, ClauseChecks) {
    let a0 = ElemSet::from_indices(g.order(), reps.iter().map(|x| x.index())).expect("ids in range");
    let m = a0.len();
    let hn = h.order();
    let a0h = product_set(g, &a0, h.elements());
    let single = reps
        .iter()
        .all(|&x| reps.iter().all(|&y| norm.contains(g.mul(g.inv(x), y))));
    let structured = product_set(g, &product_set(g, &inverse_set(g, &a0), &a0), h.elements());
    let k = a.len();
    let c = ClauseChecks {
        size_at_most_n: m <= n,
        single_normalizer_coset: single,
        covered: a.is_subset(&a0h),
        product_size: a0h.len() == m * hn,
        lower_bound: (2 * n + 1) * k > (n + 1) * (2 * m - 1) * hn,
        quotient_equals: *q == structured,
        quotient_size: q.len() == (2 * m - 1) * hn,
        dense: k <= a0h.len() && (2 * n + 1) * a0h.len() < (2 * n + 1) * k + n * hn,
    };
    (a0, c)
}

fn search(
    g: &GroupTable,
    a: &ElemSet,
    n: usize,
    subgroups: &SubgroupList,
    accept: impl Fn(&ClauseChecks) -> bool,
) -> Result<Option<ConjectureWitness>> {
    ensure_universe(g, a)?;
    let q = quotient_set(g, a)?;
    for (i, h) in subgroups.iter().enumerate() {
        let norm = subgroups.normalizer(i);
        // Members of A grouped by left H-coset, cosets in order of their
        // smallest member.
        let mut cosets: Vec<Vec<ElementId>> = Vec::new();
        let mut seen = ElemSet::new(g.order());
        for x in a.iter() {
            if seen.contains(x) {
                continue;
            }
            let coset = left_coset(g, h, x);
            cosets.push(a.intersection(&coset).iter().collect());
            seen = seen.union(&coset);
            if cosets.len() > n {
                break;
            }
        }
        if cosets.len() > n {
            continue;
        }
        let mut reps = Vec::with_capacity(cosets.len());
        if let Some(w) = choose(g, a, &q, n, h, norm, &cosets, &mut reps, &accept) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn choose(
    g: &GroupTable,
    a: &ElemSet,
    q: &ElemSet,
    n: usize,
    h: &Subgroup,
    norm: &Subgroup,
    cosets: &[Vec<ElementId>],
    reps: &mut Vec<ElementId>,
    accept: &impl Fn(&ClauseChecks) -> bool,
) -> Option<ConjectureWitness> {
    if reps.len() == cosets.len() {
        let (a0, c) = clauses(g, a, q, n, h, norm, reps);
        return accept(&c).then(|| ConjectureWitness {
            subgroup: h.clone(),
            a0,
            n,
            clauses: c,
        });
    }
    for &x in &cosets[reps.len()] {
        if reps.iter().all(|&y| norm.contains(g.mul(g.inv(y), x))) {
            reps.push(x);
            if let Some(w) = choose(g, a, q, n, h, norm, cosets, reps, accept) {
                return Some(w);
            }
            reps.pop();
        }
    }
    None
}

/// First `(H, A₀)` meeting every clause, `H` in list order and
/// representatives chosen smallest-first.
pub fn find_structure_witness(
    g: &GroupTable,
    a: &ElemSet,
    n: usize,
    subgroups: &SubgroupList,
) -> Result<Option<ConjectureWitness>> {
    search(g, a, n, subgroups, ClauseChecks::all)
}

/// First `(H, A₀)` meeting the hypotheses, ignoring the consequences.
pub fn find_hypothesis_witness(
    g: &GroupTable,
    a: &ElemSet,
    n: usize,
    subgroups: &SubgroupList,
) -> Result<Option<ConjectureWitness>> {
    search(g, a, n, subgroups, ClauseChecks::hypotheses)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub group_spec: String,
    pub order: usize,
    pub n: usize,
    pub sizes: (usize, usize),
    pub canonical_classes: u64,
    /// Classes with `(n+1)|A⁻¹A| < (2n+1)|A|`.
    pub qualifying_classes: u64,
    pub witnessed_classes: u64,
    /// Qualifying classes without a witness.
    pub counterexamples: Vec<ElemSet>,
    /// Non-qualifying classes with `|A⁻¹A| < 2|A|`, searched for hypotheses.
    pub sharpness_checked: u64,
    /// Those among them where the hypotheses hold anyway.
    pub sharpness_violations: Vec<ElemSet>,
    /// Whether counterexamples contradict a known theorem (`n <= 2`).
    pub fatal: bool,
    pub note: &'static str,
    #[serde(skip)]
    pub runtime: Duration,
}

impl ConjectureReport {
    pub fn findings(&self) -> usize {
        self.counterexamples.len() + self.sharpness_violations.len()
    }
}

#[derive(Default)]
struct Part {
    classes: u64,
    qualifying: u64,
    witnessed: u64,
    counterexamples: Vec<u64>,
    checked: u64,
    violations: Vec<u64>,
    error: Option<Error>,
}

/// Scans every canonical set of `G` for the structure above.
pub fn conjecture_scan(g: &GroupTable, n: usize, config: &CensusConfig) -> Result<ConjectureReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    config.check_order(g.order())?;
    let start = Instant::now();
    let order = g.order();
    let subgroups = all_subgroups(g)?;
    let kernel = Kernel::new(g, &subgroups);
    let (lo, hi) = config.size_range(order);
    let parts = run_parts(order, config.jobs, |part| {
        let mut out = Part::default();
        for k in lo..=hi {
            part.for_each(order, k, |mask| {
                if out.error.is_some() || kernel.canonical_stabilizer(mask).is_none() {
                    return;
                }
                out.classes += 1;
                let ql = kernel.quotient(mask).count_ones() as usize;
                let set = ElemSet::from_mask(order, mask);
                if (n + 1) * ql < (2 * n + 1) * k {
                    out.qualifying += 1;
                    match find_structure_witness(g, &set, n, &subgroups) {
                        Ok(Some(_)) => out.witnessed += 1,
                        Ok(None) => out.counterexamples.push(mask),
                        Err(e) => out.error = Some(e),
                    }
                } else if ql < 2 * k {
                    out.checked += 1;
                    match find_hypothesis_witness(g, &set, n, &subgroups) {
                        Ok(Some(_)) => out.violations.push(mask),
                        Ok(None) => {}
                        Err(e) => out.error = Some(e),
                    }
                }
            });
        }
        out
    })?;
    let mut total = Part::default();
    for p in parts {
        if let Some(e) = p.error {
            return Err(e);
        }
        total.classes += p.classes;
        total.qualifying += p.qualifying;
        total.witnessed += p.witnessed;
        total.checked += p.checked;
        total.counterexamples.extend(p.counterexamples);
        total.violations.extend(p.violations);
    }
    total.counterexamples.sort_unstable();
    total.violations.sort_unstable();
    let to_sets = |v: Vec<u64>| v.into_iter().map(|m| ElemSet::from_mask(order, m)).collect::<Vec<_>>();
    let counterexamples = to_sets(total.counterexamples);
    Ok(ConjectureReport {
        group_spec: g.spec().to_string(),
        order,
        n,
        sizes: (lo, hi),
        canonical_classes: total.classes,
        qualifying_classes: total.qualifying,
        witnessed_classes: total.witnessed,
        fatal: n <= 2 && !counterexamples.is_empty(),
        counterexamples,
        sharpness_checked: total.checked,
        sharpness_violations: to_sets(total.violations),
        note: SIZE_CLAUSE_NOTE,
        runtime: start.elapsed(),
    })
}
