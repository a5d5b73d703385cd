//! Exhaustive, translation-reduced verification of the small-quotient
//! classification over whole groups.
//!
//! `(gA)⁻¹(gA) = A⁻¹A`, so only one set per left-translation orbit is
//! examined: the canonical representative, which contains the identity and
//! has the smallest mask among its translates `a⁻¹A`.

mod conjecture;
mod kernel;

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use conjecture::{
    conjecture_scan, find_hypothesis_witness, find_structure_witness, ClauseChecks, ConjectureReport,
    ConjectureWitness, SIZE_CLAUSE_NOTE,
};

use crate::classify::{check_sufficiency, classify, verify_structure, Classification, Kind};
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable};
use crate::set::ElemSet;
use crate::subgroup::{all_subgroups, ensure_universe, SubgroupList};
use kernel::{run_parts, FastWitness, Kernel, KERNEL_MAX_ORDER};

/// Largest order scanned without an explicit opt-in.
pub const DEFAULT_CENSUS_CAP: usize = 24;
/// Largest order reachable with `allow_big`.
pub const BIG_CENSUS_CAP: usize = 32;
/// Environment variable overriding [`DEFAULT_CENSUS_CAP`].
pub const CENSUS_CAP_ENV: &str = "QUOTSET_CENSUS_CAP";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    /// Set sizes to scan; `None` scans `1..=|G|`.
    pub sizes: Option<RangeInclusive<usize>>,
    pub jobs: usize,
    /// Permit orders up to [`BIG_CENSUS_CAP`] beyond `cap`.
    pub allow_big: bool,
    pub cap: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self {
            sizes: None,
            jobs: 1,
            allow_big: false,
            cap: DEFAULT_CENSUS_CAP,
        }
    }
}

impl CensusConfig {
    /// Default config with the cap taken from [`CENSUS_CAP_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(v) = std::env::var(CENSUS_CAP_ENV) {
            cfg.cap = v
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("{CENSUS_CAP_ENV}={v:?} is not an integer")))?;
        }
        Ok(cfg)
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        let limit = if self.allow_big { self.cap.max(BIG_CENSUS_CAP) } else { self.cap };
        if order > limit.min(KERNEL_MAX_ORDER) {
            let hint = if order <= BIG_CENSUS_CAP && !self.allow_big {
                "pass --i-know-this-is-big to scan orders up to 32"
            } else {
                "exhaustive scans stop at order 32"
            };
            return Err(Error::CensusCap {
                order,
                cap: limit.min(KERNEL_MAX_ORDER),
                hint,
            });
        }
        Ok(())
    }

    pub(crate) fn size_range(&self, order: usize) -> (usize, usize) {
        match &self.sizes {
            Some(r) => ((*r.start()).max(1), (*r.end()).min(order)),
            None => (1, order),
        }
    }
}

/// `a⁻¹A` with the smallest mask over `a ∈ A`.
pub fn canonical_form(g: &GroupTable, a: &ElemSet) -> Result<ElemSet> {
    ensure_universe(g, a)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(a.iter()
        .map(|x| crate::algebra::left_translate(g, g.inv(x), a))
        .min()
        .expect("nonempty"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Small quotient set, no structural witness.
    Necessity,
    /// Witness found but the quotient set has the wrong shape.
    Moreover,
    /// Witness hypotheses hold but the quotient set is not small.
    Sufficiency,
    /// `|A⁻¹A| < |A|` or `1 ∉ A⁻¹A`.
    TrivialBound,
    /// Word kernel and set-level classifier disagree.
    KernelMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub set: ElemSet,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeRow {
    pub size: usize,
    pub min_quotient: usize,
    /// Smallest canonical set attaining the minimum.
    pub extremal_set: ElemSet,
    /// Number of canonical classes attaining the minimum.
    pub extremal_classes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub group_spec: String,
    pub order: usize,
    pub sizes: (usize, usize),
    pub subsets_scanned: u64,
    pub canonical_classes: u64,
    /// Classes with `3|A⁻¹A| < 5|A|`.
    pub small_classes: u64,
    pub cond_i_classes: u64,
    pub cond_ii_classes: u64,
    pub violations: Vec<Violation>,
    pub min_quotient_by_size: Vec<SizeRow>,
    /// Wall-clock time; not serialized so reports stay reproducible.
    #[serde(skip)]
    pub runtime: Duration,
}

impl CensusReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    scanned: u64,
    classes: u64,
    small: u64,
    cond_i: u64,
    cond_ii: u64,
    violations: Vec<(u64, ViolationKind, String)>,
    /// Per size: (min |Q|, smallest mask, count).
    best: Vec<Option<(usize, u64, u64)>>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.scanned += other.scanned;
        self.classes += other.classes;
        self.small += other.small;
        self.cond_i += other.cond_i;
        self.cond_ii += other.cond_ii;
        self.violations.extend(other.violations);
        if self.best.len() < other.best.len() {
            self.best.resize(other.best.len(), None);
        }
        for (mine, theirs) in self.best.iter_mut().zip(other.best) {
            *mine = match (*mine, theirs) {
                (None, x) | (x, None) => x,
                (Some((q1, m1, c1)), Some((q2, m2, c2))) => Some(if q1 != q2 {
                    if q1 < q2 { (q1, m1, c1) } else { (q2, m2, c2) }
                } else {
                    (q1, m1.min(m2), c1 + c2)
                }),
            };
        }
    }

    fn observe(&mut self, k: usize, q: usize, mask: u64) {
        let slot = &mut self.best[k];
        *slot = match *slot {
            Some((bq, bm, c)) if bq == q => Some((bq, bm.min(mask), c + 1)),
            Some((bq, _, _)) if bq < q => *slot,
            _ => Some((q, mask, 1)),
        };
    }
}

struct Ctx<'a> {
    g: &'a GroupTable,
    subgroups: &'a SubgroupList,
    kernel: Kernel,
}

impl Ctx<'_> {
    fn examine(&self, tally: &mut Tally, mask: u64, k: usize, stab: usize) {
        let n = self.g.order();
        tally.classes += 1;
        tally.scanned += (n / stab) as u64;
        let q = self.kernel.quotient(mask);
        let ql = q.count_ones() as usize;
        tally.observe(k, ql, mask);
        if ql < k || q & 1 == 0 {
            tally
                .violations
                .push((mask, ViolationKind::TrivialBound, format!("|A⁻¹A| = {ql} < |A| = {k}")));
        }
        let fast = self.kernel.witness(mask);
        if 3 * ql >= 5 * k {
            if let Some(w) = fast {
                tally.violations.push((
                    mask,
                    ViolationKind::Sufficiency,
                    format!("{w:?} holds but 3|Q| = {} >= 5|A| = {}", 3 * ql, 5 * k),
                ));
            }
            return;
        }
        tally.small += 1;
        let set = ElemSet::from_mask(n, mask);
        let c = classify(self.g, &set, self.subgroups).expect("nonempty set in this group");
        match c.kind {
            Kind::TheoremViolation => {
                tally
                    .violations
                    .push((mask, ViolationKind::Necessity, format!("|A⁻¹A| = {ql}, no witness")));
                return;
            }
            Kind::CondI => tally.cond_i += 1,
            Kind::CondII => tally.cond_ii += 1,
            Kind::NotSmall => unreachable!("kernel and classifier disagree on |A⁻¹A|"),
        }
        if !self.agrees(&c, fast) {
            tally.violations.push((
                mask,
                ViolationKind::KernelMismatch,
                format!("kernel {fast:?}, classifier {:?}", c.kind),
            ));
        }
        match verify_structure(self.g, &set, &c) {
            Ok(r) if r.passed() => {}
            Ok(r) => tally.violations.push((mask, ViolationKind::Moreover, first_failure(&r))),
            Err(e) => tally.violations.push((mask, ViolationKind::Moreover, e.to_string())),
        }
        if c.kind == Kind::CondII {
            let h = c.subgroup.as_ref().unwrap();
            match check_sufficiency(self.g, h, c.a.unwrap(), c.b.unwrap(), &set) {
                Ok(r) if r.passed() => {}
                Ok(r) => tally.violations.push((mask, ViolationKind::Sufficiency, first_failure(&r))),
                Err(e) => tally.violations.push((mask, ViolationKind::Sufficiency, e.to_string())),
            }
        }
    }

    fn agrees(&self, c: &Classification, fast: Option<FastWitness>) -> bool {
        let pos = |i: usize| Some(self.subgroups.get(i));
        match (c.kind, fast) {
            (Kind::CondI, Some(FastWitness::CondI(i))) => c.subgroup.as_ref() == pos(i),
            (Kind::CondII, Some(FastWitness::CondII(i, b))) => {
                c.subgroup.as_ref() == pos(i) && c.a == Some(ElementId::IDENTITY) && c.b == Some(ElementId::new(b))
            }
            _ => false,
        }
    }
}

fn first_failure(r: &crate::check::CheckReport) -> String {
    r.failures()
        .next()
        .map(|c| format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()))
        .unwrap_or_default()
}

/// Runs the census on every canonical subset with size in the configured
/// range.
///
/// Small sets go through [`classify`], [`verify_structure`] and, for the
/// two-coset case, [`check_sufficiency`]; every other set must not meet
/// either structural hypothesis. The report does not depend on `jobs`.
pub fn theorem_census(g: &GroupTable, config: &CensusConfig) -> Result<CensusReport> {
    config.check_order(g.order())?;
    let start = Instant::now();
    let subgroups = all_subgroups(g)?;
    let ctx = Ctx {
        g,
        subgroups: &subgroups,
        kernel: Kernel::new(g, &subgroups),
    };
    let n = g.order();
    let (lo, hi) = config.size_range(n);
    let parts = run_parts(n, config.jobs, |part| {
        let mut tally = Tally {
            best: vec![None; n + 1],
            ..Tally::default()
        };
        for k in lo..=hi {
            part.for_each(n, k, |mask| {
                if let Some(stab) = ctx.kernel.canonical_stabilizer(mask) {
                    ctx.examine(&mut tally, mask, k, stab);
                }
            });
        }
        tally
    })?;
    let mut total = Tally {
        best: vec![None; n + 1],
        ..Tally::default()
    };
    for t in parts {
        total.merge(t);
    }
    total.violations.sort();
    Ok(CensusReport {
        group_spec: g.spec().to_string(),
        order: n,
        sizes: (lo, hi),
        subsets_scanned: total.scanned,
        canonical_classes: total.classes,
        small_classes: total.small,
        cond_i_classes: total.cond_i,
        cond_ii_classes: total.cond_ii,
        violations: total
            .violations
            .into_iter()
            .map(|(m, kind, detail)| Violation {
                set: ElemSet::from_mask(n, m),
                kind,
                detail,
            })
            .collect(),
        min_quotient_by_size: total
            .best
            .iter()
            .enumerate()
            .filter_map(|(size, b)| {
                b.map(|(q, m, c)| SizeRow {
                    size,
                    min_quotient: q,
                    extremal_set: ElemSet::from_mask(n, m),
                    extremal_classes: c,
                })
            })
            .collect(),
        runtime: start.elapsed(),
    })
}
