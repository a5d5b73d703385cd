//! Structure of sets with small quotient set.
//!
//! A finite nonempty `A` has `3|A⁻¹A| < 5|A|` exactly when either
//!
//! * (i) `A` lies in one left coset `aH` of a subgroup with `5|A| > 3|H|`, or
//! * (ii) `A ⊆ aH ∪ bH` with `a⁻¹b ∈ N(H)`, `(a⁻¹b)² ∉ H` and `5|A| > 9|H|`.
//!
//! In case (i) `A⁻¹A = H`; in case (ii) `A⁻¹A` is `H` plus two disjoint
//! double cosets of size `|H|`. This module decides which case applies,
//! verifies the quotient-set structure, and exposes the supporting checks.

use serde::Serialize;

use crate::algebra::{product_set, qplus_from, quotient_counts, quotient_set, left_translate};
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable};
use crate::set::ElemSet;
use crate::subgroup::{
    double_coset, ensure_universe, generated_subgroup, is_subgroup, left_coset, normalizer, Subgroup, SubgroupList,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Kind {
    /// `3|A⁻¹A| >= 5|A|`.
    NotSmall,
    CondI,
    CondII,
    /// Small quotient set but no structural witness exists. Never expected;
    /// reported as a value so exhaustive scans can record it.
    TheoremViolation,
}

/// The exact comparison `3|Q|` versus `5|A|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RatioCheck {
    pub quotient_size: usize,
    pub set_size: usize,
    pub three_q: usize,
    pub five_a: usize,
}

impl RatioCheck {
    pub fn new(quotient_size: usize, set_size: usize) -> Self {
        Self {
            quotient_size,
            set_size,
            three_q: 3 * quotient_size,
            five_a: 5 * set_size,
        }
    }

    /// `|Q| < 5/3 |A|`.
    pub fn is_small(&self) -> bool {
        self.three_q < self.five_a
    }

    /// `|Q| = 5/3 |A|` exactly.
    pub fn is_threshold(&self) -> bool {
        self.three_q == self.five_a
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: Kind,
    /// Witness subgroup, absent for `NotSmall` and `TheoremViolation`.
    pub subgroup: Option<Subgroup>,
    /// Coset representatives (`CondII` only), `a` in the coset of the
    /// smallest element of `A`.
    pub a: Option<ElementId>,
    pub b: Option<ElementId>,
    pub quotient: ElemSet,
    pub ratio: RatioCheck,
}

/// A structural witness found by [`find_condition`], independent of the
/// size of the quotient set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// `A ⊆ aH` and `5|A| > 3|H|`, `H` = subgroup at this list index.
    CondI { subgroup: usize },
    /// `A ⊆ aH ∪ bH`, `5|A| > 9|H|`, `a⁻¹b ∈ N(H)`, `(a⁻¹b)² ∉ H`.
    CondII {
        subgroup: usize,
        a: ElementId,
        b: ElementId,
    },
}

/// Searches for a condition (i) witness with the smallest `H`, then a
/// condition (ii) witness with the smallest `H`. Does not look at `A⁻¹A`.
///
/// Representatives are the smallest elements of `A` in each coset; the
/// normalizer and square conditions do not depend on that choice.
pub fn find_condition(g: &GroupTable, a: &ElemSet, subgroups: &SubgroupList) -> Option<Witness> {
    let a0 = a.first()?;
    let shifted = left_translate(g, g.inv(a0), a);
    let k = a.len();
    for (i, h) in subgroups.iter().enumerate() {
        if 3 * h.order() >= 5 * k {
            break;
        }
        if shifted.is_subset(h.elements()) {
            return Some(Witness::CondI { subgroup: i });
        }
    }
    for (i, h) in subgroups.iter().enumerate() {
        if 9 * h.order() >= 5 * k {
            break;
        }
        let outside = shifted.difference(h.elements());
        let Some(rel) = outside.first() else { continue };
        let second = left_coset(g, h, rel);
        if !shifted.is_subset(&h.elements().union(&second)) {
            continue;
        }
        // rel = a⁻¹b with a = a0, b = a0·rel, the smallest element of A in bH
        // after translating back.
        if !subgroups.normalizer(i).contains(rel) || h.contains(g.mul(rel, rel)) {
            continue;
        }
        let b_coset = left_translate(g, a0, &second);
        let b = a.intersection(&b_coset).first().expect("A meets the second coset");
        return Some(Witness::CondII { subgroup: i, a: a0, b });
    }
    None
}

/// Classifies a nonempty set.
pub fn classify(g: &GroupTable, a: &ElemSet, subgroups: &SubgroupList) -> Result<Classification> {
    ensure_universe(g, a)?;
    if subgroups.group_order() != g.order() {
        return Err(Error::IncompleteSubgroupList("list belongs to another group".into()));
    }
    let quotient = quotient_set(g, a)?;
    let ratio = RatioCheck::new(quotient.len(), a.len());
    let mut out = Classification {
        kind: Kind::NotSmall,
        subgroup: None,
        a: None,
        b: None,
        quotient,
        ratio,
    };
    if !ratio.is_small() {
        return Ok(out);
    }
    match find_condition(g, a, subgroups) {
        Some(Witness::CondI { subgroup }) => {
            out.kind = Kind::CondI;
            out.subgroup = Some(subgroups.get(subgroup).clone());
        }
        Some(Witness::CondII { subgroup, a, b }) => {
            out.kind = Kind::CondII;
            out.subgroup = Some(subgroups.get(subgroup).clone());
            out.a = Some(a);
            out.b = Some(b);
        }
        None => out.kind = Kind::TheoremViolation,
    }
    Ok(out)
}

fn mismatch<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::WitnessMismatch(msg.into()))
}

/// Verifies the quotient-set structure promised by a classification.
///
/// The witness itself is validated first; a witness that does not fit `A`
/// is an error, while a wrong quotient structure is a failed check.
pub fn verify_structure(g: &GroupTable, a: &ElemSet, c: &Classification) -> Result<CheckReport> {
    ensure_universe(g, a)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let h = match (&c.kind, &c.subgroup) {
        (Kind::CondI | Kind::CondII, Some(h)) => h,
        (Kind::CondI | Kind::CondII, None) => return mismatch("classification carries no subgroup"),
        (kind, _) => return Err(Error::Precondition(format!("nothing to verify for {kind:?}"))),
    };
    ensure_universe(g, h.elements())?;
    let q = quotient_set(g, a)?;
    if q != c.quotient {
        return mismatch(format!("recorded quotient {} but A⁻¹A = {q}", c.quotient));
    }
    let k = a.len();
    let hn = h.order();
    let mut report = CheckReport::new();
    match c.kind {
        Kind::CondI => {
            let a0 = a.first().unwrap();
            if !left_coset(g, h, a0).is_superset_of(a) {
                return mismatch(format!("A is not inside the coset {a0}H"));
            }
            if 5 * k <= 3 * hn {
                return mismatch(format!("5|A| = {} <= 3|H| = {}", 5 * k, 3 * hn));
            }
            report.record("quotient_equals_subgroup", q == *h.elements(), || {
                format!("A⁻¹A = {q} but H = {}", h.elements())
            });
        }
        Kind::CondII => {
            let (Some(x), Some(y)) = (c.a, c.b) else {
                return mismatch("condition (ii) needs both representatives");
            };
            let xh = left_coset(g, h, x);
            let yh = left_coset(g, h, y);
            if xh == yh {
                return mismatch("aH = bH");
            }
            if !xh.union(&yh).is_superset_of(a) {
                return mismatch("A is not inside aH ∪ bH");
            }
            if 5 * k <= 9 * hn {
                return mismatch(format!("5|A| = {} <= 9|H| = {}", 5 * k, 9 * hn));
            }
            let rel = g.mul(g.inv(x), y);
            if !normalizer(g, h)?.contains(rel) {
                return mismatch("a⁻¹b ∉ N(H)");
            }
            if h.contains(g.mul(rel, rel)) {
                return mismatch("(a⁻¹b)² ∈ H");
            }
            let d1 = double_coset(g, h, rel);
            let d2 = double_coset(g, h, g.inv(rel));
            report.record("double_coset_sizes", d1.len() == hn && d2.len() == hn, || {
                format!("|Ha⁻¹bH| = {}, |Hb⁻¹aH| = {}, |H| = {hn}", d1.len(), d2.len())
            });
            let disjoint = h.elements().is_disjoint(&d1) && h.elements().is_disjoint(&d2) && d1.is_disjoint(&d2);
            report.record("pairwise_disjoint", disjoint, || {
                format!("H = {}, D1 = {d1}, D2 = {d2} overlap", h.elements())
            });
            let union = h.elements().union(&d1).union(&d2);
            report.record("quotient_decomposition", q == union, || {
                format!("A⁻¹A = {q} but H ∪ D1 ∪ D2 = {union}")
            });
        }
        _ => unreachable!(),
    }
    report.record("small_quotient", 3 * q.len() < 5 * k, || {
        format!("3|Q| = {} >= 5|A| = {}", 3 * q.len(), 5 * k)
    });
    Ok(report)
}

trait Superset {
    fn is_superset_of(&self, other: &ElemSet) -> bool;
}

impl Superset for ElemSet {
    fn is_superset_of(&self, other: &ElemSet) -> bool {
        other.is_subset(self)
    }
}

/// Checks the two sufficiency arguments for a set inside two cosets:
///
/// * `four_part_decomposition`: with `X = a⁻¹A ∩ H`, `Y = b⁻¹A ∩ H` and
///   `g = a⁻¹b`, `A⁻¹A = X⁻¹X ∪ Y⁻¹Y ∪ X⁻¹gY ∪ Y⁻¹g⁻¹X` (always).
/// * Dense path, when `g ∈ N(H)`, `g² ∉ H` and `5|A| > 9|H|`:
///   `3|A⁻¹A| < 5|A|`, `X⁻¹X ∪ Y⁻¹Y = H`, `X⁻¹gY = gH`, `Y⁻¹g⁻¹X = g⁻¹H`,
///   the three parts pairwise disjoint.
/// * Tight path, when `5|A| > 9|H|` and `|A⁻¹A| <= 3|H|`: `g ∈ N(H)`, and
///   `A` meets condition (i) with `F = H ∪ gH` when `g² ∈ H`, condition
///   (ii) otherwise.
pub fn check_sufficiency(
    g: &GroupTable,
    h: &Subgroup,
    a: ElementId,
    b: ElementId,
    set: &ElemSet,
) -> Result<CheckReport> {
    ensure_universe(g, set)?;
    ensure_universe(g, h.elements())?;
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let ah = left_coset(g, h, a);
    let bh = left_coset(g, h, b);
    if ah == bh {
        return Err(Error::Precondition("aH = bH".into()));
    }
    if !set.is_subset(&ah.union(&bh)) {
        return Err(Error::Precondition("A is not contained in aH ∪ bH".into()));
    }
    let k = set.len();
    let hn = h.order();
    let rel = g.mul(g.inv(a), b);
    let rel_inv = g.inv(rel);
    let in_normalizer = normalizer(g, h)?.contains(rel);
    let square_in_h = h.contains(g.mul(rel, rel));
    let q = quotient_set(g, set)?;

    let x = left_translate(g, g.inv(a), set).intersection(h.elements());
    let y = left_translate(g, g.inv(b), set).intersection(h.elements());
    let x_inv = crate::algebra::inverse_set(g, &x);
    let y_inv = crate::algebra::inverse_set(g, &y);
    let diag = product_set(g, &x_inv, &x).union(&product_set(g, &y_inv, &y));
    let cross = product_set(g, &x_inv, &left_translate(g, rel, &y));
    let cross_inv = product_set(g, &y_inv, &left_translate(g, rel_inv, &x));

    let mut report = CheckReport::new();
    let parts = diag.union(&cross).union(&cross_inv);
    report.record("four_part_decomposition", parts == q, || {
        format!("A⁻¹A = {q} but the three-part union is {parts}")
    });

    if in_normalizer && !square_in_h && 5 * k > 9 * hn {
        report.record("dense_small_quotient", 3 * q.len() < 5 * k, || {
            format!("3|Q| = {} >= 5|A| = {}", 3 * q.len(), 5 * k)
        });
        report.record("dense_diagonal_is_h", diag == *h.elements(), || {
            format!("X⁻¹X ∪ Y⁻¹Y = {diag}, H = {}", h.elements())
        });
        let rel_h = left_coset(g, h, rel);
        let rel_inv_h = left_coset(g, h, rel_inv);
        report.record("dense_cross_terms", cross == rel_h && cross_inv == rel_inv_h, || {
            format!("X⁻¹gY = {cross} vs gH = {rel_h}; Y⁻¹g⁻¹X = {cross_inv} vs g⁻¹H = {rel_inv_h}")
        });
        let disjoint = diag.is_disjoint(&cross) && diag.is_disjoint(&cross_inv) && cross.is_disjoint(&cross_inv);
        report.record("dense_disjoint", disjoint, || "the three parts overlap".into());
    } else {
        report.skip(
            "dense_path",
            format!(
                "hypotheses: a⁻¹b ∈ N(H) {in_normalizer}, (a⁻¹b)² ∉ H {}, 5|A| > 9|H| {}",
                !square_in_h,
                5 * k > 9 * hn
            ),
        );
    }

    if 5 * k > 9 * hn && q.len() <= 3 * hn {
        report.record("tight_normalizes", in_normalizer, || format!("a⁻¹b = {rel} ∉ N(H)"));
        if in_normalizer && square_in_h {
            let f = h.elements().union(&left_coset(g, h, rel));
            let f_ok = is_subgroup(g, &f);
            let a_f = left_translate(g, a, &f);
            let cond_i = f_ok && set.is_subset(&a_f) && 5 * k > 3 * f.len();
            report.record("tight_condition_i", cond_i, || {
                format!("F = {f}: subgroup {f_ok}, A ⊆ aF {}, 5|A| > 3|F| {}", set.is_subset(&a_f), 5 * k > 3 * f.len())
            });
        } else if in_normalizer {
            // (a⁻¹b)² ∉ H with a⁻¹b ∈ N(H): condition (ii) by definition.
            report.pass("tight_condition_ii");
        }
    } else {
        report.skip(
            "tight_path",
            format!("hypotheses: 5|A| > 9|H| {}, |Q| <= 3|H| {}", 5 * k > 9 * hn, q.len() <= 3 * hn),
        );
    }
    Ok(report)
}

/// `g⁻¹H ∪ H ∪ Hg`, a set sitting exactly on the 5/3 threshold without
/// either structure.
pub fn construct_threshold_example(g: &GroupTable, h: &Subgroup, x: ElementId) -> Result<ElemSet> {
    ensure_universe(g, h.elements())?;
    if x.index() >= g.order() {
        return Err(Error::ElementOutOfRange {
            id: x.index(),
            order: g.order(),
        });
    }
    if !normalizer(g, h)?.contains(x) {
        return Err(Error::Precondition(format!("g = {x} is not in N(H)")));
    }
    for i in 1..=4 {
        let p = g.pow(x, i);
        if h.contains(p) {
            return Err(Error::Precondition(format!("g^{i} = {p} lies in H")));
        }
    }
    let left = left_coset(g, h, g.inv(x));
    let right = crate::subgroup::right_coset(g, h, x);
    Ok(left.union(h.elements()).union(&right))
}

/// Quantities from the `Q⁺` / `F = ⟨Q⁺⟩` analysis of a set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QplusDiagnostics {
    pub quotient: ElemSet,
    pub qplus: ElemSet,
    pub f: Subgroup,
    pub af: ElemSet,
    /// `Q⁺Q = Q`, `QQ⁺ = Q`, `FQ = Q`, `QF = Q`, `(AF)⁻¹(AF) = Q`.
    pub stability: CheckReport,
    /// Two-sided bound on `r`, asserted only when `AF = A` and `3|Q| < 5|A|`.
    pub r_gap: CheckReport,
    /// `(2|A| − |Q|, |Q| − |A|)`.
    pub r_gap_bounds: (i64, i64),
    /// Observed `(min, max)` of `r(g)` over `g ∈ Q` with `r(g) < |A|`.
    pub r_partial_range: Option<(usize, usize)>,
}

pub fn qplus_diagnostics(g: &GroupTable, a: &ElemSet) -> Result<QplusDiagnostics> {
    let q = quotient_set(g, a)?;
    let r = quotient_counts(g, a)?;
    let k = a.len();
    let qp = qplus_from(&q, &r, k);
    let f = generated_subgroup(g, &qp);
    let af = product_set(g, a, f.elements());

    let mut stability = CheckReport::new();
    if qp.is_empty() {
        stability.skip("qplus_q", "Q⁺ is empty");
        stability.skip("q_qplus", "Q⁺ is empty");
    } else {
        let lhs = product_set(g, &qp, &q);
        stability.record("qplus_q", lhs == q, || format!("Q⁺Q = {lhs}, Q = {q}"));
        let rhs = product_set(g, &q, &qp);
        stability.record("q_qplus", rhs == q, || format!("QQ⁺ = {rhs}, Q = {q}"));
    }
    let fq = product_set(g, f.elements(), &q);
    stability.record("f_q", fq == q, || format!("FQ = {fq}, Q = {q}"));
    let qf = product_set(g, &q, f.elements());
    stability.record("q_f", qf == q, || format!("QF = {qf}, Q = {q}"));
    let afq = quotient_set(g, &af)?;
    stability.record("af_quotient", afq == q, || format!("(AF)⁻¹(AF) = {afq}, Q = {q}"));

    let lower = 2 * k as i64 - q.len() as i64;
    let upper = q.len() as i64 - k as i64;
    let partial: Vec<usize> = q.indices().map(|x| r.counts[x]).filter(|&c| c < k).collect();
    let r_partial_range = partial
        .iter()
        .min()
        .zip(partial.iter().max())
        .map(|(&lo, &hi)| (lo, hi));

    let mut r_gap = CheckReport::new();
    if af == *a && 3 * q.len() < 5 * k {
        let bad = q
            .indices()
            .find(|&x| r.counts[x] < k && ((r.counts[x] as i64) < lower || r.counts[x] as i64 > upper));
        r_gap.record("r_gap_bound", bad.is_none(), || {
            let x = bad.unwrap();
            format!("r({x}) = {} outside [{lower}, {upper}]", r.counts[x])
        });
        let bad = (0..g.order()).find(|&x| (r.counts[x] == k) != f.elements().contains_index(x));
        r_gap.record("full_count_iff_in_f", bad.is_none(), || {
            let x = bad.unwrap();
            format!("r({x}) = {} but {x} ∈ F is {}", r.counts[x], f.elements().contains_index(x))
        });
        r_gap.record("f_equals_qplus", *f.elements() == qp, || {
            format!("F = {}, Q⁺ = {qp}", f.elements())
        });
    } else {
        r_gap.skip("r_gap_bound", "outside scope: needs AF = A and 3|Q| < 5|A|");
    }

    Ok(QplusDiagnostics {
        quotient: q,
        qplus: qp,
        f,
        af,
        stability,
        r_gap,
        r_gap_bounds: (lower, upper),
        r_partial_range,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Status;
    use crate::group::build_group;
    use crate::subgroup::all_subgroups;

    fn set(n: usize, ids: &[usize]) -> ElemSet {
        ElemSet::from_indices(n, ids.iter().copied()).unwrap()
    }

    fn sub(g: &GroupTable, ids: &[usize]) -> Subgroup {
        Subgroup::from_set(g, set(g.order(), ids)).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c5 = build_group("cyclic 5").unwrap();
        let c = classify(&c5, &set(5, &[0, 1, 2, 3]), &all_subgroups(&c5).unwrap()).unwrap();
        assert_eq!(c.kind, Kind::CondI);
        assert_eq!(c.subgroup.unwrap().order(), 5);
        assert_eq!(c.ratio.quotient_size, 5);

        let c12 = build_group("cyclic 12").unwrap();
        let subs = all_subgroups(&c12).unwrap();
        let a = set(12, &[0, 4, 8, 1, 5, 9]);
        let c = classify(&c12, &a, &subs).unwrap();
        assert_eq!(c.kind, Kind::CondII);
        assert_eq!(c.subgroup.as_ref().unwrap().elements(), &set(12, &[0, 4, 8]));
        assert_eq!((c.a, c.b), (Some(ElementId::new(0)), Some(ElementId::new(1))));
        assert_eq!(c.ratio.quotient_size, 9);
        let r = verify_structure(&c12, &a, &c).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(c.quotient, set(12, &[0, 4, 8, 1, 5, 9, 3, 7, 11]));

        let c7 = build_group("cyclic 7").unwrap();
        let c = classify(&c7, &set(7, &[0, 1, 6]), &all_subgroups(&c7).unwrap()).unwrap();
        assert_eq!(c.kind, Kind::NotSmall);
        assert!(c.ratio.is_threshold());
    }

    #[test]
    fn verify_structure_rejects_mismatch() {
        let c10 = build_group("cyclic 10").unwrap();
        let a = set(10, &[0, 1, 5]);
        let c = Classification {
            kind: Kind::CondII,
            subgroup: Some(sub(&c10, &[0, 5])),
            a: Some(ElementId::new(0)),
            b: Some(ElementId::new(1)),
            quotient: quotient_set(&c10, &a).unwrap(),
            ratio: RatioCheck::new(quotient_set(&c10, &a).unwrap().len(), 3),
        };
        assert!(matches!(verify_structure(&c10, &a, &c), Err(Error::WitnessMismatch(_))));

        let not_small = classify(&c10, &a, &all_subgroups(&c10).unwrap()).unwrap();
        assert_eq!(not_small.kind, Kind::NotSmall);
        assert!(matches!(verify_structure(&c10, &a, &not_small), Err(Error::Precondition(_))));
    }

    #[test]
    fn cond_i_structure() {
        let c5 = build_group("cyclic 5").unwrap();
        let a = set(5, &[0, 1, 2, 3]);
        let c = classify(&c5, &a, &all_subgroups(&c5).unwrap()).unwrap();
        let r = verify_structure(&c5, &a, &c).unwrap();
        assert_eq!(r.status("quotient_equals_subgroup"), Some(Status::Pass));
    }

    #[test]
    fn sufficiency_examples() {
        let c12 = build_group("cyclic 12").unwrap();
        let h = sub(&c12, &[0, 4, 8]);
        let a = set(12, &[0, 4, 8, 1, 5, 9]);
        let r = check_sufficiency(&c12, &h, ElementId::new(0), ElementId::new(1), &a).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.status("dense_cross_terms"), Some(Status::Pass));
        assert_eq!(r.status("tight_condition_ii"), Some(Status::Pass));

        let c10 = build_group("cyclic 10").unwrap();
        let h = sub(&c10, &[0, 5]);
        let a = set(10, &[0, 5, 1, 6]);
        let r = check_sufficiency(&c10, &h, ElementId::new(0), ElementId::new(1), &a).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(quotient_set(&c10, &a).unwrap(), set(10, &[0, 5, 1, 6, 4, 9]));

        let h = sub(&c12, &[0, 4, 8]);
        let a = set(12, &[0, 4, 8, 6, 10, 2]);
        let r = check_sufficiency(&c12, &h, ElementId::new(0), ElementId::new(6), &a).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.status("dense_path"), Some(Status::Skipped));
        assert_eq!(r.status("tight_condition_i"), Some(Status::Pass));
    }

    #[test]
    fn sufficiency_preconditions() {
        let c12 = build_group("cyclic 12").unwrap();
        let h = sub(&c12, &[0, 4, 8]);
        let e = |i| ElementId::new(i);
        assert!(matches!(
            check_sufficiency(&c12, &h, e(0), e(4), &set(12, &[0])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_sufficiency(&c12, &h, e(0), e(1), &set(12, &[0, 2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn threshold_examples() {
        let c7 = build_group("cyclic 7").unwrap();
        let a = construct_threshold_example(&c7, &Subgroup::trivial(&c7), ElementId::new(1)).unwrap();
        assert_eq!(a, set(7, &[6, 0, 1]));
        assert_eq!(quotient_set(&c7, &a).unwrap().len(), 5);

        let c10 = build_group("cyclic 10").unwrap();
        let a = construct_threshold_example(&c10, &sub(&c10, &[0, 5]), ElementId::new(1)).unwrap();
        assert_eq!(a, set(10, &[0, 1, 4, 5, 6, 9]));
        assert_eq!(quotient_set(&c10, &a).unwrap().len(), 10);

        let c8 = build_group("cyclic 8").unwrap();
        match construct_threshold_example(&c8, &Subgroup::trivial(&c8), ElementId::new(2)) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("g^4"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }

        let s3 = build_group("symmetric 3").unwrap();
        let subs = all_subgroups(&s3).unwrap();
        let h2 = subs.get(1);
        let outside = (0..6).map(ElementId::new).find(|&x| !subs.normalizer(1).contains(x)).unwrap();
        assert!(matches!(
            construct_threshold_example(&s3, h2, outside),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn qplus_examples() {
        let c7 = build_group("cyclic 7").unwrap();
        let d = qplus_diagnostics(&c7, &set(7, &[0, 1, 6])).unwrap();
        assert_eq!(d.qplus, set(7, &[0]));
        assert_eq!(d.f.order(), 1);
        assert!(d.stability.passed());
        assert!(d.r_gap.passed());
        // 3|Q| = 5|A| sits on the threshold, so the bound is only recorded.
        assert_eq!(d.r_gap.status("r_gap_bound"), Some(Status::Skipped));
        assert_eq!(d.r_gap_bounds, (1, 2));
        assert_eq!(d.r_partial_range, Some((1, 2)));

        let c12 = build_group("cyclic 12").unwrap();
        let h = set(12, &[0, 4, 8]);
        let d = qplus_diagnostics(&c12, &h).unwrap();
        assert_eq!(d.qplus, h);
        assert_eq!(d.f.elements(), &h);
        assert_eq!(d.af, h);
        assert!(d.stability.passed() && d.r_gap.passed());

        let a = set(12, &[0, 4, 8, 1, 5, 9]);
        let d = qplus_diagnostics(&c12, &a).unwrap();
        assert_eq!(d.f.elements(), &h);
        assert_eq!(d.af, a);
        assert_eq!(d.r_gap_bounds, (3, 3));
        assert_eq!(d.r_partial_range, Some((3, 3)));
        assert_eq!(d.r_gap.status("r_gap_bound"), Some(Status::Pass));
        assert!(d.r_gap.passed(), "{}", d.r_gap);
    }
}
