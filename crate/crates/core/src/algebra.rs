//! Product sets, quotient sets and representation counts over a [`GroupTable`].
//!
//! Every threshold comparison in this crate is done on integers by
//! cross-multiplication; no ratio is ever formed in floating point.

use serde::Serialize;

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable};
use crate::set::ElemSet;
use crate::subgroup::{ensure_universe, Subgroup};

fn nonempty(g: &GroupTable, a: &ElemSet) -> Result<()> {
    ensure_universe(g, a)?;
    if a.is_empty() {
        Err(Error::EmptySet)
    } else {
        Ok(())
    }
}

/// `AB = {ab : a ∈ A, b ∈ B}`.
pub fn product_set(g: &GroupTable, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = ElemSet::new(g.order());
    for x in a.indices() {
        let row = g.row(x);
        for y in b.indices() {
            out.insert_index(row[y] as usize);
        }
    }
    out
}

/// `A⁻¹`.
pub fn inverse_set(g: &GroupTable, a: &ElemSet) -> ElemSet {
    let mut out = ElemSet::new(g.order());
    for x in a.indices() {
        out.insert_index(g.inv_index(x));
    }
    out
}

/// `xA`.
pub fn left_translate(g: &GroupTable, x: ElementId, a: &ElemSet) -> ElemSet {
    let row = g.row(x.index());
    let mut out = ElemSet::new(g.order());
    for y in a.indices() {
        out.insert_index(row[y] as usize);
    }
    out
}

/// `Ax`.
pub fn right_translate(g: &GroupTable, a: &ElemSet, x: ElementId) -> ElemSet {
    let mut out = ElemSet::new(g.order());
    for y in a.indices() {
        out.insert_index(g.mul_index(y, x.index()));
    }
    out
}

/// The quotient set `A⁻¹A = {a⁻¹b : a, b ∈ A}`.
pub fn quotient_set(g: &GroupTable, a: &ElemSet) -> Result<ElemSet> {
    nonempty(g, a)?;
    let mut out = ElemSet::new(g.order());
    for x in a.indices() {
        let row = g.row(g.inv_index(x));
        for y in a.indices() {
            out.insert_index(row[y] as usize);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepForm {
    /// Counts pairs with `a⁻¹b = g`.
    Quotient,
    /// Counts pairs with `ab = g`.
    Product,
}

/// Representation counts `r(g)`, indexed by element id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepCounts {
    pub counts: Vec<usize>,
}

impl RepCounts {
    pub fn get(&self, x: ElementId) -> usize {
        self.counts[x.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn support(&self, universe: usize) -> ElemSet {
        ElemSet::from_indices(universe, (0..self.counts.len()).filter(|&i| self.counts[i] > 0))
            .expect("counts indexed by element id")
    }
}

/// Representation counts of every element over `A × B`.
///
/// In quotient form `r(g) = |Ag ∩ B|`, computed by translating `A` once per
/// element and intersecting.
pub fn representation_counts(g: &GroupTable, a: &ElemSet, b: &ElemSet, form: RepForm) -> Result<RepCounts> {
    nonempty(g, a)?;
    nonempty(g, b)?;
    let n = g.order();
    let counts = match form {
        RepForm::Quotient => (0..n)
            .map(|x| right_translate(g, a, ElementId::new(x)).intersection_len(b))
            .collect(),
        RepForm::Product => {
            let mut counts = vec![0; n];
            for x in a.indices() {
                let row = g.row(x);
                for y in b.indices() {
                    counts[row[y] as usize] += 1;
                }
            }
            counts
        }
    };
    Ok(RepCounts { counts })
}

/// `r(g)` for the pair `(A, A)` in quotient form.
pub fn quotient_counts(g: &GroupTable, a: &ElemSet) -> Result<RepCounts> {
    representation_counts(g, a, a, RepForm::Quotient)
}

/// `{x : Ax = A}`: the largest subgroup `H` with `A` a union of left `H`-cosets.
pub fn left_stabilizer(g: &GroupTable, a: &ElemSet) -> Result<Subgroup> {
    nonempty(g, a)?;
    let mut stab = ElemSet::new(g.order());
    for x in g.elements() {
        if right_translate(g, a, x) == *a {
            stab.insert(x);
        }
    }
    Ok(Subgroup::from_set_unchecked(stab))
}

/// `Q⁺ = {x ∈ Q : r(x) > |Q| − |A|}` for `Q = A⁻¹A`.
pub fn qplus(g: &GroupTable, a: &ElemSet) -> Result<ElemSet> {
    let q = quotient_set(g, a)?;
    let r = quotient_counts(g, a)?;
    Ok(qplus_from(&q, &r, a.len()))
}

pub(crate) fn qplus_from(q: &ElemSet, r: &RepCounts, a_len: usize) -> ElemSet {
    let q_len = q.len();
    ElemSet::from_indices(
        q.universe(),
        q.indices().filter(|&x| r.counts[x] + a_len > q_len),
    )
    .expect("subset of Q")
}

/// Box principle on `A` and the Kemperman–Wehn bound on `A, B`.
///
/// * `box_principle`: whenever `r(x) + r(y) > |A|` (quotient counts on `A`),
///   `x⁻¹y ∈ A⁻¹A`;
/// * `kemperman_wehn`: `|AB| >= |A| + |B| − r(x)` for every `x ∈ AB`,
///   with product-form counts.
pub fn check_box_kw(g: &GroupTable, a: &ElemSet, b: &ElemSet) -> Result<CheckReport> {
    nonempty(g, a)?;
    nonempty(g, b)?;
    let mut report = CheckReport::new();

    let q = quotient_set(g, a)?;
    let r = quotient_counts(g, a)?;
    let mut box_witness = None;
    // r vanishes off Q and r <= |A|, so only pairs inside Q can qualify.
    'pairs: for x in q.indices() {
        for y in q.indices() {
            if r.counts[x] + r.counts[y] > a.len() && !q.contains_index(g.mul_index(g.inv_index(x), y)) {
                box_witness = Some((x, y));
                break 'pairs;
            }
        }
    }
    report.record("box_principle", box_witness.is_none(), || {
        let (x, y) = box_witness.unwrap();
        format!("r({x})+r({y}) > |A| but {x}⁻¹{y} ∉ A⁻¹A")
    });

    let ab = product_set(g, a, b);
    let rp = representation_counts(g, a, b, RepForm::Product)?;
    let kw_witness = ab
        .indices()
        .find(|&x| ab.len() + rp.counts[x] < a.len() + b.len());
    report.record("kemperman_wehn", kw_witness.is_none(), || {
        let x = kw_witness.unwrap();
        format!(
            "x={x}: |AB|={} < |A|+|B|-r(x) = {}+{}-{}",
            ab.len(),
            a.len(),
            b.len(),
            rp.counts[x]
        )
    });
    Ok(report)
}
