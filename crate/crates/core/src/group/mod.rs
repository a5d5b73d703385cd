//! Immutable Cayley-table groups.
//!
//! Every group is stored as a full multiplication table over element ids
//! `0..order`, with the identity fixed at id 0. `mul(x, y)` is the product
//! `x∘y`; for permutation groups this means "apply `x`, then `y`".

mod build;
mod catalog;
mod spec;

use std::fmt;

use serde::Serialize;

use crate::check::CheckReport;
use crate::error::{Error, Result};

pub use build::{build_group, build_group_with_cap, build_spec, DEFAULT_ORDER_CAP};
pub use catalog::{catalog, EXTENDED_CATALOG_ORDER};
pub use spec::{parse_group_spec, parse_group_specs, GroupSpec};

/// Index of an element in a [`GroupTable`]. Only meaningful relative to the
/// table it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementId(u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn new(index: usize) -> Self {
        ElementId(u32::try_from(index).expect("element index fits in u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId::new(i)
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    names: Vec<String>,
    spec: String,
}

impl GroupTable {
    /// Assembles a table from raw parts without checking the group axioms.
    ///
    /// Only dimensions and id ranges are validated; call
    /// [`verify_group_axioms`] before trusting the result.
    pub fn from_parts(
        spec: impl Into<String>,
        mul: Vec<Vec<u32>>,
        inv: Vec<u32>,
        names: Vec<String>,
    ) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return Err(Error::Precondition("a group has at least one element".into()));
        }
        if inv.len() != order || names.len() != order || mul.iter().any(|r| r.len() != order) {
            return Err(Error::Precondition(format!(
                "table dimensions do not match order {order}"
            )));
        }
        let flat: Vec<u32> = mul.into_iter().flatten().collect();
        if let Some(&bad) = flat.iter().chain(&inv).find(|&&v| v as usize >= order) {
            return Err(Error::ElementOutOfRange {
                id: bad as usize,
                order,
            });
        }
        Ok(Self {
            order,
            mul: flat,
            inv,
            names,
            spec: spec.into(),
        })
    }

    pub(crate) fn from_flat(spec: String, order: usize, mul: Vec<u32>, names: Vec<String>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).expect("every element has an inverse");
            inv[x] = y as u32;
        }
        Self {
            order,
            mul,
            inv,
            names,
            spec,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    /// Normalized group-spec string this table was built from.
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.mul[x.index() * self.order + y.index()])
    }

    pub fn inv(&self, x: ElementId) -> ElementId {
        ElementId(self.inv[x.index()])
    }

    #[inline]
    pub fn mul_index(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv_index(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `x^k` for `k >= 0`.
    pub fn pow(&self, x: ElementId, k: usize) -> ElementId {
        (0..k).fold(ElementId::IDENTITY, |acc, _| self.mul(acc, x))
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId::new)
    }

    pub fn element(&self, index: usize) -> Result<ElementId> {
        if index < self.order {
            Ok(ElementId::new(index))
        } else {
            Err(Error::ElementOutOfRange {
                id: index,
                order: self.order,
            })
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order)
            .all(|x| (x + 1..self.order).all(|y| self.mul_index(x, y) == self.mul_index(y, x)))
    }

    /// Row `x` of the table: `y ↦ x∘y`.
    pub fn row(&self, x: usize) -> &[u32] {
        &self.mul[x * self.order..(x + 1) * self.order]
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("spec", &self.spec)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// Checks identity, inverses, associativity and the Latin-square property,
/// reporting the first violating witness of each.
pub fn verify_group_axioms(g: &GroupTable) -> CheckReport {
    let n = g.order;
    let mut report = CheckReport::new();

    let bad_identity = (0..n).find(|&x| g.mul_index(0, x) != x || g.mul_index(x, 0) != x);
    report.record("identity", bad_identity.is_none(), || {
        let x = bad_identity.unwrap();
        format!("x={x}: 0*x={}, x*0={}", g.mul_index(0, x), g.mul_index(x, 0))
    });

    let bad_inverse = (0..n).find(|&x| {
        let i = g.inv_index(x);
        g.mul_index(x, i) != 0 || g.mul_index(i, x) != 0
    });
    report.record("inverses", bad_inverse.is_none(), || {
        let x = bad_inverse.unwrap();
        format!("x={x}, inv={}", g.inv_index(x))
    });

    let mut bad_assoc = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let xy = g.mul_index(x, y);
            for z in 0..n {
                if g.mul_index(xy, z) != g.mul_index(x, g.mul_index(y, z)) {
                    bad_assoc = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    report.record("associativity", bad_assoc.is_none(), || {
        let (x, y, z) = bad_assoc.unwrap();
        format!("(x,y,z)=({x},{y},{z})")
    });

    let mut bad_latin = None;
    let mut seen = vec![usize::MAX; n];
    'rows: for x in 0..n {
        for y in 0..n {
            let v = g.mul_index(x, y);
            if seen[v] == x {
                bad_latin = Some(format!("row {x} repeats {v} at column {y}"));
                break 'rows;
            }
            seen[v] = x;
        }
    }
    if bad_latin.is_none() {
        seen.fill(usize::MAX);
        'cols: for y in 0..n {
            for x in 0..n {
                let v = g.mul_index(x, y);
                if seen[v] == y {
                    bad_latin = Some(format!("column {y} repeats {v} at row {x}"));
                    break 'cols;
                }
                seen[v] = y;
            }
        }
    }
    report.record("latin_square", bad_latin.is_none(), || bad_latin.unwrap());

    report
}
