use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::{canonical_code, enumerate_lattices, Lattice};
use crate::par::*;
use crate::quantale::{endo_quantale, search_frobenius};
use crate::slatt::{adjunction_unit, is_nuclear};

use super::affine::pseudo_affine_witness;
use super::tight::{endo_frobenius_with, tight_frobenius};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    /// Hex canonical code.
    pub code: String,
    pub size: usize,
    pub distributive: bool,
    pub completely_distributive: bool,
    pub nuclear: bool,
    pub endo_frobenius_found: bool,
    pub tight_frobenius_ok: bool,
    pub adjunction_unit_found: bool,
    pub pseudo_affine: bool,
    pub error: Option<String>,
    #[serde(skip)]
    pub resource_limited: bool,
}

impl SweepRow {
    /// The five columns that the theorems identify.
    pub fn equivalence_columns(&self) -> [bool; 5] {
        [
            self.distributive,
            self.completely_distributive,
            self.nuclear,
            self.endo_frobenius_found,
            self.adjunction_unit_found,
        ]
    }

    /// Names of the failed row invariants. Rows cut short by a resource
    /// limit report nothing.
    pub fn violations(&self) -> Vec<&'static str> {
        if self.resource_limited {
            return Vec::new();
        }
        let mut out = Vec::new();
        if self.error.is_some() {
            out.push("error");
            return out;
        }
        let cols = self.equivalence_columns();
        if cols.iter().any(|&c| c != cols[0]) {
            out.push("equivalence");
        }
        if !self.tight_frobenius_ok {
            out.push("tight_frobenius");
        }
        if self.pseudo_affine != (self.size >= 2) {
            out.push("pseudo_affine");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub rows: usize,
    pub violations: usize,
    pub resource_limited: usize,
}

impl SweepSummary {
    pub fn of(rows: &[SweepRow]) -> SweepSummary {
        SweepSummary {
            rows: rows.len(),
            violations: rows.iter().filter(|r| !r.violations().is_empty()).count(),
            resource_limited: rows.iter().filter(|r| r.resource_limited).count(),
        }
    }
}

fn fill(row: &mut SweepRow, l: &Arc<Lattice>, caps: &Caps) -> Result<()> {
    row.distributive = l.is_distributive();
    row.completely_distributive = l.is_completely_distributive(caps);
    row.pseudo_affine = pseudo_affine_witness(l).is_some();
    row.adjunction_unit_found = adjunction_unit(l).is_some();
    row.nuclear = is_nuclear(l, caps)?;
    let endo = endo_quantale(l, caps)?;
    row.endo_frobenius_found = !search_frobenius(&endo.quantale, caps)?.is_empty();
    let tight = tight_frobenius(l, caps)?;
    row.tight_frobenius_ok = tight.verify().is_some_and(|r| r.all_pass());
    let constructed = endo_frobenius_with(&endo, &tight)?;
    if constructed.is_some() != row.endo_frobenius_found {
        return Err(Error::WitnessInvalid(
            "constructed endo witness disagrees with the search".into(),
        ));
    }
    Ok(())
}

/// One sweep row. Errors are recorded in the row.
pub fn sweep_lattice(l: &Lattice, caps: &Caps) -> SweepRow {
    let mut row = SweepRow {
        code: hex::encode(canonical_code(l)),
        size: l.size(),
        ..SweepRow::default()
    };
    if let Err(e) = fill(&mut row, &Arc::new(l.clone()), caps) {
        row.resource_limited = matches!(e, Error::ResourceLimit { .. });
        row.error = Some(e.to_string());
    }
    row
}

/// Rows for every lattice up to `max_size`, in canonical-code order.
pub fn theorem_sweep(max_size: usize, caps: &Caps) -> Result<Vec<SweepRow>> {
    let lattices = enumerate_lattices(max_size, caps)?;
    Ok(lattices.par_iter().map(|l| sweep_lattice(l, caps)).collect())
}
