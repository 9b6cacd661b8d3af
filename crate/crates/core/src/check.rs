//! Outcome of one named identity.

use serde::{Deserialize, Serialize};

use crate::lie::LieElement;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Identity {
    pub id: String,
    pub holds: bool,
    /// Largest coefficient or matrix-entry modulus of the defect.
    pub residual: f64,
}

impl Identity {
    /// Holds iff `defect` is exactly zero.
    pub fn exact<T: LieElement>(id: impl Into<String>, defect: &T) -> Self {
        let holds = defect.is_null();
        Identity { id: id.into(), holds, residual: if holds { 0.0 } else { defect.residual() } }
    }

    pub fn flag(id: impl Into<String>, holds: bool) -> Self {
        Identity { id: id.into(), holds, residual: if holds { 0.0 } else { 1.0 } }
    }

    pub fn numeric(id: impl Into<String>, deviation: f64, tol: f64) -> Self {
        Identity { id: id.into(), holds: deviation.is_finite() && deviation <= tol, residual: deviation }
    }
}

pub fn all_hold(v: &[Identity]) -> bool {
    v.iter().all(|i| i.holds)
}
