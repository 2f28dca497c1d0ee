//! Constructors for the polynomial families: Hall-Littlewood `P`/`Q`, Macdonald,
//! interpolation Macdonald and inhomogeneous Hall-Littlewood, with
//! cross-validation between independent constructions.

mod hl;
mod inhom;
mod interp;
mod macdonald;
mod special;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use hl::{b_lambda, hl_p, hl_p_func, hl_prefactor, hl_q_func};
pub use inhom::{inhom_f, inhom_f_all_routes, inhom_f_func, limit_q0_interp};
pub use interp::{interp_func, interp_macdonald, interp_monomial_coeffs, interp_value, partition_point};
pub use macdonald::{macdonald_dual_func, macdonald_func, macdonald_poly};
pub use special::{special_values, SpecialValue};

use crate::partitions::Partition;
use crate::polyengine::{MPoly, PolyError, VarSpec};
use crate::symfunc::{SymFuncError, SymFuncP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    #[error("vanishing system degenerate")]
    Degenerate,
    #[error("routes disagree for F_{lambda} at N = {n}: {first} gives {first_value}; {second} gives {second_value}")]
    RouteMismatch {
        lambda: Partition,
        n: usize,
        first: FRoute,
        second: FRoute,
        first_value: String,
        second_value: String,
    },
    #[error("interpolation polynomial {lambda} at N = {n} fails its normalization")]
    Normalization { lambda: Partition, n: usize },
    #[error("pole at q = 0 in the limit of the interpolation polynomial {lambda} at N = {n}")]
    PoleAtQ0 { lambda: Partition, n: usize },
    #[error("partition {lambda} has more than N = {n} parts")]
    TooLong { lambda: Partition, n: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "HL_P")]
    HlP,
    #[serde(rename = "HL_Q")]
    HlQ,
    #[serde(rename = "MACDONALD")]
    Macdonald,
    #[serde(rename = "INTERP")]
    Interp,
    #[serde(rename = "INHOM_F")]
    InhomF,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::HlP,
        Family::HlQ,
        Family::Macdonald,
        Family::Interp,
        Family::InhomF,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::HlP => "HL_P",
            Family::HlQ => "HL_Q",
            Family::Macdonald => "MACDONALD",
            Family::Interp => "INTERP",
            Family::InhomF => "INHOM_F",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let up = s.to_ascii_uppercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == up)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// The four constructions of the inhomogeneous Hall-Littlewood polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FRoute {
    Definition,
    TauExpansion,
    Tableau,
    Determinantal,
}

impl FRoute {
    pub const ALL: [FRoute; 4] = [
        FRoute::Definition,
        FRoute::TauExpansion,
        FRoute::Tableau,
        FRoute::Determinantal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FRoute::Definition => "definition",
            FRoute::TauExpansion => "tau_expansion",
            FRoute::Tableau => "tableau",
            FRoute::Determinantal => "determinantal",
        }
    }
}

impl fmt::Display for FRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FRoute {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let low = s.to_ascii_lowercase().replace('-', "_");
        FRoute::ALL
            .into_iter()
            .find(|r| r.name() == low)
            .ok_or_else(|| format!("unknown route {s:?}"))
    }
}

/// Whether a function is taken at `t` or at `1/t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TVariant {
    T,
    TInverse,
}

impl FromStr for TVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "t" => Ok(TVariant::T),
            "t_inverse" | "t_inv" => Ok(TVariant::TInverse),
            _ => Err(format!("unknown t variant {s:?}")),
        }
    }
}

/// A computed member of one of the families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisElement {
    pub family: Family,
    #[serde(rename = "lambda")]
    pub index: Partition,
    /// `None` for symmetric functions (infinitely many variables).
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub value: BasisValue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisValue {
    Poly(MPoly),
    Func(SymFuncP),
}

/// The shared spec `x_1..x_n`.
pub fn x_spec(n: usize) -> Arc<VarSpec> {
    static SPECS: std::sync::LazyLock<crate::cache::Memo<usize, Arc<VarSpec>>> =
        std::sync::LazyLock::new(crate::cache::Memo::new);
    SPECS.get_or_insert_with(&n, || Arc::new(VarSpec::x(n)))
}

/// Memo key for finite-alphabet constructions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Key {
    pub tag: &'static str,
    pub lambda: Partition,
    pub n: usize,
}

impl Key {
    pub fn new(tag: &'static str, lambda: &Partition, n: usize) -> Self {
        Key {
            tag,
            lambda: lambda.clone(),
            n,
        }
    }

    /// File name used when persisting under the cache directory.
    pub fn disk_name(&self) -> String {
        let parts: Vec<String> = self.lambda.parts().iter().map(|p| p.to_string()).collect();
        format!("{}_{}_N{}", self.tag, parts.join("-"), self.n)
    }
}

/// Memoize an `MPoly` constructor, mirroring results to disk when configured.
pub(crate) fn memo_poly<F>(memo: &crate::cache::Memo<Key, MPoly>, key: Key, f: F) -> Result<MPoly, BasisError>
where
    F: FnOnce() -> Result<MPoly, BasisError>,
{
    memo.get_or_try_insert_with(&key, || {
        let name = key.disk_name();
        if let Some(p) = crate::cache::disk_load::<MPoly>(&name) {
            if p.spec().as_ref() == x_spec(key.n).as_ref() {
                return Ok(p);
            }
        }
        let p = f()?;
        crate::cache::disk_store(&name, &p);
        Ok(p)
    })
}

pub(crate) fn clear_memos() {
    hl::clear_memos();
    inhom::clear_memos();
    interp::clear_memos();
    macdonald::clear_memos();
}

#[cfg(test)]
mod tests;
