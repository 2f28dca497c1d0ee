use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::operators::USeries;
use crate::polyengine::MPoly;
use crate::scalar::RatQT;
use crate::symfunc::SymFuncP;

/// The first coefficient at which two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(monomial: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Witness {
            monomial: monomial.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn error(message: String) -> Self {
        Witness {
            monomial: "error".into(),
            lhs: message,
            rhs: String::new(),
        }
    }

    fn prefixed(self, prefix: &str) -> Self {
        let monomial = if self.monomial == "1" {
            prefix.to_string()
        } else {
            format!("{prefix}*{}", self.monomial)
        };
        Witness { monomial, ..self }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: lhs {} vs rhs {}", self.monomial, self.lhs, self.rhs)
    }
}

pub(crate) fn scalars(lhs: &RatQT, rhs: &RatQT) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::new("1", lhs, rhs))
}

/// First monomial, in the term order, where the polynomials differ.
pub(crate) fn polys(lhs: &MPoly, rhs: &MPoly) -> Option<Witness> {
    if lhs == rhs {
        return None;
    }
    let keys: BTreeSet<_> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
    let zero = RatQT::zero();
    for m in keys {
        let a = lhs.terms().get(m).unwrap_or(&zero);
        let b = rhs.terms().get(m).unwrap_or(&zero);
        if a != b {
            let mono = MPoly::monomial(lhs.spec(), &m.exps(lhs.spec()), RatQT::one());
            return Some(Witness::new(mono.to_string(), a, b));
        }
    }
    Some(Witness::new("spec", "", ""))
}

pub(crate) fn funcs(lhs: &SymFuncP, rhs: &SymFuncP) -> Option<Witness> {
    if lhs == rhs {
        return None;
    }
    let keys: BTreeSet<_> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
    let zero = RatQT::zero();
    for mu in keys {
        let a = lhs.terms().get(mu).unwrap_or(&zero);
        let b = rhs.terms().get(mu).unwrap_or(&zero);
        if a != b {
            let name = if mu.is_empty() {
                "1".to_string()
            } else {
                format!("p{mu}")
            };
            return Some(Witness::new(name, a, b));
        }
    }
    None
}

pub(crate) fn poly_series(lhs: &USeries<MPoly>, rhs: &USeries<MPoly>) -> Option<Witness> {
    let (k, a, b) = lhs.first_difference(rhs)?;
    polys(&a, &b).map(|w| w.prefixed(&format!("u^{k}")))
}

pub(crate) fn func_series(lhs: &USeries<SymFuncP>, rhs: &USeries<SymFuncP>) -> Option<Witness> {
    let (k, a, b) = lhs.first_difference(rhs)?;
    funcs(&a, &b).map(|w| w.prefixed(&format!("u^{k}")))
}
