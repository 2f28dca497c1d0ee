use std::fmt;

use serde::{Deserialize, Serialize};

/// The named variable groups an [`MPoly`](super::MPoly) may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    X,
    Y,
    U,
    Z,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Group::X => "x",
            Group::Y => "y",
            Group::U => "u",
            Group::Z => "z",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarGroup {
    pub name: Group,
    pub arity: usize,
    /// Maximum total degree kept in this group; `None` means unbounded.
    pub cap: Option<u16>,
}

/// Ordered variable groups. Monomials are ordered group by group, each group
/// by total degree and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarSpec {
    pub groups: Vec<VarGroup>,
}

impl VarSpec {
    pub fn new(groups: Vec<VarGroup>) -> Self {
        VarSpec { groups }
    }

    /// Only `x_1..x_n`.
    pub fn x(n: usize) -> Self {
        Self::new(vec![VarGroup {
            name: Group::X,
            arity: n,
            cap: None,
        }])
    }

    /// Append a group.
    pub fn with(mut self, name: Group, arity: usize, cap: Option<u16>) -> Self {
        self.groups.push(VarGroup { name, arity, cap });
        self
    }

    pub fn index_of(&self, g: Group) -> Option<usize> {
        self.groups.iter().position(|vg| vg.name == g)
    }

    pub fn arity(&self, g: Group) -> usize {
        self.index_of(g).map(|i| self.groups[i].arity).unwrap_or(0)
    }

    pub fn cap(&self, g: Group) -> Option<u16> {
        self.index_of(g).and_then(|i| self.groups[i].cap)
    }

    /// Offset of the degree slot of group `k` in a packed monomial.
    pub(crate) fn offset(&self, k: usize) -> usize {
        self.groups[..k].iter().map(|g| g.arity + 1).sum()
    }

    pub(crate) fn packed_len(&self) -> usize {
        self.groups.iter().map(|g| g.arity + 1).sum()
    }

    pub fn num_vars(&self) -> usize {
        self.groups.iter().map(|g| g.arity).sum()
    }

    pub fn var_name(&self, k: usize, i: usize) -> String {
        let g = &self.groups[k];
        if g.arity == 1 && matches!(g.name, Group::U | Group::Z) {
            g.name.to_string()
        } else {
            format!("{}{}", g.name, i + 1)
        }
    }
}
