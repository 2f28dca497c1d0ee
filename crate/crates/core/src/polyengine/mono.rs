use smallvec::SmallVec;

use super::varspec::VarSpec;

/// A packed monomial: for each group, its total degree followed by the
/// exponents of its variables. The derived ordering is therefore graded
/// lexicographic within each group, groups compared in order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono(pub(crate) SmallVec<[u16; 14]>);

impl Mono {
    pub(crate) fn one(spec: &VarSpec) -> Self {
        Mono(SmallVec::from_elem(0, spec.packed_len()))
    }

    /// Pack flat exponents (all groups concatenated) into a monomial.
    pub fn from_exps(spec: &VarSpec, exps: &[u16]) -> Self {
        assert_eq!(exps.len(), spec.num_vars(), "exponent vector length mismatch");
        let mut v = SmallVec::with_capacity(spec.packed_len());
        let mut pos = 0;
        for g in &spec.groups {
            let slice = &exps[pos..pos + g.arity];
            v.push(slice.iter().sum());
            v.extend_from_slice(slice);
            pos += g.arity;
        }
        Mono(v)
    }

    /// Flat exponents of all variables.
    pub fn exps(&self, spec: &VarSpec) -> Vec<u16> {
        let mut out = Vec::with_capacity(spec.num_vars());
        let mut off = 0;
        for g in &spec.groups {
            out.extend_from_slice(&self.0[off + 1..off + 1 + g.arity]);
            off += g.arity + 1;
        }
        out
    }

    /// Exponents of group `k`.
    pub fn group<'a>(&'a self, spec: &VarSpec, k: usize) -> &'a [u16] {
        let off = spec.offset(k);
        &self.0[off + 1..off + 1 + spec.groups[k].arity]
    }

    pub fn group_degree(&self, spec: &VarSpec, k: usize) -> u16 {
        self.0[spec.offset(k)]
    }

    pub fn exp(&self, spec: &VarSpec, k: usize, i: usize) -> u16 {
        self.0[spec.offset(k) + 1 + i]
    }

    pub(crate) fn set_exp(&mut self, spec: &VarSpec, k: usize, i: usize, e: u16) {
        let off = spec.offset(k);
        let old = self.0[off + 1 + i];
        self.0[off] = self.0[off] - old + e;
        self.0[off + 1 + i] = e;
    }

    /// Replace all exponents of group `k`.
    pub(crate) fn set_group(&mut self, spec: &VarSpec, k: usize, exps: &[u16]) {
        let off = spec.offset(k);
        self.0[off] = exps.iter().sum();
        self.0[off + 1..off + 1 + exps.len()].copy_from_slice(exps);
    }

    pub(crate) fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn div(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub(crate) fn within_caps(&self, spec: &VarSpec) -> bool {
        let mut off = 0;
        for g in &spec.groups {
            if let Some(c) = g.cap {
                if self.0[off] > c {
                    return false;
                }
            }
            off += g.arity + 1;
        }
        true
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}
