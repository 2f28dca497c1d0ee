use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mono::Mono;
use super::varspec::{Group, VarSpec};
use super::PolyError;
use crate::partitions::Partition;
use crate::scalar::RatQT;

/// A sparse polynomial over `Q(q, t)` in the variables of a [`VarSpec`].
///
/// Terms exceeding a group's degree cap are discarded by multiplication, so a
/// capped group behaves like a truncated power series.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    spec: Arc<VarSpec>,
    terms: BTreeMap<Mono, RatQT>,
}

impl MPoly {
    pub fn zero(spec: &Arc<VarSpec>) -> Self {
        MPoly {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(spec: &Arc<VarSpec>, c: RatQT) -> Self {
        let mut p = Self::zero(spec);
        if !c.is_zero() {
            p.terms.insert(Mono::one(spec), c);
        }
        p
    }

    pub fn one(spec: &Arc<VarSpec>) -> Self {
        Self::constant(spec, RatQT::one())
    }

    /// The variable `i` (0-based) of group `g`.
    pub fn var(spec: &Arc<VarSpec>, g: Group, i: usize) -> Self {
        let k = spec.index_of(g).expect("group not in spec");
        let mut m = Mono::one(spec);
        m.set_exp(spec, k, i, 1);
        let mut p = Self::zero(spec);
        if m.within_caps(spec) {
            p.terms.insert(m, RatQT::one());
        }
        p
    }

    /// `c · x^exps` with flat exponents over all groups.
    pub fn monomial(spec: &Arc<VarSpec>, exps: &[u16], c: RatQT) -> Self {
        let m = Mono::from_exps(spec, exps);
        let mut p = Self::zero(spec);
        if !c.is_zero() && m.within_caps(spec) {
            p.terms.insert(m, c);
        }
        p
    }

    pub(crate) fn from_terms(spec: &Arc<VarSpec>, terms: BTreeMap<Mono, RatQT>) -> Self {
        MPoly {
            spec: spec.clone(),
            terms,
        }
    }

    pub fn spec(&self) -> &Arc<VarSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Mono, RatQT> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(flat exponents, coefficient)`, in descending term order.
    pub fn to_vec(&self) -> Vec<(Vec<u16>, RatQT)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| (m.exps(&self.spec), c.clone()))
            .collect()
    }

    /// Coefficient of the monomial with the given flat exponents.
    pub fn coeff(&self, exps: &[u16]) -> RatQT {
        self.terms
            .get(&Mono::from_exps(&self.spec, exps))
            .cloned()
            .unwrap_or_default()
    }

    /// The constant term.
    pub fn constant_term(&self) -> RatQT {
        self.terms.get(&Mono::one(&self.spec)).cloned().unwrap_or_default()
    }

    /// Returns the constant if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<RatQT> {
        match self.terms.len() {
            0 => Some(RatQT::zero()),
            1 if self.terms.keys().next().unwrap().is_one() => Some(self.terms.values().next().unwrap().clone()),
            _ => None,
        }
    }

    pub(crate) fn group_index(&self, g: Group) -> usize {
        self.spec.index_of(g).expect("group not in spec")
    }

    /// Largest total degree in group `g`.
    pub fn degree_in(&self, g: Group) -> u16 {
        match self.spec.index_of(g) {
            Some(k) => self
                .terms
                .keys()
                .map(|m| m.group_degree(&self.spec, k))
                .max()
                .unwrap_or(0),
            None => 0,
        }
    }

    fn check_spec(&self, other: &Self) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(PolyError::IncompatibleSpecs)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_spec(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_spec(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Panics on incompatible specs.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("incompatible variable specs")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Panics on incompatible specs.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("incompatible variable specs")
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), c);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &RatQT) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), &(c * s));
        }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &RatQT) -> Self {
        if s.is_zero() {
            return Self::zero(&self.spec);
        }
        if s.is_one() {
            return self.clone();
        }
        self.map_coeffs(|c| c * s)
    }

    pub fn map_coeffs<F: Fn(&RatQT) -> RatQT>(&self, f: F) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let v = f(c);
                (!v.is_zero()).then(|| (m.clone(), v))
            })
            .collect();
        Self::from_terms(&self.spec, terms)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        let spec = &self.spec;
        let capped = spec.groups.iter().any(|g| g.cap.is_some());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                if capped && !m.within_caps(spec) {
                    continue;
                }
                add_term(&mut terms, m, &(c1 * c2));
            }
        }
        Self::from_terms(spec, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.spec);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Multiply by a single monomial given by flat exponents.
    pub fn mul_monomial(&self, exps: &[u16]) -> Self {
        let mono = Mono::from_exps(&self.spec, exps);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&mono), c.clone()))
            .filter(|(m, _)| m.within_caps(&self.spec))
            .collect();
        Self::from_terms(&self.spec, terms)
    }

    /// `q` such that `q · b = self`; `b` must not involve capped groups.
    pub fn exact_divide(&self, b: &Self) -> Result<Self, PolyError> {
        self.check_spec(b)?;
        if b.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        for (k, g) in self.spec.groups.iter().enumerate() {
            if g.cap.is_some() && b.terms.keys().any(|m| m.group_degree(&self.spec, k) > 0) {
                return Err(PolyError::CappedDivisor);
            }
        }
        let (lm, lc) = b.terms.iter().next_back().unwrap();
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        if b.terms.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return Err(PolyError::InexactDivision);
                }
                terms.insert(m.div(lm), c * &lc_inv);
            }
            return Ok(Self::from_terms(&self.spec, terms));
        }
        let mut rem = self.terms.clone();
        let mut quo = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back() {
            if !lm.divides(m) {
                return Err(PolyError::InexactDivision);
            }
            let qm = m.div(lm);
            let qc = c * &lc_inv;
            for (bm, bc) in &b.terms {
                let neg = -(&qc * bc);
                add_term(&mut rem, bm.mul(&qm), &neg);
            }
            quo.insert(qm, qc);
        }
        Ok(Self::from_terms(&self.spec, quo))
    }

    /// Apply `f` to every monomial; coefficients of colliding images are summed.
    pub fn map_monomials<F: FnMut(&Mono) -> Option<(Mono, RatQT)>>(&self, mut f: F) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if let Some((nm, s)) = f(m) {
                let v = if s.is_one() { c.clone() } else { c * &s };
                add_term(&mut terms, nm, &v);
            }
        }
        Self::from_terms(&self.spec, terms)
    }

    /// Permute the variables of group `g`: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, g: Group, perm: &[usize]) -> Self {
        let k = self.group_index(g);
        let spec = self.spec.clone();
        self.map_monomials(|m| {
            let old = m.group(&spec, k);
            let mut new = vec![0u16; old.len()];
            for (i, &e) in old.iter().enumerate() {
                new[perm[i]] = e;
            }
            let mut nm = m.clone();
            nm.set_group(&spec, k, &new);
            Some((nm, RatQT::one()))
        })
    }

    /// Multiply each coefficient by `base^e`, where `e` is the exponent of variable `i` of `g`.
    /// With `base = q` this is the `q`-shift operator in that variable.
    pub fn scale_by_exponent(&self, g: Group, i: usize, base: &RatQT) -> Self {
        let k = self.group_index(g);
        let spec = self.spec.clone();
        let mut powers: Vec<RatQT> = vec![RatQT::one()];
        self.map_monomials(|m| {
            let e = m.exp(&spec, k, i) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * base;
                powers.push(next);
            }
            Some((m.clone(), powers[e].clone()))
        })
    }

    /// `T_{q, x_i}`: every `x_i^a` picks up `q^a`.
    pub fn q_shift(&self, g: Group, i: usize) -> Self {
        self.scale_by_exponent(g, i, &RatQT::q())
    }

    /// Substitute variable `i` of group `g` by zero.
    pub fn set_zero(&self, g: Group, i: usize) -> Self {
        let k = self.group_index(g);
        let spec = self.spec.clone();
        self.map_monomials(|m| (m.exp(&spec, k, i) == 0).then(|| (m.clone(), RatQT::one())))
    }

    /// Substitute variable `i` of group `g` by a scalar.
    pub fn substitute_scalar(&self, g: Group, i: usize, value: &RatQT) -> Self {
        let k = self.group_index(g);
        let spec = self.spec.clone();
        let mut powers: Vec<RatQT> = vec![RatQT::one()];
        self.map_monomials(|m| {
            let e = m.exp(&spec, k, i) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut nm = m.clone();
            nm.set_exp(&spec, k, i, 0);
            Some((nm, powers[e].clone()))
        })
    }

    /// Substitute every variable of group `g` by the matching scalar.
    pub fn substitute_group(&self, g: Group, values: &[RatQT]) -> Self {
        let k = self.group_index(g);
        let spec = self.spec.clone();
        let mut powers: Vec<Vec<RatQT>> = values.iter().map(|_| vec![RatQT::one()]).collect();
        self.map_monomials(|m| {
            let mut c = RatQT::one();
            for (i, &e) in m.group(&spec, k).iter().enumerate() {
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &values[i];
                    pw.push(next);
                }
                if e > 0 {
                    c *= &pw[e as usize];
                }
            }
            let mut nm = m.clone();
            nm.set_group(&spec, k, &vec![0; values.len()]);
            Some((nm, c))
        })
    }

    /// Value at a point of the `x` group, for a polynomial in `x` only.
    pub fn eval_x(&self, values: &[RatQT]) -> RatQT {
        self.substitute_group(Group::X, values).constant_term()
    }

    /// Split by the exponents of group `g`: returns `exps ↦ coefficient polynomial`
    /// (with group `g` set to zero in the coefficients).
    pub fn split_by_group(&self, g: Group) -> BTreeMap<Vec<u16>, MPoly> {
        let k = self.group_index(g);
        let mut out: BTreeMap<Vec<u16>, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.group(&self.spec, k).to_vec();
            let mut rest = m.clone();
            rest.set_group(&self.spec, k, &vec![0; key.len()]);
            out.entry(key)
                .or_insert_with(|| MPoly::zero(&self.spec))
                .terms
                .insert(rest, c.clone());
        }
        out
    }

    /// Coefficient of `g^e` for a single-variable group `g`.
    pub fn coeff_in(&self, g: Group, e: u16) -> MPoly {
        self.split_by_group(g)
            .remove(&vec![e])
            .unwrap_or_else(|| MPoly::zero(&self.spec))
    }

    /// Keep only the terms whose total degree in group `g` is at most `d`.
    pub fn truncate(&self, g: Group, d: u16) -> Self {
        let k = self.group_index(g);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.group_degree(&self.spec, k) <= d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self::from_terms(&self.spec, terms)
    }

    /// Re-express in a larger spec; groups are matched by name.
    pub fn embed(&self, target: &Arc<VarSpec>) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut nm = Mono::one(target);
            for (k, g) in self.spec.groups.iter().enumerate() {
                let exps = m.group(&self.spec, k);
                if exps.iter().all(|&e| e == 0) {
                    continue;
                }
                let tk = target.index_of(g.name).ok_or(PolyError::IncompatibleSpecs)?;
                if target.groups[tk].arity < g.arity {
                    return Err(PolyError::IncompatibleSpecs);
                }
                let mut padded = exps.to_vec();
                padded.resize(target.groups[tk].arity, 0);
                nm.set_group(target, tk, &padded);
            }
            if nm.within_caps(target) {
                terms.insert(nm, c.clone());
            }
        }
        Ok(Self::from_terms(target, terms))
    }

    /// True if invariant under every adjacent transposition of group `g`.
    pub fn is_symmetric_in(&self, g: Group) -> bool {
        let n = self.spec.arity(g);
        (0..n.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            self.permute(g, &perm) == *self
        })
    }

    /// Expansion `Σ c_λ m_λ(x)` of a polynomial symmetric in `x` involving no other group.
    pub fn to_monomial_basis(&self) -> Result<BTreeMap<Partition, RatQT>, PolyError> {
        let k = self.group_index(Group::X);
        for (kk, _) in self.spec.groups.iter().enumerate() {
            if kk != k && self.terms.keys().any(|m| m.group_degree(&self.spec, kk) > 0) {
                return Err(PolyError::NotPureX);
            }
        }
        if !self.is_symmetric_in(Group::X) {
            return Err(PolyError::Asymmetric);
        }
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.group(&self.spec, k);
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.insert(
                    Partition::from_unsorted(e.iter().map(|&x| x as usize).collect()),
                    c.clone(),
                );
            }
        }
        Ok(out)
    }

    /// Rebuild `Σ c_λ m_λ(x_1..x_n)` in the given spec.
    pub fn from_monomial_basis(spec: &Arc<VarSpec>, coeffs: &BTreeMap<Partition, RatQT>) -> Self {
        let mut p = Self::zero(spec);
        for (lam, c) in coeffs {
            p.add_assign_ref(&super::symmetrize::monomial_symmetric(spec, lam).scale(c));
        }
        p
    }
}

pub(crate) fn add_term(terms: &mut BTreeMap<Mono, RatQT>, m: Mono, c: &RatQT) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mut vars = Vec::new();
            for (k, g) in self.spec.groups.iter().enumerate() {
                for i in 0..g.arity {
                    match m.exp(&self.spec, k, i) {
                        0 => {}
                        1 => vars.push(self.spec.var_name(k, i)),
                        e => vars.push(format!("{}^{e}", self.spec.var_name(k, i))),
                    }
                }
            }
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct MPolyJson {
    vars: VarSpec,
    terms: Vec<(Vec<u16>, RatQT)>,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MPolyJson {
            vars: (*self.spec).clone(),
            terms: self.to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = MPolyJson::deserialize(d)?;
        let spec = Arc::new(raw.vars);
        let mut p = MPoly::zero(&spec);
        for (e, c) in raw.terms {
            if e.len() != spec.num_vars() {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let m = Mono::from_exps(&spec, &e);
            if !m.within_caps(&spec) {
                return Err(D::Error::custom("term exceeds degree cap"));
            }
            add_term(&mut p.terms, m, &c);
        }
        Ok(p)
    }
}
