//! Vandermonde utilities, antisymmetrization and `S_N` symmetrization.
//!
//! An antisymmetric polynomial is `Σ_α c_α a_α` over strictly decreasing
//! exponent vectors `α`, where `a_α` is the alternant. Dividing by the
//! Vandermonde determinant turns each `a_α` into a Schur polynomial
//! `s_{α-δ}`, so the exact division by `V(x)` reduces to reading off the
//! coefficients `c_α` and expanding Schur polynomials through Kostka numbers.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use parking_lot::RwLock;

use super::mono::Mono;
use super::mpoly::{add_term, MPoly};
use super::varspec::{Group, VarSpec};
use super::PolyError;
use crate::partitions::{partitions_bounded, Partition};
use crate::scalar::RatQT;

/// `V(x) = Π_{i<j} (x_i - x_j)`.
pub fn vandermonde(spec: &Arc<VarSpec>) -> MPoly {
    let n = spec.arity(Group::X);
    let mut v = MPoly::one(spec);
    for i in 0..n {
        for j in i + 1..n {
            v = v.mul(&MPoly::var(spec, Group::X, i).sub(&MPoly::var(spec, Group::X, j)));
        }
    }
    v
}

/// Distinct rearrangements of `v`.
pub fn distinct_permutations(v: &[u16]) -> Vec<Vec<u16>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // Lexicographic next-permutation enumeration.
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// `m_λ(x_1..x_n)`; zero if `λ` has more than `n` parts.
pub fn monomial_symmetric(spec: &Arc<VarSpec>, lambda: &Partition) -> MPoly {
    let k = spec.index_of(Group::X).expect("x group");
    let n = spec.groups[k].arity;
    let mut p = MPoly::zero(spec);
    if lambda.len() > n {
        return p;
    }
    let padded: Vec<u16> = lambda.padded(n).iter().map(|&e| e as u16).collect();
    let mut terms = BTreeMap::new();
    for perm in distinct_permutations(&padded) {
        let mut m = Mono::one(spec);
        m.set_group(spec, k, &perm);
        if m.within_caps(spec) {
            terms.insert(m, RatQT::one());
        }
    }
    p = MPoly::from_terms(spec, terms);
    p
}

type KostkaRow = Arc<Vec<(Partition, BigInt)>>;

fn kostka_cache() -> &'static RwLock<HashMap<(Partition, usize), KostkaRow>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, usize), KostkaRow>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Number of semistandard tableaux of shape `lambda` with content `weight`
/// (a composition), by peeling off horizontal strips.
fn kostka(lambda: &Partition, weight: &[usize], memo: &mut HashMap<(Partition, usize), BigInt>) -> BigInt {
    let k = weight.len();
    if k == 0 {
        return BigInt::from(lambda.is_empty() as u8);
    }
    if lambda.len() > k {
        return BigInt::from(0);
    }
    if let Some(v) = memo.get(&(lambda.clone(), k)) {
        return v.clone();
    }
    let w = weight[k - 1];
    let mut total = BigInt::from(0);
    for nu in horizontal_strips_removed(lambda, w) {
        total += kostka(&nu, &weight[..k - 1], memo);
    }
    memo.insert((lambda.clone(), k), total.clone());
    total
}

/// All `ν ⊆ λ` with `λ/ν` a horizontal strip of size `s`.
fn horizontal_strips_removed(lambda: &Partition, s: usize) -> Vec<Partition> {
    fn rec(l: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let len = l.len();
        if i > len {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let lo = l.part(i + 1);
        let hi = l.part(i);
        for nu_i in (lo..=hi).rev() {
            let removed = hi - nu_i;
            if removed > left {
                break;
            }
            cur.push(nu_i);
            rec(l, i + 1, left - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 1, s, &mut Vec::new(), &mut out);
    out
}

/// Kostka numbers `K_{λμ}` for all partitions `μ` of `|λ|` with at most `n` parts.
pub fn kostka_row(lambda: &Partition, n: usize) -> KostkaRow {
    let key = (lambda.clone(), n);
    if let Some(r) = kostka_cache().read().get(&key) {
        return r.clone();
    }
    let mut row = Vec::new();
    for mu in partitions_bounded(lambda.size(), n, lambda.size()) {
        if !mu.dominated_by(lambda) {
            continue;
        }
        let mut memo = HashMap::new();
        let k = kostka(lambda, mu.parts(), &mut memo);
        if k != BigInt::from(0) {
            row.push((mu, k));
        }
    }
    let row = Arc::new(row);
    kostka_cache().write().insert(key, row.clone());
    row
}

/// Monomials of `s_λ(x_1..x_n)` as `(exponents, coefficient)`.
fn schur_terms(lambda: &Partition, n: usize) -> Arc<Vec<(Vec<u16>, BigInt)>> {
    type Cache = RwLock<HashMap<(Partition, usize), Arc<Vec<(Vec<u16>, BigInt)>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), n);
    if let Some(r) = cache.read().get(&key) {
        return r.clone();
    }
    let mut out = Vec::new();
    if lambda.len() <= n {
        for (mu, k) in kostka_row(lambda, n).iter() {
            let padded: Vec<u16> = mu.padded(n).iter().map(|&e| e as u16).collect();
            for perm in distinct_permutations(&padded) {
                out.push((perm, k.clone()));
            }
        }
    }
    let out = Arc::new(out);
    cache.write().insert(key, out.clone());
    out
}

/// The Schur polynomial `s_λ(x_1..x_n)`.
pub fn schur(spec: &Arc<VarSpec>, lambda: &Partition) -> MPoly {
    let k = spec.index_of(Group::X).expect("x group");
    let n = spec.groups[k].arity;
    let mut terms = BTreeMap::new();
    for (e, c) in schur_terms(lambda, n).iter() {
        let mut m = Mono::one(spec);
        m.set_group(spec, k, e);
        if m.within_caps(spec) {
            terms.insert(m, RatQT::from_int(c.clone()));
        }
    }
    MPoly::from_terms(spec, terms)
}

/// Sort exponents decreasingly; returns the sorted vector and whether the
/// sorting permutation is odd, or `None` if two exponents coincide.
fn sort_with_sign(e: &[u16]) -> Option<(Vec<u16>, bool)> {
    let mut v = e.to_vec();
    let mut odd = false;
    // Insertion sort, counting transpositions.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, odd))
    }
}

/// `Σ_{w ∈ S_N} sgn(w) w(f)` in compressed form: maps `(rest, α)` to the
/// coefficient of the alternant `a_α`, where `rest` is the monomial in the
/// other groups (with `x` exponents zeroed).
fn antisymmetrize_compressed(f: &MPoly) -> BTreeMap<(Mono, Vec<u16>), RatQT> {
    let spec = f.spec().clone();
    let k = spec.index_of(Group::X).expect("x group");
    let mut out: BTreeMap<(Mono, Vec<u16>), RatQT> = BTreeMap::new();
    for (m, c) in f.terms() {
        let e = m.group(&spec, k);
        if let Some((alpha, odd)) = sort_with_sign(e) {
            let mut rest = m.clone();
            rest.set_group(&spec, k, &vec![0; e.len()]);
            let v = if odd { -c } else { c.clone() };
            let entry = out.entry((rest, alpha)).or_default();
            *entry = &*entry + &v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `Σ c_α · rest · s_{α-δ}`, optionally also dividing by `x_1 ⋯ x_N` (`extra = 1`).
fn expand_alternants(
    spec: &Arc<VarSpec>,
    comp: &BTreeMap<(Mono, Vec<u16>), RatQT>,
    extra: u16,
) -> Result<MPoly, PolyError> {
    let k = spec.index_of(Group::X).expect("x group");
    let n = spec.groups[k].arity;
    let mut terms = BTreeMap::new();
    for ((rest, alpha), c) in comp {
        let mut parts = Vec::with_capacity(n);
        for (i, &a) in alpha.iter().enumerate() {
            let d = (n - 1 - i) as u16 + extra;
            if a < d {
                return Err(PolyError::InexactDivision);
            }
            parts.push((a - d) as usize);
        }
        let lam = Partition::from_unsorted(parts);
        for (e, kc) in schur_terms(&lam, n).iter() {
            let mut m = rest.clone();
            m.set_group(spec, k, e);
            if m.within_caps(spec) {
                add_term(&mut terms, m, &(c * &RatQT::from_int(kc.clone())));
            }
        }
    }
    Ok(MPoly::from_terms(spec, terms))
}

/// `Σ_{w ∈ S_N} w( num / V(x) )`, a polynomial.
pub fn symmetrize(num: &MPoly) -> MPoly {
    let comp = antisymmetrize_compressed(num);
    expand_alternants(num.spec(), &comp, 0).expect("alternant quotient is a polynomial")
}

/// `Σ_{w ∈ S_N} w( num / Π_{(i,j) ∈ pairs} (x_i - x_j) )`, where `pairs` lists
/// distinct unordered index pairs (0-based, either orientation).
pub fn symmetrize_template(num: &MPoly, pairs: &[(usize, usize)]) -> MPoly {
    let spec = num.spec().clone();
    let n = spec.arity(Group::X);
    let mut completed = num.clone();
    let mut flips = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            match pairs.iter().find(|&&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)) {
                Some(&(a, _)) => {
                    if a == j {
                        flips += 1;
                    }
                }
                None => {
                    completed = completed.mul(&MPoly::var(&spec, Group::X, i).sub(&MPoly::var(&spec, Group::X, j)));
                }
            }
        }
    }
    let s = symmetrize(&completed);
    if flips % 2 == 1 {
        s.neg()
    } else {
        s
    }
}

/// Divide an antisymmetric polynomial by `V(x) · (x_1 ⋯ x_N)^extra`, checking
/// antisymmetry and divisibility.
pub fn divide_antisymmetric(p: &MPoly, extra: u16) -> Result<MPoly, PolyError> {
    let spec = p.spec().clone();
    let k = spec.index_of(Group::X).expect("x group");
    // Strictly decreasing exponents pick out the alternant coefficients; every
    // other term must be the signed image of one of them.
    let mut reps: BTreeMap<(Mono, Vec<u16>), RatQT> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.group(&spec, k);
        if e.windows(2).all(|w| w[0] > w[1]) {
            let mut rest = m.clone();
            rest.set_group(&spec, k, &vec![0; e.len()]);
            reps.insert((rest, e.to_vec()), c.clone());
        }
    }
    for (m, c) in p.terms() {
        let e = m.group(&spec, k);
        let (alpha, odd) = sort_with_sign(e).ok_or(PolyError::InexactDivision)?;
        let mut rest = m.clone();
        rest.set_group(&spec, k, &vec![0; e.len()]);
        let rep = reps.get(&(rest, alpha)).ok_or(PolyError::InexactDivision)?;
        let expect = if odd { -rep } else { rep.clone() };
        if &expect != c {
            return Err(PolyError::InexactDivision);
        }
    }
    expand_alternants(&spec, &reps, extra)
}

/// Reference implementation: literal sum over `S_N` followed by exact division by `V(x)`.
pub fn symmetrize_by_division(num: &MPoly) -> Result<MPoly, PolyError> {
    let spec = num.spec().clone();
    let n = spec.arity(Group::X);
    let mut acc = MPoly::zero(&spec);
    for (perm, odd) in permutations_with_sign(n) {
        let w = num.permute(Group::X, &perm);
        if odd {
            acc = acc.sub(&w);
        } else {
            acc.add_assign_ref(&w);
        }
    }
    acc.exact_divide(&vandermonde(&spec))
}

/// All permutations of `0..n` with their parity.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, bool)>, n: usize) {
        if cur.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), inv % 2 == 1));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out, n);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out, n);
    out
}

/// Determinant by expansion over all permutations (the entries need not be small).
pub fn determinant(spec: &Arc<VarSpec>, m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let mut acc = MPoly::zero(spec);
    for (perm, odd) in permutations_with_sign(n) {
        let mut term = MPoly::one(spec);
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&m[i][j]);
            if term.is_zero() {
                break;
            }
        }
        if odd {
            acc = acc.sub(&term);
        } else {
            acc.add_assign_ref(&term);
        }
    }
    acc
}
