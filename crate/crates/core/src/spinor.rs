//! The state space: polynomials on R^2n with values in the symplectic
//! spinors, modelled as finite combinations of basis states
//! `z^alpha zb^beta ⊗ h_kappa`, where `h_k(q) = H_k(q) e^{-q²/2}` is the
//! Gaussian-weighted (physicists') Hermite basis in each spinor variable.
//!
//! The spinor-variable action is local in the Hermite index:
//!
//! ```text
//! q·h_k  = (1/2) h_{k+1} + k h_{k-1}
//! dq·h_k = -(1/2) h_{k+1} + k h_{k-1}
//! ```
//!
//! so the ladder operators act as `(q+dq) h_k = 2k h_{k-1}` and
//! `(q-dq) h_k = h_{k+1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arith::{falling, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::weyl::WeylOperator;

/// Monomial basis state: exponents of z, exponents of zb, Hermite degrees.
/// The derived ordering (alpha, then beta, then kappa) is the canonical
/// basis order used everywhere.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisState {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub kappa: Vec<u32>,
}

impl BasisState {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>, kappa: Vec<u32>) -> Self {
        assert!(alpha.len() == beta.len() && beta.len() == kappa.len());
        BasisState { alpha, beta, kappa }
    }

    /// The ground state 1 ⊗ h_0 in n variables.
    pub fn vacuum(n: usize) -> Self {
        BasisState {
            alpha: vec![0; n],
            beta: vec![0; n],
            kappa: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// (|alpha|, |beta|, |kappa|).
    pub fn grade(&self) -> (u32, u32, u32) {
        (
            self.alpha.iter().sum(),
            self.beta.iter().sum(),
            self.kappa.iter().sum(),
        )
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, &e) in self.alpha.iter().enumerate() {
            if e > 0 {
                write!(f, "z{}", j + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                write!(f, "·")?;
            }
        }
        for (j, &e) in self.beta.iter().enumerate() {
            if e > 0 {
                write!(f, "zb{}", j + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                write!(f, "·")?;
            }
        }
        write!(
            f,
            "h({})",
            self.kappa
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Identifies the graded slice P_{a,b} ⊗ S_(r): bidegree (a, b) in (z, zb)
/// and total Hermite degree r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceIndex {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub r: u32,
}

impl SliceIndex {
    pub fn new(n: usize, a: u32, b: u32, r: u32) -> Self {
        SliceIndex { n, a, b, r }
    }
}

impl fmt::Display for SliceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(n={}, a={}, b={}, r={})",
            self.n, self.a, self.b, self.r
        )
    }
}

/// All compositions of `total` into `parts` non-negative entries, in
/// ascending lexicographic order.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            let mut v = Vec::with_capacity(parts);
            v.push(first);
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// Ordered basis of the slice P_{a,b} ⊗ S_(r): all states with
/// |alpha| = a, |beta| = b, |kappa| = r, sorted lexicographically.
pub fn slice_basis(s: SliceIndex) -> Vec<BasisState> {
    let mut out = Vec::new();
    for alpha in compositions(s.a, s.n) {
        for beta in compositions(s.b, s.n) {
            for kappa in compositions(s.r, s.n) {
                out.push(BasisState {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    kappa,
                });
            }
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

/// Number of states in a slice, computed without enumerating it.
pub fn slice_dim(s: SliceIndex) -> u64 {
    let stars = |d: u32| -> u64 {
        let v = crate::arith::binomial(d as u64 + s.n as u64 - 1, s.n as u64 - 1);
        u64::try_from(v).expect("slice dimension exceeds u64")
    };
    stars(s.a) * stars(s.b) * stars(s.r)
}

/// Finite linear combination of basis states: the computational model of a
/// spinor-valued polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorPolynomial {
    n: usize,
    terms: BTreeMap<BasisState, GaussianRational>,
}

impl SpinorPolynomial {
    pub fn zero(n: usize) -> Self {
        SpinorPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis state with coefficient one.
    pub fn unit(n: usize, state: BasisState) -> Self {
        assert_eq!(state.n(), n);
        let mut p = Self::zero(n);
        p.add_term(state, GaussianRational::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<BasisState, GaussianRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, s: &BasisState) -> GaussianRational {
        self.terms
            .get(s)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, state: BasisState, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(state.n(), self.n);
        match self.terms.entry(state) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (s, v) in &self.terms {
            out.add_term(s.clone(), v * c);
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-GaussianRational::one()))
    }

    /// The set of grades (|alpha|, |beta|, |kappa|) present; empty for zero.
    pub fn grade(&self) -> BTreeSet<(u32, u32, u32)> {
        self.terms.keys().map(|s| s.grade()).collect()
    }

    /// Complex conjugation as a function: coefficients conjugated, alpha and
    /// beta swapped (the Hermite factors are real).
    pub fn conjugate_elem(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (s, c) in &self.terms {
            out.add_term(
                BasisState {
                    alpha: s.beta.clone(),
                    beta: s.alpha.clone(),
                    kappa: s.kappa.clone(),
                },
                c.conjugate(),
            );
        }
        out
    }
}

impl std::ops::Add for &SpinorPolynomial {
    type Output = SpinorPolynomial;
    fn add(self, rhs: &SpinorPolynomial) -> SpinorPolynomial {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl std::ops::Sub for &SpinorPolynomial {
    type Output = SpinorPolynomial;
    fn sub(self, rhs: &SpinorPolynomial) -> SpinorPolynomial {
        self.try_sub(rhs).expect("dimension mismatch")
    }
}

impl std::ops::Neg for &SpinorPolynomial {
    type Output = SpinorPolynomial;
    fn neg(self) -> SpinorPolynomial {
        self.scale(&-GaussianRational::one())
    }
}

impl fmt::Display for SpinorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·{s}")?;
        }
        Ok(())
    }
}

/// Single-variable Hermite action: applies `q` or `dq` repeatedly to a
/// sparse map (Hermite index -> rational coefficient).
fn hermite_step(map: &BTreeMap<u32, Rational>, raise: Rational) -> BTreeMap<u32, Rational> {
    let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
    let mut add = |k: u32, v: Rational| {
        let e = out.entry(k).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            out.remove(&k);
        }
    };
    for (&k, c) in map {
        add(k + 1, c * &raise);
        if k > 0 {
            add(k - 1, c * BigRational::from_integer(BigInt::from(k)));
        }
    }
    out
}

/// Applies a normal-ordered operator to a polynomial; exact.
pub fn apply(op: &WeylOperator, u: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    if op.n() != u.n() {
        return Err(Error::DimensionMismatch {
            left: op.n(),
            right: u.n(),
        });
    }
    let n = u.n();
    let half = crate::arith::rat(1, 2);
    let neg_half = crate::arith::rat(-1, 2);
    let mut out = SpinorPolynomial::zero(n);

    for (mono, c_op) in op.terms() {
        for (state, c_state) in u.terms() {
            // z-part: derivatives first (falling factorials), then multiplication.
            let mut coeff_int = BigInt::one();
            let mut alpha = Vec::with_capacity(n);
            let mut beta = Vec::with_capacity(n);
            let mut vanished = false;
            for j in 0..n {
                if state.alpha[j] < mono.dz[j] || state.beta[j] < mono.dzb[j] {
                    vanished = true;
                    break;
                }
                coeff_int *= falling(state.alpha[j], mono.dz[j]);
                coeff_int *= falling(state.beta[j], mono.dzb[j]);
                alpha.push(state.alpha[j] - mono.dz[j] + mono.z[j]);
                beta.push(state.beta[j] - mono.dzb[j] + mono.zb[j]);
            }
            if vanished || coeff_int.is_zero() {
                continue;
            }

            // q-part: per-variable Hermite recursion, dq first then q.
            // kappa_maps[j]: Hermite index -> coefficient for variable j.
            let mut kappa_maps: Vec<BTreeMap<u32, Rational>> = Vec::with_capacity(n);
            for j in 0..n {
                let mut m = BTreeMap::new();
                m.insert(state.kappa[j], Rational::one());
                for _ in 0..mono.dq[j] {
                    m = hermite_step(&m, neg_half.clone());
                }
                for _ in 0..mono.q[j] {
                    m = hermite_step(&m, half.clone());
                }
                if m.is_empty() {
                    vanished = true;
                    break;
                }
                kappa_maps.push(m);
            }
            if vanished {
                continue;
            }

            let base = c_op * c_state;
            let base = base.scale(&BigRational::from_integer(coeff_int));

            // tensor the n single-variable expansions together
            let mut partial: Vec<(Vec<u32>, Rational)> = vec![(Vec::new(), Rational::one())];
            for m in &kappa_maps {
                let mut next = Vec::with_capacity(partial.len() * m.len());
                for (prefix, pc) in &partial {
                    for (&k, kc) in m {
                        let mut v = prefix.clone();
                        v.push(k);
                        next.push((v, pc * kc));
                    }
                }
                partial = next;
            }
            for (kappa, kc) in partial {
                out.add_term(
                    BasisState {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        kappa,
                    },
                    base.scale(&kc),
                );
            }
        }
    }
    Ok(out)
}

/// Fischer weight of a basis state: the pairing of the state with itself.
///
/// `2^(|alpha|+|beta|) · i^(|alpha|-|beta|) · alpha! · beta! · prod_j 2^kappa_j kappa_j!`
///
/// The position factor is the z-coordinate image of the substitution
/// x -> d/dy, y -> -d/dx applied to the conjugated left argument
/// (z -> -2i d/dzb, zb -> 2i d/dz); the spinor factor is Hermite
/// orthogonality with the global Gaussian normalisation dropped.
fn fischer_weight(s: &BasisState) -> GaussianRational {
    let (a, b, _) = s.grade();
    let mut mag = BigInt::one() << (a + b) as usize;
    for &e in &s.alpha {
        mag *= crate::arith::factorial(e as u64);
    }
    for &e in &s.beta {
        mag *= crate::arith::factorial(e as u64);
    }
    for &k in &s.kappa {
        mag = (mag << k as usize) * crate::arith::factorial(k as u64);
    }
    GaussianRational::i_pow(a as i64 - b as i64).scale(&BigRational::from_integer(mag))
}

/// Fischer inner product, sesquilinear in the left argument and diagonal on
/// basis states.
pub fn fischer_pair(u: &SpinorPolynomial, v: &SpinorPolynomial) -> Result<GaussianRational> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let mut acc = GaussianRational::zero();
    // iterate over the smaller support
    let (small, large, conj_left) = if u.num_terms() <= v.num_terms() {
        (u, v, true)
    } else {
        (v, u, false)
    };
    for (s, c_small) in small.terms() {
        let c_large = large.terms().get(s);
        let Some(c_large) = c_large else { continue };
        let (cu, cv) = if conj_left {
            (c_small, c_large)
        } else {
            (c_large, c_small)
        };
        acc += &(&(&cu.conjugate() * cv) * &fischer_weight(s));
    }
    Ok(acc)
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    alpha: Vec<u32>,
    beta: Vec<u32>,
    kappa: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRecord {
    n: usize,
    terms: Vec<TermRecord>,
}

impl Serialize for SpinorPolynomial {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let rec = PolyRecord {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| TermRecord {
                    alpha: s.alpha.clone(),
                    beta: s.beta.clone(),
                    kappa: s.kappa.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        rec.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpinorPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = PolyRecord::deserialize(deserializer)?;
        let mut out = SpinorPolynomial::zero(rec.n);
        for t in rec.terms {
            if t.alpha.len() != rec.n || t.beta.len() != rec.n || t.kappa.len() != rec.n {
                return Err(D::Error::custom("term multi-index length differs from n"));
            }
            let c: GaussianRational = t.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(BasisState::new(t.alpha, t.beta, t.kappa), c);
        }
        Ok(out)
    }
}
