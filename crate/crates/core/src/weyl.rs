//! Normal-ordered operator algebra on the 6n generators
//! `z_j, zb_j, q_j, dz_j, dzb_j, dq_j` (multiplication by a complex
//! coordinate or a spinor variable, and the matching partial derivatives).
//!
//! A [`WeylMonomial`] keeps all multiplication generators to the left of all
//! derivative generators; within each block the generators commute, so the
//! multi-index form is canonical and equality of [`WeylOperator`]s is
//! equality of their term maps. Products are computed with the reordering
//! rule for a conjugate pair,
//! `d^a v^b = sum_k C(a,k) C(b,k) k! v^(b-k) d^(a-k)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{binomial, factorial, GaussianRational};
use crate::error::{Error, Result};

/// The six generator families, in the fixed serialisation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Z,
    Zb,
    Q,
    Dz,
    Dzb,
    Dq,
}

/// Factor order inside a printed term: multiplications first, then the
/// spinor derivative, then the position derivatives.
const DISPLAY_ORDER: [(Generator, &str); 6] = [
    (Generator::Z, "z"),
    (Generator::Zb, "zb"),
    (Generator::Q, "q"),
    (Generator::Dq, "dq"),
    (Generator::Dz, "dz"),
    (Generator::Dzb, "dzb"),
];

/// A normal-ordered monomial in the 6n generators. Field order doubles as
/// the lexicographic term order used for serialisation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMonomial {
    pub z: Vec<u32>,
    pub zb: Vec<u32>,
    pub q: Vec<u32>,
    pub dz: Vec<u32>,
    pub dzb: Vec<u32>,
    pub dq: Vec<u32>,
}

impl WeylMonomial {
    pub fn identity(n: usize) -> Self {
        WeylMonomial {
            z: vec![0; n],
            zb: vec![0; n],
            q: vec![0; n],
            dz: vec![0; n],
            dzb: vec![0; n],
            dq: vec![0; n],
        }
    }

    /// Single generator with 1-based index `j`.
    pub fn generator(n: usize, kind: Generator, j: usize) -> Self {
        assert!(j >= 1 && j <= n, "generator index {j} out of range 1..={n}");
        let mut m = Self::identity(n);
        m.block_mut(kind)[j - 1] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn is_identity(&self) -> bool {
        self.blocks().iter().all(|b| b.iter().all(|&e| e == 0))
    }

    fn blocks(&self) -> [&[u32]; 6] {
        [&self.z, &self.zb, &self.q, &self.dz, &self.dzb, &self.dq]
    }

    fn block(&self, kind: Generator) -> &[u32] {
        match kind {
            Generator::Z => &self.z,
            Generator::Zb => &self.zb,
            Generator::Q => &self.q,
            Generator::Dz => &self.dz,
            Generator::Dzb => &self.dzb,
            Generator::Dq => &self.dq,
        }
    }

    fn block_mut(&mut self, kind: Generator) -> &mut Vec<u32> {
        match kind {
            Generator::Z => &mut self.z,
            Generator::Zb => &mut self.zb,
            Generator::Q => &mut self.q,
            Generator::Dz => &mut self.dz,
            Generator::Dzb => &mut self.dzb,
            Generator::Dq => &mut self.dq,
        }
    }
}

/// Normal-ordered finite sum of monomials with Gaussian-rational
/// coefficients. Zero coefficients are never stored, so two operators are
/// equal iff their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylOperator {
    n: usize,
    terms: BTreeMap<WeylMonomial, GaussianRational>,
}

impl WeylOperator {
    pub fn zero(n: usize) -> Self {
        WeylOperator {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: GaussianRational) -> Self {
        let mut op = Self::zero(n);
        op.add_term(WeylMonomial::identity(n), c);
        op
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, GaussianRational::one())
    }

    /// Single generator with 1-based index `j` and coefficient one.
    pub fn generator(n: usize, kind: Generator, j: usize) -> Self {
        let mut op = Self::zero(n);
        op.add_term(WeylMonomial::generator(n, kind, j), GaussianRational::one());
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<WeylMonomial, GaussianRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &WeylMonomial) -> GaussianRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Adds `c`·`m`, dropping the entry if the sum cancels.
    pub fn add_term(&mut self, m: WeylMonomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.n(), self.n);
        match self.terms.entry(m) {
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
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-GaussianRational::one()))
    }

    /// Term-wise linear combination `sum_k coeffs[k]·ops[k]` in normal form.
    pub fn linear_combine(coeffs: &[GaussianRational], ops: &[Self]) -> Result<Self> {
        if coeffs.len() != ops.len() {
            return Err(Error::InvalidParameter(format!(
                "{} coefficients for {} operators",
                coeffs.len(),
                ops.len()
            )));
        }
        let n = match ops.first() {
            Some(op) => op.n,
            None => {
                return Err(Error::InvalidParameter(
                    "linear_combine needs at least one operator".to_string(),
                ))
            }
        };
        let mut out = Self::zero(n);
        for (c, op) in coeffs.iter().zip(ops) {
            out = out.try_add(&op.scale(c))?;
        }
        Ok(out)
    }

    /// Normal-ordered product `self ∘ other` with exact coefficients.
    pub fn try_compose(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, k) in monomial_product(ma, mb) {
                    let scaled = c.scale(&BigRational::from_integer(k));
                    out.add_term(m, scaled);
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn try_commutator(&self, other: &Self) -> Result<Self> {
        self.try_compose(other)?.try_sub(&other.try_compose(self)?)
    }

    /// Panicking convenience form of [`Self::try_commutator`].
    pub fn commutator(&self, other: &Self) -> Self {
        self.try_commutator(other)
            .expect("operator dimension mismatch")
    }

    /// k-th operator power (k = 0 gives the identity).
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.try_compose(self).expect("same n");
        }
        acc
    }

    /// Parses the textual form produced by `Display`, e.g.
    /// `"(-1)·q1·dz1 + (-1)·dq1·dz1"`. The number of dimensions cannot be
    /// inferred from the string, so it is passed explicitly.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(n));
        }
        let mut out = Self::zero(n);
        for term in s.split(" + ") {
            let term = term.trim();
            let Some(rest) = term.strip_prefix('(') else {
                return Err(Error::Parse(format!("term must start with '(': {term:?}")));
            };
            let Some(close) = rest.find(')') else {
                return Err(Error::Parse(format!("missing ')' in {term:?}")));
            };
            let coeff: GaussianRational = rest[..close].parse()?;
            let mut mono = WeylMonomial::identity(n);
            let factors = rest[close + 1..].trim();
            if !factors.is_empty() {
                for factor in factors.split('·') {
                    let factor = factor.trim();
                    if factor.is_empty() {
                        continue;
                    }
                    let (kind, tail) = parse_generator_name(factor)?;
                    let (index, exp) = parse_index_exp(tail)?;
                    if index < 1 || index > n {
                        return Err(Error::IndexOutOfRange(format!(
                            "generator index {index} outside 1..={n}"
                        )));
                    }
                    mono.block_mut(kind)[index - 1] += exp;
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

fn parse_generator_name(s: &str) -> Result<(Generator, &str)> {
    // longest prefix first: dzb before dz, zb before z
    for (kind, name) in [
        (Generator::Dzb, "dzb"),
        (Generator::Dz, "dz"),
        (Generator::Dq, "dq"),
        (Generator::Zb, "zb"),
        (Generator::Z, "z"),
        (Generator::Q, "q"),
    ] {
        if let Some(rest) = s.strip_prefix(name) {
            return Ok((kind, rest));
        }
    }
    Err(Error::Parse(format!("unknown generator in {s:?}")))
}

fn parse_index_exp(s: &str) -> Result<(usize, u32)> {
    let digits = s.bytes().take_while(|b| b.is_ascii_digit()).count();
    if digits == 0 {
        return Err(Error::Parse(format!("missing generator index in {s:?}")));
    }
    let index: usize = s[..digits]
        .parse()
        .map_err(|_| Error::Parse(format!("bad index in {s:?}")))?;
    let rest = &s[digits..];
    if rest.is_empty() {
        return Ok((index, 1));
    }
    let Some(e) = rest.strip_prefix('^') else {
        return Err(Error::Parse(format!("unexpected {rest:?} after index")));
    };
    let exp: u32 = e
        .parse()
        .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
    Ok((index, exp))
}

/// Normal-ordered expansion of the product of two monomials. Returns the
/// contraction terms with integer coefficients.
fn monomial_product(a: &WeylMonomial, b: &WeylMonomial) -> Vec<(WeylMonomial, BigInt)> {
    let n = a.n();
    // Conjugate pairs: (a-derivative block, b-multiplication block, slot).
    // Slot encodes which blocks the contraction decrements.
    let mut contractions: Vec<(usize, u32, u32)> = Vec::new(); // (pair id, deriv exp, mult exp)
    for j in 0..n {
        if a.dz[j] > 0 && b.z[j] > 0 {
            contractions.push((j, a.dz[j], b.z[j]));
        }
        if a.dzb[j] > 0 && b.zb[j] > 0 {
            contractions.push((n + j, a.dzb[j], b.zb[j]));
        }
        if a.dq[j] > 0 && b.q[j] > 0 {
            contractions.push((2 * n + j, a.dq[j], b.q[j]));
        }
    }

    let base = |ks: &[u32]| -> WeylMonomial {
        let mut m = WeylMonomial::identity(n);
        for j in 0..n {
            m.z[j] = a.z[j] + b.z[j];
            m.zb[j] = a.zb[j] + b.zb[j];
            m.q[j] = a.q[j] + b.q[j];
            m.dz[j] = a.dz[j] + b.dz[j];
            m.dzb[j] = a.dzb[j] + b.dzb[j];
            m.dq[j] = a.dq[j] + b.dq[j];
        }
        for (pos, &(pair, _, _)) in contractions.iter().enumerate() {
            let k = ks[pos];
            if k == 0 {
                continue;
            }
            let j = pair % n;
            match pair / n {
                0 => {
                    m.z[j] -= k;
                    m.dz[j] -= k;
                }
                1 => {
                    m.zb[j] -= k;
                    m.dzb[j] -= k;
                }
                _ => {
                    m.q[j] -= k;
                    m.dq[j] -= k;
                }
            }
        }
        m
    };

    let mut out = Vec::new();
    let mut ks = vec![0u32; contractions.len()];
    loop {
        let mut coeff = BigInt::from(1);
        for (pos, &(_, da, vb)) in contractions.iter().enumerate() {
            let k = ks[pos];
            if k > 0 {
                coeff *= binomial(da as u64, k as u64)
                    * binomial(vb as u64, k as u64)
                    * factorial(k as u64);
            }
        }
        out.push((base(&ks), coeff));

        // odometer over 0..=min(da, vb) per contraction
        let mut pos = 0;
        loop {
            if pos == contractions.len() {
                return out;
            }
            let (_, da, vb) = contractions[pos];
            if ks[pos] < da.min(vb) {
                ks[pos] += 1;
                break;
            }
            ks[pos] = 0;
            pos += 1;
        }
    }
}

impl std::ops::Add for &WeylOperator {
    type Output = WeylOperator;
    fn add(self, rhs: &WeylOperator) -> WeylOperator {
        self.try_add(rhs).expect("operator dimension mismatch")
    }
}

impl std::ops::Sub for &WeylOperator {
    type Output = WeylOperator;
    fn sub(self, rhs: &WeylOperator) -> WeylOperator {
        self.try_sub(rhs).expect("operator dimension mismatch")
    }
}

impl std::ops::Mul for &WeylOperator {
    type Output = WeylOperator;
    fn mul(self, rhs: &WeylOperator) -> WeylOperator {
        self.try_compose(rhs).expect("operator dimension mismatch")
    }
}

impl std::ops::Neg for &WeylOperator {
    type Output = WeylOperator;
    fn neg(self) -> WeylOperator {
        self.scale(&-GaussianRational::one())
    }
}

impl fmt::Display for WeylOperator {
    /// Sorted term list, highest monomial first, e.g.
    /// `"(-1)·q1·dz1 + (-1)·dq1·dz1"` for the operator −(q_1+∂_{q_1})∂_{z_1}.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (kind, name) in DISPLAY_ORDER {
                for (j, &e) in m.block(kind).iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    write!(f, "·{}{}", name, j + 1)?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
