//! Dimension formulas, simultaneous kernels, highest-weight vectors,
//! projected embedding operators and the full decomposition of a harmonic
//! slice into h-symplectic monogenic summands.
//!
//! A slice P_{a,b} ⊗ S_(r) decomposes under u(n) into images
//! `I_{b-i,j} M_{a-j,i}^{(b+r-(i+j))}` over 0 <= j <= a, 0 <= i <= b with
//! i + j <= r, where `M` denotes the space of h-symplectic monogenics
//! (the joint kernel of D_s and D_t) and `I_{k,l}` is the embedding
//! `X̂_z^k (X̂_z†)^l` built from the projected raising operators. The
//! routines here compute both sides exactly and report whether they agree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{binomial, factorial, rat, GaussianRational, Rational};
use crate::catalog;
use crate::error::{Error, Result};
use crate::linalg::{matrix_of, rank_of_family, stack_and_intersect, VectorBasis};
use crate::report::CheckReport;
use crate::spinor::{apply, fischer_pair, slice_basis, BasisState, SliceIndex, SpinorPolynomial};
use crate::weyl::WeylOperator;

/// A u(n) weight; every entry in this calculus is a half-integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|r| r.to_string()).collect()
    }
}

fn gamma_int(m: u64) -> BigInt {
    assert!(m >= 1, "Gamma argument must be a positive integer");
    factorial(m - 1)
}

fn to_u64(v: &BigRational, what: &str) -> u64 {
    assert!(v.is_integer(), "{what} is not an integer: {v}");
    v.to_integer()
        .to_u64()
        .unwrap_or_else(|| panic!("{what} exceeds u64"))
}

/// dim S_(r) = C(n+r-1, r): the r-th graded piece of the symplectic spinors.
pub fn dim_spinor(n: usize, r: u32) -> u64 {
    assert!(n >= 1);
    binomial(n as u64 + r as u64 - 1, r as u64)
        .to_u64()
        .expect("spinor dimension exceeds u64")
}

/// dim H_{a,b} = (n+a+b-1)/(n-1) · C(a+n-2, n-2) · C(b+n-2, n-2); needs n >= 2.
pub fn dim_harmonics(n: usize, a: u32, b: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "harmonic dimension formula needs n >= 2, got {n}"
        )));
    }
    let n = n as u64;
    let (a, b) = (a as u64, b as u64);
    let v = BigRational::new(BigInt::from(n + a + b - 1), BigInt::from(n - 1))
        * BigRational::from_integer(binomial(a + n - 2, n - 2))
        * BigRational::from_integer(binomial(b + n - 2, n - 2));
    Ok(to_u64(&v, "harmonic dimension"))
}

/// dim M_{a,b}^{(r)} via the Gamma-function formula; needs n >= 3 and b <= r.
pub fn dim_monogenics(n: usize, a: u32, b: u32, r: u32) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "monogenic dimension formula needs n >= 3, got {n}"
        )));
    }
    if b > r {
        return Err(Error::InvalidParameter(format!(
            "monogenic space undefined for b > r (b = {b}, r = {r})"
        )));
    }
    let n = n as u64;
    let (a, b, r) = (a as u64, b as u64, r as u64);
    let num = gamma_int(a + n - 2)
        * gamma_int(b + n - 2)
        * gamma_int(r + n - 1)
        * BigInt::from(a + b + n - 2)
        * BigInt::from(a + r + n - 1)
        * BigInt::from(r - b + 1);
    let den = gamma_int(a + 1)
        * gamma_int(b + 1)
        * gamma_int(r + 2)
        * factorial(n - 1)
        * factorial(n - 2)
        * factorial(n - 3);
    let v = BigRational::new(num, den);
    Ok(to_u64(&v, "monogenic dimension"))
}

/// Highest weight of M_{a,b}^{(r)}:
/// (a - 1/2, -1/2, ..., -1/2, -b - 1/2, -r - 1/2); needs n >= 3.
pub fn monogenic_weight(n: usize, a: u32, b: u32, r: u32) -> Weight {
    assert!(n >= 3);
    let mut entries = Vec::with_capacity(n);
    entries.push(rat(a as i64 * 2 - 1, 2));
    for _ in 1..n - 2 {
        entries.push(rat(-1, 2));
    }
    entries.push(rat(-(b as i64) * 2 - 1, 2));
    entries.push(rat(-(r as i64) * 2 - 1, 2));
    Weight(entries)
}

/// True when the Laplacian annihilates `u`.
pub fn is_harmonic(u: &SpinorPolynomial) -> bool {
    apply(&catalog::delta(u.n()), u)
        .map(|v| v.is_zero())
        .unwrap_or(false)
}

/// Kernel of the Laplacian on a slice. The dimension factorises as
/// dim H_{a,b} · dim S_(r) (checked when the formula applies).
pub fn harmonic_slice_basis(s: SliceIndex) -> VectorBasis {
    let domain = slice_basis(s);
    let (m, _) = matrix_of(&catalog::delta(s.n), &domain).expect("same n by construction");
    let vectors = m.nullspace();
    let basis = VectorBasis {
        n: s.n,
        states: domain,
        vectors,
    };
    if s.n >= 2 {
        let expected = dim_harmonics(s.n, s.a, s.b).expect("n >= 2") * dim_spinor(s.n, s.r);
        assert_eq!(
            basis.dim() as u64,
            expected,
            "harmonic slice {s} dimension disagrees with the product formula"
        );
    }
    basis
}

/// Joint kernel of D_s and D_t on a slice. Every returned vector is also
/// harmonic; this refinement is asserted on each computed kernel.
pub fn monogenic_basis(s: SliceIndex) -> VectorBasis {
    let ops = [catalog::ds(s.n), catalog::dt(s.n)];
    let domain = slice_basis(s);
    let basis = stack_and_intersect(s.n, &ops, &domain).expect("same n by construction");
    let lap = catalog::delta(s.n);
    for idx in 0..basis.dim() {
        let p = basis.polynomial(idx);
        assert!(
            apply(&lap, &p).expect("same n").is_zero(),
            "monogenic kernel vector is not harmonic on slice {s}"
        );
    }
    basis
}

/// The highest-weight vector of M_{a,b}^{(r)} in the Hermite model:
/// z_1^a (zb_{n-1} R_n - zb_n R_{n-1})^b applied to H_{r-b}(q_n) e^{-|q|²/2},
/// expanded binomially. Needs n >= 3 and b <= r.
pub fn hwv(n: usize, a: u32, b: u32, r: u32) -> Result<SpinorPolynomial> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "highest-weight vector model needs n >= 3, got {n}"
        )));
    }
    if b > r {
        return Err(Error::InvalidParameter(format!(
            "highest-weight vector undefined for b > r (b = {b}, r = {r})"
        )));
    }
    let mut w = SpinorPolynomial::zero(n);
    for m in 0..=b {
        // (zb_{n-1} R_n)^m (-zb_n R_{n-1})^{b-m}, raising acts by unit shifts
        let mut alpha = vec![0u32; n];
        alpha[0] = a;
        let mut beta = vec![0u32; n];
        beta[n - 2] = m;
        beta[n - 1] = b - m;
        let mut kappa = vec![0u32; n];
        kappa[n - 2] = b - m;
        kappa[n - 1] = r - b + m;
        let mut c = GaussianRational::from_rational(BigRational::from_integer(binomial(
            b as u64, m as u64,
        )));
        if (b - m) % 2 == 1 {
            c = -c;
        }
        w.add_term(BasisState::new(alpha, beta, kappa), c);
    }
    Ok(w)
}

/// Verification record for a highest-weight vector.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HwvReport {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub r: u32,
    pub weight: Vec<String>,
    pub vector: SpinorPolynomial,
    pub checks: CheckReport,
}

impl HwvReport {
    pub fn all_pass(&self) -> bool {
        self.checks.all_pass()
    }
}

/// Checks that the model vector is annihilated by D_z, D_z† and all
/// positive root operators, and is a joint Cartan eigenvector with the
/// dominant weight of M_{a,b}^{(r)}.
pub fn verify_hwv(n: usize, a: u32, b: u32, r: u32) -> Result<HwvReport> {
    let w = hwv(n, a, b, r)?;
    let weight = monogenic_weight(n, a, b, r);
    let mut checks = CheckReport::new(format!(
        "highest-weight vector (a={a}, b={b}, r={r}), n={n}"
    ));

    checks.push("Dz annihilates w", apply(&catalog::dz(n), &w)?.is_zero());
    checks.push(
        "DzDag annihilates w",
        apply(&catalog::dz_dag(n), &w)?.is_zero(),
    );
    for j in 1..=n {
        for k in j + 1..=n {
            checks.push(
                format!("positive root ({j},{k}) annihilates w"),
                apply(&catalog::pos_root(n, j, k)?, &w)?.is_zero(),
            );
        }
    }
    for j in 1..=n {
        let lambda = &weight.0[j - 1];
        let expected = w.scale(&GaussianRational::from_rational(lambda.clone()));
        checks.push(
            format!("H{j} eigenvalue {lambda}"),
            apply(&catalog::cartan_h(n, j)?, &w)? == expected,
        );
    }
    Ok(HwvReport {
        n,
        a,
        b,
        r,
        weight: weight.to_strings(),
        vector: w,
        checks,
    })
}

/// The projected raising operators, cached for repeated application.
pub struct Embedding {
    n: usize,
    lap: WeylOperator,
    xhat: WeylOperator,
    xhat_dag: WeylOperator,
}

impl Embedding {
    pub fn new(n: usize) -> Self {
        Embedding {
            n,
            lap: catalog::delta(n),
            xhat: catalog::xhat_z(n),
            xhat_dag: catalog::xhat_z_dag(n),
        }
    }

    fn check_harmonic(&self, u: &SpinorPolynomial) -> Result<()> {
        if u.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: u.n(),
            });
        }
        if !apply(&self.lap, u)?.is_zero() {
            return Err(Error::NotHarmonic);
        }
        Ok(())
    }

    /// X̂_z applied to a harmonic element; raises (a, b, r) to (a, b+1, r-1).
    pub fn xhat(&self, u: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        self.check_harmonic(u)?;
        apply(&self.xhat, u)
    }

    /// X̂_z† applied to a harmonic element; raises (a, b, r) to (a+1, b, r+1).
    pub fn xhat_dag(&self, u: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        self.check_harmonic(u)?;
        apply(&self.xhat_dag, u)
    }

    /// I_{k,l} = X̂_z^k (X̂_z†)^l.
    pub fn embed(&self, k: u32, l: u32, u: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        let mut v = u.clone();
        for _ in 0..l {
            v = self.xhat_dag(&v)?;
        }
        for _ in 0..k {
            v = self.xhat(&v)?;
        }
        Ok(v)
    }
}

/// X̂_z on a harmonic element. Errors on non-harmonic input.
pub fn embed_xhat(u: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    Embedding::new(u.n()).xhat(u)
}

/// X̂_z† on a harmonic element. Errors on non-harmonic input.
pub fn embed_xhat_dagger(u: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    Embedding::new(u.n()).xhat_dag(u)
}

/// Image of a basis under I_{k,l}, with a rank check on the images.
#[derive(Clone, Debug)]
pub struct EmbeddedFamily {
    pub images: Vec<SpinorPolynomial>,
    pub independent: bool,
}

/// Applies I_{k,l} to every vector of a harmonic basis and verifies linear
/// independence of the images by rank.
pub fn embed_basis(k: u32, l: u32, basis: &VectorBasis) -> Result<EmbeddedFamily> {
    let embedding = Embedding::new(basis.n);
    let mut images = Vec::with_capacity(basis.dim());
    for idx in 0..basis.dim() {
        images.push(embedding.embed(k, l, &basis.polynomial(idx))?);
    }
    let independent = if images.is_empty() {
        true
    } else {
        let grades: std::collections::BTreeSet<_> = images.iter().flat_map(|p| p.grade()).collect();
        let ambient: Vec<BasisState> = grades
            .into_iter()
            .flat_map(|(a, b, r)| slice_basis(SliceIndex::new(basis.n, a, b, r)))
            .collect();
        rank_of_family(&ambient, &images) == images.len()
    };
    Ok(EmbeddedFamily {
        images,
        independent,
    })
}

/// One predicted summand I_{b-i,j} M_{a-j,i}^{(b+r-(i+j))} of a slice
/// decomposition.
#[derive(Clone, Debug)]
pub struct SummandDescriptor {
    pub i: u32,
    pub j: u32,
    /// Embedding powers: I_{k,l} with (k, l) = (b - i, j).
    pub k: u32,
    pub l: u32,
    pub source: SliceIndex,
    pub weight: Weight,
    pub predicted_dim: u64,
}

/// Enumerates the predicted summands of H_{a,b} ⊗ S_(r), ordered by (j, i).
/// The count never exceeds the triangular number (r+1)(r+2)/2.
pub fn predicted_summands(n: usize, a: u32, b: u32, r: u32) -> Result<Vec<SummandDescriptor>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "summand prediction needs n >= 3, got {n}"
        )));
    }
    let mut out = Vec::new();
    for j in 0..=a {
        for i in 0..=b {
            if i + j > r {
                continue;
            }
            let source = SliceIndex::new(n, a - j, i, b + r - (i + j));
            let weight = monogenic_weight(n, source.a, source.b, source.r);
            let predicted_dim = dim_monogenics(n, source.a, source.b, source.r)?;
            out.push(SummandDescriptor {
                i,
                j,
                k: b - i,
                l: j,
                source,
                weight,
                predicted_dim,
            });
        }
    }
    debug_assert!(out.len() as u64 <= ((r as u64 + 1) * (r as u64 + 2)) / 2);
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SummandReport {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
    pub source_slice: SliceIndex,
    pub weight: Vec<String>,
    pub predicted_dim: u64,
    pub computed_dim: u64,
    pub independent: bool,
}

/// Full verification record for one slice decomposition.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionReport {
    pub slice: SliceIndex,
    pub harmonic_dim: u64,
    pub summands: Vec<SummandReport>,
    pub completeness_rank: u64,
    pub orthogonality_ok: bool,
    pub complete: bool,
}

impl DecompositionReport {
    /// True when every recorded verdict holds.
    pub fn all_ok(&self) -> bool {
        self.complete
            && self.orthogonality_ok
            && self
                .summands
                .iter()
                .all(|s| s.independent && s.predicted_dim == s.computed_dim)
    }
}

/// Computes the kernel of every predicted source slice, embeds it into the
/// target slice, and verifies dimensions, joint independence and Fischer
/// orthogonality of the proper embeddings against the slice's own
/// monogenics. Failed checks are recorded, never fatal.
pub fn decompose(s: SliceIndex) -> Result<DecompositionReport> {
    if s.n < 3 {
        return Err(Error::InvalidParameter(format!(
            "decomposition needs n >= 3, got {}",
            s.n
        )));
    }
    let harmonic = harmonic_slice_basis(s);
    let harmonic_dim = harmonic.dim() as u64;
    let summands = predicted_summands(s.n, s.a, s.b, s.r)?;
    let target_states = slice_basis(s);
    let target_monogenics = monogenic_basis(s).polynomials();

    let mut reports = Vec::with_capacity(summands.len());
    let mut all_images: Vec<SpinorPolynomial> = Vec::new();
    let mut orthogonality_ok = true;

    for sd in &summands {
        let source_basis = monogenic_basis(sd.source);
        let computed_dim = source_basis.dim() as u64;
        let family = embed_basis(sd.k, sd.l, &source_basis)?;
        if (sd.k, sd.l) != (0, 0) {
            for image in &family.images {
                for m in &target_monogenics {
                    if !fischer_pair(m, image)?.is_zero() {
                        orthogonality_ok = false;
                    }
                }
            }
        }
        all_images.extend(family.images.iter().cloned());
        reports.push(SummandReport {
            i: sd.i,
            j: sd.j,
            k: sd.k,
            l: sd.l,
            source_slice: sd.source,
            weight: sd.weight.to_strings(),
            predicted_dim: sd.predicted_dim,
            computed_dim,
            independent: family.independent,
        });
    }

    let completeness_rank = rank_of_family(&target_states, &all_images) as u64;
    let total_computed: u64 = reports.iter().map(|r| r.computed_dim).sum();
    let complete = completeness_rank == harmonic_dim && total_computed == harmonic_dim;

    Ok(DecompositionReport {
        slice: s,
        harmonic_dim,
        summands: reports,
        completeness_rank,
        orthogonality_ok,
        complete,
    })
}

/// z^alpha ⊗ h_0: a holomorphic solution, annihilated by both D_s and D_t.
pub fn holomorphic_solution(n: usize, alpha: &[u32]) -> SpinorPolynomial {
    assert_eq!(alpha.len(), n, "exponent multi-index length must equal n");
    SpinorPolynomial::unit(n, BasisState::new(alpha.to_vec(), vec![0; n], vec![0; n]))
}

/// Report for the numerical sum identity over a predicted summand family.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SumIdentityReport {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub r: u32,
    /// Sum of the predicted monogenic dimensions over the summand family.
    pub lhs_sum: u64,
    /// dim H_{a,b} · dim S_(r).
    pub harmonic_times_spinor: u64,
    /// Closed form with the consistent factor (a+b+n-1).
    pub rhs_corrected: u64,
    /// Closed form with the factor (a+2n-1) as sometimes quoted; kept as an
    /// exact rational string because it need not be an integer.
    pub rhs_literal: String,
    pub corrected_holds: bool,
    /// True when the (a+2n-1) variant happens to agree with the corrected
    /// one; whenever false the discrepancy is flagged.
    pub literal_matches: bool,
}

impl SumIdentityReport {
    pub fn all_pass(&self) -> bool {
        self.corrected_holds
    }
}

/// Checks that the predicted summand dimensions sum to
/// dim H_{a,b} · dim S_(r) and compares the two closed-form right-hand
/// sides; needs n >= 3 and b <= r.
pub fn sum_dims_identity(n: usize, a: u32, b: u32, r: u32) -> Result<SumIdentityReport> {
    if b > r {
        return Err(Error::InvalidParameter(format!(
            "sum identity stated for b <= r (b = {b}, r = {r})"
        )));
    }
    let summands = predicted_summands(n, a, b, r)?;
    let lhs_sum: u64 = summands.iter().map(|sd| sd.predicted_dim).sum();
    let harmonic_times_spinor = dim_harmonics(n, a, b)? * dim_spinor(n, r);

    let closed_form = |factor: BigInt| -> BigRational {
        let nn = n as u64;
        let (au, bu, ru) = (a as u64, b as u64, r as u64);
        BigRational::from_integer(binomial(ru + nn - 1, nn - 1))
            * BigRational::new(
                factor * gamma_int(au + nn - 1) * gamma_int(bu + nn - 1),
                factorial(nn - 1) * factorial(nn - 2) * gamma_int(au + 1) * gamma_int(bu + 1),
            )
    };
    let corrected = closed_form(BigInt::from(a as u64 + b as u64 + n as u64 - 1));
    let literal = closed_form(BigInt::from(a as u64 + 2 * n as u64 - 1));
    let rhs_corrected = to_u64(&corrected, "corrected sum identity rhs");

    Ok(SumIdentityReport {
        n,
        a,
        b,
        r,
        lhs_sum,
        harmonic_times_spinor,
        rhs_corrected,
        rhs_literal: literal.to_string(),
        corrected_holds: lhs_sum == rhs_corrected && rhs_corrected == harmonic_times_spinor,
        literal_matches: literal == corrected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, alpha: &[u32], beta: &[u32], kappa: &[u32]) -> SpinorPolynomial {
        SpinorPolynomial::unit(
            n,
            BasisState::new(alpha.to_vec(), beta.to_vec(), kappa.to_vec()),
        )
    }

    #[test]
    fn spinor_dimension_examples() {
        assert_eq!(dim_spinor(3, 3), 10);
        assert_eq!(dim_spinor(4, 0), 1);
        assert_eq!(dim_spinor(1, 7), 1);
    }

    #[test]
    fn harmonic_dimension_examples() {
        assert_eq!(dim_harmonics(3, 1, 2).unwrap(), 15);
        assert_eq!(dim_harmonics(5, 0, 0).unwrap(), 1);
        assert_eq!(dim_harmonics(2, 1, 1).unwrap(), 3);
        assert!(dim_harmonics(1, 1, 1).is_err());
    }

    #[test]
    fn monogenic_dimension_examples() {
        assert_eq!(dim_monogenics(3, 1, 1, 1).unwrap(), 6);
        assert_eq!(dim_monogenics(3, 0, 0, 0).unwrap(), 1);
        assert_eq!(dim_monogenics(3, 0, 1, 2).unwrap(), 8);
        assert!(dim_monogenics(3, 0, 1, 0).is_err());
        assert!(dim_monogenics(2, 0, 0, 0).is_err());
    }

    #[test]
    fn monogenic_weights_are_dominant() {
        let w = monogenic_weight(3, 1, 0, 1);
        assert_eq!(w.to_strings(), vec!["1/2", "-1/2", "-3/2"]);
        assert!(w.is_dominant());
        let w = monogenic_weight(4, 2, 1, 3);
        assert_eq!(w.to_strings(), vec!["3/2", "-1/2", "-3/2", "-7/2"]);
        assert!(w.is_dominant());
    }

    #[test]
    fn harmonic_slice_examples() {
        // constants are harmonic: full slice
        let b = harmonic_slice_basis(SliceIndex::new(3, 0, 0, 2));
        assert_eq!(
            b.dim() as u64,
            crate::spinor::slice_dim(SliceIndex::new(3, 0, 0, 2))
        );

        // linear z-monomials are harmonic
        let b = harmonic_slice_basis(SliceIndex::new(3, 1, 0, 0));
        assert_eq!(b.dim(), 3);
    }

    #[test]
    fn monogenic_kernel_examples() {
        assert_eq!(monogenic_basis(SliceIndex::new(3, 1, 1, 1)).dim(), 6);
        assert_eq!(monogenic_basis(SliceIndex::new(3, 0, 1, 0)).dim(), 0);

        // pure z-monomials of degree 2 are monogenic
        let basis = monogenic_basis(SliceIndex::new(3, 2, 0, 0));
        assert_eq!(basis.dim(), 6);
        assert!(basis.contains(&holomorphic_solution(3, &[2, 0, 0])));
        assert!(basis.contains(&holomorphic_solution(3, &[1, 1, 0])));
    }

    #[test]
    fn hwv_examples() {
        assert_eq!(
            hwv(3, 1, 0, 1).unwrap(),
            unit(3, &[1, 0, 0], &[0, 0, 0], &[0, 0, 1])
        );
        let w = hwv(3, 0, 1, 2).unwrap();
        let expected = &unit(3, &[0, 0, 0], &[0, 1, 0], &[0, 0, 2])
            - &unit(3, &[0, 0, 0], &[0, 0, 1], &[0, 1, 1]);
        assert_eq!(w, expected);
        assert_eq!(hwv(3, 0, 0, 0).unwrap(), unit(3, &[0; 3], &[0; 3], &[0; 3]));
        assert!(hwv(3, 0, 2, 1).is_err());
        assert!(hwv(2, 0, 0, 0).is_err());
    }

    #[test]
    fn hwv_verification_examples() {
        let rep = verify_hwv(3, 1, 0, 1).unwrap();
        assert!(
            rep.all_pass(),
            "failures: {:?}",
            rep.checks.failed().collect::<Vec<_>>()
        );
        assert_eq!(rep.weight, vec!["1/2", "-1/2", "-3/2"]);

        let rep = verify_hwv(3, 0, 1, 2).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.weight, vec!["-1/2", "-3/2", "-5/2"]);

        // pure spinor case: last eigenvalue is -(r + 1/2)
        let rep = verify_hwv(3, 0, 0, 3).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.weight, vec!["-1/2", "-1/2", "-7/2"]);
    }

    #[test]
    fn hwv_lies_in_monogenic_kernel() {
        for (a, b, r) in [(1, 0, 1), (0, 1, 2), (1, 1, 1), (2, 1, 2)] {
            let basis = monogenic_basis(SliceIndex::new(3, a, b, r));
            assert!(
                basis.contains(&hwv(3, a, b, r).unwrap()),
                "hwv({a},{b},{r}) outside kernel"
            );
        }
    }

    #[test]
    fn xhat_example_and_grading() {
        // X̂_z(1 ⊗ h_{(0,0,1)}) = 2i·zb_3 ⊗ h_0 for n = 3
        let n = 3;
        let u = unit(n, &[0; 3], &[0; 3], &[0, 0, 1]);
        let got = embed_xhat(&u).unwrap();
        let expected =
            unit(n, &[0; 3], &[0, 0, 1], &[0; 3]).scale(&GaussianRational::i().scale(&rat(2, 1)));
        assert_eq!(got, expected);

        // X̂_z† (1 ⊗ h_0) lands in slice (1, 0, 1) and stays harmonic
        let v = embed_xhat_dagger(&unit(n, &[0; 3], &[0; 3], &[0; 3])).unwrap();
        assert_eq!(v.grade().into_iter().collect::<Vec<_>>(), vec![(1, 0, 1)]);
        assert!(is_harmonic(&v));
    }

    #[test]
    fn xhat_rejects_non_harmonic_input() {
        // z_1 zb_1 ⊗ h_0 is not harmonic
        let u = unit(3, &[1, 0, 0], &[1, 0, 0], &[0; 3]);
        assert!(!is_harmonic(&u));
        assert_eq!(embed_xhat(&u), Err(Error::NotHarmonic));
        assert_eq!(embed_xhat_dagger(&u), Err(Error::NotHarmonic));
    }

    #[test]
    fn identity_embedding_and_span_example() {
        let source = monogenic_basis(SliceIndex::new(3, 0, 0, 1));
        assert_eq!(source.dim(), 3);

        let same = embed_basis(0, 0, &source).unwrap();
        assert!(same.independent);
        assert_eq!(same.images, source.polynomials());

        // I_{1,0} M_{0,0}^{(1)} spans the whole harmonic slice (0, 1, 0)
        let embedded = embed_basis(1, 0, &source).unwrap();
        assert!(embedded.independent);
        let target = harmonic_slice_basis(SliceIndex::new(3, 0, 1, 0));
        assert_eq!(target.dim(), 3);
        for image in &embedded.images {
            assert_eq!(
                image.grade().into_iter().collect::<Vec<_>>(),
                vec![(0, 1, 0)]
            );
            assert!(target.contains(image));
        }
    }

    #[test]
    fn predicted_summands_h123() {
        let summands = predicted_summands(3, 1, 2, 3).unwrap();
        assert_eq!(summands.len(), 6);
        type Row = (u32, u32, (u32, u32, u32), u64);
        let got: Vec<Row> = summands
            .iter()
            .map(|s| {
                (
                    s.j,
                    s.i,
                    (s.source.a, s.source.b, s.source.r),
                    s.predicted_dim,
                )
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (0, 0, (1, 0, 5), 48),
                (0, 1, (1, 1, 4), 42),
                (0, 2, (1, 2, 3), 24),
                (1, 0, (0, 0, 4), 15),
                (1, 1, (0, 1, 3), 15),
                (1, 2, (0, 2, 2), 6),
            ]
        );
        let weights: Vec<Vec<String>> = summands.iter().map(|s| s.weight.to_strings()).collect();
        assert_eq!(
            weights,
            vec![
                vec!["1/2", "-1/2", "-11/2"],
                vec!["1/2", "-3/2", "-9/2"],
                vec!["1/2", "-5/2", "-7/2"],
                vec!["-1/2", "-1/2", "-9/2"],
                vec!["-1/2", "-3/2", "-7/2"],
                vec!["-1/2", "-5/2", "-5/2"],
            ]
        );
    }

    #[test]
    fn predicted_summand_counts() {
        // a, b >= r gives the full triangular count (r+1)(r+2)/2
        assert_eq!(predicted_summands(3, 2, 2, 1).unwrap().len(), 3);
        assert_eq!(predicted_summands(3, 3, 3, 2).unwrap().len(), 6);
        assert_eq!(predicted_summands(3, 0, 0, 0).unwrap().len(), 1);
    }

    #[test]
    fn sum_identity_examples() {
        let rep = sum_dims_identity(3, 1, 2, 3).unwrap();
        assert!(rep.corrected_holds);
        assert_eq!(rep.lhs_sum, 150);
        assert_eq!(rep.harmonic_times_spinor, 150);
        assert!(
            !rep.literal_matches,
            "b = 2 differs from n = 3, so the variants must differ"
        );

        let rep = sum_dims_identity(3, 0, 0, 0).unwrap();
        assert!(rep.corrected_holds);
        assert_eq!(rep.lhs_sum, 1);

        let rep = sum_dims_identity(4, 1, 1, 2).unwrap();
        assert!(rep.corrected_holds);
    }

    #[test]
    fn decompose_small_slices() {
        // single summand embedded by I_{1,0}; the slice itself holds no
        // monogenics
        let report = decompose(SliceIndex::new(3, 0, 1, 0)).unwrap();
        assert!(report.all_ok(), "report: {report:?}");
        assert_eq!(report.summands.len(), 1);
        assert_eq!(report.summands[0].k, 1);
        assert_eq!(report.summands[0].l, 0);
        assert_eq!(report.harmonic_dim, 3);

        // the trivial decomposition: the slice is its own kernel
        let report = decompose(SliceIndex::new(3, 0, 0, 2)).unwrap();
        assert!(report.all_ok());
        assert_eq!(report.summands.len(), 1);
        assert_eq!(report.harmonic_dim, 6);
        assert_eq!(report.completeness_rank, 6);
    }

    #[test]
    fn holomorphic_solutions_are_monogenic() {
        let n = 3;
        let ds = catalog::ds(n);
        let dt = catalog::dt(n);
        for alpha in [[2, 0, 0], [1, 1, 0], [0, 1, 2]] {
            let f = holomorphic_solution(n, &alpha);
            assert!(apply(&ds, &f).unwrap().is_zero());
            assert!(apply(&dt, &f).unwrap().is_zero());
        }
    }
}
