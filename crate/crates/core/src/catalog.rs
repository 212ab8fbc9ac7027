//! Catalog of the named operators of Hermitian symplectic Clifford analysis
//! on R^2n, together with the verification routines for the algebraic
//! relations between them.
//!
//! Internally everything lives in complex coordinates (z_j, zb_j) plus the
//! spinor variables q_j. Operators that are classically written in the real
//! coordinates (x_j, y_j) are built from the fixed substitution
//!
//! ```text
//! x_j = (z_j + zb_j)/2       dx_j = dz_j + dzb_j
//! y_j = (i/2)(zb_j - z_j)    dy_j = i(dz_j - dzb_j)
//! ```
//!
//! so the bidegree grading stays monomial-diagonal.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::sparse::{sv_add_scaled, sv_get, sv_leading, SparseVec};
use crate::weyl::{Generator, WeylOperator};

/// su(1,2) basis labels in the fixed order H1, H2, X1, X2, X3, Y1, Y2, Y3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Su12Basis {
    H1,
    H2,
    X1,
    X2,
    X3,
    Y1,
    Y2,
    Y3,
}

pub const SU12_NAMES: [&str; 8] = ["H1", "H2", "X1", "X2", "X3", "Y1", "Y2", "Y3"];

/// Names for every cataloged operator. Indexed families carry 1-based
/// indices whose admissible range depends on the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorName {
    /// Symplectic Dirac operator D_s.
    Ds,
    /// Twisted symplectic Dirac operator D_t.
    Dt,
    /// Fischer dual X_s of D_s.
    Xs,
    /// Fischer dual X_t of D_t.
    Xt,
    /// The operator mixing the rotation in each (x_j, y_j) plane with the
    /// spinor oscillator, needed to close the algebra of D_s, D_t, X_s, X_t.
    BigO,
    /// Laplacian on R^2n.
    Delta,
    /// Multiplication by r^2 = sum |z_j|^2.
    Rsq,
    /// Euler operator (total homogeneity degree).
    Euler,
    /// Symplectic Dolbeault operator D_z = (D_s + iD_t)/2.
    Dz,
    /// Symplectic Dolbeault operator D_z† = (D_s - iD_t)/2.
    DzDag,
    /// Dual Dolbeault operator X_z = (X_s + iX_t)/2.
    Xz,
    /// Dual Dolbeault operator X_z† = (X_s - iX_t)/2.
    XzDag,
    /// Projected raising operator (E+n-2)X_z + (i/2)r²D_z.
    XhatZ,
    /// Projected raising operator (E+n-2)X_z† - (i/2)r²D_z†.
    XhatZDag,
    /// First sp(2n) realisation, gl(n) block; any 1 <= j,k <= n.
    SpX(usize, usize),
    /// First sp(2n) realisation, symmetric block; 1 <= j <= k <= n.
    SpY(usize, usize),
    /// First sp(2n) realisation, symmetric block; 1 <= j <= k <= n.
    SpZ(usize, usize),
    /// Second sp(2n) realisation, gl(n) block; any 1 <= j,k <= n.
    SpXt(usize, usize),
    /// Second sp(2n) realisation, symmetric block; 1 <= j <= k <= n.
    SpYt(usize, usize),
    /// Second sp(2n) realisation, symmetric block; 1 <= j <= k <= n.
    SpZt(usize, usize),
    /// u(n) realisation, off-diagonal part A_jk; 1 <= j < k <= n.
    UnA(usize, usize),
    /// u(n) realisation, diagonal part B_jj; 1 <= j <= n.
    UnB(usize),
    /// u(n) realisation, off-diagonal part C_jk; 1 <= j < k <= n.
    UnC(usize, usize),
    /// Cartan element H_j = iB_jj; 1 <= j <= n.
    CartanH(usize),
    /// Positive root operator C_jk + iA_jk; 1 <= j < k <= n.
    PosRoot(usize, usize),
    /// Image of an su(1,2) basis element under the operator realisation.
    Su12(Su12Basis),
}

fn gen(n: usize, kind: Generator, j: usize) -> WeylOperator {
    WeylOperator::generator(n, kind, j)
}

fn half() -> GaussianRational {
    GaussianRational::from_ratio(1, 2)
}

fn half_i() -> GaussianRational {
    GaussianRational::new(Rational::zero(), crate::arith::rat(1, 2))
}

fn i_unit() -> GaussianRational {
    GaussianRational::i()
}

/// Multiplication by x_j = (z_j + zb_j)/2.
fn x_op(n: usize, j: usize) -> WeylOperator {
    (&gen(n, Generator::Z, j) + &gen(n, Generator::Zb, j)).scale(&half())
}

/// Multiplication by y_j = (i/2)(zb_j - z_j).
fn y_op(n: usize, j: usize) -> WeylOperator {
    (&gen(n, Generator::Zb, j) - &gen(n, Generator::Z, j)).scale(&half_i())
}

/// dx_j = dz_j + dzb_j.
fn dx_op(n: usize, j: usize) -> WeylOperator {
    &gen(n, Generator::Dz, j) + &gen(n, Generator::Dzb, j)
}

/// dy_j = i(dz_j - dzb_j).
fn dy_op(n: usize, j: usize) -> WeylOperator {
    (&gen(n, Generator::Dz, j) - &gen(n, Generator::Dzb, j)).scale(&i_unit())
}

fn q_op(n: usize, j: usize) -> WeylOperator {
    gen(n, Generator::Q, j)
}

fn dq_op(n: usize, j: usize) -> WeylOperator {
    gen(n, Generator::Dq, j)
}

fn sum_over(n: usize, f: impl Fn(usize) -> WeylOperator) -> WeylOperator {
    let mut acc = WeylOperator::zero(n);
    for j in 1..=n {
        acc = &acc + &f(j);
    }
    acc
}

/// D_s = sum_j (i q_j dy_j - dq_j dx_j).
pub fn ds(n: usize) -> WeylOperator {
    sum_over(n, |j| {
        &(&q_op(n, j) * &dy_op(n, j)).scale(&i_unit()) - &(&dq_op(n, j) * &dx_op(n, j))
    })
}

/// D_t = sum_j (i q_j dx_j + dy_j dq_j).
pub fn dt(n: usize) -> WeylOperator {
    sum_over(n, |j| {
        &(&q_op(n, j) * &dx_op(n, j)).scale(&i_unit()) + &(&dy_op(n, j) * &dq_op(n, j))
    })
}

/// X_s = sum_j (y_j dq_j + i q_j x_j).
pub fn xs(n: usize) -> WeylOperator {
    sum_over(n, |j| {
        &(&y_op(n, j) * &dq_op(n, j)) + &(&q_op(n, j) * &x_op(n, j)).scale(&i_unit())
    })
}

/// X_t = sum_j (x_j dq_j - i y_j q_j).
pub fn xt(n: usize) -> WeylOperator {
    sum_over(n, |j| {
        &(&x_op(n, j) * &dq_op(n, j)) - &(&y_op(n, j) * &q_op(n, j)).scale(&i_unit())
    })
}

/// The closing operator sum_j (i(x_j dy_j - y_j dx_j) + dq_j² - q_j²).
pub fn big_o(n: usize) -> WeylOperator {
    sum_over(n, |j| {
        let rotation =
            (&(&x_op(n, j) * &dy_op(n, j)) - &(&y_op(n, j) * &dx_op(n, j))).scale(&i_unit());
        let oscillator = &dq_op(n, j).pow(2) - &q_op(n, j).pow(2);
        &rotation + &oscillator
    })
}

/// Laplacian sum_j (dx_j² + dy_j²) = 4 sum_j dz_j dzb_j.
pub fn delta(n: usize) -> WeylOperator {
    sum_over(n, |j| &dx_op(n, j).pow(2) + &dy_op(n, j).pow(2))
}

/// r² = sum_j (x_j² + y_j²) = sum_j z_j zb_j.
pub fn rsq(n: usize) -> WeylOperator {
    sum_over(n, |j| &x_op(n, j).pow(2) + &y_op(n, j).pow(2))
}

/// Euler operator sum_j (z_j dz_j + zb_j dzb_j).
pub fn euler(n: usize) -> WeylOperator {
    sum_over(n, |j| {
        &(&gen(n, Generator::Z, j) * &gen(n, Generator::Dz, j))
            + &(&gen(n, Generator::Zb, j) * &gen(n, Generator::Dzb, j))
    })
}

/// D_z = (D_s + iD_t)/2.
pub fn dz(n: usize) -> WeylOperator {
    (&ds(n) + &dt(n).scale(&i_unit())).scale(&half())
}

/// D_z† = (D_s - iD_t)/2.
pub fn dz_dag(n: usize) -> WeylOperator {
    (&ds(n) - &dt(n).scale(&i_unit())).scale(&half())
}

/// X_z = (X_s + iX_t)/2.
pub fn xz(n: usize) -> WeylOperator {
    (&xs(n) + &xt(n).scale(&i_unit())).scale(&half())
}

/// X_z† = (X_s - iX_t)/2.
pub fn xz_dag(n: usize) -> WeylOperator {
    (&xs(n) - &xt(n).scale(&i_unit())).scale(&half())
}

fn euler_shifted(n: usize, shift: i64) -> WeylOperator {
    &euler(n) + &WeylOperator::constant(n, GaussianRational::from_int(shift))
}

/// Projected raising operator (E + n - 2)X_z + (i/2) r² D_z.
///
/// The extremal projector truncates to these two terms on X_z; applied to a
/// harmonic argument the result is again harmonic.
pub fn xhat_z(n: usize) -> WeylOperator {
    let first = &euler_shifted(n, n as i64 - 2) * &xz(n);
    let second = (&rsq(n) * &dz(n)).scale(&half_i());
    &first + &second
}

/// Projected raising operator (E + n - 2)X_z† - (i/2) r² D_z†.
pub fn xhat_z_dag(n: usize) -> WeylOperator {
    let first = &euler_shifted(n, n as i64 - 2) * &xz_dag(n);
    let second = (&rsq(n) * &dz_dag(n)).scale(&half_i());
    &first - &second
}

fn check_indices(n: usize, j: usize, k: usize, family: &str, ordered: bool) -> Result<()> {
    let ok = j >= 1 && k >= 1 && j <= n && k <= n && (!ordered || j <= k);
    if ok {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(format!(
            "{family}({j},{k}) for n = {n}"
        )))
    }
}

fn check_strict(n: usize, j: usize, k: usize, family: &str) -> Result<()> {
    if j >= 1 && j < k && k <= n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(format!(
            "{family}({j},{k}) requires 1 <= j < k <= {n}"
        )))
    }
}

/// First realisation X_jk = x_j dx_k - y_k dy_j - (q_k dq_j + δ_jk/2).
pub fn sp_x(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    check_indices(n, j, k, "SpX", false)?;
    let mut op = &(&x_op(n, j) * &dx_op(n, k)) - &(&y_op(n, k) * &dy_op(n, j));
    op = &op - &(&q_op(n, k) * &dq_op(n, j));
    if j == k {
        op = &op - &WeylOperator::constant(n, GaussianRational::from_ratio(1, 2));
    }
    Ok(op)
}

/// First realisation Y_jk (j < k) and Y_jj.
pub fn sp_y(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    check_indices(n, j, k, "SpY", true)?;
    if j == k {
        Ok(&(&x_op(n, j) * &dy_op(n, j)) + &dq_op(n, j).pow(2).scale(&half_i()))
    } else {
        let pos = &(&x_op(n, j) * &dy_op(n, k)) + &(&x_op(n, k) * &dy_op(n, j));
        Ok(&pos + &(&dq_op(n, j) * &dq_op(n, k)).scale(&i_unit()))
    }
}

/// First realisation Z_jk (j < k) and Z_jj.
pub fn sp_z(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    check_indices(n, j, k, "SpZ", true)?;
    if j == k {
        Ok(&(&y_op(n, j) * &dx_op(n, j)) + &q_op(n, j).pow(2).scale(&half_i()))
    } else {
        let pos = &(&y_op(n, j) * &dx_op(n, k)) + &(&y_op(n, k) * &dx_op(n, j));
        Ok(&pos + &(&q_op(n, j) * &q_op(n, k)).scale(&i_unit()))
    }
}

/// Second realisation X̃_jk = x_j dx_k - y_k dy_j + q_j dq_k + δ_jk/2.
///
/// The spinor term carries (j, k) in this order: with q_k dq_j instead the
/// bracket [D_t, X̃_jk] comes out as iL_j dz_k + ... rather than zero, and
/// D_t-invariance of the realisation is the defining property.
pub fn sp_xt(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    check_indices(n, j, k, "SpXt", false)?;
    let mut op = &(&x_op(n, j) * &dx_op(n, k)) - &(&y_op(n, k) * &dy_op(n, j));
    op = &op + &(&q_op(n, j) * &dq_op(n, k));
    if j == k {
        op = &op + &WeylOperator::constant(n, GaussianRational::from_ratio(1, 2));
    }
    Ok(op)
}

/// Second realisation Ỹ_jk (j < k) and Ỹ_jj.
pub fn sp_yt(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    check_indices(n, j, k, "SpYt", true)?;
    if j == k {
        Ok(&(&x_op(n, j) * &dy_op(n, j)) - &q_op(n, j).pow(2).scale(&half_i()))
    } else {
        let pos = &(&x_op(n, j) * &dy_op(n, k)) + &(&x_op(n, k) * &dy_op(n, j));
        Ok(&pos - &(&q_op(n, j) * &q_op(n, k)).scale(&i_unit()))
    }
}

/// Second realisation Z̃_jk (j < k) and Z̃_jj.
pub fn sp_zt(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    check_indices(n, j, k, "SpZt", true)?;
    if j == k {
        Ok(&(&y_op(n, j) * &dx_op(n, j)) - &dq_op(n, j).pow(2).scale(&half_i()))
    } else {
        let pos = &(&y_op(n, j) * &dx_op(n, k)) + &(&y_op(n, k) * &dx_op(n, j));
        Ok(&pos - &(&dq_op(n, j) * &dq_op(n, k)).scale(&i_unit()))
    }
}

/// u(n) generator A_jk, 1 <= j < k <= n.
pub fn un_a(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    check_strict(n, j, k, "UnA")?;
    let pos = &(&(&y_op(n, j) * &dx_op(n, k)) - &(&x_op(n, k) * &dy_op(n, j)))
        + &(&(&y_op(n, k) * &dx_op(n, j)) - &(&x_op(n, j) * &dy_op(n, k)));
    let spin = (&(&q_op(n, j) * &q_op(n, k)) - &(&dq_op(n, j) * &dq_op(n, k))).scale(&i_unit());
    Ok(&pos + &spin)
}

/// u(n) generator B_jj.
pub fn un_b(n: usize, j: usize) -> Result<WeylOperator> {
    if j < 1 || j > n {
        return Err(Error::IndexOutOfRange(format!("UnB({j}) for n = {n}")));
    }
    let pos = &(&y_op(n, j) * &dx_op(n, j)) - &(&x_op(n, j) * &dy_op(n, j));
    let spin = (&q_op(n, j).pow(2) - &dq_op(n, j).pow(2)).scale(&half_i());
    Ok(&pos + &spin)
}

/// u(n) generator C_jk, 1 <= j < k <= n.
pub fn un_c(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    check_strict(n, j, k, "UnC")?;
    let pos = &(&(&x_op(n, j) * &dx_op(n, k)) - &(&x_op(n, k) * &dx_op(n, j)))
        + &(&(&y_op(n, j) * &dy_op(n, k)) - &(&y_op(n, k) * &dy_op(n, j)));
    let spin = &(&q_op(n, j) * &dq_op(n, k)) - &(&q_op(n, k) * &dq_op(n, j));
    Ok(&pos + &spin)
}

/// Cartan element H_j = iB_jj; on the Hermite model every weight below
/// carries the -1/2 vacuum offset.
pub fn cartan_h(n: usize, j: usize) -> Result<WeylOperator> {
    Ok(un_b(n, j)?.scale(&i_unit()))
}

/// Positive root operator C_jk + iA_jk, 1 <= j < k <= n.
pub fn pos_root(n: usize, j: usize, k: usize) -> Result<WeylOperator> {
    Ok(&un_c(n, j, k)? + &un_a(n, j, k)?.scale(&i_unit()))
}

/// The eight operator images of the su(1,2) basis, in the order of
/// [`SU12_NAMES`]: (E+n, i𝒪, iX_t, iX_s, -(i/2)r², -D_t, D_s, (i/2)Δ).
pub fn su12_images(n: usize) -> [WeylOperator; 8] {
    [
        euler_shifted(n, n as i64),
        big_o(n).scale(&i_unit()),
        xt(n).scale(&i_unit()),
        xs(n).scale(&i_unit()),
        rsq(n).scale(&-half_i()),
        dt(n).scale(&-GaussianRational::one()),
        ds(n),
        delta(n).scale(&half_i()),
    ]
}

/// Catalog lookup by name.
pub fn catalog(name: &OperatorName, n: usize) -> Result<WeylOperator> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".to_string()));
    }
    match name {
        OperatorName::Ds => Ok(ds(n)),
        OperatorName::Dt => Ok(dt(n)),
        OperatorName::Xs => Ok(xs(n)),
        OperatorName::Xt => Ok(xt(n)),
        OperatorName::BigO => Ok(big_o(n)),
        OperatorName::Delta => Ok(delta(n)),
        OperatorName::Rsq => Ok(rsq(n)),
        OperatorName::Euler => Ok(euler(n)),
        OperatorName::Dz => Ok(dz(n)),
        OperatorName::DzDag => Ok(dz_dag(n)),
        OperatorName::Xz => Ok(xz(n)),
        OperatorName::XzDag => Ok(xz_dag(n)),
        OperatorName::XhatZ => Ok(xhat_z(n)),
        OperatorName::XhatZDag => Ok(xhat_z_dag(n)),
        OperatorName::SpX(j, k) => sp_x(n, *j, *k),
        OperatorName::SpY(j, k) => sp_y(n, *j, *k),
        OperatorName::SpZ(j, k) => sp_z(n, *j, *k),
        OperatorName::SpXt(j, k) => sp_xt(n, *j, *k),
        OperatorName::SpYt(j, k) => sp_yt(n, *j, *k),
        OperatorName::SpZt(j, k) => sp_zt(n, *j, *k),
        OperatorName::UnA(j, k) => un_a(n, *j, *k),
        OperatorName::UnB(j) => un_b(n, *j),
        OperatorName::UnC(j, k) => un_c(n, *j, *k),
        OperatorName::CartanH(j) => cartan_h(n, *j),
        OperatorName::PosRoot(j, k) => pos_root(n, *j, *k),
        OperatorName::Su12(b) => {
            let images = su12_images(n);
            Ok(images[*b as usize].clone())
        }
    }
}

/// All u(n) generators with display labels: A_jk (j<k), B_jj, C_jk (j<k).
pub fn un_generators(n: usize) -> Vec<(String, WeylOperator)> {
    let mut out = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n {
            out.push((format!("A{j}{k}"), un_a(n, j, k).unwrap()));
        }
    }
    for j in 1..=n {
        out.push((format!("B{j}{j}"), un_b(n, j).unwrap()));
    }
    for j in 1..=n {
        for k in j + 1..=n {
            out.push((format!("C{j}{k}"), un_c(n, j, k).unwrap()));
        }
    }
    out
}

/// First sp(2n) realisation: the full gl(n) block X_jk plus the symmetric
/// blocks Y_jk, Z_jk (j <= k); n(2n+1) generators in total.
pub fn sp_first_generators(n: usize) -> Vec<(String, WeylOperator)> {
    let mut out = Vec::new();
    for j in 1..=n {
        for k in 1..=n {
            out.push((format!("X{j}{k}"), sp_x(n, j, k).unwrap()));
        }
    }
    for j in 1..=n {
        for k in j..=n {
            out.push((format!("Y{j}{k}"), sp_y(n, j, k).unwrap()));
        }
    }
    for j in 1..=n {
        for k in j..=n {
            out.push((format!("Z{j}{k}"), sp_z(n, j, k).unwrap()));
        }
    }
    out
}

/// Second sp(2n) realisation (the tilded operators).
pub fn sp_second_generators(n: usize) -> Vec<(String, WeylOperator)> {
    let mut out = Vec::new();
    for j in 1..=n {
        for k in 1..=n {
            out.push((format!("Xt{j}{k}"), sp_xt(n, j, k).unwrap()));
        }
    }
    for j in 1..=n {
        for k in j..=n {
            out.push((format!("Yt{j}{k}"), sp_yt(n, j, k).unwrap()));
        }
    }
    for j in 1..=n {
        for k in j..=n {
            out.push((format!("Zt{j}{k}"), sp_zt(n, j, k).unwrap()));
        }
    }
    out
}

/// Upper-triangle su(1,2) bracket table: entry (i, j) with i < j is the
/// bracket [b_i, b_j] as `coeff · b_index`, `None` meaning zero.
fn su12_bracket_upper(i: usize, j: usize) -> Option<(i64, usize)> {
    use self::idx::*;
    match (i, j) {
        (H1, H2) => None,
        (H1, X1) => Some((1, X1)),
        (H1, X2) => Some((1, X2)),
        (H1, X3) => Some((2, X3)),
        (H1, Y1) => Some((-1, Y1)),
        (H1, Y2) => Some((-1, Y2)),
        (H1, Y3) => Some((-2, Y3)),
        (H2, X1) => Some((3, X2)),
        (H2, X2) => Some((-3, X1)),
        (H2, X3) => None,
        (H2, Y1) => Some((-3, Y2)),
        (H2, Y2) => Some((3, Y1)),
        (H2, Y3) => None,
        (X1, X2) => Some((2, X3)),
        (X1, X3) => None,
        (X1, Y1) => Some((1, H1)),
        (X1, Y2) => Some((1, H2)),
        (X1, Y3) => Some((-1, Y2)),
        (X2, X3) => None,
        (X2, Y1) => Some((1, H2)),
        (X2, Y2) => Some((-1, H1)),
        (X2, Y3) => Some((-1, Y1)),
        (X3, Y1) => Some((-1, X2)),
        (X3, Y2) => Some((-1, X1)),
        (X3, Y3) => Some((-1, H1)),
        (Y1, Y2) => Some((-2, Y3)),
        (Y1, Y3) => None,
        (Y2, Y3) => None,
        _ => unreachable!("not an upper-triangle pair: ({i}, {j})"),
    }
}

mod idx {
    pub const H1: usize = 0;
    pub const H2: usize = 1;
    pub const X1: usize = 2;
    pub const X2: usize = 3;
    pub const X3: usize = 4;
    pub const Y1: usize = 5;
    pub const Y2: usize = 6;
    pub const Y3: usize = 7;
}

/// Checks all 28 unordered bracket pairs of the su(1,2) operator images
/// against the matrix bracket table, as exact operator identities.
pub fn verify_su12_table(n: usize) -> CheckReport {
    let images = su12_images(n);
    let mut report = CheckReport::new(format!("su(1,2) bracket table, n = {n}"));
    for i in 0..8 {
        for j in i + 1..8 {
            let bracket = images[i].commutator(&images[j]);
            let (expected, label) = match su12_bracket_upper(i, j) {
                None => (WeylOperator::zero(n), "0".to_string()),
                Some((c, k)) => {
                    let coeff = GaussianRational::from_int(c);
                    let label = match c {
                        1 => SU12_NAMES[k].to_string(),
                        -1 => format!("-{}", SU12_NAMES[k]),
                        c => format!("{c}{}", SU12_NAMES[k]),
                    };
                    (images[k].scale(&coeff), label)
                }
            };
            report.push(
                format!("[{}, {}] = {}", SU12_NAMES[i], SU12_NAMES[j], label),
                bracket == expected,
            );
        }
    }
    report
}

/// Exact structure constants of a closed generator list: `constants[(i, j)]`
/// holds the nonzero coefficients c with `[g_i, g_j] = sum_k c_k g_k`.
#[derive(Clone, Debug, Serialize)]
pub struct StructureConstants {
    pub generators: usize,
    pub constants: Vec<StructureEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: GaussianRational,
}

/// Outcome of a Lie closure check.
#[derive(Clone, Debug)]
pub enum ClosureOutcome {
    Closed(StructureConstants),
    /// The first pair (i, j) whose commutator falls outside the span.
    NotClosed {
        i: usize,
        j: usize,
    },
}

impl ClosureOutcome {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosureOutcome::Closed(_))
    }
}

/// Incremental Gaussian basis for the span of a set of operators, with
/// combination tracking so members can be expressed in the original
/// generators exactly.
struct SpanSolver {
    index: std::collections::BTreeMap<crate::weyl::WeylMonomial, usize>,
    rows: Vec<(SparseVec, Vec<GaussianRational>)>,
    count: usize,
}

impl SpanSolver {
    fn new(gens: &[WeylOperator]) -> Self {
        let mut index = std::collections::BTreeMap::new();
        for g in gens {
            for m in g.terms().keys() {
                let next = index.len();
                index.entry(m.clone()).or_insert(next);
            }
        }
        let mut solver = SpanSolver {
            index,
            rows: Vec::new(),
            count: gens.len(),
        };
        for (i, g) in gens.iter().enumerate() {
            let vec = solver
                .to_sparse(g)
                .expect("generator monomials are indexed");
            let mut tag = vec![GaussianRational::zero(); gens.len()];
            tag[i] = GaussianRational::one();
            solver.insert(vec, tag);
        }
        solver
    }

    fn to_sparse(&self, op: &WeylOperator) -> Option<SparseVec> {
        let mut entries: Vec<(usize, GaussianRational)> = Vec::with_capacity(op.num_terms());
        for (m, c) in op.terms() {
            entries.push((*self.index.get(m)?, c.clone()));
        }
        entries.sort_by_key(|e| e.0);
        Some(entries)
    }

    fn reduce(
        &self,
        mut vec: SparseVec,
        mut tag: Vec<GaussianRational>,
    ) -> (SparseVec, Vec<GaussianRational>) {
        for (row, row_tag) in &self.rows {
            let pivot = sv_leading(row).expect("stored rows are nonzero");
            if let Some(c) = sv_get(&vec, pivot) {
                let factor = -c.clone();
                vec = sv_add_scaled(&vec, row, &factor);
                for (t, rt) in tag.iter_mut().zip(row_tag) {
                    *t += &(&factor * rt);
                }
            }
        }
        (vec, tag)
    }

    fn insert(&mut self, vec: SparseVec, tag: Vec<GaussianRational>) {
        let (vec, tag) = self.reduce(vec, tag);
        if vec.is_empty() {
            return; // dependent generator
        }
        let lead_inv = vec[0].1.invert().expect("leading entry nonzero");
        let vec = crate::sparse::sv_scale(&vec, &lead_inv);
        let tag = tag.iter().map(|t| t * &lead_inv).collect();
        let pos = self
            .rows
            .partition_point(|(r, _)| sv_leading(r).unwrap() < sv_leading(&vec).unwrap());
        self.rows.insert(pos, (vec, tag));
    }

    /// Expresses `op` as a linear combination of the generators, if possible.
    fn express(&self, op: &WeylOperator) -> Option<Vec<GaussianRational>> {
        let vec = self.to_sparse(op)?;
        let (vec, tag) = self.reduce(vec, vec![GaussianRational::zero(); self.count]);
        if vec.is_empty() {
            Some(tag.iter().map(|t| -t).collect())
        } else {
            None
        }
    }
}

/// For every pair (i, j) solves `[g_i, g_j] = sum_k c_ij^k g_k` exactly.
/// Returns the structure constants, or the first pair whose commutator
/// lies outside the span of the generators.
pub fn lie_closure_check(gens: &[WeylOperator]) -> Result<ClosureOutcome> {
    let n = match gens.first() {
        Some(g) => g.n(),
        None => {
            return Err(Error::InvalidParameter(
                "closure check needs at least one generator".to_string(),
            ))
        }
    };
    for g in gens {
        if g.n() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: g.n(),
            });
        }
    }
    let solver = SpanSolver::new(gens);
    let mut constants = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let bracket = gens[i].commutator(&gens[j]);
            if bracket.is_zero() {
                continue;
            }
            match solver.express(&bracket) {
                Some(coeffs) => {
                    for (k, c) in coeffs.into_iter().enumerate() {
                        if !c.is_zero() {
                            constants.push(StructureEntry { i, j, k, c });
                        }
                    }
                }
                None => return Ok(ClosureOutcome::NotClosed { i, j }),
            }
        }
    }
    Ok(ClosureOutcome::Closed(StructureConstants {
        generators: gens.len(),
        constants,
    }))
}

/// Core commutation relations: [D_s, D_t] = -iΔ, [X_s, X_t] = -ir², and the
/// Dolbeault recombinations D_z + D_z† = D_s, -i(D_z - D_z†) = D_t.
pub fn core_relations_report(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("core operator relations, n = {n}"));
    let (ds_op, dt_op) = (ds(n), dt(n));
    let (xs_op, xt_op) = (xs(n), xt(n));
    let minus_i = -GaussianRational::i();

    report.push(
        "[Ds, Dt] = -i·Delta",
        ds_op.commutator(&dt_op) == delta(n).scale(&minus_i),
    );
    report.push(
        "[Xs, Xt] = -i·r^2",
        xs_op.commutator(&xt_op) == rsq(n).scale(&minus_i),
    );
    report.push("Dz + DzDag = Ds", &dz(n) + &dz_dag(n) == ds_op);
    report.push(
        "-i(Dz - DzDag) = Dt",
        (&dz(n) - &dz_dag(n)).scale(&minus_i) == dt_op,
    );
    report.push("Dz = -sum_j (q_j + dq_j) dz_j", dz(n) == explicit_dz(n));
    report
}

/// The expanded Dolbeault form -sum_j L_j dz_j, built directly from
/// generators (no real-coordinate substitution involved).
fn explicit_dz(n: usize) -> WeylOperator {
    let mut acc = WeylOperator::zero(n);
    for j in 1..=n {
        let l = &q_op(n, j) + &dq_op(n, j);
        acc = &acc - &(&l * &gen(n, Generator::Dz, j));
    }
    acc
}

/// Invariance of the Dirac pair: [D_s, g] = [D_t, g] = 0 for all u(n)
/// generators, [D_s, ·] = 0 on the first sp(2n) realisation and
/// [D_t, ·] = 0 on the second.
pub fn invariance_report(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("invariance of (Ds, Dt), n = {n}"));
    let ds_op = ds(n);
    let dt_op = dt(n);
    for (name, g) in un_generators(n) {
        report.push(format!("[Ds, {name}] = 0"), ds_op.commutator(&g).is_zero());
        report.push(format!("[Dt, {name}] = 0"), dt_op.commutator(&g).is_zero());
    }
    for (name, g) in sp_first_generators(n) {
        report.push(format!("[Ds, {name}] = 0"), ds_op.commutator(&g).is_zero());
    }
    for (name, g) in sp_second_generators(n) {
        report.push(format!("[Dt, {name}] = 0"), dt_op.commutator(&g).is_zero());
    }
    report
}

/// Lie closure of the three cataloged realisations.
pub fn closure_report(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("Lie closure, n = {n}"));
    let families: [(&str, Vec<(String, WeylOperator)>); 3] = [
        ("u(n)", un_generators(n)),
        ("sp(2n) first realisation", sp_first_generators(n)),
        ("sp(2n) second realisation", sp_second_generators(n)),
    ];
    for (label, family) in families {
        let ops: Vec<WeylOperator> = family.iter().map(|(_, op)| op.clone()).collect();
        match lie_closure_check(&ops) {
            Ok(ClosureOutcome::Closed(sc)) => report.push_detail(
                format!("{label} closes ({} generators)", ops.len()),
                true,
                format!("{} nonzero structure constants", sc.constants.len()),
            ),
            Ok(ClosureOutcome::NotClosed { i, j }) => report.push_detail(
                format!("{label} closes ({} generators)", ops.len()),
                false,
                format!("[{}, {}] falls outside the span", family[i].0, family[j].0),
            ),
            Err(e) => report.push_detail(format!("{label} closes"), false, e.to_string()),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylMonomial;

    #[test]
    fn dolbeault_identities() {
        for n in 1..=3 {
            let report = core_relations_report(n);
            assert!(
                report.all_pass(),
                "failures: {:?}",
                report.failed().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn dz_matches_explicit_ladder_form() {
        // catalog translation from real coordinates reproduces -sum L_j dz_j
        assert_eq!(dz(3), explicit_dz(3));
    }

    #[test]
    fn dolbeault_is_a_linear_combination_of_the_dirac_pair() {
        // (1/2)·Ds + (i/2)·Dt = Dz through the generic combination API
        let n = 3;
        let combo = WeylOperator::linear_combine(
            &[
                GaussianRational::from_ratio(1, 2),
                GaussianRational::i().scale(&crate::arith::rat(1, 2)),
            ],
            &[ds(n), dt(n)],
        )
        .unwrap();
        assert_eq!(combo, dz(n));
    }

    #[test]
    fn rsq_is_sum_z_zbar() {
        let n = 2;
        let mut expected = WeylOperator::zero(n);
        for j in 1..=n {
            expected = &expected + &(&gen(n, Generator::Z, j) * &gen(n, Generator::Zb, j));
        }
        assert_eq!(rsq(n), expected);
    }

    #[test]
    fn delta_is_four_sum_dz_dzb() {
        let n = 2;
        let mut expected = WeylOperator::zero(n);
        for j in 1..=n {
            expected = &expected + &(&gen(n, Generator::Dz, j) * &gen(n, Generator::Dzb, j));
        }
        assert_eq!(delta(n), expected.scale(&GaussianRational::from_int(4)));
    }

    #[test]
    fn cartan_element_explicit_form() {
        // H_j = (z_j dz_j - zb_j dzb_j) + (dq_j² - q_j²)/2
        let n = 2;
        let j = 1;
        let pos = &(&gen(n, Generator::Z, j) * &gen(n, Generator::Dz, j))
            - &(&gen(n, Generator::Zb, j) * &gen(n, Generator::Dzb, j));
        let spin = (&gen(n, Generator::Dq, j).pow(2) - &gen(n, Generator::Q, j).pow(2))
            .scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(cartan_h(n, j).unwrap(), &pos + &spin);
    }

    #[test]
    fn positive_root_explicit_form() {
        // C_jk + iA_jk = 2(z_j dz_k - zb_k dzb_j) - L_j R_k
        let n = 3;
        let (j, k) = (1, 2);
        let two = GaussianRational::from_int(2);
        let pos = (&(&gen(n, Generator::Z, j) * &gen(n, Generator::Dz, k))
            - &(&gen(n, Generator::Zb, k) * &gen(n, Generator::Dzb, j)))
            .scale(&two);
        let l_j = &gen(n, Generator::Q, j) + &gen(n, Generator::Dq, j);
        let r_k = &gen(n, Generator::Q, k) - &gen(n, Generator::Dq, k);
        let expected = &pos - &(&l_j * &r_k);
        assert_eq!(pos_root(n, j, k).unwrap(), expected);
    }

    #[test]
    fn su12_table_passes_small_n() {
        for n in 1..=2 {
            let report = verify_su12_table(n);
            assert_eq!(report.checks.len(), 28);
            assert!(
                report.all_pass(),
                "failures: {:?}",
                report.failed().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn su12_spot_checks() {
        // [X1, Y1] = H1, [H1, H2] = 0, [X3, Y3] = -H1
        let n = 2;
        let images = su12_images(n);
        assert_eq!(
            images[idx::X1].commutator(&images[idx::Y1]),
            images[idx::H1]
        );
        assert!(images[idx::H1].commutator(&images[idx::H2]).is_zero());
        assert_eq!(
            images[idx::X3].commutator(&images[idx::Y3]),
            images[idx::H1].scale(&GaussianRational::from_int(-1))
        );
    }

    #[test]
    fn closure_of_un_generators() {
        let gens: Vec<WeylOperator> = un_generators(2).into_iter().map(|(_, op)| op).collect();
        assert_eq!(gens.len(), 4);
        let outcome = lie_closure_check(&gens).unwrap();
        assert!(outcome.is_closed());
        if let ClosureOutcome::Closed(sc) = outcome {
            // antisymmetry spot check: constants listed only for i < j
            assert!(sc.constants.iter().all(|e| e.i < e.j));
        }
    }

    #[test]
    fn sp_first_realisation_has_ten_generators_and_closes() {
        let gens: Vec<WeylOperator> = sp_first_generators(2)
            .into_iter()
            .map(|(_, op)| op)
            .collect();
        assert_eq!(gens.len(), 10);
        assert!(lie_closure_check(&gens).unwrap().is_closed());
    }

    #[test]
    fn heisenberg_pair_does_not_close() {
        let n = 1;
        let gens = vec![gen(n, Generator::Z, 1), gen(n, Generator::Dz, 1)];
        match lie_closure_check(&gens).unwrap() {
            ClosureOutcome::NotClosed { i, j } => assert_eq!((i, j), (0, 1)),
            ClosureOutcome::Closed(_) => panic!("identity lies outside the span"),
        }
    }

    #[test]
    fn invariance_holds_for_n2() {
        let report = invariance_report(2);
        assert!(
            report.all_pass(),
            "failures: {:?}",
            report.failed().collect::<Vec<_>>()
        );
    }

    #[test]
    fn catalog_rejects_bad_indices() {
        assert!(catalog(&OperatorName::UnA(2, 2), 3).is_err());
        assert!(catalog(&OperatorName::SpY(2, 1), 3).is_err());
        assert!(catalog(&OperatorName::SpX(1, 4), 3).is_err());
        assert!(catalog(&OperatorName::PosRoot(1, 2), 3).is_ok());
    }

    #[test]
    fn euler_counts_total_degree() {
        let n = 2;
        let e = euler(n);
        let mut m = WeylMonomial::identity(n);
        m.z[0] = 2;
        m.zb[1] = 1;
        let mono = {
            let mut op = WeylOperator::zero(n);
            op.add_term(m, GaussianRational::one());
            op
        };
        // E ∘ z1²zb2 = z1²zb2 (E + 3)
        let composed = e.try_compose(&mono).unwrap();
        let expected = &mono.try_compose(&e).unwrap() + &mono.scale(&GaussianRational::from_int(3));
        assert_eq!(composed, expected);
    }
}
