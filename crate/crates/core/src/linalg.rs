//! Exact sparse linear algebra over the Gaussian rationals: operator
//! matrices on slice bases, reduced row echelon form, nullspaces, ranks and
//! Gram matrices. Everything is deterministic; no pivoting heuristics that
//! depend on value magnitudes.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::sparse::{sv_add_scaled, sv_get, sv_leading, sv_scale, SparseVec};
use crate::spinor::{apply, fischer_pair, BasisState, SpinorPolynomial};
use crate::weyl::WeylOperator;

/// Sparse matrix with exact entries; no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), GaussianRational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::new(k, k);
        for j in 0..k {
            m.set(j, j, GaussianRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), GaussianRational> {
        &self.entries
    }

    pub fn set(&mut self, row: usize, col: usize, v: GaussianRational) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), v);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> GaussianRational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix product; exact.
    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = ExactMatrix::new(self.rows, other.cols);
        // group rhs by row for sparse access
        let mut rhs_rows: BTreeMap<usize, Vec<(usize, &GaussianRational)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            rhs_rows.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), GaussianRational> = BTreeMap::new();
        for (&(r, k), a) in &self.entries {
            if let Some(row) = rhs_rows.get(&k) {
                for &(c, b) in row {
                    let e = acc.entry((r, c)).or_insert_with(GaussianRational::zero);
                    *e += &(a * b);
                }
            }
        }
        for ((r, c), v) in acc {
            out.set(r, c, v);
        }
        Ok(out)
    }

    /// Apply to a dense vector.
    pub fn apply_vec(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        let mut out = vec![GaussianRational::zero(); self.rows];
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] += &(a * &v[c]);
            }
        }
        Ok(out)
    }

    fn to_sparse_rows(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    /// Exact rank by deterministic Gaussian elimination.
    pub fn rank(&self) -> usize {
        rref(self.to_sparse_rows()).0.len()
    }

    /// Reduced-echelon basis of the kernel {v : Mv = 0}. Each returned
    /// vector is verified against the matrix before being handed out.
    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        let (rows, pivots) = rref(self.to_sparse_rows());
        let pivot_set: BTreeMap<usize, usize> = pivots
            .iter()
            .enumerate()
            .map(|(row, &col)| (col, row))
            .collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains_key(c)) {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[free] = GaussianRational::one();
            for (&pc, &row) in &pivot_set {
                if let Some(c) = sv_get(&rows[row], free) {
                    v[pc] = -c;
                }
            }
            let image = self.apply_vec(&v).expect("kernel vector length");
            assert!(
                image.iter().all(|x| x.is_zero()),
                "internal error: kernel vector fails M·v = 0"
            );
            basis.push(v);
        }
        basis
    }

    /// Solves M x = b exactly; `None` when inconsistent. Free variables are
    /// set to zero.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let aug = self.cols;
        let mut rows = self.to_sparse_rows();
        for (r, v) in b.iter().enumerate() {
            if !v.is_zero() {
                rows[r].push((aug, v.clone()));
            }
        }
        let (rows, pivots, leftover) = rref_up_to(rows, self.cols);
        // leftover rows have support only in the augmented column: 0 = b'
        if !leftover.is_empty() {
            return None;
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (row_idx, &pc) in pivots.iter().enumerate() {
            if let Some(c) = sv_get(&rows[row_idx], aug) {
                x[pc] = c.clone();
            }
        }
        Some(x)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixEntryRecord {
    row: usize,
    col: usize,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixRecord {
    rows: usize,
    cols: usize,
    entries: Vec<MatrixEntryRecord>,
}

impl Serialize for ExactMatrix {
    /// Sparse triplet form, entries sorted by (row, col).
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let rec = MatrixRecord {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(&(row, col), v)| MatrixEntryRecord {
                    row,
                    col,
                    value: v.to_string(),
                })
                .collect(),
        };
        rec.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = MatrixRecord::deserialize(deserializer)?;
        let mut m = ExactMatrix::new(rec.rows, rec.cols);
        for e in rec.entries {
            if e.row >= rec.rows || e.col >= rec.cols {
                return Err(D::Error::custom("matrix entry out of range"));
            }
            m.set(e.row, e.col, e.value.parse().map_err(D::Error::custom)?);
        }
        Ok(m)
    }
}

/// Full reduced row echelon form over all columns.
fn rref(rows: Vec<SparseVec>) -> (Vec<SparseVec>, Vec<usize>) {
    let (rows, pivots, leftover) = rref_up_to(rows, usize::MAX);
    debug_assert!(leftover.is_empty());
    (rows, pivots)
}

/// RREF pivoting only on columns `< col_limit` (used for augmented solves).
/// Returns the reduced pivot rows (in pivot-column order), their pivot
/// columns, and any leftover rows supported entirely on columns past the
/// limit. Pivot choice: smallest column, then fewest entries, then the
/// earliest row; fully deterministic.
fn rref_up_to(
    rows: Vec<SparseVec>,
    col_limit: usize,
) -> (Vec<SparseVec>, Vec<usize>, Vec<SparseVec>) {
    let mut work: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut result: Vec<SparseVec> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    loop {
        // next pivot column: smallest leading index below the limit
        let mut pivot_col = usize::MAX;
        for r in &work {
            if let Some(lead) = sv_leading(r) {
                if lead < col_limit && lead < pivot_col {
                    pivot_col = lead;
                }
            }
        }
        if pivot_col == usize::MAX {
            break;
        }
        let mut best: Option<usize> = None;
        for (idx, r) in work.iter().enumerate() {
            if sv_leading(r) == Some(pivot_col) {
                let better = match best {
                    None => true,
                    Some(b) => r.len() < work[b].len(),
                };
                if better {
                    best = Some(idx);
                }
            }
        }
        let pivot_row = work.swap_remove(best.expect("candidate exists"));
        let inv = pivot_row[0].1.invert().expect("pivot entry nonzero");
        let pivot_row = sv_scale(&pivot_row, &inv);

        let eliminate = |r: &SparseVec| -> SparseVec {
            match sv_get(r, pivot_col) {
                Some(c) => sv_add_scaled(r, &pivot_row, &-c.clone()),
                None => r.clone(),
            }
        };
        for r in work.iter_mut() {
            *r = eliminate(r);
        }
        work.retain(|r| !r.is_empty());
        for r in result.iter_mut() {
            *r = eliminate(r);
        }

        let pos = pivots.partition_point(|&c| c < pivot_col);
        pivots.insert(pos, pivot_col);
        result.insert(pos, pivot_row);
    }
    (result, pivots, work)
}

/// Basis of vectors expressed over an explicit list of basis states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorBasis {
    pub n: usize,
    pub states: Vec<BasisState>,
    pub vectors: Vec<Vec<GaussianRational>>,
}

impl VectorBasis {
    pub fn empty(n: usize, states: Vec<BasisState>) -> Self {
        VectorBasis {
            n,
            states,
            vectors: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Reassembles vector `idx` as a polynomial.
    pub fn polynomial(&self, idx: usize) -> SpinorPolynomial {
        let mut p = SpinorPolynomial::zero(self.n);
        for (state, c) in self.states.iter().zip(&self.vectors[idx]) {
            p.add_term(state.clone(), c.clone());
        }
        p
    }

    pub fn polynomials(&self) -> Vec<SpinorPolynomial> {
        (0..self.dim()).map(|i| self.polynomial(i)).collect()
    }

    /// True when `v` lies in the span of the stored vectors.
    pub fn contains(&self, v: &SpinorPolynomial) -> bool {
        let index: BTreeMap<&BasisState, usize> = self
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut target = vec![GaussianRational::zero(); self.states.len()];
        for (s, c) in v.terms() {
            match index.get(s) {
                Some(&i) => target[i] = c.clone(),
                None => return false,
            }
        }
        // solve A x = target with columns = stored vectors
        let mut m = ExactMatrix::new(self.states.len(), self.dim());
        for (col, vec) in self.vectors.iter().enumerate() {
            for (row, c) in vec.iter().enumerate() {
                if !c.is_zero() {
                    m.set(row, col, c.clone());
                }
            }
        }
        m.solve(&target).is_some()
    }
}

/// Matrix of `op` on an ordered domain. The codomain is the sorted union of
/// all basis states hit by the images; column j is the coordinate vector of
/// `op · domain[j]`.
pub fn matrix_of(
    op: &WeylOperator,
    domain: &[BasisState],
) -> Result<(ExactMatrix, Vec<BasisState>)> {
    let mut images = Vec::with_capacity(domain.len());
    let mut codomain_set: std::collections::BTreeSet<BasisState> = Default::default();
    for state in domain {
        let image = apply(op, &SpinorPolynomial::unit(op.n(), state.clone()))?;
        codomain_set.extend(image.terms().keys().cloned());
        images.push(image);
    }
    let codomain: Vec<BasisState> = codomain_set.into_iter().collect();
    let index: BTreeMap<&BasisState, usize> =
        codomain.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = ExactMatrix::new(codomain.len(), domain.len());
    for (col, image) in images.iter().enumerate() {
        for (s, c) in image.terms() {
            m.set(index[s], col, c.clone());
        }
    }
    Ok((m, codomain))
}

/// Simultaneous kernel of a list of operators on a domain: vertically
/// stacks the matrices (codomains aligned on their sorted union) and
/// returns the common nullspace. With no operators the full domain is
/// returned.
pub fn stack_and_intersect(
    n: usize,
    ops: &[WeylOperator],
    domain: &[BasisState],
) -> Result<VectorBasis> {
    for op in ops {
        if op.n() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: op.n(),
            });
        }
    }
    let mut pieces = Vec::with_capacity(ops.len());
    let mut union: std::collections::BTreeSet<BasisState> = Default::default();
    for op in ops {
        let (m, codomain) = matrix_of(op, domain)?;
        union.extend(codomain.iter().cloned());
        pieces.push((m, codomain));
    }
    let union: Vec<BasisState> = union.into_iter().collect();
    let index: BTreeMap<&BasisState, usize> =
        union.iter().enumerate().map(|(i, s)| (s, i)).collect();

    let block = union.len();
    let mut stacked = ExactMatrix::new(block * pieces.len().max(1), domain.len());
    for (piece_idx, (m, codomain)) in pieces.iter().enumerate() {
        let offset = piece_idx * block;
        for (&(r, c), v) in m.entries() {
            stacked.set(offset + index[&codomain[r]], c, v.clone());
        }
    }
    let vectors = if ops.is_empty() {
        ExactMatrix::new(0, domain.len()).nullspace()
    } else {
        stacked.nullspace()
    };
    Ok(VectorBasis {
        n,
        states: domain.to_vec(),
        vectors,
    })
}

/// Gram matrix G[i][j] = <U_i, V_j> under the Fischer pairing.
pub fn gram(u: &VectorBasis, v: &VectorBasis) -> Result<ExactMatrix> {
    if u.n != v.n {
        return Err(Error::DimensionMismatch {
            left: u.n,
            right: v.n,
        });
    }
    let u_polys = u.polynomials();
    let v_polys = v.polynomials();
    let mut g = ExactMatrix::new(u_polys.len(), v_polys.len());
    for (i, p) in u_polys.iter().enumerate() {
        for (j, q) in v_polys.iter().enumerate() {
            g.set(i, j, fischer_pair(p, q)?);
        }
    }
    Ok(g)
}

/// Rank of a family of polynomials expressed over a fixed slice basis.
pub fn rank_of_family(states: &[BasisState], family: &[SpinorPolynomial]) -> usize {
    let index: BTreeMap<&BasisState, usize> =
        states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = ExactMatrix::new(states.len(), family.len());
    for (col, p) in family.iter().enumerate() {
        for (s, c) in p.terms() {
            let row = *index
                .get(s)
                .unwrap_or_else(|| panic!("polynomial leaves the expected slice: state {s}"));
            m.set(row, col, c.clone());
        }
    }
    m.rank()
}
