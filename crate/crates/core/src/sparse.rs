//! Sparse vectors over the Gaussian rationals: sorted `(index, coefficient)`
//! pairs with no stored zeros. Shared by the linear algebra and the Lie
//! closure machinery.

use crate::arith::GaussianRational;

pub(crate) type SparseVec = Vec<(usize, GaussianRational)>;

pub(crate) fn sv_get(v: &SparseVec, idx: usize) -> Option<&GaussianRational> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|p| &v[p].1)
}

pub(crate) fn sv_leading(v: &SparseVec) -> Option<usize> {
    v.first().map(|e| e.0)
}

/// `a + c·b`, merging sorted entries and dropping cancellations.
pub(crate) fn sv_add_scaled(a: &SparseVec, b: &SparseVec, c: &GaussianRational) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ia, _)), Some(&(jb, _))) if ia == jb => {
                let v = &a[i].1 + &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((ia, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ia, _)), Some(&(jb, _))) if ia < jb => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), Some(_)) => {
                let v = c * &b[j].1;
                if !v.is_zero() {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (None, Some(_)) => {
                let v = c * &b[j].1;
                if !v.is_zero() {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub(crate) fn sv_scale(v: &SparseVec, c: &GaussianRational) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}
