//! Dense exact linear algebra over `Q(ζ_N)`.
//!
//! Operators act on column vectors: column `i` of an operator matrix holds
//! the coordinates of the image of the `i`-th basis vector. Subspaces are
//! stored as row bases in reduced row-echelon form, so equal subspaces have
//! identical representations.

use std::fmt;

use crate::cyclofield::{CycField, CycNumber};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: CycField,
    rows: usize,
    cols: usize,
    data: Vec<CycNumber>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: &CycField, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &CycField, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn diag(field: &CycField, entries: &[CycNumber]) -> Self {
        let n = entries.len();
        let mut m = Mat::zeros(field, n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_fn(field: &CycField, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNumber) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &CycField, rows: Vec<Vec<CycNumber>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Malformed("ragged matrix rows".into()));
            }
            for x in row {
                if x.order() != field.order() {
                    return Err(Error::OrderMismatch { left: field.order(), right: x.order() });
                }
                data.push(x);
            }
        }
        Ok(Mat { field: field.clone(), rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &CycField, len: usize, columns: &[Vec<CycNumber>]) -> Self {
        Mat::from_fn(field, len, columns.len(), |r, c| columns[c][r].clone())
    }

    /// Reshapes a row-major vector into a matrix.
    pub fn from_vec(field: &CycField, rows: usize, cols: usize, data: Vec<CycNumber>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNumber {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNumber) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[CycNumber] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<CycNumber> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Row-major entries; for a tensor-square matrix this is the Kronecker
    /// coordinate vector, index `i·cols + j`.
    pub fn as_slice(&self) -> &[CycNumber] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<CycNumber> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNumber::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &CycNumber) -> Mat {
        let data = self.data.iter().map(|a| a * c).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product. Zero entries of the left factor are skipped, which
    /// makes products with sparse operators cheap.
    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        let mut out = Mat::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycNumber]) -> Vec<CycNumber> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        let mut out = vec![self.field.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[CycNumber]) -> Vec<CycNumber> {
        assert_eq!(self.rows, v.len(), "shape mismatch in vec_mul");
        let mut out = vec![self.field.zero(); self.cols];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = self.get(k, j);
                if !a.is_zero() {
                    *o = &*o + &(x * a);
                }
            }
        }
        out
    }

    /// Kronecker product; row `(i, k)` lands at `i·b.rows + k` and column
    /// `(j, l)` at `j·b.cols + l`.
    pub fn kronecker(&self, b: &Mat) -> Mat {
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let mut out = Mat::zeros(&self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let x = b.get(k, l);
                        if !x.is_zero() {
                            out.set(i * b.rows + k, j * b.cols + l, a * x);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "shape mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(&self.field, idx.len(), self.cols, |r, c| self.get(idx[r], c).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(&self.field, self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    /// Sub-block with the given row and column index sets.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(&self.field, rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    pub fn trace(&self) -> Result<CycNumber> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok((0..self.rows).fold(self.field.zero(), |acc, i| acc + self.get(i, i)))
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Mat, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for j in c..m.cols {
                    let idx = r * m.cols + j;
                    if !m.data[idx].is_zero() {
                        m.data[idx] = &m.data[idx] * &inv;
                    }
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let x = m.get(r, j);
                    if !x.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] = &m.data[idx] - &(&factor * x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Canonical basis of `{v : self·v = 0}`.
    pub fn null_space(&self) -> Subspace {
        let (red, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(&self.field, free.len(), self.cols);
        for (b, &f) in free.iter().enumerate() {
            basis.set(b, f, self.field.one());
            for (r, &p) in pivots.iter().enumerate().take(rank) {
                let x = red.get(r, f);
                if !x.is_zero() {
                    basis.set(b, p, -x);
                }
            }
        }
        Subspace::from_spanning(self.cols, &basis)
    }

    /// `null_space(self - c·I)`.
    pub fn eigenspace(&self, c: &CycNumber) -> Result<Subspace> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let shifted = self.sub(&Mat::identity(&self.field, self.rows).scale(c));
        Ok(shifted.null_space())
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let id = Mat::identity(&self.field, n);
        let aug =
            Mat::from_fn(
                &self.field,
                n,
                2 * n,
                |r, c| {
                    if c < n {
                        self.get(r, c).clone()
                    } else {
                        id.get(r, c - n).clone()
                    }
                },
            );
        let (red, rank, pivots) = aug.rref();
        if rank < n || pivots.get(n - 1).is_some_and(|&p| p >= n) {
            return Err(Error::NotInvertible);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(red.select_cols(&cols))
    }

    /// Integer power by repeated squaring; negative powers need an
    /// invertible matrix.
    pub fn pow(&self, t: i64) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut base = if t < 0 { self.inverse()? } else { self.clone() };
        let mut e = t.unsigned_abs();
        let mut acc = Mat::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        Ok(acc)
    }

    /// Characteristic polynomial `det(x·I - self)`, monic, lowest degree
    /// first. Reduces to upper Hessenberg form by exact similarity, then
    /// runs the standard three-term expansion.
    pub fn charpoly(&self) -> Result<Vec<CycNumber>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let f = &self.field;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(p) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if p != m {
                for j in 0..n {
                    h.data.swap(p * n + j, m * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + p, i * n + m);
                }
            }
            let pivot_inv = h.get(m, m - 1).inv()?;
            for r in m + 1..n {
                let y = h.get(r, m - 1) * &pivot_inv;
                if y.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let x = h.get(m, j);
                    if !x.is_zero() {
                        let idx = r * n + j;
                        h.data[idx] = &h.data[idx] - &(&y * x);
                    }
                }
                for i in 0..n {
                    let x = h.get(i, r);
                    if !x.is_zero() {
                        let idx = i * n + m;
                        h.data[idx] = &h.data[idx] + &(&y * x);
                    }
                }
            }
        }
        // polys[k] = charpoly of the leading k×k block
        let mut polys: Vec<Vec<CycNumber>> = vec![vec![f.one()]];
        for k in 1..=n {
            let prev = &polys[k - 1];
            let mut pk = vec![f.zero(); k + 1];
            let hkk = h.get(k - 1, k - 1);
            for (e, c) in prev.iter().enumerate() {
                pk[e + 1] = &pk[e + 1] + c;
                pk[e] = &pk[e] - &(c * hkk);
            }
            let mut t = f.one();
            for i in (1..k).rev() {
                t = &t * h.get(i, i - 1);
                if t.is_zero() {
                    break;
                }
                let coef = h.get(i - 1, k - 1) * &t;
                if coef.is_zero() {
                    continue;
                }
                for (e, c) in polys[i - 1].iter().enumerate() {
                    pk[e] = &pk[e] - &(&coef * c);
                }
            }
            polys.push(pk);
        }
        Ok(polys.pop().expect("at least one polynomial"))
    }

    /// Least `t ≥ 1` with `self^t = I`.
    pub fn operator_order(&self, bound: usize) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rank() < self.rows {
            return Err(Error::NotInvertible);
        }
        let mut p = self.clone();
        for t in 1..=bound {
            if p.is_identity() {
                return Ok(t);
            }
            p = p.matmul(self);
        }
        Err(Error::OrderExceedsBound { bound })
    }
}

/// Subspace of `F^n`, held as an RREF row basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Row space of `rows`.
    pub fn from_spanning(ambient_dim: usize, rows: &Mat) -> Self {
        assert_eq!(rows.cols(), ambient_dim, "spanning set has wrong width");
        let (red, rank, pivots) = rows.rref();
        let keep: Vec<usize> = (0..rank).collect();
        Subspace { ambient_dim, basis: red.select_rows(&keep), pivots }
    }

    pub fn zero(field: &CycField, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Mat::zeros(field, 0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(field: &CycField, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Mat::identity(field, ambient_dim), pivots: (0..ambient_dim).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<CycNumber>> {
        (0..self.dim()).map(|r| self.basis.row(r).to_vec()).collect()
    }

    /// Row basis of the annihilator: `x ∈ self ⟺ A·x = 0`.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.basis.field(), self.ambient_dim);
        }
        self.basis.null_space()
    }

    pub fn contains(&self, v: &[CycNumber]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        // In RREF, v lies in the row space iff v equals the combination
        // read off at the pivot columns.
        let mut residual = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.basis.row(r).iter().enumerate() {
                if !x.is_zero() {
                    residual[j] = &residual[j] - &(&c * x);
                }
            }
        }
        residual.iter().all(CycNumber::is_zero)
    }

    /// Coordinates of a member with respect to the stored basis.
    pub fn coordinates(&self, v: &[CycNumber]) -> Option<Vec<CycNumber>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let stacked = self.annihilator().basis.vstack(&other.annihilator().basis);
        stacked.null_space()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_spanning(self.ambient_dim, &self.basis.vstack(&other.basis))
    }

    /// Standard basis vectors completing this subspace to the whole space:
    /// the unit vectors at the non-pivot columns.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// True if `op` maps the subspace into itself (`op` acts on columns).
    pub fn is_invariant_under(&self, op: &Mat) -> bool {
        self.vectors().iter().all(|v| self.contains(&op.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f3() -> CycField {
        CycField::new(3).unwrap()
    }

    fn random_mat(field: &CycField, rng: &mut ChaCha8Rng, r: usize, c: usize) -> Mat {
        Mat::from_fn(field, r, c, |_, _| if rng.gen_bool(0.4) { field.zero() } else { field.random(rng, 3, 2) })
    }

    /// Random matrix of prescribed rank as a product of random factors.
    fn random_low_rank(field: &CycField, rng: &mut ChaCha8Rng, n: usize, k: usize) -> Mat {
        let a = random_mat(field, rng, n, k);
        let b = random_mat(field, rng, k, n);
        a.matmul(&b)
    }

    #[test]
    fn rref_basic_cases() {
        let f = f3();
        let (m, rank, piv) = Mat::identity(&f, 3).rref();
        assert!(m.is_identity());
        assert_eq!((rank, piv), (3, vec![0, 1, 2]));
        let (m, rank, _) = Mat::zeros(&f, 2, 3).rref();
        assert!(m.is_zero());
        assert_eq!(rank, 0);
    }

    /// Determinant of [[1, ζ], [ζ², 1]] by cofactor expansion: 1 - ζ³ = 0,
    /// so the rank is 1.
    #[test]
    fn rank_one_over_q_zeta3() {
        let f = f3();
        let z = f.root_of_unity(1);
        let m = Mat::from_rows(&f, vec![vec![f.one(), z.clone()], vec![f.root_of_unity(2), f.one()]]).unwrap();
        let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
        assert!(det.is_zero());
        assert_eq!(m.rank(), 1);
        let ns = m.null_space();
        assert_eq!(ns.dim(), 1);
        // (ζ, -1) spans the kernel.
        let v = vec![z.clone(), f.from_int(-1)];
        assert!(m.mul_vec(&v).iter().all(CycNumber::is_zero));
        assert!(ns.contains(&v));
    }

    #[test]
    fn null_space_examples() {
        let f = f3();
        assert_eq!(Mat::identity(&f, 4).null_space().dim(), 0);
        assert_eq!(Mat::zeros(&f, 2, 2).null_space().dim(), 2);
    }

    #[test]
    fn eigenspace_examples() {
        let f = f3();
        let z = f.root_of_unity(1);
        let id = Mat::identity(&f, 3);
        assert_eq!(id.eigenspace(&f.one()).unwrap().dim(), 3);
        assert_eq!(id.eigenspace(&z).unwrap().dim(), 0);
        let d = Mat::diag(&f, &[z.clone(), f.root_of_unity(2)]);
        let e = d.eigenspace(&z).unwrap();
        assert_eq!(e.vectors(), vec![vec![f.one(), f.zero()]]);
    }

    #[test]
    fn trace_examples() {
        let f = f3();
        assert_eq!(Mat::identity(&f, 5).trace().unwrap(), f.from_int(5));
        let mut jordan = Mat::zeros(&f, 3, 3);
        jordan.set(0, 1, f.one());
        jordan.set(1, 2, f.one());
        assert!(jordan.trace().unwrap().is_zero());
        let d = Mat::diag(&f, &[f.root_of_unity(1), f.root_of_unity(2)]);
        assert_eq!(d.trace().unwrap(), f.from_int(-1));
        assert!(matches!(Mat::zeros(&f, 2, 3).trace(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn operator_order_examples() {
        let f = f3();
        assert_eq!(Mat::identity(&f, 2).operator_order(10).unwrap(), 1);
        let d = Mat::diag(&f, &[f.root_of_unity(1), f.one()]);
        assert_eq!(d.operator_order(10).unwrap(), 3);
        let cycle = Mat::from_fn(&f, 5, 5, |r, c| if r == (c + 1) % 5 { f.one() } else { f.zero() });
        assert_eq!(cycle.operator_order(10).unwrap(), 5);
        assert!(matches!(cycle.operator_order(4), Err(Error::OrderExceedsBound { bound: 4 })));
        assert!(matches!(Mat::zeros(&f, 2, 2).operator_order(4), Err(Error::NotInvertible)));
    }

    #[test]
    fn kronecker_examples() {
        let f = f3();
        assert!(Mat::identity(&f, 2).kronecker(&Mat::identity(&f, 2)).is_identity());
        let a = Mat::identity(&f, 2).scale(&f.from_int(7));
        assert!(a.kronecker(&Mat::zeros(&f, 3, 2)).is_zero());
        let k = Mat::diag(&f, &[f.from_int(2)]).kronecker(&Mat::diag(&f, &[f.from_int(3)]));
        assert_eq!(k, Mat::diag(&f, &[f.from_int(6)]));
        // index convention (i⊗j) ↦ i·cols_b + j
        let e = Mat::from_fn(&f, 1, 2, |_, c| f.from_int(c as i64 + 1));
        let g = Mat::from_fn(&f, 1, 3, |_, c| f.from_int(10 * (c as i64 + 1)));
        let kr = e.kronecker(&g);
        assert_eq!(kr.get(0, 3 + 2), &f.from_int(2 * 30));
    }

    /// Oracle: the characteristic polynomial of a 3×3 matrix from the
    /// trace / principal-minor / determinant formulas.
    #[test]
    fn charpoly_matches_minor_expansion() {
        let f = CycField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let a = random_mat(&f, &mut rng, 3, 3);
            let g = |r: usize, c: usize| a.get(r, c).clone();
            let tr = g(0, 0) + g(1, 1) + g(2, 2);
            let minors = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0))
                + (g(0, 0) * g(2, 2) - g(0, 2) * g(2, 0))
                + (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1));
            let det = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1))
                - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
                + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
            let p = a.charpoly().unwrap();
            assert_eq!(p, vec![-det, minors, -tr, f.one()]);
        }
    }

    #[test]
    fn charpoly_of_companion_and_conjugate() {
        let f = CycField::new(3).unwrap();
        let z = f.root_of_unity(1);
        let d = Mat::diag(&f, &[z.clone(), f.one(), f.one(), f.from_int(2)]);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = loop {
            let p = random_mat(&f, &mut rng, 4, 4);
            if p.rank() == 4 {
                break p;
            }
        };
        let m = p.matmul(&d).matmul(&p.inverse().unwrap());
        let cp = m.charpoly().unwrap();
        // evaluate at each eigenvalue
        for ev in [z, f.one(), f.from_int(2)] {
            let val = cp.iter().rev().fold(f.zero(), |acc, c| &acc * &ev + c);
            assert!(val.is_zero());
        }
        assert_eq!(Mat::zeros(&f, 0, 0).charpoly().unwrap(), vec![f.one()]);
    }

    #[test]
    fn inverse_and_negative_powers() {
        let f = CycField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let m = random_mat(&f, &mut rng, 4, 4);
            match m.inverse() {
                Ok(inv) => {
                    assert!(m.matmul(&inv).is_identity());
                    assert_eq!(m.pow(-2).unwrap().matmul(&m.pow(2).unwrap()), Mat::identity(&f, 4));
                }
                Err(Error::NotInvertible) => assert!(m.rank() < 4),
                Err(e) => panic!("{e}"),
            }
        }
        assert!(matches!(Mat::zeros(&f, 2, 2).inverse(), Err(Error::NotInvertible)));
    }

    #[test]
    fn rank_nullity_on_random_matrices() {
        let f = CycField::new(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=12 {
            for trial in 0..50 {
                let m = if trial % 2 == 0 {
                    random_mat(&f, &mut rng, n, n)
                } else {
                    random_low_rank(&f, &mut rng, n, 1 + trial % n)
                };
                let (_, rank, _) = m.rref();
                let ns = m.null_space();
                assert_eq!(rank + ns.dim(), n);
                for v in ns.vectors() {
                    assert!(m.mul_vec(&v).iter().all(CycNumber::is_zero));
                }
            }
        }
    }

    #[test]
    fn eigenvectors_satisfy_equation() {
        let f = f3();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let z = f.root_of_unity(1);
        for _ in 0..10 {
            // conjugate a diagonal matrix with known spectrum
            let p = loop {
                let p = random_mat(&f, &mut rng, 4, 4);
                if p.rank() == 4 {
                    break p;
                }
            };
            let d = Mat::diag(&f, &[z.clone(), z.clone(), f.one(), f.root_of_unity(2)]);
            let m = p.matmul(&d).matmul(&p.inverse().unwrap());
            let e = m.eigenspace(&z).unwrap();
            assert_eq!(e.dim(), 2);
            for v in e.vectors() {
                let mv = m.mul_vec(&v);
                let zv: Vec<_> = v.iter().map(|x| x * &z).collect();
                assert_eq!(mv, zv);
            }
        }
    }

    #[test]
    fn kronecker_mixed_product() {
        let f = f3();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let (r1, c1, c2) = (rng.gen_range(1..4), rng.gen_range(1..4), rng.gen_range(1..4));
            let (r2, d1, d2) = (rng.gen_range(1..4), rng.gen_range(1..4), rng.gen_range(1..4));
            let a = random_mat(&f, &mut rng, r1, c1);
            let c = random_mat(&f, &mut rng, c1, c2);
            let b = random_mat(&f, &mut rng, r2, d1);
            let d = random_mat(&f, &mut rng, d1, d2);
            assert_eq!(a.kronecker(&b).matmul(&c.kronecker(&d)), a.matmul(&c).kronecker(&b.matmul(&d)));
        }
    }

    #[test]
    fn subspace_canonical_and_deterministic() {
        let f = f3();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let m = random_low_rank(&f, &mut rng, 6, 3);
        let a = m.null_space();
        let b = m.clone().null_space();
        assert_eq!(a, b);
        // Same space from a different spanning set gives identical data.
        let mixed = Mat::from_fn(&f, 2 * a.dim(), 6, |r, c| {
            let i = r % a.dim();
            let j = (r + 1) % a.dim();
            a.basis().get(i, c)
                + &a.basis().get(j, c).scale(&num_rational::BigRational::from_integer((r as i64 + 2).into()))
        });
        assert_eq!(Subspace::from_spanning(6, &mixed), a);
    }

    #[test]
    fn intersection_and_complement() {
        let f = f3();
        let e = |i: usize| -> Vec<CycNumber> { (0..4).map(|j| if i == j { f.one() } else { f.zero() }).collect() };
        let u = Subspace::from_spanning(4, &Mat::from_rows(&f, vec![e(0), e(1)]).unwrap());
        let w = Subspace::from_spanning(4, &Mat::from_rows(&f, vec![e(1), e(2)]).unwrap());
        let i = u.intersection(&w);
        assert_eq!(i.vectors(), vec![e(1)]);
        assert_eq!(u.sum(&w).dim(), 3);
        assert_eq!(u.complement_indices(), vec![2, 3]);
        assert_eq!(u.annihilator().dim(), 2);
    }
}
