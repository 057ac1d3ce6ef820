//! Dense exact linear algebra over a prime field F_p.
//!
//! This is the computational kernel for everything else in the crate. All
//! results are canonical: elimination always picks the leftmost pivot and the
//! topmost nonzero row, so reduced row-echelon forms — and hence [`Subspace`]
//! values — are bit-reproducible across runs and platforms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime in [2, 2^16)")]
    NotPrime(u64),
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
}

/// A prime field F_p, 2 <= p < 2^16, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldPrime {
    p: u32,
}

impl FieldPrime {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if p < 2 || p >= (1 << 16) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FieldPrime { p: p as u32 })
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.p as u64
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.p as u64
    }

    /// Reduce a signed value into [0, p).
    #[inline]
    pub fn reduce_signed(self, x: i64) -> u64 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p as u64
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p as u64 - b) % self.p as u64
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p as u64
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p as u64 - a
        }
    }

    /// Multiplicative inverse of a nonzero residue, via Fermat.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let p = self.p as u64;
        base %= p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix over F_p. Entries are always reduced residues.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldMatrix {
    field: FieldPrime,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl std::fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}x{} over F_{} [", self.rows, self.cols, self.field.p)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl PrimeFieldMatrix {
    pub fn zeros(field: FieldPrime, rows: usize, cols: usize) -> Self {
        PrimeFieldMatrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldPrime, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(
        field: FieldPrime,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Build from explicit rows; entries are reduced mod p.
    pub fn from_rows(field: FieldPrime, rows: &[Vec<u64>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch {
                context: "ragged row lengths".into(),
            });
        }
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] as u64
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = self.field.reduce(v) as u32;
    }

    pub fn row_vec(&self, r: usize) -> Vec<u64> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn col_vec(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Row-major flattening; the coordinate convention for hom-space vectors.
    pub fn flatten(&self) -> Vec<u64> {
        self.entries.iter().map(|&e| e as u64).collect()
    }

    pub fn from_flat(
        field: FieldPrime,
        rows: usize,
        cols: usize,
        data: &[u64],
    ) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                context: format!("flat data length {} != {}x{}", data.len(), rows, cols),
            });
        }
        let mut m = Self::zeros(field, rows, cols);
        for (i, &v) in data.iter().enumerate() {
            m.entries[i] = field.reduce(v) as u32;
        }
        Ok(m)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.entries[r * self.cols + c];
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a as u64, b as u64) as u32)
            .collect();
        PrimeFieldMatrix { field: f, rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a as u64, b as u64) as u32)
            .collect();
        PrimeFieldMatrix { field: f, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: u64) -> Self {
        let f = self.field;
        let s = f.reduce(s);
        let entries = self
            .entries
            .iter()
            .map(|&a| f.mul(a as u64, s) as u32)
            .collect();
        PrimeFieldMatrix { field: f, rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul inner dimension");
        let p = self.field.p as u64;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.entries[k * other.cols..(k + 1) * other.cols];
                let trow = &mut out.entries[r * other.cols..(r + 1) * other.cols];
                for (t, &b) in trow.iter_mut().zip(orow) {
                    *t = ((*t as u64 + a * b as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "mul_vec length");
        let p = self.field.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = (acc + self.entries[r * self.cols + c] as u64 * (v[c] % p)) % p;
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// [self | other] side by side.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack rows");
        let mut m = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c));
            }
        }
        m
    }

    /// self on top of other.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        PrimeFieldMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn block_diag(field: FieldPrime, blocks: &[&PrimeFieldMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(ro + r, co + c, b.get(r, c));
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u64::from(r == c)))
    }

    /// Reduced row-echelon form with leftmost-pivot, topmost-row elimination.
    pub fn rref(&self) -> RrefResult {
        let mut m = self.clone();
        let p = m.field.p as u64;
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let mut found = None;
            for r in pivot_row..m.rows {
                if m.entries[r * m.cols + col] != 0 {
                    found = Some(r);
                    break;
                }
            }
            let Some(r0) = found else { continue };
            if r0 != pivot_row {
                for c in 0..m.cols {
                    m.entries.swap(r0 * m.cols + c, pivot_row * m.cols + c);
                }
            }
            let inv = m.field.inv(m.entries[pivot_row * m.cols + col] as u64);
            if inv != 1 {
                for c in col..m.cols {
                    let e = &mut m.entries[pivot_row * m.cols + c];
                    *e = (*e as u64 * inv % p) as u32;
                }
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.entries[r * m.cols + col] as u64;
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let sub = factor * m.entries[pivot_row * m.cols + c] as u64 % p;
                    let e = &mut m.entries[r * m.cols + c];
                    *e = ((*e as u64 + p - sub) % p) as u32;
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let rank = pivot_cols.len();
        RrefResult { matrix: m, pivot_cols, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.field, n));
        let red = aug.rref();
        if red.rank < n || red.pivot_cols.iter().take(n).ne((0..n).by_ref()) {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.matrix.get(r, n + c));
            }
        }
        Some(inv)
    }

    /// Solve self * x = b. Returns `None` when inconsistent; free variables
    /// are set to zero so the answer is deterministic.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                context: format!("solve: {} rows vs rhs length {}", self.rows, b.len()),
            });
        }
        let mut bcol = Self::zeros(self.field, self.rows, 1);
        for (i, &v) in b.iter().enumerate() {
            bcol.set(i, 0, v);
        }
        let red = self.hstack(&bcol).rref();
        // Inconsistent iff the rhs column is a pivot column.
        if red.pivot_cols.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u64; self.cols];
        for (row, &pc) in red.pivot_cols.iter().enumerate() {
            x[pc] = red.matrix.get(row, self.cols);
        }
        Ok(Some(x))
    }

    /// Basis of the right kernel {v : self * v = 0}.
    pub fn kernel_basis(&self) -> Subspace {
        let red = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &c in &red.pivot_cols {
                s[c] = true;
            }
            s
        };
        let free_cols: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (row, &pc) in red.pivot_cols.iter().enumerate() {
                v[pc] = self.field.neg(red.matrix.get(row, fc));
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, &basis)
    }
}

#[derive(Clone, Debug)]
pub struct RrefResult {
    pub matrix: PrimeFieldMatrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// A subspace of F_p^n, stored as an RREF row basis with no zero rows. The
/// representation is canonical: two subspaces are equal iff their basis
/// matrices are bit-identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: PrimeFieldMatrix,
    pivot_cols: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of F_{}^{})", self.dim(), self.field().p(), self.ambient)
    }
}

impl Subspace {
    pub fn zero(field: FieldPrime, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: PrimeFieldMatrix::zeros(field, 0, ambient),
            pivot_cols: Vec::new(),
        }
    }

    pub fn full(field: FieldPrime, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: PrimeFieldMatrix::identity(field, ambient),
            pivot_cols: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`, canonicalised.
    pub fn from_span_rows(m: &PrimeFieldMatrix) -> Self {
        let red = m.rref();
        let rank = red.rank;
        let mut basis = PrimeFieldMatrix::zeros(m.field(), rank, m.cols());
        for r in 0..rank {
            for c in 0..m.cols() {
                basis.set(r, c, red.matrix.get(r, c));
            }
        }
        Subspace { ambient: m.cols(), basis, pivot_cols: red.pivot_cols }
    }

    pub fn from_vectors(field: FieldPrime, ambient: usize, vectors: &[Vec<u64>]) -> Self {
        let mut m = PrimeFieldMatrix::zeros(field, vectors.len(), ambient);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), ambient, "vector length vs ambient");
            for (j, &x) in v.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Self::from_span_rows(&m)
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.basis.field()
    }

    pub fn basis(&self) -> &PrimeFieldMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.dim()).map(|r| self.basis.row_vec(r))
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Residual of `v` after eliminating against the basis; zero iff member.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient, "reduce length vs ambient");
        let f = self.field();
        let mut r: Vec<u64> = v.iter().map(|&x| f.reduce(x)).collect();
        for (row, &pc) in self.pivot_cols.iter().enumerate() {
            let c = r[pc];
            if c != 0 {
                for j in pc..self.ambient {
                    r[j] = f.sub(r[j], f.mul(c, self.basis.get(row, j)));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of a member vector in the RREF basis.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        let f = self.field();
        Some(self.pivot_cols.iter().map(|&pc| f.reduce(v[pc])).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && (0..self.dim()).all(|r| other.contains(&self.basis.row_vec(r)))
    }

    /// Intersection and sum, computed together.
    pub fn meet_join(&self, other: &Subspace) -> Result<(Subspace, Subspace), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let join = Subspace::from_span_rows(&self.basis.vstack(&other.basis));
        // x in U∩V: x = a·U = b·V row combinations; kernel of [Uᵀ | −Vᵀ].
        let meet = if self.dim() == 0 || other.dim() == 0 {
            Subspace::zero(self.field(), self.ambient)
        } else {
            let stacked = self
                .basis
                .transpose()
                .hstack(&other.basis.transpose().scale(self.field().p() - 1));
            let ker = stacked.kernel_basis();
            let vecs: Vec<Vec<u64>> = ker
                .basis_vectors()
                .map(|w| {
                    let coeffs = &w[..self.dim()];
                    let mut x = vec![0u64; self.ambient];
                    let f = self.field();
                    for (i, &a) in coeffs.iter().enumerate() {
                        if a != 0 {
                            for j in 0..self.ambient {
                                x[j] = f.add(x[j], f.mul(a, self.basis.get(i, j)));
                            }
                        }
                    }
                    x
                })
                .collect();
            Subspace::from_vectors(self.field(), self.ambient, &vecs)
        };
        Ok((meet, join))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        Ok(self.meet_join(other)?.0)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        Ok(self.meet_join(other)?.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> FieldPrime {
        FieldPrime::new(p).unwrap()
    }

    #[test]
    fn field_prime_validation() {
        assert!(FieldPrime::new(2).is_ok());
        assert!(FieldPrime::new(3).is_ok());
        assert!(FieldPrime::new(65521).is_ok());
        for bad in [0, 1, 4, 9, 65536, 100] {
            assert_eq!(FieldPrime::new(bad), Err(LinalgError::NotPrime(bad)));
        }
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = PrimeFieldMatrix::identity(fp(2), 2);
        let red = id.rref();
        assert_eq!(red.matrix, id);
        assert_eq!(red.pivot_cols, vec![0, 1]);
        assert_eq!(red.rank, 2);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = PrimeFieldMatrix::zeros(fp(2), 2, 2);
        let red = z.rref();
        assert_eq!(red.matrix, z);
        assert!(red.pivot_cols.is_empty());
        assert_eq!(red.rank, 0);
    }

    #[test]
    fn rref_rank_one_over_f2() {
        let m = PrimeFieldMatrix::from_rows(fp(2), &[vec![1, 1], vec![1, 1]]).unwrap();
        let red = m.rref();
        let expected = PrimeFieldMatrix::from_rows(fp(2), &[vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(red.matrix, expected);
        assert_eq!(red.pivot_cols, vec![0]);
        assert_eq!(red.rank, 1);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let id = PrimeFieldMatrix::identity(fp(3), 3);
        assert_eq!(id.kernel_basis().dim(), 0);
    }

    #[test]
    fn kernel_of_zero_is_full() {
        let z = PrimeFieldMatrix::zeros(fp(3), 2, 3);
        let k = z.kernel_basis();
        assert_eq!(k.dim(), 3);
        assert_eq!(k, Subspace::full(fp(3), 3));
    }

    #[test]
    fn kernel_rank_nullity_small() {
        let m = PrimeFieldMatrix::from_rows(fp(2), &[vec![1, 1]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[1, 1]));
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let id = PrimeFieldMatrix::identity(fp(5), 3);
        assert_eq!(id.solve(&[1, 2, 3]).unwrap(), Some(vec![1, 2, 3]));
    }

    #[test]
    fn solve_inconsistent_is_none() {
        let z = PrimeFieldMatrix::zeros(fp(2), 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
    }

    #[test]
    fn solve_free_variables_zeroed() {
        let m = PrimeFieldMatrix::from_rows(fp(2), &[vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(m.solve(&[1, 0]).unwrap(), Some(vec![1, 0]));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = PrimeFieldMatrix::identity(fp(2), 2);
        assert!(matches!(
            m.solve(&[1, 0, 0]),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn meet_join_equal_subspaces() {
        let u = Subspace::from_vectors(fp(3), 2, &[vec![1, 2]]);
        let (meet, join) = u.meet_join(&u).unwrap();
        assert_eq!(meet, u);
        assert_eq!(join, u);
    }

    #[test]
    fn meet_join_complementary_coordinates() {
        let u = Subspace::from_vectors(fp(2), 2, &[vec![1, 0]]);
        let v = Subspace::from_vectors(fp(2), 2, &[vec![0, 1]]);
        let (meet, join) = u.meet_join(&v).unwrap();
        assert_eq!(meet, Subspace::zero(fp(2), 2));
        assert_eq!(join, Subspace::full(fp(2), 2));
    }

    #[test]
    fn meet_join_containment_case() {
        let u = Subspace::from_vectors(fp(3), 2, &[vec![1, 0], vec![0, 1]]);
        let v = Subspace::from_vectors(fp(3), 2, &[vec![1, 1]]);
        let (meet, join) = u.meet_join(&v).unwrap();
        assert_eq!(meet, v);
        assert_eq!(join, u);
    }

    #[test]
    fn meet_join_ambient_mismatch() {
        let u = Subspace::zero(fp(2), 2);
        let v = Subspace::zero(fp(2), 3);
        assert!(matches!(
            u.meet_join(&v),
            Err(LinalgError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let m = PrimeFieldMatrix::from_rows(fp(5), &[vec![1, 2], vec![3, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
        let sing = PrimeFieldMatrix::from_rows(fp(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(sing.inverse().is_none());
    }

    fn arb_matrix(p: u64, max_dim: usize) -> impl Strategy<Value = PrimeFieldMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c).prop_map(move |data| {
                PrimeFieldMatrix::from_flat(fp(p), r, c, &data).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(p in prop::sample::select(vec![2u64, 3, 5]), seed in 0u64..1000) {
            let mut rng_data = Vec::new();
            let mut s = seed;
            for _ in 0..16 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                rng_data.push(s % p);
            }
            let m = PrimeFieldMatrix::from_flat(fp(p), 4, 4, &rng_data).unwrap();
            let once = m.rref().matrix;
            let twice = once.rref().matrix;
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn rank_nullity_holds(m in arb_matrix(3, 6)) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.dim() + m.rank(), m.cols());
        }

        #[test]
        fn solve_is_exact(m in arb_matrix(5, 5), xs in proptest::collection::vec(0u64..5, 5)) {
            let x = &xs[..m.cols()];
            let b = m.mul_vec(x);
            let sol = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }

        #[test]
        fn grassmann_identity(
            p in prop::sample::select(vec![2u64, 3, 5]),
            u_data in proptest::collection::vec(0u64..5, 3 * 5),
            v_data in proptest::collection::vec(0u64..5, 2 * 5),
        ) {
            let f = fp(p);
            let u = Subspace::from_span_rows(&PrimeFieldMatrix::from_flat(f, 3, 5, &u_data).unwrap());
            let v = Subspace::from_span_rows(&PrimeFieldMatrix::from_flat(f, 2, 5, &v_data).unwrap());
            let (meet, join) = u.meet_join(&v).unwrap();
            prop_assert_eq!(join.dim() + meet.dim(), u.dim() + v.dim());
            prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
            prop_assert!(u.is_subspace_of(&join) && v.is_subspace_of(&join));
        }
    }
}
