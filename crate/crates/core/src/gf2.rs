//! Exact linear algebra over the two-element field.
//!
//! Vectors and matrix rows are packed into `u32` words with component `i`
//! stored at bit `i`, so every ambient space used by the crate (dimensions
//! 6, 8, 14 and 20) fits in one word per row. Square matrices up to 8×8 also
//! pack into a single `u64`, which is what the group-closure code hashes.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::Error;

/// Largest supported vector length and matrix side.
pub const MAX_DIM: usize = 20;

#[inline]
fn low_mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

#[inline]
fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}

/// A vector over GF(2) of length at most [`MAX_DIM`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Gf2Vector {
    bits: u32,
    len: u8,
}

impl Gf2Vector {
    pub fn zero(len: usize) -> Self {
        assert!(len > 0 && len <= MAX_DIM, "vector length {len} out of range");
        Gf2Vector { bits: 0, len: len as u8 }
    }

    /// Builds a vector from its packed form; bits above `len` are discarded.
    pub fn from_bits(bits: u32, len: usize) -> Self {
        assert!(len > 0 && len <= MAX_DIM, "vector length {len} out of range");
        Gf2Vector {
            bits: bits & low_mask(len),
            len: len as u8,
        }
    }

    /// The `i`-th canonical basis vector.
    pub fn unit(i: usize, len: usize) -> Self {
        assert!(i < len);
        Self::from_bits(1 << i, len)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len());
        self.bits >> i & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len());
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Standard (non-symplectic) dot product.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        parity(self.bits & other.bits)
    }

    /// Row vector times matrix, `v·M`.
    pub fn mul_matrix(&self, m: &Gf2Matrix) -> Gf2Vector {
        assert_eq!(self.len(), m.rows(), "v·M shape mismatch");
        let mut out = 0u32;
        let mut rest = self.bits;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out ^= m.data[i];
            rest &= rest - 1;
        }
        Gf2Vector::from_bits(out, m.cols())
    }
}

impl Add for Gf2Vector {
    type Output = Gf2Vector;

    fn add(self, rhs: Self) -> Self::Output {
        assert_eq!(self.len, rhs.len, "length mismatch");
        Gf2Vector {
            bits: self.bits ^ rhs.bits,
            len: self.len,
        }
    }
}

impl AddAssign for Gf2Vector {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len() {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        write!(f, ")")
    }
}

impl FromStr for Gf2Vector {
    type Err = Error;

    /// Accepts `010111` or `(010111)`; the first character is component 0.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        if t.is_empty() || t.len() > MAX_DIM {
            return Err(Error::Parse(format!("bad bit-vector length in {s:?}")));
        }
        let mut bits = 0u32;
        for (i, c) in t.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("bad bit {c:?} in {s:?}"))),
            }
        }
        Ok(Gf2Vector::from_bits(bits, t.len()))
    }
}

/// A dense matrix over GF(2) with at most [`MAX_DIM`] rows and columns.
///
/// Stored row-major; row `i` is a packed word whose bit `j` is entry `(i, j)`.
/// Unused rows are kept zero so derived equality and hashing are structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Matrix {
    rows: u8,
    cols: u8,
    data: [u32; MAX_DIM],
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows() {
            if i > 0 {
                write!(f, " ")?;
            }
            for j in 0..self.cols() {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

/// Bit-grid text, one row per line.
impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            if i + 1 < self.rows() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows <= MAX_DIM && cols > 0 && cols <= MAX_DIM, "shape out of range");
        Gf2Matrix {
            rows: rows as u8,
            cols: cols as u8,
            data: [0; MAX_DIM],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        m
    }

    /// Builds a matrix from packed rows (bit `j` of `rows[i]` is entry `(i, j)`).
    pub fn from_rows(rows: &[u32], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.data[i] = r & low_mask(cols);
        }
        m
    }

    pub fn from_vectors(rows: &[Gf2Vector]) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let packed: Vec<u32> = rows.iter().map(Gf2Vector::bits).collect();
        Self::from_rows(&packed, cols)
    }

    /// Parses a bit grid given as one `"0101…"` string per row.
    pub fn from_bit_rows(rows: &[&str]) -> Result<Self, Error> {
        let vecs = rows
            .iter()
            .map(|r| r.parse::<Gf2Vector>())
            .collect::<Result<Vec<_>, _>>()?;
        if vecs.is_empty() || vecs.iter().any(|v| v.len() != vecs[0].len()) {
            return Err(Error::Parse("ragged or empty bit grid".into()));
        }
        Ok(Self::from_vectors(&vecs))
    }

    pub fn rows(&self) -> usize {
        self.rows as usize
    }

    pub fn cols(&self) -> usize {
        self.cols as usize
    }

    pub fn row(&self, i: usize) -> u32 {
        assert!(i < self.rows());
        self.data[i]
    }

    pub fn row_vector(&self, i: usize) -> Gf2Vector {
        Gf2Vector::from_bits(self.row(i), self.cols())
    }

    pub fn row_words(&self) -> &[u32] {
        &self.data[..self.rows()]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows() && j < self.cols());
        self.data[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows() && j < self.cols());
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.row_words().iter().all(|&r| r == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols(), self.rows());
        for i in 0..self.rows() {
            let mut r = self.data[i];
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                t.data[j] |= 1 << i;
                r &= r - 1;
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn trace(&self) -> bool {
        assert!(self.is_square());
        (0..self.rows()).fold(false, |acc, i| acc ^ self.get(i, i))
    }

    /// Repeated squaring; `pow(0)` is the identity.
    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = *self;
        let mut acc = Self::identity(self.rows());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows();
        let mut left = *self;
        let mut right = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| left.data[r] >> col & 1 == 1)?;
            left.data.swap(col, pivot);
            right.data.swap(col, pivot);
            for r in 0..n {
                if r != col && left.data[r] >> col & 1 == 1 {
                    left.data[r] ^= left.data[col];
                    right.data[r] ^= right.data[col];
                }
            }
        }
        Some(right)
    }

    /// GF(2) row rank.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<u32> = self.row_words().to_vec();
        let mut rank = 0;
        for col in 0..self.cols() {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for r in rows.iter_mut().skip(rank + 1) {
                if *r >> col & 1 == 1 {
                    *r ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    /// The unique reduced row-echelon form; zero rows collect at the bottom.
    ///
    /// Pivots are taken left to right (lowest column index first). Two
    /// matrices of the same shape have equal output iff their row spaces agree.
    pub fn rref_canonical(&self) -> Self {
        let mut out = *self;
        let mut rank = 0;
        for col in 0..self.cols() {
            let Some(p) = (rank..self.rows()).find(|&r| out.data[r] >> col & 1 == 1) else {
                continue;
            };
            out.data.swap(rank, p);
            let pivot = out.data[rank];
            for r in 0..self.rows() {
                if r != rank && out.data[r] >> col & 1 == 1 {
                    out.data[r] ^= pivot;
                }
            }
            rank += 1;
        }
        out
    }

    /// The reduced row-echelon basis of the row space, with zero rows dropped.
    pub fn row_space_basis(&self) -> Self {
        let r = self.rref_canonical();
        let rank = r.row_words().iter().take_while(|&&w| w != 0).count();
        Self::from_rows(&r.data[..rank], self.cols())
    }

    /// Every vector of the row space, including zero, in increasing packed order.
    pub fn row_space(&self) -> Vec<Gf2Vector> {
        let basis = self.row_space_basis();
        let k = basis.rows();
        let mut out: Vec<Gf2Vector> = (0u32..1 << k)
            .map(|sel| {
                let mut acc = 0;
                for i in 0..k {
                    if sel >> i & 1 == 1 {
                        acc ^= basis.data[i];
                    }
                }
                Gf2Vector::from_bits(acc, self.cols())
            })
            .collect();
        out.sort();
        out
    }

    /// Determinant and adjugate (transposed cofactor matrix) of a 3×3 matrix.
    pub fn det_adjugate3(&self) -> (bool, Gf2Matrix) {
        assert!(self.rows() == 3 && self.cols() == 3, "det_adjugate3 needs a 3x3 matrix");
        let e = |i: usize, j: usize| self.get(i, j);
        let minor = |r: usize, c: usize| {
            let rs: Vec<usize> = (0..3).filter(|&x| x != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&x| x != c).collect();
            (e(rs[0], cs[0]) & e(rs[1], cs[1])) ^ (e(rs[0], cs[1]) & e(rs[1], cs[0]))
        };
        let mut adj = Gf2Matrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                adj.set(i, j, minor(j, i));
            }
        }
        let det = (0..3).fold(false, |acc, j| acc ^ (e(0, j) & minor(0, j)));
        (det, adj)
    }

    pub fn det3(&self) -> bool {
        self.det_adjugate3().0
    }

    /// Packs a matrix with at most 64 entries into one word, row `i` at bits
    /// `[i·cols, (i+1)·cols)`.
    pub fn pack(&self) -> u64 {
        let cols = self.cols();
        assert!(self.rows() * cols <= 64, "matrix too large to pack");
        self.row_words()
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &r)| acc | (u64::from(r) << (i * cols)))
    }

    pub fn unpack(word: u64, rows: usize, cols: usize) -> Self {
        assert!(rows * cols <= 64);
        let mut m = Self::zeros(rows, cols);
        let mask = u64::from(low_mask(cols));
        for i in 0..rows {
            m.data[i] = ((word >> (i * cols)) & mask) as u32;
        }
        m
    }
}

impl Add for Gf2Matrix {
    type Output = Gf2Matrix;

    fn add(self, rhs: Self) -> Self::Output {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        let mut out = self;
        for i in 0..self.rows() {
            out.data[i] ^= rhs.data[i];
        }
        out
    }
}

impl Mul for Gf2Matrix {
    type Output = Gf2Matrix;

    fn mul(self, rhs: Self) -> Self::Output {
        assert_eq!(self.cols(), rhs.rows(), "product shape mismatch");
        let mut out = Gf2Matrix::zeros(self.rows(), rhs.cols());
        for i in 0..self.rows() {
            let mut r = self.data[i];
            let mut acc = 0;
            while r != 0 {
                acc ^= rhs.data[r.trailing_zeros() as usize];
                r &= r - 1;
            }
            out.data[i] = acc;
        }
        out
    }
}

/// All `k`-dimensional subspaces of GF(2)^n, each as its reduced row-echelon
/// basis, in increasing matrix order.
pub fn enumerate_subspaces(n: usize, k: usize) -> Vec<Gf2Matrix> {
    assert!(k >= 1 && k <= n && n <= MAX_DIM);
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(n, k, 0, &mut pivots, &mut out);
    out.sort();
    out
}

fn choose_pivots(n: usize, k: usize, start: usize, pivots: &mut Vec<usize>, out: &mut Vec<Gf2Matrix>) {
    if pivots.len() == k {
        fill_free_entries(n, pivots, out);
        return;
    }
    for p in start..n {
        pivots.push(p);
        choose_pivots(n, k, p + 1, pivots, out);
        pivots.pop();
    }
}

fn fill_free_entries(n: usize, pivots: &[usize], out: &mut Vec<Gf2Matrix>) {
    let pivot_mask: u32 = pivots.iter().fold(0, |m, &p| m | 1 << p);
    // free positions of row i: columns right of its pivot that are not pivots
    let free: Vec<Vec<usize>> = pivots
        .iter()
        .map(|&p| ((p + 1)..n).filter(|c| pivot_mask >> c & 1 == 0).collect())
        .collect();
    let total: usize = free.iter().map(Vec::len).sum();
    for sel in 0u64..1 << total {
        let mut bit = 0;
        let rows: Vec<u32> = pivots
            .iter()
            .zip(&free)
            .map(|(&p, cols)| {
                let mut r = 1u32 << p;
                for &c in cols {
                    if sel >> bit & 1 == 1 {
                        r |= 1 << c;
                    }
                    bit += 1;
                }
                r
            })
            .collect();
        out.push(Gf2Matrix::from_rows(&rows, n));
    }
}
