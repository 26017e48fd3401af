//! Explicit Pauli matrices over the Gaussian integers, used as an oracle
//! for the bit-level arithmetic.

#![allow(dead_code)]

use std::ops::{Add, Mul, Neg};

use heptads::PauliOperator;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Gauss {
    pub re: i64,
    pub im: i64,
}

pub const ZERO: Gauss = Gauss { re: 0, im: 0 };
pub const ONE: Gauss = Gauss { re: 1, im: 0 };
pub const I: Gauss = Gauss { re: 0, im: 1 };

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        Gauss {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

fn g(re: i64) -> Gauss {
    Gauss { re, im: 0 }
}

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub n: usize,
    pub entries: Vec<Gauss>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![ZERO; n * n];
        for i in 0..n {
            entries[i * n + i] = ONE;
        }
        Matrix { n, entries }
    }

    fn from_2x2(e: [[Gauss; 2]; 2]) -> Self {
        Matrix {
            n: 2,
            entries: vec![e[0][0], e[0][1], e[1][0], e[1][1]],
        }
    }

    pub fn at(&self, i: usize, j: usize) -> Gauss {
        self.entries[i * self.n + j]
    }

    pub fn kron(&self, o: &Matrix) -> Matrix {
        let n = self.n * o.n;
        let mut entries = vec![ZERO; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..o.n {
                    for l in 0..o.n {
                        entries[(i * o.n + k) * n + j * o.n + l] = self.at(i, j) * o.at(k, l);
                    }
                }
            }
        }
        Matrix { n, entries }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        Matrix {
            n,
            entries: (0..n * n).map(|k| self.at(k % n, k / n)).collect(),
        }
    }

    pub fn scale(&self, c: Gauss) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|&e| e * c).collect(),
        }
    }

    /// `Some(c)` when the matrix is `c·I`.
    pub fn as_scalar(&self) -> Option<Gauss> {
        let c = self.at(0, 0);
        (*self == Matrix::identity(self.n).scale(c)).then_some(c)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        let n = self.n;
        assert_eq!(n, o.n);
        let mut entries = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = entries[i * n + j] + a * o.at(k, j);
                }
            }
        }
        Matrix { n, entries }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(&a, &b)| a + b).collect(),
        }
    }
}

/// Single-qubit matrix. With `hermitian` the Y slot is `σ_y`, otherwise the
/// real product `ZX`.
pub fn letter(c: char, hermitian: bool) -> Matrix {
    let e = match c {
        'I' => [[ONE, ZERO], [ZERO, ONE]],
        'X' => [[ZERO, ONE], [ONE, ZERO]],
        'Z' => [[ONE, ZERO], [ZERO, g(-1)]],
        'Y' if hermitian => [[ZERO, -I], [I, ZERO]],
        'Y' => [[ZERO, ONE], [g(-1), ZERO]],
        _ => panic!("unknown letter {c}"),
    };
    Matrix::from_2x2(e)
}

/// Tensor product of the letters of `word`, first letter outermost.
pub fn word_matrix(word: &str, hermitian: bool) -> Matrix {
    word.chars()
        .map(|c| letter(c, hermitian))
        .reduce(|acc, m| acc.kron(&m))
        .expect("nonempty word")
}

/// The real matrix of a signed operator `(-1)^s Z^a X^b`.
pub fn real_matrix(op: &PauliOperator) -> Matrix {
    let m = word_matrix(&op.letters(), false);
    if op.sign() {
        m.scale(g(-1))
    } else {
        m
    }
}
