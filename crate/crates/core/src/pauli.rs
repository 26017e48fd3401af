//! Real N-qubit Pauli operators in the symplectic encoding.
//!
//! An operator is `(-1)^s Z^a1 X^b1 ⊗ … ⊗ Z^aN X^bN` with `Y = ZX` (the real,
//! antisymmetric matrix). The up-to-sign class is the vector
//! `(a1 … aN b1 … bN)` of length `2N`; the letters map as
//! `I ↦ (0,0)`, `X ↦ (0,1)`, `Y ↦ (1,1)`, `Z ↦ (1,0)` for each `(a_i, b_i)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::gf2::Gf2Vector;
use crate::Error;

/// Widest operator supported (a 20-bit symplectic vector).
pub const MAX_QUBITS: usize = 10;

/// A signed Pauli operator. Qubit `i` (0 = leftmost letter) lives at bit `i`
/// of both `a` and `b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct PauliOperator {
    sign: bool,
    width: u8,
    a: u16,
    b: u16,
}

impl PauliOperator {
    pub fn identity(width: usize) -> Self {
        Self::new(false, width, 0, 0)
    }

    pub fn new(sign: bool, width: usize, a: u16, b: u16) -> Self {
        assert!((1..=MAX_QUBITS).contains(&width), "width {width} out of range");
        let mask = ((1u32 << width) - 1) as u16;
        PauliOperator {
            sign,
            width: width as u8,
            a: a & mask,
            b: b & mask,
        }
    }

    /// The positive representative of a symplectic vector of even length.
    pub fn from_vector(v: Gf2Vector) -> Self {
        assert!(v.len().is_multiple_of(2), "symplectic vectors have even length");
        let n = v.len() / 2;
        let mask = (1u32 << n) - 1;
        Self::new(false, n, (v.bits() & mask) as u16, (v.bits() >> n & mask) as u16)
    }

    pub fn sign(&self) -> bool {
        self.sign
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn a_bits(&self) -> u16 {
        self.a
    }

    pub fn b_bits(&self) -> u16 {
        self.b
    }

    /// The class vector `(a1 … aN b1 … bN)`.
    pub fn vector(&self) -> Gf2Vector {
        let n = self.width();
        Gf2Vector::from_bits(u32::from(self.a) | u32::from(self.b) << n, 2 * n)
    }

    /// Canonical representative of the up-to-sign class (`s = 0`).
    pub fn unsigned(&self) -> Self {
        PauliOperator { sign: false, ..*self }
    }

    pub fn negated(&self) -> Self {
        PauliOperator {
            sign: !self.sign,
            ..*self
        }
    }

    pub fn is_identity_class(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn letter(&self, qubit: usize) -> char {
        assert!(qubit < self.width());
        match (self.a >> qubit & 1, self.b >> qubit & 1) {
            (0, 0) => 'I',
            (0, 1) => 'X',
            (1, 1) => 'Y',
            _ => 'Z',
        }
    }

    /// Letters without the sign.
    pub fn letters(&self) -> String {
        (0..self.width()).map(|q| self.letter(q)).collect()
    }

    fn check_width(&self, other: &Self) -> Result<(), Error> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        Ok(())
    }

    /// Exact signed product `x·x'`: the sign exponent is `s + s' + Σ a'_i b_i`.
    pub fn multiply(&self, other: &Self) -> Result<Self, Error> {
        self.check_width(other)?;
        let twist = (other.a & self.b).count_ones() & 1 == 1;
        Ok(PauliOperator {
            sign: self.sign ^ other.sign ^ twist,
            width: self.width,
            a: self.a ^ other.a,
            b: self.b ^ other.b,
        })
    }

    /// `⟨u, v⟩ = Σ (a_i b'_i + b_i a'_i)`; zero iff the operators commute.
    pub fn symplectic_product(&self, other: &Self) -> Result<bool, Error> {
        self.check_width(other)?;
        Ok(((self.a & other.b) ^ (self.b & other.a)).count_ones() & 1 == 1)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool, Error> {
        Ok(!self.symplectic_product(other)?)
    }

    /// `Q0(v) = Σ a_i b_i`: zero for symmetric operators, one for antisymmetric.
    pub fn q0(&self) -> bool {
        (self.a & self.b).count_ones() & 1 == 1
    }

    pub fn is_symmetric(&self) -> bool {
        !self.q0()
    }

    /// `Q_w(self) = Q0(self) + ⟨w, self⟩`.
    pub fn quadratic_form(&self, w: &Self) -> Result<bool, Error> {
        Ok(self.q0() ^ w.symplectic_product(self)?)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign {
            write!(f, "-")?;
        }
        write!(f, "{}", self.letters())
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pauli(s, None)
    }
}

/// Parses labels such as `XYZ` or `-IIY`, optionally enforcing a width.
pub fn parse_pauli(label: &str, expected_width: Option<usize>) -> Result<PauliOperator, Error> {
    let (sign, body) = match label.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, label),
    };
    if body.is_empty() {
        return Err(Error::Parse(format!("empty operator label {label:?}")));
    }
    let width = body.chars().count();
    if width > MAX_QUBITS {
        return Err(Error::Parse(format!("label {label:?} wider than {MAX_QUBITS} qubits")));
    }
    if let Some(w) = expected_width {
        if w != width {
            return Err(Error::WidthMismatch { left: w, right: width });
        }
    }
    let (mut a, mut b) = (0u16, 0u16);
    for (q, c) in body.chars().enumerate() {
        let (ai, bi) = match c {
            'I' => (0, 0),
            'X' => (0, 1),
            'Y' => (1, 1),
            'Z' => (1, 0),
            other => return Err(Error::Parse(format!("unknown letter {other:?} in {label:?}"))),
        };
        a |= ai << q;
        b |= bi << q;
    }
    Ok(PauliOperator::new(sign, width, a, b))
}

/// The symplectic form on class vectors of even length `2N`.
pub fn symplectic_form(u: Gf2Vector, v: Gf2Vector) -> bool {
    assert_eq!(u.len(), v.len(), "length mismatch");
    let n = u.len() / 2;
    let mask = (1u32 << n) - 1;
    let (ua, ub) = (u.bits() & mask, u.bits() >> n);
    let (va, vb) = (v.bits() & mask, v.bits() >> n);
    ((ua & vb) ^ (ub & va)).count_ones() & 1 == 1
}

/// `Q0` on a class vector.
pub fn q0(v: Gf2Vector) -> bool {
    let n = v.len() / 2;
    ((v.bits() & ((1 << n) - 1)) & (v.bits() >> n)).count_ones() & 1 == 1
}

/// Letter label of a class vector.
pub fn label(v: Gf2Vector) -> String {
    PauliOperator::from_vector(v).letters()
}

/// Parses an unsigned class label into its vector.
pub fn vector_of(label: &str) -> Result<Gf2Vector, Error> {
    Ok(parse_pauli(label, None)?.vector())
}
