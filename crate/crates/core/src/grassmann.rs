//! Plücker coordinates of planes of PG(5,2) and the map from heptads to
//! symmetric four-qubit observables.
//!
//! A 3-space with basis rows `(A|B)` has twenty Plücker coordinates
//! `P_{μνρ}`, the 3×3 minors on columns `μ<ν<ρ` (columns 1–3 are the `a`
//! half of a three-qubit vector, 4–6 the `b` half). They are grouped as a
//! four-tuple `(m, M, N, n)`:
//!
//! ```text
//! m = P123   M = | P156 P256 P356 |   N = | P234 P235 P236 |   n = P456
//!                | P146 P246 P346 |       | P134 P135 P136 |
//!                | P145 P245 P345 |       | P124 P125 P126 |
//! ```
//!
//! For isotropic planes `M` and `N` are symmetric, and the eight coordinates
//! `(P123, P156, P246, P345 | P456, P234, P135, P126)` read as `(a1..a4|b1..b4)`
//! give a symmetric four-qubit class.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::clifford7::{self, CliffordLabel};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::pauli::{self, PauliOperator};
use crate::polar::{context_space, IsotropicPlane, Spread};
use crate::spgroup::GroupElement;
use crate::Error;

/// Column triples (1-based) in lexicographic order; coordinate `i` of a
/// [`PluckerPoint`] is the minor on `TRIPLES[i]`.
pub const TRIPLES: [[u8; 3]; 20] = [
    [1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 3, 4],
    [1, 3, 5], [1, 3, 6], [1, 4, 5], [1, 4, 6], [1, 5, 6],
    [2, 3, 4], [2, 3, 5], [2, 3, 6], [2, 4, 5], [2, 4, 6],
    [2, 5, 6], [3, 4, 5], [3, 4, 6], [3, 5, 6], [4, 5, 6],
];

/// Bit position of the coordinate on a column triple, in any order.
pub fn coord_index(triple: [u8; 3]) -> usize {
    let mut t = triple;
    t.sort_unstable();
    TRIPLES
        .iter()
        .position(|x| *x == t)
        .unwrap_or_else(|| panic!("{triple:?} is not a column triple"))
}

const fn tri(a: u8, b: u8, c: u8) -> [u8; 3] {
    [a, b, c]
}

const M_LAYOUT: [[[u8; 3]; 3]; 3] = [
    [tri(1, 5, 6), tri(2, 5, 6), tri(3, 5, 6)],
    [tri(1, 4, 6), tri(2, 4, 6), tri(3, 4, 6)],
    [tri(1, 4, 5), tri(2, 4, 5), tri(3, 4, 5)],
];

const N_LAYOUT: [[[u8; 3]; 3]; 3] = [
    [tri(2, 3, 4), tri(2, 3, 5), tri(2, 3, 6)],
    [tri(1, 3, 4), tri(1, 3, 5), tri(1, 3, 6)],
    [tri(1, 2, 4), tri(1, 2, 5), tri(1, 2, 6)],
];

/// The four-qubit coordinates `(a1 a2 a3 a4 b1 b2 b3 b4)`.
pub const FOUR_QUBIT_LAYOUT: [[u8; 3]; 8] = [
    tri(1, 2, 3), tri(1, 5, 6), tri(2, 4, 6), tri(3, 4, 5),
    tri(4, 5, 6), tri(2, 3, 4), tri(1, 3, 5), tri(1, 2, 6),
];

/// A point of the 20-dimensional trivector space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PluckerPoint {
    bits: u32,
}

/// The `(m, M, N, n)` view of a [`PluckerPoint`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FourTuple {
    pub m: bool,
    pub big_m: Gf2Matrix,
    pub big_n: Gf2Matrix,
    pub n: bool,
}

impl PluckerPoint {
    pub fn from_bits(bits: u32) -> Self {
        PluckerPoint { bits: bits & 0xf_ffff }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// `P_{μνρ}`.
    pub fn coord(&self, triple: [u8; 3]) -> bool {
        self.bits >> coord_index(triple) & 1 == 1
    }

    fn layout(&self, layout: &[[[u8; 3]; 3]; 3]) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(3, 3);
        for (i, row) in layout.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                out.set(i, j, self.coord(*t));
            }
        }
        out
    }

    pub fn four_tuple(&self) -> FourTuple {
        FourTuple {
            m: self.coord([1, 2, 3]),
            big_m: self.layout(&M_LAYOUT),
            big_n: self.layout(&N_LAYOUT),
            n: self.coord([4, 5, 6]),
        }
    }

    pub fn from_four_tuple(t: &FourTuple) -> Self {
        let mut bits = 0u32;
        let mut put = |triple: [u8; 3], value: bool| {
            if value {
                bits |= 1 << coord_index(triple);
            }
        };
        put([1, 2, 3], t.m);
        put([4, 5, 6], t.n);
        for i in 0..3 {
            for j in 0..3 {
                put(M_LAYOUT[i][j], t.big_m.get(i, j));
                put(N_LAYOUT[i][j], t.big_n.get(i, j));
            }
        }
        PluckerPoint { bits }
    }

    /// The eight coordinates of [`FOUR_QUBIT_LAYOUT`] as a four-qubit class.
    pub fn four_qubit_part(&self) -> FourQubitPoint {
        let bits = FOUR_QUBIT_LAYOUT
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, t)| acc | u32::from(self.coord(*t)) << i);
        FourQubitPoint::from_vector(Gf2Vector::from_bits(bits, 8))
    }
}

impl fmt::Display for PluckerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..20 {
            write!(f, "{}", self.bits >> i & 1)?;
        }
        Ok(())
    }
}

/// All twenty 3×3 minors of a 3×6 matrix of rank three.
pub fn plucker_embed(basis: &Gf2Matrix) -> Result<PluckerPoint, Error> {
    if basis.rows() != 3 || basis.cols() != 6 {
        return Err(Error::Construction(format!(
            "Plücker coordinates need a 3x6 basis, got {}x{}",
            basis.rows(),
            basis.cols()
        )));
    }
    let rank = basis.rank();
    if rank < 3 {
        return Err(Error::RankDeficient(rank));
    }
    let mut bits = 0u32;
    for (i, t) in TRIPLES.iter().enumerate() {
        let mut minor = Gf2Matrix::zeros(3, 3);
        for r in 0..3 {
            for (c, col) in t.iter().enumerate() {
                minor.set(r, c, basis.get(r, usize::from(*col) - 1));
            }
        }
        if minor.det3() {
            bits |= 1 << i;
        }
    }
    Ok(PluckerPoint { bits })
}

/// `mM = N♯`, `nN = M♯` and `mn I = MN = NM`.
///
/// `M` and `N` need not commute, and the relations with `MN` alone are
/// satisfied by 588 nonzero trivectors that are not decomposable.
pub fn check_separable(p: &PluckerPoint) -> bool {
    let t = p.four_tuple();
    let mn = scale(t.m && t.n, Gf2Matrix::identity(3));
    one_sided_relations(&t) && t.big_n * t.big_m == mn
}

fn scale(s: bool, x: Gf2Matrix) -> Gf2Matrix {
    if s {
        x
    } else {
        Gf2Matrix::zeros(3, 3)
    }
}

fn one_sided_relations(t: &FourTuple) -> bool {
    let (_, m_sharp) = t.big_m.det_adjugate3();
    let (_, n_sharp) = t.big_n.det_adjugate3();
    scale(t.m, t.big_m) == n_sharp
        && scale(t.n, t.big_n) == m_sharp
        && scale(t.m && t.n, Gf2Matrix::identity(3)) == t.big_m * t.big_n
}

/// `M` and `N` symmetric, i.e. `J ∧ P = 0`.
pub fn check_primitive(p: &PluckerPoint) -> bool {
    let t = p.four_tuple();
    t.big_m.is_symmetric() && t.big_n.is_symmetric()
}

/// `B(p, q) = mn' + nm' + Tr(MN' + NM')`.
pub fn symplectic_pairing(p: &PluckerPoint, q: &PluckerPoint) -> bool {
    let (s, t) = (p.four_tuple(), q.four_tuple());
    (s.m && t.n) ^ (s.n && t.m) ^ (s.big_m * t.big_n + s.big_n * t.big_m).trace()
}

/// `q0(p) = mn + Tr(MN)`.
pub fn quadratic_form(p: &PluckerPoint) -> bool {
    let t = p.four_tuple();
    (t.m && t.n) ^ (t.big_m * t.big_n).trace()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct AmbientForms {
    pub pairing: bool,
    pub q0_p: bool,
    pub q0_q: bool,
}

pub fn ambient_forms(p: &PluckerPoint, q: &PluckerPoint) -> AmbientForms {
    AmbientForms {
        pairing: symplectic_pairing(p, q),
        q0_p: quadratic_form(p),
        q0_q: quadratic_form(q),
    }
}

/// A four-qubit class `(a1 a2 a3 a4 b1 b2 b3 b4)`, up to sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FourQubitPoint {
    op: PauliOperator,
}

impl FourQubitPoint {
    pub fn from_vector(v: Gf2Vector) -> Self {
        assert_eq!(v.len(), 8, "four-qubit vectors have eight components");
        FourQubitPoint {
            op: PauliOperator::from_vector(v),
        }
    }

    pub fn operator(&self) -> PauliOperator {
        self.op
    }

    pub fn vector(&self) -> Gf2Vector {
        self.op.vector()
    }

    pub fn is_zero(&self) -> bool {
        self.op.is_identity_class()
    }

    pub fn is_symmetric(&self) -> bool {
        self.op.is_symmetric()
    }

    pub fn anticommutes_with(&self, other: &Self) -> bool {
        pauli::symplectic_form(self.vector(), other.vector())
    }

    pub fn transform(&self, g: &GroupElement) -> Self {
        Self::from_vector(g.apply(self.vector()))
    }
}

impl fmt::Display for FourQubitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.op.letters())
    }
}

impl FromStr for FourQubitPoint {
    type Err = Error;

    /// A four-letter label; a leading sign is accepted and dropped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let op = pauli::parse_pauli(s.trim(), Some(4))?;
        Ok(FourQubitPoint { op: op.unsigned() })
    }
}

impl Serialize for FourQubitPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn plane_plucker(plane: &IsotropicPlane) -> PluckerPoint {
    plucker_embed(plane.basis()).expect("plane bases have rank three")
}

/// The symmetric four-qubit class labelling a heptad.
pub fn plane_to_four_qubit(plane: &IsotropicPlane) -> FourQubitPoint {
    plane_plucker(plane).four_qubit_part()
}

/// Same as [`plane_to_four_qubit`] for an arbitrary 3×6 basis; rank-deficient
/// and non-isotropic bases are rejected.
pub fn basis_to_four_qubit(basis: &Gf2Matrix) -> Result<FourQubitPoint, Error> {
    let rows: Vec<Gf2Vector> = (0..basis.rows()).map(|i| basis.row_vector(i)).collect();
    let plane = IsotropicPlane::span(&rows)?;
    Ok(plane_to_four_qubit(&plane))
}

/// Context-space index of the plane labelled by each 8-bit class.
fn inverse_table() -> &'static [Option<u8>; 256] {
    static TABLE: OnceLock<[Option<u8>; 256]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [None; 256];
        for (i, plane) in context_space().iter().enumerate() {
            let slot = &mut table[plane_to_four_qubit(plane).vector().bits() as usize];
            assert!(slot.is_none(), "heptad labels must be distinct");
            *slot = Some(i as u8);
        }
        table
    })
}

pub fn four_qubit_to_plane(f: &FourQubitPoint) -> Result<IsotropicPlane, Error> {
    if f.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !f.is_symmetric() {
        return Err(Error::NotOnQuadric(f.to_string()));
    }
    let index = inverse_table()[f.vector().bits() as usize]
        .ok_or_else(|| Error::Inconsistent(format!("no heptad is labelled {f}")))?;
    Ok(context_space()[usize::from(index)])
}

/// Whether `label(P·g6) = label(P)·g8` for all 135 heptads.
pub fn check_equivariance(g6: &GroupElement, g8: &GroupElement) -> bool {
    if g6.dim() != 6 || g8.dim() != 8 {
        return false;
    }
    context_space().iter().all(|plane| {
        let moved = plane.transform(g6.matrix()).expect("symplectic maps preserve planes");
        plane_to_four_qubit(&moved) == plane_to_four_qubit(plane).transform(g8)
    })
}

/// Labels of the nine heptads of a spread: an ovoid of the four-qubit
/// quadric, i.e. nine pairwise anticommuting symmetric observables.
pub fn spread_to_clifford9(spread: &Spread) -> Vec<FourQubitPoint> {
    spread.planes().iter().map(plane_to_four_qubit).collect()
}

/// Inverse of [`spread_to_clifford9`]; fails unless the nine labels come
/// from pairwise disjoint heptads.
pub fn ovoid_to_spread(ovoid: &[FourQubitPoint]) -> Result<Spread, Error> {
    let planes = ovoid.iter().map(four_qubit_to_plane).collect::<Result<Vec<_>, _>>()?;
    Spread::new(planes)
}

/// One row of the heptad ↔ four-qubit dictionary.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionRow {
    pub index: usize,
    pub points: Vec<String>,
    pub clifford: Vec<CliffordLabel>,
    pub four_qubit: FourQubitPoint,
}

/// The full dictionary in context-space order.
pub fn bijection_table() -> Vec<BijectionRow> {
    context_space()
        .iter()
        .enumerate()
        .map(|(index, plane)| BijectionRow {
            index,
            points: plane.labels(),
            clifford: clifford7::plane_labels(plane),
            four_qubit: plane_to_four_qubit(plane),
        })
        .collect()
}
