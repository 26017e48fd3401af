//! The symplectic polar space W(2N−1, 2) of N-qubit observables.
//!
//! Points are the nonzero class vectors; a subspace belongs to the polar
//! space when it is totally isotropic, i.e. its observables pairwise commute.
//! For three qubits the maximal ones are the 135 planes ([`IsotropicPlane`]),
//! which form the context space.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::gf2::{enumerate_subspaces, Gf2Matrix, Gf2Vector};
use crate::pauli::{self, symplectic_form};
use crate::Error;

/// Nonzero class vectors of `qubits`-qubit observables, in increasing packed order.
pub fn points(qubits: usize) -> Vec<Gf2Vector> {
    let n = 2 * qubits;
    (1u32..1 << n).map(|b| Gf2Vector::from_bits(b, n)).collect()
}

/// The 63 points of W(5,2).
pub fn enumerate_points() -> Vec<Gf2Vector> {
    points(3)
}

/// A linear subspace stored by its reduced row-echelon basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    basis: Gf2Matrix,
}

impl Subspace {
    pub fn span(vectors: &[Gf2Vector]) -> Self {
        Subspace {
            basis: Gf2Matrix::from_vectors(vectors).row_space_basis(),
        }
    }

    pub fn basis(&self) -> &Gf2Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Nonzero vectors of the subspace.
    pub fn points(&self) -> Vec<Gf2Vector> {
        self.basis.row_space().into_iter().filter(|v| !v.is_zero()).collect()
    }

    pub fn is_totally_isotropic(&self) -> bool {
        let k = self.dim();
        (0..k).all(|i| (i + 1..k).all(|j| !symplectic_form(self.basis.row_vector(i), self.basis.row_vector(j))))
    }
}

/// All totally isotropic subspaces of dimension `dim` for `qubits` qubits.
pub fn enumerate_isotropic_in(qubits: usize, dim: usize) -> Vec<Subspace> {
    enumerate_subspaces(2 * qubits, dim)
        .into_iter()
        .map(|basis| Subspace { basis })
        .filter(Subspace::is_totally_isotropic)
        .collect()
}

/// Points (`dim = 1`), lines (`dim = 2`) or planes (`dim = 3`) of W(5,2).
pub fn enumerate_isotropic(dim: usize) -> Vec<Subspace> {
    enumerate_isotropic_in(3, dim)
}

/// A maximal totally isotropic subspace of the three-qubit space: a heptad
/// of mutually commuting observables carrying a Fano-plane structure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct IsotropicPlane {
    basis: Gf2Matrix,
    points: [Gf2Vector; 7],
    mask: u64,
}

impl PartialOrd for IsotropicPlane {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IsotropicPlane {
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis.cmp(&other.basis)
    }
}

impl IsotropicPlane {
    /// The plane spanned by the given three-qubit vectors.
    pub fn span(vectors: &[Gf2Vector]) -> Result<Self, Error> {
        if vectors.is_empty() || vectors.iter().any(|v| v.len() != 6) {
            return Err(Error::WidthMismatch {
                left: 6,
                right: vectors.first().map_or(0, Gf2Vector::len),
            });
        }
        let basis = Gf2Matrix::from_vectors(vectors).row_space_basis();
        if basis.rows() != 3 {
            return Err(Error::RankDeficient(basis.rows()));
        }
        let sub = Subspace { basis };
        if !sub.is_totally_isotropic() {
            return Err(Error::NotIsotropic);
        }
        let pts = sub.points();
        let mut points = [Gf2Vector::zero(6); 7];
        points.copy_from_slice(&pts);
        let mask = pts.iter().fold(0u64, |m, v| m | 1 << v.bits());
        Ok(IsotropicPlane { basis, points, mask })
    }

    /// Parses comma- or space-separated operator labels and spans them.
    pub fn from_labels(labels: &str) -> Result<Self, Error> {
        let vecs = labels
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| Ok(pauli::parse_pauli(s, Some(3))?.vector()))
            .collect::<Result<Vec<_>, Error>>()?;
        Self::span(&vecs)
    }

    /// Canonical reduced row-echelon 3×6 basis.
    pub fn basis(&self) -> &Gf2Matrix {
        &self.basis
    }

    /// The seven points in increasing packed order.
    pub fn points(&self) -> &[Gf2Vector; 7] {
        &self.points
    }

    /// Point set as a bitmask indexed by packed vector value.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, v: Gf2Vector) -> bool {
        v.len() == 6 && self.mask >> v.bits() & 1 == 1
    }

    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(|v| pauli::label(*v)).collect()
    }

    /// The seven lines `{u, v, u+v}`, each sorted, in increasing order.
    pub fn lines(&self) -> Vec<[Gf2Vector; 3]> {
        let mut out = Vec::with_capacity(7);
        for (i, &u) in self.points.iter().enumerate() {
            for &v in &self.points[i + 1..] {
                let w = u + v;
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
        out.sort();
        out
    }

    pub fn intersection(&self, other: &Self) -> Vec<Gf2Vector> {
        self.points.iter().copied().filter(|v| other.contains(*v)).collect()
    }

    /// Image under a 6×6 matrix acting on row vectors from the right.
    pub fn transform(&self, g: &Gf2Matrix) -> Result<Self, Error> {
        let rows: Vec<Gf2Vector> = (0..3).map(|i| self.basis.row_vector(i).mul_matrix(g)).collect();
        Self::span(&rows)
    }
}

impl fmt::Display for IsotropicPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

/// The 135 planes of W(5,2), sorted by canonical basis.
pub fn context_space() -> &'static [IsotropicPlane] {
    static PLANES: OnceLock<Vec<IsotropicPlane>> = OnceLock::new();
    PLANES.get_or_init(|| {
        let mut planes: Vec<IsotropicPlane> = enumerate_isotropic(3)
            .iter()
            .map(|s| IsotropicPlane::span(&s.points()).expect("enumerated plane is isotropic"))
            .collect();
        planes.sort();
        planes
    })
}

/// Position of a plane in [`context_space`].
pub fn plane_index(plane: &IsotropicPlane) -> usize {
    context_space()
        .binary_search(plane)
        .expect("every isotropic plane belongs to the context space")
}

/// How a set of vectors sits relative to its symplectic polar.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Isotropy {
    NonIsotropic,
    Isotropic,
    TotallyIsotropic,
}

/// All vectors (zero included) orthogonal to every member of `set`.
pub fn perp_set(set: &[Gf2Vector], len: usize) -> Vec<Gf2Vector> {
    (0u32..1 << len)
        .map(|b| Gf2Vector::from_bits(b, len))
        .filter(|v| set.iter().all(|w| !symplectic_form(*w, *v)))
        .collect()
}

/// Classifies the span `W` of `set` by `W ∩ W⊥`.
pub fn classify_isotropy(set: &[Gf2Vector], len: usize) -> Isotropy {
    if set.is_empty() {
        return Isotropy::TotallyIsotropic;
    }
    let span = Gf2Matrix::from_vectors(set).row_space();
    let perp = perp_set(set, len);
    let common = span.iter().filter(|v| !v.is_zero() && perp.contains(v)).count();
    if common + 1 == span.len() {
        Isotropy::TotallyIsotropic
    } else if common > 0 {
        Isotropy::Isotropic
    } else {
        Isotropy::NonIsotropic
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum QuadricKind {
    Hyperbolic,
    Elliptic,
}

#[derive(Clone, Debug)]
pub struct Quadric {
    pub kind: QuadricKind,
    pub points: Vec<Gf2Vector>,
}

/// Zero locus `{v ≠ 0 : Q_w(v) = 0}` of the quadratic form labeled by `w`.
pub fn quadric_points(w: Gf2Vector) -> Quadric {
    let kind = if pauli::q0(w) {
        QuadricKind::Elliptic
    } else {
        QuadricKind::Hyperbolic
    };
    let points = points(w.len() / 2)
        .into_iter()
        .filter(|v| !(pauli::q0(*v) ^ symplectic_form(w, *v)))
        .collect();
    Quadric { kind, points }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Incidence {
    Disjoint,
    Point,
    Line,
    Equal,
}

pub fn plane_incidence(p: &IsotropicPlane, q: &IsotropicPlane) -> Incidence {
    match (p.mask & q.mask).count_ones() {
        0 => Incidence::Disjoint,
        1 => Incidence::Point,
        3 => Incidence::Line,
        7 => Incidence::Equal,
        n => unreachable!("two subspaces cannot share exactly {n} points"),
    }
}

/// Nine pairwise disjoint planes covering all 63 points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Spread {
    planes: Vec<IsotropicPlane>,
}

const ALL_POINTS_MASK: u64 = !1;

impl Spread {
    pub fn new(mut planes: Vec<IsotropicPlane>) -> Result<Self, Error> {
        if planes.len() != 9 {
            return Err(Error::InvalidSpread(format!("{} planes, expected 9", planes.len())));
        }
        let mut covered = 0u64;
        for p in &planes {
            if covered & p.mask != 0 {
                return Err(Error::InvalidSpread(format!("plane {p} meets an earlier plane")));
            }
            covered |= p.mask;
        }
        debug_assert_eq!(covered, ALL_POINTS_MASK);
        planes.sort();
        Ok(Spread { planes })
    }

    pub fn planes(&self) -> &[IsotropicPlane] {
        &self.planes
    }
}

/// All 960 spreads of W(5,2), by exact-cover backtracking.
pub fn enumerate_spreads() -> Vec<Spread> {
    let planes = context_space();
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); 64];
    for (i, p) in planes.iter().enumerate() {
        for v in p.points() {
            through[v.bits() as usize].push(i);
        }
    }
    let mut solutions = Vec::new();
    let mut chosen = Vec::with_capacity(9);
    cover(planes, &through, 0, &mut chosen, &mut solutions);
    let mut spreads: Vec<Spread> = solutions
        .into_iter()
        .map(|idx| Spread::new(idx.into_iter().map(|i| planes[i]).collect()).expect("exact cover is a spread"))
        .collect();
    spreads.sort();
    spreads
}

fn cover(
    planes: &[IsotropicPlane],
    through: &[Vec<usize>],
    covered: u64,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let open = ALL_POINTS_MASK & !covered;
    if open == 0 {
        out.push(chosen.clone());
        return;
    }
    let pivot = open.trailing_zeros() as usize;
    for &i in &through[pivot] {
        if planes[i].mask & covered == 0 {
            chosen.push(i);
            cover(planes, through, covered | planes[i].mask, chosen, out);
            chosen.pop();
        }
    }
}

/// The two 15-plane systems on the Klein quadric `Q0 = 0`.
#[derive(Clone, Debug)]
pub struct KleinSystems {
    /// The system containing the plane of X/I-only observables.
    pub x_system: Vec<IsotropicPlane>,
    /// The system containing the plane of Z/I-only observables.
    pub z_system: Vec<IsotropicPlane>,
}

/// Planes lying entirely on the Klein quadric, split into their two systems
/// (same system iff the planes meet in exactly one point).
pub fn klein_systems() -> KleinSystems {
    let on_quadric: Vec<IsotropicPlane> = context_space()
        .iter()
        .filter(|p| p.points().iter().all(|v| !pauli::q0(*v)))
        .copied()
        .collect();
    let x_plane = IsotropicPlane::from_labels("XII,IXI,IIX").expect("X plane");
    let (x_system, z_system): (Vec<_>, Vec<_>) = on_quadric
        .into_iter()
        .partition(|p| *p == x_plane || plane_incidence(p, &x_plane) == Incidence::Point);
    KleinSystems { x_system, z_system }
}
