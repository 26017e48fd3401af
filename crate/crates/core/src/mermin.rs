//! Mermin pentagrams in W(5,2).
//!
//! An edge is an affine plane of order two: a heptad with one of its lines
//! removed. Its four observables pairwise commute and multiply to `±III`. A
//! pentagram is five edges meeting pairwise in ten distinct points; it is
//! magic when an odd number of its edges multiply to `-III`.
//!
//! Edge signs refer to the Hermitian observables, with `σ_y = -i·ZX` on every
//! Y slot. With `K` Y-letters on an edge (always even) the observable product
//! is `(-1)^(K/2)` times the product of the real operators, so the two sign
//! conventions disagree on some edges. Both are exposed; magic refers to the
//! observable one.

use std::fmt;
use std::sync::OnceLock;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::grassmann::{four_qubit_to_plane, plane_to_four_qubit, FourQubitPoint};
use crate::pauli::{self, PauliOperator};
use crate::polar::{context_space, IsotropicPlane};
use crate::spgroup::{symplectic_matrix, GroupElement};
use crate::Error;

fn mask_of(points: &[Gf2Vector]) -> u64 {
    points.iter().fold(0u64, |m, v| m | 1 << v.bits())
}

fn points_of(mask: u64) -> Vec<Gf2Vector> {
    (1..64).filter(|b| mask >> b & 1 == 1).map(|b| Gf2Vector::from_bits(b, 6)).collect()
}

/// A heptad minus one of its lines.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineEdge {
    points: [Gf2Vector; 4],
    parent: IsotropicPlane,
    removed_line: [Gf2Vector; 3],
    mask: u64,
    sign: bool,
    real_sign: bool,
}

impl AffineEdge {
    /// The edge left after deleting `line` from `parent`.
    pub fn new(parent: IsotropicPlane, line: [Gf2Vector; 3]) -> Result<Self, Error> {
        let line_mask = mask_of(&line);
        if parent.mask() & line_mask != line_mask || !(line[0] + line[1] + line[2]).is_zero() {
            return Err(Error::Inconsistent("removed triple is not a line of the plane".into()));
        }
        let mask = parent.mask() & !line_mask;
        let pts = points_of(mask);
        let points = [pts[0], pts[1], pts[2], pts[3]];
        let mut removed_line = line;
        removed_line.sort();
        Ok(AffineEdge {
            points,
            parent,
            removed_line,
            mask,
            sign: edge_sign(&points),
            real_sign: real_edge_sign(&points),
        })
    }

    /// The edge with the given four points, if they form one.
    pub fn from_points(points: &[Gf2Vector]) -> Result<Self, Error> {
        edge_lookup(mask_of(points))
            .filter(|_| points.len() == 4)
            .map(|i| affine_edges()[i])
            .ok_or_else(|| {
                let labels: Vec<String> = points.iter().map(|v| pauli::label(*v)).collect();
                Error::Inconsistent(format!("{{{}}} is not an affine edge", labels.join(",")))
            })
    }

    /// The four points in increasing packed order.
    pub fn points(&self) -> &[Gf2Vector; 4] {
        &self.points
    }

    pub fn parent(&self) -> &IsotropicPlane {
        &self.parent
    }

    pub fn removed_line(&self) -> &[Gf2Vector; 3] {
        &self.removed_line
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Whether the four observables multiply to `-III`.
    pub fn sign(&self) -> bool {
        self.sign
    }

    /// Whether the positive real representatives multiply to `-III`.
    pub fn real_sign(&self) -> bool {
        self.real_sign
    }

    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(|v| pauli::label(*v)).collect()
    }
}

impl fmt::Display for AffineEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

/// Sign of the product of the positive real representatives; the operators
/// commute, so the order does not matter.
pub fn real_edge_sign(points: &[Gf2Vector]) -> bool {
    let product = points.iter().fold(PauliOperator::identity(3), |acc, v| {
        acc.multiply(&PauliOperator::from_vector(*v)).expect("three-qubit operators")
    });
    debug_assert!(product.is_identity_class());
    product.sign()
}

/// Sign of the product of the Hermitian observables of a commuting set that
/// multiplies to the identity class.
pub fn edge_sign(points: &[Gf2Vector]) -> bool {
    let y_letters: u32 = points
        .iter()
        .map(|v| {
            let n = v.len() / 2;
            (v.bits() & ((1 << n) - 1) & (v.bits() >> n)).count_ones()
        })
        .sum();
    debug_assert!(y_letters.is_multiple_of(2));
    real_edge_sign(points) ^ (y_letters / 2 % 2 == 1)
}

/// All 945 affine edges, ordered by their point masks.
pub fn affine_edges() -> &'static [AffineEdge] {
    static EDGES: OnceLock<Vec<AffineEdge>> = OnceLock::new();
    EDGES.get_or_init(|| {
        let mut edges: Vec<AffineEdge> = context_space()
            .iter()
            .flat_map(|plane| {
                plane
                    .lines()
                    .into_iter()
                    .map(move |line| AffineEdge::new(*plane, line).expect("lines of the plane"))
            })
            .collect();
        edges.sort_by_key(|e| e.mask);
        edges.dedup_by_key(|e| e.mask);
        edges
    })
}

fn edge_lookup(mask: u64) -> Option<usize> {
    static INDEX: OnceLock<FxHashMap<u64, usize>> = OnceLock::new();
    INDEX
        .get_or_init(|| affine_edges().iter().enumerate().map(|(i, e)| (e.mask, i)).collect())
        .get(&mask)
        .copied()
}

/// Five edges meeting pairwise in ten distinct points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Pentagram {
    edges: [AffineEdge; 5],
    points: [Gf2Vector; 10],
    negative_edges: u8,
}

impl Pentagram {
    /// Validates the incidence structure; edges are stored in mask order.
    pub fn from_edges(edges: [AffineEdge; 5]) -> Result<Self, Error> {
        let mut edges = edges;
        edges.sort_by_key(|e| e.mask);
        let mut meets = 0u64;
        for i in 0..5 {
            for j in i + 1..5 {
                let common = edges[i].mask & edges[j].mask;
                if common.count_ones() != 1 {
                    return Err(Error::Inconsistent(format!(
                        "edges {} and {} share {} points",
                        edges[i],
                        edges[j],
                        common.count_ones()
                    )));
                }
                if meets & common != 0 {
                    return Err(Error::Inconsistent("pairwise intersections are not distinct".into()));
                }
                meets |= common;
            }
        }
        let pts = points_of(meets);
        let mut points = [Gf2Vector::zero(6); 10];
        points.copy_from_slice(&pts);
        let negative_edges = edges.iter().filter(|e| e.sign).count() as u8;
        Ok(Pentagram {
            edges,
            points,
            negative_edges,
        })
    }

    pub fn from_point_sets(sets: &[Vec<Gf2Vector>]) -> Result<Self, Error> {
        if sets.len() != 5 {
            return Err(Error::Inconsistent(format!("a pentagram has 5 edges, got {}", sets.len())));
        }
        let edges: Vec<AffineEdge> = sets.iter().map(|s| AffineEdge::from_points(s)).collect::<Result<_, _>>()?;
        Self::from_edges([edges[0], edges[1], edges[2], edges[3], edges[4]])
    }

    /// Parses `XXX,ZZX,ZXZ,XZZ; XXX,IIX,XII,IXI; …`.
    pub fn from_labels(text: &str) -> Result<Self, Error> {
        let sets = text
            .split(';')
            .map(|edge| {
                edge.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| Ok(pauli::parse_pauli(s, Some(3))?.vector()))
                    .collect::<Result<Vec<_>, Error>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_point_sets(&sets)
    }

    pub fn edges(&self) -> &[AffineEdge; 5] {
        &self.edges
    }

    pub fn points(&self) -> &[Gf2Vector; 10] {
        &self.points
    }

    pub fn negative_edges(&self) -> usize {
        usize::from(self.negative_edges)
    }

    /// Edges whose real representatives multiply to `-III`.
    pub fn real_negative_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.real_sign).count()
    }

    pub fn is_magic(&self) -> bool {
        self.negative_edges % 2 == 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.points.iter().all(|v| !pauli::q0(*v))
    }

    /// Deduplication key: the sorted edge masks.
    pub fn key(&self) -> [u64; 5] {
        self.edges.map(|e| e.mask)
    }

    /// Labels of the five parent heptads.
    pub fn pentad(&self) -> [FourQubitPoint; 5] {
        self.edges.map(|e| plane_to_four_qubit(&e.parent))
    }

    /// Image under `v ↦ v·g`.
    pub fn transform(&self, g: &GroupElement) -> Result<Self, Error> {
        let sets: Vec<Vec<Gf2Vector>> = self
            .edges
            .iter()
            .map(|e| e.points.iter().map(|v| g.apply(*v)).collect())
            .collect();
        Self::from_point_sets(&sets)
    }
}

impl PartialOrd for Pentagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pentagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Pentagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(ToString::to_string).collect();
        f.write_str(&edges.join(" "))
    }
}

/// Serializable form of a pentagram.
#[derive(Clone, Debug, Serialize)]
pub struct PentagramRecord {
    pub points: Vec<String>,
    pub edges: Vec<Vec<String>>,
    pub edge_signs: Vec<bool>,
    pub real_edge_signs: Vec<bool>,
    pub magic: bool,
    pub pentad: Vec<FourQubitPoint>,
}

impl From<&Pentagram> for PentagramRecord {
    fn from(p: &Pentagram) -> Self {
        PentagramRecord {
            points: p.points.iter().map(|v| pauli::label(*v)).collect(),
            edges: p.edges.iter().map(AffineEdge::labels).collect(),
            edge_signs: p.edges.iter().map(AffineEdge::sign).collect(),
            real_edge_signs: p.edges.iter().map(AffineEdge::real_sign).collect(),
            magic: p.is_magic(),
            pentad: p.pentad().to_vec(),
        }
    }
}

/// Result of the exhaustive search.
#[derive(Clone, Debug)]
pub struct PentagramCensus {
    /// Magic pentagrams in key order.
    pub magic: Vec<Pentagram>,
    /// Incidence-valid configurations with an even number of negative edges.
    pub even_parity: Vec<Pentagram>,
}

impl PentagramCensus {
    pub fn configurations(&self) -> usize {
        self.magic.len() + self.even_parity.len()
    }

    pub fn symmetric_magic(&self) -> usize {
        self.magic.iter().filter(|p| p.is_symmetric()).count()
    }
}

const WORDS: usize = 945usize.div_ceil(64);

type EdgeSet = [u64; WORDS];


struct SearchTables {
    adjacent: Vec<EdgeSet>,
    /// Edges avoiding each point, indexed by packed point.
    avoiding: Vec<EdgeSet>,
}

fn search_tables() -> SearchTables {
    let edges = affine_edges();
    let mut adjacent = vec![[0u64; WORDS]; edges.len()];
    for (i, e) in edges.iter().enumerate() {
        for (j, f) in edges.iter().enumerate() {
            if (e.mask & f.mask).count_ones() == 1 {
                adjacent[i][j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut avoiding = vec![[0u64; WORDS]; 64];
    for (p, set) in avoiding.iter_mut().enumerate() {
        for (j, f) in edges.iter().enumerate() {
            if f.mask >> p & 1 == 0 {
                set[j / 64] |= 1 << (j % 64);
            }
        }
    }
    SearchTables { adjacent, avoiding }
}

/// Edge sets containing only indices above `i`.
fn above(set: &EdgeSet, i: usize) -> EdgeSet {
    let mut out = *set;
    let (w, b) = (i / 64, i % 64);
    for x in out.iter_mut().take(w) {
        *x = 0;
    }
    out[w] &= if b == 63 { 0 } else { !0u64 << (b + 1) };
    out
}

fn extend(
    tables: &SearchTables,
    chosen: &mut Vec<usize>,
    candidates: EdgeSet,
    used: u64,
    found: &mut Vec<[usize; 5]>,
) {
    if chosen.len() == 5 {
        found.push([chosen[0], chosen[1], chosen[2], chosen[3], chosen[4]]);
        return;
    }
    let edges = affine_edges();
    for w in 0..WORDS {
        let mut word = candidates[w];
        while word != 0 {
            let j = w * 64 + word.trailing_zeros() as usize;
            word &= word - 1;
            let mut next = above(&candidates, j);
            let mut new_used = used;
            for &c in chosen.iter() {
                new_used |= edges[c].mask & edges[j].mask;
            }
            for (x, a) in next.iter_mut().zip(&tables.adjacent[j]) {
                *x &= a;
            }
            let mut fresh = new_used & !used;
            while fresh != 0 {
                let p = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                for (x, a) in next.iter_mut().zip(&tables.avoiding[p]) {
                    *x &= a;
                }
            }
            chosen.push(j);
            extend(tables, chosen, next, new_used, found);
            chosen.pop();
        }
    }
}

/// Exhaustive search for pentagram configurations on one thread.
pub fn enumerate_pentagrams() -> PentagramCensus {
    enumerate_pentagrams_with(1)
}

/// Same as [`enumerate_pentagrams`], splitting the first edge across
/// `threads` workers; the result does not depend on `threads`.
pub fn enumerate_pentagrams_with(threads: usize) -> PentagramCensus {
    let tables = search_tables();
    let edges = affine_edges();
    let threads = threads.max(1);
    let search_from = |first: usize| {
        let mut found = Vec::new();
        let candidates = above(&tables.adjacent[first], first);
        extend(&tables, &mut vec![first], candidates, 0, &mut found);
        found
    };
    let mut cliques: Vec<[usize; 5]> = if threads == 1 {
        (0..edges.len()).flat_map(search_from).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let search_from = &search_from;
                    scope.spawn(move || {
                        (t..edges.len())
                            .step_by(threads)
                            .flat_map(search_from)
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };
    cliques.sort_unstable();
    let mut magic = Vec::new();
    let mut even_parity = Vec::new();
    for c in cliques {
        let p = Pentagram::from_edges(c.map(|i| edges[i])).expect("search yields valid configurations");
        if p.is_magic() {
            magic.push(p);
        } else {
            even_parity.push(p);
        }
    }
    PentagramCensus { magic, even_parity }
}

/// Why five four-qubit labels fail to define a pentagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PentadViolation {
    Count(usize),
    Antisymmetric(String),
    Repeated(String),
    Anticommuting(String, String),
    Collinear(String, String, String),
    Product(String),
    LineIntersection(String, String),
}

impl fmt::Display for PentadViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PentadViolation::Count(n) => write!(f, "expected 5 operators, got {n}"),
            PentadViolation::Antisymmetric(a) => write!(f, "{a} is not symmetric"),
            PentadViolation::Repeated(a) => write!(f, "{a} appears twice"),
            PentadViolation::Anticommuting(a, b) => write!(f, "{a} and {b} anticommute"),
            PentadViolation::Collinear(a, b, c) => write!(f, "{a}, {b}, {c} are collinear"),
            PentadViolation::Product(p) => write!(f, "the product is {p}, not IIII"),
            PentadViolation::LineIntersection(a, b) => {
                write!(f, "the heptads of {a} and {b} share a line")
            }
        }
    }
}

/// Checks the pentad conditions, reporting every violation.
pub fn check_pentad(ops: &[FourQubitPoint]) -> Vec<PentadViolation> {
    let mut out = Vec::new();
    if ops.len() != 5 {
        out.push(PentadViolation::Count(ops.len()));
        return out;
    }
    let name = |f: &FourQubitPoint| f.to_string();
    for f in ops {
        if f.is_zero() || !f.is_symmetric() {
            out.push(PentadViolation::Antisymmetric(name(f)));
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if ops[i] == ops[j] {
                out.push(PentadViolation::Repeated(name(&ops[i])));
            } else if ops[i].anticommutes_with(&ops[j]) {
                out.push(PentadViolation::Anticommuting(name(&ops[i]), name(&ops[j])));
            }
            for k in j + 1..5 {
                if (ops[i].vector() + ops[j].vector() + ops[k].vector()).is_zero() {
                    out.push(PentadViolation::Collinear(name(&ops[i]), name(&ops[j]), name(&ops[k])));
                }
            }
        }
    }
    let sum = ops.iter().fold(Gf2Vector::zero(8), |acc, f| acc + f.vector());
    if !sum.is_zero() {
        out.push(PentadViolation::Product(FourQubitPoint::from_vector(sum).to_string()));
    }
    out
}

/// The pentagram cut out by the five heptads labelled by a pentad.
pub fn pentad_to_pentagram(ops: &[FourQubitPoint]) -> Result<Pentagram, Error> {
    let mut violations = check_pentad(ops);
    if !violations.is_empty() {
        return Err(Error::InvalidPentad(violations));
    }
    let planes: Vec<IsotropicPlane> = ops.iter().map(four_qubit_to_plane).collect::<Result<_, _>>()?;
    for i in 0..5 {
        for j in i + 1..5 {
            if planes[i].intersection(&planes[j]).len() != 1 {
                violations.push(PentadViolation::LineIntersection(ops[i].to_string(), ops[j].to_string()));
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::InvalidPentad(violations));
    }
    let sets: Vec<Vec<Gf2Vector>> = (0..5)
        .map(|i| {
            (0..5)
                .filter(|&j| j != i)
                .map(|j| planes[i].intersection(&planes[j])[0])
                .collect()
        })
        .collect();
    Pentagram::from_point_sets(&sets)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KleinSystem {
    /// Built from the observables with letters I and X.
    X,
    /// The same with Z in place of X.
    Z,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Family {
    /// A Fano point off a line; `pattern` 0 puts X on every line point,
    /// patterns 1–3 put X on exactly one of them.
    AntiFlag { pattern: u8 },
    /// The complement of a line. Class 0 marks one point with I and the
    /// others with X, class 1 the reverse; `marked` is the marked point.
    Quadrangle { class: u8, marked: u8 },
}

/// One member of the 336-element construction.
#[derive(Clone, Copy, Debug)]
pub struct SymmetricConstruction {
    pub system: KleinSystem,
    pub family: Family,
    pub pentad: [FourQubitPoint; 5],
    pub pentagram: Pentagram,
}

/// `prefix ⊗ a` with `a` a three-qubit I/X word.
fn tensor(prefix: bool, a: u32) -> Gf2Vector {
    // (a1 a2 a3 a4 | b1 b2 b3 b4): X on qubit q sets b_q
    Gf2Vector::from_bits((u32::from(prefix) | a << 1) << 4, 8)
}

fn swap_x_z(v: Gf2Vector) -> Gf2Vector {
    let n = v.len() / 2;
    let mask = (1u32 << n) - 1;
    Gf2Vector::from_bits((v.bits() >> n) | (v.bits() & mask) << n, v.len())
}

/// The Fano plane on the seven I/X words, as 3-bit masks.
fn fano_lines() -> Vec<[u32; 3]> {
    let mut lines = Vec::new();
    for a in 1..8u32 {
        for b in a + 1..8 {
            let c = a ^ b;
            if c > b {
                lines.push([a, b, c]);
            }
        }
    }
    lines
}

/// The anti-flag and quadrangle pentads in both Klein systems: 2 × (112 + 56).
pub fn construct_symmetric_pentagrams() -> Result<Vec<SymmetricConstruction>, Error> {
    let mut pentads: Vec<(KleinSystem, Family, [Gf2Vector; 5])> = Vec::new();
    let lines = fano_lines();
    for line in &lines {
        for point in (1..8u32).filter(|p| !line.contains(p)) {
            let odd_subsets: [[bool; 3]; 4] = [
                [true, true, true],
                [true, false, false],
                [false, true, false],
                [false, false, true],
            ];
            for (pattern, marks) in odd_subsets.iter().enumerate() {
                let pentad = [
                    tensor(false, point),
                    tensor(true, point),
                    tensor(marks[0], line[0]),
                    tensor(marks[1], line[1]),
                    tensor(marks[2], line[2]),
                ];
                pentads.push((KleinSystem::X, Family::AntiFlag { pattern: pattern as u8 }, pentad));
            }
        }
        let quad: Vec<u32> = (1..8u32).filter(|p| !line.contains(p)).collect();
        for class in 0..2u8 {
            for marked in 0..4usize {
                let mut pentad = [tensor(true, 0); 5];
                for (slot, &q) in quad.iter().enumerate() {
                    let x_prefix = (slot == marked) == (class == 1);
                    pentad[slot] = tensor(x_prefix, q);
                }
                pentads.push((KleinSystem::X, Family::Quadrangle { class, marked: marked as u8 }, pentad));
            }
        }
    }
    let swapped: Vec<_> = pentads
        .iter()
        .map(|(_, family, p)| (KleinSystem::Z, *family, p.map(swap_x_z)))
        .collect();
    pentads.extend(swapped);
    pentads
        .into_iter()
        .map(|(system, family, vectors)| {
            let pentad = vectors.map(FourQubitPoint::from_vector);
            let pentagram = pentad_to_pentagram(&pentad)?;
            Ok(SymmetricConstruction {
                system,
                family,
                pentad,
                pentagram,
            })
        })
        .collect()
}

/// `diag(A, A^{-T})` for all 168 `A` in GL(3,2), followed by the same
/// elements composed with the X↔Z swap `J`.
pub fn sl32_extended() -> Vec<GroupElement> {
    let mut out = Vec::with_capacity(336);
    for word in 0..512u64 {
        let a = Gf2Matrix::unpack(word, 3, 3);
        let Some(inv) = a.inverse() else { continue };
        let d = inv.transpose();
        let mut m = Gf2Matrix::zeros(6, 6);
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, a.get(i, j));
                m.set(i + 3, j + 3, d.get(i, j));
            }
        }
        out.push(GroupElement::new(m).expect("block diagonal of invertibles"));
    }
    let j = GroupElement::new(symplectic_matrix(3)).expect("J is invertible");
    let swapped: Vec<GroupElement> = out.iter().map(|g| g.then(&j)).collect();
    out.extend(swapped);
    out
}

/// Images of `p` under every element of `group`, deduplicated.
pub fn pentagram_images(p: &Pentagram, group: &[GroupElement]) -> Result<Vec<Pentagram>, Error> {
    let mut images = group.iter().map(|g| p.transform(g)).collect::<Result<Vec<_>, _>>()?;
    images.sort();
    images.dedup();
    Ok(images)
}

/// The pentagram of the pentad `{XXXX, XIII, IXII, IIXI, IIIX}`.
pub fn canonical_pentagram() -> Pentagram {
    let pentad = ["XXXX", "XIII", "IXII", "IIXI", "IIIX"].map(|s| s.parse().expect("literal label"));
    pentad_to_pentagram(&pentad).expect("literal pentad")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spgroup::{d_beta, r_beta};
    use std::collections::BTreeSet;

    fn fq(s: &str) -> FourQubitPoint {
        s.parse().unwrap()
    }

    fn pentad(s: &str) -> Vec<FourQubitPoint> {
        s.split(',').map(fq).collect()
    }

    #[test]
    fn edge_census() {
        let edges = affine_edges();
        assert_eq!(edges.len(), 945);
        for e in edges {
            let sum = e.points().iter().fold(Gf2Vector::zero(6), |a, v| a + *v);
            assert!(sum.is_zero());
            for x in e.points() {
                for y in e.points() {
                    assert!(!pauli::symplectic_form(*x, *y));
                }
            }
            assert_eq!(e.mask() | mask_of(e.removed_line()), e.parent().mask());
        }
        let e = AffineEdge::from_points(&["XXX", "ZZX", "ZXZ", "XZZ"].map(|s| pauli::vector_of(s).unwrap())).unwrap();
        assert!(e.sign() && e.real_sign());
        // YYI·IYY·XXX·ZXZ: four Y letters, so the conventions agree
        let e = AffineEdge::from_points(&["XXX", "YYI", "IYY", "ZXZ"].map(|s| pauli::vector_of(s).unwrap())).unwrap();
        assert_eq!(e.sign(), e.real_sign());
        // with two Y letters in total the conventions differ
        let two_ys = affine_edges()
            .iter()
            .find(|e| e.points().iter().map(|v| pauli::label(*v).matches('Y').count()).sum::<usize>() == 2)
            .unwrap();
        assert_ne!(two_ys.sign(), two_ys.real_sign());
        let e = AffineEdge::from_points(&["IIX", "XII", "IXI", "XXX"].map(|s| pauli::vector_of(s).unwrap())).unwrap();
        assert!(!e.sign());
        assert!(AffineEdge::from_points(&["IIX", "XII", "IXI", "XXI"].map(|s| pauli::vector_of(s).unwrap())).is_err());
    }

    #[test]
    fn resigning_a_point_flips_the_edge_sign() {
        let e = affine_edges()[17];
        let mut ops: Vec<PauliOperator> = e.points().iter().map(|v| PauliOperator::from_vector(*v)).collect();
        ops[2] = ops[2].negated();
        let product = ops.iter().fold(PauliOperator::identity(3), |a, o| a.multiply(o).unwrap());
        assert_eq!(product.sign(), !e.real_sign());
    }

    #[test]
    fn canonical_pentagram_is_magic() {
        let p = canonical_pentagram();
        let listed = Pentagram::from_labels(
            "XXX,ZZX,ZXZ,XZZ; XXX,IIX,XII,IXI; XZZ,IIZ,XII,IZI; ZII,ZZX,IIX,IZI; ZXZ,IIZ,ZII,IXI",
        )
        .unwrap();
        assert_eq!(listed, p);
        assert!(Pentagram::from_labels(
            "XXX,ZZX,ZXZ,XZZ; XXX,IIX,XII,IXI; XZZ,IIZ,XII,IZI; ZII,ZZX,IIX,IZI; ZXZ,IIZ,ZII,IXX",
        )
        .is_err());
        assert!(p.is_magic());
        assert!(p.is_symmetric());
        assert_eq!(p.negative_edges(), 1);
        let from_pentad = pentad_to_pentagram(&pentad("XXXX,XIII,IXII,IIXI,IIIX")).unwrap();
        assert_eq!(from_pentad, p);
        let mut labels = p.pentad().to_vec();
        labels.sort();
        let mut expected = pentad("XXXX,XIII,IXII,IIXI,IIIX");
        expected.sort();
        assert_eq!(labels, expected);
    }

    #[test]
    fn worked_examples() {
        let second = Pentagram::from_labels(
            "XXX,YYI,IYY,ZXZ; XXX,XXI,IXI,IXX; ZXZ,ZII,IXI,IIZ; ZZZ,YYI,XXI,IIZ; ZZZ,IYY,ZII,IXX",
        )
        .unwrap();
        assert_eq!(pentad_to_pentagram(&pentad("XIII,XXXX,IXXI,IIXI,IIXX")).unwrap(), second);
        assert!(second.is_magic());
        let beta_image = Pentagram::from_labels(
            "ZII,IZI,IIX,ZZX; ZYX,ZZY,ZXZ,ZII; YZX,ZZY,IZI,XZZ; XXX,ZXZ,XZZ,ZZX; ZYX,YZX,IIX,XXX",
        )
        .unwrap();
        assert_eq!(pentad_to_pentagram(&pentad("IIIX,ZZXI,ZXZI,XXXX,XZZI")).unwrap(), beta_image);
        assert_eq!(canonical_pentagram().transform(&d_beta()).unwrap(), beta_image);
        let mut moved: Vec<FourQubitPoint> = canonical_pentagram().pentad().iter().map(|f| f.transform(&r_beta())).collect();
        moved.sort();
        let mut labels = beta_image.pentad().to_vec();
        labels.sort();
        assert_eq!(moved, labels);
    }

    #[test]
    fn pentad_violations_are_reported() {
        let err = pentad_to_pentagram(&pentad("XXXX,XIII,IXII,IIXI")).unwrap_err();
        assert_eq!(err, Error::InvalidPentad(vec![PentadViolation::Count(4)]));
        let Err(Error::InvalidPentad(v)) = pentad_to_pentagram(&pentad("YIII,XIII,IXII,IIXI,YXXI")) else {
            panic!("expected violations");
        };
        assert!(v.contains(&PentadViolation::Antisymmetric("YIII".into())));
        assert!(v.iter().any(|x| matches!(x, PentadViolation::Anticommuting(..))));
        let Err(Error::InvalidPentad(v)) = pentad_to_pentagram(&pentad("XXII,XIII,IXII,IIXI,IIIX")) else {
            panic!("expected violations");
        };
        assert!(v.contains(&PentadViolation::Collinear("XXII".into(), "XIII".into(), "IXII".into())));
        assert!(v.iter().any(|x| matches!(x, PentadViolation::Product(_))));
    }

    #[test]
    fn construction_yields_336_distinct_magic_pentagrams() {
        let built = construct_symmetric_pentagrams().unwrap();
        assert_eq!(built.len(), 336);
        let distinct: BTreeSet<Pentagram> = built.iter().map(|c| c.pentagram).collect();
        assert_eq!(distinct.len(), 336);
        assert!(distinct.iter().all(|p| p.is_magic() && p.is_symmetric()));
        for system in [KleinSystem::X, KleinSystem::Z] {
            let part: Vec<_> = built.iter().filter(|c| c.system == system).collect();
            assert_eq!(part.len(), 168);
            let anti_flag = part.iter().filter(|c| matches!(c.family, Family::AntiFlag { .. })).count();
            assert_eq!(anti_flag, 112);
        }
        let example = built
            .iter()
            .find(|c| c.system == KleinSystem::X && c.family == Family::AntiFlag { pattern: 0 } && c.pentad[0] == fq("IXXX") && c.pentad[2] == fq("XIXI"))
            .expect("first anti-flag example");
        assert_eq!(example.pentad.to_vec(), pentad("IXXX,XXXX,XIXI,XIIX,XIXX"));
    }

    #[test]
    fn klein_system_planes() {
        let zplane = four_qubit_to_plane(&fq("ZIII")).unwrap();
        assert_eq!(zplane, IsotropicPlane::from_labels("ZII ZZZ IZI IZZ ZIZ IIZ ZZI").unwrap());
        let k = [
            ("XII XYY IYY XZX IXZ XXZ IZX", "XXII"),
            ("XXX ZXZ YIY XZZ YYI ZZX IYY", "XXXX"),
            ("IXI XXZ XIZ YXY ZIX ZXX YIY", "XIXI"),
            ("XXI ZZX YYX IXZ ZYY YZY XIZ", "XXXI"),
            ("IIX ZXX ZXI YYI XZX XZI YYX", "XIIX"),
            ("IXX YZY YYZ ZIX XZZ XYY ZXI", "XIXX"),
            ("XIX XZI IZX ZYY YXY ZXZ YYZ", "XXIX"),
            ("XXI IIX IXX XIX XII XXX IXI", "XIII"),
        ];
        let l = [
            ("IIX ZII IZI ZZI ZIX IZX ZZX", "IIIX"),
            ("IXX ZZZ IZZ ZII ZYY IYY ZXX", "IIXX"),
            ("XIX IZI ZIZ ZZZ XZX YIY YZY", "IXIX"),
            ("XII IZZ IIZ IZI XZZ XIZ XZI", "IXII"),
            ("XXX ZIZ ZZI IZZ YXY YYX XYY", "IXXX"),
            ("IXI IIZ ZII ZIZ IXZ ZXI ZXZ", "IIXI"),
            ("XXI ZZI ZZZ IIZ YYI YYZ XXZ", "IXXI"),
        ];
        let mut system = Vec::new();
        for (labels, image) in k.iter().chain(&l) {
            let plane = IsotropicPlane::from_labels(labels).unwrap();
            assert_eq!(plane_to_four_qubit(&plane), fq(image), "{labels}");
            assert!(plane.points().iter().all(|v| !pauli::q0(*v)));
            system.push(plane);
        }
        for (i, p) in system.iter().enumerate() {
            for q in &system[i + 1..] {
                assert_eq!(p.intersection(q).len(), 1);
            }
        }
        for (labels, _) in &k {
            assert!(IsotropicPlane::from_labels(labels).unwrap().intersection(&zplane).is_empty());
        }
        for (labels, _) in &l {
            assert_eq!(IsotropicPlane::from_labels(labels).unwrap().intersection(&zplane).len(), 3);
        }
    }

    #[test]
    fn sl32_extended_group() {
        let group = sl32_extended();
        assert_eq!(group.len(), 336);
        let distinct: BTreeSet<GroupElement> = group.iter().copied().collect();
        assert_eq!(distinct.len(), 336);
        for g in &group {
            assert!(g.is_symplectic());
            for bits in 1..64 {
                let v = Gf2Vector::from_bits(bits, 6);
                assert_eq!(pauli::q0(g.apply(v)), pauli::q0(v));
            }
        }
    }

    #[test]
    fn census() {
        let census = enumerate_pentagrams();
        assert_eq!(census.magic.len(), 12096);
        assert!(census.even_parity.is_empty());
        assert_eq!(census.symmetric_magic(), 336);
        let real_odd = census.magic.iter().filter(|p| p.real_negative_edges() % 2 == 1).count();
        assert_eq!(real_odd, 5376);
        assert_eq!(enumerate_pentagrams_with(3).magic, census.magic);
        let symmetric: BTreeSet<Pentagram> = census.magic.iter().filter(|p| p.is_symmetric()).copied().collect();
        let built: BTreeSet<Pentagram> = construct_symmetric_pentagrams().unwrap().iter().map(|c| c.pentagram).collect();
        assert_eq!(symmetric, built);
        assert!(census.magic.binary_search(&canonical_pentagram()).is_ok());
    }

    #[test]
    fn sl32_orbits_on_symmetric_pentagrams() {
        let group = sl32_extended();
        let mut rest: BTreeSet<Pentagram> =
            construct_symmetric_pentagrams().unwrap().into_iter().map(|c| c.pentagram).collect();
        assert_eq!(pentagram_images(&canonical_pentagram(), &group).unwrap().len(), 56);
        let mut sizes = Vec::new();
        while let Some(p) = rest.first().copied() {
            let orbit = pentagram_images(&p, &group).unwrap();
            for q in &orbit {
                assert!(rest.remove(q));
            }
            sizes.push(orbit.len());
        }
        sizes.sort();
        assert_eq!(sizes, vec![56, 56, 56, 168]);
    }
}
