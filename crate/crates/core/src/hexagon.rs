//! The split Cayley hexagon of order two inside Q⁺(7,2).
//!
//! The symmetric four-qubit classes are the 135 points of the hyperbolic
//! quadric Q⁺(7,2). The 63 of them that commute with `YIII` are `Y⊗A` for
//! the 28 antisymmetric and `I⊗S` for the 35 nontrivial symmetric three-qubit
//! classes. The hexagon lines are the orbit of one known line under the
//! group generated by `R(α)` and `R(γ)`; the result is accepted only after
//! the generalized-hexagon axioms have been checked on it.
//!
//! A line of the quadric pulls back, through the heptad bijection, either to
//! a pencil of planes through a common line of W(5,2) or to a plane-star of
//! planes through a common point.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::gf2::Gf2Vector;
use crate::grassmann::{four_qubit_to_plane, FourQubitPoint};
use crate::pauli;
use crate::polar::quadric_points;
use crate::spgroup::{orbit, r_alpha, r_gamma, GroupElement, MatrixGroup};
use crate::Error;

/// The antisymmetric class singled out by the hexagon.
pub const DEFAULT_ELLIPTIC_POINT: &str = "YIII";

/// The hexagon line used to seed the orbit construction.
pub const SEED_LINE: [&str; 3] = ["IXIX", "IIZI", "IXZX"];

fn point(label: &str) -> FourQubitPoint {
    label.parse().expect("built-in labels are valid")
}

/// The 63 symmetric classes commuting with `YIII`, sorted.
pub fn hexagon_points() -> Vec<FourQubitPoint> {
    let y = point(DEFAULT_ELLIPTIC_POINT);
    let mut points: Vec<FourQubitPoint> = (1..256u32)
        .map(|b| FourQubitPoint::from_vector(Gf2Vector::from_bits(b, 8)))
        .filter(|p| p.is_symmetric() && !p.anticommutes_with(&y))
        .collect();
    points.sort();
    points
}

/// Whether `p` is one of the 63 hexagon points.
pub fn is_hexagon_point(p: &FourQubitPoint) -> bool {
    !p.is_zero() && p.is_symmetric() && !p.anticommutes_with(&point(DEFAULT_ELLIPTIC_POINT))
}

/// Three points of Q⁺(7,2) spanning a totally singular line, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QuadricLine {
    points: [FourQubitPoint; 3],
}

impl QuadricLine {
    pub fn new(points: [FourQubitPoint; 3]) -> Result<Self, Error> {
        let describe = || points.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let sum = points[0].vector() + points[1].vector() + points[2].vector();
        let ok = points.iter().all(|p| !p.is_zero() && p.is_symmetric())
            && sum.is_zero()
            && points[0] != points[1]
            && !points[0].anticommutes_with(&points[1]);
        if !ok {
            return Err(Error::NotAQuadricLine(describe()));
        }
        let mut points = points;
        points.sort();
        Ok(QuadricLine { points })
    }

    /// The line through two distinct commuting points of the quadric.
    pub fn through(p: FourQubitPoint, q: FourQubitPoint) -> Result<Self, Error> {
        Self::new([p, q, FourQubitPoint::from_vector(p.vector() + q.vector())])
    }

    pub fn from_labels(labels: [&str; 3]) -> Result<Self, Error> {
        Self::new([labels[0].parse()?, labels[1].parse()?, labels[2].parse()?])
    }

    pub fn points(&self) -> [FourQubitPoint; 3] {
        self.points
    }

    pub fn contains(&self, p: &FourQubitPoint) -> bool {
        self.points.contains(p)
    }

    pub fn transform(&self, g: &GroupElement) -> Self {
        let mut points = self.points.map(|p| p.transform(g));
        points.sort();
        QuadricLine { points }
    }
}

impl fmt::Display for QuadricLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.points[0], self.points[1], self.points[2])
    }
}

/// All 1575 lines of Q⁺(7,2), sorted.
pub fn quadric_lines() -> Vec<QuadricLine> {
    let points: Vec<FourQubitPoint> = (1..256u32)
        .map(|b| FourQubitPoint::from_vector(Gf2Vector::from_bits(b, 8)))
        .filter(FourQubitPoint::is_symmetric)
        .collect();
    let mut lines = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if let Ok(line) = QuadricLine::through(*p, *q) {
                lines.push(line);
            }
        }
    }
    lines.sort();
    lines.dedup();
    lines
}

/// Points, lines as index triples, and the derived point-line flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    points: Vec<FourQubitPoint>,
    lines: Vec<[usize; 3]>,
    flags: Vec<(usize, usize)>,
}

impl IncidenceStructure {
    /// Sorts the points and lines; each line must name three distinct points.
    pub fn new(points: Vec<FourQubitPoint>, lines: &[QuadricLine]) -> Result<Self, Error> {
        let mut points = points;
        points.sort();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Inconsistent("repeated point".into()));
        }
        let index = |p: &FourQubitPoint| {
            points
                .binary_search(p)
                .map_err(|_| Error::Inconsistent(format!("{p} is not a point of the structure")))
        };
        let mut triples = Vec::with_capacity(lines.len());
        for line in lines {
            let [a, b, c] = line.points;
            triples.push([index(&a)?, index(&b)?, index(&c)?]);
        }
        triples.sort();
        if triples.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Inconsistent("repeated line".into()));
        }
        let flags = triples
            .iter()
            .enumerate()
            .flat_map(|(l, t)| t.iter().map(move |&p| (p, l)))
            .collect();
        Ok(IncidenceStructure {
            points,
            lines: triples,
            flags,
        })
    }

    pub fn points(&self) -> &[FourQubitPoint] {
        &self.points
    }

    pub fn lines(&self) -> &[[usize; 3]] {
        &self.lines
    }

    /// `(point, line)` index pairs.
    pub fn flags(&self) -> &[(usize, usize)] {
        &self.flags
    }

    pub fn point_index(&self, p: &FourQubitPoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn line(&self, i: usize) -> QuadricLine {
        let mut points = self.lines[i].map(|p| self.points[p]);
        points.sort();
        QuadricLine { points }
    }

    pub fn quadric_lines(&self) -> Vec<QuadricLine> {
        (0..self.lines.len()).map(|i| self.line(i)).collect()
    }

    pub fn contains_line(&self, line: &QuadricLine) -> bool {
        let Some(t) = line.points.iter().map(|p| self.point_index(p)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        self.lines.binary_search(&[t[0], t[1], t[2]]).is_ok()
    }

    /// Indices of the lines through point `p`.
    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        self.flags.iter().filter(|f| f.0 == p).map(|f| f.1).collect()
    }

    /// Adjacency of the bipartite incidence graph; points come first, then
    /// lines offset by the number of points.
    fn incidence_graph(&self) -> Vec<Vec<usize>> {
        let n = self.points.len();
        let mut adj = vec![Vec::new(); n + self.lines.len()];
        for &(p, l) in &self.flags {
            adj[p].push(n + l);
            adj[n + l].push(p);
        }
        adj
    }
}

/// Outcome of checking the axioms of a generalized hexagon of order (2,2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HexagonReport {
    pub points: usize,
    pub lines: usize,
    pub lines_per_point: BTreeMap<usize, usize>,
    pub connected: bool,
    /// Length of the shortest cycle of the incidence graph, if any.
    pub girth: Option<usize>,
    /// Diameter of the incidence graph; `None` when disconnected.
    pub diameter: Option<usize>,
    pub failures: Vec<String>,
}

impl HexagonReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Breadth-first distances from `root`, plus the shortest cycle through it.
fn bfs(adj: &[Vec<usize>], root: usize) -> (Vec<Option<usize>>, Option<usize>) {
    let mut dist = vec![None; adj.len()];
    let mut parent = vec![usize::MAX; adj.len()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    let mut cycle: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for &v in &adj[u] {
            match dist[v] {
                None => {
                    dist[v] = Some(du + 1);
                    parent[v] = u;
                    queue.push_back(v);
                }
                Some(dv) if parent[u] != v => {
                    let len = du + dv + 1;
                    cycle = Some(cycle.map_or(len, |c| c.min(len)));
                }
                Some(_) => {}
            }
        }
    }
    (dist, cycle)
}

pub fn verify_generalized_hexagon(s: &IncidenceStructure) -> HexagonReport {
    let mut failures = Vec::new();
    if s.points.len() != 63 {
        failures.push(format!("{} points, expected 63", s.points.len()));
    }
    if s.lines.len() != 63 {
        failures.push(format!("{} lines, expected 63", s.lines.len()));
    }
    if s.lines.iter().any(|t| t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
        failures.push("a line has fewer than 3 distinct points".into());
    }
    let mut degree = vec![0usize; s.points.len()];
    for &(p, _) in &s.flags {
        degree[p] += 1;
    }
    let mut lines_per_point = BTreeMap::new();
    for d in degree {
        *lines_per_point.entry(d).or_insert(0) += 1;
    }
    if lines_per_point.keys().any(|&d| d != 3) {
        failures.push(format!("lines per point {lines_per_point:?}, expected all 3"));
    }

    let adj = s.incidence_graph();
    let mut girth: Option<usize> = None;
    let mut diameter = Some(0);
    for root in 0..adj.len() {
        let (dist, cycle) = bfs(&adj, root);
        if let Some(c) = cycle {
            girth = Some(girth.map_or(c, |g| g.min(c)));
        }
        let ecc = dist.iter().try_fold(0, |m, d| d.map(|d| m.max(d)));
        diameter = match (diameter, ecc) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
    }
    let connected = diameter.is_some();
    if !connected {
        failures.push("incidence graph is disconnected".into());
    }
    if girth != Some(12) {
        failures.push(format!("girth {girth:?}, expected 12"));
    }
    if connected && diameter != Some(6) {
        failures.push(format!("diameter {diameter:?}, expected 6"));
    }
    HexagonReport {
        points: s.points.len(),
        lines: s.lines.len(),
        lines_per_point,
        connected,
        girth,
        diameter,
        failures,
    }
}

fn hexagon_generators() -> [GroupElement; 2] {
    [r_alpha(), r_gamma()]
}

/// Orbits of `⟨R(α), R(γ)⟩` on the quadric lines lying inside the 63
/// hexagon points, sorted by size and then by first line.
pub fn quadric_line_orbits() -> Vec<Vec<QuadricLine>> {
    let gens = hexagon_generators();
    let mut rest: std::collections::BTreeSet<QuadricLine> = quadric_lines()
        .into_iter()
        .filter(|l| l.points.iter().all(is_hexagon_point))
        .collect();
    let mut orbits = Vec::new();
    while let Some(&seed) = rest.iter().next() {
        let members = orbit(seed, &gens, |l, g| l.transform(g));
        for m in &members {
            rest.remove(m);
        }
        orbits.push(members);
    }
    orbits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a[0].cmp(&b[0])));
    orbits
}

fn seed_orbit() -> Result<IncidenceStructure, Error> {
    let seed = QuadricLine::from_labels(SEED_LINE)?;
    let lines = orbit(seed, &hexagon_generators(), |l, g| l.transform(g));
    if lines.len() != 63 {
        return Err(Error::Construction(format!("seed orbit has {} lines, expected 63", lines.len())));
    }
    let s = IncidenceStructure::new(hexagon_points(), &lines)?;
    let report = verify_generalized_hexagon(&s);
    if !report.passed() {
        return Err(Error::Construction(report.failures.join("; ")));
    }
    Ok(s)
}

/// The hexagon rebuilt without the seed: the unique 63-line orbit of quadric
/// lines inside the hexagon points that satisfies the axioms.
pub fn fallback_hexagon() -> Result<IncidenceStructure, Error> {
    let candidates: Vec<IncidenceStructure> = quadric_line_orbits()
        .into_iter()
        .filter(|o| o.len() == 63)
        .filter_map(|o| IncidenceStructure::new(hexagon_points(), &o).ok())
        .filter(|s| verify_generalized_hexagon(s).passed())
        .collect();
    match <[IncidenceStructure; 1]>::try_from(candidates) {
        Ok([s]) => Ok(s),
        Err(c) => Err(Error::Construction(format!("{} orbits pass the hexagon axioms, expected 1", c.len()))),
    }
}

/// The split Cayley hexagon, built once and validated before it is returned.
pub fn hexagon_lines() -> Result<IncidenceStructure, Error> {
    static HEXAGON: OnceLock<Result<IncidenceStructure, Error>> = OnceLock::new();
    HEXAGON.get_or_init(|| seed_orbit().or_else(|_| fallback_hexagon())).clone()
}

/// Whether every element of `group` fixes `YIII` and permutes the lines of `s`.
pub fn check_stabilizer(group: &MatrixGroup, s: &IncidenceStructure) -> bool {
    let y = point(DEFAULT_ELLIPTIC_POINT);
    let lines = s.quadric_lines();
    group.dim() == 8
        && group
            .iter()
            .all(|g| y.transform(&g) == y && lines.iter().all(|l| s.contains_line(&l.transform(&g))))
}

/// How the three heptads behind a quadric line meet in W(5,2).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LineType {
    /// The planes share this line.
    Pencil([Gf2Vector; 3]),
    /// The planes share only this point.
    PlaneStar(Gf2Vector),
}

pub fn classify_quadric_line(line: &QuadricLine) -> Result<LineType, Error> {
    let mut common = u64::MAX;
    for p in &line.points {
        common &= four_qubit_to_plane(p)?.mask();
    }
    let shared: Vec<Gf2Vector> = (1..64u32)
        .filter(|b| common >> b & 1 == 1)
        .map(|b| Gf2Vector::from_bits(b, 6))
        .collect();
    match shared.as_slice() {
        [a, b, c] => Ok(LineType::Pencil([*a, *b, *c])),
        [x] => Ok(LineType::PlaneStar(*x)),
        _ => Err(Error::Inconsistent(format!("heptads behind {line} share {} points", shared.len()))),
    }
}

/// Whether a pencil line's W(5,2) line consists of the three-qubit tails of
/// the line's four-qubit labels. `None` for plane-star lines.
pub fn pencil_is_label_tail(line: &QuadricLine) -> Result<Option<bool>, Error> {
    let LineType::Pencil(common) = classify_quadric_line(line)? else {
        return Ok(None);
    };
    let mut tails = line
        .points
        .iter()
        .map(|p| pauli::vector_of(&p.to_string()[1..]))
        .collect::<Result<Vec<_>, _>>()?;
    tails.sort();
    Ok(Some(tails == common))
}

/// The points `v ≠ 0` with `q0(v) + ⟨w, v⟩ = 0`, split by symmetry class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticSplit {
    pub commuting_symmetric: Vec<FourQubitPoint>,
    pub anticommuting_antisymmetric: Vec<FourQubitPoint>,
}

/// Splits the elliptic quadric of an antisymmetric class `w`.
pub fn elliptic_split(w: &FourQubitPoint) -> Result<EllipticSplit, Error> {
    if w.is_zero() {
        return Err(Error::ZeroVector);
    }
    if w.is_symmetric() {
        return Err(Error::SymmetricRejected(w.to_string()));
    }
    let (mut commuting_symmetric, mut anticommuting_antisymmetric): (Vec<_>, Vec<_>) = quadric_points(w.vector())
        .points
        .into_iter()
        .map(FourQubitPoint::from_vector)
        .partition(FourQubitPoint::is_symmetric);
    commuting_symmetric.sort();
    anticommuting_antisymmetric.sort();
    Ok(EllipticSplit {
        commuting_symmetric,
        anticommuting_antisymmetric,
    })
}

/// The hexagon as plain data: point labels, lines as indices into the
/// points, and the W(5,2) line behind each hexagon line.
#[derive(Clone, Debug, Serialize)]
pub struct HexagonExport {
    pub points: Vec<FourQubitPoint>,
    pub lines: Vec<[usize; 3]>,
    pub pencils: Vec<[String; 3]>,
}

pub fn export(s: &IncidenceStructure) -> Result<HexagonExport, Error> {
    let pencils = s
        .quadric_lines()
        .iter()
        .map(|l| match classify_quadric_line(l)? {
            LineType::Pencil(common) => Ok(common.map(pauli::label)),
            LineType::PlaneStar(_) => Err(Error::Inconsistent(format!("{l} is not a pencil"))),
        })
        .collect::<Result<_, _>>()?;
    Ok(HexagonExport {
        points: s.points.clone(),
        lines: s.lines.clone(),
        pencils,
    })
}
