//! Sp(6,2) acting on three-qubit vectors (6×6) and on four-qubit vectors
//! through the spin module (8×8).
//!
//! Matrices act on row vectors from the right, `v ↦ v·S`. A word `xy` means
//! "apply `x`, then `y`" and therefore evaluates to the product `X·Y`.
//!
//! The literal γ matrices follow the opposite habit: they are the γ-word
//! multiplied out on column-vector (transposed) generator matrices, see
//! [`Composition::ColumnVectors`].

use std::collections::VecDeque;
use std::fmt;
use std::hash::Hash;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::pauli::symplectic_form;
use crate::Error;

/// An invertible matrix of side 6 or 8 acting on row vectors from the right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement {
    matrix: Gf2Matrix,
}

impl GroupElement {
    pub fn new(matrix: Gf2Matrix) -> Result<Self, Error> {
        if !matrix.is_square() || !(matrix.rows() == 6 || matrix.rows() == 8) {
            return Err(Error::Construction(format!(
                "group elements are 6x6 or 8x8, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.inverse().is_none() {
            return Err(Error::Construction("singular matrix".into()));
        }
        Ok(GroupElement { matrix })
    }

    fn from_bits(rows: &[&str]) -> Self {
        Self::new(Gf2Matrix::from_bit_rows(rows).expect("literal bit grid")).expect("literal generator")
    }

    pub fn identity(dim: usize) -> Self {
        GroupElement {
            matrix: Gf2Matrix::identity(dim),
        }
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn pack(&self) -> u64 {
        self.matrix.pack()
    }

    pub fn unpack(word: u64, dim: usize) -> Self {
        GroupElement {
            matrix: Gf2Matrix::unpack(word, dim, dim),
        }
    }

    /// `v·S`.
    pub fn apply(&self, v: Gf2Vector) -> Gf2Vector {
        v.mul_matrix(&self.matrix)
    }

    pub fn then(&self, next: &Self) -> Self {
        GroupElement {
            matrix: self.matrix * next.matrix,
        }
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            matrix: self.matrix.inverse().expect("group elements are invertible"),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { *self };
        GroupElement {
            matrix: base.matrix.pow(e.unsigned_abs()),
        }
    }

    /// Transposes preserve the symplectic group.
    pub fn transpose(&self) -> Self {
        GroupElement {
            matrix: self.matrix.transpose(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Gf2Matrix::identity(self.dim())
    }

    /// Multiplicative order (the group is finite, so this terminates).
    pub fn order(&self) -> u64 {
        let mut acc = *self;
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.then(self);
            k += 1;
        }
        k
    }

    /// `S J Sᵀ = J` for the standard form with identity off-diagonal blocks.
    pub fn is_symplectic(&self) -> bool {
        let j = symplectic_matrix(self.dim() / 2);
        self.matrix * j * self.matrix.transpose() == j
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

/// Gram matrix `J = [[0, I], [I, 0]]` of the symplectic form on `2n` coordinates.
pub fn symplectic_matrix(n: usize) -> Gf2Matrix {
    let mut j = Gf2Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j.set(i, i + n, true);
        j.set(i + n, i, true);
    }
    j
}

/// The symplectic transvection `v ↦ v + ⟨v, w⟩ w`.
pub fn transvection(w: Gf2Vector) -> Result<GroupElement, Error> {
    if w.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = w.len();
    let rows: Vec<Gf2Vector> = (0..n)
        .map(|i| {
            let e = Gf2Vector::unit(i, n);
            if symplectic_form(e, w) {
                e + w
            } else {
                e
            }
        })
        .collect();
    GroupElement::new(Gf2Matrix::from_vectors(&rows))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    /// 6×6 matrices on three-qubit vectors.
    Symplectic,
    /// 8×8 matrices on four-qubit vectors.
    Spin,
}

impl Representation {
    pub fn dim(self) -> usize {
        match self {
            Representation::Symplectic => 6,
            Representation::Spin => 8,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    Alpha,
    Beta,
    Gamma,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::Alpha => 'α',
            Generator::Beta => 'β',
            Generator::Gamma => 'γ',
        }
    }
}

/// The cyclic shift α: block diagonal `diag(K, L)`.
pub fn d_alpha() -> GroupElement {
    GroupElement::from_bits(&[
        "111000", "011000", "110000", //
        "000111", "000110", "000011",
    ])
}

/// The involution β, the transvection of ZZX.
pub fn d_beta() -> GroupElement {
    GroupElement::from_bits(&["100000", "010000", "111001", "110101", "110011", "000001"])
}

/// γ, which together with α generates G₂(2).
pub fn d_gamma() -> GroupElement {
    GroupElement::from_bits(&["000010", "001110", "100101", "110100", "101010", "001000"])
}

pub fn r_alpha() -> GroupElement {
    GroupElement::from_bits(&[
        "10000000", "01110000", "00110000", "01100000", //
        "00001000", "00000111", "00000110", "00000011",
    ])
}

pub fn r_beta() -> GroupElement {
    GroupElement::from_bits(&[
        "10000001", "01000001", "00100001", "00011110", //
        "01101000", "10100100", "11000010", "00000001",
    ])
}

pub fn r_gamma() -> GroupElement {
    GroupElement::from_bits(&[
        "00011010", "00000010", "00010110", "11001101", //
        "10010010", "11101100", "01010010", "00010000",
    ])
}

pub fn generator(g: Generator, rep: Representation) -> GroupElement {
    match (g, rep) {
        (Generator::Alpha, Representation::Symplectic) => d_alpha(),
        (Generator::Beta, Representation::Symplectic) => d_beta(),
        (Generator::Gamma, Representation::Symplectic) => d_gamma(),
        (Generator::Alpha, Representation::Spin) => r_alpha(),
        (Generator::Beta, Representation::Spin) => r_beta(),
        (Generator::Gamma, Representation::Spin) => r_gamma(),
    }
}

/// The six literal generator matrices.
#[derive(Clone, Debug)]
pub struct Generators {
    pub d_alpha: GroupElement,
    pub d_beta: GroupElement,
    pub d_gamma: GroupElement,
    pub r_alpha: GroupElement,
    pub r_beta: GroupElement,
    pub r_gamma: GroupElement,
}

pub fn generators() -> Generators {
    Generators {
        d_alpha: d_alpha(),
        d_beta: d_beta(),
        d_gamma: d_gamma(),
        r_alpha: r_alpha(),
        r_beta: r_beta(),
        r_gamma: r_gamma(),
    }
}

impl Generators {
    pub fn named(&self) -> [(&'static str, GroupElement); 6] {
        [
            ("D(alpha)", self.d_alpha),
            ("D(beta)", self.d_beta),
            ("D(gamma)", self.d_gamma),
            ("R(alpha)", self.r_alpha),
            ("R(beta)", self.r_beta),
            ("R(gamma)", self.r_gamma),
        ]
    }
}

/// Expected orders of α, β and γ.
pub fn expected_order(g: Generator) -> u64 {
    match g {
        Generator::Alpha => 7,
        Generator::Beta => 2,
        Generator::Gamma => 6,
    }
}

/// A word in the generators, as `(generator, exponent)` syllables.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(pub Vec<(Generator, i64)>);

impl Word {
    /// Parses `βα²βαβα³βα⁴β`, `b a^2 b a`, `a^-1 b` and similar; `a`/`α`,
    /// `b`/`β`, `g`/`γ` name the generators.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut out = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '.').peekable();
        while let Some(c) = chars.next() {
            let g = match c {
                'a' | 'A' | 'α' => Generator::Alpha,
                'b' | 'B' | 'β' => Generator::Beta,
                'g' | 'G' | 'γ' => Generator::Gamma,
                other => return Err(Error::Parse(format!("unknown generator {other:?} in word {s:?}"))),
            };
            let mut exp: i64 = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let neg = chars.peek() == Some(&'-');
                if neg {
                    chars.next();
                }
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                exp = digits
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in word {s:?}")))?;
                if neg {
                    exp = -exp;
                }
            } else if chars.peek().is_some_and(|d| superscript_digit(*d).is_some() || *d == '⁻') {
                let neg = chars.peek() == Some(&'⁻');
                if neg {
                    chars.next();
                }
                let mut value = 0i64;
                let mut any = false;
                while let Some(d) = chars.peek().and_then(|d| superscript_digit(*d)) {
                    value = value * 10 + d;
                    any = true;
                    chars.next();
                }
                if !any {
                    return Err(Error::Parse(format!("bad exponent in word {s:?}")));
                }
                exp = if neg { -value } else { value };
            }
            out.push((g, exp));
        }
        Ok(Word(out))
    }

    /// Syllables in application order for the chosen reading convention.
    fn syllables(&self, convention: Composition) -> Vec<(Generator, i64)> {
        match convention {
            Composition::LeftToRight | Composition::ColumnVectors => self.0.clone(),
            Composition::RightToLeft => self.0.iter().rev().copied().collect(),
        }
    }
}

fn superscript_digit(c: char) -> Option<i64> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c).map(|p| p as i64)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, e) in &self.0 {
            write!(f, "{}", g.symbol())?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// How a word is turned into a matrix product.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Composition {
    /// `xy ↦ X·Y`: the leftmost letter acts first on row vectors.
    LeftToRight,
    /// `xy ↦ Y·X`.
    RightToLeft,
    /// `xy ↦ Xᵀ·Yᵀ`: letters are the column-vector (transposed) matrices,
    /// multiplied in written order. Equals the transpose of `RightToLeft`.
    ColumnVectors,
}

/// The reading of the γ-word that reproduces the printed D(γ) and R(γ).
pub const GAMMA_WORD_CONVENTION: Composition = Composition::ColumnVectors;

/// γ = βα²βαβα³βα⁴β.
pub const GAMMA_WORD: &str = "βα²βαβα³βα⁴β";

pub fn evaluate_word_with(word: &Word, rep: Representation, convention: Composition) -> GroupElement {
    let letter = |g: Generator| {
        let m = generator(g, rep);
        if convention == Composition::ColumnVectors {
            m.transpose()
        } else {
            m
        }
    };
    word.syllables(convention)
        .into_iter()
        .fold(GroupElement::identity(rep.dim()), |acc, (g, e)| acc.then(&letter(g).pow(e)))
}

pub fn evaluate_word(word: &Word, rep: Representation) -> GroupElement {
    evaluate_word_with(word, rep, GAMMA_WORD_CONVENTION)
}

/// A finite matrix group, stored as the sorted packed words of its elements.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    elements: Vec<u64>,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.dim() == self.dim && self.elements.binary_search(&g.pack()).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.elements.iter().map(move |&w| GroupElement::unpack(w, self.dim))
    }

    /// Elements fixing the vector `v`.
    pub fn stabilizer_of(&self, v: Gf2Vector) -> Vec<GroupElement> {
        self.iter().filter(|g| g.apply(v) == v).collect()
    }
}

/// Breadth-first closure of `gens` under right multiplication.
pub fn group_closure(gens: &[GroupElement]) -> Result<MatrixGroup, Error> {
    let dim = gens
        .first()
        .map(GroupElement::dim)
        .ok_or_else(|| Error::Construction("no generators".into()))?;
    if gens.iter().any(|g| g.dim() != dim) {
        return Err(Error::Construction("generators of different sizes".into()));
    }
    if gens.iter().any(|g| !g.is_symplectic()) {
        return Err(Error::Construction("generator is not symplectic".into()));
    }
    let gen_mats: Vec<Gf2Matrix> = gens.iter().map(|g| g.matrix).collect();
    let id = Gf2Matrix::identity(dim).pack();
    let mut seen: FxHashSet<u64> = FxHashSet::default();
    seen.insert(id);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let m = Gf2Matrix::unpack(w, dim, dim);
        for g in &gen_mats {
            let next = (m * *g).pack();
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<u64> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(MatrixGroup { dim, elements })
}

/// Orbit of `seed` under the group generated by `gens`, with a spanning
/// tree recording how each member was first reached.
#[derive(Clone, Debug)]
pub struct OrbitTree<T> {
    /// Members in breadth-first discovery order; index 0 is the seed.
    pub members: Vec<T>,
    /// For each member but the seed: (parent index, generator index).
    pub parents: Vec<Option<(usize, usize)>>,
}

impl<T> OrbitTree<T> {
    /// Generator indices mapping the seed to member `i`, in application order.
    pub fn word_to(&self, mut i: usize) -> Vec<usize> {
        let mut word = Vec::new();
        while let Some((parent, g)) = self.parents[i] {
            word.push(g);
            i = parent;
        }
        word.reverse();
        word
    }
}

pub fn orbit_tree<T, F>(seed: T, gens: &[GroupElement], act: F) -> OrbitTree<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &GroupElement) -> T,
{
    let mut index: FxHashMap<T, usize> = FxHashMap::default();
    index.insert(seed.clone(), 0);
    let mut tree = OrbitTree {
        members: vec![seed],
        parents: vec![None],
    };
    let mut head = 0;
    while head < tree.members.len() {
        let current = tree.members[head].clone();
        for (gi, g) in gens.iter().enumerate() {
            let next = act(&current, g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), tree.members.len());
                tree.members.push(next);
                tree.parents.push(Some((head, gi)));
            }
        }
        head += 1;
    }
    tree
}

/// Orbit of `seed`, sorted.
pub fn orbit<T, F>(seed: T, gens: &[GroupElement], act: F) -> Vec<T>
where
    T: Clone + Ord + Hash,
    F: Fn(&T, &GroupElement) -> T,
{
    let mut members = orbit_tree(seed, gens, act).members;
    members.sort();
    members
}

pub fn point_orbit(v: Gf2Vector, gens: &[GroupElement]) -> Vec<Gf2Vector> {
    orbit(v, gens, |x, g| g.apply(*x))
}

pub fn plane_orbit(p: crate::IsotropicPlane, gens: &[GroupElement]) -> Vec<crate::IsotropicPlane> {
    orbit(p, gens, |x, g| x.transform(g.matrix()).expect("symplectic maps preserve planes"))
}

#[derive(Clone, Debug, Serialize)]
pub struct RelatorCheck {
    pub relator: &'static str,
    pub representation: Representation,
    pub holds: bool,
}

/// Relators of the two-generator presentation of Sp(6,2).
pub const RELATORS: [&str; 6] = ["α^7", "β^2", "(βα)^9", "(βα^2)^12", "[β,α]^3", "[β,α^2]^2"];

/// Evaluates every relator in both representations.
pub fn verify_presentation() -> Vec<RelatorCheck> {
    let mut out = Vec::new();
    for rep in [Representation::Symplectic, Representation::Spin] {
        let a = generator(Generator::Alpha, rep);
        let b = generator(Generator::Beta, rep);
        let comm = |x: &GroupElement, y: &GroupElement| x.inverse().then(&y.inverse()).then(x).then(y);
        let values = [
            a.pow(7),
            b.pow(2),
            b.then(&a).pow(9),
            b.then(&a.pow(2)).pow(12),
            comm(&b, &a).pow(3),
            comm(&b, &a.pow(2)).pow(2),
        ];
        for (relator, value) in RELATORS.iter().zip(values) {
            out.push(RelatorCheck {
                relator,
                representation: rep,
                holds: value.is_identity(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli;

    fn v(label: &str) -> Gf2Vector {
        pauli::vector_of(label).unwrap()
    }

    #[test]
    fn generator_orders_and_symplecticity() {
        for (g, rep) in [
            (Generator::Alpha, Representation::Symplectic),
            (Generator::Beta, Representation::Symplectic),
            (Generator::Gamma, Representation::Symplectic),
            (Generator::Alpha, Representation::Spin),
            (Generator::Beta, Representation::Spin),
            (Generator::Gamma, Representation::Spin),
        ] {
            let m = generator(g, rep);
            assert_eq!(m.order(), expected_order(g), "{g:?} {rep:?}");
            assert!(m.is_symplectic(), "{g:?} {rep:?}");
        }
        assert!(r_beta().pow(2).is_identity());
        let yiii = v("YIII");
        assert_eq!(r_gamma().apply(yiii), yiii);
        assert_eq!(r_alpha().apply(yiii), yiii);
    }

    #[test]
    fn transvection_examples() {
        let w = v("ZZX");
        let t = transvection(w).unwrap();
        assert_eq!(t, d_beta());
        assert!(t.pow(2).is_identity());
        assert!(t.is_symplectic());
        assert_eq!(t.apply(v("IIZ")), v("ZZY"));
        assert_eq!(t.apply(v("ZII")), v("ZII"));
        assert_eq!(transvection(Gf2Vector::zero(6)), Err(Error::ZeroVector));
    }

    #[test]
    fn words() {
        assert!(evaluate_word(&Word::default(), Representation::Symplectic).is_identity());
        let a7 = Word::parse("α⁷").unwrap();
        assert_eq!(a7, Word(vec![(Generator::Alpha, 7)]));
        assert!(evaluate_word(&a7, Representation::Spin).is_identity());
        assert_eq!(Word::parse("b a^2 b a^-1").unwrap().0.len(), 4);
        assert_eq!(Word::parse("a^-1").unwrap().0, vec![(Generator::Alpha, -1)]);
        assert!(Word::parse("ax").is_err());
        assert!(Word::parse("a^").is_err());
        let gamma = Word::parse(GAMMA_WORD).unwrap();
        assert_eq!(gamma.0.len(), 9);
        assert_eq!(evaluate_word(&gamma, Representation::Symplectic), d_gamma());
        assert_eq!(evaluate_word(&gamma, Representation::Spin), r_gamma());
        for rep in [Representation::Symplectic, Representation::Spin] {
            let printed = generator(Generator::Gamma, rep);
            assert_ne!(evaluate_word_with(&gamma, rep, Composition::LeftToRight), printed);
            assert_ne!(evaluate_word_with(&gamma, rep, Composition::RightToLeft), printed);
            assert_eq!(
                evaluate_word_with(&gamma, rep, Composition::RightToLeft).transpose(),
                printed
            );
        }
    }

    #[test]
    fn presentation_relators_hold() {
        let checks = verify_presentation();
        assert_eq!(checks.len(), 12);
        for c in checks {
            assert!(c.holds, "{} fails in {:?}", c.relator, c.representation);
        }
    }

    #[test]
    fn alpha_orbit_of_001001() {
        let orbit = orbit_tree("(001001)".parse::<Gf2Vector>().unwrap(), &[d_alpha()], |x, g| g.apply(*x));
        let expected = ["(001001)", "(110011)", "(100101)", "(111100)", "(010111)", "(011010)", "(101110)"];
        let got: Vec<String> = orbit.members.iter().map(ToString::to_string).collect();
        assert_eq!(got, expected);
        assert_eq!(orbit.word_to(3), vec![0, 0, 0]);
    }

    #[test]
    fn point_and_plane_transitivity() {
        let gens = [d_alpha(), d_beta()];
        assert_eq!(point_orbit(v("XYZ"), &gens).len(), 63);
        let plane = crate::polar::context_space()[0];
        assert_eq!(plane_orbit(plane, &gens).len(), 135);
    }

    #[test]
    fn g2_closure_order() {
        let g2 = group_closure(&[d_alpha(), d_gamma()]).unwrap();
        assert_eq!(g2.order(), 12096);
        assert!(g2.contains(&d_gamma()));
        assert!(!g2.contains(&d_beta()));
    }

    #[test]
    fn full_closure_orders() {
        // |Sp(6,2)| = 2^9 (2^2 - 1)(2^4 - 1)(2^6 - 1)
        let order = 512 * 3 * 15 * 63;
        assert_eq!(group_closure(&[d_alpha(), d_beta()]).unwrap().order(), order);
        let spin = group_closure(&[r_alpha(), r_beta()]).unwrap();
        assert_eq!(spin.order(), order);
        let stabilizer = spin.stabilizer_of(v("YIII"));
        assert_eq!(stabilizer.len(), 12096);
        let g2 = group_closure(&[r_alpha(), r_gamma()]).unwrap();
        assert!(stabilizer.iter().all(|g| g2.contains(g)));
    }

    #[test]
    fn closure_rejects_bad_input() {
        assert!(group_closure(&[]).is_err());
        assert!(group_closure(&[d_alpha(), r_alpha()]).is_err());
        let not_symplectic = GroupElement::new(Gf2Matrix::from_bit_rows(&[
            "110000", "010000", "001000", "000100", "000010", "000001",
        ]).unwrap())
        .unwrap();
        assert!(group_closure(&[not_symplectic]).is_err());
    }
}
