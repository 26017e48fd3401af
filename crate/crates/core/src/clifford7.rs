//! Cliff(7) labels for three-qubit observables.
//!
//! Seven pairwise anticommuting operators Γ₁…Γ₇ generate the three-qubit
//! Pauli group, and their product is the identity up to sign. Every
//! nontrivial class is therefore a product of one, two or three Γ's, and we
//! write it as the digit string of their indices (`127` for Γ₁Γ₂Γ₇).
//! Singlets and doublets are antisymmetric, triplets are symmetric.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::gf2::Gf2Vector;
use crate::pauli;
use crate::polar::{context_space, IsotropicPlane};
use crate::spgroup::d_alpha;
use crate::Error;

/// Γ₁ … Γ₇.
pub const GENERATOR_LABELS: [&str; 7] = ["IIY", "ZYX", "YIX", "YZZ", "XYX", "IYZ", "YXZ"];

const FULL: u8 = 0x7f;

/// A subset of {1,…,7} of size one to three, stored as a 7-bit mask
/// (bit `k-1` for index `k`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CliffordLabel {
    mask: u8,
}

impl CliffordLabel {
    /// Reduces any proper nonempty subset to its size-≤3 representative.
    pub fn from_mask(mask: u8) -> Result<Self, Error> {
        let mask = mask & FULL;
        if mask == 0 || mask == FULL {
            return Err(Error::Parse("the empty and full index sets denote the identity".into()));
        }
        let mask = if mask.count_ones() > 3 { !mask & FULL } else { mask };
        Ok(CliffordLabel { mask })
    }

    pub fn from_indices(indices: &[u8]) -> Result<Self, Error> {
        let mut mask = 0u8;
        for &k in indices {
            if !(1..=7).contains(&k) {
                return Err(Error::Parse(format!("index {k} outside 1..7")));
            }
            mask ^= 1 << (k - 1);
        }
        Self::from_mask(mask)
    }

    pub fn mask(&self) -> u8 {
        self.mask
    }

    pub fn indices(&self) -> Vec<u8> {
        (1..=7).filter(|k| self.mask >> (k - 1) & 1 == 1).collect()
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_symmetric(&self) -> bool {
        self.size() == 3
    }

    /// Product up to sign; `None` when the product is the identity.
    pub fn product(&self, other: &Self) -> Option<Self> {
        Self::from_mask(self.mask ^ other.mask).ok()
    }

    /// Applies `a ↦ a + k (mod 7)` to every index.
    pub fn shifted(&self, k: u32) -> Self {
        let k = k % 7;
        let m = u32::from(self.mask);
        let rotated = ((m << k) | (m >> (7 - k))) & u32::from(FULL);
        CliffordLabel { mask: rotated as u8 }
    }

    pub fn vector(&self) -> Gf2Vector {
        let gammas = gamma_vectors();
        self.indices()
            .into_iter()
            .fold(Gf2Vector::zero(6), |acc, k| acc + gammas[usize::from(k) - 1])
    }

    /// Digit-string order: shorter labels first, then lexicographic.
    fn sort_key(&self) -> (usize, String) {
        (self.size(), self.to_string())
    }
}

impl PartialOrd for CliffordLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CliffordLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for CliffordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in self.indices() {
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for CliffordLabel {
    type Err = Error;

    /// Digits in any order; repeated digits are rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut mask = 0u8;
        for c in s.trim().chars() {
            let k = c
                .to_digit(10)
                .filter(|k| (1..=7).contains(k))
                .ok_or_else(|| Error::Parse(format!("bad Clifford label {s:?}")))?;
            let bit = 1 << (k - 1);
            if mask & bit != 0 {
                return Err(Error::Parse(format!("repeated index {k} in {s:?}")));
            }
            mask |= bit;
        }
        Self::from_mask(mask)
    }
}

impl Serialize for CliffordLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The class vectors of Γ₁ … Γ₇.
pub fn gamma_vectors() -> [Gf2Vector; 7] {
    GENERATOR_LABELS.map(|l| pauli::vector_of(l).expect("literal label"))
}

/// Label table indexed by the packed class vector.
fn label_table() -> &'static [u8; 64] {
    static TABLE: OnceLock<[u8; 64]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [0u8; 64];
        for mask in 1..FULL {
            if mask.count_ones() <= 3 {
                let label = CliffordLabel { mask };
                let slot = &mut table[label.vector().bits() as usize];
                assert_eq!(*slot, 0, "labels must be a bijection");
                *slot = mask;
            }
        }
        table
    })
}

pub fn label_of(v: Gf2Vector) -> Result<CliffordLabel, Error> {
    if v.len() != 6 {
        return Err(Error::WidthMismatch { left: 6, right: v.len() });
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(CliffordLabel {
        mask: label_table()[v.bits() as usize],
    })
}

pub fn from_label(label: &CliffordLabel) -> Gf2Vector {
    label.vector()
}

/// The nine orbits of the order-seven automorphism α on the 63 points.
///
/// Each orbit starts at its smallest label and lists the successive images
/// under `v ↦ v·D(α)`; orbits are ordered by that first label.
pub fn alpha_orbits() -> Vec<Vec<Gf2Vector>> {
    let alpha = d_alpha();
    let mut seen = 0u64;
    let mut starts: Vec<CliffordLabel> = (1..64)
        .map(|b| label_of(Gf2Vector::from_bits(b, 6)).expect("nonzero"))
        .collect();
    starts.sort();
    let mut orbits = Vec::new();
    for start in starts {
        let v = start.vector();
        if seen >> v.bits() & 1 == 1 {
            continue;
        }
        let mut orbit = vec![v];
        let mut next = alpha.apply(v);
        while next != v {
            orbit.push(next);
            next = alpha.apply(next);
        }
        for w in &orbit {
            seen |= 1 << w.bits();
        }
        orbits.push(orbit);
    }
    orbits
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaneClass {
    /// Four antisymmetric and three symmetric points.
    Mixed,
    /// Seven symmetric points: the triples form a Steiner triple system.
    Steiner,
}

/// Two classes only: `Q0` is linear on an isotropic plane, so its zero set
/// is either a line or the whole plane.
pub fn classify_plane(plane: &IsotropicPlane) -> PlaneClass {
    let symmetric = plane.points().iter().filter(|v| !pauli::q0(**v)).count();
    debug_assert!(symmetric == 3 || symmetric == 7);
    if symmetric == 7 {
        PlaneClass::Steiner
    } else {
        PlaneClass::Mixed
    }
}

/// Labels of the seven points, sorted.
pub fn plane_labels(plane: &IsotropicPlane) -> Vec<CliffordLabel> {
    let mut labels: Vec<CliffordLabel> = plane
        .points()
        .iter()
        .map(|v| label_of(*v).expect("plane points are nonzero"))
        .collect();
    labels.sort();
    labels
}

/// All planes of the context space through `v` (always fifteen).
pub fn planes_through(v: Gf2Vector) -> Result<Vec<IsotropicPlane>, Error> {
    if v.len() != 6 {
        return Err(Error::WidthMismatch { left: 6, right: v.len() });
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(context_space().iter().filter(|p| p.contains(v)).copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spgroup::{d_alpha, d_beta};

    fn l(s: &str) -> CliffordLabel {
        s.parse().unwrap()
    }

    fn v(s: &str) -> Gf2Vector {
        pauli::vector_of(s).unwrap()
    }

    #[test]
    fn generator_labels() {
        for (i, g) in GENERATOR_LABELS.iter().enumerate() {
            let label = label_of(v(g)).unwrap();
            assert_eq!(label.indices(), vec![i as u8 + 1]);
        }
        assert_eq!(label_of(v("ZYZ")).unwrap(), l("12"));
        assert_eq!(label_of(v("XYY")).unwrap(), l("123"));
        assert_eq!(label_of(Gf2Vector::zero(6)), Err(Error::ZeroVector));
    }

    #[test]
    fn parsing_and_complements() {
        assert_eq!(l("71"), l("17"));
        assert_eq!(l("71").to_string(), "17");
        assert_eq!(l("1234"), l("567"));
        assert_eq!(l("123456"), l("7"));
        assert!("1234567".parse::<CliffordLabel>().is_err());
        assert!("".parse::<CliffordLabel>().is_err());
        assert!("118".parse::<CliffordLabel>().is_err());
        assert!("11".parse::<CliffordLabel>().is_err());
        assert_eq!(l("12").product(&l("34")), Some(l("1234")));
        assert_eq!(l("12").product(&l("12")), None);
    }

    #[test]
    fn labels_are_a_bijection() {
        let mut seen = std::collections::HashSet::new();
        for bits in 1..64 {
            let x = Gf2Vector::from_bits(bits, 6);
            let label = label_of(x).unwrap();
            assert_eq!(label.vector(), x);
            assert!(seen.insert(label));
        }
        let sizes: Vec<usize> = (1..=3)
            .map(|k| seen.iter().filter(|s| s.size() == k).count())
            .collect();
        assert_eq!(sizes, vec![7, 21, 35]);
    }

    #[test]
    fn symmetry_follows_label_size() {
        for bits in 1..64 {
            let x = Gf2Vector::from_bits(bits, 6);
            assert_eq!(label_of(x).unwrap().is_symmetric(), !pauli::q0(x));
        }
    }

    #[test]
    fn alpha_shifts_labels() {
        let alpha = d_alpha();
        for bits in 1..64 {
            let x = Gf2Vector::from_bits(bits, 6);
            assert_eq!(label_of(alpha.apply(x)).unwrap(), label_of(x).unwrap().shifted(1));
        }
    }

    #[test]
    fn nine_orbits_match_the_table() {
        let table: [(&str, &str); 9] = [
            ("1 2 3 4 5 6 7", "IIY ZYX YIX YZZ XYX IYZ YXZ"),
            ("12 23 34 45 56 67 71", "ZYZ XYI IZY ZXY XIY YZI YXX"),
            ("13 24 35 46 57 61 72", "YIZ XXY ZYI YXI ZZY IYX XZY"),
            ("14 25 36 47 51 62 73", "YZX YII YYY IYI XYZ ZIY IXY"),
            ("123 234 345 456 567 671 712", "XYY ZXZ XXZ ZZX ZXX YZY XZI"),
            ("124 235 346 457 561 672 713", "XXI IIX IXX XIX XII XXX IXI"),
            ("125 236 347 451 562 673 714", "YIY XIZ YYX ZXI YYZ IZX IYY"),
            ("126 237 341 452 563 674 715", "ZII ZZZ IZI IZZ ZIZ IIZ ZZI"),
            ("135 246 357 461 572 613 724", "ZYY XZX XZZ YXY IXZ YYI ZIX"),
        ];
        let orbits = alpha_orbits();
        assert_eq!(orbits.len(), 9);
        for ((labels, ops), orbit) in table.iter().zip(&orbits) {
            let labels: Vec<CliffordLabel> = labels.split(' ').map(l).collect();
            let ops: Vec<Gf2Vector> = ops.split(' ').map(v).collect();
            assert_eq!(orbit, &ops);
            let got: Vec<CliffordLabel> = orbit.iter().map(|x| label_of(*x).unwrap()).collect();
            assert_eq!(got, labels);
        }
    }

    #[test]
    fn plane_census() {
        let planes = context_space();
        let steiner: Vec<&IsotropicPlane> = planes
            .iter()
            .filter(|p| classify_plane(p) == PlaneClass::Steiner)
            .collect();
        assert_eq!(steiner.len(), 30);
        assert_eq!(planes.len() - steiner.len(), 105);
        for p in &steiner {
            assert!(plane_labels(p).iter().all(CliffordLabel::is_symmetric));
        }
        let mixed = IsotropicPlane::span(&[v("ZYZ"), v("IZY"), v("XIY")]).unwrap();
        assert_eq!(classify_plane(&mixed), PlaneClass::Mixed);
        let expected: Vec<CliffordLabel> = ["7", "12", "34", "56", "127", "347", "567"].map(l).to_vec();
        assert_eq!(plane_labels(&mixed), expected);
    }

    fn alpha_orbit_sizes(class: PlaneClass) -> Vec<usize> {
        let alpha = d_alpha();
        let mut remaining: Vec<IsotropicPlane> = context_space()
            .iter()
            .filter(|p| classify_plane(p) == class)
            .copied()
            .collect();
        let mut sizes = Vec::new();
        while let Some(p) = remaining.pop() {
            let mut size = 1;
            let mut q = p.transform(alpha.matrix()).unwrap();
            while q != p {
                remaining.retain(|r| *r != q);
                size += 1;
                q = q.transform(alpha.matrix()).unwrap();
            }
            sizes.push(size);
        }
        sizes.sort();
        sizes
    }

    #[test]
    fn alpha_orbits_on_planes() {
        assert_eq!(alpha_orbit_sizes(PlaneClass::Mixed), vec![7; 15]);
        assert_eq!(alpha_orbit_sizes(PlaneClass::Steiner), vec![1, 1, 7, 7, 7, 7]);
        let alpha = d_alpha();
        for labels in ["124 235 346 457 561 672 713", "126 237 341 452 563 674 715"] {
            let pts: Vec<Gf2Vector> = labels.split(' ').map(|s| l(s).vector()).collect();
            let plane = IsotropicPlane::span(&pts).unwrap();
            assert_eq!(plane.points().len(), 7);
            assert!(pts.iter().all(|x| plane.contains(*x)));
            assert_eq!(plane.transform(alpha.matrix()).unwrap(), plane);
        }
    }

    #[test]
    fn steiner_representatives() {
        let reps = [
            ("123 147 156 246 257 345 367", "XYY IYY XII XZX IXZ XXZ IZX"),
            ("127 135 146 236 245 347 567", "XZI ZYY YXY XIZ IZZ YYX ZXX"),
            ("126 134 157 235 247 367 456", "ZII IZI ZZI IIX ZIX IZX ZZX"),
            ("124 137 156 236 257 345 467", "XXI IXI XII XIZ IXZ XXZ IIZ"),
        ];
        for (labels, ops) in reps {
            let pts: Vec<Gf2Vector> = ops.split(' ').map(v).collect();
            let plane = IsotropicPlane::span(&pts).unwrap();
            assert!(pts.iter().all(|x| plane.contains(*x)));
            let mut expected: Vec<CliffordLabel> = labels.split(' ').map(l).collect();
            expected.sort();
            assert_eq!(plane_labels(&plane), expected);
            assert_eq!(classify_plane(&plane), PlaneClass::Steiner);
        }
    }

    #[test]
    fn fifteen_planes_through_yxz() {
        let listed = [
            ("7 16 25 34 167 257 347", "YXZ IYX YII IZY YZY IXZ YYX"),
            ("7 16 24 35 167 247 357", "YXZ IYX XXY ZYI YZY ZIX XZZ"),
            ("7 12 34 56 127 347 567", "YXZ ZYZ IZY XIY XZI YYX ZXX"),
            ("7 14 25 36 147 257 367", "YXZ YZX YII YYY IYY IXZ IZX"),
            ("7 16 23 45 167 237 457", "YXZ IYX XYI ZXY YZY ZZZ XIX"),
            ("7 13 25 46 137 257 467", "YXZ YIZ YII YXI IXI IXZ IIZ"),
            ("7 15 26 34 157 267 347", "YXZ XYZ ZIY IZY ZZI XXX YYX"),
            ("7 14 26 35 147 267 357", "YXZ YZX ZIY ZYI IYY XXX XZZ"),
            ("7 12 45 36 127 457 367", "YXZ ZYZ ZXY YYY XZI XIX IZX"),
            ("7 13 24 56 137 247 567", "YXZ YIZ XXY XIY IXI ZIX ZXX"),
            ("7 15 24 36 157 247 367", "YXZ XYZ XXY YYY ZZI ZIX IZX"),
            ("7 14 23 56 147 237 567", "YXZ YZX XYI XIY IYY ZZZ ZXX"),
            ("7 12 35 46 127 357 467", "YXZ ZYZ ZYI YXI XZI XZZ IIZ"),
            ("7 15 23 46 157 237 467", "YXZ XYZ XYI YXI ZZI ZZZ IIZ"),
            ("7 13 26 45 137 267 457", "YXZ YIZ ZIY ZXY IXI XXX XIX"),
        ];
        let through = planes_through(v("YXZ")).unwrap();
        assert_eq!(through.len(), 15);
        let mut expected: Vec<IsotropicPlane> = listed
            .iter()
            .map(|(labels, ops)| {
                let from_ops: Vec<Gf2Vector> = ops.split(' ').map(v).collect();
                let from_labels: Vec<Gf2Vector> = labels.split(' ').map(|s| l(s).vector()).collect();
                assert_eq!(from_ops, from_labels);
                IsotropicPlane::span(&from_ops).unwrap()
            })
            .collect();
        expected.sort();
        assert_eq!(through, expected);
        assert_eq!(planes_through(Gf2Vector::zero(6)), Err(Error::ZeroVector));
        for bits in 1..64 {
            assert_eq!(planes_through(Gf2Vector::from_bits(bits, 6)).unwrap().len(), 15);
        }
    }

    /// The doublet triples of the planes through 7 are the lines of a PG(3,2)
    /// whose points are the fifteen doublets on {1,…,6}.
    #[test]
    fn doublet_triples_form_pg32() {
        let seven = l("7").vector();
        let lines: Vec<Vec<CliffordLabel>> = planes_through(seven)
            .unwrap()
            .iter()
            .map(|p| plane_labels(p).into_iter().filter(|x| x.size() == 2).collect())
            .collect();
        let doublets: Vec<CliffordLabel> = (1..=6u8)
            .flat_map(|a| (a + 1..=6).map(move |b| CliffordLabel::from_indices(&[a, b]).unwrap()))
            .collect();
        assert_eq!(doublets.len(), 15);
        for line in &lines {
            assert_eq!(line.len(), 3);
            let union = line.iter().fold(0u8, |m, x| m | x.mask());
            assert_eq!(union, 0x3f, "three disjoint doublets covering 1..6");
        }
        // Modulo Γ₇ the doublets are points of v⊥/⟨v⟩ ≅ PG(3,2), and each triple is a line.
        for line in &lines {
            let sum = line.iter().fold(Gf2Vector::zero(6), |acc, x| acc + x.vector());
            assert!(sum.is_zero() || sum == seven);
        }
        for (i, a) in doublets.iter().enumerate() {
            for b in &doublets[i + 1..] {
                let through_both = lines.iter().filter(|ln| ln.contains(a) && ln.contains(b)).count();
                let disjoint = a.mask() & b.mask() == 0;
                assert_eq!(through_both, usize::from(disjoint));
            }
        }
    }

    #[test]
    fn beta_label_pairs() {
        let pairs = [
            ("123", "7"), ("237", "1"), ("137", "2"), ("127", "3"),
            ("14", "156"), ("15", "146"), ("16", "145"),
            ("24", "256"), ("25", "246"), ("26", "245"),
            ("34", "356"), ("35", "346"), ("36", "345"),
            ("47", "567"), ("57", "467"), ("67", "457"),
        ];
        let beta = d_beta();
        let mut moved = 0;
        for bits in 1..64 {
            let x = Gf2Vector::from_bits(bits, 6);
            let image = beta.apply(x);
            let (lx, li) = (label_of(x).unwrap(), label_of(image).unwrap());
            let listed = pairs
                .iter()
                .any(|(p, q)| (l(p) == lx && l(q) == li) || (l(q) == lx && l(p) == li));
            if image == x {
                assert!(!listed);
                assert!(!pauli::symplectic_form(x, v("ZZX")));
            } else {
                assert!(listed, "{lx} ↦ {li} missing");
                moved += 1;
            }
        }
        assert_eq!(moved, 32);
        assert_eq!(63 - moved, 31);
    }

    #[test]
    fn shifted_is_cyclic() {
        for mask in 1..FULL {
            if let Ok(x) = CliffordLabel::from_mask(mask) {
                assert_eq!(x.shifted(7), x);
                assert_eq!(x.shifted(3).shifted(4), x);
            }
        }
    }
}
