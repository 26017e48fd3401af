//! Verification suites behind `verify`.

use std::collections::BTreeSet;

use heptads::clifford7::{self, CliffordLabel, PlaneClass};
use heptads::gf2::{enumerate_subspaces, Gf2Vector};
use heptads::grassmann::{
    check_equivariance, check_primitive, check_separable, four_qubit_to_plane, ovoid_to_spread, plane_plucker,
    plane_to_four_qubit, plucker_embed, spread_to_clifford9, FourQubitPoint, PluckerPoint,
};
use heptads::hexagon::{
    self, classify_quadric_line, elliptic_split, hexagon_lines, verify_generalized_hexagon, LineType, QuadricLine,
};
use heptads::mermin::{self, construct_symmetric_pentagrams, Pentagram};
use heptads::polar::{self, context_space, enumerate_spreads, klein_systems, plane_incidence, Incidence};
use heptads::spgroup::{self, group_closure, Composition, Representation, Word};
use heptads::{pauli, IsotropicPlane};

use crate::report::Checks;

/// Heptads in Cliff(7) labels and their four-qubit images.
pub const DICTIONARY: [(&str, &str); 22] = [
    ("7 16 25 34 167 257 347", "YYXZ"),
    ("7 16 24 35 167 247 357", "YIYX"),
    ("7 12 34 56 127 347 567", "YIZY"),
    ("7 14 25 36 147 257 367", "YYII"),
    ("7 16 23 45 167 237 457", "IYZY"),
    ("7 13 25 46 137 257 467", "IIXZ"),
    ("7 15 26 34 157 267 347", "IYYX"),
    ("7 14 26 35 147 267 357", "XXYY"),
    ("7 12 45 36 127 457 367", "XXZX"),
    ("7 13 24 56 137 247 567", "XZXI"),
    ("7 15 24 36 157 247 367", "ZZZX"),
    ("7 14 23 56 147 237 567", "ZZYY"),
    ("7 12 35 46 127 357 467", "ZXIZ"),
    ("7 15 23 46 157 237 467", "ZXXI"),
    ("7 13 26 45 137 267 457", "XZIZ"),
    ("123 147 156 246 257 345 367", "XXII"),
    ("127 135 146 236 245 347 567", "ZIZZ"),
    ("126 134 157 235 247 367 456", "IIIX"),
    ("124 137 156 236 257 345 467", "IIIZ"),
    ("124 235 346 457 561 672 371", "XIII"),
    ("126 237 341 452 563 674 715", "ZIII"),
    ("1 27 36 45 127 136 145", "YIIY"),
];

pub const EXAMPLE_OVOID: &str = "YXZY YYII IZXX IZXZ YZIY IXXI IXYY ZIZI XIZI";

pub const SECOND_PENTAGRAM: &str =
    "XXX,YYI,IYY,ZXZ; XXX,XXI,IXI,IXX; ZXZ,ZII,IXI,IIZ; ZZZ,YYI,XXI,IIZ; ZZZ,IYY,ZII,IXX";

pub const BETA_IMAGE_PENTAGRAM: &str =
    "ZII,IZI,IIX,ZZX; ZYX,ZZY,ZXZ,ZII; YZX,ZZY,IZI,XZZ; XXX,ZXZ,XZZ,ZZX; ZYX,YZX,IIX,XXX";

pub fn clifford_plane(labels: &str) -> Option<IsotropicPlane> {
    let points = labels
        .split(' ')
        .map(|l| l.parse::<CliffordLabel>().map(|c| c.vector()))
        .collect::<Result<Vec<Gf2Vector>, _>>()
        .ok()?;
    let plane = IsotropicPlane::span(&points).ok()?;
    points.iter().all(|v| plane.contains(*v)).then_some(plane)
}

fn label(s: &str) -> Gf2Vector {
    pauli::vector_of(s).expect("built-in label")
}

fn fq(s: &str) -> FourQubitPoint {
    s.parse().expect("built-in label")
}

pub fn census() -> Checks {
    let mut c = Checks::default();
    c.expect("points", 63, polar::enumerate_isotropic(1).len());
    c.expect("lines", 315, polar::enumerate_isotropic(2).len());
    c.expect("planes", 135, context_space().len());
    c.expect("subspaces_3", 1395, enumerate_subspaces(6, 3).len());
    let klein_points = polar::points(3).iter().filter(|v| !pauli::q0(**v)).count();
    c.expect("klein_points", 35, klein_points);
    let systems = klein_systems();
    c.expect("klein_x_system", 15, systems.x_system.len());
    c.expect("klein_z_system", 15, systems.z_system.len());
    c
}

pub fn group() -> Checks {
    let mut c = Checks::default();
    let g = spgroup::generators();
    c.expect("order_d_alpha_d_beta", 1451520, group_closure(&[g.d_alpha, g.d_beta]).map_or(0, |x| x.order()));
    c.expect("order_d_alpha_d_gamma", 12096, group_closure(&[g.d_alpha, g.d_gamma]).map_or(0, |x| x.order()));
    match group_closure(&[g.r_alpha, g.r_beta]) {
        Ok(spin) => {
            c.expect("order_r_alpha_r_beta", 1451520, spin.order());
            c.expect("stabilizer_yiii", 12096, spin.stabilizer_of(label("YIII")).len());
        }
        Err(_) => c.expect("order_r_alpha_r_beta", 1451520, 0),
    }
    c.expect("order_r_alpha_r_gamma", 12096, group_closure(&[g.r_alpha, g.r_gamma]).map_or(0, |x| x.order()));
    let relators = spgroup::verify_presentation();
    c.expect("relators_holding", 12, relators.iter().filter(|r| r.holds).count());
    let word = Word::parse(spgroup::GAMMA_WORD).expect("built-in word");
    c.expect_true(
        "gamma_word_d",
        spgroup::evaluate_word_with(&word, Representation::Symplectic, Composition::ColumnVectors) == g.d_gamma,
    );
    c.expect_true(
        "gamma_word_r",
        spgroup::evaluate_word_with(&word, Representation::Spin, Composition::ColumnVectors) == g.r_gamma,
    );
    let t = spgroup::transvection(label("ZZX")).expect("nonzero");
    c.expect_true("transvection_is_d_beta", t == g.d_beta);
    let fixed: Vec<Gf2Vector> = polar::points(3).into_iter().filter(|v| t.apply(*v) == *v).collect();
    c.expect("transvection_fixed_classes", 31, fixed.len());
    c.expect_true(
        "fixed_classes_commute_with_zzx",
        fixed.iter().all(|v| !pauli::symplectic_form(*v, label("ZZX"))),
    );
    c
}

pub fn clifford() -> Checks {
    let mut c = Checks::default();
    let orbits = clifford7::alpha_orbits();
    c.expect("alpha_orbits", 9, orbits.len());
    c.expect("alpha_orbits_of_size_7", 9, orbits.iter().filter(|o| o.len() == 7).count());
    let steiner = context_space()
        .iter()
        .filter(|p| clifford7::classify_plane(p) == PlaneClass::Steiner)
        .count();
    c.expect("steiner_planes", 30, steiner);
    c.expect("mixed_planes", 105, context_space().len() - steiner);
    let through = clifford7::planes_through(label("YXZ")).map_or(0, |p| p.len());
    c.expect("planes_through_yxz", 15, through);
    c
}

pub fn bijection() -> Checks {
    let mut c = Checks::default();
    let planes = context_space();
    let images: BTreeSet<FourQubitPoint> = planes.iter().map(plane_to_four_qubit).collect();
    c.expect("distinct_images", 135, images.len());
    c.expect("symmetric_images", 135, images.iter().filter(|f| f.is_symmetric() && !f.is_zero()).count());
    let round_trips = planes
        .iter()
        .filter(|p| four_qubit_to_plane(&plane_to_four_qubit(p)).ok() == Some(**p))
        .count();
    c.expect("round_trips", 135, round_trips);
    let matching = DICTIONARY
        .iter()
        .filter(|(labels, image)| clifford_plane(labels).map(|p| plane_to_four_qubit(&p)) == Some(fq(image)))
        .count();
    c.expect("dictionary_rows_matching", DICTIONARY.len() as i64, matching);

    let g = spgroup::generators();
    let equivariant = [(g.d_alpha, g.r_alpha), (g.d_beta, g.r_beta), (g.d_gamma, g.r_gamma)]
        .iter()
        .filter(|(d, r)| check_equivariance(d, r))
        .count();
    c.expect("equivariant_generators", 3, equivariant);

    let mut pairs = 0;
    let mut consistent = 0;
    for (i, p) in planes.iter().enumerate() {
        for q in &planes[i + 1..] {
            pairs += 1;
            let meet = plane_incidence(p, q) != Incidence::Disjoint;
            if meet != plane_to_four_qubit(p).anticommutes_with(&plane_to_four_qubit(q)) {
                consistent += 1;
            }
        }
    }
    c.expect("plane_pairs", 9045, pairs);
    c.expect("incidence_matches_commutation", 9045, consistent);
    let row = |i: usize| clifford_plane(DICTIONARY[i].0).expect("built-in plane");
    c.expect_true("f2_f3_meet_in_a_point", plane_incidence(&row(1), &row(2)) == Incidence::Point);
    c.expect_true("f1_f2_meet_in_a_line", plane_incidence(&row(0), &row(1)) == Incidence::Line);
    c.expect_true("f1_f21_disjoint", plane_incidence(&row(0), &row(20)) == Incidence::Disjoint);
    c
}

pub fn plucker() -> Checks {
    let mut c = Checks::default();
    let subspaces = enumerate_subspaces(6, 3);
    let embedded: Vec<PluckerPoint> = subspaces.iter().filter_map(|b| plucker_embed(b).ok()).collect();
    c.expect("plucker_images", 1395, embedded.iter().collect::<BTreeSet<_>>().len());
    c.expect("separable_images", 1395, embedded.iter().filter(|p| check_separable(p)).count());
    c.expect("primitive_images", 135, embedded.iter().filter(|p| check_primitive(p)).count());
    c.expect("singular_images", 1395, embedded.iter().filter(|p| !heptads::grassmann::quadratic_form(p)).count());
    let isotropic: Vec<PluckerPoint> = context_space().iter().map(plane_plucker).collect();
    c.expect("primitive_isotropic_images", 135, isotropic.iter().filter(|p| check_primitive(p)).count());
    let reduces = isotropic.iter().all(|p| {
        isotropic.iter().all(|q| {
            heptads::grassmann::symplectic_pairing(p, q) == p.four_qubit_part().anticommutes_with(&q.four_qubit_part())
        })
    });
    c.expect_true("pairing_reduces_to_four_qubits", reduces);
    c
}

pub fn spreads() -> Checks {
    let mut c = Checks::default();
    let spreads = enumerate_spreads();
    c.expect("spreads", 960, spreads.len());
    let ovoids: Vec<Vec<FourQubitPoint>> = spreads.iter().map(spread_to_clifford9).collect();
    let anticommuting = ovoids
        .iter()
        .filter(|o| {
            o.iter()
                .enumerate()
                .all(|(i, x)| x.is_symmetric() && o[i + 1..].iter().all(|y| x.anticommutes_with(y)))
        })
        .count();
    c.expect("anticommuting_ovoids", 960, anticommuting);
    let distinct: BTreeSet<Vec<FourQubitPoint>> = ovoids
        .into_iter()
        .map(|mut o| {
            o.sort();
            o
        })
        .collect();
    c.expect("distinct_ovoids", 960, distinct.len());
    let example: Vec<FourQubitPoint> = EXAMPLE_OVOID.split(' ').map(fq).collect();
    c.expect_true("example_ovoid_from_spread", ovoid_to_spread(&example).is_ok());
    c
}

pub fn pentagrams(threads: usize) -> Checks {
    let mut c = Checks::default();
    c.expect("edges", 945, mermin::affine_edges().len());
    let census = mermin::enumerate_pentagrams_with(threads);
    c.expect("pentagrams", 12096, census.magic.len());
    c.expect("even_parity_configurations", 0, census.even_parity.len());
    let symmetric: BTreeSet<Pentagram> = census.magic.iter().filter(|p| p.is_symmetric()).copied().collect();
    c.expect("symmetric_pentagrams", 336, symmetric.len());
    match construct_symmetric_pentagrams() {
        Ok(built) => {
            let built: BTreeSet<Pentagram> = built.into_iter().map(|b| b.pentagram).collect();
            c.expect("constructed_symmetric", 336, built.len());
            c.expect_true("construction_matches_census", built == symmetric);
        }
        Err(_) => c.expect("constructed_symmetric", 336, 0),
    }
    let present = |p: Option<Pentagram>| p.is_some_and(|p| census.magic.binary_search(&p).is_ok());
    c.expect_true("canonical_present", present(Some(mermin::canonical_pentagram())));
    c.expect_true("second_example_present", present(Pentagram::from_labels(SECOND_PENTAGRAM).ok()));
    c.expect_true("beta_image_present", present(Pentagram::from_labels(BETA_IMAGE_PENTAGRAM).ok()));
    c
}

pub fn hexagon() -> Checks {
    let mut c = Checks::default();
    c.expect("hexagon_points", 63, hexagon::hexagon_points().len());
    match hexagon_lines() {
        Ok(s) => {
            let report = verify_generalized_hexagon(&s);
            c.expect("hexagon_lines", 63, report.lines);
            c.expect("points_on_three_lines", 63, report.lines_per_point.get(&3).copied().unwrap_or(0));
            c.expect_true("hexagon_connected", report.connected);
            c.expect("hexagon_girth", 12, report.girth.unwrap_or(0));
            c.expect("hexagon_diameter", 6, report.diameter.unwrap_or(0));
            let pencils = s
                .quadric_lines()
                .iter()
                .filter(|l| matches!(classify_quadric_line(l), Ok(LineType::Pencil(_))))
                .count();
            c.expect("pencil_lines", 63, pencils);
        }
        Err(_) => c.expect("hexagon_lines", 63, 0),
    }
    let star = QuadricLine::from_labels(["XXII", "XXXX", "IIXX"]).and_then(|l| classify_quadric_line(&l));
    c.expect_true("plane_star_example", star == Ok(LineType::PlaneStar(label("IYY"))));
    let mut common = [label("XIX"), label("XZX"), label("IZI")];
    common.sort();
    let pencil = QuadricLine::from_labels(hexagon::SEED_LINE).and_then(|l| classify_quadric_line(&l));
    c.expect_true("pencil_example", pencil == Ok(LineType::Pencil(common)));
    match elliptic_split(&fq("YIII")) {
        Ok(split) => {
            c.expect("elliptic_commuting_symmetric", 63, split.commuting_symmetric.len());
            c.expect("elliptic_anticommuting_antisymmetric", 56, split.anticommuting_antisymmetric.len());
            c.expect_true("elliptic_part_is_hexagon", split.commuting_symmetric == hexagon::hexagon_points());
        }
        Err(_) => c.expect("elliptic_commuting_symmetric", 63, 0),
    }
    c
}

/// Every suite, in a fixed order.
pub fn all(threads: usize) -> Checks {
    let mut c = census();
    for part in [group(), clifford(), bijection(), plucker(), spreads(), pentagrams(threads), hexagon()] {
        c.extend(part);
    }
    c
}
