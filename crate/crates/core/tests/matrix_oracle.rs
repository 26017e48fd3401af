mod common;

use common::{real_matrix, word_matrix, Matrix, ONE};
use heptads::clifford7::GENERATOR_LABELS;
use heptads::gf2::Gf2Vector;
use heptads::hexagon::hexagon_points;
use heptads::mermin::{affine_edges, canonical_pentagram};
use heptads::{pauli, PauliOperator};

fn op(bits: u32, qubits: usize) -> PauliOperator {
    PauliOperator::from_vector(Gf2Vector::from_bits(bits, 2 * qubits))
}

fn minus_one() -> common::Gauss {
    common::Gauss { re: -1, im: 0 }
}

#[test]
fn products_match_matrices() {
    for u in 0..64 {
        for v in 0..64 {
            for sign in [false, true] {
                let p = if sign { op(u, 3).negated() } else { op(u, 3) };
                let q = op(v, 3);
                let product = p.multiply(&q).unwrap();
                assert_eq!(real_matrix(&product), &real_matrix(&p) * &real_matrix(&q), "{p} * {q}");
            }
        }
    }
}

#[test]
fn commutation_matches_matrices() {
    for u in 0..64 {
        for v in 0..64 {
            let (p, q) = (real_matrix(&op(u, 3)), real_matrix(&op(v, 3)));
            let commute = &p * &q == &q * &p;
            assert_eq!(commute, !pauli::symplectic_form(op(u, 3).vector(), op(v, 3).vector()));
        }
    }
}

#[test]
fn symmetry_matches_transpose() {
    for bits in 0..256 {
        let p = op(bits, 4);
        let m = real_matrix(&p);
        if p.is_symmetric() {
            assert_eq!(m.transpose(), m, "{p}");
        } else {
            assert_eq!(m.transpose(), m.scale(minus_one()), "{p}");
        }
    }
}

#[test]
fn clifford_generators_anticommute() {
    let gammas: Vec<Matrix> = GENERATOR_LABELS.iter().map(|l| word_matrix(l, false)).collect();
    for (a, ga) in gammas.iter().enumerate() {
        for (b, gb) in gammas.iter().enumerate() {
            let anti = &(ga * gb) + &(gb * ga);
            let expected = if a == b { -2 } else { 0 };
            assert_eq!(anti.as_scalar(), Some(common::Gauss { re: expected, im: 0 }), "Γ{} Γ{}", a + 1, b + 1);
        }
    }
}

fn edge_product(labels: &[String], hermitian: bool) -> common::Gauss {
    let product = labels
        .iter()
        .map(|l| word_matrix(l, hermitian))
        .reduce(|acc, m| &acc * &m)
        .unwrap();
    product.as_scalar().expect("edge operators multiply to a multiple of the identity")
}

#[test]
fn edge_signs_match_matrices() {
    let edges = affine_edges();
    assert_eq!(edges.len(), 945);
    for edge in edges {
        let labels = edge.labels();
        let observable = edge_product(&labels, true);
        let real = edge_product(&labels, false);
        assert_eq!(observable == minus_one(), edge.sign(), "{edge}");
        assert_eq!(real == minus_one(), edge.real_sign(), "{edge}");
        assert!(observable == ONE || observable == minus_one());
    }
}

#[test]
fn canonical_pentagram_is_contradictory() {
    // Each point lies on two edges, so the product of all five edge products
    // would be +1 for any assignment of values; the operators give -1.
    let p = canonical_pentagram();
    let total = p
        .edges()
        .iter()
        .map(|e| edge_product(&e.labels(), true))
        .fold(ONE, |acc, c| acc * c);
    assert_eq!(total, minus_one());
}

#[test]
fn hexagon_points_commute_with_yiii() {
    let y = word_matrix("YIII", true);
    for p in hexagon_points() {
        let m = word_matrix(&p.to_string(), true);
        assert_eq!(&m * &y, &y * &m, "{p}");
    }
}
