//! Cross-module consistency: the same invariant computed through
//! independent code paths must agree exactly.

use gwtqft::frobenius::{central_idempotents, closed_value, AlgebraElement, FrobeniusAlgebra};
use gwtqft::partitions::{enumerate, Partition};
use gwtqft::tqft::{
    dw_invariant, evaluate_relative, hurwitz_brute_force, RelativeTensor, SurfaceSpec, TqftModel,
    DEFAULT_BUDGET,
};
use gwtqft::transforms::{connected_from_disconnected, disconnected_from_connected, BivariateSeries};
use gwtqft::{rat, rat_int, TruncatedSeries};

/// Evaluating surfaces inside the class algebra agrees with the direct
/// character sum for every small surface.
#[test]
fn class_algebra_model_matches_character_sums() {
    let order = 6;
    for d in 1..=4 {
        let model = TqftModel::Algebra(FrobeniusAlgebra::class_algebra(d, order).unwrap());
        let parts = enumerate(d);
        let mut boundary_sets: Vec<Vec<Partition>> = vec![Vec::new()];
        for a in &parts {
            boundary_sets.push(vec![a.clone()]);
        }
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i..] {
                boundary_sets.push(vec![a.clone(), b.clone()]);
            }
        }
        for genus in 0..=2 {
            for bs in &boundary_sets {
                let spec = SurfaceSpec::new(d, genus, bs.clone()).unwrap();
                let via_algebra = evaluate_relative(&model, &spec, order).unwrap();
                let via_characters = TruncatedSeries::constant(
                    dw_invariant(d, genus, bs).unwrap(),
                    order,
                );
                assert_eq!(
                    via_algebra, via_characters,
                    "d={d} genus={genus} boundaries={bs:?}"
                );
            }
        }
    }
}

/// Gluing permutation-counting tensors matches building the glued
/// surface directly.
#[test]
fn counting_tensors_glue_consistently() {
    let order = 2;
    for d in 2..=3 {
        let model = TqftModel::Dw;
        let t1 = RelativeTensor::build(&model, d, 1, 2, order).unwrap();
        let t2 = RelativeTensor::build(&model, d, 0, 3, order).unwrap();
        let glued = RelativeTensor::glue_separating(&t1, &t2).unwrap();
        let direct = RelativeTensor::build(&model, d, 1, 3, order).unwrap();
        assert_eq!(glued, direct, "separating, d={d}");

        let handle = RelativeTensor::glue_nonseparating(&t2).unwrap();
        let direct = RelativeTensor::build(&model, d, 1, 1, order).unwrap();
        assert_eq!(handle, direct, "nonseparating, d={d}");

        let annulus = RelativeTensor::build(&model, d, 0, 2, order)
            .unwrap()
            .raise_index(1)
            .unwrap();
        let composed = RelativeTensor::compose(&annulus, &t1, 1).unwrap();
        assert_eq!(composed, t1, "composition with the identity annulus, d={d}");
    }
}

/// Conjugating the class algebra by a change of basis congruent to the
/// identity mod t changes nothing observable: axioms still hold, the
/// lifted spectrum and all closed values are unchanged.
#[test]
fn conjugated_class_algebra_keeps_spectrum() {
    let order = 8;
    let d = 3;
    let algebra = FrobeniusAlgebra::class_algebra(d, order).unwrap();
    let seeds = central_idempotents(d, order).unwrap();
    let reference = algebra.eigenvalues(&seeds).unwrap();

    // M = I + t E with E nilpotent (single off-diagonal entry), so
    // M^{-1} = I - t E and seed coordinates transform explicitly.
    let n = algebra.rank();
    let mut m = vec![vec![TruncatedSeries::zero(order); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = TruncatedSeries::one(order);
    }
    m[0][1] = TruncatedSeries::monomial(rat_int(1), 1, order);
    let conjugated = algebra.conjugate_basis(&m).unwrap();
    assert!(conjugated.check_axioms().is_empty());

    let transformed: Vec<AlgebraElement> = seeds
        .iter()
        .map(|e| {
            let v = e.coords();
            let mut coords = v.to_vec();
            coords[0] = &v[0] - &v[1].mul_by_t_power(1);
            AlgebraElement::new(coords).unwrap()
        })
        .collect();
    let relifted = conjugated.eigenvalues(&transformed).unwrap();
    assert_eq!(relifted, reference);

    for genus in 0..=3 {
        let closed = closed_value(&relifted, genus).unwrap();
        let expected =
            TruncatedSeries::constant(dw_invariant(d, genus, &[]).unwrap(), order);
        assert_eq!(closed, expected, "genus {genus}");
    }
}

/// The spectral route (lift, invert counits, sum powers) reproduces
/// honest permutation counts for closed surfaces.
#[test]
fn spectral_route_matches_counting() {
    let order = 2;
    for d in 2..=3 {
        let algebra = FrobeniusAlgebra::class_algebra(d, order).unwrap();
        let seeds = central_idempotents(d, order).unwrap();
        let lambdas = algebra.eigenvalues(&seeds).unwrap();
        for genus in 0..=2 {
            let spectral = closed_value(&lambdas, genus).unwrap();
            let counted =
                hurwitz_brute_force(d, genus, &[], DEFAULT_BUDGET).unwrap();
            assert_eq!(
                spectral,
                TruncatedSeries::constant(counted, order),
                "d={d} genus={genus}"
            );
        }
    }
}

/// Connected genus-two invariants: F_2 = Z_2 - Z_1^2 / 2 gives 15/2, and
/// exp inverts log on the family.
#[test]
fn connected_transform_on_genus_two_counts() {
    let order = 4;
    let z = BivariateSeries::new(
        (1..=2)
            .map(|d| {
                TruncatedSeries::constant(dw_invariant(d, 2, &[]).unwrap(), order)
            })
            .collect(),
    )
    .unwrap();
    assert_eq!(z.coeff(2), &TruncatedSeries::constant(rat_int(8), order));
    let f = connected_from_disconnected(&z);
    assert_eq!(f.coeff(1), &TruncatedSeries::constant(rat_int(1), order));
    assert_eq!(f.coeff(2), &TruncatedSeries::constant(rat(15, 2), order));
    assert_eq!(disconnected_from_connected(&f), z);
}
