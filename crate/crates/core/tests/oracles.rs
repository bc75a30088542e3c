//! Cross-method agreement between the Bernoulli generators, and hand-derived
//! instances frozen from independent evaluations.

use bernlab_core::exact::{factorial, invert_unit_lower_triangular, ExactRational, LowerTriangularMatrix};
use bernlab_core::generators::{
    gen_blissard_difference, gen_de_moivre, gen_de_moivre_even, gen_determinant, gen_egf_reciprocal,
    gen_euler_convolution, gen_genocchi, gen_matrix_inverse, BernoulliSequence, Convention, DeterminantVariant,
    GenocchiParameter, Method,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

fn assert_same(reference: &BernoulliSequence, other: &BernoulliSequence) {
    if let Some(m) = reference.first_mismatch(other) {
        panic!("{} vs {}: index {} differs ({:?} vs {:?})", reference.method, other.method, m.index, m.left, m.right);
    }
}

#[test]
fn all_generators_agree_up_to_forty() {
    let reference = gen_de_moivre(40, Convention::Minus);
    let evens = gen_de_moivre_even(20);
    for k in 1..=20 {
        assert_eq!(evens[k - 1], reference.values[2 * k], "de-moivre-even at {}", 2 * k);
    }
    assert_same(&reference, &gen_euler_convolution(40));
    assert_same(&reference, &gen_genocchi(40, GenocchiParameter::MatchIndex).unwrap());
    assert_same(&reference, &gen_blissard_difference(40));
    assert_same(&reference, &gen_matrix_inverse(40));
    assert_same(&reference, &gen_egf_reciprocal(40, Convention::Minus));
    let plus = gen_de_moivre(40, Convention::Plus);
    assert_same(&plus, &gen_egf_reciprocal(40, Convention::Plus));
}

#[test]
fn determinant_variants_agree_up_to_sixteen() {
    let reference = gen_de_moivre(16, Convention::Minus);
    assert_same(&reference, &gen_determinant(16, DeterminantVariant::Hammond));
    assert_same(&reference, &gen_determinant(16, DeterminantVariant::Factorial));
}

#[test]
fn hammond_multiplier_divides() {
    // Hammond determinants for n = 1..8 compared with (n+1)! (-1)^n B_n under
    // both readings of the multiplier.
    use bernlab_core::exact::determinant;
    use bernlab_core::generators::determinant_matrix;
    let b = gen_de_moivre(8, Convention::Minus);
    for n in 1..=8usize {
        let det = determinant(&determinant_matrix(n, DeterminantVariant::Hammond));
        let signed_b = if n % 2 == 1 { -&b.values[n] } else { b.values[n].clone() };
        let fact = ExactRational::from_integer(factorial(n as u64 + 1));
        assert_eq!(&det / &fact, signed_b, "division reading at n = {n}");
        if !signed_b.is_zero() {
            assert_ne!(&det * &fact, signed_b, "multiplication reading at n = {n}");
        }
    }
}

#[test]
fn every_method_generates_both_conventions() {
    for conv in [Convention::Minus, Convention::Plus] {
        let reference = gen_de_moivre(24, conv);
        for method in Method::GENERATORS {
            let s = method.generate(24, conv);
            assert_eq!(s.convention, conv);
            assert_same(&reference, &s);
        }
        assert_same(&reference, &Method::ProuhetFit.generate(24, conv));
    }
}

#[test]
fn odd_vanishing_and_sign_alternation() {
    let b = gen_de_moivre(40, Convention::Minus);
    for k in 1..=19 {
        assert!(b.values[2 * k + 1].is_zero());
    }
    for k in 1..=20 {
        let v = &b.values[2 * k];
        assert!(if k % 2 == 1 { v.is_positive() } else { v.is_negative() }, "B_{}", 2 * k);
    }
}

#[test]
fn known_larger_values() {
    // Values from the classical table beyond the first few.
    let b = gen_de_moivre(30, Convention::Minus);
    assert_eq!(b.values[12], q(-691, 2730));
    assert_eq!(b.values[14], q(7, 6));
    assert_eq!(b.values[16], q(-3617, 510));
    assert_eq!(b.values[20], q(-174611, 330));
    assert_eq!(b.values[30], q(8615841276005, 14322));
}

#[test]
fn factorial_matrix_inverse_entries() {
    let dim = 8;
    let m = LowerTriangularMatrix::from_fn(dim, 0, |r, c| ExactRational::new(BigInt::one(), factorial((r - c + 1) as u64)))
        .unwrap();
    let inv = invert_unit_lower_triangular(&m).unwrap();
    let b = gen_de_moivre(dim, Convention::Minus);
    for r in 0..dim {
        for c in 0..dim {
            let expected = if c <= r {
                &b.values[r - c] / ExactRational::from_integer(factorial((r - c) as u64))
            } else {
                ExactRational::zero()
            };
            assert_eq!(inv.get(r, c), &expected, "entry ({r}, {c})");
        }
    }
}
