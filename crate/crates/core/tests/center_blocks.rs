//! Casimir minimal polynomial, block projectors and where the idempotents live.

use uqsl2::center::{beta, block_projectors, casimir, expected_casimir_polynomial, minimal_polynomial};
use uqsl2::idempotents::{a_vector, gamma_delta, primitive_idempotent};
use uqsl2::repr::simple_module;
use uqsl2::{Sign, Uq};

#[test]
fn casimir_minimal_polynomial_matches_product_formula() {
    for p in 2..=5 {
        let c = casimir(p).unwrap();
        let got = minimal_polynomial(&c).unwrap();
        assert_eq!(got, expected_casimir_polynomial(p).unwrap(), "p={p}");
        assert_eq!(got.degree(), Some(2 * p as usize));
        for i in 0..=p as i64 {
            for j in 0..i {
                assert_ne!(beta(p, i).unwrap(), beta(p, j).unwrap());
            }
        }
    }
}

#[test]
fn projectors_partition_unity_and_are_central() {
    for p in 2..=5 {
        let uq = Uq::shared(p).unwrap();
        let bp = block_projectors(p).unwrap();
        let sum = bp.projectors.iter().fold(uq.zero(), |a, x| &a + x);
        assert_eq!(sum, uq.one(), "p={p}");
        for (s, ps) in bp.projectors.iter().enumerate() {
            for (t, pt) in bp.projectors.iter().enumerate() {
                let prod = uq.mul(ps, pt).unwrap();
                if s == t {
                    assert_eq!(&prod, ps, "p={p} idempotent {s}");
                } else {
                    assert!(prod.is_zero(), "p={p} {s}*{t}");
                }
            }
            for g in [uq.e(), uq.f(), uq.k()] {
                assert!(uq.commutator(ps, &g).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn idempotents_sit_in_their_blocks() {
    for p in 2..=5 {
        let uq = Uq::shared(p).unwrap();
        let bp = block_projectors(p).unwrap();
        let mut placed = vec![(p, Sign::Plus, p), (p, Sign::Minus, 0)];
        for s in 1..p {
            placed.push((s, Sign::Plus, s));
            placed.push((p - s, Sign::Minus, s));
        }
        for (s, sign, block) in placed {
            let e = primitive_idempotent(s, sign, p).unwrap();
            for t in 0..=p {
                let got = uq.mul(bp.get(t).unwrap(), &e).unwrap();
                if t == block {
                    assert_eq!(got, e, "p={p} e_{s}^{sign} in Q_{t}");
                } else {
                    assert!(got.is_zero(), "p={p} e_{s}^{sign} outside Q_{t}");
                }
            }
        }
    }
}

#[test]
fn block_dimensions_add_up() {
    for p in 2..=3 {
        let bp = block_projectors(p).unwrap();
        let total: usize = (0..=p).map(|s| bp.dimension(s).unwrap()).sum();
        assert_eq!(total, 2 * (p as usize).pow(3));
    }
    let bp = block_projectors(2).unwrap();
    assert_eq!(bp.dimension(0).unwrap(), 4);
}

#[test]
fn casimir_on_highest_weight_vectors_and_simple_modules() {
    for p in 2..=5 {
        let uq = Uq::shared(p).unwrap();
        let c = casimir(p).unwrap();
        for s in 1..=p {
            for sign in Sign::BOTH {
                let scalar = beta(p, s as i64).unwrap().scale_int(sign.unit());
                let a0 = a_vector(s, 0, sign, p).unwrap();
                assert_eq!(uq.mul(&c, &a0).unwrap(), a0.scale(&scalar));
                let r = simple_module(s, sign, p).unwrap();
                let m = r.act(&c).unwrap();
                let id = uqsl2::linalg::Matrix::identity(r.field(), r.dim);
                assert_eq!(m, id.scale(&scalar), "X p={p} s={s} {sign}");
            }
        }
    }
}

/// `C e_s = (1/γ) a_0 ± β_s e_s`: the nilpotent part carries the `1/γ`
/// coming from `e_s = (b_0 - (δ/γ) a_0)/γ` and `FE b_0 = a_0`.
#[test]
fn casimir_on_idempotents() {
    for p in 2..=5 {
        let uq = Uq::shared(p).unwrap();
        let c = casimir(p).unwrap();
        for s in 1..p {
            for sign in Sign::BOTH {
                let e = primitive_idempotent(s, sign, p).unwrap();
                let a0 = a_vector(s, 0, sign, p).unwrap();
                let g = gamma_delta(s, sign, p).unwrap().gamma;
                let scalar = beta(p, s as i64).unwrap().scale_int(sign.unit());
                let expect = &a0.scale(&g.inv().unwrap()) + &e.scale(&scalar);
                assert_eq!(uq.mul(&c, &e).unwrap(), expect, "p={p} s={s} {sign}");
                // the unscaled reading only agrees when γ = 1
                let literal = &a0 + &e.scale(&scalar);
                assert_eq!(uq.mul(&c, &e).unwrap() == literal, g.is_one());
            }
        }
    }
}
