//! Idempotents, ideal dimensions and the in-algebra identities for p <= 5.

use uqsl2::idempotents::{
    a_vector_residuals, action_table_residuals, b0_identity_residuals, left_ideal_basis,
    primitive_idempotent, weight_filter_residuals, ProjectiveVectors, Residual,
};
use uqsl2::linalg::span_rank;
use uqsl2::{Sign, Uq};

fn all_zero(ctx: &str, rs: &[Residual]) {
    for (label, r) in rs {
        assert!(r.is_zero(), "{ctx}: {label} leaves {r}");
    }
}

#[test]
fn idempotents_and_ideal_dimensions() {
    for p in 2..=5u32 {
        for s in 1..=p {
            for sign in Sign::BOTH {
                let e = primitive_idempotent(s, sign, p).unwrap();
                let dim = left_ideal_basis(&e).unwrap().len();
                let expect = if s < p { 2 * p } else { p } as usize;
                assert_eq!(dim, expect, "p={p} s={s} {sign}");
            }
        }
    }
}

#[test]
fn internal_identities() {
    for p in 2..=5u32 {
        for s in 1..p {
            for sign in Sign::BOTH {
                let ctx = format!("p={p} s={s} {sign}");
                all_zero(&ctx, &b0_identity_residuals(s, sign, p).unwrap());
                all_zero(&ctx, &a_vector_residuals(s, sign, p).unwrap());
                all_zero(&ctx, &action_table_residuals(s, sign, p).unwrap());
            }
            all_zero(&format!("p={p} s={s}"), &weight_filter_residuals(s, p).unwrap());
        }
        for sign in Sign::BOTH {
            all_zero(&format!("p={p} s=p {sign}"), &a_vector_residuals(p, sign, p).unwrap());
        }
    }
}

#[test]
fn projective_vectors_are_independent() {
    for p in 2..=5u32 {
        let uq = Uq::shared(p).unwrap();
        for s in 1..p {
            for sign in Sign::BOTH {
                let v = ProjectiveVectors::new(s, sign, p).unwrap();
                let rows: Vec<_> = v.ordered().iter().map(|x| uq.element_to_row(x).unwrap()).collect();
                assert_eq!(span_rank(&rows).unwrap(), 2 * p as usize);
            }
        }
    }
}

#[test]
fn mirrored_idempotents_are_orthogonal() {
    for p in 2..=5u32 {
        let uq = Uq::shared(p).unwrap();
        for s in 1..p {
            let ep = primitive_idempotent(s, Sign::Plus, p).unwrap();
            let em = primitive_idempotent(p - s, Sign::Minus, p).unwrap();
            assert!(uq.mul(&ep, &em).unwrap().is_zero());
            assert!(uq.mul(&em, &ep).unwrap().is_zero());
        }
    }
}
