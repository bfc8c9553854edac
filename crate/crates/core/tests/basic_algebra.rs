//! Basis, multiplication and commutator tables of the blocks B_s, and the
//! SLF dimensions.

use uqsl2::basic::{
    basic_idempotent_from, commutator_table_of, expected_commutator_table, expected_mult_table,
    full_commutator_table_of, mult_table_of, slf_blocks_from, slf_dimension, slf_full_algebra,
    BasicBasis, LABELS,
};
use uqsl2::idempotents::{left_ideal_basis, IdempotentSet};
use uqsl2::linalg::{span_rank, RankAccumulator};
use uqsl2::{CycNum, Uq};

#[test]
fn tables_match_for_every_block() {
    for p in 2..=5 {
        let set = IdempotentSet::new(p).unwrap();
        let expected_mult = expected_mult_table(p).unwrap();
        let expected_comm = expected_commutator_table(p).unwrap();
        for s in 1..p {
            let b = BasicBasis::from_set(&set, s).unwrap();
            let mt = mult_table_of(&b).unwrap();
            assert!(mt.mismatches(&expected_mult).is_empty(), "p={p} s={s}: {:?}", mt.mismatches(&expected_mult));
            let ct = commutator_table_of(&b).unwrap();
            assert!(ct.mismatches(&expected_comm).is_empty(), "p={p} s={s}");
            // A_0^± commute with everything
            let full = full_commutator_table_of(&b).unwrap();
            for (i, row) in full.cells.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    if LABELS[i].starts_with('A') || LABELS[j].starts_with('A') {
                        assert!(cell.is_zero(), "p={p} s={s} [{}, {}]", LABELS[i], LABELS[j]);
                    }
                }
            }
            for (label, r) in b.annihilation_residuals().unwrap() {
                assert!(r.is_zero(), "p={p} s={s} {label}: {r}");
            }
        }
    }
}

#[test]
fn tables_do_not_depend_on_block_or_p() {
    let reference = mult_table_of(&BasicBasis::new(2, 1).unwrap()).unwrap().to_json();
    for p in 3..=4 {
        for s in 1..p {
            let t = mult_table_of(&BasicBasis::new(p, s).unwrap()).unwrap();
            assert_eq!(t.to_json(), reference);
        }
    }
}

#[test]
fn commutator_span_has_rank_five() {
    let b = BasicBasis::new(3, 1).unwrap();
    let uq = Uq::shared(3).unwrap();
    let get = |id: &str| b.get(id).unwrap().clone();
    let vs = [get("X0p"), get("Y0p"), get("X0m"), get("Y0m"), &get("A0p") - &get("A0m")];
    let rows: Vec<_> = vs.iter().map(|x| uq.element_to_row(x).unwrap()).collect();
    assert_eq!(span_rank(&rows).unwrap(), 5);
}

#[test]
fn block_left_ideal_is_sum_of_two_projectives() {
    for p in 2..=4 {
        let uq = Uq::shared(p).unwrap();
        let set = IdempotentSet::new(p).unwrap();
        for s in 1..p {
            let b = BasicBasis::from_set(&set, s).unwrap();
            let unit = &b.elements[0] + &b.elements[4];
            assert_eq!(left_ideal_basis(&unit).unwrap().len(), 4 * p as usize);
            let rows: Vec<_> = b.families.all().iter().map(|x| uq.element_to_row(x).unwrap()).collect();
            assert_eq!(span_rank(&rows).unwrap(), 4 * p as usize);
        }
    }
}

#[test]
fn basic_algebra_dimension() {
    for p in 2..=4 {
        let uq = Uq::shared(p).unwrap();
        let set = IdempotentSet::new(p).unwrap();
        let e = basic_idempotent_from(&set).unwrap();
        let one = CycNum::one(uq.field());
        let mut acc = RankAccumulator::new(uq.dim());
        for m in uq.monomials() {
            let x = uq.product(&[&e, &uq.term(m, one.clone()), &e]).unwrap();
            if !x.is_zero() {
                acc.insert(uq.element_to_row(&x).unwrap()).unwrap();
            }
        }
        assert_eq!(acc.rank(), 8 * (p as usize - 1) + 2, "p={p}");
    }
}

#[test]
fn slf_blocks_and_totals() {
    for p in 2..=5 {
        let set = IdempotentSet::new(p).unwrap();
        let blocks = slf_blocks_from(&set).unwrap();
        assert_eq!(blocks.first(), Some(&1));
        assert_eq!(blocks.last(), Some(&1));
        assert!(blocks[1..p as usize].iter().all(|&d| d == 3));
        assert_eq!(blocks.iter().sum::<usize>(), 3 * p as usize - 1);
    }
}

#[test]
fn brute_force_agrees_with_blocks() {
    assert_eq!(slf_full_algebra(2).unwrap(), 5);
    assert_eq!(slf_full_algebra(3).unwrap(), 8);
}

#[test]
fn slf_dimension_rejects_non_closed_span() {
    let uq = Uq::shared(3).unwrap();
    assert!(slf_dimension(&[uq.e()]).is_err());
    assert_eq!(slf_dimension(&[uq.one()]).unwrap(), 1);
}
