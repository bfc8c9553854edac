//! Acceptance suite: one PASS/FAIL line per criterion, all at zero tolerance.

use std::process::{Command, ExitCode};
use std::time::Instant;

use uqsl2::basic::{
    commutator_table_of, expected_commutator_table, expected_mult_table, full_commutator_table_of,
    mult_table_of, slf_blocks_from, slf_full_algebra, BasicBasis,
};
use uqsl2::center::{block_projectors, casimir, expected_casimir_polynomial, minimal_polynomial};
use uqsl2::idempotents::{
    a_vector_residuals, action_table_residuals, b0_identity_residuals, left_ideal_basis,
    IdempotentSet, Residual,
};
use uqsl2::{Sign, Uq};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn no_residual(ctx: &str, rs: &[Residual]) -> Result<(), String> {
    match rs.iter().find(|(_, r)| !r.is_zero()) {
        None => Ok(()),
        Some((label, _)) => Err(format!("{ctx}: {label} has a nonzero residual")),
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn relations() -> Outcome {
    let mut times = Vec::new();
    for p in 2..=5 {
        let t = Instant::now();
        let uq = e(Uq::new(p))?;
        for (name, r) in e(uq.defining_relation_residuals())? {
            ensure(r.is_zero(), || format!("p={p}: {name}"))?;
        }
        for m in 1..p {
            for (i, r) in e(uq.power_commutator_residuals(m))?.iter().enumerate() {
                ensure(r.is_zero(), || format!("p={p} m={m}: power identity {i}"))?;
            }
        }
        times.push(format!("p={p} {:.2}s", t.elapsed().as_secs_f64()));
    }
    Ok(times.join(", "))
}

fn idempotency() -> Outcome {
    let mut count = 0;
    for p in 2..=5 {
        let uq = e(Uq::shared(p))?;
        let set = e(IdempotentSet::new(p))?;
        for ((s, sign), x) in &set.elements {
            ensure(&e(uq.mul(x, x))? == x, || format!("p={p} e_{s}^{sign} is not idempotent"))?;
            let dim = e(left_ideal_basis(x))?.len();
            let want = if *s < p { 2 * p } else { p } as usize;
            ensure(dim == want, || format!("p={p} s={s} {sign}: ideal dim {dim}, want {want}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} idempotents, all ideal dimensions 2p or p"))
}

fn internal_identities() -> Outcome {
    let mut count = 0;
    for p in 2..=5 {
        for s in 1..=p {
            for sign in Sign::BOTH {
                let ctx = format!("p={p} s={s} {sign}");
                let a = e(a_vector_residuals(s, sign, p))?;
                no_residual(&ctx, &a)?;
                count += a.len();
                if s < p {
                    let b = e(b0_identity_residuals(s, sign, p))?;
                    let t = e(action_table_residuals(s, sign, p))?;
                    no_residual(&ctx, &b)?;
                    no_residual(&ctx, &t)?;
                    count += b.len() + t.len();
                }
            }
        }
    }
    Ok(format!("{count} identities"))
}

fn casimir_blocks() -> Outcome {
    for p in 2..=5 {
        let uq = e(Uq::shared(p))?;
        let c = e(casimir(p))?;
        ensure(e(minimal_polynomial(&c))? == e(expected_casimir_polynomial(p))?, || {
            format!("p={p}: minimal polynomial of C differs from the product formula")
        })?;
        let bp = e(block_projectors(p))?;
        let sum = bp.projectors.iter().fold(uq.zero(), |a, x| &a + x);
        ensure(sum == uq.one(), || format!("p={p}: projectors do not sum to 1"))?;
        for (s, ps) in bp.projectors.iter().enumerate() {
            for (t, pt) in bp.projectors.iter().enumerate() {
                let prod = e(uq.mul(ps, pt))?;
                let ok = if s == t { &prod == ps } else { prod.is_zero() };
                ensure(ok, || format!("p={p}: pi_{s} pi_{t}"))?;
            }
            for g in [uq.e(), uq.f(), uq.k()] {
                ensure(e(uq.commutator(ps, &g))?.is_zero(), || format!("p={p}: pi_{s} not central"))?;
            }
        }
        let set = e(IdempotentSet::new(p))?;
        let mut placed = vec![(p, Sign::Plus, p), (p, Sign::Minus, 0)];
        for s in 1..p {
            placed.push((s, Sign::Plus, s));
            placed.push((p - s, Sign::Minus, s));
        }
        for (s, sign, block) in placed {
            let x = e(set.get(s, sign))?;
            ensure(&e(uq.mul(e(bp.get(block))?, x))? == x, || {
                format!("p={p}: e_{s}^{sign} not in Q_{block}")
            })?;
        }
    }
    Ok("minimal polynomial, partition of unity, orthogonality, centrality, containment".into())
}

fn tables() -> Outcome {
    let mut cells = 0;
    for p in 2..=5 {
        let set = e(IdempotentSet::new(p))?;
        let m = e(expected_mult_table(p))?;
        let c = e(expected_commutator_table(p))?;
        for s in 1..p {
            let b = e(BasicBasis::from_set(&set, s))?;
            let mt = e(mult_table_of(&b))?;
            let bad = mt.mismatches(&m);
            ensure(bad.is_empty(), || format!("p={p} s={s}: product cells {bad:?}"))?;
            let ct = e(commutator_table_of(&b))?;
            let bad = ct.mismatches(&c);
            ensure(bad.is_empty(), || format!("p={p} s={s}: commutator cells {bad:?}"))?;
            let full = e(full_commutator_table_of(&b))?;
            for i in [3, 7] {
                for j in 0..8 {
                    ensure(full.cells[i][j].is_zero() && full.cells[j][i].is_zero(), || {
                        format!("p={p} s={s}: A_0 fails to commute with basis element {j}")
                    })?;
                }
            }
            cells += 64 + 36;
        }
    }
    Ok(format!("{cells} cells"))
}

fn slf_dimensions() -> Outcome {
    let mut totals = Vec::new();
    for p in 2..=7u32 {
        let set = e(IdempotentSet::new(p))?;
        let blocks = e(slf_blocks_from(&set))?;
        let n = blocks.len();
        ensure(blocks[0] == 1 && blocks[n - 1] == 1, || format!("p={p}: B_0/B_p dims {blocks:?}"))?;
        ensure(blocks[1..n - 1].iter().all(|&d| d == 3), || format!("p={p}: block dims {blocks:?}"))?;
        let total: usize = blocks.iter().sum();
        ensure(total == 3 * p as usize - 1, || format!("p={p}: total {total}"))?;
        totals.push(total.to_string());
    }
    Ok(format!("totals for p = 2..7: {}", totals.join(", ")))
}

fn brute_force() -> Outcome {
    let mut parts = Vec::new();
    for p in 2..=4u32 {
        let t = Instant::now();
        let full = e(slf_full_algebra(p))?;
        let set = e(IdempotentSet::new(p))?;
        let blocks: usize = e(slf_blocks_from(&set))?.iter().sum();
        ensure(full == blocks, || format!("p={p}: full algebra {full}, blocks {blocks}"))?;
        parts.push(format!("p={p} dim {} -> {full} ({:.2}s)", 2 * p.pow(3), t.elapsed().as_secs_f64()));
    }
    Ok(parts.join(", "))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_uqsl2"))
            .args(["verify", "--p", "3", "--level", "full"])
            .output()
            .map_err(|x| x.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.code() == Some(0), || format!("first run exit {:?}", a.status.code()))?;
    ensure(b.status.code() == Some(0), || format!("second run exit {:?}", b.status.code()))?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    ensure(!a.stdout.is_empty(), || "empty report".into())?;
    Ok(format!("{} identical bytes, exit 0", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 relations", relations),
        ("2 idempotency and ideal dimensions", idempotency),
        ("3 internal identities", internal_identities),
        ("4 casimir and blocks", casimir_blocks),
        ("5 multiplication and commutator tables", tables),
        ("6 slf dimensions", slf_dimensions),
        ("7 full-algebra cross-check", brute_force),
        ("8 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} [{secs:.2}s]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} [{secs:.2}s]: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
