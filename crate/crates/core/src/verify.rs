//! Runs every check at a given `p` and collects a report of labelled
//! pass/fail lines.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::basic::{
    basic_idempotent_from, commutator_table_of, expected_commutator_table, expected_mult_table,
    full_commutator_table_of, mult_table_of, slf_dimension, slf_full_algebra, BasicBasis, IDS,
};
use crate::center::{
    beta, block_projectors, casimir, casimir_fe_form, expected_casimir_polynomial,
    minimal_polynomial,
};
use crate::error::{param, Error, Result};
use crate::idempotents::{
    a_vector, a_vector_residuals, action_table_residuals, b0_identity_residuals, gamma_delta,
    left_ideal_basis, weight_filter_residuals, IdempotentSet, Residual,
};
use crate::pbw::{Element, Uq};
use crate::repr::{check_relations, projective_module, simple_module};
use crate::sign::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            _ => Err(param(format!("level must be fast or full, got {s:?}"))),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Fast => "fast",
            Level::Full => "full",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub p: u32,
    pub level: Level,
    pub checks: Vec<Check>,
    /// Block SLF dimensions `B_0, …, B_p`.
    pub slf_blocks: Vec<usize>,
    pub slf_total: usize,
    /// Brute-force `dim U/[U, U]`, present at the full level.
    pub slf_full_algebra: Option<usize>,
    /// Observed `dim Q_s` (reported, not asserted), present at the full level.
    pub block_dimensions: Option<Vec<usize>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p,
            "level": self.level,
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "id": c.id,
                "status": if c.pass { "pass" } else { "fail" },
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "slf_blocks": self.slf_blocks,
            "slf_total": self.slf_total,
            "slf_full_algebra": self.slf_full_algebra,
            "block_dimensions": self.block_dimensions,
            "passed": self.checks.len() - self.failed(),
            "failed": self.failed(),
        })
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{status} {}", c.id)?;
            } else {
                writeln!(f, "{status} {}  ({})", c.id, c.detail)?;
            }
        }
        let blocks: Vec<String> = self.slf_blocks.iter().map(|d| d.to_string()).collect();
        writeln!(f, "slf_blocks = [{}]", blocks.join(", "))?;
        writeln!(f, "slf_total = {}", self.slf_total)?;
        if let Some(n) = self.slf_full_algebra {
            writeln!(f, "slf_full_algebra = {n}")?;
        }
        if let Some(d) = &self.block_dimensions {
            let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            writeln!(f, "block_dimensions = [{}]", d.join(", "))?;
        }
        writeln!(
            f,
            "p = {}, level = {}: {} checks, {} passed, {} failed",
            self.p,
            self.level,
            self.checks.len(),
            self.checks.len() - self.failed(),
            self.failed()
        )
    }
}

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { id: id.into(), pass, detail: detail.into() });
    }

    /// Passes when every residual vanishes; otherwise names the first one that does not.
    fn residuals(&mut self, id: impl Into<String>, rs: &[Residual]) {
        match rs.iter().find(|(_, r)| !r.is_zero()) {
            None => self.push(id, true, format!("{} identities", rs.len())),
            Some((label, _)) => self.push(id, false, format!("{label} has a nonzero residual")),
        }
    }

    fn equal(&mut self, id: impl Into<String>, got: &Element, want: &Element) {
        let pass = got == want;
        self.push(id, pass, if pass { String::new() } else { "elements differ".into() });
    }

    fn zero(&mut self, id: impl Into<String>, x: &Element) {
        let pass = x.is_zero();
        self.push(id, pass, if pass { String::new() } else { format!("residual {x}") });
    }
}

fn relation_checks(c: &mut Collector, uq: &Uq) -> Result<()> {
    const IDS: [&str; 6] = ["E_nilpotent", "F_nilpotent", "K_order", "KEK", "KFK", "EF_commutator"];
    for (id, (name, r)) in IDS.iter().zip(uq.defining_relation_residuals()?) {
        let pass = r.is_zero();
        c.push(format!("relations.{id}"), pass, if pass { name.to_string() } else { format!("{name}: residual {r}") });
    }
    const POWER_IDS: [&str; 4] = ["E_Fm.left", "E_Fm.right", "Em_F.left", "Em_F.right"];
    for m in 1..uq.p() {
        for (id, r) in POWER_IDS.iter().zip(uq.power_commutator_residuals(m)?) {
            c.zero(format!("power_commutator.m{m}.{id}"), &r);
        }
    }
    Ok(())
}

fn module_checks(c: &mut Collector, p: u32) -> Result<()> {
    for s in 1..=p {
        for sign in Sign::BOTH {
            let r = simple_module(s, sign, p)?;
            match check_relations(&r)? {
                Ok(()) => c.push(format!("module.simple.s{s}.{}", sign.word()), true, ""),
                Err(v) => c.push(format!("module.simple.s{s}.{}", sign.word()), false, v.to_string()),
            }
            if s < p {
                let r = projective_module(s, sign, p)?;
                match check_relations(&r)? {
                    Ok(()) => c.push(format!("module.projective.s{s}.{}", sign.word()), true, ""),
                    Err(v) => {
                        c.push(format!("module.projective.s{s}.{}", sign.word()), false, v.to_string())
                    }
                }
            }
        }
    }
    Ok(())
}

fn idempotent_checks(c: &mut Collector, uq: &Uq, set: &IdempotentSet) -> Result<()> {
    let p = set.p;
    for ((s, sign), e) in &set.elements {
        let tag = format!("s{s}.{}", sign.word());
        c.equal(format!("idempotent.{tag}"), &uq.mul(e, e)?, e);
        let dim = left_ideal_basis(e)?.len();
        let want = if *s < p { 2 * p } else { p } as usize;
        c.push(format!("left_ideal_dim.{tag}"), dim == want, format!("dim {dim}, expected {want}"));
        c.residuals(format!("a_vectors.{tag}"), &a_vector_residuals(*s, *sign, p)?);
        if *s < p {
            c.residuals(format!("b0_identities.{tag}"), &b0_identity_residuals(*s, *sign, p)?);
            c.residuals(format!("action_table.{tag}"), &action_table_residuals(*s, *sign, p)?);
        }
    }
    for s in 1..p {
        c.residuals(format!("weight_filter.s{s}"), &weight_filter_residuals(s, p)?);
        let ep = set.get(s, Sign::Plus)?;
        let em = set.get(p - s, Sign::Minus)?;
        let (left, right) = (uq.mul(ep, em)?, uq.mul(em, ep)?);
        let pass = left.is_zero() && right.is_zero();
        c.push(format!("orthogonal.s{s}"), pass, if pass { "" } else { "nonzero product" });
    }
    Ok(())
}

fn casimir_checks(c: &mut Collector, uq: &Uq, set: &IdempotentSet) -> Result<()> {
    let p = set.p;
    let cas = casimir(p)?;
    c.equal("casimir.two_forms", &cas, &casimir_fe_form(p)?);
    let central = [uq.e(), uq.f(), uq.k()]
        .iter()
        .map(|g| uq.commutator(&cas, g))
        .collect::<Result<Vec<_>>>()?;
    c.push("casimir.central", central.iter().all(Element::is_zero), "");
    let minpoly = minimal_polynomial(&cas)?;
    let expected = expected_casimir_polynomial(p)?;
    c.push(
        "casimir.minimal_polynomial",
        minpoly == expected,
        format!("degree {}", minpoly.degree().unwrap_or(0)),
    );
    let distinct = (0..=p as i64).all(|i| (0..i).all(|j| beta(p, i).ok() != beta(p, j).ok()));
    c.push("casimir.distinct_eigenvalues", distinct, "");

    for s in 1..=p {
        for sign in Sign::BOTH {
            let scalar = beta(p, s as i64)?.scale_int(sign.unit());
            let a0 = a_vector(s, 0, sign, p)?;
            c.equal(
                format!("casimir.on_a0.s{s}.{}", sign.word()),
                &uq.mul(&cas, &a0)?,
                &a0.scale(&scalar),
            );
            if s < p {
                let e = set.get(s, sign)?;
                let ginv = gamma_delta(s, sign, p)?.gamma.inv()?;
                c.equal(
                    format!("casimir.on_idempotent.s{s}.{}", sign.word()),
                    &uq.mul(&cas, e)?,
                    &(&a0.scale(&ginv) + &e.scale(&scalar)),
                );
            }
        }
    }

    let bp = block_projectors(p)?;
    let sum = bp.projectors.iter().fold(uq.zero(), |a, x| &a + x);
    c.equal("blocks.partition_of_unity", &sum, &uq.one());
    let mut orth = true;
    let mut central = true;
    for (s, ps) in bp.projectors.iter().enumerate() {
        for (t, pt) in bp.projectors.iter().enumerate() {
            let prod = uq.mul(ps, pt)?;
            orth &= if s == t { &prod == ps } else { prod.is_zero() };
        }
        for g in [uq.e(), uq.f(), uq.k()] {
            central &= uq.commutator(ps, &g)?.is_zero();
        }
    }
    c.push("blocks.orthogonal_idempotents", orth, "");
    c.push("blocks.central", central, "");
    let mut placed = vec![(p, Sign::Plus, p), (p, Sign::Minus, 0)];
    for s in 1..p {
        placed.push((s, Sign::Plus, s));
        placed.push((p - s, Sign::Minus, s));
    }
    for (s, sign, block) in placed {
        let e = set.get(s, sign)?;
        let inside = &uq.mul(bp.get(block)?, e)? == e;
        c.push(format!("blocks.contains.Q{block}.e{s}.{}", sign.word()), inside, "");
    }
    Ok(())
}

fn basic_checks(c: &mut Collector, set: &IdempotentSet) -> Result<Vec<usize>> {
    let p = set.p;
    let e = basic_idempotent_from(set);
    c.push("basic.idempotent", e.is_ok(), e.err().map(|x| x.to_string()).unwrap_or_default());
    let expected_mult = expected_mult_table(p)?;
    let expected_comm = expected_commutator_table(p)?;
    let ep_block = slf_dimension(std::slice::from_ref(set.get(p, Sign::Plus)?))?;
    let em_block = slf_dimension(std::slice::from_ref(set.get(p, Sign::Minus)?))?;
    let mut blocks = vec![em_block];
    for s in 1..p {
        let b = BasicBasis::from_set(set, s)?;
        c.residuals(format!("basic.annihilation.s{s}"), &b.annihilation_residuals()?);
        let mt = mult_table_of(&b)?;
        for (i, row) in mt.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let want = &expected_mult.cells[i][j];
                c.push(
                    format!("mult_table.s{s}.{}.{}", IDS[i], IDS[j]),
                    cell == want,
                    if cell == want { String::new() } else { format!("got {cell}, expected {want}") },
                );
            }
        }
        let ct = commutator_table_of(&b)?;
        for (a, row) in ct.cells.iter().enumerate() {
            for (bi, cell) in row.iter().enumerate() {
                let want = &expected_comm.cells[a][bi];
                c.push(
                    format!("commutator_table.s{s}.{}.{}", IDS[ct.rows[a]], IDS[ct.rows[bi]]),
                    cell == want,
                    if cell == want { String::new() } else { format!("got {cell}, expected {want}") },
                );
            }
        }
        let full = full_commutator_table_of(&b)?;
        let a_central = full.cells.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, cell)| !(IDS[i].starts_with('A') || IDS[j].starts_with('A')) || cell.is_zero())
        });
        c.push(format!("commutator_table.s{s}.A0_central"), a_central, "");
        let d = slf_dimension(&b.elements)?;
        c.push(format!("slf.block.s{s}"), d == 3, format!("dim {d}, expected 3"));
        blocks.push(d);
    }
    blocks.push(ep_block);
    c.push("slf.block.s0", em_block == 1, format!("dim {em_block}, expected 1"));
    c.push(format!("slf.block.s{p}"), ep_block == 1, format!("dim {ep_block}, expected 1"));
    let total: usize = blocks.iter().sum();
    let want = 3 * p as usize - 1;
    c.push("slf.total", total == want, format!("{total}, expected {want}"));
    Ok(blocks)
}

/// Runs the suite. `fast` covers everything block by block; `full` adds the
/// brute-force SLF dimension of the whole algebra and its agreement with the
/// block sum, the dimension of `eUe`, and observed block dimensions.
pub fn run_verify(p: u32, level: Level) -> Result<VerifyReport> {
    if p < 2 {
        return Err(param(format!("p must be at least 2, got {p}")));
    }
    let start = Instant::now();
    let uq = Uq::shared(p)?;
    let mut c = Collector { checks: Vec::new() };
    relation_checks(&mut c, &uq)?;
    module_checks(&mut c, p)?;
    let set = IdempotentSet::new(p)?;
    idempotent_checks(&mut c, &uq, &set)?;
    casimir_checks(&mut c, &uq, &set)?;
    let slf_blocks = basic_checks(&mut c, &set)?;
    let slf_total = slf_blocks.iter().sum();

    let (mut full_dim, mut block_dims) = (None, None);
    if level == Level::Full {
        let brute = slf_full_algebra(p)?;
        c.push(
            "slf.full_algebra_matches_blocks",
            brute == slf_total,
            format!("full algebra {brute}, block sum {slf_total}"),
        );
        full_dim = Some(brute);

        let e = basic_idempotent_from(&set)?;
        let one = crate::cyclotomic::CycNum::one(uq.field());
        let mut acc = crate::linalg::RankAccumulator::new(uq.dim());
        for m in uq.monomials() {
            let x = uq.product(&[&e, &uq.term(m, one.clone()), &e])?;
            if !x.is_zero() {
                acc.insert(uq.element_to_row(&x)?)?;
            }
        }
        let want = 8 * (p as usize - 1) + 2;
        c.push("basic.dimension", acc.rank() == want, format!("dim {}, expected {want}", acc.rank()));

        let bp = block_projectors(p)?;
        let dims = (0..=p).map(|s| bp.dimension(s)).collect::<Result<Vec<_>>>()?;
        let total: usize = dims.iter().sum();
        c.push("blocks.dimensions_sum", total == uq.dim(), format!("{total}, expected {}", uq.dim()));
        block_dims = Some(dims);
    }

    Ok(VerifyReport {
        p,
        level,
        checks: c.checks,
        slf_blocks,
        slf_total,
        slf_full_algebra: full_dim,
        block_dimensions: block_dims,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_full_passes() {
        let r = run_verify(2, Level::Full).unwrap();
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.pass).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert_eq!(r.slf_total, 5);
        assert_eq!(r.slf_full_algebra, Some(5));
        let text = r.to_string();
        assert!(text.contains("PASS mult_table.s1.X0p.Y0m"));
        assert!(text.ends_with("0 failed\n"));
    }

    #[test]
    fn rejects_small_p() {
        assert!(run_verify(1, Level::Fast).is_err());
        assert!("medium".parse::<Level>().is_err());
    }
}
