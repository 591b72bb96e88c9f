use icecount::exactalg::{alambda_inter_value, lemma13_lhs, lemma13_rhs, rm_ratfunc, rm_table};
use icecount::formulas::{
    asm_total, decompose_count, hook_sum_m, hook_sum_refined, l_count, path_count, refined_asm,
    refined_vsasm, staircase_sum, vsasm_total,
};
use icecount::{count, BoundarySpec, Count, Engine, Partition};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{big, RunReport};
use crate::{Bounds, Ctx, Suite};

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Engines => "engines",
        Suite::Pathcounts => "pathcounts",
        Suite::Lshape => "lshape",
        Suite::Decomposition => "decomposition",
        Suite::Hooks => "hooks",
        Suite::Staircase => "staircase",
        Suite::RefinedAsm => "refined-asm",
        Suite::RefinedVsasm => "refined-vsasm",
        Suite::Lemma13 => "lemma13",
        Suite::Shift => "shift",
        Suite::Table1 => "table1",
    }
}

/// Running state of a sweep: the report plus the context for counting.
struct Sweep<'a> {
    ctx: &'a Ctx,
    report: RunReport,
}

impl Sweep<'_> {
    fn bound(&mut self, name: &str, given: Option<u32>, default: u32) -> u32 {
        let v = given.unwrap_or(default);
        self.report.input(name, v);
        v
    }

    /// Counts `spec`, turning budget and capacity failures into a warning.
    fn count(
        &mut self,
        label: &str,
        spec: &BoundarySpec,
        engine: Engine,
    ) -> Result<Option<Count>, CliError> {
        match count(spec, engine, &self.ctx.config()) {
            Ok(c) => Ok(Some(c)),
            Err(e) if e.is_resource_limit() => {
                self.report.warn(format!("skipped {label}: {e}"));
                Ok(None)
            }
            Err(e) => Err(e.into()),
        }
    }

    fn preferred(&mut self, label: &str, spec: &BoundarySpec) -> Result<Option<Count>, CliError> {
        self.count(label, spec, Engine::preferred_for(spec))
    }

    fn partition(&mut self, lambda: &Partition, engine: Engine) -> Result<Option<Count>, CliError> {
        let spec = BoundarySpec::from_partition(lambda);
        self.count(&format!("λ = {lambda}"), &spec, engine)
    }
}

fn counts(values: &[&Count]) -> Value {
    Value::Array(values.iter().map(|c| big(c)).collect())
}

fn rational(q: &BigRational) -> Value {
    if q.is_integer() {
        crate::report::big_int(&q.to_integer())
    } else {
        json!(q.to_string())
    }
}

fn grid(n_min: usize, n_max: u32, l_max: u32) -> Vec<Partition> {
    (n_min..=n_max as usize)
        .flat_map(|n| Partition::all_with(n, l_max))
        .collect()
}

pub fn run(ctx: &Ctx, suite: Suite, bounds: &Bounds) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("verify");
    report.input("suite", suite_name(suite));
    let mut s = Sweep { ctx, report };
    let b = bounds;
    match suite {
        Suite::Engines => engines(&mut s, b)?,
        Suite::Pathcounts => pathcounts(&mut s, b)?,
        Suite::Lshape => lshape(&mut s, b)?,
        Suite::Decomposition => decomposition(&mut s, b)?,
        Suite::Hooks => hooks(&mut s, b)?,
        Suite::Staircase => staircase(&mut s, b)?,
        Suite::RefinedAsm => refined_asm_suite(&mut s, b)?,
        Suite::RefinedVsasm => refined_vsasm_suite(&mut s, b)?,
        Suite::Lemma13 => lemma13(&mut s, b)?,
        Suite::Shift => shift(&mut s, b)?,
        Suite::Table1 => table1(&mut s),
    }
    Ok(s.report)
}

fn engines(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let n_max = s.bound("n_max", b.n_max, 4);
    let l_max = s.bound("l_max", b.l_max, 4);
    let asm_max = s.bound("formula_n_max", b.formula_n_max, 5);
    let vs_max = s.bound("vsasm_n_max", b.vsasm_n_max, 3);
    for n in 1..=asm_max as usize {
        let spec = BoundarySpec::domain_wall(n)?;
        let label = format!("DWBC n = {n}");
        let bt = s.count(&label, &spec, Engine::Backtrack)?;
        let dp = s.count(&label, &spec, Engine::RowDp)?;
        if let (Some(bt), Some(dp)) = (bt, dp) {
            let a = asm_total(n as u32)?;
            s.report
                .check(label, counts(&[&a, &a]), counts(&[&bt, &dp]));
        }
    }
    for n in 1..=vs_max as usize {
        let spec = BoundarySpec::vsasm(n)?;
        let label = format!("VSASM half lattice n = {n}");
        let bt = s.count(&label, &spec, Engine::Backtrack)?;
        let dp = s.count(&label, &spec, Engine::RowDp)?;
        if let (Some(bt), Some(dp)) = (bt, dp) {
            let v = vsasm_total(n as u32)?;
            s.report
                .check(label, counts(&[&v, &v]), counts(&[&bt, &dp]));
        }
    }
    for lambda in grid(1, n_max, l_max) {
        let bt = s.partition(&lambda, Engine::Backtrack)?;
        let dp = s.partition(&lambda, Engine::RowDp)?;
        if let (Some(bt), Some(dp)) = (bt, dp) {
            s.report.check(format!("λ = {lambda}"), big(&bt), big(&dp));
        }
    }
    Ok(())
}

fn pathcounts(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let r_max = s.bound("r_max", b.r_max, 7);
    let c_max = s.bound("c_max", b.c_max, 7);
    for r in 1..=r_max {
        for c in 1..=c_max {
            let expected = path_count(r, c)?;
            let label = format!("S,T {r}x{c}");
            let sc = s.preferred(&label, &BoundarySpec::s_model(r as usize, c as usize)?)?;
            let tc = s.preferred(&label, &BoundarySpec::t_model(r as usize, c as usize)?)?;
            if let (Some(sc), Some(tc)) = (sc, tc) {
                s.report
                    .check(label, counts(&[&expected, &expected]), counts(&[&sc, &tc]));
            }
        }
    }
    Ok(())
}

fn lshape(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let n_max = s.bound("n_max", b.n_max, 6);
    let m_max = s.bound("m_max", b.m_max, 5);
    for n in 1..=n_max {
        for m in 0..=m_max {
            for j in 1..=n {
                let label = format!("L n = {n}, m = {m}, j = {j}");
                let spec = BoundarySpec::l_shape(n as usize, m as usize, j as usize)?;
                if let Some(c) = s.preferred(&label, &spec)? {
                    s.report.check(label, big(&l_count(m, j)?), big(&c));
                }
            }
        }
    }
    Ok(())
}

fn decomposition(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let n_max = s.bound("n_max", b.n_max, 4);
    let l_max = s.bound("l_max", b.l_max, 4);
    for lambda in grid(2, n_max, l_max) {
        let bt = s.partition(&lambda, Engine::Backtrack)?;
        let dp = s.partition(&lambda, Engine::RowDp)?;
        let dec = match decompose_count(&lambda) {
            Ok(c) => Some(c),
            Err(icecount::formulas::FormulaError::Enumeration(e)) if e.is_resource_limit() => {
                s.report
                    .warn(format!("skipped decomposition of {lambda}: {e}"));
                None
            }
            Err(e) => return Err(e.into()),
        };
        if let (Some(bt), Some(dp), Some(dec)) = (bt, dp, dec) {
            s.report.check(
                format!("λ = {lambda}"),
                counts(&[&bt, &bt]),
                counts(&[&dec, &dp]),
            );
        }
    }
    Ok(())
}

fn hooks(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let n_max = s.bound("n_max", b.n_max, 4);
    let m_max = s.bound("m_max", b.m_max, 5);
    let series = s.bound("series_max", b.series_max, 10);
    for n in 1..=n_max {
        for m in 0..=m_max {
            let lambda = Partition::hook(n as usize, m)?;
            if let Some(e) = s.partition(&lambda, Engine::RowDp)? {
                let (r, k) = (hook_sum_refined(n, m)?, hook_sum_m(n, m)?);
                s.report.check(
                    format!("hook n = {n}, m = {m}"),
                    counts(&[&e, &e]),
                    counts(&[&r, &k]),
                );
            }
        }
    }
    for m in 0..=series {
        let lambda = Partition::hook(2, m)?;
        if let Some(c) = s.partition(&lambda, Engine::RowDp)? {
            s.report.check(
                format!("A_({m},0)(2) = m + 2"),
                json!(m as u64 + 2),
                big(&c),
            );
        }
    }
    Ok(())
}

fn staircase(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let n_max = s.bound("n_max", b.n_max, 3);
    let extra = s.bound("l_max", b.l_max, 4);
    let total_max = s.bound("formula_n_max", b.formula_n_max, 6);
    for n in 1..=n_max {
        for largest in n - 1..=n - 1 + extra {
            let lambda = Partition::staircase(n as usize, largest)?;
            if let Some(e) = s.partition(&lambda, Engine::RowDp)? {
                s.report.check(
                    format!("staircase λ = {lambda}"),
                    big(&e),
                    big(&staircase_sum(n, largest)?),
                );
            }
        }
    }
    for n in 1..=total_max {
        s.report.check(
            format!("staircase n = {n}, λ₁ = n - 1 is A_V(2n+1)"),
            big(&vsasm_total(n)?),
            big(&staircase_sum(n, n - 1)?),
        );
    }
    Ok(())
}

fn refined_asm_suite(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let n_max = s.bound("n_max", b.n_max, 4);
    let sum_max = s.bound("formula_n_max", b.formula_n_max, 8);
    for n in 1..=n_max {
        for j in 1..=n {
            let label = format!("A({n}, {j})");
            // the 1x1 matrix has no lattice below its first row
            let spec = if n == 1 {
                BoundarySpec::domain_wall(1)?
            } else {
                BoundarySpec::refined_asm(n as usize, j as usize)?
            };
            if let Some(e) = s.preferred(&label, &spec)? {
                s.report.check(label, big(&e), big(&refined_asm(n, j)?));
            }
        }
    }
    for n in 1..=sum_max {
        let sum: Count = (1..=n).map(|j| refined_asm(n, j)).sum::<Result<_, _>>()?;
        s.report.check(
            format!("Σ_j A({n}, j) = A({n})"),
            big(&asm_total(n)?),
            big(&sum),
        );
    }
    Ok(())
}

fn refined_vsasm_suite(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let n_max = s.bound("n_max", b.n_max, 3);
    let sym_max = s.bound("formula_n_max", b.formula_n_max, 8);
    for n in 1..=n_max {
        for i in 1..=n {
            let label = format!("A_V({}, {i})", 2 * n + 1);
            let spec = if n == 1 {
                BoundarySpec::vsasm(1)?
            } else {
                BoundarySpec::refined_vsasm(n as usize, i as usize)?
            };
            if let Some(e) = s.preferred(&label, &spec)? {
                s.report.check(label, big(&e), big(&refined_vsasm(n, i)?));
            }
        }
    }
    for n in 1..=sym_max {
        let row: Vec<Count> = (1..=n)
            .map(|i| refined_vsasm(n, i))
            .collect::<Result<_, _>>()?;
        let mirrored: Vec<Count> = row.iter().rev().cloned().collect();
        s.report.check(
            format!("A_V({}, i) = A_V({}, n - i + 1)", 2 * n + 1, 2 * n + 1),
            counts(&row.iter().collect::<Vec<_>>()),
            counts(&mirrored.iter().collect::<Vec<_>>()),
        );
        let sum: Count = row.iter().sum();
        s.report.check(
            format!("Σ_i A_V({}, i) = A_V({})", 2 * n + 1, 2 * n + 1),
            big(&vsasm_total(n)?),
            big(&sum),
        );
    }
    Ok(())
}

fn lemma13(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let m_max = s.bound("m_max", b.m_max, 10);
    let n_max = s.bound("n_max", b.n_max, 10);
    for m in 0..=m_max {
        for n in 1..=n_max {
            let lhs = lemma13_lhs(m, n);
            let rhs = lemma13_rhs(m, n);
            let hook = BigRational::from_integer(hook_sum_refined(n, m)?.into());
            let inter = alambda_inter_value(m, n)?;
            s.report.check(
                format!("m = {m}, n = {n}"),
                json!([rational(&lhs), rational(&hook)]),
                json!([rational(&rhs), rational(&inter)]),
            );
        }
    }
    Ok(())
}

fn shift(s: &mut Sweep, b: &Bounds) -> Result<(), CliError> {
    let n_max = s.bound("n_max", b.n_max, 4);
    let l_max = s.bound("l_max", b.l_max, 3);
    let d_max = s.bound("d_max", b.d_max, 3);
    for lambda in grid(1, n_max, l_max) {
        let Some(base) = s.partition(&lambda, Engine::RowDp)? else {
            continue;
        };
        for d in 1..=d_max {
            let shifted = lambda.shifted(d);
            if let Some(c) = s.partition(&shifted, Engine::RowDp)? {
                s.report
                    .check(format!("λ = {lambda}, d = {d}"), big(&base), big(&c));
            }
        }
    }
    Ok(())
}

fn table1(s: &mut Sweep) {
    // canonical forms are unique, so equal renderings mean equal functions
    for m in 0..=5 {
        let printed = rm_table(m).expect("rows 0..=5 are tabulated");
        s.report.check(
            format!("R_{m}"),
            json!(printed.render("n")),
            json!(rm_ratfunc(m).render("n")),
        );
    }
}
