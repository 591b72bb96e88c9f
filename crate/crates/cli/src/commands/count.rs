use icecount::formulas::{decompose_count, hook_sum_refined, staircase_sum};
use icecount::{count, BoundarySpec, Count, Engine, Partition};

use crate::error::CliError;
use crate::report::RunReport;
use crate::{Ctx, Method};

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Backtrack => "backtrack",
        Method::Rowdp => "rowdp",
        Method::Decompose => "decompose",
        Method::FormulaAuto => "formula-auto",
    }
}

pub fn run(ctx: &Ctx, lambda: &Partition, method: Option<Method>) -> Result<RunReport, CliError> {
    let spec = BoundarySpec::from_partition(lambda);
    let method = method.unwrap_or(match Engine::preferred_for(&spec) {
        Engine::RowDp => Method::Rowdp,
        Engine::Backtrack => Method::Backtrack,
    });
    let mut report = RunReport::new("count");
    report.input("partition", lambda.to_string());
    report.input("n", lambda.len());
    report.input("method", method_name(method));
    report.input("lattice", format!("{}x{}", spec.rows(), spec.cols()));

    let value = match method {
        Method::Backtrack => count(&spec, Engine::Backtrack, &ctx.config())?,
        Method::Rowdp => count(&spec, Engine::RowDp, &ctx.config())?,
        Method::Decompose => decompose_count(lambda)?,
        Method::FormulaAuto => formula_auto(lambda, &mut report)?,
    };
    report.count("A_lambda", &value);
    Ok(report)
}

fn formula_auto(lambda: &Partition, report: &mut RunReport) -> Result<Count, CliError> {
    let n = lambda.len() as u32;
    if let Some(m) = lambda.hook_arm() {
        report.text("shape", format!("hook, m = {m}"));
        return Ok(hook_sum_refined(n, m)?);
    }
    if let Some(largest) = lambda.staircase_largest() {
        report.text(
            "shape",
            format!("staircase, largest part {largest} after shift"),
        );
        return Ok(staircase_sum(n, largest)?);
    }
    Err(CliError::Usage(format!(
        "no closed form for {lambda}: not a hook (m+d, d, ..., d) and not a staircase \
         (l+d, n-2+d, ..., 1+d, d) with l >= n-1"
    )))
}
