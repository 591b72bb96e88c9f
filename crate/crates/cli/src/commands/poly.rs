use icecount::exactalg::a_lambda_poly;
use icecount::{count, BoundarySpec, Engine, Partition};
use serde_json::json;

use crate::error::CliError;
use crate::report::{big, big_int, RunReport};
use crate::Ctx;

fn parse_tail(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("invalid part `{p}` in tail `{s}`")))
        })
        .collect()
}

pub fn run(ctx: &Ctx, tail: &str, n: usize) -> Result<RunReport, CliError> {
    let tail = parse_tail(tail)?;
    let mut report = RunReport::new("poly");
    report.input("tail", json!(tail));
    report.input("n", n);
    let p = a_lambda_poly(&tail, n)?;
    report.poly("A_lambda", &p, "λ₁");
    report.check("degree", json!(n - 1), json!(p.degree()));

    // the construction never evaluates counts, so every λ₁ is out of sample;
    // check the first n + 2 values from λ₂ upward
    let start = tail[0];
    for largest in start..start + n as u32 + 2 {
        let mut parts = vec![largest];
        parts.extend_from_slice(&tail);
        let lambda = Partition::new(parts)?;
        let spec = BoundarySpec::from_partition(&lambda);
        let counted = count(&spec, Engine::preferred_for(&spec), &ctx.config())?;
        let predicted = p.eval_int(largest as i64);
        let predicted = if predicted.is_integer() {
            big_int(&predicted.to_integer())
        } else {
            json!(predicted.to_string())
        };
        report.check(format!("λ₁ = {largest}"), big(&counted), predicted);
    }
    Ok(report)
}
