use icecount::{enumerate_states, BoundarySpec, Partition};
use serde_json::json;

use crate::error::CliError;
use crate::report::RunReport;
use crate::Ctx;

pub fn run(ctx: &Ctx, lambda: &Partition, index: u64) -> Result<RunReport, CliError> {
    let spec = BoundarySpec::from_partition(lambda);
    let mut report = RunReport::new("render");
    report.input("partition", lambda.to_string());
    report.input("index", index);

    let mut seen = 0u64;
    let mut found = None;
    for item in enumerate_states(&spec, &ctx.budget) {
        let state = item?;
        if seen == index {
            found = Some(state);
            break;
        }
        seen += 1;
    }
    let Some(state) = found else {
        let range = match seen {
            0 => "there are no states".to_string(),
            1 => "only index 0 exists".to_string(),
            k => format!("only {k} states exist (indices 0-{})", k - 1),
        };
        return Err(CliError::Usage(format!(
            "index {index} out of range: {range}"
        )));
    };

    report.text("ascii", state.render_ascii());
    let state_json = serde_json::to_value(state.to_json()).expect("state serializes");
    report.value("state", "state", state_json);
    if spec.is_domain_wall() {
        let asm = state.to_asm()?;
        let rows: Vec<String> = asm
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| format!("{v:>2}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        report.text("asm", rows.join("\n"));
    }
    report.check("ice rule holds", json!(true), json!(state.validate()?));
    Ok(report)
}
