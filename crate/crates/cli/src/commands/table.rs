use icecount::exactalg::{rm_ratfunc, Poly, RatFunc};
use icecount::formulas::{refined_asm, refined_vsasm};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{big, RunReport};
use crate::{Format, TableKind};

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    json_rows: Vec<Value>,
}

impl Table {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => {
                let mut out = format!("| {} |\n", self.header.join(" | "));
                out += &format!("|{}\n", "---|".repeat(self.header.len()));
                for row in &self.rows {
                    out += &format!("| {} |\n", row.join(" | "));
                }
                out
            }
            Format::Csv => {
                let quote = |s: &String| {
                    if s.contains([',', '"']) {
                        format!("\"{}\"", s.replace('"', "\"\""))
                    } else {
                        s.clone()
                    }
                };
                let line = |r: &[String]| r.iter().map(quote).collect::<Vec<_>>().join(",");
                let mut out = line(&self.header) + "\n";
                for row in &self.rows {
                    out += &(line(row) + "\n");
                }
                out
            }
            Format::Json => {
                serde_json::to_string_pretty(&self.json_rows).expect("rows serialize") + "\n"
            }
            Format::Latex => {
                let mut out = format!("\\begin{{tabular}}{{{}}}\n", "c".repeat(self.header.len()));
                out += &format!("{} \\\\\n\\hline\n", self.header.join(" & "));
                for row in &self.rows {
                    out += &format!("{} \\\\\n", row.join(" & "));
                }
                out + "\\end{tabular}\n"
            }
        }
    }
}

fn latex_ratfunc(r: &RatFunc) -> String {
    if r.den() == &Poly::one() {
        return format!("${}$", r.num().render("n").replace('*', ""));
    }
    format!(
        "$\\frac{{{}}}{{{}}}$",
        r.num().render("n").replace('*', ""),
        r.den().render("n").replace('*', "")
    )
}

pub fn run(
    kind: TableKind,
    m_max: Option<u32>,
    n_max: Option<u32>,
    format: Format,
) -> Result<(RunReport, String), CliError> {
    let mut report = RunReport::new("table");
    let table = match kind {
        TableKind::Rm => {
            let m_max = m_max.unwrap_or(5);
            report.input("kind", "rm");
            report.input("m_max", m_max);
            let mut t = Table {
                header: vec!["m".into(), "R_m(n)".into()],
                rows: Vec::new(),
                json_rows: Vec::new(),
            };
            for m in 0..=m_max {
                let r = rm_ratfunc(m);
                report.ratfunc(&format!("R_{m}"), &r, "n");
                let shown = if format == Format::Latex {
                    latex_ratfunc(&r)
                } else {
                    r.render("n")
                };
                t.rows.push(vec![m.to_string(), shown]);
                let mut row = r.to_json();
                row["m"] = json!(m);
                row["text"] = json!(r.render("n"));
                t.json_rows.push(row);
            }
            t
        }
        TableKind::RefinedAsm | TableKind::RefinedVsasm => {
            let asm = kind == TableKind::RefinedAsm;
            let n_max = n_max.unwrap_or(if asm { 8 } else { 6 });
            report.input("kind", if asm { "refined-asm" } else { "refined-vsasm" });
            report.input("n_max", n_max);
            let mut t = Table {
                header: vec!["n".into()],
                rows: Vec::new(),
                json_rows: Vec::new(),
            };
            t.header.extend((1..=n_max).map(|j| j.to_string()));
            for n in 1..=n_max {
                let mut row = vec![n.to_string()];
                let mut values = Vec::new();
                for j in 1..=n {
                    let v = if asm {
                        refined_asm(n, j)?
                    } else {
                        refined_vsasm(n, j)?
                    };
                    row.push(v.to_string());
                    values.push(big(&v));
                }
                row.resize(n_max as usize + 1, String::new());
                t.rows.push(row);
                report.value(&format!("n = {n}"), "counts", Value::Array(values.clone()));
                t.json_rows.push(json!({ "n": n, "values": values }));
            }
            t
        }
    };
    report.input("format", format!("{format:?}").to_lowercase());
    let text = table.render(format);
    Ok((report, text))
}
