use amenability_core::constants::report::CSV_COLUMNS;
use amenability_core::constants::{rational_decimal, HrSequence, StandardPolynomialReport};
use amenability_core::{Report, Result, TheoremReport};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct ScanRow {
    pub name: String,
    pub result: Result<Report>,
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => pretty(&r.to_json()),
        Format::Csv => csv_string(&CSV_COLUMNS, &[r.csv_fields()]),
        Format::Text => r.to_text(),
    }
}

const CHECK_COLUMNS: [&str; 6] = ["theorem", "group", "check", "outcome", "expected", "actual"];

fn check_rows(t: &TheoremReport) -> Vec<Vec<String>> {
    t.checks
        .iter()
        .map(|c| {
            vec![
                t.theorem.clone(),
                t.group.clone(),
                c.name.clone(),
                c.outcome.to_string(),
                c.expected.clone(),
                c.actual.clone(),
            ]
        })
        .collect()
}

pub fn theorem(t: &TheoremReport, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "theorem": t.theorem,
            "group": t.group,
            "outcome": t.outcome().to_string(),
            "checks": t.checks.iter().map(|c| json!({
                "check": c.name,
                "outcome": c.outcome.to_string(),
                "expected": c.expected,
                "actual": c.actual,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_string(&CHECK_COLUMNS, &check_rows(t)),
        Format::Text => {
            let width = t.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut s = format!("{} on {}: {}\n", t.theorem, t.group, t.outcome());
            for c in &t.checks {
                s.push_str(&format!(
                    "  {:<4}  {:<width$}  expected {}  actual {}\n",
                    c.outcome.to_string(),
                    c.name,
                    c.expected,
                    c.actual
                ));
            }
            s
        }
    }
}

fn scan_summary(rows: &[ScanRow]) -> String {
    let failed = rows.iter().filter(|r| r.result.is_err()).count();
    let non_abelian_min = rows
        .iter()
        .filter_map(|r| r.result.as_ref().ok())
        .filter(|r| !r.flags.abelian)
        .all(|r| r.am * 2 >= amenability_core::Rational::from_integer(3));
    format!(
        "rows={} reported={} failed={}; AD = AM and 1 <= AD <= improved <= maxdeg on every reported row; \
         non-abelian rows have AM >= 3/2: {}",
        rows.len(),
        rows.len() - failed,
        failed,
        if non_abelian_min { "yes" } else { "NO" }
    )
}

pub fn scan(rows: &[ScanRow], format: Format) -> String {
    let summary = scan_summary(rows);
    match format {
        Format::Json => pretty(&json!({
            "rows": rows.iter().map(|r| match &r.result {
                Ok(rep) => rep.to_json(),
                Err(e) => json!({"group": r.name, "error": e.to_string()}),
            }).collect::<Vec<_>>(),
            "summary": summary,
        })),
        Format::Csv => {
            let mut header = CSV_COLUMNS.to_vec();
            header.push("error");
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| match &r.result {
                    Ok(rep) => {
                        let mut f = rep.csv_fields();
                        f.push(String::new());
                        f
                    }
                    Err(e) => {
                        let mut f = vec![String::new(); CSV_COLUMNS.len()];
                        f[0] = r.name.clone();
                        f.push(e.to_string());
                        f
                    }
                })
                .collect();
            format!("{}# {summary}\n", csv_string(&header, &body))
        }
        Format::Text => {
            let mut s = format!("{:<20} {:>6} {:>8} {:>10} {:>7} {}\n", "group", "order", "am", "~am", "maxdeg", "spectrum");
            for r in rows {
                match &r.result {
                    Ok(rep) => s.push_str(&format!(
                        "{:<20} {:>6} {:>8} {:>10} {:>7} {}\n",
                        rep.group,
                        rep.order,
                        rep.am.to_string(),
                        rational_decimal(&rep.am),
                        rep.maxdeg,
                        rep.spectrum
                    )),
                    Err(e) => s.push_str(&format!("{:<20} error: {e}\n", r.name)),
                }
            }
            s.push_str(&summary);
            s.push('\n');
            s
        }
    }
}

pub fn hr_sequence(seq: &HrSequence<i128>, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "p": seq.p,
            "limit": seq.limit.to_string(),
            "reports": seq.reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "constant": seq.constant,
            "spectra_match": seq.spectra_match,
            "summary": seq.summary,
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = seq.reports.iter().map(|r| r.csv_fields()).collect();
            format!("{}# {}\n", csv_string(&CSV_COLUMNS, &rows), seq.summary)
        }
        Format::Text => {
            let mut s = String::new();
            for r in &seq.reports {
                s.push_str(&format!("{:<10} order {:>8}  AM {} (~{})\n", r.group, r.order, r.am, rational_decimal(&r.am)));
            }
            s.push_str(&seq.summary);
            s.push('\n');
            s
        }
    }
}

fn matrix_json(m: &[Vec<i64>]) -> Value {
    json!(m)
}

pub fn al_check(r: &StandardPolynomialReport, format: Format) -> String {
    let verdict = if r.expected_zero {
        format!("P_{} vanished on {}/{} tuples of {}x{} matrices", 2 * r.n, r.zero_trials, r.trials, r.d, r.d)
    } else if r.witness.is_some() {
        format!("P_{} is not an identity on {}x{} matrices (witness found)", 2 * r.n, r.d, r.d)
    } else {
        format!("no nonzero witness for P_{} on {}x{} matrices in {} trials", 2 * r.n, r.d, r.d, r.trials)
    };
    match format {
        Format::Json => pretty(&json!({
            "n": r.n,
            "d": r.d,
            "trials": r.trials,
            "expected_zero": r.expected_zero,
            "zero_trials": r.zero_trials,
            "passed": r.passed(),
            "witness": r.witness.as_ref().map(|(xs, v)| json!({
                "matrices": xs.iter().map(|x| matrix_json(x)).collect::<Vec<_>>(),
                "value": matrix_json(v),
            })),
            "summary": verdict,
        })),
        Format::Csv => csv_string(
            &["n", "d", "trials", "expected_zero", "zero_trials", "passed"],
            &[vec![
                r.n.to_string(),
                r.d.to_string(),
                r.trials.to_string(),
                r.expected_zero.to_string(),
                r.zero_trials.to_string(),
                r.passed().to_string(),
            ]],
        ),
        Format::Text => format!("{verdict}\n"),
    }
}
