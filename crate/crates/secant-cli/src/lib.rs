//! Table construction, serialization and report rendering for the `secant`
//! binary.
//!
//! Exact values are serialized as decimal strings everywhere: CSV cells and
//! JSON values alike. JSON numbers would silently lose precision at these
//! magnitudes. Rationals render as `p/q` with `/q` omitted for integers.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use secant::central::{t2_triangle, t_triangle, stirling2_triangle};
use secant::euler::{euler_upto, EulerMethod};
use secant::exact::{fmt_rat, Int, Rat, Triangle};
use secant::gcoeff::{GTable, SternTable};
use secant::gen_euler::{gen_euler_upto, GenEulerMethod};
use secant::verify::{self, VerificationReport};

/// Errors carrying the process exit code contract:
/// 1 verification/consistency failure, 2 usage, 3 I/O.
#[derive(Debug)]
pub enum CliError {
    Failure(String),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Failure(m) | CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

/// An exact table ready for emission.
pub struct Table {
    pub family: &'static str,
    pub params: Vec<(String, String)>,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<String>>,
}

fn sequence_rows(values: impl IntoIterator<Item = (usize, Int)>) -> Vec<Vec<String>> {
    values
        .into_iter()
        .map(|(n, v)| vec![n.to_string(), v.to_string()])
        .collect()
}

fn triangle_rows_rat(t: &Triangle<Rat>) -> Vec<Vec<String>> {
    t.iter()
        .map(|(n, k, v)| vec![n.to_string(), k.to_string(), fmt_rat(v)])
        .collect()
}

fn triangle_rows_int(t: &Triangle<Int>) -> Vec<Vec<String>> {
    t.iter()
        .map(|(n, k, v)| vec![n.to_string(), k.to_string(), v.to_string()])
        .collect()
}

/// The signed Euler-number sequence table for even indices `<= max`.
pub fn euler_table(method: EulerMethod, max: usize) -> Table {
    let rows = sequence_rows(
        euler_upto(method, max)
            .into_iter()
            .map(|v| (v.index, v.signed)),
    );
    Table {
        family: "euler",
        params: vec![
            ("max".into(), max.to_string()),
            ("method".into(), method.name().into()),
        ],
        columns: &["n", "value"],
        rows,
    }
}

/// The generalized Euler-number sequence of one order, even indices `<= max`.
pub fn gen_euler_table(method: GenEulerMethod, order: usize, max: usize) -> Result<Table, CliError> {
    if order == 0 {
        return Err(CliError::Usage("gen-euler needs --order >= 1".into()));
    }
    if method == GenEulerMethod::OddOrderG && order % 2 == 0 {
        return Err(CliError::Usage(format!(
            "method `reln` exists only for odd order, got {order}"
        )));
    }
    let rows = sequence_rows(
        gen_euler_upto(method, order, max)
            .into_iter()
            .map(|v| (v.index, v.value)),
    );
    Ok(Table {
        family: "gen-euler",
        params: vec![
            ("max".into(), max.to_string()),
            ("method".into(), method.name().into()),
            ("order".into(), order.to_string()),
        ],
        columns: &["n", "value"],
        rows,
    })
}

/// One of the triangle families, materialized to the requested row count.
pub fn triangle_table(family: &str, rows: usize) -> Result<Table, CliError> {
    let params = vec![("rows".into(), rows.to_string())];
    let (family, emitted): (&'static str, Vec<Vec<String>>) = match family {
        "cfn-first" => ("cfn-first", triangle_rows_rat(&t_triangle(rows))),
        "cfn-second" => ("cfn-second", triangle_rows_rat(&t2_triangle(rows))),
        "gcoeff" => ("gcoeff", triangle_rows_int(GTable::build(rows).triangle())),
        "stern" => ("stern", triangle_rows_int(SternTable::build(rows).triangle())),
        "stirling2" => ("stirling2", triangle_rows_int(&stirling2_triangle(rows))),
        other => return Err(CliError::Usage(format!("unknown table family `{other}`"))),
    };
    Ok(Table {
        family,
        params,
        columns: &["n", "k", "value"],
        rows: emitted,
    })
}

/// RFC 4180-style CSV: header row, LF line endings, no quoting needed since
/// cells are decimal strings.
pub fn to_csv(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// JSON with top-level fields `family`, `params`, `rows`; all values are
/// decimal strings.
pub fn to_json(table: &Table) -> String {
    let params: serde_json::Map<String, serde_json::Value> = table
        .params
        .iter()
        .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
        .collect();
    let rows: Vec<serde_json::Value> = table
        .rows
        .iter()
        .map(|row| {
            serde_json::Value::Array(
                row.iter()
                    .map(|cell| serde_json::Value::String(cell.clone()))
                    .collect(),
            )
        })
        .collect();
    let doc = serde_json::json!({
        "family": table.family,
        "params": params,
        "rows": rows,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("table serialization");
    s.push('\n');
    s
}

/// Parse CSV produced by [`to_csv`] back into header and rows.
pub fn parse_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>), String> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or("empty CSV")?
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect();
    Ok((header, rows))
}

/// Outcome of a `verify` invocation.
pub struct VerifyRun {
    pub reports: Vec<VerificationReport>,
}

impl VerifyRun {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

/// Run the requested identity suites. `suite` is `all` or a comma-separated
/// list of identity ids.
pub fn run_verify(suite: &str, max: Option<usize>) -> Result<VerifyRun, CliError> {
    let ids: Vec<&str> = if suite == "all" {
        verify::SUITES.iter().map(|s| s.id).collect()
    } else {
        suite.split(',').map(str::trim).collect()
    };
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        match verify::run(id, max) {
            Some(report) => reports.push(report),
            None => return Err(CliError::Usage(format!("unknown identity id `{id}`"))),
        }
    }
    Ok(VerifyRun { reports })
}

/// Human-readable verification report: one line per identity.
pub fn verify_text(run: &VerifyRun) -> String {
    let mut out = String::new();
    for r in &run.reports {
        match r.counterexample() {
            None => {
                let _ = writeln!(out, "{} [{}]: PASS", r.identity(), r.param_range());
            }
            Some(cx) => {
                let _ = writeln!(
                    out,
                    "{} [{}]: FAIL at {}: {} != {}",
                    r.identity(),
                    r.param_range(),
                    cx.at,
                    cx.lhs,
                    cx.rhs
                );
            }
        }
    }
    let failed = run.reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        let _ = writeln!(out, "all {} identities verified", run.reports.len());
    } else {
        let _ = writeln!(out, "{failed} of {} identities FAILED", run.reports.len());
    }
    out
}

/// Machine-readable verification report.
pub fn verify_json(run: &VerifyRun) -> String {
    let results: Vec<serde_json::Value> = run
        .reports
        .iter()
        .map(|r| {
            let mut entry = serde_json::json!({
                "identity": r.identity(),
                "range": r.param_range(),
                "passed": r.passed(),
            });
            if let Some(cx) = r.counterexample() {
                entry["counterexample"] = serde_json::json!({
                    "at": cx.at,
                    "lhs": cx.lhs,
                    "rhs": cx.rhs,
                });
            }
            entry
        })
        .collect();
    let doc = serde_json::json!({ "passed": run.passed(), "results": results });
    let mut s = serde_json::to_string_pretty(&doc).expect("report serialization");
    s.push('\n');
    s
}

/// One benchmark row: wall time and peak magnitude for a method's sweep.
pub struct BenchResult {
    pub method: EulerMethod,
    pub max_index: usize,
    pub wall: Duration,
    pub peak_bits: u64,
}

/// Compute Euler numbers up to `max` by every requested method, asserting
/// cross-method equality before reporting; a mismatch makes every timing
/// worthless and is a hard failure.
pub fn run_bench(max: usize, methods: &[EulerMethod]) -> Result<Vec<BenchResult>, CliError> {
    if max < 2 {
        return Err(CliError::Usage("bench needs --max >= 2".into()));
    }
    if methods.is_empty() {
        return Err(CliError::Usage("bench needs at least one method".into()));
    }
    let mut results = Vec::with_capacity(methods.len());
    let mut runs = Vec::with_capacity(methods.len());
    for &method in methods {
        let start = Instant::now();
        let run = euler_upto(method, max);
        let wall = start.elapsed();
        results.push(BenchResult {
            method,
            max_index: max,
            wall,
            peak_bits: secant::euler::peak_bits(&run),
        });
        runs.push(run);
    }
    let (first, rest) = runs.split_first().expect("at least one run");
    for (i, run) in rest.iter().enumerate() {
        for (a, b) in run.iter().zip(first) {
            if a.signed != b.signed {
                return Err(CliError::Failure(format!(
                    "method {} disagrees with {} at index {}: {} != {}",
                    methods[i + 1],
                    methods[0],
                    a.index,
                    a.signed,
                    b.signed
                )));
            }
        }
    }
    Ok(results)
}

/// Timing table, one line per method.
pub fn bench_text(results: &[BenchResult]) -> String {
    let mut out = String::from("method,max_index,wall_ms,peak_bits\n");
    for r in results {
        let _ = writeln!(
            out,
            "{},{},{:.3},{}",
            r.method,
            r.max_index,
            r.wall.as_secs_f64() * 1e3,
            r.peak_bits
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_table_rows() {
        let t = euler_table(EulerMethod::KnuthBuckholtz, 8);
        assert_eq!(t.rows.last().unwrap(), &vec!["8".to_string(), "1385".into()]);
        let csv = to_csv(&t);
        assert!(csv.starts_with("n,value\n0,1\n"));
        assert!(csv.ends_with("8,1385\n"));
    }

    #[test]
    fn triangle_table_rows() {
        let t = triangle_table("cfn-first", 3).unwrap();
        assert!(to_csv(&t).contains("3,1,-1/4\n"));
        let g = triangle_table("gcoeff", 2).unwrap();
        assert!(to_csv(&g).contains("2,1,10\n"));
        assert!(triangle_table("euler", 2).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let t = triangle_table("cfn-second", 6).unwrap();
        let (header, rows) = parse_csv(&to_csv(&t)).unwrap();
        assert_eq!(header, t.columns);
        assert_eq!(rows, t.rows);
    }

    #[test]
    fn json_shape() {
        let t = euler_table(EulerMethod::SeriesOracle, 4);
        let doc: serde_json::Value = serde_json::from_str(&to_json(&t)).unwrap();
        assert_eq!(doc["family"], "euler");
        assert_eq!(doc["params"]["method"], "oracle");
        assert_eq!(doc["rows"][2][1], "5");
        let keys: Vec<&String> = doc.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["family", "params", "rows"]);
    }

    #[test]
    fn gen_euler_validation() {
        assert!(gen_euler_table(GenEulerMethod::OddOrderG, 2, 8).is_err());
        let t = gen_euler_table(GenEulerMethod::OddOrderG, 3, 4).unwrap();
        assert_eq!(t.rows[1], vec!["2".to_string(), "-3".into()]);
    }

    #[test]
    fn verify_runner() {
        let run = run_verify("SR,mean", Some(5)).unwrap();
        assert!(run.passed());
        let text = verify_text(&run);
        assert!(text.contains("SR"));
        assert!(text.contains("PASS"));
        assert!(run_verify("nope", None).is_err());
        let json: serde_json::Value =
            serde_json::from_str(&verify_json(&run)).unwrap();
        assert_eq!(json["passed"], true);
    }

    #[test]
    fn bench_runner() {
        assert!(matches!(run_bench(1, &[EulerMethod::KnuthBuckholtz]), Err(CliError::Usage(_))));
        let results = run_bench(
            20,
            &[EulerMethod::KnuthBuckholtz, EulerMethod::SeriesOracle],
        )
        .unwrap();
        assert_eq!(results.len(), 2);
        assert!(results[0].peak_bits > 0);
        assert!(bench_text(&results).starts_with("method,max_index,wall_ms,peak_bits\n"));
    }
}
