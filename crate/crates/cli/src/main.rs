//! `qident` — verify, expand, and list the identities in the catalog.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed,
//! 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use qident_core::registry::{
    catalog, check_record, find, CatalogEntry, CheckResult, IdentityRecord, Params, RunConfig,
};
use qident_core::{ENGINE_VERSION, Result};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Mutex;

#[derive(Parser)]
#[command(name = "qident", version, about = "Exact verifier for q-binomial identities involving the Legendre symbol mod 3")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the standard verification sweep over the catalog (or a subset).
    Verify {
        /// Identity ids to verify; all of them when omitted.
        ids: Vec<String>,
        /// Largest L for polynomial sweeps.
        #[arg(long)]
        l_max: Option<i64>,
        /// Largest chain depth v.
        #[arg(long)]
        v_max: Option<u32>,
        /// Truncation order for series checks.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate both sides of one identity at a single parameter point.
    Expand {
        id: String,
        #[arg(long, default_value_t = 0)]
        l: i64,
        #[arg(long, default_value_t = 1)]
        v: u32,
        #[arg(long, default_value_t = 0)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        m: i64,
        #[arg(long, default_value_t = 60)]
        order: usize,
    },
    /// List the catalog.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check the internal building blocks against independent routes.
    Selftest,
}

#[derive(Serialize)]
struct Report {
    engine_version: &'static str,
    config: RunConfig,
    results: Vec<CheckResult>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Verify { ids, l_max, v_max, order, format, jobs, output } => {
            let defaults = RunConfig::default();
            let cfg = RunConfig {
                l_max: l_max.unwrap_or(defaults.l_max),
                v_max: v_max.unwrap_or(defaults.v_max),
                order: order.unwrap_or(defaults.order),
            };
            let records = catalog();
            let selected: Vec<usize> = if ids.is_empty() {
                (0..records.len()).collect()
            } else {
                ids.iter().map(|id| find(&records, id)).collect::<Result<_>>()?
            };
            let results = run_parallel(&records, &selected, &cfg, jobs)?;
            let all_pass = results.iter().all(|r| r.pass);
            let report = Report { engine_version: ENGINE_VERSION, config: cfg, results };
            let rendered = render_report(&report, format);
            match output {
                Some(path) => std::fs::write(path, rendered).expect("report file is writable"),
                None => print!("{rendered}"),
            }
            Ok(all_pass)
        }
        Cmd::Expand { id, l, v, n, m, order } => {
            let records = catalog();
            let record = &records[find(&records, &id)?];
            let params = Params { l, v, n, m, order };
            let lhs = (record.lhs)(&params)?;
            let rhs = (record.rhs)(&params)?;
            let diff = lhs.diff(&rhs);
            println!("{} at L={l} v={v} n={n} m={m} order={order}", record.id);
            println!("lhs = {lhs}");
            println!("rhs = {rhs}");
            match &diff {
                None => println!("sides agree"),
                Some(mm) => println!("MISMATCH at {}: lhs {} vs rhs {}", mm.location, mm.lhs, mm.rhs),
            }
            Ok(diff.is_none())
        }
        Cmd::List { format } => {
            let records = catalog();
            let entries: Vec<CatalogEntry> = records.iter().map(CatalogEntry::from).collect();
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&entries).unwrap()),
                Format::Csv => {
                    println!("id,kind,title");
                    for e in &entries {
                        println!("{},{},{}", e.id, csv_field(&format!("{:?}", e.kind)), csv_field(e.title));
                    }
                }
                Format::Text => {
                    for e in &entries {
                        println!("{:18} {:?}: {}", e.id, e.kind, e.title);
                    }
                }
            }
            Ok(true)
        }
        Cmd::Selftest => selftest(),
    }
}

fn run_parallel(
    records: &[IdentityRecord],
    selected: &[usize],
    cfg: &RunConfig,
    jobs: Option<usize>,
) -> Result<Vec<CheckResult>> {
    let tasks: Vec<(usize, Params)> = selected
        .iter()
        .flat_map(|&i| records[i].sweep.param_sets(cfg).into_iter().map(move |p| (i, p)))
        .collect();
    let jobs = jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
        .max(1);

    let next = Mutex::new(0usize);
    let results: Mutex<Vec<Result<CheckResult>>> = Mutex::new(Vec::with_capacity(tasks.len()));
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(tasks.len().max(1)) {
            scope.spawn(|| loop {
                let idx = {
                    let mut guard = next.lock().unwrap();
                    let idx = *guard;
                    *guard += 1;
                    idx
                };
                if idx >= tasks.len() {
                    break;
                }
                let (rec_idx, params) = &tasks[idx];
                let outcome = check_record(&records[*rec_idx], params);
                results.lock().unwrap().push(outcome);
            });
        }
    });
    let mut results = results.into_inner().unwrap().into_iter().collect::<Result<Vec<_>>>()?;
    // Work-stealing order is nondeterministic; reports are not.
    results.sort_by(|a, b| (&a.id, a.params).cmp(&(&b.id, b.params)));
    Ok(results)
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).unwrap() + "\n",
        Format::Csv => {
            let mut out = String::from("id,l,v,n,m,order,pass,location,lhs,rhs,millis\n");
            for r in &report.results {
                let (loc, lhs, rhs) = r
                    .mismatch
                    .as_ref()
                    .map(|m| (m.location.clone(), m.lhs.clone(), m.rhs.clone()))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.id,
                    r.params.l,
                    r.params.v,
                    r.params.n,
                    r.params.m,
                    r.params.order,
                    r.pass,
                    csv_field(&loc),
                    csv_field(&lhs),
                    csv_field(&rhs),
                    r.millis
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let mut ids: Vec<&str> = report.results.iter().map(|r| r.id.as_str()).collect();
            ids.dedup();
            for id in ids {
                let group: Vec<_> = report.results.iter().filter(|r| r.id == id).collect();
                let passed = group.iter().filter(|r| r.pass).count();
                let millis: u128 = group.iter().map(|r| r.millis).sum();
                let status = if passed == group.len() { "ok" } else { "FAIL" };
                out.push_str(&format!("{:18} {:>4}/{:<4} {}  ({} ms)\n", id, passed, group.len(), status, millis));
                for r in group.iter().filter(|r| !r.pass) {
                    let m = r.mismatch.as_ref().unwrap();
                    out.push_str(&format!(
                        "    at L={} v={} n={} m={} order={}: {} lhs {} vs rhs {}\n",
                        r.params.l, r.params.v, r.params.n, r.params.m, r.params.order,
                        m.location, m.lhs, m.rhs
                    ));
                }
            }
            out
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Independent-route cross-checks of the building blocks the catalog rests on.
fn selftest() -> Result<bool> {
    use qident_core::exactalg::{QPoly, QSeries};
    use qident_core::qkit::{
        eisenstein_chi, legendre3, poch_qq, qbinom, qbinom_product, quintuple_sides, ratio_cubic,
        ratio_neg_one, ratio_q3_q6, QuintupleSpec,
    };

    let mut ok = true;
    let mut step = |name: &str, pass: bool| {
        println!("{} {}", if pass { "ok  " } else { "FAIL" }, name);
        ok &= pass;
    };

    let mut binom_ok = true;
    for top in 0..=24i64 {
        for bottom in 0..=top {
            if qbinom(top, bottom, 1) != qbinom_product(top, bottom, 1) {
                binom_ok = false;
            }
        }
    }
    step("gaussian binomials: recurrence route = product route (top <= 24)", binom_ok);

    let mut ratio_ok = true;
    for n in 0..=20u32 {
        let neg = PochRatio { num: (3, n), den: (1, n) };
        ratio_ok &= neg.matches(&ratio_neg_one(n), true);
        let q36 = ratio_q3_q6(n);
        let mut num = QPoly::one();
        let mut den = QPoly::one();
        for k in 1..=n as usize {
            num.mul_binomial(&qident_core::exactalg::coeff::cint(-1), 6 * k - 3);
            den.mul_binomial(&qident_core::exactalg::coeff::cint(-1), 2 * k - 1);
        }
        ratio_ok &= &den * &q36 == num;
        let cubic = ratio_cubic(n);
        ratio_ok &= &poch_qq(n, 1) * &cubic == poch_qq(n, 3);
    }
    step("pochhammer ratio factorizations divide exactly (n <= 20)", ratio_ok);

    let mut quint_ok = true;
    for spec in [
        QuintupleSpec::new(6, -1, 1),
        QuintupleSpec::new(9, 1, 1),
        QuintupleSpec::new(9, 1, 2),
        QuintupleSpec::new(9, 1, 4),
        QuintupleSpec::new(18, 1, 3),
        QuintupleSpec::new(18, 1, 5),
        QuintupleSpec::new(18, 1, 7),
    ] {
        let (sum, product) = quintuple_sides(&spec, 150)?;
        quint_ok &= sum == product;
    }
    step("quintuple product: alternating sum = five-factor product (order 150)", quint_ok);

    let char_ok = (-1000..=1000).all(|j| {
        legendre3(j) == eisenstein_chi(j) && legendre3(j) + legendre3(j + 1) + legendre3(j + 2) == 0
    });
    step("legendre symbol mod 3 = eisenstein unit formula (|j| <= 1000)", char_ok);

    let geom = QSeries::from_poly(&QPoly::from_ints(&[1, -1]), 50).inv()?;
    let mut ones = QSeries::zero(50);
    for k in 0..=50 {
        ones.add_term(&qident_core::exactalg::coeff::one(), k);
    }
    step("series inversion: 1/(1-q) is the geometric series", geom == ones);

    let _ = std::io::stdout().flush();
    Ok(ok)
}

/// (-1; q^num)_n / (-1; q^den)_n rendered through raw pochhammer products,
/// compared against a claimed closed factorization.
struct PochRatio {
    num: (u32, u32),
    den: (u32, u32),
}

impl PochRatio {
    fn matches(&self, claimed: &qident_core::exactalg::QPoly, neg_one: bool) -> bool {
        use qident_core::exactalg::{coeff, QPoly};
        let raw = |step: u32, n: u32| {
            let mut p = QPoly::constant(coeff::cint(if n > 0 && neg_one { 2 } else { 1 }));
            for k in 1..n as usize {
                p.mul_binomial(&coeff::one(), step as usize * k);
            }
            p
        };
        let num = raw(self.num.0, self.num.1);
        let den = raw(self.den.0, self.den.1);
        &den * claimed == num
    }
}
