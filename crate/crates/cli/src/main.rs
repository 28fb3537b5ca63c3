use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ikeda_core::arith::{fmt_q, int_pow, Q};
use ikeda_core::elliptic::eigenform;
use ikeda_core::jacobi::{dual_cosets, fj_component, reconstruct_fj, eisenstein_fj_check, JacobiIndex};
use ikeda_core::lfactor::{checks_for_tag, report_text};
use ikeda_core::lift::{maass_check, Lift};
use ikeda_core::siegel::{eigen_ratio, hecke_tp_degree2, phi_operator, SiegelExpansion};
use ikeda_core::Error;

const DEFAULT_LIFT_PREC: usize = 120;

#[derive(Parser, Debug)]
#[command(name = "ikeda", version, about = "Exact computations with degree-two lifts of elliptic eigenforms")]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Directory receiving the output files.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,

    /// Format of the summary printed on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable table.
    Text,
    /// The versioned report file, verbatim.
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalized Hecke eigenform of weight 2k.
    Eigenform {
        #[arg(long)]
        weight: i64,
        #[arg(long, default_value_t = 100)]
        prec: usize,
    },
    /// Degree-two lift of the weight-2k eigenform, with structural checks.
    Lift {
        #[arg(long)]
        weight: i64,
        #[arg(long, default_value_t = 10)]
        bound: i64,
    },
    /// Standard L-function identities and parameter bookkeeping.
    Lfactor {
        /// Sp, SU, SUH, E73, Miyawaki, CAP or Arthur.
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Fourier-Jacobi components of the Siegel Eisenstein series or of an
    /// expansion file.
    Fj {
        /// Weight of the Siegel Eisenstein series; ignored with --input.
        #[arg(long, default_value_t = 12)]
        weight: i64,
        #[arg(long = "S", default_value_t = 1)]
        s: i64,
        #[arg(long, default_value_t = 40)]
        bound: i64,
        /// Siegel expansion file, for example one written by `lift`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

/// Failure categories mapped onto exit codes.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Structural(_)
            | Error::NotEigen { .. }
            | Error::Ramanujan { .. }
            | Error::Inconsistent { .. }
            | Error::Underdetermined { .. }
            | Error::Asymmetric { .. }
            | Error::HalfPowerResidue { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

/// Outcome of a command: report text, a short human summary and the
/// overall status.
struct Outcome {
    report: String,
    summary: Vec<String>,
    passed: bool,
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, Failure> {
    let path = dir.join(name);
    fs::write(&path, contents)?;
    Ok(path)
}

fn run_eigenform(out: &Path, two_k: i64, prec: usize) -> Result<Outcome, Failure> {
    if prec < 2 {
        return Err(Failure::Usage("--prec must be at least 2".into()));
    }
    let f = eigenform(two_k, prec)?;
    let name = format!("eigenform-w{two_k}-prec{prec}.txt");
    let text = f.series().to_text();
    write_file(out, &name, &text)?;
    let shown: Vec<String> = (1..prec.min(6)).map(|n| format!("a({n})={}", fmt_q(f.a(n).unwrap()))).collect();
    Ok(Outcome {
        report: text,
        summary: vec![format!("wrote {name}"), format!("weight={two_k} coefficients={prec} {}", shown.join(" "))],
        passed: true,
    })
}

fn run_lift(out: &Path, two_k: i64, bound: i64) -> Result<Outcome, Failure> {
    if bound < 0 {
        return Err(Failure::Usage("--bound must be non-negative".into()));
    }
    let f = eigenform(two_k, DEFAULT_LIFT_PREC)?;
    let lift = Lift::new(&f)?;
    let le = lift.expand(bound)?;
    let exp = &le.expansion;
    let k = f.k;
    let base = format!("lift-w{two_k}-b{bound}");
    write_file(out, &format!("{base}.txt"), &exp.to_text())?;
    write_file(out, &format!("{base}.provenance.txt"), &le.provenance_text())?;

    let mut lines = Vec::new();
    let mut all = true;
    let mut check = |line: String, ok: bool| {
        all &= ok;
        lines.push(format!("{line} status={}", status(ok)));
    };
    check(format!("check=nonzero coefficients={}", exp.len()), !exp.is_zero());
    check("check=phi".to_string(), phi_operator(exp).is_zero());
    let maass = maass_check(exp, k)?;
    let at_k = maass.results.iter().find(|r| r.exponent == k);
    let nontrivial = at_k.map_or(0, |r| r.nontrivial);
    check(format!("check=maass exponent={k} nontrivial={nontrivial}"), maass.consistent() == Some(k));
    for p in [2u64, 3] {
        let line = match hecke_tp_degree2(exp, p) {
            Ok(image) => {
                let ratio = eigen_ratio(exp, &image)?;
                let expected = f.ap(p)? + Q::from_integer(int_pow(p, (k - 1) as u32) + int_pow(p, k as u32));
                let shown = ratio.ratio.as_ref().map_or("none".to_string(), fmt_q);
                let ok = ratio.is_constant() && ratio.ratio.as_ref() == Some(&expected);
                (format!("check=hecke p={p} ratio={shown} compared={}", ratio.compared), ok)
            }
            Err(e) => (format!("check=hecke p={p} error=\"{e}\""), false),
        };
        check(line.0, line.1);
    }
    let mut report = String::new();
    writeln!(report, "# format: lift-checks v1").unwrap();
    writeln!(report, "weight={}", exp.weight).unwrap();
    writeln!(report, "trace_bound={bound}").unwrap();
    for l in &lines {
        writeln!(report, "{l}").unwrap();
    }
    writeln!(report, "overall={}", status(all)).unwrap();
    write_file(out, &format!("{base}.checks.txt"), &report)?;
    let mut summary = vec![format!("wrote {base}.txt, {base}.provenance.txt, {base}.checks.txt"), format!("weight={}", exp.weight)];
    summary.extend(lines);
    Ok(Outcome { report, summary, passed: all })
}

fn run_lfactor(out: &Path, group: &str, n: usize) -> Result<Outcome, Failure> {
    let checks = checks_for_tag(group, n)?;
    let tag = group.trim().to_ascii_lowercase();
    let report = report_text(&format!("{tag} n={n}"), &checks);
    let name = format!("lfactor-{tag}-n{n}.txt");
    write_file(out, &name, &report)?;
    let passed = checks.iter().all(|c| c.passed);
    let mut summary = vec![format!("wrote {name}")];
    summary.extend(checks.iter().map(|c| c.line()));
    if tag == "e73" || tag == "arthur" {
        let dims: Vec<String> = ikeda_core::lfactor::arthur_parameter().iter().map(|(_, r)| r.dim.to_string()).collect();
        summary.push(format!("arthur dims {}", dims.join("+")));
    }
    Ok(Outcome { report, summary, passed })
}

fn run_fj(out: &Path, weight: i64, s: i64, bound: i64, input: Option<&Path>) -> Result<Outcome, Failure> {
    if s != 1 {
        return Err(Error::UnsupportedIndex(s).into());
    }
    let index = JacobiIndex::new(s)?;
    let mut report = String::new();
    writeln!(report, "# format: fj-report v1").unwrap();
    writeln!(report, "S={s}").unwrap();
    let mut summary = Vec::new();
    let passed = match input {
        None => {
            if bound < 1 {
                return Err(Failure::Usage("--bound must be positive".into()));
            }
            let rep = eisenstein_fj_check(weight - 1, index, bound)?;
            writeln!(report, "source=eisenstein weight={weight}").unwrap();
            writeln!(report, "n_max={bound}").unwrap();
            writeln!(report, "component_weight={}", fmt_q(&rep.component_weight)).unwrap();
            let src = ikeda_core::siegel::SiegelEisenstein { weight };
            for c in &rep.components {
                let comp = ikeda_core::jacobi::fj_component_upto(&src, index, c.xi, bound)?;
                let name = format!("fj-eis-w{weight}-S{s}-xi{}.txt", c.xi.j);
                write_file(out, &name, &comp.to_text())?;
                let scalar = c.scalar.as_ref().map_or("none".to_string(), fmt_q);
                let ok = c.first_mismatch.is_none() && c.scalar.is_some();
                writeln!(report, "xi={}/{} pattern=cohen scalar={scalar} checked={} status={}", c.xi.j, 2 * c.xi.m, c.checked, status(ok))
                    .unwrap();
                summary.push(format!("wrote {name}"));
            }
            rep.passed()
        }
        Some(path) => {
            let text = fs::read_to_string(path)?;
            let exp = SiegelExpansion::from_text(&text)?;
            writeln!(report, "source=file weight={}", exp.weight).unwrap();
            writeln!(report, "trace_bound={}", exp.trace_bound).unwrap();
            let mut ok_all = true;
            for xi in dual_cosets(index) {
                let comp = fj_component(&exp, index, xi)?;
                let name = format!("fj-input-w{}-S{s}-xi{}.txt", exp.weight, xi.j);
                write_file(out, &name, &comp.to_text())?;
                let constant = comp.constant_term();
                let ok = constant == Q::from_integer(0.into());
                ok_all &= ok;
                writeln!(report, "xi={}/{} constant_term={} status={}", xi.j, 2 * xi.m, fmt_q(&constant), status(ok)).unwrap();
                summary.push(format!("wrote {name}"));
            }
            let rec = reconstruct_fj(&exp, index)?;
            writeln!(report, "reconstruction checked={} status={}", rec.checked, status(rec.passed())).unwrap();
            ok_all && rec.passed()
        }
    };
    writeln!(report, "overall={}", status(passed)).unwrap();
    let name = format!("fj-report-S{s}.txt");
    write_file(out, &name, &report)?;
    summary.push(format!("wrote {name}"));
    summary.extend(report.lines().filter(|l| l.contains("status=")).map(str::to_string));
    Ok(Outcome { report, summary, passed })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    fs::create_dir_all(&cli.out)?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    match &cli.command {
        Command::Eigenform { weight, prec } => run_eigenform(&cli.out, *weight, *prec),
        Command::Lift { weight, bound } => run_lift(&cli.out, *weight, *bound),
        Command::Lfactor { group, n } => run_lfactor(&cli.out, group, *n),
        Command::Fj { weight, s, bound, input } => run_fj(&cli.out, *weight, *s, *bound, input.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            match cli.format {
                Format::Text => {
                    for l in &outcome.summary {
                        println!("{l}");
                    }
                    println!("result: {}", status(outcome.passed));
                }
                Format::Structured => print!("{}", outcome.report),
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(2)
        }
    }
}
