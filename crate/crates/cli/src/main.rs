//! `hoeffding`: tail bounds, certification and simulation from the command
//! line. Output is CSV with a header row.
//!
//! Exit codes: 0 success, 1 numeric failure or failed check, 2 usage or
//! validation error.

mod args;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::Parser;
use hoeffding_core::io::{
    fmt_num, fmt_probability, read_intervals_file, report_row, LEMMA_HEADER, MONTE_CARLO_HEADER,
    REPORT_HEADER,
};
use hoeffding_core::tail::{invert_for_n, invert_for_t, ln_tail_bound, mixed_scales, tail_bound};
use hoeffding_core::verify::{compare_with_bound, extremal_two_point, verify_lemma, zero_mean_mixture};
use hoeffding_core::{BoundError, DeviationForm, Execution, Interval, MgfBoundKind, Sidedness};

use args::{BoundArgs, Cli, Command, CompareArgs, DistArg, InvertArgs, LemmaArgs, Output, SimulateArgs};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<BoundError> for Failure {
    fn from(err: BoundError) -> Self {
        Failure {
            code: if err.is_usage() { EXIT_USAGE } else { EXIT_FAILURE },
            message: err.to_string(),
        }
    }
}

/// CSV produced by a command and whether its check passed.
struct Outcome {
    csv: String,
    pass: bool,
}

impl Outcome {
    fn ok(csv: String) -> Self {
        Outcome { csv, pass: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, output) = match &cli.command {
        Command::Bound(a) => (cmd_bound(a), &a.output),
        Command::Lemma(a) => (cmd_lemma(a), &a.output),
        Command::Simulate(a) => (cmd_simulate(a), &a.output),
        Command::Invert(a) => (cmd_invert(a), &a.output),
        Command::Compare(a) => (cmd_compare(a), &a.output),
    };
    match result.and_then(|outcome| emit(&outcome.csv, output).map(|_| outcome.pass)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILURE),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn emit(csv: &str, output: &Output) -> Result<(), Failure> {
    match &output.out {
        Some(path) => std::fs::write(path, csv).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn cmd_bound(args: &BoundArgs) -> Result<Outcome, Failure> {
    let set = read_intervals_file(&args.intervals)?;
    let mut csv = format!("{REPORT_HEADER}\n");
    for sidedness in args.sided.expand() {
        for kind in args.kind.expand() {
            let report = tail_bound(&set, args.t, args.form.into(), sidedness, kind)?;
            writeln!(csv, "{}", report_row(&report)).unwrap();
        }
    }
    Ok(Outcome::ok(csv))
}

fn cmd_lemma(args: &LemmaArgs) -> Result<Outcome, Failure> {
    let iv = Interval::new(args.a, args.b)?;
    let report = verify_lemma(&iv, args.s_max, args.s_steps)?;
    let mut csv = format!("{LEMMA_HEADER}\n");
    for row in report.csv_rows() {
        writeln!(csv, "{row}").unwrap();
    }
    Ok(Outcome {
        csv,
        pass: report.pass,
    })
}

fn cmd_simulate(args: &SimulateArgs) -> Result<Outcome, Failure> {
    let set = read_intervals_file(&args.intervals)?;
    let dists = set
        .iter()
        .map(|iv| match args.dist {
            DistArg::TwoPoint => Ok(extremal_two_point(iv)),
            DistArg::Mixture(c) => zero_mean_mixture(iv, c),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cmp = compare_with_bound(
        &set,
        &dists,
        args.t,
        args.form.into(),
        args.reps,
        args.seed,
        Execution::default(),
    )?;
    Ok(Outcome {
        csv: format!("{MONTE_CARLO_HEADER}\n{}\n", cmp.csv_row()),
        pass: cmp.pass,
    })
}

fn cmd_invert(args: &InvertArgs) -> Result<Outcome, Failure> {
    let kind: MgfBoundKind = args.kind.into();
    if let (Some(a), Some(b), Some(t)) = (args.a, args.b, args.t) {
        let iv = Interval::new(a, b)?;
        let n = invert_for_n(&iv, t, args.delta, kind)?;
        return Ok(Outcome::ok(format!(
            "a,b,t,delta,kind,n\n{},{},{},{},{},{n}\n",
            fmt_num(a),
            fmt_num(b),
            fmt_num(t),
            fmt_num(args.delta),
            kind.as_str()
        )));
    }
    let path = args.intervals.as_ref().ok_or_else(|| Failure {
        code: EXIT_USAGE,
        message: "invert needs either --a/--b/--t or --intervals".into(),
    })?;
    let set = read_intervals_file(path)?;
    let sidedness: Sidedness = args.sided.into();
    let t = invert_for_t(&set, args.delta, sidedness, kind)?;
    Ok(Outcome::ok(format!(
        "n,delta,sidedness,kind,t\n{},{},{},{},{}\n",
        set.len(),
        fmt_num(args.delta),
        sidedness.as_str(),
        kind.as_str(),
        fmt_num(t)
    )))
}

fn cmd_compare(args: &CompareArgs) -> Result<Outcome, Failure> {
    let set = read_intervals_file(&args.intervals)?;
    let form: DeviationForm = args.form.into();
    let sidedness: Sidedness = args.sided.into();
    let scales = mixed_scales(&set);
    let mut csv = String::from("t,improved,original,ratio\n");
    for t in args.t_grid.points() {
        let t_sum = form.sum_deviation(t, set.len());
        let ln_improved = ln_tail_bound(&scales, t_sum, sidedness, MgfBoundKind::Improved);
        let ln_original = ln_tail_bound(&scales, t_sum, sidedness, MgfBoundKind::Original);
        writeln!(
            csv,
            "{},{},{},{}",
            fmt_num(t),
            fmt_probability(ln_improved.exp(), ln_improved),
            fmt_probability(ln_original.exp(), ln_original),
            fmt_num((ln_improved - ln_original).exp())
        )
        .unwrap();
    }
    Ok(Outcome::ok(csv))
}
