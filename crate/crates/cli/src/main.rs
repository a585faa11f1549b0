//! `legendre`: point counts, isogeny-class tables and verification sweeps.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use legendre_core::char2::{Char2CountRecord, Char2Curve};
use legendre_core::classify::{census_with_cap, classify, DEFAULT_ORACLE_CAP};
use legendre_core::curve::Curve;
use legendre_core::export::{render, to_json, CountRecord, Format, Tabular};
use legendre_core::field::{is_prime, odd_prime_powers, prime_power};
use legendre_core::stats::legendre_sum;
use legendre_core::supersingular::supersingular_lambdas;
use legendre_core::verify::{run_criterion, Limits, CRITERIA};
use legendre_core::{Error, Field};

#[derive(Parser)]
#[command(
    name = "legendre",
    version,
    about = "Legendre elliptic curves over finite fields"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutFormat::Json, global = true)]
    format: OutFormat,
    /// Write output to PATH instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, value_name = "K", global = true)]
    jobs: Option<usize>,
    /// Largest field order allowed for the requested sweep; also the bound
    /// for the all-curves oracle in `classify` and `census`.
    #[arg(long, value_name = "CAP", global = true)]
    max_q: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Point counts of E_lambda over F_q, for one lambda or all of them.
    Count {
        #[arg(long)]
        q: u64,
        /// Packed field element (constant term least significant, base p).
        #[arg(long)]
        lambda: Option<u64>,
    },
    /// Every count N in the Hasse interval with its Legendre witnesses.
    Classify {
        #[arg(long)]
        q: u64,
    },
    /// Counts divisible by 4 over a range of fields, checked against all curves.
    Census {
        #[arg(long, default_value_t = 3)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
    },
    /// Deuring roots, s_p and h(-p) for each odd prime in range.
    Supersingular {
        #[arg(long, default_value_t = 3)]
        p_min: u64,
        #[arg(long)]
        p_max: u64,
    },
    /// Sum of #E_lambda over all lambda, against the closed form.
    Stats {
        #[arg(long, default_value_t = 3)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
    },
    /// Counts of y^2 + xy = x^3 + beta x^2 + lambda over F_{2^n}.
    Char2 {
        #[arg(long)]
        n: u32,
        /// Every beta instead of beta = 0 only.
        #[arg(long)]
        all_beta: bool,
    },
    /// Run the verification suites.
    VerifyAll {
        /// Run a single criterion.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=10))]
        only: Option<u8>,
    },
}

/// A rendered table and the first invariant it violated, if any.
struct Output {
    text: String,
    failure: Option<String>,
}

/// Usage errors carry their message.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<Output, Usage>;

fn field_for(q: u64, cap: Option<u64>) -> Result<Field, Usage> {
    if let Some(cap) = cap {
        if q > cap {
            return Err(Usage(format!("q = {q} exceeds --max-q {cap}")));
        }
    }
    let (p, n) = prime_power(q).ok_or_else(|| Usage(format!("{q} is not a prime power")))?;
    Ok(Field::new(p, n)?)
}

fn odd_range(lo: u64, hi: u64, cap: Option<u64>) -> Result<Vec<u64>, Usage> {
    if let Some(cap) = cap {
        if hi > cap {
            return Err(Usage(format!("range end {hi} exceeds --max-q {cap}")));
        }
    }
    let qs = odd_prime_powers(lo.max(3), hi);
    if qs.is_empty() {
        return Err(Usage(format!("no odd prime powers in [{lo}, {hi}]")));
    }
    Ok(qs)
}

fn emit<T: Tabular>(items: &[T], format: Format, failure: Option<String>) -> Outcome {
    Ok(Output {
        text: render(items, format)?,
        failure,
    })
}

fn count(q: u64, lambda: Option<u64>, c: &Common) -> Outcome {
    let f = field_for(q, c.max_q)?;
    let lambdas: Vec<u64> = match lambda {
        Some(v) => vec![v],
        None => (2..q).collect(),
    };
    let mut recs = Vec::with_capacity(lambdas.len());
    for v in lambdas {
        let l = f.element(v)?;
        recs.push(CountRecord {
            q,
            lambda: l.coeffs(),
            count: Curve::legendre(l)?.count_points()?,
            lambda_value: v,
        });
    }
    emit(&recs, c.format.into(), None)
}

fn classify_cmd(q: u64, c: &Common) -> Outcome {
    let f = field_for(q, None)?;
    if !f.is_odd() {
        return Err(Usage("classify needs odd q".into()));
    }
    let recs = classify(&f, c.max_q.unwrap_or(DEFAULT_ORACLE_CAP))?;
    emit(&recs, c.format.into(), None)
}

fn census_cmd(lo: u64, hi: u64, c: &Common) -> Outcome {
    let cap = c.max_q.unwrap_or(DEFAULT_ORACLE_CAP);
    let qs = odd_range(lo, hi, Some(cap))?;
    let mut recs = Vec::new();
    let mut bad = None;
    for q in qs {
        let f = field_for(q, None)?;
        let cen = census_with_cap(&f, cap)?;
        if !cen.sets_agree && bad.is_none() {
            bad = Some(format!(
                "legendre-isogeny: q = {q}, attained {:?}, Legendre {:?}",
                cen.predicted, cen.legendre
            ));
        }
        recs.extend(cen.records);
    }
    emit(&recs, c.format.into(), bad)
}

fn supersingular_cmd(lo: u64, hi: u64, c: &Common) -> Outcome {
    if let Some(cap) = c.max_q {
        if hi.saturating_mul(hi) > cap {
            return Err(Usage(format!("p^2 = {} exceeds --max-q {cap}", hi * hi)));
        }
    }
    let ps: Vec<u64> = (lo.max(3)..=hi).filter(|&p| is_prime(p)).collect();
    if ps.is_empty() {
        return Err(Usage(format!("no odd primes in [{lo}, {hi}]")));
    }
    let tables: Vec<_> = ps
        .iter()
        .map(|&p| supersingular_lambdas(p))
        .collect::<Result<_, _>>()?;
    let bad = tables
        .iter()
        .find(|t| !t.row().ok)
        .map(|t| format!("s_p = 3h(-p): p = {}, s_p = {}, h = {:?}", t.p, t.s_p, t.h));
    emit(&tables, c.format.into(), bad)
}

fn stats_cmd(lo: u64, hi: u64, c: &Common) -> Outcome {
    let qs = odd_range(lo, hi, c.max_q)?;
    let recs: Vec<_> = qs
        .iter()
        .map(|&q| field_for(q, None).and_then(|f| Ok(legendre_sum(&f)?)))
        .collect::<Result<_, _>>()?;
    let bad = recs
        .iter()
        .find(|r| !r.formula_ok || !r.assembly_ok)
        .map(|r| format!("average-count: q = {}, S = {}", r.q, r.s));
    emit(&recs, c.format.into(), bad)
}

fn char2_cmd(n: u32, all_beta: bool, c: &Common) -> Outcome {
    if n == 0 || n > 20 {
        return Err(Usage(format!("n = {n} outside 1..=20")));
    }
    let f = field_for(1 << n, c.max_q)?;
    let betas: Vec<_> = if all_beta {
        f.elements()?.collect()
    } else {
        vec![f.zero()]
    };
    let mut recs = Vec::new();
    let mut bad = None;
    for l in f.nonzero_elements()? {
        for &b in &betas {
            let e = Char2Curve::new(b, l)?;
            let count = e.count()?;
            let div4 = count % 4 == 0;
            if div4 != (b.trace2()? == 0) && bad.is_none() {
                bad = Some(format!(
                    "characteristic-two: n = {n}, lambda = {l}, beta = {b}, count {count}"
                ));
            }
            recs.push(Char2CountRecord::from((&e, count)));
        }
    }
    emit(&recs, c.format.into(), bad)
}

fn verify_all(only: Option<u8>, c: &Common) -> Outcome {
    let limits = Limits::default();
    let ids: Vec<u8> = match only {
        Some(id) => vec![id],
        None => CRITERIA.collect(),
    };
    let mut reports = Vec::new();
    for id in ids {
        let r = run_criterion(id, &limits)?;
        eprintln!("{}", r.line());
        reports.push(r);
    }
    let text = match c.format {
        OutFormat::Json => to_json(&reports)?,
        OutFormat::Csv => {
            let mut s = String::from("id,name,passed\n");
            for r in &reports {
                s.push_str(&format!("{},{},{}\n", r.id, r.name, r.passed));
            }
            s
        }
    };
    let failure = reports
        .iter()
        .find(|r| !r.passed)
        .map(|r| format!("{}: {} ({})", r.name, r.statement, r.detail));
    Ok(Output { text, failure })
}

fn run(cli: &Cli) -> Outcome {
    let c = &cli.common;
    if c.jobs == Some(0) {
        return Err(Usage("--jobs must be positive".into()));
    }
    legendre_core::par::with_jobs(c.jobs, || match cli.command {
        Command::Count { q, lambda } => count(q, lambda, c),
        Command::Classify { q } => classify_cmd(q, c),
        Command::Census { q_min, q_max } => census_cmd(q_min, q_max, c),
        Command::Supersingular { p_min, p_max } => supersingular_cmd(p_min, p_max, c),
        Command::Stats { q_min, q_max } => stats_cmd(q_min, q_max, c),
        Command::Char2 { n, all_beta } => char2_cmd(n, all_beta, c),
        Command::VerifyAll { only } => verify_all(only, c),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.common.out {
        Some(path) => fs::write(path, out.text.as_bytes()),
        None => io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match out.failure {
        Some(msg) => {
            eprintln!("invariant failure: {msg}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
