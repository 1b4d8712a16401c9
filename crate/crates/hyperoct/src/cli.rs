//! Command-line entry points: per-torus verification, exhaustive and
//! randomized searches, cover-file checking, and normal forms.
//!
//! Exit codes: 0 all checks pass, 1 parse or input error, 2 relator /
//! commutation / hypothesis violation, 3 identity or global-sum failure.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::centralizer::Centralizer;
use crate::cover::TorusMonodromy;
use crate::error::Error;
use crate::pairing::{phi, phi_closed_form};
use crate::parse::{check_cover, parse_cover, parse_signed_perm, CheckOutcome};
use crate::perm::{Permutation, MAX_DEGREE};
use crate::words::GenWord;

/// Degree cap for the exhaustive search over all `(m, ℓ)` pairs.
pub const EXHAUST_CAP: usize = 4;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_IDENTITY: i32 = 3;

#[derive(Parser)]
#[command(
    name = "hyperoct",
    about = "Verify branch-divisor parity identities for wreath-product monodromy data",
    after_help = "Caps: degrees are limited to n <= 64 everywhere; `exhaust` \
                  enumerates all pairs only for n <= 4.\n\
                  Exit codes: 0 pass, 1 parse/input error, 2 relator/commutation/\
                  hypothesis violation, 3 identity or global-sum failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output layout; verdicts are identical in both.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Print only summary and verdict lines.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Tsv,
}

#[derive(Subcommand)]
pub enum Command {
    /// Verify the per-torus identity for one (meridian, longitude) pair.
    VerifyTorus {
        #[arg(long)]
        n: usize,
        /// Meridian literal, e.g. `cycles:(1 2); signs:00`.
        #[arg(long)]
        m: String,
        /// Longitude literal.
        #[arg(long)]
        l: String,
    },
    /// Verify the identity over every pair (m in S_n, l centralizing m).
    Exhaust {
        #[arg(long)]
        n: usize,
    },
    /// Verify seeded random pairs, including closed-form agreement.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Parse a cover presentation file and run all checks.
    CheckCover { path: String },
    /// Normal form of a word over x_1..x_n and eps.
    NormalForm {
        #[arg(long)]
        n: usize,
        /// Whitespace-separated tokens, e.g. `x2 x1 eps`.
        #[arg(long)]
        word: String,
    },
}

fn row(format: Format, cells: &[&str]) -> String {
    match format {
        Format::Plain => cells.join(" "),
        Format::Tsv => cells.join("\t"),
    }
}

fn bit(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

pub fn run(cli: &Cli) -> i32 {
    let mut out = String::new();
    let code = match &cli.command {
        Command::VerifyTorus { n, m, l } => cmd_verify_torus(cli, *n, m, l, &mut out),
        Command::Exhaust { n } => cmd_exhaust(cli, *n, &mut out),
        Command::Sample { n, count, seed } => cmd_sample(cli, *n, *count, *seed, &mut out),
        Command::CheckCover { path } => cmd_check_cover(cli, path, &mut out),
        Command::NormalForm { n, word } => cmd_normal_form(*n, word, &mut out),
    };
    print!("{out}");
    code
}

fn cmd_verify_torus(cli: &Cli, n: usize, m: &str, l: &str, out: &mut String) -> i32 {
    let m = match parse_signed_perm(n, m, 1, 0) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: meridian literal: {e}");
            return EXIT_PARSE;
        }
    };
    let l = match parse_signed_perm(n, l, 1, 0) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: longitude literal: {e}");
            return EXIT_PARSE;
        }
    };
    let tm = match TorusMonodromy::normalized(&m, &l) {
        Ok(tm) => tm,
        Err(Error::NonCommuting) => {
            eprintln!("error: meridian and longitude do not commute");
            return EXIT_VIOLATION;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VIOLATION;
        }
    };
    let report = tm.verify_identity();
    if !cli.quiet {
        let _ = writeln!(out, "{}", row(cli.format, &["m", &tm.meridian().to_string()]));
        let _ = writeln!(out, "{}", row(cli.format, &["l", &tm.longitude().to_string()]));
        let _ = writeln!(
            out,
            "{}",
            row(cli.format, &["component", "e", "t", "d", "alpha"])
        );
        for (idx, c) in report.components.iter().enumerate() {
            let _ = writeln!(
                out,
                "{}",
                row(
                    cli.format,
                    &[
                        &(idx + 1).to_string(),
                        &c.e.to_string(),
                        &c.t.to_string(),
                        &c.d.to_string(),
                        bit(c.alpha),
                    ]
                )
            );
        }
    }
    let _ = writeln!(out, "{}", row(cli.format, &["lhs", bit(report.lhs)]));
    let _ = writeln!(out, "{}", row(cli.format, &["rhs", bit(report.rhs)]));
    let passed = report.passed();
    let _ = writeln!(
        out,
        "{}",
        row(cli.format, &["verdict", if passed { "PASS" } else { "FAIL" }])
    );
    if passed {
        EXIT_OK
    } else {
        EXIT_IDENTITY
    }
}

fn cmd_exhaust(cli: &Cli, n: usize, out: &mut String) -> i32 {
    if n == 0 || n > EXHAUST_CAP {
        eprintln!("error: exhaustive search requires 1 <= n <= {EXHAUST_CAP}");
        return EXIT_PARSE;
    }
    let mut pairs = 0usize;
    let mut failures = 0usize;
    for m in Permutation::all(n).expect("degree within cap") {
        let centralizer = Centralizer::new(&m);
        for l in centralizer.enumerate().expect("degree within cap") {
            pairs += 1;
            let tm = TorusMonodromy::new(
                crate::signed::SignedPerm::from_perm(m.clone()),
                l,
            )
            .expect("centralizer elements commute");
            let report = tm.verify_identity();
            if !report.passed() {
                failures += 1;
                if !cli.quiet {
                    let _ = writeln!(
                        out,
                        "{}",
                        row(
                            cli.format,
                            &[
                                "FAIL",
                                &tm.meridian().to_string(),
                                &tm.longitude().to_string(),
                            ]
                        )
                    );
                }
            }
        }
    }
    let _ = writeln!(out, "{}", row(cli.format, &["pairs", &pairs.to_string()]));
    let _ = writeln!(
        out,
        "{}",
        row(cli.format, &["failures", &failures.to_string()])
    );
    let _ = writeln!(
        out,
        "{}",
        row(
            cli.format,
            &["verdict", if failures == 0 { "PASS" } else { "FAIL" }]
        )
    );
    if failures == 0 {
        EXIT_OK
    } else {
        EXIT_IDENTITY
    }
}

fn cmd_sample(cli: &Cli, n: usize, count: usize, seed: u64, out: &mut String) -> i32 {
    if n == 0 || n > MAX_DEGREE {
        eprintln!("error: degree must satisfy 1 <= n <= {MAX_DEGREE}");
        return EXIT_PARSE;
    }
    if count == 0 {
        eprintln!("error: count must be at least 1");
        return EXIT_PARSE;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    for case in 1..=count {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(&mut rng);
        let m = Permutation::from_images(images).expect("shuffle keeps a bijection");
        let l = Centralizer::new(&m).sample(&mut rng);
        let tm = TorusMonodromy::new(crate::signed::SignedPerm::from_perm(m.clone()), l.clone())
            .expect("centralizer elements commute");
        let report = tm.verify_identity();
        let closed_form_ok =
            phi_closed_form(&m, &l).unwrap() == phi(tm.meridian(), &l).unwrap();
        let ok = report.passed() && closed_form_ok;
        if !ok {
            failures += 1;
        }
        if !cli.quiet {
            let _ = writeln!(
                out,
                "{}",
                row(
                    cli.format,
                    &[
                        "case",
                        &case.to_string(),
                        &tm.meridian().to_string(),
                        &tm.longitude().to_string(),
                        "lhs",
                        bit(report.lhs),
                        "rhs",
                        bit(report.rhs),
                        if ok { "ok" } else { "FAIL" },
                    ]
                )
            );
        }
    }
    let _ = writeln!(out, "{}", row(cli.format, &["cases", &count.to_string()]));
    let _ = writeln!(
        out,
        "{}",
        row(cli.format, &["failures", &failures.to_string()])
    );
    let _ = writeln!(
        out,
        "{}",
        row(
            cli.format,
            &["verdict", if failures == 0 { "PASS" } else { "FAIL" }]
        )
    );
    if failures == 0 {
        EXIT_OK
    } else {
        EXIT_IDENTITY
    }
}

fn cmd_check_cover(cli: &Cli, path: &str, out: &mut String) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read `{path}`: {e}");
            return EXIT_PARSE;
        }
    };
    let cp = match parse_cover(&text) {
        Ok(cp) => cp,
        Err(e) => {
            eprintln!("error: {path}: {e}");
            return EXIT_PARSE;
        }
    };
    let report = check_cover(&cp);
    for line in &report.lines {
        if cli.quiet && line.passed {
            continue;
        }
        let status = if line.passed { "PASS" } else { "FAIL" };
        if line.detail.is_empty() {
            let _ = writeln!(out, "{}", row(cli.format, &[status, &line.name]));
        } else {
            let _ = writeln!(
                out,
                "{}",
                row(cli.format, &[status, &line.name, &line.detail])
            );
        }
    }
    if let Some(global) = &report.global {
        let _ = writeln!(
            out,
            "{}",
            row(
                cli.format,
                &["global-pairing", bit(global.total_pairing)]
            )
        );
        let _ = writeln!(
            out,
            "{}",
            row(
                cli.format,
                &["global-integral", bit(global.total_integral)]
            )
        );
    }
    let (verdict, code) = match report.outcome {
        CheckOutcome::Pass => ("PASS", EXIT_OK),
        CheckOutcome::Violation => ("FAIL", EXIT_VIOLATION),
        CheckOutcome::IdentityFailure => ("FAIL", EXIT_IDENTITY),
    };
    let _ = writeln!(out, "{}", row(cli.format, &["verdict", verdict]));
    code
}

fn cmd_normal_form(n: usize, word: &str, out: &mut String) -> i32 {
    let word = match GenWord::parse(n, word) {
        Ok(word) => word,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let _ = writeln!(out, "{}", word.normal_form());
    EXIT_OK
}
