//! The `schroder` command line.
//!
//! Every command takes its inputs as positional arguments, or one per line on
//! standard input when none are given. `--json` switches every command to one
//! JSON object per output record, one record per line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or parse error,
//! 3 size cap exceeded.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bijection::{phi, phi_inverse, phi_trace, InverseCache};
use crate::enumeration::{count, sequence_by_name, CountQuery, Family, Method, SequenceName};
use crate::error::Error;
use crate::limits::Limits;
use crate::path::SchroderPath;
use crate::perm::Permutation;
use crate::verification::{regression_fixtures, verify_all, verify_with, Claim, VerificationReport};

/// Environment variable naming a directory for persisted inverse tables.
pub const CACHE_DIR_ENV: &str = "SCHRODER_CACHE_DIR";

/// Paths whose evolution tables `tables` replays.
pub const TABLE_PATHS: &[&str] = &[
    "nennnneeedennede",
    "nennedennnneeede",
    "ndndneeennneneee",
    "nnneennnnneeeeenee",
    "nnennnnneeeeenneee",
    "nneneennedneennee",
    "nnedennneeennenee",
];

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "schroder", version, about = "Schroder paths and {1243,2143}-avoiding permutations")]
pub struct Cli {
    /// Print one JSON object per record instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PathInputs {
    /// Paths over {d, e, n}; read from stdin when omitted.
    pub paths: Vec<String>,
}

#[derive(Debug, Args)]
pub struct PermInputs {
    /// Comma-separated permutations; read from stdin when omitted.
    pub permutations: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Map paths to permutations.
    Phi(PathInputs),
    /// Map permutations back to paths.
    PhiInverse {
        #[command(flatten)]
        inputs: PermInputs,
        /// Invert through the memoized forward table instead of structurally.
        #[arg(long)]
        table: bool,
        /// Read and write inverse tables in this directory (implies --table).
        #[arg(long, value_name = "DIR")]
        seed_cache: Option<PathBuf>,
        /// Largest path length for which a table may be built.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Reverse-complement of permutations.
    Rc(PermInputs),
    /// Inverse of permutations.
    Inverse(PermInputs),
    /// Reverse a path and swap `n` and `e`.
    Rev(PathInputs),
    /// Swap level and notch features.
    Psi(PathInputs),
    /// List level and notch features.
    Features(PathInputs),
    /// Test membership in D_n.
    InD(PathInputs),
    /// Count a class at the given permutation lengths.
    Count {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        /// Raise every generator cap to this size.
        #[arg(long)]
        max_n: Option<usize>,
        /// Permutation lengths; read from stdin when omitted.
        lengths: Vec<String>,
    },
    /// Run exhaustive checks.
    Verify {
        /// Claim to run (`regression_fixtures` replays the worked examples).
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        claim: Option<String>,
        /// Run every claim and the regression fixtures.
        #[arg(long)]
        all: bool,
        /// Largest size checked; defaults to each claim's own default.
        #[arg(long)]
        max_n: Option<usize>,
        /// Run claims one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// Draw paths in ASCII.
    Render(PathInputs),
    /// Replay the evolution tables of the worked examples.
    Tables,
    /// Print an integer sequence table.
    Sequence {
        #[arg(value_enum)]
        name: SequenceArg,
        /// Last index to compute.
        #[arg(long, default_value_t = 20)]
        max_index: usize,
        /// Raise the path generator cap (for `u` and `v`).
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "schroder_perms", alias = "schroder-perms")]
    SchroderPerms,
    Centrosymmetric,
    #[value(name = "centrosymmetric_involutions", alias = "centrosymmetric-involutions")]
    CentrosymmetricInvolutions,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Recurrence,
    Paths,
    #[value(name = "brute_force", alias = "brute-force")]
    BruteForce,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SequenceArg {
    R,
    Q,
    Pell,
    A,
    B,
    C,
    D,
    U,
    V,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::SchroderPerms => Family::SchroderPerms,
            FamilyArg::Centrosymmetric => Family::Centrosymmetric,
            FamilyArg::CentrosymmetricInvolutions => Family::CentrosymmetricInvolutions,
        }
    }
}

impl From<SequenceArg> for SequenceName {
    fn from(s: SequenceArg) -> SequenceName {
        match s {
            SequenceArg::R => SequenceName::R,
            SequenceArg::Q => SequenceName::Q,
            SequenceArg::Pell => SequenceName::Pell,
            SequenceArg::A => SequenceName::A,
            SequenceArg::B => SequenceName::B,
            SequenceArg::C => SequenceName::C,
            SequenceArg::D => SequenceName::D,
            SequenceArg::U => SequenceName::U,
            SequenceArg::V => SequenceName::V,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json: bool,
    status: i32,
}

impl Io<'_> {
    fn text(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn record(&mut self, value: &impl Serialize) {
        let line = serde_json::to_string(value).expect("serializable record");
        let _ = writeln!(self.out, "{line}");
    }

    fn emit(&mut self, text: impl AsRef<str>, value: serde_json::Value) {
        if self.json {
            self.record(&value);
        } else {
            self.text(text);
        }
    }

    fn fail(&mut self, input: &str, e: &Error) {
        let _ = writeln!(self.err, "error: {input}: {e}");
        self.status = self.status.max(exit_code(e));
    }

    fn verified(&mut self, ok: bool) {
        if !ok && self.status == EXIT_OK {
            self.status = EXIT_VERIFY_FAILED;
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_INPUT
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let mut io = Io {
        out,
        err,
        json: cli.json,
        status: EXIT_OK,
    };
    execute(cli.command, stdin, &mut io);
    let _ = io.out.flush();
    io.status
}

fn inputs(given: Vec<String>, stdin: &mut dyn BufRead) -> Vec<String> {
    if !given.is_empty() {
        return given;
    }
    stdin
        .lines()
        .map_while(|l| l.ok())
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty())
        .collect()
}

fn each_path(given: Vec<String>, stdin: &mut dyn BufRead, io: &mut Io, mut f: impl FnMut(&mut Io, &str, SchroderPath)) {
    for raw in inputs(given, stdin) {
        match raw.parse::<SchroderPath>() {
            Ok(p) => f(io, &raw, p),
            Err(e) => io.fail(&raw, &e),
        }
    }
}

fn each_perm(given: Vec<String>, stdin: &mut dyn BufRead, io: &mut Io, mut f: impl FnMut(&mut Io, &str, Permutation)) {
    for raw in inputs(given, stdin) {
        match raw.parse::<Permutation>() {
            Ok(p) => f(io, &raw, p),
            Err(e) => io.fail(&raw, &e),
        }
    }
}

fn execute(command: Command, stdin: &mut dyn BufRead, io: &mut Io) {
    match command {
        Command::Phi(i) => each_path(i.paths, stdin, io, |io, _, p| {
            let pi = phi(&p);
            io.emit(pi.to_string(), json!({"path": p, "permutation": pi}));
        }),
        Command::PhiInverse {
            inputs: i,
            table,
            seed_cache,
            max_n,
        } => {
            let dir = seed_cache.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
            let use_table = table || dir.is_some();
            let mut limits = Limits::default();
            if let Some(n) = max_n {
                limits.max_inverse_table_len = n;
                limits.max_path_len = limits.max_path_len.max(n);
            }
            let cache = InverseCache::new(limits, dir);
            each_perm(i.permutations, stdin, io, |io, raw, pi| {
                let result = if use_table {
                    cache.phi_inverse(&pi)
                } else {
                    phi_inverse(&pi)
                };
                match result {
                    Ok(p) => io.emit(p.to_string(), json!({"permutation": pi, "path": p})),
                    Err(e) => io.fail(raw, &e),
                }
            })
        }
        Command::Rc(i) => each_perm(i.permutations, stdin, io, |io, _, pi| {
            let out = pi.reverse_complement();
            io.emit(out.to_string(), json!({"input": pi, "output": out}));
        }),
        Command::Inverse(i) => each_perm(i.permutations, stdin, io, |io, _, pi| {
            let out = pi.inverse();
            io.emit(out.to_string(), json!({"input": pi, "output": out}));
        }),
        Command::Rev(i) => each_path(i.paths, stdin, io, |io, _, p| {
            let out = p.reverse();
            io.emit(out.to_string(), json!({"input": p, "output": out}));
        }),
        Command::Psi(i) => each_path(i.paths, stdin, io, |io, _, p| {
            let out = p.psi();
            io.emit(out.to_string(), json!({"input": p, "output": out}));
        }),
        Command::Features(i) => each_path(i.paths, stdin, io, |io, _, p| {
            let f = p.features();
            let list = |v: Vec<usize>| {
                v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            };
            let text = format!(
                "levels={} notches={} earliest_level={} latest_level={} earliest_notch={} latest_notch={}",
                list(f.levels()),
                list(f.notches()),
                f.earliest_level,
                f.latest_level,
                f.earliest_notch,
                f.latest_notch
            );
            let mut value = serde_json::to_value(&f).expect("serializable");
            value["path"] = json!(p);
            io.emit(text, value);
        }),
        Command::InD(i) => each_path(i.paths, stdin, io, |io, _, p| {
            let in_d = p.is_in_d();
            io.emit(in_d.to_string(), json!({"path": p, "in_d": in_d}));
        }),
        Command::Render(i) => each_path(i.paths, stdin, io, |io, _, p| {
            let art = p.render();
            io.emit(art.trim_end_matches('\n'), json!({"path": p, "render": art}));
        }),
        Command::Count {
            family,
            method,
            max_n,
            lengths,
        } => {
            let family = Family::from(family);
            let limits = max_n.map_or_else(Limits::default, Limits::uniform);
            for raw in inputs(lengths, stdin) {
                let n = match raw.parse::<usize>() {
                    Ok(n) => n,
                    Err(e) => {
                        io.fail(&raw, &Error::Parse {
                            position: 1,
                            message: format!("not a length: {e}"),
                        });
                        continue;
                    }
                };
                run_count(io, family, method, n, &limits, &raw);
            }
        }
        Command::Verify {
            claim,
            all,
            max_n,
            sequential,
        } => run_verify(io, claim, all, max_n, !sequential),
        Command::Tables => {
            let mut paths: Vec<SchroderPath> =
                TABLE_PATHS.iter().map(|s| s.parse().expect("table path")).collect();
            let last = paths.last().expect("table paths").psi().reverse();
            paths.push(last);
            for p in paths {
                let (start, rows) = phi_trace(&p);
                if io.json {
                    io.record(&json!({"path": p, "start": start, "rows": rows}));
                    continue;
                }
                io.text(format!("path {p}"));
                io.text(format!("  start  {start}"));
                for (k, row) in rows.iter().enumerate() {
                    let word: String = row.block.iter().map(|t| format!("s{t}")).collect();
                    io.text(format!("  σ{}={word}  {}", k + 1, row.permutation));
                }
                io.text("");
            }
        }
        Command::Sequence {
            name,
            max_index,
            max_n,
        } => {
            let limits = max_n.map_or_else(Limits::default, Limits::uniform);
            match sequence_by_name(name.into(), max_index, &limits) {
                Ok(table) => {
                    if io.json {
                        io.record(&table);
                    } else {
                        let values: Vec<String> = table.values.iter().map(|v| v.to_string()).collect();
                        io.text(values.join(","));
                    }
                }
                Err(e) => io.fail(&format!("{}", SequenceName::from(name)), &e),
            }
        }
    }
}

fn run_count(io: &mut Io, family: Family, method: MethodArg, n: usize, limits: &Limits, raw: &str) {
    let methods: Vec<Method> = match method {
        MethodArg::Recurrence => vec![Method::Recurrence],
        MethodArg::Paths => vec![Method::Paths],
        MethodArg::BruteForce => vec![Method::BruteForce],
        MethodArg::All => Method::ALL.to_vec(),
    };
    let mut counts = Vec::new();
    for m in methods {
        match count(&CountQuery { family, n, method: m }, limits) {
            Ok(c) => counts.push((m, c)),
            Err(e) => {
                io.fail(raw, &e);
                return;
            }
        }
    }
    if let [(m, c)] = counts[..] {
        io.emit(
            c.to_string(),
            json!({"family": family.as_str(), "n": n, "method": m.as_str(), "count": c}),
        );
        return;
    }
    let agree = counts.windows(2).all(|w| w[0].1 == w[1].1);
    let text = counts
        .iter()
        .map(|(m, c)| format!("{}={c}", m.as_str()))
        .collect::<Vec<_>>()
        .join(" ");
    let map: serde_json::Map<String, serde_json::Value> = counts
        .iter()
        .map(|(m, c)| (m.as_str().to_string(), json!(c)))
        .collect();
    io.emit(
        text,
        json!({"family": family.as_str(), "n": n, "counts": map, "agree": agree}),
    );
    if !agree {
        let _ = writeln!(io.err, "error: {raw}: methods disagree");
    }
    io.verified(agree);
}

fn run_verify(io: &mut Io, claim: Option<String>, all: bool, max_n: Option<usize>, parallel: bool) {
    let limits = Limits::default();
    let reports: Result<Vec<VerificationReport>, Error> = if all {
        verify_all(max_n, &limits, parallel).map(|mut r| {
            r.push(regression_fixtures());
            r
        })
    } else {
        let name = claim.expect("clap requires --claim without --all");
        if name.replace('-', "_") == "regression_fixtures" {
            Ok(vec![regression_fixtures()])
        } else {
            name.parse::<Claim>().and_then(|c| {
                verify_with(c, max_n.unwrap_or(c.default_max_n()), &limits).map(|r| vec![r])
            })
        }
    };
    let reports = match reports {
        Ok(r) => r,
        Err(e) => {
            let what = if all { "verify" } else { "claim" };
            io.fail(what, &e);
            return;
        }
    };
    for report in &reports {
        if io.json {
            io.record(report);
        } else {
            io.text(format!(
                "{} {}: {} ({} cases, {} failures, {} ms)",
                if report.passed() { "PASS" } else { "FAIL" },
                report.claim,
                report.range,
                report.cases,
                report.failure_count,
                report.ms
            ));
            for f in &report.failures {
                io.text(format!(
                    "  input {}: expected {}, got {}",
                    f.input, f.expected, f.actual
                ));
            }
        }
        io.verified(report.passed());
    }
}
