use std::collections::BTreeSet;
use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use psdef::groebner::cache::GbCache;
use psdef::groebner::{verify_certificate, Limits, Membership};
use psdef::group::{parse_word, GroupSpec, NamedGroup};
use psdef::liftring::{build_lift_ideal, coeff_certificate, coeff_membership, trace_defect, LiftOptions, WitnessMode};
use psdef::psring::{hilbert_profile, witness_membership, PsError, PsOptions};
use psdef::repcount::{iso_verdict, Family, VerdictOptions};
use psdef::verify::{verify_paper, CheckGroup, ExpectedTable, Status, VerifyOptions};

#[derive(Parser)]
#[command(name = "psdef", version, about = "Pseudodeformation and lifting rings of finite 2-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Engine {
    /// Wall-clock limit per Groebner run, in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    #[arg(long)]
    max_basis: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory for cached bases.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl Engine {
    fn limits(&self) -> Limits {
        Limits { timeout: self.timeout.map(Duration::from_secs_f64), max_basis: self.max_basis, max_degree: None }
    }

    fn cache(&self) -> Result<Option<GbCache>, std::io::Error> {
        self.cache_dir.as_ref().map(GbCache::new).transpose()
    }

    fn ps(&self) -> Result<PsOptions, std::io::Error> {
        Ok(PsOptions { limits: self.limits(), jobs: self.jobs, cache: self.cache()? })
    }

    fn lift(&self) -> Result<LiftOptions, std::io::Error> {
        Ok(LiftOptions { limits: self.limits(), jobs: self.jobs, cache: self.cache()? })
    }
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Mode {
    All,
    AsNeeded,
}

impl From<Mode> for WitnessMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::All => WitnessMode::All,
            Mode::AsNeeded => WitnessMode::AsNeeded,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Stabilized dimension of R^ps/(2).
    PsDim {
        /// Builtin name (extraspecial32, dihedral:M, abelian:AxB, cyclic:N) or a JSON spec file.
        #[arg(long)]
        group: String,
        #[command(flatten)]
        engine: Engine,
    },
    /// Dimensions of R/(I + m^k) for k = 1..=kmax and the Hilbert series.
    Hilbert {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 8)]
        kmax: u32,
        #[command(flatten)]
        engine: Engine,
    },
    /// Whether T(g) lies in I + m^k.
    Witness {
        #[arg(long)]
        group: String,
        /// A word in the generators (`a^2`), an element label, or an index `#i`.
        #[arg(long)]
        element: String,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        engine: Engine,
    },
    /// Whether tr(word) - 2 vanishes in the integral lifting ring.
    LiftCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "as-needed")]
        mode: Mode,
        /// Also build and replay a membership certificate.
        #[arg(long)]
        certificate: bool,
        #[command(flatten)]
        engine: Engine,
    },
    /// Upper bound, representation count and computed dimension.
    Verdict {
        #[arg(long)]
        group: String,
        #[arg(long)]
        family: Family,
        #[arg(long, value_enum, default_value = "as-needed")]
        mode: Mode,
        #[command(flatten)]
        engine: Engine,
    },
    /// Recompute every published number and report.
    VerifyPaper {
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        timeout_per_check: Option<f64>,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Check groups to skip (structure, hilbert, witness, quotient, lift, squeeze, sandwich).
        #[arg(long, value_delimiter = ',')]
        skip: Vec<CheckGroup>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Alternative table of expected values.
        #[arg(long)]
        expected: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "as-needed")]
        mode: Mode,
    },
}

fn group(arg: &str) -> Result<NamedGroup, Box<dyn Error>> {
    Ok(GroupSpec::resolve_arg(arg)?.build()?)
}

fn print(v: &impl serde::Serialize) -> Result<(), Box<dyn Error>> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn profile_or_partial(r: Result<psdef::psring::HilbertProfile, PsError>) -> Result<ExitCode, Box<dyn Error>> {
    match r {
        Ok(p) => {
            print(&p)?;
            Ok(ExitCode::SUCCESS)
        }
        Err(PsError::ResourceLimit { limit, partial }) => {
            eprintln!("stopped early: {limit}");
            print(&partial)?;
            Ok(ExitCode::from(2))
        }
        Err(e) => Err(e.into()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    match cli.command {
        Command::PsDim { group: g, engine } => {
            let g = group(&g)?;
            let r = hilbert_profile(&g.group, 64, &engine.ps()?);
            if let Ok(p) = &r {
                if !p.stabilized {
                    eprintln!("no stabilization below m^65");
                    print(p)?;
                    return Ok(ExitCode::from(2));
                }
            }
            profile_or_partial(r)
        }
        Command::Hilbert { group: g, kmax, engine } => {
            let g = group(&g)?;
            profile_or_partial(hilbert_profile(&g.group, kmax, &engine.ps()?))
        }
        Command::Witness { group: g, element, k, engine } => {
            let g = group(&g)?;
            let e = g.element(&element)?;
            let m = witness_membership(&g.group, e, k, &engine.ps()?)?;
            print(&json!({ "group": g.name, "element": g.group.label(e), "k": k, "member": m }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::LiftCheck { group: g, element, mode, certificate, engine } => {
            let g = group(&g)?;
            let pres = g.presentation.as_ref().ok_or("lift-check needs a builtin group with a presentation")?;
            let word = parse_word(&element, &pres.generator_names)?;
            let model = build_lift_ideal(pres, mode.into())?;
            let t = trace_defect(&model, &word)?;
            let opts = engine.lift()?;
            let out = coeff_membership(&model, &t, &opts)?;
            let mut report = json!({
                "member": out.member,
                "mod2": out.mod2,
                "basis_size": out.basis_size,
                "max_degree": out.max_degree,
                "elapsed_s": out.elapsed.as_secs_f64(),
            });
            if certificate && out.member == Membership::Yes {
                let start = Instant::now();
                let (_, cert) = coeff_certificate(&model, &t, &opts)?;
                report["certificate"] = json!({
                    "nodes": cert.as_ref().map(|c| c.nodes.len()),
                    "verified": cert.as_ref().is_some_and(verify_certificate),
                    "elapsed_s": start.elapsed().as_secs_f64(),
                });
            }
            print(&report)?;
            Ok(if out.member == Membership::Unknown { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Command::Verdict { group: g, family, mode, engine } => {
            let g = group(&g)?;
            let opts = VerdictOptions { ps: engine.ps()?, lift: engine.lift()?, witness_mode: mode.into() };
            print(&iso_verdict(&g, family, &opts)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { jobs, timeout_per_check, cache_dir, skip, out, expected, mode } => {
            let expected = match expected {
                Some(p) => ExpectedTable::from_json(&std::fs::read_to_string(p)?)?,
                None => ExpectedTable::builtin(),
            };
            let opts = VerifyOptions {
                limits: Limits::default(),
                jobs,
                timeout_per_check: timeout_per_check.map(Duration::from_secs_f64),
                cache_dir,
                skip: skip.into_iter().collect::<BTreeSet<_>>(),
                expected,
                witness_mode: mode.into(),
            };
            let report = verify_paper(&opts)?;
            for c in &report.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIPPED",
                };
                let mut line = format!("{status:<8}{:<38}{:>8.2}s", c.id, c.elapsed_s);
                if c.status == Status::Fail {
                    line += &format!("  expected {} computed {}", c.expected, c.computed);
                }
                if let Some(n) = &c.note {
                    line += &format!("  ({n})");
                }
                eprintln!("{line}");
            }
            eprintln!("{} passed, {} failed, {} skipped", report.passed, report.failed, report.skipped);
            match out {
                Some(p) => std::fs::write(p, report.to_json())?,
                None => print!("{}", report.to_json()),
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
