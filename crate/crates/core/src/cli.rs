//! The `gamecat` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 semantically invalid
//! input, 3 a law check found failures, 4 a Hom enumeration exceeded its
//! budget. Output files are written atomically, so a failing command never
//! leaves a partial file.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::constructions::{
    coequalizer, coproduct, coproduct_fixed, equalizer, exponential, exponential_fixed, product, product_fixed,
    pushout_shared_players,
};
use crate::equilibria::{lemma_nash_check, nash_equilibria, preserves_ne, weak_nash_equilibria};
use crate::error::{Error, Result};
use crate::game::{identify_outcomes, partition_merging, Game, OutcomeClass};
use crate::hom::{enumerate_hom, enumerate_hom_fixed};
use crate::io;
use crate::morphism::{classify_morphism, Morphism};
use crate::strategic::from_strategic;
use crate::verify::{check_law, GenParams};

#[derive(Parser, Debug)]
#[command(name = "gamecat", version, about = "Strategic games as multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Out {
    /// Output file.
    #[arg(short = 'o', long = "output", value_name = "OUT")]
    output: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a game document; prints each violation.
    Validate { file: PathBuf },
    /// Convert a strategic-form document into a game.
    FromStrategic {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Collapse classes of outcomes into single outcomes.
    Identify {
        file: PathBuf,
        /// Comma-separated outcomes forming one class; repeatable.
        #[arg(long, required = true, value_name = "A,B[,C...]")]
        merge: Vec<String>,
        /// Label of the merged outcome, one per `--merge` in order.
        #[arg(long)]
        label: Vec<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Print the Nash equilibria, one per line.
    Nash {
        file: PathBuf,
        /// Weak Nash equilibria instead.
        #[arg(long)]
        weak: bool,
    },
    /// Check a morphism document; prints each violation.
    CheckMorphism { file: PathBuf },
    Product {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Games over one shared player list.
        #[arg(long)]
        fixed: bool,
        #[command(flatten)]
        out: Out,
    },
    Coproduct {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        fixed: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Glue two games along the players they share.
    Pushout {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    Equalizer {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    Coequalizer {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// The game BASE^EXPONENT of morphisms EXPONENT → BASE.
    Exp {
        base: PathBuf,
        exponent: PathBuf,
        #[arg(long)]
        fixed: bool,
        #[command(flatten)]
        out: Out,
    },
    /// List every morphism SRC → DST.
    Hom {
        src: PathBuf,
        dst: PathBuf,
        /// Print only the number of morphisms.
        #[arg(long)]
        count: bool,
        /// Only morphisms with the identity player map.
        #[arg(long)]
        fixed: bool,
    },
    /// Monic, epic and iso for a morphism with an identity player map.
    Classify { file: PathBuf },
    /// Whether a morphism sends equilibria to equilibria.
    PreservesNe { file: PathBuf },
    ExportDot {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Check a law on seeded random games; prints the report.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    law: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 2)]
    max_players: usize,
    #[arg(long, default_value_t = 3)]
    max_outcomes: usize,
    #[arg(long, default_value_t = 0.5)]
    access_density: f64,
    #[arg(long, default_value_t = 0.5)]
    pref_density: f64,
}

/// Text for stdout and the exit code.
struct Done {
    stdout: String,
    code: i32,
}

impl Done {
    fn ok(stdout: impl Into<String>) -> Done {
        Done {
            stdout: stdout.into(),
            code: 0,
        }
    }
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| format!("{x}\n")).collect()
}

fn games(files: &[PathBuf]) -> Result<Vec<Arc<Game>>> {
    files.iter().map(|f| io::load_game(f).map(Arc::new)).collect()
}

fn valid_morphism(path: &Path) -> Result<Morphism> {
    io::load_morphism(path)?.validated()
}

fn save(g: &Game, out: &Out) -> Result<Done> {
    io::save_game(g, &out.output)?;
    Ok(Done::ok(""))
}

fn execute(command: Command) -> Result<Done> {
    match command {
        Command::Validate { file } => match io::load_game(&file) {
            Ok(_) => Ok(Done::ok("valid\n")),
            Err(Error::InvalidGame(v)) => Ok(Done {
                stdout: lines(&v),
                code: 2,
            }),
            Err(e) => Err(e),
        },
        Command::FromStrategic { file, out } => save(&from_strategic(&io::load_strategic(&file)?)?, &out),
        Command::Identify {
            file,
            merge,
            label,
            out,
        } => {
            let g = io::load_game(&file)?;
            let groups: Vec<Vec<&str>> = merge.iter().map(|m| m.split(',').map(str::trim).collect()).collect();
            if label.len() > groups.len() {
                return Err(Error::NotAPartition("more labels than merged classes".into()));
            }
            let classes: Vec<OutcomeClass> = groups
                .iter()
                .enumerate()
                .map(|(k, members)| match label.get(k) {
                    Some(l) => OutcomeClass::labeled(members, l),
                    None => OutcomeClass::new(members),
                })
                .collect();
            save(&identify_outcomes(&g, &partition_merging(&g, &classes))?, &out)
        }
        Command::Nash { file, weak } => {
            let g = io::load_game(&file)?;
            let selected = if weak {
                weak_nash_equilibria(&g)
            } else {
                nash_equilibria(&g)
            };
            Ok(Done::ok(lines(selected.iter().map(|&o| &g.outcomes()[o]))))
        }
        Command::CheckMorphism { file } => {
            let m = io::load_morphism(&file)?;
            let v = m.violations();
            Ok(if v.is_empty() {
                Done::ok("valid\n")
            } else {
                Done {
                    stdout: lines(&v),
                    code: 2,
                }
            })
        }
        Command::Product { files, fixed, out } => {
            let gs = games(&files)?;
            let c = if fixed { product_fixed(&gs)? } else { product(&gs)? };
            save(&c.game, &out)
        }
        Command::Coproduct { files, fixed, out } => {
            let gs = games(&files)?;
            let c = if fixed {
                coproduct_fixed(&gs)?
            } else {
                coproduct(&gs)?
            };
            save(&c.game, &out)
        }
        Command::Pushout { first, second, out } => {
            let gs = games(&[first, second])?;
            save(&pushout_shared_players(&gs[0], &gs[1])?.game, &out)
        }
        Command::Equalizer { f, g, out } => {
            save(&equalizer(&valid_morphism(&f)?, &valid_morphism(&g)?)?.game, &out)
        }
        Command::Coequalizer { f, g, out } => {
            save(&coequalizer(&valid_morphism(&f)?, &valid_morphism(&g)?)?.game, &out)
        }
        Command::Exp {
            base,
            exponent,
            fixed,
            out,
        } => {
            let h = Arc::new(io::load_game(&base)?);
            let g = Arc::new(io::load_game(&exponent)?);
            let e = if fixed {
                exponential_fixed(&g, &h)?
            } else {
                exponential(&g, &h)?
            };
            save(&e.game, &out)
        }
        Command::Hom {
            src,
            dst,
            count,
            fixed,
        } => {
            let g = Arc::new(io::load_game(&src)?);
            let h = Arc::new(io::load_game(&dst)?);
            let ms = if fixed {
                enumerate_hom_fixed(&g, &h)?
            } else {
                enumerate_hom(&g, &h)?
            };
            Ok(Done::ok(if count {
                format!("{}\n", ms.len())
            } else {
                io::canonical_json(&ms.iter().map(io::maps_value).collect::<Vec<_>>())
            }))
        }
        Command::Classify { file } => Ok(Done::ok(io::canonical_json(&classify_morphism(&valid_morphism(
            &file,
        )?)?))),
        Command::PreservesNe { file } => {
            let m = io::load_morphism(&file)?;
            let preserves = preserves_ne(&m)?;
            let report = serde_json::json!({
                "preserves_ne": preserves,
                "lemma": lemma_nash_check(&m),
            });
            Ok(Done::ok(io::canonical_json(&report)))
        }
        Command::ExportDot { file, out } => {
            io::write_atomic(&out.output, &io::to_dot(&io::load_game(&file)?))?;
            Ok(Done::ok(""))
        }
        Command::Verify(a) => {
            let params = GenParams {
                max_players: a.max_players,
                max_outcomes: a.max_outcomes,
                access_density: a.access_density,
                pref_density: a.pref_density,
                seed: a.seed,
            };
            if !(0.0..=1.0).contains(&params.access_density) || !(0.0..=1.0).contains(&params.pref_density) {
                return Err(Error::Precondition("densities must lie in [0, 1]".into()));
            }
            let report = check_law(&a.law, &params, a.trials)?;
            Ok(Done {
                stdout: report.to_json(),
                code: if report.ok() { 0 } else { 3 },
            })
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code. Diagnostics go to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    match execute(cli.command) {
        Ok(done) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(done.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return 1;
            }
            done.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
