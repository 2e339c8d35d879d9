//! The `tighthb` command line.
//!
//! Exit codes: 0 success (and TIGHT for `check`), 1 invalid input, 2
//! OVERTWISTED, 3 configuration space over `--limit`, 64 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::chord::{enumerate_diagrams, euler_invariant, Sign};
use crate::error::Error;
use crate::graph::{classify_graph, explore, is_tight, ExploreOptions, DEFAULT_LIMIT};
use crate::io::{parse, render_dot, render_report, Document};
use crate::oracles::{solid_torus_count, NegativeSlope};
use crate::surface::Handlebody;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_OVERTWISTED: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "tighthb",
    version,
    about = "Classify tight contact structures on handlebodies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Exploration {
    /// Largest configuration space to explore.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: u128,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

impl Exploration {
    fn options(&self) -> ExploreOptions {
        ExploreOptions {
            workers: self.workers,
            limit: self.limit,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a presentation file.
    Validate { file: PathBuf },
    /// Count tight contact structures and list the allowable components.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        exploration: Exploration,
    },
    /// Decide whether the file's `config` lines describe a tight structure.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u128,
    },
    /// Write the transition graph in Graphviz format.
    Graph {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        exploration: Exploration,
    },
    /// List all chord diagrams with n chords.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Reference counts computed independently of the classifier.
    Oracle {
        #[command(subcommand)]
        which: Oracle,
    },
}

#[derive(Subcommand, Debug)]
enum Oracle {
    /// Tight structures on a solid torus with boundary slope -p/q.
    SolidTorus {
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
    },
}

fn load(path: &Path, err: &mut dyn Write) -> Result<Document, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return Err(EXIT_INVALID);
        }
    };
    parse(&text).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", path.display());
        EXIT_INVALID
    })
}

fn failure(e: &Error, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e.root() {
        Error::ResourceLimit { .. } => EXIT_LIMIT,
        _ => EXIT_INVALID,
    }
}

fn handlebody(doc: &Document, err: &mut dyn Write) -> Result<Handlebody, i32> {
    Handlebody::new(doc.presentation.clone()).map_err(|e| failure(&e, err))
}

/// Runs the command line with the given arguments (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) | Err(code) => code,
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, i32> {
    match command {
        Command::Validate { file } => {
            let doc = load(&file, err)?;
            let h = handlebody(&doc, err)?;
            let sizes: Vec<String> = h.disk_sizes().iter().map(|n| n.to_string()).collect();
            let r = h.report();
            let _ = writeln!(
                out,
                "valid: genus {}, disk sizes ({}), {} boundary dividing curve(s){}",
                h.genus(),
                sizes.join(","),
                r.boundary_curves,
                if r.certificate_checked {
                    ", boundary certified tight"
                } else {
                    ""
                }
            );
            for w in &r.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            Ok(EXIT_OK)
        }
        Command::Classify { file, exploration } => {
            let doc = load(&file, err)?;
            let h = handlebody(&doc, err)?;
            let g = explore(&h, &exploration.options()).map_err(|e| failure(&e, err))?;
            let report = classify_graph(&h, &g);
            let _ = write!(out, "{}", render_report(&doc.presentation, &report));
            Ok(EXIT_OK)
        }
        Command::Check { file, limit } => {
            let doc = load(&file, err)?;
            let Some(c) = doc.configuration.clone() else {
                let _ = writeln!(err, "error: {} has no `config` lines", file.display());
                return Err(EXIT_USAGE);
            };
            let h = handlebody(&doc, err)?;
            let v = is_tight(&h, &c, limit).map_err(|e| failure(&e, err))?;
            if v.tight {
                let _ = writeln!(out, "TIGHT");
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(out, "OVERTWISTED");
                if v.witness.is_empty() {
                    let _ = writeln!(out, "  {c} is not potentially allowable");
                } else {
                    let _ = writeln!(out, "  from {c}");
                    for t in &v.witness {
                        let _ = writeln!(out, "  -> {}  [{}]", t.target, t.witness);
                    }
                }
                Ok(EXIT_OVERTWISTED)
            }
        }
        Command::Graph {
            file,
            out: path,
            exploration,
        } => {
            let doc = load(&file, err)?;
            let h = handlebody(&doc, err)?;
            let g = explore(&h, &exploration.options()).map_err(|e| failure(&e, err))?;
            if let Err(e) = std::fs::write(&path, render_dot(&g)) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return Err(EXIT_INVALID);
            }
            let _ = writeln!(
                out,
                "wrote {} nodes, {} edges to {}",
                g.nodes.len(),
                g.edges.len(),
                path.display()
            );
            Ok(EXIT_OK)
        }
        Command::Enumerate { n } => {
            if n > 12 {
                let _ = writeln!(err, "error: n = {n} is too large to list (at most 12)");
                return Err(EXIT_USAGE);
            }
            for d in enumerate_diagrams(n) {
                let _ = writeln!(out, "{d}  euler {:+}", euler_invariant(&d, Sign::Plus));
            }
            Ok(EXIT_OK)
        }
        Command::Oracle {
            which: Oracle::SolidTorus { slope },
        } => {
            let s: NegativeSlope = slope.parse().map_err(|e| {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            })?;
            let _ = writeln!(out, "{}", solid_torus_count(s));
            Ok(EXIT_OK)
        }
    }
}
