//! Argument parsing and dispatch for the `chowcalc` binary.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use chowcalc::bounds::{self, enumerate_admissible_c3, p3_bounds, vanishing_thresholds, worst_case_report, BoundReport, Mode};
use chowcalc::chow::{character_to_chern, chern_to_character, todd, ChernClasses};
use chowcalc::monad::{self, dual_complex_shape, kernel_presentation, monad_shape, partition_types, stratum_dims, MonadShape};
use chowcalc::resolution::{c3_of, presentation_report, resolution_shapes, resolved_character, verify_resolution_chern};
use chowcalc::splitting::enumerate_splitting_types;
use chowcalc::{ChernCharacter, Rational, ShapeDescriptor, SplittingType};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value as Json};
use thiserror::Error;

use crate::catalog;
use crate::config::{Config, IntRange};
use crate::entry::Catalog;
use crate::output::{Format, Output};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] chowcalc::Error),
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}: not a valid catalog: {message}")]
    BadCatalog { path: PathBuf, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Domain(_) => "domain",
            CliError::Io { .. } => "io",
            CliError::BadCatalog { .. } => "catalog",
        }
    }

    pub fn to_json(&self) -> String {
        format!("{}\n", json!({ "error": { "kind": self.kind(), "message": self.to_string() } }))
    }
}

#[derive(Debug, Parser)]
#[command(name = "chowcalc", version, about = "Exact Chern-class arithmetic and cohomology bounds on P^2 and P^3")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Todd class of P^2 or P^3.
    Todd {
        #[arg(long)]
        dim: i64,
    },
    /// Convert between Chern classes and Chern characters.
    Chern(ChernArgs),
    /// Euler characteristic by Riemann-Roch.
    Euler {
        /// Chern character components, comma separated.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_list)]
        ch: RationalList,
        /// Twist by O(k) first.
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<i64>,
    },
    /// Restrict a P^3 character to a hyperplane (and push it forward again).
    Restrict {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_list)]
        ch: RationalList,
    },
    /// Cohomology, Euler and ch_3 bounds.
    Bound(BoundArgs),
    /// Integer interval of c_3 allowed by the ch_3 bound.
    #[command(name = "enumerate-c3")]
    EnumerateC3 {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
    /// Enumerate splitting types allowed by the magnitude (and gap) constraints.
    #[command(name = "splitting-types")]
    SplittingTypes {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1: i64,
        /// Do not apply the gap <= 2 filter.
        #[arg(long)]
        no_gap: bool,
    },
    /// Two-term resolution of a rank-two reflexive sheaf on P^3 with c_1 = -1.
    Resolution {
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        /// Check ch(R^0) - ch(R^-1) against the expected character.
        #[arg(long)]
        verify: bool,
    },
    /// Linear monad of a normalized sheaf on P^2.
    Monad {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        ch2: Rational,
        /// Also report the dualized monad.
        #[arg(long)]
        dual: bool,
    },
    /// Partition types of zero-dimensional sheaves of a given length.
    Partitions {
        #[arg(long, allow_hyphen_values = true)]
        length: i64,
        /// With --charge, report stratum dimensions for each type.
        #[arg(long, allow_hyphen_values = true, requires = "charge")]
        rank: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "rank")]
        charge: Option<i64>,
    },
    /// Batch enumeration over grids.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Compare two catalog files.
    Diff { left: PathBuf, right: PathBuf },
}

#[derive(Debug, Args)]
pub struct ChernArgs {
    /// Ambient dimension for classes -> character.
    #[arg(long, default_value_t = 3)]
    pub dim: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub rank: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c2: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c3: Option<i64>,
    /// Convert a character back to Chern classes instead.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_list, conflicts_with_all = ["rank", "c1", "c2", "c3"])]
    pub ch: Option<RationalList>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub rank: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub c1: i64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub ch2: Rational,
    /// Splitting type for per-type bounds; worst case when omitted.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int_list)]
    pub splitting: Option<IntList>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub ch3: Option<Rational>,
    /// Evaluate formulas verbatim without clamping negative factors.
    #[arg(long)]
    pub literal: bool,
}

#[derive(Debug, Args)]
pub struct CatalogOpts {
    /// key=value file presetting grid ranges; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write the catalog here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// (c_2, s, c_3, partition type) strata labels.
    Strata {
        #[arg(long, allow_hyphen_values = true)]
        c2: Option<IntRange>,
        #[arg(long, allow_hyphen_values = true)]
        l: Option<IntRange>,
        #[command(flatten)]
        opts: CatalogOpts,
    },
    /// Admissible resolutions with presentation dimensions.
    Resolutions {
        #[arg(long, allow_hyphen_values = true)]
        c2: Option<IntRange>,
        #[command(flatten)]
        opts: CatalogOpts,
    },
    /// Worst-case bounds and c_3 intervals.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        rank: Option<IntRange>,
        #[arg(long, allow_hyphen_values = true)]
        c1: Option<IntRange>,
        #[arg(long, allow_hyphen_values = true)]
        c2: Option<IntRange>,
        #[command(flatten)]
        opts: CatalogOpts,
    },
    /// Linear monad shapes.
    Monads {
        #[arg(long, allow_hyphen_values = true)]
        rank: Option<IntRange>,
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<IntRange>,
        #[command(flatten)]
        opts: CatalogOpts,
    },
    /// Compare two catalog files.
    Diff { left: PathBuf, right: PathBuf },
}

pub type RationalList = Vec<Rational>;
pub type IntList = Vec<i64>;

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|e: chowcalc::Error| e.to_string())
}

fn parse_rational_list(s: &str) -> Result<RationalList, String> {
    s.split(',').map(parse_rational).collect()
}

fn parse_int_list(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("invalid integer {t:?}")))
        .collect()
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = out.write_all(output.render(cli.format).as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "chowcalc: {} error: {e}", e.kind());
            let _ = out.write_all(e.to_json().as_bytes());
            e.exit_code()
        }
    }
}

fn s(x: impl ToString) -> Json {
    Json::String(x.to_string())
}

fn list<T: ToString>(xs: impl IntoIterator<Item = T>) -> Json {
    Json::Array(xs.into_iter().map(s).collect())
}

fn record(pairs: Vec<(&str, Json)>) -> Map<String, Json> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn character(components: RationalList) -> Result<ChernCharacter, CliError> {
    Ok(ChernCharacter::from_components(components)?)
}

fn classes_json(c: &ChernClasses) -> Json {
    let mut m = record(vec![("rank", s(c.rank)), ("c1", s(c.c1)), ("c2", s(c.c2))]);
    if let Some(c3) = c.c3 {
        m.insert("c3".into(), s(c3));
    }
    Json::Object(m)
}

fn shape_json(shape: &ShapeDescriptor) -> Json {
    Json::Array(
        shape
            .summands()
            .iter()
            .map(|&(t, e)| json!({ "twist": t.to_string(), "exponent": e.to_string() }))
            .collect(),
    )
}

fn report_json(r: &BoundReport) -> Map<String, Json> {
    record(vec![
        ("rank", s(r.rank)),
        ("c1", s(r.c1)),
        ("ch2", s(&r.ch2)),
        ("splitting_radius", s(&r.splitting_radius)),
        ("q", s(&r.q)),
        ("q_int", s(&r.q_int)),
        ("h_bounds", list(&r.h_bounds)),
        ("euler_bound", s(&r.euler_bound)),
        ("ch3_bound", s(&r.ch3_bound)),
        ("literal_mode", Json::Bool(r.literal_mode)),
    ])
}

fn monad_json(m: &MonadShape) -> Json {
    json!({
        "v": m.v.to_string(),
        "w": m.w.to_string(),
        "u": m.u.to_string(),
        "left": shape_json(&m.left()),
        "middle": shape_json(&m.middle()),
        "right": shape_json(&m.right()),
        "display": m.to_string(),
    })
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let out = match &cli.command {
        Command::Todd { dim } => Output::Record(record(vec![("components", list(todd(*dim)?.components()))])),

        Command::Chern(args) => match &args.ch {
            Some(ch) => {
                let x = character(ch.clone())?;
                let c = character_to_chern(&x)?;
                Output::Record(record(vec![
                    ("dim", s(x.ambient().dim())),
                    ("classes", classes_json(&c)),
                    ("components", list(x.components())),
                ]))
            }
            None => {
                let need = |v: Option<i64>, name: &str| {
                    v.ok_or_else(|| CliError::Usage(format!("chern: --{name} is required unless --ch is given")))
                };
                let classes = ChernClasses {
                    rank: need(args.rank, "rank")?,
                    c1: need(args.c1, "c1")?,
                    c2: need(args.c2, "c2")?,
                    c3: if args.dim == 3 { Some(args.c3.unwrap_or(0)) } else { None },
                };
                let x = chern_to_character(&classes, args.dim)?;
                Output::Record(record(vec![
                    ("dim", s(args.dim)),
                    ("classes", classes_json(&classes)),
                    ("components", list(x.components())),
                ]))
            }
        },

        Command::Euler { ch, twist } => {
            let mut x = character(ch.clone())?;
            if let Some(k) = twist {
                x = x.twist(*k);
            }
            Output::Record(record(vec![
                ("dim", s(x.ambient().dim())),
                ("components", list(x.components())),
                ("euler", s(x.euler_characteristic())),
            ]))
        }

        Command::Restrict { ch } => {
            let x = character(ch.clone())?;
            let restricted = x.restrict_to_hyperplane()?;
            let pushed = x.pushforward_from_hyperplane()?;
            Output::Record(record(vec![
                ("restricted", list(restricted.components())),
                ("euler_restricted", s(restricted.euler_characteristic())),
                ("pushforward", list(pushed.components())),
                ("euler_pushforward", s(pushed.euler_characteristic())),
            ]))
        }

        Command::Bound(args) => {
            let mode = if args.literal { Mode::Literal } else { Mode::Clamped };
            match &args.splitting {
                None => Output::Record(report_json(&worst_case_report(args.rank, args.c1, &args.ch2, mode)?)),
                Some(entries) => {
                    let b = SplittingType::new(entries.clone())?;
                    let x = ChernCharacter::from_components(vec![
                        Rational::from(args.rank),
                        Rational::from(args.c1),
                        args.ch2.clone(),
                        args.ch3.clone().unwrap_or_default(),
                    ])?;
                    let mut m = report_json(&p3_bounds(&b, &x, mode)?);
                    let th = vanishing_thresholds(&b, &args.ch2);
                    m.insert("splitting_type".into(), list(b.entries()));
                    m.insert(
                        "h1_invariant_bound".into(),
                        s(bounds::h1_invariant_bound(&b, &args.ch2)),
                    );
                    m.insert(
                        "vanishing_thresholds".into(),
                        json!({
                            "h0_negative": th.h0_negative.to_string(),
                            "h2_positive": th.h2_positive.to_string(),
                            "h1_positive": th.h1_positive.to_string(),
                            "h1_negative": th.h1_negative.to_string(),
                        }),
                    );
                    Output::Record(m)
                }
            }
        }

        Command::EnumerateC3 { rank, c1, c2 } => {
            let iv = enumerate_admissible_c3(*rank, *c1, *c2)?;
            let ch2 = bounds::ch2_of_classes(*c1, *c2);
            Output::Record(record(vec![
                ("rank", s(rank)),
                ("c1", s(c1)),
                ("c2", s(c2)),
                ("ch2", s(&ch2)),
                ("ch3_bound", s(bounds::ch3_bound(*rank, *c1, &ch2)?)),
                ("c3_min", s(iv.min)),
                ("c3_max", s(iv.max)),
                ("count", s(iv.len())),
            ]))
        }

        Command::SplittingTypes { rank, c1, no_gap } => {
            let items = enumerate_splitting_types(*rank, *c1, !no_gap)?
                .into_iter()
                .map(|b| record(vec![("entries", list(b.entries())), ("c1", s(b.c1()))]))
                .collect();
            Output::List { key: "splitting_types", items }
        }

        Command::Resolution { c2, s: sv, verify } => {
            let (r_minus, r_zero) = resolution_shapes(*c2, *sv)?;
            let pres = presentation_report(*c2, *sv)?;
            let mut m = record(vec![
                ("c2", s(c2)),
                ("s", s(sv)),
                ("c3", s(c3_of(*c2, *sv)?)),
                ("r_minus", shape_json(&r_minus)),
                ("r_zero", shape_json(&r_zero)),
                ("display", s(format!("0 -> {r_minus} -> {r_zero} -> F -> 0"))),
                ("character", list(resolved_character(*c2, *sv)?.components())),
                (
                    "presentation",
                    json!({
                        "dim_hom": pres.dim_hom.to_string(),
                        "dim_pv": pres.dim_pv.to_string(),
                        "dim_g": pres.dim_g.to_string(),
                        "quot_factor": "symbolic",
                    }),
                ),
            ]);
            if *verify {
                m.insert("chern_consistent".into(), Json::Bool(verify_resolution_chern(*c2, *sv)?));
            }
            Output::Record(m)
        }

        Command::Monad { rank, c1, ch2, dual } => {
            let m = monad_shape(*rank, *c1, ch2)?;
            let charge = monad::charge(*rank, *c1, ch2);
            let mut rec = record(vec![
                ("rank", s(rank)),
                ("c1", s(c1)),
                ("ch2", s(ch2)),
                ("charge", s(&charge)),
                ("monad", monad_json(&m)),
            ]);
            if *dual {
                rec.insert("dual".into(), monad_json(&dual_complex_shape(&m)));
            }
            if m.v == 0 {
                // c + d = 0: F is the kernel of O^{r+c} -> O(1)^c
                let k = kernel_presentation(*rank, m.u as i64)?;
                rec.insert(
                    "kernel_presentation".into(),
                    json!({
                        "surjection_source": shape_json(&k.surjection.source),
                        "surjection_target": shape_json(&k.surjection.target),
                        "hom_dim": k.hom_dim.to_string(),
                    }),
                );
            }
            Output::Record(rec)
        }

        Command::Partitions { length, rank, charge } => {
            let mut items = Vec::new();
            for lambda in partition_types(*length)? {
                let mut m = record(vec![
                    ("partition", s(&lambda)),
                    ("points", s(lambda.points())),
                    ("total", s(lambda.total())),
                ]);
                if let (Some(r), Some(c)) = (rank, charge) {
                    let d = stratum_dims(*r, *c, &lambda)?;
                    m.insert("hom_dim".into(), s(d.hom_dim));
                    m.insert("projective_dim".into(), d.projective_dim.map_or(Json::Null, s));
                    m.insert("aut_left".into(), s(d.aut_left));
                    m.insert("aut_middle".into(), s(d.aut_middle));
                    m.insert("aut_lambda".into(), d.aut_lambda.map_or(s("unknown"), s));
                }
                items.push(m);
            }
            Output::List { key: "partition_types", items }
        }

        Command::Catalog { command } => run_catalog(command, cli.format)?,

        Command::Diff { left, right } => diff_files(left, right)?,
    };
    Ok(out)
}

fn load_config(path: Option<&Path>) -> Result<Config, CliError> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| CliError::Io { path: p.into(), message: e.to_string() })?;
            Config::parse(&text).map_err(CliError::Usage)
        }
    }
}

fn pick(flag: Option<IntRange>, config: &Config, key: &str) -> Result<IntRange, CliError> {
    if let Some(r) = flag {
        return Ok(r);
    }
    config
        .range(key)
        .map_err(CliError::Usage)?
        .ok_or_else(|| CliError::Usage(format!("missing --{key} (not set in config either)")))
}

fn run_catalog(command: &CatalogCommand, format: Format) -> Result<Output, CliError> {
    let (catalog, opts) = match command {
        CatalogCommand::Diff { left, right } => return diff_files(left, right),
        CatalogCommand::Strata { c2, l, opts } => {
            let cfg = load_config(opts.config.as_deref())?;
            (catalog::strata(pick(*c2, &cfg, "c2")?, pick(*l, &cfg, "l")?)?, opts)
        }
        CatalogCommand::Resolutions { c2, opts } => {
            let cfg = load_config(opts.config.as_deref())?;
            (catalog::resolutions(pick(*c2, &cfg, "c2")?)?, opts)
        }
        CatalogCommand::Bounds { rank, c1, c2, opts } => {
            let cfg = load_config(opts.config.as_deref())?;
            (
                catalog::bounds(pick(*rank, &cfg, "rank")?, pick(*c1, &cfg, "c1")?, pick(*c2, &cfg, "c2")?)?,
                opts,
            )
        }
        CatalogCommand::Monads { rank, charge, opts } => {
            let cfg = load_config(opts.config.as_deref())?;
            (catalog::monads(pick(*rank, &cfg, "rank")?, pick(*charge, &cfg, "charge")?)?, opts)
        }
    };
    match &opts.out {
        None => Ok(Output::Catalog(catalog)),
        Some(path) => {
            let count = catalog.entries.len();
            let text = Output::Catalog(catalog).render(format);
            fs::write(path, text).map_err(|e| CliError::Io { path: path.clone(), message: e.to_string() })?;
            Ok(Output::Record(record(vec![
                ("path", s(path.display())),
                ("entries", s(count)),
            ])))
        }
    }
}

fn read_catalog(path: &Path) -> Result<Catalog, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io { path: path.into(), message: e.to_string() })?;
    Catalog::from_json(&text).map_err(|e| CliError::BadCatalog { path: path.into(), message: e.to_string() })
}

fn diff_files(left: &Path, right: &Path) -> Result<Output, CliError> {
    let d = catalog::diff(&read_catalog(left)?, &read_catalog(right)?);
    let to_json = |es: &[crate::entry::CatalogEntry]| serde_json::to_value(es).expect("entries serialize");
    Ok(Output::Record(record(vec![
        ("identical", Json::Bool(d.identical)),
        ("params_differ", Json::Bool(d.params_differ)),
        ("only_left", to_json(&d.only_left)),
        ("only_right", to_json(&d.only_right)),
    ])))
}
