//! Command-line front end for the exact dimension computations.
//!
//! Subcommands: `root info`, `weyl orbit`, `kl poly`, `kl table`,
//! `dim simple`, `dim induced`, `dim bounds`, `dim gl2ps`, `dim drinfeld`.
//!
//! Every run can emit a machine-readable JSON document (`--json`) with a
//! reproducible manifest: tool version, datum, frozen configuration bits,
//! cache statistics and the exact inputs. All numbers in the JSON output
//! are exact integers or decimal strings of rationals; no floating point
//! exists anywhere in the pipeline.
//!
//! Exit codes: 0 success, 2 usage error, 3 computation refused (rank cap),
//! 4 internal invariant violation.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use oalgdim::dimcalc::{
    dim_bounds, dim_parabolic_induction, drinfeld_dim, DrinfeldReport, PipelineConfig,
    TriangulineCase, TrianguParam,
};
use oalgdim::goldie::GoldieReport;
use oalgdim::kl::{shared_engine, KlEngine};
use oalgdim::rootdata::{build_root_datum, Orientation, Rat, RootDatum, Series, Weight};
use oalgdim::weyl::{dominant_conjugate, dot_apply, element_from_word, enumerate_group};
use oalgdim::{Error, WeylElement};

#[derive(Parser)]
#[command(
    name = "oalgdim",
    version,
    about = "Exact canonical dimensions of locally analytic representations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit a machine-readable JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Include the full audit trace in the output.
    #[arg(long, global = true)]
    trace: bool,
    /// Kazhdan-Lusztig cache file (default: $OALGDIM_CACHE_DIR/<datum>.klcache).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Load the cache but never write it back.
    #[arg(long, global = true)]
    cache_readonly: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root datum inspection.
    Root {
        #[command(subcommand)]
        sub: RootCmd,
    },
    /// Weyl group computations.
    Weyl {
        #[command(subcommand)]
        sub: WeylCmd,
    },
    /// Kazhdan-Lusztig polynomials.
    Kl {
        #[command(subcommand)]
        sub: KlCmd,
    },
    /// Dimension formulas.
    Dim {
        #[command(subcommand)]
        sub: DimCmd,
    },
}

#[derive(Args)]
struct DatumArgs {
    /// Series label: A, B, C, D, E, F, G or GL.
    #[arg(long = "type")]
    series: String,
    /// Rank (for GL: n of GL_n).
    #[arg(long)]
    rank: u8,
    /// Which root system is declared positive: upper or lower.
    #[arg(long, default_value = "upper")]
    orientation: String,
}

#[derive(Subcommand)]
enum RootCmd {
    /// Print the datum: roots, rho, t, Weyl order.
    Info {
        #[command(flatten)]
        datum: DatumArgs,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Dot-action orbit data of a weight: dominant form, singular support,
    /// maximal-length representative.
    Orbit {
        #[command(flatten)]
        datum: DatumArgs,
        /// Comma-separated exact rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
}

#[derive(Subcommand)]
enum KlCmd {
    /// One polynomial P_{x,w}.
    Poly {
        #[command(flatten)]
        datum: DatumArgs,
        /// Reduced word of x: comma-separated 1-based indices ("" = identity).
        #[arg(long, default_value = "")]
        x: String,
        /// Reduced word of w.
        #[arg(long, default_value = "")]
        w: String,
    },
    /// The full table for a datum (useful with --cache).
    Table {
        #[command(flatten)]
        datum: DatumArgs,
    },
}

#[derive(Subcommand)]
enum DimCmd {
    /// Dimension of the simple highest weight module L(lambda).
    Simple {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Dimension of a parabolic induction: dim g/p_I.
    Induced {
        #[command(flatten)]
        datum: DatumArgs,
        /// Comma-separated 1-based simple-root indices of I ("" = Borel).
        #[arg(long)]
        parabolic: String,
    },
    /// General dimension bounds with hypothesis warnings.
    Bounds {
        #[command(flatten)]
        datum: DatumArgs,
        /// Residue characteristic to check the hypotheses against.
        #[arg(long)]
        p: Option<u64>,
    },
    /// GL2(Q_p) unitary principal series dimension.
    Gl2ps {
        /// generic or special.
        #[arg(long, default_value = "generic")]
        case: String,
        #[arg(long, default_value = "delta1")]
        delta1: String,
        #[arg(long, default_value = "delta2")]
        delta2: String,
        /// Extension-line label for the special case.
        #[arg(long)]
        l: Option<String>,
    },
    /// Dimension of H^0 of a line bundle on the Drinfeld half space.
    Drinfeld {
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
}

/// Half-space dimension cap enforced by the CLI (the library cap on |W|
/// would allow d = 6, but desk-scale runtimes stop at 5).
const DRINFELD_D_CAP: u32 = 5;

enum Failure {
    Core(Error),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

impl Failure {
    fn info(&self) -> (&'static str, String, u8) {
        match self {
            Failure::Refused(msg) => ("Refused", msg.clone(), 3),
            Failure::Core(e) => {
                let kind = match e {
                    Error::UnsupportedType(_) => "UnsupportedType",
                    Error::RankTooLarge { .. } => "RankTooLarge",
                    Error::DatumMismatch(_, _) => "DatumMismatch",
                    Error::NonIntegralWeight { .. } => "NonIntegralWeight",
                    Error::OracleTooLarge { .. } => "OracleTooLarge",
                    Error::IndexOutOfRange(_) => "IndexOutOfRange",
                    Error::CorruptCache(_) => "CorruptCache",
                    Error::VersionMismatch(_) => "VersionMismatch",
                    Error::CalibrationError { .. } => "CalibrationError",
                    Error::InternalBoundViolation(_) => "InternalBoundViolation",
                    Error::InvalidInput(_) => "InvalidInput",
                    Error::Io(_) => "Io",
                };
                let code = match e {
                    Error::RankTooLarge { .. } | Error::OracleTooLarge { .. } => 3,
                    Error::InternalBoundViolation(_) | Error::CalibrationError { .. } => 4,
                    _ => 2,
                };
                (kind, e.to_string(), code)
            }
        }
    }
}

struct Outcome {
    command: String,
    inputs: Value,
    datum_desc: String,
    config: Value,
    cache: Value,
    result: Value,
    human: String,
}

fn parse_datum(args: &DatumArgs) -> Result<RootDatum, Failure> {
    let series = Series::parse(&args.series)?;
    let orientation = match args.orientation.to_ascii_lowercase().as_str() {
        "upper" => Orientation::Upper,
        "lower" => Orientation::Lower,
        other => {
            return Err(Failure::Core(Error::InvalidInput(format!(
                "orientation must be upper or lower, got {other}"
            ))))
        }
    };
    Ok(build_root_datum(series, args.rank, orientation)?)
}

fn parse_weight(datum: &RootDatum, text: &str) -> Result<Weight, Failure> {
    let coords: Result<Vec<Rat>, Failure> = text
        .split(',')
        .map(|tok| {
            BigRational::from_str(tok.trim()).map_err(|_| {
                Failure::Core(Error::InvalidInput(format!(
                    "cannot parse '{tok}' as an exact rational"
                )))
            })
        })
        .collect();
    Ok(datum.weight(coords?)?)
}

fn parse_parabolic(datum: &RootDatum, text: &str) -> Result<BTreeSet<usize>, Failure> {
    let mut out = BTreeSet::new();
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(out);
    }
    for tok in trimmed.split(',') {
        let i: usize = tok.trim().parse().map_err(|_| {
            Failure::Core(Error::InvalidInput(format!(
                "cannot parse simple-root index '{tok}'"
            )))
        })?;
        if i == 0 || i > datum.ss_rank() {
            return Err(Failure::Core(Error::IndexOutOfRange(format!(
                "simple-root index {i} out of range 1..={}",
                datum.ss_rank()
            ))));
        }
        out.insert(i - 1);
    }
    Ok(out)
}

fn parse_word(datum: &RootDatum, text: &str) -> Result<WeylElement, Failure> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "e" {
        return Ok(element_from_word(datum, &[])?);
    }
    let mut word = Vec::new();
    for tok in trimmed.split(',') {
        let i: u8 = tok.trim().parse().map_err(|_| {
            Failure::Core(Error::InvalidInput(format!(
                "cannot parse generator index '{tok}'"
            )))
        })?;
        if i == 0 {
            return Err(Failure::Core(Error::IndexOutOfRange(
                "generator indices are 1-based".to_string(),
            )));
        }
        word.push(i - 1);
    }
    Ok(element_from_word(datum, &word)?)
}

fn weight_json(w: &Weight) -> Value {
    Value::Array(
        w.coords()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn set_json(s: &BTreeSet<usize>) -> Value {
    Value::Array(s.iter().map(|i| json!(i + 1)).collect())
}

fn goldie_json(rep: &GoldieReport, trace: bool) -> Value {
    let mut v = json!({
        "dim": rep.dim,
        "m": rep.m,
        "w": rep.w.word_string(),
    });
    if trace {
        v["certificate"] = json!({
            "multi_index": rep.certificate.multi_index,
            "coefficient": rep.certificate.coefficient.to_string(),
        });
    }
    v
}

/// Cache wiring for commands that run the KL engine.
struct CacheUse {
    path: Option<PathBuf>,
    loaded: Option<usize>,
    readonly: bool,
}

fn cache_path_for(cli: &Cli, datum: &RootDatum) -> Option<PathBuf> {
    if let Some(p) = &cli.cache {
        return Some(p.clone());
    }
    std::env::var_os("OALGDIM_CACHE_DIR").map(|dir| {
        PathBuf::from(dir).join(format!("{}{}.klcache", datum.series(), datum.rank()))
    })
}

fn open_cache(cli: &Cli, datum: &RootDatum, engine: &KlEngine) -> Result<CacheUse, Failure> {
    let path = cache_path_for(cli, datum);
    let mut loaded = None;
    if let Some(p) = &path {
        if p.exists() {
            loaded = Some(engine.load_cache_file(p)?);
        }
    }
    Ok(CacheUse {
        path,
        loaded,
        readonly: cli.cache_readonly,
    })
}

fn close_cache(cache: &CacheUse, engine: &KlEngine) -> Result<Value, Failure> {
    let mut saved = false;
    if let Some(p) = &cache.path {
        if !cache.readonly {
            engine.save_cache_file(p)?;
            saved = true;
        }
    }
    let (hits, misses) = engine.cache_stats();
    Ok(json!({
        "hits": hits,
        "misses": misses,
        "records": engine.cached_records(),
        "loaded_records": cache.loaded,
        "path": cache.path.as_ref().map(|p| p.display().to_string()),
        "saved": saved,
    }))
}

fn no_cache_json() -> Value {
    json!({"hits": 0, "misses": 0, "records": 0, "loaded_records": null, "path": null, "saved": false})
}

fn datum_config_json(datum: &RootDatum) -> Value {
    json!({"orientation": datum.orientation().to_string()})
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.cmd {
        Cmd::Root { sub: RootCmd::Info { datum } } => {
            let d = parse_datum(datum)?;
            let result = json!({
                "series": d.series().to_string(),
                "rank": d.rank(),
                "orientation": d.orientation().to_string(),
                "coord_dim": d.coord_dim(),
                "semisimple_rank": d.ss_rank(),
                "num_pos_roots": d.num_pos_roots(),
                "weyl_order": d.weyl_order(),
                "rho": d.rho().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "t": d.t_vec().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "simple_roots": d.simple_roots().iter()
                    .map(|r| r.coords.clone())
                    .collect::<Vec<_>>(),
            });
            let human = format!(
                "{}: #Phi+ = {}, |W| = {}, rho = ({})",
                d.fingerprint(),
                d.num_pos_roots(),
                d.weyl_order(),
                d.rho()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            Ok(Outcome {
                command: "root info".into(),
                inputs: json!({"type": datum.series, "rank": datum.rank, "orientation": datum.orientation}),
                datum_desc: d.fingerprint().to_string(),
                config: datum_config_json(&d),
                cache: no_cache_json(),
                result,
                human,
            })
        }
        Cmd::Weyl { sub: WeylCmd::Orbit { datum, weight } } => {
            let d = parse_datum(datum)?;
            let lam = parse_weight(&d, weight)?;
            let (mu, w, s) = dominant_conjugate(&d, &lam)?;
            let stab = oalgdim::weyl::CosetData::new(&d, &s)?;
            let orbit_size = d.weyl_order() / stab.subgroup.len() as u64;
            let mut result = json!({
                "weight": weight_json(&lam),
                "dominant": weight_json(&mu),
                "w": w.word_string(),
                "w_length": w.length(),
                "singular_support": set_json(&s),
                "stabilizer_order": stab.subgroup.len(),
                "orbit_size": orbit_size,
            });
            if cli.trace {
                let mut seen = Vec::new();
                let mut orbit = Vec::new();
                for v in enumerate_group(&d) {
                    let moved = dot_apply(&d, &v, &mu)?;
                    if !seen.contains(&moved) {
                        orbit.push(json!({
                            "w": v.word_string(),
                            "weight": weight_json(&moved),
                        }));
                        seen.push(moved);
                    }
                }
                result["orbit"] = Value::Array(orbit);
            }
            let human = format!(
                "dominant = {}, w = {}, S = {:?}, orbit size {}",
                mu,
                w.word_string(),
                s.iter().map(|i| i + 1).collect::<Vec<_>>(),
                orbit_size
            );
            Ok(Outcome {
                command: "weyl orbit".into(),
                inputs: json!({"type": datum.series, "rank": datum.rank, "orientation": datum.orientation, "weight": weight}),
                datum_desc: d.fingerprint().to_string(),
                config: datum_config_json(&d),
                cache: no_cache_json(),
                result,
                human,
            })
        }
        Cmd::Kl { sub } => match sub {
            KlCmd::Poly { datum, x, w } => {
                let d = parse_datum(datum)?;
                let xe = parse_word(&d, x)?;
                let we = parse_word(&d, w)?;
                let engine = shared_engine(&d);
                let cache = open_cache(cli, &d, &engine)?;
                let p = engine.kl_poly(&xe, &we)?;
                let cache_json = close_cache(&cache, &engine)?;
                let result = json!({
                    "x": xe.word_string(),
                    "w": we.word_string(),
                    "poly": p.to_string(),
                    "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "eval_one": p.eval_one().to_string(),
                });
                let human = format!("P[{}, {}] = {}", xe.word_string(), we.word_string(), p);
                Ok(Outcome {
                    command: "kl poly".into(),
                    inputs: json!({"type": datum.series, "rank": datum.rank, "orientation": datum.orientation, "x": x, "w": w}),
                    datum_desc: d.fingerprint().to_string(),
                    config: datum_config_json(&d),
                    cache: cache_json,
                    result,
                    human,
                })
            }
            KlCmd::Table { datum } => {
                let d = parse_datum(datum)?;
                let engine = shared_engine(&d);
                let cache = open_cache(cli, &d, &engine)?;
                engine.compute_full_table()?;
                let cache_json = close_cache(&cache, &engine)?;
                let size = d.weyl_order();
                let result = json!({
                    "weyl_order": size,
                    "pairs": size * size,
                    "memoized_records": engine.cached_records(),
                });
                let human = format!(
                    "computed full table for {}: {} memoized records",
                    d.fingerprint(),
                    engine.cached_records()
                );
                Ok(Outcome {
                    command: "kl table".into(),
                    inputs: json!({"type": datum.series, "rank": datum.rank, "orientation": datum.orientation}),
                    datum_desc: d.fingerprint().to_string(),
                    config: datum_config_json(&d),
                    cache: cache_json,
                    result,
                    human,
                })
            }
        },
        Cmd::Dim { sub } => run_dim(cli, sub),
    }
}

fn run_dim(cli: &Cli, sub: &DimCmd) -> Result<Outcome, Failure> {
    match sub {
        DimCmd::Simple { datum, weight } => {
            let d = parse_datum(datum)?;
            let lam = parse_weight(&d, weight)?;
            let engine = shared_engine(&d);
            let cache = open_cache(cli, &d, &engine)?;
            let (mu, w, s) = dominant_conjugate(&d, &lam)?;
            let rep = oalgdim::goldie::goldie_degree(&d, &w)?;
            let cache_json = close_cache(&cache, &engine)?;
            let mut result = goldie_json(&rep, cli.trace);
            result["num_pos_roots"] = json!(d.num_pos_roots());
            if cli.trace {
                result["dominant"] = weight_json(&mu);
                result["singular_support"] = set_json(&s);
            }
            let human = format!("dim L({lam}) = {} (m = {}, w = {})", rep.dim, rep.m, rep.w);
            Ok(Outcome {
                command: "dim simple".into(),
                inputs: json!({"type": datum.series, "rank": datum.rank, "orientation": datum.orientation, "weight": weight}),
                datum_desc: d.fingerprint().to_string(),
                config: datum_config_json(&d),
                cache: cache_json,
                result,
                human,
            })
        }
        DimCmd::Induced { datum, parabolic } => {
            let d = parse_datum(datum)?;
            let i = parse_parabolic(&d, parabolic)?;
            let dim = dim_parabolic_induction(&d, &i)?;
            let result = json!({
                "dim": dim,
                "parabolic": set_json(&i),
                "num_pos_roots": d.num_pos_roots(),
                "levi_pos_roots": d.num_pos_roots() - dim,
            });
            let human = format!("dim Ind_P^G = {dim}");
            Ok(Outcome {
                command: "dim induced".into(),
                inputs: json!({"type": datum.series, "rank": datum.rank, "orientation": datum.orientation, "parabolic": parabolic}),
                datum_desc: d.fingerprint().to_string(),
                config: datum_config_json(&d),
                cache: no_cache_json(),
                result,
                human,
            })
        }
        DimCmd::Bounds { datum, p } => {
            let d = parse_datum(datum)?;
            let rep = dim_bounds(&d, *p)?;
            let result = json!({
                "r_min": rep.r_min,
                "upper": rep.upper,
                "hypothesis_warnings": rep.hypothesis_warnings,
            });
            let human = format!(
                "dim = 0 or {} <= dim <= {}{}",
                rep.r_min,
                rep.upper,
                if rep.hypothesis_warnings.is_empty() {
                    String::new()
                } else {
                    format!(" (warnings: {})", rep.hypothesis_warnings.join("; "))
                }
            );
            Ok(Outcome {
                command: "dim bounds".into(),
                inputs: json!({"type": datum.series, "rank": datum.rank, "orientation": datum.orientation, "p": p}),
                datum_desc: d.fingerprint().to_string(),
                config: datum_config_json(&d),
                cache: no_cache_json(),
                result,
                human,
            })
        }
        DimCmd::Gl2ps {
            case,
            delta1,
            delta2,
            l,
        } => {
            let parsed_case = match case.to_ascii_lowercase().as_str() {
                "generic" => TriangulineCase::Generic,
                "special" => TriangulineCase::Special,
                other => {
                    return Err(Failure::Core(Error::InvalidInput(format!(
                        "case must be generic or special, got {other}"
                    ))))
                }
            };
            let param = TrianguParam {
                delta1: delta1.clone(),
                delta2: delta2.clone(),
                case: parsed_case,
                l_line: l.clone(),
            };
            let rep = oalgdim::dimcalc::gl2_trianguline_dim(&param)?;
            let result = json!({
                "dim": rep.dim,
                "case": case.to_ascii_lowercase(),
                "constituents": rep.constituents.iter()
                    .map(|(name, d)| json!({"name": name, "dim": d}))
                    .collect::<Vec<_>>(),
            });
            let human = format!(
                "dim Pi(V) = {} [{}: {}]",
                rep.dim,
                case,
                rep.constituents
                    .iter()
                    .map(|(n, d)| format!("{n}={d}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            Ok(Outcome {
                command: "dim gl2ps".into(),
                inputs: json!({"case": case, "delta1": delta1, "delta2": delta2, "l": l}),
                datum_desc: "GL2/upper".into(),
                config: json!({"orientation": "upper"}),
                cache: no_cache_json(),
                result,
                human,
            })
        }
        DimCmd::Drinfeld { d, r, s } => {
            if *d < 1 || *d > DRINFELD_D_CAP {
                return Err(Failure::Refused(format!(
                    "half-space dimension d = {d} outside the supported range 1..={DRINFELD_D_CAP}"
                )));
            }
            let rank = (*d + 1) as u8;
            let gl = build_root_datum(Series::GL, rank, Orientation::Upper)?;
            let engine = shared_engine(&gl);
            let cache = open_cache(cli, &gl, &engine)?;
            let rep = drinfeld_dim(*d, *r, *s, PipelineConfig::default())?;
            let cache_json = close_cache(&cache, &engine)?;
            let result = drinfeld_json(&rep, cli.trace);
            let human = format!(
                "dim H^0(X, L_({r},{s},...)) = {} on the {d}-dimensional half space (i0 = {})",
                rep.dim, rep.i0
            );
            Ok(Outcome {
                command: "dim drinfeld".into(),
                inputs: json!({"d": d, "r": r, "s": s}),
                datum_desc: gl.fingerprint().to_string(),
                config: json!({
                    "orientation": rep.config.orientation.to_string(),
                    "pairing": rep.config.pairing.to_string(),
                }),
                cache: cache_json,
                result,
                human,
            })
        }
    }
}

fn drinfeld_json(rep: &DrinfeldReport, trace: bool) -> Value {
    let steps: Vec<Value> = rep
        .steps
        .iter()
        .map(|st| {
            let mut v = json!({
                "j": st.j,
                "v": st.v.word_string(),
                "m": st.goldie.m,
            });
            if trace {
                v["mu"] = weight_json(&st.mu);
                v["branch"] = json!(match st.branch {
                    oalgdim::dimcalc::MuBranch::Below => "w_(i-1)",
                    oalgdim::dimcalc::MuBranch::Above => "w_i",
                });
                v["z"] = json!(st.z.word_string());
                v["conjugated"] = weight_json(&st.conjugated);
                v["singular_support"] = set_json(&st.s_set);
                v["v_length"] = json!(st.v.length());
                v["certificate"] = json!({
                    "multi_index": st.goldie.certificate.multi_index,
                    "coefficient": st.goldie.certificate.coefficient.to_string(),
                });
            }
            v
        })
        .collect();
    json!({
        "dim": rep.dim,
        "d": rep.d,
        "r": rep.r,
        "s": rep.s,
        "i0": rep.i0,
        "num_pos_roots": rep.num_pos_roots,
        "steps": steps,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let doc = json!({
                    "command": out.command,
                    "result": out.result,
                    "manifest": {
                        "tool_version": env!("CARGO_PKG_VERSION"),
                        "datum": out.datum_desc,
                        "config": out.config,
                        "cache": out.cache,
                        "inputs": out.inputs,
                        "wall_time_ms": started.elapsed().as_millis() as u64,
                    },
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serialize"));
            } else {
                println!("{}", out.human);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (kind, message, code) = f.info();
            if cli.json {
                let doc = json!({
                    "error": {"kind": kind, "message": message},
                    "exit_code": code,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serialize"));
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}
