//! `trinomial`: batch front end for classification, family generation,
//! curve searches and verification.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on a
//! usage or input error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use trinomial_core::elliptic::{self, OffCurvePoint, RegisteredCurve};
use trinomial_core::families::{self, FamilyId, FamilyInfo, FamilySample};
use trinomial_core::search::{self, ClaimComparison, FoundPoint, SquareConditionCurve};
use trinomial_core::verify::{self, VerificationReport, VerifyOptions};
use trinomial_core::{factor_over_q, Factorization, Poly, Rational, ReducibilityType, Trinomial};

/// Like `println!`, but a closed stdout (e.g. `| head`) is not an error.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! put {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser, Debug)]
#[command(name = "trinomial", version, about = "Reducibility types of rational trinomials x^n + Ax^m + B")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
}

impl Output {
    fn json(self) -> bool {
        self.json || self.format == Format::Json
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reducibility type and factors of x^n + Ax^m + B.
    Classify {
        n: u32,
        m: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        out: Output,
    },
    /// Factor a polynomial over Q, given as comma-separated coefficients
    /// from the constant term up (e.g. `780,-341,0,0,0,1`).
    Factor {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        #[command(flatten)]
        out: Output,
    },
    /// Trinomials of a registry family at the given parameters, its listed
    /// cases when it has none, or random parameters with `--random`.
    Generate {
        family: String,
        /// Parameter values; negative fractions go after `--`.
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        /// Draw this many random parameter tuples of height at most `--height`.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 100)]
        height: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also classify each trinomial.
        #[arg(long)]
        classify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Rational points of bounded height on a square-condition curve.
    Search {
        curve: String,
        #[arg(long, default_value_t = 100)]
        height: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Run the verification checks of one statement, or all of them.
    Verify {
        theorem: Option<String>,
        #[arg(long, conflicts_with = "theorem")]
        all: bool,
        /// Height bound for curve point searches.
        #[arg(long, default_value_t = 100)]
        height: u64,
        /// Height bound for (A, B) scans.
        #[arg(long, default_value_t = 30)]
        scan_height: u64,
        /// Coordinate bound for ternary searches.
        #[arg(long, default_value_t = 50)]
        ternary_height: u64,
        /// Specializations per parametric identity.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[command(flatten)]
        out: Output,
    },
    /// The sporadic reducible trinomials with their types.
    Sporadic {
        #[command(flatten)]
        out: Output,
    },
    /// The parametric family registry.
    Families {
        #[command(flatten)]
        out: Output,
    },
    /// Elliptic curve registry and square-condition curve presets.
    Curves {
        #[command(flatten)]
        out: Output,
    },
}

/// `classify` output.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub trinomial: Trinomial,
    #[serde(rename = "type")]
    pub rtype: ReducibilityType,
    pub factorization: Factorization,
}

/// `generate --classify` output.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedSample {
    #[serde(flatten)]
    pub sample: FamilySample,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub rtype: Option<ReducibilityType>,
}

/// `search` output.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub curve: SquareConditionCurve,
    pub height: u64,
    pub points: Vec<FoundPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ClaimComparison>,
}

/// `sporadic` output row.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SporadicRow {
    pub trinomial: Trinomial,
    pub factor: Poly,
    pub divides: bool,
    #[serde(rename = "type")]
    pub rtype: ReducibilityType,
}

/// `curves` output.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CurveListing {
    pub elliptic: Vec<RegisteredCurve>,
    pub off_curve: Vec<OffCurvePoint>,
    pub square_condition: Vec<SquareConditionCurve>,
}

/// Input error: reported on stderr, exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn rational(arg: &str, what: &str) -> Result<Rational, UsageError> {
    arg.parse()
        .map_err(|e| UsageError(format!("{what}: {e}")))
}

fn emit<T: Serialize>(value: &T) -> Result<(), UsageError> {
    out!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn factors_text(f: &Factorization) -> String {
    let mut parts = Vec::new();
    if !f.scalar.is_one() {
        parts.push(f.scalar.to_string());
    }
    for (p, e) in &f.factors {
        if *e == 1 {
            parts.push(format!("({p})"));
        } else {
            parts.push(format!("({p})^{e}"));
        }
    }
    parts.join(" * ")
}

fn classify(t: Trinomial) -> Result<Classification, UsageError> {
    let (rtype, factorization) = t.classify()?;
    Ok(Classification { trinomial: t, rtype, factorization })
}

fn random_params(rng: &mut ChaCha8Rng, arity: usize, height: u64) -> Vec<Rational> {
    let h = height.max(1) as i64;
    (0..arity)
        .map(|_| {
            let num = rng.gen_range(-h..=h);
            let den = rng.gen_range(1..=h);
            Rational::from(num) / Rational::from(den)
        })
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Classify { n, m, a, b, out } => {
            let t = Trinomial::new(n, m, rational(&a, "A")?, rational(&b, "B")?)?;
            let c = classify(t)?;
            if out.json() {
                emit(&c)?;
            } else {
                out!("{}", c.trinomial);
                out!("type {}", c.rtype);
                out!("factors {}", factors_text(&c.factorization));
            }
        }
        Command::Factor { coeffs, out } => {
            let f: Poly = coeffs.parse()?;
            let fac = factor_over_q(&f)?;
            if out.json() {
                emit(&fac)?;
            } else {
                out!("{f}");
                out!("type {}", ReducibilityType::new(fac.degrees()));
                out!("factors {}", factors_text(&fac));
            }
        }
        Command::Generate { family, params, random, height, seed, classify: with_type, out } => {
            let id: FamilyId = family.parse()?;
            let samples = match random {
                Some(count) => {
                    let arity = families::family_info(id).arity;
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let mut v = Vec::with_capacity(count);
                    for _ in 0..count {
                        let p = random_params(&mut rng, arity, height);
                        v.extend(families::generate(id, &p)?);
                    }
                    v
                }
                None => {
                    let p = params
                        .iter()
                        .enumerate()
                        .map(|(i, s)| rational(s, &format!("parameter {}", i + 1)))
                        .collect::<Result<Vec<_>, _>>()?;
                    families::generate(id, &p)?
                }
            };
            let rows = samples
                .into_iter()
                .map(|sample| {
                    let rtype = if with_type && sample.trinomial.is_admissible() {
                        Some(sample.trinomial.reducibility_type()?)
                    } else {
                        None
                    };
                    Ok(ClassifiedSample { sample, rtype })
                })
                .collect::<Result<Vec<_>, UsageError>>()?;
            if out.json() {
                emit(&rows)?;
            } else {
                for r in &rows {
                    print_sample(r);
                }
            }
        }
        Command::Search { curve, height, out } => {
            let c: SquareConditionCurve = curve.parse()?;
            let points = search::search_square_values(&c, height)?;
            let comparison =
                (!c.claimed_points.is_empty()).then(|| search::compare_with_claims(&c, &points, height));
            let res = SearchResult { curve: c, height, points, comparison };
            if out.json() {
                emit(&res)?;
            } else {
                print_search(&res);
            }
        }
        Command::Verify { theorem, all, height, scan_height, ternary_height, samples, out } => {
            let opts = VerifyOptions {
                curve_height: height,
                scan_height,
                ternary_height,
                samples,
                ..VerifyOptions::default()
            };
            let reports: Vec<VerificationReport> = match (theorem, all) {
                (_, true) => verify::verify_all(&opts),
                (Some(id), false) => vec![verify::verify_theorem(&id, &opts)?],
                (None, false) => return Err(UsageError("give a statement id or --all".into())),
            };
            if out.json() {
                emit(&reports)?;
            } else {
                for r in &reports {
                    put!("{}", verify::render_text(r));
                    if let Some(ms) = r.elapsed_ms {
                        eprintln!("{}: {ms} ms", r.theorem);
                    }
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Sporadic { out } => {
            let rows = families::fixed_cases(FamilyId::SPORADIC7)
                .into_iter()
                .map(|s| {
                    let factor = s.claimed_factors[0].clone();
                    Ok(SporadicRow {
                        divides: factor.divides(&s.trinomial.poly()),
                        rtype: s.trinomial.reducibility_type()?,
                        trinomial: s.trinomial,
                        factor,
                    })
                })
                .collect::<Result<Vec<_>, UsageError>>()?;
            if out.json() {
                emit(&rows)?;
            } else {
                for r in &rows {
                    out!("{:<40} type {:<8} divisor {}", r.trinomial.to_string(), r.rtype.to_string(), r.factor);
                }
            }
            if rows.iter().any(|r| !r.divides) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Families { out } => {
            let list: Vec<FamilyInfo> = families::list_families();
            if out.json() {
                emit(&list)?;
            } else {
                for f in &list {
                    let ty = f.claimed_type.as_ref().map(|t| t.to_string()).unwrap_or_else(|| "-".into());
                    let params = if f.params.is_empty() { "-".into() } else { f.params.join(",") };
                    out!(
                        "{:<14} n={:<2} m={:<2} params={:<8} type={:<12} cases={} {}",
                        f.id.as_str(),
                        f.n,
                        f.m,
                        params,
                        ty,
                        f.fixed_cases,
                        f.exclusions
                    );
                }
            }
        }
        Command::Curves { out } => {
            let listing = CurveListing {
                elliptic: elliptic::curve_registry(),
                off_curve: elliptic::validate_registry(),
                square_condition: search::curve_presets(),
            };
            if out.json() {
                emit(&listing)?;
            } else {
                for c in &listing.elliptic {
                    out!("{:<10} {}", c.key, c.curve);
                }
                for p in &listing.off_curve {
                    out!("off curve: {} {} (lhs {}, rhs {})", p.key, p.point, p.lhs, p.rhs);
                }
                for c in &listing.square_condition {
                    out!("{:<10} {}", c.key, c.description);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_sample(r: &ClassifiedSample) {
    let s = &r.sample;
    let params: Vec<String> = s.params.iter().map(|p| p.to_string()).collect();
    let head = match &s.label {
        Some(l) => format!("[{l}]"),
        None => format!("({})", params.join(", ")),
    };
    let mut line = format!("{head} {}", s.trinomial);
    if let Some(t) = &r.rtype {
        line.push_str(&format!("  type {t}"));
    }
    if !s.constraint_ok {
        line.push_str("  (inadmissible)");
    } else if s.degenerate {
        line.push_str("  (degenerate)");
    }
    out!("{line}");
    if !s.claimed_factors.is_empty() {
        let f: Vec<String> = s.claimed_factors.iter().map(|p| format!("({p})")).collect();
        out!("  = {}", f.join(" * "));
    }
}

fn print_search(r: &SearchResult) {
    out!("{} ({}) up to height {}", r.curve.key, r.curve.description, r.height);
    for p in &r.points {
        let params: Vec<String> = p.params.iter().map(|x| x.to_string()).collect();
        let mut line = format!("  {} = ({})  sqrt {}", r.curve.parameter, params.join(", "), p.sqrt);
        if !p.completions.is_empty() {
            let w: Vec<String> = p.completions.iter().map(|x| x.to_string()).collect();
            line.push_str(&format!("  w in {{{}}}", w.join(", ")));
        }
        out!("{line}");
    }
    if let Some(c) = &r.comparison {
        out!(
            "stated set {} up to height {}",
            if c.matches_up_to_height { "reproduced" } else { "NOT reproduced" },
            r.height
        );
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
