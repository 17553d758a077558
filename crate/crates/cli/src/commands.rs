//! Argument definitions and the five commands.

use std::fmt::Write as _;
use std::io::Read as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use trinv::algebra::{Polynomial, VarNames, Z};
use trinv::autmap::{MapError, PolyMap};
use trinv::canon::{classify, decompose_even, CanonicalForm, Classification};
use trinv::census::{
    census_classify, fixed_space_basis, spot_check, CensusReport, DegreeBounds, SpotCheck, DEFAULT_BUDGET,
};

use crate::parse::{parse_field_tag, parse_map, parse_poly, VarContext};
use crate::{CliError, Outcome, BUDGET_ENV};

#[derive(Debug, Parser)]
#[command(name = "trinv", version, about = "Triangular involutions of k[x, y, z, w] over GF(2^m)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    pub output: OutputMode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct MapInput {
    /// Map text (if it contains "->"), "-" for stdin, or a file path.
    #[arg(long)]
    pub input: String,
    /// Field tag, e.g. gf2 or gf2^2:111. Must agree with a `field:` header.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report whether a map is triangular and an involution, with its parts.
    Check(MapInput),
    /// Conjugate a triangular involution to its canonical form.
    Classify(MapInput),
    /// Build a canonical map from its parameters.
    Construct(ConstructArgs),
    /// Exhaustive census over GF(2), or a seeded spot check over GF(2^m).
    Census(CensusArgs),
    /// Fixed space of a triangular involution on k[x, y, z] up to a degree.
    Fixring(FixringArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Classify(_) => "classify",
            Command::Construct(_) => "construct",
            Command::Census(_) => "census",
            Command::Fixring(_) => "fixring",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormTag {
    I,
    Ii,
    Iii,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub form: FormTag,
    #[arg(long, default_value = "gf2")]
    pub field: String,
    /// Form (i): w -> w + f, f in k[x, y, z].
    #[arg(long)]
    pub f: Option<String>,
    /// Form (ii): z -> z + xi, xi in k[x, y] nonzero.
    #[arg(long)]
    pub xi: Option<String>,
    /// Form (ii): eta in k[x, y, t], evaluated at t = z^2 + xi z.
    #[arg(long)]
    pub eta: Option<String>,
    /// Form (iii): alpha in k[x] nonzero.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Form (iii): beta in k[x, y] nonzero.
    #[arg(long)]
    pub beta: Option<String>,
    /// Form (iii): gamma in k[g1, g2, g3, g4].
    #[arg(long)]
    pub gamma: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Phi1 {
    Free,
    Zero,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Degree bounds for phi2, phi3, phi4; "-" forces a part to zero.
    #[arg(long, default_value = "1,1,1")]
    pub bounds: String,
    /// Whether phi1 ranges over GF(2) or is fixed to zero.
    #[arg(long, value_enum, default_value_t = Phi1::Free)]
    pub phi1: Phi1,
    /// Maximum number of maps to enumerate (default from TRINV_CENSUS_BUDGET).
    #[arg(long)]
    pub budget: Option<u64>,
    /// Field; anything other than gf2 runs the seeded spot check.
    #[arg(long, default_value = "gf2")]
    pub field: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: u64,
    /// Degree of random parameters in the spot check.
    #[arg(long, default_value_t = 2)]
    pub max_degree: u32,
}

#[derive(Debug, Args)]
pub struct FixringArgs {
    #[command(flatten)]
    pub map: MapInput,
    #[arg(long, default_value_t = 2)]
    pub max_degree: u32,
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Check(a) => check(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Construct(a) => construct(a),
        Command::Census(a) => return census(a),
        Command::Fixring(a) => fixring(a),
    };
    match result {
        Ok((result, text)) => Outcome {
            result: Some(result),
            text,
            error: None,
        },
        Err(e) => Outcome {
            result: None,
            text: String::new(),
            error: Some(e),
        },
    }
}

type Done = Result<(Value, String), CliError>;

fn read_input(input: &str) -> Result<String, CliError> {
    if input.contains("->") {
        Ok(input.to_string())
    } else if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::Io(format!("{input}: {e}")))
    }
}

fn load_map(input: &MapInput) -> Result<PolyMap, CliError> {
    let requested = input.field.as_deref().map(parse_field_tag).transpose()?;
    Ok(parse_map(&read_input(&input.input)?, requested)?.map)
}

fn images_json(map: &PolyMap) -> Value {
    let names = VarNames::STANDARD;
    let obj: Map<String, Value> = map
        .images()
        .iter()
        .enumerate()
        .map(|(i, p)| (names.0[i].to_string(), json!(p.to_string())))
        .collect();
    Value::Object(obj)
}

fn check(args: &MapInput) -> Done {
    let map = load_map(args)?;
    let involution = map.is_involution()?;
    let parts = match map.triangular_parts() {
        Ok(p) => Some(p),
        Err(MapError::NotTriangular { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let mut text = format!("map: {map}\nfield: {}\n", map.spec());
    let _ = writeln!(text, "triangular: {}", parts.is_some());
    let _ = writeln!(text, "involution: {involution}");
    let parts_json = match &parts {
        Some(p) => {
            let _ = writeln!(text, "unitriangular: {}", p.is_unitriangular());
            for i in 0..4 {
                let _ = writeln!(text, "lambda{}: {}", i + 1, p.lambdas[i]);
            }
            for i in 0..4 {
                let _ = writeln!(text, "phi{}: {}", i + 1, p.phis[i]);
            }
            json!({
                "lambdas": p.lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                "phis": p.phis.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                "unitriangular": p.is_unitriangular(),
            })
        }
        None => Value::Null,
    };
    let result = json!({
        "field": map.spec().to_string(),
        "images": images_json(&map),
        "involution": involution,
        "parts": parts_json,
        "triangular": parts.is_some(),
    });
    Ok((result, text))
}

fn parameters_json(form: &CanonicalForm) -> Value {
    Value::Object(form.parameters().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

/// The classification document: form, condition, parameters, the
/// conjugator pair and whether the reconstruction matched.
pub fn classification_json(tau: &PolyMap, c: &Classification) -> Result<Value, CliError> {
    let verified = c.reconstruct()? == *tau;
    Ok(json!({
        "condition": c.condition.number(),
        "conjugator": c.conjugator.map().to_string(),
        "conjugator_inverse": c.conjugator.inverse().to_string(),
        "form": c.canonical.tag(),
        "parameters": parameters_json(&c.canonical),
        "verified": verified,
    }))
}

fn classify_cmd(args: &MapInput) -> Done {
    let tau = load_map(args)?;
    let c = classify(&tau)?;
    let doc = classification_json(&tau, &c)?;
    let mut text = format!("form: {}\ncondition: {}\n", c.canonical.tag(), c.condition);
    for (k, v) in c.canonical.parameters() {
        let _ = writeln!(text, "{k}: {v}");
    }
    let _ = writeln!(text, "conjugator: {}", c.conjugator.map());
    let _ = writeln!(text, "conjugator_inverse: {}", c.conjugator.inverse());
    let _ = writeln!(text, "verified: {}", doc["verified"]);
    Ok((doc, text))
}

fn required<'a>(value: &'a Option<String>, flag: &str, form: &str) -> Result<&'a str, CliError> {
    value
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("--form {form} requires --{flag}")))
}

fn construct(args: &ConstructArgs) -> Done {
    let spec = parse_field_tag(&args.field)?;
    let std_poly = |s: &str| parse_poly(s, spec, VarContext::Standard);
    let form = match args.form {
        FormTag::I => CanonicalForm::form_i(&std_poly(required(&args.f, "f", "i")?)?)?,
        FormTag::Ii => {
            let xi = std_poly(required(&args.xi, "xi", "ii")?)?;
            let eta = match &args.eta {
                Some(s) => parse_poly(s, spec, VarContext::Eta)?,
                None => Polynomial::zero(spec),
            };
            CanonicalForm::form_ii(&xi, &eta)?
        }
        FormTag::Iii => {
            let alpha = std_poly(required(&args.alpha, "alpha", "iii")?)?;
            let beta = std_poly(required(&args.beta, "beta", "iii")?)?;
            let gamma = match &args.gamma {
                Some(s) => parse_poly(s, spec, VarContext::Gamma)?,
                None => Polynomial::zero(spec),
            };
            CanonicalForm::form_iii(&alpha, &beta, &gamma)?
        }
    };
    let map = form.to_map()?;
    if !map.is_involution()? {
        return Err(CliError::Internal(format!("constructed map {map} is not an involution")));
    }
    let mut text = format!("{map}\n");
    for (k, v) in form.parameters() {
        let _ = writeln!(text, "{k}: {v}");
    }
    let result = json!({
        "field": spec.to_string(),
        "form": form.tag(),
        "images": images_json(&map),
        "map": map.to_string(),
        "parameters": parameters_json(&form),
    });
    Ok((result, text))
}

fn parse_bound(part: &str) -> Result<Option<u32>, CliError> {
    match part.trim() {
        "-" => Ok(None),
        s => s
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("bad degree bound '{s}' (expected an integer or '-')"))),
    }
}

/// `d2,d3,d4` with `-` for a part forced to zero.
pub fn parse_bounds(text: &str, phi1_free: bool) -> Result<DegreeBounds, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let [d2, d3, d4] = parts.as_slice() else {
        return Err(CliError::Usage(format!("--bounds takes three comma-separated values, got '{text}'")));
    };
    Ok(DegreeBounds::new(phi1_free, parse_bound(d2)?, parse_bound(d3)?, parse_bound(d4)?))
}

fn budget(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV}='{v}' is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Serializes a census report; the `failures` list is kept in index order.
pub fn report_json(report: &CensusReport) -> Value {
    json!({
        "failures": report.failures.iter().map(|f| json!({
            "index": f.index,
            "map": f.map,
            "reason": f.reason,
        })).collect::<Vec<_>>(),
        "involutions": report.involutions,
        "per_condition": {
            "1": report.per_condition[0],
            "2": report.per_condition[1],
            "3": report.per_condition[2],
        },
        "rejected": report.rejected,
        "success": report.is_success(),
        "total_maps": report.total_maps,
        "unitriangular": report.unitriangular,
    })
}

fn report_text(report: &CensusReport) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "maps: {}", report.total_maps);
    let _ = writeln!(text, "involutions: {}", report.involutions);
    let _ = writeln!(text, "rejected: {}", report.rejected);
    for (i, n) in report.per_condition.iter().enumerate() {
        let _ = writeln!(text, "condition {}: {n}", i + 1);
    }
    let _ = writeln!(text, "unitriangular: {}", report.unitriangular);
    let _ = writeln!(text, "failures: {}", report.failures.len());
    for f in &report.failures {
        let _ = writeln!(text, "  #{}: {} ({})", f.index, f.map, f.reason);
    }
    text
}

fn census(args: &CensusArgs) -> Outcome {
    let run = || -> Result<(CensusReport, Value), CliError> {
        let spec = parse_field_tag(&args.field)?;
        if spec.is_prime_field() {
            let bounds = parse_bounds(&args.bounds, args.phi1 == Phi1::Free)?;
            let report = census_classify(bounds, budget(args.budget)?)?;
            let b = json!({
                "phi1": if bounds.phi1_free { "free" } else { "zero" },
                "phi2": bounds.phi2,
                "phi3": bounds.phi3,
                "phi4": bounds.phi4,
            });
            Ok((report, json!({ "mode": "exhaustive", "bounds": b })))
        } else {
            let cfg = SpotCheck {
                samples: args.samples,
                seed: args.seed,
                max_degree: args.max_degree,
                ..SpotCheck::default()
            };
            let limit = budget(args.budget)?;
            if cfg.samples > limit {
                return Err(CliError::Budget(trinv::census::CensusError::BudgetExceeded {
                    cardinality: cfg.samples.to_string(),
                    budget: limit,
                }));
            }
            let report = spot_check(spec, cfg);
            Ok((
                report,
                json!({
                    "mode": "spot_check",
                    "field": spec.to_string(),
                    "seed": cfg.seed,
                    "samples": cfg.samples,
                    "max_degree": cfg.max_degree,
                }),
            ))
        }
    };
    match run() {
        Ok((report, mut meta)) => {
            let mut result = report_json(&report);
            for (k, v) in meta.as_object_mut().expect("object").iter_mut() {
                result[k.as_str()] = v.take();
            }
            let error = (!report.is_success())
                .then(|| CliError::Internal(format!("census recorded {} failure(s)", report.failures.len())));
            Outcome {
                result: Some(result),
                text: report_text(&report),
                error,
            }
        }
        Err(e) => Outcome {
            result: None,
            text: String::new(),
            error: Some(e),
        },
    }
}

/// Writes a fixed element `g` of the canonical map `T` in the generators
/// of its fixed ring: `k[x, y, z]` itself for form (i), `k[x, y, t]` with
/// `t = z^2 + xi z` for form (ii), `k[g1, g2, g3, g4]` for form (iii).
fn decompose_in_form(form: &CanonicalForm, g: &Polynomial) -> Result<String, CliError> {
    match form {
        CanonicalForm::I { .. } => Ok(g.to_string()),
        CanonicalForm::II { xi, .. } => Ok(decompose_even(g, Z, xi)?.render(&VarNames::ETA)),
        CanonicalForm::III(f) => {
            let base = trinv::canon::FormIii::new(f.alpha(), f.beta(), &Polynomial::zero(f.alpha().spec()))?;
            Ok(base.decompose_fixed(g)?.gamma.render(&VarNames::GAMMA))
        }
    }
}

fn fixring(args: &FixringArgs) -> Done {
    let tau = load_map(&args.map)?;
    if !tau.spec().is_prime_field() {
        return Err(CliError::FieldNotPrime);
    }
    let c = classify(&tau)?;
    let basis = fixed_space_basis(&tau, args.max_degree)?;
    let mut text = format!(
        "form: {}\ndimension: {}\n",
        c.canonical.tag(),
        basis.len()
    );
    let mut elements = Vec::new();
    for f in &basis {
        // tau = phi T phi^-1 fixes f exactly when T fixes phi^-1(f)
        let g = c.conjugator.inverse().apply(f)?;
        if c.canonical.to_map()?.apply(&g)? != g {
            return Err(CliError::Internal(format!("{f} is fixed by tau but its pullback is not fixed")));
        }
        let gamma = decompose_in_form(&c.canonical, &g).map_err(|e| match e {
            CliError::FixedRing(inner) => CliError::Internal(format!("fixed element {f} did not decompose: {inner}")),
            other => other,
        })?;
        let _ = writeln!(text, "{f}  =>  {gamma}");
        elements.push(json!({
            "element": f.to_string(),
            "pullback": g.to_string(),
            "decomposition": gamma,
        }));
    }
    let result = json!({
        "basis": elements,
        "conjugator": c.conjugator.map().to_string(),
        "dimension": basis.len(),
        "form": c.canonical.tag(),
        "max_degree": args.max_degree,
        "parameters": parameters_json(&c.canonical),
    });
    Ok((result, text))
}

#[cfg(test)]
mod tests {
    use super::*;
    use trinv::algebra::FieldSpec;

    #[test]
    fn bounds_parsing() {
        let b = parse_bounds("2,1,-", true).unwrap();
        assert_eq!(b, DegreeBounds::new(true, Some(2), Some(1), None));
        assert!(parse_bounds("1,1", true).is_err());
        assert!(parse_bounds("a,1,1", true).is_err());
        assert_eq!(parse_bounds("0,0,0", false).unwrap().cardinality(), Some(8));
    }

    #[test]
    fn budget_flag_wins() {
        assert_eq!(budget(Some(5)).unwrap(), 5);
    }

    #[test]
    fn decomposition_per_form() {
        let spec = FieldSpec::gf2();
        let one = Polynomial::one(spec);
        let form = CanonicalForm::form_ii(&one, &Polynomial::zero(spec)).unwrap();
        let z = Polynomial::var(spec, Z);
        let t = z.square().unwrap().add(&z).unwrap();
        assert_eq!(decompose_in_form(&form, &t).unwrap(), "t");
        assert!(matches!(decompose_in_form(&form, &z), Err(CliError::FixedRing(_))));
    }
}
