//! Command-line front-end: analysis, verification sweeps and polygon figures.
//!
//! Exit codes: 0 on success, 1 when a verification sweep finds violations,
//! 2 on usage or input errors.

mod svg;

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use genscale::dft::{seminorm_with_tolerance, DEFAULT_TOLERANCE};
use genscale::real_gen::{format_rational, j_sequence, parse_rational};
use genscale::verify::{self, Report};
use genscale::{
    alpha_stability_interval, chopin_check, classify, dft, enumerate_generators, interval_vector,
    j_set, p_generators_finite, p_infinite_generators, p_set, Error, GenSpec, RationalPoint, Scale,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "genscale", version, about = "Generators of scales in Z_c")]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    json_pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Combined report for a scale given as "c:p1,p2,...".
    Analyze { scale: String },
    /// Generator steps of a scale.
    Generators { scale: String },
    /// Kind of generated scale and predicted number of generators.
    Classify { scale: String },
    /// Oriented interval vector.
    Ivec { scale: String },
    /// Discrete Fourier transform and coprime seminorm.
    Dft {
        scale: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Complement check: shared generators and translate embedding.
    Complement { scale: String },
    /// J set {floor(k·alpha) mod c : 0 <= k < d}; alpha given as "p/q".
    Jset { alpha: String, c: u32, d: u32 },
    /// P set {k·x mod 1 : 0 <= k < d}; x given as "p/q".
    Pset { x: String, d: u32 },
    /// Exhaustive verification sweeps, written as JSON lines.
    Verify {
        check: Check,
        #[arg(long, default_value_t = 24)]
        cmax: u32,
        /// Modulus for the dft sweep.
        #[arg(long, default_value_t = 12)]
        c: u32,
        /// Scale size for the dft sweep.
        #[arg(long, default_value_t = 7)]
        d: u32,
    },
    /// SVG drawing of the scale on a c-gon.
    PolygonSvg {
        scale: String,
        /// Step whose generation path is drawn; defaults to the smallest.
        #[arg(long)]
        generator: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Totient,
    Classification,
    Chopin,
    Dft,
}

enum Outcome {
    Ok,
    Violations,
}

fn parse_scale(text: &str) -> Result<Scale> {
    text.parse::<Scale>().map_err(Into::into)
}

fn print_json(value: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    println!("{}", text.expect("JSON values always serialize"));
}

fn generators_json(s: &Scale) -> Result<Value> {
    let r = enumerate_generators(s)?;
    Ok(json!({ "steps": r.steps(), "count": r.count }))
}

fn classify_json(s: &Scale) -> Result<Value> {
    let k = classify(s)?;
    Ok(json!({ "kind": k.kind.name(), "predicted": k.predicted_count }))
}

fn dft_json(s: &Scale, tolerance: f64) -> Result<Value> {
    let spectrum = dft(s);
    let mut out = serde_json::to_value(&spectrum)?;
    let norm = match seminorm_with_tolerance(s, tolerance) {
        Ok(n) => json!({ "value": n.value, "argmax": n.argmax }),
        Err(Error::PreconditionViolated(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    out["seminorm"] = norm;
    Ok(out)
}

fn analyze(s: &Scale) -> Result<Value> {
    let k = classify(s)?;
    let r = enumerate_generators(s)?;
    let starts: BTreeMap<String, Vec<u32>> = r
        .generators
        .iter()
        .map(|(f, a)| (f.to_string(), a.iter().copied().collect()))
        .collect();
    let spectrum = dft(s);
    let seminorm = seminorm_with_tolerance(s, DEFAULT_TOLERANCE)
        .ok()
        .map(|n| json!({ "value": n.value, "argmax": n.argmax }));
    let chopin = match chopin_check(s) {
        Ok(report) => serde_json::to_value(report)?,
        Err(Error::TrivialScale { .. }) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    Ok(json!({
        "scale": s,
        "classification": { "kind": k.kind.name(), "m": k.m, "predicted": k.predicted_count },
        "generators": { "steps": r.steps(), "count": r.count, "starts": starts },
        "interval_vector": interval_vector(s).values(),
        "magnitudes": spectrum.magnitudes,
        "seminorm": seminorm,
        "chopin": chopin,
    }))
}

fn jset(alpha: &str, c: u32, d: u32) -> Result<Value> {
    let alpha = parse_rational(alpha)?;
    let scale = j_set(alpha, c, d)?;
    let stability = match alpha_stability_interval(alpha, c, d) {
        Ok((lo, hi)) => json!([format_rational(&lo), format_rational(&hi)]),
        Err(_) => Value::Null,
    };
    Ok(json!({
        "alpha": format_rational(&alpha),
        "c": c,
        "d": d,
        "sequence": j_sequence(alpha, c, d),
        "scale": scale,
        "stability": stability,
    }))
}

fn pset(x: &str, d: u32) -> Result<Value> {
    let x: RationalPoint = x.parse()?;
    let set = p_set(x, d)?;
    let finite = match p_generators_finite(&set) {
        Ok(g) => serde_json::to_value(g)?,
        Err(Error::HypothesisViolated(_) | Error::PreconditionViolated(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    Ok(json!({
        "x": x,
        "d": d,
        "points": set.points,
        "finite_generators": finite,
        "infinite_generators": p_infinite_generators(x),
    }))
}

fn run_verify(check: Check, cmax: u32, c: u32, d: u32) -> Result<Outcome> {
    let report: Report = match check {
        Check::Totient => verify::verify_totient_theorem(cmax)?,
        Check::Classification => verify::verify_classification(cmax)?,
        Check::Chopin => verify::verify_chopin(cmax)?,
        Check::Dft => verify::verify_dft_maximality(c, d)?,
    };
    print!("{}", report.to_json_lines());
    let violations = report.violation_count();
    eprintln!("violations: {violations}");
    Ok(if violations == 0 { Outcome::Ok } else { Outcome::Violations })
}

fn polygon_svg(s: &Scale, generator: Option<u32>) -> Result<String> {
    let path = if s.is_empty() {
        if generator.is_some() {
            bail!("the empty scale has no generators");
        }
        None
    } else {
        let r = enumerate_generators(s)?;
        let chosen = match generator {
            Some(f) => {
                let f = f % s.modulus();
                if !r.generators.contains_key(&f) {
                    bail!("{f} does not generate {s}; generators are {:?}", r.steps());
                }
                Some(f)
            }
            None => r.generators.keys().copied().find(|&f| f != 0),
        };
        chosen.map(|f| {
            let start = *r.generators[&f].first().expect("every step has a start");
            let spec = GenSpec::new(s.modulus(), i64::from(start), i64::from(f), s.len() as u32)
                .expect("scale size is within the modulus");
            let c = u64::from(spec.c);
            (0..u64::from(spec.length))
                .map(|k| ((u64::from(start) + k * u64::from(f)) % c) as u32)
                .collect::<Vec<u32>>()
        })
    };
    Ok(svg::render(s, path.as_deref()))
}

fn run(cli: Cli) -> Result<Outcome> {
    let pretty = cli.json_pretty;
    let value = match cli.command {
        Command::Analyze { scale } => analyze(&parse_scale(&scale)?)?,
        Command::Generators { scale } => generators_json(&parse_scale(&scale)?)?,
        Command::Classify { scale } => classify_json(&parse_scale(&scale)?)?,
        Command::Ivec { scale } => json!(interval_vector(&parse_scale(&scale)?).values()),
        Command::Dft { scale, tolerance } => {
            if !(tolerance.is_finite() && tolerance >= 0.0) {
                bail!("tolerance must be a non-negative number");
            }
            dft_json(&parse_scale(&scale)?, tolerance)?
        }
        Command::Complement { scale } => serde_json::to_value(chopin_check(&parse_scale(&scale)?)?)?,
        Command::Jset { alpha, c, d } => jset(&alpha, c, d)?,
        Command::Pset { x, d } => pset(&x, d)?,
        Command::Verify { check, cmax, c, d } => return run_verify(check, cmax, c, d),
        Command::PolygonSvg { scale, generator } => {
            let s = parse_scale(&scale).context("bad scale")?;
            print!("{}", polygon_svg(&s, generator)?);
            return Ok(Outcome::Ok);
        }
    };
    print_json(&value, pretty);
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
