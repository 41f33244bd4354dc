//! Command-line interface.
//!
//! Exit codes: 0 success, 1 hypothesis violation, 2 parse or validation
//! error, 3 internal invariant failure.

use std::collections::BTreeMap;

use crate::immersion::{
    check_hypotheses, closed_form_series, imm_component, rank_series_expansion, ClosedFormVariant,
    ManifoldData, Target,
};
use crate::io::{catalog, catalog_lookup, parse_manifold};
use crate::stiefel::{build_stiefel_model, EtaClasses, XiClasses};
use crate::verify::{run_suite, SUITE_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_HYPOTHESIS: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Captured result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
}

fn out(code: i32, stdout: impl Into<String>) -> CliOutput {
    CliOutput {
        code,
        stdout: stdout.into(),
    }
}

const USAGE: &str = "usage:
  immq describe --manifold <file|catalog:NAME> --codim K
  immq series --manifold <file|catalog:NAME> --codim K [--max-degree N] [--closed-form paper|corrected]
  immq stiefel-model --m M --k K [--zero-xi-classes] [--zero-eta-classes]
  immq verify --suite <d-squared|ahl|phi|triviality|fiber-em|series-consistency> [--grid MAX]
  immq catalog
";

/// Flag parser: `--name value` pairs plus boolean switches.
struct Flags {
    values: BTreeMap<String, String>,
    switches: Vec<String>,
}

fn parse_flags(args: &[String], switch_names: &[&str]) -> Result<Flags, String> {
    let mut values = BTreeMap::new();
    let mut switches = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let Some(name) = arg.strip_prefix("--") else {
            return Err(format!("unexpected argument {arg}"));
        };
        if switch_names.contains(&name) {
            switches.push(name.to_string());
            i += 1;
        } else {
            let value = args
                .get(i + 1)
                .ok_or_else(|| format!("--{name} needs a value"))?;
            values.insert(name.to_string(), value.clone());
            i += 2;
        }
    }
    Ok(Flags { values, switches })
}

impl Flags {
    fn required(&self, name: &str) -> Result<&str, String> {
        self.values
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| format!("missing --{name}"))
    }

    fn parsed<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>, String> {
        match self.values.get(name) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| format!("invalid value for --{name}: {v}")),
        }
    }

    fn has(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }
}

fn load_manifold(source: &str) -> Result<ManifoldData, String> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return catalog_lookup(name).ok_or_else(|| format!("unknown catalog manifold {name}"));
    }
    let text = std::fs::read_to_string(source).map_err(|e| format!("cannot read {source}: {e}"))?;
    parse_manifold(&text).map_err(|e| e.to_string())
}

/// Runs the CLI on the given arguments (without the program name) and returns
/// the exit code and accumulated stdout.
pub fn run_cli(args: &[String]) -> CliOutput {
    let Some(command) = args.first() else {
        return out(EXIT_PARSE, USAGE);
    };
    match command.as_str() {
        "describe" => cmd_describe(&args[1..]),
        "series" => cmd_series(&args[1..]),
        "stiefel-model" => cmd_stiefel_model(&args[1..]),
        "verify" => cmd_verify(&args[1..]),
        "catalog" => cmd_catalog(&args[1..]),
        other => out(EXIT_PARSE, format!("unknown command {other}\n{USAGE}")),
    }
}

fn manifold_and_codim(flags: &Flags) -> Result<(ManifoldData, usize), String> {
    let manifold = load_manifold(flags.required("manifold")?)?;
    let k: usize = flags
        .parsed("codim")?
        .ok_or_else(|| "missing --codim".to_string())?;
    if k < 2 {
        return Err("--codim must be at least 2".into());
    }
    Ok((manifold, k))
}

fn cmd_describe(args: &[String]) -> CliOutput {
    let flags = match parse_flags(args, &[]) {
        Ok(f) => f,
        Err(e) => return out(EXIT_PARSE, format!("{e}\n{USAGE}")),
    };
    let (m, k) = match manifold_and_codim(&flags) {
        Ok(v) => v,
        Err(e) => return out(EXIT_PARSE, format!("{e}\n")),
    };
    let mut text = String::new();
    text.push_str(&format!("manifold: {} (dim {})\n", m.name, m.dim));
    let report = check_hypotheses(&m, k, &Target::Euclidean);
    text.push_str(&report.render());
    match imm_component(&m, k) {
        Ok(descriptor) => {
            text.push_str("component:\n");
            text.push_str(&descriptor.render());
            text.push_str(&format!(
                "component_independent: {}\n",
                descriptor.component_independent
            ));
            for note in &descriptor.notes {
                text.push_str(&format!("note: {note}\n"));
            }
            out(EXIT_OK, text)
        }
        Err(v) => {
            text.push_str(&format!("{v}\n"));
            out(EXIT_HYPOTHESIS, text)
        }
    }
}

fn cmd_series(args: &[String]) -> CliOutput {
    let flags = match parse_flags(args, &[]) {
        Ok(f) => f,
        Err(e) => return out(EXIT_PARSE, format!("{e}\n{USAGE}")),
    };
    let (m, k) = match manifold_and_codim(&flags) {
        Ok(v) => v,
        Err(e) => return out(EXIT_PARSE, format!("{e}\n")),
    };
    let max_degree = match flags.parsed::<usize>("max-degree") {
        Ok(v) => v.unwrap_or(2 * (m.dim + k) + 2),
        Err(e) => return out(EXIT_PARSE, format!("{e}\n")),
    };
    let variant = match flags.values.get("closed-form").map(String::as_str) {
        None => None,
        Some("paper") => Some(ClosedFormVariant::Paper),
        Some("corrected") => Some(ClosedFormVariant::Corrected),
        Some(other) => {
            return out(
                EXIT_PARSE,
                format!("--closed-form must be paper or corrected, got {other}\n"),
            )
        }
    };
    let expansion = match rank_series_expansion(&m, k, max_degree) {
        Ok(rs) => rs,
        Err(v) => return out(EXIT_HYPOTHESIS, format!("{v}\n")),
    };
    let mut text = String::new();
    text.push_str(&format!("{}\n", expansion.series.support_string()));
    for w in &expansion.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    if let Some(variant) = variant {
        let rf = match closed_form_series(&m, k, variant) {
            Ok(rf) => rf,
            Err(v) => {
                text.push_str(&format!("{v}\n"));
                return out(EXIT_HYPOTHESIS, text);
            }
        };
        let label = match variant {
            ClosedFormVariant::Paper => "paper",
            ClosedFormVariant::Corrected => "corrected",
        };
        text.push_str(&format!("closed-form {label}: {rf}\n"));
        let closed = rf
            .expand(max_degree)
            .expect("denominator has unit constant term");
        if closed != expansion.series {
            let mismatches: Vec<String> = (0..=max_degree)
                .filter(|&d| closed.coeff(d) != expansion.series.coeff(d))
                .map(|d| format!("{d}:{}!={}", closed.coeff(d), expansion.series.coeff(d)))
                .collect();
            text.push_str(&format!("DIFF {}\n", mismatches.join(" ")));
        }
    }
    out(EXIT_OK, text)
}

fn cmd_stiefel_model(args: &[String]) -> CliOutput {
    let flags = match parse_flags(args, &["zero-xi-classes", "zero-eta-classes"]) {
        Ok(f) => f,
        Err(e) => return out(EXIT_PARSE, format!("{e}\n{USAGE}")),
    };
    let m = match flags.parsed::<usize>("m") {
        Ok(Some(m)) => m,
        Ok(None) => return out(EXIT_PARSE, "missing --m\n"),
        Err(e) => return out(EXIT_PARSE, format!("{e}\n")),
    };
    let k = match flags.parsed::<usize>("k") {
        Ok(Some(k)) => k,
        Ok(None) => return out(EXIT_PARSE, "missing --k\n"),
        Err(e) => return out(EXIT_PARSE, format!("{e}\n")),
    };
    let xi = if flags.has("zero-xi-classes") {
        XiClasses::all_zero(m, k)
    } else {
        XiClasses::symbolic()
    };
    let eta = if flags.has("zero-eta-classes") {
        EtaClasses::all_zero(m, k)
    } else {
        EtaClasses::symbolic()
    };
    let spec = build_stiefel_model(m, k, &xi, &eta);
    if !spec.full_model.check_d_squared().pass() {
        return out(EXIT_INTERNAL, "internal invariant failure: d^2 != 0\n");
    }
    out(EXIT_OK, spec.full_model.dump())
}

fn cmd_verify(args: &[String]) -> CliOutput {
    let flags = match parse_flags(args, &[]) {
        Ok(f) => f,
        Err(e) => return out(EXIT_PARSE, format!("{e}\n{USAGE}")),
    };
    let suite = match flags.required("suite") {
        Ok(s) => s.to_string(),
        Err(e) => return out(EXIT_PARSE, format!("{e}\n")),
    };
    let grid = match flags.parsed::<usize>("grid") {
        Ok(v) => v.unwrap_or(6),
        Err(e) => return out(EXIT_PARSE, format!("{e}\n")),
    };
    let Some(result) = run_suite(&suite, grid) else {
        return out(
            EXIT_PARSE,
            format!(
                "unknown suite {suite}; available: {}\n",
                SUITE_NAMES.join(", ")
            ),
        );
    };
    suite_output(&result)
}

fn suite_output(result: &crate::verify::SuiteResult) -> CliOutput {
    let mut text = format!("{}\n", result.summary());
    for f in &result.failures {
        text.push_str(&format!("FAIL: {f}\n"));
    }
    if result.pass() {
        out(EXIT_OK, text)
    } else {
        out(EXIT_INTERNAL, text)
    }
}

fn cmd_catalog(args: &[String]) -> CliOutput {
    if !args.is_empty() {
        return out(EXIT_PARSE, format!("catalog takes no arguments\n{USAGE}"));
    }
    let mut text = String::new();
    for m in catalog() {
        let betti: Vec<String> = (0..=m.dim).map(|d| m.betti.get(d).to_string()).collect();
        text.push_str(&format!(
            "{} dim={} betti=[{}] euler_zero={} pontryagin_all_zero={}\n",
            m.name,
            m.dim,
            betti.join(","),
            m.profile.euler_zero,
            m.profile.p_zero_all
        ));
    }
    out(EXIT_OK, text)
}
