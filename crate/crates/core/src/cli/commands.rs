use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use super::{BracketName, Command, Payload, SuiteName};
use crate::algebra::{CentralPolynomial, Rational};
use crate::modules::{ModuleError, ModuleFamily};
use crate::text::{
    act_text, parse_element, parse_expression, parse_polynomial, parse_psi, parse_signed_rational, read_family,
    read_nplus, ParseError, ReadError, TextError,
};
use crate::verify::{self, BracketRules, SuiteConfig};
use crate::whittaker::{
    central_decomposition, extract_wxi, extract_wxi_choice, hom_space, in_line_ipsi, is_surjective_hom,
    structure_predicates, whittaker_vectors, WhittakerError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn status(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<WhittakerError> for CliError {
    fn from(e: WhittakerError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ReadError> for CliError {
    fn from(e: ReadError) -> Self {
        match e {
            ReadError::Text(TextError::Module(m)) => m.into(),
            other => CliError::Parse(other.to_string()),
        }
    }
}

pub(super) fn dispatch(command: &Command) -> Result<Payload, CliError> {
    match command {
        Command::NormalOrder { expr } => normal_order(expr),
        Command::Act { family, expr, element } => act(family, expr, element),
        Command::Whittaker { family, psi, level } => whittaker(family, psi, *level),
        Command::Hom { p, q, surjective, r } => hom(p.as_deref(), q, *surjective, r.as_deref()),
        Command::Decompose { factors } => decompose(factors),
        Command::ExtractWxi { element, xi } => extract(element, xi),
        Command::ValidateN { spec } => validate(spec),
        Command::Verify { suite, seed, cases, bracket, timings } => run_verify(*suite, *seed, *cases, *bracket, *timings),
    }
}

fn normal_order(expr: &str) -> Result<Payload, CliError> {
    let result = parse_expression(expr)?.evaluate().to_string();
    Ok(Payload::new(result.clone(), json!({ "input": expr, "result": result })))
}

fn family_arg(spec: &str) -> Result<Arc<ModuleFamily>, CliError> {
    Ok(Arc::new(read_family(spec)?))
}

fn act(family: &str, expr: &str, element: &str) -> Result<Payload, CliError> {
    let family = family_arg(family)?;
    let result = act_text(&crate::algebra::Virasoro, &family, expr, element)?.to_string();
    Ok(Payload::new(
        result.clone(),
        json!({ "family": family.name(), "expr": expr, "element": element, "result": result }),
    ))
}

fn whittaker(family: &str, psi: &str, level: u32) -> Result<Payload, CliError> {
    let family = family_arg(family)?;
    let psi = parse_psi(psi)?;
    let basis = whittaker_vectors(&family, &psi, level)?;
    let vectors: Vec<String> = basis.vectors.iter().map(ToString::to_string).collect();
    let text = match vectors.as_slice() {
        [] => "dim Wh = 0".to_string(),
        [v] => format!("dim Wh = 1; basis: {v}"),
        many => format!("dim Wh = {}\n{}", many.len(), many.join("\n")),
    };
    Ok(Payload::new(
        text,
        json!({
            "family": family.name(),
            "psi": [psi.psi1.to_string(), psi.psi2.to_string()],
            "level": level,
            "dimension": vectors.len(),
            "basis": vectors,
        }),
    ))
}

fn polynomial(name: &str, text: &str) -> Result<CentralPolynomial, CliError> {
    parse_polynomial(text).map_err(|e| CliError::Parse(format!("--{name}: {e}")))
}

fn hom(p: Option<&str>, q: &str, surjective: bool, r: Option<&str>) -> Result<Payload, CliError> {
    let q = polynomial("q", q)?;
    if surjective {
        let (Some(r), None) = (r, p) else {
            return Err(CliError::Usage("hom --surjective takes --r and --q".into()));
        };
        let r = polynomial("r", r)?;
        let onto = is_surjective_hom(&r, &q)?;
        return Ok(Payload::new(
            format!("surjective: {onto}"),
            json!({ "r": r.to_string(), "q": q.to_string(), "surjective": onto }),
        ));
    }
    let (Some(p), None) = (p, r) else {
        return Err(CliError::Usage("hom takes --p and --q (or --surjective --r --q)".into()));
    };
    let h = hom_space(&polynomial("p", p)?, &q)?;
    Ok(Payload::new(
        format!("dim Hom = {}; gcd: {}; multiplier: {}", h.dimension, h.gcd, h.multiplier),
        json!({
            "p": h.p.to_string(),
            "q": h.q.to_string(),
            "gcd": h.gcd.to_string(),
            "dimension": h.dimension,
            "multiplier": h.multiplier.to_string(),
        }),
    ))
}

/// Reads `"ξ:a,ξ:a,..."`; positions in errors are 1-based columns of
/// `text`.
fn parse_factors(text: &str) -> Result<Vec<(Rational, u32)>, CliError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for item in text.split(',') {
        let Some(colon) = item.rfind(':') else {
            return Err(ParseError { position: offset + 1, message: "expected 'xi:multiplicity'".into() }.into());
        };
        let xi = parse_signed_rational(&item[..colon], offset + 1)?;
        let mult_text = item[colon + 1..].trim();
        let mult: u32 = mult_text.parse().map_err(|_| ParseError {
            position: offset + colon + 2,
            message: format!("expected a nonnegative integer multiplicity, found '{mult_text}'"),
        })?;
        out.push((xi, mult));
        offset += item.len() + 1;
    }
    Ok(out)
}

fn decompose(factors: &str) -> Result<Payload, CliError> {
    let d = central_decomposition(&parse_factors(factors)?)?;
    let mut lines = Vec::new();
    let mut summands = Vec::new();
    for (i, (xi, a)) in d.factors.iter().enumerate() {
        let ann = d.summand_annihilator(i);
        lines.push(format!("xi = {xi}: length {a}, annihilator {ann}"));
        summands.push(json!({ "xi": xi.to_string(), "length": a, "annihilator": ann.to_string() }));
    }
    lines.push(format!("total length {}; annihilator {}", d.total_length(), d.polynomial()));
    Ok(Payload::new(
        lines.join("\n"),
        json!({ "summands": summands, "total_length": d.total_length(), "annihilator": d.polynomial().to_string() }),
    ))
}

fn extract(element: &str, xi: &str) -> Result<Payload, CliError> {
    let xi = parse_signed_rational(xi, 1).map_err(|e| CliError::Parse(format!("--xi: {e}")))?;
    let family = Arc::new(ModuleFamily::universal(xi));
    let v = parse_element(element, &family)?;
    let (gamma, j) = extract_wxi_choice(&v)?;
    let w = extract_wxi(&v)?;
    Ok(Payload::new(
        format!("gamma = {gamma}, j = {j}\n{w}"),
        json!({ "gamma": gamma.parts(), "j": j, "result": w.to_string() }),
    ))
}

fn validate(spec: &str) -> Result<Payload, CliError> {
    let module = read_nplus(spec)?;
    let report = module.validate();
    if !report.is_valid() {
        return Err(CliError::Domain(report.to_string()));
    }
    let psi = module.psi();
    let mut lines = vec![report.to_string(), format!("psi = {psi}")];
    let mut alphas = Vec::new();
    for (k, alpha) in module.superdiagonal().iter().enumerate() {
        let member = in_line_ipsi(alpha, &psi);
        let relation = if member { "in" } else { "not in" };
        lines.push(format!("alpha({}, {}) = {alpha}, {relation} C*i_psi", k + 1, k + 2));
        alphas.push(json!({ "alpha": alpha.to_string(), "in_line": member }));
    }
    let mut doc = json!({
        "valid": true,
        "dimension": module.dim(),
        "xi": module.xi().to_string(),
        "psi": [psi.psi1.to_string(), psi.psi2.to_string()],
        "superdiagonal": alphas,
    });
    if !psi.is_zero() {
        let level = module.dim() as u32 + 3;
        let s = structure_predicates(&module, level)?;
        lines.push(format!(
            "dim Wh = {} at level {level}; uniserial predicted: {}; completely reducible predicted: {}",
            s.dim_wh, s.is_uniserial_predicted, s.is_completely_reducible_predicted
        ));
        doc["structure"] = json!({
            "level": level,
            "dim_wh": s.dim_wh,
            "length": s.length,
            "w_count": s.w_count,
            "uniserial_predicted": s.is_uniserial_predicted,
            "completely_reducible_predicted": s.is_completely_reducible_predicted,
            "bound_ok": s.bound_ok,
        });
    }
    Ok(Payload::new(lines.join("\n"), doc))
}

fn run_verify(suite: SuiteName, seed: u64, cases: Option<usize>, bracket: BracketName, timings: bool) -> Result<Payload, CliError> {
    let mut cfg = SuiteConfig::with_seed(seed);
    if let Some(cases) = cases {
        cfg.cases = cases;
    }
    cfg.rules = match bracket {
        BracketName::Virasoro => BracketRules::Virasoro,
        BracketName::Corrupted => BracketRules::Corrupted,
    };
    let report = match suite {
        SuiteName::Core => verify::verify_core_identities(&cfg),
        SuiteName::Lemmas => verify::verify_expansion_lemmas(&cfg),
        SuiteName::Theorems => verify::verify_whittaker_theorems(&cfg),
        SuiteName::Actions => verify::verify_module_actions(&cfg),
        SuiteName::All => verify::run_all(&cfg),
    };
    let mut payload = Payload::new(report.to_text(timings), report.to_json(timings));
    payload.failed = !report.passed();
    Ok(payload)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    #[test]
    fn factor_lists() {
        assert_eq!(parse_factors("1:2, -1/2:1").unwrap(), vec![(int(1), 2), (frac(-1, 2), 1)]);
        assert!(matches!(parse_factors("1:2,3"), Err(CliError::Parse(m)) if m.contains("position 5")));
        assert!(matches!(parse_factors("1:x"), Err(CliError::Parse(_))));
    }
}
