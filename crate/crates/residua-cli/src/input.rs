//! JSON ideal input: ambient dimension, optional variable names, and a
//! generator list whose entries are exponent arrays or monomial strings.
//! Generator order is preserved; essentiality depends on it.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Deserialize;

use residua::{ExponentVector, MonomialIdeal, MonomialTuple};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealInput {
    n: usize,
    #[serde(default)]
    variables: Option<Vec<String>>,
    generators: Vec<GeneratorInput>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GeneratorInput {
    Exponents(Vec<i64>),
    Monomial(String),
}

/// A validated input: the generator tuple in the order given, plus the
/// variable names used for printing.
#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    pub variables: Vec<String>,
    pub tuple: MonomialTuple,
}

impl ParsedIdeal {
    pub fn n(&self) -> usize {
        self.tuple.dim()
    }

    pub fn ideal(&self) -> MonomialIdeal {
        self.tuple.ideal()
    }
}

pub fn default_variables(n: usize) -> Vec<String> {
    if n == 2 {
        vec!["z".to_string(), "w".to_string()]
    } else {
        (1..=n).map(|i| format!("z_{i}")).collect()
    }
}

pub fn parse_input(text: &str) -> Result<ParsedIdeal, String> {
    let raw: IdealInput =
        serde_json::from_str(text).map_err(|e| format!("invalid JSON input: {e}"))?;
    if raw.n == 0 {
        return Err("ambient dimension n must be at least 1".to_string());
    }
    let variables = match raw.variables {
        Some(names) => {
            if names.len() != raw.n {
                return Err(format!(
                    "expected {} variable names, found {}",
                    raw.n,
                    names.len()
                ));
            }
            for name in &names {
                let ok = !name.is_empty()
                    && !name.chars().next().unwrap().is_ascii_digit()
                    && name.chars().all(|c| c.is_alphanumeric() || c == '_');
                if !ok {
                    return Err(format!("invalid variable name '{name}'"));
                }
            }
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != names.len() {
                return Err("variable names must be distinct".to_string());
            }
            names
        }
        None => default_variables(raw.n),
    };
    if raw.generators.is_empty() {
        return Err("generator list is empty".to_string());
    }
    let mut entries = Vec::with_capacity(raw.generators.len());
    for (pos, g) in raw.generators.iter().enumerate() {
        let entry = match g {
            GeneratorInput::Exponents(coords) => {
                if coords.len() != raw.n {
                    return Err(format!(
                        "generator {} has {} exponents, expected {}",
                        pos + 1,
                        coords.len(),
                        raw.n
                    ));
                }
                if coords.iter().any(|&c| c < 0) {
                    return Err(format!("generator {} has a negative exponent", pos + 1));
                }
                ExponentVector::from_ints(coords).map_err(|e| e.to_string())?
            }
            GeneratorInput::Monomial(s) => {
                parse_monomial(s, &variables).map_err(|e| format!("generator {}: {e}", pos + 1))?
            }
        };
        entries.push(entry);
    }
    let tuple = MonomialTuple::new(entries, raw.n).map_err(|e| e.to_string())?;
    Ok(ParsedIdeal { variables, tuple })
}

/// Grammar: "1", or '*'-separated factors `name` / `name^exponent`.
/// Repeated names accumulate. No coefficients.
pub fn parse_monomial(text: &str, variables: &[String]) -> Result<ExponentVector, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty monomial".to_string());
    }
    let mut exponents = vec![0i64; variables.len()];
    if text == "1" {
        return ExponentVector::from_ints(&exponents).map_err(|e| e.to_string());
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(format!("empty factor in monomial '{text}'"));
        }
        let (name, power) = match factor.split_once('^') {
            Some((name, raw)) => {
                let power: i64 = raw
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad exponent '{raw}' in monomial '{text}'"))?;
                if power < 0 {
                    return Err(format!("negative exponent in monomial '{text}'"));
                }
                (name.trim(), power)
            }
            None => (factor, 1),
        };
        let index = variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| format!("unknown variable '{name}' in monomial '{text}'"))?;
        exponents[index] = exponents[index]
            .checked_add(power)
            .ok_or_else(|| format!("exponent overflow in monomial '{text}'"))?;
    }
    ExponentVector::from_ints(&exponents).map_err(|e| e.to_string())
}

/// Inverse of the grammar: "1" for the constant, '*'-joined factors with
/// '^' only for exponents above 1.
pub fn monomial_string(e: &ExponentVector, variables: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, name) in variables.iter().enumerate() {
        let x = e.get(i);
        if x.is_zero() {
            continue;
        }
        if x.is_one() {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{x}"));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Checked narrowing for JSON output.
pub fn int64(x: &BigInt) -> Result<i64, String> {
    i64::try_from(x).map_err(|_| format!("value {x} exceeds the 64-bit output range"))
}
