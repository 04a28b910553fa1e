//! Input formats: hypergraph JSON, ideal JSON and the plain-text ideal form
//! `x1^3*x2^3, x1^2*x2^2*x3^2, x1*x2*x3*x4`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{HypergraphSpec, IncreasingHypergraph};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// On-disk shape: `{"n": 4, "gens": [[3,3,0,0],[2,2,2,0],[1,1,1,1]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealSpec {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl IdealSpec {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        Self {
            n: ideal.n(),
            gens: ideal
                .generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .enumerate()
            .map(|(k, g)| {
                if g.len() != self.n {
                    return Err(Error::Parse(format!(
                        "generator {} has {} exponents, expected n = {}",
                        k + 1,
                        g.len(),
                        self.n
                    )));
                }
                Monomial::new(g.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimize(self.n, gens)
    }
}

/// A parsed input file.
#[derive(Debug, Clone)]
pub enum Input {
    Hypergraph(IncreasingHypergraph),
    Ideal(MonomialIdeal),
}

/// Detects the format: JSON objects with `edges` are hypergraphs, with
/// `gens` are ideals; anything else is read as a text ideal.
pub fn parse_input(text: &str) -> Result<Input> {
    let trimmed = text.trim_start();
    if !trimmed.starts_with('{') {
        return parse_ideal_text(text, None).map(Input::Ideal);
    }
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("edges").is_some() {
        let spec: HypergraphSpec =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        IncreasingHypergraph::from_spec(&spec).map(Input::Hypergraph)
    } else if value.get("gens").is_some() {
        let spec: IdealSpec =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        spec.to_ideal().map(Input::Ideal)
    } else {
        Err(Error::Parse(
            "expected a JSON object with an `edges` or `gens` key".into(),
        ))
    }
}

/// Parses `x1^3*x2^3, x3` style text. Without `n`, the ambient dimension is
/// the largest variable index mentioned.
pub fn parse_ideal_text(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut terms: Vec<Vec<(usize, u32)>> = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for raw in line.split(',') {
            let term = raw.trim();
            if term.is_empty() {
                continue;
            }
            terms.push(
                parse_term(term).map_err(|msg| {
                    Error::Parse(format!("line {}: `{term}`: {msg}", line_no + 1))
                })?,
            );
        }
    }
    let max_var = terms
        .iter()
        .flat_map(|t| t.iter().map(|(v, _)| *v))
        .max()
        .unwrap_or(1);
    let n = n.unwrap_or(max_var);
    if max_var > n {
        return Err(Error::VariableOutOfRange { index: max_var, n });
    }
    let gens = terms
        .into_iter()
        .map(|factors| {
            let mut exps = vec![0u32; n];
            for (v, e) in factors {
                exps[v - 1] = exps[v - 1].checked_add(e).ok_or(Error::Overflow)?;
            }
            Monomial::new(exps)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimize(n, gens)
}

fn parse_term(term: &str) -> std::result::Result<Vec<(usize, u32)>, String> {
    if term == "1" {
        return Ok(Vec::new());
    }
    term.split('*')
        .map(|factor| {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| format!("factor `{factor}` must look like x<i> or x<i>^<e>"))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| format!("bad variable index in `{factor}`"))?;
            if idx == 0 {
                return Err("variables are numbered from 1".into());
            }
            let exp: u32 = exp
                .trim()
                .parse()
                .map_err(|_| format!("bad exponent in `{factor}`"))?;
            Ok((idx, exp))
        })
        .collect()
}
