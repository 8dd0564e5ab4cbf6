//! JSON encodings for states, decompositions and verdicts.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::criteria::Verdict;
use crate::error::{Error, Result};
use crate::product::{ProductVector, Term, WeightedDecomposition};
use crate::state::{XState, DEFAULT_TOL};

type Pair = [f64; 2];

fn pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

fn complex(p: Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateJson {
    a: [f64; 4],
    b: [f64; 4],
    c: [Pair; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tol: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    w: f64,
    x: [Pair; 2],
    y: [Pair; 2],
    z: [Pair; 2],
}

#[derive(Debug, Serialize, Deserialize)]
struct DecompositionJson {
    terms: Vec<TermJson>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Parses `{"a":[..4], "b":[..4], "c":[[re,im]..4], "tol"?}`; a missing `tol` uses the default.
pub fn parse_state(text: &str) -> Result<XState> {
    let raw: StateJson = serde_json::from_str(text).map_err(parse_err)?;
    state_from_raw(raw)
}

fn state_from_raw(raw: StateJson) -> Result<XState> {
    XState::new(raw.a, raw.b, raw.c.map(complex), raw.tol.unwrap_or(DEFAULT_TOL))
}

pub fn state_to_value(s: &XState) -> Value {
    let tol = (s.tol() != DEFAULT_TOL).then_some(s.tol());
    serde_json::to_value(StateJson { a: s.a(), b: s.b(), c: s.c().map(pair), tol })
        .expect("state encodes")
}

pub fn decomposition_to_value(d: &WeightedDecomposition) -> Value {
    let terms = d
        .terms
        .iter()
        .map(|t| TermJson {
            w: t.weight,
            x: t.vector.x.map(pair),
            y: t.vector.y.map(pair),
            z: t.vector.z.map(pair),
        })
        .collect();
    serde_json::to_value(DecompositionJson { terms }).expect("decomposition encodes")
}

/// Reads `{"terms":[{"w", "x", "y", "z"}]}`; vectors are taken as given.
pub fn parse_decomposition(text: &str) -> Result<WeightedDecomposition> {
    let raw: DecompositionJson = serde_json::from_str(text).map_err(parse_err)?;
    let terms = raw
        .terms
        .into_iter()
        .map(|t| Term {
            weight: t.w,
            vector: ProductVector::new(t.x.map(complex), t.y.map(complex), t.z.map(complex)),
        })
        .collect();
    Ok(WeightedDecomposition { terms })
}

/// `{"tag", "criterion"?, "system"?, "lhs"?, "rhs"?, "route"?, "certificate"?}`.
pub fn verdict_to_value(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("tag".into(), json!(v.tag()));
    match v {
        Verdict::NptEntangled { system, lhs, rhs } => {
            m.insert("system".into(), json!(system.to_string()));
            m.insert("lhs".into(), json!(lhs));
            m.insert("rhs".into(), json!(rhs));
        }
        Verdict::PptEntangled { criterion, lhs, rhs } => {
            m.insert("criterion".into(), json!(criterion.name()));
            m.insert("lhs".into(), json!(lhs));
            m.insert("rhs".into(), json!(rhs));
        }
        Verdict::Separable { route, certificate } => {
            m.insert("route".into(), json!(route.name()));
            if let Some(d) = certificate {
                m.insert("certificate".into(), decomposition_to_value(d));
            }
        }
        Verdict::NotAState | Verdict::Inconclusive => {}
    }
    Value::Object(m)
}

/// Four complex numbers as `[[re,im], ...]`.
pub fn parse_complex4(text: &str) -> Result<[Complex64; 4]> {
    let raw: [Pair; 4] = serde_json::from_str(text).map_err(parse_err)?;
    Ok(raw.map(complex))
}
