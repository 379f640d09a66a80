//! JSON forms of modules, endomorphisms, chains and verdicts.
//!
//! Polynomials travel as strings in the usual grammar and are written in
//! compact ASCII (`"t^2-t+1"`), so every emitted string parses back.
//!
//! ```json
//! ["t-2", "t^2-4t+4"]
//! {"module": ["t-2"], "matrix": [["t"]]}
//! {"n": 2, "levels": [{"i": 1, "module": ["t^2-t+1"], "matrix": [["t^6"]]}]}
//! ```

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::{CanonicalPoly, LaurentPoly};
use crate::linalg::LambdaMatrix;
use crate::obstruction::{Failure, LevineReport, ObstructionVerdict};
use crate::parse::parse_poly;
use crate::spin::{ModuleChain, SpinResult};
use crate::torsion::{ModuleEndo, TorsionModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndoDoc {
    pub module: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelDoc {
    pub i: usize,
    pub module: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDoc {
    pub n: usize,
    #[serde(default)]
    pub levels: Vec<LevelDoc>,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

fn polys(strings: &[String]) -> Result<Vec<LaurentPoly>> {
    strings.iter().map(|s| parse_poly(s)).collect()
}

fn strings<'a>(ps: impl IntoIterator<Item = &'a LaurentPoly>) -> Vec<String> {
    ps.into_iter().map(LaurentPoly::render_compact).collect()
}

fn build_endo(module: &[String], matrix: &[Vec<String>]) -> Result<ModuleEndo> {
    let domain = TorsionModule::new(polys(module)?)?;
    let rows = matrix.iter().map(|r| polys(r)).collect::<Result<Vec<_>>>()?;
    let matrix = if rows.is_empty() {
        LambdaMatrix::zeros(0, 0)
    } else {
        LambdaMatrix::from_rows(rows)?
    };
    ModuleEndo::new(domain, matrix)
}

pub fn module_from_json(text: &str) -> Result<TorsionModule> {
    let gens: Vec<String> = from_json(text)?;
    TorsionModule::new(polys(&gens)?)
}

pub fn module_to_json(m: &TorsionModule) -> Value {
    json!(strings(m.summands().iter().map(CanonicalPoly::as_poly)))
}

pub fn endo_doc(f: &ModuleEndo) -> EndoDoc {
    let matrix = f.matrix();
    EndoDoc {
        module: strings(f.domain().summands().iter().map(CanonicalPoly::as_poly)),
        matrix: (0..matrix.rows()).map(|i| strings(matrix.row(i))).collect(),
    }
}

/// Parses and checks well-definedness.
pub fn endo_from_json(text: &str) -> Result<ModuleEndo> {
    let doc: EndoDoc = from_json(text)?;
    let f = build_endo(&doc.module, &doc.matrix)?;
    f.check()?;
    Ok(f)
}

/// Parses without the well-definedness check, so that it can be reported.
pub fn endo_from_json_unchecked(text: &str) -> Result<ModuleEndo> {
    let doc: EndoDoc = from_json(text)?;
    build_endo(&doc.module, &doc.matrix)
}

pub fn endo_to_json(f: &ModuleEndo) -> Value {
    serde_json::to_value(endo_doc(f)).expect("plain strings serialize")
}

pub fn chain_from_json(text: &str) -> Result<ModuleChain> {
    let doc: ChainDoc = from_json(text)?;
    let levels = doc
        .levels
        .iter()
        .map(|l| Ok((l.i, build_endo(&l.module, &l.matrix)?)))
        .collect::<Result<Vec<_>>>()?;
    ModuleChain::from_levels(doc.n, levels)
}

pub fn chain_to_json(chain: &ModuleChain) -> Value {
    let levels: Vec<LevelDoc> = chain
        .levels()
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let EndoDoc { module, matrix } = endo_doc(g);
            LevelDoc { i: k + 1, module, matrix }
        })
        .collect();
    serde_json::to_value(ChainDoc { n: chain.n(), levels }).expect("plain strings serialize")
}

fn canon_strings(ps: &[CanonicalPoly]) -> Vec<String> {
    strings(ps.iter().map(CanonicalPoly::as_poly))
}

pub fn spin_to_json(r: &SpinResult) -> Value {
    json!({
        "deltas": canon_strings(&r.deltas),
        "qs": canon_strings(&r.qs),
        "symmetric": r.symmetric,
    })
}

pub fn levine_to_json(r: &LevineReport) -> Value {
    let relations: Vec<Value> = r
        .relations
        .iter()
        .map(|rel| {
            json!({
                "i": rel.index,
                "value_at_one": rel.value_at_one.to_string(),
                "nonvanishing": rel.nonvanishing,
                "dual_index": rel.dual_index,
                "dual_ok": rel.dual_ok,
            })
        })
        .collect();
    json!({ "passed": r.passed, "relations": relations })
}

pub fn failure_to_json(f: &Failure) -> Value {
    match f {
        Failure::NonDivisibility {
            step,
            divisor,
            remainder,
        } => json!({
            "kind": "non_divisibility",
            "step": step,
            "divisor": divisor.render_compact(),
            "remainder": remainder.render_compact(),
        }),
        Failure::ChainEnd { last } => json!({
            "kind": "chain_end",
            "last": last.render_compact(),
        }),
        Failure::Asymmetry {
            index,
            conj_q,
            partner,
        } => json!({
            "kind": "asymmetry",
            "index": index,
            "conj": conj_q.render_compact(),
            "partner": partner.render_compact(),
        }),
    }
}

pub fn verdict_to_json(v: &ObstructionVerdict) -> Value {
    json!({
        "passed": v.passed,
        "witness": v.witness.as_deref().map(canon_strings),
        "failure": v.failure.as_ref().map(failure_to_json),
        "levine": levine_to_json(&v.levine),
    })
}
