//! Human and JSON rendering. Human output is plain ASCII; color, when
//! enabled, only touches the PASS/FAIL words.

use std::fmt::Display;

use serde_json::{json, Value};
use spinobs::serial::{levine_to_json, spin_to_json, verdict_to_json};
use spinobs::{
    CanonicalPoly, Failure, FactoredPoly, LaurentPoly, LevineReport, ObstructionVerdict, SpinResult, TorsionModule,
};

use crate::corpus::Example;
use crate::Output;

pub struct Printer {
    json: bool,
    color: bool,
    stdout: String,
    stderr: String,
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn list<T: Display>(items: &[T]) -> String {
    if items.is_empty() {
        return "(none)".into();
    }
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn module(m: &TorsionModule) -> String {
    if m.is_zero() {
        return "0".into();
    }
    m.summands()
        .iter()
        .map(|p| format!("Lambda/({p})"))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn canon_list(ps: &[CanonicalPoly]) -> Vec<LaurentPoly> {
    ps.iter().map(|p| p.as_poly().clone()).collect()
}

impl Printer {
    pub fn new(json: bool, color: bool) -> Self {
        Printer {
            json,
            color,
            stdout: String::new(),
            stderr: String::new(),
        }
    }

    pub fn finish(self, code: i32) -> Output {
        Output {
            code,
            stdout: self.stdout,
            stderr: self.stderr,
        }
    }

    /// Drops buffered stdout, keeping warnings.
    pub fn discard(self) -> Output {
        Output {
            code: 0,
            stdout: String::new(),
            stderr: self.stderr,
        }
    }

    pub fn warn(&mut self, message: &str) {
        self.stderr.push_str(&format!("warning: {message}\n"));
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.stdout.push_str(text.as_ref());
        self.stdout.push('\n');
    }

    fn emit_json(&mut self, value: &Value) {
        let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
        self.line(text);
    }

    fn verdict_word(&self, passed: bool) -> String {
        let (word, code) = if passed { ("PASS", "32") } else { ("FAIL", "31") };
        if self.color {
            format!("\x1b[1;{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }

    /// A single result: bare value for humans, `value` for JSON.
    pub fn value(&mut self, shown: &dyn Display, value: Value) {
        if self.json {
            self.emit_json(&value);
        } else {
            self.line(shown.to_string());
        }
    }

    pub fn lines(&mut self, lines: &[String], value: Value) {
        if self.json {
            self.emit_json(&value);
        } else {
            for l in lines {
                self.line(l);
            }
        }
    }

    pub fn factorization(&mut self, p: &LaurentPoly, f: &FactoredPoly) {
        let (c, k) = &f.unit;
        if self.json {
            let factors: Vec<Value> = f
                .factors
                .iter()
                .map(|(q, m)| json!({ "factor": q.render_compact(), "multiplicity": m }))
                .collect();
            self.emit_json(&json!({
                "unit": { "coefficient": c.to_string(), "shift": k },
                "factors": factors,
            }));
            return;
        }
        let mut parts = Vec::new();
        let unit = LaurentPoly::monomial(c.clone(), *k);
        if !unit.is_one() || f.factors.is_empty() {
            parts.push(if f.factors.is_empty() { unit.to_string() } else { format!("({unit})") });
        }
        for (q, m) in &f.factors {
            parts.push(if *m == 1 { format!("({q})") } else { format!("({q})^{m}") });
        }
        self.line(format!("{p} = {}", parts.join("")));
        for (q, m) in &f.factors {
            self.line(format!("  {q}  multiplicity {m}"));
        }
    }

    pub fn spin(&mut self, r: &SpinResult) {
        if self.json {
            self.emit_json(&spin_to_json(r));
            return;
        }
        self.spin_lines(r);
    }

    fn spin_lines(&mut self, r: &SpinResult) {
        for (i, d) in r.deltas.iter().enumerate() {
            self.line(format!("Delta_{} = {d}", i + 1));
        }
        self.line(format!("q_0..q_{}: {}", r.n(), list(&r.qs)));
        self.line(format!("symmetric: {}", yes_no(r.symmetric)));
    }

    pub fn twist_spin(&mut self, k: i64, r: &SpinResult, v: &ObstructionVerdict) {
        if self.json {
            self.emit_json(&json!({ "k": k, "spin": spin_to_json(r), "verdict": verdict_to_json(v) }));
            return;
        }
        self.line(format!("{k}-twist-spun {}-knot", r.n()));
        self.spin_lines(r);
        self.verdict_lines(&canon_list(&r.deltas), v, false);
    }

    pub fn seifert(&mut self, alexander: &CanonicalPoly, unimodular: bool) {
        let symmetric = alexander.is_zero() || alexander.is_symmetric();
        if self.json {
            self.emit_json(&json!({
                "alexander": alexander.render_compact(),
                "symmetric": symmetric,
                "unimodular": unimodular,
            }));
            return;
        }
        self.line(format!("Alexander polynomial: {alexander}"));
        self.line(format!("symmetric: {}", yes_no(symmetric)));
    }

    pub fn verdict(&mut self, deltas: &[LaurentPoly], v: &ObstructionVerdict, chain_only: bool) {
        if self.json {
            self.emit_json(&verdict_to_json(v));
            return;
        }
        for (i, d) in deltas.iter().enumerate() {
            self.line(format!("Delta_{} = {d}", i + 1));
        }
        self.verdict_lines(deltas, v, chain_only);
    }

    fn verdict_lines(&mut self, deltas: &[LaurentPoly], v: &ObstructionVerdict, chain_only: bool) {
        let n = deltas.len();
        let mode = if chain_only { " (chain only)" } else { "" };
        let word = self.verdict_word(v.passed);
        if v.passed {
            self.line(format!("obstruction{mode}: {word} (not ruled out as a deform-spun {n}-knot)"));
        } else {
            self.line(format!("obstruction{mode}: {word} (not a deform-spun {n}-knot)"));
        }
        if let Some(w) = &v.witness {
            self.line(format!("  q_0..q_{n}: {}", list(w)));
        }
        match &v.failure {
            Some(Failure::NonDivisibility {
                step,
                divisor,
                remainder,
            }) => {
                let d = deltas[step - 1].canon();
                self.line(format!(
                    "  non-divisibility at step {step}: q_{} = {divisor} does not divide Delta_{step} = {d} (remainder {remainder})",
                    step - 1
                ));
            }
            Some(Failure::ChainEnd { last }) => {
                self.line(format!("  chain does not close: q_{n} = {last}, expected 1"));
            }
            Some(Failure::Asymmetry {
                index,
                conj_q,
                partner,
            }) => {
                self.line(format!(
                    "  asymmetry at index {index}: conj(q_{index}) ~ {conj_q} but q_{} = {partner}",
                    n - index
                ));
            }
            None => {}
        }
        if n == 2 && !v.passed {
            let d1 = deltas[0].canon();
            if !d1.is_symmetric() {
                self.line(format!("  Delta_1 = {d1} is not symmetric"));
            }
        }
        self.levine_lines(&v.levine);
        if !v.levine.passed {
            self.line("  these polynomials are not those of any knot, so the verdict is vacuous");
        }
    }

    pub fn levine(&mut self, r: &LevineReport) {
        if self.json {
            self.emit_json(&levine_to_json(r));
            return;
        }
        self.levine_lines(r);
    }

    fn levine_lines(&mut self, r: &LevineReport) {
        self.line(format!("levine: {}", if r.passed { "pass" } else { "fail" }));
        for rel in &r.relations {
            self.line(format!(
                "  i = {}: Delta_{}(1) = {}{}, conj(Delta_{}) ~ Delta_{}: {}",
                rel.index,
                rel.index,
                rel.value_at_one,
                if rel.nonvanishing { "" } else { " (vanishes)" },
                rel.index,
                rel.dual_index,
                yes_no(rel.dual_ok)
            ));
        }
    }

    pub fn examples(&mut self, results: &[(Example, Result<(), String>)]) {
        let all = results.iter().all(|(_, r)| r.is_ok());
        if self.json {
            let rows: Vec<Value> = results
                .iter()
                .map(|(ex, r)| {
                    json!({
                        "name": ex.name,
                        "claim": ex.claim,
                        "passed": r.is_ok(),
                        "detail": r.as_ref().err(),
                    })
                })
                .collect();
            self.emit_json(&json!({ "passed": all, "examples": rows }));
            return;
        }
        let width = results.iter().map(|(ex, _)| ex.name.len()).max().unwrap_or(0);
        for (ex, r) in results {
            let word = self.verdict_word(r.is_ok());
            self.line(format!("{word}  {:width$}  {}", ex.name, ex.claim));
            if let Err(detail) = r {
                self.line(format!("      {detail}"));
            }
        }
        let passed = results.iter().filter(|(_, r)| r.is_ok()).count();
        self.line(format!("{passed}/{} examples passed", results.len()));
    }
}
