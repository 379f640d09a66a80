//! The deform-spin obstruction on a list of Alexander polynomials, and
//! Levine's realizability relations.
//!
//! A deform-spun `n`-knot admits `q_0 … q_n` with `q_0 = q_n = 1`,
//! `q_i · q_{i-1} ≐ Δ_i` and `conj(q_i) ≐ q_{n-i}`. Starting from `q_0 = 1`
//! the recurrence fixes every `q_i` up to a unit, so the check is a single
//! pass of exact divisions.

use crate::error::{Error, Result};
use crate::laurent::{rat, CanonicalPoly, LaurentPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevineRelation {
    /// 1-based index `i` of `Δ_i`.
    pub index: usize,
    pub value_at_one: Rational,
    pub nonvanishing: bool,
    /// `n + 1 - i`.
    pub dual_index: usize,
    /// `conj(Δ_i) ≐ Δ_{n+1-i}`.
    pub dual_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevineReport {
    pub relations: Vec<LevineRelation>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// `q_{step-1}` does not divide `Δ_step`.
    NonDivisibility {
        step: usize,
        divisor: CanonicalPoly,
        remainder: LaurentPoly,
    },
    /// The recurrence closes with `q_n ≠ 1`.
    ChainEnd { last: CanonicalPoly },
    /// `canon(conj(q_i)) ≠ q_{n-i}`.
    Asymmetry {
        index: usize,
        conj_q: CanonicalPoly,
        partner: CanonicalPoly,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    /// `true` means the obstruction is silent; `false` certifies that no
    /// deform-spin realizes these polynomials.
    pub passed: bool,
    /// `q_0 … q_n`, when the multiplicative chain closes.
    pub witness: Option<Vec<CanonicalPoly>>,
    pub failure: Option<Failure>,
    pub levine: LevineReport,
}

fn validate(n: usize, deltas: &[LaurentPoly]) -> Result<Vec<CanonicalPoly>> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    if deltas.len() != n {
        return Err(Error::Invalid(format!(
            "an {n}-knot has {n} Alexander polynomials, got {}",
            deltas.len()
        )));
    }
    if deltas.iter().any(LaurentPoly::is_zero) {
        return Err(Error::ZeroPolynomial("Alexander polynomial"));
    }
    Ok(deltas.iter().map(LaurentPoly::canon).collect())
}

/// `Δ_i(1) ≠ 0` and `conj(Δ_i) ≐ Δ_{n+1-i}` for every `i`.
pub fn levine_check(n: usize, deltas: &[LaurentPoly]) -> Result<LevineReport> {
    let canon = validate(n, deltas)?;
    let one = rat(1);
    let mut relations = Vec::with_capacity(n);
    for i in 1..=n {
        let value_at_one = deltas[i - 1].eval(&one)?;
        let dual_index = n + 1 - i;
        relations.push(LevineRelation {
            index: i,
            nonvanishing: value_at_one != Rational::from_integer(0.into()),
            value_at_one,
            dual_index,
            dual_ok: canon[i - 1].conj_canon() == canon[dual_index - 1],
        });
    }
    let passed = relations.iter().all(|r| r.nonvanishing && r.dual_ok);
    Ok(LevineReport { relations, passed })
}

/// Runs the `q_i` recurrence, then the closing and symmetry conditions
/// (the latter skipped when `chain_only`). The Levine report is attached
/// for context and does not affect `passed`.
pub fn obstruction_check(n: usize, deltas: &[LaurentPoly], chain_only: bool) -> Result<ObstructionVerdict> {
    let canon = validate(n, deltas)?;
    let levine = levine_check(n, deltas)?;
    let fail = |failure: Failure, witness: Option<Vec<CanonicalPoly>>| ObstructionVerdict {
        passed: false,
        witness,
        failure: Some(failure),
        levine: levine.clone(),
    };

    let mut qs = vec![CanonicalPoly::one()];
    for (i, delta) in canon.iter().enumerate() {
        let prev = qs.last().unwrap();
        match delta.exact_div(prev) {
            Ok(q) => qs.push(q.canon()),
            Err(Error::NotDivisible { remainder }) => {
                return Ok(fail(
                    Failure::NonDivisibility {
                        step: i + 1,
                        divisor: prev.clone(),
                        remainder,
                    },
                    None,
                ))
            }
            Err(e) => return Err(e),
        }
    }
    let last = qs.last().unwrap().clone();
    if !last.is_one() {
        return Ok(fail(Failure::ChainEnd { last }, None));
    }
    if !chain_only {
        for i in 0..=n {
            let conj_q = qs[i].conj_canon();
            if conj_q != qs[n - i] {
                return Ok(fail(
                    Failure::Asymmetry {
                        index: i,
                        conj_q,
                        partner: qs[n - i].clone(),
                    },
                    Some(qs),
                ));
            }
        }
    }
    Ok(ObstructionVerdict {
        passed: true,
        witness: Some(qs),
        failure: None,
        levine,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(xs: &[&str]) -> Vec<LaurentPoly> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn c(s: &str) -> CanonicalPoly {
        s.parse::<LaurentPoly>().unwrap().canon()
    }

    #[test]
    fn levine_examples() {
        let r = levine_check(2, &ps(&["2t-1", "t-2"])).unwrap();
        assert!(r.passed);
        assert_eq!(r.relations[0].value_at_one, rat(1));
        assert_eq!(r.relations[1].value_at_one, rat(-1));

        let r = levine_check(2, &ps(&["t-1", "t-1"])).unwrap();
        assert!(!r.passed);
        assert!(!r.relations[0].nonvanishing);

        assert!(levine_check(3, &ps(&["t-2", "2t^2-5t+2", "2t-1"])).unwrap().passed);
        assert!(levine_check(2, &ps(&["0", "1"])).is_err());
    }

    #[test]
    fn fox_knot_fails() {
        let v = obstruction_check(2, &ps(&["2t-1", "t-2"]), false).unwrap();
        assert!(!v.passed);
        assert!(v.witness.is_none());
        match v.failure {
            Some(Failure::NonDivisibility { step, ref divisor, .. }) => {
                assert_eq!(step, 2);
                assert_eq!(divisor, &c("2t-1"));
            }
            ref other => panic!("{other:?}"),
        }
        assert!(v.levine.passed);
    }

    #[test]
    fn connect_sum_passes() {
        let d = "-2t^2+3t-2";
        let v = obstruction_check(2, &ps(&[d, d]), false).unwrap();
        assert!(v.passed);
        assert_eq!(v.witness.unwrap(), vec![c("1"), c("2t^2-3t+2"), c("1")]);
    }

    #[test]
    fn three_knots() {
        let v = obstruction_check(3, &ps(&["t-2", "2t^2-5t+2", "2t-1"]), false).unwrap();
        assert!(v.passed);
        assert_eq!(v.witness.unwrap(), vec![c("1"), c("t-2"), c("2t-1"), c("1")]);

        let v = obstruction_check(3, &ps(&["t-2", "t-2", "t-2"]), false).unwrap();
        assert!(!v.passed);
        assert_eq!(v.failure, Some(Failure::ChainEnd { last: c("t-2") }));
    }

    #[test]
    fn asymmetric_chain() {
        // q = (1, t-2, t-3, 1) closes but conj(t-2) ≐ 2t-1 ≠ t-3.
        let d = ps(&["t-2", "t^2-5t+6", "t-3"]);
        let v = obstruction_check(3, &d, false).unwrap();
        assert!(!v.passed);
        assert!(matches!(v.failure, Some(Failure::Asymmetry { index: 1, .. })));
        assert!(v.witness.is_some());
        assert!(obstruction_check(3, &d, true).unwrap().passed);
    }

    #[test]
    fn small_n() {
        assert!(obstruction_check(1, &ps(&["1"]), false).unwrap().passed);
        assert!(obstruction_check(1, &ps(&["3t^2"]), false).unwrap().passed);
        assert!(!obstruction_check(1, &ps(&["t^2-t+1"]), false).unwrap().passed);
        assert!(obstruction_check(0, &[], false).is_err());
        assert!(obstruction_check(2, &ps(&["1"]), false).is_err());
        assert!(obstruction_check(2, &ps(&["1", "0"]), false).is_err());
    }
}
