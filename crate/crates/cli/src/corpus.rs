//! Worked examples from the literature on deform-spun knots, each with an
//! executable check.

use spinobs::{levine_check, obstruction_check, CanonicalPoly, Failure, LambdaMatrix, LaurentPoly, ModuleEndo, TorsionModule};

#[derive(Clone, Copy, Debug)]
pub struct Example {
    pub name: &'static str,
    pub claim: &'static str,
    pub check: fn() -> Result<(), String>,
}

type Check = Result<(), String>;

fn p(s: &str) -> LaurentPoly {
    s.parse().expect("corpus polynomials parse")
}

fn c(s: &str) -> CanonicalPoly {
    p(s).canon()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn ensure(cond: bool, message: &str) -> Check {
    if cond {
        Ok(())
    } else {
        Err(message.to_string())
    }
}

fn to_string<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn fox_pair() -> Vec<LaurentPoly> {
    vec![p("2t-1"), p("t-2")]
}

/// `M = Λ/(t-2) ⊕ Λ/(t-2)²` with `g(a, b) = (0, (t-2)a)`.
fn square_kernel_map() -> Result<ModuleEndo, String> {
    let m = TorsionModule::new(vec![p("t-2"), p("t^2-4t+4")]).map_err(to_string)?;
    let matrix = LambdaMatrix::from_rows(vec![vec![p("0"), p("0")], vec![p("t-2"), p("0")]]).map_err(to_string)?;
    ModuleEndo::new(m, matrix).map_err(to_string)
}

fn fox_conjugate() -> Check {
    let d = p("2t-1");
    expect_eq("conj", d.conj(), p("2t^-1 - 1"))?;
    expect_eq("canon of conj", d.conj().canon(), c("t-2"))?;
    ensure(!d.canon().is_symmetric(), "2t-1 should not be symmetric")
}

fn connect_sum_symmetric() -> Check {
    let d = p("-2t^2+3t-2");
    expect_eq("canon", d.canon(), c("2t^2-3t+2"))?;
    expect_eq("canon of conj", d.conj().canon(), d.canon())
}

fn fox_levine() -> Check {
    let r = levine_check(2, &fox_pair()).map_err(to_string)?;
    ensure(r.passed, "Levine relations should hold")?;
    let values: Vec<String> = r.relations.iter().map(|x| x.value_at_one.to_string()).collect();
    expect_eq("values at 1", values, vec!["1".to_string(), "-1".to_string()])
}

fn fox_obstructed() -> Check {
    let v = obstruction_check(2, &fox_pair(), false).map_err(to_string)?;
    ensure(!v.passed, "obstruction should fail")?;
    match v.failure {
        Some(Failure::NonDivisibility { step: 2, divisor, .. }) => expect_eq("q_1", divisor, c("2t-1")),
        other => Err(format!("unexpected failure {other:?}")),
    }
}

fn connect_sum_passes() -> Check {
    let d = p("2t^2-3t+2");
    let v = obstruction_check(2, &[d.clone(), d.clone()], false).map_err(to_string)?;
    ensure(v.passed, "obstruction should be silent")?;
    expect_eq("witness", v.witness, Some(vec![CanonicalPoly::one(), d.canon(), CanonicalPoly::one()]))
}

fn square_map_well_defined() -> Check {
    ensure(square_kernel_map()?.is_well_defined(), "map should be well defined")
}

fn square_map_kernel() -> Check {
    let g = square_kernel_map()?;
    let sq = c("t^2-4t+4");
    expect_eq("kernel order ideal", g.ker_order_ideal().map_err(to_string)?, sq.clone())?;
    expect_eq("cokernel order ideal", g.coker_order_ideal().map_err(to_string)?, sq.clone())?;
    let kernel = g.kernel_module().map_err(to_string)?;
    expect_eq("kernel invariant factors", kernel.invariant_factors(), vec![sq])
}

fn square_map_dual_kernel() -> Check {
    let dual = square_kernel_map()?.dual_endo().map_err(to_string)?;
    expect_eq("dual kernel dimension", dual.kernel_dim(), 2)?;
    expect_eq("dual kernel order ideal", dual.kernel_order_ideal(), c("t^2-4t+4"))?;
    let kernel = dual.kernel_module().map_err(to_string)?;
    expect_eq("dual kernel invariant factors", kernel.invariant_factors(), vec![c("t-2"), c("t-2")])
}

pub fn corpus() -> Vec<Example> {
    vec![
        Example {
            name: "fox-conjugate",
            claim: "conj(2t-1) = 2t^-1 - 1 ~ t-2, so 2t-1 is not symmetric",
            check: fox_conjugate,
        },
        Example {
            name: "connect-sum-symmetric",
            claim: "-2t^2+3t-2 has canonical form 2t^2-3t+2 and is symmetric",
            check: connect_sum_symmetric,
        },
        Example {
            name: "fox-levine",
            claim: "(2t-1, t-2) satisfies Levine's relations, values 1 and -1 at t = 1",
            check: fox_levine,
        },
        Example {
            name: "fox-obstructed",
            claim: "(2t-1, t-2) is not the pair of a deform-spun 2-knot",
            check: fox_obstructed,
        },
        Example {
            name: "connect-sum-silent",
            claim: "(2t^2-3t+2, 2t^2-3t+2) passes with witness (1, 2t^2-3t+2, 1)",
            check: connect_sum_passes,
        },
        Example {
            name: "square-map-defined",
            claim: "g(a, b) = (0, (t-2)a) is well defined on Lambda/(t-2) + Lambda/(t-2)^2",
            check: square_map_well_defined,
        },
        Example {
            name: "square-map-kernel",
            claim: "ker g ~ Lambda/(t-2)^2 with order ideal (t-2)^2",
            check: square_map_kernel,
        },
        Example {
            name: "square-map-dual-kernel",
            claim: "ker g* ~ Lambda/(t-2) + Lambda/(t-2): same order ideal, different module",
            check: square_map_dual_kernel,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_passes() {
        for ex in corpus() {
            assert_eq!((ex.check)(), Ok(()), "{}", ex.name);
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = corpus().iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), corpus().len());
    }
}
