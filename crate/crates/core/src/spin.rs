//! Alexander polynomials of a deform-spun knot from the Alexander modules of
//! the knot it is spun from and the monodromy acting on them.
//!
//! With `g_i` the monodromy on `H_i` (for `1 ≤ i ≤ n-1`), the spun `n`-knot
//! has `H_1 ≅ coker(g_1 - I)` and, for `i > 1`, an extension of
//! `ker(g_{i-1} - I)` by `coker(g_i - I)`. Writing `q_i` for the order ideal
//! of `coker(g_i - I)` gives `Δ_i = q_i · q_{i-1}` with `q_0 = q_n = 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{rat, CanonicalPoly, LaurentPoly};
use crate::linalg::LambdaMatrix;
use crate::torsion::{ModuleEndo, TorsionModule};

/// The data of a deform-spin: the target is an `n`-knot and `levels[i-1]`
/// is the monodromy on the `i`-th Alexander module of the `(n-1)`-knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleChain {
    n: usize,
    levels: Vec<ModuleEndo>,
}

impl ModuleChain {
    pub fn new(n: usize, levels: Vec<ModuleEndo>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidChain("n must be at least 1".into()));
        }
        if levels.len() != n - 1 {
            return Err(Error::InvalidChain(format!(
                "an {n}-knot needs {} levels, got {}",
                n - 1,
                levels.len()
            )));
        }
        for g in &levels {
            g.check()?;
        }
        Ok(ModuleChain { n, levels })
    }

    /// Levels given by 1-based index; absent ones are the zero module.
    pub fn from_levels(n: usize, given: Vec<(usize, ModuleEndo)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidChain("n must be at least 1".into()));
        }
        let mut levels: Vec<Option<ModuleEndo>> = vec![None; n - 1];
        for (i, g) in given {
            if i == 0 || i >= n {
                return Err(Error::InvalidChain(format!("level {i} outside 1..={}", n - 1)));
            }
            if levels[i - 1].replace(g).is_some() {
                return Err(Error::InvalidChain(format!("level {i} given twice")));
            }
        }
        let levels = levels
            .into_iter()
            .map(|g| g.unwrap_or_else(|| ModuleEndo::zero(TorsionModule::zero())))
            .collect();
        Self::new(n, levels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The monodromy on `H_i`, `1 ≤ i ≤ n-1`.
    pub fn level(&self, i: usize) -> &ModuleEndo {
        &self.levels[i - 1]
    }

    pub fn levels(&self) -> &[ModuleEndo] {
        &self.levels
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinResult {
    /// `Δ_1 … Δ_n`.
    pub deltas: Vec<CanonicalPoly>,
    /// `q_0 … q_n`.
    pub qs: Vec<CanonicalPoly>,
    /// Whether `conj(q_i) ≐ q_{n-i}` for all `i`. Informational: arbitrary
    /// algebraic monodromies need not satisfy it.
    pub symmetric: bool,
}

impl SpinResult {
    pub fn n(&self) -> usize {
        self.deltas.len()
    }
}

pub fn spin(chain: &ModuleChain) -> Result<SpinResult> {
    let n = chain.n;
    let mut qs = vec![CanonicalPoly::one(); n + 1];
    let mut kers = vec![CanonicalPoly::one(); n + 1];
    for i in 1..n {
        let shifted = chain.level(i).minus_identity();
        qs[i] = shifted.coker_order_ideal()?;
        kers[i] = shifted.ker_order_ideal()?;
    }
    let deltas: Vec<CanonicalPoly> = (1..=n)
        .map(|i| (qs[i].as_poly() * kers[i - 1].as_poly()).canon())
        .collect();
    for i in 1..=n {
        let expected = (qs[i].as_poly() * qs[i - 1].as_poly()).canon();
        assert_eq!(
            deltas[i - 1], expected,
            "kernel and cokernel order ideals disagree at level {}",
            i - 1
        );
    }
    let symmetric = (0..=n).all(|i| qs[i].conj_canon() == qs[n - i]);
    Ok(SpinResult { deltas, qs, symmetric })
}

/// The chain of a `k`-twist-spin: `H_i = Λ/(Δ_i)` with monodromy `t^k`.
pub fn twist_spin_chain(deltas: &[LaurentPoly], k: i64) -> Result<ModuleChain> {
    let one = rat(1);
    let mut levels = Vec::with_capacity(deltas.len());
    for d in deltas {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial("twist-spin module"));
        }
        if d.eval(&one)?.is_zero() {
            return Err(Error::VanishesAtOne { poly: d.to_string() });
        }
        let c = d.canon();
        let module = if c.is_one() {
            TorsionModule::zero()
        } else {
            TorsionModule::from_canonical(vec![c])?
        };
        levels.push(ModuleEndo::scalar(module, &LaurentPoly::monomial(one.clone(), k)));
    }
    ModuleChain::new(deltas.len() + 1, levels)
}

/// Spins with monodromy `t^k`; `deltas` are the Alexander polynomials of
/// `H_1 … H_{n-1}`, each taken as a cyclic module.
pub fn twist_spin(deltas: &[LaurentPoly], k: i64) -> Result<SpinResult> {
    spin(&twist_spin_chain(deltas, k)?)
}

fn seifert_matrix(v: &[Vec<i64>], scale_transpose: &LaurentPoly) -> Result<LambdaMatrix> {
    let n = v.len();
    if let Some(row) = v.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            cols: row.len(),
        });
    }
    let mut m = LambdaMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = LaurentPoly::constant(rat(v[i][j])) - scale_transpose.scale(&rat(v[j][i]));
        }
    }
    Ok(m)
}

/// `canon(det(V - t·Vᵀ))`.
pub fn seifert_to_alexander(v: &[Vec<i64>]) -> Result<CanonicalPoly> {
    Ok(seifert_matrix(v, &LaurentPoly::t())?.determinant()?.canon())
}

/// `det(V - Vᵀ) = ±1`, which holds for Seifert matrices of knots.
pub fn seifert_is_unimodular(v: &[Vec<i64>]) -> Result<bool> {
    let det = seifert_matrix(v, &LaurentPoly::one())?.determinant()?;
    Ok(!det.is_zero()
        && det.span() == 0
        && det.min_degree() == 0
        && det.coeffs()[0].is_integer()
        && det.coeffs()[0].to_integer().abs() == BigInt::one())
}
