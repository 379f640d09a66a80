//! Finitely generated torsion `Λ`-modules stored as direct sums of cyclic
//! modules `⊕ Λ/(p_j)`, and `Λ`-linear endomorphisms between them.
//!
//! Two independent routes compute order ideals:
//!
//! * presentation matrices over `Λ` reduced by Smith normal form
//!   (cokernels, presentations);
//! * the underlying finite-dimensional `Q`-vector space with `t` acting by a
//!   block companion matrix (kernels, duals, characteristic polynomials).
//!
//! For a well-defined endomorphism the order ideals of kernel and cokernel
//! agree, so each route checks the other.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::factor;
use crate::laurent::{poly_div_rem, CanonicalPoly, LaurentPoly, Rational};
use crate::linalg::{invariant_factors, LambdaMatrix};
use crate::qmatrix::QMatrix;

/// `⊕_j Λ/(p_j)` with every `p_j` canonical and of degree at least one.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TorsionModule {
    cyclic: Vec<CanonicalPoly>,
}

impl TorsionModule {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Canonicalizes each generator. Zero generators (free summands) and
    /// units (trivial summands) are rejected.
    pub fn new(generators: Vec<LaurentPoly>) -> Result<Self> {
        Self::from_canonical(generators.iter().map(LaurentPoly::canon).collect())
    }

    pub fn from_canonical(cyclic: Vec<CanonicalPoly>) -> Result<Self> {
        for (index, p) in cyclic.iter().enumerate() {
            if p.is_zero() {
                return Err(Error::ZeroPolynomial("torsion summand"));
            }
            if p.degree() == 0 {
                return Err(Error::UnitSummand { index });
            }
        }
        Ok(TorsionModule { cyclic })
    }

    /// The module presented by `A`: `Λ^rows / A·Λ^cols`. Unit invariant
    /// factors are dropped.
    pub fn from_presentation(a: &LambdaMatrix) -> Result<Self> {
        Self::from_canonical(nonunit(torsion_factors(a)?))
    }

    pub fn summands(&self) -> &[CanonicalPoly] {
        &self.cyclic
    }

    pub fn len(&self) -> usize {
        self.cyclic.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cyclic.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Dimension as a `Q`-vector space.
    pub fn dimension(&self) -> usize {
        self.cyclic.iter().map(CanonicalPoly::degree).sum()
    }

    pub fn order_ideal(&self) -> CanonicalPoly {
        self.cyclic
            .iter()
            .map(|p| p.as_poly().clone())
            .product::<LaurentPoly>()
            .canon()
    }

    /// The diagonal presentation matrix `diag(p_j)`.
    pub fn presentation(&self) -> LambdaMatrix {
        let diag: Vec<LaurentPoly> = self.cyclic.iter().map(|p| p.as_poly().clone()).collect();
        LambdaMatrix::diagonal(&diag)
    }

    /// Invariant factors `d_1 | d_2 | …` (non-units only); two modules are
    /// isomorphic iff these agree.
    pub fn invariant_factors(&self) -> Vec<CanonicalPoly> {
        nonunit(invariant_factors(&self.presentation()))
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    /// Splits into `p`-primary components, one per irreducible factor of the
    /// order ideal. The `p`-part of `Λ/(q)` is `Λ/(p^v)` with `v` the
    /// multiplicity of `p` in `q`.
    pub fn primary_decomposition(&self) -> Result<BTreeMap<CanonicalPoly, TorsionModule>> {
        let mut parts: BTreeMap<CanonicalPoly, Vec<CanonicalPoly>> = BTreeMap::new();
        for q in &self.cyclic {
            for (prime, v) in factor(q)?.factors {
                let power = prime.as_poly().pow(v).canon();
                parts.entry(prime).or_default().push(power);
            }
        }
        parts
            .into_iter()
            .map(|(p, gens)| Ok((p, TorsionModule::from_canonical(gens)?)))
            .collect()
    }

    /// The underlying `Q`-vector space with basis `t^a mod p_j`.
    pub fn vectorize(&self) -> VectorizedModule {
        let dim = self.dimension();
        let mut t_action = QMatrix::zeros(dim, dim);
        let mut offset = 0;
        for p in &self.cyclic {
            let d = p.degree();
            for a in 0..d {
                let image = residue(&LaurentPoly::monomial(Rational::one(), a as i64 + 1), p);
                for (b, c) in image.into_iter().enumerate() {
                    t_action[(offset + b, offset + a)] = c;
                }
            }
            offset += d;
        }
        VectorizedModule {
            dim,
            t_action,
            degrees: self.cyclic.iter().map(CanonicalPoly::degree).collect(),
        }
    }

    fn offsets(&self) -> Vec<usize> {
        self.cyclic
            .iter()
            .scan(0, |acc, p| {
                let here = *acc;
                *acc += p.degree();
                Some(here)
            })
            .collect()
    }
}

impl fmt::Display for TorsionModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.cyclic.iter().map(|p| format!("Λ/({p})")).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Invariant factors of a presentation, rejecting free parts.
fn torsion_factors(a: &LambdaMatrix) -> Result<Vec<CanonicalPoly>> {
    let factors = invariant_factors(a);
    if factors.len() < a.rows() {
        return Err(Error::NotTorsion {
            rank: factors.len(),
            generators: a.rows(),
        });
    }
    Ok(factors)
}

fn nonunit(factors: Vec<CanonicalPoly>) -> Vec<CanonicalPoly> {
    factors.into_iter().filter(|p| !p.is_one()).collect()
}

/// Order ideal of `Λ^n / A·Λ^m` for an `n×m` matrix `A`.
pub fn order_ideal_of_presentation(a: &LambdaMatrix) -> Result<CanonicalPoly> {
    Ok(torsion_factors(a)?
        .iter()
        .map(|p| p.as_poly().clone())
        .product::<LaurentPoly>()
        .canon())
}

/// Dense coefficients of a polynomial with nonnegative exponents, from `t^0`.
fn dense(p: &LaurentPoly) -> Vec<Rational> {
    debug_assert!(p.is_zero() || p.min_degree() >= 0);
    let mut out = vec![Rational::zero(); p.min_degree().max(0) as usize];
    out.extend_from_slice(p.coeffs());
    out
}

fn rem_poly(a: &LaurentPoly, p: &CanonicalPoly) -> LaurentPoly {
    LaurentPoly::from_coeffs(poly_div_rem(&dense(a), p.coeffs()).1, 0)
}

fn t_power_mod(e: i64, p: &CanonicalPoly) -> LaurentPoly {
    if e >= 0 {
        return rem_poly(&LaurentPoly::monomial(Rational::one(), e), p);
    }
    // p = c0 + t·h, so t·(-h/c0) ≡ 1.
    let c0 = p.coeffs()[0].clone();
    let h = LaurentPoly::from_coeffs(p.coeffs()[1..].to_vec(), 0);
    let t_inv = h.scale(&(-c0.recip()));
    let mut acc = LaurentPoly::one();
    for _ in 0..e.unsigned_abs() {
        acc = rem_poly(&(&acc * &t_inv), p);
    }
    acc
}

/// Coordinates of `f mod p` in the basis `1, t, …, t^(deg p - 1)`.
fn residue(f: &LaurentPoly, p: &CanonicalPoly) -> Vec<Rational> {
    let d = p.degree();
    let mut out = vec![Rational::zero(); d];
    if f.is_zero() {
        return out;
    }
    let shift = f.min_degree();
    let base = rem_poly(&f.shift(-shift), p);
    let r = rem_poly(&(&base * &t_power_mod(shift, p)), p);
    for (i, c) in dense(&r).into_iter().enumerate() {
        out[i] = c;
    }
    out
}

/// A torsion module seen as a `Q`-vector space with the action of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorizedModule {
    pub dim: usize,
    pub t_action: QMatrix,
    /// Block sizes, one per cyclic summand.
    pub degrees: Vec<usize>,
}

impl VectorizedModule {
    /// `canon(det(tI - T))`.
    pub fn order_ideal(&self) -> CanonicalPoly {
        self.t_action.charpoly().canon()
    }
}

/// `Λ`-linear map of a [`TorsionModule`] to itself. Entry `(j, k)` of the
/// matrix is the component `Λ/(p_k) → Λ/(p_j)`, given by multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleEndo {
    domain: TorsionModule,
    matrix: LambdaMatrix,
}

impl ModuleEndo {
    /// Checks only the shape; see [`check`](Self::check) for well-definedness.
    pub fn new(domain: TorsionModule, matrix: LambdaMatrix) -> Result<Self> {
        let n = domain.len();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Dimension(format!(
                "endomorphism of a module with {n} summands needs a {n}x{n} matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(ModuleEndo { domain, matrix })
    }

    pub fn identity(domain: TorsionModule) -> Self {
        let n = domain.len();
        ModuleEndo {
            domain,
            matrix: LambdaMatrix::identity(n),
        }
    }

    pub fn zero(domain: TorsionModule) -> Self {
        let n = domain.len();
        ModuleEndo {
            domain,
            matrix: LambdaMatrix::zeros(n, n),
        }
    }

    /// Multiplication by a fixed ring element on every summand.
    pub fn scalar(domain: TorsionModule, c: &LaurentPoly) -> Self {
        let n = domain.len();
        ModuleEndo {
            domain,
            matrix: LambdaMatrix::diagonal(&vec![c.clone(); n]),
        }
    }

    pub fn domain(&self) -> &TorsionModule {
        &self.domain
    }

    pub fn matrix(&self) -> &LambdaMatrix {
        &self.matrix
    }

    /// First entry `(j, k)` where `p_j ∤ m[j][k]·p_k`, if any.
    pub fn offending_entry(&self) -> Option<(usize, usize)> {
        let p = self.domain.summands();
        let n = p.len();
        (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .find(|&(j, k)| !p[j].divides(&(&self.matrix[(j, k)] * p[k].as_poly())))
    }

    pub fn is_well_defined(&self) -> bool {
        self.offending_entry().is_none()
    }

    pub fn check(&self) -> Result<()> {
        match self.offending_entry() {
            None => Ok(()),
            Some((row, col)) => Err(Error::IllDefinedEndo { row, col }),
        }
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Self {
        let mut matrix = self.matrix.clone();
        for i in 0..matrix.rows() {
            matrix[(i, i)] -= &LaurentPoly::one();
        }
        ModuleEndo {
            domain: self.domain.clone(),
            matrix,
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain {
            return Err(Error::Dimension("composition of maps on different modules".into()));
        }
        Ok(ModuleEndo {
            domain: self.domain.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    /// Order ideal of `M / f(M)`, from the presentation `[diag(p_j) | F]`.
    pub fn coker_order_ideal(&self) -> Result<CanonicalPoly> {
        self.check()?;
        if self.domain.is_zero() {
            return Ok(CanonicalPoly::one());
        }
        order_ideal_of_presentation(&self.domain.presentation().hconcat(&self.matrix)?)
    }

    /// The cokernel as a module in invariant-factor form.
    pub fn coker_module(&self) -> Result<TorsionModule> {
        self.check()?;
        if self.domain.is_zero() {
            return Ok(TorsionModule::zero());
        }
        TorsionModule::from_presentation(&self.domain.presentation().hconcat(&self.matrix)?)
    }

    /// Order ideal of `ker f`, computed on the `Q`-vector space: the
    /// characteristic polynomial of `t` restricted to the nullspace of `f`.
    pub fn ker_order_ideal(&self) -> Result<CanonicalPoly> {
        Ok(self.vectorized()?.kernel_order_ideal())
    }

    /// `ker f` in invariant-factor form.
    pub fn kernel_module(&self) -> Result<TorsionModule> {
        self.vectorized()?.kernel_module()
    }

    /// The matrix of `f` on the basis `t^a mod p_j`; commutes with the
    /// vectorized `t` action.
    pub fn endo_matrix(&self) -> Result<QMatrix> {
        self.check()?;
        let p = self.domain.summands();
        let offsets = self.domain.offsets();
        let dim = self.domain.dimension();
        let mut out = QMatrix::zeros(dim, dim);
        for (k, pk) in p.iter().enumerate() {
            for a in 0..pk.degree() {
                for (j, pj) in p.iter().enumerate() {
                    let entry = &self.matrix[(j, k)];
                    if entry.is_zero() {
                        continue;
                    }
                    let image = residue(&entry.shift(a as i64), pj);
                    for (b, c) in image.into_iter().enumerate() {
                        out[(offsets[j] + b, offsets[k] + a)] = c;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn vectorized(&self) -> Result<VectorEndo> {
        Ok(VectorEndo {
            t_action: self.domain.vectorize().t_action,
            map: self.endo_matrix()?,
        })
    }

    /// The `Q`-dual: transpose of the map, with `t` acting by the transpose.
    pub fn dual_endo(&self) -> Result<VectorEndo> {
        Ok(self.vectorized()?.dual())
    }
}

/// A `t`-equivariant linear map on a finite-dimensional `Q[t]`-module given
/// by matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorEndo {
    pub t_action: QMatrix,
    pub map: QMatrix,
}

impl VectorEndo {
    pub fn dual(&self) -> VectorEndo {
        VectorEndo {
            t_action: self.t_action.transpose(),
            map: self.map.transpose(),
        }
    }

    pub fn commutes(&self) -> bool {
        self.t_action.mul(&self.map) == self.map.mul(&self.t_action)
    }

    pub fn kernel_dim(&self) -> usize {
        self.map.cols() - self.map.rank()
    }

    /// `t` restricted to `ker(map)`, in the nullspace coordinates.
    pub fn kernel_t_action(&self) -> QMatrix {
        let (basis, free) = self.map.nullspace();
        self.t_action.restrict(&basis, &free)
    }

    pub fn kernel_order_ideal(&self) -> CanonicalPoly {
        self.kernel_t_action().charpoly().canon()
    }

    /// Invariant factors of the kernel, read off the Smith form of
    /// `tI - R` where `R` is the restricted action (rational canonical form).
    pub fn kernel_module(&self) -> Result<TorsionModule> {
        module_of_action(&self.kernel_t_action())
    }
}

/// The `Λ`-module `Q^k` with `t` acting by `r`, in invariant-factor form.
pub fn module_of_action(r: &QMatrix) -> Result<TorsionModule> {
    let k = r.rows();
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let mut e = LaurentPoly::constant(-r[(i, j)].clone());
            if i == j {
                e += &LaurentPoly::t();
            }
            entries.push(e);
        }
    }
    let char_matrix = LambdaMatrix::from_entries(k, k, entries)?;
    TorsionModule::from_canonical(nonunit(invariant_factors(&char_matrix)))
}
