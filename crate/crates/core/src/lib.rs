//! Exact algebra over `Λ = Q[t, t⁻¹]` for the Alexander polynomials of
//! deform-spun knots.
//!
//! * [`LaurentPoly`] and [`CanonicalPoly`]: Laurent polynomials and their
//!   unit-normalized representatives.
//! * [`factor()`]: irreducible factorization over `Q`.
//! * [`LambdaMatrix`] and [`smith_normal_form`]: matrices over `Λ`.
//! * [`TorsionModule`] and [`ModuleEndo`]: torsion modules and their
//!   endomorphisms, with kernel and cokernel order ideals.
//! * [`spin()`]: Alexander polynomials of a deform-spun knot from a monodromy.
//! * [`obstruction_check`] and [`levine_check`]: decide whether a list of
//!   polynomials can come from a deform-spin.
//!
//! ```
//! use spinobs::{obstruction_check, LaurentPoly};
//!
//! let deltas: Vec<LaurentPoly> = ["2t-1", "t-2"].iter().map(|s| s.parse().unwrap()).collect();
//! let verdict = obstruction_check(2, &deltas, false).unwrap();
//! assert!(!verdict.passed);
//! assert!(verdict.levine.passed);
//! ```

pub mod error;
pub mod factor;
pub mod laurent;
pub mod linalg;
pub mod obstruction;
pub mod parse;
pub mod qmatrix;
pub mod serial;
pub mod spin;
pub mod torsion;

pub use error::{Error, Result};
pub use factor::{factor, is_irreducible, squarefree_decompose, FactoredPoly};
pub use laurent::{rat, ratio, CanonicalPoly, LaurentPoly, Rational};
pub use linalg::{smith_normal_form, LambdaMatrix, SmithForm};
pub use obstruction::{levine_check, obstruction_check, Failure, LevineReport, ObstructionVerdict};
pub use parse::{parse_poly, parse_rational};
pub use qmatrix::QMatrix;
pub use spin::{seifert_is_unimodular, seifert_to_alexander, spin, twist_spin, twist_spin_chain, ModuleChain, SpinResult};
pub use torsion::{ModuleEndo, TorsionModule, VectorEndo, VectorizedModule};
