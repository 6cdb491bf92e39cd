//! Exact invariants of plane branch singularities over prime fields.
//!
//! A branch is an irreducible plane curve singularity, given here by a good
//! parametrization `(t^n, y(t))` with `y` a polynomial over `F_p`. From that
//! single input the crate computes, in exact arithmetic throughout:
//!
//! - the characteristic exponents and the minimal generators of the
//!   semigroup of the branch (via the Zariski recursion),
//! - the conductor degree `c` and the delta invariant (gap count),
//! - the implicit equation `f(x, y) = 0` by a Sylvester resultant,
//! - intersection numbers `i0(f, h)` by pullback along the parametrization,
//! - the Milnor number `mu = dim K[[x,y]]/(f_x, f_y)` by truncated
//!   local-algebra dimensions with a Nakayama stabilization criterion,
//! - the Merle factorization data of the polar curve `f_y = 0`,
//!
//! and then verifies the classical identities relating them (conductor
//! formula, `c = 2*delta`, `i0(f, f_y) = c + n - 1`, the equality criterion
//! for `mu = c` in characteristic `p > n`) on the given instance. Prime
//! sweeps re-run the whole pipeline over a range of characteristics.
//!
//! Everything is integer or residue arithmetic; there is no floating point
//! anywhere in the crate.
//!
//! ```
//! use plane_branch::parse::parse_univar;
//! use plane_branch::report::analyze_param;
//! use plane_branch::Parametrization;
//!
//! let y = parse_univar("t^6 + t^7").unwrap();
//! let branch = Parametrization::validate(5, 4, &y).unwrap();
//! let report = analyze_param(&branch, None).unwrap();
//! assert_eq!(report.beta_bar.as_deref(), Some(&[4, 6, 13][..]));
//! assert_eq!(report.conductor, Some(16));
//! assert_eq!(report.mu.value(), Some(16));
//! assert!(!report.any_check_failed());
//! ```

mod arith;

pub mod branch;
pub mod field;
pub mod milnor;
pub mod parse;
pub mod poly;
pub mod report;
pub mod semigroup;

pub use branch::{CharExponents, Parametrization, ValidationError};
pub use field::{FieldElement, PrimeField};
pub use milnor::MilnorResult;
pub use poly::{BivarPoly, IntBivarPoly, IntUnivarPoly, Order, UnivarPoly};
pub use report::{analyze_param, analyze_poly, sweep, BranchReport};
pub use semigroup::SemigroupData;
