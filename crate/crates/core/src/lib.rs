//! Exact three-term unit-fraction decompositions of `5/a`.
//!
//! Every `a >= 2` is handled: residues `a mod 5 != 1` and most of `a = 5q + 1`
//! by closed-form residue-class formulas ([`closedform`]), the remaining
//! `q ≡ 0 (mod 252)` by inverting `p1(x, y, z) = z(x(5y - 1) - y) - x`
//! ([`witness`]). Every emitted triple is re-verified in arbitrary precision.
//!
//! [`sweep`] runs the batched verification of `q = 252, 504, ...` with CSV
//! output and resume support; [`oracle`] is an independent brute-force
//! enumerator used to cross-check the closed forms.

pub mod closedform;
pub mod error;
pub mod exactmath;
pub mod oracle;
pub mod render;
pub mod sweep;
pub mod witness;

pub use closedform::{decompose5, decompose_r4, decompose_r6, Decomposition, MethodTag, Poly};
pub use error::{Error, Result};
pub use exactmath::{divisors, solve_d, verify_triple, IdentityParams, UnitTriple};
pub use oracle::brute_force;
pub use sweep::{resume_sweep, run_sweep, SweepConfig, SweepReport};
pub use witness::{expand_p1, invert_p1, P1Witness, SearchBudget};
