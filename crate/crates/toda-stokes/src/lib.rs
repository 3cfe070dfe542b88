//! Exact and numerical tools for the radial Toda lattice with opposite sign
//! and the Stokes structure of its associated meromorphic connections.
//!
//! The crate is organised in layers:
//!
//! * [`cyclotomic`] — exact arithmetic in cyclotomic fields `Q(zeta_N)` over
//!   arbitrary-precision rationals; everything that decides rationality or
//!   integrality is computed here, without floating point.
//! * [`weights`] — combinatorics of parabolic weight tuples: membership in
//!   the weight simplex, gauge normalization, stable decomposition, pairing
//!   certificates and asymptotic profiles.
//! * [`stokes`] — exact Stokes factors, their unipotent factorization, the
//!   monodromy matrix and the characteristic-polynomial identity tying them
//!   to the weight data.
//! * [`integrality`] — decision procedures for Z/Q-structure existence: the
//!   base criterion, the gcd/Bezout gamma-scaling decision, and the odd-prime
//!   and rank-two oracles used to cross-check it.
//! * [`numerics`] — complex-path ODE transport for the explicit connections,
//!   numerical monodromy and best-effort numerical Stokes factors.
//! * [`solver`] — a damped-Newton two-point boundary value solver for the
//!   radial Toda system, with residual and symmetry diagnostics.
//! * [`cli`] — the `toda` command line front end and its JSON/CSV output.
//!
//! Runnable demonstrations of each capability live in `examples/`.

pub mod cli;
pub mod cyclotomic;
pub mod integrality;
pub mod matrix;
pub mod numerics;
pub mod ode;
pub mod rat;
pub mod solver;
pub mod stokes;
pub mod weights;

pub use cyclotomic::{CycNumber, CycPolynomial};
