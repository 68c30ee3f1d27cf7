//! Exact Delsarte linear programming for binary codes.
//!
//! The crate builds the Delsarte linear program for block length `n` and
//! minimal distance `d`, its dual, and two reformulations in Krawtchouk
//! decomposition coordinates, and solves them with an exact rational
//! simplex method. On top of that it provides the quasicode transforms
//! (decomposition, extension, puncturing), closed-form optima for the
//! regimes where they are known, optimal-face probing to decide whether an
//! optimum is unique, and a census driver that scans all `(n, d)` pairs.
//!
//! ```
//! use delsarte_core::delsarte::{lp_bound, ProblemParams};
//! use delsarte_core::exact::q;
//!
//! let p = ProblemParams::new(17, 5).unwrap();
//! assert_eq!(lp_bound(&p), q(2048, 3));
//! ```

pub mod census;
pub mod delsarte;
pub mod exact;
pub mod krawtchouk;
pub mod quasicode;
pub mod simplex;
pub mod verify;

pub use exact::Rational;
