//! Reed-Muller and projective Reed-Muller codes over small prime fields.
//!
//! The crate builds evaluation codes over GF(q), enumerates their weight
//! distributions exhaustively, and provides the closed-form weight formulas
//! and projective-geometry predicates needed to cross-check them.
//!
//! ```
//! use prmw::{codes::{build_prm, CodeParams}, formulas, weights};
//!
//! let code = build_prm(CodeParams::prm(2, 3, 2).unwrap()).unwrap();
//! let report = weights::weight_report(&code, weights::DEFAULT_BUDGET).unwrap();
//! assert_eq!(report.w1, Some(4));
//! assert_eq!(report.w2, Some(formulas::w2_prm_binary(3, 2).unwrap() as usize));
//! ```

pub mod codes;
pub mod error;
pub mod export;
pub mod formulas;
pub mod geometry;
pub mod gfp;
pub mod matrix;
pub mod points;
pub mod poly;
pub mod weights;

pub use codes::{build_prm, build_rm, Code, CodeParams, Family};
pub use error::{Error, Result};
pub use gfp::{Fe, Field};
pub use poly::Poly;
pub use weights::{weight_report, weight_report_with, Execution, WeightReport};
