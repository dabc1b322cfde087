//! Bijections and equidistributed statistics on three families counted
//! by the Fishburn numbers: ascent sequences, permutations avoiding a
//! bivincular three-letter pattern, and Fishburn matrices.
//!
//! The crate provides:
//!
//! - the three object types with validation, text/JSON forms, and
//!   exhaustive enumeration in fixed canonical orders ([`objects`]);
//! - the pattern containment test and the active-site machinery
//!   ([`patterns`]);
//! - the insertion encoding between avoiders and ascent sequences, the
//!   removal/addition recursion between sequences and matrices, the
//!   anti-diagonal flip, and their composite ([`bijections`]);
//! - every statistic these maps transport, including the modified
//!   sequence and the polynomial refinements ([`statistics`]);
//! - independent ground truth: Fishburn numbers from the generating
//!   function and brute-force generation by filtering ([`oracle`]);
//! - an exhaustive desk-scale verification harness for the statistic
//!   transport, the joint-distribution symmetries, and the flip
//!   counterexample ([`verify`]).

pub mod bijections;
pub mod error;
pub mod objects;
pub mod oracle;
pub mod patterns;
pub mod statistics;
pub mod verify;

pub use error::Error;
pub use objects::{AscentSequence, FishburnMatrix, Permutation, StatPolynomial};
