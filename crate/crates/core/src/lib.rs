//! Maximum cycle lengths of the squaring map x ↦ x² mod m.
//!
//! Two independent routes compute L(m), the length of the longest cycle of
//! the squaring map on residues {0, …, m−1}:
//!
//! - [`formulas`] evaluates closed forms built from multiplicative orders
//!   (L(p) = ord_n(2) for n the odd part of p−1, the lcm rule for prime
//!   squares, the p-power ladder, and the lcm over prime-power factors).
//! - [`graph`] is the brute-force oracle: it walks the full functional graph
//!   and enumerates every cycle.
//!
//! [`verify`] cross-checks the two routes against each other and against the
//! embedded fixture tables, and [`num_core`] holds the exact 64-bit modular
//! arithmetic everything else is built on.

pub mod error;
pub mod formulas;
pub mod graph;
pub mod num_core;
pub mod verify;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Serializes through `serde_json::Value` so that map keys come out sorted.
/// Parsing the output and re-emitting it yields the identical byte string.
pub fn to_canonical_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable value");
    serde_json::to_string_pretty(&v).expect("json emit")
}
