//! Exact arithmetic, Farey structure, even continued fractions and the knot condition.

mod cf;
mod farey;
mod fraction;
mod knot;

pub use cf::{convergents, evaluate_cf, even_cf, even_cf_expansions};
pub use farey::{farey_parents, mediant, parity_class, ParityClass};
pub use fraction::{reduce, Fraction};
pub use knot::{detect_pretzel_exception, is_knot, PretzelException, TangleList};

use num_bigint::BigInt;
use serde::Serializer;

/// Serializes a big integer as a decimal string.
pub fn ser_bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// Serializes an optional big integer as a decimal string or null.
pub fn ser_opt_bigint<S: Serializer>(n: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_str(&n.to_string()),
        None => s.serialize_none(),
    }
}
