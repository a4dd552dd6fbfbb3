//! Named synthetic environments.
//!
//! Seven weight layouts spanning easy and hard identification regimes: a
//! near-uniform field with one strong item, plateaued groups, arithmetic and
//! geometric decay at two sizes, and a harmonic layout whose weights rise
//! with the index (so the identity ordering is far from the value ordering).

use crate::error::{Error, Result};
use crate::mnl::MnlInstance;

/// Names accepted by [`environment`].
pub const ENVIRONMENT_NAMES: [&str; 7] = ["g1", "g4", "arith", "geo", "har", "arithb", "geob"];

/// Builds a named preset instance.
pub fn environment(name: &str) -> Result<MnlInstance> {
    let theta: Vec<f64> = match name {
        // One strong item over a flat field.
        "g1" => {
            let mut t = vec![0.2; 16];
            t[0] = 0.8;
            t
        }
        // Three plateaus and a tail of near-zero items.
        "g4" => {
            let mut t = vec![0.01; 16];
            t[0] = 1.0;
            for x in t.iter_mut().take(6).skip(1) {
                *x = 0.7;
            }
            for x in t.iter_mut().take(11).skip(6) {
                *x = 0.5;
            }
            t
        }
        // Arithmetic decay by 0.06 down to 0.10.
        "arith" => (0..16).map(|i| 1.0 - 0.06 * i as f64).collect(),
        // Geometric decay by ratio 0.8.
        "geo" => (0..16).map(|i| 0.8f64.powi(i)).collect(),
        // Harmonic: item 1 at weight 1, item i at 1 - 1/i; weights rise
        // with the index from item 2 on.
        "har" => (1..=16)
            .map(|i| if i == 1 { 1.0 } else { 1.0 - 1.0 / i as f64 })
            .collect(),
        // Arithmetic decay by 0.02 over 50 items.
        "arithb" => (0..50).map(|i| 1.0 - 0.02 * i as f64).collect(),
        // Geometric decay by ratio 0.9 over 50 items.
        "geob" => (0..50).map(|i| 0.9f64.powi(i)).collect(),
        other => return Err(Error::UnknownEnvironment { name: other.to_string() }),
    };
    MnlInstance::new(theta)
}
