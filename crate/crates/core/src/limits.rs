//! Global size caps for ring tables and ideal lattices.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 4096;
pub const LATTICE_CAP: usize = 100_000;
/// Dense `u32` tables put a hard ceiling on the order regardless of configuration.
pub const MAX_ORDER: usize = 1 << 16;

pub const ORDER_CAP_ENV: &str = "SDFA_ORDER_CAP";

/// Largest ring order any construction will build. Read once from
/// `SDFA_ORDER_CAP`, falling back to 4096.
pub fn order_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(ORDER_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v >= 2)
            .map(|v| v.min(MAX_ORDER))
            .unwrap_or(DEFAULT_ORDER_CAP)
    })
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    let limit = order_cap();
    if order > limit {
        return Err(Error::Resource {
            what: "ring order",
            actual: order,
            limit,
        });
    }
    Ok(())
}
