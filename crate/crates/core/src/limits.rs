//! Size guards for exhaustive operations.
//!
//! Anything that walks all of `S_n` refuses sizes above the exhaustive limit.
//! The limit is process-wide so a front end (the CLI's `--limit`) can raise it
//! once for every operation.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::{Error, Result};

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 8;
pub const DEFAULT_ISOMORPHISM_LIMIT: usize = 64;

static EXHAUSTIVE: AtomicUsize = AtomicUsize::new(DEFAULT_EXHAUSTIVE_LIMIT);

pub fn exhaustive_limit() -> usize {
    EXHAUSTIVE.load(Ordering::Relaxed)
}

pub fn set_exhaustive_limit(limit: usize) {
    EXHAUSTIVE.store(limit, Ordering::Relaxed);
}

pub(crate) fn check_exhaustive(what: &'static str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    let limit = exhaustive_limit();
    if n > limit {
        return Err(Error::SizeLimit { what, n, limit });
    }
    Ok(())
}
