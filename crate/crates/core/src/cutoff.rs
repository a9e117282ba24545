use crate::error::{Error, Result};
use crate::symcore::SizeVector;

/// Limits on exhaustive enumeration, per coordinate of a size vector.
///
/// Exceeding a limit is reported as [`Error::CutoffExceeded`]; nothing is
/// truncated silently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cutoffs {
    /// Largest target size for which injections are enumerated.
    pub injections: usize,
    /// Largest group size for the brute-force oracles.
    pub oracle: usize,
    /// Largest `n` for which every element of `S_n` is listed.
    pub elements: usize,
}

impl Default for Cutoffs {
    fn default() -> Self {
        Cutoffs {
            injections: 8,
            oracle: 6,
            elements: 8,
        }
    }
}

impl Cutoffs {
    /// Uses `limit` for the brute-force oracles and keeps the other defaults
    /// at least as large.
    pub fn with_oracle_limit(limit: usize) -> Self {
        let base = Cutoffs::default();
        Cutoffs {
            injections: base.injections.max(limit),
            oracle: limit,
            elements: base.elements.max(limit),
        }
    }

    fn check(what: &'static str, sizes: &SizeVector, limit: usize) -> Result<()> {
        match sizes.coords().iter().find(|&&c| c > limit) {
            Some(&value) => Err(Error::CutoffExceeded { what, value, limit }),
            None => Ok(()),
        }
    }

    pub fn check_injections(&self, sizes: &SizeVector) -> Result<()> {
        Self::check("injection enumeration", sizes, self.injections)
    }

    pub fn check_oracle(&self, sizes: &SizeVector) -> Result<()> {
        Self::check("brute-force oracle", sizes, self.oracle)
    }

    pub fn check_elements(&self, sizes: &SizeVector) -> Result<()> {
        Self::check("group element enumeration", sizes, self.elements)
    }
}
