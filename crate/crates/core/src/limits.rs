//! Desk-scale caps on problem sizes.
//!
//! Every cap can be overridden at once through the `QSYMQ_MAX_N` environment
//! variable, which is read the first time [`Limits::current`] is called.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const ENV_MAX_N: &str = "QSYMQ_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by closed-form counting (Catalan, ballot, ...).
    pub counting_max_n: usize,
    /// Largest `n` for exhaustive enumeration of Dyck vectors and words.
    pub enumeration_max_n: usize,
    /// Largest `n` for the linear-algebra oracle.
    pub oracle_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            counting_max_n: 20,
            enumeration_max_n: 12,
            oracle_max_n: 6,
        }
    }
}

impl Limits {
    /// Caps with every field replaced by `max_n`.
    pub fn uniform(max_n: usize) -> Self {
        Limits {
            counting_max_n: max_n,
            enumeration_max_n: max_n,
            oracle_max_n: max_n,
        }
    }

    /// Parses an override value as found in `QSYMQ_MAX_N`.
    pub fn from_override(value: Option<&str>) -> Self {
        match value.and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(max_n) => Limits::uniform(max_n),
            None => Limits::default(),
        }
    }

    /// Process-wide caps (defaults unless `QSYMQ_MAX_N` is set).
    pub fn current() -> Limits {
        static CURRENT: OnceLock<Limits> = OnceLock::new();
        *CURRENT.get_or_init(|| Limits::from_override(std::env::var(ENV_MAX_N).ok().as_deref()))
    }
}

pub(crate) fn check(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::Resource {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_parsing() {
        assert_eq!(Limits::from_override(None), Limits::default());
        assert_eq!(Limits::from_override(Some("garbage")), Limits::default());
        assert_eq!(Limits::from_override(Some(" 9 ")), Limits::uniform(9));
    }

    #[test]
    fn check_reports_cap() {
        assert!(check("n", 12, 12).is_ok());
        let err = check("n", 13, 12).unwrap_err();
        assert_eq!(
            err,
            Error::Resource {
                what: "n",
                requested: 13,
                limit: 12
            }
        );
    }
}
