//! Ground-truth engines: exact Stanley depth and exact depth.
//!
//! Both oracles are exhaustive and integer-exact. [`sdepth_exact`] searches
//! interval partitions of the characteristic poset; [`depth_exact`] reads
//! the projective dimension off multigraded Betti numbers computed by
//! simplicial homology over the rationals. Budgets make the cost of a call
//! explicit; exceeding one is an error naming the knob, never a silent
//! approximation.

mod koszul;
mod linalg;
mod poset;

pub use koszul::{depth_exact, multigraded_betti};
pub use linalg::rank;
pub use poset::{sdepth_exact, IntervalPartition};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Cost caps for the oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of points in the characteristic poset box.
    pub poset_budget: usize,
    /// Maximum number of minimal generators for the Betti computation.
    pub betti_max_gens: usize,
    /// Maximum ambient dimension for the Betti computation.
    pub betti_max_vars: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            poset_budget: 20_000,
            betti_max_gens: 12,
            betti_max_vars: 6,
        }
    }
}

/// `depth(S/I) = 0` iff `I` is not saturated.
pub fn depth_zero(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(!ideal.saturate().1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    #[test]
    fn depth_zero_examples() {
        let i = parse_ideal("n=2; x1^2, x1*x2").unwrap();
        assert!(depth_zero(&i).unwrap());
        let p = parse_ideal("n=2; x1").unwrap();
        assert!(!depth_zero(&p).unwrap());
        assert!(depth_zero(&MonomialIdeal::zero(2)).is_err());
        assert!(depth_zero(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn depth_zero_matches_depth_exact() {
        for text in [
            "n=2; x1^2, x1*x2",
            "n=3; x1*x2, x2*x3, x1*x3",
            "n=3; x1, x2^2, x3^3",
            "n=3; x1*x2^2",
            "n=2; x1, x2",
        ] {
            let i = parse_ideal(text).unwrap();
            let d = depth_exact(&i, &Budgets::default()).unwrap();
            assert_eq!(depth_zero(&i).unwrap(), d == 0, "{text}");
        }
    }
}
