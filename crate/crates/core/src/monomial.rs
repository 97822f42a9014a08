//! Monomials as exponent vectors with exact lattice arithmetic.
//!
//! A monomial in `K[x1,...,xn]` is identified with its exponent vector in
//! `N^n`. Divisibility is the componentwise order; gcd and lcm are the
//! componentwise min and max.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest exponent accepted from user input.
pub const MAX_EXPONENT: u64 = 1 << 31;

/// A monomial `x1^e1 * ... * xn^en`, stored as its exponent vector.
///
/// The identity monomial `1` is the all-zeros vector. Variables are indexed
/// from 0 internally; the text form uses `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The identity monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The single variable `x_{var}` (0-based) in `n` variables.
    pub fn var(var: usize, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[var] = 1;
        Monomial { exps }
    }

    /// `x_{var}^k` in `n` variables.
    pub fn var_pow(var: usize, k: u32, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[var] = k;
        Monomial { exps }
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Indices of the variables that divide this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
            .collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    /// Componentwise minimum. Panics on dimension mismatch; use
    /// [`lattice_ops`] for the checked variant.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// True iff `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.dim(), other.dim());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// `self / other`, assuming `other` divides `self`. Panics otherwise.
    pub fn div_exact(&self, other: &Self) -> Self {
        assert!(other.divides(self), "div_exact without divisibility");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// `self / gcd(self, other)`: the part of `self` left after removing
    /// everything `other` can cancel.
    pub fn div_gcd(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - a.min(b))
                .collect(),
        }
    }

    /// Lexicographic comparison of exponent vectors (the canonical order
    /// used for generator lists and deterministic output).
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

/// Result of [`lattice_ops`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeOps {
    pub gcd: Monomial,
    pub lcm: Monomial,
    pub divides: bool,
}

/// Computes gcd, lcm and the divisibility flag `u | w` in one pass,
/// checking that the two monomials share an ambient dimension.
pub fn lattice_ops(u: &Monomial, w: &Monomial) -> Result<LatticeOps> {
    u.check_dim(w)?;
    Ok(LatticeOps {
        gcd: u.gcd(w),
        lcm: u.lcm(w),
        divides: u.divides(w),
    })
}

impl fmt::Display for Monomial {
    /// Text form: `x1^3*x2`, with `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lattice_ops_basic() {
        // u = x1^2, w = x1*x2
        let ops = lattice_ops(&m(&[2, 0]), &m(&[1, 1])).unwrap();
        assert_eq!(ops.gcd, m(&[1, 0]));
        assert_eq!(ops.lcm, m(&[2, 1]));
        assert!(!ops.divides);
    }

    #[test]
    fn lattice_ops_identity() {
        let ops = lattice_ops(&m(&[0]), &m(&[3])).unwrap();
        assert_eq!(ops.gcd, m(&[0]));
        assert_eq!(ops.lcm, m(&[3]));
        assert!(ops.divides);
    }

    #[test]
    fn lattice_ops_from_three_generator_example() {
        // u = x2^2, w = x1^3 in n=3
        let ops = lattice_ops(&m(&[0, 2, 0]), &m(&[3, 0, 0])).unwrap();
        assert_eq!(ops.gcd, Monomial::one(3));
        assert_eq!(ops.lcm, m(&[3, 2, 0]));
        assert!(!ops.divides);
    }

    #[test]
    fn lattice_ops_rejects_dimension_mismatch() {
        assert_eq!(
            lattice_ops(&m(&[1]), &m(&[1, 2])),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(m(&[3, 0, 0]).to_string(), "x1^3");
        assert_eq!(m(&[1, 3, 1]).to_string(), "x1*x2^3*x3");
        assert_eq!(Monomial::one(4).to_string(), "1");
    }
}
