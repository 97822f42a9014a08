//! Monomial ideals with exact arithmetic: minimal generators, colon,
//! intersection, saturation, restriction, slicing and powers.
//!
//! An ideal is stored as its unique minimal generating set, sorted
//! lexicographically on exponent vectors so every operation has
//! byte-for-byte reproducible output. The zero ideal is the empty
//! generator set; the unit ideal is generated by `1`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal from an arbitrary generating set, reducing it to the
    /// unique minimal one (divisibility-minimal elements, deduplicated,
    /// sorted lexicographically).
    pub fn new(dim: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: g.dim(),
                });
            }
        }
        Ok(Self::minimalize(dim, gens))
    }

    fn minimalize(dim: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.lex_cmp(b));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        'outer: for (i, g) in gens.iter().enumerate() {
            for (j, h) in gens.iter().enumerate() {
                if i != j && h.divides(g) {
                    continue 'outer;
                }
            }
            minimal.push(g.clone());
        }
        MonomialIdeal { dim, gens: minimal }
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: vec![] }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![Monomial::one(dim)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        let dim = m.dim();
        MonomialIdeal { dim, gens: vec![m] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The minimal generating set `G(I)`, in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// `g(I)`, the number of minimal generators.
    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_identity()
    }

    /// Proper: neither zero nor the whole ring.
    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Monomial membership: true iff some minimal generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        assert_eq!(self.dim, u.dim());
        self.gens.iter().any(|g| g.divides(u))
    }

    /// The colon ideal `(I : v) = { w : v*w in I }`.
    pub fn colon(&self, v: &Monomial) -> Self {
        assert_eq!(self.dim, v.dim());
        Self::minimalize(self.dim, self.gens.iter().map(|u| u.div_gcd(v)).collect())
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let gens = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(u, w)| u.lcm(w))
            .collect();
        Self::minimalize(self.dim, gens)
    }

    /// `v * I`, the ideal generated by `v*u` for `u in G(I)`.
    pub fn multiply(&self, v: &Monomial) -> Self {
        assert_eq!(self.dim, v.dim());
        // Multiplication preserves divisibility, so minimality is kept.
        MonomialIdeal {
            dim: self.dim,
            gens: self.gens.iter().map(|u| u.mul(v)).collect(),
        }
    }

    /// `(I : (x1,...,xn)) = ∩_j (I : x_j)`. The zero and unit ideals are
    /// returned unchanged.
    pub fn colon_maximal(&self) -> Self {
        if !self.is_proper() {
            return self.clone();
        }
        let mut acc = self.colon(&Monomial::var(0, self.dim));
        for j in 1..self.dim {
            acc = acc.intersect(&self.colon(&Monomial::var(j, self.dim)));
        }
        acc
    }

    /// The saturation `I^sat`: the fixed point of iterated `colon_maximal`.
    /// The flag is true iff `I` was already saturated.
    pub fn saturate(&self) -> (Self, bool) {
        let mut current = self.clone();
        loop {
            let next = current.colon_maximal();
            if next == current {
                return (current.clone(), &current == self);
            }
            current = next;
        }
    }

    /// Factors `I = v * I'` with `v` the gcd of all generators and
    /// `I' = (I : v)` gcd-free.
    pub fn gcd_part(&self) -> Result<(Monomial, Self)> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut v = self.gens[0].clone();
        for u in &self.gens[1..] {
            v = v.gcd(u);
        }
        let prime = self.colon(&v);
        Ok((v, prime))
    }

    /// Structural statistics; see [`IdealStats`].
    pub fn stats(&self) -> IdealStats {
        let g = self.num_gens();
        let mut degs = vec![0u32; self.dim];
        for u in &self.gens {
            for (j, d) in degs.iter_mut().enumerate() {
                *d = (*d).max(u.exp(j));
            }
        }
        let supp: Vec<usize> = (0..self.dim).filter(|&j| degs[j] > 0).collect();
        let (c, is_complete_intersection) = match self.gcd_part() {
            Ok((_, prime)) => {
                let psupp: std::collections::BTreeSet<usize> =
                    prime.gens.iter().flat_map(|u| u.support()).collect();
                let ci = prime
                    .gens
                    .iter()
                    .tuple_combinations()
                    .all(|(a, b)| a.gcd(b).is_identity());
                (psupp.len(), ci)
            }
            // Zero ideal: no generators, both conditions hold vacuously.
            Err(_) => (0, true),
        };
        let pure_power_vars = (0..self.dim)
            .filter(|&j| self.gens.iter().any(|u| u.exp(j) > 0 && u.support() == [j]))
            .collect();
        IdealStats {
            g,
            c,
            supp,
            degs,
            is_principal: self.is_principal(),
            is_complete_intersection,
            pure_power_vars,
        }
    }

    /// Maximum degree of any generator in variable `var`.
    pub fn deg_in(&self, var: usize) -> u32 {
        self.gens.iter().map(|u| u.exp(var)).max().unwrap_or(0)
    }

    /// `I ∩ K[Z]` as an ideal of the subring on the variables in `vars`
    /// (given as sorted 0-based indices), generated by the generators whose
    /// support lies in `vars` and re-indexed into `|vars|` coordinates.
    pub fn restrict(&self, vars: &[usize]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::NotApplicable(
                "restriction requires a nonempty variable subset".into(),
            ));
        }
        let gens = self
            .gens
            .iter()
            .filter(|u| u.support().iter().all(|j| vars.contains(j)))
            .map(|u| Monomial::new(vars.iter().map(|&j| u.exp(j)).collect()))
            .collect();
        // Restriction of a minimal set stays minimal.
        Ok(MonomialIdeal {
            dim: vars.len(),
            gens,
        })
    }

    /// The slice `I_j` in one fewer variable: generated by the generators
    /// with `deg_var <= j`, with the `var` coordinate removed.
    ///
    /// This is the layer ideal with `I ∩ x_var^j S' = x_var^j * I_j` for
    /// `j <= deg_var(I)`.
    pub fn slice(&self, var: usize, j: u32) -> Result<Self> {
        let q = self.deg_in(var);
        if j > q {
            return Err(Error::OutOfRange {
                what: "slice layer",
                value: j as usize,
                max: q as usize,
            });
        }
        let gens = self
            .gens
            .iter()
            .filter(|u| u.exp(var) <= j)
            .map(|u| {
                Monomial::new(
                    u.exps()
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != var)
                        .map(|(_, &e)| e)
                        .collect(),
                )
            })
            .collect();
        Ok(Self::minimalize(self.dim - 1, gens))
    }

    /// `I^k`, generated by all k-fold products of generators.
    pub fn power(&self, k: u32) -> Self {
        assert!(k >= 1, "power requires k >= 1");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let gens = self
            .gens
            .iter()
            .combinations_with_replacement(k as usize)
            .map(|combo| {
                combo
                    .into_iter()
                    .fold(Monomial::one(self.dim), |acc, u| acc.mul(u))
            })
            .collect();
        Self::minimalize(self.dim, gens)
    }
}

/// Structural statistics of an ideal.
///
/// `degs[j]` is the maximum degree of variable `j+1` over the generators;
/// `c` is the support size of the gcd-free part; `pure_power_vars` lists the
/// variables of which some generator is a pure power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealStats {
    pub g: usize,
    pub c: usize,
    pub supp: Vec<usize>,
    pub degs: Vec<u32>,
    pub is_principal: bool,
    pub is_complete_intersection: bool,
    pub pure_power_vars: Vec<usize>,
}

impl std::fmt::Display for MonomialIdeal {
    /// Generator list `x1^3, x2^2*x3^2`; `0` for the zero ideal.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.gens.iter().map(|g| g.to_string()).join(", "))
    }
}
