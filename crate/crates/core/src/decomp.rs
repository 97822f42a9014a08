//! Stanley decompositions: slabs, disjointness, and exact verification.
//!
//! A slab `m*K[Z]` is the set of monomials that agree with `m` outside `Z`
//! and dominate it on `Z`. A decomposition claims that a list of slabs
//! partitions the monomials of its target (an ideal `I`, or the complement
//! of `I` standing for `S/I`). Verification is exact and finite: beyond the
//! per-variable bound `B_j` (the largest coordinate appearing in any slab
//! origin or ideal generator) every equality constraint is false and every
//! domination constraint is true, so checking the box with one sentinel
//! value `B_j + 1` per coordinate decides membership for all monomials.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// One Stanley space `origin * K[free]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slab {
    pub origin: Monomial,
    pub free: BTreeSet<usize>,
}

impl Slab {
    pub fn new(origin: Monomial, free: impl IntoIterator<Item = usize>) -> Self {
        let free: BTreeSet<usize> = free.into_iter().collect();
        debug_assert!(free.iter().all(|&j| j < origin.dim()));
        Slab { origin, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Membership: `u` agrees with the origin off the free variables and
    /// dominates it on them.
    pub fn member(&self, u: &Monomial) -> bool {
        assert_eq!(self.origin.dim(), u.dim());
        (0..u.dim()).all(|j| {
            if self.free.contains(&j) {
                u.exp(j) >= self.origin.exp(j)
            } else {
                u.exp(j) == self.origin.exp(j)
            }
        })
    }
}

/// Decides whether two slabs share a monomial, coordinate by coordinate:
/// a coordinate free in both is always compatible; free in exactly one
/// requires the fixed side to dominate the free side's origin; free in
/// neither requires equality. The slabs intersect iff every coordinate is
/// compatible.
pub fn slabs_disjoint(a: &Slab, b: &Slab) -> bool {
    assert_eq!(a.origin.dim(), b.origin.dim());
    (0..a.origin.dim()).any(|j| {
        let (fa, fb) = (a.free.contains(&j), b.free.contains(&j));
        let (oa, ob) = (a.origin.exp(j), b.origin.exp(j));
        match (fa, fb) {
            (true, true) => false,
            (true, false) => ob < oa,
            (false, true) => oa < ob,
            (false, false) => oa != ob,
        }
    })
}

/// What a decomposition covers: the monomials of `I`, or those of `S/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Ideal(MonomialIdeal),
    Quotient(MonomialIdeal),
}

impl Target {
    pub fn ideal(&self) -> &MonomialIdeal {
        match self {
            Target::Ideal(i) | Target::Quotient(i) => i,
        }
    }

    pub fn dim(&self) -> usize {
        self.ideal().dim()
    }

    /// True iff the monomial belongs to the target set.
    pub fn member(&self, u: &Monomial) -> bool {
        match self {
            Target::Ideal(i) => i.contains(u),
            Target::Quotient(i) => !i.contains(u),
        }
    }

    /// True iff the target is the zero module (no monomials at all).
    pub fn is_zero_module(&self) -> bool {
        match self {
            Target::Ideal(i) => i.is_zero(),
            Target::Quotient(i) => i.is_unit(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub target: Target,
    pub slabs: Vec<Slab>,
}

impl StanleyDecomposition {
    pub fn new(target: Target, slabs: Vec<Slab>) -> Self {
        StanleyDecomposition { target, slabs }
    }

    pub fn dim(&self) -> usize {
        self.target.dim()
    }

    /// `min |Z_i|` over the slabs. An empty slab list is only meaningful
    /// for the zero module, where the convention `n` applies; anything
    /// else is an error.
    pub fn sdepth(&self) -> Result<usize> {
        match self.slabs.iter().map(Slab::dim).min() {
            Some(d) => Ok(d),
            None if self.target.is_zero_module() => Ok(self.dim()),
            None => Err(Error::EmptyDecomposition),
        }
    }
}

/// First violation found by [`verify`], if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Slabs at these indices share a monomial.
    Overlap { first: usize, second: usize },
    /// A box point whose slab-union membership disagrees with the target.
    Coverage {
        point: Monomial,
        in_slabs: bool,
        in_target: bool,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap { first, second } => {
                write!(f, "slabs {first} and {second} overlap")
            }
            Violation::Coverage {
                point,
                in_slabs,
                in_target,
            } => write!(
                f,
                "coverage mismatch at {point}: in slabs = {in_slabs}, in target = {in_target}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Minimum slab dimension, reported even when invalid. Falls back to
    /// the zero-module convention `n` for an empty slab list.
    pub sdepth: usize,
    pub violation: Option<Violation>,
    /// Set when the target is the zero module and the convention applied.
    pub zero_module: bool,
}

/// Exact verification: pairwise disjointness plus coverage of the finite
/// box `∏ {0..=B_j+1}` where `B_j` bounds every constraint coordinate.
pub fn verify(d: &StanleyDecomposition) -> VerifyReport {
    let violation = first_violation(d);
    report(d, violation)
}

/// Like [`verify`] but collects every violation instead of stopping at the
/// first.
pub fn verify_exhaustive(d: &StanleyDecomposition) -> Vec<Violation> {
    let mut all = Vec::new();
    scan(d, |v| {
        all.push(v);
        true
    });
    all
}

fn report(d: &StanleyDecomposition, violation: Option<Violation>) -> VerifyReport {
    let zero_module = d.slabs.is_empty() && d.target.is_zero_module();
    let sdepth = d
        .slabs
        .iter()
        .map(Slab::dim)
        .min()
        .unwrap_or_else(|| d.dim());
    VerifyReport {
        valid: violation.is_none(),
        sdepth,
        violation,
        zero_module,
    }
}

fn first_violation(d: &StanleyDecomposition) -> Option<Violation> {
    let mut found = None;
    scan(d, |v| {
        found = Some(v);
        false
    });
    found
}

/// Runs the disjointness and coverage checks in a fixed deterministic
/// order, feeding violations to `keep_going` until it returns false.
fn scan(d: &StanleyDecomposition, mut keep_going: impl FnMut(Violation) -> bool) {
    let n = d.dim();
    for (i, a) in d.slabs.iter().enumerate() {
        for (jj, b) in d.slabs.iter().enumerate().skip(i + 1) {
            if !slabs_disjoint(a, b)
                && !keep_going(Violation::Overlap {
                    first: i,
                    second: jj,
                })
            {
                return;
            }
        }
    }

    // Coverage bound: one past the largest coordinate mentioned by any
    // constraint, so the sentinel value stands in for all larger exponents.
    let mut bound = vec![0u32; n];
    for g in d.target.ideal().gens() {
        for (j, b) in bound.iter_mut().enumerate() {
            *b = (*b).max(g.exp(j));
        }
    }
    for s in &d.slabs {
        for (j, b) in bound.iter_mut().enumerate() {
            *b = (*b).max(s.origin.exp(j));
        }
    }

    let ranges = bound.iter().map(|&b| 0..=b + 1).collect_vec();
    for exps in ranges.into_iter().multi_cartesian_product() {
        let point = Monomial::new(exps);
        let in_slabs = d.slabs.iter().any(|s| s.member(&point));
        let in_target = d.target.member(&point);
        if in_slabs != in_target
            && !keep_going(Violation::Coverage {
                point,
                in_slabs,
                in_target,
            })
        {
            return;
        }
    }
}
