//! Exact Stanley depth by exhaustive interval-partition search.
//!
//! The characteristic poset of a target under a cap `g` (componentwise at
//! least the generator degrees) is the set of exponent vectors `a <= g`
//! satisfying the target predicate. Partitions of the poset into intervals
//! `[a, b]` correspond to Stanley decompositions: an interval contributes
//! slabs whose free variables are `{ j : b_j = g_j }`, so its value is the
//! count of coordinates at the cap, and the Stanley depth of the target is
//! the maximum over partitions of the minimum value.
//!
//! The search is a canonical backtracking: the lexicographically smallest
//! uncovered point must be the lower endpoint of its interval, so branch
//! over all upper endpoints whose interval fits in the uncovered region,
//! largest first. Feasibility is tested for the target value `t` from `n`
//! downward; the first feasible `t` is the answer. Two prunings keep the
//! search exact but fast: a static coverability pre-pass (a point with no
//! admissible upper endpoint kills the whole level) and a memo of failed
//! uncovered-set states.

use std::collections::HashSet;
use std::rc::Rc;

use itertools::Itertools;

use crate::decomp::{Slab, StanleyDecomposition, Target};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::oracle::Budgets;

/// A partition of the characteristic poset into intervals, the witness
/// object for an exact Stanley depth value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    /// The cap `g` the poset was built under.
    pub bound: Vec<u32>,
    /// Interval endpoints `(a, b)`, `a <= b` componentwise.
    pub intervals: Vec<(Monomial, Monomial)>,
}

impl IntervalPartition {
    /// `min` over intervals of the number of coordinates at the cap; the
    /// empty partition (zero module) reports the ambient dimension.
    pub fn value(&self) -> usize {
        self.intervals
            .iter()
            .map(|(_, b)| self.rho(b))
            .min()
            .unwrap_or(self.bound.len())
    }

    fn rho(&self, b: &Monomial) -> usize {
        (0..self.bound.len())
            .filter(|&j| b.exp(j) == self.bound[j])
            .count()
    }

    /// The induced Stanley decomposition: an interval `[a, b]` becomes one
    /// slab per choice of the capped-away coordinates, each with free set
    /// `{ j : b_j = g_j }` and origins running over `[a_j, b_j]` on the
    /// other coordinates.
    pub fn to_decomposition(&self, target: &Target) -> StanleyDecomposition {
        let n = self.bound.len();
        let mut slabs = Vec::new();
        for (a, b) in &self.intervals {
            let free: Vec<usize> = (0..n).filter(|&j| b.exp(j) == self.bound[j]).collect();
            let ranges = (0..n)
                .map(|j| {
                    if free.contains(&j) {
                        a.exp(j)..=a.exp(j)
                    } else {
                        a.exp(j)..=b.exp(j)
                    }
                })
                .collect_vec();
            for exps in ranges.into_iter().multi_cartesian_product() {
                slabs.push(Slab::new(Monomial::new(exps), free.clone()));
            }
        }
        StanleyDecomposition::new(target.clone(), slabs)
    }
}

/// Admissible upper endpoints for a lower endpoint: each entry is the
/// endpoint's box offset and the point ids of its interval.
type Candidates = Vec<(usize, Vec<usize>)>;

/// The finite poset together with the box geometry the search runs on.
struct CharPoset {
    n: usize,
    bound: Vec<u32>,
    strides: Vec<usize>,
    /// Box membership of the target predicate, indexed by box offset.
    in_poset: Vec<bool>,
    /// Lex-sorted box offsets of the poset points.
    points: Vec<usize>,
    /// Box offset -> point id (usize::MAX when not a point).
    point_id: Vec<usize>,
    /// Upward closed (ideal target) vs downward closed (quotient target).
    up_closed: bool,
    /// Point ids that must be lower endpoints of their intervals: the
    /// minimal generators of an ideal target have empty down-sets in the
    /// poset, so no interval can reach them from below.
    forced_starts: Vec<usize>,
}

impl CharPoset {
    fn build(target: &Target, bound: Vec<u32>, budgets: &Budgets) -> Result<Self> {
        let ideal = target.ideal();
        let n = ideal.dim();
        let box_size = bound
            .iter()
            .try_fold(1usize, |acc, &g| acc.checked_mul(g as usize + 1))
            .unwrap_or(usize::MAX);
        if box_size > budgets.poset_budget {
            return Err(Error::Budget {
                knob: "poset_budget",
                limit: budgets.poset_budget,
                required: box_size,
            });
        }

        let mut strides = vec![1usize; n];
        for j in (0..n.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (bound[j + 1] as usize + 1);
        }

        let ranges = bound.iter().map(|&g| 0..=g).collect_vec();
        let mut in_poset = Vec::with_capacity(box_size);
        let mut points = Vec::new();
        let mut point_id = vec![usize::MAX; box_size];
        for exps in ranges.into_iter().multi_cartesian_product() {
            let offset = in_poset.len();
            let is_point = target.member(&Monomial::new(exps));
            in_poset.push(is_point);
            if is_point {
                point_id[offset] = points.len();
                points.push(offset);
            }
        }
        let up_closed = matches!(target, Target::Ideal(_));
        let forced_starts = if up_closed {
            ideal
                .gens()
                .iter()
                .map(|g| {
                    let offset: usize = g
                        .exps()
                        .iter()
                        .zip(&strides)
                        .map(|(&e, &s)| e as usize * s)
                        .sum();
                    point_id[offset]
                })
                .collect()
        } else {
            vec![]
        };
        Ok(CharPoset {
            n,
            bound,
            strides,
            in_poset,
            points,
            point_id,
            up_closed,
            forced_starts,
        })
    }

    fn exps_of(&self, mut offset: usize) -> Vec<u32> {
        self.strides
            .iter()
            .map(|&stride| {
                let e = (offset / stride) as u32;
                offset %= stride;
                e
            })
            .collect()
    }

    fn rho(&self, exps: &[u32]) -> usize {
        (0..self.n).filter(|&j| exps[j] == self.bound[j]).count()
    }

    /// Upper endpoints `b >= a` admissible for value `t`, largest first,
    /// paired with the point ids of the interval `[a, b]`.
    fn candidates(&self, a_offset: usize, t: usize) -> Candidates {
        let a = self.exps_of(a_offset);
        let ranges = (0..self.n)
            .map(|j| (a[j]..=self.bound[j]).rev().collect_vec())
            .collect_vec();
        let mut out = Vec::new();
        for b in ranges.into_iter().multi_cartesian_product() {
            if self.rho(&b) < t {
                continue;
            }
            let b_offset: usize = b
                .iter()
                .zip(&self.strides)
                .map(|(&e, &s)| e as usize * s)
                .sum();
            // Intervals stay inside the poset iff the closed endpoint is a
            // point: the ideal poset is upward closed from a, the quotient
            // poset downward closed from b.
            if !self.up_closed && !self.in_poset[b_offset] {
                continue;
            }
            let cell_ranges = (0..self.n).map(|j| a[j]..=b[j]).collect_vec();
            let cells = cell_ranges
                .into_iter()
                .multi_cartesian_product()
                .map(|c| {
                    let off: usize = c
                        .iter()
                        .zip(&self.strides)
                        .map(|(&e, &s)| e as usize * s)
                        .sum();
                    debug_assert!(self.in_poset[off]);
                    self.point_id[off]
                })
                .collect_vec();
            out.push((b_offset, cells));
        }
        out
    }

    /// Static pre-pass: every poset point must admit some interval end of
    /// value `t` above it, otherwise no partition for `t` exists at all.
    fn all_coverable(&self, t: usize) -> bool {
        if self.up_closed {
            return true; // b = bound always works
        }
        self.points.iter().all(|&p| {
            let a = self.exps_of(p);
            let ranges = (0..self.n).map(|j| a[j]..=self.bound[j]).collect_vec();
            ranges.into_iter().multi_cartesian_product().any(|b| {
                let off: usize = b
                    .iter()
                    .zip(&self.strides)
                    .map(|(&e, &s)| e as usize * s)
                    .sum();
                self.rho(&b) >= t && self.in_poset[off]
            })
        })
    }
}

const MEMO_CAP: usize = 1 << 18;

struct Search<'a> {
    poset: &'a CharPoset,
    t: usize,
    covered: Vec<bool>,
    uncovered: usize,
    chosen: Vec<(usize, usize)>,
    candidate_cache: Vec<Option<Rc<Candidates>>>,
    failed: HashSet<Vec<u64>>,
}

impl<'a> Search<'a> {
    fn new(poset: &'a CharPoset, t: usize) -> Self {
        Search {
            poset,
            t,
            covered: vec![false; poset.points.len()],
            uncovered: poset.points.len(),
            chosen: Vec::new(),
            candidate_cache: vec![None; poset.points.len()],
            failed: HashSet::new(),
        }
    }

    fn covered_key(&self) -> Vec<u64> {
        let mut key = vec![0u64; self.covered.len().div_ceil(64)];
        for (i, &c) in self.covered.iter().enumerate() {
            if c {
                key[i / 64] |= 1 << (i % 64);
            }
        }
        key
    }

    fn options_for(&mut self, point: usize) -> Rc<Candidates> {
        if self.candidate_cache[point].is_none() {
            let a_offset = self.poset.points[point];
            self.candidate_cache[point] = Some(Rc::new(self.poset.candidates(a_offset, self.t)));
        }
        Rc::clone(self.candidate_cache[point].as_ref().unwrap())
    }

    fn run(&mut self, first_hint: usize) -> bool {
        if self.uncovered == 0 {
            return true;
        }
        let first = (first_hint..self.covered.len())
            .find(|&i| !self.covered[i])
            .expect("uncovered count is positive");
        let key = self.covered_key();
        if self.failed.contains(&key) {
            return false;
        }
        // A forced start with no interval left dooms the whole branch.
        for i in 0..self.poset.forced_starts.len() {
            let f = self.poset.forced_starts[i];
            if self.covered[f] {
                continue;
            }
            let opts = self.options_for(f);
            if !opts
                .iter()
                .any(|(_, cells)| cells.iter().all(|&id| !self.covered[id]))
            {
                if self.failed.len() < MEMO_CAP {
                    self.failed.insert(key);
                }
                return false;
            }
        }
        let options = self.options_for(first);
        for (b_offset, cells) in options.iter() {
            if cells.iter().any(|&id| self.covered[id]) {
                continue;
            }
            for &id in cells {
                self.covered[id] = true;
            }
            self.uncovered -= cells.len();
            self.chosen.push((self.poset.points[first], *b_offset));
            if self.run(first + 1) {
                return true;
            }
            self.chosen.pop();
            for &id in cells {
                self.covered[id] = false;
            }
            self.uncovered += cells.len();
        }
        if self.failed.len() < MEMO_CAP {
            self.failed.insert(key);
        }
        false
    }
}

/// Exact Stanley depth of the target with an optimal witness partition.
///
/// The default cap is the per-variable maximum generator degree; an
/// explicit `bound` must dominate it componentwise. The box under the cap
/// may not exceed `poset_budget` points.
pub fn sdepth_exact(
    target: &Target,
    bound: Option<&[u32]>,
    budgets: &Budgets,
) -> Result<(usize, IntervalPartition)> {
    let ideal = target.ideal();
    let n = ideal.dim();
    let degs: Vec<u32> = (0..n).map(|j| ideal.deg_in(j)).collect();
    let bound = match bound {
        None => degs,
        Some(b) => {
            if b.len() != n {
                return Err(Error::DimensionMismatch {
                    left: b.len(),
                    right: n,
                });
            }
            if b.iter().zip(&degs).any(|(&b, &d)| b < d) {
                return Err(Error::NotApplicable(
                    "poset cap must dominate the generator degrees".into(),
                ));
            }
            b.to_vec()
        }
    };

    if target.is_zero_module() {
        return Ok((
            n,
            IntervalPartition {
                bound,
                intervals: vec![],
            },
        ));
    }

    let poset = CharPoset::build(target, bound, budgets)?;
    for t in (0..=n).rev() {
        if !poset.all_coverable(t) {
            continue;
        }
        let mut search = Search::new(&poset, t);
        if search.run(0) {
            let intervals = search
                .chosen
                .iter()
                .map(|&(a, b)| {
                    (
                        Monomial::new(poset.exps_of(a)),
                        Monomial::new(poset.exps_of(b)),
                    )
                })
                .collect();
            return Ok((
                t,
                IntervalPartition {
                    bound: poset.bound.clone(),
                    intervals,
                },
            ));
        }
    }
    unreachable!("t = 0 is always feasible via singleton intervals")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::verify;
    use crate::ideal::MonomialIdeal;
    use crate::text::parse_ideal;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s).unwrap()
    }

    fn sdepth(target: Target) -> usize {
        let (value, witness) = sdepth_exact(&target, None, &Budgets::default()).unwrap();
        // Every witness must convert to a verified decomposition of the
        // same value.
        let d = witness.to_decomposition(&target);
        let report = verify(&d);
        assert!(report.valid, "witness invalid: {:?}", report.violation);
        assert_eq!(report.sdepth, value);
        value
    }

    #[test]
    fn sdepth_of_maximal_ideal() {
        assert_eq!(sdepth(Target::Ideal(ideal("n=3; x1, x2, x3"))), 2);
        assert_eq!(sdepth(Target::Quotient(ideal("n=3; x1, x2, x3"))), 0);
    }

    #[test]
    fn sdepth_of_non_saturated_quotient() {
        assert_eq!(sdepth(Target::Quotient(ideal("n=2; x1^2, x1*x2"))), 0);
        assert_eq!(sdepth(Target::Ideal(ideal("n=2; x1^2, x1*x2"))), 1);
    }

    #[test]
    fn sdepth_of_edge_triangle() {
        assert_eq!(
            sdepth(Target::Quotient(ideal("n=3; x1*x2, x2*x3, x1*x3"))),
            1
        );
        assert_eq!(sdepth(Target::Ideal(ideal("n=3; x1*x2, x2*x3, x1*x3"))), 2);
    }

    #[test]
    fn sdepth_of_three_generator_example() {
        let i = ideal("n=3; x1^3, x2^2*x3^2, x1*x2^3*x3");
        assert_eq!(sdepth(Target::Ideal(i)), 2);
    }

    #[test]
    fn sdepth_of_principal_cases() {
        assert_eq!(sdepth(Target::Quotient(ideal("n=2; x1*x2^2"))), 1);
        assert_eq!(sdepth(Target::Ideal(ideal("n=2; x1*x2^2"))), 2);
        assert_eq!(sdepth(Target::Quotient(ideal("n=1; x1^3"))), 0);
    }

    #[test]
    fn zero_module_conventions() {
        let (v, w) = sdepth_exact(
            &Target::Ideal(MonomialIdeal::zero(3)),
            None,
            &Budgets::default(),
        )
        .unwrap();
        assert_eq!(v, 3);
        assert!(w.intervals.is_empty());

        let (v, _) = sdepth_exact(
            &Target::Quotient(MonomialIdeal::unit(2)),
            None,
            &Budgets::default(),
        )
        .unwrap();
        assert_eq!(v, 2);

        // S/0 = S has a single full slab.
        let (v, _) = sdepth_exact(
            &Target::Quotient(MonomialIdeal::zero(2)),
            None,
            &Budgets::default(),
        )
        .unwrap();
        assert_eq!(v, 2);
    }

    #[test]
    fn explicit_bound_and_budget() {
        let i = ideal("n=2; x1, x2");
        let t = Target::Ideal(i);
        let (v, _) = sdepth_exact(&t, Some(&[2, 2]), &Budgets::default()).unwrap();
        assert_eq!(v, 1);
        assert!(sdepth_exact(&t, Some(&[0, 0]), &Budgets::default()).is_err());
        assert!(sdepth_exact(&t, Some(&[1, 1, 1]), &Budgets::default()).is_err());

        let tight = Budgets {
            poset_budget: 3,
            ..Budgets::default()
        };
        match sdepth_exact(&t, None, &tight) {
            Err(Error::Budget { knob, .. }) => assert_eq!(knob, "poset_budget"),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
