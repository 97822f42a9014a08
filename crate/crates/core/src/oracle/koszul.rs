//! Exact depth via upper Koszul simplicial homology.
//!
//! The multigraded Betti numbers of a monomial ideal live only in degrees
//! that are lcms of subsets of the minimal generators. At such a degree
//! `a`, the rank of the i-th Betti number equals the rank of the reduced
//! homology `H_{i-1}` of the upper Koszul complex
//! `K^a(I) = { squarefree sets s : x^a / x^s in I }`, computed here over
//! the rationals through integer boundary matrices and fraction-free rank.
//! The projective dimension of `S/I` is one more than the top nonzero
//! Betti degree of `I`, and depth follows from `depth = n - pd`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::oracle::linalg::rank;
use crate::oracle::Budgets;

/// Nonzero multigraded Betti numbers of the ideal: `(i, degree) -> rank`,
/// with `i` the homological position (`i = 0` marks minimal generators).
pub fn multigraded_betti(
    ideal: &MonomialIdeal,
    budgets: &Budgets,
) -> Result<BTreeMap<(usize, Monomial), usize>> {
    let g = ideal.num_gens();
    let n = ideal.dim();
    if g > budgets.betti_max_gens {
        return Err(Error::Budget {
            knob: "betti_max_gens",
            limit: budgets.betti_max_gens,
            required: g,
        });
    }
    if n > budgets.betti_max_vars {
        return Err(Error::Budget {
            knob: "betti_max_vars",
            limit: budgets.betti_max_vars,
            required: n,
        });
    }

    let mut degrees = BTreeSet::new();
    for mask in 1u32..(1 << g) {
        let mut lcm = Monomial::one(n);
        for (i, gen) in ideal.gens().iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = lcm.lcm(gen);
            }
        }
        degrees.insert(lcm);
    }

    let mut betti = BTreeMap::new();
    for a in degrees {
        for (i, rank) in koszul_homology_ranks(ideal, &a) {
            if rank > 0 {
                betti.insert((i, a.clone()), rank);
            }
        }
    }
    Ok(betti)
}

/// Ranks of the reduced homology of `K^a(I)` indexed as Betti positions:
/// position `i` reports the rank of `H_{i-1}`.
fn koszul_homology_ranks(ideal: &MonomialIdeal, a: &Monomial) -> Vec<(usize, usize)> {
    let supp = a.support();
    let k = supp.len();
    // Faces of K^a, grouped by cardinality; a face is a subset of supp(a)
    // whose removal from a still lies in I. The empty face is present
    // because x^a itself is in I.
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for mask in 0u32..(1 << k) {
        let mut exps = a.exps().to_vec();
        for (bit, &j) in supp.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                exps[j] -= 1;
            }
        }
        if ideal.contains(&Monomial::new(exps)) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }

    // Boundary ranks; boundaries[d] is the rank of the map from faces of
    // cardinality d to cardinality d-1 (d = 0 maps the empty face to 0).
    let mut boundary_rank = vec![0usize; k + 2];
    for d in 1..=k {
        boundary_rank[d] = rank(boundary_matrix(&faces[d - 1], &faces[d]));
    }

    (0..=k)
        .map(|i| {
            // dim H_{i-1} = #faces of cardinality i - rank d_i - rank d_{i+1}
            let dim = faces[i].len();
            let h = dim - boundary_rank[i] - boundary_rank.get(i + 1).copied().unwrap_or(0);
            (i, h)
        })
        .collect()
}

/// Signed incidence matrix between faces of consecutive cardinality.
fn boundary_matrix(lower: &[u32], upper: &[u32]) -> Vec<Vec<BigInt>> {
    let index: BTreeMap<u32, usize> = lower.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut matrix = vec![vec![BigInt::from(0); upper.len()]; lower.len()];
    for (col, &face) in upper.iter().enumerate() {
        let mut sign = 1i32;
        for bit in 0..32 {
            if face & (1 << bit) != 0 {
                let sub = face & !(1 << bit);
                if let Some(&row) = index.get(&sub) {
                    matrix[row][col] = BigInt::from(sign);
                }
                sign = -sign;
            }
        }
    }
    matrix
}

/// `depth(S/I) = n - pd(S/I)` with `pd(S/I)` read off the Betti table of
/// `I`. The zero ideal gives `n`; the unit ideal has no depth (the module
/// is zero) and is rejected.
pub fn depth_exact(ideal: &MonomialIdeal, budgets: &Budgets) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(ideal.dim());
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let betti = multigraded_betti(ideal, budgets)?;
    let pd_ideal = betti.keys().map(|(i, _)| *i).max().unwrap_or(0);
    Ok(ideal.dim() - (pd_ideal + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s).unwrap()
    }

    fn depth(s: &str) -> usize {
        depth_exact(&ideal(s), &Budgets::default()).unwrap()
    }

    #[test]
    fn depth_of_koszul_cases() {
        assert_eq!(depth("n=2; x1, x2"), 0);
        assert_eq!(depth("n=3; x1, x2, x3"), 0);
        assert_eq!(depth("n=3; x1^2, x2^3, x3"), 0);
        assert_eq!(depth("n=4; x1, x2, x3"), 1);
    }

    #[test]
    fn depth_of_principal_and_zero() {
        assert_eq!(depth("n=3; x1*x2^2"), 2);
        assert_eq!(depth("n=1; x1^5"), 0);
        assert_eq!(
            depth_exact(&MonomialIdeal::zero(3), &Budgets::default()).unwrap(),
            3
        );
        assert!(depth_exact(&MonomialIdeal::unit(3), &Budgets::default()).is_err());
    }

    #[test]
    fn depth_of_edge_ideals() {
        assert_eq!(depth("n=3; x1*x2, x2*x3"), 1);
        assert_eq!(depth("n=3; x1*x2, x2*x3, x1*x3"), 1);
        // not saturated: the maximal ideal is associated
        assert_eq!(depth("n=2; x1^2, x1*x2"), 0);
        assert_eq!(depth("n=3; x1^2, x1*x2"), 1);
    }

    #[test]
    fn betti_of_minimal_generators() {
        let i = ideal("n=3; x1*x2, x2*x3");
        let betti = multigraded_betti(&i, &Budgets::default()).unwrap();
        assert_eq!(
            betti.get(&(0, Monomial::new(vec![1, 1, 0]))).copied(),
            Some(1)
        );
        assert_eq!(
            betti.get(&(1, Monomial::new(vec![1, 1, 1]))).copied(),
            Some(1)
        );
        assert_eq!(betti.len(), 3);
    }

    #[test]
    fn budget_errors_name_the_knob() {
        let tight = Budgets {
            betti_max_gens: 1,
            ..Budgets::default()
        };
        match multigraded_betti(&ideal("n=2; x1, x2"), &tight) {
            Err(Error::Budget { knob, .. }) => assert_eq!(knob, "betti_max_gens"),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
