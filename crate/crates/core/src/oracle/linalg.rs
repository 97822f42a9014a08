//! Fraction-free exact rank computation.
//!
//! Bareiss elimination keeps every intermediate entry equal to a minor of
//! the input matrix, so the divisions below are exact and the whole
//! computation stays in the integers. Generic over the scalar so the same
//! routine runs on machine integers in tests and on big integers in the
//! homology oracle, where no overflow analysis is needed.

use num_traits::Num;

/// Rank of a dense integer matrix, by fraction-free Gaussian elimination.
pub fn rank<T>(mut m: Vec<Vec<T>>) -> usize
where
    T: Num + Clone,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (top, rest) = m.split_at_mut(rank + 1);
        let lead = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col..cols {
                let num = lead[col].clone() * row[j].clone() - factor.clone() * lead[j].clone();
                row[j] = num / prev.clone();
            }
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}
