//! Rank over GF(2) by Gaussian elimination on packed rows.

use super::BoolMatrix;

/// Row rank of `a` with entries read modulo 2.
pub fn rank_gf2(a: &BoolMatrix) -> usize {
    let n = a.dim();
    let mut rows: Vec<Vec<u64>> = (0..n).map(|i| a.row_words(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..n {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..n).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
    }
    rank
}
