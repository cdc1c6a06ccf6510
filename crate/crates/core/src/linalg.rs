//! Fraction-free elimination over the integers.

use crate::error::{Error, Result};

/// Exact rank of an integer matrix via Bareiss elimination.
///
/// Every intermediate entry is a minor of the input, so for the Gram matrices
/// handled here (entries in {-2, 0, 1}) `i128` never overflows; overflow is
/// still reported rather than wrapped.
#[allow(clippy::needless_range_loop)]
pub fn integer_rank(rows: &[Vec<i64>]) -> Result<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Ok(0);
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();

    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for r in rank + 1..nrows {
            let factor = m[r][col];
            for c in col..ncols {
                // (pivot * m[r][c] - factor * m[rank][c]) / prev_pivot is exact.
                let a = pivot.checked_mul(m[r][c]).ok_or(Error::EliminationOverflow)?;
                let b = factor.checked_mul(m[rank][c]).ok_or(Error::EliminationOverflow)?;
                let num = a.checked_sub(b).ok_or(Error::EliminationOverflow)?;
                m[r][c] = num / prev_pivot;
            }
            // Columns left of `col` are already zero below the pivot row.
        }
        prev_pivot = pivot;
        rank += 1;
    }
    Ok(rank)
}
