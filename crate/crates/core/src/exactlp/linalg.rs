use num_traits::Zero;

use super::Rational;

/// Row-reduces `rows` in place and returns the pivot count.
fn eliminate(rows: &mut [Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row][col].clone();
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            let pivot_tail = rows[pivot_row][col..].to_vec();
            for (entry, p) in rows[r][col..].iter_mut().zip(&pivot_tail) {
                *entry -= &factor * p;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}

/// Exact rank of a list of equal-length vectors.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    eliminate(&mut work)
}

/// Greedy maximal independent subset, scanning in order.
pub fn independent_subset(rows: &[Vec<Rational>]) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        basis.push(row.clone());
        if rank(&basis) == basis.len() {
            kept.push(i);
        } else {
            basis.pop();
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 0])]), 2);
        assert_eq!(rank(&[v(&[0, 0])]), 0);
    }

    #[test]
    fn independent_subset_is_greedy() {
        let rows = [v(&[1, 1]), v(&[2, 2]), v(&[0, 1]), v(&[5, 7])];
        assert_eq!(independent_subset(&rows), vec![0, 2]);
    }
}
