//! Dense exact Gaussian elimination over a [`Field`].

use crate::coeff::{Field, FieldElem};

/// Row-reduce in place to reduced row echelon form, processing columns left
/// to right. Pivots are scaled to one; zero rows are removed. Returns the
/// pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<FieldElem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for v in rows[r].iter_mut().skip(col) {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : rows * v = 0}`. There is one vector per non-pivot column,
/// in ascending column order; it has a one in its own column and zeros in
/// every other free column.
pub fn kernel(rows: &[Vec<FieldElem>], ncols: usize, field: &Field) -> Vec<Vec<FieldElem>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); ncols];
            v[free] = field.one();
            for (row, &p) in m.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v[p] = -&row[free];
                }
            }
            v
        })
        .collect()
}

pub fn rank(rows: &[Vec<FieldElem>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// True if `v` lies in the row space of `rows`.
pub fn in_row_space(rows: &[Vec<FieldElem>], v: &[FieldElem]) -> bool {
    let ncols = v.len();
    let r = rank(rows, ncols);
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(&ext, ncols) == r
}
