//! Exact linear algebra over `Q(m)`: fraction-free (Bareiss) Gaussian
//! elimination for rank computations, and reduced row echelon form for
//! solving reduction tables. No floating-point rank decisions anywhere.

use crate::ratfunc::{MultiPoly, RationalFunc};


/// Rank of a matrix of polynomials by single-step Bareiss elimination;
/// every division is exact by the Sylvester identity.
pub fn bareiss_rank(mat: &[Vec<MultiPoly>]) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut m: Vec<Vec<MultiPoly>> = mat.to_vec();
    let mut prev = MultiPoly::one();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        // pivot search: smallest nonzero entry keeps growth down
        let mut pivot = None;
        for r in row..rows {
            if !m[r][col].is_zero() {
                pivot = match pivot {
                    None => Some(r),
                    Some(p) => {
                        if m[r][col].terms.len() < m[p][col].terms.len() {
                            Some(r)
                        } else {
                            Some(p)
                        }
                    }
                };
            }
        }
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        for r in (row + 1)..rows {
            for c in (col + 1)..cols {
                let num = &m[row][col].mul_ref(&m[r][c]) - &m[r][col].mul_ref(&m[row][c]);
                m[r][c] = num.exact_div(&prev);
            }
            m[r][col] = MultiPoly::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Rank of a rational-function matrix (denominators cleared row-wise
/// before fraction-free elimination).
pub fn rank_ratfunc(mat: &[Vec<RationalFunc>]) -> usize {
    let cleared: Vec<Vec<MultiPoly>> = mat.iter().map(|row| clear_row(row)).collect();
    bareiss_rank(&cleared)
}

fn clear_row(row: &[RationalFunc]) -> Vec<MultiPoly> {
    let mut lcm = MultiPoly::one();
    for x in row {
        if x.is_zero() {
            continue;
        }
        let d = x.denominator();
        let g = crate::ratfunc::poly_gcd(&lcm, d);
        lcm = lcm.mul_ref(&d.exact_div(&g));
    }
    row.iter()
        .map(|x| {
            if x.is_zero() {
                MultiPoly::zero()
            } else {
                x.numerator().mul_ref(&lcm.exact_div(x.denominator()))
            }
        })
        .collect()
}

/// Reduced row echelon form in place; returns pivot column per pivot row.
pub fn rref(mat: &mut Vec<Vec<RationalFunc>>) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return vec![];
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let mut pivot = None;
        for r in row..rows {
            if !mat[r][col].is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        mat.swap(row, p);
        let inv = mat[row][col].inv().expect("pivot is nonzero");
        for c in col..cols {
            mat[row][c] = mat[row][c].mul_ref(&inv);
        }
        for r in 0..rows {
            if r == row || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for c in col..cols {
                let t = factor.mul_ref(&mat[row][c]);
                mat[r][c] = mat[r][c].sub_ref(&t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    mat.truncate(row);
    pivots
}

/// Basis of the right kernel of a rational-function matrix.
pub fn kernel_basis(mat: &[Vec<RationalFunc>]) -> Vec<Vec<RationalFunc>> {
    if mat.is_empty() {
        return vec![];
    }
    let cols = mat[0].len();
    let mut work = mat.to_vec();
    let pivots = rref(&mut work);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().cloned().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![RationalFunc::zero(); cols];
        v[f] = RationalFunc::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = work[r][f].neg_ref();
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b` when a (unique or any) solution exists.
pub fn solve(mat: &[Vec<RationalFunc>], rhs: &[RationalFunc]) -> Option<Vec<RationalFunc>> {
    let rows = mat.len();
    if rows == 0 {
        return if rhs.iter().all(|x| x.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    let cols = mat[0].len();
    let mut aug: Vec<Vec<RationalFunc>> = mat
        .iter()
        .zip(rhs.iter())
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last().map(|&c| c == cols).unwrap_or(false) {
        return None; // inconsistent
    }
    let mut x = vec![RationalFunc::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::rf_int;

    #[test]
    fn rank_of_singular_matrix() {
        let m = MultiPoly::var(0);
        let one = MultiPoly::one();
        // rows: [1, m], [m, m^2] -> rank 1
        let mat = vec![
            vec![one.clone(), m.clone()],
            vec![m.clone(), m.mul_ref(&m)],
        ];
        assert_eq!(bareiss_rank(&mat), 1);
    }

    #[test]
    fn kernel_dimension() {
        // x + y + z = 0 has a 2-dim kernel
        let mat = vec![vec![rf_int(1), rf_int(1), rf_int(1)]];
        let k = kernel_basis(&mat);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = v.iter().fold(RationalFunc::zero(), |a, b| a.add_ref(b));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_linear_system() {
        let mat = vec![
            vec![rf_int(2), rf_int(0)],
            vec![rf_int(0), rf_int(3)],
        ];
        let rhs = vec![rf_int(4), rf_int(9)];
        let x = solve(&mat, &rhs).unwrap();
        assert_eq!(x[0], rf_int(2));
        assert_eq!(x[1], rf_int(3));
    }
}
