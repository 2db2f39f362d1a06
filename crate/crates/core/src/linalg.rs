//! Exact linear algebra: 2×2 systems and row-reduced nullspaces.

use crate::scalar::Field;

/// Solution set of `M x = b` for a 2×2 system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution2<T> {
    Inconsistent,
    Unique([T; 2]),
    /// `point + λ·direction` for every `λ`.
    Line { point: [T; 2], direction: [T; 2] },
    /// Every vector solves it (`M = 0`, `b = 0`).
    Everything,
}

pub fn det2<T: Field>(m: &[[T; 2]; 2]) -> T {
    m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
}

/// Solves `m · x = rhs` exactly, covering every rank.
pub fn solve2<T: Field>(m: &[[T; 2]; 2], rhs: &[T; 2]) -> Solution2<T> {
    let det = det2(m);
    if !det.is_zero() {
        let x0 = (rhs[0].clone() * m[1][1].clone() - m[0][1].clone() * rhs[1].clone()) / det.clone();
        let x1 = (m[0][0].clone() * rhs[1].clone() - rhs[0].clone() * m[1][0].clone()) / det;
        return Solution2::Unique([x0, x1]);
    }
    let row_nonzero = |i: usize| !(m[i][0].is_zero() && m[i][1].is_zero());
    let Some(pivot) = (0..2).find(|&i| row_nonzero(i)) else {
        return if rhs.iter().all(|v| v.is_zero()) {
            Solution2::Everything
        } else {
            Solution2::Inconsistent
        };
    };
    let other = 1 - pivot;
    let (a, b) = (m[pivot][0].clone(), m[pivot][1].clone());
    // Rank one: the other row is a multiple of the pivot row.
    let lambda = if !a.is_zero() { m[other][0].clone() / a.clone() } else { m[other][1].clone() / b.clone() };
    if rhs[other].clone() != lambda * rhs[pivot].clone() {
        return Solution2::Inconsistent;
    }
    let point = if !a.is_zero() {
        [rhs[pivot].clone() / a.clone(), T::zero()]
    } else {
        [T::zero(), rhs[pivot].clone() / b.clone()]
    };
    Solution2::Line { point, direction: [b, -a] }
}

/// A nonzero `(s, t)` with `a s + b t = 0` and `c s + d t = 0`, if the rows
/// are dependent. `None` when the kernel is trivial; `Some(None)` when the
/// matrix is zero and every vector is in the kernel.
pub fn kernel2<T: Field>(m: &[[T; 2]; 2]) -> Option<Option<[T; 2]>> {
    if !det2(m).is_zero() {
        return None;
    }
    for row in m {
        if !(row[0].is_zero() && row[1].is_zero()) {
            return Some(Some([row[1].clone(), -row[0].clone()]));
        }
    }
    Some(None)
}

/// Basis of the right nullspace of `rows` (each row of equal length).
pub fn nullspace<T: Field>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut a: Vec<Vec<T>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inverse().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}
