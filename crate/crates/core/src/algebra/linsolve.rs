use num_traits::{One, Zero};

use super::{AlgebraError, Rational};

/// Solution set of a linear system over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// Every solution is `particular + Σ λ_k nullspace[k]`.
    Solved {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
    Infeasible,
}

/// Exact Gauss-Jordan elimination of `rows · x = rhs`.
///
/// Free variables are zero in the particular solution. Each nullspace
/// vector has a single free variable set and is scaled so its first
/// nonzero entry is 1.
pub fn linear_solve(rows: &[Vec<Rational>], rhs: &[Rational]) -> Result<LinearSolution, AlgebraError> {
    if rows.len() != rhs.len() {
        return Err(AlgebraError::DimensionMismatch(format!("{} rows but {} right-hand sides", rows.len(), rhs.len())));
    }
    let ncols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
        return Err(AlgebraError::DimensionMismatch(format!(
            "row {bad} has {} entries, expected {ncols}",
            rows[bad].len()
        )));
    }

    // augmented matrix
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }

    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return Ok(LinearSolution::Infeasible);
    }

    let mut particular = vec![Rational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][ncols].clone();
    }

    let mut nullspace = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[f] = Rational::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -m[i][f].clone();
        }
        if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
            let inv = lead.recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
        }
        nullspace.push(v);
    }
    Ok(LinearSolution::Solved { particular, nullspace })
}
