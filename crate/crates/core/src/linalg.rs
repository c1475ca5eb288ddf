//! Gaussian elimination over the scalar field.
//!
//! Pivoting is by first structurally nonzero entry; there is no magnitude
//! to compare in exact arithmetic. A system that fails to determine every
//! unknown is reported as degenerate in numeric mode (the sampled point is
//! at fault) and as singular in symbolic mode (genericity should rule it
//! out).

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Solves `a x = b` exactly. `a` may have more rows than columns; the extra
/// rows must be consistent with the unique solution.
pub fn solve(
    mut a: Vec<Vec<Scalar>>,
    mut b: Vec<Scalar>,
    field: &Field,
) -> Result<Vec<Scalar>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    assert!(rows >= cols, "underdetermined system");

    let fail = |what: &str| -> Error {
        if field.is_numeric() {
            Error::Degenerate(format!("{what} in numeric linear solve"))
        } else {
            Error::Singular(what.to_string())
        }
    };

    for col in 0..cols {
        let pivot = (col..rows).find(|&r| !a[r][col].is_zero());
        let Some(pivot) = pivot else {
            return Err(fail("zero pivot column"));
        };
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].div(&a[col][col])?;
            for c in col..cols {
                let delta = factor.mul(&a[col][c]);
                a[r][c] = a[r][c].sub(&delta);
            }
            let delta = factor.mul(&b[col]);
            b[r] = b[r].sub(&delta);
        }
    }

    // extra rows must have been reduced to 0 = 0
    for r in cols..rows {
        if !b[r].is_zero() {
            return Err(fail("inconsistent overdetermined system"));
        }
    }

    let mut x = vec![field.zero(); cols];
    for col in (0..cols).rev() {
        let mut acc = b[col].clone();
        for c in col + 1..cols {
            acc = acc.sub(&a[col][c].mul(&x[c]));
        }
        x[col] = acc.div(&a[col][col])?;
    }
    Ok(x)
}
