//! s-Catalan numbers and the s-Catalan triangle.
//!
//! Entry `(n, k)` of the triangle is the consecutive difference
//! `(2n, s*n + k)_s - (2n, s*n + k + 1)_s` of s-Pascal row `2n`; column 0
//! holds the s-Catalan numbers. For `s = 3` the rows also obey a seven-term
//! recurrence with folded boundary weights at `k = 0, 1, 2`, which gives a
//! second construction that never touches the Pascal triangle.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bisnomial::{self, SPascalRow};
use crate::{Natural, Result};

/// Row `n` of the s-Catalan triangle, `entries[k] = C_{n,k}` for `0 <= k <= s*n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleRow {
    s: u32,
    n: u32,
    entries: Vec<Natural>,
}

impl TriangleRow {
    /// Row `n` from s-Pascal row `2n`.
    ///
    /// Panics if `pascal` is not an even-indexed row.
    pub fn from_pascal(pascal: &SPascalRow) -> TriangleRow {
        assert!(
            pascal.n().is_multiple_of(2),
            "triangle rows come from even Pascal rows"
        );
        let s = pascal.s();
        let n = pascal.n() / 2;
        let centre = i64::from(s) * i64::from(n);
        let entries = (0..=centre)
            .map(|k| pascal.get(centre + k) - pascal.get(centre + k + 1))
            .collect();
        TriangleRow { s, n, entries }
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[Natural] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Natural> {
        self.entries
    }

    /// `C_{n,k}`, zero unless `0 <= k <= s*n`.
    pub fn get(&self, k: i64) -> Natural {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.entries.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn sum(&self) -> Natural {
        self.entries.iter().sum()
    }
}

/// Weights of the three-Catalan recurrence: `C_{n+1,k} = sum_i w[i] * C_{n, lo + i}`.
///
/// Away from the boundary the window is `1,2,3,4,3,2,1` centred on `k`; at
/// `k < 3` the terms that would index below zero fold back by symmetry.
fn recurrence_weights(k: usize) -> (usize, &'static [u32]) {
    match k {
        0 => (0, &[1, 1, 1, 1]),
        1 => (0, &[1, 3, 3, 2, 1]),
        2 => (0, &[1, 3, 4, 3, 2, 1]),
        _ => (k - 3, &[1, 2, 3, 4, 3, 2, 1]),
    }
}

impl TriangleRow {
    /// Three-Catalan row 0, `[1]`.
    pub fn three_first() -> TriangleRow {
        TriangleRow {
            s: 3,
            n: 0,
            entries: vec![Natural::one()],
        }
    }

    /// Next three-Catalan row from this one using only the recurrence.
    ///
    /// Panics if `self.s() != 3`; no recurrence is provided for other `s`.
    pub fn next_by_recurrence(&self) -> TriangleRow {
        assert_eq!(self.s, 3, "the recurrence is only defined for s = 3");
        let len = self.entries.len() + 3;
        let entries = (0..len)
            .map(|k| {
                let (lo, weights) = recurrence_weights(k);
                weights
                    .iter()
                    .enumerate()
                    .fold(Natural::zero(), |acc, (i, &w)| {
                        acc + self.get((lo + i) as i64) * w
                    })
            })
            .collect();
        TriangleRow {
            s: 3,
            n: self.n + 1,
            entries,
        }
    }
}

/// The sequence `C_0, C_1, ...` of s-Catalan numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalanSequence {
    pub s: u32,
    pub values: Vec<Natural>,
}

/// `C_n^{(s)} = (2n, s*n)_s - (2n, s*n + 1)_s`.
pub fn s_catalan(s: u32, n: u32) -> Result<Natural> {
    Ok(triangle_row_general(s, n)?.get(0))
}

/// `C_0^{(s)} ..= C_{n_max}^{(s)}` from a single sweep over the Pascal rows.
pub fn catalan_sequence(s: u32, n_max: u32) -> Result<CatalanSequence> {
    let values = triangle_rows(s)?
        .take(n_max as usize + 1)
        .map(|row| row.get(0))
        .collect();
    Ok(CatalanSequence { s, values })
}

/// Row `n` of the s-Catalan triangle by consecutive differences.
pub fn triangle_row_general(s: u32, n: u32) -> Result<TriangleRow> {
    Ok(TriangleRow::from_pascal(&bisnomial::bisnomial_row(
        s,
        2 * n,
    )?))
}

/// Row `n` of the three-Catalan triangle by consecutive differences.
pub fn triangle_row_direct(n: u32) -> TriangleRow {
    triangle_row_general(3, n).expect("s = 3 is in range")
}

/// Row `n` of the three-Catalan triangle by the recurrence alone.
pub fn triangle_row_recurrence(n: u32) -> TriangleRow {
    let mut row = TriangleRow::three_first();
    for _ in 0..n {
        row = row.next_by_recurrence();
    }
    row
}

/// Rows `0, 1, 2, ...` of the s-Catalan triangle by differences.
pub fn triangle_rows(s: u32) -> Result<impl Iterator<Item = TriangleRow>> {
    Ok(bisnomial::rows(s)?
        .step_by(2)
        .map(|pascal| TriangleRow::from_pascal(&pascal)))
}

/// Rows `0, 1, 2, ...` of the three-Catalan triangle by the recurrence.
pub fn triangle_rows_recurrence() -> impl Iterator<Item = TriangleRow> {
    std::iter::successors(Some(TriangleRow::three_first()), |row| {
        Some(row.next_by_recurrence())
    })
}
