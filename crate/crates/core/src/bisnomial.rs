//! Coefficients of `(1 + x + ... + x^s)^n`, the s-Pascal triangle.
//!
//! Rows are produced iteratively with the longitudinal recurrence
//! `(n, k)_s = sum_{j=0}^{s} (n-1, k-j)_s`, evaluated as a sliding window
//! so each row costs one pass over its predecessor. [`expand_by_multiplication`]
//! is a second, unrelated construction (dense polynomial powering) kept for
//! cross-checking the recurrence.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Natural, Result};

/// Row `n` of the s-Pascal triangle: `coeffs[k] = (n, k)_s` for `0 <= k <= s*n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SPascalRow {
    s: u32,
    n: u32,
    coeffs: Vec<Natural>,
}

pub(crate) fn check_s(s: u32) -> Result<()> {
    if s == 0 {
        return Err(Error::Domain(
            "s must be at least 1 (s = 0 gives the constant polynomial 1)".into(),
        ));
    }
    Ok(())
}

impl SPascalRow {
    /// Row 0, the single coefficient of the empty product.
    pub fn first(s: u32) -> Result<Self> {
        check_s(s)?;
        Ok(SPascalRow {
            s,
            n: 0,
            coeffs: vec![Natural::one()],
        })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Natural] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Natural> {
        self.coeffs
    }

    /// Degree of the row polynomial, `s * n`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `(n, k)_s`, zero outside `0..=s*n`.
    pub fn get(&self, k: i64) -> Natural {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.coeffs.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// Row `n + 1` from this row by the longitudinal recurrence.
    pub fn next_row(&self) -> SPascalRow {
        let s = self.s as usize;
        let len = self.coeffs.len() + s;
        let mut coeffs = Vec::with_capacity(len);
        let mut window = Natural::zero();
        for k in 0..len {
            if let Some(c) = self.coeffs.get(k) {
                window += c;
            }
            if k > s {
                if let Some(c) = self.coeffs.get(k - s - 1) {
                    window -= c;
                }
            }
            coeffs.push(window.clone());
        }
        SPascalRow {
            s: self.s,
            n: self.n + 1,
            coeffs,
        }
    }
}

/// Iterator over rows `0, 1, 2, ...` of the s-Pascal triangle.
#[derive(Debug, Clone)]
pub struct Rows {
    next: Option<SPascalRow>,
}

impl Iterator for Rows {
    type Item = SPascalRow;

    fn next(&mut self) -> Option<SPascalRow> {
        let row = self.next.take()?;
        self.next = Some(row.next_row());
        Some(row)
    }
}

/// All rows of the s-Pascal triangle, starting from row 0.
pub fn rows(s: u32) -> Result<Rows> {
    Ok(Rows {
        next: Some(SPascalRow::first(s)?),
    })
}

/// Row `n` of the s-Pascal triangle.
pub fn bisnomial_row(s: u32, n: u32) -> Result<SPascalRow> {
    let mut row = SPascalRow::first(s)?;
    for _ in 0..n {
        row = row.next_row();
    }
    Ok(row)
}

/// `(n, k)_s`; zero when `k < 0` or `k > s*n`.
pub fn bisnomial_at(s: u32, n: u32, k: i64) -> Result<Natural> {
    check_s(s)?;
    if k < 0 || k > i64::from(s) * i64::from(n) {
        return Ok(Natural::zero());
    }
    Ok(bisnomial_row(s, n)?.get(k))
}

/// The central coefficient `(2n, s*n)_s`.
pub fn central_coefficient(s: u32, n: u32) -> Result<Natural> {
    let row = bisnomial_row(s, 2 * n)?;
    Ok(row.get(i64::from(s) * i64::from(n)))
}

/// Both sides of the absorption identity
/// `k (n, k)_s = n sum_{j=1}^{s} j (n-1, k-j)_s`.
pub fn absorption_check(s: u32, n: u32, k: i64) -> Result<(Natural, Natural)> {
    check_s(s)?;
    if n == 0 {
        return Err(Error::Domain("absorption identity needs n >= 1".into()));
    }
    if k < 0 || k > i64::from(s) * i64::from(n) {
        return Err(Error::Domain(format!(
            "absorption identity needs 0 <= k <= s*n, got k = {k}"
        )));
    }
    let prev = bisnomial_row(s, n - 1)?;
    let row = prev.next_row();
    Ok(absorption_sides(&prev, &row, k))
}

/// Absorption sides for consecutive rows already in hand.
pub(crate) fn absorption_sides(prev: &SPascalRow, row: &SPascalRow, k: i64) -> (Natural, Natural) {
    let lhs = row.get(k) * Natural::from(k as u64);
    let mut inner = Natural::zero();
    for j in 1..=i64::from(row.s) {
        inner += prev.get(k - j) * Natural::from(j as u64);
    }
    (lhs, inner * Natural::from(row.n))
}

/// `(1 + x + ... + x^s)^n` by binary powering with schoolbook multiplication.
///
/// Deliberately shares no code with [`SPascalRow::next_row`].
pub fn expand_by_multiplication(s: u32, n: u32) -> Result<Vec<Natural>> {
    check_s(s)?;
    let mut base: Vec<Natural> = vec![Natural::one(); s as usize + 1];
    let mut acc: Vec<Natural> = vec![Natural::one()];
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = poly_mul(&base, &base);
        }
    }
    Ok(acc)
}

fn poly_mul(a: &[Natural], b: &[Natural]) -> Vec<Natural> {
    let mut out = vec![Natural::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Thread-safe memo of s-Pascal rows keyed by `(s, n)`.
///
/// Rows for a given `s` are stored contiguously from row 0, so a miss
/// extends the stored prefix with the recurrence.
#[derive(Debug, Default)]
pub struct RowCache {
    rows: Mutex<HashMap<u32, Vec<Arc<SPascalRow>>>>,
}

impl RowCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(&self, s: u32, n: u32) -> Result<Arc<SPascalRow>> {
        check_s(s)?;
        let mut map = self.rows.lock().unwrap_or_else(|e| e.into_inner());
        let stored = map.entry(s).or_default();
        if stored.is_empty() {
            stored.push(Arc::new(SPascalRow::first(s)?));
        }
        while stored.len() <= n as usize {
            let next = stored.last().expect("non-empty").next_row();
            stored.push(Arc::new(next));
        }
        Ok(Arc::clone(&stored[n as usize]))
    }

    /// Number of rows currently held for `s`.
    pub fn len_for(&self, s: u32) -> usize {
        let map = self.rows.lock().unwrap_or_else(|e| e.into_inner());
        map.get(&s).map_or(0, Vec::len)
    }
}
