//! Exact log-convexity and log-concavity checks, and the symmetric
//! seven-tap operator `(Lu)_k = sum_{j=-3}^{3} lambda_j u_{k+j}` whose
//! symmetric log-concave instances preserve log-concavity.
//!
//! Every verdict is decided in integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{catalan, paths, Error, Natural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Result of one positivity check over a stated range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub property: String,
    pub range: String,
    pub verdict: Verdict,
    pub first_violation: Option<i64>,
    /// Decimal values describing the violation; empty on a pass.
    pub witness: BTreeMap<String, String>,
}

impl PositivityReport {
    fn pass(property: impl Into<String>, range: impl Into<String>) -> Self {
        PositivityReport {
            property: property.into(),
            range: range.into(),
            verdict: Verdict::Pass,
            first_violation: None,
            witness: BTreeMap::new(),
        }
    }

    fn fail<K: Into<String>>(
        property: impl Into<String>,
        range: impl Into<String>,
        at: i64,
        witness: impl IntoIterator<Item = (K, String)>,
    ) -> Self {
        PositivityReport {
            property: property.into(),
            range: range.into(),
            verdict: Verdict::Fail,
            first_violation: Some(at),
            witness: witness.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn require_len(seq: &[Natural]) -> Result<()> {
    if seq.len() < 3 {
        return Err(Error::Domain(format!(
            "need at least 3 terms, got {}",
            seq.len()
        )));
    }
    Ok(())
}

/// First `i` with `a_i a_{i+2} < a_{i+1}^2`, or `None`.
fn first_convexity_break(seq: &[Natural]) -> Option<usize> {
    seq.windows(3).position(|w| &w[0] * &w[2] < &w[1] * &w[1])
}

/// First interior `i` with `a_{i-1} a_{i+1} > a_i^2`, or `None`.
fn first_concavity_break(seq: &[Natural]) -> Option<usize> {
    seq.windows(3)
        .position(|w| &w[0] * &w[2] > &w[1] * &w[1])
        .map(|i| i + 1)
}

/// `a_i a_{i+2} >= a_{i+1}^2` for every `i`.
pub fn is_log_convex(seq: &[Natural]) -> Result<PositivityReport> {
    require_len(seq)?;
    let range = format!("0 <= i <= {}", seq.len() - 3);
    Ok(match first_convexity_break(seq) {
        None => PositivityReport::pass("log-convex", range),
        Some(i) => PositivityReport::fail(
            "log-convex",
            range,
            i as i64,
            [
                ("a_i", seq[i].to_string()),
                ("a_i+1", seq[i + 1].to_string()),
                ("a_i+2", seq[i + 2].to_string()),
            ],
        ),
    })
}

/// `a_{i-1} a_{i+1} <= a_i^2` for every interior `i`.
pub fn is_log_concave(seq: &[Natural]) -> Result<PositivityReport> {
    require_len(seq)?;
    let range = format!("1 <= i <= {}", seq.len() - 2);
    Ok(match first_concavity_break(seq) {
        None => PositivityReport::pass("log-concave", range),
        Some(i) => PositivityReport::fail(
            "log-concave",
            range,
            i as i64,
            [
                ("a_i-1", seq[i - 1].to_string()),
                ("a_i", seq[i].to_string()),
                ("a_i+1", seq[i + 1].to_string()),
            ],
        ),
    })
}

/// Weights `(lambda_-3, ..., lambda_3)` of the seven-tap operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Operator7 {
    lambdas: [Natural; 7],
}

impl Operator7 {
    pub fn new(lambdas: [Natural; 7]) -> Self {
        Operator7 { lambdas }
    }

    pub fn from_u64(lambdas: [u64; 7]) -> Self {
        Operator7 {
            lambdas: lambdas.map(Natural::from),
        }
    }

    /// `(0, 0, 0, 1, 0, 0, 0)`.
    pub fn identity() -> Self {
        Self::from_u64([0, 0, 0, 1, 0, 0, 0])
    }

    pub fn lambdas(&self) -> &[Natural; 7] {
        &self.lambdas
    }

    /// `lambda_j` for `-3 <= j <= 3`.
    pub fn weight(&self, j: i64) -> &Natural {
        &self.lambdas[(j + 3) as usize]
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=3).all(|j| self.weight(j) == self.weight(-j))
    }

    /// `lambda_j^2 >= lambda_{j-1} lambda_{j+1}` for `-2 <= j <= 2`, and the
    /// nonzero weights form one contiguous block.
    ///
    /// Without contiguity the operator does not preserve log-concavity:
    /// `(1,0,0,1,0,0,1)` maps `(1,1,1,1)` to `1,1,1,2,1,1,2,1,1,1`.
    pub fn is_log_concave(&self) -> bool {
        first_concavity_break(&self.lambdas).is_none() && has_contiguous_support(&self.lambdas)
    }
}

fn has_contiguous_support(values: &[Natural]) -> bool {
    let nonzero: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, _)| i)
        .collect();
    match (nonzero.first(), nonzero.last()) {
        (Some(&a), Some(&b)) => b - a + 1 == nonzero.len(),
        _ => true,
    }
}

impl fmt::Display for Operator7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambdas.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A nonnegative integer sequence indexed by all of `Z` with finite support.
///
/// Stored densely from `offset`; leading and trailing zeros are trimmed so
/// equal sequences compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZSequence {
    offset: i64,
    values: Vec<Natural>,
}

impl ZSequence {
    /// `values[i]` placed at index `offset + i`.
    pub fn new(offset: i64, values: Vec<Natural>) -> Self {
        let mut seq = ZSequence { offset, values };
        seq.trim();
        seq
    }

    pub fn from_u64(offset: i64, values: &[u64]) -> Self {
        Self::new(offset, values.iter().map(|&v| Natural::from(v)).collect())
    }

    /// `1` at `index`, zero elsewhere.
    pub fn impulse(index: i64) -> Self {
        Self::from_u64(index, &[1])
    }

    fn trim(&mut self) {
        let lead = self.values.iter().take_while(|v| v.is_zero()).count();
        if lead == self.values.len() {
            self.values.clear();
            self.offset = 0;
            return;
        }
        self.values.drain(..lead);
        self.offset += lead as i64;
        while self.values.last().is_some_and(Zero::is_zero) {
            self.values.pop();
        }
    }

    pub fn get(&self, k: i64) -> Natural {
        usize::try_from(k - self.offset)
            .ok()
            .and_then(|i| self.values.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// Smallest and largest index of the stored window, `None` for the zero sequence.
    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.values.is_empty()).then(|| (self.offset, self.offset + self.values.len() as i64 - 1))
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Values over the support window.
    pub fn values(&self) -> &[Natural] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: &Natural, other: &ZSequence, b: &Natural) -> ZSequence {
        let (lo, hi) = match (self.support(), other.support()) {
            (None, None) => return ZSequence::default(),
            (Some(s), None) | (None, Some(s)) => s,
            (Some((a0, a1)), Some((b0, b1))) => (a0.min(b0), a1.max(b1)),
        };
        let values = (lo..=hi)
            .map(|k| a * self.get(k) + b * other.get(k))
            .collect();
        ZSequence::new(lo, values)
    }

    /// `a_{k-1} a_{k+1} <= a_k^2` at every index, zeros outside the support included.
    pub fn log_concavity(&self) -> PositivityReport {
        let range = match self.support() {
            Some((lo, hi)) => format!("{lo} <= k <= {hi}"),
            None => "empty support".to_string(),
        };
        match first_concavity_break(&self.values) {
            None => PositivityReport::pass("log-concave", range),
            Some(i) => PositivityReport::fail(
                "log-concave",
                range,
                self.offset + i as i64,
                [
                    ("u_k-1", self.values[i - 1].to_string()),
                    ("u_k", self.values[i].to_string()),
                    ("u_k+1", self.values[i + 1].to_string()),
                ],
            ),
        }
    }
}

/// `v_k = sum_{j=-3}^{3} lambda_j u_{k+j}`.
pub fn apply_operator(op: &Operator7, u: &ZSequence) -> ZSequence {
    let Some((lo, hi)) = u.support() else {
        return ZSequence::default();
    };
    let values = (lo - 3..=hi + 3)
        .map(|k| {
            (-3..=3).fold(Natural::zero(), |acc, j| {
                let w = op.weight(j);
                if w.is_zero() {
                    acc
                } else {
                    acc + w * u.get(k + j)
                }
            })
        })
        .collect();
    ZSequence::new(lo - 3, values)
}

/// `L^n u`, with `L^0` the identity.
pub fn operator_power(op: &Operator7, u: &ZSequence, n: u32) -> ZSequence {
    (0..n).fold(u.clone(), |acc, _| apply_operator(op, &acc))
}

/// Seeded samplers for log-concave operators and sequences.
pub mod sample {
    use rand::Rng;

    use super::{first_concavity_break, has_contiguous_support, Operator7};
    use crate::{Error, Natural, Result};

    const ATTEMPTS: usize = 200;

    /// Rounds the cumulative products of `ratios` (starting from 1), scaled so
    /// the largest term is `peak`; every term is at least 1.
    fn round_shape(ratios: &[f64], peak: f64) -> Vec<u64> {
        let mut shape = Vec::with_capacity(ratios.len() + 1);
        let mut cur = 1.0f64;
        shape.push(cur);
        for r in ratios {
            cur *= r;
            shape.push(cur);
        }
        let max = shape.iter().cloned().fold(f64::MIN, f64::max);
        shape
            .into_iter()
            .map(|v| ((v / max) * peak).round().max(1.0) as u64)
            .collect()
    }

    fn is_log_concave_u64(values: &[u64]) -> bool {
        let nat: Vec<Natural> = values.iter().map(|&v| Natural::from(v)).collect();
        first_concavity_break(&nat).is_none() && has_contiguous_support(&nat)
    }

    /// A positive log-concave sequence of length `1..=length_max` with terms
    /// at most `value_max`: cumulative products of a nonincreasing ratio
    /// sequence, rounded, then re-checked exactly.
    pub fn log_concave_sequence<R: Rng>(
        rng: &mut R,
        length_max: usize,
        value_max: u64,
    ) -> Result<Vec<u64>> {
        if length_max == 0 || value_max == 0 {
            return Err(Error::Generation(
                "length_max and value_max must be positive".into(),
            ));
        }
        for _ in 0..ATTEMPTS {
            let len = rng.gen_range(1..=length_max);
            let mut ratios: Vec<f64> = (1..len)
                .map(|_| rng.gen_range(-1.5f64..1.5).exp())
                .collect();
            ratios.sort_by(|a, b| b.total_cmp(a));
            let peak = rng.gen_range(1..=value_max) as f64;
            let values = round_shape(&ratios, peak);
            if is_log_concave_u64(&values) {
                return Ok(values);
            }
        }
        Err(Error::Generation(format!(
            "no log-concave sequence after {ATTEMPTS} attempts"
        )))
    }

    /// A symmetric log-concave operator with centre weight at most `value_max`.
    /// The outermost one or two weight pairs are sometimes zero.
    pub fn symmetric_operator<R: Rng>(rng: &mut R, value_max: u64) -> Result<Operator7> {
        if value_max == 0 {
            return Err(Error::Generation("value_max must be positive".into()));
        }
        for _ in 0..ATTEMPTS {
            // right half: centre, then ratios in (0, 1] that never increase
            let mut ratios: Vec<f64> = (0..3).map(|_| rng.gen_range(0.05f64..=1.0)).collect();
            ratios.sort_by(|a, b| b.total_cmp(a));
            let centre = rng.gen_range(1..=value_max) as f64;
            let mut half = round_shape(&ratios, centre);
            match rng.gen_range(0..8) {
                0 => half[3] = 0,
                1 => {
                    half[2] = 0;
                    half[3] = 0;
                }
                _ => {}
            }
            let full = [
                half[3], half[2], half[1], half[0], half[1], half[2], half[3],
            ];
            let op = Operator7::from_u64(full);
            if op.is_symmetric() && op.is_log_concave() {
                return Ok(op);
            }
        }
        Err(Error::Generation(format!(
            "no symmetric log-concave operator after {ATTEMPTS} attempts"
        )))
    }

}

/// Applies random symmetric log-concave operators up to three times to
/// random positive log-concave sequences and checks every image stays
/// log-concave. Deterministic in `seed`.
pub fn check_lemma41(
    trials: u32,
    length_max: usize,
    value_max: u64,
    seed: u64,
) -> Result<PositivityReport> {
    if trials == 0 {
        return Err(Error::Domain("need at least one trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = format!(
        "{trials} trials, length <= {length_max}, values <= {value_max}, powers 1..=3, seed {seed}"
    );
    for trial in 0..trials {
        let op = sample::symmetric_operator(&mut rng, value_max)?;
        let input = sample::log_concave_sequence(&mut rng, length_max, value_max)?;
        let u = ZSequence::from_u64(0, &input);
        let mut image = u.clone();
        for power in 1..=3 {
            image = apply_operator(&op, &image);
            let report = image.log_concavity();
            if let Some(at) = report.first_violation {
                let mut witness = vec![
                    ("trial".to_string(), trial.to_string()),
                    ("power".to_string(), power.to_string()),
                    ("operator".to_string(), op.to_string()),
                    ("input".to_string(), format!("{input:?}")),
                ];
                witness.extend(report.witness);
                return Ok(PositivityReport::fail(
                    "operator preserves log-concavity",
                    range,
                    at,
                    witness,
                ));
            }
        }
    }
    Ok(PositivityReport::pass(
        "operator preserves log-concavity",
        range,
    ))
}

/// `c(n,0)^2 <= c(n+1,0) c(n-1,0)` for `1 <= n <= n_max`, using path counts.
pub fn injection_counting_check(n_max: u32) -> Result<PositivityReport> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let rows = paths::count_rows(n_max + 1);
    let column: Vec<Natural> = rows.iter().map(|r| r[0].clone()).collect();
    let range = format!("1 <= n <= {n_max}");
    let property = "path counts c(n,0)^2 <= c(n+1,0) c(n-1,0)";
    Ok(match first_convexity_break(&column) {
        None => PositivityReport::pass(property, range),
        Some(i) => PositivityReport::fail(
            property,
            range,
            i as i64 + 1,
            [
                ("c(n-1,0)", column[i].to_string()),
                ("c(n,0)", column[i + 1].to_string()),
                ("c(n+1,0)", column[i + 2].to_string()),
            ],
        ),
    })
}

/// Log-convexity of `C_0^{(s)}, ..., C_{n_max}^{(s)}`.
pub fn catalan_log_convexity(s: u32, n_max: u32) -> Result<PositivityReport> {
    let seq = catalan::catalan_sequence(s, n_max)?;
    let mut report = is_log_convex(&seq.values)?;
    report.property = format!("{s}-Catalan numbers log-convex");
    report.range = format!("0 <= n <= {n_max}");
    Ok(report)
}

/// Log-concavity of every s-Catalan triangle row `n` with `1 <= n <= n_max`
/// (row 0 is the single entry 1). `first_violation` is the row index.
pub fn row_log_concavity(s: u32, n_max: u32) -> Result<PositivityReport> {
    let property = format!("{s}-Catalan triangle rows log-concave");
    let range = format!("1 <= n <= {n_max}");
    for row in catalan::triangle_rows(s)?.take(n_max as usize + 1).skip(1) {
        if row.entries().len() < 3 {
            continue;
        }
        let report = is_log_concave(row.entries())?;
        if let Some(k) = report.first_violation {
            return Ok(PositivityReport::fail(
                property,
                range,
                i64::from(row.n()),
                [
                    ("k", k.to_string()),
                    ("C_n,k-1", row.get(k - 1).to_string()),
                    ("C_n,k", row.get(k).to_string()),
                    ("C_n,k+1", row.get(k + 1).to_string()),
                ],
            ));
        }
    }
    Ok(PositivityReport::pass(property, range))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: &[u64]) -> Vec<Natural> {
        v.iter().map(|&x| Natural::from(x)).collect()
    }

    #[test]
    fn convexity_examples() {
        assert!(is_log_convex(&nat(&[1, 1, 4, 34, 364])).unwrap().passed());
        let r = is_log_convex(&nat(&[1, 2, 3])).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.first_violation, Some(0));
        assert_eq!(r.witness["a_i+1"], "2");
        assert!(matches!(
            is_log_convex(&nat(&[1, 2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn concavity_examples() {
        assert!(
            is_log_concave(&nat(&[34, 90, 120, 120, 96, 64, 35, 15, 5, 1]))
                .unwrap()
                .passed()
        );
        let r = is_log_concave(&nat(&[1, 1, 4])).unwrap();
        assert_eq!(r.first_violation, Some(1));
        assert!(is_log_concave(&[]).is_err());
    }

    #[test]
    fn operator_examples() {
        let op = Operator7::from_u64([1, 2, 3, 4, 3, 2, 1]);
        assert!(op.is_symmetric() && op.is_log_concave());
        assert_eq!(
            apply_operator(&op, &ZSequence::impulse(0)),
            ZSequence::from_u64(-3, &[1, 2, 3, 4, 3, 2, 1])
        );
        let u = ZSequence::from_u64(0, &[5, 0, 7, 2]);
        assert_eq!(apply_operator(&Operator7::identity(), &u), u);
        let row1 = ZSequence::from_u64(0, &[1, 1, 1, 1]);
        // only lambda_-3..lambda_0 meet the support 0..=3 at k = 3
        assert_eq!(apply_operator(&op, &row1).get(3), Natural::from(10u32));
        assert_eq!(
            apply_operator(&op, &row1),
            ZSequence::from_u64(-3, &[1, 3, 6, 10, 12, 12, 10, 6, 3, 1])
        );
        // (1,2,3,4,3,2,1) squared as a polynomial, i.e. (1+x+x^2+x^3)^4
        assert_eq!(
            operator_power(&op, &ZSequence::impulse(0), 2),
            ZSequence::from_u64(-6, &[1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1])
        );
        assert_eq!(operator_power(&op, &u, 0), u);
    }

    #[test]
    fn gapped_operator_breaks_concavity() {
        let op = Operator7::from_u64([1, 0, 0, 1, 0, 0, 1]);
        assert!(!op.is_log_concave());
        let image = apply_operator(&op, &ZSequence::from_u64(0, &[1, 1, 1, 1]));
        assert_eq!(image.values(), nat(&[1, 1, 1, 2, 1, 1, 2, 1, 1, 1]));
        assert!(!image.log_concavity().passed());
    }

    #[test]
    fn binomial_input_stays_concave() {
        let op = Operator7::from_u64([1, 2, 3, 4, 3, 2, 1]);
        let image = apply_operator(&op, &ZSequence::from_u64(0, &[1, 3, 3, 1]));
        assert!(image.log_concavity().passed());
    }

    #[test]
    fn zsequence_trims() {
        let z = ZSequence::from_u64(-2, &[0, 0, 3, 0]);
        assert_eq!(z, ZSequence::from_u64(0, &[3]));
        assert_eq!(z.support(), Some((0, 0)));
        assert!(ZSequence::from_u64(4, &[0, 0]).is_zero());
    }

    #[test]
    fn lemma_small_run() {
        let a = check_lemma41(50, 10, 200, 3).unwrap();
        assert!(a.passed(), "{a:?}");
        assert_eq!(a, check_lemma41(50, 10, 200, 3).unwrap());
        assert!(check_lemma41(0, 10, 200, 3).is_err());
    }

    #[test]
    fn injection_small() {
        assert!(injection_counting_check(2).unwrap().passed());
        assert!(injection_counting_check(0).is_err());
    }
}
