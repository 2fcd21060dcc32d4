//! Points of the probability simplex, kept in canonical (sorted
//! non-increasing) form, and the majorization preorder on them.
//!
//! All comparisons are carried out on Lorenz curves (prefix sums). Vectors of
//! different length are zero-padded to the longer one before they are
//! compared or combined.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Absolute tolerance on `|Σ p_i − 1|` accepted by [`ProbabilityDistribution::new`].
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Absolute tolerance on prefix-sum comparisons; closer values count as ties.
pub const COMPARE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimplexError {
    #[error("distribution is empty")]
    EmptyInput,
    #[error("weight {value} at position {index} is negative")]
    NegativeWeight { index: usize, value: f64 },
    #[error("weight at position {index} is not a finite number")]
    NonFinite { index: usize },
    #[error("weights sum to {sum}, which deviates from 1 by {deviation:e}")]
    SumOutOfTolerance { sum: f64, deviation: f64 },
    #[error("cannot pad a distribution of dimension {dim} down to {target}")]
    TargetDimTooSmall { dim: usize, target: usize },
    #[error("cannot parse {0:?} as a probability vector")]
    Parse(String),
}

/// A validated point of the simplex, stored sorted non-increasingly.
///
/// Trailing zeros are kept, so `dim()` is the length the caller asked for.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ProbabilityDistribution {
    weights: Vec<f64>,
}

impl ProbabilityDistribution {
    /// Validates `raw` and returns its sorted permutation. Inputs that sum to
    /// one within [`SUM_TOLERANCE`] are kept as given, never re-normalized.
    pub fn new(raw: impl Into<Vec<f64>>) -> Result<Self, SimplexError> {
        let weights = raw.into();
        let sum = validate_weights(&weights)?;
        let deviation = (sum - 1.0).abs();
        if deviation > SUM_TOLERANCE {
            return Err(SimplexError::SumOutOfTolerance { sum, deviation });
        }
        Ok(Self::from_unsorted(weights))
    }

    /// Like [`new`](Self::new) but divides by the sum first. The sum must be
    /// strictly positive.
    pub fn normalized(raw: impl Into<Vec<f64>>) -> Result<Self, SimplexError> {
        let mut weights = raw.into();
        let sum = validate_weights(&weights)?;
        if sum <= 0.0 || !sum.is_finite() {
            return Err(SimplexError::SumOutOfTolerance {
                sum,
                deviation: (sum - 1.0).abs(),
            });
        }
        for w in &mut weights {
            *w /= sum;
        }
        Ok(Self::from_unsorted(weights))
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform distribution needs n >= 1");
        Self {
            weights: vec![1.0 / n as f64; n],
        }
    }

    /// `(1, 0, …, 0)` of length `n`, the top element of the lattice.
    pub fn deterministic(n: usize) -> Self {
        assert!(n > 0, "deterministic distribution needs n >= 1");
        let mut weights = vec![0.0; n];
        weights[0] = 1.0;
        Self { weights }
    }

    fn from_unsorted(mut weights: Vec<f64>) -> Self {
        weights.sort_by(|a, b| b.total_cmp(a));
        Self { weights }
    }

    /// Builds a distribution from lattice-operation output whose entries are
    /// already valid up to rounding. Tiny negative noise is clamped and any
    /// rounding-level inversions are resorted.
    pub(crate) fn from_lattice_output(mut weights: Vec<f64>) -> Self {
        for w in &mut weights {
            if *w < 0.0 {
                debug_assert!(*w > -SUM_TOLERANCE, "lattice output weight {w}");
                *w = 0.0;
            }
        }
        Self::from_unsorted(weights)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Number of strictly positive weights.
    pub fn support(&self) -> usize {
        self.weights.iter().take_while(|&&w| w > 0.0).count()
    }

    pub fn has_full_support(&self) -> bool {
        self.support() == self.dim()
    }

    /// Appends zeros up to dimension `n`.
    pub fn pad(&self, n: usize) -> Result<Self, SimplexError> {
        if n < self.dim() {
            return Err(SimplexError::TargetDimTooSmall {
                dim: self.dim(),
                target: n,
            });
        }
        let mut weights = self.weights.clone();
        weights.resize(n, 0.0);
        Ok(Self { weights })
    }

    pub fn lorenz(&self) -> LorenzCurve {
        let mut acc = 0.0;
        let partials = self
            .weights
            .iter()
            .map(|w| {
                acc += w;
                acc
            })
            .collect();
        LorenzCurve { partials }
    }

    /// Majorization relation of `self` relative to `other`:
    /// `MajorizedBy` means `self ⪯ other`.
    pub fn compare(&self, other: &Self) -> MajorizationOrder {
        let n = self.dim().max(other.dim());
        let a = self.lorenz().padded(n);
        let b = other.lorenz().padded(n);
        MajorizationOrder::from_curves(&a, &b, COMPARE_TOLERANCE)
    }

    /// `self ⪯ other` up to [`COMPARE_TOLERANCE`].
    pub fn is_majorized_by(&self, other: &Self) -> bool {
        matches!(
            self.compare(other),
            MajorizationOrder::MajorizedBy | MajorizationOrder::Equal
        )
    }

    /// All products `p_i q_j`, sorted.
    pub fn tensor_product(&self, other: &Self) -> Self {
        let mut weights = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.weights {
            for &b in &other.weights {
                weights.push(a * b);
            }
        }
        Self::from_unsorted(weights)
    }

    /// Parses a comma-separated list of decimal or `a/b` literals.
    pub fn parse(text: &str) -> Result<Self, SimplexError> {
        Self::new(parse_f64_list(text)?)
    }
}

impl TryFrom<Vec<f64>> for ProbabilityDistribution {
    type Error = SimplexError;

    fn try_from(value: Vec<f64>) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<ProbabilityDistribution> for Vec<f64> {
    fn from(value: ProbabilityDistribution) -> Self {
        value.weights
    }
}

impl FromStr for ProbabilityDistribution {
    type Err = SimplexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

fn validate_weights(weights: &[f64]) -> Result<f64, SimplexError> {
    if weights.is_empty() {
        return Err(SimplexError::EmptyInput);
    }
    for (index, &value) in weights.iter().enumerate() {
        if !value.is_finite() {
            return Err(SimplexError::NonFinite { index });
        }
        if value < 0.0 {
            return Err(SimplexError::NegativeWeight { index, value });
        }
    }
    Ok(weights.iter().sum())
}

/// Prefix sums of a sorted distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct LorenzCurve {
    partials: Vec<f64>,
}

impl LorenzCurve {
    pub fn partials(&self) -> &[f64] {
        &self.partials
    }

    pub fn len(&self) -> usize {
        self.partials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partials.is_empty()
    }

    /// Extends the curve with its final value, which is what zero-padding
    /// the underlying distribution does.
    pub fn padded(&self, n: usize) -> Vec<f64> {
        let mut out = self.partials.clone();
        let last = out.last().copied().unwrap_or(0.0);
        out.resize(n.max(out.len()), last);
        out
    }

    /// First differences, i.e. the vector this curve is the Lorenz curve of.
    pub fn increments(&self) -> Vec<f64> {
        increments(&self.partials)
    }
}

pub(crate) fn increments(partials: &[f64]) -> Vec<f64> {
    let mut prev = 0.0;
    partials
        .iter()
        .map(|&s| {
            let d = s - prev;
            prev = s;
            d
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MajorizationOrder {
    MajorizedBy,
    Majorizes,
    Equal,
    Incomparable,
}

impl MajorizationOrder {
    pub(crate) fn from_curves(a: &[f64], b: &[f64], tol: f64) -> Self {
        let below = a.iter().zip(b).all(|(x, y)| *x <= *y + tol);
        let above = a.iter().zip(b).all(|(x, y)| *y <= *x + tol);
        Self::from_flags(below, above)
    }

    pub(crate) fn from_flags(below: bool, above: bool) -> Self {
        match (below, above) {
            (true, true) => Self::Equal,
            (true, false) => Self::MajorizedBy,
            (false, true) => Self::Majorizes,
            (false, false) => Self::Incomparable,
        }
    }

    /// The relation seen from the other argument.
    pub fn reverse(self) -> Self {
        match self {
            Self::MajorizedBy => Self::Majorizes,
            Self::Majorizes => Self::MajorizedBy,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::MajorizedBy => "majorized-by",
            Self::Majorizes => "majorizes",
            Self::Equal => "equal",
            Self::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for MajorizationOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A distribution with exact rational weights, used by the exact lattice mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactDistribution {
    weights: Vec<BigRational>,
}

impl ExactDistribution {
    /// Requires non-negative weights summing to exactly one.
    pub fn new(raw: Vec<BigRational>) -> Result<Self, SimplexError> {
        if raw.is_empty() {
            return Err(SimplexError::EmptyInput);
        }
        for (index, w) in raw.iter().enumerate() {
            if w.is_negative() {
                return Err(SimplexError::NegativeWeight {
                    index,
                    value: w.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let sum = raw.iter().fold(BigRational::zero(), |acc, w| acc + w);
        if !sum.is_one() {
            let sum = sum.to_f64().unwrap_or(f64::NAN);
            return Err(SimplexError::SumOutOfTolerance {
                sum,
                deviation: (sum - 1.0).abs(),
            });
        }
        Ok(Self::from_unsorted(raw))
    }

    pub(crate) fn from_unsorted(mut weights: Vec<BigRational>) -> Self {
        weights.sort_by(|a, b| b.cmp(a));
        Self { weights }
    }

    pub fn parse(text: &str) -> Result<Self, SimplexError> {
        Self::new(parse_rational_list(text)?)
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn lorenz(&self) -> Vec<BigRational> {
        let mut acc = BigRational::zero();
        self.weights
            .iter()
            .map(|w| {
                acc += w;
                acc.clone()
            })
            .collect()
    }

    pub fn padded(&self, n: usize) -> Self {
        let mut weights = self.weights.clone();
        weights.resize(n.max(weights.len()), BigRational::zero());
        Self { weights }
    }

    pub fn compare(&self, other: &Self) -> MajorizationOrder {
        let n = self.dim().max(other.dim());
        let a = self.padded(n).lorenz();
        let b = other.padded(n).lorenz();
        let below = a.iter().zip(&b).all(|(x, y)| x <= y);
        let above = a.iter().zip(&b).all(|(x, y)| y <= x);
        MajorizationOrder::from_flags(below, above)
    }

    pub fn to_f64(&self) -> ProbabilityDistribution {
        let weights = self
            .weights
            .iter()
            .map(|w| w.to_f64().unwrap_or(f64::NAN))
            .collect();
        ProbabilityDistribution::from_unsorted(weights)
    }

    /// `a/b` literals (integers print without a denominator).
    pub fn to_strings(&self) -> Vec<String> {
        self.weights.iter().map(|w| w.to_string()).collect()
    }
}

impl fmt::Display for ExactDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join(","))
    }
}

/// Parses one literal: `a/b`, a plain decimal such as `0.125`, or a decimal
/// with an exponent such as `1.5e-3`. Decimals are converted exactly.
pub fn parse_rational(text: &str) -> Result<BigRational, SimplexError> {
    let err = || SimplexError::Parse(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| err())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let digits: BigInt = format!("{int_part}{frac_part}0")
        .parse()
        .map_err(|_| err())?;
    let scale = exponent - frac_part.len() as i32 - 1;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(digits);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if negative { -value } else { value })
}

pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>, SimplexError> {
    split_list(text)?.into_iter().map(parse_rational).collect()
}

/// Parses a comma-separated list into floats. Rational literals are divided
/// exactly first and rounded once.
pub fn parse_f64_list(text: &str) -> Result<Vec<f64>, SimplexError> {
    split_list(text)?
        .into_iter()
        .map(|item| {
            if item.contains('/') {
                parse_rational(item)?
                    .to_f64()
                    .ok_or_else(|| SimplexError::Parse(item.to_string()))
            } else {
                item.trim()
                    .parse::<f64>()
                    .map_err(|_| SimplexError::Parse(item.to_string()))
            }
        })
        .collect()
}

fn split_list(text: &str) -> Result<Vec<&str>, SimplexError> {
    let trimmed = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if trimmed.trim().is_empty() {
        return Err(SimplexError::EmptyInput);
    }
    Ok(trimmed.split(',').map(str::trim).collect())
}
