//! Meet and join in the majorization lattice.
//!
//! The meet's Lorenz curve is the pointwise minimum of the inputs' curves,
//! which is already concave. The pointwise maximum need not be concave; its
//! increments (the pre-join vector) are repaired by averaging order-violating
//! blocks until the vector is non-increasing.
//!
//! Every operation has an exact counterpart over [`BigRational`] that follows
//! the same code path.

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Zero};

use crate::simplex::{ExactDistribution, ProbabilityDistribution, SimplexError, SUM_TOLERANCE};

/// Increments of the pointwise-max Lorenz curve. May violate the
/// non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct PreJoinVector {
    entries: Vec<f64>,
}

impl PreJoinVector {
    /// Wraps arbitrary entries summing to one, e.g. to exercise [`flatten`]
    /// directly.
    pub fn new(entries: Vec<f64>) -> Result<Self, SimplexError> {
        if entries.is_empty() {
            return Err(SimplexError::EmptyInput);
        }
        if let Some(index) = entries.iter().position(|w| !w.is_finite()) {
            return Err(SimplexError::NonFinite { index });
        }
        let sum: f64 = entries.iter().sum();
        let deviation = (sum - 1.0).abs();
        if deviation > SUM_TOLERANCE {
            return Err(SimplexError::SumOutOfTolerance { sum, deviation });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_sorted(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }
}

fn padded_pair(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
) -> (ProbabilityDistribution, ProbabilityDistribution) {
    let n = p.dim().max(q.dim());
    (p.pad(n).expect("n >= dim"), q.pad(n).expect("n >= dim"))
}

/// Increments of the pointwise min (or max) of the Lorenz curves of `p` and
/// `q`, which must have equal length. Where the envelope follows the same
/// curve at `k - 1` and `k`, the increment is that input's own weight rather
/// than a difference of partial sums, so no rounding is introduced there.
/// The same holds across a switch of sides at a point where the two curves
/// were tied.
fn envelope_increments<T>(p: &[T], q: &[T], take_max: bool) -> Vec<T>
where
    T: Clone + Num + PartialOrd,
{
    let mut out = Vec::with_capacity(p.len());
    let (mut sp, mut sq) = (T::zero(), T::zero());
    let mut prev_side: Option<bool> = None;
    for (x, y) in p.iter().zip(q) {
        let tied_before = sp == sq;
        let prev_env = match prev_side {
            Some(false) => sq.clone(),
            _ => sp.clone(),
        };
        sp = sp + x.clone();
        sq = sq + y.clone();
        // `true` selects p's curve; ties keep the previous side.
        let side = if sp == sq {
            prev_side.unwrap_or(true)
        } else {
            (sp > sq) == take_max
        };
        let inc = match prev_side {
            Some(prev) if prev != side && !tied_before => {
                let env = if side { sp.clone() } else { sq.clone() };
                env - prev_env
            }
            _ if side => x.clone(),
            _ => y.clone(),
        };
        out.push(inc);
        prev_side = Some(side);
    }
    out
}

/// Greatest lower bound of `p` and `q`.
pub fn meet(p: &ProbabilityDistribution, q: &ProbabilityDistribution) -> ProbabilityDistribution {
    let (p, q) = padded_pair(p, q);
    ProbabilityDistribution::from_lattice_output(envelope_increments(
        p.weights(),
        q.weights(),
        false,
    ))
}

pub fn pre_join(p: &ProbabilityDistribution, q: &ProbabilityDistribution) -> PreJoinVector {
    let (p, q) = padded_pair(p, q);
    PreJoinVector {
        entries: envelope_increments(p.weights(), q.weights(), true),
    }
}

/// Averages order-violating blocks until `w` is non-increasing.
pub fn flatten(w: &PreJoinVector) -> ProbabilityDistribution {
    flatten_counted(w).0
}

/// [`flatten`] together with the number of averaging passes it took.
pub fn flatten_counted(w: &PreJoinVector) -> (ProbabilityDistribution, usize) {
    let mut entries = w.entries.clone();
    let passes = average_violating_blocks(&mut entries);
    (
        ProbabilityDistribution::from_lattice_output(entries),
        passes,
    )
}

/// Least upper bound of `p` and `q`.
pub fn join(p: &ProbabilityDistribution, q: &ProbabilityDistribution) -> ProbabilityDistribution {
    flatten(&pre_join(p, q))
}

/// One pass finds the first strict ascent `w[i] < w[i+1]`, widens it left
/// over entries tied with `w[i]` and right over the non-decreasing run, and
/// replaces that block by its mean. Scanning restarts from the left after
/// every pass since a merged block can now violate against its left
/// neighbour. Each pass fuses at least two runs of equal values, so there are
/// at most `len - 1` passes.
fn average_violating_blocks<T>(w: &mut [T]) -> usize
where
    T: Clone + Num + PartialOrd + FromPrimitive,
{
    let mut passes = 0;
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] < w[i + 1]) {
        let mut start = i;
        while start > 0 && w[start - 1] == w[start] {
            start -= 1;
        }
        let mut end = i + 1;
        while end + 1 < w.len() && w[end] <= w[end + 1] {
            end += 1;
        }
        let len = T::from_usize(end - start + 1).expect("block length fits the scalar");
        let total = w[start..=end]
            .iter()
            .fold(T::zero(), |acc, x| acc + x.clone());
        let mean = total / len;
        for x in &mut w[start..=end] {
            *x = mean.clone();
        }
        passes += 1;
    }
    passes
}

fn exact_pair(
    p: &ExactDistribution,
    q: &ExactDistribution,
) -> (ExactDistribution, ExactDistribution) {
    let n = p.dim().max(q.dim());
    (p.padded(n), q.padded(n))
}

pub fn meet_exact(p: &ExactDistribution, q: &ExactDistribution) -> ExactDistribution {
    let (p, q) = exact_pair(p, q);
    ExactDistribution::from_unsorted(envelope_increments(p.weights(), q.weights(), false))
}

pub fn pre_join_exact(p: &ExactDistribution, q: &ExactDistribution) -> Vec<BigRational> {
    let (p, q) = exact_pair(p, q);
    envelope_increments(p.weights(), q.weights(), true)
}

pub fn flatten_exact(w: &[BigRational]) -> ExactDistribution {
    let mut entries = w.to_vec();
    average_violating_blocks(&mut entries);
    debug_assert!(entries.iter().all(|x| *x >= BigRational::zero()));
    ExactDistribution::from_unsorted(entries)
}

pub fn join_exact(p: &ExactDistribution, q: &ExactDistribution) -> ExactDistribution {
    flatten_exact(&pre_join_exact(p, q))
}
