//! Shannon, Rényi, Tsallis and Sharma-Mittal entropies, together with the
//! auxiliary maps used to rewrite Sharma-Mittal in terms of the others.
//!
//! Shannon and Rényi values are in bits. Sharma-Mittal and Tsallis carry the
//! natural-log scaling of their definitions, so for instance the `β → 1`
//! branch of Sharma-Mittal is `ln 2 · H_α`.
//!
//! Limit branches (`α = 1`, `β = 1`, `β = α`) are chosen only by the tags on
//! [`Param`]; a finite value close to a limit is always evaluated with the
//! general formula.

use std::f64::consts::LN_2;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::simplex::ProbabilityDistribution;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EntropyError {
    #[error("weight at position {index} is zero but alpha = {alpha} is negative")]
    ZeroWeightWithNegativeAlpha { index: usize, alpha: f64 },
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// One entropy parameter: a finite value or one of the limit tags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    Finite(f64),
    /// The limit at 1 (`α → 1` or `β → 1`).
    Limit1,
    /// `β → α`; only meaningful for β.
    LimitAlpha,
    /// `α = ∞`, Rényi only.
    Infinity,
}

impl Param {
    /// Maps a plain number to a parameter. Exactly `1.0` becomes
    /// [`Param::Limit1`] and `+∞` becomes [`Param::Infinity`].
    pub fn from_value(v: f64) -> Self {
        if v == 1.0 {
            Param::Limit1
        } else if v == f64::INFINITY {
            Param::Infinity
        } else {
            Param::Finite(v)
        }
    }

    fn label(&self) -> String {
        match self {
            Param::Finite(v) => format!("{v}"),
            Param::Limit1 => "1".into(),
            Param::LimitAlpha => "alpha".into(),
            Param::Infinity => "inf".into(),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Param::Finite(v) => serializer.serialize_f64(*v),
            Param::Limit1 => serializer.serialize_str("limit-1"),
            Param::LimitAlpha => serializer.serialize_str("limit-alpha"),
            Param::Infinity => serializer.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Param {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Tag(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(v) => Ok(Param::Finite(v)),
            Raw::Tag(t) => match t.as_str() {
                "limit-1" => Ok(Param::Limit1),
                "limit-alpha" => Ok(Param::LimitAlpha),
                "infinity" => Ok(Param::Infinity),
                other => Err(serde::de::Error::custom(format!(
                    "unknown parameter tag {other:?}"
                ))),
            },
        }
    }
}

/// The `(α, β)` pair of the Sharma-Mittal family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct EntropyParams {
    alpha: Param,
    beta: Param,
}

#[derive(Deserialize)]
struct RawParams {
    alpha: Param,
    beta: Param,
}

impl TryFrom<RawParams> for EntropyParams {
    type Error = EntropyError;

    fn try_from(raw: RawParams) -> Result<Self, Self::Error> {
        Self::new(raw.alpha, raw.beta)
    }
}

impl EntropyParams {
    pub fn new(alpha: Param, beta: Param) -> Result<Self, EntropyError> {
        let invalid = |msg: &str| Err(EntropyError::InvalidParams(msg.to_string()));
        match alpha {
            Param::Finite(a) if !a.is_finite() => return invalid("alpha must be finite or a tag"),
            Param::Finite(1.0) => return invalid("alpha = 1 must be tagged Limit1"),
            Param::LimitAlpha => return invalid("alpha cannot be tagged LimitAlpha"),
            Param::Infinity if beta != Param::Limit1 => {
                return invalid("alpha = infinity is only defined for beta = 1")
            }
            _ => {}
        }
        match beta {
            Param::Finite(b) if !b.is_finite() => return invalid("beta must be finite or a tag"),
            Param::Finite(1.0) => return invalid("beta = 1 must be tagged Limit1"),
            Param::LimitAlpha if !matches!(alpha, Param::Finite(_)) => {
                return invalid("beta = alpha needs a finite alpha different from 1")
            }
            Param::Infinity => return invalid("beta cannot be infinite"),
            _ => {}
        }
        Ok(Self { alpha, beta })
    }

    /// Builds parameters from plain numbers: `1.0` maps to the limit tag and
    /// `β == α` (for `α ≠ 1`) to [`Param::LimitAlpha`].
    pub fn from_values(alpha: f64, beta: f64) -> Result<Self, EntropyError> {
        let a = Param::from_value(alpha);
        let b = if beta == alpha && a != Param::Limit1 && alpha.is_finite() {
            Param::LimitAlpha
        } else {
            Param::from_value(beta)
        };
        Self::new(a, b)
    }

    pub fn alpha(&self) -> Param {
        self.alpha
    }

    pub fn beta(&self) -> Param {
        self.beta
    }

    pub fn alpha_value(&self) -> f64 {
        match self.alpha {
            Param::Finite(a) => a,
            Param::Limit1 => 1.0,
            Param::Infinity => f64::INFINITY,
            Param::LimitAlpha => unreachable!("validated"),
        }
    }

    pub fn beta_value(&self) -> f64 {
        match self.beta {
            Param::Finite(b) => b,
            Param::Limit1 => 1.0,
            Param::LimitAlpha => self.alpha_value(),
            Param::Infinity => unreachable!("validated"),
        }
    }
}

impl fmt::Display for EntropyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(alpha={}, beta={})", self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Shannon,
    Renyi,
    Tsallis,
    SharmaMittal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyValue {
    pub value: f64,
    pub family: Family,
    pub params: EntropyParams,
    pub dim: usize,
}

fn shannon_params() -> EntropyParams {
    EntropyParams {
        alpha: Param::Limit1,
        beta: Param::Limit1,
    }
}

fn positive_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// `H(p) = −Σ p_i log₂ p_i` with `0 log 0 = 0`.
pub fn shannon(p: &ProbabilityDistribution) -> EntropyValue {
    EntropyValue {
        value: shannon_bits(p),
        family: Family::Shannon,
        params: shannon_params(),
        dim: p.dim(),
    }
}

fn shannon_bits(p: &ProbabilityDistribution) -> f64 {
    let s: f64 = p
        .weights()
        .iter()
        .rev()
        .filter(|&&w| w > 0.0)
        .map(|&w| w * w.log2())
        .sum();
    positive_zero(-s)
}

/// `Σ p_i^α`, summed smallest term first.
///
/// `0^α` is 0 for every `α ≥ 0`, including `α = 0`, so `g_0` counts the
/// support. A zero weight with negative `α` is an error.
pub fn g_alpha(p: &ProbabilityDistribution, alpha: f64) -> Result<f64, EntropyError> {
    if !alpha.is_finite() {
        return Err(EntropyError::InvalidParams(format!(
            "alpha = {alpha} is not finite"
        )));
    }
    let mut total = 0.0;
    for (index, &w) in p.weights().iter().enumerate().rev() {
        if w == 0.0 {
            if alpha < 0.0 {
                return Err(EntropyError::ZeroWeightWithNegativeAlpha { index, alpha });
            }
            continue;
        }
        total += if alpha == 0.0 { 1.0 } else { w.powf(alpha) };
    }
    Ok(total)
}

/// Rényi entropy in bits. `α = 0` gives `log₂ |support|`, `α = 1` (tag)
/// gives Shannon and `α = ∞` gives `−log₂ p_1`. Negative `α` is accepted on
/// full-support inputs since the `β → 1` branch of Sharma-Mittal needs it.
pub fn renyi(p: &ProbabilityDistribution, alpha: Param) -> Result<EntropyValue, EntropyError> {
    let value = renyi_bits(p, alpha)?;
    Ok(EntropyValue {
        value,
        family: Family::Renyi,
        params: EntropyParams::new(alpha, Param::Limit1)?,
        dim: p.dim(),
    })
}

fn renyi_bits(p: &ProbabilityDistribution, alpha: Param) -> Result<f64, EntropyError> {
    match alpha {
        Param::Limit1 => Ok(shannon_bits(p)),
        Param::Infinity => Ok(positive_zero(-p.weights()[0].log2())),
        Param::Finite(1.0) => Err(EntropyError::DegenerateParams(
            "Rényi order 1 must be tagged Limit1".into(),
        )),
        Param::Finite(a) => {
            let sum = g_alpha(p, a)?;
            Ok(positive_zero(sum.log2() / (1.0 - a)))
        }
        Param::LimitAlpha => Err(EntropyError::InvalidParams(
            "Rényi order cannot be tagged LimitAlpha".into(),
        )),
    }
}

/// `T_α(p) = (1 − Σ p_i^α)/(α − 1)` for `α > 0`; the `α = 1` tag gives
/// `ln 2 · H(p)`.
pub fn tsallis(p: &ProbabilityDistribution, alpha: Param) -> Result<EntropyValue, EntropyError> {
    let (value, params) = match alpha {
        Param::Limit1 => (LN_2 * shannon_bits(p), shannon_params()),
        Param::Finite(a) if a > 0.0 && a != 1.0 => (
            tsallis_raw(p, a)?,
            EntropyParams::new(alpha, Param::LimitAlpha)?,
        ),
        other => {
            return Err(EntropyError::InvalidParams(format!(
                "Tsallis entropy needs alpha > 0, got {other}"
            )))
        }
    };
    Ok(EntropyValue {
        value,
        family: Family::Tsallis,
        params,
        dim: p.dim(),
    })
}

fn tsallis_raw(p: &ProbabilityDistribution, a: f64) -> Result<f64, EntropyError> {
    Ok(positive_zero((1.0 - g_alpha(p, a)?) / (a - 1.0)))
}

/// `φ_β(x) = (2^{(1−β)x} − 1)/(1−β)`, and `ln 2 · x` at `β = 1`.
pub fn phi_beta(x: f64, beta: f64) -> f64 {
    if beta == 1.0 {
        LN_2 * x
    } else {
        ((1.0 - beta) * x * LN_2).exp_m1() / (1.0 - beta)
    }
}

/// `h_{α,β}(x) = (x^{(1−β)/(1−α)} − 1)/(1−β)`, so that
/// `S_{α,β}(p) = h_{α,β}(Σ p_i^α)`.
pub fn h_alpha_beta(x: f64, params: &EntropyParams) -> Result<f64, EntropyError> {
    let alpha = match params.alpha {
        Param::Finite(a) => a,
        other => {
            return Err(EntropyError::DegenerateParams(format!(
                "h is undefined for alpha = {other}"
            )))
        }
    };
    if params.beta == Param::Limit1 {
        return Err(EntropyError::DegenerateParams(
            "h is undefined for beta = 1".into(),
        ));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(EntropyError::InvalidArgument(format!(
            "h needs x > 0, got {x}"
        )));
    }
    let beta = params.beta_value();
    let exponent = (1.0 - beta) / (1.0 - alpha);
    Ok((exponent * x.ln()).exp_m1() / (1.0 - beta))
}

/// Sharma-Mittal entropy, dispatching on the limit tags of `params`.
pub fn sharma_mittal(
    p: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<EntropyValue, EntropyError> {
    Ok(EntropyValue {
        value: sharma_mittal_value(p, params)?,
        family: Family::SharmaMittal,
        params: *params,
        dim: p.dim(),
    })
}

pub(crate) fn sharma_mittal_value(
    p: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<f64, EntropyError> {
    match (params.alpha, params.beta) {
        (Param::Limit1, Param::Limit1) => Ok(LN_2 * shannon_bits(p)),
        (Param::Limit1, Param::Finite(b)) => Ok(phi_beta(shannon_bits(p), b)),
        (alpha, Param::Limit1) => Ok(LN_2 * renyi_bits(p, alpha)?),
        (Param::Finite(a), Param::LimitAlpha) => {
            Ok(positive_zero((1.0 - g_alpha(p, a)?) / (a - 1.0)))
        }
        (Param::Finite(a), Param::Finite(b)) => {
            let sum = g_alpha(p, a)?;
            let exponent = (1.0 - b) / (1.0 - a);
            Ok(positive_zero((exponent * sum.ln()).exp_m1() / (1.0 - b)))
        }
        (alpha, beta) => Err(EntropyError::InvalidParams(format!(
            "no Sharma-Mittal branch for alpha = {alpha}, beta = {beta}"
        ))),
    }
}

/// Closed-form `∂S_{α,β}/∂p_i = α/(1−α) · A^{(α−β)/(1−α)} · p_i^{α−1}` with
/// `A = Σ p_k^α`, treating the weights as free coordinates. `i` is 0-based
/// and refers to the sorted weights.
pub fn sharma_mittal_partial(
    p: &ProbabilityDistribution,
    i: usize,
    params: &EntropyParams,
) -> Result<f64, EntropyError> {
    if i >= p.dim() {
        return Err(EntropyError::IndexOutOfRange {
            index: i,
            dim: p.dim(),
        });
    }
    let alpha = match params.alpha {
        Param::Finite(a) if a != 0.0 => a,
        other => {
            return Err(EntropyError::DegenerateParams(format!(
                "closed-form partial needs alpha outside {{0, 1}}, got {other}"
            )))
        }
    };
    let pi = p.weights()[i];
    if alpha < 1.0 && pi == 0.0 {
        return Err(EntropyError::InvalidArgument(format!(
            "partial at a zero weight diverges for alpha = {alpha} < 1"
        )));
    }
    let sum = g_alpha(p, alpha)?;
    let beta = params.beta_value();
    Ok(alpha / (1.0 - alpha) * sum.powf((alpha - beta) / (1.0 - alpha)) * pi.powf(alpha - 1.0))
}

/// `S(p⊗q) − [S(p) + S(q) + (1−β) S(p) S(q)]`.
pub fn pseudo_additivity_residual(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<f64, EntropyError> {
    let sp = sharma_mittal_value(p, params)?;
    let sq = sharma_mittal_value(q, params)?;
    let spq = sharma_mittal_value(&p.tensor_product(q), params)?;
    let beta = params.beta_value();
    Ok(spq - (sp + sq + (1.0 - beta) * sp * sq))
}
