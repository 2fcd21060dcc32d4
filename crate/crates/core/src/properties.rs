//! Lattice inequalities of the Sharma-Mittal entropy evaluated on concrete
//! pairs.
//!
//! Every check recomputes meet and join from its inputs and records both
//! sides of the inequality with an oriented margin: `margin >= -tolerance`
//! means the inequality holds. Checks evaluate in every parameter region;
//! deciding which regions carry a guarantee is left to the caller.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::entropy::{sharma_mittal_value, EntropyError, EntropyParams};
use crate::lattice::{join, meet};
use crate::simplex::ProbabilityDistribution;

/// Violations are reported only when the margin is below `-CHECK_TOLERANCE`.
pub const CHECK_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyKind {
    /// `S(p∧q) ≤ S(p) + S(q)`
    Subadditive,
    /// `S(p∧q) ≥ S(p) + S(q)`
    Superadditive,
    /// `S(p∧q) ≤ S(p) + S(q) + (1−β)S(p)S(q)` for `α ≥ 0`, reversed for `α < 0`
    GeneralizedSubSuper,
    /// `S(p) + S(q) ≤ S(p∧q) + S(p∨q)`
    Supermodular,
    /// `S(p) + S(q) ≥ S(p∧q) + S(p∨q)`
    Submodular,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 5] = [
        PropertyKind::Subadditive,
        PropertyKind::Superadditive,
        PropertyKind::GeneralizedSubSuper,
        PropertyKind::Supermodular,
        PropertyKind::Submodular,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyKind::Subadditive => "subadditive",
            PropertyKind::Superadditive => "superadditive",
            PropertyKind::GeneralizedSubSuper => "generalized-sub-super",
            PropertyKind::Supermodular => "supermodular",
            PropertyKind::Submodular => "submodular",
        }
    }

    fn uses_join(self) -> bool {
        matches!(self, PropertyKind::Supermodular | PropertyKind::Submodular)
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        match key.as_str() {
            "subadditive" | "sub" => Ok(PropertyKind::Subadditive),
            "superadditive" | "super" => Ok(PropertyKind::Superadditive),
            "generalized-sub-super" | "generalized" => Ok(PropertyKind::GeneralizedSubSuper),
            "supermodular" => Ok(PropertyKind::Supermodular),
            "submodular" => Ok(PropertyKind::Submodular),
            _ => Err(format!("unknown property {s:?}")),
        }
    }
}

/// Which way the recorded inequality `lhs ? rhs` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// `lhs ≤ rhs`, margin = `rhs − lhs`
    AtMost,
    /// `lhs ≥ rhs`, margin = `lhs − rhs`
    AtLeast,
}

impl Direction {
    fn margin(self, lhs: f64, rhs: f64) -> f64 {
        match self {
            Direction::AtMost => rhs - lhs,
            Direction::AtLeast => lhs - rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyCheckRecord {
    pub kind: PropertyKind,
    pub params: EntropyParams,
    pub p: ProbabilityDistribution,
    pub q: ProbabilityDistribution,
    pub meet: ProbabilityDistribution,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<ProbabilityDistribution>,
    /// Entropies of `p`, `q`, `p∧q` and, when used, `p∨q`.
    pub entropy_p: f64,
    pub entropy_q: f64,
    pub entropy_meet: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entropy_join: Option<f64>,
    pub direction: Direction,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub tolerance: f64,
    pub holds: bool,
    /// Holds, but with `|margin| < tolerance`.
    pub tight: bool,
    /// Margin of the opposite modularity inequality, for supermodular and
    /// submodular checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_margin: Option<f64>,
}

impl PropertyCheckRecord {
    pub fn is_violation(&self) -> bool {
        !self.holds
    }

    /// Re-evaluates the check from the stored inputs.
    pub fn recompute(&self) -> Result<PropertyCheckRecord, EntropyError> {
        check_with_tolerance(self.kind, &self.p, &self.q, &self.params, self.tolerance)
    }
}

pub fn check(
    kind: PropertyKind,
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<PropertyCheckRecord, EntropyError> {
    check_with_tolerance(kind, p, q, params, CHECK_TOLERANCE)
}

pub fn check_with_tolerance(
    kind: PropertyKind,
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    params: &EntropyParams,
    tolerance: f64,
) -> Result<PropertyCheckRecord, EntropyError> {
    let m = meet(p, q);
    let j = kind.uses_join().then(|| join(p, q));
    let sp = sharma_mittal_value(p, params)?;
    let sq = sharma_mittal_value(q, params)?;
    let sm = sharma_mittal_value(&m, params)?;
    let sj = j
        .as_ref()
        .map(|j| sharma_mittal_value(j, params))
        .transpose()?;

    let (direction, lhs, rhs) = match kind {
        PropertyKind::Subadditive => (Direction::AtMost, sm, sp + sq),
        PropertyKind::Superadditive => (Direction::AtLeast, sm, sp + sq),
        PropertyKind::GeneralizedSubSuper => {
            let cross = (1.0 - params.beta_value()) * sp * sq;
            let direction = if params.alpha_value() >= 0.0 {
                Direction::AtMost
            } else {
                Direction::AtLeast
            };
            (direction, sm, sp + sq + cross)
        }
        PropertyKind::Supermodular => (Direction::AtMost, sp + sq, sm + sj.unwrap_or_default()),
        PropertyKind::Submodular => (Direction::AtLeast, sp + sq, sm + sj.unwrap_or_default()),
    };
    let margin = direction.margin(lhs, rhs);
    let holds = margin >= -tolerance;
    let dual_margin = kind.uses_join().then_some(-margin);

    Ok(PropertyCheckRecord {
        kind,
        params: *params,
        p: p.clone(),
        q: q.clone(),
        meet: m,
        join: j,
        entropy_p: sp,
        entropy_q: sq,
        entropy_meet: sm,
        entropy_join: sj,
        direction,
        lhs,
        rhs,
        margin,
        tolerance,
        holds,
        tight: holds && margin < tolerance,
        dual_margin,
    })
}

pub fn check_subadditivity(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<PropertyCheckRecord, EntropyError> {
    check(PropertyKind::Subadditive, p, q, params)
}

pub fn check_superadditivity(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<PropertyCheckRecord, EntropyError> {
    check(PropertyKind::Superadditive, p, q, params)
}

pub fn check_generalized(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<PropertyCheckRecord, EntropyError> {
    check(PropertyKind::GeneralizedSubSuper, p, q, params)
}

/// The returned record's `dual_margin` is the submodularity margin.
pub fn check_supermodularity(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<PropertyCheckRecord, EntropyError> {
    check(PropertyKind::Supermodular, p, q, params)
}

pub fn check_submodularity(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    params: &EntropyParams,
) -> Result<PropertyCheckRecord, EntropyError> {
    check(PropertyKind::Submodular, p, q, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::pseudo_additivity_residual;
    use approx::assert_abs_diff_eq;

    fn dist(w: &[f64]) -> ProbabilityDistribution {
        ProbabilityDistribution::new(w.to_vec()).unwrap()
    }

    fn params(a: f64, b: f64) -> EntropyParams {
        EntropyParams::from_values(a, b).unwrap()
    }

    fn first_pair() -> (ProbabilityDistribution, ProbabilityDistribution) {
        (dist(&[0.5, 0.3, 0.1, 0.1]), dist(&[0.4, 0.4, 0.2, 0.0]))
    }

    fn second_pair() -> (ProbabilityDistribution, ProbabilityDistribution) {
        (dist(&[0.5, 0.2, 0.2, 0.1]), dist(&[0.4, 0.4, 0.15, 0.05]))
    }

    #[test]
    fn subadditivity_on_first_pair() {
        let (p, q) = first_pair();
        let r = check_subadditivity(&p, &q, &params(2.0, 3.0)).unwrap();
        assert_abs_diff_eq!(r.lhs, 0.4422, epsilon = 1e-12);
        assert_abs_diff_eq!(r.rhs, 0.8704, epsilon = 1e-12);
        assert!(r.holds && !r.tight);
        assert_eq!(r.direction, Direction::AtMost);
    }

    #[test]
    fn subadditivity_self_pair() {
        let p = dist(&[0.7, 0.2, 0.1]);
        let r = check_subadditivity(&p, &p, &params(0.5, 2.0)).unwrap();
        assert!(r.holds);
        assert_abs_diff_eq!(r.margin, r.entropy_p, epsilon = 1e-15);
    }

    #[test]
    fn superadditivity_self_pair_margin_orientation() {
        let p = dist(&[0.7, 0.2, 0.1]);
        let r = check_superadditivity(&p, &p, &params(-1.0, 0.5)).unwrap();
        assert_eq!(r.direction, Direction::AtLeast);
        assert_abs_diff_eq!(r.margin, -r.entropy_p, epsilon = 1e-15);
        assert!(r.entropy_p > 0.0 && !r.holds);
    }

    #[test]
    fn superadditivity_rejects_zero_weights_for_negative_alpha() {
        let (p, q) = first_pair();
        assert!(matches!(
            check_superadditivity(&p, &q, &params(-1.0, 0.5)),
            Err(EntropyError::ZeroWeightWithNegativeAlpha { .. })
        ));
    }

    #[test]
    fn generalized_on_first_pair() {
        let (p, q) = first_pair();
        let r = check_generalized(&p, &q, &params(2.0, 3.0)).unwrap();
        let expected_rhs = 0.8704 + (1.0 - 3.0) * 0.4352 * 0.4352;
        assert_abs_diff_eq!(r.rhs, expected_rhs, epsilon = 1e-12);
        assert_abs_diff_eq!(r.rhs, 0.49160192, epsilon = 1e-12);
        assert!(r.holds);
    }

    /// With `p⊗q` in place of the meet, the generalized inequality is the
    /// pseudo-additivity identity, so its margin vanishes.
    #[test]
    fn generalized_is_tight_on_tensor_product() {
        let (p, q) = second_pair();
        for (a, b) in [(2.0, 3.0), (0.5, -1.0), (3.0, 0.5)] {
            let pr = params(a, b);
            let residual = pseudo_additivity_residual(&p, &q, &pr).unwrap();
            assert!(residual.abs() < 1e-12);
        }
    }

    #[test]
    fn generalized_direction_follows_alpha_sign() {
        let p = dist(&[0.6, 0.3, 0.1]);
        let q = dist(&[0.5, 0.45, 0.05]);
        assert_eq!(
            check_generalized(&p, &q, &params(0.5, 2.0))
                .unwrap()
                .direction,
            Direction::AtMost
        );
        assert_eq!(
            check_generalized(&p, &q, &params(-0.5, 2.0))
                .unwrap()
                .direction,
            Direction::AtLeast
        );
    }

    #[test]
    fn supermodularity_fails_on_first_pair() {
        let (p, q) = first_pair();
        let r = check_supermodularity(&p, &q, &params(2.0, 3.0)).unwrap();
        assert_abs_diff_eq!(r.lhs, 0.8704, epsilon = 1e-12);
        assert_abs_diff_eq!(r.rhs, 0.8700, epsilon = 1e-12);
        assert!(!r.holds);
        assert_abs_diff_eq!(r.margin, -0.0004, epsilon = 1e-12);
        assert_abs_diff_eq!(r.dual_margin.unwrap(), 0.0004, epsilon = 1e-12);
    }

    #[test]
    fn submodularity_fails_on_second_pair() {
        let (p, q) = second_pair();
        let sup = check_supermodularity(&p, &q, &params(2.0, 3.0)).unwrap();
        assert_abs_diff_eq!(sup.lhs, 0.8826875, epsilon = 1e-12);
        assert_abs_diff_eq!(sup.rhs, 0.8883875, epsilon = 1e-12);
        assert!(sup.holds);
        let sub = check_submodularity(&p, &q, &params(2.0, 3.0)).unwrap();
        assert!(!sub.holds);
        assert_abs_diff_eq!(sub.margin, -0.0057, epsilon = 1e-12);
        assert_eq!(sub.dual_margin, Some(-sub.margin));
    }

    #[test]
    fn near_ties_are_tight_not_violations() {
        // Comparable pair: meet and join are the inputs themselves, so the
        // modularity margins are zero up to rounding.
        let p = dist(&[0.6, 0.3, 0.1]);
        let q = dist(&[0.4, 0.35, 0.25]);
        let r = check_supermodularity(&p, &q, &params(2.0, 3.0)).unwrap();
        assert!(r.holds && r.tight, "{r:?}");
        let r = check_submodularity(&p, &q, &params(2.0, 3.0)).unwrap();
        assert!(r.holds && r.tight, "{r:?}");
    }

    #[test]
    fn recompute_is_bit_identical() {
        let (p, q) = second_pair();
        for kind in PropertyKind::ALL {
            let r = check(kind, &p, &q, &params(2.0, 3.0)).unwrap();
            assert_eq!(r.recompute().unwrap(), r);
        }
    }

    #[test]
    fn record_serializes_round_trip() {
        let (p, q) = first_pair();
        let r = check_supermodularity(&p, &q, &params(2.0, 3.0)).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: PropertyCheckRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(json.contains(r#""kind":"supermodular""#));
    }

    #[test]
    fn kind_parsing() {
        for kind in PropertyKind::ALL {
            assert_eq!(kind.as_str().parse::<PropertyKind>().unwrap(), kind);
        }
        assert!("Super_Modular".parse::<PropertyKind>().is_err());
        assert_eq!(
            "generalized".parse::<PropertyKind>(),
            Ok(PropertyKind::GeneralizedSubSuper)
        );
    }
}
