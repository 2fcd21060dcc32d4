//! Counterexample search: random pairs from the flat Dirichlet distribution,
//! parameter-plane sweeps, and replay of the two reference counterexamples
//! at `(α, β) = (2, 3)`.
//!
//! Randomness comes from ChaCha8 used as a counter-based generator: the key
//! is derived from the sweep seed, the stream id is the cell index and the
//! word position encodes the trial index. Any trial can therefore be
//! regenerated in isolation and the sweep result does not depend on how
//! cells are scheduled across threads.

use std::collections::BTreeSet;
use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::entropy::{EntropyError, EntropyParams};
use crate::lattice::join;
use crate::properties::{check, PropertyCheckRecord, PropertyKind, CHECK_TOLERANCE};
use crate::simplex::ProbabilityDistribution;

/// Identifier of the random stream, written into every sweep report.
pub const STREAM_ALGORITHM: &str =
    "chacha8-counter/v1: key=ChaCha8Rng::seed_from_u64(seed) (rand_chacha 0.3), \
stream=cell, word_pos=trial<<32; u=(next_u64>>11)*2^-53, exp=-ln(1-u)";

pub const DEFAULT_SEED: u64 = 0x6d61_6a65_6e74;

pub const DEFAULT_DIMS: [usize; 5] = [2, 3, 4, 6, 8];

/// Random stream of one trial in one cell.
pub fn trial_stream(seed: u64, cell: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(cell);
    rng.set_word_pos(u128::from(trial) << 32);
    rng
}

fn unit_exponential<R: RngCore>(rng: &mut R) -> f64 {
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    -(-u).ln_1p()
}

/// Uniform sample from the simplex of dimension `n`: `n` unit exponentials
/// normalized by their sum, then sorted.
pub fn sample_simplex<R: RngCore>(n: usize, rng: &mut R) -> ProbabilityDistribution {
    assert!(n >= 1, "simplex dimension must be at least 1");
    if n == 1 {
        return ProbabilityDistribution::deterministic(1);
    }
    loop {
        let draws: Vec<f64> = (0..n).map(|_| unit_exponential(rng)).collect();
        if let Ok(p) = ProbabilityDistribution::normalized(draws) {
            return p;
        }
    }
}

/// Where a counterexample pair came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum Provenance {
    Random {
        seed: u64,
        cell: u64,
        trial: u64,
        dim: usize,
    },
    Reference {
        name: String,
        trial: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub property: PropertyKind,
    pub params: EntropyParams,
    pub p: ProbabilityDistribution,
    pub q: ProbabilityDistribution,
    pub meet: ProbabilityDistribution,
    pub join: ProbabilityDistribution,
    pub entropy_p: f64,
    pub entropy_q: f64,
    pub entropy_meet: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entropy_join: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub provenance: Provenance,
}

impl CounterexampleRecord {
    fn from_check(record: PropertyCheckRecord, provenance: Provenance) -> Self {
        let join = record.join.unwrap_or_else(|| join(&record.p, &record.q));
        Self {
            property: record.kind,
            params: record.params,
            p: record.p,
            q: record.q,
            meet: record.meet,
            join,
            entropy_p: record.entropy_p,
            entropy_q: record.entropy_q,
            entropy_meet: record.entropy_meet,
            entropy_join: record.entropy_join,
            lhs: record.lhs,
            rhs: record.rhs,
            margin: record.margin,
            provenance,
        }
    }

    /// Re-runs the property check on the stored pair.
    pub fn replay(&self) -> Result<PropertyCheckRecord, EntropyError> {
        check(self.property, &self.p, &self.q, &self.params)
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("sweep configuration line {line}: {message}")]
    ConfigParse { line: usize, message: String },
    #[error(transparent)]
    Entropy(#[from] EntropyError),
    #[error(
        "cell (alpha={alpha}, beta={beta}) {property}: violation with margin {margin:e} inside a \
         guaranteed region"
    )]
    GuaranteeContradiction {
        alpha: f64,
        beta: f64,
        property: PropertyKind,
        margin: f64,
    },
}

/// Evaluates `trials` random pairs of dimension `n` and returns the first
/// whose margin is below `-CHECK_TOLERANCE`. Trial `t` uses
/// `trial_stream(seed, 0, t)`.
pub fn find_counterexample(
    property: PropertyKind,
    params: &EntropyParams,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<Option<CounterexampleRecord>, SearchError> {
    if trials == 0 {
        return Err(SearchError::InvalidConfig(
            "trials must be at least 1".into(),
        ));
    }
    if n == 0 {
        return Err(SearchError::InvalidConfig(
            "dimension must be at least 1".into(),
        ));
    }
    for trial in 0..trials {
        let mut rng = trial_stream(seed, 0, trial);
        let p = sample_simplex(n, &mut rng);
        let q = sample_simplex(n, &mut rng);
        let record = check(property, &p, &q, params)?;
        if !record.holds {
            let provenance = Provenance::Random {
                seed,
                cell: 0,
                trial,
                dim: n,
            };
            return Ok(Some(CounterexampleRecord::from_check(record, provenance)));
        }
    }
    Ok(None)
}

/// A published counterexample with its printed values.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceCounterexample {
    pub name: &'static str,
    pub property: PropertyKind,
    pub alpha: f64,
    pub beta: f64,
    pub p: [f64; 4],
    pub q: [f64; 4],
    pub meet: [f64; 4],
    pub join: [f64; 4],
    /// `S(p), S(q), S(p∨q), S(p∧q)`
    pub entropies: [f64; 4],
    /// `S(p) + S(q)` and `S(p∧q) + S(p∨q)`
    pub sums: [f64; 2],
}

pub const REFERENCE_COUNTEREXAMPLES: [ReferenceCounterexample; 2] = [
    ReferenceCounterexample {
        name: "not-supermodular",
        property: PropertyKind::Supermodular,
        alpha: 2.0,
        beta: 3.0,
        p: [0.5, 0.3, 0.1, 0.1],
        q: [0.4, 0.4, 0.2, 0.0],
        meet: [0.4, 0.4, 0.1, 0.1],
        join: [0.5, 0.3, 0.2, 0.0],
        entropies: [0.4352, 0.4352, 0.4278, 0.4422],
        sums: [0.8704, 0.8700],
    },
    ReferenceCounterexample {
        name: "not-submodular",
        property: PropertyKind::Submodular,
        alpha: 2.0,
        beta: 3.0,
        p: [0.5, 0.2, 0.2, 0.1],
        q: [0.4, 0.4, 0.15, 0.05],
        meet: [0.4, 0.3, 0.2, 0.1],
        join: [0.5, 0.3, 0.15, 0.05],
        entropies: [0.4422, 0.4404875, 0.4333875, 0.455],
        sums: [0.8826875, 0.8883875],
    },
];

/// Absolute tolerance for matching the printed decimals.
pub const REFERENCE_TOLERANCE: f64 = 1e-12;

impl ReferenceCounterexample {
    pub fn pair(&self) -> (ProbabilityDistribution, ProbabilityDistribution) {
        (
            ProbabilityDistribution::new(self.p.to_vec()).expect("valid reference vector"),
            ProbabilityDistribution::new(self.q.to_vec()).expect("valid reference vector"),
        )
    }

    pub fn params(&self) -> EntropyParams {
        EntropyParams::from_values(self.alpha, self.beta).expect("valid reference parameters")
    }

    pub fn evaluate(&self, trial: u64) -> Result<CounterexampleRecord, EntropyError> {
        let (p, q) = self.pair();
        let record = check(self.property, &p, &q, &self.params())?;
        Ok(CounterexampleRecord::from_check(
            record,
            Provenance::Reference {
                name: self.name.to_string(),
                trial,
            },
        ))
    }

    /// Compares every printed number with the computed one.
    pub fn verify(&self) -> Result<ReferenceVerification, EntropyError> {
        let record = self.evaluate(0)?;
        let mut items = Vec::new();
        let mut push = |label: String, expected: f64, actual: f64| {
            let error = (expected - actual).abs();
            items.push(VerifiedValue {
                label,
                expected,
                actual,
                error,
                ok: error <= REFERENCE_TOLERANCE,
            });
        };
        for (label, expected, actual) in [
            ("meet", &self.meet, record.meet.weights()),
            ("join", &self.join, record.join.weights()),
        ] {
            for (i, (e, a)) in expected.iter().zip(actual).enumerate() {
                push(format!("{label}[{i}]"), *e, *a);
            }
        }
        let join_entropy = crate::entropy::sharma_mittal_value(&record.join, &record.params)?;
        let computed = [
            record.entropy_p,
            record.entropy_q,
            join_entropy,
            record.entropy_meet,
        ];
        for (label, e, a) in ["S(p)", "S(q)", "S(join)", "S(meet)"]
            .into_iter()
            .zip(self.entropies)
            .zip(computed)
            .map(|((l, e), a)| (l, e, a))
        {
            push(label.to_string(), e, a);
        }
        push(
            "S(p)+S(q)".into(),
            self.sums[0],
            record.entropy_p + record.entropy_q,
        );
        push(
            "S(meet)+S(join)".into(),
            self.sums[1],
            record.entropy_meet + join_entropy,
        );
        let violated = record.margin < -CHECK_TOLERANCE;
        Ok(ReferenceVerification {
            name: self.name.to_string(),
            record,
            values: items,
            violated,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifiedValue {
    pub label: String,
    pub expected: f64,
    pub actual: f64,
    pub error: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceVerification {
    pub name: String,
    pub record: CounterexampleRecord,
    pub values: Vec<VerifiedValue>,
    /// The pair violates its property by more than the check tolerance.
    pub violated: bool,
}

impl ReferenceVerification {
    pub fn passed(&self) -> bool {
        self.violated && self.values.iter().all(|v| v.ok)
    }
}

/// Evaluates both reference pairs at `(2, 3)`: the first violates
/// supermodularity, the second submodularity.
pub fn reproduce_reference_counterexamples() -> (CounterexampleRecord, CounterexampleRecord) {
    let [a, b] =
        REFERENCE_COUNTEREXAMPLES.map(|r| r.evaluate(0).expect("reference pairs are admissible"));
    (a, b)
}

pub fn verify_reference_counterexamples() -> Vec<ReferenceVerification> {
    REFERENCE_COUNTEREXAMPLES
        .iter()
        .map(|r| r.verify().expect("reference pairs are admissible"))
        .collect()
}

/// Regions where a proven inequality guarantees that no violation exists.
///
/// Superadditivity for `α < 0, β ≤ 1` is deliberately absent: for `α < 0`
/// the entropy is Schur-convex and strictly positive on full-support inputs,
/// and `p∧q ⪯ p`, so `S(p∧q) ≤ S(p) < S(p) + S(q)` for every such pair.
pub fn guaranteed(kind: PropertyKind, params: &EntropyParams) -> bool {
    let alpha = params.alpha_value();
    let beta = params.beta_value();
    match kind {
        PropertyKind::Subadditive => alpha >= 0.0 && beta >= 1.0,
        PropertyKind::GeneralizedSubSuper => alpha >= 0.0,
        PropertyKind::Supermodular => alpha > 0.0 && beta <= alpha,
        PropertyKind::Superadditive | PropertyKind::Submodular => false,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub alpha_grid: Vec<f64>,
    pub beta_grid: Vec<f64>,
    pub dims: Vec<usize>,
    pub trials_per_cell: u64,
    pub seed: u64,
    pub properties: Vec<PropertyKind>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            alpha_grid: vec![0.5, 1.0, 2.0],
            beta_grid: vec![0.0, 1.0, 3.0],
            dims: DEFAULT_DIMS.to_vec(),
            trials_per_cell: 1000,
            seed: DEFAULT_SEED,
            properties: PropertyKind::ALL.to_vec(),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: &str| Err(SearchError::InvalidConfig(m.to_string()));
        for (name, grid) in [("alpha", &self.alpha_grid), ("beta", &self.beta_grid)] {
            if grid.is_empty() {
                return bad(&format!("{name} grid is empty"));
            }
            if grid.iter().any(|v| !v.is_finite()) {
                return bad(&format!("{name} grid has a non-finite value"));
            }
            if grid.windows(2).any(|w| w[0] >= w[1]) {
                return bad(&format!("{name} grid must be strictly ascending"));
            }
        }
        if self.dims.is_empty() || self.dims.iter().any(|&d| d < 2) {
            return bad("dims must be a non-empty set of integers >= 2");
        }
        if self.trials_per_cell == 0 {
            return bad("trials_per_cell must be at least 1");
        }
        if self.properties.is_empty() {
            return bad("no properties selected");
        }
        Ok(())
    }

    /// Parses the flat `key = value` format. Grids are comma lists or
    /// `start:step:end` ranges (inclusive). `#` starts a comment. Keys left
    /// out keep their [`Default`] value, except `seed`, which falls back to
    /// `default_seed`.
    pub fn parse(text: &str, default_seed: u64) -> Result<Self, SearchError> {
        let mut config = SweepConfig {
            seed: default_seed,
            ..SweepConfig::default()
        };
        let mut seen = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| SearchError::ConfigParse { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .or_else(|| content.split_once(':').filter(|(k, _)| !k.contains(',')))
                .ok_or_else(|| err(format!("expected key = value, got {content:?}")))?;
            let key = key.trim().to_ascii_lowercase().replace('-', "_");
            let value = value.trim();
            let canonical = match key.as_str() {
                "alpha" | "alpha_grid" => {
                    config.alpha_grid = parse_grid(value).map_err(err)?;
                    "alpha"
                }
                "beta" | "beta_grid" => {
                    config.beta_grid = parse_grid(value).map_err(err)?;
                    "beta"
                }
                "dims" | "dim" => {
                    config.dims = value
                        .split(',')
                        .map(|d| d.trim().parse::<usize>())
                        .collect::<Result<_, _>>()
                        .map_err(|e| err(format!("bad dims: {e}")))?;
                    "dims"
                }
                "trials" | "trials_per_cell" => {
                    config.trials_per_cell =
                        value.parse().map_err(|e| err(format!("bad trials: {e}")))?;
                    "trials"
                }
                "seed" => {
                    config.seed = parse_seed(value).map_err(err)?;
                    "seed"
                }
                "properties" | "property" => {
                    config.properties = value
                        .split(',')
                        .map(str::parse::<PropertyKind>)
                        .collect::<Result<_, _>>()
                        .map_err(err)?;
                    "properties"
                }
                other => return Err(err(format!("unknown key {other:?}"))),
            };
            if !seen.insert(canonical) {
                return Err(err(format!("duplicate key {canonical:?}")));
            }
        }
        config.dims.sort_unstable();
        config.dims.dedup();
        config.properties.sort_unstable();
        config.properties.dedup();
        config.validate()?;
        Ok(config)
    }
}

pub fn parse_seed(value: &str) -> Result<u64, String> {
    let v = value.trim();
    let parsed = match v.strip_prefix("0x").or_else(|| v.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => v.replace('_', "").parse(),
    };
    parsed.map_err(|e| format!("bad seed {value:?}: {e}"))
}

/// Comma-separated items, each a number or an inclusive `start:step:end`
/// range. Range points are rounded to 12 decimals so that e.g. `0:0.1:1`
/// hits `0.3` and `1` exactly.
pub fn parse_grid(value: &str) -> Result<Vec<f64>, String> {
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|e| format!("bad grid value {s:?}: {e}"))
    };
    let mut grid = Vec::new();
    for item in value.split(',') {
        match item.split(':').collect::<Vec<_>>().as_slice() {
            [start, step, end] => {
                let (start, step, end) = (parse(start)?, parse(step)?, parse(end)?);
                if step.is_nan() || step <= 0.0 || end < start {
                    return Err(format!(
                        "bad range {item:?}: need step > 0 and end >= start"
                    ));
                }
                let count = ((end - start) / step + 1e-9).floor() as usize + 1;
                if count > 100_000 {
                    return Err(format!("range {item:?} has too many points"));
                }
                grid.extend((0..count).map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12));
            }
            [single] => grid.push(parse(single)?),
            _ => return Err(format!("bad grid item {item:?}")),
        }
    }
    Ok(grid)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NoViolationFound,
    ViolationFound,
    /// No violation, and the cell lies in a proven region.
    TheoremGuaranteed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NoViolationFound => "no-violation-found",
            Verdict::ViolationFound => "violation-found",
            Verdict::TheoremGuaranteed => "theorem-guaranteed",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub alpha: f64,
    pub beta: f64,
    pub params: EntropyParams,
    pub property: PropertyKind,
    pub verdict: Verdict,
    pub guaranteed: bool,
    /// Evaluated trials; inadmissible pairs (zero weights with `α < 0`) are
    /// counted in `skipped` instead.
    pub trials: u64,
    pub skipped: u64,
    pub violations: u64,
    /// Smallest margin seen; `None` when every trial was skipped.
    pub worst_margin: Option<f64>,
    pub seed: u64,
    /// The worst violating pair, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionSweepReport {
    pub algorithm: String,
    pub seed: u64,
    pub trials_per_cell: u64,
    pub dims: Vec<usize>,
    pub tolerance: f64,
    pub alpha_grid: Vec<f64>,
    pub beta_grid: Vec<f64>,
    pub properties: Vec<PropertyKind>,
    pub cells: Vec<CellResult>,
}

impl RegionSweepReport {
    pub fn cell(&self, alpha: f64, beta: f64, property: PropertyKind) -> Option<&CellResult> {
        self.cells
            .iter()
            .find(|c| c.alpha == alpha && c.beta == beta && c.property == property)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per cell and property, preceded by a `#` line naming the
    /// random stream.
    pub fn to_csv(&self, digits: Option<usize>) -> String {
        let mut out = format!(
            "# stream={} tolerance={:e}\n",
            self.algorithm, self.tolerance
        );
        out.push_str("alpha,beta,property,verdict,worst_margin,trials,seed\n");
        for c in &self.cells {
            let margin = c
                .worst_margin
                .map(|m| crate::format::format_number(m, digits))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                crate::format::format_number(c.alpha, digits),
                crate::format::format_number(c.beta, digits),
                c.property,
                c.verdict,
                margin,
                c.trials,
                c.seed
            ));
        }
        out
    }
}

fn reference_for(kind: PropertyKind, trial: u64) -> Option<&'static ReferenceCounterexample> {
    if !matches!(kind, PropertyKind::Supermodular | PropertyKind::Submodular) {
        return None;
    }
    REFERENCE_COUNTEREXAMPLES.get(trial as usize)
}

fn run_cell(
    config: &SweepConfig,
    cell: u64,
    alpha: f64,
    beta: f64,
    property: PropertyKind,
) -> Result<CellResult, SearchError> {
    let params = EntropyParams::from_values(alpha, beta)?;
    let guaranteed = guaranteed(property, &params);
    let (mut trials, mut skipped, mut violations) = (0u64, 0u64, 0u64);
    let mut worst: Option<f64> = None;
    let mut counterexample: Option<CounterexampleRecord> = None;

    for trial in 0..config.trials_per_cell {
        let dim = config.dims[(trial % config.dims.len() as u64) as usize];
        let (p, q, provenance) = match reference_for(property, trial) {
            Some(reference) => {
                let (p, q) = reference.pair();
                let provenance = Provenance::Reference {
                    name: reference.name.to_string(),
                    trial,
                };
                (p, q, provenance)
            }
            None => {
                let mut rng = trial_stream(config.seed, cell, trial);
                let p = sample_simplex(dim, &mut rng);
                let q = sample_simplex(dim, &mut rng);
                let provenance = Provenance::Random {
                    seed: config.seed,
                    cell,
                    trial,
                    dim,
                };
                (p, q, provenance)
            }
        };
        let record = match check(property, &p, &q, &params) {
            Ok(r) => r,
            Err(EntropyError::ZeroWeightWithNegativeAlpha { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        trials += 1;
        let margin = record.margin;
        if !record.holds {
            violations += 1;
            if worst.is_none_or(|w| margin < w) {
                counterexample = Some(CounterexampleRecord::from_check(record, provenance));
            }
        }
        if worst.is_none_or(|w| margin < w) {
            worst = Some(margin);
        }
    }

    let verdict = match (violations > 0, guaranteed) {
        (true, true) => {
            return Err(SearchError::GuaranteeContradiction {
                alpha,
                beta,
                property,
                margin: worst.unwrap_or(f64::NAN),
            })
        }
        (true, false) => Verdict::ViolationFound,
        (false, true) => Verdict::TheoremGuaranteed,
        (false, false) => Verdict::NoViolationFound,
    };
    Ok(CellResult {
        alpha,
        beta,
        params,
        property,
        verdict,
        guaranteed,
        trials,
        skipped,
        violations,
        worst_margin: worst,
        seed: config.seed,
        counterexample,
    })
}

/// Evaluates every `(α, β, property)` cell with `trials_per_cell` pairs.
/// Cells run in parallel; the report lists them in grid order.
pub fn sweep(config: &SweepConfig) -> Result<RegionSweepReport, SearchError> {
    config.validate()?;
    let nb = config.beta_grid.len();
    let units: Vec<(u64, f64, f64, PropertyKind)> = config
        .alpha_grid
        .iter()
        .enumerate()
        .flat_map(|(ai, &alpha)| {
            config
                .beta_grid
                .iter()
                .enumerate()
                .flat_map(move |(bi, &beta)| {
                    config
                        .properties
                        .iter()
                        .map(move |&kind| ((ai * nb + bi) as u64, alpha, beta, kind))
                })
        })
        .collect();
    let cells = units
        .into_par_iter()
        .map(|(cell, alpha, beta, kind)| run_cell(config, cell, alpha, beta, kind))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RegionSweepReport {
        algorithm: STREAM_ALGORITHM.to_string(),
        seed: config.seed,
        trials_per_cell: config.trials_per_cell,
        dims: config.dims.clone(),
        tolerance: CHECK_TOLERANCE,
        alpha_grid: config.alpha_grid.clone(),
        beta_grid: config.beta_grid.clone(),
        properties: config.properties.clone(),
        cells,
    })
}
