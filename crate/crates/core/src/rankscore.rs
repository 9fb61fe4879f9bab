//! Score aggregation: mean score, tie-averaged mean rank, and the
//! significance-aware mean rank score.
//!
//! The mean rank score walks each dataset's models in descending order of
//! mean score. The leader gets rank 1; every following model is compared
//! against the last *significantly different* model (one-tailed Welch's
//! t-test), and on a significant difference the rank grows by the mean gap
//! measured in units of that dataset's spread of model means. Ranks are
//! averaged over datasets; lower is better and the floor is exactly 1.
//!
//! Statistical primitives are self-contained: the t-distribution CDF is
//! evaluated through the regularized incomplete beta function.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RankError {
    #[error("tensor has no models")]
    NoModels,
    #[error("tensor has no datasets")]
    NoDatasets,
    #[error("significance level must lie in (0, 0.5), got {0}")]
    InvalidAlpha(f64),
    #[error("{side} sample needs at least 2 observations, got {len}")]
    TooFewObservations { side: &'static str, len: usize },
    #[error("non-finite value in {side} sample")]
    NonFiniteSample { side: &'static str },
    #[error("need at least 2 iterations per cell, got {0}")]
    TooFewIterations(usize),
    #[error("cell for model {model:?} on dataset {dataset:?} is already set")]
    DuplicateCell { model: String, dataset: String },
    #[error("non-finite score for model {model:?} on dataset {dataset:?}")]
    NonFiniteScore { model: String, dataset: String },
    #[error("cell for model {model:?} on dataset {dataset:?} has {got} scores, more than the {expected} iterations")]
    OversizedCell { model: String, dataset: String, got: usize, expected: usize },
    #[error("model {model:?} declared both generative and not")]
    InconsistentGenerativeFlag { model: String },
    #[error("unknown dataset {0:?}")]
    UnknownDataset(String),
    #[error("score row line {line}: {message}")]
    MalformedRow { line: usize, message: String },
}

/// Direction in which a dataset's raw scores improve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarity {
    HigherIsBetter,
    LowerIsBetter,
}

/// One model/dataset cell of raw per-iteration scores.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Exactly the expected number of iterations.
    Complete(Vec<f64>),
    /// Fewer scores than expected (e.g. an aborted run); excluded from
    /// aggregation.
    Incomplete(Vec<f64>),
    Missing,
}

impl Cell {
    fn complete_scores(&self) -> Option<&[f64]> {
        match self {
            Cell::Complete(scores) => Some(scores),
            _ => None,
        }
    }
}

/// Raw benchmark scores: models × datasets × iterations.
#[derive(Debug, Clone)]
pub struct ScoreTensor {
    model_ids: Vec<String>,
    dataset_ids: Vec<String>,
    generative: Vec<bool>,
    polarity: Vec<Polarity>,
    cells: Vec<Vec<Cell>>,
    expected_iterations: usize,
}

/// Iterations per complete cell in a standard run.
pub const ITERATIONS: usize = 10;

impl Default for ScoreTensor {
    fn default() -> ScoreTensor {
        ScoreTensor::new(ITERATIONS)
    }
}

impl ScoreTensor {
    #[must_use]
    pub fn new(expected_iterations: usize) -> ScoreTensor {
        ScoreTensor {
            model_ids: Vec::new(),
            dataset_ids: Vec::new(),
            generative: Vec::new(),
            polarity: Vec::new(),
            cells: Vec::new(),
            expected_iterations,
        }
    }

    pub fn model_ids(&self) -> &[String] {
        &self.model_ids
    }

    pub fn dataset_ids(&self) -> &[String] {
        &self.dataset_ids
    }

    pub fn expected_iterations(&self) -> usize {
        self.expected_iterations
    }

    pub fn is_generative(&self, model: &str) -> Option<bool> {
        self.model_index(model).map(|m| self.generative[m])
    }

    fn model_index(&self, model: &str) -> Option<usize> {
        self.model_ids.iter().position(|id| id == model)
    }

    fn dataset_index(&self, dataset: &str) -> Option<usize> {
        self.dataset_ids.iter().position(|id| id == dataset)
    }

    fn ensure_model(&mut self, model: &str, generative: bool) -> Result<usize, RankError> {
        if let Some(m) = self.model_index(model) {
            if self.generative[m] != generative {
                return Err(RankError::InconsistentGenerativeFlag { model: model.to_string() });
            }
            return Ok(m);
        }
        self.model_ids.push(model.to_string());
        self.generative.push(generative);
        self.cells.push(vec![Cell::Missing; self.dataset_ids.len()]);
        Ok(self.model_ids.len() - 1)
    }

    fn ensure_dataset(&mut self, dataset: &str) -> usize {
        if let Some(d) = self.dataset_index(dataset) {
            return d;
        }
        self.dataset_ids.push(dataset.to_string());
        self.polarity.push(Polarity::HigherIsBetter);
        for row in &mut self.cells {
            row.push(Cell::Missing);
        }
        self.dataset_ids.len() - 1
    }

    /// Records one cell. Short vectors are kept but marked incomplete;
    /// oversized vectors, duplicates, and non-finite scores are rejected.
    pub fn insert(
        &mut self,
        model: &str,
        dataset: &str,
        scores: Vec<f64>,
        generative: bool,
    ) -> Result<(), RankError> {
        if scores.iter().any(|s| !s.is_finite()) {
            return Err(RankError::NonFiniteScore {
                model: model.to_string(),
                dataset: dataset.to_string(),
            });
        }
        if scores.len() > self.expected_iterations {
            return Err(RankError::OversizedCell {
                model: model.to_string(),
                dataset: dataset.to_string(),
                got: scores.len(),
                expected: self.expected_iterations,
            });
        }
        let m = self.ensure_model(model, generative)?;
        let d = self.ensure_dataset(dataset);
        if !matches!(self.cells[m][d], Cell::Missing) {
            return Err(RankError::DuplicateCell {
                model: model.to_string(),
                dataset: dataset.to_string(),
            });
        }
        self.cells[m][d] = if scores.len() == self.expected_iterations {
            Cell::Complete(scores)
        } else {
            Cell::Incomplete(scores)
        };
        Ok(())
    }

    pub fn set_polarity(&mut self, dataset: &str, polarity: Polarity) -> Result<(), RankError> {
        let d = self
            .dataset_index(dataset)
            .ok_or_else(|| RankError::UnknownDataset(dataset.to_string()))?;
        self.polarity[d] = polarity;
        Ok(())
    }

    pub fn cell(&self, model: &str, dataset: &str) -> Option<&Cell> {
        let m = self.model_index(model)?;
        let d = self.dataset_index(dataset)?;
        Some(&self.cells[m][d])
    }

    /// Copy restricted to the datasets `keep` accepts; models are retained
    /// even if they end up with no cells.
    #[must_use]
    pub fn filter_datasets<F: Fn(&str) -> bool>(&self, keep: F) -> ScoreTensor {
        let kept: Vec<usize> = (0..self.dataset_ids.len())
            .filter(|&d| keep(&self.dataset_ids[d]))
            .collect();
        ScoreTensor {
            model_ids: self.model_ids.clone(),
            dataset_ids: kept.iter().map(|&d| self.dataset_ids[d].clone()).collect(),
            generative: self.generative.clone(),
            polarity: kept.iter().map(|&d| self.polarity[d]).collect(),
            cells: self
                .cells
                .iter()
                .map(|row| kept.iter().map(|&d| row[d].clone()).collect())
                .collect(),
            expected_iterations: self.expected_iterations,
        }
    }

    /// Flattens to interchange rows, one per non-missing cell.
    #[must_use]
    pub fn to_rows(&self) -> Vec<ScoreRow> {
        let mut rows = Vec::new();
        for (m, model) in self.model_ids.iter().enumerate() {
            for (d, dataset) in self.dataset_ids.iter().enumerate() {
                let scores = match &self.cells[m][d] {
                    Cell::Complete(s) | Cell::Incomplete(s) => s.clone(),
                    Cell::Missing => continue,
                };
                rows.push(ScoreRow {
                    model: model.clone(),
                    dataset: dataset.clone(),
                    scores,
                    generative: self.generative[m],
                });
            }
        }
        rows
    }

    pub fn from_rows(rows: &[ScoreRow], expected_iterations: usize) -> Result<ScoreTensor, RankError> {
        let mut tensor = ScoreTensor::new(expected_iterations);
        for row in rows {
            tensor.insert(&row.model, &row.dataset, row.scores.clone(), row.generative)?;
        }
        Ok(tensor)
    }
}

/// Line-delimited interchange record; also the entry point for scores
/// produced outside this harness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreRow {
    pub model: String,
    pub dataset: String,
    pub scores: Vec<f64>,
    pub generative: bool,
}

/// Parses line-delimited JSON rows; blank lines are skipped.
pub fn parse_score_rows(text: &str) -> Result<Vec<ScoreRow>, RankError> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: ScoreRow = serde_json::from_str(line)
            .map_err(|e| RankError::MalformedRow { line: idx + 1, message: e.to_string() })?;
        rows.push(row);
    }
    Ok(rows)
}

/// Renders rows as line-delimited JSON, one row per line, trailing newline.
#[must_use]
pub fn score_rows_to_jsonl(rows: &[ScoreRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(row).expect("score row serializes"));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Statistical primitives.

/// Natural log of the gamma function (Lanczos approximation, g = 7).
fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_59,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // Reflection: Γ(x)Γ(1−x) = π / sin(πx).
        return std::f64::consts::PI.ln()
            - (std::f64::consts::PI * x).sin().ln()
            - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Continued fraction for the incomplete beta function (modified Lentz).
fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    const MAX_ITER: usize = 300;
    const EPS: f64 = 1e-15;
    const FPMIN: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < FPMIN {
        d = FPMIN;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// Regularized incomplete beta function I_x(a, b) for a, b > 0, x ∈ [0, 1].
fn reg_inc_beta(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    // The continued fraction converges fast only below the symmetry point.
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_cf(a, b, x) / a
    } else {
        1.0 - front * beta_cf(b, a, 1.0 - x) / b
    }
}

/// CDF of Student's t distribution with `df` degrees of freedom.
fn student_t_cdf(t: f64, df: f64) -> f64 {
    let x = df / (df + t * t);
    let tail = 0.5 * reg_inc_beta(0.5 * df, 0.5, x);
    if t > 0.0 {
        1.0 - tail
    } else {
        tail
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn sample_variance(xs: &[f64]) -> f64 {
    let mu = mean(xs);
    xs.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>() / (xs.len() - 1) as f64
}

fn check_sample(side: &'static str, xs: &[f64]) -> Result<(), RankError> {
    if xs.len() < 2 {
        return Err(RankError::TooFewObservations { side, len: xs.len() });
    }
    if xs.iter().any(|x| !x.is_finite()) {
        return Err(RankError::NonFiniteSample { side });
    }
    Ok(())
}

/// One-tailed Welch's t-test of H1: mean(b) < mean(a).
///
/// Returns p = 1 − CDF_t(t, ν) with t = (ā − b̄)/√(s²_a/n_a + s²_b/n_b) and
/// Welch–Satterthwaite ν. When both sample variances are zero the limit
/// convention applies: equal means → 0.5, ā > b̄ → 0, ā < b̄ → 1.
pub fn welch_t_one_tailed(a: &[f64], b: &[f64]) -> Result<f64, RankError> {
    check_sample("first", a)?;
    check_sample("second", b)?;
    let (mean_a, mean_b) = (mean(a), mean(b));
    let (var_a, var_b) = (sample_variance(a), sample_variance(b));
    if var_a == 0.0 && var_b == 0.0 {
        return Ok(if mean_a == mean_b {
            0.5
        } else if mean_a > mean_b {
            0.0
        } else {
            1.0
        });
    }
    let qa = var_a / a.len() as f64;
    let qb = var_b / b.len() as f64;
    let t = (mean_a - mean_b) / (qa + qb).sqrt();
    let df = (qa + qb) * (qa + qb)
        / (qa * qa / (a.len() - 1) as f64 + qb * qb / (b.len() - 1) as f64);
    Ok(1.0 - student_t_cdf(t, df))
}

// ---------------------------------------------------------------------------
// Aggregations.

/// Rank matrix: `values[m][d]` is model m's rank score on dataset d, `None`
/// where the cell was missing or incomplete. Aggregates average the present
/// columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankScoreMatrix {
    pub model_ids: Vec<String>,
    pub dataset_ids: Vec<String>,
    pub values: Vec<Vec<Option<f64>>>,
    pub aggregate: Vec<Option<f64>>,
}

impl RankScoreMatrix {
    pub fn value(&self, model: &str, dataset: &str) -> Option<f64> {
        let m = self.model_ids.iter().position(|id| id == model)?;
        let d = self.dataset_ids.iter().position(|id| id == dataset)?;
        self.values[m][d]
    }

    pub fn aggregate_of(&self, model: &str) -> Option<f64> {
        let m = self.model_ids.iter().position(|id| id == model)?;
        self.aggregate[m]
    }
}

/// One comparison step while walking a dataset's sorted models.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub model: String,
    /// Polarity-adjusted mean of the model's scores.
    pub mean: f64,
    /// Test p-value against the running anchor; absent for the leader.
    pub p_value: Option<f64>,
    pub significant: bool,
    /// Absolute mean gap to the anchor when significant, otherwise 0.
    pub delta: f64,
    /// delta / sigma when significant, otherwise 0.
    pub increment: f64,
    /// Running rank after this step.
    pub rho: f64,
}

/// Audit record of one dataset column's walk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetTrace {
    pub dataset: String,
    /// Population standard deviation of the participating models' means.
    pub sigma: f64,
    pub steps: Vec<TraceStep>,
}

/// Full audit trace; replaying it reproduces the rank matrix exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankTrace {
    pub alpha: f64,
    pub datasets: Vec<DatasetTrace>,
}

struct Column<'t> {
    /// (model index, polarity-adjusted scores, mean), sorted best-first.
    participants: Vec<(usize, Vec<f64>, f64)>,
    tensor: &'t ScoreTensor,
}

fn column_participants(tensor: &ScoreTensor, d: usize) -> Column<'_> {
    let mut participants: Vec<(usize, Vec<f64>, f64)> = Vec::new();
    for m in 0..tensor.model_ids.len() {
        let Some(raw) = tensor.cells[m][d].complete_scores() else {
            if !matches!(tensor.cells[m][d], Cell::Missing) {
                log::warn!(
                    "excluding incomplete cell: model {:?} dataset {:?}",
                    tensor.model_ids[m],
                    tensor.dataset_ids[d]
                );
            }
            continue;
        };
        let scores: Vec<f64> = match tensor.polarity[d] {
            Polarity::HigherIsBetter => raw.to_vec(),
            Polarity::LowerIsBetter => raw.iter().map(|s| -s).collect(),
        };
        let mu = mean(&scores);
        participants.push((m, scores, mu));
    }
    // Best mean first; equal means fall back to id order for determinism.
    participants.sort_by(|a, b| {
        b.2.partial_cmp(&a.2)
            .expect("means are finite")
            .then_with(|| tensor.model_ids[a.0].cmp(&tensor.model_ids[b.0]))
    });
    Column { participants, tensor }
}

fn rank_column(column: &Column<'_>, d: usize, alpha: f64) -> Result<(Vec<(usize, f64)>, DatasetTrace), RankError> {
    let means: Vec<f64> = column.participants.iter().map(|p| p.2).collect();
    let sigma = if means.is_empty() {
        0.0
    } else {
        let grand = mean(&means);
        (means.iter().map(|m| (m - grand) * (m - grand)).sum::<f64>() / means.len() as f64).sqrt()
    };
    let mut assignments = Vec::with_capacity(column.participants.len());
    let mut steps = Vec::with_capacity(column.participants.len());
    let mut rho = 1.0;
    let mut anchor: Option<(&[f64], f64)> = None;
    for (m, scores, mu) in &column.participants {
        let step = match anchor {
            None => {
                anchor = Some((scores, *mu));
                TraceStep {
                    model: column.tensor.model_ids[*m].clone(),
                    mean: *mu,
                    p_value: None,
                    significant: false,
                    delta: 0.0,
                    increment: 0.0,
                    rho,
                }
            }
            Some((anchor_scores, anchor_mean)) => {
                let p = welch_t_one_tailed(anchor_scores, scores)?;
                let significant = p < alpha;
                let (delta, increment) = if significant {
                    let delta = (mu - anchor_mean).abs();
                    // sigma > 0 here: a significant test needs unequal
                    // means, and sigma = 0 forces all means equal.
                    (delta, delta / sigma)
                } else {
                    (0.0, 0.0)
                };
                if significant {
                    rho += increment;
                    anchor = Some((scores, *mu));
                }
                TraceStep {
                    model: column.tensor.model_ids[*m].clone(),
                    mean: *mu,
                    p_value: Some(p),
                    significant,
                    delta,
                    increment,
                    rho,
                }
            }
        };
        assignments.push((*m, rho));
        steps.push(step);
    }
    Ok((
        assignments,
        DatasetTrace { dataset: column.tensor.dataset_ids[d].clone(), sigma, steps },
    ))
}

fn check_tensor(tensor: &ScoreTensor, alpha: f64) -> Result<(), RankError> {
    if tensor.model_ids.is_empty() {
        return Err(RankError::NoModels);
    }
    if tensor.dataset_ids.is_empty() {
        return Err(RankError::NoDatasets);
    }
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(RankError::InvalidAlpha(alpha));
    }
    if tensor.expected_iterations < 2 {
        return Err(RankError::TooFewIterations(tensor.expected_iterations));
    }
    Ok(())
}

fn assemble(
    tensor: &ScoreTensor,
    alpha: f64,
    columns: Vec<(Vec<(usize, f64)>, DatasetTrace)>,
) -> (RankScoreMatrix, RankTrace) {
    let n_models = tensor.model_ids.len();
    let n_datasets = tensor.dataset_ids.len();
    let mut values = vec![vec![None; n_datasets]; n_models];
    let mut traces = Vec::with_capacity(n_datasets);
    for (d, (assignments, trace)) in columns.into_iter().enumerate() {
        for (m, rho) in assignments {
            values[m][d] = Some(rho);
        }
        traces.push(trace);
    }
    let aggregate = values
        .iter()
        .map(|row| {
            let present: Vec<f64> = row.iter().flatten().copied().collect();
            if present.is_empty() {
                None
            } else {
                Some(mean(&present))
            }
        })
        .collect();
    (
        RankScoreMatrix {
            model_ids: tensor.model_ids.clone(),
            dataset_ids: tensor.dataset_ids.clone(),
            values,
            aggregate,
        },
        RankTrace { alpha, datasets: traces },
    )
}

/// Mean rank scores over all datasets, plus the audit trace.
/// Dataset columns are processed in parallel when the `parallel` feature is
/// on; results are identical to [`mean_rank_scores_serial`].
pub fn mean_rank_scores(
    tensor: &ScoreTensor,
    alpha: f64,
) -> Result<(RankScoreMatrix, RankTrace), RankError> {
    #[cfg(feature = "parallel")]
    {
        check_tensor(tensor, alpha)?;
        use rayon::prelude::*;
        let columns = (0..tensor.dataset_ids.len())
            .into_par_iter()
            .map(|d| rank_column(&column_participants(tensor, d), d, alpha))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(assemble(tensor, alpha, columns))
    }
    #[cfg(not(feature = "parallel"))]
    {
        mean_rank_scores_serial(tensor, alpha)
    }
}

/// Single-threaded twin of [`mean_rank_scores`].
pub fn mean_rank_scores_serial(
    tensor: &ScoreTensor,
    alpha: f64,
) -> Result<(RankScoreMatrix, RankTrace), RankError> {
    check_tensor(tensor, alpha)?;
    let mut columns = Vec::with_capacity(tensor.dataset_ids.len());
    for d in 0..tensor.dataset_ids.len() {
        columns.push(rank_column(&column_participants(tensor, d), d, alpha)?);
    }
    Ok(assemble(tensor, alpha, columns))
}

/// Recomputes the rank matrix from a trace's recorded increments alone;
/// must agree bit for bit with the matrix the trace came from.
#[must_use]
pub fn replay_trace(trace: &RankTrace) -> Vec<(String, String, f64)> {
    let mut out = Vec::new();
    for dataset in &trace.datasets {
        let mut rho = 1.0;
        for step in &dataset.steps {
            if step.significant {
                rho += step.increment;
            }
            out.push((step.model.clone(), dataset.dataset.clone(), rho));
        }
    }
    out
}

/// Mean of each model's per-dataset mean raw scores (complete cells only).
#[must_use]
pub fn mean_score(tensor: &ScoreTensor) -> Vec<Option<f64>> {
    tensor
        .model_ids
        .iter()
        .enumerate()
        .map(|(m, _)| {
            let cell_means: Vec<f64> = (0..tensor.dataset_ids.len())
                .filter_map(|d| tensor.cells[m][d].complete_scores().map(mean))
                .collect();
            if cell_means.is_empty() {
                None
            } else {
                Some(mean(&cell_means))
            }
        })
        .collect()
}

/// Classic mean rank: per dataset, rank models by mean score (best = 1,
/// ties share the average rank), then average over datasets.
#[must_use]
pub fn mean_rank(tensor: &ScoreTensor) -> Vec<Option<f64>> {
    let n_models = tensor.model_ids.len();
    let mut sums = vec![0.0f64; n_models];
    let mut counts = vec![0usize; n_models];
    for d in 0..tensor.dataset_ids.len() {
        let column = column_participants(tensor, d);
        let mut i = 0;
        while i < column.participants.len() {
            let mut j = i;
            while j + 1 < column.participants.len()
                && column.participants[j + 1].2 == column.participants[i].2
            {
                j += 1;
            }
            // Positions i..=j share one mean; 1-based ranks average.
            let shared = (i + 1 + j + 1) as f64 / 2.0;
            for p in &column.participants[i..=j] {
                sums[p.0] += shared;
                counts[p.0] += 1;
            }
            i = j + 1;
        }
    }
    (0..n_models)
        .map(|m| if counts[m] == 0 { None } else { Some(sums[m] / counts[m] as f64) })
        .collect()
}
