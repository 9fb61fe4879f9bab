//! Front-end plumbing: run configuration, the results directory layout,
//! aggregation outputs, per-language leaderboards, and the correlation
//! between a model being generative and its task performance.
//!
//! Results directory layout (every file deterministic — no timestamps, so
//! re-running a command without new inputs is byte-identical):
//!
//! ```text
//! <results>/<model dir>/profile.json      model identity and capabilities
//! <results>/<model dir>/<dataset>.jsonl   one run record per line
//! <results>/<model dir>/<dataset>.incomplete   abort reason, when any
//! <results>/imported.jsonl                externally produced score rows
//! <results>/rankscores.json               rank-score matrix
//! <results>/traces/<dataset>.json         per-dataset decision trace
//! <results>/leaderboard/<language>.json + .txt
//! <results>/matrix.csv                    model × dataset mean scores
//! <results>/analysis.json                 correlation report
//! ```
//!
//! Model directories replace `/` in the model id with `__`. Backend
//! credentials come from environment variables named in the config; only
//! the variable *name* ever appears in a file, never its value.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{
    builtin_lexicon, load_dataset, load_manifest, spec_for, CorpusError, Dataset, Language, Task,
};
use crate::evalengine::{
    run_benchmark, BackendProfile, BenchmarkRun, EvalError, GenParams, HttpBackend, MockBackend,
    MockBehavior, ModelBackend, RunRecord, ITERATIONS,
};
use crate::promptkit::{builtin_templates, PromptError, TemplatePack};
use crate::rankscore::{
    mean_rank_scores, parse_score_rows, score_rows_to_jsonl, Cell, RankError, RankScoreMatrix,
    RankTrace, ScoreRow, ScoreTensor,
};

pub const DEFAULT_ALPHA: f64 = 0.05;

#[derive(Debug, Error)]
pub enum HarnessError {
    // The io error is folded into the message rather than chained as a
    // source, so `{err:#}` printing does not repeat it.
    #[error("{path}: {error}")]
    Io { path: PathBuf, error: std::io::Error },
    #[error("config: {0}")]
    Config(String),
    #[error("unknown dataset {0:?}")]
    UnknownDataset(String),
    #[error("no results for {0}")]
    MissingResults(String),
    #[error("{path}: {message}")]
    BadRecord { path: PathBuf, message: String },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Prompt(#[from] PromptError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Rank(#[from] RankError),
}

fn io_err(path: &Path, error: std::io::Error) -> HarnessError {
    HarnessError::Io { path: path.to_path_buf(), error }
}

// ---------------------------------------------------------------------------
// Configuration.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendKind {
    Mock,
    Http,
}

/// Scripted mock behavior as written in config files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MockBehaviorConfig {
    GoldEcho,
    FixedLabel { text: String },
    NoisyGold { epsilon: f64, noise_seed: u64 },
    ScriptedJson { text: String },
}

impl MockBehaviorConfig {
    fn to_behavior(&self) -> MockBehavior {
        match self {
            MockBehaviorConfig::GoldEcho => MockBehavior::GoldEcho,
            MockBehaviorConfig::FixedLabel { text } => MockBehavior::FixedLabel(text.clone()),
            MockBehaviorConfig::NoisyGold { epsilon, noise_seed } => {
                MockBehavior::NoisyGold { epsilon: *epsilon, noise_seed: *noise_seed }
            }
            MockBehaviorConfig::ScriptedJson { text } => MockBehavior::ScriptedJson(text.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub id: String,
    pub backend: BackendKind,
    pub generative: bool,
    pub logit_access: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoint: Option<String>,
    /// Name of the environment variable holding the API key.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub api_key_env: Option<String>,
    /// Mock backends only; omitted means gold-echo.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub behavior: Option<MockBehaviorConfig>,
}

fn default_alpha() -> f64 {
    DEFAULT_ALPHA
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub master_seed: u64,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    /// Thread budget for parallel sections; absent means the default pool.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
    /// Directory holding one dataset bundle per id (`<data_dir>/<id>/`).
    pub data_dir: PathBuf,
    pub results_dir: PathBuf,
    pub models: Vec<ModelConfig>,
    pub datasets: Vec<String>,
    /// Path to a custom template pack; absent means the built-in pack.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub template_pack: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_json_str(raw: &str) -> Result<RunConfig, HarnessError> {
        let config: RunConfig =
            serde_json::from_str(raw).map_err(|e| HarnessError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<RunConfig, HarnessError> {
        let raw = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        RunConfig::from_json_str(&raw)
    }

    fn validate(&self) -> Result<(), HarnessError> {
        if !(self.alpha > 0.0 && self.alpha < 0.5) {
            return Err(HarnessError::Config(format!(
                "alpha must lie in (0, 0.5), got {}",
                self.alpha
            )));
        }
        if self.workers == Some(0) {
            return Err(HarnessError::Config("workers must be at least 1".to_string()));
        }
        if self.models.is_empty() {
            return Err(HarnessError::Config("no models configured".to_string()));
        }
        if self.datasets.is_empty() {
            return Err(HarnessError::Config("no datasets configured".to_string()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for model in &self.models {
            if model.id.is_empty() {
                return Err(HarnessError::Config("empty model id".to_string()));
            }
            if !seen.insert(&model.id) {
                return Err(HarnessError::Config(format!("duplicate model id {:?}", model.id)));
            }
            match model.backend {
                BackendKind::Http => {
                    if model.endpoint.is_none() {
                        return Err(HarnessError::Config(format!(
                            "model {:?} uses the http backend but has no endpoint",
                            model.id
                        )));
                    }
                    if model.behavior.is_some() {
                        return Err(HarnessError::Config(format!(
                            "model {:?}: behavior only applies to mock backends",
                            model.id
                        )));
                    }
                }
                BackendKind::Mock => {
                    if model.endpoint.is_some() || model.api_key_env.is_some() {
                        return Err(HarnessError::Config(format!(
                            "model {:?}: endpoint/api_key_env only apply to http backends",
                            model.id
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Resolves the template pack a config asks for.
pub fn load_templates(config: &RunConfig) -> Result<TemplatePack, HarnessError> {
    match &config.template_pack {
        None => Ok(builtin_templates().clone()),
        Some(path) => {
            let raw = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
            Ok(TemplatePack::from_json_str(&raw)?)
        }
    }
}

/// Sizes the global worker pool. Effective once per process; later calls
/// keep the first size (the pool cannot be rebuilt).
#[cfg(feature = "parallel")]
pub fn configure_workers(workers: Option<usize>) {
    if let Some(n) = workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

#[cfg(not(feature = "parallel"))]
pub fn configure_workers(_workers: Option<usize>) {}

// ---------------------------------------------------------------------------
// Benchmark orchestration and persistence.

/// Model identity persisted next to its results. Capabilities only — the
/// config's `api_key_env` (let alone the key) is deliberately absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub id: String,
    pub backend: BackendKind,
    pub generative: bool,
    pub logit_access: bool,
}

/// One (model, dataset) cell's outcome, for progress reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub model: String,
    pub dataset: String,
    pub iterations: usize,
    pub aborted: Option<String>,
}

/// Directory-safe form of a model id.
#[must_use]
pub fn sanitize_model_id(id: &str) -> String {
    id.replace('/', "__")
}

fn write_string(path: &Path, content: &str) -> Result<(), HarnessError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| io_err(parent, e))?;
    }
    fs::write(path, content).map_err(|e| io_err(path, e))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), HarnessError> {
    let body = serde_json::to_string_pretty(value)
        .map_err(|e| HarnessError::BadRecord { path: path.to_path_buf(), message: e.to_string() })?;
    write_string(path, &format!("{body}\n"))
}

/// Persists one run under `<results>/<model dir>/<dataset>.jsonl`.
pub fn write_run(results_dir: &Path, run: &BenchmarkRun) -> Result<PathBuf, HarnessError> {
    let dir = results_dir.join(sanitize_model_id(&run.model));
    fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
    let path = dir.join(format!("{}.jsonl", run.dataset));
    let mut body = String::new();
    for record in &run.records {
        let line = serde_json::to_string(record).map_err(|e| HarnessError::BadRecord {
            path: path.clone(),
            message: e.to_string(),
        })?;
        body.push_str(&line);
        body.push('\n');
    }
    write_string(&path, &body)?;
    let marker = dir.join(format!("{}.incomplete", run.dataset));
    if let Some(reason) = &run.aborted {
        write_string(&marker, &format!("{reason}\n"))?;
    }
    Ok(path)
}

fn build_backend(
    model: &ModelConfig,
    dataset: &Dataset,
    templates: &TemplatePack,
) -> Result<Box<dyn ModelBackend>, HarnessError> {
    let params = GenParams::for_task(dataset.spec.task);
    let profile = BackendProfile::new(&model.id, model.generative, model.logit_access, params)?;
    match model.backend {
        BackendKind::Mock => {
            let behavior = model
                .behavior
                .as_ref()
                .map_or(MockBehavior::GoldEcho, MockBehaviorConfig::to_behavior);
            let template = templates.get(&dataset.spec.id)?;
            Ok(Box::new(MockBackend::new(
                dataset,
                template,
                builtin_lexicon(),
                behavior,
                profile,
            )?))
        }
        BackendKind::Http => {
            let endpoint = model.endpoint.as_deref().expect("validated at config load");
            Ok(Box::new(HttpBackend::new(profile, endpoint, model.api_key_env.as_deref())?))
        }
    }
}

/// Loads every dataset bundle the config references.
pub fn load_run_datasets(config: &RunConfig) -> Result<Vec<Dataset>, HarnessError> {
    let mut datasets = Vec::with_capacity(config.datasets.len());
    for id in &config.datasets {
        let dir = config.data_dir.join(id);
        let spec = load_manifest(&dir)?;
        if spec.id != *id {
            return Err(HarnessError::Config(format!(
                "bundle at {} declares id {:?}, expected {:?}",
                dir.display(),
                spec.id,
                id
            )));
        }
        datasets.push(load_dataset(&dir, &spec)?);
    }
    Ok(datasets)
}

/// Runs every configured (model, dataset) pair and persists the results.
pub fn run_benchmark_command(config: &RunConfig) -> Result<Vec<CellSummary>, HarnessError> {
    configure_workers(config.workers);
    let templates = load_templates(config)?;
    let datasets = load_run_datasets(config)?;
    let mut cells = Vec::new();
    for model in &config.models {
        let dir = config.results_dir.join(sanitize_model_id(&model.id));
        fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
        let profile = ProfileRecord {
            id: model.id.clone(),
            backend: model.backend,
            generative: model.generative,
            logit_access: model.logit_access,
        };
        write_json(&dir.join("profile.json"), &profile)?;
        for dataset in &datasets {
            let backend = build_backend(model, dataset, &templates)?;
            let template = templates.get(&dataset.spec.id)?;
            let run = run_benchmark(
                backend.as_ref(),
                dataset,
                template,
                builtin_lexicon(),
                config.master_seed,
            )?;
            write_run(&config.results_dir, &run)?;
            cells.push(CellSummary {
                model: run.model,
                dataset: run.dataset,
                iterations: run.records.len(),
                aborted: run.aborted,
            });
        }
    }
    Ok(cells)
}

// ---------------------------------------------------------------------------
// Results loading.

#[derive(Debug)]
pub struct LoadedResults {
    pub tensor: ScoreTensor,
    /// Incomplete or aborted cells, excluded from aggregation.
    pub warnings: Vec<String>,
}

fn read_records(path: &Path) -> Result<Vec<RunRecord>, HarnessError> {
    let raw = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let mut records = Vec::new();
    for (idx, line) in raw.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: RunRecord =
            serde_json::from_str(line).map_err(|e| HarnessError::BadRecord {
                path: path.to_path_buf(),
                message: format!("line {}: {e}", idx + 1),
            })?;
        records.push(record);
    }
    records.sort_by_key(|r| r.iteration);
    Ok(records)
}

/// Assembles the score tensor from a results directory: every model
/// directory's per-dataset records plus `imported.jsonl` rows. Cells with
/// fewer than [`ITERATIONS`] scores are kept but flagged for exclusion.
pub fn load_results(results_dir: &Path) -> Result<LoadedResults, HarnessError> {
    let mut tensor = ScoreTensor::default();
    let mut warnings = Vec::new();
    let mut model_dirs = Vec::new();
    let entries = fs::read_dir(results_dir).map_err(|e| io_err(results_dir, e))?;
    for entry in entries {
        let entry = entry.map_err(|e| io_err(results_dir, e))?;
        let path = entry.path();
        let name = entry.file_name().to_string_lossy().into_owned();
        if path.is_dir() && name != "traces" && name != "leaderboard" {
            model_dirs.push(path);
        }
    }
    model_dirs.sort();
    for dir in model_dirs {
        let profile_path = dir.join("profile.json");
        let raw = fs::read_to_string(&profile_path).map_err(|e| io_err(&profile_path, e))?;
        let profile: ProfileRecord =
            serde_json::from_str(&raw).map_err(|e| HarnessError::BadRecord {
                path: profile_path.clone(),
                message: e.to_string(),
            })?;
        let mut cell_files = Vec::new();
        let entries = fs::read_dir(&dir).map_err(|e| io_err(&dir, e))?;
        for entry in entries {
            let entry = entry.map_err(|e| io_err(&dir, e))?;
            let path = entry.path();
            if path.extension().is_some_and(|ext| ext == "jsonl") {
                cell_files.push(path);
            }
        }
        cell_files.sort();
        for path in cell_files {
            let dataset = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let records = read_records(&path)?;
            for record in &records {
                if record.model != profile.id || record.dataset != dataset {
                    return Err(HarnessError::BadRecord {
                        path: path.clone(),
                        message: format!(
                            "record for {:?}/{:?} filed under {:?}/{:?}",
                            record.model, record.dataset, profile.id, dataset
                        ),
                    });
                }
            }
            let scores: Vec<f64> = records.iter().map(|r| r.raw_score).collect();
            if scores.len() != ITERATIONS {
                let marker = dir.join(format!("{dataset}.incomplete"));
                let reason = fs::read_to_string(&marker)
                    .map(|r| format!(" (aborted: {})", r.trim()))
                    .unwrap_or_default();
                warnings.push(format!(
                    "excluding {}/{dataset}: {} of {ITERATIONS} iterations{reason}",
                    profile.id,
                    scores.len()
                ));
            }
            tensor.insert(&profile.id, &dataset, scores, profile.generative)?;
        }
    }
    let imported = results_dir.join("imported.jsonl");
    if imported.exists() {
        let raw = fs::read_to_string(&imported).map_err(|e| io_err(&imported, e))?;
        for row in parse_score_rows(&raw)? {
            if row.scores.len() != ITERATIONS {
                warnings.push(format!(
                    "excluding imported {}/{}: {} of {ITERATIONS} iterations",
                    row.model,
                    row.dataset,
                    row.scores.len()
                ));
            }
            tensor.insert(&row.model, &row.dataset, row.scores, row.generative)?;
        }
    }
    if tensor.model_ids().is_empty() {
        return Err(HarnessError::MissingResults(format!(
            "directory {} holds no runs",
            results_dir.display()
        )));
    }
    Ok(LoadedResults { tensor, warnings })
}

// ---------------------------------------------------------------------------
// Aggregation outputs.

#[derive(Debug)]
pub struct AggregateReport {
    pub matrix: RankScoreMatrix,
    pub trace: RankTrace,
    pub warnings: Vec<String>,
}

/// Builds the rank-score matrix from a results directory and writes
/// `rankscores.json` plus one trace file per dataset.
pub fn aggregate_command(results_dir: &Path, alpha: f64) -> Result<AggregateReport, HarnessError> {
    let loaded = load_results(results_dir)?;
    let (matrix, trace) = mean_rank_scores(&loaded.tensor, alpha)?;
    write_json(&results_dir.join("rankscores.json"), &matrix)?;
    for dataset_trace in &trace.datasets {
        let path = results_dir.join("traces").join(format!("{}.json", dataset_trace.dataset));
        write_json(&path, dataset_trace)?;
    }
    Ok(AggregateReport { matrix, trace, warnings: loaded.warnings })
}

// ---------------------------------------------------------------------------
// Leaderboards.

/// Mean and population standard deviation of one cell's raw scores.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreSummary {
    pub mean: f64,
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LeaderboardRow {
    pub model: String,
    pub generative: bool,
    /// Aggregate mean rank score over this board's datasets; lower is better.
    pub score: f64,
    pub datasets: BTreeMap<String, ScoreSummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Leaderboard {
    pub language: String,
    pub rows: Vec<LeaderboardRow>,
}

fn cell_summary(scores: &[f64]) -> ScoreSummary {
    let n = scores.len() as f64;
    let mean = scores.iter().sum::<f64>() / n;
    let var = scores.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / n;
    ScoreSummary { mean, std: var.sqrt() }
}

/// Board for one language: models ranked over that language's datasets
/// only. `None` when the tensor holds no datasets for the language.
pub fn build_leaderboard(
    tensor: &ScoreTensor,
    language: Language,
    alpha: f64,
) -> Result<Option<Leaderboard>, HarnessError> {
    for id in tensor.dataset_ids() {
        if spec_for(id).is_err() {
            return Err(HarnessError::UnknownDataset(id.clone()));
        }
    }
    let filtered = tensor.filter_datasets(|id| {
        spec_for(id).map(|s| s.language == language).unwrap_or(false)
    });
    if filtered.dataset_ids().is_empty() {
        return Ok(None);
    }
    let (matrix, _) = mean_rank_scores(&filtered, alpha)?;
    let mut rows = Vec::new();
    for model in filtered.model_ids() {
        let Some(score) = matrix.aggregate_of(model) else {
            continue; // no complete cell on this board
        };
        let mut datasets = BTreeMap::new();
        for dataset in filtered.dataset_ids() {
            if let Some(Cell::Complete(scores)) = filtered.cell(model, dataset) {
                datasets.insert(dataset.clone(), cell_summary(scores));
            }
        }
        rows.push(LeaderboardRow {
            model: model.clone(),
            generative: tensor.is_generative(model).unwrap_or(false),
            score,
            datasets,
        });
    }
    rows.sort_by(|a, b| {
        a.score.total_cmp(&b.score).then_with(|| a.model.cmp(&b.model))
    });
    Ok(Some(Leaderboard { language: language.code().to_string(), rows }))
}

/// Plain-text rendering; the score column is marked lower-is-better.
#[must_use]
pub fn render_leaderboard(board: &Leaderboard) -> String {
    let mut out = String::from("Model ID | Type | Score (↓)\n");
    for row in &board.rows {
        let kind = if row.generative { "decoder" } else { "encoder" };
        out.push_str(&format!("{} | {} | {:.2}\n", row.model, kind, row.score));
    }
    out
}

/// Writes `leaderboard/<language>.json` and `.txt` for the requested
/// language, or for every language present when none is named.
pub fn leaderboard_command(
    results_dir: &Path,
    alpha: f64,
    language: Option<Language>,
) -> Result<Vec<Leaderboard>, HarnessError> {
    let loaded = load_results(results_dir)?;
    let languages: Vec<Language> = match language {
        Some(language) => vec![language],
        None => Language::ALL.to_vec(),
    };
    let mut boards = Vec::new();
    for language in languages {
        if let Some(board) = build_leaderboard(&loaded.tensor, language, alpha)? {
            boards.push(board);
        }
    }
    if let Some(language) = language {
        if boards.is_empty() {
            return Err(HarnessError::MissingResults(format!(
                "no datasets for language {:?} in {}",
                language.code(),
                results_dir.display()
            )));
        }
    }
    for board in &boards {
        let base = results_dir.join("leaderboard");
        write_json(&base.join(format!("{}.json", board.language)), board)?;
        write_string(&base.join(format!("{}.txt", board.language)), &render_leaderboard(board))?;
    }
    Ok(boards)
}

// ---------------------------------------------------------------------------
// Correlation analysis.

/// Correlation outcome for one task. Fewer than 3 scored models, a
/// single-valued flag, or zero performance variance cannot support a
/// coefficient and come back as `InsufficientData`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum TaskCorrelation {
    Ok { r: f64, models: usize },
    InsufficientData { models: usize },
}

/// Per-task correlation between the generative flag and performance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub tasks: BTreeMap<String, TaskCorrelation>,
}

fn task_slug(task: Task) -> &'static str {
    match task {
        Task::Ner => "ner",
        Task::Sent => "sent",
        Task::La => "la",
        Task::Qa => "qa",
    }
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Point-biserial correlation per task between a model being generative
/// and its performance on that task's datasets. Performance is the negated
/// aggregate rank score over those datasets, so positive r means
/// generative models do better.
pub fn correlate_generative(
    tensor: &ScoreTensor,
    alpha: f64,
) -> Result<CorrelationReport, HarnessError> {
    for id in tensor.dataset_ids() {
        if spec_for(id).is_err() {
            return Err(HarnessError::UnknownDataset(id.clone()));
        }
    }
    let mut tasks = BTreeMap::new();
    for task in [Task::Ner, Task::Sent, Task::La, Task::Qa] {
        let filtered = tensor.filter_datasets(|id| {
            spec_for(id).map(|s| s.task == task).unwrap_or(false)
        });
        if filtered.dataset_ids().is_empty() {
            tasks.insert(
                task_slug(task).to_string(),
                TaskCorrelation::InsufficientData { models: 0 },
            );
            continue;
        }
        let (matrix, _) = mean_rank_scores(&filtered, alpha)?;
        let mut flags = Vec::new();
        let mut perf = Vec::new();
        for model in filtered.model_ids() {
            if let Some(aggregate) = matrix.aggregate_of(model) {
                let flag = tensor.is_generative(model).unwrap_or(false);
                flags.push(if flag { 1.0 } else { 0.0 });
                perf.push(-aggregate);
            }
        }
        let outcome = if flags.len() < 3 {
            TaskCorrelation::InsufficientData { models: flags.len() }
        } else {
            match pearson(&flags, &perf) {
                Some(r) => TaskCorrelation::Ok { r, models: flags.len() },
                None => TaskCorrelation::InsufficientData { models: flags.len() },
            }
        };
        tasks.insert(task_slug(task).to_string(), outcome);
    }
    Ok(CorrelationReport { tasks })
}

/// Runs the correlation analysis over a results directory and writes
/// `analysis.json`.
pub fn analyze_command(results_dir: &Path, alpha: f64) -> Result<CorrelationReport, HarnessError> {
    let loaded = load_results(results_dir)?;
    let report = correlate_generative(&loaded.tensor, alpha)?;
    write_json(&results_dir.join("analysis.json"), &report)?;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Import and export.

/// Merges external score rows into `imported.jsonl`. Rows must carry
/// exactly [`ITERATIONS`] scores; a row for an existing (model, dataset)
/// key replaces it, so re-importing the same file is idempotent.
pub fn import_scores_command(results_dir: &Path, file: &Path) -> Result<usize, HarnessError> {
    let raw = fs::read_to_string(file).map_err(|e| io_err(file, e))?;
    let new_rows = parse_score_rows(&raw)?;
    for row in &new_rows {
        if row.scores.len() != ITERATIONS {
            return Err(HarnessError::BadRecord {
                path: file.to_path_buf(),
                message: format!(
                    "row {}/{} has {} scores, expected {ITERATIONS}",
                    row.model,
                    row.dataset,
                    row.scores.len()
                ),
            });
        }
    }
    let imported = results_dir.join("imported.jsonl");
    let mut merged: BTreeMap<(String, String), ScoreRow> = BTreeMap::new();
    if imported.exists() {
        let existing = fs::read_to_string(&imported).map_err(|e| io_err(&imported, e))?;
        for row in parse_score_rows(&existing)? {
            merged.insert((row.model.clone(), row.dataset.clone()), row);
        }
    }
    let count = new_rows.len();
    for row in new_rows {
        merged.insert((row.model.clone(), row.dataset.clone()), row);
    }
    let rows: Vec<ScoreRow> = merged.into_values().collect();
    write_string(&imported, &score_rows_to_jsonl(&rows))?;
    Ok(count)
}

/// Model × dataset mean-score matrix as CSV: both axes lexicographic,
/// cells to six decimals, incomplete or missing cells left empty.
#[must_use]
pub fn export_matrix_string(tensor: &ScoreTensor) -> String {
    let mut models: Vec<&String> = tensor.model_ids().iter().collect();
    models.sort();
    let mut datasets: Vec<&String> = tensor.dataset_ids().iter().collect();
    datasets.sort();
    let mut out = String::from("model");
    for dataset in &datasets {
        out.push(',');
        out.push_str(dataset);
    }
    out.push('\n');
    for model in &models {
        out.push_str(model);
        for dataset in &datasets {
            out.push(',');
            if let Some(Cell::Complete(scores)) = tensor.cell(model, dataset) {
                let mean = scores.iter().sum::<f64>() / scores.len() as f64;
                out.push_str(&format!("{mean:.6}"));
            }
        }
        out.push('\n');
    }
    out
}

/// Writes the mean-score matrix; the default target is
/// `<results>/matrix.csv`.
pub fn export_matrix_command(
    results_dir: &Path,
    out: Option<&Path>,
) -> Result<PathBuf, HarnessError> {
    let loaded = load_results(results_dir)?;
    let path = out.map_or_else(|| results_dir.join("matrix.csv"), Path::to_path_buf);
    write_string(&path, &export_matrix_string(&loaded.tensor))?;
    Ok(path)
}
