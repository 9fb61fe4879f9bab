//! Benchmark execution: 10 independent iterations per model/dataset pair,
//! each with freshly sampled demonstrations and a bootstrapped test split.
//!
//! Iteration i is keyed entirely by `derive_seed(master_seed, i)`, so
//! iterations can run in any order — or in parallel — with identical
//! results. Entity extraction uses mask-constrained decoding when the
//! backend exposes logits and a vocabulary; otherwise raw completions go
//! through the JSON repair path, and each record notes which path ran.

use std::collections::HashMap;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::corpus::{CorpusError, Dataset, DatasetSpec, LabelLexicon, Sample, Task};
use crate::genconstrain::{
    advance, allowed_tokens, compile_schema, Automaton, ConstraintError, OutputSchema, Vocabulary,
};
use crate::metrics::{json_to_bio, macro_f1, mcc, ner_micro_f1, qa_em_f1, MetricError};
use crate::promptkit::{
    gold_target, render_prompt, render_query_block, sample_few_shot, PromptError, PromptTemplate,
};
use crate::seed::{derive_seed, STREAM_BOOTSTRAP, STREAM_SHOTS};

/// Iterations per (model, dataset) cell.
pub const ITERATIONS: usize = 10;

/// Consecutive transport failures tolerated before a run is abandoned.
pub const MAX_CONSECUTIVE_FAILURES: usize = 5;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("test split is empty")]
    EmptyTestSplit,
    #[error("prompt is empty")]
    EmptyPrompt,
    #[error("backend does not expose logits")]
    LogitAccessUnsupported,
    #[error("backend profile: {0}")]
    BadProfile(String),
    #[error("transport failure after {attempts} attempt(s): {message}")]
    Transport { message: String, attempts: usize },
    #[error("endpoint returned malformed payload: {0}")]
    MalformedResponse(String),
    #[error("environment variable {0} is not set")]
    MissingCredentials(String),
    #[error(transparent)]
    Prompt(#[from] PromptError),
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

/// Decoding knobs sent with every completion request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub max_new_tokens: usize,
    pub stop_sequence: String,
    pub temperature: f64,
}

impl GenParams {
    /// Per-task budgets; the block separator doubles as the stop signal,
    /// and decoding is greedy everywhere for reproducibility.
    #[must_use]
    pub fn for_task(task: Task) -> GenParams {
        let max_new_tokens = match task {
            Task::Sent | Task::La => 16,
            Task::Qa => 32,
            Task::Ner => 256,
        };
        GenParams { max_new_tokens, stop_sequence: "\n\n".to_string(), temperature: 0.0 }
    }

    fn validate(&self) -> Result<(), EvalError> {
        if self.stop_sequence.is_empty() {
            return Err(EvalError::BadProfile("stop_sequence is empty".to_string()));
        }
        if !(self.temperature >= 0.0) {
            return Err(EvalError::BadProfile(format!(
                "temperature {} is negative or NaN",
                self.temperature
            )));
        }
        Ok(())
    }
}

/// Identity and capabilities of one evaluated model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BackendProfile {
    pub id: String,
    pub generative: bool,
    pub logit_access: bool,
    pub params: GenParams,
}

impl BackendProfile {
    pub fn new(
        id: &str,
        generative: bool,
        logit_access: bool,
        params: GenParams,
    ) -> Result<BackendProfile, EvalError> {
        if id.is_empty() {
            return Err(EvalError::BadProfile("model id is empty".to_string()));
        }
        params.validate()?;
        Ok(BackendProfile { id: id.to_string(), generative, logit_access, params })
    }
}

/// A text-generation model under test.
///
/// `complete` is the plain completion path. Backends with logit access
/// additionally serve `next_token`, picking one token id out of the
/// admissible set, and expose the tokenizer's `vocabulary`.
pub trait ModelBackend: Send + Sync {
    fn profile(&self) -> &BackendProfile;

    fn complete(&self, prompt: &str, params: &GenParams) -> Result<String, EvalError>;

    fn next_token(
        &self,
        _prompt: &str,
        _emitted: &str,
        _allowed: &[u32],
        _vocab: &Vocabulary,
    ) -> Result<u32, EvalError> {
        Err(EvalError::LogitAccessUnsupported)
    }

    fn vocabulary(&self) -> Option<&Vocabulary> {
        None
    }
}

/// One scored sample inside an iteration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    /// SHA-256 of the full prompt text (prompts themselves are too large
    /// to persist per sample).
    pub prompt_sha256: String,
    pub generation: String,
    pub prediction: String,
}

/// One iteration's outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub model: String,
    pub dataset: String,
    pub iteration: usize,
    pub seed: u64,
    pub raw_score: f64,
    /// Exact-match companion score; present for question answering only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub em_score: Option<f64>,
    /// True when mask-constrained decoding produced the generations.
    pub constrained: bool,
    pub samples: Vec<SampleRecord>,
}

/// All records produced for one (model, dataset) pair. `aborted` carries
/// the reason when the backend became unreachable; the records then cover
/// fewer than [`ITERATIONS`] iterations and the cell counts as incomplete.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkRun {
    pub model: String,
    pub dataset: String,
    pub records: Vec<RunRecord>,
    pub aborted: Option<String>,
}

/// Same-size sample with replacement, deterministic under `seed`.
pub fn bootstrap_split(test: &[Sample], seed: u64) -> Result<Vec<Sample>, EvalError> {
    if test.is_empty() {
        return Err(EvalError::EmptyTestSplit);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..test.len()).map(|_| test[rng.gen_range(0..test.len())].clone()).collect())
}

fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0usize; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Maps free text onto the candidate list: lowercase and trim the first
/// line, then pick the candidate at minimal edit distance, earliest
/// candidate winning ties. Empty text maps to the first candidate. Returns
/// the candidate's index.
#[must_use]
pub fn parse_classification(generation: &str, candidates: &[String]) -> usize {
    let line = generation.lines().next().unwrap_or("").trim().to_lowercase();
    if line.is_empty() {
        return 0;
    }
    let mut best = 0;
    let mut best_distance = usize::MAX;
    for (i, candidate) in candidates.iter().enumerate() {
        let d = levenshtein(&line, candidate);
        if d < best_distance {
            best = i;
            best_distance = d;
        }
    }
    best
}

/// A finished generation plus the decode path that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Generation {
    pub text: String,
    pub constrained: bool,
}

/// Runs one completion. With an automaton, a logit-capable backend with a
/// vocabulary is driven token by token under the admissibility mask until
/// the automaton accepts — the output always parses. Otherwise the plain
/// completion is truncated at the first stop sequence.
pub fn generate(
    backend: &dyn ModelBackend,
    prompt: &str,
    params: &GenParams,
    constraint: Option<&Automaton>,
) -> Result<Generation, EvalError> {
    if prompt.is_empty() {
        return Err(EvalError::EmptyPrompt);
    }
    if let Some(automaton) = constraint {
        if backend.profile().logit_access {
            if let Some(vocab) = backend.vocabulary() {
                let mut state = automaton.initial_state();
                // Every token consumes at least one character, so the
                // automaton's own length bound caps the loop.
                for _ in 0..automaton.max_output_chars() {
                    if automaton.is_accepting(&state) {
                        break;
                    }
                    let allowed = allowed_tokens(automaton, &state, vocab)?;
                    let id = backend.next_token(prompt, state.emitted(), &allowed, vocab)?;
                    state = advance(automaton, &state, id, vocab)?;
                }
                return Ok(Generation { text: state.emitted().to_string(), constrained: true });
            }
        }
    }
    let raw = backend.complete(prompt, params)?;
    let text = match raw.find(&params.stop_sequence) {
        Some(idx) => raw[..idx].to_string(),
        None => raw,
    };
    Ok(Generation { text, constrained: false })
}

fn sha256_hex(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

/// Localized key / canonical tag pairs in schema order.
fn tag_key_pairs(
    spec: &DatasetSpec,
    lexicon: &LabelLexicon,
) -> Result<Vec<(String, String)>, EvalError> {
    spec.ner_tags
        .iter()
        .map(|tag| {
            let key = match spec.label_overrides.get(tag) {
                Some(s) => s.clone(),
                None => lexicon.localize(tag, spec.language)?.to_string(),
            };
            Ok((tag.clone(), key))
        })
        .collect()
}

/// Entity-extraction output schema for a dataset: localized tag keys plus
/// the character inventory of the dataset's own documents.
pub fn ner_schema_for(
    dataset: &Dataset,
    lexicon: &LabelLexicon,
) -> Result<OutputSchema, EvalError> {
    let keys: Vec<String> = tag_key_pairs(&dataset.spec, lexicon)?
        .into_iter()
        .map(|(_, key)| key)
        .collect();
    let mut charset: std::collections::BTreeSet<char> = std::collections::BTreeSet::new();
    for split in [&dataset.train, &dataset.val, &dataset.test] {
        for sample in split {
            charset.extend(sample.document().chars());
        }
    }
    charset.remove(&'\n');
    Ok(OutputSchema::new(keys, charset.into_iter().collect()))
}

struct IterationAbort {
    message: String,
}

struct TaskScorer<'a> {
    spec: &'a DatasetSpec,
    /// Lowercased localized label per canonical class, classification only.
    surfaces: Vec<String>,
    /// (canonical tag, localized key) pairs, entity extraction only.
    tag_keys: Vec<(String, String)>,
    automaton: Option<Automaton>,
    schema: Option<OutputSchema>,
}

impl<'a> TaskScorer<'a> {
    fn new(
        dataset: &'a Dataset,
        lexicon: &LabelLexicon,
        logit_capable: bool,
    ) -> Result<TaskScorer<'a>, EvalError> {
        let spec = &dataset.spec;
        let mut surfaces = Vec::new();
        let mut tag_keys = Vec::new();
        let mut automaton = None;
        let mut schema = None;
        match spec.task {
            Task::Sent | Task::La => {
                for class in spec.class_labels() {
                    let surface = match spec.label_overrides.get(*class) {
                        Some(s) => s.clone(),
                        None => lexicon.localize(class, spec.language)?.to_string(),
                    };
                    surfaces.push(surface.to_lowercase());
                }
            }
            Task::Ner => {
                tag_keys = tag_key_pairs(spec, lexicon)?;
                let s = ner_schema_for(dataset, lexicon)?;
                if logit_capable {
                    automaton = Some(compile_schema(&s)?);
                }
                schema = Some(s);
            }
            Task::Qa => {}
        }
        Ok(TaskScorer { spec, surfaces, tag_keys, automaton, schema })
    }

    /// Parsed prediction string for the record: the canonical class label,
    /// the canonical entity JSON, or the answer line.
    fn parse(&self, generation: &str) -> String {
        match self.spec.task {
            Task::Sent | Task::La => {
                let idx = parse_classification(generation, &self.surfaces);
                self.spec.class_labels()[idx].to_string()
            }
            Task::Ner => {
                let schema = self.schema.as_ref().expect("schema built for entity task");
                let decoded = crate::genconstrain::repair_or_reject(generation, schema);
                let pairs: Vec<(String, Vec<String>)> = self
                    .tag_keys
                    .iter()
                    .map(|(_, key)| (key.clone(), decoded.get(key).cloned().unwrap_or_default()))
                    .collect();
                crate::genconstrain::canonical_json_object(&pairs)
            }
            Task::Qa => generation.lines().next().unwrap_or("").trim().to_string(),
        }
    }

    /// Scores one iteration from gold samples and parsed predictions.
    /// Returns (raw score, exact-match companion if any).
    fn score(
        &self,
        gold: &[Sample],
        predictions: &[String],
    ) -> Result<(f64, Option<f64>), EvalError> {
        match self.spec.task {
            Task::Sent => {
                let gold_labels: Vec<String> = gold
                    .iter()
                    .map(|s| match s {
                        Sample::Classification { label, .. } => label.clone(),
                        _ => unreachable!("task checked at render time"),
                    })
                    .collect();
                let classes: Vec<String> =
                    self.spec.class_labels().iter().map(|c| c.to_string()).collect();
                Ok((macro_f1(&gold_labels, predictions, &classes)?, None))
            }
            Task::La => {
                let gold_flags: Vec<bool> = gold
                    .iter()
                    .map(|s| match s {
                        Sample::Classification { label, .. } => label == "correct",
                        _ => unreachable!("task checked at render time"),
                    })
                    .collect();
                let pred_flags: Vec<bool> = predictions.iter().map(|p| p == "correct").collect();
                Ok((mcc(&gold_flags, &pred_flags)?, None))
            }
            Task::Ner => {
                let mut gold_tags = Vec::with_capacity(gold.len());
                let mut pred_tags = Vec::with_capacity(gold.len());
                for (sample, prediction) in gold.iter().zip(predictions) {
                    let Sample::Ner { tokens, tags } = sample else {
                        unreachable!("task checked at render time")
                    };
                    let schema = self.schema.as_ref().expect("schema built for entity task");
                    let decoded = crate::genconstrain::repair_or_reject(prediction, schema);
                    let entities: Vec<(String, Vec<String>)> = self
                        .tag_keys
                        .iter()
                        .map(|(tag, key)| {
                            (tag.clone(), decoded.get(key).cloned().unwrap_or_default())
                        })
                        .collect();
                    pred_tags.push(json_to_bio(tokens, &entities));
                    gold_tags.push(tags.clone());
                }
                Ok((ner_micro_f1(&gold_tags, &pred_tags)?, None))
            }
            Task::Qa => {
                let mut em_total = 0.0;
                let mut f1_total = 0.0;
                for (sample, prediction) in gold.iter().zip(predictions) {
                    let Sample::Qa { answers, .. } = sample else {
                        unreachable!("task checked at render time")
                    };
                    let texts: Vec<String> = answers.iter().map(|a| a.text.clone()).collect();
                    let (em, f1) = qa_em_f1(prediction, &texts, self.spec.language)?;
                    em_total += em;
                    f1_total += f1;
                }
                let n = gold.len() as f64;
                Ok((f1_total / n, Some(em_total / n)))
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_iteration(
    backend: &dyn ModelBackend,
    dataset: &Dataset,
    template: &PromptTemplate,
    lexicon: &LabelLexicon,
    scorer: &TaskScorer<'_>,
    master_seed: u64,
    iteration: usize,
) -> Result<Result<RunRecord, IterationAbort>, EvalError> {
    let seed = derive_seed(master_seed, iteration as u64);
    let shots_seed = derive_seed(seed, STREAM_SHOTS);
    let boot_seed = derive_seed(seed, STREAM_BOOTSTRAP);
    let shots = sample_few_shot(&dataset.train, dataset.spec.num_shots, shots_seed)?;
    let test = bootstrap_split(&dataset.test, boot_seed)?;
    let params = GenParams::for_task(dataset.spec.task);

    let mut samples = Vec::with_capacity(test.len());
    let mut predictions = Vec::with_capacity(test.len());
    let mut constrained_any = false;
    let mut consecutive_failures = 0usize;
    for query in &test {
        let prompt = render_prompt(template, &dataset.spec, lexicon, &shots, query)?;
        let generation =
            match generate(backend, &prompt.text, &params, scorer.automaton.as_ref()) {
                Ok(generation) => {
                    consecutive_failures = 0;
                    generation
                }
                Err(EvalError::Transport { message, attempts }) => {
                    consecutive_failures += 1;
                    log::warn!(
                        "transport failure ({consecutive_failures} in a row, {attempts} attempts): {message}"
                    );
                    if consecutive_failures >= MAX_CONSECUTIVE_FAILURES {
                        return Ok(Err(IterationAbort { message }));
                    }
                    Generation { text: String::new(), constrained: false }
                }
                Err(other) => return Err(other),
            };
        constrained_any |= generation.constrained;
        let prediction = scorer.parse(&generation.text);
        samples.push(SampleRecord {
            prompt_sha256: sha256_hex(&prompt.text),
            generation: generation.text,
            prediction: prediction.clone(),
        });
        predictions.push(prediction);
    }
    let (raw_score, em_score) = scorer.score(&test, &predictions)?;
    Ok(Ok(RunRecord {
        model: backend.profile().id.clone(),
        dataset: dataset.spec.id.clone(),
        iteration,
        seed,
        raw_score,
        em_score,
        constrained: constrained_any,
        samples,
    }))
}

fn collect_runs(
    backend: &dyn ModelBackend,
    dataset: &Dataset,
    outcomes: Vec<Result<RunRecord, IterationAbort>>,
) -> BenchmarkRun {
    let mut records = Vec::with_capacity(outcomes.len());
    let mut aborted = None;
    for outcome in outcomes {
        match outcome {
            Ok(record) => records.push(record),
            Err(abort) => {
                if aborted.is_none() {
                    aborted = Some(abort.message);
                }
            }
        }
    }
    BenchmarkRun {
        model: backend.profile().id.clone(),
        dataset: dataset.spec.id.clone(),
        records,
        aborted,
    }
}

/// Runs all [`ITERATIONS`] iterations for one model/dataset pair.
/// Iterations run in parallel when the `parallel` feature is on; results
/// are identical to [`run_benchmark_serial`].
pub fn run_benchmark(
    backend: &dyn ModelBackend,
    dataset: &Dataset,
    template: &PromptTemplate,
    lexicon: &LabelLexicon,
    master_seed: u64,
) -> Result<BenchmarkRun, EvalError> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let scorer = TaskScorer::new(dataset, lexicon, backend.profile().logit_access)?;
        let outcomes = (0..ITERATIONS)
            .into_par_iter()
            .map(|i| run_iteration(backend, dataset, template, lexicon, &scorer, master_seed, i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(collect_runs(backend, dataset, outcomes))
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_benchmark_serial(backend, dataset, template, lexicon, master_seed)
    }
}

/// Single-threaded twin of [`run_benchmark`].
pub fn run_benchmark_serial(
    backend: &dyn ModelBackend,
    dataset: &Dataset,
    template: &PromptTemplate,
    lexicon: &LabelLexicon,
    master_seed: u64,
) -> Result<BenchmarkRun, EvalError> {
    let scorer = TaskScorer::new(dataset, lexicon, backend.profile().logit_access)?;
    let mut outcomes = Vec::with_capacity(ITERATIONS);
    for i in 0..ITERATIONS {
        outcomes.push(run_iteration(
            backend, dataset, template, lexicon, &scorer, master_seed, i,
        )?);
    }
    Ok(collect_runs(backend, dataset, outcomes))
}

// ---------------------------------------------------------------------------
// Mock backend.

/// Scripted behavior of the in-process mock backend.
#[derive(Debug, Clone)]
pub enum MockBehavior {
    /// Answer every query with its gold target.
    GoldEcho,
    /// Answer every query with this fixed text.
    FixedLabel(String),
    /// Gold with probability 1−ε, otherwise a uniformly random wrong class
    /// label. Classification tasks only; the flip depends only on the
    /// prompt hash and `noise_seed`, never on evaluation order.
    NoisyGold { epsilon: f64, noise_seed: u64 },
    /// Emit this raw text verbatim (repair-path exercises).
    ScriptedJson(String),
}

/// In-process backend that knows the dataset's gold targets. It resolves
/// each prompt purely by parsing the prompt's final block — the same
/// information a real model sees — so there is no side channel past the
/// completion interface.
pub struct MockBackend {
    profile: BackendProfile,
    behavior: MockBehavior,
    targets: HashMap<String, String>,
    surfaces: Vec<String>,
    vocab: Option<Vocabulary>,
}

impl MockBackend {
    pub fn new(
        dataset: &Dataset,
        template: &PromptTemplate,
        lexicon: &LabelLexicon,
        behavior: MockBehavior,
        profile: BackendProfile,
    ) -> Result<MockBackend, EvalError> {
        let spec = &dataset.spec;
        if matches!(behavior, MockBehavior::NoisyGold { .. })
            && !matches!(spec.task, Task::Sent | Task::La)
        {
            return Err(EvalError::BadProfile(
                "noisy gold behavior requires a classification task".to_string(),
            ));
        }
        let mut targets = HashMap::new();
        for split in [&dataset.train, &dataset.val, &dataset.test] {
            for sample in split {
                let query = render_query_block(template, spec, sample)?;
                let gold = gold_target(spec, lexicon, sample)?;
                // First binding wins on duplicate query texts, mirroring
                // what a model could at best infer from the prompt alone.
                targets.entry(query).or_insert(gold);
            }
        }
        let mut surfaces = Vec::new();
        if matches!(spec.task, Task::Sent | Task::La) {
            for class in spec.class_labels() {
                let surface = match spec.label_overrides.get(*class) {
                    Some(s) => s.clone(),
                    None => lexicon.localize(class, spec.language)?.to_string(),
                };
                surfaces.push(surface.to_lowercase());
            }
        }
        let vocab = if profile.logit_access && spec.task == Task::Ner {
            Some(mock_vocabulary(&ner_schema_for(dataset, lexicon)?))
        } else {
            None
        };
        Ok(MockBackend { profile, behavior, targets, surfaces, vocab })
    }

    /// Gold target for a prompt, recovered from its final block.
    fn target_for(&self, prompt: &str) -> Option<&str> {
        let query = prompt.rsplit("\n\n").next()?;
        self.targets.get(query).map(String::as_str)
    }

    fn respond(&self, prompt: &str) -> String {
        match &self.behavior {
            MockBehavior::FixedLabel(text) => text.clone(),
            MockBehavior::ScriptedJson(text) => text.clone(),
            MockBehavior::GoldEcho => self.target_for(prompt).unwrap_or("").to_string(),
            MockBehavior::NoisyGold { epsilon, noise_seed } => {
                let gold = self.target_for(prompt).unwrap_or("").to_string();
                let digest = Sha256::digest(prompt.as_bytes());
                let head = u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"));
                let mut rng = ChaCha8Rng::seed_from_u64(head ^ noise_seed);
                if rng.gen::<f64>() >= *epsilon {
                    return gold;
                }
                let wrong: Vec<&String> =
                    self.surfaces.iter().filter(|s| **s != gold).collect();
                if wrong.is_empty() {
                    gold
                } else {
                    wrong[rng.gen_range(0..wrong.len())].clone()
                }
            }
        }
    }
}

/// Tokens for driving the mock's constrained decodes: the schema's
/// characters plus a few multi-character fragments and one token that no
/// state admits.
fn mock_vocabulary(schema: &OutputSchema) -> Vocabulary {
    let mut texts: std::collections::BTreeSet<String> = std::collections::BTreeSet::new();
    for (i, key) in schema.keys.iter().enumerate() {
        let prefix = if i == 0 { "{\"" } else { ", \"" };
        texts.insert(format!("{prefix}{key}\": ["));
    }
    for frag in ["\"", "]", "}", "]}", ", ", ": [", "\", \""] {
        texts.insert(frag.to_string());
    }
    for ch in &schema.string_charset {
        if *ch != '\n' {
            texts.insert(ch.to_string());
        }
    }
    texts.insert("\n\n".to_string());
    Vocabulary::new(texts.into_iter().enumerate().map(|(i, t)| (i as u32, t)).collect())
        .expect("mock vocabulary entries are unique and non-empty")
}

impl ModelBackend for MockBackend {
    fn profile(&self) -> &BackendProfile {
        &self.profile
    }

    fn complete(&self, prompt: &str, _params: &GenParams) -> Result<String, EvalError> {
        // Real models keep generating past the answer; the filler after the
        // block separator must be cut off by stop-sequence truncation.
        Ok(format!("{}\n\nfiller text that must be truncated", self.respond(prompt)))
    }

    fn next_token(
        &self,
        prompt: &str,
        emitted: &str,
        allowed: &[u32],
        vocab: &Vocabulary,
    ) -> Result<u32, EvalError> {
        let desired = self.respond(prompt);
        let remaining = desired.strip_prefix(emitted).unwrap_or("");
        let mut best: Option<(usize, u32)> = None;
        for &id in allowed {
            let text = vocab.text(id)?;
            if !remaining.is_empty() && remaining.starts_with(text) {
                if best.is_none_or(|(len, _)| text.len() > len) {
                    best = Some((text.len(), id));
                }
            }
        }
        match best {
            Some((_, id)) => Ok(id),
            // Desired text exhausted or divergent: take the smallest
            // admissible token so the decode still terminates.
            None => allowed.first().copied().ok_or_else(|| {
                EvalError::BadProfile("empty admissible set reached".to_string())
            }),
        }
    }

    fn vocabulary(&self) -> Option<&Vocabulary> {
        self.vocab.as_ref()
    }
}

// ---------------------------------------------------------------------------
// HTTP backend.

/// Retry schedule for transport failures: `attempts` tries, exponential
/// backoff starting at `base_delay`.
#[derive(Debug, Clone)]
pub struct RetryPolicy {
    pub attempts: usize,
    pub base_delay: Duration,
}

impl Default for RetryPolicy {
    fn default() -> RetryPolicy {
        RetryPolicy { attempts: 3, base_delay: Duration::from_secs(1) }
    }
}

#[derive(Serialize)]
struct CompletionRequest<'a> {
    prompt: &'a str,
    max_tokens: usize,
    stop: &'a str,
    temperature: f64,
}

#[derive(Deserialize)]
struct CompletionResponse {
    text: String,
}

/// Client for a plain text-completion endpoint: POST {prompt, max_tokens,
/// stop, temperature}, response {text}. The API key is read from the named
/// environment variable at construction and never persisted.
pub struct HttpBackend {
    profile: BackendProfile,
    endpoint: String,
    api_key: Option<String>,
    client: reqwest::blocking::Client,
    retry: RetryPolicy,
}

impl HttpBackend {
    pub fn new(
        profile: BackendProfile,
        endpoint: &str,
        api_key_env: Option<&str>,
    ) -> Result<HttpBackend, EvalError> {
        let api_key = match api_key_env {
            Some(var) => Some(
                std::env::var(var).map_err(|_| EvalError::MissingCredentials(var.to_string()))?,
            ),
            None => None,
        };
        let client = reqwest::blocking::Client::builder()
            .timeout(Duration::from_secs(60))
            .build()
            .map_err(|e| EvalError::Transport { message: e.to_string(), attempts: 0 })?;
        Ok(HttpBackend {
            profile,
            endpoint: endpoint.to_string(),
            api_key,
            client,
            retry: RetryPolicy::default(),
        })
    }

    /// Adjusted retry schedule (tests shrink the delays).
    #[must_use]
    pub fn with_retry_policy(mut self, retry: RetryPolicy) -> HttpBackend {
        self.retry = retry;
        self
    }

    fn attempt(&self, prompt: &str, params: &GenParams) -> Result<String, (bool, String)> {
        let request = CompletionRequest {
            prompt,
            max_tokens: params.max_new_tokens,
            stop: &params.stop_sequence,
            temperature: params.temperature,
        };
        let mut builder = self.client.post(&self.endpoint).json(&request);
        if let Some(key) = &self.api_key {
            builder = builder.bearer_auth(key);
        }
        let response = builder.send().map_err(|e| (true, e.to_string()))?;
        let status = response.status();
        if status.as_u16() == 429 || status.is_server_error() {
            return Err((true, format!("status {status}")));
        }
        if !status.is_success() {
            return Err((false, format!("status {status}")));
        }
        let payload: CompletionResponse =
            response.json().map_err(|e| (false, e.to_string()))?;
        Ok(payload.text)
    }
}

impl ModelBackend for HttpBackend {
    fn profile(&self) -> &BackendProfile {
        &self.profile
    }

    fn complete(&self, prompt: &str, params: &GenParams) -> Result<String, EvalError> {
        let mut last = String::new();
        for attempt in 0..self.retry.attempts {
            match self.attempt(prompt, params) {
                Ok(text) => return Ok(text),
                Err((retryable, message)) => {
                    if !retryable {
                        return Err(EvalError::MalformedResponse(message));
                    }
                    last = message;
                    if attempt + 1 < self.retry.attempts {
                        std::thread::sleep(self.retry.base_delay * 2u32.pow(attempt as u32));
                    }
                }
            }
        }
        Err(EvalError::Transport { message: last, attempts: self.retry.attempts })
    }
}
