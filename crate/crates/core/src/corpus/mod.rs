//! Task datasets: typed samples, validation, and deterministic subsampling.
//!
//! A dataset bundle is a directory holding `manifest.json` (the
//! [`DatasetSpec`]) plus `train.jsonl` / `val.jsonl` / `test.jsonl` with one
//! JSON record per line. All text is sanitized at ingestion so that no field
//! contains two consecutive newlines — the blank line is reserved as the
//! prompt block separator.

mod io;
mod lexicon;
mod registry;

pub use io::{load_dataset, load_manifest, save_dataset};
pub use lexicon::{builtin_lexicon, LabelLexicon};
pub use registry::{builtin_specs, spec_for};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Canonical label vocabulary shared across languages.
pub mod labels {
    /// Entity tags in their default prompt/key order.
    pub const DEFAULT_NER_TAGS: [&str; 3] = ["PER", "LOC", "ORG"];
    /// Sentiment classes in canonical candidate order.
    pub const SENTIMENT: [&str; 3] = ["negative", "neutral", "positive"];
    /// Acceptability classes in canonical candidate order; `correct` is the
    /// positive class for correlation-style metrics.
    pub const ACCEPTABILITY: [&str; 2] = ["correct", "incorrect"];
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{split} line {line}: malformed record: {message}")]
    MalformedRecord {
        split: &'static str,
        line: usize,
        message: String,
    },
    #[error("{split} sample {index}: invalid BIO tags: {message}")]
    InvalidBio {
        split: &'static str,
        index: usize,
        message: String,
    },
    #[error("{split} split size mismatch: expected {expected}, found {actual}")]
    SplitSizeMismatch {
        split: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("subsample target {target} exceeds available {available}")]
    TargetTooLarge { target: usize, available: usize },
    #[error("no localization of label {label:?} for {language:?}")]
    MissingLabel { label: String, language: Language },
    #[error("label lexicon not injective for {language:?}: {a:?} and {b:?} both map to {surface:?}")]
    AmbiguousLexicon {
        language: Language,
        a: String,
        b: String,
        surface: String,
    },
    #[error("dataset spec invalid: {0}")]
    InvalidSpec(String),
    #[error("unknown dataset id {0:?}")]
    UnknownDataset(String),
    // The io error is folded into the message rather than chained as a
    // source, so `{err:#}` printing does not repeat it.
    #[error("io error on {path}: {error}")]
    Io { path: String, error: std::io::Error },
}

/// The four evaluation tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    /// Named entity recognition over token/BIO-tag pairs.
    Ner,
    /// Three-class sentiment classification.
    Sent,
    /// Binary linguistic acceptability.
    La,
    /// Extractive question answering.
    Qa,
}

/// The score reported for one iteration of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Metric {
    #[serde(rename = "micro-f1")]
    MicroF1,
    #[serde(rename = "macro-f1")]
    MacroF1,
    #[serde(rename = "mcc")]
    Mcc,
    #[serde(rename = "qa-em-f1")]
    QaEmF1,
}

impl Metric {
    /// Inclusive score range.
    #[must_use]
    pub fn range(self) -> (f64, f64) {
        match self {
            Metric::Mcc => (-1.0, 1.0),
            _ => (0.0, 1.0),
        }
    }
}

/// Languages with localized prompt labels. Bokmål and Nynorsk datasets share
/// the Norwegian localization and leaderboard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Language {
    Danish,
    Swedish,
    Norwegian,
    Icelandic,
    Faroese,
    German,
    Dutch,
    English,
}

impl Language {
    pub const ALL: [Language; 8] = [
        Language::Danish,
        Language::Swedish,
        Language::Norwegian,
        Language::Icelandic,
        Language::Faroese,
        Language::German,
        Language::Dutch,
        Language::English,
    ];

    /// Primary ISO 639-1 style code used in file names and manifests.
    #[must_use]
    pub fn code(self) -> &'static str {
        match self {
            Language::Danish => "da",
            Language::Swedish => "sv",
            Language::Norwegian => "no",
            Language::Icelandic => "is",
            Language::Faroese => "fo",
            Language::German => "de",
            Language::Dutch => "nl",
            Language::English => "en",
        }
    }

    /// Accepts the primary code plus common variant codes (`nb`/`nn` → `no`).
    #[must_use]
    pub fn from_code(code: &str) -> Option<Language> {
        match code {
            "da" => Some(Language::Danish),
            "sv" => Some(Language::Swedish),
            "no" | "nb" | "nn" => Some(Language::Norwegian),
            "is" => Some(Language::Icelandic),
            "fo" => Some(Language::Faroese),
            "de" => Some(Language::German),
            "nl" => Some(Language::Dutch),
            "en" => Some(Language::English),
            _ => None,
        }
    }
}

impl Serialize for Language {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for Language {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let code = String::deserialize(de)?;
        Language::from_code(&code)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown language code {code:?}")))
    }
}

/// Expected number of samples per split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSizes {
    pub train: usize,
    pub val: usize,
    pub test: usize,
}

/// Static description of one dataset: identity, task, prompting and scoring
/// parameters, and the expected shape of its splits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSpec {
    pub id: String,
    pub language: Language,
    pub task: Task,
    pub num_shots: usize,
    pub split_sizes: SplitSizes,
    pub metric: Metric,
    /// Canonical entity tags, in prompt/key order. Filled with
    /// `labels::DEFAULT_NER_TAGS` for NER specs that leave it empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ner_tags: Vec<String>,
    /// Extra localized surface forms for labels the built-in lexicon does not
    /// carry (e.g. a dataset-specific `MISC` tag).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub label_overrides: BTreeMap<String, String>,
}

impl DatasetSpec {
    /// Applies defaults and checks internal consistency.
    pub fn validated(mut self) -> Result<DatasetSpec, CorpusError> {
        if self.id.is_empty() {
            return Err(CorpusError::InvalidSpec("empty dataset id".into()));
        }
        match self.task {
            Task::Ner => {
                if self.ner_tags.is_empty() {
                    self.ner_tags = labels::DEFAULT_NER_TAGS.iter().map(|s| s.to_string()).collect();
                }
            }
            _ => {
                if !self.ner_tags.is_empty() {
                    return Err(CorpusError::InvalidSpec(format!(
                        "{}: ner_tags only apply to the ner task",
                        self.id
                    )));
                }
            }
        }
        Ok(self)
    }

    /// Canonical gold label set for classification tasks.
    #[must_use]
    pub fn class_labels(&self) -> &'static [&'static str] {
        match self.task {
            Task::Sent => &labels::SENTIMENT,
            Task::La => &labels::ACCEPTABILITY,
            _ => &[],
        }
    }
}

/// One answer span for extractive QA. `start` is a character offset into the
/// (sanitized) context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QaAnswer {
    pub text: String,
    pub start: usize,
}

/// A single labeled example of any task.
#[derive(Debug, Clone, PartialEq)]
pub enum Sample {
    Classification {
        text: String,
        /// Canonical label (see [`labels`]); localization happens at render time.
        label: String,
    },
    Ner {
        tokens: Vec<String>,
        tags: Vec<String>,
    },
    Qa {
        context: String,
        question: String,
        answers: Vec<QaAnswer>,
    },
}

impl Sample {
    /// The text shown as the document line of a prompt block.
    #[must_use]
    pub fn document(&self) -> String {
        match self {
            Sample::Classification { text, .. } => text.clone(),
            Sample::Ner { tokens, .. } => tokens.join(" "),
            Sample::Qa { context, .. } => context.clone(),
        }
    }
}

/// A fully loaded and validated dataset.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub spec: DatasetSpec,
    pub train: Vec<Sample>,
    pub val: Vec<Sample>,
    pub test: Vec<Sample>,
}

/// Collapses every run of two or more `\n` into a single `\n`.
#[must_use]
pub fn collapse_newlines(text: &str) -> String {
    collapse_newlines_with_map(text).0
}

/// Collapses newline runs and returns a map from old char index to new char
/// index, so that character offsets into the original text can be carried
/// across sanitization. Dropped characters map to the index of the surviving
/// newline of their run.
#[must_use]
pub fn collapse_newlines_with_map(text: &str) -> (String, Vec<usize>) {
    let mut out = String::with_capacity(text.len());
    let mut map = Vec::with_capacity(text.chars().count());
    let mut out_len = 0usize;
    let mut prev_was_newline = false;
    for ch in text.chars() {
        if ch == '\n' && prev_was_newline {
            // Dropped: point at the newline that survived.
            map.push(out_len - 1);
            continue;
        }
        map.push(out_len);
        out.push(ch);
        out_len += 1;
        prev_was_newline = ch == '\n';
    }
    (out, map)
}

/// Checks a BIO tag sequence against a tag set: every tag is `O`, `B-X` or
/// `I-X` with `X` in `known_tags`, and `I-X` only continues a span of `X`.
pub fn validate_bio(tags: &[String], known_tags: &[String]) -> Result<(), String> {
    let mut open: Option<&str> = None;
    for (i, tag) in tags.iter().enumerate() {
        if tag == "O" {
            open = None;
            continue;
        }
        let (kind, entity) = tag
            .split_once('-')
            .ok_or_else(|| format!("tag {tag:?} at position {i} is not O, B-X or I-X"))?;
        if !known_tags.iter().any(|t| t == entity) {
            return Err(format!("tag {tag:?} at position {i} uses unknown entity type"));
        }
        match kind {
            "B" => open = Some(entity),
            "I" => {
                if open != Some(entity) {
                    return Err(format!(
                        "tag {tag:?} at position {i} continues no open {entity} span"
                    ));
                }
            }
            _ => return Err(format!("tag {tag:?} at position {i} is not O, B-X or I-X")),
        }
    }
    Ok(())
}

/// Deterministic uniform subsample without replacement.
///
/// `target == samples.len()` returns the input unchanged (identity), which
/// also makes the operation idempotent: resizing a resized split with the
/// same target and seed is a no-op.
pub fn resize_split(samples: &[Sample], target: usize, seed: u64) -> Result<Vec<Sample>, CorpusError> {
    if target > samples.len() {
        return Err(CorpusError::TargetTooLarge {
            target,
            available: samples.len(),
        });
    }
    if target == samples.len() {
        return Ok(samples.to_vec());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut indices: Vec<usize> = (0..samples.len()).collect();
    // Partial Fisher–Yates: the first `target` slots end up a uniform draw.
    for i in 0..target {
        let j = rng.gen_range(i..indices.len());
        indices.swap(i, j);
    }
    Ok(indices[..target].iter().map(|&i| samples[i].clone()).collect())
}
