//! Few-shot prompt construction.
//!
//! A prompt is `prefix_prompt`, a blank line, then one block per
//! demonstration and a final query block, all separated by blank lines.
//! Classification blocks are `doc_prefix: <text>` / `label_prefix: <label>`;
//! question answering inserts a `question_prefix: <question>` line between
//! them. The query block ends with `label_prefix:` and no value — the
//! model's continuation is the prediction. Blank lines are the only block
//! separator, which is why documents must be sanitized to never contain
//! double newlines.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{CorpusError, DatasetSpec, LabelLexicon, Sample, Task};
use crate::genconstrain::canonical_json_object;
use crate::metrics::bio_spans;

#[derive(Debug, Error)]
pub enum PromptError {
    #[error("requested {requested} shots but only {available} examples are available")]
    TooFewShots { requested: usize, available: usize },
    #[error("sample kind does not match dataset task {expected:?}")]
    TaskMismatch { expected: Task },
    #[error("{context} contains a blank line; sanitize documents before rendering")]
    EmbeddedBlankLine { context: &'static str },
    #[error("template for {dataset:?}: {message}")]
    BadTemplate { dataset: String, message: String },
    #[error("no template for dataset {0:?}")]
    UnknownDataset(String),
    #[error("entity tags: {0}")]
    MalformedTags(String),
    #[error(transparent)]
    Lexicon(#[from] CorpusError),
    #[error("template pack: {0}")]
    MalformedPack(String),
}

/// Per-dataset prompt wording. `question_prefix` is present exactly for
/// question-answering templates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PromptTemplate {
    pub prefix_prompt: String,
    pub doc_prefix: String,
    pub label_prefix: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub question_prefix: Option<String>,
}

/// A fully rendered prompt plus its shape metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedPrompt {
    pub text: String,
    pub shot_count: usize,
    pub approx_tokens: usize,
}

/// Templates keyed by dataset id.
#[derive(Debug, Clone)]
pub struct TemplatePack {
    templates: BTreeMap<String, PromptTemplate>,
}

impl TemplatePack {
    /// Parses and validates a pack from its JSON document.
    pub fn from_json_str(json: &str) -> Result<TemplatePack, PromptError> {
        let templates: BTreeMap<String, PromptTemplate> =
            serde_json::from_str(json).map_err(|e| PromptError::MalformedPack(e.to_string()))?;
        for (dataset, template) in &templates {
            let fields = [
                ("prefix_prompt", Some(&template.prefix_prompt)),
                ("doc_prefix", Some(&template.doc_prefix)),
                ("label_prefix", Some(&template.label_prefix)),
                ("question_prefix", template.question_prefix.as_ref()),
            ];
            for (name, value) in fields {
                let Some(value) = value else { continue };
                if value.is_empty() {
                    return Err(PromptError::BadTemplate {
                        dataset: dataset.clone(),
                        message: format!("{name} is empty"),
                    });
                }
                if value.contains("\n\n") {
                    return Err(PromptError::BadTemplate {
                        dataset: dataset.clone(),
                        message: format!("{name} contains a blank line"),
                    });
                }
            }
        }
        Ok(TemplatePack { templates })
    }

    pub fn get(&self, dataset_id: &str) -> Result<&PromptTemplate, PromptError> {
        self.templates
            .get(dataset_id)
            .ok_or_else(|| PromptError::UnknownDataset(dataset_id.to_string()))
    }

    /// Dataset ids covered by this pack.
    pub fn dataset_ids(&self) -> impl Iterator<Item = &str> {
        self.templates.keys().map(String::as_str)
    }
}

/// The built-in pack covering every built-in dataset.
pub fn builtin_templates() -> &'static TemplatePack {
    static PACK: OnceLock<TemplatePack> = OnceLock::new();
    PACK.get_or_init(|| {
        TemplatePack::from_json_str(include_str!("../assets/templates.json"))
            .expect("embedded template pack is valid")
    })
}

/// Uniform random draw of `n` demonstrations in randomized order.
/// Deterministic for a given seed.
pub fn sample_few_shot(train: &[Sample], n: usize, seed: u64) -> Result<Vec<Sample>, PromptError> {
    if n > train.len() {
        return Err(PromptError::TooFewShots { requested: n, available: train.len() });
    }
    let mut indices: Vec<usize> = (0..train.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Partial Fisher–Yates: position i gets a uniform pick from the
    // remainder, so the selected prefix is a uniform ordered sample.
    for i in 0..n {
        let j = rng.gen_range(i..indices.len());
        indices.swap(i, j);
    }
    Ok(indices[..n].iter().map(|&i| train[i].clone()).collect())
}

/// Characters/4, rounded up. Monotone in text length; only a budget
/// estimate, not a tokenizer.
#[must_use]
pub fn approx_token_count(text: &str) -> usize {
    text.chars().count().div_ceil(4)
}

fn localized(
    lexicon: &LabelLexicon,
    spec: &DatasetSpec,
    canonical: &str,
) -> Result<String, PromptError> {
    if let Some(surface) = spec.label_overrides.get(canonical) {
        return Ok(surface.clone());
    }
    Ok(lexicon.localize(canonical, spec.language)?.to_string())
}

fn check_task(spec: &DatasetSpec, sample: &Sample) -> Result<(), PromptError> {
    let ok = matches!(
        (spec.task, sample),
        (Task::Sent | Task::La, Sample::Classification { .. })
            | (Task::Ner, Sample::Ner { .. })
            | (Task::Qa, Sample::Qa { .. })
    );
    if ok {
        Ok(())
    } else {
        Err(PromptError::TaskMismatch { expected: spec.task })
    }
}

/// The text the model is expected to produce for a sample: the lowercased
/// localized class label, the canonical entity JSON, or the first gold
/// answer.
pub fn gold_target(
    spec: &DatasetSpec,
    lexicon: &LabelLexicon,
    sample: &Sample,
) -> Result<String, PromptError> {
    check_task(spec, sample)?;
    match sample {
        Sample::Classification { label, .. } => {
            Ok(localized(lexicon, spec, label)?.to_lowercase())
        }
        Sample::Ner { tokens, tags } => {
            let spans = bio_spans(tags).map_err(|e| PromptError::MalformedTags(e.to_string()))?;
            let mut pairs = Vec::with_capacity(spec.ner_tags.len());
            for tag in &spec.ner_tags {
                let key = localized(lexicon, spec, tag)?;
                let values: Vec<String> = spans
                    .iter()
                    .filter(|span| &span.tag == tag)
                    .map(|span| tokens[span.start..span.end].join(" "))
                    .collect();
                pairs.push((key, values));
            }
            Ok(canonical_json_object(&pairs))
        }
        Sample::Qa { answers, .. } => Ok(answers[0].text.clone()),
    }
}

fn push_block_lines(
    template: &PromptTemplate,
    spec: &DatasetSpec,
    sample: &Sample,
    out: &mut String,
) -> Result<(), PromptError> {
    let document = sample.document();
    if document.contains("\n\n") {
        return Err(PromptError::EmbeddedBlankLine { context: "document" });
    }
    out.push_str(&template.doc_prefix);
    out.push_str(": ");
    out.push_str(&document);
    if let Sample::Qa { question, .. } = sample {
        let question_prefix =
            template.question_prefix.as_ref().ok_or_else(|| PromptError::BadTemplate {
                dataset: spec.id.clone(),
                message: "question_prefix is required for question answering".to_string(),
            })?;
        if question.contains("\n\n") {
            return Err(PromptError::EmbeddedBlankLine { context: "question" });
        }
        out.push('\n');
        out.push_str(question_prefix);
        out.push_str(": ");
        out.push_str(question);
    } else if template.question_prefix.is_some() {
        return Err(PromptError::BadTemplate {
            dataset: spec.id.clone(),
            message: "question_prefix is only valid for question answering".to_string(),
        });
    }
    out.push('\n');
    out.push_str(&template.label_prefix);
    out.push(':');
    Ok(())
}

/// A demonstration block: document line(s), then the label line with the
/// gold target.
pub fn render_example_block(
    template: &PromptTemplate,
    spec: &DatasetSpec,
    lexicon: &LabelLexicon,
    sample: &Sample,
) -> Result<String, PromptError> {
    check_task(spec, sample)?;
    let target = gold_target(spec, lexicon, sample)?;
    if target.contains("\n\n") {
        return Err(PromptError::EmbeddedBlankLine { context: "label" });
    }
    let mut out = String::new();
    push_block_lines(template, spec, sample, &mut out)?;
    out.push(' ');
    out.push_str(&target);
    Ok(out)
}

/// The final block: like a demonstration but the label line ends at the
/// colon, with no trailing space.
pub fn render_query_block(
    template: &PromptTemplate,
    spec: &DatasetSpec,
    query: &Sample,
) -> Result<String, PromptError> {
    check_task(spec, query)?;
    let mut out = String::new();
    push_block_lines(template, spec, query, &mut out)?;
    Ok(out)
}

/// Assembles the full prompt: prefix, demonstrations, query, separated by
/// blank lines.
pub fn render_prompt(
    template: &PromptTemplate,
    spec: &DatasetSpec,
    lexicon: &LabelLexicon,
    shots: &[Sample],
    query: &Sample,
) -> Result<RenderedPrompt, PromptError> {
    if (spec.task == Task::Qa) != template.question_prefix.is_some() {
        return Err(PromptError::BadTemplate {
            dataset: spec.id.clone(),
            message: "question_prefix must be present exactly for question answering".to_string(),
        });
    }
    let mut text = template.prefix_prompt.clone();
    for shot in shots {
        text.push_str("\n\n");
        text.push_str(&render_example_block(template, spec, lexicon, shot)?);
    }
    text.push_str("\n\n");
    text.push_str(&render_query_block(template, spec, query)?);
    let approx_tokens = approx_token_count(&text);
    Ok(RenderedPrompt { text, shot_count: shots.len(), approx_tokens })
}
