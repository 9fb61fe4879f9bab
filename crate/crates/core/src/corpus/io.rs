//! Dataset bundle IO: `manifest.json` plus one line-delimited JSON file per
//! split. Records are validated and sanitized while loading, so everything
//! downstream can assume well-formed samples.

use super::{
    collapse_newlines, collapse_newlines_with_map, validate_bio, CorpusError, Dataset,
    DatasetSpec, QaAnswer, Sample, Task,
};
use serde::{Deserialize, Serialize};
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct ClsRecord {
    text: String,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct NerRecord {
    tokens: Vec<String>,
    tags: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct QaRecord {
    context: String,
    question: String,
    answers: Vec<QaAnswer>,
}

fn io_err(path: &Path, error: std::io::Error) -> CorpusError {
    CorpusError::Io {
        path: path.display().to_string(),
        error,
    }
}

/// Reads and validates `manifest.json` from a bundle directory.
pub fn load_manifest(dir: &Path) -> Result<DatasetSpec, CorpusError> {
    let path = dir.join("manifest.json");
    let raw = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
    let spec: DatasetSpec = serde_json::from_str(&raw).map_err(|e| CorpusError::InvalidSpec(
        format!("{}: {e}", path.display()),
    ))?;
    spec.validated()
}

fn parse_record(
    spec: &DatasetSpec,
    split: &'static str,
    line_no: usize,
    line: &str,
) -> Result<Sample, CorpusError> {
    let malformed = |message: String| CorpusError::MalformedRecord {
        split,
        line: line_no,
        message,
    };
    match spec.task {
        Task::Sent | Task::La => {
            let rec: ClsRecord = serde_json::from_str(line).map_err(|e| malformed(e.to_string()))?;
            let known = spec.class_labels();
            if !known.contains(&rec.label.as_str()) {
                return Err(malformed(format!(
                    "label {:?} not in {known:?}",
                    rec.label
                )));
            }
            Ok(Sample::Classification {
                text: collapse_newlines(&rec.text),
                label: rec.label,
            })
        }
        Task::Ner => {
            let rec: NerRecord = serde_json::from_str(line).map_err(|e| malformed(e.to_string()))?;
            if rec.tokens.len() != rec.tags.len() {
                return Err(malformed(format!(
                    "{} tokens vs {} tags",
                    rec.tokens.len(),
                    rec.tags.len()
                )));
            }
            if rec.tokens.is_empty() {
                return Err(malformed("empty token list".into()));
            }
            Ok(Sample::Ner {
                tokens: rec.tokens.iter().map(|t| collapse_newlines(t)).collect(),
                tags: rec.tags,
            })
        }
        Task::Qa => {
            let rec: QaRecord = serde_json::from_str(line).map_err(|e| malformed(e.to_string()))?;
            if rec.answers.is_empty() {
                return Err(malformed("QA record needs at least one answer".into()));
            }
            let (context, map) = collapse_newlines_with_map(&rec.context);
            let context_chars: Vec<char> = context.chars().collect();
            let mut answers = Vec::with_capacity(rec.answers.len());
            for ans in rec.answers {
                let text = collapse_newlines(&ans.text);
                let start = *map.get(ans.start).ok_or_else(|| {
                    malformed(format!("answer offset {} outside context", ans.start))
                })?;
                let want: Vec<char> = text.chars().collect();
                let got = context_chars.get(start..start + want.len());
                if got != Some(want.as_slice()) {
                    return Err(malformed(format!(
                        "answer {text:?} does not occur at char offset {start}"
                    )));
                }
                answers.push(QaAnswer { text, start });
            }
            Ok(Sample::Qa {
                context,
                question: collapse_newlines(&rec.question),
                answers,
            })
        }
    }
}

fn load_split(
    dir: &Path,
    spec: &DatasetSpec,
    split: &'static str,
    expected: usize,
) -> Result<Vec<Sample>, CorpusError> {
    let path = dir.join(format!("{split}.jsonl"));
    let file = fs::File::open(&path).map_err(|e| io_err(&path, e))?;
    let mut samples = Vec::with_capacity(expected);
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| io_err(&path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let sample = parse_record(spec, split, idx + 1, &line)?;
        if let Sample::Ner { tags, .. } = &sample {
            validate_bio(tags, &spec.ner_tags).map_err(|message| CorpusError::InvalidBio {
                split,
                index: samples.len(),
                message,
            })?;
        }
        samples.push(sample);
    }
    if samples.len() != expected {
        return Err(CorpusError::SplitSizeMismatch {
            split,
            expected,
            actual: samples.len(),
        });
    }
    Ok(samples)
}

/// Loads a bundle directory against a spec, validating record shape, BIO
/// consistency, QA answer offsets, and split sizes.
pub fn load_dataset(dir: &Path, spec: &DatasetSpec) -> Result<Dataset, CorpusError> {
    let spec = spec.clone().validated()?;
    let train = load_split(dir, &spec, "train", spec.split_sizes.train)?;
    let val = load_split(dir, &spec, "val", spec.split_sizes.val)?;
    let test = load_split(dir, &spec, "test", spec.split_sizes.test)?;
    Ok(Dataset { spec, train, val, test })
}

fn record_json(spec: &DatasetSpec, sample: &Sample) -> Result<String, CorpusError> {
    let value = match (spec.task, sample) {
        (Task::Sent | Task::La, Sample::Classification { text, label }) => {
            serde_json::to_string(&ClsRecord {
                text: text.clone(),
                label: label.clone(),
            })
        }
        (Task::Ner, Sample::Ner { tokens, tags }) => serde_json::to_string(&NerRecord {
            tokens: tokens.clone(),
            tags: tags.clone(),
        }),
        (Task::Qa, Sample::Qa { context, question, answers }) => serde_json::to_string(&QaRecord {
            context: context.clone(),
            question: question.clone(),
            answers: answers.clone(),
        }),
        _ => {
            return Err(CorpusError::InvalidSpec(format!(
                "sample kind does not match task {:?}",
                spec.task
            )))
        }
    };
    value.map_err(|e| CorpusError::InvalidSpec(e.to_string()))
}

/// Writes a bundle directory (manifest plus three splits).
pub fn save_dataset(dir: &Path, dataset: &Dataset) -> Result<(), CorpusError> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let manifest = dir.join("manifest.json");
    let spec_json = serde_json::to_string_pretty(&dataset.spec)
        .map_err(|e| CorpusError::InvalidSpec(e.to_string()))?;
    fs::write(&manifest, spec_json).map_err(|e| io_err(&manifest, e))?;
    for (split, samples) in [
        ("train", &dataset.train),
        ("val", &dataset.val),
        ("test", &dataset.test),
    ] {
        let path = dir.join(format!("{split}.jsonl"));
        let mut out = fs::File::create(&path).map_err(|e| io_err(&path, e))?;
        for sample in samples.iter() {
            writeln!(out, "{}", record_json(&dataset.spec, sample)?).map_err(|e| io_err(&path, e))?;
        }
    }
    Ok(())
}
