//! Task metrics: span micro-F1 for entity recognition, macro-F1 and Matthews
//! correlation for classification, and SQuAD-style EM/F1 for extractive QA,
//! plus the JSON-to-BIO projection that turns constrained generations into
//! taggable predictions.

use crate::corpus::Language;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MetricError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("sentence {index}: length mismatch: {left} tokens vs {right}")]
    SentenceLengthMismatch { index: usize, left: usize, right: usize },
    #[error("label {0:?} not in class set")]
    UnknownLabel(String),
    #[error("malformed BIO tag {0:?}")]
    MalformedTag(String),
}

/// A typed entity span over token indices, end exclusive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub tag: String,
    pub start: usize,
    pub end: usize,
}

/// Extracts entity spans from a BIO sequence.
///
/// `B-X` opens a span; `I-X` extends an open span of the same type, and is
/// treated as opening a span when nothing matching is open (lenient reading
/// of slightly malformed predictions).
pub fn bio_spans(tags: &[String]) -> Result<Vec<Span>, MetricError> {
    let mut spans = Vec::new();
    let mut open: Option<Span> = None;
    for (i, raw) in tags.iter().enumerate() {
        if raw == "O" {
            if let Some(span) = open.take() {
                spans.push(span);
            }
            continue;
        }
        let (kind, tag) = raw
            .split_once('-')
            .ok_or_else(|| MetricError::MalformedTag(raw.clone()))?;
        if kind != "B" && kind != "I" {
            return Err(MetricError::MalformedTag(raw.clone()));
        }
        let continues = kind == "I" && open.as_ref().is_some_and(|s| s.tag == tag);
        if continues {
            open.as_mut().unwrap().end = i + 1;
        } else {
            if let Some(span) = open.take() {
                spans.push(span);
            }
            open = Some(Span { tag: tag.to_string(), start: i, end: i + 1 });
        }
    }
    if let Some(span) = open {
        spans.push(span);
    }
    Ok(spans)
}

fn f1_from_counts(tp: f64, fp: f64, fn_: f64) -> f64 {
    let precision = if tp + fp > 0.0 { tp / (tp + fp) } else { 0.0 };
    let recall = if tp + fn_ > 0.0 { tp / (tp + fn_) } else { 0.0 };
    if precision + recall > 0.0 {
        2.0 * precision * recall / (precision + recall)
    } else {
        0.0
    }
}

/// Micro-averaged span F1 over a batch of sentences. Defined as 1.0 when
/// neither side contains any span.
pub fn ner_micro_f1(gold: &[Vec<String>], pred: &[Vec<String>]) -> Result<f64, MetricError> {
    if gold.len() != pred.len() {
        return Err(MetricError::LengthMismatch { left: gold.len(), right: pred.len() });
    }
    let (mut tp, mut fp, mut fn_) = (0.0f64, 0.0f64, 0.0f64);
    for (i, (g, p)) in gold.iter().zip(pred).enumerate() {
        if g.len() != p.len() {
            return Err(MetricError::SentenceLengthMismatch {
                index: i,
                left: g.len(),
                right: p.len(),
            });
        }
        let gs: std::collections::HashSet<Span> = bio_spans(g)?.into_iter().collect();
        let ps: std::collections::HashSet<Span> = bio_spans(p)?.into_iter().collect();
        tp += gs.intersection(&ps).count() as f64;
        fp += ps.difference(&gs).count() as f64;
        fn_ += gs.difference(&ps).count() as f64;
    }
    if tp + fp + fn_ == 0.0 {
        return Ok(1.0);
    }
    Ok(f1_from_counts(tp, fp, fn_))
}

/// Unweighted mean of per-class F1 over `classes`. A class with neither gold
/// nor predicted instances contributes 0.
pub fn macro_f1(gold: &[String], pred: &[String], classes: &[String]) -> Result<f64, MetricError> {
    if gold.len() != pred.len() {
        return Err(MetricError::LengthMismatch { left: gold.len(), right: pred.len() });
    }
    for label in gold.iter().chain(pred) {
        if !classes.iter().any(|c| c == label) {
            return Err(MetricError::UnknownLabel(label.clone()));
        }
    }
    let mut sum = 0.0;
    for class in classes {
        let (mut tp, mut fp, mut fn_) = (0.0f64, 0.0f64, 0.0f64);
        for (g, p) in gold.iter().zip(pred) {
            match (g == class, p == class) {
                (true, true) => tp += 1.0,
                (false, true) => fp += 1.0,
                (true, false) => fn_ += 1.0,
                (false, false) => {}
            }
        }
        sum += f1_from_counts(tp, fp, fn_);
    }
    Ok(sum / classes.len() as f64)
}

/// Matthews correlation coefficient for binary predictions; 0 when any
/// confusion margin is empty (the correlation is undefined there).
pub fn mcc(gold: &[bool], pred: &[bool]) -> Result<f64, MetricError> {
    if gold.len() != pred.len() {
        return Err(MetricError::LengthMismatch { left: gold.len(), right: pred.len() });
    }
    let (mut tp, mut tn, mut fp, mut fn_) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (&g, &p) in gold.iter().zip(pred) {
        match (g, p) {
            (true, true) => tp += 1.0,
            (false, false) => tn += 1.0,
            (false, true) => fp += 1.0,
            (true, false) => fn_ += 1.0,
        }
    }
    let denom = (tp + fp) * (tp + fn_) * (tn + fp) * (tn + fn_);
    if denom == 0.0 {
        return Ok(0.0);
    }
    Ok((tp * tn - fp * fn_) / denom.sqrt())
}

/// SQuAD-style answer normalization: lowercase, strip ASCII punctuation,
/// drop English articles (English only), collapse whitespace.
#[must_use]
pub fn normalize_answer(text: &str, language: Language) -> String {
    let lowered = text.to_lowercase();
    let stripped: String = lowered.chars().filter(|c| !c.is_ascii_punctuation()).collect();
    let tokens = stripped.split_whitespace().filter(|tok| {
        language != Language::English || !matches!(*tok, "a" | "an" | "the")
    });
    tokens.collect::<Vec<_>>().join(" ")
}

fn token_f1(pred: &str, gold: &str) -> f64 {
    if pred.is_empty() || gold.is_empty() {
        return f64::from(u8::from(pred == gold));
    }
    let mut counts: HashMap<&str, i64> = HashMap::new();
    for tok in gold.split_whitespace() {
        *counts.entry(tok).or_insert(0) += 1;
    }
    let mut common = 0i64;
    let mut pred_len = 0i64;
    for tok in pred.split_whitespace() {
        pred_len += 1;
        if let Some(c) = counts.get_mut(tok) {
            if *c > 0 {
                *c -= 1;
                common += 1;
            }
        }
    }
    if common == 0 {
        return 0.0;
    }
    let gold_len = gold.split_whitespace().count() as f64;
    let precision = common as f64 / pred_len as f64;
    let recall = common as f64 / gold_len;
    2.0 * precision * recall / (precision + recall)
}

/// Exact-match and token-overlap F1 against the best-matching gold answer.
pub fn qa_em_f1(
    prediction: &str,
    answers: &[String],
    language: Language,
) -> Result<(f64, f64), MetricError> {
    if answers.is_empty() {
        return Err(MetricError::LengthMismatch { left: 0, right: 0 });
    }
    let pred = normalize_answer(prediction, language);
    let mut best_em = 0.0f64;
    let mut best_f1 = 0.0f64;
    for answer in answers {
        let gold = normalize_answer(answer, language);
        best_em = best_em.max(f64::from(u8::from(pred == gold)));
        best_f1 = best_f1.max(token_f1(&pred, &gold));
    }
    Ok((best_em, best_f1))
}

/// Projects predicted entities onto token-level BIO tags.
///
/// `entities` pairs a canonical tag with its predicted surface strings, in
/// the order they should claim tokens (tag order first, then list order).
/// Each surface string claims the leftmost occurrence of its
/// whitespace-split form as a contiguous, case-insensitive, fully unclaimed
/// token subsequence; strings that match nowhere are dropped.
#[must_use]
pub fn json_to_bio(tokens: &[String], entities: &[(String, Vec<String>)]) -> Vec<String> {
    let lowered: Vec<String> = tokens.iter().map(|t| t.to_lowercase()).collect();
    let mut claimed = vec![false; tokens.len()];
    let mut tags: Vec<String> = vec!["O".to_string(); tokens.len()];
    for (tag, surfaces) in entities {
        for surface in surfaces {
            let want: Vec<String> = surface.split_whitespace().map(str::to_lowercase).collect();
            if want.is_empty() || want.len() > tokens.len() {
                continue;
            }
            'starts: for start in 0..=tokens.len() - want.len() {
                for (k, w) in want.iter().enumerate() {
                    if claimed[start + k] || &lowered[start + k] != w {
                        continue 'starts;
                    }
                }
                for k in 0..want.len() {
                    claimed[start + k] = true;
                    tags[start + k] = if k == 0 {
                        format!("B-{tag}")
                    } else {
                        format!("I-{tag}")
                    };
                }
                break;
            }
        }
    }
    tags
}
