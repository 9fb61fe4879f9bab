//! Localized surface forms for canonical labels.
//!
//! Entity tags keep their capitalized surface form (they become JSON keys),
//! while classification labels are stored capitalized and lowercased at
//! render time by the prompt layer. Lookups are strict: a missing pair is an
//! error, never a silent fallback to English.

use super::{CorpusError, Language};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Mapping `(canonical label, language) -> localized surface form`.
#[derive(Debug, Clone, Default)]
pub struct LabelLexicon {
    entries: BTreeMap<(String, Language), String>,
}

impl LabelLexicon {
    #[must_use]
    pub fn new() -> LabelLexicon {
        LabelLexicon::default()
    }

    pub fn insert(&mut self, canonical: &str, language: Language, surface: &str) {
        self.entries
            .insert((canonical.to_string(), language), surface.to_string());
    }

    /// Strict lookup.
    pub fn localize(&self, canonical: &str, language: Language) -> Result<&str, CorpusError> {
        self.entries
            .get(&(canonical.to_string(), language))
            .map(String::as_str)
            .ok_or_else(|| CorpusError::MissingLabel {
                label: canonical.to_string(),
                language,
            })
    }

    /// A copy of this lexicon with per-dataset additions applied on top.
    #[must_use]
    pub fn with_overrides(
        &self,
        language: Language,
        overrides: &BTreeMap<String, String>,
    ) -> LabelLexicon {
        let mut out = self.clone();
        for (canonical, surface) in overrides {
            out.insert(canonical, language, surface);
        }
        out
    }

    /// Checks that no two canonical labels of one group share a surface form
    /// in any language where the whole group is present.
    pub fn check_injective(&self, groups: &[&[&str]]) -> Result<(), CorpusError> {
        for language in Language::ALL {
            for group in groups {
                let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
                for canonical in *group {
                    let Ok(surface) = self.localize(canonical, language) else {
                        continue;
                    };
                    if let Some(other) = seen.insert(surface, canonical) {
                        return Err(CorpusError::AmbiguousLexicon {
                            language,
                            a: other.to_string(),
                            b: canonical.to_string(),
                            surface: surface.to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// The built-in eight-language lexicon.
pub fn builtin_lexicon() -> &'static LabelLexicon {
    static LEXICON: OnceLock<LabelLexicon> = OnceLock::new();
    LEXICON.get_or_init(|| {
        use Language::*;
        let mut lex = LabelLexicon::new();
        // (language, PER, LOC, ORG)
        let ner = [
            (Danish, "Person", "Sted", "Organisation"),
            (Swedish, "Person", "Plats", "Organisation"),
            (Norwegian, "Person", "Sted", "Organisasjon"),
            (Icelandic, "Einstaklingur", "Staðsetning", "Stofnun"),
            (Faroese, "Persónur", "Staður", "Felagsskapur"),
            (German, "Person", "Ort", "Organisation"),
            (Dutch, "Persoon", "Locatie", "Organisatie"),
            (English, "Person", "Location", "Organization"),
        ];
        for (lang, per, loc, org) in ner {
            lex.insert("PER", lang, per);
            lex.insert("LOC", lang, loc);
            lex.insert("ORG", lang, org);
        }
        // (language, negative, neutral, positive) — only languages with a
        // sentiment dataset carry these.
        let sentiment = [
            (Danish, "Negativ", "Neutral", "Positiv"),
            (Swedish, "Negativ", "Neutral", "Positiv"),
            (Norwegian, "Negativ", "Nøytral", "Positiv"),
            (German, "Negativ", "Neutral", "Positiv"),
            (Dutch, "Negatief", "Neutraal", "Positief"),
            (English, "Negative", "Neutral", "Positive"),
        ];
        for (lang, neg, neu, pos) in sentiment {
            lex.insert("negative", lang, neg);
            lex.insert("neutral", lang, neu);
            lex.insert("positive", lang, pos);
        }
        // (language, correct, incorrect)
        let acceptability = [
            (Danish, "Ja", "Nej"),
            (Swedish, "Ja", "Nej"),
            (Norwegian, "Ja", "Nei"),
            (Icelandic, "Já", "Nei"),
            (Faroese, "Ja", "Nei"),
            (German, "Ja", "Nein"),
            (Dutch, "Ja", "Nee"),
            (English, "Yes", "No"),
        ];
        for (lang, yes, no) in acceptability {
            lex.insert("correct", lang, yes);
            lex.insert("incorrect", lang, no);
        }
        lex.check_injective(&[
            &["PER", "LOC", "ORG"],
            &["negative", "neutral", "positive"],
            &["correct", "incorrect"],
        ])
        .expect("built-in lexicon must be injective per group");
        lex
    })
}
