//! Built-in dataset catalogue: identity, language, task, shot count, split
//! shape, and metric for every supported benchmark dataset.

use super::{CorpusError, DatasetSpec, Language, Metric, SplitSizes, Task};
use std::collections::BTreeMap;
use std::sync::OnceLock;

fn spec(
    id: &str,
    language: Language,
    task: Task,
    num_shots: usize,
    test: usize,
    metric: Metric,
) -> DatasetSpec {
    DatasetSpec {
        id: id.to_string(),
        language,
        task,
        num_shots,
        split_sizes: SplitSizes { train: 1024, val: 256, test },
        metric,
        ner_tags: vec![],
        label_overrides: BTreeMap::new(),
    }
    .validated()
    .expect("built-in spec must validate")
}

/// All built-in dataset specs, in catalogue order (NER, sentiment,
/// acceptability, QA; northern languages first within each task).
pub fn builtin_specs() -> &'static [DatasetSpec] {
    static SPECS: OnceLock<Vec<DatasetSpec>> = OnceLock::new();
    SPECS.get_or_init(|| {
        use Language::*;
        use Metric::*;
        use Task::*;
        vec![
            spec("dansk", Danish, Ner, 8, 1024, MicroF1),
            spec("suc3", Swedish, Ner, 8, 2048, MicroF1),
            spec("norne-nb", Norwegian, Ner, 8, 2048, MicroF1),
            spec("norne-nn", Norwegian, Ner, 8, 2048, MicroF1),
            spec("mim-gold-ner", Icelandic, Ner, 8, 2048, MicroF1),
            spec("fone", Faroese, Ner, 8, 2048, MicroF1),
            spec("germeval", German, Ner, 8, 1024, MicroF1),
            spec("conll-nl", Dutch, Ner, 8, 1024, MicroF1),
            spec("conll-en", English, Ner, 8, 2048, MicroF1),
            spec("angry-tweets", Danish, Sent, 12, 2048, MacroF1),
            spec("swerec", Swedish, Sent, 12, 2048, MacroF1),
            spec("norec", Norwegian, Sent, 12, 2048, MacroF1),
            spec("sb10k", German, Sent, 12, 1024, MacroF1),
            spec("dutch-social", Dutch, Sent, 12, 1024, MacroF1),
            spec("sst5", English, Sent, 12, 2048, MacroF1),
            spec("scala-da", Danish, La, 12, 2048, Mcc),
            spec("scala-sv", Swedish, La, 12, 2048, Mcc),
            spec("scala-nb", Norwegian, La, 12, 2048, Mcc),
            spec("scala-nn", Norwegian, La, 12, 2048, Mcc),
            spec("scala-is", Icelandic, La, 12, 2048, Mcc),
            spec("scala-fo", Faroese, La, 12, 1024, Mcc),
            spec("scala-de", German, La, 12, 2048, Mcc),
            spec("scala-nl", Dutch, La, 12, 2048, Mcc),
            spec("scala-en", English, La, 12, 2048, Mcc),
            spec("scandiqa-da", Danish, Qa, 4, 2048, QaEmF1),
            spec("scandiqa-sv", Swedish, Qa, 4, 2048, QaEmF1),
            spec("norquad", Norwegian, Qa, 2, 2048, QaEmF1),
            spec("nqii", Icelandic, Qa, 4, 1024, QaEmF1),
            spec("germanquad", German, Qa, 4, 2048, QaEmF1),
            spec("squad-nl", Dutch, Qa, 4, 2048, QaEmF1),
            spec("squad", English, Qa, 4, 2048, QaEmF1),
        ]
    })
}

/// Looks up a built-in spec by dataset id.
pub fn spec_for(id: &str) -> Result<&'static DatasetSpec, CorpusError> {
    builtin_specs()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| CorpusError::UnknownDataset(id.to_string()))
}
