//! Few-shot evaluation of text-generation backends on multilingual NLU tasks.
//!
//! The pipeline: [`corpus`] loads and validates task datasets, [`promptkit`]
//! renders few-shot prompts, [`evalengine`] drives a backend over ten
//! bootstrapped iterations (using [`genconstrain`] to mask decoding into
//! schema-valid JSON for entity recognition), [`metrics`] scores the
//! generations, and [`rankscore`] turns raw score vectors into
//! significance-aware aggregate rankings. [`harness`] ties it together behind
//! configuration files, result persistence, and leaderboard/analysis output.
//!
//! With the default `parallel` feature, iteration and aggregation loops run
//! on rayon; every parallel entry point has a `_serial` twin that produces
//! identical output, which the test suite and benches rely on.

pub mod corpus;
pub mod evalengine;
pub mod genconstrain;
pub mod harness;
pub mod metrics;
pub mod promptkit;
pub mod rankscore;
pub mod seed;
