//! Desk-scale testbed for whether seq2seq models generalize hierarchically or
//! linearly on four English transduction tasks (question formation, tense
//! reinflection, negation, reflexive anaphora).
//!
//! The pipeline is: sample sentences from task grammars ([`grammar`]), apply
//! competing symbolic transformation rules to build deliberately ambiguous
//! datasets ([`tasks`], [`data`]), train encoder-decoder models on them
//! ([`tensor`], [`models`], [`train`]), and measure which generalization the
//! models picked up on a withheld GEN split ([`eval`]).
//!
//! The `hiergen` binary orchestrates the full experiment grid; see the README.

pub mod data;
pub mod eval;
pub mod experiment;
pub mod grammar;
pub mod models;
pub mod tasks;
pub mod tensor;
pub mod train;
