//! PPT tests across cuts and Schmidt-rank-two distillability witnesses.

mod classify;
mod ppt;
mod seesaw;
mod witness;

pub use classify::{classify, ClassificationReport, ClassifyOptions, Evidence, Verdict};
pub use ppt::{ppt_all_cuts, ppt_check, PptCheck};
pub use seesaw::{seesaw_witness_search, RestartSummary, SeesawOptions, SeesawReport, StartKind};
pub use witness::{
    explicit_witnesses, k1_optimal_ratio, k1_threshold, k1_witness_closed_form, witness_value,
    ExplicitWitness, NCopyOperator, WitnessResult,
};
