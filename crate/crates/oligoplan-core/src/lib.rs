//! Planning algorithms for manufacturing batches of photolithographic
//! oligo arrays.
//!
//! Given the oligos to be synthesized on each array of a batch, this crate
//! computes:
//!
//! * per-array synthesis sequences and a merged common supersequence that
//!   lets several arrays share deposition runs ([`superseq`]),
//! * the per-cycle binary exposure masks implied by a synthesis sequence
//!   ([`maskgen`]),
//! * a decomposition of those masks into reusable 1×ℓ rectangles together
//!   with shape inventories and statistics ([`rectcover`]),
//! * manufacturing schedules (serial, pipelined, deposition-merged) with
//!   time totals and reduction ratios ([`pipeline`]).
//!
//! [`oracle`] holds small brute-force references used by the test suites
//! to validate the heuristics above.
//!
//! The crate is `no_std` (alloc required); all IO, file formats and the
//! command line live in the companion `oligoplan` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod maskgen;
pub mod model;
pub mod oracle;
pub mod pipeline;
pub mod rectcover;
pub mod superseq;

pub use maskgen::{deposition_schedule, generate_masks, DepositionSchedule, Mask, MaskSet};
pub use model::{generate_dataset, ArraySet, ArraySpec, DatasetParams, Nucleotide, Oligo};
pub use pipeline::{
    reduction_ratio, simple_streamline, smart_streamline, straight_schedule, ArrayJob, CostModel,
    ScheduleMode, ScheduleReport, StageTimes,
};
pub use rectcover::{decompose_mask, CoverMode, Rect, ShapeInventory};
pub use superseq::{
    exact_scs_dp, greedy_scs, is_supersequence, merge_plan, MergeMethod, SynthesisPlan,
    SynthesisSequence,
};
