//! Per-cycle exposure masks.
//!
//! A synthesis cycle shines light through a mask; exposed (true) spots
//! are deprotected and receive the cycle's base. A spot must therefore
//! be exposed at exactly the cycles where its oligo consumes the
//! synthesis sequence, under the leftmost embedding: keep a pointer per
//! oligo and advance it whenever the current cycle's base matches.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::model::ArraySpec;
use crate::superseq::{SynthesisPlan, SynthesisSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MaskError {
    #[error("sequence for array {array_id} is not a supersequence of the oligo at spot ({row},{col})")]
    NotSupersequence {
        array_id: usize,
        row: usize,
        col: usize,
    },
}

/// One cycle's m x m exposure grid; true cells transmit light.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mask {
    array_id: usize,
    cycle: usize,
    side: usize,
    cells: Vec<bool>,
}

impl Mask {
    pub fn new_empty(array_id: usize, cycle: usize, side: usize) -> Self {
        Mask {
            array_id,
            cycle,
            side,
            cells: vec![false; side * side],
        }
    }

    /// Build a mask from row strings of '0'/'1', e.g. `["010", "111"]`.
    /// Intended for tests and small fixtures; panics on ragged input.
    pub fn from_rows(array_id: usize, cycle: usize, rows: &[&str]) -> Self {
        let side = rows.len();
        let mut mask = Mask::new_empty(array_id, cycle, side);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), side, "mask rows must form a square");
            for (c, ch) in row.chars().enumerate() {
                mask.set(r, c, ch == '1');
            }
        }
        mask
    }

    pub fn array_id(&self) -> usize {
        self.array_id
    }

    /// Index of this mask's cycle in the synthesis sequence.
    pub fn cycle(&self) -> usize {
        self.cycle
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.side + col]
    }

    pub fn set(&mut self, row: usize, col: usize, exposed: bool) {
        self.cells[row * self.side + col] = exposed;
    }

    pub fn exposed_count(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }
}

/// All masks of one array, ordered by cycle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaskSet {
    array_id: usize,
    side: usize,
    masks: Vec<Mask>,
}

impl MaskSet {
    pub fn array_id(&self) -> usize {
        self.array_id
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// Number of masks, equal to the synthesis sequence length.
    pub fn p(&self) -> usize {
        self.masks.len()
    }

    pub fn masks(&self) -> &[Mask] {
        &self.masks
    }
}

/// Generate the `p = |seq|` masks of one array from its oligos and a
/// synthesis sequence, exposing each spot at exactly the cycles its
/// oligo consumes under the leftmost embedding.
///
/// Fails with [`MaskError::NotSupersequence`] if any oligo does not
/// embed into `seq`; empty spots are never exposed.
pub fn generate_masks(array: &ArraySpec, seq: &SynthesisSequence) -> Result<MaskSet, MaskError> {
    let side = array.side_m();
    let array_id = seq.array_id();
    let mut pointers = vec![0usize; array.oligos().len()];
    let mut masks: Vec<Mask> = (0..seq.len())
        .map(|t| Mask::new_empty(array_id, t, side))
        .collect();

    for (t, base) in seq.bases().iter().enumerate() {
        for (j, oligo) in array.oligos().iter().enumerate() {
            if oligo.bases().get(pointers[j]) == Some(base) {
                let (row, col) = array.spot_of(j);
                masks[t].set(row, col, true);
                pointers[j] += 1;
            }
        }
    }

    if let Some(j) = (0..pointers.len()).find(|&j| pointers[j] < array.oligos()[j].len()) {
        let (row, col) = array.spot_of(j);
        return Err(MaskError::NotSupersequence { array_id, row, col });
    }
    Ok(MaskSet {
        array_id,
        side,
        masks,
    })
}

/// Which arrays take part in each cycle of the shared supersequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DepositionSchedule {
    participants: Vec<Vec<usize>>,
}

impl DepositionSchedule {
    /// Total deposition runs, equal to `|s*|`.
    pub fn cycles(&self) -> usize {
        self.participants.len()
    }

    /// Array ids deprotected and deposited on at cycle `t`, ascending.
    pub fn participants(&self, t: usize) -> &[usize] {
        &self.participants[t]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.participants.iter().map(Vec::as_slice)
    }

    /// Number of cycles array `array_id` takes part in; equals the
    /// length of that array's own synthesis sequence.
    pub fn participation_count(&self, array_id: usize) -> usize {
        self.participants
            .iter()
            .filter(|p| p.contains(&array_id))
            .count()
    }
}

/// Walk the shared supersequence once and record, for every cycle, the
/// arrays whose own sequence front matches the cycle's base (advancing
/// those fronts). The plan's supersequence property guarantees every
/// sequence is fully consumed.
pub fn deposition_schedule(plan: &SynthesisPlan) -> DepositionSchedule {
    let sequences: &[SynthesisSequence] = plan.sequences();
    let mut pointers = vec![0usize; sequences.len()];
    let mut participants = Vec::with_capacity(plan.super_seq().len());
    for base in plan.super_seq() {
        let mut round = Vec::new();
        for (j, seq) in sequences.iter().enumerate() {
            if seq.bases().get(pointers[j]) == Some(base) {
                round.push(seq.array_id());
                pointers[j] += 1;
            }
        }
        participants.push(round);
    }
    debug_assert!(pointers
        .iter()
        .zip(sequences)
        .all(|(&p, s)| p == s.len()));
    DepositionSchedule { participants }
}
