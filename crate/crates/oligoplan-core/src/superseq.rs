//! Synthesis sequences and common supersequences.
//!
//! Every array needs a synthesis sequence that contains each of its
//! oligos as a subsequence; merging the per-array sequences into one
//! common supersequence lets several arrays share deposition runs. The
//! merge heuristic is majority-merge: repeatedly emit the base that is
//! the current front character of the most inputs. Small instances can
//! be solved exactly by a shortest-path search over the position
//! lattice.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::model::{ArraySet, Nucleotide};

/// Lattice size cap for [`exact_scs_dp`].
pub const MAX_LATTICE_CELLS: u128 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperseqError {
    #[error("at least one input sequence is required")]
    NoInput,
    #[error("exact search supports at most 3 sequences (got {n})")]
    TooManyStrings { n: usize },
    #[error("position lattice of {cells} cells exceeds the {MAX_LATTICE_CELLS} cap")]
    LatticeTooLarge { cells: u128 },
}

/// The deposition order for one array; its length is the number of
/// masks/cycles the array needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SynthesisSequence {
    array_id: usize,
    bases: Vec<Nucleotide>,
}

impl SynthesisSequence {
    pub fn new(array_id: usize, bases: Vec<Nucleotide>) -> Self {
        SynthesisSequence { array_id, bases }
    }

    pub fn array_id(&self) -> usize {
        self.array_id
    }

    pub fn bases(&self) -> &[Nucleotide] {
        &self.bases
    }

    /// Mask count `p` of this array.
    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }
}

impl AsRef<[Nucleotide]> for SynthesisSequence {
    fn as_ref(&self) -> &[Nucleotide] {
        &self.bases
    }
}

/// How per-array sequences are merged into the shared supersequence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MergeMethod {
    /// Majority-merge heuristic; any number of arrays.
    Greedy,
    /// Lattice shortest path; at most 3 arrays.
    Exact,
}

/// Per-array sequences plus their merged common supersequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SynthesisPlan {
    sequences: Vec<SynthesisSequence>,
    super_seq: Vec<Nucleotide>,
    steps_reduced: usize,
}

impl SynthesisPlan {
    /// Assemble a plan from parts, checking the supersequence property.
    pub fn from_parts(
        sequences: Vec<SynthesisSequence>,
        super_seq: Vec<Nucleotide>,
    ) -> Result<Self, SuperseqError> {
        if sequences.is_empty() {
            return Err(SuperseqError::NoInput);
        }
        debug_assert!(sequences
            .iter()
            .all(|s| is_supersequence(&super_seq, s.bases())));
        let total: usize = sequences.iter().map(SynthesisSequence::len).sum();
        let steps_reduced = total - super_seq.len();
        Ok(SynthesisPlan {
            sequences,
            super_seq,
            steps_reduced,
        })
    }

    pub fn sequences(&self) -> &[SynthesisSequence] {
        &self.sequences
    }

    pub fn super_seq(&self) -> &[Nucleotide] {
        &self.super_seq
    }

    /// Deposition steps saved by merging: `sum(|s_i|) - |s*|`.
    pub fn steps_reduced(&self) -> usize {
        self.steps_reduced
    }
}

/// True iff `sub` embeds left-to-right into `sup`.
pub fn is_supersequence(sup: &[Nucleotide], sub: &[Nucleotide]) -> bool {
    let mut it = sup.iter();
    sub.iter().all(|b| it.any(|s| s == b))
}

/// Majority-merge common supersequence.
///
/// Repeatedly emits the base that is the current front character of the
/// most unfinished inputs (ties broken `A < C < G < T`) and advances all
/// matching fronts. The output length is at most the total input length.
pub fn greedy_scs<S: AsRef<[Nucleotide]>>(inputs: &[S]) -> Vec<Nucleotide> {
    // Bucket the unfinished inputs by front base so each step costs
    // O(#advanced) rather than O(#inputs).
    let mut buckets: [Vec<usize>; 4] = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    let mut pos = vec![0usize; inputs.len()];
    let mut remaining = 0usize;
    for (i, s) in inputs.iter().enumerate() {
        if let Some(front) = s.as_ref().first() {
            buckets[front.index()].push(i);
            remaining += 1;
        }
    }

    let mut out = Vec::new();
    while remaining > 0 {
        let best = (0..4).max_by_key(|&b| (buckets[b].len(), 3 - b)).unwrap();
        debug_assert!(!buckets[best].is_empty());
        out.push(Nucleotide::ALL[best]);
        let advancing = core::mem::take(&mut buckets[best]);
        for i in advancing {
            pos[i] += 1;
            match inputs[i].as_ref().get(pos[i]) {
                Some(front) => buckets[front.index()].push(i),
                None => remaining -= 1,
            }
        }
    }
    out
}

/// Minimum-length common supersequence of up to 3 sequences, by
/// breadth-first search over the position lattice.
///
/// Each search step emits one base and advances every input whose front
/// matches it; the lattice has `prod(|s_i| + 1)` states and must stay
/// within [`MAX_LATTICE_CELLS`]. Any shortest supersequence may be
/// returned (ties resolved toward `A < C < G < T`).
pub fn exact_scs_dp<S: AsRef<[Nucleotide]>>(inputs: &[S]) -> Result<Vec<Nucleotide>, SuperseqError> {
    if inputs.is_empty() {
        return Err(SuperseqError::NoInput);
    }
    if inputs.len() > 3 {
        return Err(SuperseqError::TooManyStrings { n: inputs.len() });
    }
    // Pad to three dimensions; empty axes collapse to extent 1.
    let mut strings: [&[Nucleotide]; 3] = [&[], &[], &[]];
    for (slot, s) in strings.iter_mut().zip(inputs) {
        *slot = s.as_ref();
    }
    let dims = [
        strings[0].len() + 1,
        strings[1].len() + 1,
        strings[2].len() + 1,
    ];
    let cells = dims.iter().map(|&d| d as u128).product::<u128>();
    if cells > MAX_LATTICE_CELLS {
        return Err(SuperseqError::LatticeTooLarge { cells });
    }
    let cells = cells as usize;
    let index = |p: [usize; 3]| p[0] + dims[0] * (p[1] + dims[1] * p[2]);

    // Per state: 0 = unvisited, else 0b1000 | bitmask of the axes that
    // advanced on the step that first reached it.
    const VISITED: u8 = 0b1000;
    let mut back = vec![0u8; cells];
    let start = [0usize; 3];
    let goal = [strings[0].len(), strings[1].len(), strings[2].len()];
    back[index(start)] = VISITED;
    let mut queue = VecDeque::new();
    queue.push_back(start);

    'bfs: while let Some(state) = queue.pop_front() {
        if state == goal {
            break;
        }
        for base in Nucleotide::ALL {
            let mut next = state;
            let mut mask = 0u8;
            for axis in 0..3 {
                if strings[axis].get(state[axis]) == Some(&base) {
                    next[axis] += 1;
                    mask |= 1 << axis;
                }
            }
            if mask == 0 {
                continue; // a base matching no front never helps
            }
            let slot = &mut back[index(next)];
            if *slot == 0 {
                *slot = VISITED | mask;
                if next == goal {
                    break 'bfs;
                }
                queue.push_back(next);
            }
        }
    }

    // Walk the advance masks back from the goal.
    let mut out = Vec::new();
    let mut state = goal;
    while state != start {
        let mask = back[index(state)] & 0b111;
        debug_assert_ne!(mask, 0, "goal unreachable");
        let mut prev = state;
        for axis in 0..3 {
            if mask & (1 << axis) != 0 {
                prev[axis] -= 1;
            }
        }
        let axis = mask.trailing_zeros() as usize;
        out.push(strings[axis][prev[axis]]);
        state = prev;
    }
    out.reverse();
    Ok(out)
}

/// Baseline per-array sequences: the cyclic string `ACGTACGT...`
/// truncated to four times the longest oligo on each array. Such a
/// string is a supersequence of every string of that oligo length.
pub fn periodic_sequences(arrays: &ArraySet) -> Vec<SynthesisSequence> {
    arrays
        .arrays()
        .iter()
        .enumerate()
        .map(|(id, array)| {
            let len = 4 * array.max_oligo_len();
            let bases = (0..len).map(|i| Nucleotide::ALL[i % 4]).collect();
            SynthesisSequence::new(id, bases)
        })
        .collect()
}

/// Per-array sequences by majority-merge over each array's own oligos.
pub fn greedy_sequences(arrays: &ArraySet) -> Vec<SynthesisSequence> {
    arrays
        .arrays()
        .iter()
        .enumerate()
        .map(|(id, array)| SynthesisSequence::new(id, greedy_scs(array.oligos())))
        .collect()
}

/// Merge per-array sequences into a [`SynthesisPlan`] whose shared
/// supersequence drives merged deposition.
pub fn merge_plan(
    sequences: Vec<SynthesisSequence>,
    method: MergeMethod,
) -> Result<SynthesisPlan, SuperseqError> {
    if sequences.is_empty() {
        return Err(SuperseqError::NoInput);
    }
    let super_seq = match method {
        MergeMethod::Greedy => greedy_scs(&sequences),
        MergeMethod::Exact => exact_scs_dp(&sequences)?,
    };
    SynthesisPlan::from_parts(sequences, super_seq)
}
