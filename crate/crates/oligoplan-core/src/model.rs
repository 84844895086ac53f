//! Domain types shared by the whole toolkit, plus the seeded dataset
//! generator used to emulate benchmark inputs.

use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Longest oligo the toolkit accepts. Production probes run 25-50 bases;
/// the cap only guards against nonsensical inputs.
pub const MAX_OLIGO_LEN: usize = 100;

/// One DNA base. The derived ordering (`A < C < G < T`) is the
/// tie-breaking order used everywhere a deterministic choice is needed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Nucleotide {
    A,
    C,
    G,
    T,
}

impl Nucleotide {
    /// All four bases in tie-break order.
    pub const ALL: [Nucleotide; 4] = [Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::T];

    pub fn from_char(ch: char) -> Result<Self, ModelError> {
        match ch.to_ascii_uppercase() {
            'A' => Ok(Nucleotide::A),
            'C' => Ok(Nucleotide::C),
            'G' => Ok(Nucleotide::G),
            'T' => Ok(Nucleotide::T),
            other => Err(ModelError::InvalidBase { ch: other }),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Nucleotide::A => 'A',
            Nucleotide::C => 'C',
            Nucleotide::G => 'G',
            Nucleotide::T => 'T',
        }
    }

    /// Index in [`Nucleotide::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }
}

impl core::fmt::Display for Nucleotide {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Parse an uppercase/lowercase base string such as `"ACGT"`.
pub fn seq_from_str(s: &str) -> Result<Vec<Nucleotide>, ModelError> {
    s.chars().map(Nucleotide::from_char).collect()
}

pub fn seq_to_string(seq: &[Nucleotide]) -> String {
    seq.iter().map(|b| b.as_char()).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("invalid base character {ch:?}")]
    InvalidBase { ch: char },
    #[error("oligo must have at least one base")]
    EmptyOligo,
    #[error("oligo length {len} exceeds the maximum of {MAX_OLIGO_LEN}")]
    OligoTooLong { len: usize },
    #[error("{count} oligos exceed the {capacity} spots of a {side}x{side} array")]
    TooManyOligos {
        count: usize,
        capacity: usize,
        side: usize,
    },
    #[error("an array set needs at least one array")]
    NoArrays,
    #[error("arrays in one set must share a side length (found {first} and {other})")]
    MixedSides { first: usize, other: usize },
    #[error("parameter {name} must be at least 1")]
    ZeroParam { name: &'static str },
    #[error("oligo length {oligo_len} exceeds gene length {gene_len}")]
    OligoLongerThanGene { oligo_len: usize, gene_len: usize },
    #[error("{n_genes} genes cannot populate {n_arrays} arrays")]
    TooFewGenes { n_genes: usize, n_arrays: usize },
}

/// A short DNA strand synthesized base-by-base at one array spot.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Oligo {
    bases: Vec<Nucleotide>,
}

impl Oligo {
    pub fn new(bases: Vec<Nucleotide>) -> Result<Self, ModelError> {
        if bases.is_empty() {
            return Err(ModelError::EmptyOligo);
        }
        if bases.len() > MAX_OLIGO_LEN {
            return Err(ModelError::OligoTooLong { len: bases.len() });
        }
        Ok(Oligo { bases })
    }

    pub fn parse(s: &str) -> Result<Self, ModelError> {
        Oligo::new(seq_from_str(s)?)
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn bases(&self) -> &[Nucleotide] {
        &self.bases
    }
}

impl AsRef<[Nucleotide]> for Oligo {
    fn as_ref(&self) -> &[Nucleotide] {
        &self.bases
    }
}

/// One array of the batch: an `m x m` grid of spots filled row by row,
/// left to right. The spot of oligo `j` is `(j / m, j % m)`; trailing
/// spots beyond `oligos.len()` stay empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArraySpec {
    side_m: usize,
    oligos: Vec<Oligo>,
}

impl ArraySpec {
    pub fn new(side_m: usize, oligos: Vec<Oligo>) -> Result<Self, ModelError> {
        if side_m == 0 {
            return Err(ModelError::ZeroParam { name: "side_m" });
        }
        let capacity = side_m * side_m;
        if oligos.len() > capacity {
            return Err(ModelError::TooManyOligos {
                count: oligos.len(),
                capacity,
                side: side_m,
            });
        }
        Ok(ArraySpec { side_m, oligos })
    }

    pub fn side_m(&self) -> usize {
        self.side_m
    }

    pub fn oligos(&self) -> &[Oligo] {
        &self.oligos
    }

    /// `(row, col)` of the spot holding oligo index `j`.
    pub fn spot_of(&self, j: usize) -> (usize, usize) {
        (j / self.side_m, j % self.side_m)
    }

    pub fn oligo_at(&self, row: usize, col: usize) -> Option<&Oligo> {
        if row >= self.side_m || col >= self.side_m {
            return None;
        }
        self.oligos.get(row * self.side_m + col)
    }

    /// Length of the longest oligo placed on this array (0 if empty).
    pub fn max_oligo_len(&self) -> usize {
        self.oligos.iter().map(Oligo::len).max().unwrap_or(0)
    }
}

/// The batch to be planned: one or more arrays sharing a side length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArraySet {
    arrays: Vec<ArraySpec>,
}

impl ArraySet {
    pub fn new(arrays: Vec<ArraySpec>) -> Result<Self, ModelError> {
        let first = match arrays.first() {
            Some(a) => a.side_m(),
            None => return Err(ModelError::NoArrays),
        };
        if let Some(bad) = arrays.iter().find(|a| a.side_m() != first) {
            return Err(ModelError::MixedSides {
                first,
                other: bad.side_m(),
            });
        }
        Ok(ArraySet { arrays })
    }

    pub fn arrays(&self) -> &[ArraySpec] {
        &self.arrays
    }

    pub fn len(&self) -> usize {
        self.arrays.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least one array by construction
    }

    pub fn side_m(&self) -> usize {
        self.arrays[0].side_m()
    }
}

/// Parameters of the simulated dataset generator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DatasetParams {
    /// Number of genes; each gene contributes exactly one oligo.
    pub n_genes: usize,
    /// Length of each random gene.
    pub gene_len: usize,
    /// Length of the substring extracted from each gene.
    pub oligo_len: usize,
    pub n_arrays: usize,
    pub side_m: usize,
    pub seed: u64,
}

impl DatasetParams {
    pub fn validate(&self) -> Result<(), ModelError> {
        for (name, value) in [
            ("n_genes", self.n_genes),
            ("gene_len", self.gene_len),
            ("oligo_len", self.oligo_len),
            ("n_arrays", self.n_arrays),
            ("side_m", self.side_m),
        ] {
            if value == 0 {
                return Err(ModelError::ZeroParam { name });
            }
        }
        if self.oligo_len > self.gene_len {
            return Err(ModelError::OligoLongerThanGene {
                oligo_len: self.oligo_len,
                gene_len: self.gene_len,
            });
        }
        if self.oligo_len > MAX_OLIGO_LEN {
            return Err(ModelError::OligoTooLong {
                len: self.oligo_len,
            });
        }
        if self.n_genes < self.n_arrays {
            return Err(ModelError::TooFewGenes {
                n_genes: self.n_genes,
                n_arrays: self.n_arrays,
            });
        }
        Ok(())
    }
}

fn generate_genes(rng: &mut ChaCha8Rng, n_genes: usize, gene_len: usize) -> Vec<Vec<Nucleotide>> {
    (0..n_genes)
        .map(|_| {
            (0..gene_len)
                .map(|_| Nucleotide::ALL[rng.random_range(0..4)])
                .collect()
        })
        .collect()
}

/// Build a seeded random dataset: `n_genes` uniform genes of `gene_len`
/// bases, one uniform substring of `oligo_len` bases per gene, filled
/// into arrays row-major in gene order (each array takes up to `m*m`
/// oligos, later arrays take what remains).
///
/// The output is fully determined by `params` including the seed.
pub fn generate_dataset(params: &DatasetParams) -> Result<ArraySet, ModelError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let genes = generate_genes(&mut rng, params.n_genes, params.gene_len);
    let mut oligos = Vec::with_capacity(params.n_genes);
    for gene in &genes {
        let start = rng.random_range(0..=params.gene_len - params.oligo_len);
        oligos.push(Oligo::new(gene[start..start + params.oligo_len].to_vec())?);
    }

    let capacity = params.side_m * params.side_m;
    let mut iter = oligos.into_iter();
    let mut arrays = Vec::with_capacity(params.n_arrays);
    for _ in 0..params.n_arrays {
        let chunk: Vec<Oligo> = iter.by_ref().take(capacity).collect();
        arrays.push(ArraySpec::new(params.side_m, chunk)?);
    }
    ArraySet::new(arrays)
}
