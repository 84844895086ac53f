//! Greedy decomposition of masks into 1 x len rectangles.
//!
//! Masks are scanned row-major; every exposed spot not yet covered
//! seeds a rectangle: the maximal horizontal run of exposed cells
//! through it and (in H+V mode) the maximal vertical run are measured,
//! and the longer one is emitted (ties go horizontal). All cells of the
//! emitted run count as covered, so runs may overlap where a horizontal
//! and a vertical rectangle cross.
//!
//! Because a physical 1 x len piece can be rotated, inventories track
//! orientation-free lengths; an m x m mask can therefore never need
//! more than m distinct shapes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::maskgen::{Mask, MaskSet};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A placed rectangle: `len` cells from `(row, col)` rightward
/// (horizontal) or downward (vertical).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rect {
    pub orientation: Orientation,
    pub row: usize,
    pub col: usize,
    pub len: usize,
}

impl Rect {
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (row, col) = (self.row, self.col);
        let step = match self.orientation {
            Orientation::Horizontal => (0usize, 1usize),
            Orientation::Vertical => (1, 0),
        };
        (0..self.len).map(move |i| (row + i * step.0, col + i * step.1))
    }
}

/// Which run orientations the decomposition may use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoverMode {
    HorizontalOnly,
    HorizontalAndVertical,
}

/// Count of rectangles needed per shape (orientation-free length).
/// Counters merge by addition, so inventories can be reduced across
/// masks and arrays in any order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ShapeInventory {
    counts: BTreeMap<usize, u64>,
}

impl ShapeInventory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, len: usize) {
        *self.counts.entry(len).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: &ShapeInventory) {
        for (&len, &count) in &other.counts {
            *self.counts.entry(len).or_insert(0) += count;
        }
    }

    /// Number of distinct shapes present.
    pub fn distinct_shapes(&self) -> usize {
        self.counts.len()
    }

    pub fn total_rects(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, len: usize) -> u64 {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    /// `(length, count)` pairs in ascending length order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

fn horizontal_run(mask: &Mask, row: usize, col: usize) -> (usize, usize) {
    let mut start = col;
    while start > 0 && mask.get(row, start - 1) {
        start -= 1;
    }
    let mut end = col;
    while end + 1 < mask.side() && mask.get(row, end + 1) {
        end += 1;
    }
    (start, end - start + 1)
}

fn vertical_run(mask: &Mask, row: usize, col: usize) -> (usize, usize) {
    let mut start = row;
    while start > 0 && mask.get(start - 1, col) {
        start -= 1;
    }
    let mut end = row;
    while end + 1 < mask.side() && mask.get(end + 1, col) {
        end += 1;
    }
    (start, end - start + 1)
}

/// Decompose one mask into maximal 1 x len runs, row-major seed order.
/// The returned rectangles cover exactly the exposed cells; each cell
/// is covered at most twice (once per orientation).
pub fn decompose_mask(mask: &Mask, mode: CoverMode) -> Vec<Rect> {
    let side = mask.side();
    let mut examined = vec![false; side * side];
    let mut rects = Vec::new();
    for row in 0..side {
        for col in 0..side {
            if !mask.get(row, col) || examined[row * side + col] {
                continue;
            }
            let (h_start, h_len) = horizontal_run(mask, row, col);
            let rect = match mode {
                CoverMode::HorizontalOnly => Rect {
                    orientation: Orientation::Horizontal,
                    row,
                    col: h_start,
                    len: h_len,
                },
                CoverMode::HorizontalAndVertical => {
                    let (v_start, v_len) = vertical_run(mask, row, col);
                    if v_len > h_len {
                        Rect {
                            orientation: Orientation::Vertical,
                            row: v_start,
                            col,
                            len: v_len,
                        }
                    } else {
                        Rect {
                            orientation: Orientation::Horizontal,
                            row,
                            col: h_start,
                            len: h_len,
                        }
                    }
                }
            };
            for (r, c) in rect.cells() {
                examined[r * side + c] = true;
            }
            rects.push(rect);
        }
    }
    rects
}

/// Tally rectangles into a shape inventory, discarding orientation.
pub fn inventory(rects: &[Rect]) -> ShapeInventory {
    let mut inv = ShapeInventory::new();
    for rect in rects {
        inv.add(rect.len);
    }
    inv
}

/// The histogram rows backing the length-distribution report:
/// `(length, count)` ascending.
pub fn length_histogram(inv: &ShapeInventory) -> Vec<(usize, u64)> {
    inv.iter().collect()
}

/// Decomposition of every mask of one array, with the merged inventory.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrayDecomposition {
    pub array_id: usize,
    pub n_masks: usize,
    pub inventory: ShapeInventory,
}

/// Decompose all masks of an array and merge their inventories.
pub fn decompose_mask_set(set: &MaskSet, mode: CoverMode) -> ArrayDecomposition {
    let mut inv = ShapeInventory::new();
    for mask in set.masks() {
        inv.merge(&inventory(&decompose_mask(mask, mode)));
    }
    ArrayDecomposition {
        array_id: set.array_id(),
        n_masks: set.p(),
        inventory: inv,
    }
}

/// Per-array decomposition statistics.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct DecompositionStats {
    pub n_masks: usize,
    pub n_shapes: usize,
    pub n_rectangles: u64,
    pub rects_per_mask: f64,
}

pub fn stats(decomposition: &ArrayDecomposition) -> DecompositionStats {
    let n_rectangles = decomposition.inventory.total_rects();
    let rects_per_mask = if decomposition.n_masks == 0 {
        0.0
    } else {
        n_rectangles as f64 / decomposition.n_masks as f64
    };
    DecompositionStats {
        n_masks: decomposition.n_masks,
        n_shapes: decomposition.inventory.distinct_shapes(),
        n_rectangles,
        rects_per_mask,
    }
}

/// Batch-level averages over the per-array statistics, mirroring how
/// multi-array results are reported (mean masks, shapes and rectangles
/// per array; rectangles per mask from the totals).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct AggregateStats {
    pub n_arrays: usize,
    pub mean_masks: f64,
    pub mean_shapes: f64,
    pub mean_rectangles: f64,
    pub rects_per_mask: f64,
}

pub fn aggregate_stats(per_array: &[DecompositionStats]) -> AggregateStats {
    let n = per_array.len();
    if n == 0 {
        return AggregateStats {
            n_arrays: 0,
            mean_masks: 0.0,
            mean_shapes: 0.0,
            mean_rectangles: 0.0,
            rects_per_mask: 0.0,
        };
    }
    let total_masks: usize = per_array.iter().map(|s| s.n_masks).sum();
    let total_shapes: usize = per_array.iter().map(|s| s.n_shapes).sum();
    let total_rects: u64 = per_array.iter().map(|s| s.n_rectangles).sum();
    AggregateStats {
        n_arrays: n,
        mean_masks: total_masks as f64 / n as f64,
        mean_shapes: total_shapes as f64 / n as f64,
        mean_rectangles: total_rects as f64 / n as f64,
        rects_per_mask: if total_masks == 0 {
            0.0
        } else {
            total_rects as f64 / total_masks as f64
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maskgen::Mask;
    use crate::oracle::{min_rect_cover, TinyMask};
    use proptest::prelude::*;

    fn plus_sign() -> Mask {
        Mask::from_rows(0, 0, &["010", "111", "010"])
    }

    fn full(side: usize) -> Mask {
        let mut mask = Mask::new_empty(0, 0, side);
        for r in 0..side {
            for c in 0..side {
                mask.set(r, c, true);
            }
        }
        mask
    }

    #[test]
    fn empty_mask_needs_no_rectangles() {
        let mask = Mask::new_empty(0, 0, 4);
        assert!(decompose_mask(&mask, CoverMode::HorizontalOnly).is_empty());
        assert!(decompose_mask(&mask, CoverMode::HorizontalAndVertical).is_empty());
    }

    #[test]
    fn full_mask_decomposes_into_rows_in_both_modes() {
        for mode in [CoverMode::HorizontalOnly, CoverMode::HorizontalAndVertical] {
            let rects = decompose_mask(&full(4), mode);
            assert_eq!(rects.len(), 4);
            for (r, rect) in rects.iter().enumerate() {
                // Vertical runs tie at length 4 and horizontal wins.
                assert_eq!(
                    *rect,
                    Rect {
                        orientation: Orientation::Horizontal,
                        row: r,
                        col: 0,
                        len: 4
                    }
                );
            }
        }
    }

    #[test]
    fn plus_sign_with_both_orientations() {
        let rects = decompose_mask(&plus_sign(), CoverMode::HorizontalAndVertical);
        assert_eq!(
            rects,
            vec![
                Rect {
                    orientation: Orientation::Vertical,
                    row: 0,
                    col: 1,
                    len: 3
                },
                Rect {
                    orientation: Orientation::Horizontal,
                    row: 1,
                    col: 0,
                    len: 3
                },
            ]
        );
        assert_eq!(inventory(&rects).count(3), 2);
    }

    #[test]
    fn plus_sign_horizontal_only() {
        let rects = decompose_mask(&plus_sign(), CoverMode::HorizontalOnly);
        assert_eq!(
            rects,
            vec![
                Rect {
                    orientation: Orientation::Horizontal,
                    row: 0,
                    col: 1,
                    len: 1
                },
                Rect {
                    orientation: Orientation::Horizontal,
                    row: 1,
                    col: 0,
                    len: 3
                },
                Rect {
                    orientation: Orientation::Horizontal,
                    row: 2,
                    col: 1,
                    len: 1
                },
            ]
        );
    }

    #[test]
    fn inventory_projections() {
        assert!(inventory(&[]).is_empty());
        let inv = inventory(&decompose_mask(&full(5), CoverMode::HorizontalOnly));
        assert_eq!(inv.count(5), 5);
        assert_eq!(inv.distinct_shapes(), 1);
        assert_eq!(length_histogram(&inv), vec![(5, 5)]);
    }

    #[test]
    fn stats_of_a_single_full_mask() {
        let mut inv = ShapeInventory::new();
        for rect in decompose_mask(&full(4), CoverMode::HorizontalOnly) {
            inv.add(rect.len);
        }
        let d = ArrayDecomposition {
            array_id: 0,
            n_masks: 1,
            inventory: inv,
        };
        let s = stats(&d);
        assert_eq!(
            (s.n_masks, s.n_shapes, s.n_rectangles),
            (1, 1, 4)
        );
        assert!((s.rects_per_mask - 4.0).abs() < 1e-12);
    }

    #[test]
    fn aggregate_averages_per_array() {
        let a = DecompositionStats {
            n_masks: 10,
            n_shapes: 3,
            n_rectangles: 40,
            rects_per_mask: 4.0,
        };
        let b = DecompositionStats {
            n_masks: 30,
            n_shapes: 5,
            n_rectangles: 60,
            rects_per_mask: 2.0,
        };
        let agg = aggregate_stats(&[a, b]);
        assert_eq!(agg.n_arrays, 2);
        assert!((agg.mean_masks - 20.0).abs() < 1e-12);
        assert!((agg.mean_shapes - 4.0).abs() < 1e-12);
        assert!((agg.mean_rectangles - 50.0).abs() < 1e-12);
        assert!((agg.rects_per_mask - 2.5).abs() < 1e-12);
    }

    fn random_mask(side: usize, density: f64, seed: u64) -> Mask {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut mask = Mask::new_empty(0, 0, side);
        for r in 0..side {
            for c in 0..side {
                mask.set(r, c, rng.random_bool(density));
            }
        }
        mask
    }

    /// Independent horizontal-run counter for the count identity.
    fn count_horizontal_runs(mask: &Mask) -> usize {
        let mut runs = 0;
        for r in 0..mask.side() {
            let mut inside = false;
            for c in 0..mask.side() {
                let cell = mask.get(r, c);
                if cell && !inside {
                    runs += 1;
                }
                inside = cell;
            }
        }
        runs
    }

    fn assert_cover_invariants(mask: &Mask, rects: &[Rect]) {
        let side = mask.side();
        let mut cover = vec![0u8; side * side];
        for rect in rects {
            for (r, c) in rect.cells() {
                assert!(r < side && c < side, "rect leaves the grid");
                assert!(mask.get(r, c), "rect covers an unexposed cell");
                cover[r * side + c] += 1;
            }
            // Maximality: the cells just before and after the run are
            // off-grid or unexposed.
            match rect.orientation {
                Orientation::Horizontal => {
                    assert!(rect.col == 0 || !mask.get(rect.row, rect.col - 1));
                    let after = rect.col + rect.len;
                    assert!(after == side || !mask.get(rect.row, after));
                }
                Orientation::Vertical => {
                    assert!(rect.row == 0 || !mask.get(rect.row - 1, rect.col));
                    let after = rect.row + rect.len;
                    assert!(after == side || !mask.get(after, rect.col));
                }
            }
        }
        for r in 0..side {
            for c in 0..side {
                let n = cover[r * side + c];
                if mask.get(r, c) {
                    assert!(n >= 1, "exposed cell left uncovered");
                    assert!(n <= 2, "cell covered more than twice");
                } else {
                    assert_eq!(n, 0);
                }
            }
        }
    }

    #[test]
    fn cover_invariants_on_random_masks() {
        for seed in 0..30 {
            let density = 0.1 + 0.04 * (seed % 10) as f64;
            let mask = random_mask(12, density, seed);
            for mode in [CoverMode::HorizontalOnly, CoverMode::HorizontalAndVertical] {
                let rects = decompose_mask(&mask, mode);
                assert_cover_invariants(&mask, &rects);
                assert!(inventory(&rects).distinct_shapes() <= mask.side());
                assert_eq!(rects, decompose_mask(&mask, mode));
            }
            assert_eq!(
                decompose_mask(&mask, CoverMode::HorizontalOnly).len(),
                count_horizontal_runs(&mask)
            );
        }
    }

    #[test]
    fn greedy_never_beats_the_exact_cover_oracle() {
        for seed in 0..40 {
            let mask = random_mask(4, 0.4, 1000 + seed);
            let tiny = TinyMask::from_mask(&mask).unwrap();
            let (optimal, _) = min_rect_cover(&tiny);
            for mode in [CoverMode::HorizontalOnly, CoverMode::HorizontalAndVertical] {
                assert!(decompose_mask(&mask, mode).len() >= optimal);
            }
        }
    }

    proptest! {
        #[test]
        fn decomposition_invariants_hold(
            cells in proptest::collection::vec(any::<bool>(), 36..=36),
            hv in any::<bool>(),
        ) {
            let mut mask = Mask::new_empty(0, 0, 6);
            for (i, &cell) in cells.iter().enumerate() {
                mask.set(i / 6, i % 6, cell);
            }
            let mode = if hv {
                CoverMode::HorizontalAndVertical
            } else {
                CoverMode::HorizontalOnly
            };
            let rects = decompose_mask(&mask, mode);
            assert_cover_invariants(&mask, &rects);
            prop_assert!(inventory(&rects).distinct_shapes() <= 6);
        }
    }
}
