//! Bell-diagonal states ¼(I⊗I + Σ λ_i σ_i⊗σ_i) and their geometry.
//!
//! In λ-space the physical states form the tetrahedron with vertices
//! (−1,−1,−1), (−1,1,1), (1,−1,1), (1,1,−1); the separable ones form the
//! octahedron Σ|λ_i| ≤ 1; zero-discord states are the three coordinate axes.
//! Every Bell-diagonal state has x = 0 and is therefore lazy.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::fano::{FanoParams, TwoQubitState};

pub const REGION_TOL: f64 = 1e-9;

const VERTICES: [[f64; 3]; 4] = [[-1.0, -1.0, -1.0], [-1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [1.0, 1.0, -1.0]];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BellDiagError {
    #[error("axis must be 1, 2 or 3, got {0}")]
    Axis(usize),
    #[error("slice value {0} outside [-1, 1]")]
    Value(f64),
    #[error("grid must have at least 2 points per side, got {0}")]
    Grid(usize),
    #[error("census needs at least one sample")]
    NoSamples,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDiagPoint {
    pub lambda: [f64; 3],
}

impl BellDiagPoint {
    pub fn new(lambda: [f64; 3]) -> Self {
        Self { lambda }
    }

    pub fn compose(&self) -> TwoQubitState {
        FanoParams::bell_diagonal(self.lambda).compose()
    }

    /// Closed-form eigenvalues, in the order
    /// ¼{1−λ₁+λ₂+λ₃, 1+λ₁−λ₂+λ₃, 1+λ₁+λ₂−λ₃, 1−λ₁−λ₂−λ₃}.
    pub fn spectrum(&self) -> [f64; 4] {
        let [l1, l2, l3] = self.lambda;
        [
            0.25 * (1.0 - l1 + l2 + l3),
            0.25 * (1.0 + l1 - l2 + l3),
            0.25 * (1.0 + l1 + l2 - l3),
            0.25 * (1.0 - l1 - l2 - l3),
        ]
    }

    pub fn l1_norm(&self) -> f64 {
        self.lambda.iter().map(|l| l.abs()).sum()
    }

    /// Region label with boundary tolerance `tol`.
    ///
    /// Precedence: unphysical, then pure vertex, then zero discord, then the
    /// separable/entangled split of the remaining lazy states.
    pub fn region(&self, tol: f64) -> RegionLabel {
        if self.spectrum().iter().any(|&w| w < -tol) {
            return RegionLabel::Unphysical;
        }
        let at_vertex = VERTICES
            .iter()
            .any(|v| v.iter().zip(&self.lambda).all(|(a, b)| (a - b).abs() <= tol));
        if at_vertex {
            return RegionLabel::PureVertex;
        }
        if self.lambda.iter().filter(|l| l.abs() > tol).count() <= 1 {
            return RegionLabel::ZeroDiscord;
        }
        if self.l1_norm() <= 1.0 + tol {
            RegionLabel::LazySeparableDiscordant
        } else {
            RegionLabel::LazyEntangled
        }
    }

    /// Whether the point lies within `tol` of any region boundary.
    pub fn near_boundary(&self, tol: f64) -> bool {
        self.spectrum().iter().any(|w| w.abs() <= tol)
            || (self.l1_norm() - 1.0).abs() <= tol
            || self.lambda.iter().any(|l| l.abs() <= tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionLabel {
    Unphysical,
    ZeroDiscord,
    LazySeparableDiscordant,
    LazyEntangled,
    PureVertex,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 5] = [
        RegionLabel::Unphysical,
        RegionLabel::ZeroDiscord,
        RegionLabel::LazySeparableDiscordant,
        RegionLabel::LazyEntangled,
        RegionLabel::PureVertex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::Unphysical => "unphysical",
            RegionLabel::ZeroDiscord => "zero_discord",
            RegionLabel::LazySeparableDiscordant => "lazy_separable_discordant",
            RegionLabel::LazyEntangled => "lazy_entangled",
            RegionLabel::PureVertex => "pure_vertex",
        }
    }

    pub fn is_physical(self) -> bool {
        self != RegionLabel::Unphysical
    }

    pub fn is_separable(self) -> bool {
        matches!(self, RegionLabel::ZeroDiscord | RegionLabel::LazySeparableDiscordant)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RegionLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RegionLabel::ALL.into_iter().find(|l| l.as_str() == s).ok_or_else(|| format!("unknown region label {s:?}"))
    }
}

/// Counts from a uniform Monte Carlo sweep of the cube [−1,1]³.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub samples: u64,
    pub seed: u64,
    /// Indexed like [`RegionLabel::ALL`].
    pub counts: [u64; 5],
    /// Samples within the region tolerance of some boundary.
    pub boundary_hits: u64,
}

/// An estimated proportion with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fraction {
    pub value: f64,
    pub stderr: f64,
}

impl Fraction {
    fn binomial(hits: u64, trials: u64) -> Self {
        if trials == 0 {
            return Self { value: f64::NAN, stderr: f64::NAN };
        }
        let f = hits as f64 / trials as f64;
        Self { value: f, stderr: (f * (1.0 - f) / trials as f64).sqrt() }
    }

    /// |value − expected| in units of the standard error.
    pub fn z_score(&self, expected: f64) -> f64 {
        (self.value - expected).abs() / self.stderr
    }
}

impl CensusReport {
    fn empty(samples: u64, seed: u64) -> Self {
        Self { samples, seed, counts: [0; 5], boundary_hits: 0 }
    }

    fn merge(mut self, other: &Self) -> Self {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.boundary_hits += other.boundary_hits;
        self
    }

    pub fn count(&self, label: RegionLabel) -> u64 {
        self.counts[label.index()]
    }

    pub fn fraction(&self, label: RegionLabel) -> Fraction {
        Fraction::binomial(self.count(label), self.samples)
    }

    pub fn physical_count(&self) -> u64 {
        self.samples - self.count(RegionLabel::Unphysical)
    }

    pub fn physical_fraction(&self) -> Fraction {
        Fraction::binomial(self.physical_count(), self.samples)
    }

    /// Separable states as a fraction of the physical ones.
    pub fn separable_among_physical(&self) -> Fraction {
        let sep: u64 = RegionLabel::ALL.iter().filter(|l| l.is_separable()).map(|&l| self.count(l)).sum();
        Fraction::binomial(sep, self.physical_count())
    }

    /// CSV with columns `label,count,fraction,stderr`, preceded by `#` comment lines.
    pub fn to_csv(&self, version: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# lazyq {version} bd census seed={} samples={}", self.seed, self.samples);
        let _ = writeln!(out, "# boundary_hits={}", self.boundary_hits);
        out.push_str("label,count,fraction,stderr\n");
        for label in RegionLabel::ALL {
            let f = self.fraction(label);
            let _ = writeln!(out, "{},{},{:.8},{:.8}", label, self.count(label), f.value, f.stderr);
        }
        out
    }
}

/// Independent random stream for sample `index`: the ChaCha stream id is the sample index.
fn sample_point(seed: u64, index: u64) -> BellDiagPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    BellDiagPoint::new(std::array::from_fn(|_| rng.random_range(-1.0..=1.0)))
}

const CHUNK: u64 = 1 << 14;

/// Label `samples` uniform points of [−1,1]³.
///
/// Sample `i` draws from its own counter-addressed stream, so the result is
/// the same for any thread count or chunking.
pub fn census(samples: u64, seed: u64) -> Result<CensusReport, BellDiagError> {
    if samples == 0 {
        return Err(BellDiagError::NoSamples);
    }
    let chunks = samples.div_ceil(CHUNK);
    let report = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = CensusReport::empty(samples, seed);
            for i in (c * CHUNK)..((c + 1) * CHUNK).min(samples) {
                let p = sample_point(seed, i);
                acc.counts[p.region(REGION_TOL).index()] += 1;
                if p.near_boundary(REGION_TOL) {
                    acc.boundary_hits += 1;
                }
            }
            acc
        })
        .reduce(|| CensusReport::empty(samples, seed), |a, b| a.merge(&b));
    Ok(report)
}

/// Serial reference implementation of [`census`], used to check shard independence.
pub fn census_serial(samples: u64, seed: u64) -> Result<CensusReport, BellDiagError> {
    if samples == 0 {
        return Err(BellDiagError::NoSamples);
    }
    let mut acc = CensusReport::empty(samples, seed);
    for i in 0..samples {
        let p = sample_point(seed, i);
        acc.counts[p.region(REGION_TOL).index()] += 1;
        if p.near_boundary(REGION_TOL) {
            acc.boundary_hits += 1;
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SliceCell {
    pub i: usize,
    pub j: usize,
    pub free1: f64,
    pub free2: f64,
    pub label: RegionLabel,
}

/// A plane λ_axis = value sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Slice {
    pub axis: usize,
    pub value: f64,
    pub grid: usize,
    /// Row-major over (i, j), i indexing the lower free axis.
    pub cells: Vec<SliceCell>,
}

impl Slice {
    /// The two free axes (1-based), ascending.
    pub fn free_axes(&self) -> (usize, usize) {
        free_axes(self.axis)
    }

    /// CSV with columns `i,j,l_free1,l_free2,label`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,l_free1,l_free2,label\n");
        for c in &self.cells {
            let _ = writeln!(out, "{},{},{:.6},{:.6},{}", c.i, c.j, c.free1, c.free2, c.label);
        }
        out
    }
}

fn free_axes(axis: usize) -> (usize, usize) {
    match axis {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

pub fn slice(axis: usize, value: f64, grid: usize) -> Result<Slice, BellDiagError> {
    if !(1..=3).contains(&axis) {
        return Err(BellDiagError::Axis(axis));
    }
    if !(value.abs() <= 1.0) {
        return Err(BellDiagError::Value(value));
    }
    if grid < 2 {
        return Err(BellDiagError::Grid(grid));
    }
    let (f1, f2) = free_axes(axis);
    let coord = |k: usize| -1.0 + 2.0 * k as f64 / (grid - 1) as f64;
    let mut cells = Vec::with_capacity(grid * grid);
    for i in 0..grid {
        for j in 0..grid {
            let mut lambda = [0.0; 3];
            lambda[axis - 1] = value;
            lambda[f1 - 1] = coord(i);
            lambda[f2 - 1] = coord(j);
            let label = BellDiagPoint::new(lambda).region(REGION_TOL);
            cells.push(SliceCell { i, j, free1: coord(i), free2: coord(j), label });
        }
    }
    Ok(Slice { axis, value, grid, cells })
}
