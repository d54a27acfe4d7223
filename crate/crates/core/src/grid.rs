//! Uniform node sets on `[0, 2π)` and the sample values attached to them.
//!
//! Two grids of `N = 2n + 1` nodes are used throughout:
//!
//! * grid 0: `t_i = 2π(i − 1)/N`
//! * grid 1: `t_i = π(2i − 1)/N`, i.e. grid 0 shifted by half a step.
//!
//! Nodes are produced from their index, never by repeated addition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which of the two uniform grids a node set, a stitching choice or an
/// interpolation choice refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum GridId {
    /// Nodes at `2π(i − 1)/N`, starting at 0.
    Zero,
    /// Nodes at `π(2i − 1)/N`, midway between grid-0 nodes.
    One,
}

impl GridId {
    pub const ALL: [GridId; 2] = [GridId::Zero, GridId::One];

    pub fn value(self) -> u8 {
        match self {
            GridId::Zero => 0,
            GridId::One => 1,
        }
    }
}

impl TryFrom<u8> for GridId {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(GridId::Zero),
            1 => Ok(GridId::One),
            other => Err(Error::InvalidGridId(other)),
        }
    }
}

impl From<GridId> for u8 {
    fn from(g: GridId) -> u8 {
        g.value()
    }
}

impl fmt::Display for GridId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Checks `N = 2n + 1` with `n ≥ 1` and returns `n`.
pub fn half_order(nodes: usize) -> Result<usize> {
    if nodes.is_multiple_of(2) {
        return Err(Error::EvenNodeCount(nodes));
    }
    if nodes < 3 {
        return Err(Error::TooFewNodes(nodes));
    }
    Ok((nodes - 1) / 2)
}

/// Uniform spacing `h = 2π/N` shared by both grids.
pub fn grid_step<T: Scalar>(nodes: usize) -> Result<T> {
    half_order(nodes)?;
    Ok(T::two_pi() / T::from_index(nodes as u64))
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid<T> {
    variant: GridId,
    nodes: Vec<T>,
}

impl<T: Scalar> UniformGrid<T> {
    pub fn new(variant: GridId, nodes: usize) -> Result<Self> {
        half_order(nodes)?;
        let half_step = T::PI() / T::from_index(nodes as u64);
        let nodes = (1..=nodes as u64)
            .map(|i| match variant {
                GridId::Zero => half_step * T::from_index(2 * (i - 1)),
                GridId::One => half_step * T::from_index(2 * i - 1),
            })
            .collect();
        Ok(Self { variant, nodes })
    }

    pub fn variant(&self) -> GridId {
        self.variant
    }

    /// Number of nodes `N`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `n` in `N = 2n + 1`.
    pub fn half_order(&self) -> usize {
        (self.nodes.len() - 1) / 2
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn step(&self) -> T {
        T::two_pi() / T::from_index(self.nodes.len() as u64)
    }

    /// Samples `f` at every node.
    pub fn sample<F: Fn(T) -> T>(&self, f: F) -> Result<SampleSet<T>> {
        let values = self.nodes.iter().map(|&t| f(t)).collect();
        SampleSet::new(self.clone(), values)
    }
}

/// Builds one of the two uniform grids with `nodes` points.
pub fn make_grid<T: Scalar>(variant: GridId, nodes: usize) -> Result<UniformGrid<T>> {
    UniformGrid::new(variant, nodes)
}

/// Function values `f_i` attached to the nodes of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet<T> {
    grid: UniformGrid<T>,
    values: Vec<T>,
}

impl<T: Scalar> SampleSet<T> {
    pub fn new(grid: UniformGrid<T>, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                found: values.len(),
            });
        }
        if let Some((index, v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteSample {
                index,
                value: v.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &UniformGrid<T> {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The same values attached, in order, to the other grid of equal size.
    pub fn reattach(&self, variant: GridId) -> Result<Self> {
        let grid = UniformGrid::new(variant, self.grid.len())?;
        Self::new(grid, self.values.clone())
    }
}

/// Attaches `values` to `grid`, validating length and finiteness.
pub fn attach_samples<T: Scalar>(grid: UniformGrid<T>, values: Vec<T>) -> Result<SampleSet<T>> {
    SampleSet::new(grid, values)
}
