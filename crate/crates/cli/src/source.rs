//! Where sample values come from: an explicit list, a JSON file, or a
//! named test function sampled on the interpolation grid.
//!
//! Named functions:
//!
//! | name       | f(t)                               |
//! |------------|------------------------------------|
//! | `constant` | 1                                  |
//! | `cos`      | cos t                              |
//! | `sin2`     | sin 2t                             |
//! | `ramp`     | sin t − sin(2t)/2 + sin(3t)/3      |
//!
//! `ramp` is the third partial Fourier sum of `t/2` on `(−π, π)`.

use std::path::Path;

use clap::ValueEnum;
use serde::Deserialize;
use trigspline::{attach_samples, make_grid, GridId, SampleSet};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedFn {
    Constant,
    Cos,
    Sin2,
    Ramp,
}

impl NamedFn {
    pub fn eval(self, t: f64) -> f64 {
        match self {
            NamedFn::Constant => 1.0,
            NamedFn::Cos => t.cos(),
            NamedFn::Sin2 => (2.0 * t).sin(),
            NamedFn::Ramp => t.sin() - (2.0 * t).sin() / 2.0 + (3.0 * t).sin() / 3.0,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DataFile {
    #[serde(rename = "N")]
    nodes: usize,
    values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Values(Vec<f64>),
    Function(NamedFn, usize),
}

impl Source {
    pub fn resolve(
        data: Option<&[f64]>,
        file: Option<&Path>,
        func: Option<NamedFn>,
        nodes: Option<usize>,
    ) -> Result<Option<Self>, CliError> {
        let given = [data.is_some(), file.is_some(), func.is_some()];
        if given.iter().filter(|&&g| g).count() > 1 {
            return Err(CliError::Usage(
                "use only one of --data, --data-file, --fn".into(),
            ));
        }
        let values = if let Some(v) = data {
            v.to_vec()
        } else if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let parsed: DataFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("bad data file {}: {e}", path.display())))?;
            if parsed.nodes != parsed.values.len() {
                return Err(CliError::Usage(format!(
                    "data file declares N = {} but holds {} values",
                    parsed.nodes,
                    parsed.values.len()
                )));
            }
            parsed.values
        } else if let Some(f) = func {
            let nodes = nodes.ok_or_else(|| CliError::Usage("--fn needs --N".into()))?;
            return Ok(Some(Source::Function(f, nodes)));
        } else {
            return Ok(None);
        };
        if let Some(n) = nodes {
            if n != values.len() {
                return Err(CliError::Usage(format!(
                    "--N {n} does not match {} data values",
                    values.len()
                )));
            }
        }
        Ok(Some(Source::Values(values)))
    }

    pub fn nodes(&self) -> usize {
        match self {
            Source::Values(v) => v.len(),
            Source::Function(_, n) => *n,
        }
    }

    /// Values attached to `variant`. Raw lists are re-attached to whichever
    /// grid is asked for; functions are sampled on it.
    pub fn on(&self, variant: GridId) -> Result<SampleSet, CliError> {
        let grid = make_grid(variant, self.nodes())?;
        Ok(match self {
            Source::Values(v) => attach_samples(grid, v.clone())?,
            Source::Function(f, _) => grid.sample(|t| f.eval(t))?,
        })
    }

    pub fn values(&self) -> Result<Vec<f64>, CliError> {
        Ok(self.on(GridId::Zero)?.values().to_vec())
    }
}
