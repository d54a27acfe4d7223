use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use trigspline::harmonic::period_points;
use trigspline::HarmonicSeries;

use crate::error::CliError;

pub fn csv(series: &HarmonicSeries, samples: usize) -> String {
    let ts = period_points::<f64>(samples);
    let vals = series.eval_many(&ts);
    let mut out = String::with_capacity(48 * samples + 8);
    out.push_str("t,value\n");
    for (t, v) in ts.iter().zip(vals) {
        let _ = writeln!(out, "{t:.16e},{v:.16e}");
    }
    out
}

fn write(path: PathBuf, contents: &str) -> Result<PathBuf, CliError> {
    fs::write(&path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(path)
}

pub fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })
}

/// Writes `<stem>.csv` and the `<stem>.json` sidecar, returning the CSV path.
pub fn write_curve(
    dir: &Path,
    stem: &str,
    series: &HarmonicSeries,
    samples: usize,
) -> Result<PathBuf, CliError> {
    let json = series
        .to_json()
        .map_err(|e| CliError::Usage(format!("cannot serialize {stem}: {e}")))?;
    write(dir.join(format!("{stem}.json")), &json)?;
    write(dir.join(format!("{stem}.csv")), &csv(series, samples))
}

pub fn write_text(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, CliError> {
    write(dir.join(name), contents)
}
