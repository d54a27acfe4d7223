use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] trigspline::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0} check(s) failed")]
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Verification(_) => 1,
            CliError::Library(trigspline::Error::DegenerateMultiplier { .. }) => 3,
            CliError::Usage(_) | CliError::Library(_) | CliError::Io { .. } => 2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let degenerate =
            CliError::Library(trigspline::Error::DegenerateMultiplier { k: 1, value: 0.0 });
        assert_eq!(degenerate.exit_code(), ExitCode::from(3));
        assert_eq!(CliError::Verification(2).exit_code(), ExitCode::from(1));
        assert_eq!(CliError::Usage("x".into()).exit_code(), ExitCode::from(2));
        assert_eq!(
            CliError::Library(trigspline::Error::EvenNodeCount(4)).exit_code(),
            ExitCode::from(2)
        );
    }
}
