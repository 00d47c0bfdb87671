use homrk_core::classify::ClassifyError;
use homrk_core::homrank::HomrankError;
use homrk_core::parse::ParseError;
use homrk_core::repcalc::RepError;
use homrk_core::verify::VerifyError;
use thiserror::Error;

/// Process exit status. The numbers are a stable contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Parse = 2,
    Domain = 3,
    Data = 4,
    Inconsistent = 5,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Homrank(#[from] HomrankError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Domain(String),
    #[error("verification failed: {0} of {1} checks differ")]
    VerifyFailed(usize, usize),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot render output: {0}")]
    Render(String),
}

fn parse_exit(e: &ParseError) -> Exit {
    match e {
        ParseError::Syntax { .. } => Exit::Parse,
        ParseError::Domain(_) => Exit::Domain,
    }
}

fn homrank_exit(e: &HomrankError) -> Exit {
    match e {
        HomrankError::Catalog(_) => Exit::Data,
        HomrankError::Inconsistent { .. } => Exit::Inconsistent,
        HomrankError::Parse(p) => parse_exit(p),
        _ => Exit::Domain,
    }
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Parse(e) => parse_exit(e),
            CliError::Rep(_) | CliError::Domain(_) => Exit::Domain,
            CliError::Homrank(e) => homrank_exit(e),
            CliError::Classify(e) => match e {
                ClassifyError::Rules(_) => Exit::Data,
                ClassifyError::Inconsistent { .. } => Exit::Inconsistent,
                ClassifyError::Homrank(h) => homrank_exit(h),
                ClassifyError::Parse(p) => parse_exit(p),
                _ => Exit::Domain,
            },
            CliError::Verify(e) => match e {
                VerifyError::UnknownSuite(_) => Exit::Parse,
                VerifyError::Homrank(h) => homrank_exit(h),
                VerifyError::Parse(p) => parse_exit(p),
                VerifyError::Rep(_) => Exit::Domain,
            },
            CliError::VerifyFailed(..) => Exit::Inconsistent,
            CliError::Io(_) | CliError::Render(_) => Exit::Data,
        }
    }
}
