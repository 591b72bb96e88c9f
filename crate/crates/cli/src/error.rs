use icecount::exactalg::AlgebraError;
use icecount::formulas::FormulaError;
use icecount::{EnumError, LatticeError};

/// Command failures, split by exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or inputs outside a method's domain (exit 2).
    Usage(String),
    /// Capacity or budget exhausted (exit 3).
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Resource(_) => "resource",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Resource(m) => f.write_str(m),
        }
    }
}

impl From<EnumError> for CliError {
    fn from(e: EnumError) -> Self {
        if e.is_resource_limit() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::Enumeration(e) => e.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Enumeration(e) => e.into(),
            AlgebraError::Formula(e) => e.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}
