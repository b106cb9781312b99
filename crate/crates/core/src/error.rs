use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be nonzero")]
    ZeroModulus,

    #[error("input must be nonzero")]
    ZeroInput,

    #[error("{a} and {m} are not coprime")]
    NotCoprime { a: u64, m: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} has no primitive root")]
    NoPrimitiveRoot(u64),

    #[error("{0} is a Fermat prime, outside the theorem's hypothesis")]
    FermatPrime(u64),

    #[error("no known Fermat prime with index {0}")]
    FermatIndexOutOfRange(u32),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("modulus {m} exceeds the oracle cap of {cap} residues")]
    CapExceeded { m: u64, cap: u64 },

    #[error("invalid range: lo={lo}, hi={hi}")]
    BadRange { lo: u64, hi: u64 },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("b-file parse error at line {line}: {msg}")]
    BFile { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// CLI exit code contract: 2 = usage/invalid input, 3 = resource or
    /// overflow. Mismatches are reported separately with exit 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Overflow(_) | Error::CapExceeded { .. } => 3,
            _ => 2,
        }
    }
}
