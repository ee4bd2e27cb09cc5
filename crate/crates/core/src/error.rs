use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra kernel and the identity verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    ZeroDenominator,
    IndexOutOfRange(i64),
    NotInvertible,
    /// A closed-form evaluation left a `c` component or a remainder behind.
    NotPolynomial,
    Parse {
        kind: &'static str,
        input: String,
    },
    UnknownIdentity(String),
    MalformedGrid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::IndexOutOfRange(n) => write!(f, "index out of range: {n}"),
            Error::NotInvertible => f.write_str("divisor is not invertible"),
            Error::NotPolynomial => f.write_str("value is not a polynomial in x"),
            Error::Parse { kind, input } => write!(f, "cannot parse {kind} from {input:?}"),
            Error::UnknownIdentity(id) => write!(f, "unknown identity: {id}"),
            Error::MalformedGrid(why) => write!(f, "malformed grid: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
