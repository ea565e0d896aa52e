use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus is reducible over GF(p)")]
    ReducibleModulus,
    #[error("modulus must be monic of degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: String },
    #[error("field GF({p}^{m}) exceeds the supported size of {max} elements")]
    FieldTooLarge { p: u64, m: usize, max: u64 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("element {0} is out of range for this field")]
    ElementOutOfRange(String),
    #[error("{u} does not divide {q}")]
    NotADivisor { u: u64, q: u64 },
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },
    #[error("expected a nonzero element")]
    ZeroElement,
    #[error("polynomial division by zero")]
    DivideByZeroPoly,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("argument scale must be nonzero")]
    ZeroScale,
    #[error("connection polynomial must have constant term 1")]
    BadConnectionPoly,
    #[error("empty prefix")]
    EmptyPrefix,
    #[error("a periodic sequence needs at least one element")]
    EmptySequence,
    #[error("field characteristic {field} does not match {expected}")]
    WrongCharacteristic { field: u64, expected: u64 },
    #[error("tuple length {0} is not a positive power of the characteristic")]
    BadLength(usize),
    #[error("period {period} is not a power of the characteristic {p}")]
    NotPrimePowerPeriod { period: usize, p: u64 },
    #[error("sequence period {got} does not match plan period {expected}")]
    PeriodMismatch { expected: usize, got: usize },
    #[error("expected {expected} component results, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("reduction inapplicable: {0}")]
    Inapplicable(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("bad header: {0}")]
    BadHeader(String),
    #[error("bad bench config: {0}")]
    BadConfig(String),
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
