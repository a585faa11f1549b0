use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} exceeds the supported bound 2^32")]
    CharacteristicTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{n} does not fit in 63 bits")]
    FieldTooLarge { p: u64, n: u32 },
    #[error("modulus is not a monic irreducible polynomial of the requested degree")]
    BadModulus,
    #[error("field of size {q} exceeds the enumeration cap {cap}")]
    CapExceeded { q: u64, cap: u64 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("operation requires characteristic 2")]
    OddCharacteristic,
    #[error("coefficient {value} is out of range for the field")]
    CoefficientOutOfRange { value: u64 },
    #[error("lambda must not be 0 or 1")]
    DegenerateLambda,
    #[error("curve is singular")]
    Singular,
    #[error("twist coefficient must be nonzero")]
    ZeroTwist,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("the point at infinity has no descent image")]
    DescentAtInfinity,
    #[error("descent image is only defined for untwisted curves")]
    TwistedDescent,
    #[error("{0} is not a perfect square")]
    NotSquare(u64),
    #[error("{n} lies outside the Hasse interval for q = {q}")]
    OutsideHasse { q: u64, n: u64 },
    #[error("class number h(-p) requires p = 3 mod 4 and p > 3, got {0}")]
    ClassNumberDomain(u64),
    #[error("polynomial field is not a subfield of the target field")]
    IncompatibleFields,
    #[error("{0}")]
    Invalid(String),
}
