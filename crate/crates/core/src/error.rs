use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failure modes shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values over different fields were combined.
    FieldMismatch,
    /// A scalar is not in canonical form for its field, or belongs to another field.
    InvalidScalar(String),
    /// The field description itself is unusable (composite p, reducible modulus, ...).
    InvalidField(String),
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    /// A construction requires positive characteristic (or a specific one).
    CharacteristicMismatch(String),
    /// A Hopf algebra satisfies every axiom except commutativity.
    NonCommutative,
    /// Two objects refer to different Hopf algebras.
    HopfMismatch,
    /// A structure failed its validator; the message names the broken law.
    InvalidStructure(String),
    NotASubgroup,
    /// The Γ-action on the local factors is not transitive.
    NotTransitive,
    /// A residue field cannot be represented by a supported field.
    ResidueFieldUnsupported(String),
    /// Some internal identity that must hold for valid input failed.
    InvariantBreach(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "field mismatch"),
            Error::InvalidScalar(m) => write!(f, "invalid scalar: {m}"),
            Error::InvalidField(m) => write!(f, "invalid field: {m}"),
            Error::DimensionMismatch {
                context,
                expected,
                found,
            } => write!(
                f,
                "dimension mismatch in {context}: expected {expected}, found {found}"
            ),
            Error::CharacteristicMismatch(m) => write!(f, "characteristic mismatch: {m}"),
            Error::NonCommutative => write!(f, "Hopf algebra is not commutative"),
            Error::HopfMismatch => write!(f, "objects are comodules over different Hopf algebras"),
            Error::InvalidStructure(m) => write!(f, "invalid structure: {m}"),
            Error::NotASubgroup => write!(f, "subset is not a subgroup"),
            Error::NotTransitive => write!(f, "group does not act transitively on the primes"),
            Error::ResidueFieldUnsupported(m) => write!(f, "unsupported residue field: {m}"),
            Error::InvariantBreach(m) => write!(f, "internal invariant breached: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn dim_check(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
