use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("cannot parse cycle notation {input:?}: {reason}")]
    CycleParse { input: String, reason: &'static str },
    #[error("generator names differ: {0}")]
    NameMismatch(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("element is not contained in the group")]
    NotInGroup,
    #[error("coset enumeration exceeded index bound {0}")]
    IndexBoundExceeded(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} exceeds the supported maximum of 64")]
    DimensionTooLarge(usize),
    #[error("transvection vector must be nonzero")]
    ZeroVector,
    #[error("transvection vector must pair trivially with itself")]
    NotIsotropic,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("bilinear form is not alternating")]
    NotAlternating,
    #[error("matrix does not preserve the bilinear form")]
    NotAnIsometry,
    #[error("quadratic form does not refine the model's bilinear form")]
    IncompatibleForm,
    #[error("reduction requires the all-ones vector")]
    NotCharacteristicVector,
    #[error("genus {0} is outside the supported range")]
    GenusOutOfRange(usize),
    #[error("surface genus {0} is outside the supported range")]
    SurfaceOutOfRange(usize),
    #[error("curve indices ({i}, {j}) invalid for genus {h}")]
    CurveIndex { h: usize, i: usize, j: usize },
    #[error("search space {0} exceeds the exhaustive-search bound")]
    SearchSpaceTooLarge(u128),
    #[error("extension solver found {0} survivors, expected exactly one")]
    NotUnique(usize),
    #[error("{0}")]
    Invalid(String),
}
