use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("value {value} at position {position} is outside [1..{n}]")]
    ValueOutOfRange {
        position: usize,
        value: usize,
        n: usize,
    },

    #[error("point {point} is outside [1..{n}]")]
    PointOutOfRange { point: usize, n: usize },

    #[error("map is not idempotent")]
    NotIdempotent,

    #[error("not a permutation of [1..{n}]")]
    NotAPermutation { n: usize },

    #[error("image set must be a nonempty subset of [1..{n}]")]
    InvalidImage { n: usize },

    #[error("retraction sends {point} to {value}, which is not in the image")]
    RetractionOutsideImage { point: usize, value: usize },

    #[error("retraction is defined on image point {point}")]
    RetractionOverlapsImage { point: usize },

    #[error("retraction is undefined at {point}")]
    RetractionNotTotal { point: usize },

    #[error("{what} refused for n = {n} (limit {max})")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("idempotents lie in different orbits")]
    NotSameOrbit,

    #[error("permutation does not stabilize the idempotent")]
    NotInStabilizer,

    #[error("group elements belong to different classes")]
    ClassMismatch,

    #[error("type vector has weight {weight}, expected {n}")]
    WeightMismatch { weight: usize, n: usize },

    #[error("{what}: sum is not divisible by n!")]
    NonExactDivision { what: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
