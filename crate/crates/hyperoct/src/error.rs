use thiserror::Error;

/// Errors produced by the group arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} exceeds the supported maximum of 64")]
    DegreeTooLarge(usize),
    #[error("image table is not a bijection")]
    NotABijection,
    #[error("cycle entry {0} out of range 1..={1}")]
    CycleEntryOutOfRange(usize, usize),
    #[error("entry {0} appears more than once in cycle notation")]
    RepeatedCycleEntry(usize),
    #[error("sign vector has bits set beyond degree {0}")]
    SignBitsBeyondDegree(usize),
    #[error("degree {0} exceeds the enumeration cap of {1}")]
    EnumerationCap(usize, usize),
    #[error("operands do not commute")]
    NonCommuting,
    #[error("element has a non-identity permutation part")]
    NonIdentityPerm,
    #[error("generator index {0} out of range 1..={1}")]
    TokenOutOfRange(usize, usize),
    #[error("the cycle support does not match the sign-vector support")]
    SupportMismatch,
    #[error(
        "meridian signs sum to 1 on a cycle of its permutation part: \
         the two-fold cover is branched over the corresponding component"
    )]
    HypothesisViolation,
}
