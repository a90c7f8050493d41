use thiserror::Error;

/// Every way a construction or a check can refuse its input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TileError {
    /// An angle, order or parameter outside the range where the hexagon is
    /// convex and non-degenerate.
    #[error("domain error: {0}")]
    Domain(&'static str),
    /// No interior angle of the prototype equals `360/n`.
    #[error("no interior angle equals 360/{0}; the hexagon cannot seed this order")]
    Order(u32),
    /// Plain and reflected units must alternate around the hole, which an
    /// odd count cannot do.
    #[error("a {0}-gonal hole needs an even number of alternating units")]
    Parity(u32),
    /// The prototype has no reflection that preserves its outline.
    #[error("prototype outline is not mirror symmetric; reflected cells would change the tiling")]
    Reflect,
    /// The patch has no rotation of order two or more.
    #[error("patch has no rotational symmetry")]
    Degenerate,
    /// Nothing uncovered surrounds the construction centre.
    #[error("patch has no central hole")]
    NoHole,
}
