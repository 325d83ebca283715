use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong in the geometric core.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Identity, parabolic or elliptic element where an axis was required.
    NotLoxodromic,
    /// A leaf coincides with the carrier of the segment it is tested against.
    DegenerateLeaf,
    /// A boundary transfer sent two distinct endpoints to the same point.
    DegenerateImage,
    /// Two endpoints of a geodesic, or the ends of a segment, coincide.
    DegenerateGeodesic,
    /// A matrix with (numerically) vanishing determinant.
    Singular,
    /// A point that should lie in the hyperbolic plane or space does not.
    NotInterior,
    /// A word-ball radius larger than the configured cap.
    CapExceeded { requested: usize, cap: usize },
    /// Word refers to a generator that does not exist, or failed to parse.
    InvalidWord(&'static str),
    /// Presentation or representation data is inconsistent.
    InvalidPresentation(&'static str),
    /// Two leaves of a lamination cross transversally.
    CrossingLeaves { first: usize, second: usize },
    /// A leaf misses the window of its lamination.
    LeafOutsideWindow { leaf: usize },
    /// A leaf or boundary point is not on the real circle where one was required.
    NotReal,
    /// Invalid parameter for a construction (non-positive radius, bad knots, ...).
    InvalidParameter(&'static str),
    /// The basepoint of a bending context failed validation.
    InvalidContext(&'static str),
    /// A partition with fewer than two pieces or inconsistent points.
    EmptySubsegmentFamily,
    /// Two approximation bundles do not come from the same context.
    MismatchedContexts,
    /// Richardson check on a finite difference failed.
    NonConvergentDifference { estimate_gap: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotLoxodromic => write!(f, "matrix is not loxodromic"),
            Error::DegenerateLeaf => write!(f, "leaf coincides with the segment carrier"),
            Error::DegenerateImage => write!(f, "boundary transfer collapsed a geodesic"),
            Error::DegenerateGeodesic => write!(f, "geodesic or segment endpoints coincide"),
            Error::Singular => write!(f, "matrix determinant vanishes"),
            Error::NotInterior => write!(f, "point is not in the interior of the model"),
            Error::CapExceeded { requested, cap } => {
                write!(f, "word length {requested} exceeds the cap {cap}")
            }
            Error::InvalidWord(why) => write!(f, "invalid word: {why}"),
            Error::InvalidPresentation(why) => write!(f, "invalid presentation: {why}"),
            Error::CrossingLeaves { first, second } => {
                write!(f, "leaves {first} and {second} cross")
            }
            Error::LeafOutsideWindow { leaf } => write!(f, "leaf {leaf} misses the window"),
            Error::NotReal => write!(f, "expected a real geodesic or boundary point"),
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
            Error::InvalidContext(why) => write!(f, "invalid bending context: {why}"),
            Error::EmptySubsegmentFamily => write!(f, "malformed partition"),
            Error::MismatchedContexts => write!(f, "bundles come from different contexts"),
            Error::NonConvergentDifference { estimate_gap } => {
                write!(f, "finite difference did not converge (gap {estimate_gap:e})")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
