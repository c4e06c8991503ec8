//! Exact rational geometry: arrangements, vector configurations, point sets
//! and complexified arrangements.

pub mod arrangement;
pub mod complexified;
pub mod convex;
pub mod fm;
pub mod linalg;

pub use arrangement::{om_from_vectors, real_covectors, sign_feasible, RationalArrangement};
pub use complexified::{complexified_ig, complexified_oig};
pub use convex::{convex_geometry, ConvexGeometry, PointConfiguration};
pub use linalg::Q;
