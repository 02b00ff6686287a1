//! Slice regular functions on quaternionic balls, their slice splitting and
//! extension, harmonic and Schwarz reconstructions, slice zero sets of
//! polynomials, and executable checks of the associated fiber bundles.

pub mod bundle;
pub mod cpoly;
pub mod error;
pub mod harmonic;
pub mod hull;
pub mod quadrature;
pub mod quat;
pub mod roots;
pub mod sampling;
pub mod series;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result, ZeroSetId};
pub use harmonic::{BoundaryTrace, HarmonicPoly, PlanarPath};
pub use hull::SliceHull;
pub use quat::{Frame, ImaginaryUnit, Quaternion, UnitQuaternion};
pub use roots::Root;
pub use series::{DComponents, QPowerSeries, SlicePair};
pub use zeros::{SlicePolynomial, ZeroData, ZeroSet};
