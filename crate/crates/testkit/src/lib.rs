//! Test-side oracle support, independent of the library under test.
//!
//! Nothing in here touches the implementation crates: the double-double
//! arithmetic, the SI dimension tracker, and the halo velocity samplers are
//! written from the model definitions alone so they can serve as independent
//! cross-checks in tests.

pub mod dd;
pub mod dims;
pub mod sampling;
