//! Exact verification and construction of Hom-associative structures:
//! Rota-Baxter systems, Hom-dendriform and Hom-preLie algebras, Hom-Yang-Baxter
//! pairs and covariant Hom-bialgebras, over ℚ or a prime field.

pub mod bundle;
pub mod covariant;
pub mod error;
pub mod field;
pub mod hom;
pub mod report;
pub mod rota_baxter;
pub mod search;
pub mod tensor;
pub mod yang_baxter;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use hom::{HomAlgebra, HomCoalgebra};
pub use report::{CheckReport, Witness};
pub use tensor::{BilinearMap, Coproduct, LinearMap, Tensor2, Tensor3, TwistorMap, Vector};
