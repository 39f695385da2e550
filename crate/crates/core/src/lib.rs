pub mod algebra;
pub mod corpus;
pub mod courant;
pub mod envelope;
pub mod error;
pub mod lie_yamaguti;
pub mod linalg;
pub mod loops;
pub mod poly;
pub mod products;
pub mod sampling;
pub mod subspace;

pub use algebra::{IdentityCheck, IdentityWitness, StructureAlgebra};
pub use error::{Error, Result};
