//! Schroder paths, the permutations avoiding both 1243 and 2143, and the
//! bijection `φ` between them, together with the enumeration of the
//! centrosymmetric members of the class.

pub mod bijection;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod limits;
pub mod path;
pub mod perm;
pub mod verification;

pub use bijection::{phi, phi_inverse, phi_trace, sigma_decomposition, InverseCache, InverseTable, TranspositionWord};
pub use enumeration::{count, CountQuery, Family, Method, SequenceName, SequenceTable};
pub use error::{Error, Result};
pub use limits::Limits;
pub use path::{FeatureKind, FeatureSummary, SchroderPath, Step};
pub use perm::{Pattern, Permutation};
pub use verification::{regression_fixtures, verify, verify_all, verify_with, Claim, Failure, VerificationReport};
