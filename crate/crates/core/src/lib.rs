//! Exact enumeration of signed alternating-run statistics over the Weyl
//! groups S_n, B_n and D_n, with closed-form evaluators and a verification
//! harness that checks each formula against brute force.

pub mod error;
pub mod perm;
pub mod poly;
pub mod series;
pub mod enumerate;
pub mod closed_forms;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{ClassA, EndClass, Group, Kind, Permutation, SignedPermutation, Step};

use num_bigint::BigInt;

pub type UniPoly = poly::Univariate<BigInt>;
pub type BiPoly = poly::Bivariate<BigInt>;
pub use series::Series;
pub use enumerate::Engine;
