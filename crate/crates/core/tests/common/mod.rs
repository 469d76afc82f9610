//! Independent reference implementations used by the integration tests.
//!
//! Nothing here reuses the library's search, canonicalization or linear
//! algebra; only the generic axiom checkers are shared, as the census
//! definition requires.

#![allow(dead_code)]

pub mod census_oracle;
pub mod gf_oracle;

use hyperalg::constructions::{builtin_hyperfield, product_space, Builtin, ProductSpace};

pub fn k2_power(n: usize) -> ProductSpace {
    product_space(&builtin_hyperfield(Builtin::K2).unwrap(), n).unwrap()
}

pub fn s3_power(n: usize) -> ProductSpace {
    product_space(&builtin_hyperfield(Builtin::S3).unwrap(), n).unwrap()
}
