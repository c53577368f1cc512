//! Exact verification engine for q-binomial and q-series identities built
//! around the Legendre symbol mod 3: Gaussian-binomial seed identities, their
//! Bailey-lemma hierarchies, and the classical triple/quintuple product
//! identities they rest on. Everything is computed in exact rational
//! arithmetic; series statements are coefficient-exact up to a stated order.

pub mod bailey;
pub mod error;
pub mod exactalg;
pub mod qkit;
pub mod registry;

pub use error::{Error, Result};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
