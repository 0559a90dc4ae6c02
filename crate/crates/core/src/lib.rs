//! Exact computation of cyclotomic numbers over finite fields, together with
//! the norm bounds for cyclotomic integers and the vanishing-sum machinery
//! used to bound them.
//!
//! The crate is organised bottom-up:
//!
//! - [`finite_field`]: prime and extension field arithmetic, primitive
//!   elements, multiplicative orders and discrete-log tables.
//! - [`cyclotomy`]: cyclotomic classes and the `e x e` table of cyclotomic
//!   numbers, with a brute-force oracle.
//! - [`cyclo_integers`]: arithmetic in `Z[zeta_k]`, exact norms, circulant
//!   determinants and norm bounds.
//! - [`vanishing_sums`]: exact decisions about sums of roots of unity.
//! - [`transfer`]: criteria under which a polynomial vanishes at `g^e` in
//!   `F_q` exactly when it vanishes at `zeta_k`.
//! - [`harness`]: upper-bound statements checked over parameter grids.

pub mod cyclo_integers;
pub mod cyclotomy;
mod error;
pub mod finite_field;
pub mod harness;
pub mod transfer;
pub mod vanishing_sums;
mod util;

pub use error::{Error, Result};
