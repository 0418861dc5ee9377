//! Restricted-to-the-imaginary-axis Voiculescu transforms of the
//! hyperbolic characteristic-function family, their representing
//! (Khintchine) measures, and recovery of those measures from
//! imaginary-axis values alone through a Laplace-transform identity and
//! real-axis numerical inversion.
//!
//! The crate is organised the way the computation flows:
//!
//! * [`specfun`] — digamma, Nielsen beta, exponential integral, Hurwitz
//!   ζ(2,·), complex dilogarithm;
//! * [`quadrature`] — adaptive Gauss–Kronrod integration on finite
//!   intervals and the half-line, cosine-weighted and convolution forms,
//!   forward Laplace transform;
//! * [`transforms`] — the four family members, their closed-form
//!   characteristic functions, Khintchine densities, and the canonical
//!   integral representation;
//! * [`recovery`] — the Laplace identity and Gaver–Stehfest style
//!   inversion from real-axis data;
//! * [`verify`] — a registry of machine-checked identities with a
//!   serializable report.
//!
//! A narrative guide with runnable examples lives in [`guide`]; the same
//! chapters are the sources of the mdbook under `book/`.

pub mod constants;
mod error;
pub mod guide;
pub mod quadrature;
pub mod recovery;
pub mod specfun;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
