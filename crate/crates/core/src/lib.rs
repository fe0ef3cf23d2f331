//! Exact framed Homfly polynomials of closed braids.
//!
//! [`hecke::gamma`] computes `Γ(β) ∈ Z[mu, z]` for a braid word through a
//! Markov trace on the Hecke algebra, in time polynomial in the word length
//! for a fixed number of strands. The other modules build on it:
//!
//! - [`poly`]: exact sparse polynomials over `BigInt`.
//! - [`braid`]: braid words, closures, Markov moves, enumeration.
//! - [`conway`]: Alexander and Conway polynomials from the Burau matrix, an
//!   independent check on `Γ(0, z)`.
//! - [`vassiliev`]: the Homfly polynomial, the framing-corrected series and
//!   its finite-type coefficients, and the Bennequin bound.
//! - [`span_lab`]: dimensions of the span of degree-`k` coefficients.
//! - [`selfcheck`]: seeded invariant suites.
//!
//! ```
//! use braid_gamma::braid::parse;
//! use braid_gamma::vassiliev::homfly;
//!
//! let w = parse("1 1 1", None).unwrap();
//! assert_eq!(homfly(&w).to_string(), "2*v^2 - v^4 + v^2*z^2");
//! ```

pub mod braid;
pub mod conway;
pub mod error;
pub mod hecke;
pub mod poly;
pub mod selfcheck;
pub mod span_lab;
pub mod vassiliev;

// The book's chapters are compiled as doc tests so their snippets stay
// in sync with the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/braids.md")]
    mod braids {}
    #[doc = include_str!("../../../book/src/hecke.md")]
    mod hecke {}
    #[doc = include_str!("../../../book/src/homfly.md")]
    mod homfly {}
    #[doc = include_str!("../../../book/src/alexander.md")]
    mod alexander {}
    #[doc = include_str!("../../../book/src/finite_type.md")]
    mod finite_type {}
    #[doc = include_str!("../../../book/src/dimensions.md")]
    mod dimensions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
