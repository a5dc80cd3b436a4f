//! Exact arithmetic for q-analogue congruences.
//!
//! Everything in this crate is exact integer computation: dense univariate
//! polynomials over arbitrary-precision integers ([`polyring::IntPoly`]),
//! formal rational functions ([`polyring::RatFunc`]), the classical q-objects
//! built from them ([`qobjects`]), integer-side number theory ([`numtheory`]),
//! the q-Fermat/q-Euler quotients ([`quotients`]), and a suite of congruence
//! checkers that decide each claim by zero-remainder polynomial division
//! ([`verifier`]).

pub mod numtheory;
pub mod polyring;
pub mod qobjects;
pub mod quotients;
pub mod verifier;
