//! Computation kit for free nilpotent groups `F(n, c)`.
//!
//! * [`word`]: group words and their text syntax.
//! * [`hall`]: basic commutators and the Witt count.
//! * [`arith`]: Hall normal forms and group arithmetic.
//! * [`morphism`]: endomorphisms given by generator images, and their inverses.
//! * [`lab`]: executable checks of commutator identities, with JSON reports.

pub mod arith;
pub mod error;
pub mod hall;
pub mod lab;
pub mod morphism;
mod series;
mod solver;
pub mod word;

pub use num_bigint::BigInt;

pub use arith::{commutator, CoordJson, GroupContext, Limits, NilpotentElement, NormalFormJson};
pub use error::{Error, Result};
pub use hall::{is_basic, nu, witt_count, CommutatorTree, HallBasis, HallOrder};
pub use morphism::{Endomorphism, EndomorphismJson, IntegerMatrix};
pub use word::{format_word, free_reduce, parse_word, GeneratorId, Letter, Word};
