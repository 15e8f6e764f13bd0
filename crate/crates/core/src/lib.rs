//! Double magmas built from commutator operations on finite groups and rings.
//!
//! A finite group `G` carries two operations `x * y = [x, y]` and
//! `x • y = [y, x]`. This crate builds such double magmas as explicit tables,
//! decides the interchange law, associativity, commutativity and properness by
//! exhaustive scan, and checks each against the commutator laws that are
//! supposed to characterize it.
//!
//! The crate is `no_std` and only needs `alloc`. The `parallel` feature splits
//! large scans across a rayon pool without changing any reported witness.

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod construct;
pub mod group;
pub mod magma;
pub mod ring;
pub mod scan;
pub mod spec;
pub mod verdict;
pub mod verify;
pub mod word;

pub use construct::{commutator_double, ring_commutator_double, word_double, WordPair};
pub use group::{Elem, FiniteGroup, Permutation, SubgroupSet, DEFAULT_ORDER_BUDGET};
pub use magma::{DoubleMagma, Magma};
pub use ring::{FiniteRing, RingLaw};
pub use scan::DEFAULT_EVALUATION_BUDGET;
pub use spec::{GroupSpec, RingSpec};
pub use verdict::{Status, Verdict};
pub use word::{builtin_law, parse_law, parse_term, Law, Term};
