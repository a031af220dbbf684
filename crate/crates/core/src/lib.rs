//! Finite multiplicative lattices and the lower topologies on their
//! distinguished classes of elements.
//!
//! The crate covers the whole path from tables to verdicts:
//!
//! * [`lattice`], [`builders`], [`enumerate`]: validated quantales, standard
//!   models, and exhaustive enumeration of small ones;
//! * [`classes`]: primes, maximal, (strongly, completely) irreducible,
//!   radical, primary, nilpotent and idempotent elements, and radicals;
//! * [`topology`]: lower spaces and their separation, sobriety, compactness,
//!   connectedness and spectrality checks;
//! * [`hom`]: homomorphisms, contractions and the induced maps on spaces;
//! * [`harness`]: every theorem as an executable predicate, swept over a
//!   corpus;
//! * [`latfile`], [`dot`], [`cli`]: the `.lat` text format, DOT output and
//!   the `latkit` command line.

pub mod builders;
pub mod classes;
pub mod cli;
pub mod dot;
pub mod element_set;
pub mod enumerate;
pub mod error;
pub mod harness;
pub mod hom;
pub mod latfile;
pub mod lattice;
pub mod topology;
pub mod verdict;

pub use classes::{classify, inf_v, jacobson, p_radical, radical_of, s_radical, ElementClass};
pub use element_set::ElementSet;
pub use error::{ClassError, HarnessError, HomError, LatticeError, ParseError, TopologyError};
pub use hom::LatticeHom;
pub use lattice::{MultLattice, RawLattice};
pub use topology::LowerSpace;
pub use verdict::{Status, Verdict, Witness};
