//! Set-theoretic operads built from iterated powersets.
//!
//! The crate implements a hierarchy of operads on combinatorial objects:
//!
//! * the permutative operad on indices `[n]` ([`base_operads`]);
//! * its power: compositions of subsets of `[n]`, in a substitution and a
//!   complement-transported variant;
//! * its second power: the substitution and composition operads on
//!   hypergraphs and simplicial complexes ([`scpx_operads`]), with
//!   transversal transports, named suboperads, the classical vertex
//!   constructions (duplication, parallel copies, wedges, disjoint
//!   unions), and a brute-force decomposability oracle;
//! * the join operad on relative simplicial complexes ([`join_operad`]),
//!   with the link/star/deletion/wedge specializations, pushout
//!   decompositions and the total algebra map of the simplicial join
//!   product;
//! * a small PL toolkit ([`pl`]): combinatorial boundaries, exact
//!   sphere/ball recognition up to dimension 2, certified joins, neat
//!   ball/boundary pairs and the iterated-wedge construction.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything can be shared freely across threads.
//! A generic law checker ([`laws`]) verifies the operad axioms for each of
//! these structures, exhaustively at small arity and by seeded sampling
//! beyond.

pub mod base_operads;
pub mod complex;
pub mod error;
pub mod family;
pub mod io;
pub mod join_operad;
pub mod laws;
pub mod pair;
pub mod pl;
pub mod scpx_operads;
pub mod subset;
pub mod sym;

pub use complex::SimplicialComplex;
pub use error::{ambient_cap, Error, Result};
pub use family::{Classification, ClosureMode, ComplementMode, ExtremalMode, Family, NonFaceMode};
pub use pair::RelativePair;
pub use subset::Subset;
pub use sym::Permutation;
