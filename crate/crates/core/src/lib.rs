//! Exact computations in the free metabelian group through its Magnus
//! embedding: Laurent polynomial arithmetic, word evaluation, membership in
//! the subgroup `H = <x[y,x], y, z_j>`, root isolation and witnesses for
//! non-separability in the nilpotent quotients.

pub mod exec;
pub mod laurent;
pub mod linalg;
pub mod magnus;
pub mod nilquot;
pub mod sample;
pub mod subgroup;
pub mod verify;
pub mod words;

pub use exec::Execution;
pub use laurent::{LaurentError, LaurentPoly, LaurentRing, Monomial};
pub use magnus::{MagnusMatrix, MatrixRecord, TruncatedMatrix};
pub use nilquot::{lift_witness, verify_nonseparability, BasicCommutator, ClassReport, NilError, WitnessChain};
pub use subgroup::{MembershipVerdict, SubgroupError, SubgroupH};
pub use verify::{Suite, SuiteReport, VerifyOptions};
pub use words::{evaluate, parse, Alphabet, ParseOptions, Permutation, Word, WordError};
