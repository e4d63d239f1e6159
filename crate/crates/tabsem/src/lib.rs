//! Tables over free monoids and the semirings they generate.
//!
//! A table is a finite map from words to scalar coefficients. Two
//! products make them useful: the pointwise product merges matching
//! columns with any binary law, and the convolution product concatenates
//! index words while folding colliding factorizations with an addition
//! law. On top of that sit a catalog of scalar laws ([`BinaryLaw`]) and
//! law pairs ([`SemiringSpec`]), a randomized axiom checker, the
//! memorized semiring of argmin address sets ([`MemorizedValue`]), and
//! square-matrix closure by repeated squaring, which together solve the
//! shortest path with addresses problem ([`apsp_with_addresses`]) over
//! weighted graphs.
//!
//! Everything is an immutable value and every operation is a pure
//! function, so the whole crate is freely shareable across threads.
//!
//! ```
//! use tabsem::{apsp, BinaryLaw, MemorizedValue, SemiringSpec, Table, WeightedGraph, Word};
//!
//! # fn main() -> tabsem::Result<()> {
//! // Tables combine column-wise under any law...
//! let lhs = Table::parse("ab\t3\nc\t5\n")?;
//! let rhs = Table::parse("ab\t4\nd\t1\n")?;
//! let merged = lhs.pointwise(&rhs, &BinaryLaw::min())?;
//! assert_eq!(merged.get(&Word::parse("ab")?), Some(3.0.into()));
//!
//! // ...and convolve by concatenating their index words.
//! let product = lhs.convolution(&rhs, &SemiringSpec::counting())?;
//! assert_eq!(product.get(&Word::parse("abab")?), Some(12.0.into()));
//!
//! // Arrow labels address every cheapest route at once.
//! let graph = WeightedGraph::parse("p q 2 a\nq r 3 b\np r 5 c\n")?;
//! let routes = apsp(&graph)?;
//! assert_eq!(routes.entry(0, 2).cost(), 5.0.into());
//! assert_eq!(routes.entry(0, 2).to_string(), "[{c,a.b}, 5]");
//! # Ok(())
//! # }
//! ```

pub mod axioms;
pub mod error;
pub mod graph;
pub mod law;
pub mod matrix;
pub mod memorized;
pub mod semiring;
pub mod table;
pub mod value;
pub mod word;

pub use axioms::{check_semiring_axioms, Axiom, AxiomReport, AxiomResult, Counterexample};
pub use error::{Error, Result};
pub use graph::{apsp, apsp_with_addresses, path_weight, ApspResult, Arrow, PathWeight, WeightedGraph};
pub use law::{BinaryLaw, LawFlags};
pub use matrix::{closure, closure_bound, Carrier, Closure, MemorizedCarrier, ScalarCarrier, SquareMatrix};
pub use memorized::MemorizedValue;
pub use semiring::{Domain, SemiringSpec};
pub use table::{LetterMorphism, Table, DEFAULT_COLUMN_BUDGET};
pub use value::{ExtendedReal, NEG_INF, POS_INF};
pub use word::{Letter, Word};
