//! Finite-set profunctors between finite categories, cells between paths of
//! profunctors, and the universal constructions they support: restrictions,
//! companions and conjoints, coend composites, tabulations, pointwise Kan
//! extensions, the yoneda embedding, Day convolution and monoidal profunctors.

pub mod category;
pub mod cell;
pub mod construct;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod finset;
pub mod functor;
pub mod kan;
pub mod monoidal;
pub mod profunctor;
pub mod random;
pub mod universal;
pub(crate) mod util;
pub mod yoneda;

pub use category::{FinCategory, Mor, Morphism, Obj, ProductCategory};
pub use error::{Error, Result, Violation};
pub use finset::{enumerate_functions, quotient, FinFunction, FinSet, UnionFind};
pub use functor::{enumerate_functors, enumerate_nat_transformations, FinFunctor, NatTransformation};
pub use cell::{horizontal_compose, vertical_compose, Cell, CellFrame, Target};
pub use enumerate::{enumerate_cells, enumeration_limit, for_each_cell, set_enumeration_limit};
pub use profunctor::Profunctor;
pub use universal::{CheckResult, Context, KanMode, Verdict};
