//! Arity-bounded unbiased monoidal structures and what is built on them: lax
//! monoidal functors, monoidal profunctors, Day convolution, the monoidal
//! Yoneda lemma, doctrinal adjunction and lax structure on Kan extensions.
//!
//! The free strict monoidal category monad is never materialized. A tensor
//! of every arity `n ≤ N` is stored as a table, and every coherence axiom is
//! instantiated at the finitely many shapes all of whose tensors have arity
//! at most `N`. With the default `N = 3` all binary and ternary coherence is
//! captured.

mod day;
mod doctrinal;
mod lax;
mod lift;
mod profunctor;
mod structure;

pub use day::{
    day_associator, day_convolution, day_map, day_unit_law, day_unitor, monoidal_curry, monoidal_yoneda_check,
    yoneda_monoidal_structure, Compositor, DayAssociator, DayConvolution, MonoidalCurry, YonedaStructure,
};
pub use doctrinal::{check_doctrinal_adjunction, doctrinal_right_adjoint, triangle_identities, DoctrinalReport};
pub use lax::{validate_monoidal_transformation, Flavor, LaxMonoidalFunctor};
pub use lift::{lift_lax_structure_on_kan, tensored_cell, KanLift, LiftOutcome};
pub use profunctor::{monoidal_beck_chevalley, search_non_bc, small_monoidal_profunctors, MonoidalProfunctor, NonBcSearch};
pub use structure::{shape_name, shapes, three_level_shapes, MonoidalStructure, Shape, DEFAULT_ARITY};
