//! Exact rational linear algebra and linear programming.
//!
//! All routines work over [`Rational`] (arbitrary precision, always in lowest
//! terms). Every point returned by the solver satisfies its constraints with
//! exact equality or inequality.

mod feasibility;
mod hull;
mod linalg;
mod rational;
mod simplex;

pub use feasibility::{nonzero_cone_point, strict_feasible, ConditionKind, LinearCondition, StrictSolution};
pub use hull::{hull_vertices, in_convex_hull};
pub use linalg::{independent_subset, rank};
pub use rational::{dot, format_vector, int, is_zero_vector, lex_positive, negate, parse_rational, rat, scale, sub, Rational};
pub use simplex::{lp_solve, Constraint, LinearProgram, LpOutcome, Relation, Sense};
