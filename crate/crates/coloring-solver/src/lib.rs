//! Enumerating quandle colorings of link diagrams.
//!
//! A coloring assigns a quandle element to every arc so that each
//! crossing satisfies `under_out = under_in * over` (or `*⁻¹` at negative
//! crossings). The solver seeds as few arcs as possible and propagates
//! along the under-strand chains in both directions; the brute-force
//! oracle filters all assignments and exists to cross-check it.

mod poly;
mod solver;

pub use poly::EnhancedPoly;
pub use solver::{
    brute_force_colorings, count_colorings, enhanced_polynomial, enumerate_colorings, solve_open,
    Coloring, SolverError, BRUTE_FORCE_LIMIT,
};
