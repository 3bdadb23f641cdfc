//! Open-strand diagrams built from the four directional move families,
//! with the path, parallel-pair, and direction bookkeeping needed to
//! verify their structural properties and the endpoint theorem: under
//! any medial-quandle coloring the two strand ends are forced equal.

mod analysis;
mod io;
mod moves;
mod strand;

pub use analysis::{
    check_theorem_5_1, compute_paths, fmap_of_pair_step, glue_closure, link_fmap, pair_values,
    verify_pair_steps, verify_structure, StructureReport, Thm51Report,
};
pub use io::{from_text, to_text};
pub use moves::{apply_move, default_tangle, default_tangle_moves, random_lom};
pub use strand::{
    AppliedMove, Dir, LinkRole, MoveKind, MoverEnd, OpenStrand, PairEntry, PairLink,
    StructureKind, TangleError,
};
