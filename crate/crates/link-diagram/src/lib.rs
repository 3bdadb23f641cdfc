//! Oriented link diagrams and open-strand fragments as combinatorial
//! data: arcs, signed crossings, crossing relations, Reidemeister moves,
//! and generators for the link families under study.

mod builder;
mod diagram;
mod generators;
mod io;
mod reidemeister;

pub use builder::DiagramBuilder;
pub use diagram::{Crossing, CrossingRelation, DiagramError, LinkDiagram};
pub use generators::{
    gen_allen_swenberg, gen_generalized_as, gen_hopf, gen_kom_knot, gen_l2h, gen_trefoil,
    gen_two_component_lom, gen_unknot, trivial_open_diagram,
};
pub use io::{parse_json, parse_text, to_json, to_text};
pub use reidemeister::{apply_reidemeister, RMove};
