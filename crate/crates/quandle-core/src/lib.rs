//! Finite quandles as Cayley tables: axiom validation, the medial law and
//! its derived identities, the `a ~ b <=> a*b = a` relation, Alexander and
//! dihedral constructors, translation maps `f_{xy}`, and exhaustive
//! enumeration of small orders.

mod constructors;
mod enumerate;
mod error;
mod fmap;
mod io;
mod medial;
mod table;
mod tilde;

pub use constructors::{alexander_quandle, dihedral_quandle};
pub use enumerate::{enumerate_quandles, EnumFilter, MAX_ENUM_ORDER};
pub use error::QuandleError;
pub use fmap::{fmap_step, FMap};
pub use io::{parse_json, parse_text, to_json, to_text};
pub use medial::{identity_arity, identity_holds, medial_report, MedialReport};
pub use table::QuandleTable;
pub use tilde::{tilde_related, tilde_report, TildeFailure, TildeReport};
