//! The core engine for truncated simplicial sets: Eilenberg-Zilber normal
//! forms, identity checking, coskeletal extension, diagonals, horns, and
//! simplicial maps.

pub mod cosk;
pub mod diag;
pub mod horn;
pub mod implicit;
pub mod smap;
pub mod sset;
pub mod ssx;
pub mod word;

pub use cosk::{
    check_cosk_dimension_streaming, coskeletal_extend, degenerate_boundaries, CoskStreamReport,
    DimDomain, TupleEnumerator,
};
pub use diag::{Diagonal, MultiImplicit};
pub use horn::{kan_horn_check, HornMode, HornReport};
pub use implicit::{materialize, ImplicitSSet, PointImplicit, Tuple};
pub use smap::{
    extend_map_by_boundary, is_iso_up_to, verify_simplicial_map, MapReport, SimplicialMapData,
};
pub use sset::{degeneracy_words, Budget, DimData, IdentityViolation, Label, SimplexRef, TruncSSet};
pub use ssx::{read_ssx, write_ssx};
pub use word::OperatorWord;
