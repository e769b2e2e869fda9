//! Minimal Eilenberg-Mac Lane complexes, the twisted base `W`, the twisted
//! total complex `M`, cocycle validation, and homotopy groups of minimal
//! reduced complexes.

pub mod homotopy;
pub mod kcomplex;
pub mod twisted;

pub use homotopy::{minimal_homotopy_groups, PiGroup};
pub use kcomplex::{k_complex, KComplex};
pub use twisted::{
    build_m, build_m_unchecked, build_w, coboundary_w3, first_t_violation, lambda5_horns_fill,
    validate_h, validate_t, Lambda5Report, MImplicit, PostnikovData, WImplicit,
};
