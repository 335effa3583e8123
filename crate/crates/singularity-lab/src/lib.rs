//! Curve-germ classification for members of a conic-quartic pencil: plane
//! germ recognition along the corank-two ladder, reduction of a pencil
//! member to its marked normal form, the eight-way leading-coefficient
//! classifier, the stratum dictionary it feeds, and the A-series reading at
//! the cone point of the quadric.

pub mod arnold;
pub mod binary_form;
pub mod class;
pub mod factor;
pub mod germ;
pub mod normal_form;
pub mod vertex;

pub use arnold::{arnold_recognize, Recognition, RecognizeError};
pub use binary_form::BinaryForm;
pub use class::{
    stratum_dimensions, w_stratum_tag, CurveContext, JTail, SingularityClass, SingularityKind,
    StratumRow,
};
pub use germ::PlaneGerm;
pub use normal_form::{
    classify_norm3, reduce_to_normal_form, NormalFormError, NormalFormInput,
};
pub use vertex::{vertex_am, VertexError, VertexReport};
