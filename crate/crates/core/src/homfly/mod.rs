//! HOMFLY and Conway polynomials of closed braids, and the two-strand twist
//! recursion matrix.

mod matrix;
mod skein;

pub use matrix::{
    symbolic_twist_matrix, twist_matrix_power, two_strand_homfly, APoly, TwistMatrix,
};
pub use skein::{
    conway, conway_of, homfly, unit_specialization, unlink, unlink_factor, SkeinEngine,
    DEFAULT_CROSSING_CAP,
};
