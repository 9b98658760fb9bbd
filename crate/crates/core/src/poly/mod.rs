//! Exact Laurent polynomial arithmetic over the integers, `Z/m`, `F_p` and
//! cyclotomic rings.

mod laurent1;
mod laurent2;
mod ring;

pub(crate) use laurent1::fmt_terms;
pub use laurent1::{LaurentPoly1, Var};
pub use laurent2::{DegreeProfile, LaurentPoly2};
pub use ring::{is_prime, Ring, RingDescriptor, Zmod};
