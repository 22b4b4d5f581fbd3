//! Multiplicity sequences of monomial ideals.
//!
//! The multiplicity sequence `c_0, ..., c_d` of an ideal `I` in
//! `R = k[x_1, ..., x_d]` is read off the bivariate Hilbert polynomial of the
//! bigraded algebra `gr_m(gr_I(R))`. For monomial ideals every graded piece
//! has a monomial basis, so the lengths are counts and the whole computation
//! is combinatorial and exact. The [`newton`] module supplies the polyhedral
//! invariants (j-multiplicity, analytic spread, reductions, integral closure)
//! that cross-check the Hilbert route.

pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod monomial;
pub mod newton;
pub mod oracle;

pub use error::{Error, Result};
pub use hilbert::{multiplicity_sequence, MultiplicitySequence};
pub use monomial::{Exponent, ExponentVector, MonomialIdeal, RingSpec};
