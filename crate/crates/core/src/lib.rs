//! Exact tools for deciding whether a plane curve singularity is
//! nondegenerate in Kouchnirenko's sense.
//!
//! * [`diagram`]: Newton diagrams, mixed area and Newton number.
//! * [`germ`]: branches, intersection numbers and derived invariants.
//! * [`classify`]: Newton's germs, nondegeneracy verdicts and the formulas
//!   attached to a witness decomposition.
//! * [`poly`]: bivariate polynomials, Newton diagrams of equations, face
//!   tests, Milnor number oracles and model equations.

pub mod classify;
pub mod diagram;
pub mod germ;
pub mod poly;
pub mod rational;

pub use classify::{
    milnor_lemma55, model_diagram, newton_number_germ, ngerm_check, ngerm_reference_check, nondegenerate_verdict,
    Decomposition, Group, NGermResult, Semantics,
};
pub use diagram::{elem, ElementaryDiagram, ExtNat, NewtonDiagram};
pub use germ::{Branch, CharPair, GermData};
pub use rational::ExtRat;
