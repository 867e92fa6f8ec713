//! Deciding the characterizations: odd-face conditions, factor witnesses,
//! quadrangulation witnesses, Kronecker roots and Cartesian forms.

mod cartesian;
mod conditions;
mod roots;
mod witness;

pub use cartesian::{cartesian_forms, cartesian_forms_with, CartesianForm, CartesianVariant};
pub use conditions::{classify_odd_faces, classify_odd_faces_with, ConditionTag, OddFaceCondition, C0_CONTAINMENT};
pub use roots::{kronecker_roots, kronecker_roots_with, Root, RootSet};
pub use witness::{
    find_factor_witness, find_factor_witness_with, verify_factor_witness, verify_quad_witness, ClauseCheck,
    FactorWitness, OrderVariant, QuadWitness, WitnessReport,
};
