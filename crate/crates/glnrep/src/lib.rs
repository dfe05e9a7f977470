//! Exact matrix model of the diagram category at the specialization
//! t = q^n: every strand letter carries an n-dimensional rational vector
//! space, every slice an explicit structure matrix, and stacking becomes
//! matrix multiplication. The evaluation route shares nothing with the
//! rewriting engine, so on narrow boundaries the two certify each other.

pub mod functor;

pub use functor::{
    kernel_witness, matrix_to_json, oracle_check, psi_evaluate, rep_generator,
    verify_presentation, GlnError, OracleConfig,
};
