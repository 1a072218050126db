//! Certifying algorithms around interval graphs: recognition with
//! interval models or minimal forbidden induced subgraphs as certificates,
//! and the three modification problems — vertex deletion, edge deletion,
//! and completion — solved exactly by bounded-depth branching, plus a
//! constant-factor approximation for vertex deletion.

pub mod certificate;
pub mod chordal;
pub mod decompose;
pub mod fli;
pub mod frames;
pub mod cliques;
pub mod interval;
pub mod modular;
pub mod rational;
pub mod solvers;
