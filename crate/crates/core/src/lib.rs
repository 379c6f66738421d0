//! Mod-2 Hochschild cohomology of Frobenius algebras, the BV operator coming
//! from Connes' `B`, and the Connes spectral sequence computing mod-2
//! `S^1`-equivariant homology of free loop spaces of spheres and projective
//! spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`f2`]: dense linear algebra over the field with two elements;
//! * [`frobenius`]: the cohomology algebras `H^*(M; F2)` and their pairings;
//! * [`hochschild`]: cochains, the operators `b̌`, `B̌`, cup and bracket, and
//!   `HH^*` computed either on bar cochains or on a small periodic resolution;
//! * [`bvring`]: closed-form presentations of the BV algebras;
//! * [`connes`]: the `E_1`/`E_2` pages and collapse certificates;
//! * [`crosscheck`]: brute-force `HH^*` against the presentations;
//! * [`series`]: rational Poincaré series and their expansions.

pub mod bvring;
pub mod connes;
pub mod crosscheck;
pub mod f2;
pub mod frobenius;
pub mod hochschild;
pub mod series;

pub use frobenius::{make_algebra, FrobeniusAlgebra, ManifoldSpec};
