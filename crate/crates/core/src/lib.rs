//! Quantum function algebras of braided vector spaces.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod braiding;
pub mod cli;
pub mod exactla;
pub mod frt;
pub mod gbasis;
pub mod ncpoly;
pub mod nichols;
pub mod scalars;
pub mod qdet;
pub mod settheoretic;
