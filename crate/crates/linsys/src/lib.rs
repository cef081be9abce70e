//! Exact combinatorics for finite linear systems: point/line incidence
//! structures in which two lines share at most one point.
//!
//! The crate computes exact transversal and 2-packing numbers with
//! verifiable witnesses, builds incidence (Levi) graphs and decides their
//! planarity with checkable certificates, enumerates integer-lattice
//! segment systems up to symmetry, and runs a harness of known bounds
//! over any instance.

pub mod formats;
pub mod graph;
pub mod incidence;
pub mod instances;
pub mod levi;
pub mod planarity;
pub mod segment;
pub mod solvers;
pub mod svg;
pub mod theorems;

pub use incidence::LinearSystem;
pub use segment::{Seg, SegmentSystem};
