//! Core partitions and their alcove geometry.
//!
//! An `s`-core is a partition with no rim `s`-hooks. Reading off the first
//! gap on each runner of its `s`-abacus gives an `s`-set, and sorting an
//! `s`-set gives the unique integer point inside a dominant alcove of the
//! affine space `P^s`. This crate implements that correspondence together
//! with two level-`t` affine symmetric group actions on it, and uses them to
//! compute `t`-cores of `s`-cores, enumerate simultaneous `(s,t)`-cores, and
//! build the largest one, `κ_{s,t}`, with explicit containment chains.
//!
//! ```
//! use alcove_cores::{abacus, orbits, Partition};
//!
//! let lambda: Partition = "6,6,2,1".parse().unwrap();
//! let core = abacus::core(&lambda, 5);
//! assert_eq!(core.to_string(), "5,2,2,1");
//! assert_eq!(abacus::q_set(&core, 5).unwrap().to_string(), "[-4,-2,2,5,9]");
//! assert_eq!(orbits::kappa(3, 4).unwrap().to_string(), "3,1,1");
//! ```

pub mod abacus;
pub mod actions;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod orbits;
pub mod partition;
pub mod render;
pub mod sample;
pub mod verify;

pub use abacus::SSet;
pub use error::{Error, Result};
pub use exec::Exec;
pub use geometry::{Hyperplane, SPoint};
pub use partition::Partition;
