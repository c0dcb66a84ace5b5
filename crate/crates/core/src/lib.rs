//! Finite permutation groups with Hall systems, the formation `N^π` of direct
//! products of a π-group and a nilpotent π′-group, its projectors and covering
//! subgroups, and brute-force verifiers for the theorems relating them.
//!
//! ```
//! use hallstone::{catalog_lookup, projectors, all_subgroups, PrimeSet};
//!
//! let s4 = catalog_lookup("S4").unwrap().group().unwrap();
//! let lattice = all_subgroups(&s4).unwrap();
//! let found = projectors(&lattice, &PrimeSet::of(&[2, 5]));
//! assert_eq!(found.len(), 3);
//! assert!(found.iter().all(|p| p.order() == 8));
//! ```

pub mod catalog;
pub mod cli;
pub mod error;
pub mod formation;
pub mod group;
pub mod hall;
pub mod io;
pub mod lattice;
pub mod perm;
pub mod primes;
pub mod quotient;
pub mod verify;

pub use catalog::{catalog_lookup, CatalogEntry};
pub use error::{Error, Result};
pub use formation::{
    carter_subgroups, covering_subgroups, in_npi, is_dnormal, is_dnormal_reduction,
    is_self_dnormalizing, npi_maximal_subgroups, npi_residual, projectors, star_property,
};
pub use group::{generate_group, generate_group_with, Elem, Group, Limits, Subgroup};
pub use hall::{
    complement_pi_bases, enumerate_hall_systems, hall_subgroups, is_pi_separable, sylow_subgroups,
    HallSystem,
};
pub use lattice::{all_subgroups, SubgroupLattice};
pub use perm::Permutation;
pub use primes::PrimeSet;
pub use quotient::quotient_group;
