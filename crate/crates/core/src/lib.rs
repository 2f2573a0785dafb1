//! Exact equivariant homology for barbell diffeomorphisms.
//!
//! [`deckgroup`] and [`groupring`] provide the deck groups of covers and
//! exact arithmetic in `F2[G]` and `Z[G]`. [`equivariant`] holds lifted
//! classes, equivariant pairings and the barbell action. [`presentations`]
//! turns image classes into module presentations and their invariants.
//! [`scenarios`] packages built-in geometries and runnable reproductions,
//! and [`cli`] is the `barbell` binary's front end.
//!
//! ```
//! use barbell::groupring::Coefficients;
//! use barbell::equivariant::BarbellSpec;
//! use barbell::presentations::{f2_quotient_dim, present_from_scenario};
//! use barbell::scenarios::geometries::{laurent_element, torus_complement};
//!
//! let g = torus_complement(Coefficients::F2).unwrap();
//! let specs = [
//!     BarbellSpec::new("S_h", "S_h", laurent_element(2)),
//!     BarbellSpec::new("S_v", "S_v", laurent_element(3)),
//! ];
//! let m = present_from_scenario(&g, &specs, &g.attaching, &g.disks).unwrap();
//! assert_eq!(f2_quotient_dim(&m).unwrap(), Some(12));
//! ```

pub mod cli;
pub mod deckgroup;
pub mod equivariant;
pub mod error;
pub mod groupring;
pub mod presentations;
pub mod scenarios;
