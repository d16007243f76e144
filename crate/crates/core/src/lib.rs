//! Saturation numbers of linear forests, checked by machine.
//!
//! A graph is H-saturated when it has no copy of H but gains one from any
//! added edge. This crate builds the extremal constructions for forests of
//! the form `P_k + tP2`, decides containment and saturation (each fast
//! routine has a brute-force reference), finds all minimum saturated graphs
//! of small order, and checks structural statements over complete
//! enumerations.
//!
//! ```
//! use forest_sat::constructions::g_star;
//! use forest_sat::forest::LinearForestSpec;
//! use forest_sat::saturation::{is_saturated, sat_formula};
//!
//! let h: LinearForestSpec = "P6+3P2".parse().unwrap();
//! let g = g_star(26).unwrap();
//! assert!(is_saturated(&g, &h).is_saturated());
//! assert_eq!(g.size(), sat_formula(26, 3).unwrap());
//! ```
//!
//! The guide in `book/` walks through each module; its code blocks run as
//! doctests of this crate.

pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod matching;
pub mod names;
pub mod saturation;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/forests.md")]
    mod forests {}
    #[doc = include_str!("../../../book/src/saturation.md")]
    mod saturation {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/lemmas.md")]
    mod lemmas {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
