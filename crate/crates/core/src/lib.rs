//! Strong geodetic sets of graphs and Cartesian products.
//!
//! A set `S` of vertices is *strong geodetic* if one shortest path can be
//! fixed for every pair of `S` so that together they cover every vertex. This
//! crate computes the minimum size `sg(G)` exactly, builds explicit sets for
//! several product families, and checks every claim through certificates that
//! a separate checker re-verifies.
//!
//! ```
//! use strong_geodetic::{cartesian_product, generate, sg_product_with_layer_pruning, SolveOptions};
//!
//! let g = generate("complete-minus-edge:5").unwrap();
//! let prism = cartesian_product(&g, &generate("complete:2").unwrap()).unwrap();
//! let out = sg_product_with_layer_pruning(&prism, &SolveOptions::default()).unwrap();
//! assert_eq!(out.value(), Some(4));
//!
//! let cert = out.certificate().unwrap().to_json(prism.graph());
//! assert!(strong_geodetic::checker::check(&cert).is_ok());
//! ```

pub mod bitset;
pub mod certificate;
pub mod checker;
pub mod cli;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod family;
pub mod geodesic;
pub mod graph;
pub mod graph6;
pub mod product;
pub mod solver;
pub mod verification;

pub use bitset::VertexSet;
pub use certificate::{Assignment, Certificate, CertificateJson, PairJson, PairPath};
pub use error::{CertificateError, ConstructionError, FamilyError, Graph6Error, GraphError, SolveError};
pub use family::{generate, Family};
pub use geodesic::{enumerate_geodesics, first_geodesic, Geodesics, DEFAULT_GEODESIC_CAP};
pub use graph::{Graph, Path, Vertex};
pub use graph6::{from_graph6, to_graph6};
pub use product::{cartesian_product, ProductGraph, DEFAULT_PRODUCT_LIMIT};
pub use solver::{
    check_strong_geodetic, find_strong_geodetic_set, lower_bound, sg_product_with_layer_pruning, sg_tree,
    strong_geodetic_number, Decision, Refutation, SetSearch, SgOutcome, SolveOptions,
};
