//! Normalized Laplacian spectra of connected graphs, the general Randić
//! index R₋₁, and per-index eigenvalue localization bounds, with brute-force
//! verification campaigns at desk scale.

pub mod eigbounds;
pub mod graph;
pub mod randic;
pub mod report;
pub mod rootbounds;
pub mod spectral;
pub mod verify;
