//! Wavelet-based multifractal detrended fluctuation analysis.
//!
//! The pipeline runs series → returns → profile → wavelet trend removal →
//! generalized fluctuation functions → scaling exponents → singularity
//! spectrum, then compares spectra across series through their widths:
//! a pairwise distance matrix, single-linkage dendrogram and threshold graphs.

pub mod cli;
pub mod cluster;
pub mod error;
pub mod graph;
pub mod ingest;
pub mod metric;
pub mod mfdfa;
pub mod output;
pub mod synth;
pub mod wavelet;

pub use error::{Error, Result};
