//! Quality measures for textured triangle meshes.
//!
//! `texqual` loads OBJ/MTL/PNG models of the kind produced by
//! photo-reconstruction pipelines and computes a full set of geometry,
//! UV-parametrization, texture and defect measures:
//!
//! - mesh statistics: element counts, surface area, boundaries, genus
//! - UV atlas statistics: chart count, texel occupancy, crumbliness and
//!   solidity, sampling uniformity, conformal distortion
//! - seam analysis: color discrepancy across texture seams
//! - defect counts: degenerate and zero-area faces, duplicate and
//!   unreferenced vertices, non-manifold elements, UV overlaps
//!
//! The [`report::analyze`] entry point runs the whole pipeline on a model
//! file and returns a [`report::QualityReport`] that serializes to a stable
//! JSON document. The `texqual` binary wraps it in a command line tool with
//! a batch mode for whole directories of models.
//!
//! Inputs are often dirty: parsing never aborts on malformed content, and
//! any measure that cannot be computed is reported as `null` together with
//! a flag explaining why.

pub mod adjacency;
pub mod batch;
pub mod charts;
pub mod error;
pub mod io;
pub mod mesh;
pub mod raster;
pub mod report;
pub mod seam;
pub mod topology;
pub mod uv;

pub use adjacency::{build_adjacency, classify_seams, EdgeRecord, ManifoldClass, MeshAdjacency};
pub use charts::{extract_charts, Chart};
pub use error::{Error, Result};
pub use io::obj::{parse_obj, ParseWarning};
pub use io::texture::{load_texture, TextureImage};
pub use mesh::{Face, MaterialRef, TexturedMesh};
pub use raster::{rasterize_coverage, CoverageGrid};
pub use report::{analyze, AnalysisOptions, QualityReport};
pub use seam::{build_seam_pairs, mesh_discrepancy, DiscrepancyStats, SeamPair};
pub use topology::{defect_scan, topology_stats, DefectReport, TopologyStats};
pub use uv::{crumbliness, detect_overlaps, occupancy, qc_distortion, sampling_field};

/// Two texture coordinates within this distance (normalized UV units) count
/// as coinciding; exporters routinely duplicate identical `vt` records, which
/// must not register as seams.
pub const UV_SEAM_TOLERANCE: f64 = 1e-7;

/// Relative zero-area threshold: a face whose 3D area is at most
/// `AREA_EPSILON * d^2`, with `d` the bounding-box diagonal, counts as
/// zero-area. Model units in the wild vary by orders of magnitude, so the
/// threshold scales with the model.
pub const AREA_EPSILON: f64 = 1e-12;

/// An atlas whose total UV area falls at or below this is degenerate and has
/// no defined crumbliness.
pub const DEGENERATE_ATLAS_AREA: f64 = 1e-16;
