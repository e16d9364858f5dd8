//! Resistance distances and Kirchhoff indices of generalized R-vertex and
//! R-edge corona graphs.
//!
//! Two independent routes are provided and cross-checked:
//!
//! * a brute-force oracle ([`resistance`]) that reads every resistance off
//!   the group inverse of the full Laplacian, and
//! * structured closed forms ([`closed_form`]) that assemble a {1}-inverse
//!   from `L♯` of the base graph and small per-crown blocks.
//!
//! ```
//! use corona_core::{complete, r_vertex_corona, RVertexClosedForm, ResistanceOracle};
//!
//! let crowns = [complete(1), complete(1)];
//! let cf = RVertexClosedForm::new(&complete(2), &crowns).unwrap();
//! let oracle = ResistanceOracle::new(&r_vertex_corona(&complete(2), &crowns).unwrap().graph).unwrap();
//! assert!((cf.resistance(3, 4).unwrap() - oracle.resistance(3, 4).unwrap()).abs() < 1e-10);
//! ```

pub mod closed_form;
pub mod corona;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod random;
pub mod resistance;

pub use closed_form::{
    conformance, kirchhoff_matches, re_kirchhoff, re_one_inverse, re_resistance, rv_kirchhoff,
    rv_one_inverse, rv_resistance, Coefficients, KirchhoffExpansion, KirchhoffReport,
    REdgeClosedForm, RVertexClosedForm, ResistanceCase,
};
pub use corona::{
    apex_join, r_edge_corona, r_graph, r_vertex_corona, CoronaKind, CoronaResult, Role,
    VertexPartition,
};
pub use error::{Error, Result};
pub use graph::families::{complete, cycle, path, star};
pub use graph::{parse_edge_list, serialize_edge_list, Graph, ParseError, ParseErrorKind};
pub use matrix::{
    block_one_inverse, pseudo_group_inverse, shifted_rank_one_inverse, sym_eigendecompose,
    verify_one_inverse, DenseSymMatrix, EigenDecomposition, Matrix,
};
pub use resistance::{
    cut_vertex_check, edge_sum_check, kirchhoff_index, neighbor_recursion_check,
    resistance_from_one_inverse, resistance_matrix, PairConvention, ResistanceMatrix,
    ResistanceOracle,
};
