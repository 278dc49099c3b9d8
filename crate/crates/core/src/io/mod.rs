//! Input formats, output renderers and graph generators.

mod emit;
mod generate;
mod parse;

pub use emit::{
    emit_decomposition_json, emit_decomposition_text, emit_dimacs, emit_dot, emit_edgelist,
    emit_graph_json,
};
pub use generate::{
    enumerate_labeled_graphs, labeled_graph_count, labeled_graph_from_mask, random_graph,
    SplitMix64, MAX_LABELED_VERTICES,
};
pub use parse::{detect_format, parse, parse_dimacs, parse_edgelist, GraphDocument, SourceFormat};
