//! Exhaustive generation of free trees and small connected graphs, and the
//! graph6 codec used to ingest larger corpora.

mod connected;
pub mod graph6;
mod trees;

pub use connected::{connected_graphs, MAX_NATIVE_ORDER};
pub use graph6::{decode as decode_graph6, encode as encode_graph6, read_file as read_graph6_file, Graph6Reader};
pub use trees::{trees, TreeStream, MAX_TREE_ORDER};
