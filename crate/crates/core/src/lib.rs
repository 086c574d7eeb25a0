//! Path DGAs of higraphs and bigraphs.
//!
//! A higraph is a hypergraph whose edges glue transitively and without
//! cycles; its paths form a DGA graded by length. Blowing up a higraph gives
//! a bigraph, whose paths carry gluing moves and a weight grading.
//!
//! ```
//! use pathdga::text::{element_text, parse_path, BiNotation};
//! use pathdga::{morse, Bigraph, BigraphDga, VertexAssignment};
//!
//! let d = BigraphDga::new(Bigraph::blowup(morse()));
//! let n = BiNotation { graph: d.graph() };
//! let doo = parse_path(&n, "Doo").unwrap().node(0);
//! assert_eq!(element_text(&n, &d.delta_edge(doo).unwrap()), "Doo·Doo + Dos·Bsu·Duo");
//! let r = d.check_structure(&VertexAssignment::uniform2(d.graph().base())).unwrap();
//! assert_eq!(r.to_string(), "expansion=19 cancelled_pairs=3 survivors=13 equal=true");
//! ```

pub mod algebra;
pub mod bidga;
pub mod bigraph;
pub mod error;
pub mod hidga;
pub mod higraph;
pub mod moves;
pub mod path;
pub mod text;

pub use algebra::{Element, ExpansionReport, Multiset, StructureReport};
pub use bidga::{BiElement, BigraphDga, BlockMatrix};
pub use bigraph::{BiEdge, BiPath, BiSet, BiVertex, Bigraph, Counts, Flavor};
pub use error::{Error, Result};
pub use hidga::{HiElement, HiPath, HigraphDga};
pub use higraph::{
    catalog, composition, hypercube, morse, HiEdge, Higraph, Hypergraph, VSet, VertexAssignment,
    VertexId,
};
pub use moves::{Glued, GluingSequence, MoveKind};
pub use path::{Arrow, Edge, Marker, Path, VertexSet};
