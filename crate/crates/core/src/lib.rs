//! Hecke insertion and K-theoretic growth diagrams on rectangles and stack polyominoes,
//! joined at the turns by the jeu de taquin map.

pub mod error;
pub mod partition;
pub mod word;
pub mod shape;
pub mod tableau;
pub mod jdt;
pub mod growth;
pub mod applications;
pub mod oracle;

pub use error::{Error, Result};
pub use partition::{Partition, TabCell};
pub use shape::{ColumnSpan, FillCell, StackFilling, StackPolyomino};
pub use tableau::{hecke_insert, hecke_insert_word, HeckeResult, IncreasingTableau, InsertStep, SetValuedTableau};
pub use word::Word;
pub use applications::{longest_ne_chain, longest_se_chain, symmetry_involution, LinkedPartition};
pub use growth::{grow_stack, shrink_stack, Boundary, BoundaryLabel, GrowthDiagram};
pub use jdt::{jdt_forward, jdt_map, jdt_map_inverse, jdt_reverse, rectify_with};
