//! Leaf functions of graphs, caterpillar sequences and prefix normal words.
//!
//! The leaf function of a graph maps each `i` to the largest number of
//! leaves of an induced subtree on `i` vertices. For caterpillars, the
//! shifted first differences of that function (the leaf word) are exactly
//! the prefix normal binary words; this crate provides both the exhaustive
//! oracle and the fast caterpillar route, plus the word and sequence algebra
//! connecting them.

pub mod caterpillar;
pub mod error;
pub mod graph;
pub mod leaf_function;
pub mod leaf_word;
pub mod oracle;
pub mod trees;
pub mod verify;
pub mod word;

pub use caterpillar::{hasse_covers, hasse_dot, CaterpillarPoset, CaterpillarSequence};
pub use error::{Error, Result};
pub use graph::Graph;
pub use leaf_function::{LeafFunction, LeafValue};
pub use leaf_word::{
    delta_leaf_word, leaf_equivalent, leaf_function_from_word, realize_caterpillar, LeafLetter,
    LeafWord, LeafWordClass, Rejection,
};
pub use oracle::{
    enumerate_induced_subtrees, fully_leafed_witness, leaf_function_bruteforce, leaf_function_with,
    OracleConfig,
};
pub use trees::enumerate_free_trees;
pub use word::{enumerate_pnw, BinaryWord, F1Profile, PrefixNormalViolation};
