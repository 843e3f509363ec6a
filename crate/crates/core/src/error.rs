use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix data has {found} entries, expected {rows}x{cols}")]
    MatrixShape { rows: usize, cols: usize, found: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge {edge} references vertex {vertex}, but the graph has {vertex_count} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, vertex_count: usize },
    #[error("edge id {edge} out of range (graph has {edge_count} edges)")]
    InvalidEdge { edge: usize, edge_count: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("enumeration over {edges} edges exceeds the cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },

    #[error("boundary composition ∂{lower}∂{upper} is not zero")]
    BoundaryNotClosed { lower: usize, upper: usize },
    #[error("dimension {dim} out of range for a complex of dimension {top}")]
    DimensionOutOfRange { dim: usize, top: usize },

    #[error("chain is not a cycle")]
    NotACycle,
    #[error("edge set is not a cycletree")]
    NotCycletree,
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,

    #[error("unicyclizer columns are linearly dependent")]
    DependentColumns,
    #[error("unicyclizer column {column} is not a cycle of the graph")]
    ColumnNotCycle { column: usize },
    #[error("quotient of the cycle space by the unicyclizer has rank {rank}, expected 1")]
    HomologyRank { rank: usize },
    #[error("edge {edge} is a loop and cannot be contracted in a unicyclization")]
    LoopContraction { edge: usize },
    #[error("unicyclizer row at edge {edge} is zero; deleting it would drop the homology rank to 0")]
    ZeroRow { edge: usize },

    #[error("chain is not harmonic")]
    NotHarmonic,
    #[error("the zero chain does not determine a unicyclizer")]
    ZeroHarmonic,
    #[error("harmonic chain is not orthogonal to unicyclizer column {column}")]
    NotOrthogonal { column: usize },
    #[error("complex cannot be read as a graph: {0}")]
    NotAGraph(String),
}
