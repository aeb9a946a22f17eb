//! Enumeration limits. Every exhaustive search in the crate takes one of
//! these and fails with [`Error::BudgetExceeded`](crate::Error) instead of
//! truncating.

/// Limits for the bounded witness search of the centrality decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of factors in a candidate product of class members.
    pub max_factors: usize,
    /// Largest candidate subalgebra `C` considered.
    pub max_witness_size: usize,
    /// Largest materialized product searched for candidates.
    pub max_product_size: usize,
    /// Number of generator assignments tried across all products.
    pub max_candidates: usize,
    /// Number of `(beta, gamma)` pairs tested across all candidates.
    pub max_pairs: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_factors: 3,
            max_witness_size: 64,
            max_product_size: 4096,
            max_candidates: 10_000,
            max_pairs: 100_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Largest algebra whose subuniverses are enumerated.
    pub max_subuniverse_size: usize,
    /// Largest search space `|B|^|generators|` for homomorphism enumeration.
    pub max_map_candidates: u128,
    /// Largest algebra whose whole congruence lattice is computed.
    pub max_lattice_size: usize,
    /// Number of coordinates of the product hosting a free algebra.
    pub max_free_coordinates: u128,
    /// Number of elements of a free algebra (or any generated subalgebra).
    pub max_free_size: usize,
    /// Total operation-table entries of any algebra built by closure.
    pub max_table_entries: u128,
    /// Coordinate evaluations spent building a free algebra, estimated as
    /// coordinates times table entries.
    pub max_free_work: u128,
    pub search: SearchBudget,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_subuniverse_size: 8,
            max_map_candidates: 1_000_000,
            max_lattice_size: 10,
            max_free_coordinates: 1_000_000,
            max_free_size: 1_000_000,
            max_table_entries: 20_000_000,
            max_free_work: 1_000_000_000,
            search: SearchBudget::default(),
        }
    }
}
