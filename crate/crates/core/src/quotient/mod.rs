//! Equitable partitions, quotient matrices and exact characteristic
//! polynomials over ℚ[x, α, k].

mod charpoly;
mod g12_pair;
mod parse;
mod partition;
mod poly;

pub use charpoly::{charpoly_exact, det_exact, parse_matrix, PolyMatrix, MAX_SYMBOLIC_DIM};
pub use g12_pair::{
    balanced_spec, check_g12_pair, shifted_spec, six_cell_partition, PairConfig, PairReport, PolyComparison,
    RadiusAgreement, SpectralGap, TermDiff, BALANCED_QUOTIENT, CLAIMED_BALANCED, CLAIMED_DIFFERENCE,
    CLAIMED_SHIFTED, SHIFTED_QUOTIENT,
};
pub use parse::parse_poly;
pub use partition::{is_equitable, quotient_matrix, refine_to_equitable, Partition, QuotientMatrix};
pub use poly::{Monomial, Poly, Var};
