//! Exact verification of the polynomial ABC theorem (Mason-Stothers) and its
//! corollaries over the rationals and small prime fields.
//!
//! The library is organized bottom-up:
//! - [`field`]: exact arithmetic in Q and F_p
//! - [`poly`]: dense univariate polynomials, Euclidean division, monic gcd
//! - [`radical`]: square-free decomposition, radicals, p-th roots
//! - [`abc`]: Wronskians and the Mason-Stothers verdict engine
//! - [`corollaries`]: Fermat-Catalan/FLT with descent, Davenport, the
//!   associated-powers witness, and elliptic non-parametrizability
//! - [`harness`]: exhaustive and randomized searches with JSON reports

pub mod abc;
pub mod corollaries;
pub mod error;
pub mod field;
pub mod harness;
pub mod poly;
pub mod radical;

pub use abc::{
    mason_stothers_verdict, ms_noncoprime_verdict_char0, ms_subcall_bound, noncoprime_bound,
    wronskian, wronskian_common, wronskian_degree_bound_holds, MsVerdict, MsVerdictKind,
};
pub use corollaries::{
    associated_pow_witness, davenport_check, davenport_prime_check,
    elliptic_parametrization_check, flt_catalan_check, flt_catalan_deriv_check, flt_check,
    CatalanParams, ConstancyKind, ConstancyReport, RatFunc,
};
pub use error::{Error, Result};
pub use field::{FieldDesc, FieldElem};
pub use harness::{
    enumerate_polys, random_suite, reproduce_paper_examples, search_flt, search_mason_stothers,
    ExampleRecord, SearchConfig, SearchReport, SearchTarget, TripleRecord,
};
pub use poly::Poly;
pub use radical::{
    div_radical, is_squarefree, pth_root, radical, radical_split, squarefree_decompose,
    SquareFreeDecomposition,
};
