//! Product expansions, the two-, three- and four-factor families, the
//! sporadic tables, and classification of solutions against them.

mod classify;
mod expand;
mod poly;
mod solution;
mod tables;

pub use classify::{classify, Classification, Label, Match};
pub use expand::{
    compute_x, eisenstein_product, expand_product, quadratic_root_x, solve_x, Factor,
    SelectionVector,
};
pub use poly::IntPolynomial;
pub use solution::{product_of_phi3, Solution};
pub use tables::{
    catalog, four_factor_family, four_factor_solution, ones_tuples, sporadics,
    three_factor_family, three_factor_params, two_factor_family, CatalogEntry, FourFamily,
    ONES_4, SPORADIC_3, SPORADIC_4,
};
