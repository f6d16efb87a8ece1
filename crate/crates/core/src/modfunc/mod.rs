//! Siegel functions, level one forms, the Weierstrass p-function, Fricke
//! functions and Weierstrass units as exact q-expansions.
//!
//! Every `prec` argument counts whole powers of q past the leading term.

mod eisenstein;
mod fricke;
mod siegel;
mod vector;

pub use eisenstein::{delta, e4, e6, eta, g2, g3, j_invariant};
pub use fricke::{
    fricke, fricke_difference_siegel, fricke_quotient, verify_fricke_siegel, weierstrass_unit,
    wp_expansion,
};
pub use siegel::{
    bernoulli2, modularity_criterion, siegel, siegel_product_expand, transform_siegel_product,
    CriterionReport, SiegelProduct,
};
pub use vector::RationalVector;
