//! Exact inverse systems, standard bases and constructive one-dimensional Gorenstein algebras.

pub mod dp;
pub mod error;
pub mod field;
pub mod fixture;
pub mod gadm;
pub mod invsys;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod report;
pub mod ring;
pub mod showcase;
pub mod stdbasis;

pub use dp::{contract, span_basis, DpPoly, SpanBasis};
pub use error::{Error, Result};
pub use field::{Coeff, Field};
pub use invsys::{ann_dp, ann_module, dual_generator, is_artinian_gorenstein, perp_truncated, DualTruncation};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Poly;
pub use ring::Ring;
pub use stdbasis::{HilbertData, Ideal, Mode, StandardBasis};
