//! The Catalan curve `x = z + 1/z`: generating functions of the arrowed counts,
//! their Laurent polynomials in `t`, intersection numbers from the top degree,
//! and the WKB check of the quantum curve.

mod fit;
mod fseries;
mod intersect;
mod laurent;
mod poly;
mod wkb;

pub use fit::{f_polynomial, f_polynomial_with, FitReport, FIT_COMPLEXITY_GUARD, FIT_SIZE_GUARD, SURPLUS};
pub use fseries::{f_series, f_series_with, xt_substitution, XtSubstitution, F_SERIES_GUARD};
pub use intersect::{
    dimension_profiles, dvv_oracle, intersection_numbers, intersections_from_polynomial, intersections_from_toprec,
    IntersectionRecord, IntersectionTable,
};
pub use laurent::{LaurentPolynomial, LaurentSpec};
pub use poly::{Poly, RatFunc};
pub use wkb::{
    f01_matches_counts, f02_matches_counts, principal_part_at_branch, s0_prime, s1_prime, wkb_report, wkb_residual,
    WkbOrder, WkbSeries, WKB_ORDER_GUARD,
};
