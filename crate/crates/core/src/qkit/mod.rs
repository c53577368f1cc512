//! The named special functions: q-Pochhammer symbols, Gaussian binomials,
//! the Legendre symbol mod 3 with its Eisenstein realization, theta-type
//! bilateral sums, and the triple/quintuple product building blocks.

pub mod character;
pub mod pochhammer;
pub mod qbinom;
pub mod quintuple;
pub mod theta;
pub mod triple;

pub use character::{eisenstein_chi, legendre3, EisensteinInt};
pub use pochhammer::{
    poch_qq, poch_qq_infinite, poch_qq_range, pochhammer_finite, pochhammer_infinite,
    ratio_cubic, ratio_neg_one, ratio_q3_q6, Length, PochhammerSpec,
};
pub use qbinom::{qbinom, qbinom_product};
pub use quintuple::{quintuple_product, quintuple_sides, quintuple_sum, QuintupleSpec};
pub use theta::{theta_sum, theta_weight, CharSpec, QuadExp, SignRule};
pub use triple::{bilateral_sides, qbinom_theorem_sides, triple_product_poly_sides};
