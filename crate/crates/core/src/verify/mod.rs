//! Numerical certification of the lemma and the tail bounds.
//!
//! The extremal two-point law maximises `E[exp(sX)]` among all zero-mean laws
//! on `[a, b]` for every `s`, so checking the MGF bound against it on an
//! `s`-grid certifies the bound for the whole class at those `s`. The
//! remaining checks test that extremality directly on random discrete laws,
//! locate the maximum of `ψ''`, and compare the tail bounds against seeded
//! Monte Carlo estimates and exact enumeration.

mod checks;
mod ci;
mod distribution;
mod monte_carlo;
mod rng;

pub use checks::{
    log_spaced_grid, verify_extremality, verify_extremality_with, verify_lemma,
    verify_psi_second_max, ExtremalityReport, LemmaReport, PsiSecondMaxReport,
    EXTREMALITY_REL_TOL, LEMMA_MARGIN_TOL, PSI_SECOND_MU_MAX,
};
pub use ci::{clopper_pearson_upper, CI_CONFIDENCE};
pub use distribution::{
    extremal_two_point, mgf, random_two_point, random_zero_mean, zero_mean_mixture,
    DiscreteDistribution,
};
pub use monte_carlo::{
    compare_with_bound, empirical_tail, empirical_tail_with, enumerate_tail, McComparison,
    TailEstimate, MAX_ENUMERATION_OUTCOMES,
};
pub use rng::StreamRng;
