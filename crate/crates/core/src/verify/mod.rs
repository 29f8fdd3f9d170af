//! Evaluates both sides of the regularity, a-invariant and depth relations
//! between a graded algebra and its Rees algebra on concrete inputs.

pub mod gin;
pub mod ini;
pub mod maxideal;
pub mod report;
pub mod section3;

pub use gin::{check_gin, gin_randomized, is_strongly_stable, GinResult};
pub use ini::check_ini;
pub use maxideal::{check_link1, check_maximal_ideal_profile, check_maximal_ideal_theorems, check_rs_corollary, MaxIdealOptions};
pub use report::{any_fails, digest, Reporter, TheoremReport, Value, Verdict};
pub use section3::check_section3;

use crate::cohomology::{profile_from_resolution, profile_invariants, safe_window, CohomologyProfile, ProfileInvariants};
use crate::error::Result;
use crate::groebner::Ideal;
use crate::io::CacheDescriptor;
use crate::resolution::{betti_invariants, BettiInvariants, BettiTable, Presentation, Resolution};

/// Resolution, Betti data and local cohomology of `B/J`.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub n: usize,
    pub resolution: Resolution,
    pub betti: BettiTable,
    pub betti_inv: BettiInvariants,
    pub profile: CohomologyProfile,
    pub invariants: ProfileInvariants,
}

pub fn analyze(ideal: &Ideal) -> Result<Analysis> {
    let res = Presentation::quotient(ideal)?.resolve()?;
    analyze_resolution(res)
}

pub fn analyze_resolution(res: Resolution) -> Result<Analysis> {
    let window = safe_window(&res, 6);
    let profile = profile_from_resolution(&res, window)?;
    let betti = res.betti_table();
    Ok(Analysis {
        n: res.nvars(),
        betti_inv: betti_invariants(&betti),
        invariants: profile_invariants(&profile),
        betti,
        profile,
        resolution: res,
    })
}

/// Digest of an ideal's canonical form together with extra parameters.
pub fn ideal_digest(ideal: &Ideal, extra: &[&str]) -> String {
    let d = CacheDescriptor::for_ideal(ideal, "verify", &[]);
    let text = serde_json::to_string(&d).expect("descriptor serializes");
    let mut parts = vec![text.as_str()];
    parts.extend_from_slice(extra);
    digest(&parts)
}
