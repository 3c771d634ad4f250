//! Theorem-level verification: per-graph checks, exhaustive and seeded
//! random sweeps, sharpness at the extremal graphs, the ordering chain
//! between intermediate families, and reproducible campaigns.

mod campaign;
mod check;
mod ordering;
mod sample;

pub use campaign::{
    run_campaign, run_campaign_with, write_reports_csv, CampaignConfig, CampaignSummary, RandomSweep,
    SharpnessRanges, Sweep,
};
pub use check::{
    check_theorem1, check_theorem1_with, check_theorem2, check_theorem2_with, sharpness_theorem1,
    sharpness_theorem2, theorem1_extremal, CheckReport, SharpnessPoint, Theorem, Verdict, CHECK_TOLERANCE,
    SHARPNESS_TOLERANCE,
};
pub use ordering::{odd_partitions, ordering_suite, OrderingRanges, OrderingResult, CLAIMS, ORDERING_MARGIN};
pub use sample::{
    enumerate_connected, enumerate_connected_bipartite, random_balanced_bipartite, random_connected, rng,
    Rng64, BIPARTITE_ENUMERATION_CAP, ENUMERATION_CAP, MAX_ATTEMPTS,
};
