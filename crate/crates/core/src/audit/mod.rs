//! Bounded-degree cover counting, complexity bookkeeping and the prism
//! verification pipeline.

mod pipeline;
mod representations;
mod volume;

pub use pipeline::{
    prism_verify, range_from_bounds, Obstruction, PrismEntry, PrismReport, SlopeDemo, Status, DEMO_PAIRS,
    NON_EFFECTIVE_STEPS,
};
pub use representations::{count_representations, GroupPresentation, RepresentationFilter, ENUMERATION_GUARD};
pub use volume::{
    catalan_by_series, complexity, degree_bound_for_budget, format_volume, lobachevsky, round_volume,
    CoverCertificate, VolumeConstant, FIGURE_EIGHT, ONE_CUSP_FLOOR, V0,
};
