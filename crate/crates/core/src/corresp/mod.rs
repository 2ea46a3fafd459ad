//! Points, defect groups and the correspondences.

pub mod points;
pub mod report;
mod theorems;

pub use points::{defect_groups, points_on, trace_ideals, DefectGroup, PointSet, PointedGroup, TraceIdeals};
pub use report::{Fact, Facts, Status};
pub use theorems::{
    verify_first_main, verify_prop_3_3, verify_theorem_3_1, verify_theorem_3_2, verify_theorem_3_2_on,
    CorrespondenceReport, PointSummary,
};
