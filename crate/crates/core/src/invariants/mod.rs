//! HOMFLY evaluation and knot identification against a reference table.

mod homfly;
mod table;

use thiserror::Error;

use crate::diagram::DiagramError;

pub use homfly::{homfly, homfly_link, homfly_with_budget, DEFAULT_CROSSING_BUDGET};
pub use table::{
    identify, identify_polygon, identify_polygon_along, identify_with_budget, Identification, KnotId, KnotTable, IDENTIFY_AXES,
    SHIPPED_PD_CODES,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    #[error("diagram has {crossings} crossings after simplification, over the budget of {budget}")]
    CrossingBudget { crossings: usize, budget: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("reference table line {line}: {msg}")]
    Table { line: usize, msg: String },
    #[error("duplicate knot name {0:?} in reference table")]
    DuplicateName(String),
}
