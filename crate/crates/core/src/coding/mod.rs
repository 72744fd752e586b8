//! The coded orbit `y_j = (P^j x)_1`, its block structure and the exact
//! measure of its cylinders.

mod blocks;
mod cylinders;
mod encode;

pub use blocks::{bar_params, concatenation_image, BarEntry, BarParams};
pub use cylinders::{
    complexity, complexity_depth, cylinder_table, cylinder_table_truncated, default_max_depth,
    language, refine_cells, successor_pushforward, ComplexityReport, CylinderEntry, CylinderGroup,
    CylinderTable, RefinementCell,
};
pub use encode::{
    bits_to_string, encode, exotic_integers, exotic_sequence, generator_check, GeneratorOutcome,
    SymbolicWindow, DEFAULT_MAX_SEQUENCE, EXOTIC_OFFSET,
};
