//! Sorting valid pairs into the twelve row families, and checking that
//! sorting against brute force.

mod rows;
mod search;

pub use rows::{
    bardakov_left, bardakov_right, generate_row, matches_row, recover_row12, row_membership,
    Row12Params, RowLabel, RowParams, Sign,
};
pub use search::{
    enumerate_unimodular, exhaustive_search, generator_instances, grid_radius, orders_crosscheck,
    parameter_grid, Execution, OrderDisagreement, OrdersReport, RowInstance, SearchReport,
};
