//! Command-line front end: octonion literals, JSON reports and the
//! `solve` / `spectrum` / `table` drivers.

pub mod commands;
pub mod literal;
pub mod report;

pub use commands::{run_solve, run_spectrum, run_table, CliError, Exit, Options, Outcome};
pub use literal::{format_octonion, parse_octonion, OctLiteral, ParseError};
pub use report::{canonical_json, Report};
