//! Command line front end for the envelope calculator: a small ring
//! description DSL, command dispatch over the three backends, and
//! text/JSON reports.

pub mod ast;
pub mod eval;
pub mod json;
pub mod parse;
pub mod report;

pub use ast::{Backend, BaseExpr, RingExpr, SummandExpr};
pub use eval::{run, CliCommand, CliError, RunOptions};
pub use parse::{parse, ParseError};
pub use report::{Report, ReportBody};
