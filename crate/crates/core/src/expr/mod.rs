//! Text surface: expression syntax, run configuration and table files.

mod config;
mod format;
mod parse;
mod table;

pub use config::{parse_generators, OutputFormat, RunConfig};
pub use format::FormatKey;
pub use parse::{parse_elem, parse_element, parse_tensor2, parse_tensor3, Value};
pub use table::TableFile;
