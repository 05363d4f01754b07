//! Parser, printer, configuration and the command-line driver.

pub mod config;
pub mod parse;
pub mod print;
pub mod run;
pub mod verify;

pub use config::Config;
pub use parse::{parse, parse_element, Expr, ParseContext};
pub use print::{format_word, print_canonical};
pub use run::run;
