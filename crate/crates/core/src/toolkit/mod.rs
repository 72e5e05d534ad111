//! Desk-scale tooling around the solver: the exhaustive oracle, instance
//! generators and the text file formats.

pub mod format;
pub mod generate;
pub mod oracle;

pub use format::{parse_certificate, parse_instance, write_certificate, write_instance};
pub use generate::{gen_named, gen_planted, gen_random};
pub use oracle::{oracle_decide, oracle_solve, ORACLE_MAX_VERTICES};
