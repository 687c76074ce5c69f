//! File formats, seeded generators and the command-line front end for
//! `zforce-core`.

pub mod cli;
pub mod formats;
pub mod generate;
