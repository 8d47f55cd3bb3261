//! File formats, JSON reports, parallel runners and the `turanl2` command
//! line on top of [`turanl2_core`].

pub mod cli;
pub mod formats;
pub mod json;
pub mod par;
pub mod suite;
