//! File formats, instance catalog, named check suites and report
//! rendering around [`ydl_core`].
//!
//! The `ydl` binary exposes one verb:
//!
//! ```text
//! ydl check <suite> --algebra <file|catalog-key> [--r <file|key>]
//!     [--zeta <file|key>] [--variant 1..4] [--report text|machine]
//!     [--unchecked]
//! ```
//!
//! Exit codes: 0 every check passed, 1 a check failed (the witness is in
//! the report), 2 input or shape error.

pub mod catalog;
pub mod format;
pub mod report;
pub mod suite;
