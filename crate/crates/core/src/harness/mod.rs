//! Claim suite, state files and radial scans behind the command-line tool.

pub mod claims;
pub mod scan;
pub mod statefile;

pub use claims::{run_claim, run_claim_suite, ClaimResult, SuiteConfig, SuiteReport, CLAIM_IDS};
pub use scan::{radial_scan, ScanClass, ScanResult, ScanSample, Transition};
pub use statefile::StateFile;
