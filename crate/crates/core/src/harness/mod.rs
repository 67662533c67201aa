//! Empirical constants and identity suites.
