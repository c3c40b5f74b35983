//! Report types shared between the `opcalc` binary and its tests.

pub mod report;
