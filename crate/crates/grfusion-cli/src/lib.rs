//! IO companion to `grfusion-core`: command line front end, JSON formats,
//! text rendering, the on-disk coefficient cache and the differential
//! verification sweeps.

pub mod app;
pub mod cache;
pub mod format;
pub mod render;
pub mod verify;
