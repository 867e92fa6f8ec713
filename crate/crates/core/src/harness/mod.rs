//! Experiment registry, report types and the graph catalog.

pub mod catalog;
mod experiments;

pub use catalog::{catalog, CatalogEntry, Provenance};
pub use experiments::{
    dou_specs, generator_grid, run_experiment, Bounds, ExperimentReport, InstanceRecord, Verdict, EXPERIMENTS,
};
