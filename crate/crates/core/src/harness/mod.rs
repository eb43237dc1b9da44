//! Experiment drivers: refinement studies, random-breakpoint trials,
//! breakpoint-perturbation sweeps, reference integrals and CSV output.

pub mod csvout;
pub mod exec;
pub mod experiments;
pub mod montecarlo;
pub mod oracle;
pub mod order;
pub mod perturbation;
pub mod study;

pub use exec::Execution;
pub use montecarlo::{random_breakpoint_study, random_breakpoint_study_with, MonteCarloReport, TrialRecord};
pub use oracle::{exact_integral, exact_integral_oracle};
pub use order::{convergence_order, fitted_order};
pub use perturbation::{location_perturbation_study, PerturbationOutcome};
pub use study::{power_of_two_levels, refinement_study, refinement_study_with, JumpSource, StudyConfig};
