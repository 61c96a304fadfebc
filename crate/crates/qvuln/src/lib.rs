//! Critical-link identification for transport networks.
//!
//! `qvuln` reformulates the bi-level "which k simultaneous link failures hurt
//! the most" problem as a QUBO over binary disruption variables. Disruption
//! impact coefficients come from user-equilibrium traffic assignment
//! (Frank-Wolfe with an extended BPR travel-time function), and the QUBO is
//! minimized with a simulated quantum annealer, exact enumeration, or one of
//! four metaheuristic baselines.
//!
//! Module map:
//!
//! - [`network`]: directed networks with BPR link parameters and OD demand,
//!   CSV/TNTP loaders, and the built-in Nguyen-Dupuis benchmark.
//! - [`assignment`]: Frank-Wolfe user equilibrium under a disruption
//!   scenario, total system travel time (TSTT), Wardrop audits.
//! - [`qubo`]: single-link impact coefficients `c`, pairwise interaction
//!   coefficients `B`, penalty weights, QUBO energies, seeded synthetic
//!   instances, and the bundled Nguyen-Dupuis coefficient fixture.
//! - [`annealer`]: simulated quantum annealing over M replicas with
//!   temperature and transverse-field schedules; classical SA as the M = 1
//!   degenerate case.
//! - [`baselines`]: GA / PSO / SA / TS minimizers and the runtime comparison
//!   harness.
//! - [`oracle`]: exact enumeration over cardinality-k subsets and
//!   big-integer combination counting.
//! - [`hybrid`]: the two end-to-end workflows (coefficient mode and direct
//!   mode) plus report generation.
//! - [`harness`]: experiment configs, k / e / lambda sweeps, scalability
//!   runs, and persistent run records.
//!
//! Every stochastic component takes an explicit seed and is deterministic
//! given one. See the examples/ directory for one runnable program per
//! capability; the `qvuln` binary exposes the same operations as
//! subcommands.

pub mod annealer;
pub mod assignment;
pub mod baselines;
pub mod error;
pub mod harness;
pub mod hybrid;
pub mod network;
pub mod oracle;
pub mod qubo;

pub use error::{Error, Result};
