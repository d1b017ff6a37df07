//! Haptic terrain sensing for legged robots, in simulation.
//!
//! A legged robot that cannot trust its cameras can still learn two things
//! about the ground by touching it: which way the surface faces, and how
//! slippery it is. This crate simulates that probing loop end to end at desk
//! scale, with deterministic seeded noise so every experiment is exactly
//! reproducible.
//!
//! - [`terrain`] models inclined planar patches with a known normal and
//!   Coulomb friction coefficient. It answers contact queries and decides
//!   stick vs. slip, acting as ground truth for the estimators.
//! - [`exploration`] places touch probes on a circle around a desired
//!   foothold and records the resulting contact points.
//! - [`normal`] recovers the surface normal from pairwise contact-point
//!   differences via a symmetric 3x3 eigendecomposition, classifies the
//!   constraint rank, and tracks estimation confidence with a Normal-Gamma
//!   posterior and an interval-mass stopping rule.
//! - [`friction`] probes stick/slip behaviour under a scheduled normal
//!   force, ratcheting the commanded friction coefficient down on observed
//!   slips, and accumulates a Beta-Bernoulli posterior whose CDF drives the
//!   stopping rule.
//! - [`experiment`] runs seeded parameter sweeps over slopes and friction
//!   coefficients, emitting CSV traces and a JSON manifest that reproduces
//!   the run byte for byte.
//! - [`math`] holds the shared numerics: 3-vector algebra, a cyclic Jacobi
//!   eigensolver, log-gamma / regularized incomplete beta / Student-t CDF,
//!   and a small counter-based RNG.
//!
//! # Quick start
//!
//! ```
//! use contact_sense::exploration::ExplorationConfig;
//! use contact_sense::math::{Rng, Vec3};
//! use contact_sense::normal::{
//!     estimate_until_confident, NormalGammaPrior, NormalStopRule,
//! };
//! use contact_sense::terrain::{make_wedge, NoiseModel};
//!
//! let patch = make_wedge(0.3, 0.6, 0.25).unwrap();
//! let mut rng = Rng::new(7);
//! let result = estimate_until_confident(
//!     &patch,
//!     Vec3::ZERO,
//!     &ExplorationConfig::default(),
//!     &NoiseModel::noiseless(),
//!     &mut rng,
//!     NormalGammaPrior::default(),
//!     &NormalStopRule::default(),
//! )
//! .unwrap();
//! let n = result.estimate.unwrap().normal;
//! assert!((n.as_vec3() - patch.true_normal().as_vec3()).norm() < 1e-9);
//! ```
//!
//! The `contact-sense` binary exposes the experiment harness on the command
//! line; the `examples/` directory has one runnable example per capability.

pub mod exploration;
pub mod experiment;
pub mod friction;
pub mod math;
pub mod normal;
pub mod terrain;

pub use math::{Rng, UnitVec3, Vec3};
pub use terrain::{make_wedge, NoiseModel, TerrainPatch};
