//! Direct search for realizations: a randomized local search, an exhaustive
//! oracle for small orders, and sweeps over every admissible multiset.

mod brute;
mod local;
mod sweep;

pub use brute::{brute_force, default_brute_cap, Oracle, DEFAULT_BRUTE_CAP};
pub use local::local_search;
pub use sweep::{
    enumerate_admissible, enumerate_all, necessity_check, sweep, CountVectors, NecessityRow,
    SweepReport, SweepRow,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Budget and seeding for [`local_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub rng_seed: u64,
    pub max_restarts: usize,
    /// Non-improving moves tolerated before a restart.
    pub max_steps_per_restart: usize,
    /// Restarts run concurrently in batches of this size.
    pub parallel_restarts: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            rng_seed: 0,
            max_restarts: 64,
            max_steps_per_restart: 2000,
            parallel_restarts: 8,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_restarts == 0 || self.max_steps_per_restart == 0 || self.parallel_restarts == 0 {
            return Err(Error::InvalidParameters("search budgets must be positive".into()));
        }
        Ok(())
    }
}
