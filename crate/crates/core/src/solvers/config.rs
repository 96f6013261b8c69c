use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Environment variable overriding the default solver timeout, in milliseconds.
pub const TIMEOUT_ENV: &str = "DIMKIT_TIMEOUT_MS";

/// Limits for the exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest instance size accepted (vertices, or poset elements).
    pub max_n: usize,
    pub timeout: Duration,
}

impl SearchConfig {
    pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

    /// Defaults for the graph oracles: 10 vertices, 60 s.
    pub fn graphs() -> Self {
        SearchConfig { max_n: 10, timeout: Self::DEFAULT_TIMEOUT }
    }

    /// Defaults for poset dimension: 8 elements, 60 s.
    pub fn posets() -> Self {
        SearchConfig { max_n: 8, timeout: Self::DEFAULT_TIMEOUT }
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    /// Applies `DIMKIT_TIMEOUT_MS` when it is set to a valid integer.
    pub fn with_env_timeout(self) -> Self {
        match std::env::var(TIMEOUT_ENV).ok().and_then(|s| s.trim().parse::<u64>().ok()) {
            Some(ms) => self.with_timeout(Duration::from_millis(ms)),
            None => self,
        }
    }

    pub(crate) fn check_size(&self, size: usize) -> Result<()> {
        if size > self.max_n {
            return Err(Error::Capacity { size, bound: self.max_n });
        }
        Ok(())
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock { deadline: Instant::now() + self.timeout, ticks: 0, expired: false }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self::graphs()
    }
}

/// Cheap deadline polling for recursive searches.
pub(crate) struct Clock {
    deadline: Instant,
    ticks: u32,
    expired: bool,
}

impl Clock {
    /// Returns `true` once the deadline has passed. Polls the system clock
    /// on the first call and every 256 calls after.
    #[inline]
    pub fn expired(&mut self) -> bool {
        if self.expired {
            return true;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 256 == 1 && Instant::now() >= self.deadline {
            self.expired = true;
        }
        self.expired
    }
}
