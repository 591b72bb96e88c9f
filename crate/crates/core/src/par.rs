//! Thread-count control shared by the counting engines.

use std::str::FromStr;

/// How much parallelism a counting call may use.
///
/// Results never depend on this setting; only wall-clock time does.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Parallelism {
    /// Single-threaded, never touches a thread pool.
    #[default]
    Sequential,
    /// A dedicated pool with exactly this many workers.
    Threads(usize),
    /// Whatever pool the caller is already running in (rayon's global pool
    /// by default).
    Ambient,
}

impl Parallelism {
    /// `Threads(0)` and `Threads(1)` collapse to sequential.
    pub fn normalized(self) -> Self {
        if !cfg!(feature = "parallel") {
            return Parallelism::Sequential;
        }
        match self {
            Parallelism::Threads(0) | Parallelism::Threads(1) => Parallelism::Sequential,
            other => other,
        }
    }

    pub fn is_parallel(self) -> bool {
        self.normalized() != Parallelism::Sequential
    }

    /// Rough worker count, used to size work splits.
    pub fn workers(self) -> usize {
        match self.normalized() {
            Parallelism::Sequential => 1,
            Parallelism::Threads(k) => k,
            #[cfg(feature = "parallel")]
            Parallelism::Ambient => rayon::current_num_threads(),
            #[cfg(not(feature = "parallel"))]
            Parallelism::Ambient => 1,
        }
    }

    /// Runs `f` inside the pool this setting describes.
    pub fn install<R, F>(self, f: F) -> R
    where
        R: Send,
        F: FnOnce() -> R + Send,
    {
        match self.normalized() {
            #[cfg(feature = "parallel")]
            Parallelism::Threads(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build()
            {
                Ok(pool) => pool.install(f),
                // pool creation only fails on resource exhaustion; fall back to the caller's thread
                Err(_) => f(),
            },
            _ => f(),
        }
    }
}

impl FromStr for Parallelism {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "auto" | "ambient" => Ok(Parallelism::Ambient),
            "seq" | "sequential" => Ok(Parallelism::Sequential),
            other => other
                .parse::<usize>()
                .map(|k| Parallelism::Threads(k).normalized())
                .map_err(|_| format!("invalid thread count `{other}`")),
        }
    }
}
