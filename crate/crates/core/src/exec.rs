//! Sequential or data-parallel execution of independent work items.
//!
//! With the `parallel` feature the default mode fans out over rayon's global
//! pool. Either way, results come back in input order, so every report is
//! identical between modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            ExecMode::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            ExecMode::Sequential
        }
    }
}

impl ExecMode {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            ExecMode::Sequential => items.into_iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            ExecMode::Parallel => items.into_par_iter().map(f).collect(),
        }
    }

    /// Whether `pred` holds for every item (short-circuits in both modes).
    pub fn all<T, F>(self, items: Vec<T>, pred: F) -> bool
    where
        T: Send,
        F: Fn(T) -> bool + Sync + Send,
    {
        match self {
            ExecMode::Sequential => items.into_iter().all(pred),
            #[cfg(feature = "parallel")]
            ExecMode::Parallel => items.into_par_iter().all(pred),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = ExecMode::Sequential.map(items.clone(), |x| x * x % 17);
        let def = ExecMode::default().map(items, |x| x * x % 17);
        assert_eq!(seq, def);
    }
}
