//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the work units run on the rayon
//! pool; without it the same closures run in a plain loop. Results are
//! merged in unit order either way, so output is identical across both
//! builds.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over the units and concatenates the results in unit order.
#[cfg(feature = "parallel")]
pub fn ordered_flat_map<T, U, F>(units: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    let chunks: Vec<Vec<U>> = units.into_par_iter().map(f).collect();
    chunks.into_iter().flatten().collect()
}

/// Maps `f` over the units and concatenates the results in unit order.
#[cfg(not(feature = "parallel"))]
pub fn ordered_flat_map<T, U, F>(units: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    units.into_iter().flat_map(f).collect()
}

/// Runs `f` over the units and returns the first failure in unit order,
/// or the total number of cases checked.
#[cfg(feature = "parallel")]
pub fn first_failure<T, F>(units: Vec<T>, f: F) -> Result<usize, String>
where
    T: Send,
    F: Fn(T) -> Result<usize, String> + Sync + Send,
{
    let outcomes: Vec<Result<usize, String>> = units.into_par_iter().map(f).collect();
    collect_outcomes(outcomes)
}

/// Runs `f` over the units and returns the first failure in unit order,
/// or the total number of cases checked.
#[cfg(not(feature = "parallel"))]
pub fn first_failure<T, F>(units: Vec<T>, f: F) -> Result<usize, String>
where
    T: Send,
    F: Fn(T) -> Result<usize, String> + Sync + Send,
{
    let outcomes: Vec<Result<usize, String>> = units.into_iter().map(f).collect();
    collect_outcomes(outcomes)
}

fn collect_outcomes(outcomes: Vec<Result<usize, String>>) -> Result<usize, String> {
    let mut total = 0;
    for o in outcomes {
        total += o?;
    }
    Ok(total)
}
