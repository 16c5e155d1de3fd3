//! Independent ground truth by exhaustive search, plus graph generators.

mod bruteforce;
mod counterexample;
mod enumerate;
mod random;

pub use bruteforce::*;
pub use counterexample::*;
pub use enumerate::*;
pub use random::*;

use alloc::vec::Vec;
use core::ops::ControlFlow;

/// Visits every `k`-subset of `0..n` in lexicographic order.
///
/// Stops early when `f` returns `ControlFlow::Break`.
pub fn for_each_combination<F>(n: usize, k: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k > n {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return ControlFlow::Continue(());
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
