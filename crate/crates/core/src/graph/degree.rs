use std::cmp::Ordering;
use std::ops::Add;

use crate::error::{domain, Result};

/// Vertex degrees sorted in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut values: Vec<usize>) -> DegreeSequence {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(values)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

fn sorted_desc<T: Copy + PartialOrd>(x: &[T]) -> Vec<T> {
    let mut v = x.to_vec();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
    v
}

fn prefix_dominated<T>(x: &[T], y: &[T]) -> Result<(bool, T, T)>
where
    T: Copy + PartialOrd + Add<Output = T> + Default,
{
    if x.len() != y.len() {
        return domain(format!("length mismatch: {} vs {}", x.len(), y.len()));
    }
    let (xs, ys) = (sorted_desc(x), sorted_desc(y));
    let (mut sx, mut sy) = (T::default(), T::default());
    let mut ok = true;
    for (&a, &b) in xs.iter().zip(&ys) {
        sx = sx + a;
        sy = sy + b;
        if sx > sy {
            ok = false;
        }
    }
    Ok((ok, sx, sy))
}

/// `x ≺_w y`: every prefix sum of `x` sorted decreasingly is at most the matching prefix sum of `y`.
pub fn is_weakly_majorized_by<T>(x: &[T], y: &[T]) -> Result<bool>
where
    T: Copy + PartialOrd + Add<Output = T> + Default,
{
    Ok(prefix_dominated(x, y)?.0)
}

/// `x ≺ y`: weak majorization with equal totals.
pub fn is_majorized_by<T>(x: &[T], y: &[T]) -> Result<bool>
where
    T: Copy + PartialOrd + Add<Output = T> + Default,
{
    let (ok, sx, sy) = prefix_dominated(x, y)?;
    Ok(ok && sx == sy)
}
