//! Exhaustive census of Schubert class pairs whose quantum K-theory product
//! reaches one power of `q` beyond its quantum cohomology interval.

use crate::comin::{CominData, Shape};
use crate::qdegrees::QCalc;
use rayon::prelude::*;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CensusResult {
    /// Number of unordered pairs of shapes, with repetition.
    pub total: u64,
    /// Pairs whose product has an exceptional degree.
    pub exceptional: u64,
}

impl CensusResult {
    /// The total must be a triangular number `N(N+1)/2` over the `N` shapes.
    pub fn consistent_with(&self, num_shapes: usize) -> bool {
        let n = num_shapes as u64;
        self.total == n * (n + 1) / 2
    }
}

/// Counts unordered pairs `{a, b}` of shapes whose product `O^a * O^b` has
/// an exceptional degree. The pair is evaluated as `O_(dual a) * O^b`;
/// presence does not depend on which member is dualized. The count is
/// deterministic and independent of the number of threads.
pub fn census(c: &CominData) -> CensusResult {
    let q = QCalc::new(c);
    let shapes = c.all_shapes();
    let duals: Vec<Shape> = shapes.iter().map(|&s| c.dual_shape(s)).collect();
    let n = shapes.len();
    let (total, exceptional) = (0..n)
        .into_par_iter()
        .map(|i| {
            let row = (i..n)
                .filter(|&j| q.exceptional_nonempty(duals[i], shapes[j]))
                .count() as u64;
            ((n - i) as u64, row)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    CensusResult { total, exceptional }
}
