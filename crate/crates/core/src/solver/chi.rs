use serde::Serialize;

use super::{find_k_coloring, max_independent_set, packing_bound, AlphaResult, KColoring, SearchBudget};
use crate::construct::construct;
use crate::error::{Error, Result};
use crate::graph::{Coloring, TorusDims};

/// A vertex and its four torus neighbors are pairwise within distance 2, so
/// the square always contains a 5-clique.
pub const CLIQUE_LOWER_BOUND: u32 = 5;

/// Bounds on the chromatic number of the square of a torus.
#[derive(Clone, Debug, Serialize)]
pub struct ChiResult {
    pub dims: TorusDims,
    pub lower: u32,
    pub upper: u32,
    /// A verified coloring with `upper` colors.
    #[serde(skip)]
    pub witness: Option<Coloring>,
    pub certified: bool,
    /// The independence search, when one was needed for the lower bound.
    #[serde(skip)]
    pub alpha: Option<AlphaResult>,
    /// How the lower bound was established.
    pub lower_source: LowerSource,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerSource {
    Clique,
    Packing,
    IndependenceNumber,
    Exhaustion,
}

/// `ceil(mn / alpha)`: each color class is an independent set.
pub fn ceil_lower_bound(dims: TorusDims, alpha: usize) -> Result<u32> {
    if alpha < 1 {
        return Err(Error::Usage("ceil_lower_bound: alpha must be at least 1".into()));
    }
    Ok(dims.order().div_ceil(alpha) as u32)
}

/// Chromatic number of the square of `T_{m,n}` with certified bounds.
///
/// The upper bound starts from [`construct`]; the lower bound from the
/// 5-clique and `ceil(mn / a)` with `a` the packing bound, or the
/// independence number when the packing bound is not enough. Then
/// `find_k_coloring(upper - 1)` is repeated until it is exhausted or the
/// budget (applied per search call) runs out.
pub fn chromatic_number(dims: TorusDims, budget: SearchBudget) -> Result<ChiResult> {
    let built = construct(dims.m(), dims.n())?;
    let mut upper = built.k;
    let mut witness = built.coloring;

    let mut lower = CLIQUE_LOWER_BOUND;
    let mut lower_source = LowerSource::Clique;
    let packing = ceil_lower_bound(dims, packing_bound(dims))?;
    if packing > lower {
        lower = packing;
        lower_source = LowerSource::Packing;
    }
    let mut alpha = None;
    if lower < upper {
        let a = max_independent_set(dims, budget);
        let from_alpha = ceil_lower_bound(dims, a.upper_bound)?;
        if from_alpha > lower {
            lower = from_alpha;
            lower_source = LowerSource::IndependenceNumber;
        }
        alpha = Some(a);
    }

    while lower < upper {
        match find_k_coloring(dims, upper - 1, budget) {
            KColoring::Found(c) => {
                upper = c.k();
                witness = c;
            }
            KColoring::Exhausted => {
                lower = upper;
                lower_source = LowerSource::Exhaustion;
            }
            KColoring::BudgetOut => break,
        }
    }

    Ok(ChiResult {
        dims,
        lower,
        upper,
        witness: Some(witness),
        certified: lower == upper,
        alpha,
        lower_source,
    })
}
