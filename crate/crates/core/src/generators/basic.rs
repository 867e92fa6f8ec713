use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::cartesian;

/// The named families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cycle,
    Path,
    Complete,
    Ladder,
    StackedPrism,
    Petersen,
    Desargues,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Cycle,
        Family::Path,
        Family::Complete,
        Family::Ladder,
        Family::StackedPrism,
        Family::Petersen,
        Family::Desargues,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Ladder => "ladder",
            Family::StackedPrism => "stacked_prism",
            Family::Petersen => "petersen",
            Family::Desargues => "desargues",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// Builds a member of `family`. Parameters: cycle `[n]`, path `[m]`,
/// complete `[n]`, ladder `[l]` (giving F_{2l}), stacked_prism `[n, m]`;
/// petersen and desargues take none.
pub fn basic(family: Family, params: &[usize]) -> Result<Graph> {
    let arity = match family {
        Family::Petersen | Family::Desargues => 0,
        Family::StackedPrism => 2,
        _ => 1,
    };
    if params.len() != arity {
        return Err(Error::BadParams(format!("{} takes {arity} parameter(s), got {}", family.name(), params.len())));
    }
    match family {
        Family::Cycle => cycle(params[0]),
        Family::Path => path(params[0]),
        Family::Complete => complete(params[0]),
        Family::Ladder => ladder(params[0]),
        Family::StackedPrism => stacked_prism(params[0], params[1]),
        Family::Petersen => Ok(generalized_petersen(5, 2)),
        Family::Desargues => Ok(generalized_petersen(10, 3)),
    }
}

/// `C_n` on `0..n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_m`: `m` vertices in a row.
pub fn path(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::BadParams("path needs m >= 1".into()));
    }
    Graph::new(m, (1..m).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParams("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `F_{2l}`: the cycle `u_1..u_{2l}` (ids `0..2l`) plus the rungs
/// `u_k u_{2l+1-k}` for `2 <= k <= l-1`. `F_2` is `K_2`.
pub fn ladder(l: usize) -> Result<Graph> {
    match l {
        0 => Err(Error::BadParams("ladder needs l >= 1".into())),
        1 => complete(2),
        _ => {
            let n = 2 * l;
            let rungs = (2..l).map(|k| (k - 1, n - k));
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).chain(rungs))
        }
    }
}

/// `C_n □ P_m`; vertex `(i, j)` of cycle position `i` and layer `j` is
/// `i * m + j`.
pub fn stacked_prism(n: usize, m: usize) -> Result<Graph> {
    Ok(cartesian(&cycle(n)?, &path(m)?).0)
}

/// `GP(n, k)`: outer cycle `0..n`, spokes `i ~ n+i`, inner `n+i ~ n+i+k`.
pub fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::from_edge_set(2 * n, edges).expect("generalized Petersen graph")
}
