use std::collections::BTreeSet;

use serde::Serialize;

use crate::canon::{automorphisms, certificate, is_isomorphic, Certificate, Limits};
use crate::error::{Error, Result};
use crate::generators::basic::{complete, cycle, path, stacked_prism};
use crate::graph::{components_avoiding, is_k_connected, Graph};
use crate::planar::{is_outerplanar, is_polyhedron};

/// One way of writing a polyhedron as a Cartesian product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CartesianVariant {
    /// `C_n □ P_m`
    StackedPrism { n: usize, m: usize },
    /// `H □ K2` with `H` outerplanar and Hamiltonian.
    PrismOver { h: Graph },
}

/// Distinct Cartesian expressions, distinct as unordered factor pairs up to
/// isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartesianForm {
    pub variants: Vec<CartesianVariant>,
}

impl CartesianForm {
    pub fn len(&self) -> usize {
        self.variants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variants.is_empty()
    }

    pub fn prism_bases(&self) -> Vec<&Graph> {
        self.variants
            .iter()
            .filter_map(|v| match v {
                CartesianVariant::PrismOver { h } => Some(h),
                _ => None,
            })
            .collect()
    }
}

fn factor_key(a: &Graph, b: &Graph) -> Result<(Certificate, Certificate)> {
    let (x, y) = (certificate(a)?, certificate(b)?);
    Ok(if x <= y { (x, y) } else { (y, x) })
}

/// Bases `H` with `G = H □ K2`, from automorphisms that are perfect
/// matchings of `G` whose removal leaves two swapped copies.
fn prism_bases(g: &Graph, limits: &Limits) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = Vec::new();
    let mut seen = BTreeSet::new();
    for tau in automorphisms(g, limits)? {
        if !(0..g.n()).all(|u| tau[u] != u && tau[tau[u]] == u && g.has_edge(u, tau[u])) {
            continue;
        }
        let matching: Vec<(usize, usize)> = (0..g.n()).filter(|&u| u < tau[u]).map(|u| (u, tau[u])).collect();
        let rest = g.without_edges(&matching)?;
        let comps = components_avoiding(&rest, &vec![false; g.n()]);
        if comps.len() != 2 || comps[0].iter().any(|&u| comps[0].binary_search(&tau[u]).is_ok()) {
            continue;
        }
        let h = rest.induced(&comps[0]);
        if !is_outerplanar(&h) || !is_k_connected(&h, 2) {
            continue;
        }
        if seen.insert(certificate(&h)?) {
            out.push(h);
        }
    }
    Ok(out)
}

/// Every way to write the polyhedron `g` as `C_n □ P_m` or `H □ K2`.
pub fn cartesian_forms(g: &Graph) -> Result<CartesianForm> {
    cartesian_forms_with(g, &Limits::from_env())
}

pub fn cartesian_forms_with(g: &Graph, limits: &Limits) -> Result<CartesianForm> {
    if !is_polyhedron(g) {
        return Err(Error::NotPolyhedral);
    }
    limits.check_n(g.n(), "Cartesian form search")?;
    let mut variants = Vec::new();
    let mut keys = BTreeSet::new();
    let p = g.n();
    for n in 3..=p / 2 {
        if p % n != 0 {
            continue;
        }
        let m = p / n;
        let candidate = stacked_prism(n, m)?;
        if candidate.edge_count() == g.edge_count()
            && is_isomorphic(&candidate, g)?
            && keys.insert(factor_key(&cycle(n)?, &path(m)?)?)
        {
            variants.push(CartesianVariant::StackedPrism { n, m });
        }
    }
    let k2 = complete(2)?;
    for h in prism_bases(g, limits)? {
        if keys.insert(factor_key(&h, &k2)?) {
            variants.push(CartesianVariant::PrismOver { h });
        }
    }
    Ok(CartesianForm { variants })
}
