//! Kronecker and Cartesian products with row-major numbering: the product
//! vertex `(a, b)` gets id `a * |V(B)| + b`.

use serde::Serialize;

use crate::graph::Graph;

/// Which factor vertices each product vertex came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductLabeling {
    /// `pairs[v] = (a, b)`.
    pub pairs: Vec<(usize, usize)>,
    /// Covers tag the second coordinate `x` (0) or `y` (1).
    pub cover_tags: bool,
}

impl ProductLabeling {
    fn row_major(na: usize, nb: usize, cover_tags: bool) -> Self {
        let pairs = (0..na).flat_map(|a| (0..nb).map(move |b| (a, b))).collect();
        ProductLabeling { pairs, cover_tags }
    }

    /// `"(a,b)"`, or `"(a,x)"` / `"(a,y)"` for covers.
    pub fn label(&self, v: usize) -> String {
        let (a, b) = self.pairs[v];
        if self.cover_tags {
            format!("({a},{})", if b == 0 { 'x' } else { 'y' })
        } else {
            format!("({a},{b})")
        }
    }
}

/// `A ∧ B`: `(a1,b1) ~ (a2,b2)` iff `a1 ~ a2` and `b1 ~ b2`.
pub fn kronecker(a: &Graph, b: &Graph) -> (Graph, ProductLabeling) {
    let nb = b.n();
    let mut edges = Vec::with_capacity(2 * a.edge_count() * b.edge_count());
    for &(a1, a2) in a.edges() {
        for &(b1, b2) in b.edges() {
            edges.push((a1 * nb + b1, a2 * nb + b2));
            edges.push((a1 * nb + b2, a2 * nb + b1));
        }
    }
    let g = Graph::new(a.n() * nb, edges).expect("Kronecker product of simple graphs is simple");
    (g, ProductLabeling::row_major(a.n(), nb, false))
}

/// `A □ B`: one coordinate equal, the other adjacent.
pub fn cartesian(a: &Graph, b: &Graph) -> (Graph, ProductLabeling) {
    let nb = b.n();
    let mut edges = Vec::new();
    for x in 0..a.n() {
        for &(b1, b2) in b.edges() {
            edges.push((x * nb + b1, x * nb + b2));
        }
    }
    for &(a1, a2) in a.edges() {
        for y in 0..nb {
            edges.push((a1 * nb + y, a2 * nb + y));
        }
    }
    let g = Graph::new(a.n() * nb, edges).expect("Cartesian product of simple graphs is simple");
    (g, ProductLabeling::row_major(a.n(), nb, false))
}

fn k2() -> Graph {
    Graph::new(2, [(0, 1)]).expect("K2")
}

/// Kronecker cover `J ∧ K2`; `(v,x) = 2v`, `(v,y) = 2v + 1`.
pub fn cover(j: &Graph) -> (Graph, ProductLabeling) {
    let (g, mut lab) = kronecker(j, &k2());
    lab.cover_tags = true;
    (g, lab)
}

/// Prism `H □ K2`.
pub fn prism(h: &Graph) -> Graph {
    cartesian(h, &k2()).0
}

/// The swap `(v,x) <-> (v,y)` on a cover of a graph with `n` vertices.
pub fn cover_involution(n: usize) -> Vec<usize> {
    (0..2 * n).map(|v| v ^ 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn cube() -> Graph {
        Graph::new(8, (0..8).flat_map(|v| [1, 2, 4].into_iter().filter(move |b| v & b == 0).map(move |b| (v, v | b))))
            .unwrap()
    }

    #[test]
    fn small_products() {
        assert!(is_isomorphic(&kronecker(&complete(4), &k2()).0, &cube()).unwrap());
        assert!(is_isomorphic(&cover(&cycle(3)).0, &cycle(6)).unwrap());
        let c4c = cover(&cycle(4)).0;
        assert_eq!(c4c.components().len(), 2);
        assert!(is_isomorphic(&cartesian(&cycle(4), &k2()).0, &cube()).unwrap());
        assert!(is_isomorphic(&prism(&k2()), &cycle(4)).unwrap());
    }

    #[test]
    fn numbering_and_labels() {
        let (g, lab) = cover(&complete(4));
        assert_eq!(lab.pairs[5], (2, 1));
        assert_eq!(lab.label(5), "(2,y)");
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(0, 2));
        let (_, lab) = cartesian(&cycle(3), &cycle(4));
        assert_eq!(lab.pairs[7], (1, 3));
        assert_eq!(lab.label(7), "(1,3)");
    }

    #[test]
    fn edgeless_factor_gives_edgeless_product() {
        let (g, _) = kronecker(&complete(3), &Graph::empty(4));
        assert_eq!((g.n(), g.edge_count()), (12, 0));
    }
}
