use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{FactorWitness, OrderVariant, QuadWitness};

use super::basic::stacked_prism;

/// `C_{4N} □ P_M` plus the `2N` antipodal diagonals of the base layer, with
/// the witness splitting off those diagonals. Base vertex `v_i` is
/// `(i - 1) * M`.
pub fn stacked_cube_factor(big_n: usize, big_m: usize) -> Result<(Graph, FactorWitness)> {
    if big_n < 1 || big_m < 1 {
        return Err(Error::BadParams(format!("stacked_cube_factor needs N, M >= 1, got ({big_n}, {big_m})")));
    }
    let n = 4 * big_n;
    let j_prime = stacked_prism(n, big_m)?;
    let base = |i: usize| (i % n) * big_m;
    let pairs: Vec<(usize, usize)> = (0..2 * big_n).map(|i| (base(i), base(i + 2 * big_n))).collect();
    let witness = FactorWitness {
        region: (0..n).map(base).collect(),
        pairs,
        order_variant: OrderVariant::Ord2,
        j_prime,
    };
    Ok((witness.assemble()?, witness))
}

/// `C_{2N+1} □ P_M`, whose cover is `C_{4N+2} □ P_M`.
pub fn odd_prism_factor(big_n: usize, big_m: usize) -> Result<Graph> {
    if big_n < 1 || big_m < 1 {
        return Err(Error::BadParams(format!("odd_prism_factor needs N, M >= 1, got ({big_n}, {big_m})")));
    }
    stacked_prism(2 * big_n + 1, big_m)
}

/// A factor whose cover is a 3-connected quadrangulation.
///
/// `J'` has the outer cycle `v_1..v_{2m}` (ids `0..2m`) as region, an inner
/// cycle `u_1..u_{2m}` (ids `2m..4m`) joined by spokes `v_k u_k`, and for
/// `m >= 3` a hub (id `4m`) on `u_1, u_3, ..`, so every face but the region
/// is a quadrilateral. Indices: `r` is `i` ones then `m - i` twos,
/// `s_1 = 3`, and `s` steps by 2 except by 1 right after position `i`.
pub fn quad_factor(m: usize, i: usize) -> Result<(Graph, FactorWitness, QuadWitness)> {
    if m < 2 || i < 1 || i >= m {
        return Err(Error::BadParams(format!("quad_factor needs m >= 2 and 1 <= i <= m-1, got ({m}, {i})")));
    }
    let two_l = 2 * m;
    let mut edges = Vec::new();
    for k in 0..two_l {
        edges.push((k, (k + 1) % two_l));
        edges.push((two_l + k, two_l + (k + 1) % two_l));
        edges.push((k, two_l + k));
    }
    let mut n = 2 * two_l;
    if m >= 3 {
        edges.extend((0..two_l).step_by(2).map(|k| (two_l + k, n)));
        n += 1;
    }
    let j_prime = Graph::new(n, edges)?;
    let r: Vec<usize> = (0..m).map(|t| if t < i { 1 } else { 2 }).collect();
    let mut s = vec![3];
    for t in 1..m {
        let step = if t == i { 1 } else { 2 };
        s.push(s[t - 1] + step);
    }
    let labeling: Vec<usize> = (0..two_l).collect();
    let pairs = r.iter().zip(&s).map(|(&a, &b)| (labeling[a - 1], labeling[b - 1])).collect();
    let witness = FactorWitness { j_prime, pairs, region: labeling.clone(), order_variant: OrderVariant::Ord2 };
    Ok((witness.assemble()?, witness, QuadWitness { labeling, r, s }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::generators::basic::complete;
    use crate::planar::{is_polyhedron, is_quadrangulation};
    use crate::products::cover;
    use crate::recognition::{verify_factor_witness, verify_quad_witness};

    #[test]
    fn stacked_cube_factors() {
        let (k4, w) = stacked_cube_factor(1, 1).unwrap();
        assert!(is_isomorphic(&k4, &complete(4).unwrap()).unwrap());
        assert!(verify_factor_witness(&k4, &w).unwrap().valid);
        let (j, w) = stacked_cube_factor(1, 2).unwrap();
        assert!(is_isomorphic(&cover(&j).0, &stacked_prism(4, 4).unwrap()).unwrap());
        assert!(verify_factor_witness(&j, &w).unwrap().valid);
        let (j, _) = stacked_cube_factor(2, 1).unwrap();
        assert!(is_isomorphic(&cover(&j).0, &stacked_prism(8, 2).unwrap()).unwrap());
        assert!(stacked_cube_factor(0, 1).is_err());
    }

    #[test]
    fn odd_prism_factors() {
        let c = cover(&odd_prism_factor(1, 3).unwrap()).0;
        assert!(is_isomorphic(&c, &stacked_prism(6, 3).unwrap()).unwrap());
        let c = cover(&odd_prism_factor(2, 2).unwrap()).0;
        assert!(is_isomorphic(&c, &stacked_prism(10, 2).unwrap()).unwrap());
    }

    #[test]
    fn quad_factor_indices_and_cover() {
        let (_, _, q) = quad_factor(6, 3).unwrap();
        assert_eq!(q.r, vec![1, 1, 1, 2, 2, 2]);
        assert_eq!(q.s, vec![3, 5, 7, 8, 10, 12]);
        for (m, i) in [(2, 1), (5, 2), (6, 3)] {
            let (j, w, q) = quad_factor(m, i).unwrap();
            assert!(verify_quad_witness(&j, &w, &q).unwrap(), "({m}, {i})");
            let c = cover(&j).0;
            assert!(is_quadrangulation(&c) && is_polyhedron(&c), "({m}, {i})");
        }
        assert!(quad_factor(3, 3).is_err());
    }
}
