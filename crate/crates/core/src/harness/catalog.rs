use serde::Serialize;

use crate::error::Result;
use crate::formats::{emit_graph6, parse_graph6};
use crate::generators::basic::{complete, generalized_petersen, stacked_prism};
use crate::generators::{
    cubic_build, cubic_demo_specs, dou_h, dou_j, odd_prism_factor, quad_factor, stacked_cube_factor, t3333_build,
    DouHSpec, T3333Final, T3333Script,
};
use crate::graph::Graph;
use crate::planar::dual;
use crate::products::cover;
use crate::recognition::kronecker_roots;

/// Whether an entry is a published drawing or a stand-in for one that is
/// only available as an image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Figure,
    DerivedRepresentative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub family: &'static str,
    pub params: String,
    pub graph6: String,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn graph(&self) -> Result<Graph> {
        parse_graph6(&self.graph6)
    }
}

/// Two triangular prisms, each missing the triangle edge `0-2`, joined by
/// the edges `0-0'` and `2-2'`. Cubic with connectivity 2.
pub fn cubic_c0_representative() -> Graph {
    let p = stacked_prism(3, 2).expect("prism");
    p.disjoint_union(&p)
        .without_edges(&[(0, 2), (6, 8)])
        .and_then(|g| g.with_edges([(0, 6), (2, 8)]))
        .expect("join of two prisms")
}

/// Dual of `K4` with an octahedral band of three vertices inside each of
/// its triangles: the four faces dual to `K4` are 9-gons meeting pairwise,
/// never three at a vertex, and every other face is even. Cubic, 28
/// vertices.
pub fn cubic_c2_representative() -> Graph {
    let mut edges = complete(4).expect("K4").edges().to_vec();
    let mut n = 4;
    for t in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        let y = [n, n + 1, n + 2];
        n += 3;
        edges.extend([(y[0], y[1]), (y[1], y[2]), (y[2], y[0])]);
        for k in 0..3 {
            edges.extend((0..3).filter(|&j| j != k).map(|j| (y[k], t[j])));
        }
    }
    let d = Graph::new(n, edges).expect("triangulation");
    dual(&d).expect("triangulation is polyhedral")
}

/// The root of the Desargues graph other than the Petersen graph.
fn desargues_other_root() -> Graph {
    let roots = kronecker_roots(&generalized_petersen(10, 3)).expect("Desargues graph is bipartite");
    let pet = generalized_petersen(5, 2);
    roots
        .roots
        .into_iter()
        .map(|r| r.j)
        .find(|j| !crate::canon::is_isomorphic(j, &pet).unwrap_or(true))
        .expect("two roots")
}

/// Every catalogued graph, built by the generators.
pub fn catalog() -> Vec<CatalogEntry> {
    let entry = |name, family, params: &str, g: &Graph, provenance| CatalogEntry {
        name,
        family,
        params: params.to_string(),
        graph6: emit_graph6(g),
        provenance,
    };
    use Provenance::*;
    let f8 = dou_h(&DouHSpec { half: 4, diagonals: vec![(1, 6), (2, 5)] }).expect("F8");
    let prism5 = stacked_prism(5, 2).expect("prism");
    let [cube_build, prism_build] = [0, 1].map(|i| cubic_build(&cubic_demo_specs()[i]).expect("demo spec").0);
    vec![
        entry("tetrahedron", "complete", "4", &complete(4).unwrap(), Figure),
        entry("cube", "stacked_prism", "4,2", &cover(&complete(4).unwrap()).0, Figure),
        entry("c3_prism_p3", "odd_prism_factor", "1,3", &odd_prism_factor(1, 3).unwrap(), Figure),
        entry("cube_with_face_diagonals", "stacked_cube_factor", "1,2", &stacked_cube_factor(1, 2).unwrap().0, Figure),
        entry("t3333_start", "t3333", "[],F1", &t3333_build(&T3333Script::new(vec![], T3333Final::F1)).unwrap(), Figure),
        entry("quad_factor_6_3", "quad_factor", "6,3", &quad_factor(6, 3).unwrap().0, DerivedRepresentative),
        entry("ladder_f8", "dou_h", "4;(1,6),(2,5)", &f8, Figure),
        entry("ladder_f8_partner", "dou_j", "4;(1,6),(2,5)", &dou_j(&f8).unwrap(), Figure),
        entry("petersen", "petersen", "", &generalized_petersen(5, 2), Figure),
        entry("petersen_twin", "desargues_root", "", &desargues_other_root(), DerivedRepresentative),
        entry("desargues", "desargues", "", &generalized_petersen(10, 3), Figure),
        entry("cubic_c0", "prism_join", "", &cubic_c0_representative(), DerivedRepresentative),
        entry("cubic_c1", "stacked_prism", "5,2", &prism5, DerivedRepresentative),
        entry("cubic_c2", "k4_octahedral_dual", "", &cubic_c2_representative(), DerivedRepresentative),
        entry("cubic_c3", "complete", "4", &complete(4).unwrap(), DerivedRepresentative),
        entry("cubic_build_cube", "cubic_build", "cube", &cube_build, DerivedRepresentative),
        entry("cubic_build_prism", "cubic_build", "prism", &prism_build, DerivedRepresentative),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::planar::is_polyhedron;
    use crate::recognition::{classify_odd_faces, ConditionTag};

    #[test]
    fn entries_round_trip() {
        let cat = catalog();
        let mut names: Vec<_> = cat.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cat.len());
        for e in &cat {
            let g = e.graph().unwrap();
            assert_eq!(emit_graph6(&g), e.graph6);
        }
    }

    #[test]
    fn cubic_representatives_cover_every_condition() {
        let reps = [
            (cubic_c0_representative(), ConditionTag::C0),
            (stacked_prism(5, 2).unwrap(), ConditionTag::C1),
            (cubic_c2_representative(), ConditionTag::C2),
            (complete(4).unwrap(), ConditionTag::C3),
        ];
        for (j, tag) in reps {
            assert!(j.is_regular(3));
            assert_eq!(classify_odd_faces(&j).unwrap().tag, tag);
            let c = cover(&j).0;
            assert!(c.is_regular(3) && is_polyhedron(&c), "{tag}");
        }
        assert_eq!(cubic_c2_representative().n(), 28);
    }

    #[test]
    fn petersen_pair() {
        let b = desargues_other_root();
        assert!(!is_isomorphic(&b, &generalized_petersen(5, 2)).unwrap());
        assert!(is_isomorphic(&cover(&b).0, &generalized_petersen(10, 3)).unwrap());
    }
}
