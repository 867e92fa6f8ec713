//! Browser demo bindings. Every export takes graph6 text and returns JSON.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use kpoly::formats::{emit_graph6, parse_graph6};
use kpoly::generators::basic::{basic, Family};
use kpoly::planar::{is_planar, is_polyhedron, planar_embed};
use kpoly::products::{cartesian, cover, kronecker, ProductLabeling};
use kpoly::recognition::{classify_odd_faces, kronecker_roots_with};
use kpoly::{Graph, Limits};

#[derive(Serialize)]
struct Drawing {
    graph6: String,
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
    /// Unit-square coordinates.
    positions: Vec<(f64, f64)>,
    polyhedral: bool,
}

/// Tutte embedding with the longest face on a circle for 3-connected planar
/// graphs, a circle otherwise.
fn layout(g: &Graph) -> Vec<(f64, f64)> {
    let n = g.n();
    let circle = |k: usize, of: usize| {
        let t = std::f64::consts::TAU * k as f64 / of.max(1) as f64;
        (0.5 + 0.45 * t.cos(), 0.5 + 0.45 * t.sin())
    };
    let outer = is_polyhedron(g)
        .then(|| planar_embed(g)?.faces().ok()?.faces.into_iter().max_by_key(|f| f.len()))
        .flatten();
    let Some(outer) = outer else {
        return (0..n).map(|v| circle(v, n)).collect();
    };
    let mut pos = vec![(0.5, 0.5); n];
    let mut fixed = vec![false; n];
    for (k, &v) in outer.vertices.iter().enumerate() {
        pos[v] = circle(k, outer.len());
        fixed[v] = true;
    }
    for _ in 0..400 {
        for v in (0..n).filter(|&v| !fixed[v]) {
            let d = g.degree(v) as f64;
            let (sx, sy) = g.neighbors(v).iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            pos[v] = (sx / d, sy / d);
        }
    }
    pos
}

fn drawing(g: &Graph, labels: Option<&ProductLabeling>) -> Drawing {
    Drawing {
        graph6: emit_graph6(g),
        n: g.n(),
        edges: g.edges().to_vec(),
        labels: (0..g.n()).map(|v| labels.map_or_else(|| v.to_string(), |l| l.label(v))).collect(),
        positions: layout(g),
        polyhedral: is_polyhedron(g),
    }
}

fn graph(text: &str) -> Result<Graph, JsError> {
    parse_graph6(text.trim()).map_err(|e| JsError::new(&e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

/// A basic family member, e.g. `("stacked_prism", "4 3")`.
#[wasm_bindgen]
pub fn generate(family: &str, params: &str) -> Result<String, JsError> {
    let f = Family::from_name(family).ok_or_else(|| JsError::new(&format!("unknown family {family}")))?;
    let p = params.split_whitespace().map(str::parse).collect::<Result<Vec<usize>, _>>()?;
    let g = basic(f, &p).map_err(|e| JsError::new(&e.to_string()))?;
    Ok(to_json(&drawing(&g, None)))
}

/// `kind` is `cover`, `kronecker` or `cartesian`; `b` is ignored for covers.
#[wasm_bindgen]
pub fn product(kind: &str, a: &str, b: &str) -> Result<String, JsError> {
    let a = graph(a)?;
    let (g, l) = match kind {
        "cover" => cover(&a),
        "kronecker" => kronecker(&a, &graph(b)?),
        "cartesian" => cartesian(&a, &graph(b)?),
        _ => return Err(JsError::new(&format!("unknown product {kind}"))),
    };
    Ok(to_json(&drawing(&g, Some(&l))))
}

#[derive(Serialize)]
struct Classification {
    planar: bool,
    polyhedral: bool,
    cover_polyhedral: bool,
    condition: Option<String>,
    odd_faces: Vec<Vec<usize>>,
}

#[wasm_bindgen]
pub fn classify(g6: &str) -> Result<String, JsError> {
    let g = graph(g6)?;
    let planar = is_planar(&g);
    let cond = if planar { classify_odd_faces(&g).ok() } else { None };
    Ok(to_json(&Classification {
        planar,
        polyhedral: is_polyhedron(&g),
        cover_polyhedral: is_polyhedron(&cover(&g).0),
        condition: cond.as_ref().map(|c| c.tag.to_string()),
        odd_faces: cond.map(|c| c.odd_faces).unwrap_or_default(),
    }))
}

/// Every `J` with `J ∧ K2 ≅ G`, each with a drawing.
#[wasm_bindgen]
pub fn roots(g6: &str) -> Result<String, JsError> {
    let g = graph(g6)?;
    let roots = kronecker_roots_with(&g, &Limits::default().with_max_n(64)).map_err(|e| JsError::new(&e.to_string()))?;
    let drawings: Vec<Drawing> = roots.roots.iter().map(|r| drawing(&r.j, None)).collect();
    Ok(to_json(&drawings))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_of_k4_is_cube() {
        let d: serde_json::Value = serde_json::from_str(&product("cover", "C~", "").unwrap()).unwrap();
        assert_eq!(d["n"], 8);
        assert_eq!(d["polyhedral"], true);
        assert_eq!(d["labels"][1], "(0,y)");
        let inside = d["positions"].as_array().unwrap().iter().all(|p| (0.0..=1.0).contains(&p[0].as_f64().unwrap()));
        assert!(inside);
    }

    #[test]
    fn classify_and_roots() {
        let c: serde_json::Value = serde_json::from_str(&classify("C~").unwrap()).unwrap();
        assert_eq!(c["condition"], "C3");
        let cube = emit_graph6(&cover(&basic(Family::Complete, &[4]).unwrap()).0);
        let r: serde_json::Value = serde_json::from_str(&roots(&cube).unwrap()).unwrap();
        assert_eq!(r.as_array().unwrap().len(), 1);
        assert_eq!(r[0]["n"], 4);
    }
}
