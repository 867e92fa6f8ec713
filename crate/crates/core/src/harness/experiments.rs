use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::{canonical_form_with, is_isomorphic, Limits, MAX_N_ENV};
use crate::error::{Error, Result};
use crate::generators::basic::{ladder, stacked_prism};
use crate::generators::{
    cubic_build, cubic_demo_specs, cubic_mutations, dou_h, dou_j, odd_prism_factor, quad_expand, quad_factor,
    stacked_cube_factor, t3333_build, DouHSpec, T3333Script,
};
use crate::graph::{is_bipartite, Graph};
use crate::planar::{is_planar, is_polyhedron, is_quadrangulation, planar_embed};
use crate::products::{cover, prism};
use crate::recognition::{
    cartesian_forms_with, classify_odd_faces, kronecker_roots_with, verify_factor_witness, verify_quad_witness,
    CartesianVariant, ConditionTag,
};

use super::catalog::{catalog, cubic_c0_representative, cubic_c2_representative};

/// Registered experiment names.
pub const EXPERIMENTS: [&str; 10] = [
    "cancellation",
    "stacked_rule",
    "cc_rule",
    "triple_expressibility",
    "bounds_check",
    "t3333_census",
    "quad_census",
    "cubic_census",
    "dou_roundtrip",
    "ingest_classify",
];

/// Parameter caps; unset fields take per-experiment defaults.
#[derive(Clone, Debug, Default)]
pub struct Bounds {
    /// Cycle length cap (`stacked_rule`), half-length cap (`dou_roundtrip`),
    /// `N` cap for stacked and odd-prism factors.
    pub n_max: Option<usize>,
    /// Layer / `m` cap.
    pub m_max: Option<usize>,
    /// Longest T3333 script.
    pub script_len: Option<usize>,
    /// Input graphs for `ingest_classify`; the catalog when absent.
    pub stream: Option<Vec<Graph>>,
    pub limits: Option<Limits>,
}

impl Bounds {
    fn limits(&self) -> Limits {
        self.limits.unwrap_or_else(|| {
            if std::env::var_os(MAX_N_ENV).is_some() {
                Limits::from_env()
            } else {
                Limits::default().with_max_n(128)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// No violation, but some instance exceeded its search budget.
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceRecord {
    pub instance: String,
    pub certificate: String,
    pub outcomes: BTreeMap<&'static str, Value>,
    pub ok: bool,
    pub budget_exceeded: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub parameters: BTreeMap<&'static str, Value>,
    pub instances: Vec<InstanceRecord>,
    pub violations: usize,
    pub budget_exceeded: usize,
    pub verdict: Verdict,
    /// Wall time; left out of the serialized report so reports are
    /// reproducible byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.instances.iter().filter(|r| !r.ok)
    }
}

/// Outcome of one instance: the graph it is about, named results, and
/// whether the claim held.
struct Outcome {
    graph: Graph,
    fields: BTreeMap<&'static str, Value>,
    ok: bool,
}

impl Outcome {
    fn new(graph: Graph) -> Self {
        Outcome { graph, fields: BTreeMap::new(), ok: true }
    }

    /// Records `value` under `key`; `holds` false marks a violation.
    fn check(&mut self, key: &'static str, value: impl Into<Value>, holds: bool) -> &mut Self {
        self.fields.insert(key, value.into());
        self.ok &= holds;
        self
    }

    fn note(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key, value.into());
        self
    }
}

type Job = (String, Box<dyn Fn(&Limits) -> Result<Outcome> + Send + Sync>);

fn job(label: impl Into<String>, f: impl Fn(&Limits) -> Result<Outcome> + Send + Sync + 'static) -> Job {
    (label.into(), Box::new(f))
}

fn run_job((label, f): &Job, limits: &Limits) -> InstanceRecord {
    match f(limits) {
        Ok(o) => {
            let certificate = canonical_form_with(&o.graph, limits).map(|c| c.certificate.to_hex()).unwrap_or_default();
            InstanceRecord { instance: label.clone(), certificate, outcomes: o.fields, ok: o.ok, budget_exceeded: false }
        }
        Err(Error::SearchBudgetExceeded(why)) => InstanceRecord {
            instance: label.clone(),
            certificate: String::new(),
            outcomes: BTreeMap::from([("budget", Value::from(why))]),
            ok: true,
            budget_exceeded: true,
        },
        Err(e) => InstanceRecord {
            instance: label.clone(),
            certificate: String::new(),
            outcomes: BTreeMap::from([("error", Value::from(e.to_string()))]),
            ok: false,
            budget_exceeded: false,
        },
    }
}

#[cfg(feature = "parallel")]
fn run_all(jobs: &[Job], limits: &Limits) -> Vec<InstanceRecord> {
    use rayon::prelude::*;
    jobs.par_iter().map(|j| run_job(j, limits)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_all(jobs: &[Job], limits: &Limits) -> Vec<InstanceRecord> {
    jobs.iter().map(|j| run_job(j, limits)).collect()
}

/// Runs a registered experiment. Instances run in parallel when the
/// `parallel` feature is on; records are sorted by certificate, then label.
pub fn run_experiment(name: &str, bounds: &Bounds) -> Result<ExperimentReport> {
    let start = Instant::now();
    let limits = bounds.limits();
    let (parameters, jobs) = match name {
        "cancellation" => cancellation(bounds),
        "stacked_rule" => stacked_rule(bounds),
        "cc_rule" => cc_rule(bounds),
        "triple_expressibility" => triple_expressibility(bounds),
        "bounds_check" => bounds_check(bounds),
        "t3333_census" => t3333_census(bounds),
        "quad_census" => quad_census(bounds),
        "cubic_census" => cubic_census(),
        "dou_roundtrip" => dou_roundtrip(bounds),
        "ingest_classify" => ingest_classify(bounds),
        _ => return Err(Error::UnknownExperiment(name.to_string())),
    };
    let mut instances = run_all(&jobs, &limits);
    instances.sort_by(|a, b| (&a.certificate, &a.instance).cmp(&(&b.certificate, &b.instance)));
    let violations = instances.iter().filter(|r| !r.ok).count();
    let budget_exceeded = instances.iter().filter(|r| r.budget_exceeded).count();
    let verdict = match (violations, budget_exceeded) {
        (0, 0) => Verdict::Pass,
        (0, _) => Verdict::Incomplete,
        _ => Verdict::Fail,
    };
    let mut parameters = parameters;
    parameters.insert("max_n", json!(limits.max_n));
    Ok(ExperimentReport {
        experiment: name.to_string(),
        parameters,
        instances,
        violations,
        budget_exceeded,
        verdict,
        elapsed: start.elapsed(),
    })
}

type Plan = (BTreeMap<&'static str, Value>, Vec<Job>);

/// Every generator output in the grid, labelled.
pub fn generator_grid(nm_max: usize, m_max: usize, script_len: usize) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 1..=nm_max {
        for m in 1..=nm_max {
            out.push((format!("stacked_cube_factor({n},{m})"), stacked_cube_factor(n, m)?.0));
            out.push((format!("odd_prism_factor({n},{m})"), odd_prism_factor(n, m)?));
        }
    }
    for m in 2..=m_max {
        for i in 1..m {
            out.push((format!("quad_factor({m},{i})"), quad_factor(m, i)?.0));
        }
    }
    for s in T3333Script::all_up_to(script_len) {
        out.push((format!("t3333_build({})", script_label(&s)), t3333_build(&s)?));
    }
    for (k, spec) in cubic_demo_specs().iter().enumerate() {
        out.push((format!("cubic_build(demo {k})"), cubic_build(spec)?.0));
    }
    out.push(("cubic_c0".into(), cubic_c0_representative()));
    out.push(("cubic_c2".into(), cubic_c2_representative()));
    for (label, spec) in dou_specs(5) {
        out.push((format!("dou_j({label})"), dou_j(&dou_h(&spec)?)?));
    }
    Ok(out)
}

fn script_label(s: &T3333Script) -> String {
    let moves: Vec<String> = s.moves.iter().map(|m| format!("{m:?}")).collect();
    format!("[{}],{:?}", moves.join(","), s.last)
}

fn grid_params(b: &Bounds) -> (usize, usize, usize) {
    (b.n_max.unwrap_or(3), b.m_max.unwrap_or(6), b.script_len.unwrap_or(3))
}

fn grid_jobs(b: &Bounds, per_cover: fn(&str, &Graph, &Graph, &Limits) -> Result<Outcome>) -> Plan {
    let (nm, m, s) = grid_params(b);
    let params = BTreeMap::from([("nm_max", json!(nm)), ("m_max", json!(m)), ("script_len", json!(s))]);
    let jobs = match generator_grid(nm, m, s) {
        Ok(grid) => grid
            .into_iter()
            .filter_map(|(label, j)| {
                let c = cover(&j).0;
                is_polyhedron(&c).then(|| {
                    let l = label.clone();
                    job(label, move |lim| per_cover(&l, &j, &c, lim))
                })
            })
            .collect(),
        Err(e) => vec![job("generator grid", move |_| Err(e.clone()))],
    };
    (params, jobs)
}

fn cancellation(b: &Bounds) -> Plan {
    grid_jobs(b, |_, j, c, lim| {
        let roots = kronecker_roots_with(c, lim)?;
        let mut o = Outcome::new(j.clone());
        o.check("roots", roots.len(), roots.len() == 1);
        let mut matching = 0;
        let mut planar_others = Vec::new();
        for r in &roots.roots {
            if is_isomorphic(&r.j, j)? {
                matching += 1;
            } else {
                planar_others.push(is_planar(&r.j));
            }
        }
        o.check("roots_isomorphic_to_generator", matching, matching == 1);
        if !planar_others.is_empty() {
            o.note("other_roots_planar", planar_others);
        }
        Ok(o)
    })
}

fn bounds_check(b: &Bounds) -> Plan {
    let (mut params, mut jobs) = grid_jobs(b, |_, j, c, _| {
        let mut o = Outcome::new(j.clone());
        degree_and_face_bounds(&mut o, c)?;
        Ok(o)
    });
    for n in [4, 6, 8, 10, 12] {
        for m in 2..=6 {
            jobs.push(job(format!("C{n}xP{m}"), move |lim| {
                let g = stacked_prism(n, m)?;
                let mut o = Outcome::new(g.clone());
                let kron = !kronecker_roots_with(&g, lim)?.is_empty();
                o.note("kronecker_product", kron);
                if kron {
                    degree_and_face_bounds(&mut o, &g)?;
                }
                Ok(o)
            }));
        }
    }
    for m in 7..=8 {
        for i in 1..m {
            jobs.push(job(format!("cover(quad_factor({m},{i}))"), move |_| {
                let c = cover(&quad_factor(m, i)?.0).0;
                let mut o = Outcome::new(c.clone());
                degree_and_face_bounds(&mut o, &c)?;
                Ok(o)
            }));
        }
    }
    params.insert("stacked_prisms", json!("n in {4,6,8,10,12}, m in 2..=6"));
    (params, jobs)
}

/// At least eight vertices of degree 3 and six quadrilateral faces.
fn degree_and_face_bounds(o: &mut Outcome, c: &Graph) -> Result<()> {
    let deg3 = c.degree_sequence().count(3);
    let quads = planar_embed(c).ok_or(Error::NonPlanarInput)?.faces()?.stats().count(4);
    o.check("degree3_vertices", deg3, deg3 >= 8);
    o.check("quadrilateral_faces", quads, quads >= 6);
    Ok(())
}

fn stacked_rule(b: &Bounds) -> Plan {
    let n_max = b.n_max.unwrap_or(12);
    let m_max = b.m_max.unwrap_or(6);
    let mut jobs = Vec::new();
    for n in (4..=n_max).step_by(2) {
        for m in 2..=m_max {
            jobs.push(job(format!("C{n}xP{m}"), move |lim| {
                let g = stacked_prism(n, m)?;
                let roots = kronecker_roots_with(&g, lim)?;
                let expected = n % 4 == 2 || m % 2 == 0;
                let mut o = Outcome::new(g);
                o.check("has_root", !roots.is_empty(), roots.is_empty() != expected);
                o.note("rule", expected);
                o.note("roots", roots.len());
                if expected {
                    let factor = if n % 4 == 2 { odd_prism_factor((n - 2) / 4, m)? } else { stacked_cube_factor(n / 4, m / 2)?.0 };
                    let mut found = false;
                    for r in &roots.roots {
                        found |= is_isomorphic(&r.j, &factor)?;
                    }
                    o.check("constructed_factor_among_roots", found, found);
                }
                Ok(o)
            }));
        }
    }
    (BTreeMap::from([("n_max", json!(n_max)), ("m_max", json!(m_max))]), jobs)
}

fn variant_names(v: &[CartesianVariant]) -> Vec<String> {
    v.iter()
        .map(|x| match x {
            CartesianVariant::StackedPrism { n, m } => format!("C{n}xP{m}"),
            CartesianVariant::PrismOver { h } => format!("prism over {} vertices", h.n()),
        })
        .collect()
}

fn cc_rule(b: &Bounds) -> Plan {
    let m_max = b.m_max.unwrap_or(6);
    let mut jobs = Vec::new();
    let mut cases: Vec<(usize, usize)> = (3..=m_max).map(|m| (4, m)).collect();
    cases.extend([(4, 2), (6, 3), (8, 4), (5, 3), (6, 2), (7, 2)]);
    for (n, m) in cases {
        jobs.push(job(format!("C{n}xP{m}"), move |lim| {
            let g = stacked_prism(n, m)?;
            let forms = cartesian_forms_with(&g, lim)?;
            let mut o = Outcome::new(g);
            let two_ways = n == 4 && m >= 3;
            o.check("forms", variant_names(&forms.variants), forms.len() == if two_ways { 2 } else { 1 });
            o.check("has_stacked_prism", true, forms.variants.contains(&CartesianVariant::StackedPrism { n, m }));
            if two_ways {
                let base = forms.prism_bases();
                let ok = base.len() == 1 && is_isomorphic(base[0], &ladder(m)?)?;
                o.check("prism_base_is_ladder", ok, ok);
            }
            Ok(o)
        }));
    }
    (BTreeMap::from([("m_max", json!(m_max))]), jobs)
}

fn triple_expressibility(b: &Bounds) -> Plan {
    let m_max = b.m_max.unwrap_or(4);
    let mut jobs = Vec::new();
    for m in 1..=m_max {
        for layers in [2 * m, 2 * m + 1] {
            jobs.push(job(format!("C4xP{layers}"), move |lim| {
                let g = stacked_prism(4, layers)?;
                let forms = cartesian_forms_with(&g, lim)?;
                let roots = kronecker_roots_with(&g, lim)?;
                let total = forms.len() + roots.len();
                let expected = if layers == 2 { 2 } else if layers % 2 == 0 { 3 } else { 2 };
                let mut o = Outcome::new(g);
                o.check("expressions", total, total == expected);
                o.note("cartesian", variant_names(&forms.variants));
                o.note("kronecker_roots", roots.len());
                if layers % 2 == 0 {
                    let ok = roots.len() == 1 && is_isomorphic(&roots.roots[0].j, &stacked_cube_factor(1, layers / 2)?.0)?;
                    o.check("root_is_stacked_cube_factor", ok, ok);
                }
                if layers > 2 {
                    let base = forms.prism_bases();
                    let ok = base.len() == 1 && is_isomorphic(base[0], &ladder(layers)?)?;
                    o.check("prism_base_is_ladder", ok, ok);
                }
                Ok(o)
            }));
        }
    }
    (BTreeMap::from([("m_max", json!(m_max))]), jobs)
}

fn t3333_census(b: &Bounds) -> Plan {
    let len = b.script_len.unwrap_or(3);
    let jobs = T3333Script::all_up_to(len)
        .into_iter()
        .map(|s| {
            job(format!("t3333_build({})", script_label(&s)), move |_| {
                let j = t3333_build(&s)?;
                let p = j.n();
                let mut o = Outcome::new(j.clone());
                o.check("order", p, p == s.order() && p % 3 == 1);
                let tag = classify_odd_faces(&j)?.tag;
                o.check("condition", tag.to_string(), tag == ConditionTag::C3);
                let c = cover(&j).0;
                let seq = c.degree_sequence();
                let extremal = seq.count(4) == 2 * p - 8 && seq.count(3) == 8 && c.n() == 2 * p;
                o.check("cover_degree_sequence", format!("{:?}", seq.exponents()), extremal && is_polyhedron(&c));
                o.check("triangle_pattern", triangle_pattern(&j)?, triangle_pattern(&j)?);
                Ok(o)
            })
        })
        .collect();
    (BTreeMap::from([("script_len", json!(len))]), jobs)
}

/// Four triangles, the rest quadrilaterals; one triangle shares an edge
/// with each other triangle, and those three meet pairwise in one vertex.
fn triangle_pattern(j: &Graph) -> Result<bool> {
    let fs = planar_embed(j).ok_or(Error::NonPlanarInput)?.faces()?;
    let tris: Vec<Vec<usize>> = fs.faces.iter().filter(|f| f.len() == 3).map(|f| f.vertex_set()).collect();
    if tris.len() != 4 || fs.faces.iter().any(|f| f.len() != 3 && f.len() != 4) {
        return Ok(false);
    }
    let common = |a: &[usize], b: &[usize]| a.iter().filter(|x| b.contains(x)).count();
    Ok((0..4).any(|t| {
        let rest: Vec<usize> = (0..4).filter(|&u| u != t).collect();
        rest.iter().all(|&u| common(&tris[t], &tris[u]) == 2)
            && (0..3).all(|x| (x + 1..3).all(|y| common(&tris[rest[x]], &tris[rest[y]]) == 1))
    }))
}

fn quad_census(b: &Bounds) -> Plan {
    let m_max = b.m_max.unwrap_or(8);
    let mut jobs = Vec::new();
    for m in 2..=m_max {
        for i in 1..m {
            jobs.push(job(format!("quad_factor({m},{i})"), move |_| {
                let (j, w, q) = quad_factor(m, i)?;
                let c = cover(&j).0;
                let mut o = Outcome::new(j.clone());
                o.check("cover_quadrangulation", is_quadrangulation(&c), is_quadrangulation(&c));
                o.check("cover_polyhedral", is_polyhedron(&c), is_polyhedron(&c));
                let valid = verify_quad_witness(&j, &w, &q)?;
                o.check("quad_witness", valid, valid);
                o.note("r", q.r.clone()).note("s", q.s.clone());
                if (m, i) == (6, 3) {
                    let drawn = q.r == [1, 1, 1, 2, 2, 2] && q.s == [3, 5, 7, 8, 10, 12];
                    o.check("drawn_indices", drawn, drawn);
                }
                Ok(o)
            }));
        }
    }
    (BTreeMap::from([("m_max", json!(m_max))]), jobs)
}

fn cubic_census() -> Plan {
    let mut jobs = Vec::new();
    for (k, spec) in cubic_demo_specs().into_iter().enumerate() {
        jobs.push(job(format!("cubic_build(demo {k})"), move |_| {
            let (j, w) = cubic_build(&spec)?;
            let c = cover(&j).0;
            let mut o = Outcome::new(j.clone());
            o.check("witness_valid", true, verify_factor_witness(&j, &w)?.valid);
            o.check("j1_bipartite", true, is_bipartite(&w.j_prime));
            o.check("cover_cubic_polyhedral", true, c.is_regular(3) && is_polyhedron(&c));
            Ok(o)
        }));
    }
    for (clause, spec) in cubic_mutations() {
        jobs.push(job(format!("mutation {clause}"), move |_| {
            let got = match cubic_build(&spec) {
                Err(Error::SpecViolation { clause, .. }) => Some(clause),
                _ => None,
            };
            let mut o = Outcome::new(spec.j2.underlying_simple());
            o.check("raised", got.map(|c| c.to_string()), got == Some(clause));
            Ok(o)
        }));
    }
    let reps = [
        ("cubic_c0", cubic_c0_representative(), ConditionTag::C0),
        ("cubic_c1", stacked_prism(5, 2).expect("prism"), ConditionTag::C1),
        ("cubic_c2", cubic_c2_representative(), ConditionTag::C2),
        ("cubic_c3", crate::generators::basic::complete(4).expect("K4"), ConditionTag::C3),
    ];
    for (label, j, tag) in reps {
        jobs.push(job(label, move |_| {
            let mut o = Outcome::new(j.clone());
            let mut g = j.clone();
            for step in 0..=2 {
                let got = classify_odd_faces(&g)?.tag;
                let c = cover(&g).0;
                let ok = got == tag && g.is_regular(3) && c.is_regular(3) && is_polyhedron(&c);
                o.check(["expansion_0", "expansion_1", "expansion_2"][step], got.to_string(), ok);
                match quad_face(&g)? {
                    Some(f) => g = quad_expand(&g, f)?,
                    None => break,
                }
            }
            Ok(o)
        }));
    }
    (BTreeMap::new(), jobs)
}

fn quad_face(g: &Graph) -> Result<Option<[usize; 4]>> {
    let fs = planar_embed(g).ok_or(Error::NonPlanarInput)?.faces()?;
    Ok(fs.faces.iter().find(|f| f.len() == 4).map(|f| [f.vertices[0], f.vertices[1], f.vertices[2], f.vertices[3]]))
}

/// Every valid chord set for half-lengths `2..=l_max`, as unions of
/// half-turn orbits.
pub fn dou_specs(l_max: usize) -> Vec<(String, DouHSpec)> {
    let mut out = Vec::new();
    for l in 2..=l_max {
        let n = 2 * l;
        let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
        for u in 0..n {
            for v in u + 2..n {
                let gap = v - u;
                if gap == n - 1 || gap == l || gap % 2 == 0 {
                    continue;
                }
                let (x, y) = ((u + l) % n, (v + l) % n);
                let partner = (x.min(y), x.max(y));
                if partner < (u, v) {
                    continue;
                }
                orbits.push(if partner == (u, v) { vec![(u, v)] } else { vec![(u, v), partner] });
            }
        }
        for mask in 0u32..1 << orbits.len() {
            let diagonals: Vec<(usize, usize)> =
                (0..orbits.len()).filter(|&i| mask >> i & 1 == 1).flat_map(|i| orbits[i].clone()).collect();
            let spec = DouHSpec { half: l, diagonals };
            if dou_h(&spec).is_ok() {
                out.push((format!("l={l};{:?}", spec.diagonals), spec));
            }
        }
    }
    out
}

fn dou_roundtrip(b: &Bounds) -> Plan {
    let l_max = b.n_max.unwrap_or(6);
    let jobs = dou_specs(l_max)
        .into_iter()
        .map(|(label, spec)| {
            job(label, move |_| {
                let h = dou_h(&spec)?;
                let j = dou_j(&h)?;
                let p = prism(&h);
                let mut o = Outcome::new(h);
                let iso = is_isomorphic(&p, &cover(&j).0)?;
                o.check("prism_h_is_cover_j", iso, iso);
                o.check("product_polyhedral", is_polyhedron(&p), is_polyhedron(&p));
                let planar = is_planar(&j);
                let expect_planar = spec.half % 2 == 1 || spec.half == 2;
                o.check("j_planar", planar, planar == expect_planar);
                if spec.half % 2 == 1 {
                    let tag = classify_odd_faces(&j)?.tag;
                    o.check("condition", tag.to_string(), tag == ConditionTag::C1);
                }
                Ok(o)
            })
        })
        .collect();
    (BTreeMap::from([("l_max", json!(l_max))]), jobs)
}

fn ingest_classify(b: &Bounds) -> Plan {
    let (source, graphs): (&str, Vec<(String, Graph)>) = match &b.stream {
        Some(s) => ("stream", s.iter().enumerate().map(|(i, g)| (format!("line {}", i + 1), g.clone())).collect()),
        None => ("catalog", catalog().into_iter().filter_map(|e| Some((e.name.to_string(), e.graph().ok()?))).collect()),
    };
    let jobs = graphs
        .into_iter()
        .map(|(label, j)| {
            job(label, move |_| {
                let mut o = Outcome::new(j.clone());
                let c = cover(&j).0;
                let cover_poly = is_polyhedron(&c);
                o.note("cover_polyhedral", cover_poly);
                if !is_planar(&j) {
                    o.note("planar", false);
                    return Ok(o);
                }
                let cond = classify_odd_faces(&j)?;
                o.check("condition", cond.tag.to_string(), (cond.tag != ConditionTag::None) == cover_poly);
                if is_polyhedron(&j) && j.is_regular(3) && cover_poly {
                    let odd = cond.odd_faces.len();
                    o.check("odd_faces", odd, odd <= 4);
                }
                Ok(o)
            })
        })
        .collect();
    (BTreeMap::from([("source", json!(source))]), jobs)
}
