//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! The process fails when a criterion's outcome differs from the recorded
//! expectation; criterion 1 is expected to report the stacked odd-prism
//! counterexamples to cancellation, and nothing else.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kpoly::canon::is_isomorphic;
use kpoly::error::Error;
use kpoly::formats::{emit_graph6, emit_json, parse_graph6, parse_json};
use kpoly::generators::basic::{complete, generalized_petersen, path, stacked_prism};
use kpoly::generators::{
    cubic_build, cubic_demo_specs, cubic_mutations, quad_factor, stacked_cube_factor, t3333_build, T3333Script,
};
use kpoly::harness::{generator_grid, run_experiment, Bounds, Verdict};
use kpoly::planar::{all_embeddings, is_planar, is_polyhedron, is_quadrangulation, planar_embed};
use kpoly::products::{cartesian, cover, cover_involution, kronecker, prism};
use kpoly::recognition::{
    cartesian_forms_with, classify_odd_faces, kronecker_roots_with, CartesianForm, CartesianVariant, ConditionTag, RootSet,
};
use kpoly::{Graph, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
    /// For a criterion expected to fail: whether the failure matches the
    /// recorded analysis exactly.
    understood: bool,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), understood: false }
}

fn limits() -> Limits {
    Limits::default().with_max_n(128)
}

fn roots(g: &Graph) -> RootSet {
    kronecker_roots_with(g, &limits()).unwrap()
}

fn forms(g: &Graph) -> CartesianForm {
    cartesian_forms_with(g, &limits()).unwrap()
}

fn triangles(g: &Graph) -> usize {
    g.edges().iter().map(|&(u, v)| g.neighbors(u).iter().filter(|w| g.has_edge(v, **w)).count()).sum::<usize>() / 3
}

fn girth(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for s in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    best
}

/// Whether `phi` maps the edges of `a` exactly onto the edges of `b`.
fn is_explicit_isomorphism(a: &Graph, b: &Graph, phi: &[usize]) -> bool {
    let image: BTreeSet<usize> = phi.iter().copied().collect();
    a.n() == b.n()
        && image.len() == a.n()
        && a.edge_count() == b.edge_count()
        && a.edges().iter().all(|&(u, v)| b.has_edge(phi[u], phi[v]))
}

/// Quotient of `C_n □ P_m` by `(i, j) -> (i + n/2, m - 1 - j)`, together
/// with the explicit map from `C_n □ P_m` onto the cover of the quotient.
fn folded_quotient(n: usize, m: usize) -> (Graph, Vec<usize>) {
    let g = stacked_prism(n, m).unwrap();
    let sigma = |v: usize| ((v / m + n / 2) % n) * m + (m - 1 - v % m);
    let mut orbit = vec![usize::MAX; g.n()];
    let mut count = 0;
    for v in 0..g.n() {
        if orbit[v] == usize::MAX {
            orbit[v] = count;
            orbit[sigma(v)] = count;
            count += 1;
        }
    }
    let edges: BTreeSet<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (orbit[u].min(orbit[v]), orbit[u].max(orbit[v]))).collect();
    let quotient = Graph::new(count, edges).unwrap();
    let colour = |v: usize| (v / m + v % m) % 2;
    let phi = (0..g.n()).map(|v| 2 * orbit[v] + colour(v)).collect();
    (quotient, phi)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = run_experiment("cancellation", &Bounds::default()).unwrap();
    let failing: BTreeSet<&str> = report.failures().map(|r| r.instance.as_str()).collect();
    let expected: BTreeSet<&str> = ["odd_prism_factor(1,3)", "odd_prism_factor(2,3)", "odd_prism_factor(3,3)"].into();
    let mut counterexamples_verified = failing == expected;
    for big_n in 1..=3 {
        let n = 4 * big_n + 2;
        let (l, phi) = folded_quotient(n, 3);
        let j = stacked_prism(2 * big_n + 1, 3).unwrap();
        let g = stacked_prism(n, 3).unwrap();
        let psi: Vec<usize> = (0..3 * n).map(|v| 2 * ((v / 3) % (2 * big_n + 1) * 3 + v % 3) + (v / 3 + v % 3) % 2).collect();
        counterexamples_verified &= is_explicit_isomorphism(&g, &cover(&l).0, &phi)
            && is_explicit_isomorphism(&g, &cover(&j).0, &psi)
            && !is_planar(&l);
        if big_n == 1 {
            counterexamples_verified &= triangles(&l) == 1 && triangles(&j) == 3;
        }
    }
    let detail = format!(
        "{} polyhedral covers, {} violations {:?}; second non-planar root of C_(4N+2) x P_3 confirmed by explicit isomorphism: {}; {:.1?}",
        report.instances.len(),
        report.violations,
        failing,
        counterexamples_verified,
        start.elapsed()
    );
    let understood = counterexamples_verified && start.elapsed() < Duration::from_secs(300);
    Outcome { pass: report.verdict == Verdict::Pass, detail, understood }
}

fn criterion_2() -> Outcome {
    let desargues = generalized_petersen(10, 3);
    let petersen = generalized_petersen(5, 2);
    let roots = roots(&desargues).roots;
    let girths: Vec<usize> = roots.iter().map(|r| girth(&r.j)).collect();
    let petersen_count = roots.iter().filter(|r| is_isomorphic(&r.j, &petersen).unwrap()).count();
    let distinct = roots.len() == 2 && girths[0] != girths[1];
    let covers_ok = roots.iter().all(|r| is_isomorphic(&cover(&r.j).0, &desargues).unwrap());
    let pass = distinct && petersen_count == 1 && covers_ok && !is_planar(&desargues) && !is_polyhedron(&desargues);
    outcome(pass, format!("{} roots, girths {girths:?}, Petersen among them: {}", roots.len(), petersen_count == 1))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for n in [4, 6, 8, 10, 12] {
        for m in 2..=6 {
            let g = stacked_prism(n, m).unwrap();
            let rule = n % 4 == 2 || (n % 4 == 0 && m % 2 == 0);
            let has_root = !roots(&g).is_empty();
            // Positive cases: an explicit colour-swapping fixed-point-free involution.
            let involution_ok = !rule || {
                let sigma: Vec<usize> = (0..n * m)
                    .map(|v| {
                        let (i, j) = (v / m, v % m);
                        let j2 = if n % 4 == 2 { j } else { m - 1 - j };
                        ((i + n / 2) % n) * m + j2
                    })
                    .collect();
                (0..n * m).all(|v| sigma[v] != v && sigma[sigma[v]] == v && (v / m + v % m + sigma[v] / m + sigma[v] % m) % 2 == 1)
                    && g.edges().iter().all(|&(u, v)| g.has_edge(sigma[u], sigma[v]))
            };
            if has_root != rule || !involution_ok {
                mismatches.push((n, m));
            }
        }
    }
    let report = run_experiment("stacked_rule", &Bounds { n_max: Some(12), m_max: Some(6), ..Bounds::default() }).unwrap();
    let pass = mismatches.is_empty() && report.verdict == Verdict::Pass && report.instances.len() == 25;
    outcome(pass, format!("25 (n, m) pairs, mismatches {mismatches:?}; {:.1?}", start.elapsed()))
}

fn ladder_oracle(m: usize) -> Graph {
    cartesian(&path(m).unwrap(), &complete(2).unwrap()).0
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    for m in 3..=6 {
        let forms = forms(&stacked_prism(4, m).unwrap());
        let bases = forms.prism_bases();
        let ok = forms.len() == 2
            && forms.variants.contains(&CartesianVariant::StackedPrism { n: 4, m })
            && bases.len() == 1
            && is_isomorphic(bases[0], &ladder_oracle(m)).unwrap();
        if !ok {
            bad.push(format!("C4xP{m}"));
        }
    }
    for (n, m) in [(6, 3), (8, 4), (4, 2)] {
        if forms(&stacked_prism(n, m).unwrap()).len() != 1 {
            bad.push(format!("C{n}xP{m}"));
        }
    }
    outcome(bad.is_empty(), format!("two forms for C4xP3..6, one for C6xP3, C8xP4, cube; wrong: {bad:?}"))
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    for m in [2, 3] {
        let g = stacked_prism(4, 2 * m).unwrap();
        let forms = forms(&g);
        let roots = roots(&g);
        let bases = forms.prism_bases();
        let root_ok = roots.len() == 1
            && is_isomorphic(&roots.roots[0].j, &stacked_cube_factor(1, m).unwrap().0).unwrap()
            && is_isomorphic(&cover(&roots.roots[0].j).0, &g).unwrap();
        let ok = forms.len() == 2
            && forms.variants.contains(&CartesianVariant::StackedPrism { n: 4, m: 2 * m })
            && bases.len() == 1
            && is_isomorphic(bases[0], &ladder_oracle(2 * m)).unwrap()
            && root_ok;
        if !ok {
            bad.push(m);
        }
    }
    outcome(bad.is_empty(), format!("C4xP4 and C4xP6 have stacked, prism and Kronecker forms; wrong m: {bad:?}"))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for m in 2..=8 {
        for i in 1..m {
            let (j, _, _) = quad_factor(m, i).unwrap();
            let c = cover(&j).0;
            if !is_quadrangulation(&c) || !is_polyhedron(&c) {
                bad.push((m, i));
            }
        }
    }
    let q = quad_factor(6, 3).unwrap().2;
    let drawn = q.r == [1, 1, 1, 2, 2, 2] && q.s == [3, 5, 7, 8, 10, 12];
    let report = run_experiment("quad_census", &Bounds::default()).unwrap();
    let pass = bad.is_empty() && drawn && report.verdict == Verdict::Pass;
    outcome(pass, format!("28 instances, failing {bad:?}; (6,3) r = {:?}, s = {:?}", q.r, q.s))
}

fn criterion_7() -> Outcome {
    let mut orders = BTreeSet::new();
    let mut bad = 0;
    let scripts = T3333Script::all_up_to(3);
    for s in &scripts {
        let j = t3333_build(s).unwrap();
        orders.insert(j.n());
        let c = cover(&j).0;
        let big_p = c.n();
        let deg = |d| (0..big_p).filter(|&v| c.degree(v) == d).count();
        let ok = classify_odd_faces(&j).unwrap().tag == ConditionTag::C3
            && deg(4) == big_p - 8
            && deg(3) == 8
            && is_polyhedron(&c);
        bad += usize::from(!ok);
    }
    let pass = bad == 0 && orders == BTreeSet::from([7, 10, 13, 16, 19]);
    outcome(pass, format!("{} scripts, orders {orders:?}, violations {bad}", scripts.len()))
}

fn criterion_8() -> Outcome {
    let (j, _) = cubic_build(&cubic_demo_specs()[0]).unwrap();
    let c = cover(&j).0;
    let cube_ok = c.is_regular(3) && is_polyhedron(&c);
    let mut raised = Vec::new();
    let mut wrong = Vec::new();
    for (clause, spec) in cubic_mutations() {
        match cubic_build(&spec) {
            Err(Error::SpecViolation { clause: got, .. }) if got == clause => raised.push(clause),
            other => wrong.push(format!("{clause}: {:?}", other.map(|_| ()))),
        }
    }
    let pass = cube_ok && wrong.is_empty() && raised.len() >= 6;
    outcome(pass, format!("cube spec cover cubic polyhedral: {cube_ok}; {} clauses raised, wrong {wrong:?}", raised.len()))
}

fn bounds_hold(c: &Graph) -> bool {
    let deg3 = (0..c.n()).filter(|&v| c.degree(v) == 3).count();
    let quads = planar_embed(c).unwrap().faces().unwrap().faces.iter().filter(|f| f.len() == 4).count();
    deg3 >= 8 && quads >= 6
}

fn criterion_9() -> Outcome {
    let mut covers: Vec<(String, Graph)> = Vec::new();
    for (label, j) in generator_grid(3, 8, 3).unwrap() {
        covers.push((label, cover(&j).0));
    }
    for n in [4, 6, 8, 10, 12] {
        for m in 2..=6 {
            let g = stacked_prism(n, m).unwrap();
            if !roots(&g).is_empty() {
                covers.push((format!("C{n}xP{m}"), g));
            }
        }
    }
    for spec in cubic_demo_specs() {
        covers.push(("cubic demo".into(), cover(&cubic_build(&spec).unwrap().0).0));
    }
    let polyhedral: Vec<_> = covers.iter().filter(|(_, c)| is_polyhedron(c)).collect();
    let bad: Vec<&str> = polyhedral.iter().filter(|(_, c)| !bounds_hold(c)).map(|(l, _)| l.as_str()).collect();
    let report = run_experiment("bounds_check", &Bounds::default()).unwrap();
    let pass = bad.is_empty() && report.verdict == Verdict::Pass;
    outcome(pass, format!("{} polyhedral covers checked, violations {bad:?}", polyhedral.len()))
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(0..=20);
    let p = rng.gen_range(0.0..1.0);
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect::<Vec<_>>();
    Graph::new(n, edges).unwrap()
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b706f6c79);
    let mut failures = Vec::new();
    let mut embeddings = 0;
    for trial in 0..1000 {
        let g = random_graph(&mut rng);
        if parse_graph6(&emit_graph6(&g)).ok().as_ref() != Some(&g) {
            failures.push(format!("graph6 #{trial}"));
        }
        if parse_json(&emit_json(&g)).ok().as_ref() != Some(&g) {
            failures.push(format!("json #{trial}"));
        }
        let (c, _) = cover(&g);
        let tau = cover_involution(g.n());
        let involution = (0..c.n()).all(|v| tau[v] != v && tau[tau[v]] == v && (v % 2) != (tau[v] % 2))
            && c.edges().iter().all(|&(u, v)| c.has_edge(tau[u], tau[v]));
        if c.n() != 2 * g.n() || c.edge_count() != 2 * g.edge_count() || !involution {
            failures.push(format!("cover #{trial}"));
        }
        let h = random_graph(&mut rng);
        let (k, _) = kronecker(&g, &h);
        let (p, _) = cartesian(&g, &h);
        if k.n() != g.n() * h.n()
            || k.edge_count() != 2 * g.edge_count() * h.edge_count()
            || p.edge_count() != g.n() * h.edge_count() + h.n() * g.edge_count()
            || prism(&g).edge_count() != 2 * g.edge_count() + g.n()
        {
            failures.push(format!("product sizes #{trial}"));
        }
        // Faces are dart orbits, so only graphs with an edge have any.
        if trial < 200 && g.edge_count() > 0 && g.is_connected() && is_planar(&g) && g.n() <= 10 {
            for e in all_embeddings(&g, 64).unwrap_or_default() {
                embeddings += 1;
                let stats = e.faces().unwrap().stats();
                if stats.euler_characteristic() != 2 {
                    failures.push(format!("euler #{trial}"));
                }
            }
        }
    }
    for (n, m) in [(3, 2), (6, 4), (12, 6)] {
        let e = planar_embed(&stacked_prism(n, m).unwrap()).unwrap();
        embeddings += 1;
        if e.faces().unwrap().stats().euler_characteristic() != 2 {
            failures.push(format!("euler C{n}xP{m}"));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(60);
    outcome(pass, format!("1000 random graphs, {embeddings} embeddings traced, failures {failures:?}; {elapsed:.1?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, bool); 10] = [
        ("1 cancellation over generator grids", criterion_1, false),
        ("2 Desargues has two non-isomorphic roots", criterion_2, true),
        ("3 stacked-prism root rule", criterion_3, true),
        ("4 two Cartesian forms of C4 x P_m", criterion_4, true),
        ("5 triple expressibility", criterion_5, true),
        ("6 quadrangulation pipeline", criterion_6, true),
        ("7 extremal degree sequence", criterion_7, true),
        ("8 cubic covers and spec clauses", criterion_8, true),
        ("9 degree-3 and quadrilateral bounds", criterion_9, true),
        ("10 property suites", criterion_10, true),
    ];
    let mut unexpected = 0;
    for (name, run, expect_pass) in criteria {
        let o = run();
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if o.pass != expect_pass || (!expect_pass && !o.understood) {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria differ from the recorded expectation");
        ExitCode::FAILURE
    }
}
