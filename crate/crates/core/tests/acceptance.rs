//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;
use tight_handlebody::chord::enumerate_diagrams;
use tight_handlebody::graph::{classify, classify_graph, explore, ExploreOptions};
use tight_handlebody::io::{parse, render_dot, render_report};
use tight_handlebody::oracles::{catalan, solid_torus_count, NegativeSlope};
use tight_handlebody::surface::Handlebody;

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Checks the library oracle against the test-side expansion, then returns it.
fn oracle(p: i64, q: i64) -> Result<u128, String> {
    let lib = solid_torus_count(NegativeSlope::new(p as u64, q as u64).map_err(|e| e.to_string())?);
    let ours = solid_torus_expected(p, q);
    ensure(lib == ours, || {
        format!("oracles disagree for -{p}/{q}: {lib} vs {ours}")
    })?;
    Ok(ours)
}

fn solid_torus_case(
    file: &str,
    p: i64,
    q: i64,
    configs: usize,
) -> Result<(Handlebody, tight_handlebody::graph::ClassificationReport), String> {
    let h = template(file);
    let r = classify(&h, &ExploreOptions::default()).map_err(|e| e.to_string())?;
    let expected = oracle(p, q)?;
    ensure(r.total_configurations == configs, || {
        format!(
            "{} configurations, expected {configs}",
            r.total_configurations
        )
    })?;
    ensure(r.tight_count as u128 == expected, || {
        format!("tight_count {}, oracle {expected}", r.tight_count)
    })?;
    Ok((h, r))
}

fn criterion_1() -> Outcome {
    let (h, r) = solid_torus_case("solid_torus_m1.thb", 1, 1, 1)?;
    ensure(r.potentially_allowable_count == 1, || {
        "configuration not potentially allowable".into()
    })?;
    ensure(r.edge_count == 0, || {
        format!("{} transitions", r.edge_count)
    })?;
    ensure(
        r.allowable.len() == 1 && r.allowable[0].universally_tight,
        || "not flagged universally tight".into(),
    )?;
    let g = explore_default(&h);
    tracer_agrees(&h, &g.nodes[0])?;
    Ok(format!(
        "tb=-1 solid torus: 1 configuration, 0 transitions, tight_count {} (oracle 1), universally tight",
        r.tight_count
    ))
}

fn criterion_2() -> Outcome {
    let (h, r) = solid_torus_case("solid_torus_m2.thb", 2, 1, catalan(2) as usize)?;
    let g = explore_default(&h);
    ensure(
        g.nodes.iter().all(|c| c.diagrams[0].is_boundary_parallel()),
        || "a configuration is not boundary-parallel".into(),
    )?;
    ensure(g.edges.is_empty(), || format!("{} edges", g.edges.len()))?;
    ensure(r.allowable.iter().all(|c| c.universally_tight), || {
        "not all universally tight".into()
    })?;
    let mut euler: Vec<i64> = r.allowable.iter().map(|c| c.euler[0]).collect();
    euler.sort();
    ensure(euler == vec![-1, 1], || {
        format!("euler invariants {euler:?}")
    })?;
    Ok(format!(
        "slope -2: 2 boundary-parallel configurations, 0 edges, tight_count {} (oracle 2), euler (-1) and (+1)",
        r.tight_count
    ))
}

fn criterion_3() -> Outcome {
    let (h, r) = solid_torus_case("solid_torus_m3.thb", 3, 1, 5)?;
    let nested = parse(&template_text("solid_torus_m3.thb"))
        .map_err(|e| e.to_string())?
        .configuration
        .ok_or("template has no configuration")?;
    let v = tight_handlebody::graph::is_tight(&h, &nested, 1000).map_err(|e| e.to_string())?;
    ensure(v.tight, || "nested configuration not tight".into())?;
    Ok(format!(
        "slope -3: 5 configurations, tight_count {} (oracle 3), nested configuration tight",
        r.tight_count
    ))
}

fn criterion_4() -> Outcome {
    let (_, r) = solid_torus_case("solid_torus_m5_2.thb", 5, 2, 42)?;
    Ok(format!(
        "slope -5/2: 42 configurations, tight_count {} (oracle 4)",
        r.tight_count
    ))
}

fn criterion_5() -> Outcome {
    for n in 0..=8usize {
        let listed = enumerate_diagrams(n).len() as u128;
        ensure(
            listed == catalan(n) && listed == catalan_binomial(n as u128),
            || format!("n = {n}: {listed} diagrams"),
        )?;
    }
    let moves = check_moves(5)?;
    let trivial = check_trivial_dichotomy(5)?;

    let mut peels = 0;
    let mut graphs = 0;
    let mut handlebodies: Vec<Handlebody> = coprime_slopes(6)
        .into_iter()
        .map(|(p, q)| solid_torus(p, q))
        .collect();
    handlebodies.push(template("genus2_boundary_sum.thb"));
    for h in &handlebodies {
        peels += check_sphere_dichotomy(h)?;
        let g = explore_default(h);
        check_edge_symmetry(&g)?;
        check_euler_constancy(h, &g)?;
        graphs += 1;
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let fuzz = 10_000;
    for _ in 0..fuzz {
        let h = Handlebody::new(random_presentation(&mut rng)).map_err(|e| e.to_string())?;
        let c = random_configuration(&h, &mut rng);
        tracer_agrees(&h, &c)?;
    }
    Ok(format!(
        "properties: catalan n<=8, {moves} moves valid and euler-preserving, {trivial} trivial arcs dichotomous, \
         {peels} peels in {{1,3}}, symmetry and euler constancy on {graphs} graphs, {fuzz} fuzzed pairings traced"
    ))
}

fn criterion_6() -> Outcome {
    let h = template("genus2_boundary_sum.thb");
    let p = h.presentation().clone();
    let run = |workers| -> Result<String, String> {
        let opts = ExploreOptions {
            workers,
            ..ExploreOptions::default()
        };
        let g = explore(&h, &opts).map_err(|e| e.to_string())?;
        check_well_formed(&g)?;
        for c in &g.nodes {
            tracer_agrees(&h, c)?;
        }
        Ok(render_report(&p, &classify_graph(&h, &g)) + &render_dot(&g))
    };
    let first = run(1)?;
    let second = run(1)?;
    let parallel = run(8)?;
    ensure(first == second, || "two runs differ".into())?;
    ensure(first == parallel, || "1 worker and 8 workers differ".into())?;
    let g = explore_default(&h);
    ensure(g.nodes.len() == 1, || format!("{} nodes", g.nodes.len()))?;
    Ok(format!(
        "genus 2, n=(1,1): {} node, well-formed, tracer agrees, report identical across runs and worker counts",
        g.nodes.len()
    ))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("1", Duration::from_secs(1), criterion_1),
        ("2", Duration::from_secs(1), criterion_2),
        ("3", Duration::from_secs(5), criterion_3),
        ("4", Duration::from_secs(60), criterion_4),
        ("5", Duration::from_secs(60), criterion_5),
        ("6", Duration::from_secs(10), criterion_6),
    ];
    let mut failed = 0;
    for (id, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > budget => {
                Err(format!("{msg}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS [{id}] {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{id}] {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
