#![allow(dead_code)]

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use tight_handlebody::chord::{
    apply_bypass, enumerate_bypass_arcs, enumerate_diagrams, euler_invariant, ChordDiagram, Sign,
};
use tight_handlebody::graph::{explore, ExploreOptions, TransitionGraph};
use tight_handlebody::io::parse;
use tight_handlebody::oracles::trace_components;
use tight_handlebody::surface::{
    Configuration, DiskSpec, Handlebody, HandlebodyPresentation, HoleCopy, Slot,
};
use tight_handlebody::Error;

pub fn template_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("templates")
        .join(name)
}

pub fn template_text(name: &str) -> String {
    std::fs::read_to_string(template_path(name)).expect("bundled template")
}

pub fn template(name: &str) -> Handlebody {
    Handlebody::new(parse(&template_text(name)).unwrap().presentation).unwrap()
}

pub const TEMPLATES: [&str; 5] = [
    "solid_torus_m1.thb",
    "solid_torus_m2.thb",
    "solid_torus_m3.thb",
    "solid_torus_m5_2.thb",
    "genus2_boundary_sum.thb",
];

/// `C(2n, n) / (n + 1)`.
pub fn catalan_binomial(n: u128) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n {
        c = c * (2 * n - k) / (k + 1);
    }
    c / (n + 1)
}

/// Continued fraction of `-p/q` by repeated ceilings of `p/q`.
pub fn negative_cf(p: i64, q: i64) -> Vec<i64> {
    let (mut num, mut den) = (p, q);
    let mut out = Vec::new();
    loop {
        let a = (num + den - 1) / den;
        out.push(-a);
        let rem = a * den - num;
        if rem == 0 {
            return out;
        }
        num = den;
        den = rem;
    }
}

/// Tight structures on the solid torus with boundary slope `-p/q`, for
/// `1 <= q <= p` coprime.
pub fn solid_torus_expected(p: i64, q: i64) -> u128 {
    let cf = negative_cf(p, q);
    let k = cf.len() - 1;
    let mut count = cf[k].unsigned_abs() as u128;
    for r in &cf[..k] {
        count *= (r + 1).unsigned_abs() as u128;
    }
    count
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn coprime_slopes(max_p: usize) -> Vec<(usize, usize)> {
    (1..=max_p)
        .flat_map(|p| (1..=p).map(move |q| (p, q)))
        .filter(|&(p, q)| gcd(p, q) == 1)
        .collect()
}

pub fn solid_torus(p: usize, q: usize) -> Handlebody {
    Handlebody::new(HandlebodyPresentation::solid_torus(p, q)).unwrap()
}

/// A presentation with random disk sizes, offsets and outer arcs; not
/// necessarily planar.
pub fn random_presentation(rng: &mut StdRng) -> HandlebodyPresentation {
    let genus = rng.random_range(1..=3);
    let disks: Vec<DiskSpec> = (0..genus)
        .map(|_| {
            let n = rng.random_range(1..=4);
            DiskSpec {
                n,
                offset: rng.random_range(0..2 * n),
                anchor: if rng.random_bool(0.5) {
                    Sign::Plus
                } else {
                    Sign::Minus
                },
            }
        })
        .collect();
    let mut slots: Vec<Slot> = Vec::new();
    for (i, d) in disks.iter().enumerate() {
        for copy in HoleCopy::BOTH {
            for j in 0..2 * d.n {
                slots.push(Slot::new(i, copy, j));
            }
        }
    }
    slots.shuffle(rng);
    let outer_arcs = slots.chunks(2).map(|c| (c[0], c[1])).collect();
    HandlebodyPresentation {
        genus,
        disks,
        holes: HandlebodyPresentation::default_holes(genus),
        outer_arcs,
        closed_outer_components: 0,
        face_certificate: None,
    }
}

pub fn random_configuration(h: &Handlebody, rng: &mut StdRng) -> Configuration {
    Configuration::new(
        h.disk_sizes()
            .iter()
            .map(|&n| {
                let all = enumerate_diagrams(n);
                all[rng.random_range(0..all.len())].clone()
            })
            .collect(),
    )
}

/// Component count of the rounded boundary agrees with the walk tracer.
pub fn tracer_agrees(h: &Handlebody, c: &Configuration) -> Result<(), String> {
    let rb = h.rounded_boundary(c).map_err(|e| e.to_string())?;
    let edges: Vec<(usize, usize)> = rb.edges().collect();
    let traced = trace_components(rb.node_count, &edges).map_err(|e| e.to_string())?;
    if traced != rb.components {
        return Err(format!(
            "{c}: union-find {} vs tracer {traced}",
            rb.components
        ));
    }
    Ok(())
}

/// Every bypass on every diagram with `n <= max_n` yields a valid diagram
/// with the same Euler invariant, or a closed loop on the disk. Returns the
/// number of moves checked.
pub fn check_moves(max_n: usize) -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=max_n {
        for d in enumerate_diagrams(n) {
            for a in enumerate_bypass_arcs(&d, false) {
                checked += 1;
                match apply_bypass(&d, &a) {
                    Ok(out) => {
                        ChordDiagram::from_pairs(n, &out.pairs())
                            .map_err(|e| format!("{d} {a}: invalid result: {e}"))?;
                        for anchor in [Sign::Plus, Sign::Minus] {
                            let (before, after) =
                                (euler_invariant(&d, anchor), euler_invariant(&out, anchor));
                            if before != after {
                                return Err(format!(
                                    "{d} {a}: euler {before} -> {after} for anchor {anchor}"
                                ));
                            }
                        }
                    }
                    Err(Error::DisallowedClosedComponent { .. }) if a.is_trivial() => {}
                    Err(e) => return Err(format!("{d} {a}: {e}")),
                }
            }
        }
    }
    Ok(checked)
}

/// A trivial arc acts as the identity from one side and closes a loop from
/// the other.
pub fn check_trivial_dichotomy(max_n: usize) -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=max_n {
        for d in enumerate_diagrams(n) {
            for a in enumerate_bypass_arcs(&d, false) {
                if !a.is_trivial() || a.side != tight_handlebody::chord::Side::Front {
                    continue;
                }
                checked += 1;
                let front = apply_bypass(&d, &a);
                let back = apply_bypass(&d, &a.with_side(a.side.opposite()));
                let ok = matches!(
                    (&front, &back),
                    (Ok(x), Err(Error::DisallowedClosedComponent { .. }))
                        | (Err(Error::DisallowedClosedComponent { .. }), Ok(x)) if *x == d
                );
                if !ok {
                    return Err(format!("{d} {a}: front {front:?}, back {back:?}"));
                }
            }
        }
    }
    Ok(checked)
}

/// Every bypass attached from inside a ball with one dividing curve leaves
/// one or three.
pub fn check_sphere_dichotomy(h: &Handlebody) -> Result<usize, String> {
    let mut checked = 0;
    for c in tight_handlebody::graph::enumerate_configurations(h, 1 << 20).unwrap() {
        if !h.potentially_allowable(&c).unwrap() {
            continue;
        }
        for disk in 0..h.genus() {
            for a in enumerate_bypass_arcs(&c.diagrams[disk], false) {
                for copy in HoleCopy::BOTH {
                    let count = h
                        .peel_attach_count(&c, disk, copy, &a)
                        .map_err(|e| e.to_string())?;
                    checked += 1;
                    if count != 1 && count != 3 {
                        return Err(format!("{c} disk {disk} copy {copy} {a}: count {count}"));
                    }
                }
            }
        }
    }
    Ok(checked)
}

/// Edges between potentially allowable nodes come in opposite pairs.
pub fn check_edge_symmetry(g: &TransitionGraph) -> Result<(), String> {
    for e in &g.edges {
        if g.potentially_allowable[e.to] && !g.out_edges(e.to).iter().any(|b| b.to == e.from) {
            return Err(format!(
                "edge {} -> {} has no reverse",
                g.nodes[e.from], g.nodes[e.to]
            ));
        }
    }
    Ok(())
}

/// Per-disk Euler tuples are constant on components.
pub fn check_euler_constancy(h: &Handlebody, g: &TransitionGraph) -> Result<(), String> {
    let tuple = |c: &Configuration| -> Vec<i64> {
        c.diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| euler_invariant(d, h.anchor(i)))
            .collect()
    };
    for comp in &g.components {
        let first = tuple(&g.nodes[comp[0]]);
        for &v in comp {
            if tuple(&g.nodes[v]) != first {
                return Err(format!(
                    "{} and {} share a component",
                    g.nodes[comp[0]], g.nodes[v]
                ));
            }
        }
    }
    Ok(())
}

/// Components partition the nodes and edges stay in range.
pub fn check_well_formed(g: &TransitionGraph) -> Result<(), String> {
    let mut seen = vec![false; g.nodes.len()];
    for (k, comp) in g.components.iter().enumerate() {
        for &v in comp {
            if seen[v] || g.component_of[v] != k {
                return Err(format!("node {v} misplaced"));
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err("a node belongs to no component".into());
    }
    for e in &g.edges {
        if e.from >= g.nodes.len() || e.to >= g.nodes.len() {
            return Err("edge out of range".into());
        }
        if !g.potentially_allowable[e.from] {
            return Err(format!("edge leaves {}", g.nodes[e.from]));
        }
        if g.component_of[e.from] != g.component_of[e.to] {
            return Err("edge crosses components".into());
        }
    }
    for (k, comp) in g.components.iter().enumerate() {
        if g.allowable[k] != comp.iter().all(|&v| g.potentially_allowable[v]) {
            return Err(format!("component {k} flag"));
        }
    }
    Ok(())
}

pub fn explore_default(h: &Handlebody) -> TransitionGraph {
    explore(h, &ExploreOptions::default()).unwrap()
}
