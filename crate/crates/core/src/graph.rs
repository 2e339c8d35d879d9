//! State-transition graph on configurations and the resulting classification.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;

use crate::chord::{
    enumerate_bypass_arcs, enumerate_diagrams, euler_invariant, BypassArc, ChordDiagram, Side,
};
use crate::error::{Error, Result};
use crate::surface::{Configuration, Handlebody, HoleCopy};

pub const DEFAULT_LIMIT: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExploreOptions {
    /// Worker threads for node expansion; 0 uses the rayon default.
    pub workers: usize,
    /// Upper bound on the number of configurations.
    pub limit: u128,
}

impl Default for ExploreOptions {
    fn default() -> ExploreOptions {
        ExploreOptions {
            workers: 0,
            limit: DEFAULT_LIMIT,
        }
    }
}

/// Which bypass produced a transition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub disk: usize,
    pub copy: HoleCopy,
    pub arc: BypassArc,
}

impl Witness {
    pub fn side(&self) -> Side {
        self.arc.side
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "disk {} copy {} arc {}", self.disk, self.copy, self.arc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub target: Configuration,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionGraph {
    pub nodes: Vec<Configuration>,
    pub potentially_allowable: Vec<bool>,
    /// Sorted by `(from, to)`.
    pub edges: Vec<Edge>,
    /// Node indices per component, each sorted; components ordered by
    /// smallest member.
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<usize>,
    pub allowable: Vec<bool>,
}

impl TransitionGraph {
    pub fn tight_count(&self) -> usize {
        self.allowable.iter().filter(|&&a| a).count()
    }

    pub fn out_edges(&self, node: usize) -> &[Edge] {
        let lo = self.edges.partition_point(|e| e.from < node);
        let hi = self.edges.partition_point(|e| e.from <= node);
        &self.edges[lo..hi]
    }

    pub fn index_of(&self, c: &Configuration) -> Option<usize> {
        self.nodes.binary_search(c).ok()
    }
}

/// `prod Catalan(n_i)`, saturating.
pub fn configuration_count(h: &Handlebody) -> u128 {
    h.disk_sizes()
        .iter()
        .map(|&n| crate::oracles::catalan(n.min(60)))
        .fold(1u128, |acc, c| acc.saturating_mul(c))
}

/// All configurations in lexicographic order of their diagram tuples.
pub fn enumerate_configurations(h: &Handlebody, limit: u128) -> Result<Vec<Configuration>> {
    let count = configuration_count(h);
    if count > limit {
        return Err(Error::ResourceLimit {
            configurations: count,
            limit,
        });
    }
    let per_disk: Vec<Vec<ChordDiagram>> = h
        .disk_sizes()
        .iter()
        .map(|&n| enumerate_diagrams(n))
        .collect();
    let mut out = vec![Configuration::new(Vec::new())];
    for diagrams in &per_disk {
        out = out
            .into_iter()
            .flat_map(|c| {
                diagrams.iter().map(move |d| {
                    let mut v = c.diagrams.clone();
                    v.push(d.clone());
                    Configuration::new(v)
                })
            })
            .collect();
    }
    Ok(out)
}

/// Allowable state transitions out of `c`: one nontrivial bypass attached
/// from inside the ball to one copy of one disk, leaving the dividing-curve
/// count of the ball boundary unchanged. Sorted by target; the first witness
/// in enumeration order is kept for each target.
pub fn transitions_from(h: &Handlebody, c: &Configuration) -> Result<Vec<Transition>> {
    let current = h.rounded_boundary(c)?.total();
    if current != 1 {
        return Ok(Vec::new());
    }
    let mut found: BTreeMap<Configuration, Witness> = BTreeMap::new();
    for disk in 0..h.genus() {
        let arcs: Vec<BypassArc> = enumerate_bypass_arcs(&c.diagrams[disk], true)
            .into_iter()
            .filter(|a| a.side == Side::Front)
            .collect();
        for copy in HoleCopy::BOTH {
            for a in &arcs {
                let (count, diagram, loops) = h.peel(c, disk, copy, a)?;
                if count != current || loops > 0 {
                    continue;
                }
                let target = c.with_diagram(disk, diagram);
                if &target == c {
                    continue;
                }
                found.entry(target).or_insert(Witness {
                    disk,
                    copy,
                    arc: a.with_side(copy.interior_side()),
                });
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|(target, witness)| Transition { target, witness })
        .collect())
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a.max(b)] = a.min(b);
    }
}

fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Materializes every configuration, its flag and its transitions.
pub fn explore(h: &Handlebody, opts: &ExploreOptions) -> Result<TransitionGraph> {
    let nodes = enumerate_configurations(h, opts.limit)?;
    let expanded: Vec<Result<(bool, Vec<Transition>)>> = with_workers(opts.workers, || {
        nodes
            .par_iter()
            .map(|c| {
                let pa = h.rounded_boundary(c)?.total() == 1;
                let out = if pa {
                    transitions_from(h, c)?
                } else {
                    Vec::new()
                };
                Ok((pa, out))
            })
            .collect()
    });

    let index: HashMap<&Configuration, usize> =
        nodes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut potentially_allowable = Vec::with_capacity(nodes.len());
    let mut edges = Vec::new();
    for (from, r) in expanded.into_iter().enumerate() {
        let (pa, out) = r?;
        potentially_allowable.push(pa);
        for t in out {
            edges.push(Edge {
                from,
                to: index[&t.target],
                witness: t.witness,
            });
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));

    let mut dsu = Dsu((0..nodes.len()).collect());
    for e in &edges {
        dsu.union(e.from, e.to);
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..nodes.len() {
        by_root.entry(dsu.find(v)).or_default().push(v);
    }
    let components: Vec<Vec<usize>> = by_root.into_values().collect();
    let mut component_of = vec![0; nodes.len()];
    for (k, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v] = k;
        }
    }
    let allowable = components
        .iter()
        .map(|comp| comp.iter().all(|&v| potentially_allowable[v]))
        .collect();
    Ok(TransitionGraph {
        nodes,
        potentially_allowable,
        edges,
        components,
        component_of,
        allowable,
    })
}

/// Outcome of a tightness check for one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessVerdict {
    pub tight: bool,
    /// On failure, transitions from `c` to a configuration that is not
    /// potentially allowable. Empty when `c` itself is not.
    pub witness: Vec<Transition>,
}

/// Breadth-first search from `c` through potentially allowable
/// configurations, stopping at the first one that is not.
pub fn is_tight(h: &Handlebody, c: &Configuration, limit: u128) -> Result<TightnessVerdict> {
    if h.rounded_boundary(c)?.total() != 1 {
        return Ok(TightnessVerdict {
            tight: false,
            witness: Vec::new(),
        });
    }
    let mut parent: HashMap<Configuration, Option<(Configuration, Witness)>> = HashMap::new();
    parent.insert(c.clone(), None);
    let mut queue = VecDeque::from([c.clone()]);
    while let Some(cur) = queue.pop_front() {
        for t in transitions_from(h, &cur)? {
            if parent.contains_key(&t.target) {
                continue;
            }
            parent.insert(t.target.clone(), Some((cur.clone(), t.witness)));
            if parent.len() as u128 > limit {
                return Err(Error::ResourceLimit {
                    configurations: parent.len() as u128,
                    limit,
                });
            }
            if h.rounded_boundary(&t.target)?.total() != 1 {
                let mut path = Vec::new();
                let mut at = t.target;
                while let Some(Some((prev, w))) = parent.get(&at) {
                    path.push(Transition {
                        target: at.clone(),
                        witness: *w,
                    });
                    at = prev.clone();
                }
                path.reverse();
                return Ok(TightnessVerdict {
                    tight: false,
                    witness: path,
                });
            }
            queue.push_back(t.target);
        }
    }
    Ok(TightnessVerdict {
        tight: true,
        witness: Vec::new(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllowableComponent {
    pub size: usize,
    pub representative: Configuration,
    pub euler: Vec<i64>,
    pub universally_tight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisallowedComponent {
    pub size: usize,
    pub representative: Configuration,
    /// From a potentially allowable member to a member that is not; empty
    /// when the component has no potentially allowable member.
    pub witness: Vec<Transition>,
    pub start: Option<Configuration>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub genus: usize,
    pub disk_sizes: Vec<usize>,
    pub total_configurations: usize,
    pub potentially_allowable_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub tight_count: usize,
    pub allowable: Vec<AllowableComponent>,
    pub disallowed: Vec<DisallowedComponent>,
}

impl ClassificationReport {
    /// How far a singleton component certifies universal tightness.
    pub fn universal_tightness_scope(&self) -> &'static str {
        if self.genus == 1 {
            "iff, genus 1"
        } else {
            "sufficient"
        }
    }
}

fn path_to_bad(g: &TransitionGraph, comp: &[usize]) -> (Option<Configuration>, Vec<Transition>) {
    // Undirected BFS from the first potentially allowable member; edges are
    // followed forward only, which suffices because they are symmetric between
    // potentially allowable nodes.
    let Some(&start) = comp.iter().find(|&&v| g.potentially_allowable[v]) else {
        return (None, Vec::new());
    };
    let mut prev: HashMap<usize, (usize, Witness)> = HashMap::new();
    let mut seen = vec![false; g.nodes.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for e in g.out_edges(v) {
            if seen[e.to] {
                continue;
            }
            seen[e.to] = true;
            prev.insert(e.to, (v, e.witness));
            if !g.potentially_allowable[e.to] {
                let mut path = Vec::new();
                let mut at = e.to;
                while let Some(&(p, w)) = prev.get(&at) {
                    path.push(Transition {
                        target: g.nodes[at].clone(),
                        witness: w,
                    });
                    at = p;
                }
                path.reverse();
                return (Some(g.nodes[start].clone()), path);
            }
            queue.push_back(e.to);
        }
    }
    (Some(g.nodes[start].clone()), Vec::new())
}

pub fn classify_graph(h: &Handlebody, g: &TransitionGraph) -> ClassificationReport {
    let mut allowable = Vec::new();
    let mut disallowed = Vec::new();
    for (k, comp) in g.components.iter().enumerate() {
        let representative = g.nodes[comp[0]].clone();
        if g.allowable[k] {
            let euler = representative
                .diagrams
                .iter()
                .enumerate()
                .map(|(i, d)| euler_invariant(d, h.anchor(i)))
                .collect();
            allowable.push(AllowableComponent {
                size: comp.len(),
                representative,
                euler,
                universally_tight: comp.len() == 1,
            });
        } else {
            let (start, witness) = path_to_bad(g, comp);
            disallowed.push(DisallowedComponent {
                size: comp.len(),
                representative,
                witness,
                start,
            });
        }
    }
    ClassificationReport {
        genus: h.genus(),
        disk_sizes: h.disk_sizes(),
        total_configurations: g.nodes.len(),
        potentially_allowable_count: g.potentially_allowable.iter().filter(|&&p| p).count(),
        edge_count: g.edges.len(),
        component_count: g.components.len(),
        tight_count: g.tight_count(),
        allowable,
        disallowed,
    }
}

pub fn classify(h: &Handlebody, opts: &ExploreOptions) -> Result<ClassificationReport> {
    let g = explore(h, opts)?;
    Ok(classify_graph(h, &g))
}
