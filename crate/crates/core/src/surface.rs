//! The handlebody boundary cut along its compressing disks, and the dividing
//! set of the resulting ball after edge rounding.
//!
//! Cutting a genus-g handlebody along disks `D_0..D_{g-1}` leaves a ball whose
//! boundary sphere is the planar surface `P` (the old boundary with `2g` holes)
//! plus two copies of every disk. Each hole carries `2n_i` slots, labelled
//! counterclockwise as seen from outside the ball. Slot `j` of a hole is where
//! outer arc endpoint `j` meets disk strand endpoint `j` after rounding; the
//! quarter-period shift of the rounding rule is absorbed into this labelling.
//!
//! Chord endpoint `j` of disk `i` sits on slot `j` of hole `i+` and on slot
//! `offset_i - j` of hole `i-`. With that labelling the same marked point of
//! the boundary surface appears as slot `j` on `i+` and slot `offset_i - 1 - j`
//! on `i-`.

use std::collections::BTreeMap;
use std::fmt;

use crate::chord::{bypass_outcome, BypassArc, ChordDiagram, Side, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HoleCopy {
    Plus,
    Minus,
}

impl HoleCopy {
    pub const BOTH: [HoleCopy; 2] = [HoleCopy::Plus, HoleCopy::Minus];

    fn index(self) -> usize {
        match self {
            HoleCopy::Plus => 0,
            HoleCopy::Minus => 1,
        }
    }

    /// Side of the abstract disk facing the interior of the ball.
    ///
    /// The `+` hole shows the disk from its front, so the ball lies behind it;
    /// the `-` hole shows the back.
    pub fn interior_side(self) -> Side {
        match self {
            HoleCopy::Plus => Side::Back,
            HoleCopy::Minus => Side::Front,
        }
    }
}

impl fmt::Display for HoleCopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HoleCopy::Plus => "+",
            HoleCopy::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HoleTag {
    pub disk: usize,
    pub copy: HoleCopy,
}

impl HoleTag {
    pub fn new(disk: usize, copy: HoleCopy) -> HoleTag {
        HoleTag { disk, copy }
    }
}

impl fmt::Display for HoleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.disk, self.copy)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub hole: HoleTag,
    pub point: usize,
}

impl Slot {
    pub fn new(disk: usize, copy: HoleCopy, point: usize) -> Slot {
        Slot {
            hole: HoleTag::new(disk, copy),
            point,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.hole, self.point)
    }
}

/// Boundary segment of a hole from slot `start` to slot `start + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub hole: HoleTag,
    pub start: usize,
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.hole, self.start)
    }
}

/// A complementary region of the outer arcs in `P`, given by its boundary
/// cycles. Each cycle lists hole segments in the order met when walking the
/// boundary with the region on the left; consecutive segments are joined by
/// the outer arc leaving the first segment's `start` slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub cycles: Vec<Vec<Segment>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskSpec {
    /// Chord count; `tb(boundary) = -n`.
    pub n: usize,
    /// Chord endpoint `j` lands on slot `offset - j` of the `-` hole.
    pub offset: usize,
    pub anchor: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandlebodyPresentation {
    pub genus: usize,
    pub disks: Vec<DiskSpec>,
    /// Planar order of the holes; informational.
    pub holes: Vec<HoleTag>,
    pub outer_arcs: Vec<(Slot, Slot)>,
    pub closed_outer_components: usize,
    pub face_certificate: Option<Vec<Face>>,
}

impl HandlebodyPresentation {
    pub fn default_holes(genus: usize) -> Vec<HoleTag> {
        (0..genus)
            .flat_map(|i| HoleCopy::BOTH.map(|c| HoleTag::new(i, c)))
            .collect()
    }

    /// Solid torus whose boundary carries two dividing curves of slope
    /// `-p/q`, meridian slope 0. The meridian disk meets the dividing set in
    /// `2p` points.
    ///
    /// On the annulus between the two holes the dividing arcs run from slot `m`
    /// of `0-` to slot `2q - 1 - m` of `0+`.
    pub fn solid_torus(p: usize, q: usize) -> HandlebodyPresentation {
        let len = 2 * p as i64;
        let outer_arcs = (0..len)
            .map(|m| {
                let top = (2 * q as i64 - 1 - m).rem_euclid(len) as usize;
                (
                    Slot::new(0, HoleCopy::Plus, top),
                    Slot::new(0, HoleCopy::Minus, m as usize),
                )
            })
            .collect();
        HandlebodyPresentation {
            genus: 1,
            disks: vec![DiskSpec {
                n: p,
                offset: 0,
                anchor: Sign::Plus,
            }],
            holes: HandlebodyPresentation::default_holes(1),
            outer_arcs,
            closed_outer_components: 0,
            face_certificate: None,
        }
    }

    /// Rectangular faces of the annulus in [`solid_torus`](Self::solid_torus).
    pub fn solid_torus_faces(p: usize, q: usize) -> Vec<Face> {
        let len = 2 * p as i64;
        (0..len)
            .map(|j| {
                let below = (2 * q as i64 - 2 - j).rem_euclid(len) as usize;
                Face {
                    cycles: vec![vec![
                        Segment {
                            hole: HoleTag::new(0, HoleCopy::Plus),
                            start: j as usize,
                        },
                        Segment {
                            hole: HoleTag::new(0, HoleCopy::Minus),
                            start: below,
                        },
                    ]],
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub warnings: Vec<String>,
    /// Components of the boundary dividing set, closed ones included.
    pub boundary_curves: usize,
    pub certificate_checked: bool,
}

/// One chord diagram per compressing disk.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub diagrams: Vec<ChordDiagram>,
}

impl Configuration {
    pub fn new(diagrams: Vec<ChordDiagram>) -> Configuration {
        Configuration { diagrams }
    }

    /// Canonical label: the sorted pair lists of the diagrams joined by `|`.
    pub fn label(&self) -> String {
        self.diagrams
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn with_diagram(&self, disk: usize, d: ChordDiagram) -> Configuration {
        let mut diagrams = self.diagrams.clone();
        diagrams[disk] = d;
        Configuration { diagrams }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Dividing set of the cut-open ball's boundary as a degree-2 pairing graph.
///
/// Node `2s` is the outer-arc end of slot `s`, node `2s + 1` its disk end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundedBoundary {
    pub node_count: usize,
    pub outer_edges: Vec<(usize, usize)>,
    pub chord_edges: Vec<(usize, usize)>,
    pub connectors: Vec<(usize, usize)>,
    pub components: usize,
    pub extra_closed: usize,
}

impl RoundedBoundary {
    pub fn total(&self) -> usize {
        self.components + self.extra_closed
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer_edges
            .iter()
            .chain(&self.chord_edges)
            .chain(&self.connectors)
            .copied()
    }
}

struct Dsu {
    parent: Vec<usize>,
    sets: usize,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.parent[a.max(b)] = a.min(b);
        self.sets -= 1;
        true
    }
}

fn malformed(locator: impl Into<String>, detail: impl Into<String>) -> Error {
    Error::MalformedPresentation {
        locator: locator.into(),
        detail: detail.into(),
    }
}

/// Checks every structural invariant of a presentation, and Giroux tightness
/// of the boundary when a face certificate is supplied.
pub fn validate_presentation(p: &HandlebodyPresentation) -> Result<ValidationReport> {
    Handlebody::new(p.clone()).map(|h| h.report)
}

/// A validated presentation with slot indexing precomputed.
#[derive(Clone, Debug)]
pub struct Handlebody {
    presentation: HandlebodyPresentation,
    hole_base: Vec<[usize; 2]>,
    slot_count: usize,
    outer_partner: Vec<usize>,
    report: ValidationReport,
}

impl Handlebody {
    pub fn new(presentation: HandlebodyPresentation) -> Result<Handlebody> {
        let p = &presentation;
        if p.genus == 0 {
            return Err(malformed("genus", "genus must be positive"));
        }
        if p.disks.len() != p.genus {
            return Err(malformed(
                "disks",
                format!("genus {} but {} disks", p.genus, p.disks.len()),
            ));
        }
        for (i, d) in p.disks.iter().enumerate() {
            if d.n == 0 {
                return Err(Error::EmptyIntersection { disk: i });
            }
            if d.offset >= 2 * d.n {
                return Err(Error::BadIdentification {
                    disk: i,
                    detail: format!("offset {} outside 0..{}", d.offset, 2 * d.n),
                });
            }
        }
        let mut listed = p.holes.clone();
        listed.sort();
        if listed != HandlebodyPresentation::default_holes(p.genus) {
            return Err(malformed(
                "holes",
                "every disk needs exactly one + hole and one - hole",
            ));
        }

        let mut hole_base = Vec::with_capacity(p.genus);
        let mut slot_count = 0;
        for d in &p.disks {
            hole_base.push([slot_count, slot_count + 2 * d.n]);
            slot_count += 4 * d.n;
        }
        let mut h = Handlebody {
            hole_base,
            slot_count,
            outer_partner: vec![usize::MAX; slot_count],
            report: ValidationReport::default(),
            presentation: presentation.clone(),
        };

        for &(a, b) in &presentation.outer_arcs {
            for s in [a, b] {
                if s.hole.disk >= h.genus() {
                    return Err(malformed(s.to_string(), "no such hole"));
                }
                if s.point >= 2 * h.n(s.hole.disk) {
                    return Err(malformed(s.to_string(), "no such marked point"));
                }
            }
            let (ia, ib) = (h.slot_index(a), h.slot_index(b));
            if ia == ib {
                return Err(Error::DegreeViolation {
                    locator: a.to_string(),
                    detail: "outer arc joins a point to itself".into(),
                });
            }
            for (s, i) in [(a, ia), (b, ib)] {
                if h.outer_partner[i] != usize::MAX {
                    return Err(Error::DegreeViolation {
                        locator: s.to_string(),
                        detail: "marked point is the endpoint of two outer arcs".into(),
                    });
                }
            }
            h.outer_partner[ia] = ib;
            h.outer_partner[ib] = ia;
        }
        if let Some(i) = h.outer_partner.iter().position(|&x| x == usize::MAX) {
            return Err(Error::DegreeViolation {
                locator: h.slot(i).to_string(),
                detail: "marked point is not the endpoint of any outer arc".into(),
            });
        }

        let mut report = ValidationReport {
            boundary_curves: h.boundary_curve_count() + p.closed_outer_components,
            ..ValidationReport::default()
        };
        if p.closed_outer_components > 0 {
            report.warnings.push(format!(
                "{} closed boundary dividing curve(s) miss every disk; the cut system \
                 should be re-chosen to meet them",
                p.closed_outer_components
            ));
        }
        if let Some(faces) = &p.face_certificate {
            h.check_faces(faces)?;
            report.certificate_checked = true;
            if p.closed_outer_components > 0 {
                report.warnings.push(
                    "face certificate does not cover closed curves disjoint from the disks".into(),
                );
            }
        }
        h.report = report;
        Ok(h)
    }

    pub fn presentation(&self) -> &HandlebodyPresentation {
        &self.presentation
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    pub fn genus(&self) -> usize {
        self.presentation.genus
    }

    pub fn n(&self, disk: usize) -> usize {
        self.presentation.disks[disk].n
    }

    pub fn disk_sizes(&self) -> Vec<usize> {
        self.presentation.disks.iter().map(|d| d.n).collect()
    }

    pub fn anchor(&self, disk: usize) -> Sign {
        self.presentation.disks[disk].anchor
    }

    pub fn slot_count(&self) -> usize {
        self.slot_count
    }

    pub fn slot_index(&self, s: Slot) -> usize {
        self.hole_base[s.hole.disk][s.hole.copy.index()] + s.point
    }

    pub fn slot(&self, index: usize) -> Slot {
        for (disk, bases) in self.hole_base.iter().enumerate() {
            for copy in HoleCopy::BOTH {
                let base = bases[copy.index()];
                if (base..base + 2 * self.n(disk)).contains(&index) {
                    return Slot::new(disk, copy, index - base);
                }
            }
        }
        panic!("slot index {index} out of range");
    }

    pub fn outer_partner(&self, s: Slot) -> Slot {
        self.slot(self.outer_partner[self.slot_index(s)])
    }

    /// Chord diagram of disk `disk` as drawn on the given hole.
    pub fn install(&self, disk: usize, copy: HoleCopy, d: &ChordDiagram) -> ChordDiagram {
        match copy {
            HoleCopy::Plus => d.clone(),
            HoleCopy::Minus => d.mirrored(self.presentation.disks[disk].offset),
        }
    }

    /// Reads a diagram drawn on a hole back into the disk's own labelling.
    pub fn read_back(&self, disk: usize, copy: HoleCopy, d: &ChordDiagram) -> ChordDiagram {
        // The mirror relabelling is an involution.
        self.install(disk, copy, d)
    }

    /// Marked point of the boundary surface underlying a slot, numbered by
    /// its `+` slot.
    fn surface_point(&self, s: Slot) -> usize {
        let len = 2 * self.n(s.hole.disk);
        let j = match s.hole.copy {
            HoleCopy::Plus => s.point,
            HoleCopy::Minus => {
                (self.presentation.disks[s.hole.disk].offset + 2 * len - 1 - s.point) % len
            }
        };
        self.hole_base[s.hole.disk][0] / 2 + j
    }

    /// Components of the boundary dividing set that meet the disks.
    fn boundary_curve_count(&self) -> usize {
        let points: usize = self.disk_sizes().iter().map(|n| 2 * n).sum();
        let mut dsu = Dsu::new(points);
        for &(a, b) in &self.presentation.outer_arcs {
            dsu.union(self.surface_point(a), self.surface_point(b));
        }
        dsu.sets
    }

    /// Segment following `seg` on a boundary walk.
    fn next_segment(&self, seg: Segment) -> Segment {
        let across = self.outer_partner(Slot {
            hole: seg.hole,
            point: seg.start,
        });
        let len = 2 * self.n(across.hole.disk);
        Segment {
            hole: across.hole,
            start: (across.point + len - 1) % len,
        }
    }

    /// All boundary cycles of the regions of `P` cut by the outer arcs.
    pub fn boundary_walks(&self) -> Vec<Vec<Segment>> {
        let mut seen = BTreeMap::new();
        let mut walks = Vec::new();
        for disk in 0..self.genus() {
            for copy in HoleCopy::BOTH {
                for start in 0..2 * self.n(disk) {
                    let first = Segment {
                        hole: HoleTag::new(disk, copy),
                        start,
                    };
                    if seen.contains_key(&first) {
                        continue;
                    }
                    let mut walk = Vec::new();
                    let mut seg = first;
                    while seen.insert(seg, walks.len()).is_none() {
                        walk.push(seg);
                        seg = self.next_segment(seg);
                    }
                    walks.push(walk);
                }
            }
        }
        walks
    }

    fn check_faces(&self, faces: &[Face]) -> Result<()> {
        let mut owner: BTreeMap<Segment, usize> = BTreeMap::new();
        for (f, face) in faces.iter().enumerate() {
            if face.cycles.is_empty() {
                return Err(malformed(format!("face {f}"), "face has no boundary"));
            }
            for cycle in &face.cycles {
                if cycle.is_empty() {
                    return Err(malformed(format!("face {f}"), "empty boundary cycle"));
                }
                for (k, &seg) in cycle.iter().enumerate() {
                    if seg.hole.disk >= self.genus() || seg.start >= 2 * self.n(seg.hole.disk) {
                        return Err(malformed(format!("face {f}"), format!("no segment {seg}")));
                    }
                    let expected = self.next_segment(seg);
                    let listed = cycle[(k + 1) % cycle.len()];
                    if listed != expected {
                        return Err(malformed(
                            format!("face {f}"),
                            format!(
                                "after {seg} the boundary continues with {expected}, not {listed}"
                            ),
                        ));
                    }
                    if owner.insert(seg, f).is_some() {
                        return Err(malformed(
                            format!("face {f}"),
                            format!("segment {seg} is listed twice"),
                        ));
                    }
                }
            }
        }
        let segments = 2 * self.slot_count / 2;
        if owner.len() != segments {
            return Err(malformed(
                "face certificate",
                format!("{} of {} hole segments covered", owner.len(), segments),
            ));
        }
        let euler: i64 = faces.iter().map(|f| 2 - f.cycles.len() as i64).sum();
        let points: i64 = self.disk_sizes().iter().map(|&n| 2 * n as i64).sum();
        let expected = 2 - 2 * self.genus() as i64 + points;
        if euler != expected {
            return Err(malformed(
                "face certificate",
                format!("faces have total Euler characteristic {euler}, a planar surface needs {expected}"),
            ));
        }

        // Glue faces across the disk boundaries into regions of the surface
        // minus the dividing set; a disk region means a contractible curve.
        let mut dsu = Dsu::new(faces.len());
        let mut glued = vec![0i64; faces.len()];
        for (disk, spec) in self.presentation.disks.iter().enumerate() {
            let len = 2 * spec.n;
            for j in 0..len {
                let plus = Segment {
                    hole: HoleTag::new(disk, HoleCopy::Plus),
                    start: j,
                };
                let minus = Segment {
                    hole: HoleTag::new(disk, HoleCopy::Minus),
                    start: (spec.offset + 2 * len - 2 - j) % len,
                };
                let (a, b) = (owner[&plus], owner[&minus]);
                dsu.union(a, b);
                glued[a] += 1;
            }
        }
        let mut chi: BTreeMap<usize, i64> = BTreeMap::new();
        for (f, face) in faces.iter().enumerate() {
            let root = dsu.find(f);
            *chi.entry(root).or_default() += 2 - face.cycles.len() as i64 - glued[f];
        }
        if let Some((root, _)) = chi.iter().find(|(_, &c)| c == 1) {
            return Err(Error::UntightBoundary {
                detail: format!(
                    "the region containing face {root} is a disk, so its boundary \
                     dividing curve is contractible"
                ),
            });
        }
        Ok(())
    }

    pub fn check_configuration(&self, c: &Configuration) -> Result<()> {
        if c.diagrams.len() != self.genus() {
            return Err(Error::ConfigurationMismatch {
                locator: "configuration".into(),
                detail: format!("{} diagrams for genus {}", c.diagrams.len(), self.genus()),
            });
        }
        for (i, d) in c.diagrams.iter().enumerate() {
            if d.n() != self.n(i) {
                return Err(Error::ConfigurationMismatch {
                    locator: format!("disk {i}"),
                    detail: format!("diagram has {} chords, disk needs {}", d.n(), self.n(i)),
                });
            }
        }
        Ok(())
    }

    fn pairing(&self, hole_diagrams: &[[ChordDiagram; 2]]) -> RoundedBoundary {
        let node_count = 2 * self.slot_count;
        let outer_edges = (0..self.slot_count)
            .filter(|&s| s < self.outer_partner[s])
            .map(|s| (2 * s, 2 * self.outer_partner[s]))
            .collect();
        let mut chord_edges = Vec::new();
        for (disk, pair) in hole_diagrams.iter().enumerate() {
            for copy in HoleCopy::BOTH {
                let base = self.hole_base[disk][copy.index()];
                for c in pair[copy.index()].chords() {
                    chord_edges.push((2 * (base + c.lo) + 1, 2 * (base + c.hi) + 1));
                }
            }
        }
        let connectors = (0..self.slot_count).map(|s| (2 * s, 2 * s + 1)).collect();
        let mut rb = RoundedBoundary {
            node_count,
            outer_edges,
            chord_edges,
            connectors,
            components: 0,
            extra_closed: self.presentation.closed_outer_components,
        };
        let mut dsu = Dsu::new(node_count);
        let edges: Vec<_> = rb.edges().collect();
        for (a, b) in edges {
            dsu.union(a, b);
        }
        rb.components = dsu.sets;
        rb
    }

    fn hole_diagrams(&self, c: &Configuration) -> Vec<[ChordDiagram; 2]> {
        c.diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| HoleCopy::BOTH.map(|copy| self.install(i, copy, d)))
            .collect()
    }

    /// Dividing set of the cut-open ball after rounding its edges.
    pub fn rounded_boundary(&self, c: &Configuration) -> Result<RoundedBoundary> {
        self.check_configuration(c)?;
        Ok(self.pairing(&self.hole_diagrams(c)))
    }

    /// The ball boundary carries exactly one dividing curve.
    pub fn potentially_allowable(&self, c: &Configuration) -> Result<bool> {
        Ok(self.rounded_boundary(c)?.total() == 1)
    }

    /// Dividing-curve count of the ball boundary after attaching a bypass from
    /// inside the ball along `a` on one copy of `disk`, the other copy keeping
    /// the old diagram. `a` is given in the disk's own labelling; its side is
    /// replaced by the side facing the interior. Curves closed off on the disk
    /// count as components of the sphere.
    pub fn peel_attach_count(
        &self,
        c: &Configuration,
        disk: usize,
        copy: HoleCopy,
        a: &BypassArc,
    ) -> Result<usize> {
        Ok(self.peel(c, disk, copy, a)?.0)
    }

    /// Like [`peel_attach_count`](Self::peel_attach_count), also returning the
    /// peeled diagram (in the disk's labelling) and the closed loops created.
    pub fn peel(
        &self,
        c: &Configuration,
        disk: usize,
        copy: HoleCopy,
        a: &BypassArc,
    ) -> Result<(usize, ChordDiagram, usize)> {
        self.check_configuration(c)?;
        if disk >= self.genus() {
            return Err(Error::ConfigurationMismatch {
                locator: format!("disk {disk}"),
                detail: "no such disk".into(),
            });
        }
        let arc = a.with_side(copy.interior_side());
        let outcome = bypass_outcome(&c.diagrams[disk], &arc)?;
        let mut holes = self.hole_diagrams(c);
        holes[disk][copy.index()] = self.install(disk, copy, &outcome.diagram);
        let count = self.pairing(&holes).total() + outcome.closed_loops;
        Ok((count, outcome.diagram, outcome.closed_loops))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::{enumerate_bypass_arcs, enumerate_diagrams};

    fn config(n: usize, pairs: &[(usize, usize)]) -> Configuration {
        Configuration::new(vec![ChordDiagram::from_pairs(n, pairs).unwrap()])
    }

    #[test]
    fn standard_solid_torus_has_one_curve() {
        let h = Handlebody::new(HandlebodyPresentation::solid_torus(1, 1)).unwrap();
        let rb = h.rounded_boundary(&config(1, &[(0, 1)])).unwrap();
        assert_eq!(rb.components, 1);
        assert_eq!(h.report().boundary_curves, 2);
        assert!(h.potentially_allowable(&config(1, &[(0, 1)])).unwrap());
    }

    #[test]
    fn slope_minus_two_both_configurations_allowable() {
        let h = Handlebody::new(HandlebodyPresentation::solid_torus(2, 1)).unwrap();
        for d in enumerate_diagrams(2) {
            let c = Configuration::new(vec![d]);
            assert_eq!(h.rounded_boundary(&c).unwrap().components, 1);
        }
    }

    #[test]
    fn solid_torus_templates_are_planar_with_two_curves() {
        for p in 1..=7 {
            for q in 1..=p {
                let mut pres = HandlebodyPresentation::solid_torus(p, q);
                pres.face_certificate = Some(HandlebodyPresentation::solid_torus_faces(p, q));
                let h = Handlebody::new(pres).unwrap();
                let expected = 2 * gcd(p, q);
                assert_eq!(h.report().boundary_curves, expected, "p={p} q={q}");
                assert!(h.report().certificate_checked);
                assert_eq!(h.boundary_walks().len(), 2 * p);
            }
        }
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn degree_violation_reported() {
        let mut p = HandlebodyPresentation::solid_torus(1, 1);
        p.outer_arcs[1].0 = p.outer_arcs[0].0;
        assert!(matches!(
            validate_presentation(&p),
            Err(Error::DegreeViolation { .. })
        ));
        let mut p = HandlebodyPresentation::solid_torus(2, 1);
        p.outer_arcs.pop();
        assert!(matches!(
            validate_presentation(&p),
            Err(Error::DegreeViolation { .. })
        ));
    }

    #[test]
    fn empty_intersection_and_bad_identification() {
        let mut p = HandlebodyPresentation::solid_torus(1, 1);
        p.disks[0].n = 0;
        p.outer_arcs.clear();
        assert_eq!(
            validate_presentation(&p),
            Err(Error::EmptyIntersection { disk: 0 })
        );
        let mut p = HandlebodyPresentation::solid_torus(1, 1);
        p.disks[0].offset = 2;
        assert!(matches!(
            validate_presentation(&p),
            Err(Error::BadIdentification { disk: 0, .. })
        ));
    }

    #[test]
    fn contractible_boundary_curve_detected() {
        // Arcs (0+,0)-(0+,1) and (0-,2)-(0-,3) each cut a cap off their hole;
        // the caps are glued across the disk into a disk on the torus.
        let plus = |j| Slot::new(0, HoleCopy::Plus, j);
        let minus = |j| Slot::new(0, HoleCopy::Minus, j);
        let mut pres = HandlebodyPresentation {
            genus: 1,
            disks: vec![DiskSpec {
                n: 2,
                offset: 0,
                anchor: Sign::Plus,
            }],
            holes: HandlebodyPresentation::default_holes(1),
            outer_arcs: vec![
                (plus(0), plus(1)),
                (minus(2), minus(3)),
                (plus(2), minus(1)),
                (plus(3), minus(0)),
            ],
            closed_outer_components: 0,
            face_certificate: None,
        };
        let h = Handlebody::new(pres.clone()).unwrap();
        let faces: Vec<Face> = h
            .boundary_walks()
            .into_iter()
            .map(|w| Face { cycles: vec![w] })
            .collect();
        assert_eq!(faces.len(), 4);
        pres.face_certificate = Some(faces);
        assert!(matches!(
            validate_presentation(&pres),
            Err(Error::UntightBoundary { .. })
        ));
    }

    #[test]
    fn closed_components_warn_and_count() {
        let mut p = HandlebodyPresentation::solid_torus(1, 1);
        p.closed_outer_components = 2;
        let h = Handlebody::new(p).unwrap();
        assert_eq!(h.report().warnings.len(), 1);
        let rb = h.rounded_boundary(&config(1, &[(0, 1)])).unwrap();
        assert_eq!(rb.total(), 3);
        assert!(!h.potentially_allowable(&config(1, &[(0, 1)])).unwrap());
    }

    #[test]
    fn mirror_coherence() {
        let h = Handlebody::new(HandlebodyPresentation::solid_torus(4, 1)).unwrap();
        for d in enumerate_diagrams(4) {
            let on_hole = h.install(0, HoleCopy::Minus, &d);
            assert_eq!(h.read_back(0, HoleCopy::Minus, &on_hole), d);
        }
    }

    #[test]
    fn trivial_arcs_on_the_allowed_copy_leave_the_count() {
        let h = Handlebody::new(HandlebodyPresentation::solid_torus(2, 1)).unwrap();
        let c = config(2, &[(0, 3), (1, 2)]);
        for a in enumerate_bypass_arcs(&c.diagrams[0], false) {
            assert!(a.is_trivial());
            let counts: Vec<usize> = HoleCopy::BOTH
                .iter()
                .map(|&copy| h.peel_attach_count(&c, 0, copy, &a).unwrap())
                .collect();
            let mut sorted = counts.clone();
            sorted.sort();
            assert_eq!(sorted, vec![1, 3], "arc {a}");
        }
    }

    #[test]
    fn configuration_shape_checked() {
        let h = Handlebody::new(HandlebodyPresentation::solid_torus(2, 1)).unwrap();
        assert!(matches!(
            h.rounded_boundary(&config(1, &[(0, 1)])),
            Err(Error::ConfigurationMismatch { .. })
        ));
    }
}
