//! Dividing sets on a convex disk, represented as non-crossing chord diagrams.
//!
//! Points are labelled `0..2n` counterclockwise around the boundary of the disk
//! as seen from its front. Boundary arc `k` runs from point `k` to point `k + 1`
//! (mod `2n`). A diagram can never contain a closed curve: a closed dividing
//! curve on a disk bounds a disk and is excluded by construction.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Side of the disk a bypass is attached from.
///
/// `Front` is the side from which the boundary labels appear counterclockwise;
/// attaching from the front rotates the six local strand ends one click
/// counterclockwise (as drawn from the front).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Front,
    Back,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Front => Side::Back,
            Side::Back => Side::Front,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Front => "front",
            Side::Back => "back",
        })
    }
}

/// A chord, identified by its endpoints with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    pub lo: usize,
    pub hi: usize,
}

impl Chord {
    pub fn new(a: usize, b: usize) -> Chord {
        Chord {
            lo: a.min(b),
            hi: a.max(b),
        }
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// A non-crossing perfect matching of `2n` boundary points.
///
/// Ordering is lexicographic on the partner table, which is the canonical
/// order used everywhere diagrams are listed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    partner: Vec<usize>,
}

impl ChordDiagram {
    /// Builds a diagram from its partner table, checking every invariant.
    pub fn new(partner: Vec<usize>) -> Result<ChordDiagram> {
        let len = partner.len();
        if !len.is_multiple_of(2) {
            return Err(Error::NotInvolution {
                point: len,
                detail: format!("odd number of points ({len})"),
            });
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= len {
                return Err(Error::NotInvolution {
                    point: p,
                    detail: format!("partner {q} out of range 0..{len}"),
                });
            }
            if q == p {
                return Err(Error::NotInvolution {
                    point: p,
                    detail: "point is matched to itself".into(),
                });
            }
            if partner[q] != p {
                return Err(Error::NotInvolution {
                    point: p,
                    detail: format!("{p} -> {q} but {q} -> {}", partner[q]),
                });
            }
        }
        check_non_crossing(&partner)?;
        Ok(ChordDiagram { partner })
    }

    /// Builds a diagram on `2n` points from an unordered list of pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<ChordDiagram> {
        let len = 2 * n;
        let mut partner = vec![usize::MAX; len];
        for &(a, b) in pairs {
            for p in [a, b] {
                if p >= len {
                    return Err(Error::NotInvolution {
                        point: p,
                        detail: format!("label out of range 0..{len}"),
                    });
                }
                if partner[p] != usize::MAX {
                    return Err(Error::NotInvolution {
                        point: p,
                        detail: "label used by two chords".into(),
                    });
                }
            }
            if a == b {
                return Err(Error::NotInvolution {
                    point: a,
                    detail: "point is matched to itself".into(),
                });
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(p) = partner.iter().position(|&q| q == usize::MAX) {
            return Err(Error::NotInvolution {
                point: p,
                detail: "label not covered by any chord".into(),
            });
        }
        ChordDiagram::new(partner)
    }

    pub fn empty() -> ChordDiagram {
        ChordDiagram {
            partner: Vec::new(),
        }
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of boundary points, `2n`.
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Chords sorted by their lower endpoint.
    pub fn chords(&self) -> impl Iterator<Item = Chord> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(p, &q)| p < q)
            .map(|(p, &q)| Chord { lo: p, hi: q })
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.chords().map(|c| (c.lo, c.hi)).collect()
    }

    pub fn has_chord(&self, c: Chord) -> bool {
        c.lo < c.hi && c.hi < self.points() && self.partner[c.lo] == c.hi
    }

    /// True when every chord joins two cyclically adjacent points.
    pub fn is_boundary_parallel(&self) -> bool {
        let len = self.points();
        self.chords()
            .all(|c| c.hi == c.lo + 1 || (c.lo == 0 && c.hi == len - 1))
    }

    /// Image under the order-reversing relabelling `j -> offset - j (mod 2n)`.
    pub fn mirrored(&self, offset: usize) -> ChordDiagram {
        let len = self.points();
        if len == 0 {
            return self.clone();
        }
        let map = |j: usize| (offset % len + len - j) % len;
        let mut partner = vec![0; len];
        for (p, &q) in self.partner.iter().enumerate() {
            partner[map(p)] = map(q);
        }
        ChordDiagram { partner }
    }

    /// Image under the relabelling `j -> j + k (mod 2n)`.
    pub fn rotated(&self, k: usize) -> ChordDiagram {
        let len = self.points();
        if len == 0 {
            return self.clone();
        }
        let mut partner = vec![0; len];
        for (p, &q) in self.partner.iter().enumerate() {
            partner[(p + k) % len] = (q + k) % len;
        }
        ChordDiagram { partner }
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.partner.is_empty() {
            return f.write_str("()");
        }
        for c in self.chords() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn check_non_crossing(partner: &[usize]) -> Result<()> {
    let mut open: Vec<usize> = Vec::new();
    for (p, &q) in partner.iter().enumerate() {
        if p < q {
            open.push(p);
        } else {
            let top = open.pop().expect("closing point without an opening");
            if top != q {
                return Err(Error::CrossingChords {
                    first: (q, p),
                    second: (top, partner[top]),
                });
            }
        }
    }
    Ok(())
}

/// Checks a list of chords on `2n` points. Alias of [`ChordDiagram::from_pairs`].
pub fn validate_diagram(pairs: &[(usize, usize)], n: usize) -> Result<ChordDiagram> {
    ChordDiagram::from_pairs(n, pairs)
}

/// All non-crossing perfect matchings on `2n` points, in canonical order.
pub fn enumerate_diagrams(n: usize) -> Vec<ChordDiagram> {
    let mut out: Vec<ChordDiagram> = matchings(n)
        .into_iter()
        .map(|partner| ChordDiagram { partner })
        .collect();
    out.sort();
    out
}

fn matchings(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // Point 0 pairs with 2k+1; the inside block holds k chords.
    for k in 0..n {
        let inside = matchings(k);
        let outside = matchings(n - 1 - k);
        for ins in &inside {
            for outs in &outside {
                let mut partner = Vec::with_capacity(2 * n);
                partner.push(2 * k + 1);
                partner.extend(ins.iter().map(|&q| q + 1));
                partner.push(0);
                partner.extend(outs.iter().map(|&q| q + 2 * k + 2));
                out.push(partner);
            }
        }
    }
    out
}

/// One piece of a region's boundary word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryItem {
    /// Boundary arc from point `k` to point `k + 1`.
    Arc(usize),
    Chord(Chord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub word: Vec<BoundaryItem>,
    pub sign: Sign,
}

impl Region {
    pub fn chords(&self) -> impl Iterator<Item = Chord> + '_ {
        self.word.iter().filter_map(|item| match item {
            BoundaryItem::Chord(c) => Some(*c),
            BoundaryItem::Arc(_) => None,
        })
    }
}

/// Face decomposition of the disk minus the chords, with alternating signs.
///
/// Regions are numbered by their smallest boundary arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedRegions {
    regions: Vec<Region>,
    region_of_arc: Vec<usize>,
    partner: Vec<usize>,
}

impl SignedRegions {
    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn region(&self, id: usize) -> &Region {
        &self.regions[id]
    }

    pub fn region_of_arc(&self, k: usize) -> usize {
        self.region_of_arc[k]
    }

    /// Region containing the boundary arc from `2n - 1` to `0`.
    pub fn anchor_region(&self) -> usize {
        self.region_of_arc.last().copied().unwrap_or(0)
    }

    /// `(inner, outer)` regions of a chord. The inner region contains the
    /// boundary points strictly between `lo` and `hi`.
    pub fn sides(&self, c: Chord) -> (usize, usize) {
        debug_assert_eq!(self.partner[c.lo], c.hi);
        (self.region_of_arc[c.lo], self.region_of_arc[c.hi])
    }

    /// The region across `c` from `r`, if `r` borders `c`.
    pub fn across(&self, c: Chord, r: usize) -> Option<usize> {
        let (inner, outer) = self.sides(c);
        if r == inner {
            Some(outer)
        } else if r == outer {
            Some(inner)
        } else {
            None
        }
    }

    pub fn borders(&self, r: usize, c: Chord) -> bool {
        let (inner, outer) = self.sides(c);
        r == inner || r == outer
    }

    pub fn count_by_sign(&self) -> (usize, usize) {
        let plus = self.regions.iter().filter(|r| r.sign == Sign::Plus).count();
        (plus, self.regions.len() - plus)
    }
}

/// Traces the faces of the diagram and signs them, anchoring the region that
/// contains boundary arc `2n - 1`.
pub fn signed_regions(d: &ChordDiagram, anchor: Sign) -> SignedRegions {
    let len = d.points();
    if len == 0 {
        return SignedRegions {
            regions: vec![Region {
                word: Vec::new(),
                sign: anchor,
            }],
            region_of_arc: Vec::new(),
            partner: Vec::new(),
        };
    }
    let mut region_of_arc = vec![usize::MAX; len];
    let mut regions = Vec::new();
    for start in 0..len {
        if region_of_arc[start] != usize::MAX {
            continue;
        }
        let id = regions.len();
        let mut word = Vec::new();
        let mut k = start;
        loop {
            region_of_arc[k] = id;
            word.push(BoundaryItem::Arc(k));
            let p = (k + 1) % len;
            let q = d.partner(p);
            word.push(BoundaryItem::Chord(Chord::new(p, q)));
            k = q;
            if k == start {
                break;
            }
        }
        // Boundary arcs alternate in sign; arc 2n-1 carries the anchor.
        let sign = if start % 2 == 1 {
            anchor
        } else {
            anchor.flip()
        };
        regions.push(Region { word, sign });
    }
    SignedRegions {
        regions,
        region_of_arc,
        partner: d.partners().to_vec(),
    }
}

/// `#(+ regions) - #(- regions)`, i.e. `chi(R+) - chi(R-)` for a disk.
pub fn euler_invariant(d: &ChordDiagram, anchor: Sign) -> i64 {
    let (plus, minus) = signed_regions(d, anchor).count_by_sign();
    plus as i64 - minus as i64
}

/// Arc of attachment for a bypass: it starts on `c_start`, runs through
/// `r_in`, crosses `c_mid` into `r_out` and ends on `c_end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BypassArc {
    pub c_start: Chord,
    pub r_in: usize,
    pub c_mid: Chord,
    pub r_out: usize,
    pub c_end: Chord,
    pub side: Side,
}

impl BypassArc {
    pub fn is_trivial(&self) -> bool {
        self.c_start == self.c_mid || self.c_mid == self.c_end
    }

    /// The same arc traversed from the other end.
    pub fn reversed(&self) -> BypassArc {
        BypassArc {
            c_start: self.c_end,
            r_in: self.r_out,
            c_mid: self.c_mid,
            r_out: self.r_in,
            c_end: self.c_start,
            side: self.side,
        }
    }

    /// Orientation-normalized form: the lexicographically smaller traversal.
    pub fn canonical(&self) -> BypassArc {
        let rev = self.reversed();
        if rev < *self {
            rev
        } else {
            *self
        }
    }

    pub fn with_side(&self, side: Side) -> BypassArc {
        BypassArc { side, ..*self }
    }
}

impl fmt::Display for BypassArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} r{} {} r{} {} {}",
            self.c_start, self.r_in, self.c_mid, self.r_out, self.c_end, self.side
        )
    }
}

/// Corridor enumeration. Each unoriented arc is listed once per side, in
/// canonical order.
pub fn enumerate_bypass_arcs(d: &ChordDiagram, nontrivial_only: bool) -> Vec<BypassArc> {
    let regions = signed_regions(d, Sign::Plus);
    let chords_of: Vec<Vec<Chord>> = regions
        .regions()
        .iter()
        .map(|r| r.chords().collect())
        .collect();
    let mut arcs = BTreeSet::new();
    for c_mid in d.chords() {
        let (inner, outer) = regions.sides(c_mid);
        for (r_in, r_out) in [(inner, outer), (outer, inner)] {
            for &c_start in &chords_of[r_in] {
                for &c_end in &chords_of[r_out] {
                    if nontrivial_only && (c_start == c_mid || c_end == c_mid) {
                        continue;
                    }
                    let arc = BypassArc {
                        c_start,
                        r_in,
                        c_mid,
                        r_out,
                        c_end,
                        side: Side::Front,
                    };
                    let arc = arc.canonical();
                    arcs.insert(arc);
                    arcs.insert(arc.with_side(Side::Back));
                }
            }
        }
    }
    arcs.into_iter().collect()
}

/// Result of splicing a bypass move, closed loops included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BypassOutcome {
    pub diagram: ChordDiagram,
    pub closed_loops: usize,
}

fn check_arc(regions: &SignedRegions, d: &ChordDiagram, a: &BypassArc) -> Result<()> {
    for c in [a.c_start, a.c_mid, a.c_end] {
        if !d.has_chord(c) {
            return Err(Error::ArcNotInDiagram(format!("no chord {c} in {d}")));
        }
    }
    for r in [a.r_in, a.r_out] {
        if r >= regions.len() {
            return Err(Error::ArcNotInDiagram(format!("no region r{r}")));
        }
    }
    if regions.across(a.c_mid, a.r_in) != Some(a.r_out) {
        return Err(Error::ArcNotInDiagram(format!(
            "r{} and r{} are not opposite sides of {}",
            a.r_in, a.r_out, a.c_mid
        )));
    }
    if !regions.borders(a.r_in, a.c_start) {
        return Err(Error::ArcNotInDiagram(format!(
            "{} does not border r{}",
            a.c_start, a.r_in
        )));
    }
    if !regions.borders(a.r_out, a.c_end) {
        return Err(Error::ArcNotInDiagram(format!(
            "{} does not border r{}",
            a.c_end, a.r_out
        )));
    }
    Ok(())
}

/// Performs the local move and reports any closed curves it creates instead
/// of failing on them.
pub fn bypass_outcome(d: &ChordDiagram, a: &BypassArc) -> Result<BypassOutcome> {
    let regions = signed_regions(d, Sign::Plus);
    check_arc(&regions, d, a)?;
    let len = d.points();

    // Crossing i meets `chords[i]` while entering `entered[i]`.
    let chords = [a.c_start, a.c_mid, a.c_end];
    let beyond_end = regions
        .across(a.c_end, a.r_out)
        .expect("checked by check_arc");
    let entered = [a.r_in, a.r_out, beyond_end];

    // Local strand ends: top = left of the arc (front view), bottom = right.
    let top = |i: usize| len + 2 * i;
    let bottom = |i: usize| len + 2 * i + 1;
    // Chord endpoint reached through the top end of crossing i.
    let top_endpoint = |i: usize| {
        let (inner, _) = regions.sides(chords[i]);
        if entered[i] == inner {
            chords[i].hi
        } else {
            chords[i].lo
        }
    };
    let lo_facing = |i: usize| {
        if top_endpoint(i) == chords[i].lo {
            top(i)
        } else {
            bottom(i)
        }
    };
    let hi_facing = |i: usize| {
        if top_endpoint(i) == chords[i].lo {
            bottom(i)
        } else {
            top(i)
        }
    };

    let mut outside = vec![usize::MAX; len + 6];
    let mut link = |x: usize, y: usize| {
        outside[x] = y;
        outside[y] = x;
    };
    for c in d.chords() {
        let on_chord: Vec<usize> = (0..3).filter(|&i| chords[i] == c).collect();
        // Order of the crossings along the chord from lo to hi. A touching end
        // of a trivial arc sits on the lo side of the crossing it returns to.
        let order: Vec<usize> = match on_chord.as_slice() {
            [] => {
                link(c.lo, c.hi);
                continue;
            }
            [i] => vec![*i],
            [0, 1] => vec![0, 1],
            [1, 2] => vec![2, 1],
            [0, 1, 2] => {
                let (inner, _) = regions.sides(c);
                if a.r_in == inner {
                    vec![0, 2, 1]
                } else {
                    vec![2, 0, 1]
                }
            }
            _ => {
                return Err(Error::ArcNotInDiagram(format!(
                    "start and end chord {c} coincide across {}",
                    a.c_mid
                )))
            }
        };
        let mut prev = c.lo;
        for &i in &order {
            link(prev, lo_facing(i));
            prev = hi_facing(i);
        }
        link(prev, c.hi);
    }

    // Clockwise ring of local ends in the front view, starting top-left.
    let ring = [top(0), top(1), top(2), bottom(2), bottom(1), bottom(0)];
    let shift = match a.side {
        Side::Front => 5,
        Side::Back => 1,
    };
    let mut local = vec![usize::MAX; len + 6];
    for (x, y) in [(0, 5), (1, 4), (2, 3)] {
        let u = ring[(x + shift) % 6];
        let v = ring[(y + shift) % 6];
        local[u] = v;
        local[v] = u;
    }

    let mut partner = vec![usize::MAX; len];
    let mut seen = vec![false; len + 6];
    for b in 0..len {
        if partner[b] != usize::MAX {
            continue;
        }
        let mut cur = b;
        loop {
            let next = outside[cur];
            if next < len {
                partner[b] = next;
                partner[next] = b;
                break;
            }
            seen[next] = true;
            cur = local[next];
            seen[cur] = true;
        }
    }
    let mut closed_loops = 0;
    for s in len..len + 6 {
        if seen[s] {
            continue;
        }
        let mut cur = s;
        loop {
            seen[cur] = true;
            let l = local[cur];
            seen[l] = true;
            cur = outside[l];
            if cur == s {
                break;
            }
        }
        closed_loops += 1;
    }
    let diagram = ChordDiagram { partner };
    debug_assert!(ChordDiagram::new(diagram.partner.clone()).is_ok());
    Ok(BypassOutcome {
        diagram,
        closed_loops,
    })
}

/// Attaches a bypass along `a` from `a.side`.
pub fn apply_bypass(d: &ChordDiagram, a: &BypassArc) -> Result<ChordDiagram> {
    let outcome = bypass_outcome(d, a)?;
    if outcome.closed_loops > 0 {
        return Err(Error::DisallowedClosedComponent {
            loops: outcome.closed_loops,
        });
    }
    Ok(outcome.diagram)
}
