//! Text format for presentations, and the report and graph writers.
//!
//! A presentation file is a list of directives, one per line; `#` starts a
//! comment.
//!
//! ```text
//! genus 1
//! disk 0 n 2
//! holes 0+ 0-
//! identify 0 offset 0 reversed
//! anchor 0 +
//! outer (0+,1)-(0-,0) (0+,0)-(0-,1) (0+,3)-(0-,2) (0+,2)-(0-,3)
//! closed 0
//! face 0+:0 0-:0
//! face 0+:1 0-:3
//! face 0+:2 0-:2
//! face 0+:3 0-:1
//! config 0 pairs (0,1)(2,3)
//! ```
//!
//! `outer` may be repeated; its arcs accumulate. Each `face` line lists the
//! boundary cycles of one face, separated by `|`. `config` lines are only
//! used by `check`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::chord::{ChordDiagram, Sign};
use crate::error::{Error, Result};
use crate::graph::{ClassificationReport, Transition, TransitionGraph};
use crate::surface::{
    Configuration, DiskSpec, Face, Handlebody, HandlebodyPresentation, HoleCopy, HoleTag, Segment,
    Slot,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub presentation: HandlebodyPresentation,
    pub configuration: Option<Configuration>,
}

fn syntax(line: usize, detail: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        detail: detail.into(),
    }
}

fn semantic(line: usize, source: Error) -> Error {
    Error::Semantic {
        line,
        source: Box::new(source),
    }
}

fn parse_num(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

fn expect_word(line: usize, tok: Option<&str>, word: &str) -> Result<()> {
    match tok {
        Some(t) if t == word => Ok(()),
        Some(t) => Err(syntax(line, format!("expected `{word}`, found `{t}`"))),
        None => Err(syntax(line, format!("expected `{word}`"))),
    }
}

fn parse_sign(line: usize, tok: Option<&str>) -> Result<Sign> {
    match tok {
        Some("+") => Ok(Sign::Plus),
        Some("-") => Ok(Sign::Minus),
        Some(t) => Err(syntax(line, format!("expected + or -, found `{t}`"))),
        None => Err(syntax(line, "missing sign")),
    }
}

fn parse_hole(line: usize, tok: &str) -> Result<HoleTag> {
    let bad = || syntax(line, format!("expected a hole like `0+`, found `{tok}`"));
    let (digits, copy) = if let Some(d) = tok.strip_suffix('+') {
        (d, HoleCopy::Plus)
    } else if let Some(d) = tok.strip_suffix('-') {
        (d, HoleCopy::Minus)
    } else {
        return Err(bad());
    };
    let disk = digits.parse().map_err(|_| bad())?;
    Ok(HoleTag { disk, copy })
}

fn parse_slot(line: usize, tok: &str) -> Result<Slot> {
    let bad = || {
        syntax(
            line,
            format!("expected a slot like `(0+,3)`, found `{tok}`"),
        )
    };
    let inner = tok
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (hole, point) = inner.split_once(',').ok_or_else(bad)?;
    Ok(Slot {
        hole: parse_hole(line, hole)?,
        point: point.parse().map_err(|_| bad())?,
    })
}

/// Splits `(a)(b)-(c)...` style text (whitespace already removed) into the
/// parenthesized groups and the separators between them.
fn groups(line: usize, text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut rest = text;
    let mut sep = String::new();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('(') {
            let end = r
                .find(')')
                .ok_or_else(|| syntax(line, "unclosed parenthesis"))?;
            out.push((std::mem::take(&mut sep), format!("({})", &r[..end])));
            rest = &r[end + 1..];
        } else {
            let ch = rest.chars().next().expect("nonempty");
            sep.push(ch);
            rest = &rest[ch.len_utf8()..];
        }
    }
    if !sep.is_empty() {
        return Err(syntax(line, format!("trailing `{sep}`")));
    }
    Ok(out)
}

fn parse_outer(line: usize, text: &str) -> Result<Vec<(Slot, Slot)>> {
    let gs = groups(line, text)?;
    if gs.len() % 2 != 0 {
        return Err(syntax(line, "outer arcs come in pairs of slots"));
    }
    let mut arcs = Vec::new();
    for pair in gs.chunks(2) {
        if !pair[0].0.is_empty() {
            return Err(syntax(line, format!("unexpected `{}`", pair[0].0)));
        }
        if pair[1].0 != "-" {
            return Err(syntax(
                line,
                "expected `-` between the ends of an outer arc",
            ));
        }
        arcs.push((parse_slot(line, &pair[0].1)?, parse_slot(line, &pair[1].1)?));
    }
    Ok(arcs)
}

fn parse_pairs(line: usize, text: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (sep, g) in groups(line, text)? {
        if !sep.is_empty() {
            return Err(syntax(line, format!("unexpected `{sep}`")));
        }
        let bad = || syntax(line, format!("expected a chord like `(0,1)`, found `{g}`"));
        let (a, b) = g[1..g.len() - 1].split_once(',').ok_or_else(bad)?;
        out.push((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
    }
    Ok(out)
}

fn parse_face(line: usize, text: &str) -> Result<Face> {
    let mut cycles = Vec::new();
    for part in text.split('|') {
        let mut cycle = Vec::new();
        for tok in part.split_whitespace() {
            let bad = || {
                syntax(
                    line,
                    format!("expected a segment like `0+:2`, found `{tok}`"),
                )
            };
            let (hole, start) = tok.split_once(':').ok_or_else(bad)?;
            cycle.push(Segment {
                hole: parse_hole(line, hole)?,
                start: start.parse().map_err(|_| bad())?,
            });
        }
        if cycle.is_empty() {
            return Err(syntax(line, "empty boundary cycle"));
        }
        cycles.push(cycle);
    }
    Ok(Face { cycles })
}

#[derive(Default)]
struct Lines {
    genus: Option<usize>,
    disks: BTreeMap<usize, usize>,
    identify: BTreeMap<usize, usize>,
    outer: Option<usize>,
    holes: Option<usize>,
    face: Option<usize>,
    closed: Option<usize>,
    config: BTreeMap<usize, usize>,
}

impl Lines {
    /// Line to blame for a validation error.
    fn locate(&self, e: &Error) -> usize {
        let disk_line = |d: &usize| self.disks.get(d).copied();
        let found = match e {
            Error::EmptyIntersection { disk } => disk_line(disk),
            Error::BadIdentification { disk, .. } => {
                self.identify.get(disk).copied().or_else(|| disk_line(disk))
            }
            Error::DegreeViolation { .. } => self.outer,
            Error::UntightBoundary { .. } => self.face.or(self.outer),
            Error::MalformedPresentation { locator, .. } => match locator.as_str() {
                "holes" => self.holes,
                "genus" | "disks" => self.genus,
                l if l.starts_with("face") => self.face,
                _ => self.outer,
            },
            _ => None,
        };
        found.or(self.genus).unwrap_or(1)
    }
}

/// Parses and validates a presentation document.
pub fn parse(text: &str) -> Result<Document> {
    let mut lines = Lines::default();
    let mut genus = 0;
    let mut disks: BTreeMap<usize, DiskSpec> = BTreeMap::new();
    let mut holes = None;
    let mut outer_arcs = Vec::new();
    let mut closed = 0;
    let mut faces: Vec<Face> = Vec::new();
    let mut anchors: BTreeMap<usize, (usize, Sign)> = BTreeMap::new();
    let mut offsets: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pairs: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (word, rest) = content
            .split_once(char::is_whitespace)
            .unwrap_or((content, ""));
        let mut toks = rest.split_whitespace();
        let once = |slot: &mut Option<usize>, what: &str| {
            if slot.is_some() {
                Err(syntax(line, format!("duplicate `{what}` directive")))
            } else {
                *slot = Some(line);
                Ok(())
            }
        };
        match word {
            "genus" => {
                once(&mut lines.genus, "genus")?;
                genus = parse_num(line, toks.next(), "genus")?;
            }
            "disk" => {
                let i = parse_num(line, toks.next(), "disk index")?;
                expect_word(line, toks.next(), "n")?;
                let n = parse_num(line, toks.next(), "chord count")?;
                if lines.disks.insert(i, line).is_some() {
                    return Err(syntax(line, format!("disk {i} declared twice")));
                }
                disks.insert(
                    i,
                    DiskSpec {
                        n,
                        offset: 0,
                        anchor: Sign::Plus,
                    },
                );
            }
            "holes" => {
                once(&mut lines.holes, "holes")?;
                holes = Some(
                    toks.by_ref()
                        .map(|t| parse_hole(line, t))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            "identify" => {
                let i = parse_num(line, toks.next(), "disk index")?;
                expect_word(line, toks.next(), "offset")?;
                let o = parse_num(line, toks.next(), "offset")?;
                expect_word(line, toks.next(), "reversed")?;
                if lines.identify.insert(i, line).is_some() {
                    return Err(syntax(line, format!("disk {i} identified twice")));
                }
                offsets.insert(i, o);
            }
            "anchor" => {
                let i = parse_num(line, toks.next(), "disk index")?;
                let s = parse_sign(line, toks.next())?;
                if anchors.insert(i, (line, s)).is_some() {
                    return Err(syntax(line, format!("anchor for disk {i} given twice")));
                }
            }
            "outer" => {
                lines.outer.get_or_insert(line);
                let compact: String = rest.split_whitespace().collect();
                outer_arcs.extend(parse_outer(line, &compact)?);
                toks = "".split_whitespace();
            }
            "closed" => {
                once(&mut lines.closed, "closed")?;
                closed = parse_num(line, toks.next(), "closed curve count")?;
            }
            "face" => {
                lines.face.get_or_insert(line);
                faces.push(parse_face(line, rest)?);
                toks = "".split_whitespace();
            }
            "config" => {
                let i = parse_num(line, toks.next(), "disk index")?;
                expect_word(line, toks.next(), "pairs")?;
                let compact: String = toks.by_ref().collect();
                if lines.config.insert(i, line).is_some() {
                    return Err(syntax(
                        line,
                        format!("configuration for disk {i} given twice"),
                    ));
                }
                pairs.insert(i, parse_pairs(line, &compact)?);
                toks = "".split_whitespace();
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(syntax(line, format!("unexpected `{extra}`")));
        }
    }

    let genus_line = lines
        .genus
        .ok_or_else(|| syntax(1, "missing `genus` directive"))?;
    for i in 0..genus {
        if !disks.contains_key(&i) {
            return Err(semantic(
                genus_line,
                Error::MalformedPresentation {
                    locator: "disks".into(),
                    detail: format!("disk {i} is not declared"),
                },
            ));
        }
    }
    for (&i, &line) in lines
        .disks
        .iter()
        .chain(&lines.identify)
        .chain(&lines.config)
        .chain(anchors.iter().map(|(i, (l, _))| (i, l)))
    {
        if i >= genus {
            return Err(semantic(
                line,
                Error::MalformedPresentation {
                    locator: format!("disk {i}"),
                    detail: format!("genus is {genus}"),
                },
            ));
        }
    }
    for (i, o) in offsets {
        disks.get_mut(&i).expect("checked").offset = o;
    }
    for (i, (_, s)) in anchors {
        disks.get_mut(&i).expect("checked").anchor = s;
    }
    let presentation = HandlebodyPresentation {
        genus,
        disks: disks.into_values().collect(),
        holes: holes.unwrap_or_else(|| HandlebodyPresentation::default_holes(genus)),
        outer_arcs,
        closed_outer_components: closed,
        face_certificate: if faces.is_empty() { None } else { Some(faces) },
    };
    let h = Handlebody::new(presentation.clone()).map_err(|e| semantic(lines.locate(&e), e))?;

    let configuration = if pairs.is_empty() {
        None
    } else {
        let mut diagrams = Vec::with_capacity(genus);
        for i in 0..genus {
            let Some(p) = pairs.get(&i) else {
                let line = *lines.config.values().next().expect("nonempty");
                return Err(semantic(
                    line,
                    Error::ConfigurationMismatch {
                        locator: format!("disk {i}"),
                        detail: "no diagram given".into(),
                    },
                ));
            };
            let d =
                ChordDiagram::from_pairs(h.n(i), p).map_err(|e| semantic(lines.config[&i], e))?;
            diagrams.push(d);
        }
        Some(Configuration::new(diagrams))
    };
    Ok(Document {
        presentation,
        configuration,
    })
}

/// Canonical text form; `parse` reads it back to the same structures.
pub fn serialize(p: &HandlebodyPresentation, c: Option<&Configuration>) -> String {
    let mut s = String::new();
    writeln!(s, "genus {}", p.genus).unwrap();
    for (i, d) in p.disks.iter().enumerate() {
        writeln!(s, "disk {i} n {}", d.n).unwrap();
    }
    let holes: Vec<String> = p.holes.iter().map(|h| h.to_string()).collect();
    writeln!(s, "holes {}", holes.join(" ")).unwrap();
    for (i, d) in p.disks.iter().enumerate() {
        writeln!(s, "identify {i} offset {} reversed", d.offset).unwrap();
    }
    for (i, d) in p.disks.iter().enumerate() {
        writeln!(s, "anchor {i} {}", d.anchor).unwrap();
    }
    for chunk in p.outer_arcs.chunks(4) {
        let arcs: Vec<String> = chunk.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        writeln!(s, "outer {}", arcs.join(" ")).unwrap();
    }
    writeln!(s, "closed {}", p.closed_outer_components).unwrap();
    for f in p.face_certificate.iter().flatten() {
        let cycles: Vec<String> = f
            .cycles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|seg| seg.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        writeln!(s, "face {}", cycles.join(" | ")).unwrap();
    }
    if let Some(c) = c {
        for (i, d) in c.diagrams.iter().enumerate() {
            writeln!(s, "config {i} pairs {d}").unwrap();
        }
    }
    s
}

/// Hex SHA-256 of the canonical form of a presentation.
pub fn digest(p: &HandlebodyPresentation) -> String {
    hex::encode(Sha256::digest(serialize(p, None).as_bytes()))
}

fn euler_tuple(e: &[i64]) -> String {
    let parts: Vec<String> = e.iter().map(|v| format!("{v:+}")).collect();
    format!("({})", parts.join(","))
}

fn write_path(s: &mut String, start: &Configuration, path: &[Transition]) {
    writeln!(s, "    from {start}").unwrap();
    for t in path {
        writeln!(s, "    -> {}  [{}]", t.target, t.witness).unwrap();
    }
}

/// Text rendering of a classification report.
pub fn render_report(p: &HandlebodyPresentation, r: &ClassificationReport) -> String {
    let mut s = String::new();
    writeln!(s, "# tight-handlebody classification").unwrap();
    writeln!(s, "# presentation-sha256 {}", digest(p)).unwrap();
    let sizes: Vec<String> = r.disk_sizes.iter().map(|n| n.to_string()).collect();
    writeln!(s, "genus {}", r.genus).unwrap();
    writeln!(s, "disk-sizes ({})", sizes.join(",")).unwrap();
    writeln!(s, "configurations {}", r.total_configurations).unwrap();
    writeln!(s, "potentially-allowable {}", r.potentially_allowable_count).unwrap();
    writeln!(s, "transitions {}", r.edge_count).unwrap();
    writeln!(s, "components {}", r.component_count).unwrap();
    writeln!(s, "tight-count {}", r.tight_count).unwrap();
    writeln!(s).unwrap();
    writeln!(s, "allowable components").unwrap();
    for (k, c) in r.allowable.iter().enumerate() {
        let ut = if c.universally_tight {
            format!("  universally tight ({})", r.universal_tightness_scope())
        } else {
            String::new()
        };
        writeln!(
            s,
            "  [{k}] size {} euler {} rep {}{ut}",
            c.size,
            euler_tuple(&c.euler),
            c.representative
        )
        .unwrap();
    }
    writeln!(s).unwrap();
    writeln!(s, "disallowed components").unwrap();
    for (k, c) in r.disallowed.iter().enumerate() {
        writeln!(s, "  [{k}] size {} rep {}", c.size, c.representative).unwrap();
        match &c.start {
            Some(start) => write_path(&mut s, start, &c.witness),
            None => writeln!(s, "    no potentially allowable member").unwrap(),
        }
    }
    s
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz export of the transition graph.
pub fn render_dot(g: &TransitionGraph) -> String {
    let mut s = String::from("digraph transitions {\n");
    for (v, c) in g.nodes.iter().enumerate() {
        writeln!(
            s,
            "  \"{}\" [potentially_allowable={}, allowable={}];",
            dot_escape(&c.label()),
            g.potentially_allowable[v],
            g.allowable[g.component_of[v]]
        )
        .unwrap();
    }
    for e in &g.edges {
        writeln!(
            s,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            dot_escape(&g.nodes[e.from].label()),
            dot_escape(&g.nodes[e.to].label()),
            dot_escape(&e.witness.to_string())
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}
