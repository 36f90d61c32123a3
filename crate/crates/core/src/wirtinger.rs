//! Wirtinger presentations of string link groups.
//!
//! Arcs are maximal over-runs of the diagram: segments merged through cups,
//! caps and over-crossings, cut at every undercrossing. Each crossing yields
//! one conjugation relation `out = over^s * in * over^-s`, where `in`/`out`
//! follow the under strand's own orientation and `s` is the resolved
//! crossing sign. The base meridian of a component is the arc at its bottom
//! boundary endpoint; its longitude traversal lists the over-arcs passed
//! under, in walk order, with crossing signs.

use crate::diagram::{Junction, StringLinkDiagram};

/// One conjugation relation `out = over^sign * in * over^-sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub out: usize,
    pub over: usize,
    pub sign: i8,
    pub inn: usize,
}

/// Presentation data extracted from a diagram.
#[derive(Debug, Clone)]
pub struct WirtingerPresentation {
    n: u32,
    arc_component: Vec<u32>,
    arc_of_segment: Vec<usize>,
    /// Relations in walk order: per component, along its orientation.
    relations: Vec<Relation>,
    base_meridian: Vec<usize>,
    /// Per component: `(over_arc, sign)` at each undercrossing, in walk order.
    longitude_traversal: Vec<Vec<(usize, i8)>>,
    framing_exponent: Vec<i64>,
}

impl WirtingerPresentation {
    pub fn from_diagram(d: &StringLinkDiagram) -> WirtingerPresentation {
        let segs = d.segment_count();
        let mut dsu = Dsu::new(segs);

        // Merge segments into arcs: turnbacks and over-strand passes.
        for walk in d.walks() {
            for (k, j) in walk.junctions.iter().enumerate() {
                match *j {
                    Junction::Turn => dsu.unite(walk.segments[k], walk.segments[k + 1]),
                    Junction::Crossing { under, .. } => {
                        if !under {
                            dsu.unite(walk.segments[k], walk.segments[k + 1]);
                        }
                    }
                }
            }
        }

        // Dense arc ids in order of first appearance by segment index.
        let mut arc_id: Vec<Option<usize>> = vec![None; segs];
        let mut arc_component = Vec::new();
        let mut arc_of_segment = vec![0usize; segs];
        let mut count = 0;
        for s in 0..segs {
            let root = dsu.find(s);
            let id = match arc_id[root] {
                Some(id) => id,
                None => {
                    arc_id[root] = Some(count);
                    arc_component.push(d.component_of_segment(s));
                    count += 1;
                    count - 1
                }
            };
            arc_of_segment[s] = id;
        }

        let n = d.strands();
        let base_meridian: Vec<usize> = (0..n as usize).map(|c| arc_of_segment[c]).collect();

        let mut relations = Vec::with_capacity(d.crossings().len());
        let mut longitude_traversal: Vec<Vec<(usize, i8)>> = vec![Vec::new(); n as usize];
        for (comp0, walk) in d.walks().iter().enumerate() {
            for (k, j) in walk.junctions.iter().enumerate() {
                if let Junction::Crossing { crossing, under: true } = *j {
                    let x = &d.crossings()[crossing];
                    let over = arc_of_segment[x.over_pair().0];
                    let sign = x.oriented_sign;
                    relations.push(Relation {
                        out: arc_of_segment[walk.segments[k + 1]],
                        over,
                        sign: -sign,
                        inn: arc_of_segment[walk.segments[k]],
                    });
                    longitude_traversal[comp0].push((over, sign));
                }
            }
        }

        let framing_exponent: Vec<i64> = (0..n as usize)
            .map(|c| {
                longitude_traversal[c]
                    .iter()
                    .filter(|(arc, _)| arc_component[*arc] == c as u32 + 1)
                    .map(|&(_, s)| s as i64)
                    .sum()
            })
            .collect();

        WirtingerPresentation {
            n,
            arc_component,
            arc_of_segment,
            relations,
            base_meridian,
            longitude_traversal,
            framing_exponent,
        }
    }

    pub fn components(&self) -> u32 {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_component.len()
    }

    /// Component label (1-based) owning an arc.
    pub fn arc_component(&self, arc: usize) -> u32 {
        self.arc_component[arc]
    }

    pub fn arc_of_segment(&self, seg: usize) -> usize {
        self.arc_of_segment[seg]
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Base meridian arc of component `j` (1-based).
    pub fn base_meridian(&self, j: u32) -> usize {
        self.base_meridian[(j - 1) as usize]
    }

    pub fn is_base(&self, arc: usize) -> bool {
        self.base_meridian.contains(&arc)
    }

    /// Longitude traversal of component `j` (1-based).
    pub fn longitude_traversal(&self, j: u32) -> &[(usize, i8)] {
        &self.longitude_traversal[(j - 1) as usize]
    }

    pub fn framing_exponent(&self, j: u32) -> i64 {
        self.framing_exponent[(j - 1) as usize]
    }

    /// Image of the corrected longitude of `j` in H_1: coefficient per base
    /// meridian. The own-component coefficient is zero by construction; the
    /// others equal rows of the linking matrix.
    pub fn abelianized_longitude(&self, j: u32) -> Vec<i64> {
        let mut v = vec![0i64; self.n as usize];
        for &(arc, sign) in self.longitude_traversal(j) {
            v[(self.arc_component[arc] - 1) as usize] += sign as i64;
        }
        v[(j - 1) as usize] -= self.framing_exponent(j);
        v
    }

    /// Structured text dump of arcs, relations and traversals.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "arcs: {}", self.arc_count()).unwrap();
        for (a, c) in self.arc_component.iter().enumerate() {
            let base = if self.base_meridian.contains(&a) {
                " (base)"
            } else {
                ""
            };
            writeln!(out, "  arc {a}: component {c}{base}").unwrap();
        }
        writeln!(out, "relations: {}", self.relations.len()).unwrap();
        for r in &self.relations {
            let e = if r.sign > 0 { "" } else { "-" };
            writeln!(
                out,
                "  a{} = a{}^{e}1 a{} a{}^{e}1'",
                r.out, r.over, r.inn, r.over
            )
            .unwrap();
        }
        for j in 1..=self.n {
            let terms: Vec<String> = self
                .longitude_traversal(j)
                .iter()
                .map(|&(a, s)| format!("a{a}^{}", s))
                .collect();
            writeln!(
                out,
                "longitude {j}: {} x{j}^-{}",
                terms.join(" "),
                self.framing_exponent(j)
            )
            .unwrap();
        }
        out
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn unite(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
