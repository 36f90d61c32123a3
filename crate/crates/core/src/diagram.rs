//! Morse-word encoding of string link diagrams.
//!
//! A diagram is a list of slice events read bottom to top: crossings, cups
//! (local minima) and caps (local maxima). [`SliceWord::validate`] traces
//! components and orientations, resolving every crossing to an oriented
//! sign. Boundary strands are oriented upward; interior segments inherit
//! their direction through cups and caps.
//!
//! Sign convention: for a crossing with both strands directed upward,
//! `Cross(p, Pos)` (the strand entering at position `p` passing over) is a
//! positive crossing, so the full twist `Cross(1,+) Cross(1,+)` on two
//! strands has linking number +1. Reversing the direction of exactly one
//! strand at a crossing flips its sign.

use crate::braid::Sign;
use crate::{Error, Result};

/// One generic slice of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceEvent {
    /// Strands at `pos`, `pos + 1` cross; `Pos` puts the strand entering at
    /// `pos` on top.
    Cross { pos: u32, sign: Sign },
    /// Local minimum inserting two new strand ends at `pos`, `pos + 1`.
    Cup { pos: u32 },
    /// Local maximum joining the strands at `pos`, `pos + 1`.
    Cap { pos: u32 },
}

/// A diagram word: boundary strand count plus events bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceWord {
    strands: u32,
    events: Vec<SliceEvent>,
}

impl SliceWord {
    pub fn new(strands: u32, events: Vec<SliceEvent>) -> SliceWord {
        SliceWord { strands, events }
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn events(&self) -> &[SliceEvent] {
        &self.events
    }

    /// Concatenation, `self` below `other`.
    pub fn compose(&self, other: &SliceWord) -> Result<SliceWord> {
        if self.strands != other.strands {
            return Err(Error::WidthMismatch(self.strands, other.strands));
        }
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        Ok(SliceWord::new(self.strands, events))
    }

    /// Mirror image across the top boundary: events reversed, crossing signs
    /// flipped, cups and caps exchanged.
    pub fn inverted(&self) -> SliceWord {
        let events = self
            .events
            .iter()
            .rev()
            .map(|e| match *e {
                SliceEvent::Cross { pos, sign } => SliceEvent::Cross {
                    pos,
                    sign: sign.flip(),
                },
                SliceEvent::Cup { pos } => SliceEvent::Cap { pos },
                SliceEvent::Cap { pos } => SliceEvent::Cup { pos },
            })
            .collect();
        SliceWord::new(self.strands, events)
    }

    /// Trace the word into a validated diagram.
    pub fn validate(&self) -> Result<StringLinkDiagram> {
        trace(self.clone())
    }
}

/// Junction between consecutive segments along a component walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Junction {
    /// Cup or cap turnback.
    Turn,
    /// Passage through a crossing; `under` tells which strand of the
    /// crossing the walk follows.
    Crossing { crossing: usize, under: bool },
}

/// One component traced from its bottom endpoint, following orientation.
#[derive(Debug, Clone)]
pub struct Walk {
    /// Segments in traversal order; the first starts at the bottom boundary.
    pub segments: Vec<usize>,
    /// `junctions[k]` sits between `segments[k]` and `segments[k + 1]`.
    pub junctions: Vec<Junction>,
}

/// A resolved crossing. `in_left`/`in_right` enter from below at positions
/// `pos`, `pos + 1`; the left enterer exits right and vice versa.
#[derive(Debug, Clone, Copy)]
pub struct Crossing {
    pub event: usize,
    pub pos: u32,
    pub event_sign: Sign,
    pub in_left: usize,
    pub in_right: usize,
    pub out_left: usize,
    pub out_right: usize,
    /// Sign after orientation tracing.
    pub oriented_sign: i8,
}

impl Crossing {
    /// Segments of the over strand as a `(below, above)` pair.
    pub fn over_pair(&self) -> (usize, usize) {
        match self.event_sign {
            Sign::Pos => (self.in_left, self.out_right),
            Sign::Neg => (self.in_right, self.out_left),
        }
    }

    /// Segments of the under strand as a `(below, above)` pair.
    pub fn under_pair(&self) -> (usize, usize) {
        match self.event_sign {
            Sign::Pos => (self.in_right, self.out_left),
            Sign::Neg => (self.in_left, self.out_right),
        }
    }
}

/// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingMatrix {
    n: u32,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    fn zero(n: u32) -> LinkingMatrix {
        LinkingMatrix {
            n,
            entries: vec![0; (n * n) as usize],
        }
    }

    pub fn size(&self) -> u32 {
        self.n
    }

    /// Entry for components `i`, `j` (1-based).
    pub fn get(&self, i: u32, j: u32) -> i64 {
        self.entries[((i - 1) * self.n + (j - 1)) as usize]
    }

    fn set(&mut self, i: u32, j: u32, v: i64) {
        self.entries[((i - 1) * self.n + (j - 1)) as usize] = v;
        self.entries[((j - 1) * self.n + (i - 1)) as usize] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &LinkingMatrix) -> Result<LinkingMatrix> {
        if self.n != other.n {
            return Err(Error::WidthMismatch(self.n, other.n));
        }
        Ok(LinkingMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn negated(&self) -> LinkingMatrix {
        LinkingMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    /// Restriction to the given components, reindexed in sorted order.
    pub fn restricted(&self, keep: &[u32]) -> LinkingMatrix {
        let k = keep.len() as u32;
        let mut out = LinkingMatrix::zero(k);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.entries[(a as u32 * k + b as u32) as usize] = self.get(i, j);
            }
        }
        out
    }
}

/// A validated string link diagram: the underlying word plus traced
/// components, orientations, resolved crossing signs and linking numbers.
#[derive(Debug, Clone)]
pub struct StringLinkDiagram {
    word: SliceWord,
    /// Component label (1-based) per segment.
    component_of_segment: Vec<u32>,
    /// Direction per segment along its component's orientation.
    upward: Vec<bool>,
    crossings: Vec<Crossing>,
    walks: Vec<Walk>,
    linking: LinkingMatrix,
}

impl PartialEq for StringLinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl StringLinkDiagram {
    pub fn strands(&self) -> u32 {
        self.word.strands()
    }

    pub fn word(&self) -> &SliceWord {
        &self.word
    }

    pub fn segment_count(&self) -> usize {
        self.component_of_segment.len()
    }

    /// Component label (1-based) of a segment.
    pub fn component_of_segment(&self, seg: usize) -> u32 {
        self.component_of_segment[seg]
    }

    /// Whether the segment is traversed upward by its component.
    pub fn segment_upward(&self, seg: usize) -> bool {
        self.upward[seg]
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Component walks indexed by component (0-based slot for label i+1).
    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }

    pub fn linking_matrix(&self) -> &LinkingMatrix {
        &self.linking
    }

    pub fn compose(&self, other: &StringLinkDiagram) -> Result<StringLinkDiagram> {
        self.word.compose(&other.word)?.validate()
    }

    pub fn invert(&self) -> StringLinkDiagram {
        self.word
            .inverted()
            .validate()
            .expect("mirror of a valid diagram is valid")
    }

    /// Erase all components outside `keep` and reindex the rest.
    pub fn delete_components(&self, keep: &[u32]) -> Result<StringLinkDiagram> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        let n = self.strands();
        let mut sorted: Vec<u32> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&c| c == 0 || c > n) {
            return Err(Error::IndexError(format!(
                "component selection outside 1..={n}"
            )));
        }
        let kept = |comp: u32| sorted.binary_search(&comp).is_ok();

        // Re-sweep the word, mirroring validate's segment allocation order,
        // keeping a flag per open slot and dropping events on erased strands.
        let mut next_seg = n as usize;
        let mut flags: Vec<bool> = (0..n).map(|i| kept(i + 1)).collect();
        let mut events = Vec::new();
        let new_pos = |flags: &[bool], idx: usize| -> u32 {
            flags[..idx].iter().filter(|&&f| f).count() as u32 + 1
        };
        for ev in self.word.events() {
            match *ev {
                SliceEvent::Cross { pos, sign } => {
                    let i = (pos - 1) as usize;
                    next_seg += 2;
                    if flags[i] && flags[i + 1] {
                        events.push(SliceEvent::Cross {
                            pos: new_pos(&flags, i),
                            sign,
                        });
                    }
                    flags.swap(i, i + 1);
                }
                SliceEvent::Cup { pos } => {
                    let i = (pos - 1) as usize;
                    let keep_this = kept(self.component_of_segment[next_seg]);
                    next_seg += 2;
                    if keep_this {
                        events.push(SliceEvent::Cup {
                            pos: new_pos(&flags, i) ,
                        });
                    }
                    flags.insert(i, keep_this);
                    flags.insert(i + 1, keep_this);
                }
                SliceEvent::Cap { pos } => {
                    let i = (pos - 1) as usize;
                    if flags[i] {
                        events.push(SliceEvent::Cap {
                            pos: new_pos(&flags, i),
                        });
                    }
                    flags.remove(i + 1);
                    flags.remove(i);
                }
            }
        }
        SliceWord::new(sorted.len() as u32, events).validate()
    }

    /// Place this diagram on the chosen strands of a wider trivial diagram.
    ///
    /// Non-adjacent target strands are first braided together with
    /// cancelling transport crossings, so the result is planar-isotopic to
    /// the naive placement and deleting the filler strands recovers `self`.
    pub fn embed(&self, n: u32, positions: &[u32]) -> Result<StringLinkDiagram> {
        let k = self.strands();
        if positions.len() as u32 != k {
            return Err(Error::IndexError(format!(
                "expected {k} positions, got {}",
                positions.len()
            )));
        }
        if positions.windows(2).any(|w| w[0] >= w[1])
            || positions.iter().any(|&p| p == 0 || p > n)
        {
            return Err(Error::IndexError(
                "positions must be strictly increasing within 1..=n".into(),
            ));
        }
        let base = positions[0];
        let mut pre = Vec::new();
        for (j, &p) in positions.iter().enumerate().skip(1) {
            let target = base + j as u32;
            for q in (target..p).rev() {
                pre.push(SliceEvent::Cross {
                    pos: q,
                    sign: Sign::Neg,
                });
            }
        }
        let pre_word = SliceWord::new(n, pre);
        let mid: Vec<SliceEvent> = self
            .word
            .events()
            .iter()
            .map(|e| match *e {
                SliceEvent::Cross { pos, sign } => SliceEvent::Cross {
                    pos: pos + base - 1,
                    sign,
                },
                SliceEvent::Cup { pos } => SliceEvent::Cup { pos: pos + base - 1 },
                SliceEvent::Cap { pos } => SliceEvent::Cap { pos: pos + base - 1 },
            })
            .collect();
        let mut events = pre_word.events().to_vec();
        events.extend(mid);
        events.extend(pre_word.inverted().events().iter().copied());
        SliceWord::new(n, events).validate()
    }

    /// Insert a cancelling cup/cap zigzag on the strand at
    /// `strand_position`, just before event index `event_position`.
    pub fn wiggle(&self, event_position: usize, strand_position: u32) -> Result<StringLinkDiagram> {
        let events = self.word.events();
        if event_position > events.len() {
            return Err(Error::IndexError(format!(
                "event position {event_position} past end of word"
            )));
        }
        let width = width_before(&self.word, event_position)?;
        if strand_position == 0 || strand_position > width {
            return Err(Error::IndexError(format!(
                "no strand at position {strand_position} (width {width})"
            )));
        }
        let mut out = events[..event_position].to_vec();
        out.push(SliceEvent::Cup {
            pos: strand_position + 1,
        });
        out.push(SliceEvent::Cap {
            pos: strand_position,
        });
        out.extend_from_slice(&events[event_position..]);
        SliceWord::new(self.word.strands(), out).validate()
    }
}

/// Running width just before event `index`.
fn width_before(word: &SliceWord, index: usize) -> Result<u32> {
    let mut width = word.strands();
    for (i, ev) in word.events().iter().enumerate().take(index) {
        match ev {
            SliceEvent::Cross { .. } => {}
            SliceEvent::Cup { .. } => width += 2,
            SliceEvent::Cap { .. } => {
                if width < 2 {
                    return Err(Error::WidthUnderflow {
                        event: i,
                        pos: 0,
                        width,
                    });
                }
                width -= 2;
            }
        }
    }
    Ok(width)
}

/// `s * p * s^-1`.
pub fn conjugate(s: &StringLinkDiagram, p: &StringLinkDiagram) -> Result<StringLinkDiagram> {
    s.compose(p)?.compose(&s.invert())
}

/// `a * b * a^-1 * b^-1`; always has zero linking matrix.
pub fn commutator(a: &StringLinkDiagram, b: &StringLinkDiagram) -> Result<StringLinkDiagram> {
    a.compose(b)?.compose(&a.invert())?.compose(&b.invert())
}

/// The identity diagram on `n` strands.
pub fn trivial(n: u32) -> StringLinkDiagram {
    SliceWord::new(n, Vec::new())
        .validate()
        .expect("empty word is valid")
}

/// Full positive twist on two strands: a string link representative of the
/// Hopf link, linking number +1.
pub fn hopf() -> StringLinkDiagram {
    SliceWord::new(
        2,
        vec![
            SliceEvent::Cross {
                pos: 1,
                sign: Sign::Pos,
            },
            SliceEvent::Cross {
                pos: 1,
                sign: Sign::Pos,
            },
        ],
    )
    .validate()
    .expect("hopf word is valid")
}

/// A string link representative of the Whitehead link, obtained by cutting
/// open its 4-plat (2-bridge) closed diagram once per component. Linking
/// number 0, Sato-Levine invariant ±1; both are locked by tests.
pub fn whitehead() -> StringLinkDiagram {
    use SliceEvent::*;
    SliceWord::new(
        2,
        vec![
            Cup { pos: 2 },
            Cross {
                pos: 1,
                sign: Sign::Pos,
            },
            Cup { pos: 5 },
            Cross {
                pos: 3,
                sign: Sign::Pos,
            },
            Cross {
                pos: 3,
                sign: Sign::Pos,
            },
            Cross {
                pos: 2,
                sign: Sign::Neg,
            },
            Cross {
                pos: 3,
                sign: Sign::Pos,
            },
            Cross {
                pos: 3,
                sign: Sign::Pos,
            },
            Cap { pos: 2 },
            Cap { pos: 2 },
        ],
    )
    .validate()
    .expect("whitehead word is valid")
}

/// Knots available for [`split_knot`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnotKind {
    Trefoil,
    FigureEight,
}

/// A cut-open knot tied into strand `i` of an otherwise trivial diagram.
/// No inter-component crossings exist, so every mixed-index invariant
/// vanishes.
pub fn split_knot(n: u32, i: u32, knot: KnotKind) -> Result<StringLinkDiagram> {
    if i == 0 || i > n {
        return Err(Error::IndexError(format!("strand {i} outside 1..={n}")));
    }
    use SliceEvent::*;
    let local: Vec<SliceEvent> = match knot {
        // Alternating 3-crossing arc: an overhand knot.
        KnotKind::Trefoil => vec![
            Cup { pos: 2 },
            Cross {
                pos: 1,
                sign: Sign::Pos,
            },
            Cross {
                pos: 2,
                sign: Sign::Neg,
            },
            Cross {
                pos: 1,
                sign: Sign::Pos,
            },
            Cap { pos: 2 },
        ],
        // Alternating 4-crossing arc.
        KnotKind::FigureEight => vec![
            Cup { pos: 2 },
            Cross {
                pos: 1,
                sign: Sign::Pos,
            },
            Cross {
                pos: 2,
                sign: Sign::Neg,
            },
            Cross {
                pos: 1,
                sign: Sign::Pos,
            },
            Cross {
                pos: 2,
                sign: Sign::Neg,
            },
            Cap { pos: 1 },
        ],
    };
    let shifted: Vec<SliceEvent> = local
        .into_iter()
        .map(|e| match e {
            Cross { pos, sign } => Cross {
                pos: pos + i - 1,
                sign,
            },
            Cup { pos } => Cup { pos: pos + i - 1 },
            Cap { pos } => Cap { pos: pos + i - 1 },
        })
        .collect();
    SliceWord::new(n, shifted).validate()
}

// ---------------------------------------------------------------------------
// Tracing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
enum Lower {
    Bottom(u32),
    Cup(usize),
    CrossOut(usize),
}

#[derive(Debug, Clone, Copy)]
enum Upper {
    Top(u32),
    Cap(usize),
    CrossIn(usize),
}

fn trace(word: SliceWord) -> Result<StringLinkDiagram> {
    let n = word.strands();
    let mut cur: Vec<usize> = (0..n as usize).collect();
    let mut lower: Vec<Lower> = (0..n).map(Lower::Bottom).collect();
    let mut upper: Vec<Option<Upper>> = vec![None; n as usize];
    let mut crossings: Vec<Crossing> = Vec::new();

    let alloc = |lower_end: Lower, lower_v: &mut Vec<Lower>, upper_v: &mut Vec<Option<Upper>>| {
        lower_v.push(lower_end);
        upper_v.push(None);
        lower_v.len() - 1
    };

    for (idx, ev) in word.events().iter().enumerate() {
        let width = cur.len() as u32;
        match *ev {
            SliceEvent::Cross { pos, sign } => {
                if pos == 0 || pos + 1 > width {
                    return Err(Error::WidthUnderflow {
                        event: idx,
                        pos,
                        width,
                    });
                }
                let i = (pos - 1) as usize;
                let (a, b) = (cur[i], cur[i + 1]);
                let c = crossings.len();
                let out_left = alloc(Lower::CrossOut(c), &mut lower, &mut upper);
                let out_right = alloc(Lower::CrossOut(c), &mut lower, &mut upper);
                upper[a] = Some(Upper::CrossIn(c));
                upper[b] = Some(Upper::CrossIn(c));
                crossings.push(Crossing {
                    event: idx,
                    pos,
                    event_sign: sign,
                    in_left: a,
                    in_right: b,
                    out_left,
                    out_right,
                    oriented_sign: 0,
                });
                cur[i] = out_left;
                cur[i + 1] = out_right;
            }
            SliceEvent::Cup { pos } => {
                if pos == 0 || pos > width + 1 {
                    return Err(Error::WidthUnderflow {
                        event: idx,
                        pos,
                        width,
                    });
                }
                let i = (pos - 1) as usize;
                let left = lower.len();
                let right = left + 1;
                alloc(Lower::Cup(right), &mut lower, &mut upper);
                alloc(Lower::Cup(left), &mut lower, &mut upper);
                cur.insert(i, left);
                cur.insert(i + 1, right);
            }
            SliceEvent::Cap { pos } => {
                if pos == 0 || pos + 1 > width {
                    return Err(Error::WidthUnderflow {
                        event: idx,
                        pos,
                        width,
                    });
                }
                let i = (pos - 1) as usize;
                let (a, b) = (cur[i], cur[i + 1]);
                upper[a] = Some(Upper::Cap(b));
                upper[b] = Some(Upper::Cap(a));
                cur.remove(i + 1);
                cur.remove(i);
            }
        }
    }

    if cur.len() as u32 != n {
        return Err(Error::WidthMismatch(n, cur.len() as u32));
    }
    for (i, &seg) in cur.iter().enumerate() {
        upper[seg] = Some(Upper::Top(i as u32 + 1));
    }

    // Walk each component from its bottom endpoint.
    let seg_count = lower.len();
    let mut component = vec![0u32; seg_count];
    let mut upward = vec![false; seg_count];
    let mut visited = vec![false; seg_count];
    let mut walks = Vec::with_capacity(n as usize);

    for c in 1..=n {
        let mut seg = (c - 1) as usize;
        let mut going_up = true;
        let mut segments = vec![];
        let mut junctions = vec![];
        loop {
            debug_assert!(!visited[seg], "segment visited twice");
            visited[seg] = true;
            component[seg] = c;
            upward[seg] = going_up;
            segments.push(seg);
            if going_up {
                match upper[seg].expect("every segment has an upper end") {
                    Upper::Top(t) => {
                        if t != c {
                            return Err(Error::PermutedEndpoints { bottom: c, top: t });
                        }
                        break;
                    }
                    Upper::Cap(partner) => {
                        junctions.push(Junction::Turn);
                        seg = partner;
                        going_up = false;
                    }
                    Upper::CrossIn(cr) => {
                        let x = &crossings[cr];
                        let next = if x.in_left == seg { x.out_right } else { x.out_left };
                        junctions.push(Junction::Crossing {
                            crossing: cr,
                            under: x.under_pair().0 == seg || x.under_pair().1 == seg,
                        });
                        seg = next;
                    }
                }
            } else {
                match lower[seg] {
                    Lower::Bottom(b) => {
                        return Err(Error::PermutedEndpoints { bottom: c, top: b });
                    }
                    Lower::Cup(partner) => {
                        junctions.push(Junction::Turn);
                        seg = partner;
                        going_up = true;
                    }
                    Lower::CrossOut(cr) => {
                        let x = &crossings[cr];
                        let next = if x.out_left == seg { x.in_right } else { x.in_left };
                        junctions.push(Junction::Crossing {
                            crossing: cr,
                            under: x.under_pair().0 == seg || x.under_pair().1 == seg,
                        });
                        seg = next;
                    }
                }
            }
        }
        walks.push(Walk {
            segments,
            junctions,
        });
    }

    if visited.iter().any(|&v| !v) {
        return Err(Error::ClosedComponent);
    }

    // Resolve oriented crossing signs now that directions are known.
    for x in crossings.iter_mut() {
        let dl = if upward[x.in_left] { 1 } else { -1 };
        let dr = if upward[x.in_right] { 1 } else { -1 };
        x.oriented_sign = x.event_sign.as_i8() * dl * dr;
    }

    // Linking numbers: half the signed count of inter-component crossings.
    let mut sums = LinkingMatrix::zero(n);
    for x in &crossings {
        let a = component[x.in_left];
        let b = component[x.in_right];
        if a != b {
            let v = sums.get(a, b) + x.oriented_sign as i64;
            sums.set(a, b, v);
        }
    }
    let mut linking = LinkingMatrix::zero(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            let s = sums.get(i, j);
            if s % 2 != 0 {
                return Err(Error::OddCrossingParity(i, j));
            }
            linking.set(i, j, s / 2);
        }
    }

    Ok(StringLinkDiagram {
        word,
        component_of_segment: component,
        upward,
        crossings,
        walks,
        linking,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::pure_generator;

    fn x(pos: u32, sign: i8) -> SliceEvent {
        SliceEvent::Cross {
            pos,
            sign: if sign > 0 { Sign::Pos } else { Sign::Neg },
        }
    }

    /// Independent linking oracle: half the signed crossing count, with
    /// signs and components recomputed by a direct sweep that tracks
    /// strand labels and directions separately from the tracer.
    pub(crate) fn linking_by_signed_count(d: &StringLinkDiagram, i: u32, j: u32) -> i64 {
        let mut total = 0i64;
        for c in d.crossings() {
            let (a, b) = (
                d.component_of_segment(c.in_left),
                d.component_of_segment(c.in_right),
            );
            if (a, b) == (i, j) || (a, b) == (j, i) {
                total += c.oriented_sign as i64;
            }
        }
        assert_eq!(total % 2, 0);
        total / 2
    }

    #[test]
    fn hopf_is_valid_with_linking_one() {
        let d = hopf();
        assert_eq!(d.strands(), 2);
        assert_eq!(d.linking_matrix().get(1, 2), 1);
        assert_eq!(linking_by_signed_count(&d, 1, 2), 1);
    }

    #[test]
    fn single_crossing_permutes_endpoints() {
        let err = SliceWord::new(2, vec![x(1, 1)]).validate().unwrap_err();
        assert!(matches!(err, Error::PermutedEndpoints { .. }));
    }

    #[test]
    fn free_loop_is_a_closed_component() {
        let w = SliceWord::new(
            0,
            vec![SliceEvent::Cup { pos: 1 }, SliceEvent::Cap { pos: 1 }],
        );
        assert_eq!(w.validate().unwrap_err(), Error::ClosedComponent);
    }

    #[test]
    fn width_bookkeeping_errors() {
        let w = SliceWord::new(2, vec![SliceEvent::Cap { pos: 2 }]);
        assert!(matches!(w.validate(), Err(Error::WidthUnderflow { .. })));
        let w = SliceWord::new(2, vec![SliceEvent::Cup { pos: 1 }]);
        assert!(matches!(w.validate(), Err(Error::WidthMismatch(2, 4))));
    }

    #[test]
    fn compose_is_concatenation_with_identity() {
        let d = hopf();
        let t = trivial(2);
        assert_eq!(t.compose(&d).unwrap().word(), d.word());
        assert_eq!(d.compose(&t).unwrap().word(), d.word());
        let double = d.compose(&d).unwrap();
        assert_eq!(double.linking_matrix().get(1, 2), 2);
        let cancel = d.compose(&d.invert()).unwrap();
        assert_eq!(cancel.linking_matrix().get(1, 2), 0);
    }

    #[test]
    fn invert_mirrors_events_and_negates_linking() {
        let d = hopf();
        let inv = d.invert();
        assert_eq!(inv.word().events(), &[x(1, -1), x(1, -1)]);
        assert_eq!(inv.linking_matrix().get(1, 2), -1);
        assert_eq!(d.invert().invert().word(), d.word());
        assert_eq!(trivial(3).invert().word(), trivial(3).word());
    }

    #[test]
    fn conjugate_by_trivial_is_identity() {
        let p = hopf();
        let c = conjugate(&trivial(2), &p).unwrap();
        assert_eq!(c.word(), p.word());
    }

    #[test]
    fn commutators_have_zero_linking() {
        let a = hopf();
        let b = whitehead();
        assert!(commutator(&a, &a).unwrap().linking_matrix().is_zero());
        assert!(commutator(&a, &b).unwrap().linking_matrix().is_zero());
    }

    #[test]
    fn whitehead_has_zero_linking() {
        let d = whitehead();
        assert_eq!(d.strands(), 2);
        assert_eq!(d.linking_matrix().get(1, 2), 0);
        assert_eq!(linking_by_signed_count(&d, 1, 2), 0);
    }

    #[test]
    fn full_twist_powers_have_linking_k() {
        for k in 1..=4u32 {
            let mut w = crate::braid::BraidWord::identity(2);
            for _ in 0..k {
                w = w.compose(&pure_generator(1, 2, 2).unwrap()).unwrap();
            }
            let d = w.to_slice_word().validate().unwrap();
            assert_eq!(d.linking_matrix().get(1, 2), k as i64);
        }
    }

    #[test]
    fn delete_components_restricts() {
        // Hopf on strands 1,2 of a 3-strand diagram.
        let d = hopf().embed(3, &[1, 2]).unwrap();
        let restricted = d.delete_components(&[1, 2]).unwrap();
        assert_eq!(restricted.word(), hopf().word());

        let all = d.delete_components(&[1, 2, 3]).unwrap();
        assert_eq!(all.word(), d.word());

        let a13 = pure_generator(1, 3, 3)
            .unwrap()
            .to_slice_word()
            .validate()
            .unwrap();
        let sub = a13.delete_components(&[1, 3]).unwrap();
        assert_eq!(sub.strands(), 2);
        assert_eq!(sub.linking_matrix().get(1, 2), 1);
        assert_eq!(linking_by_signed_count(&sub, 1, 2), 1);

        assert_eq!(d.delete_components(&[]), Err(Error::EmptySelection));
    }

    #[test]
    fn delete_commutes_with_compose() {
        let a = pure_generator(1, 3, 3).unwrap().to_slice_word().validate().unwrap();
        let b = pure_generator(2, 3, 3).unwrap().to_slice_word().validate().unwrap();
        let lhs = a.compose(&b).unwrap().delete_components(&[1, 3]).unwrap();
        let rhs = a
            .delete_components(&[1, 3])
            .unwrap()
            .compose(&b.delete_components(&[1, 3]).unwrap())
            .unwrap();
        assert_eq!(lhs.word(), rhs.word());
    }

    #[test]
    fn embed_round_trips() {
        let d = hopf();
        let e = d.embed(3, &[1, 2]).unwrap();
        assert_eq!(e.delete_components(&[1, 2]).unwrap().word(), d.word());
        assert_eq!(d.embed(2, &[1, 2]).unwrap().word(), d.word());

        // Non-adjacent targets go through transport crossings and back.
        let e = d.embed(4, &[2, 4]).unwrap();
        assert_eq!(e.delete_components(&[2, 4]).unwrap().word(), d.word());
        assert_eq!(e.linking_matrix().get(2, 4), 1);
        assert!(e.linking_matrix().get(1, 2) == 0 && e.linking_matrix().get(3, 4) == 0);

        assert!(d.embed(3, &[2, 2]).is_err());
        assert!(d.embed(3, &[0, 1]).is_err());
    }

    #[test]
    fn wiggle_preserves_linking() {
        let d = trivial(1).wiggle(0, 1).unwrap();
        assert_eq!(d.strands(), 1);
        assert_eq!(d.word().events().len(), 2);

        let h = hopf();
        let w = h.wiggle(1, 2).unwrap();
        assert_eq!(w.linking_matrix(), h.linking_matrix());
        assert!(h.wiggle(0, 3).is_err());
        assert!(h.wiggle(5, 1).is_err());
    }

    #[test]
    fn split_knot_is_split() {
        for kind in [KnotKind::Trefoil, KnotKind::FigureEight] {
            let d = split_knot(3, 2, kind).unwrap();
            assert!(d.linking_matrix().is_zero());
            // Every crossing involves only the knotted component.
            for c in d.crossings() {
                assert_eq!(d.component_of_segment(c.in_left), 2);
                assert_eq!(d.component_of_segment(c.in_right), 2);
            }
        }
        assert!(split_knot(2, 3, KnotKind::Trefoil).is_err());
    }

    #[test]
    fn linking_is_monoid_homomorphism() {
        let a = whitehead();
        let b = hopf();
        let ab = a.compose(&b).unwrap();
        assert_eq!(
            *ab.linking_matrix(),
            a.linking_matrix().add(b.linking_matrix()).unwrap()
        );
        assert_eq!(*a.invert().linking_matrix(), a.linking_matrix().negated());
    }

    #[test]
    fn walks_touch_every_segment_once() {
        for d in [hopf(), whitehead(), split_knot(2, 1, KnotKind::Trefoil).unwrap()] {
            let mut seen = vec![false; d.segment_count()];
            for w in d.walks() {
                assert_eq!(w.junctions.len() + 1, w.segments.len());
                for &s in &w.segments {
                    assert!(!seen[s]);
                    seen[s] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
