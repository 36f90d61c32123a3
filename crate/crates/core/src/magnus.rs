//! Truncated noncommutative power series and Milnor invariants.
//!
//! Series live in integer coefficients over noncommuting variables
//! `X_1, ..., X_n`, truncated at a total degree `q`. The Magnus embedding
//! sends a free-group generator `x_i` to `1 + X_i` and its inverse to the
//! alternating geometric series. Arc resolution iterates the Wirtinger
//! relations on series until the whole assignment stabilizes, then
//! longitudes are expanded and `mu(I)` is read off as a coefficient.

use crate::wirtinger::WirtingerPresentation;
use crate::{Error, Result, StringLinkDiagram};
use std::collections::BTreeMap;

/// Word over noncommuting variables, packed four bits per letter with the
/// first letter in the highest occupied nibble. Supports degree <= 15 and
/// variable indices 1..=15.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    deg: u8,
    bits: u64,
}

pub const MAX_DEGREE: u32 = 15;
pub const MAX_VARS: u32 = 15;

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { deg: 0, bits: 0 }
    }

    pub fn var(i: u32) -> Monomial {
        assert!(1 <= i && i <= MAX_VARS, "variable index out of range");
        Monomial {
            deg: 1,
            bits: i as u64,
        }
    }

    pub fn from_letters(letters: &[u32]) -> Monomial {
        letters
            .iter()
            .fold(Monomial::one(), |m, &i| m.concat(Monomial::var(i)))
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn concat(self, other: Monomial) -> Monomial {
        debug_assert!(self.deg + other.deg <= MAX_DEGREE as u8);
        Monomial {
            deg: self.deg + other.deg,
            bits: (self.bits << (4 * other.deg)) | other.bits,
        }
    }

    /// Letters first to last.
    pub fn letters(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.deg).rev().map(move |k| ((self.bits >> (4 * k)) & 0xF) as u32)
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        for l in self.letters() {
            write!(f, "X{l}")?;
        }
        Ok(())
    }
}

/// Integer-coefficient noncommutative polynomial truncated at total degree
/// `q`. Absent monomials have coefficient zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    q: u32,
    coeffs: BTreeMap<Monomial, i64>,
}

fn add_coeff(map: &mut BTreeMap<Monomial, i64>, m: Monomial, v: i64) {
    if v == 0 {
        return;
    }
    let slot = map.entry(m).or_insert(0);
    *slot = slot.checked_add(v).expect("coefficient overflow");
    if *slot == 0 {
        map.remove(&m);
    }
}

impl TruncatedSeries {
    pub fn zero(q: u32) -> TruncatedSeries {
        assert!(q >= 1 && q <= MAX_DEGREE, "truncation degree out of range");
        TruncatedSeries {
            q,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(q: u32) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(q);
        s.coeffs.insert(Monomial::one(), 1);
        s
    }

    /// `1 + X_i`.
    pub fn meridian(i: u32, q: u32) -> TruncatedSeries {
        let mut s = TruncatedSeries::one(q);
        s.coeffs.insert(Monomial::var(i), 1);
        s
    }

    pub fn max_degree(&self) -> u32 {
        self.q
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.coeffs.get(m).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> i64 {
        self.coefficient(&Monomial::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        debug_assert_eq!(self.q, other.q);
        let mut out = self.clone();
        for (&m, &v) in &other.coeffs {
            add_coeff(&mut out.coeffs, m, v);
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        debug_assert_eq!(self.q, other.q);
        let mut out = TruncatedSeries::zero(self.q);
        for (&ma, &va) in &self.coeffs {
            let room = self.q - ma.degree();
            for (&mb, &vb) in &other.coeffs {
                if mb.degree() > room {
                    break;
                }
                add_coeff(
                    &mut out.coeffs,
                    ma.concat(mb),
                    va.checked_mul(vb).expect("coefficient overflow"),
                );
            }
        }
        out
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        if self.constant_term() != 1 {
            return Err(Error::NotAUnit);
        }
        // (1 + N)^-1 = sum (-N)^k, truncation kills k > q.
        let mut neg_n = self.clone();
        neg_n.coeffs.remove(&Monomial::one());
        for v in neg_n.coeffs.values_mut() {
            *v = -*v;
        }
        let mut acc = TruncatedSeries::one(self.q);
        let mut term = TruncatedSeries::one(self.q);
        for _ in 0..self.q {
            term = term.mul(&neg_n);
            if term.coeffs.is_empty() {
                break;
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// `self^sign` for `sign = ±1`.
    pub fn power_sign(&self, sign: i8) -> Result<TruncatedSeries> {
        if sign >= 0 {
            Ok(self.clone())
        } else {
            self.inverse()
        }
    }
}

impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, v) in &self.coeffs {
            if first {
                write!(f, "{v}*{m}")?;
                first = false;
            } else if *v >= 0 {
                write!(f, " + {v}*{m}")?;
            } else {
                write!(f, " - {}*{m}", -v)?;
            }
        }
        Ok(())
    }
}

/// Magnus expansion of a free word given as `(variable, exponent)` letters
/// with exponents `±1`.
pub fn magnus_expand(word: &[(u32, i8)], q: u32) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(q);
    for &(i, e) in word {
        let m = TruncatedSeries::meridian(i, q).power_sign(e)?;
        acc = acc.mul(&m);
    }
    Ok(acc)
}

/// `g^sign * u * g^-sign`.
fn conjugate(g: &TruncatedSeries, u: &TruncatedSeries, sign: i8) -> Result<TruncatedSeries> {
    let gs = g.power_sign(sign)?;
    let gs_inv = g.power_sign(-sign)?;
    Ok(gs.mul(u).mul(&gs_inv))
}

/// Resolve every arc of a presentation into a series in the base meridians.
///
/// Arcs start at `1 + X_component`; the relations are replayed in walk
/// order, in place, until a full sweep changes nothing. Walk order makes
/// each relation's in-arc already current within the sweep, so the
/// assignment stabilizes within `q` sweeps; a couple of spare sweeps guard
/// ahead of the convergence check.
pub fn resolve_arcs(
    p: &WirtingerPresentation,
    q: u32,
) -> Result<Vec<TruncatedSeries>> {
    let mut series: Vec<TruncatedSeries> = (0..p.arc_count())
        .map(|a| TruncatedSeries::meridian(p.arc_component(a), q))
        .collect();
    let max_sweeps = q as usize + 2;
    let mut stable = false;
    for _ in 0..max_sweeps {
        let mut changed = false;
        for r in p.relations() {
            let new = conjugate(&series[r.over], &series[r.inn], r.sign)?;
            if new != series[r.out] {
                series[r.out] = new;
                changed = true;
            }
        }
        if !changed {
            stable = true;
            break;
        }
    }
    if !stable {
        return Err(Error::NoConvergence(max_sweeps));
    }
    Ok(series)
}

/// Expand the corrected longitude of component `j` from resolved arcs.
pub fn longitude_series(
    p: &WirtingerPresentation,
    resolved: &[TruncatedSeries],
    j: u32,
    q: u32,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(q);
    for &(arc, sign) in p.longitude_traversal(j) {
        acc = acc.mul(&resolved[arc].power_sign(sign)?);
    }
    let e = p.framing_exponent(j);
    let correction: Vec<(u32, i8)> = (0..e.unsigned_abs())
        .map(|_| (j, if e > 0 { -1 } else { 1 }))
        .collect();
    Ok(acc.mul(&magnus_expand(&correction, q)?))
}

/// A Milnor invariant with its indeterminacy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorValue {
    pub index_sequence: Vec<u32>,
    pub mu: i64,
    pub delta: u64,
}

/// Resolved state of one diagram at a fixed truncation degree; all `mu(I)`
/// with `|I| - 1 <= q` read off the same resolution.
pub struct MilnorEngine {
    n: u32,
    q: u32,
    presentation: WirtingerPresentation,
    longitudes: Vec<TruncatedSeries>,
}

impl MilnorEngine {
    pub fn new(d: &StringLinkDiagram, q: u32) -> Result<MilnorEngine> {
        if q < 1 || q > MAX_DEGREE {
            return Err(Error::IndexError(format!(
                "truncation degree {q} outside 1..={MAX_DEGREE}"
            )));
        }
        let n = d.strands();
        if n > MAX_VARS {
            return Err(Error::IndexError(format!(
                "at most {MAX_VARS} components supported, got {n}"
            )));
        }
        let presentation = WirtingerPresentation::from_diagram(d);
        let resolved = resolve_arcs(&presentation, q)?;
        let longitudes = (1..=n)
            .map(|j| longitude_series(&presentation, &resolved, j, q))
            .collect::<Result<Vec<_>>>()?;
        Ok(MilnorEngine {
            n,
            q,
            presentation,
            longitudes,
        })
    }

    pub fn strands(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn presentation(&self) -> &WirtingerPresentation {
        &self.presentation
    }

    /// Corrected longitude of component `j` (1-based).
    pub fn longitude(&self, j: u32) -> &TruncatedSeries {
        &self.longitudes[(j - 1) as usize]
    }

    fn check_sequence(&self, index_sequence: &[u32]) -> Result<()> {
        if index_sequence.len() < 2 {
            return Err(Error::IndexError(
                "index sequence needs at least two entries".into(),
            ));
        }
        if let Some(&bad) = index_sequence.iter().find(|&&i| i == 0 || i > self.n) {
            return Err(Error::IndexError(format!(
                "component {bad} outside 1..={}",
                self.n
            )));
        }
        let needed = index_sequence.len() as u32 - 1;
        if needed > self.q {
            return Err(Error::TruncationTooLow {
                index_len: index_sequence.len(),
                needed,
                q: self.q,
            });
        }
        Ok(())
    }

    /// `mu(I)`: for `I = (i_1, ..., i_k, j)`, the coefficient of
    /// `X_{i_1} ... X_{i_k}` in the longitude series of component `j`.
    pub fn mu(&self, index_sequence: &[u32]) -> Result<i64> {
        self.check_sequence(index_sequence)?;
        let (j, prefix) = index_sequence.split_last().expect("length checked");
        let mono = Monomial::from_letters(prefix);
        Ok(self.longitude(*j).coefficient(&mono))
    }

    /// Milnor's indeterminacy: gcd of `mu(J)` over all `J` obtained by
    /// deleting at least one index and cyclically permuting the remainder.
    /// The gcd of the empty set is 0.
    pub fn delta(&self, index_sequence: &[u32]) -> Result<u64> {
        self.check_sequence(index_sequence)?;
        let mut sub: std::collections::BTreeSet<Vec<u32>> = Default::default();
        let k = index_sequence.len();
        // Subsets of kept positions, proper and of size >= 2.
        for mask in 1u32..(1 << k) - 1 {
            if (mask.count_ones() as usize) < 2 {
                continue;
            }
            let kept: Vec<u32> = (0..k)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| index_sequence[i])
                .collect();
            for shift in 0..kept.len() {
                let mut rotated = kept[shift..].to_vec();
                rotated.extend_from_slice(&kept[..shift]);
                sub.insert(rotated);
            }
        }
        let mut g: u64 = 0;
        for j in sub {
            g = gcd(g, self.mu(&j)?.unsigned_abs());
        }
        Ok(g)
    }

    pub fn mu_bar(&self, index_sequence: &[u32]) -> Result<MilnorValue> {
        Ok(MilnorValue {
            index_sequence: index_sequence.to_vec(),
            mu: self.mu(index_sequence)?,
            delta: self.delta(index_sequence)?,
        })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `mu(I)` of a diagram, resolving at the minimal sufficient degree.
pub fn mu(d: &StringLinkDiagram, index_sequence: &[u32]) -> Result<i64> {
    let q = (index_sequence.len().max(2) as u32 - 1).max(1);
    MilnorEngine::new(d, q)?.mu(index_sequence)
}

/// Indeterminacy of `mu(I)`.
pub fn delta(d: &StringLinkDiagram, index_sequence: &[u32]) -> Result<u64> {
    let q = (index_sequence.len().max(2) as u32 - 1).max(1);
    MilnorEngine::new(d, q)?.delta(index_sequence)
}

/// `mu` paired with its indeterminacy.
pub fn mu_bar(d: &StringLinkDiagram, index_sequence: &[u32]) -> Result<MilnorValue> {
    let q = (index_sequence.len().max(2) as u32 - 1).max(1);
    MilnorEngine::new(d, q)?.mu_bar(index_sequence)
}

/// The Sato-Levine invariant `mu(iijj)`.
pub fn sato_levine(d: &StringLinkDiagram, i: u32, j: u32) -> Result<i64> {
    if i == j {
        return Err(Error::IndexError("need two distinct components".into()));
    }
    mu(d, &[i, i, j, j])
}

/// Every `mu(I)` with `2 <= |I| <= weight`, in lexicographic order.
pub fn all_mu_up_to_weight(d: &StringLinkDiagram, weight: u32) -> Result<Vec<MilnorValue>> {
    if weight < 2 {
        return Err(Error::IndexError("weight must be at least 2".into()));
    }
    let engine = MilnorEngine::new(d, weight - 1)?;
    let n = engine.strands();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() >= 2 {
            out.push(engine.mu_bar(&prefix)?);
        }
        if (prefix.len() as u32) < weight {
            for i in (1..=n).rev() {
                let mut next = prefix.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    out.sort_by(|a, b| {
        (a.index_sequence.len(), &a.index_sequence)
            .cmp(&(b.index_sequence.len(), &b.index_sequence))
    });
    Ok(out)
}

/// Smallest `|I|` with `mu(I) != 0`, up to `max_weight`; `None` if all
/// vanish in that range.
pub fn first_nonvanishing_weight(d: &StringLinkDiagram, max_weight: u32) -> Result<Option<u32>> {
    let engine = MilnorEngine::new(d, max_weight.max(2) - 1)?;
    let n = engine.strands();
    for w in 2..=max_weight {
        let mut seqs: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..w {
            seqs = seqs
                .into_iter()
                .flat_map(|s| {
                    (1..=n).map(move |i| {
                        let mut t = s.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        for s in seqs {
            if engine.mu(&s)? != 0 {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
