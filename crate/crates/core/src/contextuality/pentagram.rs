//! Mermin pentagrams, their construction from symplectic bases, conjugation
//! and the two enumeration routes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::contextuality::line::{enumerate_context_lines, ContextLine};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, SymplecticBasis, SymplecticMap};
use crate::pointset::PointSet;
use crate::polar::{enumerate_veldkamp_lines_mixed, PolarSpace, VeldkampLine};

/// Five context lines, any two meeting in exactly one point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pentagram {
    lines: [ContextLine; 5],
}

impl Pentagram {
    /// Validates the incidence pattern; the sign parity is reported by
    /// [`Pentagram::negative_lines`], not required here.
    pub fn new(mut lines: [ContextLine; 5]) -> Result<Pentagram> {
        lines.sort();
        let mut shared = PointSet::EMPTY;
        for (i, a) in lines.iter().enumerate() {
            for b in &lines[i + 1..] {
                let common = a.mask().intersection(b.mask());
                if common.len() != 1 {
                    return Err(Error::InvalidPentagram(format!("{a:?} and {b:?} share {} points", common.len())));
                }
                if !shared.intersection(common).is_empty() {
                    return Err(Error::InvalidPentagram(format!("{common:?} lies on three lines")));
                }
                shared = shared.union(common);
            }
        }
        Ok(Pentagram { lines })
    }

    pub fn lines(&self) -> &[ContextLine; 5] {
        &self.lines
    }

    pub fn points(&self) -> PointSet {
        self.lines.iter().fold(PointSet::EMPTY, |acc, l| acc.union(l.mask()))
    }

    pub fn negative_lines(&self) -> usize {
        self.lines.iter().filter(|l| l.is_negative()).count()
    }

    /// XOR of the ten points.
    pub fn sum(&self) -> Pauli {
        self.points().sum()
    }

    /// The six points off `l`.
    pub fn off_line(&self, l: &ContextLine) -> Result<PointSet> {
        if !self.lines.contains(l) {
            return Err(Error::LineNotInPentagram);
        }
        Ok(self.points().difference(l.mask()))
    }

    /// Pointwise image under a symplectic map, with signs recomputed.
    pub fn transform(&self, s: &SymplecticMap) -> Result<Pentagram> {
        let mut lines = self.lines;
        for l in &mut lines {
            *l = ContextLine::from_set(l.mask().map(|x| s.apply(x)))?;
        }
        Pentagram::new(lines)
    }

    /// Stable 64-bit identifier (FNV-1a over the packed points).
    pub fn id(&self) -> u64 {
        self.lines
            .iter()
            .flat_map(|l| l.points())
            .fold(0xcbf2_9ce4_8422_2325u64, |h, x| (h ^ x.bits() as u64).wrapping_mul(0x0000_0100_0000_01b3))
    }

    /// Same lines with the sign of line `k` flipped; a test input only.
    pub fn with_flipped_line(&self, k: usize) -> Pentagram {
        let mut lines = self.lines;
        lines[k] = lines[k].with_flipped_sign();
        Pentagram { lines }
    }
}

impl fmt::Debug for Pentagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.lines.iter()).finish()
    }
}

/// Lines `{x1, x2, x3, x1+x2+x3}` with `x_i ∈ {e_i, f_i}` and the parity of
/// the number of `f`s fixed, together with the line of the four sums.
fn pentagram_of_parity(b: &SymplecticBasis, odd: bool) -> Pentagram {
    let mut lines = Vec::with_capacity(5);
    let mut sums = [Pauli::IDENTITY; 4];
    for choice in (0u8..8).filter(|c| (c.count_ones() % 2 == 1) == odd) {
        let xs: [Pauli; 3] = std::array::from_fn(|i| if choice >> i & 1 == 1 { b.f[i] } else { b.e[i] });
        let s = xs[0] + xs[1] + xs[2];
        sums[lines.len()] = s;
        lines.push(ContextLine::new([xs[0], xs[1], xs[2], s]).expect("commuting triple from a basis"));
    }
    lines.push(ContextLine::new(sums).expect("the four sums commute"));
    Pentagram::new(lines.try_into().expect("five lines")).expect("basis pentagrams are well formed")
}

/// The two pentagrams through the six basis vectors; they are conjugate
/// across the line they do not share. The first is the one whose lines use
/// an even number of `f` vectors.
pub fn pentagrams_from_basis(b: &SymplecticBasis) -> Result<(Pentagram, Pentagram)> {
    SymplecticBasis::new(b.e, b.f)?;
    Ok((pentagram_of_parity(b, false), pentagram_of_parity(b, true)))
}

/// The pentagram sharing exactly the six points off `l` with `p`.
pub fn conjugate(p: &Pentagram, l: &ContextLine) -> Result<Pentagram> {
    let off: [Pauli; 6] = p.off_line(l)?.to_vec().try_into().expect("six points off a line");
    let basis = SymplecticBasis::from_unordered(&off)?;
    let (a, b) = pentagrams_from_basis(&basis)?;
    match (a == *p, b == *p) {
        (true, false) => Ok(b),
        (false, true) => Ok(a),
        _ => Err(Error::Invariant(format!("{p:?} is not built on the basis off {l:?}"))),
    }
}

/// Checks ten points with five lines, each point on two lines and an odd
/// number of negative lines.
pub fn is_mermin_pentagram(p: &Pentagram) -> bool {
    p.points().len() == 10 && p.negative_lines() % 2 == 1
}

/// Candidate quads through a spread line of the core of `vl`: Lagrangians
/// containing the line whose other four points lie in the hyperbolic block.
fn spread_line_quads(line: PointSet, block: PointSet) -> Result<Vec<ContextLine>> {
    let quads: Vec<ContextLine> = PolarSpace::get()
        .lagrangians_containing(line)
        .map(|u| u.mask().difference(line))
        .filter(|rest| rest.is_subset(block))
        .map(ContextLine::from_set)
        .collect::<Result<_>>()?;
    if quads.len() != 2 {
        return Err(Error::Invariant(format!(
            "spread line {line:?} has {} candidate quads, expected 2",
            quads.len()
        )));
    }
    Ok(quads)
}

/// The antipodal pentagram pair attached to one spread of the core doily.
pub fn pentagrams_from_spread(vl: &VeldkampLine, spread: &crate::polar::Spread) -> Result<[Pentagram; 2]> {
    let block = vl.blocks()?.hyperbolic;
    let candidates: Vec<Vec<ContextLine>> = spread
        .lines()
        .iter()
        .map(|l| spread_line_quads(l.mask(), block))
        .collect::<Result<_>>()?;
    let mut found = Vec::new();
    for choice in 0u8..32 {
        let lines: [ContextLine; 5] = std::array::from_fn(|i| candidates[i][(choice >> i & 1) as usize]);
        if let Ok(p) = Pentagram::new(lines) {
            found.push(p);
        }
    }
    found.sort();
    let Ok(pair) = <[Pentagram; 2]>::try_from(found.clone()) else {
        return Err(Error::Invariant(format!("spread {spread:?} yields {} pentagrams, expected 2", found.len())));
    };
    Ok(pair)
}

/// The twelve pentagrams of a mixed Veldkamp line, two per spread of its
/// core doily, in canonical order.
pub fn pentagrams_from_veldkamp_line(vl: &VeldkampLine) -> Result<Vec<Pentagram>> {
    vl.mixed_labels()?;
    let doily = vl.doily()?;
    let spreads = doily.spreads();
    if spreads.len() != 6 {
        return Err(Error::Invariant(format!("core doily has {} spreads", spreads.len())));
    }
    let mut out = Vec::with_capacity(12);
    for s in &spreads {
        out.extend(pentagrams_from_spread(vl, s)?);
    }
    out.sort();
    let before = out.len();
    out.dedup();
    if out.len() != before {
        return Err(Error::Invariant("two spreads produced the same pentagram".into()));
    }
    Ok(out)
}

/// All pentagrams via the 1008 mixed Veldkamp lines, canonically ordered.
pub fn enumerate_pentagrams() -> Vec<Pentagram> {
    let mut out: Vec<Pentagram> = enumerate_veldkamp_lines_mixed()
        .par_iter()
        .flat_map_iter(|vl| pentagrams_from_veldkamp_line(vl).expect("mixed line yields twelve pentagrams"))
        .collect();
    out.sort();
    out
}

/// All pentagrams as 5-cliques of the quad graph (adjacency: exactly one
/// shared point) whose ten shared points are distinct. Independent of the
/// Veldkamp-line route.
pub fn enumerate_pentagrams_by_cliques() -> Vec<Pentagram> {
    let quads = enumerate_context_lines();
    let masks: Vec<u64> = quads.iter().map(|q| q.mask().mask()).collect();
    let n = quads.len();
    let words = n.div_ceil(64);
    let mut adj = vec![0u64; n * words];
    for i in 0..n {
        for j in 0..n {
            if (masks[i] & masks[j]).count_ones() == 1 {
                adj[i * words + j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut out: Vec<Pentagram> = (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            let mut cand: Vec<u64> = adj[first * words..(first + 1) * words].to_vec();
            // only extend with later quads so each clique is found once
            for (w, word) in cand.iter_mut().enumerate() {
                for bit in 0..64 {
                    if w * 64 + bit <= first {
                        *word &= !(1 << bit);
                    }
                }
            }
            let mut chosen = vec![first];
            extend_clique(&adj, words, &masks, &mut chosen, &cand, 0, &mut |c| {
                let lines: [ContextLine; 5] = std::array::from_fn(|k| quads[c[k]]);
                found.push(Pentagram::new(lines).expect("clique with distinct meets"));
            });
            found
        })
        .collect();
    out.sort();
    out
}

fn extend_clique(
    adj: &[u64],
    words: usize,
    masks: &[u64],
    chosen: &mut Vec<usize>,
    cand: &[u64],
    shared: u64,
    emit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == 5 {
        emit(chosen);
        return;
    }
    for (w, &word) in cand.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let j = w * 64 + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let meets = chosen.iter().fold(0u64, |acc, &i| acc | (masks[i] & masks[j]));
            if meets & shared != 0 || meets.count_ones() as usize != chosen.len() {
                continue;
            }
            // later candidates only, adjacent to everything chosen so far
            let next: Vec<u64> = (0..words)
                .map(|v| {
                    let later = match v.cmp(&w) {
                        std::cmp::Ordering::Less => 0,
                        std::cmp::Ordering::Equal => bits,
                        std::cmp::Ordering::Greater => cand[v],
                    };
                    later & adj[j * words + v]
                })
                .collect();
            chosen.push(j);
            extend_clique(adj, words, masks, chosen, &next, shared | meets, emit);
            chosen.pop();
        }
    }
}

/// The full pentagram catalog with a lookup index, built once.
pub struct PentagramCatalog {
    pentagrams: Vec<Pentagram>,
    index: HashMap<Pentagram, usize>,
}

impl PentagramCatalog {
    pub fn get() -> &'static PentagramCatalog {
        static CATALOG: OnceLock<PentagramCatalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            let pentagrams = enumerate_pentagrams();
            let index = pentagrams.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            PentagramCatalog { pentagrams, index }
        })
    }

    pub fn pentagrams(&self) -> &[Pentagram] {
        &self.pentagrams
    }

    pub fn index_of(&self, p: &Pentagram) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Neighbour indices in the conjugacy graph, one per line.
    pub fn conjugates(&self, i: usize) -> Result<[usize; 5]> {
        let p = &self.pentagrams[i];
        let mut out = [0; 5];
        for (slot, l) in out.iter_mut().zip(p.lines()) {
            let c = conjugate(p, l)?;
            *slot = self
                .index_of(&c)
                .ok_or_else(|| Error::Invariant(format!("conjugate {c:?} is not in the catalog")))?;
        }
        Ok(out)
    }
}

/// Counts of pentagrams with 1, 3 and 5 negative lines.
pub fn negative_line_census(ps: &[Pentagram]) -> [usize; 3] {
    let mut out = [0; 3];
    for p in ps {
        let k = p.negative_lines();
        assert!(k % 2 == 1, "{p:?} has {k} negative lines");
        out[k / 2] += 1;
    }
    out
}

/// Number of pentagrams through each context line that carries any.
pub fn pentagrams_per_line(ps: &[Pentagram]) -> BTreeMap<ContextLine, usize> {
    let mut counts = BTreeMap::new();
    for p in ps {
        for l in p.lines() {
            *counts.entry(*l).or_default() += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Pauli {
        s.parse().unwrap()
    }

    fn set(xs: &[&str]) -> PointSet {
        xs.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn canonical_basis_pentagrams() {
        let (a, b) = pentagrams_from_basis(&SymplecticBasis::canonical()).unwrap();
        assert_eq!(
            a.points(),
            set(&["XII", "IXI", "IIX", "ZII", "IZI", "IIZ", "XXX", "XZZ", "ZXZ", "ZZX"])
        );
        assert_eq!(
            b.points(),
            set(&["XII", "IXI", "IIX", "ZII", "IZI", "IIZ", "ZXX", "ZZZ", "XXZ", "XZX"])
        );
        // exchanging XII and ZII turns one arrangement into the other
        let swapped = SymplecticBasis::new([p("ZII"), p("IXI"), p("IIX")], [p("XII"), p("IZI"), p("IIZ")]).unwrap();
        let (a2, b2) = pentagrams_from_basis(&swapped).unwrap();
        assert_eq!((a2, b2), (b, a));
        for q in [a, b] {
            assert!(is_mermin_pentagram(&q));
            assert_eq!(q.sum(), p("YYY"));
        }
        // one negative line each, the one with no basis vectors in it
        assert_eq!(a.negative_lines(), 1);
    }

    #[test]
    fn conjugation_is_an_involution() {
        let (a, b) = pentagrams_from_basis(&SymplecticBasis::canonical()).unwrap();
        let basis: PointSet = SymplecticBasis::canonical().vectors().into_iter().collect();
        let l = a.lines().iter().find(|l| l.mask().intersection(basis).is_empty()).unwrap();
        assert_eq!(conjugate(&a, l).unwrap(), b);
        let conj: BTreeSet<Pentagram> = a.lines().iter().map(|l| conjugate(&a, l).unwrap()).collect();
        assert_eq!(conj.len(), 5);
        for l in a.lines() {
            let c = conjugate(&a, l).unwrap();
            assert_eq!(c.points().intersection(a.points()).len(), 6);
            let l_prime = c.lines().iter().find(|m| m.mask().intersection(a.points()).is_empty()).unwrap();
            assert_eq!(conjugate(&c, l_prime).unwrap(), a);
        }
    }

    #[test]
    fn conjugate_rejects_foreign_line() {
        let (a, b) = pentagrams_from_basis(&SymplecticBasis::canonical()).unwrap();
        let foreign = b.lines().iter().find(|l| !a.lines().contains(l)).unwrap();
        assert_eq!(conjugate(&a, foreign), Err(Error::LineNotInPentagram));
    }

    #[test]
    fn canonical_line_gives_twelve_pentagrams_over_twenty_points() {
        let vl = VeldkampLine::canonical();
        let ps = pentagrams_from_veldkamp_line(&vl).unwrap();
        assert_eq!(ps.len(), 12);
        let union = ps.iter().fold(PointSet::EMPTY, |acc, q| acc.union(q.points()));
        assert_eq!(union, vl.blocks().unwrap().hyperbolic);
        let (a, b) = pentagrams_from_basis(&SymplecticBasis::canonical()).unwrap();
        assert!(ps.contains(&a) && ps.contains(&b));
        for s in vl.doily().unwrap().spreads() {
            let [x, y] = pentagrams_from_spread(&vl, &s).unwrap();
            let t = SymplecticMap::transvection(p("YYY"));
            assert_eq!(x.transform(&t).unwrap(), y);
            assert_eq!(x.points().union(y.points()).len(), 20);
        }
    }

    #[test]
    fn pentagram_rejects_bad_incidence() {
        let (a, b) = pentagrams_from_basis(&SymplecticBasis::canonical()).unwrap();
        let mut lines = *a.lines();
        lines[1] = lines[0];
        assert!(Pentagram::new(lines).is_err());
        // swapping in the conjugate's fifth line breaks the pattern
        let own = a.lines().iter().position(|l| !b.lines().contains(l)).unwrap();
        let mut lines = *a.lines();
        lines[own] = *b.lines().iter().find(|l| !a.lines().contains(l)).unwrap();
        assert!(Pentagram::new(lines).is_err());
    }
}
