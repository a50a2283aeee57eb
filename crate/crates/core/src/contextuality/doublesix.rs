//! Double sixes: the connected components of the pentagram conjugacy graph.

use std::collections::VecDeque;

use serde::Serialize;

use crate::contextuality::pentagram::{conjugate, pentagrams_from_veldkamp_line, Pentagram, PentagramCatalog};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, SymplecticBasis, SymplecticMap};
use crate::pointset::PointSet;
use crate::polar::VeldkampLine;

/// Twelve pentagrams closed under conjugation, with their invariants.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DoubleSix {
    pentagrams: Vec<Pentagram>,
    w: Pauli,
    p: Pauli,
    q: Pauli,
    /// Side of the bipartition for each pentagram.
    side: Vec<bool>,
    /// Index of the antipodal pentagram.
    antipode: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// `Σ Q0(e_i) f_i + Q0(f_i) e_i`.
fn basis_invariant(b: &SymplecticBasis) -> Pauli {
    (0..3)
        .map(|i| {
            let mut s = Pauli::IDENTITY;
            if b.e[i].q0() {
                s += b.f[i];
            }
            if b.f[i].q0() {
                s += b.e[i];
            }
            s
        })
        .sum()
}

/// `(w, p, q)` for a family of pentagrams, checking that `w` and `p` agree
/// across every member and every line.
pub fn double_six_invariants(ps: &[Pentagram]) -> Result<(Pauli, Pauli, Pauli)> {
    let first = ps.first().ok_or_else(|| Error::InconsistentDoubleSix("no pentagrams".into()))?;
    let w = first.sum();
    let mut p = None;
    for pent in ps {
        if pent.sum() != w {
            return Err(Error::InconsistentDoubleSix(format!("point sums {w} and {}", pent.sum())));
        }
        for l in pent.lines() {
            let off: [Pauli; 6] = pent.off_line(l)?.to_vec().try_into().expect("six points");
            let b = SymplecticBasis::from_unordered(&off)?;
            let here = basis_invariant(&b);
            match p {
                None => p = Some(here),
                Some(prev) if prev != here => {
                    return Err(Error::InconsistentDoubleSix(format!("p is {prev} and {here}")));
                }
                _ => {}
            }
        }
    }
    let p = p.expect("at least one line");
    let q = p + w;
    if p.q0() || !q.q0() {
        return Err(Error::InconsistentDoubleSix(format!("p = {p} must be symmetric and q = {q} not")));
    }
    Ok((w, p, q))
}

impl DoubleSix {
    /// Validates a conjugacy component: 12 vertices, 30 edges, bipartite,
    /// antipodes given by `T_w`.
    pub fn new(mut pentagrams: Vec<Pentagram>) -> Result<DoubleSix> {
        pentagrams.sort();
        pentagrams.dedup();
        if pentagrams.len() != 12 {
            return Err(Error::InconsistentDoubleSix(format!("{} pentagrams", pentagrams.len())));
        }
        let index = |x: &Pentagram| pentagrams.binary_search(x).ok();
        let mut edges = Vec::new();
        let mut adj = [[false; 12]; 12];
        for (i, pent) in pentagrams.iter().enumerate() {
            for l in pent.lines() {
                let c = conjugate(pent, l)?;
                let j = index(&c)
                    .ok_or_else(|| Error::InconsistentDoubleSix(format!("conjugate {c:?} leaves the family")))?;
                adj[i][j] = true;
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        if edges.len() != 30 || (0..12).any(|i| (0..12).any(|j| adj[i][j] != adj[j][i])) {
            return Err(Error::InconsistentDoubleSix(format!("{} edges", edges.len())));
        }
        let mut colour: Vec<Option<bool>> = vec![None; 12];
        let mut queue = VecDeque::from([0usize]);
        colour[0] = Some(false);
        while let Some(i) = queue.pop_front() {
            let ci = colour[i].expect("coloured on entry");
            for j in (0..12).filter(|&j| adj[i][j]) {
                match colour[j] {
                    None => {
                        colour[j] = Some(!ci);
                        queue.push_back(j);
                    }
                    Some(cj) if cj == ci => {
                        return Err(Error::InconsistentDoubleSix("conjugacy graph is not bipartite".into()));
                    }
                    _ => {}
                }
            }
        }
        let side: Vec<bool> = colour
            .into_iter()
            .map(|c| c.ok_or_else(|| Error::InconsistentDoubleSix("family is disconnected".into())))
            .collect::<Result<_>>()?;
        let (w, p, q) = double_six_invariants(&pentagrams)?;
        let tw = SymplecticMap::transvection(w);
        let mut antipode = Vec::with_capacity(12);
        for (i, pent) in pentagrams.iter().enumerate() {
            let j = index(&pent.transform(&tw)?)
                .ok_or_else(|| Error::InconsistentDoubleSix("T_w image leaves the family".into()))?;
            let opposite_non_adjacent: Vec<usize> =
                (0..12).filter(|&k| side[k] != side[i] && !adj[i][k]).collect();
            if opposite_non_adjacent != [j] {
                return Err(Error::InconsistentDoubleSix(format!(
                    "antipode of vertex {i} is {j}, non-adjacent opposite vertices {opposite_non_adjacent:?}"
                )));
            }
            antipode.push(j);
        }
        let ds = DoubleSix {
            pentagrams,
            w,
            p,
            q,
            side,
            antipode,
            edges,
        };
        if ds.points().iter().any(|x| !x.symplectic(w)) {
            return Err(Error::InconsistentDoubleSix(format!("a point commutes with w = {w}")));
        }
        Ok(ds)
    }

    /// The family attached to the mixed line `{H_p, H_q, C_{p+q}}`.
    pub fn from_labels(p: Pauli, q: Pauli) -> Result<DoubleSix> {
        DoubleSix::new(pentagrams_from_veldkamp_line(&VeldkampLine::mixed(p, q)?)?)
    }

    /// The family containing the pentagrams of the canonical basis.
    pub fn canonical() -> DoubleSix {
        DoubleSix::new(pentagrams_from_veldkamp_line(&VeldkampLine::canonical()).expect("canonical line"))
            .expect("canonical double six")
    }

    pub fn pentagrams(&self) -> &[Pentagram] {
        &self.pentagrams
    }

    pub fn w(&self) -> Pauli {
        self.w
    }

    pub fn p(&self) -> Pauli {
        self.p
    }

    pub fn q(&self) -> Pauli {
        self.q
    }

    pub fn side(&self, i: usize) -> bool {
        self.side[i]
    }

    pub fn antipode(&self, i: usize) -> usize {
        self.antipode[i]
    }

    /// Conjugacy edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The twenty points of the family.
    pub fn points(&self) -> PointSet {
        self.pentagrams.iter().fold(PointSet::EMPTY, |acc, p| acc.union(p.points()))
    }

    /// The 30 distinct context lines of the family.
    pub fn context_lines(&self) -> Vec<crate::contextuality::ContextLine> {
        let mut out: Vec<_> = self.pentagrams.iter().flat_map(|p| *p.lines()).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn veldkamp_line(&self) -> Result<VeldkampLine> {
        VeldkampLine::mixed(self.p, self.q)
    }
}

/// Connected components of the conjugacy graph over all pentagrams, ordered
/// by `(p, q)`.
pub fn double_six_decomposition() -> Result<Vec<DoubleSix>> {
    let cat = PentagramCatalog::get();
    let n = cat.pentagrams().len();
    let neighbours: Vec<[usize; 5]> = (0..n).map(|i| cat.conjugates(i)).collect::<Result<_>>()?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut component = vec![start];
        let mut k = 0;
        while k < component.len() {
            for &j in &neighbours[component[k]] {
                if !seen[j] {
                    seen[j] = true;
                    component.push(j);
                }
            }
            k += 1;
        }
        out.push(DoubleSix::new(component.iter().map(|&i| cat.pentagrams()[i]).collect())?);
    }
    out.sort_by_key(|d| (d.p, d.q));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contextuality::pentagram::pentagrams_from_basis;

    fn p(s: &str) -> Pauli {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_invariants() {
        let ds = DoubleSix::canonical();
        assert_eq!((ds.w(), ds.p(), ds.q()), (p("YYY"), p("III"), p("YYY")));
        assert_eq!(ds.points().len(), 20);
        assert_eq!(ds.context_lines().len(), 30);
        let (a, b) = pentagrams_from_basis(&SymplecticBasis::canonical()).unwrap();
        assert!(ds.pentagrams().contains(&a) && ds.pentagrams().contains(&b));
        for i in 0..12 {
            let j = ds.antipode(i);
            assert_eq!(ds.antipode(j), i);
            assert_eq!(ds.pentagrams()[i].points().union(ds.pentagrams()[j].points()), ds.points());
        }
    }

    #[test]
    fn transported_family_has_the_line_labels() {
        let ds = DoubleSix::from_labels(p("YYI"), p("YYY")).unwrap();
        assert_eq!((ds.p(), ds.q()), (p("YYI"), p("YYY")));
        let s = SymplecticMap::transvection(p("ZZX")) * SymplecticMap::transvection(p("XXX"));
        let moved: Vec<Pentagram> = DoubleSix::canonical()
            .pentagrams()
            .iter()
            .map(|x| x.transform(&s).unwrap())
            .collect();
        assert_eq!(DoubleSix::new(moved).unwrap(), ds);
    }

    #[test]
    fn inconsistent_families_are_rejected() {
        let mut ps = DoubleSix::canonical().pentagrams().to_vec();
        ps.pop();
        assert!(DoubleSix::new(ps.clone()).is_err());
        ps.push(DoubleSix::from_labels(p("YYI"), p("YYY")).unwrap().pentagrams()[0]);
        assert!(DoubleSix::new(ps.clone()).is_err());
        assert!(double_six_invariants(&ps).is_err());
    }
}
