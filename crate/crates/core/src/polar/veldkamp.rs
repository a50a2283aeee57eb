//! Veldkamp lines of W(5,2) and the involutions that move them around.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, SymplecticMap};
use crate::pointset::PointSet;
use crate::polar::catalog::PolarSpace;
use crate::polar::doily::Doily;
use crate::polar::hyperplane::{Hyperplane, HyperplaneKind};

/// The five classes of Veldkamp lines.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VeldkampLineKind {
    /// C_a, C_b, C_{a+b} with a, b commuting.
    PerpIsotropic,
    /// C_a, C_b, C_{a+b} with a, b anticommuting.
    PerpNonIsotropic,
    /// Two hyperbolic quadrics and a perp set.
    HyperbolicPair,
    /// Two elliptic quadrics and a perp set.
    EllipticPair,
    /// One hyperbolic quadric, one elliptic quadric and a perp set.
    Mixed,
}

/// Three hyperplanes with pairwise equal intersections.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct VeldkampLine {
    hyperplanes: [Hyperplane; 3],
    core: PointSet,
}

/// The four-block partition of the 63 points cut out by a mixed line.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct VeldkampBlocks {
    /// Hyperbolic quadric minus the core (20 points).
    pub hyperbolic: PointSet,
    /// Elliptic quadric minus the core (12 points).
    pub elliptic: PointSet,
    /// Perp set minus the core (16 points).
    pub perp: PointSet,
    /// The common core (15 points).
    pub core: PointSet,
}

impl VeldkampLine {
    /// The line through two distinct hyperplanes.
    pub fn through(a: &Hyperplane, b: &Hyperplane) -> Result<VeldkampLine> {
        let c = a.boxplus(b)?;
        let core = a.points().intersection(b.points());
        if a.points().intersection(c.points()) != core || b.points().intersection(c.points()) != core {
            return Err(Error::Invariant(format!("{a:?}, {b:?}, {c:?} have unequal intersections")));
        }
        if c.boxplus(a)? != *b || c.boxplus(b)? != *a {
            return Err(Error::Invariant(format!("{a:?}, {b:?}, {c:?} are not ⊞-closed")));
        }
        let mut hyperplanes = [*a, *b, c];
        hyperplanes.sort();
        Ok(VeldkampLine { hyperplanes, core })
    }

    /// `{H_a, H_b, C_{a+b}}` for symmetric `a` and antisymmetric `b`.
    pub fn mixed(hyperbolic: Pauli, elliptic: Pauli) -> Result<VeldkampLine> {
        if hyperbolic.q0() || !elliptic.q0() {
            return Err(Error::MalformedVeldkampLine(format!(
                "H_{hyperbolic} must be hyperbolic and H_{elliptic} elliptic"
            )));
        }
        VeldkampLine::through(&Hyperplane::quadric(hyperbolic), &Hyperplane::quadric(elliptic))
    }

    /// `(H_III, H_YYY, C_YYY)`.
    pub fn canonical() -> VeldkampLine {
        VeldkampLine::mixed(Pauli::IDENTITY, Pauli::from_parts(0b111, 0b111)).expect("canonical line")
    }

    pub fn hyperplanes(&self) -> &[Hyperplane; 3] {
        &self.hyperplanes
    }

    pub fn core(&self) -> PointSet {
        self.core
    }

    pub fn kind(&self) -> VeldkampLineKind {
        let quadrics: Vec<&Hyperplane> = self.hyperplanes.iter().filter(|h| h.is_quadric()).collect();
        match quadrics.as_slice() {
            [] => {
                let [a, b, _] = self.hyperplanes;
                if a.label().symplectic(b.label()) {
                    VeldkampLineKind::PerpNonIsotropic
                } else {
                    VeldkampLineKind::PerpIsotropic
                }
            }
            [a, b] => match (a.label().q0(), b.label().q0()) {
                (false, false) => VeldkampLineKind::HyperbolicPair,
                (true, true) => VeldkampLineKind::EllipticPair,
                _ => VeldkampLineKind::Mixed,
            },
            _ => unreachable!("a Veldkamp line carries zero or two quadrics"),
        }
    }

    fn find(&self, pred: impl Fn(&Hyperplane) -> bool) -> Option<&Hyperplane> {
        self.hyperplanes.iter().find(|h| pred(h))
    }

    pub fn hyperbolic(&self) -> Option<&Hyperplane> {
        self.find(|h| h.is_hyperbolic())
    }

    pub fn elliptic(&self) -> Option<&Hyperplane> {
        self.find(|h| h.is_elliptic())
    }

    pub fn perp(&self) -> Option<&Hyperplane> {
        self.find(|h| h.kind() == HyperplaneKind::Perp)
    }

    /// `(a, b)` for the mixed line `{H_a, H_b, C_{a+b}}`.
    pub fn mixed_labels(&self) -> Result<(Pauli, Pauli)> {
        match (self.kind(), self.hyperbolic(), self.elliptic()) {
            (VeldkampLineKind::Mixed, Some(h), Some(e)) => Ok((h.label(), e.label())),
            _ => Err(Error::MalformedVeldkampLine(format!("{self:?} is not mixed"))),
        }
    }

    pub fn blocks(&self) -> Result<VeldkampBlocks> {
        let (a, b) = self.mixed_labels()?;
        let perp = self.perp().expect("mixed lines carry a perp set");
        debug_assert_eq!(perp.label(), a + b);
        Ok(VeldkampBlocks {
            hyperbolic: Hyperplane::quadric(a).points().difference(self.core),
            elliptic: Hyperplane::quadric(b).points().difference(self.core),
            perp: perp.points().difference(self.core),
            core: self.core,
        })
    }

    pub fn doily(&self) -> Result<Doily> {
        Doily::from_core(self.core)
    }

    /// Image under a symplectic map, hyperplane by hyperplane.
    pub fn transform(&self, s: &SymplecticMap) -> Result<VeldkampLine> {
        let a = self.hyperplanes[0].transform(s)?;
        let b = self.hyperplanes[1].transform(s)?;
        VeldkampLine::through(&a, &b)
    }
}

/// All 36·28 mixed lines, canonically ordered.
pub fn enumerate_veldkamp_lines_mixed() -> Vec<VeldkampLine> {
    let hyperbolic: Vec<Pauli> = Pauli::all().filter(|x| x.is_symmetric()).collect();
    let mut lines: Vec<VeldkampLine> = hyperbolic
        .par_iter()
        .flat_map_iter(|&a| {
            Pauli::all()
                .filter(|b| b.q0())
                .map(move |b| VeldkampLine::mixed(a, b).expect("mixed labels"))
        })
        .collect();
    lines.sort();
    lines
}

/// Count and core size of one class of Veldkamp lines.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct VeldkampClass {
    pub kind: VeldkampLineKind,
    pub count: usize,
    pub core_size: usize,
}

/// Enumerates every Veldkamp line from pairs of hyperplanes and classifies
/// them.
pub fn veldkamp_census() -> Result<Vec<VeldkampClass>> {
    let hs = PolarSpace::get().hyperplanes();
    let mut lines = BTreeSet::new();
    for (i, a) in hs.iter().enumerate() {
        for b in &hs[i + 1..] {
            lines.insert(VeldkampLine::through(a, b)?);
        }
    }
    let mut classes: BTreeMap<VeldkampLineKind, (usize, BTreeSet<usize>)> = BTreeMap::new();
    for l in &lines {
        let e = classes.entry(l.kind()).or_default();
        e.0 += 1;
        e.1.insert(l.core().len());
    }
    classes
        .into_iter()
        .map(|(kind, (count, sizes))| {
            let &[core_size] = sizes.iter().collect::<Vec<_>>().as_slice() else {
                return Err(Error::Invariant(format!("{kind:?} lines have core sizes {sizes:?}")));
            };
            Ok(VeldkampClass { kind, count, core_size: *core_size })
        })
        .collect()
}

/// An involution of Sp(6,2) fixing H_f and swapping H_a with H_b.
///
/// When Q_f(a+b) = 1 this is T_{a+b}. Otherwise it is T_p T_q with
/// q = p + a + b and p taken from C_{a+b} ∩ H_a \ H_f: the least such point,
/// or `choice` when given (it must lie in that set).
pub fn swap_involution(a: Pauli, b: Pauli, f: Pauli, choice: Option<Pauli>) -> Result<SymplecticMap> {
    if a == b || a == f || b == f {
        return Err(Error::Precondition(format!("labels {a}, {b}, {f} must be distinct")));
    }
    if a.q0() != b.q0() {
        return Err(Error::Precondition(format!("H_{a} and H_{b} are of different types")));
    }
    let d = a + b;
    if d.qp(f) {
        if choice.is_some() {
            return Err(Error::Precondition(format!("Q_{f}({d}) = 1 leaves no choice of p")));
        }
        return Ok(SymplecticMap::transvection(d));
    }
    let candidates = Hyperplane::perp(d)?
        .points()
        .intersection(Hyperplane::quadric(a).points())
        .difference(Hyperplane::quadric(f).points());
    let p = match choice {
        Some(p) if candidates.contains(p) => p,
        Some(p) => {
            return Err(Error::Precondition(format!("{p} is not in C_{d} ∩ H_{a} \\ H_{f}")));
        }
        None => candidates
            .first()
            .ok_or_else(|| Error::Precondition(format!("C_{d} ∩ H_{a} \\ H_{f} is empty")))?,
    };
    let q = p + d;
    Ok(SymplecticMap::transvection(p) * SymplecticMap::transvection(q))
}

/// A symplectic map sending the canonical line to `{H_a, H_b, C_{a+b}}`,
/// composed of at most two swap involutions.
pub fn transport_from_canonical(a: Pauli, b: Pauli) -> Result<SymplecticMap> {
    let canonical = VeldkampLine::canonical();
    let (a0, b0) = canonical.mixed_labels()?;
    let mut s = SymplecticMap::IDENTITY;
    if a != a0 {
        s = swap_involution(a0, a, b0, None)?;
    }
    if b != b0 {
        s = swap_involution(b0, b, a, None)? * s;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pauli {
        s.parse().unwrap()
    }

    fn set(xs: &str) -> PointSet {
        xs.split_whitespace().map(p).collect()
    }

    #[test]
    fn canonical_blocks_match_the_lists() {
        let b = VeldkampLine::canonical().blocks().unwrap();
        assert_eq!(
            b.hyperbolic,
            set("XXX XXZ XZX ZXX IIX IXI XII IIZ IZI ZII ZZZ ZZX ZXZ XZZ YYZ YZY ZYY YYX YXY XYY")
        );
        assert_eq!(b.elliptic, set("YXI IYZ IYX XIY ZIY YZI IZY YIX YIZ ZYI XYI IXY"));
        assert_eq!(b.perp, set("YYY IIY IYI YII ZZY ZYZ YZZ XXY XYX YXX XYZ ZXY YZX ZYX XZY YXZ"));
        assert_eq!(b.core, set("XXI XIX IXX YYI YIY IYY ZZI ZIZ IZZ IXZ ZIX XZI ZXI IZX XIZ"));
    }

    #[test]
    fn mixed_line_count_and_doily_cores() {
        let lines = enumerate_veldkamp_lines_mixed();
        assert_eq!(lines.len(), 1008);
        for l in &lines {
            assert_eq!(l.core().len(), 15);
            l.doily().unwrap();
        }
    }

    #[test]
    fn census_of_all_veldkamp_lines() {
        let census = veldkamp_census().unwrap();
        let get = |k| census.iter().find(|c| c.kind == k).copied().unwrap();
        assert_eq!(get(VeldkampLineKind::PerpIsotropic).count, 315);
        assert_eq!(get(VeldkampLineKind::PerpNonIsotropic).count, 336);
        assert_eq!(get(VeldkampLineKind::HyperbolicPair).count, 630);
        assert_eq!(get(VeldkampLineKind::EllipticPair).count, 378);
        assert_eq!(get(VeldkampLineKind::Mixed).count, 1008);
        assert_eq!(get(VeldkampLineKind::Mixed).core_size, 15);
    }

    #[test]
    fn documented_swap_involution() {
        let (a, b, f) = (p("III"), p("YYI"), p("YYY"));
        assert!(!(a + b).qp(f));
        let s = swap_involution(a, b, f, Some(p("XXX"))).unwrap();
        assert_eq!(s, SymplecticMap::transvection(p("XXX")) * SymplecticMap::transvection(p("ZZX")));
        assert!(s.is_involution());
        assert!(s.is_symplectic());
        let ha = Hyperplane::quadric(a);
        assert_eq!(ha.transform(&s).unwrap(), Hyperplane::quadric(b));
        let hf = Hyperplane::quadric(f);
        assert_eq!(hf.transform(&s).unwrap(), hf);
    }

    #[test]
    fn least_choice_rule_is_also_valid() {
        let s = swap_involution(p("III"), p("YYI"), p("YYY"), None).unwrap();
        assert!(s.is_involution());
        assert_eq!(Hyperplane::quadric(p("III")).transform(&s).unwrap(), Hyperplane::quadric(p("YYI")));
    }

    #[test]
    fn swap_preconditions() {
        assert!(swap_involution(p("III"), p("III"), p("YYY"), None).is_err());
        assert!(swap_involution(p("III"), p("YYY"), p("XXX"), None).is_err());
        assert!(swap_involution(p("III"), p("YYI"), p("YYY"), Some(p("ZZI"))).is_err());
    }

    #[test]
    fn orbit_of_the_canonical_line_is_all_mixed_lines() {
        let canonical = VeldkampLine::canonical();
        let mut reached = BTreeSet::new();
        for a in Pauli::all().filter(|x| x.is_symmetric()) {
            for b in Pauli::all().filter(|x| x.q0()) {
                let s = transport_from_canonical(a, b).unwrap();
                let image = canonical.transform(&s).unwrap();
                assert_eq!(image.mixed_labels().unwrap(), (a, b));
                reached.insert(image);
            }
        }
        assert_eq!(reached.len(), 1008);
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(VeldkampLine::mixed(p("YYY"), p("III")).is_err());
        let cc = VeldkampLine::through(&Hyperplane::perp(p("XII")).unwrap(), &Hyperplane::perp(p("IXI")).unwrap())
            .unwrap();
        assert!(cc.blocks().is_err());
    }
}
