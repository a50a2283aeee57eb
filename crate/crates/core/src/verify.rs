//! A registry of every invariant the library promises, runnable as a batch.
//!
//! Each [`Check`] is deterministic and exhaustive; there is no sampling.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::contextuality::{
    double_six_decomposition, enumerate_context_lines, enumerate_grids, enumerate_pentagrams_by_cliques,
    is_mermin_pentagram, ks_assignment_exists, mermin_square_census, mermin_squares_from_double_six,
    negative_line_census, pentagrams_from_spread, pentagrams_per_line, DoubleSix, MerminSquare, PentagramCatalog,
};
use crate::dense::DenseTable;
use crate::pauli::{Pauli, PhasedPauli, SymplecticBasis, SymplecticMap};
use crate::pointset::PointSet;
use crate::polar::{
    enumerate_veldkamp_lines_mixed, swap_involution, transport_from_canonical, veldkamp_census, Hyperplane,
    PolarSpace, VeldkampLine, VeldkampLineKind,
};
use crate::weights::{
    clifford_frame_census, clifford_frame_partition, dynkin_diagram_observables, dynkin_labels, generate_irrep20,
    quadruple_has_extreme_label, zero_sum_quadruples, CliffordFrame, TrivectorLabel, Weight, WeightObservableMap,
};

pub type Outcome = std::result::Result<String, String>;

/// One named invariant.
pub struct Check {
    pub name: &'static str,
    /// What the check is about, in a few words.
    pub topic: &'static str,
    pub run: fn() -> Outcome,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub topic: &'static str,
    pub passed: bool,
    pub detail: String,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn p(s: &str) -> Pauli {
    s.parse().expect("literal Pauli string")
}

fn set(xs: &str) -> PointSet {
    xs.split_whitespace().map(p).collect()
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

/// The four blocks of the canonical line `(H_III, H_YYY, C_YYY)`.
pub const CANONICAL_HYPERBOLIC: &str =
    "XXX XXZ XZX ZXX IIX IXI XII IIZ IZI ZII ZZZ ZZX ZXZ XZZ YYZ YZY ZYY YYX YXY XYY";
pub const CANONICAL_ELLIPTIC: &str = "YXI IYZ IYX XIY ZIY YZI IZY YIX YIZ ZYI XYI IXY";
pub const CANONICAL_PERP: &str = "YYY IIY IYI YII ZZY ZYZ YZZ XXY XYX YXX XYZ ZXY YZX ZYX XZY YXZ";
pub const CANONICAL_CORE: &str = "XXI XIX IXX YYI YIY IYY ZZI ZIZ IZZ IXZ ZIX XZI ZXI IZX XIZ";

/// Simple-root observables for the `(H_YYI, H_YYY, C_IIY)` dictionary as
/// tabulated in the literature.
pub const TABULATED_DYNKIN_OBSERVABLES: [&str; 5] = ["IXI", "IZI", "XXY", "ZII", "XII"];

fn families() -> &'static std::result::Result<Vec<DoubleSix>, String> {
    static FAMILIES: OnceLock<std::result::Result<Vec<DoubleSix>, String>> = OnceLock::new();
    FAMILIES.get_or_init(|| double_six_decomposition().map_err(err))
}

fn catalog_counts() -> Outcome {
    let s = PolarSpace::get();
    let counts = [Pauli::points().count(), s.lines().len(), s.lagrangians().len(), s.hyperplanes().len()];
    ensure!(counts == [63, 315, 135, 127], "points/lines/Lagrangians/hyperplanes = {counts:?}");
    Ok("63 points, 315 lines, 135 Lagrangians, 127 hyperplanes".into())
}

fn catalog_incidence() -> Outcome {
    let s = PolarSpace::get();
    for l in s.lines() {
        let k = s.lagrangians_containing(l.mask()).count();
        ensure!(k == 3, "line {l:?} lies in {k} Lagrangians");
    }
    for x in Pauli::points() {
        let k = s.lines().iter().filter(|l| l.contains(x)).count();
        ensure!(k == 15, "{x} lies on {k} lines");
    }
    for u in s.lagrangians() {
        ensure!(u.lines().len() == 7, "Lagrangian {u:?} has {} lines", u.lines().len());
    }
    Ok("3 Lagrangians per line, 15 lines per point, 7 lines per Lagrangian".into())
}

fn hyperplane_sizes() -> Outcome {
    let s = PolarSpace::get();
    let hyperbolic: Vec<_> = Pauli::all().filter(|x| x.is_symmetric()).map(Hyperplane::quadric).collect();
    let elliptic: Vec<_> = Pauli::all().filter(|x| x.q0()).map(Hyperplane::quadric).collect();
    let perps: Vec<_> = Pauli::points().map(|x| Hyperplane::perp(x).expect("nonzero")).collect();
    ensure!(hyperbolic.len() == 36 && elliptic.len() == 28, "{} + {} quadrics", hyperbolic.len(), elliptic.len());
    for (hs, size) in [(&hyperbolic, 35), (&elliptic, 27), (&perps, 31)] {
        for h in hs {
            ensure!(h.points().len() == size, "{} has {} points", h.name(), h.points().len());
            ensure!(s.is_geometric_hyperplane(h.points()), "{} is not a geometric hyperplane", h.name());
        }
    }
    let distinct: BTreeSet<PointSet> = s.hyperplanes().iter().map(|h| h.points()).collect();
    ensure!(distinct.len() == 127, "{} distinct hyperplane point sets", distinct.len());
    Ok("36×35 hyperbolic, 28×27 elliptic, 63×31 perp".into())
}

fn boxplus_identities() -> Outcome {
    let mut pairs = 0;
    for a in Pauli::all() {
        for b in Pauli::all() {
            if a == b {
                continue;
            }
            let mut cases = vec![(Hyperplane::quadric(a), Hyperplane::quadric(b), Hyperplane::perp(a + b))];
            if !a.is_identity() {
                cases.push((
                    Hyperplane::perp(a).map_err(err)?,
                    Hyperplane::quadric(b),
                    Ok(Hyperplane::quadric(a + b)),
                ));
                if !b.is_identity() {
                    cases.push((Hyperplane::perp(a).map_err(err)?, Hyperplane::perp(b).map_err(err)?, Hyperplane::perp(a + b)));
                }
            }
            for (x, y, expected) in cases {
                let expected = expected.map_err(err)?;
                let got = x.boxplus(&y).map_err(|e| format!("{} ⊞ {}: {e}", x.name(), y.name()))?;
                ensure!(got == expected, "{} ⊞ {} = {}, expected {}", x.name(), y.name(), got.name(), expected.name());
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} label pairs"))
}

fn veldkamp_mixed_lines() -> Outcome {
    let lines = enumerate_veldkamp_lines_mixed();
    ensure!(lines.len() == 1008, "{} mixed lines", lines.len());
    for l in &lines {
        ensure!(l.core().len() == 15, "core of {l:?} has {} points", l.core().len());
        l.doily().map_err(err)?;
        let sizes = l.blocks().map_err(err)?;
        let sizes = [sizes.hyperbolic, sizes.elliptic, sizes.perp, sizes.core].map(PointSet::len);
        ensure!(sizes == [20, 12, 16, 15], "blocks of {l:?} have sizes {sizes:?}");
    }
    Ok("1008 lines, every core a doily".into())
}

fn veldkamp_canonical_blocks() -> Outcome {
    let b = VeldkampLine::canonical().blocks().map_err(err)?;
    for (name, got, listed) in [
        ("hyperbolic", b.hyperbolic, CANONICAL_HYPERBOLIC),
        ("elliptic", b.elliptic, CANONICAL_ELLIPTIC),
        ("perp", b.perp, CANONICAL_PERP),
        ("core", b.core, CANONICAL_CORE),
    ] {
        ensure!(got == set(listed), "{name} block {got:?} differs from the list");
    }
    Ok("20/12/16/15 blocks match".into())
}

fn veldkamp_census_check() -> Outcome {
    let census = veldkamp_census().map_err(err)?;
    let got: BTreeMap<VeldkampLineKind, (usize, usize)> =
        census.iter().map(|c| (c.kind, (c.count, c.core_size))).collect();
    let expected = BTreeMap::from([
        (VeldkampLineKind::PerpIsotropic, (315, 47)),
        (VeldkampLineKind::PerpNonIsotropic, (336, 15)),
        (VeldkampLineKind::HyperbolicPair, (630, 19)),
        (VeldkampLineKind::EllipticPair, (378, 23)),
        (VeldkampLineKind::Mixed, (1008, 15)),
    ]);
    let counts: BTreeMap<_, _> = got.iter().map(|(k, v)| (*k, v.0)).collect();
    let expected_counts: BTreeMap<_, _> = expected.iter().map(|(k, v)| (*k, v.0)).collect();
    ensure!(counts == expected_counts, "classes {got:?}");
    let total: usize = counts.values().sum();
    ensure!(total == 2667, "{total} lines in total");
    let mixed = got[&VeldkampLineKind::Mixed];
    ensure!(mixed.1 == 15, "mixed cores have {} points", mixed.1);
    Ok(format!("{total} Veldkamp lines, 1008 mixed"))
}

fn veldkamp_orbit() -> Outcome {
    let canonical = VeldkampLine::canonical();
    let mut reached = BTreeSet::new();
    for a in Pauli::all().filter(|x| x.is_symmetric()) {
        for b in Pauli::all().filter(|x| x.q0()) {
            let s = transport_from_canonical(a, b).map_err(err)?;
            ensure!(s.is_symplectic(), "transport to ({a}, {b}) is not symplectic");
            let image = canonical.transform(&s).map_err(err)?;
            ensure!(image.mixed_labels().map_err(err)? == (a, b), "transport to ({a}, {b}) missed");
            reached.insert(image);
        }
    }
    ensure!(reached.len() == 1008, "orbit has {} lines", reached.len());
    let s = swap_involution(p("III"), p("YYI"), p("YYY"), Some(p("XXX"))).map_err(err)?;
    ensure!(
        s == SymplecticMap::transvection(p("XXX")) * SymplecticMap::transvection(p("ZZX")),
        "explicit choice XXX does not give T_XXX T_ZZX"
    );
    Ok("orbit of the canonical line is all 1008".into())
}

fn pentagram_strategies() -> Outcome {
    let by_lines = PentagramCatalog::get().pentagrams();
    let by_cliques = enumerate_pentagrams_by_cliques();
    ensure!(by_lines.len() == 12096, "{} pentagrams from Veldkamp lines", by_lines.len());
    ensure!(by_cliques.len() == 12096, "{} pentagrams from cliques", by_cliques.len());
    ensure!(by_lines == by_cliques.as_slice(), "the two strategies disagree");
    Ok("12096 by both strategies".into())
}

fn pentagram_census() -> Outcome {
    let ps = PentagramCatalog::get().pentagrams();
    ensure!(ps.iter().all(is_mermin_pentagram), "a pentagram fails the Mermin conditions");
    let census = negative_line_census(ps);
    ensure!(census == [7884, 4104, 108], "negative-line census {census:?}");
    Ok("7884/4104/108".into())
}

fn pentagrams_through_lines() -> Outcome {
    let lines = enumerate_context_lines();
    let negative = lines.iter().filter(|l| l.is_negative()).count();
    ensure!(lines.len() == 945 && negative == 324, "{} context lines, {negative} negative", lines.len());
    let per = pentagrams_per_line(PentagramCatalog::get().pentagrams());
    ensure!(per.len() == 945, "{} context lines carry pentagrams", per.len());
    ensure!(per.values().all(|&k| k == 64), "counts per line {:?}", per.values().collect::<BTreeSet<_>>());
    Ok("945 lines, 64 pentagrams each".into())
}

fn off_line_bases() -> Outcome {
    for pg in PentagramCatalog::get().pentagrams() {
        for l in pg.lines() {
            let off = pg.off_line(l).map_err(err)?;
            let v: [Pauli; 6] = off.to_vec().try_into().map_err(|_| format!("{pg:?} has {} points off {l:?}", off.len()))?;
            ensure!(SymplecticBasis::from_unordered(&v).is_ok(), "points of {pg:?} off {l:?} are not a symplectic basis");
        }
    }
    Ok("12096 × 5 bases".into())
}

fn conjugacy_graph() -> Outcome {
    let cat = PentagramCatalog::get();
    for i in 0..cat.pentagrams().len() {
        let nb = cat.conjugates(i).map_err(err)?;
        let distinct: BTreeSet<usize> = nb.iter().copied().collect();
        ensure!(distinct.len() == 5 && !distinct.contains(&i), "pentagram {i} has neighbours {nb:?}");
        for j in nb {
            ensure!(cat.conjugates(j).map_err(err)?.contains(&i), "conjugacy is not symmetric at {i}, {j}");
        }
    }
    let fams = families().as_ref().map_err(Clone::clone)?;
    ensure!(fams.len() == 1008, "{} components", fams.len());
    let mut labels = BTreeSet::new();
    for ds in fams {
        ensure!(ds.pentagrams().len() == 12 && ds.edges().len() == 30, "component of size {}", ds.pentagrams().len());
        let t = SymplecticMap::transvection(ds.w());
        for (i, pg) in ds.pentagrams().iter().enumerate() {
            let j = ds.antipode(i);
            ensure!(ds.side(i) != ds.side(j), "antipodes on the same side");
            ensure!(pg.transform(&t).map_err(err)? == ds.pentagrams()[j], "T_w does not realise the antipode");
        }
        labels.insert((ds.p(), ds.q()));
    }
    let expected: BTreeSet<(Pauli, Pauli)> = Pauli::all()
        .filter(|x| x.is_symmetric())
        .flat_map(|a| Pauli::all().filter(|x| x.q0()).map(move |b| (a, b)))
        .collect();
    ensure!(labels == expected, "(p, q) labels are not the 36 × 28 pairs");
    Ok("5-regular, 1008 bipartite double sixes, (p,q) bijective".into())
}

fn double_six_points() -> Outcome {
    let fams = families().as_ref().map_err(Clone::clone)?;
    for ds in fams {
        let w = ds.w();
        ensure!(ds.points().len() == 20, "family has {} points", ds.points().len());
        ensure!(ds.points().iter().all(|x| x.symplectic(w)), "a family point commutes with {w}");
        let vl = ds.veldkamp_line().map_err(err)?;
        ensure!(vl.core().iter().all(|x| !x.symplectic(w)), "a core point anticommutes with {w}");
        ensure!(vl.blocks().map_err(err)?.hyperbolic == ds.points(), "family points are not the 20-block");
    }
    Ok("20 points off w, core inside C_w".into())
}

fn spreads_and_pentagrams() -> Outcome {
    let mut all = BTreeSet::new();
    let mut total = 0;
    for vl in enumerate_veldkamp_lines_mixed() {
        let spreads = vl.doily().map_err(err)?.spreads();
        ensure!(spreads.len() == 6, "core of {vl:?} has {} spreads", spreads.len());
        for s in &spreads {
            let pair = pentagrams_from_spread(&vl, s).map_err(err)?;
            let t = SymplecticMap::transvection(vl.perp().expect("mixed").label());
            ensure!(pair[0].transform(&t).map_err(err)? == pair[1], "spread pair is not antipodal");
            total += 2;
            all.extend(pair);
        }
    }
    ensure!(total == 12096 && all.len() == 12096, "{total} pentagrams from spreads, {} distinct", all.len());
    ensure!(all.iter().eq(PentagramCatalog::get().pentagrams()), "spread pentagrams differ from the catalog");
    Ok("6 spreads per core, 12096 with no overlap".into())
}

fn no_value_assignment() -> Outcome {
    let ps = PentagramCatalog::get().pentagrams();
    let bad = ps.par_iter().filter(|pg| ks_assignment_exists(pg)).count();
    ensure!(bad == 0, "{bad} pentagrams admit a value assignment");
    Ok("no assignment for any of 12096".into())
}

fn weights_irrep() -> Outcome {
    let ws = generate_irrep20().map_err(err)?;
    ensure!(ws.len() == 20, "{} weights", ws.len());
    let listed: [[i64; 6]; 10] = [
        [1, 1, 1, -1, -1, -1],
        [1, 1, -1, 1, -1, -1],
        [1, -1, 1, 1, -1, -1],
        [1, 1, -1, -1, 1, -1],
        [-1, 1, 1, 1, -1, -1],
        [1, -1, 1, -1, 1, -1],
        [1, 1, -1, -1, -1, 1],
        [-1, 1, 1, -1, 1, -1],
        [-1, 1, 1, -1, -1, 1],
        [1, -1, 1, -1, -1, 1],
    ];
    let dynkin: [[i64; 5]; 10] = [
        [0, 0, 1, 0, 0],
        [0, 1, -1, 1, 0],
        [1, -1, 0, 1, 0],
        [0, 1, 0, -1, 1],
        [-1, 0, 0, 1, 0],
        [1, -1, 1, -1, 1],
        [0, 1, 0, 0, -1],
        [-1, 0, 1, -1, 1],
        [-1, 0, 1, 0, -1],
        [1, -1, 1, 0, -1],
    ];
    let mut expected = BTreeSet::new();
    for (c, a) in listed.iter().zip(&dynkin) {
        let w = Weight::new(*c).map_err(err)?;
        ensure!(dynkin_labels(&w).map_err(err)? == *a, "Dynkin labels of {c:?}");
        ensure!(dynkin_labels(&w.negate()).map_err(err)? == a.map(|x| -x), "Dynkin labels of −{c:?}");
        expected.insert(w);
        expected.insert(w.negate());
    }
    ensure!(ws.iter().copied().collect::<BTreeSet<_>>() == expected, "weights differ from the listed ones");
    Ok("20 weights, Dynkin labels as listed".into())
}

fn weights_quadruples() -> Outcome {
    let qs = zero_sum_quadruples();
    let extreme = qs.iter().filter(|q| quadruple_has_extreme_label(q)).count();
    ensure!((qs.len(), extreme) == (30, 12), "{} quadruples, {extreme} through {{123}} or its bar", qs.len());
    let can = WeightObservableMap::canonical();
    let images: BTreeSet<PointSet> = qs.iter().map(|q| q.iter().map(|l| can.get(*l)).collect()).collect();
    let lines: BTreeSet<PointSet> = DoubleSix::canonical().context_lines().iter().map(|l| l.mask()).collect();
    ensure!(images == lines, "canonical images of the quadruples are not the 30 double-six lines");
    Ok("30 = 12 + 18, the canonical double-six lines".into())
}

fn weights_parity() -> Outcome {
    let mut pairs = 0;
    for map in [WeightObservableMap::corres1(), WeightObservableMap::canonical()] {
        pairs = 0;
        let labels: Vec<TrivectorLabel> = TrivectorLabel::all().collect();
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                let anti = map.get(*a).symplectic(map.get(*b));
                ensure!(anti == (a.intersection_size(*b) % 2 == 0), "{a} and {b} break the parity rule");
                pairs += 1;
            }
        }
    }
    let s = SymplecticMap::transvection(p("ZZX")) * SymplecticMap::transvection(p("XXX"));
    ensure!(
        WeightObservableMap::corres1().transform(&s) == WeightObservableMap::canonical(),
        "T_ZZX T_XXX does not carry one dictionary onto the other"
    );
    Ok(format!("{pairs} pairs in both dictionaries"))
}

fn dynkin_path() -> Outcome {
    let o = dynkin_diagram_observables(&WeightObservableMap::corres1()).map_err(err)?;
    for i in 0..5 {
        for j in i + 1..5 {
            ensure!(o[i].symplectic(o[j]) == (j == i + 1), "{} and {} break the A5 path", o[i], o[j]);
        }
    }
    Ok(format!("({}, {}, {}, {}, {})", o[0], o[1], o[2], o[3], o[4]))
}

fn dynkin_tabulated() -> Outcome {
    let o = dynkin_diagram_observables(&WeightObservableMap::corres1()).map_err(err)?;
    let tab = TABULATED_DYNKIN_OBSERVABLES.map(p);
    ensure!(
        o == tab,
        "root subtraction gives ({}, {}, {}, {}, {}), tabulated ({}, {}, {}, {}, {})",
        o[0], o[1], o[2], o[3], o[4], tab[0], tab[1], tab[2], tab[3], tab[4]
    );
    Ok("tabulated observables reproduced".into())
}

fn clifford_partition() -> Outcome {
    let part = clifford_frame_partition(&CliffordFrame::choice());
    ensure!(part.is_partition(), "choice blocks do not partition the points");
    let got = [part.triples, part.singles, part.pairs, part.pairs_with_seventh];
    let expected = [CANONICAL_HYPERBOLIC, CANONICAL_ELLIPTIC, CANONICAL_PERP, CANONICAL_CORE].map(set);
    ensure!(got == expected, "choice blocks differ from the canonical lists");
    let b = VeldkampLine::mixed(p("YYI"), p("YYY")).map_err(err)?.blocks().map_err(err)?;
    let part = clifford_frame_partition(&CliffordFrame::choicei7());
    ensure!(
        [part.triples, part.singles, part.pairs, part.pairs_with_seventh] == [b.hyperbolic, b.elliptic, b.perp, b.core],
        "choicei7 blocks differ from those of (H_YYI, H_YYY, C_IIY)"
    );
    Ok("choice and choicei7 blocks".into())
}

fn clifford_census() -> Outcome {
    let c = clifford_frame_census().map_err(err)?;
    ensure!(
        (c.total, c.mixed, c.antisymmetric, c.ordered_over_factorial) == (288, 280, 8, 288),
        "census {c:?}"
    );
    Ok("288 = 280 + 8".into())
}

fn squares_displayed() -> Outcome {
    let lines = |rows: [[&str; 3]; 3]| MerminSquare::new(rows.map(|r| r.map(p))).map(|s| s.lines()).map_err(err);
    let ds = DoubleSix::from_labels(p("YYI"), p("YYY")).map_err(err)?;
    let sq = mermin_squares_from_double_six(&ds, p("IIX")).map_err(err)?;
    ensure!(
        sq.lines() == lines([["XXI", "YYI", "ZZI"], ["YZI", "ZXI", "XYI"], ["ZYI", "XZI", "YXI"]])?,
        "square at IIX is {:?}",
        sq.grid()
    );
    let s = SymplecticMap::transvection(p("ZZX")) * SymplecticMap::transvection(p("XXX"));
    let back = sq.transform(&s).map_err(err)?;
    ensure!(
        back.lines() == lines([["XXI", "YYI", "ZZI"], ["XIX", "XZI", "IZX"], ["IXX", "ZXI", "ZIX"]])?,
        "transported square is {:?}",
        back.grid()
    );
    Ok("both displayed squares".into())
}

fn squares_grids() -> Outcome {
    let fams = families().as_ref().map_err(Clone::clone)?;
    let census = mermin_square_census(fams).map_err(err)?;
    ensure!(census.constructions == 20160, "{} constructions", census.constructions);
    ensure!(census.per_family == 10080, "{} squares summed over families", census.per_family);
    let grids = enumerate_grids();
    ensure!(grids.len() == 3360, "{} grids in W(5,2)", grids.len());
    ensure!(census.point_sets == grids.len(), "{} squares vs {} grids", census.point_sets, grids.len());
    ensure!(census.families_per_square == Some(3), "families per square {:?}", census.families_per_square);
    for ds in fams {
        let doily = ds.veldkamp_line().map_err(err)?.doily().map_err(err)?;
        ensure!(doily.grids().len() == 10, "a core doily has {} grids", doily.grids().len());
    }
    Ok("10 per family, 10080 summed, 3360 distinct, each in 3 families".into())
}

fn squares_global() -> Outcome {
    let fams = families().as_ref().map_err(Clone::clone)?;
    let census = mermin_square_census(fams).map_err(err)?;
    ensure!(
        census.point_sets == 10080,
        "{} distinct squares over all families ({} summed per family)",
        census.point_sets,
        census.per_family
    );
    Ok("10080 distinct squares".into())
}

fn phase_exhaustive() -> Outcome {
    let table = DenseTable::new();
    let mut n = 0;
    for a in Pauli::all() {
        for b in Pauli::all() {
            for (ta, tb) in (0..4u8).flat_map(|x| (0..4u8).map(move |y| (x, y))) {
                let (x, y) = (PhasedPauli::new(ta, a), PhasedPauli::new(tb, b));
                let fast = x * y;
                let Some((k, v)) = table.product(x, y) else {
                    return Err(format!("dense product of {a} and {b} is not a Pauli"));
                };
                ensure!(
                    v == fast.vector && k == fast.sign_relative_to_canonical().exponent(),
                    "{ta}·{a} × {tb}·{b}: dense i^{k}·{v}, symbolic {fast:?}"
                );
                n += 1;
            }
        }
    }
    Ok(format!("{n} products"))
}

/// Every check, in the order `verify-all` runs them.
pub fn registry() -> &'static [Check] {
    const CHECKS: &[Check] = &[
        Check { name: "catalog-counts", topic: "points, lines, Lagrangians, hyperplanes", run: catalog_counts },
        Check { name: "catalog-incidence", topic: "line and point incidences", run: catalog_incidence },
        Check { name: "hyperplane-sizes", topic: "quadrics and perp sets", run: hyperplane_sizes },
        Check { name: "boxplus-identities", topic: "⊞ on labels", run: boxplus_identities },
        Check { name: "veldkamp-mixed", topic: "mixed Veldkamp lines and doily cores", run: veldkamp_mixed_lines },
        Check { name: "veldkamp-canonical-blocks", topic: "four-block partition of the canonical line", run: veldkamp_canonical_blocks },
        Check { name: "veldkamp-census", topic: "all Veldkamp lines by class", run: veldkamp_census_check },
        Check { name: "veldkamp-orbit", topic: "transport by swap involutions", run: veldkamp_orbit },
        Check { name: "pentagram-strategies", topic: "pentagrams by spreads and by cliques", run: pentagram_strategies },
        Check { name: "pentagram-census", topic: "negative lines per pentagram", run: pentagram_census },
        Check { name: "pentagram-per-line", topic: "pentagrams through each context line", run: pentagrams_through_lines },
        Check { name: "pentagram-off-line-bases", topic: "six points off a line", run: off_line_bases },
        Check { name: "conjugacy-graph", topic: "double-six decomposition", run: conjugacy_graph },
        Check { name: "double-six-points", topic: "w and the 20-block", run: double_six_points },
        Check { name: "spreads", topic: "spreads of the core and pentagram pairs", run: spreads_and_pentagrams },
        Check { name: "value-assignments", topic: "no noncontextual assignment", run: no_value_assignment },
        Check { name: "weights-irrep20", topic: "weights and Dynkin labels of the 20", run: weights_irrep },
        Check { name: "weights-quadruples", topic: "zero-sum quadruples", run: weights_quadruples },
        Check { name: "weights-parity", topic: "commutation versus intersection parity", run: weights_parity },
        Check { name: "dynkin-path", topic: "simple-root observables form an A5 path", run: dynkin_path },
        Check { name: "dynkin-tabulated", topic: "simple-root observables (IXI, IZI, XXY, ZII, XII)", run: dynkin_tabulated },
        Check { name: "clifford-partition", topic: "Clifford frames and the four blocks", run: clifford_partition },
        Check { name: "clifford-census", topic: "frames of seven anticommuting observables", run: clifford_census },
        Check { name: "squares-displayed", topic: "Mermin squares from the apex IIX", run: squares_displayed },
        Check { name: "squares-grids", topic: "squares per family and grids of W(5,2)", run: squares_grids },
        Check { name: "squares-global", topic: "10080 distinct Mermin squares", run: squares_global },
        Check { name: "phase-exhaustive", topic: "symbolic products against 8×8 matrices", run: phase_exhaustive },
    ];
    CHECKS
}

pub fn run_check(c: &Check) -> CheckReport {
    let (passed, detail) = match (c.run)() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckReport { name: c.name, topic: c.topic, passed, detail }
}

/// Runs every check in registry order.
pub fn run_all() -> Vec<CheckReport> {
    registry().iter().map(run_check).collect()
}
