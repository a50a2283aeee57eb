//! The twelve acceptance criteria, one PASS/FAIL line each.

use std::collections::BTreeSet;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use veldkamp::contextuality::{
    double_six_decomposition, enumerate_grids, enumerate_pentagrams, enumerate_pentagrams_by_cliques,
    ks_assignment_exists, mermin_square_census, mermin_squares_from_double_six, negative_line_census,
    pentagrams_from_spread, DoubleSix, MerminSquare, PentagramCatalog,
};
use veldkamp::dense::DenseTable;
use veldkamp::polar::{enumerate_veldkamp_lines_mixed, Hyperplane, PolarSpace, VeldkampLine};
use veldkamp::weights::{
    clifford_frame_census, clifford_frame_partition, dynkin_diagram_observables, dynkin_labels, generate_irrep20,
    quadruple_has_extreme_label, zero_sum_quadruples, CliffordFrame, TrivectorLabel, Weight, WeightObservableMap,
};
use veldkamp::{Pauli, PhasedPauli, PointSet, SymplecticMap};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn p(s: &str) -> Pauli {
    s.parse().unwrap()
}

fn set(xs: &str) -> PointSet {
    xs.split_whitespace().map(p).collect()
}

fn e(err: veldkamp::Error) -> String {
    err.to_string()
}

fn c1_catalog() -> Outcome {
    let s = PolarSpace::get();
    let got = (Pauli::points().count(), s.lines().len(), s.lagrangians().len());
    ensure!(got == (63, 315, 135), "points, lines, Lagrangians = {got:?}");
    Ok("63 points, 315 lines, 135 Lagrangians".into())
}

fn c2_hyperplanes() -> Outcome {
    let hyperbolic: Vec<usize> = Pauli::all().filter(|x| x.is_symmetric()).map(|x| Hyperplane::quadric(x).points().len()).collect();
    let elliptic: Vec<usize> = Pauli::all().filter(|x| x.q0()).map(|x| Hyperplane::quadric(x).points().len()).collect();
    let perp: Vec<usize> = Pauli::points().map(|x| Hyperplane::perp(x).unwrap().points().len()).collect();
    ensure!(hyperbolic.len() == 36 && hyperbolic.iter().all(|&k| k == 35), "hyperbolic sizes {hyperbolic:?}");
    ensure!(elliptic.len() == 28 && elliptic.iter().all(|&k| k == 27), "elliptic sizes {elliptic:?}");
    ensure!(perp.len() == 63 && perp.iter().all(|&k| k == 31), "perp sizes {perp:?}");
    Ok("36 × 35, 28 × 27, 63 × 31".into())
}

fn c3_boxplus() -> Outcome {
    let mut n = 0;
    for a in Pauli::all() {
        for b in Pauli::all().filter(|&b| b != a) {
            let got = Hyperplane::quadric(a).boxplus(&Hyperplane::quadric(b)).map_err(e)?;
            ensure!(got == Hyperplane::perp(a + b).map_err(e)?, "H_{a} ⊞ H_{b} = {}", got.name());
            n += 1;
            if a.is_identity() {
                continue;
            }
            let got = Hyperplane::perp(a).map_err(e)?.boxplus(&Hyperplane::quadric(b)).map_err(e)?;
            ensure!(got == Hyperplane::quadric(a + b), "C_{a} ⊞ H_{b} = {}", got.name());
            n += 1;
            if !b.is_identity() {
                let got = Hyperplane::perp(a).map_err(e)?.boxplus(&Hyperplane::perp(b).map_err(e)?).map_err(e)?;
                ensure!(got == Hyperplane::perp(a + b).map_err(e)?, "C_{a} ⊞ C_{b} = {}", got.name());
                n += 1;
            }
        }
    }
    Ok(format!("{n} pointwise identities"))
}

fn c4_veldkamp() -> Outcome {
    let lines = enumerate_veldkamp_lines_mixed();
    ensure!(lines.len() == 1008, "{} mixed lines", lines.len());
    for l in &lines {
        ensure!(l.core().len() == 15, "core of size {}", l.core().len());
        let d = l.doily().map_err(e)?;
        ensure!(d.lines().len() == 15, "doily with {} lines", d.lines().len());
    }
    let b = VeldkampLine::canonical().blocks().map_err(e)?;
    ensure!(b.hyperbolic == set("XXX XXZ XZX ZXX IIX IXI XII IIZ IZI ZII ZZZ ZZX ZXZ XZZ YYZ YZY ZYY YYX YXY XYY"), "20-block");
    ensure!(b.elliptic == set("YXI IYZ IYX XIY ZIY YZI IZY YIX YIZ ZYI XYI IXY"), "12-block");
    ensure!(b.perp == set("YYY IIY IYI YII ZZY ZYZ YZZ XXY XYX YXX XYZ ZXY YZX ZYX XZY YXZ"), "16-block");
    ensure!(b.core == set("XXI XIX IXX YYI YIY IYY ZZI ZIZ IZZ IXZ ZIX XZI ZXI IZX XIZ"), "15-block");
    Ok("1008 mixed lines, GQ(2,2) cores, canonical blocks verbatim".into())
}

fn c5_pentagrams() -> Outcome {
    let a = enumerate_pentagrams();
    let b = enumerate_pentagrams_by_cliques();
    ensure!(a.len() == 12096 && b.len() == 12096, "{} by Veldkamp lines, {} by cliques", a.len(), b.len());
    ensure!(a == b, "strategies disagree");
    let census = negative_line_census(&a);
    ensure!(census == [7884, 4104, 108], "census {census:?}");
    Ok("12096 by both strategies; negatives 7884/4104/108".into())
}

fn c6_conjugacy() -> Outcome {
    let cat = PentagramCatalog::get();
    for i in 0..cat.pentagrams().len() {
        let nb: BTreeSet<usize> = cat.conjugates(i).map_err(e)?.into_iter().collect();
        ensure!(nb.len() == 5, "pentagram {i} has {} distinct neighbours", nb.len());
    }
    let fams = double_six_decomposition().map_err(e)?;
    ensure!(fams.len() == 1008, "{} components", fams.len());
    let mut labels = BTreeSet::new();
    for ds in &fams {
        ensure!(ds.pentagrams().len() == 12 && ds.edges().len() == 30, "component shape");
        let t = SymplecticMap::transvection(ds.w());
        let mut pairs = BTreeSet::new();
        for (i, pg) in ds.pentagrams().iter().enumerate() {
            let j = ds.antipode(i);
            ensure!(ds.antipode(j) == i && ds.side(i) != ds.side(j), "antipodal pairing at {i}");
            ensure!(pg.transform(&t).map_err(e)? == ds.pentagrams()[j], "T_w antipode at {i}");
            pairs.insert((i.min(j), i.max(j)));
        }
        ensure!(pairs.len() == 6, "{} antipodal pairs", pairs.len());
        labels.insert((ds.p(), ds.q()));
    }
    let sym = Pauli::all().filter(|x| x.is_symmetric()).count();
    let anti = Pauli::all().filter(|x| x.q0()).count();
    ensure!(labels.len() == 1008 && (sym, anti) == (36, 28), "{} labels over {sym} × {anti}", labels.len());
    ensure!(labels.iter().all(|(a, b)| a.is_symmetric() && b.q0()), "label outside 36 × 28");
    Ok("5-regular, 1008 bipartite 12/30 components, T_w antipodes, (p,q) onto 36 × 28".into())
}

fn c7_spreads() -> Outcome {
    let mut all = BTreeSet::new();
    let mut total = 0;
    for vl in enumerate_veldkamp_lines_mixed() {
        let spreads = vl.doily().map_err(e)?.spreads();
        ensure!(spreads.len() == 6, "{} spreads", spreads.len());
        for s in &spreads {
            let pair = pentagrams_from_spread(&vl, s).map_err(e)?;
            total += 2;
            all.extend(pair);
        }
    }
    ensure!(total == 12096 && all.len() == 12096, "{total} from spreads, {} distinct", all.len());
    ensure!(all.iter().eq(PentagramCatalog::get().pentagrams()), "spread union differs from the catalog");
    Ok("6 spreads per core, one pair each, 12096 with no overlap".into())
}

fn c8_ks() -> Outcome {
    let ps = PentagramCatalog::get().pentagrams();
    let admitting = ps.iter().filter(|pg| ks_assignment_exists(pg)).count();
    ensure!(ps.len() == 12096 && admitting == 0, "{admitting} of {} admit an assignment", ps.len());
    Ok("no assignment for any of 12096".into())
}

fn c9_weights() -> Outcome {
    let ws = generate_irrep20().map_err(e)?;
    let closed: BTreeSet<Weight> = (0u32..64)
        .filter(|m| m.count_ones() == 3)
        .map(|m| Weight { coords2: std::array::from_fn(|k| if m >> k & 1 == 1 { 1 } else { -1 }) })
        .collect();
    ensure!(ws.len() == 20 && ws.iter().copied().collect::<BTreeSet<_>>() == closed, "weights");
    let listed = [
        ([1, 1, -1, 1, -1, -1], [0, 1, -1, 1, 0]),
        ([1, -1, 1, 1, -1, -1], [1, -1, 0, 1, 0]),
        ([1, 1, -1, -1, 1, -1], [0, 1, 0, -1, 1]),
        ([-1, 1, 1, 1, -1, -1], [-1, 0, 0, 1, 0]),
        ([1, -1, 1, -1, 1, -1], [1, -1, 1, -1, 1]),
        ([1, 1, -1, -1, -1, 1], [0, 1, 0, 0, -1]),
        ([-1, 1, 1, -1, 1, -1], [-1, 0, 1, -1, 1]),
        ([-1, 1, 1, -1, -1, 1], [-1, 0, 1, 0, -1]),
        ([1, -1, 1, -1, -1, 1], [1, -1, 1, 0, -1]),
    ];
    for (c, a) in listed {
        ensure!(dynkin_labels(&Weight::new(c).map_err(e)?).map_err(e)? == a, "Dynkin labels of {c:?}");
    }
    let qs = zero_sum_quadruples();
    let first = qs.iter().filter(|q| quadruple_has_extreme_label(q)).count();
    ensure!((qs.len(), first, qs.len() - first) == (30, 12, 18), "quadruples {} = {first} + {}", qs.len(), qs.len() - first);
    let map = WeightObservableMap::corres1();
    let labels: Vec<TrivectorLabel> = TrivectorLabel::all().collect();
    let mut pairs = 0;
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            ensure!(map.get(*a).symplectic(map.get(*b)) == (a.intersection_size(*b) % 2 == 0), "parity {a} {b}");
            pairs += 1;
        }
    }
    ensure!(pairs == 190, "{pairs} pairs");
    let o = dynkin_diagram_observables(&map).map_err(e)?;
    for i in 0..5 {
        for j in i + 1..5 {
            ensure!(o[i].symplectic(o[j]) == (j == i + 1), "{} and {} break the path", o[i], o[j]);
        }
    }
    let expected = ["IXI", "IZI", "XXY", "ZII", "XII"].map(p);
    ensure!(
        o == expected,
        "Dynkin observables by root subtraction are ({}, {}, {}, {}, {}), not (IXI, IZI, XXY, ZII, XII)",
        o[0], o[1], o[2], o[3], o[4]
    );
    Ok("20 weights, Dynkin list, 30 = 12 + 18, 190 parity pairs, (IXI, IZI, XXY, ZII, XII)".into())
}

fn c10_clifford() -> Outcome {
    let part = clifford_frame_partition(&CliffordFrame::choice());
    let b = VeldkampLine::canonical().blocks().map_err(e)?;
    ensure!(
        [part.triples, part.singles, part.pairs, part.pairs_with_seventh] == [b.hyperbolic, b.elliptic, b.perp, b.core],
        "choice partition differs from the canonical blocks"
    );
    let c = clifford_frame_census().map_err(e)?;
    ensure!((c.total, c.mixed, c.antisymmetric) == (288, 280, 8), "census {c:?}");
    ensure!(c.ordered_over_factorial == 288, "ordered / 7! = {}", c.ordered_over_factorial);
    Ok("choice reproduces 20/12/16/15; 288 = 280 + 8".into())
}

fn c11_squares() -> Outcome {
    let lines = |rows: [[&str; 3]; 3]| MerminSquare::new(rows.map(|r| r.map(p))).unwrap().lines();
    let ds = DoubleSix::from_labels(p("YYI"), p("YYY")).map_err(e)?;
    let sq = mermin_squares_from_double_six(&ds, p("IIX")).map_err(e)?;
    ensure!(sq.lines() == lines([["XXI", "YYI", "ZZI"], ["YZI", "ZXI", "XYI"], ["ZYI", "XZI", "YXI"]]), "square at IIX");
    let s = SymplecticMap::transvection(p("ZZX")) * SymplecticMap::transvection(p("XXX"));
    let back = sq.transform(&s).map_err(e)?;
    ensure!(back.lines() == lines([["XXI", "YYI", "ZZI"], ["XIX", "XZI", "IZX"], ["IXX", "ZXI", "ZIX"]]), "transported square");
    let census = mermin_square_census(&double_six_decomposition().map_err(e)?).map_err(e)?;
    let grids = enumerate_grids().len();
    ensure!(
        census.point_sets == 10080,
        "displayed grids match, but distinct squares = {} (grids in W(5,2) = {grids}, each from {} families); 10080 is the per-family sum {}",
        census.point_sets,
        census.families_per_square.map_or("varying".into(), |k| k.to_string()),
        census.per_family
    );
    Ok("displayed grids; 10080 distinct squares".into())
}

fn c12_phase() -> Outcome {
    let table = DenseTable::new();
    let check = |x: PhasedPauli, y: PhasedPauli| -> Outcome {
        let fast = x * y;
        let (k, v) = table.product(x, y).ok_or("dense product is not a Pauli")?;
        ensure!(v == fast.vector && k == fast.sign_relative_to_canonical().exponent(), "{x:?} × {y:?}");
        Ok(String::new())
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let x = PhasedPauli::new(rng.gen_range(0..4), Pauli::from_bits(rng.gen_range(0..64)).unwrap());
        let y = PhasedPauli::new(rng.gen_range(0..4), Pauli::from_bits(rng.gen_range(0..64)).unwrap());
        check(x, y)?;
    }
    let mut n = 0;
    for a in Pauli::points() {
        for b in Pauli::points() {
            check(PhasedPauli::hermitian(a), PhasedPauli::hermitian(b))?;
            n += 1;
        }
    }
    ensure!(n == 63 * 63, "{n} canonical pairs");
    Ok("10000 seeded pairs + 3969 canonical pairs".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("W(5,2) catalog", c1_catalog),
        ("quadrics and perp sets", c2_hyperplanes),
        ("⊞ identities", c3_boxplus),
        ("mixed Veldkamp lines", c4_veldkamp),
        ("pentagrams by two strategies", c5_pentagrams),
        ("conjugacy graph and double sixes", c6_conjugacy),
        ("spreads and pentagram pairs", c7_spreads),
        ("no value assignments", c8_ks),
        ("weight module", c9_weights),
        ("Clifford frames", c10_clifford),
        ("Mermin squares", c11_squares),
        ("phase oracle", c12_phase),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = std::time::Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
