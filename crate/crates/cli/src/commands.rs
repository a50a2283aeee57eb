//! One function per subcommand, each returning a [`Report`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use veldkamp::contextuality::{
    double_six_decomposition, enumerate_pentagrams_by_cliques, ks_assignment_exists, mermin_square_census,
    mermin_squares_from_double_six, negative_line_census, pentagrams_from_spread, ContextLine, DoubleSix,
    MerminSquare, Pentagram, PentagramCatalog,
};
use veldkamp::polar::{enumerate_veldkamp_lines_mixed, veldkamp_census, Hyperplane, PolarSpace, VeldkampLine};
use veldkamp::verify;
use veldkamp::weights::{
    clifford_frame_census, clifford_frame_partition, dynkin_diagram_observables, dynkin_labels, generate_irrep20,
    weight_observable_map, zero_sum_quadruples, CliffordFrame, TrivectorLabel,
};
use veldkamp::{Pauli, PointSet};

use crate::report::{words, Report};

pub fn catalog_points() -> Result<Report> {
    #[derive(Serialize)]
    struct Row {
        pauli: Pauli,
        symmetric: bool,
    }
    let rows: Vec<Row> = Pauli::points().map(|x| Row { pauli: x, symmetric: x.is_symmetric() }).collect();
    let mut text = String::new();
    for r in &rows {
        writeln!(text, "{} {}", r.pauli, if r.symmetric { "symmetric" } else { "antisymmetric" })?;
    }
    Report::new("catalog points").count("points", rows.len()).result(&rows).map(|r| r.text(text))
}

pub fn catalog_lines() -> Result<Report> {
    let lines = PolarSpace::get().lines();
    let rows: Vec<[Pauli; 3]> = lines.iter().map(|l| l.points()).collect();
    let text: String = rows.iter().map(|r| words(r) + "\n").collect();
    Report::new("catalog lines").count("lines", rows.len()).result(&rows).map(|r| r.text(text))
}

pub fn catalog_lagrangians() -> Result<Report> {
    let planes = PolarSpace::get().lagrangians();
    let rows: Vec<[Pauli; 7]> = planes.iter().map(|u| u.points()).collect();
    let text: String = rows.iter().map(|r| words(r) + "\n").collect();
    Report::new("catalog lagrangians").count("lagrangians", rows.len()).result(&rows).map(|r| r.text(text))
}

pub fn hyperplane(perp: bool, label: Pauli) -> Result<Report> {
    let h = if perp { Hyperplane::perp(label)? } else { Hyperplane::quadric(label) };
    let text = format!("{} ({} points)\n{}\n", h.name(), h.points().len(), words(h.points()));
    Report::new("hyperplane")
        .param("kind", if perp { "perp" } else { "quadric" })
        .param("label", label)
        .count("points", h.points().len())
        .result(&h)
        .map(|r| r.text(text))
}

fn line_name(l: &VeldkampLine) -> String {
    words(l.hyperplanes().iter().map(|h| h.name()))
}

pub fn veldkamp_enumerate(census: bool) -> Result<Report> {
    if census {
        let classes = veldkamp_census()?;
        let mut text = String::new();
        let mut report = Report::new("veldkamp enumerate").param("census", true);
        for c in &classes {
            let kind = serde_json::to_value(c.kind)?;
            let kind = kind.as_str().unwrap_or_default().to_string();
            writeln!(text, "{kind:<20} {:>5} lines, core {} points", c.count, c.core_size)?;
            report = report.count(&kind, c.count);
        }
        let total = classes.iter().map(|c| c.count).sum();
        writeln!(text, "{:<20} {total:>5}", "total")?;
        return report.count("total", total).result(&classes).map(|r| r.text(text));
    }
    let lines = enumerate_veldkamp_lines_mixed();
    let text: String = lines.iter().map(|l| line_name(l) + "\n").collect();
    let rows: Vec<[String; 3]> = lines.iter().map(|l| l.hyperplanes().map(|h| h.name())).collect();
    Report::new("veldkamp enumerate").count("mixed", lines.len()).result(&rows).map(|r| r.text(text))
}

pub fn veldkamp_report(a: Pauli, b: Pauli) -> Result<Report> {
    let vl = VeldkampLine::through(&Hyperplane::quadric(a), &Hyperplane::quadric(b))?;
    let blocks = vl.blocks()?;
    let mut text = format!("{}\n", line_name(&vl));
    for (name, s) in [
        ("hyperbolic", blocks.hyperbolic),
        ("elliptic", blocks.elliptic),
        ("perp", blocks.perp),
        ("core", blocks.core),
    ] {
        writeln!(text, "{name:<10} {:>2}: {}", s.len(), words(s))?;
    }
    Report::new("veldkamp report")
        .param("a", a)
        .param("b", b)
        .count("hyperbolic", blocks.hyperbolic.len())
        .count("elliptic", blocks.elliptic.len())
        .count("perp", blocks.perp.len())
        .count("core", blocks.core.len())
        .result(&blocks)
        .map(|r| r.text(text))
}

fn pentagram_line(p: &Pentagram) -> String {
    words(p.lines().iter().map(|l| format!("{l:?}")))
}

pub fn pentagram_enumerate(census_only: bool, slow: bool) -> Result<Report> {
    let ps = PentagramCatalog::get().pentagrams();
    if slow {
        let cliques = enumerate_pentagrams_by_cliques();
        if cliques.as_slice() != ps {
            bail!(veldkamp::Error::Invariant(format!(
                "clique search found {} pentagrams, Veldkamp lines {}",
                cliques.len(),
                ps.len()
            )));
        }
    }
    let [one, three, five] = negative_line_census(ps);
    let summary = format!("{} total; negatives: {one}/{three}/{five}\n", ps.len());
    let report = Report::new("pentagram enumerate")
        .param("census", census_only)
        .param("slow", slow)
        .count("total", ps.len())
        .count("negative1", one)
        .count("negative3", three)
        .count("negative5", five);
    if census_only {
        let census = BTreeMap::from([("1", one), ("3", three), ("5", five)]);
        return report.result(&census).map(|r| r.text(summary));
    }
    let text: String = ps.iter().map(|p| pentagram_line(p) + "\n").collect();
    report.result(&ps).map(|r| r.text(text))
}

fn dot(ds: &DoubleSix) -> Result<String> {
    let ids: Vec<String> = ds.pentagrams().iter().map(|p| format!("p{:016x}", p.id())).collect();
    let mut out = String::from("graph doublesix {\n");
    writeln!(out, "  label=\"w={} p={} q={}\";", ds.w(), ds.p(), ds.q())?;
    for (i, id) in ids.iter().enumerate() {
        let side = if ds.side(i) { "b" } else { "a" };
        writeln!(out, "  {id} [label=\"{side}{i}\"];")?;
    }
    for &(i, j) in ds.edges() {
        writeln!(out, "  {} -- {};", ids[i], ids[j])?;
    }
    for i in 0..ids.len() {
        let j = ds.antipode(i);
        if i < j {
            writeln!(out, "  {} -- {} [style=dashed];", ids[i], ids[j])?;
        }
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn doublesix(p: Pauli, q: Pauli, as_dot: bool) -> Result<Report> {
    let ds = DoubleSix::from_labels(p, q)?;
    let text = if as_dot {
        dot(&ds)?
    } else {
        let mut t = format!("w={} p={} q={}\n", ds.w(), ds.p(), ds.q());
        for (i, pg) in ds.pentagrams().iter().enumerate() {
            let side = if ds.side(i) { 'b' } else { 'a' };
            writeln!(t, "{side}{i:<2} antipode {:<2} {}", ds.antipode(i), pentagram_line(pg))?;
        }
        t
    };
    Report::new("doublesix")
        .param("p", p)
        .param("q", q)
        .param("dot", as_dot)
        .count("pentagrams", ds.pentagrams().len())
        .count("edges", ds.edges().len())
        .count("points", ds.points().len())
        .result(&ds)
        .map(|r| r.text(text))
}

pub fn spreads(p: Pauli, q: Pauli) -> Result<Report> {
    #[derive(Serialize)]
    struct Row {
        lines: Vec<[Pauli; 3]>,
        pentagrams: [Pentagram; 2],
    }
    let vl = VeldkampLine::mixed(p, q)?;
    let mut rows = Vec::new();
    for s in vl.doily()?.spreads() {
        let pentagrams = pentagrams_from_spread(&vl, &s)?;
        let lines = s.lines().iter().map(|l| l.points()).collect();
        rows.push(Row { lines, pentagrams });
    }
    let text: String = rows
        .iter()
        .map(|r| {
            let lines = r.lines.iter().map(words).collect::<Vec<_>>().join(" | ");
            format!("{lines}\n  {}\n  {}\n", pentagram_line(&r.pentagrams[0]), pentagram_line(&r.pentagrams[1]))
        })
        .collect();
    Report::new("spreads")
        .param("p", p)
        .param("q", q)
        .count("spreads", rows.len())
        .count("pentagrams", 2 * rows.len())
        .result(&rows)
        .map(|r| r.text(text))
}

#[derive(Deserialize)]
struct InputLine {
    points: [Pauli; 4],
    sign: Option<i8>,
}

#[derive(Deserialize)]
struct InputPentagram {
    lines: [InputLine; 5],
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Input {
    One(InputPentagram),
    Many(Vec<InputPentagram>),
}

fn read_pentagram(p: InputPentagram) -> Result<Pentagram> {
    let mut lines = Vec::with_capacity(5);
    for l in p.lines {
        let mut line = ContextLine::new(l.points)?;
        match l.sign {
            None => {}
            Some(s) if s == line.sign() => {}
            Some(s) if s == -line.sign() => line = line.with_flipped_sign(),
            Some(s) => bail!("sign {s} is not ±1"),
        }
        lines.push(line);
    }
    Ok(Pentagram::new(lines.try_into().expect("five lines"))?)
}

pub fn ks_check(input: &Path) -> Result<Report> {
    #[derive(Serialize)]
    struct Row {
        pentagram: Pentagram,
        negative_lines: usize,
        assignment_exists: bool,
    }
    let raw = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let parsed: Input = serde_json::from_str(&raw).with_context(|| format!("parsing {}", input.display()))?;
    let list = match parsed {
        Input::One(p) => vec![p],
        Input::Many(ps) => ps,
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    for p in list {
        let pg = read_pentagram(p)?;
        let exists = ks_assignment_exists(&pg);
        writeln!(
            text,
            "{} negative lines {}: {}",
            pentagram_line(&pg),
            pg.negative_lines(),
            if exists { "assignment exists" } else { "no assignment" }
        )?;
        rows.push(Row { pentagram: pg, negative_lines: pg.negative_lines(), assignment_exists: exists });
    }
    let refuted = rows.iter().filter(|r| !r.assignment_exists).count();
    Report::new("ks-check")
        .param("input", input.display())
        .count("pentagrams", rows.len())
        .count("no_assignment", refuted)
        .result(&rows)
        .map(|r| r.text(text))
}

pub fn squares_count() -> Result<Report> {
    let fams = double_six_decomposition()?;
    let c = mermin_square_census(&fams)?;
    let text = format!(
        "constructions {}\nper family {}\ndistinct point sets {}\nfamilies per square {}\n",
        c.constructions,
        c.per_family,
        c.point_sets,
        c.families_per_square.map_or("varies".to_string(), |k| k.to_string())
    );
    Report::new("squares")
        .param("count", true)
        .count("constructions", c.constructions)
        .count("per_family", c.per_family)
        .count("point_sets", c.point_sets)
        .result(&c)
        .map(|r| r.text(text))
}

fn grid_text(sq: &MerminSquare) -> String {
    let mut t = String::new();
    for (row, sign) in sq.grid().iter().zip(sq.row_signs()) {
        let _ = writeln!(t, "{}   {sign:+}", words(row));
    }
    let _ = writeln!(t, "{}", words(sq.col_signs().map(|s| format!("{s:+}  "))).trim_end());
    t
}

pub fn square_from_doublesix(p: Pauli, q: Pauli, apex: Pauli) -> Result<Report> {
    let ds = DoubleSix::from_labels(p, q)?;
    let sq = mermin_squares_from_double_six(&ds, apex)?;
    Report::new("squares")
        .param("p", p)
        .param("q", q)
        .param("apex", apex)
        .count("negative_lines", sq.negative_lines())
        .result(&sq)
        .map(|r| r.text(grid_text(&sq)))
}

pub fn weights_irrep20() -> Result<Report> {
    #[derive(Serialize)]
    struct Row {
        coords2: [i64; 6],
        dynkin: [i64; 5],
        label: TrivectorLabel,
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    for w in generate_irrep20()? {
        let row = Row { coords2: w.coords2, dynkin: dynkin_labels(&w)?, label: TrivectorLabel::of_weight(&w)? };
        writeln!(text, "{:<6} {:?} {:?}", row.label.machine(), row.coords2, row.dynkin)?;
        rows.push(row);
    }
    Report::new("weights irrep20").count("weights", rows.len()).result(&rows).map(|r| r.text(text))
}

pub fn weights_map(context: &str) -> Result<Report> {
    let map = weight_observable_map(context)?;
    let text: String = map.entries().map(|(l, x)| format!("{:<6} {x}\n", l.machine())).collect();
    Report::new("weights map")
        .param("context", context)
        .count("entries", map.entries().count())
        .result(&map)
        .map(|r| r.text(text))
}

pub fn weights_quadruples(context: &str) -> Result<Report> {
    #[derive(Serialize)]
    struct Row {
        labels: [TrivectorLabel; 4],
        observables: [Pauli; 4],
    }
    let map = weight_observable_map(context)?;
    let rows: Vec<Row> = zero_sum_quadruples()
        .into_iter()
        .map(|labels| Row { labels, observables: labels.map(|l| map.get(l)) })
        .collect();
    let text: String = rows
        .iter()
        .map(|r| format!("{}  {}\n", words(r.labels.map(|l| format!("{:<6}", l.machine()))), words(r.observables)))
        .collect();
    Report::new("weights quadruples")
        .param("context", context)
        .count("quadruples", rows.len())
        .result(&rows)
        .map(|r| r.text(text))
}

pub fn weights_dynkin(context: &str) -> Result<Report> {
    let map = weight_observable_map(context)?;
    let o = dynkin_diagram_observables(&map)?;
    let text: String = o.iter().enumerate().map(|(i, x)| format!("α{} {x}\n", i + 1)).collect();
    Report::new("weights dynkin").param("context", context).count("roots", 5).result(&o).map(|r| r.text(text))
}

pub fn clifford_partition(frame: &str) -> Result<Report> {
    let fr = CliffordFrame::named(frame)?;
    let part = clifford_frame_partition(&fr);
    let mut text = format!("frame {}\n", words(fr.gammas()));
    let blocks: [(&str, PointSet); 4] = [
        ("triples", part.triples),
        ("singles", part.singles),
        ("pairs", part.pairs),
        ("pairs+7", part.pairs_with_seventh),
    ];
    for (name, s) in blocks {
        writeln!(text, "{name:<8} {:>2}: {}", s.len(), words(s))?;
    }
    let [a, b, c, d] = part.sizes();
    Report::new("clifford partition")
        .param("frame", frame)
        .count("triples", a)
        .count("singles", b)
        .count("pairs", c)
        .count("pairs_with_seventh", d)
        .result(&part)
        .map(|r| r.text(text))
}

pub fn clifford_census() -> Result<Report> {
    let c = clifford_frame_census()?;
    let text = format!(
        "{} frames: {} with 4 symmetric + 3 antisymmetric, {} all antisymmetric\n",
        c.total, c.mixed, c.antisymmetric
    );
    Report::new("clifford census")
        .count("total", c.total)
        .count("mixed", c.mixed)
        .count("antisymmetric", c.antisymmetric)
        .count("ordered_over_factorial", c.ordered_over_factorial)
        .result(&c)
        .map(|r| r.text(text))
}

pub fn verify_all(list: bool) -> Result<Report> {
    #[derive(Serialize)]
    struct Entry {
        name: &'static str,
        topic: &'static str,
    }
    let registry = verify::registry();
    if list {
        let entries: Vec<Entry> = registry.iter().map(|c| Entry { name: c.name, topic: c.topic }).collect();
        let text: String = entries.iter().map(|e| format!("{:<28} {}\n", e.name, e.topic)).collect();
        return Report::new("verify-all")
            .param("list", true)
            .count("checks", entries.len())
            .result(&entries)
            .map(|r| r.text(text));
    }
    let reports = verify::run_all();
    let text: String = reports
        .iter()
        .map(|r| format!("{} {:<28} {}\n", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail))
        .collect();
    let failed = reports.iter().filter(|r| !r.passed).count();
    let mut out = Report::new("verify-all")
        .count("checks", reports.len())
        .count("passed", reports.len() - failed)
        .count("failed", failed)
        .result(&reports)?
        .text(text);
    if let Some(first) = reports.iter().find(|r| !r.passed) {
        out.failure = Some(format!(
            "verify-all: {failed} check(s) failed; first failing check {} ({})",
            first.name, first.topic
        ));
    }
    Ok(out)
}
