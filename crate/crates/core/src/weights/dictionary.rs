//! Dictionaries between the 20 weights and the 20 points of a double six.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, SymplecticMap};
use crate::weights::clifford::CliffordFrame;
use crate::weights::roots::Weight;
use crate::weights::trivector::TrivectorLabel;

/// Which double six the weights are mapped onto.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DictionaryContext {
    /// The line `(H_YYI, H_YYY, C_IIY)`, with the overline acting as `T_IIY`.
    Corres1,
    /// The canonical line, through triple products of the frame `choice`.
    Canonical,
}

impl FromStr for DictionaryContext {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corres1" => Ok(DictionaryContext::Corres1),
            "canonical" => Ok(DictionaryContext::Canonical),
            other => Err(Error::UnknownContext(other.to_string())),
        }
    }
}

/// A bijection between the 20 trivector labels and 20 observables.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WeightObservableMap {
    entries: BTreeMap<TrivectorLabel, Pauli>,
}

fn p(s: &str) -> Pauli {
    s.parse().expect("literal Pauli string")
}

fn label(s: &str) -> TrivectorLabel {
    s.parse().expect("literal trivector label")
}

/// Entry `(i, j)` of the 3×3 block is `{ī} ∪ pair_j`, pairs `23, 31, 12`.
fn block_labels() -> [[TrivectorLabel; 3]; 3] {
    let pairs = ["23", "31", "12"];
    std::array::from_fn(|i| std::array::from_fn(|j| label(&format!("-{}{}", i + 1, pairs[j]))))
}

impl WeightObservableMap {
    pub fn new(entries: BTreeMap<TrivectorLabel, Pauli>) -> Result<WeightObservableMap> {
        let mut images: Vec<Pauli> = entries.values().copied().collect();
        images.sort();
        images.dedup();
        if entries.len() != 20 || images.len() != 20 || images.contains(&Pauli::IDENTITY) {
            return Err(Error::Invariant(format!("{} labels onto {} observables", entries.len(), images.len())));
        }
        Ok(WeightObservableMap { entries })
    }

    /// `{123} ↔ IIX` and the displayed 3×3 block; the rest by `T_IIY`.
    pub fn corres1() -> WeightObservableMap {
        let block = [["XXZ", "XYZ", "XZZ"], ["YXZ", "YYZ", "YZZ"], ["ZXZ", "ZYZ", "ZZZ"]];
        let t = SymplecticMap::transvection(p("IIY"));
        let mut entries = BTreeMap::new();
        let mut put = |l: TrivectorLabel, x: Pauli| {
            entries.insert(l, x);
            entries.insert(l.bar(), t.apply(x));
        };
        put(label("123"), p("IIX"));
        for (ls, xs) in block_labels().iter().zip(block) {
            for (l, x) in ls.iter().zip(xs) {
                put(*l, p(x));
            }
        }
        WeightObservableMap::new(entries).expect("corres1 is a bijection")
    }

    /// `{μνρ} ↦ Γ_μ + Γ_ν + Γ_ρ` for the slots of the label.
    pub fn from_frame(frame: &CliffordFrame) -> WeightObservableMap {
        let g = frame.gammas();
        let entries = TrivectorLabel::all()
            .map(|l| (l, (1..=6).filter(|&s| l.contains_slot(s)).map(|s| g[s - 1]).sum()))
            .collect();
        WeightObservableMap::new(entries).expect("triple products of a frame are distinct")
    }

    pub fn canonical() -> WeightObservableMap {
        WeightObservableMap::from_frame(&CliffordFrame::choice())
    }

    pub fn for_context(ctx: DictionaryContext) -> WeightObservableMap {
        match ctx {
            DictionaryContext::Corres1 => WeightObservableMap::corres1(),
            DictionaryContext::Canonical => WeightObservableMap::canonical(),
        }
    }

    pub fn get(&self, l: TrivectorLabel) -> Pauli {
        self.entries[&l]
    }

    pub fn of_weight(&self, w: &Weight) -> Result<Pauli> {
        Ok(self.get(TrivectorLabel::of_weight(w)?))
    }

    pub fn entries(&self) -> impl Iterator<Item = (TrivectorLabel, Pauli)> + '_ {
        self.entries.iter().map(|(l, x)| (*l, *x))
    }

    pub fn transform(&self, s: &SymplecticMap) -> WeightObservableMap {
        WeightObservableMap {
            entries: self.entries.iter().map(|(l, x)| (*l, s.apply(*x))).collect(),
        }
    }

    /// Observables with `⟨O_A, O_B⟩ = |A ∩ B| + 1 mod 2` for every pair.
    pub fn respects_intersection_parity(&self) -> bool {
        self.entries.iter().all(|(a, x)| {
            self.entries
                .iter()
                .all(|(b, y)| x.symplectic(*y) == (a.intersection_size(*b) % 2 == 0))
        })
    }
}

pub fn weight_observable_map(ctx: &str) -> Result<WeightObservableMap> {
    Ok(WeightObservableMap::for_context(ctx.parse()?))
}

/// 4-sets of labels meeting pairwise in one symbol whose weights sum to
/// zero, in canonical order.
pub fn zero_sum_quadruples() -> Vec<[TrivectorLabel; 4]> {
    let all: Vec<TrivectorLabel> = TrivectorLabel::all().collect();
    let mut out = Vec::new();
    for (i, &a) in all.iter().enumerate() {
        for (j, &b) in all.iter().enumerate().skip(i + 1) {
            for (k, &c) in all.iter().enumerate().skip(j + 1) {
                for &d in &all[k + 1..] {
                    let q = [a, b, c, d];
                    let pairwise = (0..4).all(|s| (s + 1..4).all(|t| q[s].intersection_size(q[t]) == 1));
                    let sum = q.iter().fold(Weight { coords2: [0; 6] }, |acc, l| acc.add(&l.weight()));
                    if pairwise && sum.is_zero() {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

/// Whether a quadruple passes through `{123}` or `{1̄2̄3̄}`.
pub fn quadruple_has_extreme_label(q: &[TrivectorLabel; 4]) -> bool {
    q.iter().any(|l| l.barred_count() % 3 == 0)
}

/// Observables `o_i` with `O_{Λ−α_i} = T_{o_i}(O_Λ)` wherever `a_i(Λ) > 0`;
/// each `o_i` is read off as `O_Λ + O_{Λ−α_i}` and must not depend on `Λ`.
pub fn dynkin_diagram_observables(map: &WeightObservableMap) -> Result<[Pauli; 5]> {
    let mut out = [Pauli::IDENTITY; 5];
    for (i, slot) in out.iter_mut().enumerate() {
        let mut found: Option<Pauli> = None;
        for l in TrivectorLabel::all() {
            let w = l.weight();
            let lowered = w.minus_root(i + 1);
            let Ok(l2) = TrivectorLabel::of_weight(&lowered) else { continue };
            let o = map.get(l) + map.get(l2);
            match found {
                None => found = Some(o),
                Some(prev) if prev != o => {
                    return Err(Error::Invariant(format!(
                        "α_{} is represented by both {prev} and {o}",
                        i + 1
                    )));
                }
                _ => {}
            }
        }
        *slot = found.ok_or_else(|| Error::Invariant(format!("α_{} never applies", i + 1)))?;
    }
    Ok(out)
}
