//! Trivector labels: 3-subsets of `{1,2,3,1̄,2̄,3̄}` naming the 20 weights.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weights::roots::Weight;

/// Bit `k` stands for slot `k+1` of R^6; slots 4, 5, 6 are `1̄, 2̄, 3̄`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrivectorLabel(u8);

const BAR: char = '\u{0304}';

impl TrivectorLabel {
    pub fn from_mask(mask: u8) -> Result<TrivectorLabel> {
        if mask >> 6 != 0 || mask.count_ones() != 3 {
            return Err(Error::InvalidLabel(format!("mask {mask:#08b}")));
        }
        Ok(TrivectorLabel(mask))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    /// All 20 labels in mask order.
    pub fn all() -> impl Iterator<Item = TrivectorLabel> {
        (0u8..64).filter(|m| m.count_ones() == 3).map(TrivectorLabel)
    }

    /// Slot `μ` (1..=6) holds `i` when `μ = i ≤ 3` and `ī` when `μ = i + 3`.
    pub fn contains_slot(self, slot: usize) -> bool {
        self.0 >> (slot - 1) & 1 == 1
    }

    /// The overline involution, i.e. the complement.
    pub fn bar(self) -> TrivectorLabel {
        TrivectorLabel(!self.0 & 0b11_1111)
    }

    pub fn intersection_size(self, other: TrivectorLabel) -> u32 {
        (self.0 & other.0).count_ones()
    }

    pub fn barred_count(self) -> u32 {
        (self.0 >> 3).count_ones()
    }

    /// Positive slots of a weight of the 20.
    pub fn of_weight(w: &Weight) -> Result<TrivectorLabel> {
        if w.coords2.iter().any(|&c| c != 1 && c != -1) {
            return Err(Error::InvalidWeight(format!("{:?} is not a weight of the 20", w.coords2)));
        }
        TrivectorLabel::from_mask(
            w.coords2
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .fold(0, |m, (k, _)| m | 1 << k),
        )
    }

    pub fn weight(self) -> Weight {
        Weight {
            coords2: std::array::from_fn(|k| if self.0 >> k & 1 == 1 { 1 } else { -1 }),
        }
    }

    /// Symbols in display order: `123`; `ī` then the cyclic pair of the
    /// other two unbarred digits; `i` then the barred cyclic pair; `1̄2̄3̄`.
    fn symbols(self) -> [(u8, bool); 3] {
        let plain: Vec<u8> = (1..=3).filter(|&i| self.contains_slot(i as usize)).collect();
        let barred: Vec<u8> = (1..=3).filter(|&i| self.contains_slot(i as usize + 3)).collect();
        let cyclic = |v: &[u8]| -> [u8; 2] {
            // the pair missing k, read cyclically from k+1
            let k = 6 - v[0] - v[1];
            [k % 3 + 1, (k + 1) % 3 + 1]
        };
        match (plain.as_slice(), barred.as_slice()) {
            ([a, b, c], []) => [(*a, false), (*b, false), (*c, false)],
            ([], [a, b, c]) => [(*a, true), (*b, true), (*c, true)],
            (pair @ [_, _], [i]) => {
                let [x, y] = cyclic(pair);
                [(*i, true), (x, false), (y, false)]
            }
            ([i], pair @ [_, _]) => {
                let [x, y] = cyclic(pair);
                [(*i, false), (x, true), (y, true)]
            }
            _ => unreachable!("three symbols"),
        }
    }

    /// ASCII form with `-` before each barred digit, e.g. `-123`, `1-2-3`.
    pub fn machine(self) -> String {
        self.symbols()
            .iter()
            .map(|&(d, b)| if b { format!("-{d}") } else { d.to_string() })
            .collect()
    }
}

impl fmt::Display for TrivectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, b) in self.symbols() {
            write!(f, "{d}")?;
            if b {
                write!(f, "{BAR}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TrivectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.machine())
    }
}

/// Accepts digits in any order, each barred by a leading `-` or a trailing
/// combining macron.
impl FromStr for TrivectorLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<TrivectorLabel> {
        let bad = || Error::InvalidLabel(s.to_string());
        let mut mask = 0u8;
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let (digit, mut barred) = match c {
                '-' => (chars.next().ok_or_else(bad)?, true),
                d => (d, false),
            };
            if chars.peek() == Some(&BAR) {
                chars.next();
                barred = true;
            }
            let d = digit.to_digit(10).filter(|d| (1..=3).contains(d)).ok_or_else(bad)? as u8;
            let bit = 1u8 << (d - 1 + if barred { 3 } else { 0 });
            if mask & bit != 0 {
                return Err(bad());
            }
            mask |= bit;
        }
        TrivectorLabel::from_mask(mask).map_err(|_| bad())
    }
}

impl Serialize for TrivectorLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.machine())
    }
}
