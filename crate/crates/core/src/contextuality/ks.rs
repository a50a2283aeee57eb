//! Noncontextual value assignments.

use crate::contextuality::pentagram::Pentagram;

/// Tries every assignment of ±1 to the ten points and reports whether one
/// reproduces the sign of every line.
pub fn ks_assignment_exists(p: &Pentagram) -> bool {
    let points = p.points().to_vec();
    // bit k of a line mask marks points[k]; bit k of an assignment means -1
    let lines: Vec<(u32, bool)> = p
        .lines()
        .iter()
        .map(|l| {
            let mask = points
                .iter()
                .enumerate()
                .filter(|(_, x)| l.contains(**x))
                .fold(0u32, |m, (k, _)| m | 1 << k);
            (mask, l.is_negative())
        })
        .collect();
    (0u32..1 << points.len()).any(|v| lines.iter().all(|&(m, neg)| ((v & m).count_ones() % 2 == 1) == neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contextuality::pentagram::pentagrams_from_basis;
    use crate::pauli::SymplecticBasis;

    #[test]
    fn pentagram_admits_no_assignment() {
        let (a, b) = pentagrams_from_basis(&SymplecticBasis::canonical()).unwrap();
        assert!(!ks_assignment_exists(&a));
        assert!(!ks_assignment_exists(&b));
    }

    #[test]
    fn even_sign_pattern_admits_one() {
        let (a, _) = pentagrams_from_basis(&SymplecticBasis::canonical()).unwrap();
        for k in 0..5 {
            assert!(ks_assignment_exists(&a.with_flipped_line(k)));
        }
        let negative = a.lines().iter().position(|l| l.is_negative()).unwrap();
        let all_positive = a.with_flipped_line(negative);
        assert_eq!(all_positive.negative_lines(), 0);
        assert!(ks_assignment_exists(&all_positive));
    }
}
