use proptest::prelude::*;

use veldkamp::contextuality::PentagramCatalog;
use veldkamp::dense::dense_product;
use veldkamp::polar::{PolarSpace, VeldkampLine};
use veldkamp::weights::TrivectorLabel;
use veldkamp::{Pauli, PhasedPauli, PointSet, SymplecticMap};

fn pauli() -> impl Strategy<Value = Pauli> {
    (0u8..64).prop_map(|b| Pauli::from_bits(b).unwrap())
}

fn point() -> impl Strategy<Value = Pauli> {
    (1u8..64).prop_map(|b| Pauli::from_bits(b).unwrap())
}

fn phased() -> impl Strategy<Value = PhasedPauli> {
    (0u8..4, pauli()).prop_map(|(t, v)| PhasedPauli::new(t, v))
}

/// Products of transvections reach all of Sp(6,2).
fn symplectic_map() -> impl Strategy<Value = SymplecticMap> {
    prop::collection::vec(point(), 1..8).prop_map(|ps| {
        ps.into_iter()
            .fold(SymplecticMap::IDENTITY, |acc, p| SymplecticMap::transvection(p) * acc)
    })
}

proptest! {
    #[test]
    fn multiply_agrees_with_dense_matrices(a in phased(), b in phased()) {
        let fast = a * b;
        let (k, v) = dense_product(a, b).unwrap();
        prop_assert_eq!(v, fast.vector);
        prop_assert_eq!(k, fast.sign_relative_to_canonical().exponent());
    }

    #[test]
    fn multiply_is_associative(a in phased(), b in phased(), c in phased()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
    }

    #[test]
    fn commutation_is_the_symplectic_form(a in pauli(), b in pauli()) {
        let (x, y) = (PhasedPauli::hermitian(a), PhasedPauli::hermitian(b));
        let ab = (x * y).sign_relative_to_canonical().exponent();
        let ba = (y * x).sign_relative_to_canonical().exponent();
        prop_assert_eq!(ab == ba, !a.symplectic(b));
    }

    #[test]
    fn transvections_are_symplectic_involutions(p in point(), x in pauli(), y in pauli()) {
        let t = SymplecticMap::transvection(p);
        prop_assert!(t.is_involution());
        prop_assert_eq!(t.apply(t.apply(x)), x);
        prop_assert_eq!(t.apply(x).symplectic(t.apply(y)), x.symplectic(y));
        prop_assert_eq!(t.apply(p), p);
    }

    #[test]
    fn symplectic_maps_preserve_the_catalogs(s in symplectic_map()) {
        prop_assert!(s.is_symplectic());
        let space = PolarSpace::get();
        let line = space.lines()[0].mask().map(|x| s.apply(x));
        prop_assert_eq!(space.lines_within(line).len(), 1);
        for h in space.hyperplanes().iter().step_by(11) {
            prop_assert!(h.transform(&s).is_ok());
        }
        let image = VeldkampLine::canonical().transform(&s).unwrap();
        prop_assert!(image.blocks().is_ok());
        let cat = PentagramCatalog::get();
        let pg = cat.pentagrams()[0].transform(&s).unwrap();
        prop_assert!(cat.index_of(&pg).is_some());
    }

    #[test]
    fn point_set_algebra(a in any::<u64>(), b in any::<u64>()) {
        let (a, b) = (PointSet::from_mask(a & !1), PointSet::from_mask(b & !1));
        prop_assert_eq!(a.union(b).len() + a.intersection(b).len(), a.len() + b.len());
        prop_assert_eq!(a.symmetric_difference(b), a.union(b).difference(a.intersection(b)));
        prop_assert_eq!(a.iter().collect::<PointSet>(), a);
    }

    #[test]
    fn trivector_labels_round_trip(m in (0u8..64).prop_filter("three slots", |m| m.count_ones() == 3)) {
        let l = TrivectorLabel::from_mask(m).unwrap();
        prop_assert_eq!(l.machine().parse::<TrivectorLabel>().unwrap(), l);
        prop_assert_eq!(l.to_string().parse::<TrivectorLabel>().unwrap(), l);
        prop_assert_eq!(l.bar().bar(), l);
        prop_assert_eq!(l.intersection_size(l.bar()), 0);
    }
}
