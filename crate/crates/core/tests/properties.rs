use amenability_core::constants::{ad_constant, improved_upper_bound, johnson_constant};
use amenability_core::fourier::fourier_algebra_norm;
use amenability_core::group::{direct_product, parse_cayley_json, CayleyFile};
use amenability_core::irreps::family_irreps;
use amenability_core::{
    degree_spectrum, parse_family_expression, FamilyExpression, FiniteGroup, Function, Irrep, Rational,
};
use num_complex::Complex;
use proptest::prelude::*;
use proptest::sample::Index;

fn atom() -> impl Strategy<Value = FamilyExpression> {
    use FamilyExpression::*;
    prop_oneof![
        (1u64..=12).prop_map(Cyclic),
        (1u64..=10).prop_map(Dihedral),
        Just(Quaternion),
        (2u64..=4).prop_map(Heisenberg),
        prop_oneof![Just((2, 1)), Just((2, 2)), Just((3, 1))].prop_map(|(p, n)| ReducedHeisenberg(p, n)),
    ]
}

/// Atoms and products of two atoms, order at most 128.
fn expression() -> impl Strategy<Value = FamilyExpression> {
    prop_oneof![
        atom(),
        (atom(), atom())
            .prop_filter("order at most 128", |(a, b)| a.order() * b.order() <= 128)
            .prop_map(|(a, b)| FamilyExpression::product(a, b)),
    ]
}

fn group() -> impl Strategy<Value = (FamilyExpression, FiniteGroup)> {
    expression().prop_map(|e| {
        let g = e.build().unwrap();
        (e, g)
    })
}

fn complex_values(n: usize) -> impl Strategy<Value = Vec<Complex<f64>>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| Complex::new(a, b)), n)
}

/// A group with its irreducibles and two random functions on it.
fn fourier_input() -> impl Strategy<Value = (FiniteGroup, Vec<Irrep>, Function, Function)> {
    atom().prop_filter("order at most 64", |e| e.order() <= 64).prop_flat_map(|e| {
        let g = e.build().unwrap();
        let irreps = family_irreps::<f64>(&e).unwrap();
        let n = g.order();
        (Just(g), Just(irreps), complex_values(n), complex_values(n))
            .prop_map(|(g, i, a, b)| (g, i, Function::new(a), Function::new(b)))
    })
}

fn divides(a: usize, b: usize) -> bool {
    b.is_multiple_of(a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expressions_round_trip((e, _) in group()) {
        prop_assert_eq!(parse_family_expression(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn relabelling_preserves_invariants((_, g) in group(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(h.center().order(), g.center().order());
        prop_assert_eq!(h.commutator_subgroup().order(), g.commutator_subgroup().order());
        prop_assert_eq!(h.conjugacy_classes().sizes(), g.conjugacy_classes().sizes());
        prop_assert_eq!(degree_spectrum(&h).unwrap(), degree_spectrum(&g).unwrap());
        let mapped: Vec<usize> = g.center().members().iter().map(|&z| perm[z]).collect();
        prop_assert!(mapped.iter().all(|&z| h.center().contains(z)));
    }

    #[test]
    fn lagrange((_, g) in group(), picks in prop::collection::vec(any::<Index>(), 0..3)) {
        let gens: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let h = g.subgroup_generated(&gens);
        prop_assert!(divides(h.order(), g.order()));
        prop_assert!(divides(g.center().order(), g.order()));
        prop_assert!(divides(g.commutator_subgroup().order(), g.order()));
        for &x in &gens {
            prop_assert!(divides(g.element_order(x), g.exponent()));
        }
    }

    #[test]
    fn abelianization_is_abelian((_, g) in group()) {
        let k = g.commutator_subgroup();
        let (quotient, _) = g.quotient(&k).unwrap();
        prop_assert!(quotient.is_abelian());
        prop_assert_eq!(degree_spectrum(&g).unwrap().linear_count() as usize, quotient.order());
    }

    #[test]
    fn spectrum_invariants((_, g) in group()) {
        let s = degree_spectrum(&g).unwrap();
        prop_assert_eq!(s.group_order() as usize, g.order());
        prop_assert_eq!(s.irreducible_count() as usize, g.conjugacy_classes().len());
        for &(d, _) in s.entries() {
            prop_assert!(divides(d as usize, g.order()));
            prop_assert!(d * d <= g.center().index() as u64);
        }
    }

    #[test]
    fn subgroup_degrees_do_not_grow((_, g) in group(), picks in prop::collection::vec(any::<Index>(), 1..3)) {
        let gens: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let h = g.subgroup_as_group(&g.subgroup_generated(&gens));
        prop_assert!(degree_spectrum(&h).unwrap().maxdeg() <= degree_spectrum(&g).unwrap().maxdeg());
    }

    #[test]
    fn constant_chain((_, g) in group()) {
        let s = degree_spectrum(&g).unwrap();
        let am: Rational = johnson_constant(&s);
        let improved: Rational = improved_upper_bound(&s, g.commutator_subgroup().order() as u64);
        prop_assert_eq!(&am, &ad_constant::<i128>(&s));
        prop_assert!(Rational::from_integer(1) <= am && am <= improved);
        prop_assert!(improved <= Rational::from_integer(s.maxdeg() as i128));
        if !g.is_abelian() {
            prop_assert!(am >= Rational::new(3, 2));
        }
    }

    #[test]
    fn abelian_factor_invariance((_, g) in group(), n in 1u64..=6) {
        let s = degree_spectrum(&g).unwrap();
        let product = direct_product(&g, &FamilyExpression::Cyclic(n).build().unwrap()).unwrap();
        let sp = degree_spectrum(&product).unwrap();
        prop_assert_eq!(johnson_constant::<i128>(&sp), johnson_constant::<i128>(&s));
        prop_assert_eq!(sp, s.product(&degree_spectrum(&FamilyExpression::Cyclic(n).build().unwrap()).unwrap()));
    }

    #[test]
    fn cayley_json_round_trip((_, g) in group()) {
        let text = serde_json::to_string(&CayleyFile::from_group(&g)).unwrap();
        prop_assert_eq!(parse_cayley_json(&text).unwrap().table_rows(), g.table_rows());
    }

    #[test]
    fn fourier_norm_properties((g, irreps, f, h) in fourier_input(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let norm = |x: &Function| fourier_algebra_norm(&g, &irreps, x).unwrap();
        let (nf, nh) = (norm(&f), norm(&h));
        let c = Complex::new(re, im);
        let tol = 1e-9 * (1.0 + nf + nh);
        prop_assert!((norm(&f.scale(c)) - c.norm() * nf).abs() <= tol * (1.0 + c.norm()));
        prop_assert!(norm(&f.add(&h)) <= nf + nh + tol);
        prop_assert!(norm(&f.pointwise(&h)) <= nf * nh + tol * (1.0 + nf * nh));
        prop_assert!(f.sup_norm() <= nf + tol);
        prop_assert!(nf <= f.l1_norm() + tol);
    }
}
