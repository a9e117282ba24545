use num_traits::Zero;
use proptest::prelude::*;
use repstab::charpoly::{expectation, indicators_up_to, inner, CharacterPolynomial};
use repstab::modcalc::{
    categorify, coinvariants_dim, dual, hom_dim, hom_dim_via_coinvariants, ind_character, induction_oracle,
    module_character, subgroups, tensor, tensor_decompose, FiniteGSet, GroupElements, VirtualFreeModule,
};
use repstab::rational::{q, Q};
use repstab::symcore::{class_table, ClassFunction, MultiClass, SizeVector};
use repstab::Cutoffs;

fn sv(v: &[usize]) -> SizeVector {
    SizeVector::new(v.to_vec())
}

fn irreducibles(group: &SizeVector) -> Vec<ClassFunction> {
    repstab::symcore::character_table(group)
        .irreducibles
        .iter()
        .map(ClassFunction::irreducible)
        .collect()
}

fn test_sets(c: &SizeVector, cutoffs: &Cutoffs) -> Vec<FiniteGSet> {
    let mut sets = vec![
        FiniteGSet::point(c, cutoffs).unwrap(),
        FiniteGSet::regular(c, cutoffs).unwrap(),
    ];
    let elements = GroupElements::new(c, cutoffs).unwrap();
    if elements.len() <= 24 {
        for h in subgroups(&elements) {
            sets.push(FiniteGSet::cosets(c, &h, cutoffs).unwrap());
        }
    }
    sets
}

fn check_induction(c: &SizeVector, top: &SizeVector) {
    let cutoffs = Cutoffs::default();
    for y in test_sets(c, &cutoffs) {
        let poly = ind_character(&y.fixed_point_character());
        for d in SizeVector::boxed_range(&SizeVector::zero(c.arity()), top) {
            let oracle = induction_oracle(&y, &d, &cutoffs).unwrap();
            assert_eq!(poly.eval_on(&d).unwrap(), oracle, "c {c} d {d} |Y| {}", y.len());
        }
    }
}

#[test]
fn induction_formula_matches_oracle_one_coordinate() {
    for c in 0..=3 {
        check_induction(&sv(&[c]), &sv(&[5]));
    }
}

#[test]
fn induction_formula_matches_oracle_two_coordinates() {
    for c in SizeVector::boxed_range(&sv(&[0, 0]), &sv(&[3, 3])) {
        check_induction(&c, &sv(&[5, 5]));
    }
}

#[test]
fn ind_character_examples() {
    let x = ind_character(&ClassFunction::trivial(&sv(&[1])));
    assert_eq!(x, CharacterPolynomial::cycle_count(1, 0, 1));
    let reg = ind_character(&ClassFunction::regular(&sv(&[2])));
    let pairs = CharacterPolynomial::indicator(&MultiClass::from_parts(vec![vec![1, 1]]).unwrap());
    assert_eq!(reg, pairs.scale(&q(2)));
    let y = FiniteGSet::regular(&sv(&[2]), &Cutoffs::default()).unwrap();
    let at_four = induction_oracle(&y, &sv(&[4]), &Cutoffs::default()).unwrap();
    assert_eq!(at_four.value(&MultiClass::identity(&sv(&[4]))), Some(&q(12)));
}

fn check_tensor(chi_v: &ClassFunction, chi_w: &ClassFunction) {
    let m = tensor_decompose(chi_v, chi_w, &Cutoffs::default()).unwrap();
    let (c1, c2) = (chi_v.group(), chi_w.group());
    for s in m.summands() {
        assert!(c1.join(c2).le_all(s.degree()) && s.degree().le_all(&(c1 + c2)));
    }
    let total = module_character(&m);
    let a = ind_character(chi_v);
    let b = ind_character(chi_w);
    let top = (c1 + c2).plus_each(1);
    for g in SizeVector::boxed_range(&SizeVector::zero(c1.arity()), &top) {
        for nu in class_table(&g).classes.iter() {
            assert_eq!(total.eval(nu), a.eval(nu) * b.eval(nu), "{c1} x {c2} at {nu}");
        }
    }
}

#[test]
fn tensor_character_identity_one_coordinate() {
    for c1 in 0..=3 {
        for c2 in c1..=3 {
            for v in irreducibles(&sv(&[c1])) {
                for w in irreducibles(&sv(&[c2])) {
                    check_tensor(&v, &w);
                }
            }
        }
    }
}

#[test]
fn tensor_character_identity_two_coordinates() {
    for c1 in SizeVector::boxed_range(&sv(&[0, 0]), &sv(&[2, 1])) {
        for c2 in SizeVector::boxed_range(&sv(&[0, 0]), &sv(&[1, 2])) {
            for v in irreducibles(&c1) {
                for w in irreducibles(&c2) {
                    check_tensor(&v, &w);
                }
            }
        }
    }
}

#[test]
fn fixed_points_tensor_itself() {
    let triv = ClassFunction::trivial(&sv(&[1]));
    let m = tensor_decompose(&triv, &triv, &Cutoffs::default()).unwrap();
    let want = VirtualFreeModule::induced(triv.clone())
        .sum(&VirtualFreeModule::induced(ClassFunction::regular(&sv(&[2]))))
        .unwrap();
    assert_eq!(m, want);
}

#[test]
fn dual_examples() {
    let sign = VirtualFreeModule::induced(ClassFunction::sign(&sv(&[2])));
    assert_eq!(dual(&sign), sign);
    let x = VirtualFreeModule::induced(ClassFunction::trivial(&sv(&[1])));
    let m = sign.sum(&x.scale(&q(3))).unwrap();
    assert_eq!(dual(&dual(&m)), m);
    let n = VirtualFreeModule::induced(ClassFunction::trivial(&sv(&[2])));
    for d in 0..=6 {
        let d = sv(&[d]);
        let lhs = expectation(
            &module_character(&dual(&m)).multiply(&module_character(&n)).unwrap(),
            &d,
        )
        .unwrap();
        assert_eq!(lhs, inner(&module_character(&m), &module_character(&n), &d).unwrap());
    }
}

#[test]
fn hom_examples() {
    let x = VirtualFreeModule::induced(ClassFunction::trivial(&sv(&[1])));
    let pairs = VirtualFreeModule::induced(ClassFunction::trivial(&sv(&[2])));
    assert_eq!(hom_dim(&x, &x, &sv(&[2])).unwrap(), q(2));
    assert!(hom_dim(&x, &VirtualFreeModule::zero(1), &sv(&[4])).unwrap().is_zero());
    for d in [3, 4] {
        assert_eq!(hom_dim(&x, &pairs, &sv(&[d])).unwrap(), q(2));
    }
}

fn arb_genuine(top: Vec<usize>) -> impl Strategy<Value = VirtualFreeModule> {
    let arity = top.len();
    let pieces: Vec<ClassFunction> = SizeVector::boxed_range(&SizeVector::zero(arity), &SizeVector::new(top))
        .iter()
        .flat_map(irreducibles)
        .collect();
    let n = pieces.len();
    proptest::collection::vec((0..n, 1i64..=2), 1..4).prop_map(move |picks| {
        VirtualFreeModule::from_summands(arity, picks.into_iter().map(|(i, c)| (q(c), pieces[i].clone()))).unwrap()
    })
}

fn arb_virtual(top: Vec<usize>) -> impl Strategy<Value = VirtualFreeModule> {
    (arb_genuine(top.clone()), arb_genuine(top)).prop_map(|(a, b)| a.sum(&b.scale(&q(-1))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn categorify_round_trip(picks in proptest::collection::vec((0usize..23, -4i64..=4), 0..6)) {
        let basis = indicators_up_to(&sv(&[3]));
        let p = CharacterPolynomial::from_terms(1, picks.into_iter().map(|(i, c)| (basis[i % basis.len()].clone(), q(c)))).unwrap();
        prop_assert_eq!(module_character(&categorify(&p)), p);
    }

    #[test]
    fn categorify_round_trip_two_coordinates(picks in proptest::collection::vec((0usize..100, -4i64..=4), 0..6)) {
        let basis = indicators_up_to(&sv(&[2, 2]));
        let p = CharacterPolynomial::from_terms(2, picks.into_iter().map(|(i, c)| (basis[i % basis.len()].clone(), q(c)))).unwrap();
        prop_assert_eq!(module_character(&categorify(&p)), p);
    }

    #[test]
    fn coinvariants_stabilize_and_match_expectation(m in arb_genuine(vec![3])) {
        let chi = module_character(&m);
        let deg = m.degree().coords()[0];
        let mut last = Q::zero();
        for d in 0..=7 {
            let d = sv(&[d]);
            let value = coinvariants_dim(&m, &d).unwrap();
            prop_assert!(value >= last);
            prop_assert_eq!(&value, &expectation(&chi, &d).unwrap());
            let one = CharacterPolynomial::one(1);
            prop_assert_eq!(&value, &inner(&chi, &one, &d).unwrap());
            last = value;
        }
        let stable = coinvariants_dim(&m, &sv(&[deg])).unwrap();
        for d in deg..=7 {
            prop_assert_eq!(coinvariants_dim(&m, &sv(&[d])).unwrap(), stable.clone());
        }
    }

    #[test]
    fn coinvariants_two_coordinates(m in arb_genuine(vec![2, 2])) {
        let chi = module_character(&m);
        for d in SizeVector::boxed_range(&sv(&[0, 0]), &sv(&[4, 4])) {
            prop_assert_eq!(coinvariants_dim(&m, &d).unwrap(), expectation(&chi, &d).unwrap());
        }
        let stable = coinvariants_dim(&m, &m.degree()).unwrap();
        for d in SizeVector::boxed_range(&m.degree(), &sv(&[4, 4])) {
            prop_assert_eq!(coinvariants_dim(&m, &d).unwrap(), stable.clone());
        }
    }

    #[test]
    fn hom_routes_agree_and_stabilize(m in arb_virtual(vec![2]), n in arb_virtual(vec![2])) {
        let cutoffs = Cutoffs::default();
        let start = (&m.degree() + &n.degree()).coords()[0];
        let stable = hom_dim(&m, &n, &sv(&[start])).unwrap();
        for d in 0..=6 {
            let d = sv(&[d]);
            prop_assert_eq!(hom_dim(&m, &n, &d).unwrap(), hom_dim_via_coinvariants(&m, &n, &d, &cutoffs).unwrap());
        }
        for d in start..=7 {
            prop_assert_eq!(hom_dim(&m, &n, &sv(&[d])).unwrap(), stable.clone());
        }
    }

    #[test]
    fn tensor_is_bilinear_on_characters(m in arb_virtual(vec![2, 1]), n in arb_virtual(vec![1, 1])) {
        let t = tensor(&m, &n, &Cutoffs::default()).unwrap();
        let want = module_character(&m).multiply(&module_character(&n)).unwrap();
        prop_assert_eq!(module_character(&t), want);
    }
}
