use num_traits::{One, Zero};
use proptest::prelude::*;
use repstab::charpoly::{
    eval_indicator, expectation, from_xk, indicator_matrix, indicators_up_to, inner, multiply_via_xk,
    single_group_matrix, stable_expectation, stable_inner, to_xk, CharacterPolynomial,
};
use repstab::ficombinat::{indicator_oracle, MultiPermutation, Permutation};
use repstab::rational::{q, q_frac, Q};
use repstab::symcore::{class_table, MultiClass, Partition, SizeVector};
use repstab::Cutoffs;

fn sv(v: &[usize]) -> SizeVector {
    SizeVector::new(v.to_vec())
}

fn ind(parts: &[usize]) -> CharacterPolynomial {
    CharacterPolynomial::indicator(&MultiClass::single(Partition::new(parts.to_vec()).unwrap()))
}

fn cycles_of_length(p: &Permutation, k: usize) -> usize {
    p.cycles().iter().filter(|c| c.len() == k).count()
}

#[test]
fn closed_form_matches_oracle_single_coordinate() {
    let cutoffs = Cutoffs::default();
    for n in 0..=5 {
        for nu in class_table(&sv(&[n])).classes.iter() {
            let sigma = MultiPermutation::of_class(nu);
            for mu in indicators_up_to(&sv(&[5])) {
                let oracle = indicator_oracle(&mu, &sigma, &cutoffs).unwrap();
                assert_eq!(eval_indicator(&mu, nu), q(oracle as i64), "mu {mu} nu {nu}");
            }
        }
    }
}

#[test]
fn closed_form_matches_oracle_two_coordinates() {
    let cutoffs = Cutoffs::default();
    for group in SizeVector::boxed_range(&sv(&[0, 0]), &sv(&[3, 3])) {
        for nu in class_table(&group).classes.iter() {
            let sigma = MultiPermutation::of_class(nu);
            for mu in indicators_up_to(&sv(&[3, 3])) {
                let oracle = indicator_oracle(&mu, &sigma, &cutoffs).unwrap();
                assert_eq!(eval_indicator(&mu, nu), q(oracle as i64), "mu {mu} nu {nu}");
            }
        }
    }
}

#[test]
fn spec_style_indicator_values() {
    let nu = MultiClass::from_parts(vec![vec![2, 2]]).unwrap();
    assert_eq!(
        eval_indicator(&MultiClass::from_parts(vec![vec![2]]).unwrap(), &nu),
        q(2)
    );
    let nu = MultiClass::from_parts(vec![vec![1, 1, 1]]).unwrap();
    assert_eq!(
        eval_indicator(&MultiClass::from_parts(vec![vec![1, 1]]).unwrap(), &nu),
        q(3)
    );
}

#[test]
fn basis_soundness_up_to_four() {
    for bound in SizeVector::boxed_range(&sv(&[0]), &sv(&[4]))
        .into_iter()
        .chain(SizeVector::boxed_range(&sv(&[0, 0]), &sv(&[4, 4])))
    {
        let m = indicator_matrix(&bound);
        assert_eq!(m.rank(), m.indicators.len(), "bound {bound:?}");
    }
}

#[test]
fn top_group_alone_is_rank_deficient() {
    for n in 2..=4 {
        let m = single_group_matrix(&sv(&[n]));
        assert!(m.rank() < m.indicators.len());
    }
}

#[test]
fn binomial_product_identity() {
    // X * C(X, k) = (k+1) C(X, k+1) + k C(X, k)
    let x = ind(&[1]);
    for k in 1..=4 {
        let ones = |j| ind(&vec![1; j]);
        let want = &ones(k + 1).scale(&q(k as i64 + 1)) + &ones(k).scale(&q(k as i64));
        assert_eq!(x.multiply(&ones(k)).unwrap(), want);
    }
}

#[test]
fn x1_squared_on_s3_s4() {
    let x = ind(&[1]);
    let square = x.multiply(&x).unwrap();
    for n in [3, 4] {
        for p in Permutation::all(n) {
            let fixed = cycles_of_length(&p, 1);
            assert_eq!(
                square.eval(&MultiClass::single(p.cycle_type())),
                q((fixed * fixed) as i64)
            );
        }
    }
}

#[test]
fn cycle_counter_expectations_by_brute_force() {
    for n in 1..=7 {
        let perms = Permutation::all(n);
        for k in 1..=n {
            let total: usize = perms.iter().map(|p| cycles_of_length(p, k)).sum();
            let brute = q_frac(total as i64, perms.len() as i64);
            assert_eq!(brute, q_frac(1, k as i64));
            assert_eq!(expectation(&ind(&[k]), &sv(&[n])).unwrap(), brute);
        }
    }
}

#[test]
fn indicator_expectation_is_class_density() {
    for k in 1..=4 {
        for mu in class_table(&sv(&[k])).classes.iter() {
            let p = CharacterPolynomial::indicator(mu);
            let density = repstab::rational::q_from_uint(&mu.class_size())
                / repstab::rational::q_from_uint(&SizeVector::new(vec![k]).group_order());
            assert_eq!(stable_expectation(&p).unwrap(), density);
            for n in k..=6 {
                assert_eq!(expectation(&p, &sv(&[n])).unwrap(), density);
            }
        }
    }
}

#[test]
fn fixed_point_inner_product_by_brute_force() {
    let x = ind(&[1]);
    for n in 2..=7 {
        let perms = Permutation::all(n);
        let total: usize = perms.iter().map(|p| cycles_of_length(p, 1).pow(2)).sum();
        assert_eq!(q_frac(total as i64, perms.len() as i64), q(2));
        assert_eq!(inner(&x, &x, &sv(&[n])).unwrap(), q(2));
    }
    assert_eq!(stable_inner(&x, &x).unwrap(), q(2));
}

#[test]
fn two_coordinate_inner_product_by_brute_force() {
    let a = CharacterPolynomial::cycle_count(2, 0, 1);
    let b = CharacterPolynomial::cycle_count(2, 1, 1);
    let g = sv(&[2, 2]);
    let elems = MultiPermutation::all(&g, &Cutoffs::default()).unwrap();
    let total: usize = elems
        .iter()
        .map(|s| cycles_of_length(&s.coords()[0], 1) * cycles_of_length(&s.coords()[1], 1))
        .sum();
    assert_eq!(q_frac(total as i64, elems.len() as i64), q(1));
    assert_eq!(inner(&a, &b, &g).unwrap(), q(1));
}

fn arb_poly(bound: Vec<usize>) -> impl Strategy<Value = CharacterPolynomial> {
    let arity = bound.len();
    let basis = indicators_up_to(&SizeVector::new(bound));
    let n = basis.len();
    proptest::collection::vec((0..n, -3i64..=3), 0..5).prop_map(move |picks| {
        CharacterPolynomial::from_terms(arity, picks.into_iter().map(|(i, c)| (basis[i].clone(), q(c)))).unwrap()
    })
}

fn le(a: &SizeVector, b: &SizeVector) -> bool {
    a.le_all(b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn product_ring_laws_one_coordinate(p in arb_poly(vec![2]), r in arb_poly(vec![2]), s in arb_poly(vec![2])) {
        let pr = p.multiply(&r).unwrap();
        prop_assert_eq!(&pr, &r.multiply(&p).unwrap());
        prop_assert_eq!(pr.multiply(&s).unwrap(), p.multiply(&r.multiply(&s).unwrap()).unwrap());
        prop_assert_eq!(p.multiply(&(&r + &s)).unwrap(), &pr + &p.multiply(&s).unwrap());
        prop_assert!(le(&pr.degree(), &(&p.degree() + &r.degree())));
        prop_assert_eq!(&pr, &multiply_via_xk(&p, &r).unwrap());
    }

    #[test]
    fn product_ring_laws_two_coordinates(p in arb_poly(vec![2, 2]), r in arb_poly(vec![2, 2]), s in arb_poly(vec![1, 1])) {
        let pr = p.multiply(&r).unwrap();
        prop_assert_eq!(&pr, &r.multiply(&p).unwrap());
        prop_assert_eq!(pr.multiply(&s).unwrap(), p.multiply(&r.multiply(&s).unwrap()).unwrap());
        prop_assert_eq!(p.multiply(&(&r + &s)).unwrap(), &pr + &p.multiply(&s).unwrap());
        prop_assert!(le(&pr.degree(), &(&p.degree() + &r.degree())));
        prop_assert_eq!(&pr, &multiply_via_xk(&p, &r).unwrap());
    }

    #[test]
    fn product_is_pointwise_everywhere(p in arb_poly(vec![2, 1]), r in arb_poly(vec![1, 2])) {
        let pr = p.multiply(&r).unwrap();
        let top = (&p.degree() + &r.degree()).plus_each(2);
        for g in SizeVector::boxed_range(&SizeVector::zero(2), &top) {
            for nu in class_table(&g).classes.iter() {
                prop_assert_eq!(pr.eval(nu), p.eval(nu) * r.eval(nu));
            }
        }
    }

    #[test]
    fn xk_round_trip(p in arb_poly(vec![3, 2])) {
        let x = to_xk(&p);
        prop_assert_eq!(x.degree(), p.degree());
        prop_assert_eq!(from_xk(&x), p.clone());
        for g in SizeVector::boxed_range(&SizeVector::zero(2), &p.degree().plus_each(2)) {
            for nu in class_table(&g).classes.iter() {
                prop_assert_eq!(x.eval(nu), p.eval(nu));
            }
        }
    }

    #[test]
    fn stabilization_one_coordinate(p in arb_poly(vec![3]), r in arb_poly(vec![3])) {
        let start = &p.degree() + &r.degree();
        let stable = inner(&p, &r, &start).unwrap();
        for n in start.coords()[0]..=8 {
            prop_assert_eq!(inner(&p, &r, &sv(&[n])).unwrap(), stable.clone());
        }
        let e = stable_expectation(&p).unwrap();
        for n in p.degree().coords()[0]..=8 {
            prop_assert_eq!(expectation(&p, &sv(&[n])).unwrap(), e.clone());
        }
    }

    #[test]
    fn stabilization_two_coordinates(p in arb_poly(vec![2, 2]), r in arb_poly(vec![2, 2])) {
        let start = &p.degree() + &r.degree();
        let stable = stable_inner(&p, &r).unwrap();
        for g in SizeVector::boxed_range(&start, &sv(&[6, 6])) {
            prop_assert_eq!(inner(&p, &r, &g).unwrap(), stable.clone());
        }
        let e = stable_expectation(&p).unwrap();
        for g in SizeVector::boxed_range(&p.degree(), &sv(&[5, 5])) {
            prop_assert_eq!(expectation(&p, &g).unwrap(), e.clone());
        }
    }

    #[test]
    fn oracle_agrees_on_sampled_pairs(mu in arb_class(vec![3, 3]), g in (0usize..=5, 0usize..=5), pick in any::<prop::sample::Index>()) {
        let group = sv(&[g.0, g.1]);
        let table = class_table(&group);
        let nu = &table.classes[pick.index(table.len())];
        let sigma = MultiPermutation::of_class(nu);
        let oracle = indicator_oracle(&mu, &sigma, &Cutoffs::default()).unwrap();
        prop_assert_eq!(eval_indicator(&mu, nu), q(oracle as i64));
    }
}

fn arb_class(bound: Vec<usize>) -> impl Strategy<Value = MultiClass> {
    let basis = indicators_up_to(&SizeVector::new(bound));
    prop::sample::select(basis)
}

#[test]
fn expectations_of_genuine_characters_grow() {
    // X1, X1^2 and the characters of Ind_2(trivial), Ind_2(sign).
    let x = ind(&[1]);
    let chars = [
        x.clone(),
        x.multiply(&x).unwrap(),
        &ind(&[1, 1]) + &ind(&[2]),
        &ind(&[1, 1]) - &ind(&[2]),
    ];
    for p in &chars {
        let mut last = Q::zero();
        for n in 0..=7 {
            let e = expectation(p, &sv(&[n])).unwrap();
            assert!(e.is_integer() && e >= Q::zero());
            assert!(e >= last);
            last = e;
        }
        for r in &chars {
            let mut last = Q::zero();
            for n in 0..=7 {
                let v = inner(p, r, &sv(&[n])).unwrap();
                assert!(v.is_integer() && v >= last, "{p} | {r} | n={n} v={v} last={last}");
                last = v;
            }
        }
    }
    assert!(stable_expectation(&CharacterPolynomial::one(1)).unwrap().is_one());
}
