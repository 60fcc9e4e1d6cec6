use std::sync::LazyLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use qtriangle::cycle::{roundtrip_holds, to_cycle_data};
use qtriangle::qt::plus_minus_homomorphisms;
use qtriangle::ybe::{conjugate_form_check, is_permutation, star_product};
use qtriangle::*;

static FACTORIZATIONS: LazyLock<Vec<UniqueFactorization>> = LazyLock::new(|| {
    standard_catalog(12)
        .iter()
        .flat_map(|name| find_factorizations(&catalog_group(name).unwrap()).unwrap())
        .collect()
});

static PAIRS: LazyLock<Vec<(usize, QtPair)>> = LazyLock::new(|| {
    FACTORIZATIONS.iter().enumerate().flat_map(|(i, f)| classify(f).into_iter().map(move |p| (i, p))).collect()
});

fn factorization() -> impl Strategy<Value = &'static UniqueFactorization> {
    (0..FACTORIZATIONS.len()).prop_map(|i| &FACTORIZATIONS[i])
}

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn combination(dim: usize, terms: &[(usize, i64, i64)]) -> TensorElement {
    TensorElement::from_terms(1, terms.iter().map(|&(g, n, d)| (vec![g % dim], rational(n, d))))
}

fn coeffs() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    proptest::collection::vec((0usize..1000, -9i64..10, 1i64..6), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parts_recombine(f in factorization(), seed in 0usize..1000) {
        let g = seed % f.order();
        let (u, x) = f.pm(g);
        prop_assert!(f.plus().contains(u) && f.minus().contains(x));
        prop_assert_eq!(f.mul(u, x), g);
        let (y, w) = f.mp(g);
        prop_assert!(f.minus().contains(y) && f.plus().contains(w));
        prop_assert_eq!(f.mul(y, w), g);
        prop_assert_eq!((f.bar_minus(g), f.bar_plus(g)), (y, w));
    }

    #[test]
    fn actions_factor_products(f in factorization(), a in 0usize..1000, b in 0usize..1000) {
        let x = f.minus().elements()[a % f.minus().len()];
        let u = f.plus().elements()[b % f.plus().len()];
        prop_assert_eq!(f.mul(x, u), f.mul(f.act_lmp(x, u), f.act_rmp(x, u)));
        prop_assert_eq!(f.mul(u, x), f.mul(f.act_lpm(u, x), f.act_rpm(u, x)));
    }

    #[test]
    fn antipode_reverses_products(f in factorization(), a in 0usize..1000, b in 0usize..1000) {
        let h = build_hopf(f);
        let (a, b) = (a % h.dim(), b % h.dim());
        let s = |t: &TensorElement| h.slot_map(t, 0, StructureMap::Antipode).unwrap();
        let (ea, eb) = (TensorElement::basis(vec![a]), TensorElement::basis(vec![b]));
        let lhs = s(&h.product(&ea, &eb).unwrap());
        let rhs = h.product(&s(&eb), &s(&ea)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_is_associative_on_combinations(f in factorization(), x in coeffs(), y in coeffs(), z in coeffs()) {
        let h = build_hopf(f);
        let (x, y, z) = (combination(h.dim(), &x), combination(h.dim(), &y), combination(h.dim(), &z));
        let left = h.product(&h.product(&x, &y).unwrap(), &z).unwrap();
        let right = h.product(&x, &h.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(h.product(&h.unit_k(1), &x).unwrap(), x);
    }

    #[test]
    fn coproduct_is_multiplicative_on_combinations(f in factorization(), x in coeffs(), y in coeffs()) {
        let h = build_hopf(f);
        let (x, y) = (combination(h.dim(), &x), combination(h.dim(), &y));
        let delta = |t: &TensorElement| h.slot_map(t, 0, StructureMap::Coproduct).unwrap();
        prop_assert_eq!(delta(&h.product(&x, &y).unwrap()), h.product(&delta(&x), &delta(&y)).unwrap());
    }

    #[test]
    fn condition_routes_agree(f in factorization(), i in 0usize..1000, j in 0usize..1000) {
        let homs = plus_minus_homomorphisms(f);
        let (xi, eta) = (&homs[i % homs.len()], &homs[j % homs.len()]);
        let report = check_pair_conditions(f, xi, eta).unwrap();
        prop_assert!(report.is_consistent(), "{:?}", report);
        prop_assert_eq!(build_r(f, xi, eta).is_ok(), report.primary_pass());
    }

    #[test]
    fn classified_pairs_carry_their_invariants(k in 0usize..10_000) {
        let (i, p) = &PAIRS[k % PAIRS.len()];
        let f = &FACTORIZATIONS[*i];
        let sol = set_solution(f, &p.xi, &p.eta).unwrap();
        prop_assert!(is_permutation(&sol.map));
        prop_assert_eq!(star_product(f, &p.xi).unwrap().order(), f.plus().len());
        let cd = to_cycle_data(f, &p.xi, &p.eta).unwrap();
        prop_assert_eq!(cd.validate().unwrap().order(), f.order());
        prop_assert!(roundtrip_holds(f, &p.xi, &p.eta).unwrap());
        let nf = normalize_qt(f, &p.xi, &p.eta).unwrap();
        prop_assert!(conjugate_form_check(&nf.uf, &nf.eta).unwrap());
        prop_assert_eq!(nf.uf.order(), f.order());
    }

    #[test]
    fn group_files_round_trip(k in 0usize..1000) {
        let names = standard_catalog(16);
        let g = catalog_group(&names[k % names.len()]).unwrap();
        let text = serde_json::to_string(&g.to_file()).unwrap();
        let back = FiniteGroup::from_json(&text).unwrap();
        prop_assert_eq!(back.rows(), g.rows());
        prop_assert_eq!(back.name(), g.name());
    }
}
