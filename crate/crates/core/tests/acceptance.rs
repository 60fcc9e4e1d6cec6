//! End-to-end acceptance checks. Runs without the libtest harness so that
//! one line per criterion is always printed.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use qtriangle::cycle::roundtrip_holds;
use qtriangle::double::{check_double_cycle_data, double_cocycle};
use qtriangle::groupoid::{check_groupoid_ybe, gamma_set_solution, support};
use qtriangle::qt::{
    oracle_space_size, pair_conditions_hold, plus_minus_homomorphisms, trivial_homomorphism,
};
use qtriangle::twist::cocycle_holds;
use qtriangle::ybe::{star_product, ybe_failure};
use qtriangle::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn factorizations_up_to(max_order: usize) -> Vec<UniqueFactorization> {
    standard_catalog(max_order)
        .iter()
        .flat_map(|name| find_factorizations(&catalog_group(name).unwrap()).unwrap())
        .collect()
}

fn uf(name: &str, plus: &[usize], minus: &[usize]) -> UniqueFactorization {
    let g = catalog_group(name).unwrap();
    make_factorization(&g, &Subgroup::new(&g, plus).unwrap(), &Subgroup::new(&g, minus).unwrap()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `g = u x` found by search over `G+ × G-`.
fn split_pm(f: &UniqueFactorization, g: usize) -> (usize, usize) {
    for &u in f.plus().elements() {
        for &x in f.minus().elements() {
            if f.group().mul(u, x) == g {
                return (u, x);
            }
        }
    }
    unreachable!("unique factorization")
}

/// `g = x u` found by search over `G- × G+`.
fn split_mp(f: &UniqueFactorization, g: usize) -> (usize, usize) {
    for &x in f.minus().elements() {
        for &u in f.plus().elements() {
            if f.group().mul(x, u) == g {
                return (x, u);
            }
        }
    }
    unreachable!("unique factorization")
}

fn hopf_axioms() -> Outcome {
    let mut ufs = factorizations_up_to(16);
    ufs.push(uf("S3", &[0, 1, 2], &[0, 3]));
    ufs.push(uf("S3", &[0, 3], &[0, 1, 2]));
    for f in &ufs {
        let report = build_hopf(f).verify_hopf_axioms();
        ensure(report.all_pass(), || format!("{f:?}: {:?}", report.failures()))?;
    }
    Ok(format!("{} factorizations", ufs.len()))
}

fn soundness() -> Outcome {
    let mut structures = 0;
    for f in factorizations_up_to(12) {
        let h = build_hopf(&f);
        for p in classify(&f) {
            let r = build_r(&f, &p.xi, &p.eta).map_err(|e| e.to_string())?;
            let verdict = verify_qt(&h, &r);
            ensure(verdict.holds(), || format!("{f:?} {p:?}: {verdict:?}"))?;
            let s_r = h.slot_map(&r, 0, StructureMap::Antipode).unwrap();
            ensure(h.is_inverse_pair(&r, &s_r).unwrap(), || format!("{f:?}: R^-1 != (S⊗id)R"))?;
            ensure(r.len() == f.plus().len().pow(2) && r.is_zero_one(), || "R shape".into())?;
            structures += 1;
        }
    }
    Ok(format!("{structures} structures verified"))
}

fn oracle() -> Outcome {
    let v4 = uf("V4", &[0, 2], &[0, 1]);
    let found = bruteforce_oracle(&v4, &build_hopf(&v4)).map_err(|e| e.to_string())?;
    ensure(found.scanned == 256 && found.passing.len() == 4, || {
        format!("V4: {} scanned, {} passing", found.scanned, found.passing.len())
    })?;
    let oracle: BTreeSet<_> = found.passing.iter().map(|c| c.to_tensor(&v4).support()).collect();
    let classified: BTreeSet<_> =
        classify(&v4).iter().map(|p| build_r(&v4, &p.xi, &p.eta).unwrap().support()).collect();
    ensure(oracle == classified, || "V4 supports differ".into())?;

    let s3 = uf("S3", &[0, 3], &[0, 1, 2]);
    ensure(oracle_space_size(&s3) == Some(6561), || "S3 space size".into())?;
    let found = bruteforce_oracle(&s3, &build_hopf(&s3)).map_err(|e| e.to_string())?;
    ensure(found.scanned == 6561 && found.passing.is_empty(), || {
        format!("S3: {} scanned, {} passing", found.scanned, found.passing.len())
    })?;
    ensure(classify(&s3).is_empty(), || "S3 classify not empty".into())?;
    Ok("V4: 4 of 256, S3(<t>,A3): 0 of 6561".into())
}

fn condition_routes() -> Outcome {
    let (mut passing, mut failing) = (0, 0);
    for f in factorizations_up_to(12) {
        let homs = plus_minus_homomorphisms(&f);
        for xi in &homs {
            for eta in &homs {
                let report = check_pair_conditions(&f, xi, eta).unwrap();
                ensure(report.is_consistent(), || format!("{f:?} {xi:?} {eta:?}: {report:?}"))?;
                if report.primary_pass() {
                    passing += 1;
                } else {
                    failing += 1;
                }
            }
        }
    }
    ensure(passing > 0 && failing > 0, || "both outcomes must be exercised".into())?;
    Ok(format!("{passing} passing and {failing} failing triples"))
}

fn triangularity() -> Outcome {
    let (mut pairs, mut data) = (0, 0);
    for f in factorizations_up_to(12) {
        let h = build_hopf(&f);
        for p in classify(&f) {
            let r = build_r(&f, &p.xi, &p.eta).unwrap();
            let product = h.product(&r.tau_swap(0, 1).unwrap(), &r).unwrap() == h.unit_k(2);
            ensure(product == (p.xi.image == p.eta.image), || format!("{f:?} {p:?}"))?;
            check_triangular(&h, &r, &p.xi, &p.eta).map_err(|e| e.to_string())?;
            pairs += 1;
        }
        for xi in plus_minus_homomorphisms(&f) {
            check_triangular_datum(&f, &xi).map_err(|e| format!("{f:?}: {e}"))?;
            data += 1;
        }
    }
    Ok(format!("{pairs} pairs, {data} (UF, ξ) data"))
}

fn normalization() -> Outcome {
    let (mut count, mut triangular) = (0, 0);
    for f in factorizations_up_to(12) {
        for p in classify(&f) {
            let nf = normalize_qt(&f, &p.xi, &p.eta).map_err(|e| format!("{f:?} {p:?}: {e}"))?;
            ensure(nf.xi.is_trivial(f.identity()), || "ξ' not trivial".into())?;
            let h2 = build_hopf(&nf.uf);
            ensure(verify_qt(&h2, &nf.r).holds(), || "R' fails".into())?;
            for (i, &v) in f.plus().elements().iter().enumerate() {
                let xi_inv_v = p.xi.apply(f.inv(v));
                let w = f.mul(xi_inv_v, v);
                let expected = f.mul(f.inv(p.xi.image[i]), p.eta.image[i]);
                ensure(nf.eta.apply(w) == expected, || format!("η' at {v}"))?;
            }
            ensure(cocycle_holds(&build_hopf(&f), &nf.quasi_iso.t).unwrap(), || "cocycle".into())?;
            if p.xi == p.eta {
                ensure(nf.r == h2.unit_k(2), || "R' != 1'⊗1'".into())?;
                ensure(h2.is_cocommutative(), || "target not cocommutative".into())?;
                triangular += 1;
            }
            count += 1;
        }
    }
    Ok(format!("{count} normalized, {triangular} triangular"))
}

/// The map `(u, v) -> (u^η(v), ^ξ(u) v)` computed by searching factorizations.
fn naive_solution(f: &UniqueFactorization, xi: &Homomorphism, eta: &Homomorphism) -> Vec<usize> {
    let plus = f.plus().elements();
    let n = plus.len();
    let pos = |u: usize| plus.iter().position(|&w| w == u).unwrap();
    let mut map = Vec::with_capacity(n * n);
    for &u in plus {
        for &v in plus {
            let (_, u_new) = split_mp(f, f.mul(u, eta.apply(v)));
            let (v_new, _) = split_pm(f, f.mul(xi.apply(u), v));
            map.push(pos(u_new) * n + pos(v_new));
        }
    }
    map
}

fn naive_ybe(n: usize, map: &[usize]) -> bool {
    let r = |a: usize, b: usize| (map[a * n + b] / n, map[a * n + b] % n);
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let (a1, b1) = r(a, b);
                let (a2, c1) = r(a1, c);
                let (b2, c2) = r(b1, c1);
                let (b3, c3) = r(b, c);
                let (a3, c4) = r(a, c3);
                let (a4, b4) = r(a3, b3);
                (a2, b2, c2) == (a4, b4, c4)
            })
        })
    })
}

fn set_ybe() -> Outcome {
    let mut count = 0;
    for f in factorizations_up_to(12) {
        let gamma = build_gamma_plus(&f);
        let g2 = gamma.power(2);
        let unit_set = GammaSet::unit_set(&gamma);
        for p in classify(&f) {
            let sol = set_solution(&f, &p.xi, &p.eta).map_err(|e| format!("{f:?} {p:?}: {e}"))?;
            let naive = naive_solution(&f, &p.xi, &p.eta);
            ensure(sol.map == naive, || format!("{f:?} {p:?}: formula mismatch"))?;
            ensure(naive_ybe(sol.n(), &naive), || format!("{f:?} {p:?}: YBE"))?;
            let r = build_r(&f, &p.xi, &p.eta).unwrap();
            let l = support(&g2, &r).map_err(|e| e.to_string())?;
            let bis = Bisection::from_subset(&g2, &l).map_err(|e| e.to_string())?;
            ensure(check_groupoid_ybe(&gamma, &bis).unwrap(), || format!("{f:?} {p:?}: groupoid YBE"))?;
            let induced = gamma_set_solution(&gamma, &bis, &unit_set).map_err(|e| e.to_string())?;
            ensure(induced == sol.map, || format!("{f:?} {p:?}: unit Γ+-set map"))?;
            count += 1;
        }
    }
    Ok(format!("{count} solutions"))
}

fn drinfeld_double() -> Outcome {
    let base = uf("S3", &[0, 1, 2], &[0, 3]);
    let d = build_double(&base).map_err(|e| e.to_string())?;
    ensure(d.order() == 36 && d.plus().len() == 6 && d.minus().len() == 6, || "orders".into())?;
    let (xi, eta) = standard_double_qt(&d).map_err(|e| e.to_string())?;
    let report = check_pair_conditions(&d, &xi, &eta).unwrap();
    ensure(report.primary_pass() && report.equivalent_pass() && report.structural_pass(), || {
        format!("{report:?}")
    })?;
    ensure(classify(&d).iter().any(|p| p.xi == xi && p.eta == eta), || "standard pair not classified".into())?;
    let cycle = check_double_cycle_data(&base, &d).map_err(|e| e.to_string())?;
    ensure(cycle.all(), || format!("{cycle:?}"))?;
    let sol = set_solution(&d, &xi, &eta).map_err(|e| e.to_string())?;
    ensure(sol.n() == 6 && naive_ybe(6, &sol.map), || "YBE on 216 triples".into())?;
    ensure(!sol.is_identity(), || "solution is trivial".into())?;
    // Under π the solution's left action is conjugation in G.
    let pi = double_cocycle(&base, &d);
    for (i, &u) in d.plus().elements().iter().enumerate() {
        let gm = u % base.order();
        for j in 0..6 {
            let (_, v_new) = sol.apply(i, j);
            let conj = base.mul(base.mul(gm, pi[j]), base.inv(gm));
            ensure(pi[v_new] == conj, || format!("conjugation at ({i}, {j})"))?;
        }
    }
    let star = star_product(&d, &xi).map_err(|e| e.to_string())?;
    ensure(star.find_isomorphism(base.group()).is_some(), || "⋆ not isomorphic to S3".into())?;
    let h = build_hopf(&d);
    let r = build_r(&d, &xi, &eta).unwrap();
    ensure(r.len() == 36 && verify_qt(&h, &r).holds(), || "R on the double".into())?;
    ensure(!check_triangular(&h, &r, &xi, &eta).unwrap(), || "double is triangular".into())?;
    ensure(!h.is_cocommutative(), || "double cocommutative".into())?;
    let gamma = build_gamma_plus(&d);
    let g2 = gamma.power(2);
    let bis = Bisection::from_subset(&g2, &support(&g2, &r).unwrap()).unwrap();
    let regular = GammaSet::regular_set(&gamma);
    let big = gamma_set_solution(&gamma, &bis, &regular).map_err(|e| e.to_string())?;
    ensure(big.len() == 36 * 36 && ybe_failure(36, &big).is_none(), || "regular Γ-set".into())?;
    ensure(roundtrip_holds(&d, &xi, &eta).unwrap(), || "double roundtrip".into())?;
    Ok("order 36, 216 triples, regular Γ-set on 1296 points".into())
}

fn cycle_roundtrip() -> Outcome {
    let mut count = 0;
    for f in factorizations_up_to(12) {
        for p in classify(&f) {
            let ok = roundtrip_holds(&f, &p.xi, &p.eta).map_err(|e| format!("{f:?} {p:?}: {e}"))?;
            ensure(ok, || format!("{f:?} {p:?}: roundtrip"))?;
            count += 1;
        }
        let t = trivial_homomorphism(&f);
        if pair_conditions_hold(&f, &t, &t).unwrap() {
            ensure(roundtrip_holds(&f, &t, &t).unwrap(), || "trivial pair".into())?;
        }
    }
    Ok(format!("{count} triples"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Hopf axioms, all factorizations up to order 16", hopf_axioms),
        ("classification soundness up to order 12", soundness),
        ("brute-force oracle agreement on V4 and S3", oracle),
        ("equivalence of the three condition routes", condition_routes),
        ("triangularity biconditional", triangularity),
        ("normalization by twisting", normalization),
        ("set-theoretical Yang-Baxter solutions", set_ybe),
        ("Drinfeld double of S3", drinfeld_double),
        ("cycle data roundtrip", cycle_roundtrip),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
