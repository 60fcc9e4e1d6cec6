//! Set-theoretical solutions of the Yang-Baxter equation on `G+`.
//!
//! ```text
//! R(u, v)    = (u^η(v), ^ξ(u) v)
//! R^-1(u, v) = (^η(v) u, v^ξ(u))
//! u ⋆ v      = u (^ξ(u^-1) v)
//! ```
//!
//! Maps on `X × X` are tables indexed by `x1 * |X| + x2`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factorization::UniqueFactorization;
use crate::group::{FiniteGroup, GroupError, Homomorphism};
use crate::qt::{dense, require_conditions, QtError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YbeError {
    #[error(transparent)]
    Qt(#[from] QtError),
    #[error("star product is not a group: {0}")]
    NotAGroup(GroupError),
    #[error("ξ must be trivial for the conjugate form")]
    NotNormal,
    #[error("solution invariant fails: {0}")]
    InvariantFailed(String),
}

/// True when `map` permutes `0..len`.
pub fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&y| y < map.len() && !std::mem::replace(&mut seen[y], true))
}

/// First triple where `R12 R13 R23 != R23 R13 R12`.
pub fn ybe_failure(n: usize, map: &[usize]) -> Option<[usize; 3]> {
    let r = |a: usize, b: usize| {
        let p = map[a * n + b];
        (p / n, p % n)
    };
    let r12 = |(a, b, c)| {
        let (a, b) = r(a, b);
        (a, b, c)
    };
    let r13 = |(a, b, c)| {
        let (a, c) = r(a, c);
        (a, b, c)
    };
    let r23 = |(a, b, c)| {
        let (b, c) = r(b, c);
        (a, b, c)
    };
    (0..n * n * n).into_par_iter().find_first(|&i| {
        let t = (i / (n * n), (i / n) % n, i % n);
        r12(r13(r23(t))) != r23(r13(r12(t)))
    })
    .map(|i| [i / (n * n), (i / n) % n, i % n])
}

/// First triple where the braid relation fails for `swap ∘ R`.
pub fn braid_failure(n: usize, map: &[usize]) -> Option<[usize; 3]> {
    let rhat = |a: usize, b: usize| {
        let p = map[a * n + b];
        (p % n, p / n)
    };
    let s1 = |(a, b, c)| {
        let (a, b) = rhat(a, b);
        (a, b, c)
    };
    let s2 = |(a, b, c)| {
        let (b, c) = rhat(b, c);
        (a, b, c)
    };
    (0..n * n * n).into_par_iter().find_first(|&i| {
        let t = (i / (n * n), (i / n) % n, i % n);
        s1(s2(s1(t))) != s2(s1(s2(t)))
    })
    .map(|i| [i / (n * n), (i / n) % n, i % n])
}

/// A permutation of `G+ × G+` on local indices (position in `G+`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSolution {
    pub elements: Vec<usize>,
    pub map: Vec<usize>,
}

/// Export format: `{"n": |G+|, "map": [[u', v'], ...]}` in row-major `(u, v)` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSolutionJson {
    pub n: usize,
    pub map: Vec<[usize; 2]>,
}

impl SetSolution {
    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn apply(&self, u: usize, v: usize) -> (usize, usize) {
        let n = self.n();
        let p = self.map[u * n + v];
        (p / n, p % n)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn to_json(&self) -> SetSolutionJson {
        let n = self.n();
        SetSolutionJson { n, map: self.map.iter().map(|&p| [p / n, p % n]).collect() }
    }

    /// Rows `u,v,u',v'`.
    pub fn to_csv(&self) -> String {
        let n = self.n();
        let mut out = String::from("u,v,u',v'\n");
        for (i, &p) in self.map.iter().enumerate() {
            out.push_str(&format!("{},{},{},{}\n", i / n, i % n, p / n, p % n));
        }
        out
    }
}

/// The solution of a pair, with bijectivity, the inverse formula, the YBE
/// and the braid relation all checked.
pub fn set_solution(uf: &UniqueFactorization, xi: &Homomorphism, eta: &Homomorphism) -> Result<SetSolution, YbeError> {
    require_conditions(uf, xi, eta)?;
    let (xi, eta) = (dense(xi, uf.order()), dense(eta, uf.order()));
    let plus = uf.plus();
    let elems = plus.elements();
    let n = elems.len();
    let pos = |u: usize| plus.position(u).expect("element of G+");
    let mut map = vec![0; n * n];
    let mut inverse = vec![0; n * n];
    for (i, &u) in elems.iter().enumerate() {
        for (j, &v) in elems.iter().enumerate() {
            map[i * n + j] = pos(uf.act_rpm(u, eta[v])) * n + pos(uf.act_lmp(xi[u], v));
            inverse[i * n + j] = pos(uf.act_lmp(eta[v], u)) * n + pos(uf.act_rpm(v, xi[u]));
        }
    }
    let fail = |s: &str| Err(YbeError::InvariantFailed(s.to_string()));
    if !is_permutation(&map) {
        return fail("not a bijection");
    }
    if (0..n * n).any(|p| map[inverse[p]] != p || inverse[map[p]] != p) {
        return fail("inverse formula");
    }
    if let Some(t) = ybe_failure(n, &map) {
        return Err(YbeError::InvariantFailed(format!("YBE at {t:?}")));
    }
    if let Some(t) = braid_failure(n, &map) {
        return Err(YbeError::InvariantFailed(format!("braid relation at {t:?}")));
    }
    Ok(SetSolution { elements: elems.to_vec(), map })
}

/// `u ⋆ v = u (^ξ(u^-1) v)` on local indices of `G+`.
pub fn star_product(uf: &UniqueFactorization, xi: &Homomorphism) -> Result<FiniteGroup, YbeError> {
    crate::qt::validate_homomorphism(uf, xi)?;
    let xi = dense(xi, uf.order());
    let plus = uf.plus();
    let pos = |u: usize| plus.position(u).expect("element of G+");
    let elems = plus.elements();
    let table = elems
        .iter()
        .flat_map(|&u| {
            let x = xi[uf.inv(u)];
            elems.iter().map(move |&v| pos(uf.mul(u, uf.act_lmp(x, v))))
        })
        .collect();
    let name = format!("{}+star", uf.group().name());
    FiniteGroup::from_flat(name, elems.len(), table).map_err(YbeError::NotAGroup)
}

/// `π(u) = u ξ(u^-1)` as a table from local `G+` indices to ambient elements.
pub fn cocycle_pi(uf: &UniqueFactorization, xi: &Homomorphism) -> Vec<usize> {
    let xi = dense(xi, uf.order());
    uf.plus().elements().iter().map(|&u| uf.mul(u, xi[uf.inv(u)])).collect()
}

/// For a normal pair, `R(u, v) = (v^-1 ⋆ u ⋆ v, v)`.
pub fn conjugate_form_check(uf: &UniqueFactorization, eta: &Homomorphism) -> Result<bool, YbeError> {
    let xi = crate::qt::trivial_homomorphism(uf);
    let sol = set_solution(uf, &xi, eta)?;
    let star = star_product(uf, &xi)?;
    let n = sol.n();
    Ok((0..n).all(|u| {
        (0..n).all(|v| sol.apply(u, v) == (star.mul(star.mul(star.inv(v), u), v), v))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::factorization::make_factorization;
    use crate::group::Subgroup;
    use crate::qt::{classify, plus_minus_homomorphisms, trivial_homomorphism};

    fn uf(name: &str, plus: &[usize], minus: &[usize]) -> UniqueFactorization {
        let g = catalog_group(name).unwrap();
        make_factorization(&g, &Subgroup::new(&g, plus).unwrap(), &Subgroup::new(&g, minus).unwrap())
            .unwrap()
    }

    #[test]
    fn trivial_pair_gives_identity() {
        let f = uf("S3", &[0, 1, 2], &[0, 3]);
        let t = trivial_homomorphism(&f);
        let s = set_solution(&f, &t, &t).unwrap();
        assert!(s.is_identity());
        assert!(conjugate_form_check(&f, &t).unwrap());
    }

    #[test]
    fn v4_solutions_are_trivial() {
        let f = uf("V4", &[0, 2], &[0, 1]);
        for p in classify(&f) {
            assert!(set_solution(&f, &p.xi, &p.eta).unwrap().is_identity());
        }
        let homs = plus_minus_homomorphisms(&f);
        let star = star_product(&f, &homs[1]).unwrap();
        assert_eq!(star.order(), 2);
    }

    #[test]
    fn exports() {
        let f = uf("V4", &[0, 2], &[0, 1]);
        let t = trivial_homomorphism(&f);
        let s = set_solution(&f, &t, &t).unwrap();
        let json = serde_json::to_string(&s.to_json()).unwrap();
        assert_eq!(json, r#"{"n":2,"map":[[0,0],[0,1],[1,0],[1,1]]}"#);
        assert_eq!(s.to_csv().lines().count(), 5);
    }

    #[test]
    fn swap_solves_ybe_but_a_non_solution_is_caught() {
        let n = 3;
        let swap: Vec<usize> = (0..n * n).map(|p| (p % n) * n + p / n).collect();
        assert!(ybe_failure(n, &swap).is_none());
        assert!(braid_failure(n, &swap).is_none());
        // (a, b) -> (a + 1, b) mod 3 on the first slot only after a = 0.
        let bad: Vec<usize> = (0..n * n)
            .map(|p| if p / n == 0 { ((p % n) * n) + (p / n + 1) % n } else { p })
            .collect();
        assert!(ybe_failure(n, &bad).is_some());
    }
}
