//! Unique factorizations `G = G+ G-` and the four mutual actions they induce.
//!
//! For `u` in `G+` and `x` in `G-` the actions are read off by re-factoring:
//!
//! ```text
//! x u = (^x u)(x^u)     ^x u in G+, x^u in G-
//! u x = (^u x)(u^x)     ^u x in G-, u^x in G+
//! ```

use std::fmt;

use thiserror::Error;

use crate::group::{enumerate_subgroups, FiniteGroup, GroupError, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorizationError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("not a unique factorization: {0}")]
    NotUniqueFactorization(String),
}

/// A failed instance of one of the action identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    pub identity: &'static str,
    pub arguments: Vec<usize>,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.identity, self.arguments)
    }
}

const NONE: usize = usize::MAX;

#[derive(Clone)]
pub struct UniqueFactorization {
    group: FiniteGroup,
    plus: Subgroup,
    minus: Subgroup,
    /// g -> (g+, g-) with g = g+ g-.
    pm_factor: Vec<(usize, usize)>,
    /// g -> (bar g-, bar g+) with g = bar g- bar g+.
    mp_factor: Vec<(usize, usize)>,
    // Dense n*n tables keyed by ambient indices; only the relevant pairs are filled.
    act_lmp: Vec<usize>,
    act_rmp: Vec<usize>,
    act_lpm: Vec<usize>,
    act_rpm: Vec<usize>,
}

impl fmt::Debug for UniqueFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UniqueFactorization")
            .field("group", &self.group.name())
            .field("plus", &self.plus.elements())
            .field("minus", &self.minus.elements())
            .finish()
    }
}

/// Builds and validates the factorization `G = P M`.
pub fn make_factorization(
    g: &FiniteGroup,
    plus: &Subgroup,
    minus: &Subgroup,
) -> Result<UniqueFactorization, FactorizationError> {
    let plus = Subgroup::new(g, plus.elements())?;
    let minus = Subgroup::new(g, minus.elements())?;
    let n = g.order();
    if plus.len() * minus.len() != n {
        return Err(FactorizationError::NotUniqueFactorization(format!(
            "|G+| * |G-| = {} * {} != |G| = {n}",
            plus.len(),
            minus.len()
        )));
    }
    let mut pm_factor = vec![(NONE, NONE); n];
    let mut mp_factor = vec![(NONE, NONE); n];
    for &u in plus.elements() {
        for &x in minus.elements() {
            let ux = g.mul(u, x);
            if pm_factor[ux].0 != NONE {
                let (u0, x0) = pm_factor[ux];
                return Err(FactorizationError::NotUniqueFactorization(format!(
                    "{u}*{x} = {u0}*{x0} = {ux}"
                )));
            }
            pm_factor[ux] = (u, x);
            mp_factor[g.mul(x, u)] = (x, u);
        }
    }
    // |G+||G-| = |G| and injectivity give bijectivity of both product maps.
    debug_assert!(mp_factor.iter().all(|p| p.0 != NONE));

    let mut uf = UniqueFactorization {
        group: g.clone(),
        plus,
        minus,
        pm_factor,
        mp_factor,
        act_lmp: vec![NONE; n * n],
        act_rmp: vec![NONE; n * n],
        act_lpm: vec![NONE; n * n],
        act_rpm: vec![NONE; n * n],
    };
    for &u in uf.plus.elements() {
        for &x in uf.minus.elements() {
            let (xu_plus, xu_minus) = uf.pm_factor[g.mul(x, u)];
            uf.act_lmp[x * n + u] = xu_plus;
            uf.act_rmp[x * n + u] = xu_minus;
            let (ux_minus, ux_plus) = uf.mp_factor[g.mul(u, x)];
            uf.act_lpm[u * n + x] = ux_minus;
            uf.act_rpm[u * n + x] = ux_plus;
        }
    }
    if let Err(v) = uf.verify_action_identities() {
        return Err(FactorizationError::NotUniqueFactorization(v.to_string()));
    }
    Ok(uf)
}

/// Every ordered pair of subgroups giving a unique factorization.
pub fn find_factorizations(g: &FiniteGroup) -> Result<Vec<UniqueFactorization>, FactorizationError> {
    let subs = enumerate_subgroups(g)?;
    let mut out = Vec::new();
    for p in &subs {
        for m in &subs {
            if p.len() * m.len() != g.order() {
                continue;
            }
            let meet = p.elements().iter().filter(|&&x| m.contains(x)).count();
            if meet == 1 {
                out.push(make_factorization(g, p, m)?);
            }
        }
    }
    Ok(out)
}

impl UniqueFactorization {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn plus(&self) -> &Subgroup {
        &self.plus
    }

    pub fn minus(&self) -> &Subgroup {
        &self.minus
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn identity(&self) -> usize {
        self.group.identity()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.group.inv(a)
    }

    /// `(g+, g-)` with `g = g+ g-`.
    #[inline]
    pub fn pm(&self, g: usize) -> (usize, usize) {
        self.pm_factor[g]
    }

    /// `(bar g-, bar g+)` with `g = bar g- bar g+`.
    #[inline]
    pub fn mp(&self, g: usize) -> (usize, usize) {
        self.mp_factor[g]
    }

    #[inline]
    pub fn plus_part(&self, g: usize) -> usize {
        self.pm_factor[g].0
    }

    #[inline]
    pub fn minus_part(&self, g: usize) -> usize {
        self.pm_factor[g].1
    }

    #[inline]
    pub fn bar_plus(&self, g: usize) -> usize {
        self.mp_factor[g].1
    }

    #[inline]
    pub fn bar_minus(&self, g: usize) -> usize {
        self.mp_factor[g].0
    }

    /// `^x u` for `x` in G-, `u` in G+.
    #[inline]
    pub fn act_lmp(&self, x: usize, u: usize) -> usize {
        self.act_lmp[x * self.order() + u]
    }

    /// `x^u` for `x` in G-, `u` in G+.
    #[inline]
    pub fn act_rmp(&self, x: usize, u: usize) -> usize {
        self.act_rmp[x * self.order() + u]
    }

    /// `^u x` for `u` in G+, `x` in G-.
    #[inline]
    pub fn act_lpm(&self, u: usize, x: usize) -> usize {
        self.act_lpm[u * self.order() + x]
    }

    /// `u^x` for `u` in G+, `x` in G-.
    #[inline]
    pub fn act_rpm(&self, u: usize, x: usize) -> usize {
        self.act_rpm[u * self.order() + x]
    }

    /// Checks the defining relations together with the compatibility and
    /// inverse identities of the four actions, returning the first failure.
    pub fn verify_action_identities(&self) -> Result<(), IdentityViolation> {
        let g = &self.group;
        let plus = self.plus.elements();
        let minus = self.minus.elements();
        let fail = |identity, arguments| Err(IdentityViolation { identity, arguments });

        for &u in plus {
            for &x in minus {
                if g.mul(x, u) != g.mul(self.act_lmp(x, u), self.act_rmp(x, u)) {
                    return fail("x u = (^x u)(x^u)", vec![x, u]);
                }
                if g.mul(u, x) != g.mul(self.act_lpm(u, x), self.act_rpm(u, x)) {
                    return fail("u x = (^u x)(u^x)", vec![u, x]);
                }
                // Inverse identities.
                if g.inv(self.act_rpm(u, x)) != self.act_lmp(g.inv(x), g.inv(u)) {
                    return fail("(u^x)^-1 = ^(x^-1) u^-1", vec![u, x]);
                }
                if g.inv(self.act_lmp(x, u)) != self.act_rpm(g.inv(u), g.inv(x)) {
                    return fail("(^x u)^-1 = (u^-1)^(x^-1)", vec![x, u]);
                }
                if g.inv(self.act_rmp(x, u)) != self.act_lpm(g.inv(u), g.inv(x)) {
                    return fail("(x^u)^-1 = ^(u^-1) x^-1", vec![x, u]);
                }
                if g.inv(self.act_lpm(u, x)) != self.act_rmp(g.inv(x), g.inv(u)) {
                    return fail("(^u x)^-1 = (x^-1)^(u^-1)", vec![u, x]);
                }
            }
        }
        // Compatibility identities.
        for &u in plus {
            for &x in minus {
                let ux = self.act_rpm(u, x);
                let xu = self.act_rmp(x, u);
                for &y in minus {
                    let lhs = self.act_lpm(u, g.mul(x, y));
                    let rhs = g.mul(self.act_lpm(u, x), self.act_lpm(ux, y));
                    if lhs != rhs {
                        return fail("^u(xy) = ^u x ^(u^x) y", vec![u, x, y]);
                    }
                    let lhs = self.act_rmp(g.mul(y, x), u);
                    let rhs = g.mul(self.act_rmp(y, self.act_lmp(x, u)), xu);
                    if lhs != rhs {
                        return fail("(yx)^u = y^(^x u) x^u", vec![y, x, u]);
                    }
                }
                for &v in plus {
                    let lhs = self.act_rpm(g.mul(v, u), x);
                    let rhs = g.mul(self.act_rpm(v, self.act_lpm(u, x)), ux);
                    if lhs != rhs {
                        return fail("(vu)^x = v^(^u x) u^x", vec![v, u, x]);
                    }
                    let lhs = self.act_lmp(x, g.mul(u, v));
                    let rhs = g.mul(self.act_lmp(x, u), self.act_lmp(xu, v));
                    if lhs != rhs {
                        return fail("^x(uv) = ^x u ^(x^u) v", vec![x, u, v]);
                    }
                }
            }
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn corrupt_act_lpm(&mut self, u: usize, x: usize, value: usize) {
        let n = self.order();
        self.act_lpm[u * n + x] = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::group::is_normal;

    fn sub(g: &FiniteGroup, e: &[usize]) -> Subgroup {
        Subgroup::new(g, e).unwrap()
    }

    #[test]
    fn z6_direct_factorization_has_trivial_actions() {
        let g = catalog_group("Z6").unwrap();
        let uf = make_factorization(&g, &sub(&g, &[0, 2, 4]), &sub(&g, &[0, 3])).unwrap();
        for &u in uf.plus().elements() {
            for &x in uf.minus().elements() {
                assert_eq!(uf.act_lmp(x, u), u);
                assert_eq!(uf.act_rmp(x, u), x);
                assert_eq!(uf.act_lpm(u, x), x);
                assert_eq!(uf.act_rpm(u, x), u);
            }
        }
        assert!(uf.verify_action_identities().is_ok());
    }

    #[test]
    fn normal_plus_gives_conjugation_action() {
        let g = catalog_group("S3").unwrap();
        let uf = make_factorization(&g, &sub(&g, &[0, 1, 2]), &sub(&g, &[0, 3])).unwrap();
        for &u in uf.plus().elements() {
            for &x in uf.minus().elements() {
                assert_eq!(uf.act_lmp(x, u), g.mul(g.mul(x, u), g.inv(x)));
                assert_eq!(uf.act_rmp(x, u), x);
            }
        }
    }

    #[test]
    fn equal_subgroups_are_rejected() {
        let g = catalog_group("Z4").unwrap();
        let s = sub(&g, &[0, 2]);
        assert!(matches!(
            make_factorization(&g, &s, &s),
            Err(FactorizationError::NotUniqueFactorization(_))
        ));
    }

    #[test]
    fn factorizations_of_small_groups() {
        let one = catalog_group("Z1").unwrap();
        assert_eq!(find_factorizations(&one).unwrap().len(), 1);

        let z6 = catalog_group("Z6").unwrap();
        let pairs: Vec<(Vec<usize>, Vec<usize>)> = find_factorizations(&z6)
            .unwrap()
            .iter()
            .map(|uf| (uf.plus().elements().to_vec(), uf.minus().elements().to_vec()))
            .collect();
        for want in [
            (vec![0, 2, 4], vec![0, 3]),
            (vec![0, 3], vec![0, 2, 4]),
            (vec![0], (0..6).collect()),
            ((0..6).collect(), vec![0]),
        ] {
            assert!(pairs.contains(&want), "{want:?} missing");
        }
        assert_eq!(pairs.len(), 4);

        let s3 = catalog_group("S3").unwrap();
        let ufs = find_factorizations(&s3).unwrap();
        let a3 = vec![0, 1, 2];
        let with_a3_plus = ufs
            .iter()
            .filter(|uf| uf.plus().elements() == a3.as_slice() && uf.minus().len() == 2)
            .count();
        let with_a3_minus = ufs
            .iter()
            .filter(|uf| uf.minus().elements() == a3.as_slice() && uf.plus().len() == 2)
            .count();
        assert_eq!((with_a3_plus, with_a3_minus), (3, 3));
    }

    #[test]
    fn factor_tables_round_trip() {
        for name in ["S3", "D4", "Q8", "Z2xS3"] {
            let g = catalog_group(name).unwrap();
            for uf in find_factorizations(&g).unwrap() {
                for x in g.elements() {
                    let (p, m) = uf.pm(x);
                    assert_eq!(g.mul(p, m), x);
                    let (m, p) = uf.mp(x);
                    assert_eq!(g.mul(m, p), x);
                }
                assert!(uf.verify_action_identities().is_ok());
                if is_normal(&g, uf.plus()).unwrap() {
                    for &u in uf.plus().elements() {
                        for &x in uf.minus().elements() {
                            assert_eq!(uf.act_rmp(x, u), x);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_action_is_detected() {
        let g = catalog_group("S3").unwrap();
        let mut uf = make_factorization(&g, &sub(&g, &[0, 1, 2]), &sub(&g, &[0, 3])).unwrap();
        let (u, x) = (1, 3);
        let wrong = if uf.act_lpm(u, x) == 3 { 0 } else { 3 };
        uf.corrupt_act_lpm(u, x, wrong);
        let err = uf.verify_action_identities().unwrap_err();
        assert_eq!(err.arguments[..2], [u, x]);
    }
}
