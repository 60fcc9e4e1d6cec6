//! The correspondence between pairs `(ξ, η)` and cycle data
//! `(A ⋊ G-, ζ, F)`.
//!
//! ```text
//! A = G+' = {u ξ(u^-1)}     ζ(u ξ(u^-1)) = ξ(u)     F(u ξ(u^-1) x) = η(u) u^-1 x
//! G+ = {a ζ(a)}             ξ = P|G+                η = P ∘ F^-1 |G+
//! ```
//!
//! `P(a x) = x`. The semidirect product uses index `a * |G-| + x`.

use thiserror::Error;

use crate::factorization::{make_factorization, FactorizationError, UniqueFactorization};
use crate::group::{semidirect_product, FiniteGroup, GroupError, Homomorphism, Subgroup};
use crate::qt::{dense, require_conditions, QtError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error(transparent)]
    Qt(#[from] QtError),
    #[error("invalid cycle data: {0}")]
    InvalidCycleData(String),
}

impl From<GroupError> for CycleError {
    fn from(e: GroupError) -> Self {
        CycleError::InvalidCycleData(e.to_string())
    }
}

impl From<FactorizationError> for CycleError {
    fn from(e: FactorizationError) -> Self {
        CycleError::InvalidCycleData(e.to_string())
    }
}

/// `A`, `G-` on local indices; `action[x][a] = x·a`; `f` acts on `A ⋊ G-`.
#[derive(Debug, Clone)]
pub struct CycleData {
    pub a: FiniteGroup,
    pub gm: FiniteGroup,
    pub action: Vec<Vec<usize>>,
    pub zeta: Vec<usize>,
    pub f: Vec<usize>,
}

impl CycleData {
    /// Checks every invariant and returns the semidirect product `A ⋊ G-`.
    pub fn validate(&self) -> Result<FiniteGroup, CycleError> {
        let invalid = |s: String| Err(CycleError::InvalidCycleData(s));
        let (na, m) = (self.a.order(), self.gm.order());
        let g = semidirect_product(&self.a, &self.gm, &self.action)?;
        if self.zeta.len() != na || self.zeta.iter().any(|&z| z >= m) {
            return invalid("ζ is not a map A -> G-".into());
        }
        for p in self.a.elements() {
            for q in self.a.elements() {
                let twisted = self.a.mul(p, self.action[self.zeta[p]][q]);
                if self.gm.mul(self.zeta[p], self.zeta[q]) != self.zeta[twisted] {
                    return invalid(format!("1-cycle law fails at ({p}, {q})"));
                }
            }
        }
        if self.f.len() != na * m {
            return invalid("F has the wrong size".into());
        }
        if !g.is_isomorphism_onto(&g, &self.f) {
            return invalid("F is not an automorphism".into());
        }
        let ea = self.a.identity();
        for x in self.gm.elements() {
            if self.f[ea * m + x] != ea * m + x {
                return invalid(format!("F moves {x} in G-"));
            }
        }
        for p in self.a.elements() {
            let fa = self.f[p * m + self.gm.identity()];
            if g.mul(fa, p * m + self.gm.identity()) / m != ea {
                return invalid(format!("F(a)a is not in G- for a = {p}"));
            }
        }
        Ok(g)
    }
}

/// `A = G+'` and `G-` as sorted ambient subgroups.
fn cycle_subgroups(uf: &UniqueFactorization, xi: &Homomorphism) -> Result<(Subgroup, Vec<(usize, usize)>), CycleError> {
    let xi = dense(xi, uf.order());
    let pi: Vec<(usize, usize)> =
        uf.plus().elements().iter().map(|&u| (u, uf.mul(u, xi[uf.inv(u)]))).collect();
    let elems: Vec<usize> = pi.iter().map(|&(_, a)| a).collect();
    Ok((Subgroup::new(uf.group(), &elems)?, pi))
}

/// The canonical relabeling `A ⋊ G- -> G`, `(a, x) -> a x`, as a table.
pub fn canonical_relabeling(uf: &UniqueFactorization, xi: &Homomorphism) -> Result<Vec<usize>, CycleError> {
    let (a, _) = cycle_subgroups(uf, xi)?;
    let minus = uf.minus().elements();
    Ok(a.elements()
        .iter()
        .flat_map(|&p| minus.iter().map(move |&x| uf.mul(p, x)))
        .collect())
}

pub fn to_cycle_data(uf: &UniqueFactorization, xi: &Homomorphism, eta: &Homomorphism) -> Result<CycleData, CycleError> {
    require_conditions(uf, xi, eta)?;
    let g = uf.group();
    let (a_sub, pi) = cycle_subgroups(uf, xi)?;
    let minus = uf.minus();
    let m = minus.len();
    let (xi_t, eta_t) = (dense(xi, uf.order()), dense(eta, uf.order()));
    let pos_a = |p: usize| a_sub.position(p).expect("element of A");
    let pos_m = |x: usize| minus.position(x).expect("element of G-");

    let action = minus
        .elements()
        .iter()
        .map(|&x| a_sub.elements().iter().map(|&p| pos_a(g.mul(g.mul(x, p), g.inv(x)))).collect())
        .collect();
    let relabel = canonical_relabeling(uf, xi)?;
    let mut unlabel = vec![usize::MAX; uf.order()];
    for (i, &h) in relabel.iter().enumerate() {
        unlabel[h] = i;
    }
    let mut zeta = vec![0; a_sub.len()];
    let mut f = vec![0; a_sub.len() * m];
    for &(u, p) in &pi {
        let ia = pos_a(p);
        zeta[ia] = pos_m(xi_t[u]);
        let base = uf.mul(eta_t[u], uf.inv(u));
        for (ix, &x) in minus.elements().iter().enumerate() {
            f[ia * m + ix] = unlabel[uf.mul(base, x)];
        }
    }
    let cd = CycleData {
        a: a_sub.to_group(g, "A"),
        gm: minus.to_group(g, "G-"),
        action,
        zeta,
        f,
    };
    cd.validate()?;
    Ok(cd)
}

/// Rebuilds `(G = G+ G-, ξ, η)` on `A ⋊ G-`.
pub fn from_cycle_data(cd: &CycleData) -> Result<(UniqueFactorization, Homomorphism, Homomorphism), CycleError> {
    let g = cd.validate()?;
    let m = cd.gm.order();
    let ea = cd.a.identity();
    let plus: Vec<usize> = cd.a.elements().map(|p| p * m + cd.zeta[p]).collect();
    let minus: Vec<usize> = cd.gm.elements().map(|x| ea * m + x).collect();
    let plus = Subgroup::new(&g, &plus)?;
    let minus = Subgroup::new(&g, &minus)?;
    let uf = make_factorization(&g, &plus, &minus)?;
    let mut f_inv = vec![0; cd.f.len()];
    for (i, &j) in cd.f.iter().enumerate() {
        f_inv[j] = i;
    }
    let project = |s: usize| ea * m + s % m;
    let domain = plus.elements().to_vec();
    let xi = Homomorphism { domain: domain.clone(), image: domain.iter().map(|&u| project(u)).collect() };
    let eta = Homomorphism { domain: domain.clone(), image: domain.iter().map(|&u| project(f_inv[u])).collect() };
    require_conditions(&uf, &xi, &eta).map_err(|e| CycleError::InvalidCycleData(e.to_string()))?;
    Ok((uf, xi, eta))
}

/// `from_cycle_data ∘ to_cycle_data` reproduces the triple under the
/// canonical relabeling.
pub fn roundtrip_holds(uf: &UniqueFactorization, xi: &Homomorphism, eta: &Homomorphism) -> Result<bool, CycleError> {
    let cd = to_cycle_data(uf, xi, eta)?;
    let (uf2, xi2, eta2) = from_cycle_data(&cd)?;
    let psi = canonical_relabeling(uf, xi)?;
    if !uf2.group().is_isomorphism_onto(uf.group(), &psi) {
        return Ok(false);
    }
    let maps_onto = |s: &Subgroup, t: &Subgroup| {
        let mut img: Vec<usize> = s.elements().iter().map(|&e| psi[e]).collect();
        img.sort_unstable();
        img == t.elements()
    };
    if !maps_onto(uf2.plus(), uf.plus()) || !maps_onto(uf2.minus(), uf.minus()) {
        return Ok(false);
    }
    let (xi_t, eta_t) = (dense(xi, uf.order()), dense(eta, uf.order()));
    Ok(xi2.domain.iter().enumerate().all(|(i, &u)| {
        xi_t[psi[u]] == psi[xi2.image[i]] && eta_t[psi[u]] == psi[eta2.image[i]]
    }))
}
