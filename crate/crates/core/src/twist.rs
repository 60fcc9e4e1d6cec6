//! Shifted factorizations `G = G+' G-`, the quasi-isomorphism
//! `H(G; G+', G-) -> H(G; G+, G-)` they induce, and normalization of
//! quasi-triangular structures.
//!
//! ```text
//! G+' = {σ(u) u}
//! φ{σ(u) u x}' = {u x}
//! T = Σ_{u,v in G+} {u σ(v)} ⊗ {v}      T^-1 = Σ {u σ(v)^-1} ⊗ {v}
//! ```

use thiserror::Error;

use crate::factorization::{make_factorization, FactorizationError, UniqueFactorization};
use crate::group::{GroupError, Homomorphism, Subgroup};
use crate::hopf::{build_hopf, HopfData, StructureMap};
use crate::qt::{build_r, dense, plus_minus_homomorphisms, require_conditions, verify_qt, QtError};
use crate::tensor::{TensorElement, TensorError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("incompatible factorizations: {0}")]
    IncompatibleFactorizations(String),
    #[error("invalid shift: {0}")]
    InvalidShift(String),
    #[error("quasi-isomorphism invariant fails: {0}")]
    InvariantFailed(String),
    #[error(transparent)]
    Qt(#[from] QtError),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// `σ: G+ -> G-`, stored as `sigma[i] = σ(plus[i])`.
#[derive(Debug, Clone)]
pub struct ShiftMap {
    uf: UniqueFactorization,
    sigma: Vec<usize>,
}

impl ShiftMap {
    /// Validates `σ` against the group condition
    /// `σ((u^σ(v)) v) = σ(u) (^u σ(v))`.
    pub fn from_sigma(uf: &UniqueFactorization, sigma: Vec<usize>) -> Result<Self, TwistError> {
        let plus = uf.plus().elements();
        if sigma.len() != plus.len() {
            return Err(TwistError::InvalidShift("σ must have one value per element of G+".into()));
        }
        if let Some(&x) = sigma.iter().find(|&&x| !uf.minus().contains(x)) {
            return Err(TwistError::InvalidShift(format!("value {x} outside G-")));
        }
        let shift = ShiftMap { uf: uf.clone(), sigma };
        for &u in plus {
            for &v in plus {
                let sv = shift.sigma(v);
                let left = shift.sigma(uf.mul(uf.act_rpm(u, sv), v));
                let right = uf.mul(shift.sigma(u), uf.act_lpm(u, sv));
                if left != right {
                    return Err(TwistError::InvalidShift(format!("group condition fails at ({u}, {v})")));
                }
            }
        }
        Subgroup::new(uf.group(), &shift.shifted_elements())
            .map_err(|e| TwistError::InvalidShift(e.to_string()))?;
        Ok(shift)
    }

    pub fn uf(&self) -> &UniqueFactorization {
        &self.uf
    }

    pub fn sigma(&self, u: usize) -> usize {
        self.sigma[self.uf.plus().position(u).expect("element of G+")]
    }

    pub fn table(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_trivial(&self) -> bool {
        self.sigma.iter().all(|&x| x == self.uf.identity())
    }

    /// `{σ(u) u}` in the order of `G+`.
    pub fn shifted_elements(&self) -> Vec<usize> {
        let uf = &self.uf;
        uf.plus().elements().iter().map(|&u| uf.mul(self.sigma(u), u)).collect()
    }

    pub fn shifted_factorization(&self) -> Result<UniqueFactorization, TwistError> {
        let g = self.uf.group();
        let plus = Subgroup::new(g, &self.shifted_elements())?;
        Ok(make_factorization(g, &plus, self.uf.minus())?)
    }
}

/// The shift taking `uf` to `shifted`; both must share `G` and `G-`.
pub fn make_shift(uf: &UniqueFactorization, shifted: &UniqueFactorization) -> Result<ShiftMap, TwistError> {
    if uf.group().rows() != shifted.group().rows() {
        return Err(TwistError::IncompatibleFactorizations("different groups".into()));
    }
    if uf.minus() != shifted.minus() {
        return Err(TwistError::IncompatibleFactorizations("different G-".into()));
    }
    // u = x w with w in G+', so σ(u) = x^-1.
    let sigma = uf.plus().elements().iter().map(|&u| uf.inv(shifted.bar_minus(u))).collect();
    ShiftMap::from_sigma(uf, sigma)
}

/// `(φ, T)` with every invariant checked on basis elements.
#[derive(Debug, Clone)]
pub struct QuasiIso {
    pub source: UniqueFactorization,
    pub target: UniqueFactorization,
    /// `phi[g]` is the image of `{g}'`.
    pub phi: Vec<usize>,
    pub t: TensorElement,
    pub t_inv: TensorElement,
}

impl QuasiIso {
    pub fn apply(&self, a: &TensorElement) -> TensorElement {
        a.map_tuples(|t| t.iter().map(|&g| self.phi[g]).collect())
    }

    pub fn apply_inverse(&self, a: &TensorElement) -> TensorElement {
        let mut inv = vec![0; self.phi.len()];
        for (g, &p) in self.phi.iter().enumerate() {
            inv[p] = g;
        }
        a.map_tuples(|t| t.iter().map(|&g| inv[g]).collect())
    }
}

pub fn build_quasi_iso(shift: &ShiftMap) -> Result<QuasiIso, TwistError> {
    let uf = shift.uf();
    let source = shift.shifted_factorization()?;
    let plus = uf.plus().elements();
    let n = uf.order();

    let mut phi = vec![0; n];
    for &u in plus {
        let w = uf.mul(shift.sigma(u), u);
        for &x in uf.minus().elements() {
            phi[uf.mul(w, x)] = uf.mul(u, x);
        }
    }
    let pairs = || plus.iter().flat_map(|&u| plus.iter().map(move |&v| (u, v)));
    let t = TensorElement::from_tuples(2, pairs().map(|(u, v)| vec![uf.mul(u, shift.sigma(v)), v]));
    let t_inv =
        TensorElement::from_tuples(2, pairs().map(|(u, v)| vec![uf.mul(u, uf.inv(shift.sigma(v))), v]));
    let q = QuasiIso { source, target: uf.clone(), phi, t, t_inv };
    check_invariants(&q, &build_hopf(&q.source), &build_hopf(uf))?;
    Ok(q)
}

fn check_invariants(q: &QuasiIso, src: &HopfData, tgt: &HopfData) -> Result<(), TwistError> {
    let fail = |s: String| Err(TwistError::InvariantFailed(s));
    let n = q.phi.len();
    if !tgt.is_inverse_pair(&q.t, &q.t_inv)? {
        return fail("closed form of T^-1".into());
    }
    if q.apply(&src.unit_k(1)) != tgt.unit_k(1) {
        return fail("φ(1') = 1".into());
    }
    for a in 0..n {
        for b in 0..n {
            let left = src.basis_product(a, b).map(|p| q.phi[p]);
            if left != tgt.basis_product(q.phi[a], q.phi[b]) {
                return fail(format!("φ multiplicative at ({a}, {b})"));
            }
        }
    }
    for g in 0..n {
        let basis = TensorElement::basis(vec![g]);
        let left = q.apply(&src.slot_map(&basis, 0, StructureMap::Coproduct)?);
        let inner = tgt.slot_map(&TensorElement::basis(vec![q.phi[g]]), 0, StructureMap::Coproduct)?;
        let right = tgt.product(&tgt.product(&q.t, &inner)?, &q.t_inv)?;
        if left != right {
            return fail(format!("(φ⊗φ)Δ' = T(Δφ)T^-1 at {g}"));
        }
    }
    if !cocycle_holds(tgt, &q.t)? {
        return fail("(T⊗1)(Δ⊗id)T = (1⊗T)(id⊗Δ)T".into());
    }
    Ok(())
}

/// `(T⊗1)(Δ⊗id)T = (1⊗T)(id⊗Δ)T`.
pub fn cocycle_holds(h: &HopfData, t: &TensorElement) -> Result<bool, TensorError> {
    let left = h.product(&h.embed_slots(t, 3, &[0, 1])?, &h.slot_map(t, 0, StructureMap::Coproduct)?)?;
    let right = h.product(&h.embed_slots(t, 3, &[1, 2])?, &h.slot_map(t, 1, StructureMap::Coproduct)?)?;
    Ok(left == right)
}

/// A quasi-triangular structure carried to its normal form.
#[derive(Debug, Clone)]
pub struct NormalForm {
    pub uf: UniqueFactorization,
    pub xi: Homomorphism,
    pub eta: Homomorphism,
    pub xi_index: usize,
    pub eta_index: usize,
    pub r: TensorElement,
    pub quasi_iso: QuasiIso,
}

/// Twists with `σ(u) = ξ(u^-1)` and checks the result against the closed
/// form `ξ' = e`, `η'(ξ(v^-1) v) = ξ(v)^-1 η(v)`.
pub fn normalize_qt(uf: &UniqueFactorization, xi: &Homomorphism, eta: &Homomorphism) -> Result<NormalForm, TwistError> {
    require_conditions(uf, xi, eta)?;
    let n = uf.order();
    let (xi_t, eta_t) = (dense(xi, n), dense(eta, n));
    let plus = uf.plus().elements();
    let sigma = plus.iter().map(|&u| xi_t[uf.inv(u)]).collect();
    let shift = ShiftMap::from_sigma(uf, sigma)?;
    let q = build_quasi_iso(&shift)?;
    let h = build_hopf(uf);
    let r = build_r(uf, xi, eta)?;
    let conjugated = h.product(&h.product(&q.t.tau_swap(0, 1)?, &r)?, &q.t_inv)?;
    let r_prime = q.apply_inverse(&conjugated);

    let target = q.source.clone();
    let mut eta_prime: Vec<(usize, usize)> = plus
        .iter()
        .map(|&v| (uf.mul(xi_t[uf.inv(v)], v), uf.mul(uf.inv(xi_t[v]), eta_t[v])))
        .collect();
    eta_prime.sort_unstable();
    let eta_prime = Homomorphism {
        domain: eta_prime.iter().map(|p| p.0).collect(),
        image: eta_prime.iter().map(|p| p.1).collect(),
    };
    let xi_prime = crate::qt::trivial_homomorphism(&target);
    let expected = build_r(&target, &xi_prime, &eta_prime)?;
    if expected != r_prime {
        return Err(TwistError::InvariantFailed("twisted R differs from the normal closed form".into()));
    }
    let verdict = verify_qt(&build_hopf(&target), &r_prime);
    if let Some(f) = verdict.failure {
        return Err(TwistError::InvariantFailed(format!("R' fails {}", f.axiom)));
    }
    let homs = plus_minus_homomorphisms(&target);
    let index = |h: &Homomorphism| homs.iter().position(|k| k == h).expect("enumerated homomorphism");
    Ok(NormalForm {
        xi_index: index(&xi_prime),
        eta_index: index(&eta_prime),
        uf: target,
        xi: xi_prime,
        eta: eta_prime,
        r: r_prime,
        quasi_iso: q,
    })
}

/// A structure is normal when `ξ` is trivial.
pub fn is_normal_qt(uf: &UniqueFactorization, xi: &Homomorphism) -> bool {
    xi.is_trivial(uf.identity())
}
