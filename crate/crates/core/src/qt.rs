//! Positive quasi-triangular structures on `H(G; G+, G-)`.
//!
//! A structure is determined by a pair of homomorphisms `ξ, η: G+ -> G-`;
//! its element is
//!
//! ```text
//! R = Σ_{u,v in G+} {u (η(v)^u)^-1} ⊗ {v ξ(u)}
//! ```

use std::collections::{BTreeSet, HashMap};

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::factorization::{FactorizationError, UniqueFactorization};
use crate::group::{enumerate_subgroup_homomorphisms, is_normal, GroupError, Homomorphism, Subgroup};
use crate::hopf::{HopfData, StructureMap};
use crate::tensor::{Rational, TensorElement, TensorError};

/// Largest candidate space the brute-force oracle will scan.
pub const ORACLE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QtError {
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("not a homomorphism G+ -> G-: {0}")]
    BadHomomorphism(String),
    #[error("pair conditions fail: {0}")]
    ConditionsFailed(String),
    #[error("oracle search space of {0} candidates exceeds the limit")]
    TooLarge(u128),
    #[error("(τR)R = 1⊗1 is {product} but ξ = η is {equal}")]
    TriangularityMismatch { product: bool, equal: bool },
    #[error("triangular datum routes disagree: abelian normal {abelian_normal}, identities {identities}")]
    DatumMismatch { abelian_normal: bool, identities: bool },
}

/// A classified structure; indices refer to the homomorphism enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QtPair {
    pub xi_index: usize,
    pub eta_index: usize,
    pub xi: Homomorphism,
    pub eta: Homomorphism,
}

/// Dense lookup of `h` by ambient index.
pub(crate) fn dense(h: &Homomorphism, n: usize) -> Vec<usize> {
    let mut t = vec![usize::MAX; n];
    for (&a, &b) in h.domain.iter().zip(&h.image) {
        t[a] = b;
    }
    t
}

/// Checks that `h` is a homomorphism from `G+` into `G-`.
pub fn validate_homomorphism(uf: &UniqueFactorization, h: &Homomorphism) -> Result<(), QtError> {
    if h.domain != uf.plus().elements() {
        return Err(QtError::BadHomomorphism("domain is not G+".into()));
    }
    if let Some(&y) = h.image.iter().find(|&&y| !uf.minus().contains(y)) {
        return Err(QtError::BadHomomorphism(format!("image {y} outside G-")));
    }
    if !h.is_homomorphism(uf.group(), uf.group()) {
        return Err(QtError::BadHomomorphism("multiplicativity fails".into()));
    }
    Ok(())
}

/// Every homomorphism `G+ -> G-` in the reference order used for indices.
pub fn plus_minus_homomorphisms(uf: &UniqueFactorization) -> Vec<Homomorphism> {
    enumerate_subgroup_homomorphisms(uf.group(), uf.plus(), uf.group(), uf.minus())
}

/// The homomorphism sending all of `G+` to the identity.
pub fn trivial_homomorphism(uf: &UniqueFactorization) -> Homomorphism {
    Homomorphism {
        domain: uf.plus().elements().to_vec(),
        image: vec![uf.identity(); uf.plus().len()],
    }
}

/// Per-equation outcome of the pair conditions. `None` means the equation
/// holds everywhere; otherwise the first failing arguments are recorded as
/// `[u, v]` or `[x, u]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub etaright: Option<Vec<usize>>,
    pub xileft: Option<Vec<usize>>,
    pub etaxi: Option<Vec<usize>>,
    pub etaneg_prime: Option<Vec<usize>>,
    pub xineg_prime: Option<Vec<usize>>,
    pub etaleft: Option<Vec<usize>>,
    pub xiright: Option<Vec<usize>>,
    pub xieta: Option<Vec<usize>>,
    pub etaneg: Option<Vec<usize>>,
    pub xineg: Option<Vec<usize>>,
    pub plus_prime_normal: bool,
    pub plus_dblprime_normal: bool,
    pub f_is_isomorphism: bool,
}

impl ConditionReport {
    pub fn primary(&self) -> [(&'static str, &Option<Vec<usize>>); 5] {
        [
            ("etaright", &self.etaright),
            ("xileft", &self.xileft),
            ("etaxi", &self.etaxi),
            ("etaneg'", &self.etaneg_prime),
            ("xineg'", &self.xineg_prime),
        ]
    }

    pub fn equivalent(&self) -> [(&'static str, &Option<Vec<usize>>); 5] {
        [
            ("etaleft", &self.etaleft),
            ("xiright", &self.xiright),
            ("xieta", &self.xieta),
            ("etaneg", &self.etaneg),
            ("xineg", &self.xineg),
        ]
    }

    pub fn primary_pass(&self) -> bool {
        self.primary().iter().all(|(_, w)| w.is_none())
    }

    pub fn equivalent_pass(&self) -> bool {
        self.equivalent().iter().all(|(_, w)| w.is_none())
    }

    pub fn structural_pass(&self) -> bool {
        self.plus_prime_normal && self.plus_dblprime_normal && self.f_is_isomorphism
    }

    /// The three routes agree.
    pub fn is_consistent(&self) -> bool {
        self.primary_pass() == self.equivalent_pass() && self.primary_pass() == self.structural_pass()
    }

    /// First failing primary equation, for error messages.
    pub fn first_failure(&self) -> Option<String> {
        self.primary()
            .iter()
            .chain(self.equivalent().iter())
            .find_map(|(name, w)| w.as_ref().map(|w| format!("({name}) at {w:?}")))
            .or_else(|| (!self.structural_pass()).then(|| "normality or F".to_string()))
    }
}

struct PairView<'a> {
    uf: &'a UniqueFactorization,
    xi: Vec<usize>,
    eta: Vec<usize>,
}

impl<'a> PairView<'a> {
    fn new(uf: &'a UniqueFactorization, xi: &Homomorphism, eta: &Homomorphism) -> Result<Self, QtError> {
        validate_homomorphism(uf, xi)?;
        validate_homomorphism(uf, eta)?;
        let n = uf.order();
        Ok(PairView { uf, xi: dense(xi, n), eta: dense(eta, n) })
    }

    /// First `[a, b]` in `A x B` where `f` fails.
    fn search(a: &[usize], b: &[usize], f: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
        a.iter().find_map(|&p| b.iter().find(|&&q| !f(p, q)).map(|&q| vec![p, q]))
    }

    fn etaright(&self) -> Option<Vec<usize>> {
        let (uf, p) = (self.uf, self.uf.plus().elements());
        Self::search(p, p, |u, v| {
            uf.act_rmp(self.xi[u], v) == self.xi[uf.act_rpm(u, self.eta[v])]
        })
    }

    fn xileft(&self) -> Option<Vec<usize>> {
        let (uf, p) = (self.uf, self.uf.plus().elements());
        Self::search(p, p, |u, v| {
            uf.act_lpm(u, self.eta[v]) == self.eta[uf.act_lmp(self.xi[u], v)]
        })
    }

    fn etaxi(&self) -> Option<Vec<usize>> {
        let (uf, p) = (self.uf, self.uf.plus().elements());
        Self::search(p, p, |u, v| {
            uf.mul(u, v) == uf.mul(uf.act_lmp(self.xi[u], v), uf.act_rpm(u, self.eta[v]))
        })
    }

    fn neg_prime(&self, h: &[usize]) -> Option<Vec<usize>> {
        let uf = self.uf;
        Self::search(uf.minus().elements(), uf.plus().elements(), |x, u| {
            uf.mul(h[uf.act_lmp(x, u)], uf.act_rmp(x, u)) == uf.mul(x, h[u])
        })
    }

    fn etaleft(&self) -> Option<Vec<usize>> {
        let (uf, p) = (self.uf, self.uf.plus().elements());
        Self::search(p, p, |u, v| {
            uf.act_lpm(v, self.xi[u]) == self.xi[uf.act_lmp(self.eta[v], u)]
        })
    }

    fn xiright(&self) -> Option<Vec<usize>> {
        let (uf, p) = (self.uf, self.uf.plus().elements());
        Self::search(p, p, |u, v| {
            uf.act_rmp(self.eta[v], u) == self.eta[uf.act_rpm(v, self.xi[u])]
        })
    }

    fn xieta(&self) -> Option<Vec<usize>> {
        let (uf, p) = (self.uf, self.uf.plus().elements());
        Self::search(p, p, |u, v| {
            uf.mul(u, v) == uf.mul(uf.act_lmp(self.eta[u], v), uf.act_rpm(u, self.xi[v]))
        })
    }

    fn neg(&self, h: &[usize]) -> Option<Vec<usize>> {
        let uf = self.uf;
        Self::search(uf.minus().elements(), uf.plus().elements(), |x, u| {
            uf.mul(uf.act_lpm(u, x), h[uf.act_rpm(u, x)]) == uf.mul(h[u], x)
        })
    }

    fn primary_holds(&self) -> bool {
        self.etaright().is_none()
            && self.xileft().is_none()
            && self.etaxi().is_none()
            && self.neg_prime(&self.xi).is_none()
            && self.neg_prime(&self.eta).is_none()
    }

    /// `{u ξ(u^-1)}` keyed by `u`.
    fn plus_prime(&self) -> Vec<(usize, usize)> {
        let uf = self.uf;
        uf.plus().elements().iter().map(|&u| (u, uf.mul(u, self.xi[uf.inv(u)]))).collect()
    }

    fn structural(&self) -> (bool, bool, bool) {
        let uf = self.uf;
        let g = uf.group();
        let prime = self.plus_prime();
        let dblprime: Vec<usize> =
            uf.plus().elements().iter().map(|&u| uf.mul(self.eta[uf.inv(u)], u)).collect();
        let normal = |elems: &[usize]| -> Option<bool> {
            let s = Subgroup::new(g, elems).ok()?;
            is_normal(g, &s).ok()
        };
        let prime_elems: Vec<usize> = prime.iter().map(|&(_, a)| a).collect();
        let prime_normal = normal(&prime_elems).unwrap_or(false);
        let dblprime_normal = normal(&dblprime).unwrap_or(false);
        let f_iso = Subgroup::new(g, &prime_elems).is_ok()
            && Subgroup::new(g, &dblprime).is_ok()
            && {
                let f: HashMap<usize, usize> = prime
                    .iter()
                    .map(|&(u, a)| (a, uf.mul(self.eta[u], uf.inv(u))))
                    .collect();
                let image: BTreeSet<usize> = f.values().copied().collect();
                let dbl: BTreeSet<usize> = dblprime.iter().copied().collect();
                f.len() == prime.len()
                    && image == dbl
                    && prime_elems.iter().all(|&a| {
                        prime_elems.iter().all(|&b| f.get(&g.mul(a, b)) == Some(&g.mul(f[&a], f[&b])))
                    })
            };
        (prime_normal, dblprime_normal, f_iso)
    }
}

/// Tests all ten pair equations and, independently, normality of `G+'`,
/// `G+''` and the isomorphism property of `F`.
pub fn check_pair_conditions(
    uf: &UniqueFactorization,
    xi: &Homomorphism,
    eta: &Homomorphism,
) -> Result<ConditionReport, QtError> {
    let p = PairView::new(uf, xi, eta)?;
    let (plus_prime_normal, plus_dblprime_normal, f_is_isomorphism) = p.structural();
    Ok(ConditionReport {
        etaright: p.etaright(),
        xileft: p.xileft(),
        etaxi: p.etaxi(),
        etaneg_prime: p.neg_prime(&p.xi),
        xineg_prime: p.neg_prime(&p.eta),
        etaleft: p.etaleft(),
        xiright: p.xiright(),
        xieta: p.xieta(),
        etaneg: p.neg(&p.xi),
        xineg: p.neg(&p.eta),
        plus_prime_normal,
        plus_dblprime_normal,
        f_is_isomorphism,
    })
}

/// The five primary equations only, with early exit.
pub fn pair_conditions_hold(
    uf: &UniqueFactorization,
    xi: &Homomorphism,
    eta: &Homomorphism,
) -> Result<bool, QtError> {
    Ok(PairView::new(uf, xi, eta)?.primary_holds())
}

pub(crate) fn require_conditions(
    uf: &UniqueFactorization,
    xi: &Homomorphism,
    eta: &Homomorphism,
) -> Result<(), QtError> {
    let view = PairView::new(uf, xi, eta)?;
    if view.primary_holds() {
        return Ok(());
    }
    let report = check_pair_conditions(uf, xi, eta)?;
    Err(QtError::ConditionsFailed(report.first_failure().unwrap_or_default()))
}

/// The element `R` of a pair satisfying the conditions.
pub fn build_r(uf: &UniqueFactorization, xi: &Homomorphism, eta: &Homomorphism) -> Result<TensorElement, QtError> {
    require_conditions(uf, xi, eta)?;
    Ok(r_formula(uf, xi, eta))
}

pub(crate) fn r_formula(uf: &UniqueFactorization, xi: &Homomorphism, eta: &Homomorphism) -> TensorElement {
    let n = uf.order();
    let (xi, eta) = (dense(xi, n), dense(eta, n));
    let plus = uf.plus().elements();
    let tuples = plus.iter().flat_map(|&u| {
        let (xi, eta) = (&xi, &eta);
        plus.iter().map(move |&v| {
            let left = uf.mul(u, uf.inv(uf.act_rmp(eta[v], u)));
            vec![left, uf.mul(v, xi[u])]
        })
    });
    TensorElement::from_tuples(2, tuples)
}

/// First failing quasi-triangularity axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QtFailure {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

/// Result of [`verify_qt`]; `failure` is `None` when every axiom holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QtVerdict {
    pub failure: Option<QtFailure>,
}

impl QtVerdict {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    fn fail(axiom: &'static str, witness: Vec<usize>) -> Self {
        QtVerdict { failure: Some(QtFailure { axiom, witness }) }
    }
}

/// Exact check of the quasi-triangular axioms for `r` in `H ⊗ H`.
pub fn verify_qt(h: &HopfData, r: &TensorElement) -> QtVerdict {
    if r.arity() != 2 {
        return QtVerdict::fail("arity", vec![r.arity()]);
    }
    if r.is_zero() {
        return QtVerdict::fail("invertibility", Vec::new());
    }
    match verify_qt_inner(h, r) {
        Ok(v) => v,
        Err(TensorError::BadIndex(i)) => QtVerdict::fail("basis index", vec![i]),
        Err(_) => QtVerdict::fail("well-formedness", Vec::new()),
    }
}

fn verify_qt_inner(h: &HopfData, r: &TensorElement) -> Result<QtVerdict, TensorError> {
    let one = h.unit_k(1);
    if h.slot_map(r, 0, StructureMap::Counit)? != one || h.slot_map(r, 1, StructureMap::Counit)? != one {
        return Ok(QtVerdict::fail("counit", Vec::new()));
    }

    let r13 = h.embed_slots(r, 3, &[0, 2])?;
    let r23 = h.embed_slots(r, 3, &[1, 2])?;
    let r12 = h.embed_slots(r, 3, &[0, 1])?;
    if h.slot_map(r, 0, StructureMap::Coproduct)? != h.product(&r13, &r23)? {
        return Ok(QtVerdict::fail("(Δ⊗id)R = R13 R23", Vec::new()));
    }
    if h.slot_map(r, 1, StructureMap::Coproduct)? != h.product(&r13, &r12)? {
        return Ok(QtVerdict::fail("(id⊗Δ)R = R13 R12", Vec::new()));
    }

    let candidate = h.slot_map(r, 0, StructureMap::Antipode)?;
    if !h.is_inverse_pair(r, &candidate)? && h.invert_element(r).is_err() {
        return Ok(QtVerdict::fail("invertibility", Vec::new()));
    }

    for g in 0..h.dim() {
        let delta = h.slot_map(&TensorElement::basis(vec![g]), 0, StructureMap::Coproduct)?;
        let opposite = delta.tau_swap(0, 1)?;
        if h.product(&opposite, r)? != h.product(r, &delta)? {
            return Ok(QtVerdict::fail("τΔ(g) R = R Δ(g)", vec![g]));
        }
    }
    Ok(QtVerdict { failure: None })
}

/// All pairs satisfying the conditions, ordered by `(xi_index, eta_index)`.
pub fn classify(uf: &UniqueFactorization) -> Vec<QtPair> {
    let homs = plus_minus_homomorphisms(uf);
    let k = homs.len();
    (0..k * k)
        .into_par_iter()
        .filter_map(|idx| {
            let (i, j) = (idx / k, idx % k);
            let ok = pair_conditions_hold(uf, &homs[i], &homs[j]).expect("enumerated homomorphisms");
            ok.then(|| QtPair { xi_index: i, eta_index: j, xi: homs[i].clone(), eta: homs[j].clone() })
        })
        .collect()
}

/// A point of the oracle's search space:
/// `R = Σ r(u,v) {u φ(u,v)} ⊗ {v ψ(u,v)}`, tables row-major over local `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RCandidate {
    pub phi: Vec<usize>,
    pub psi: Vec<usize>,
    pub r: Vec<Rational>,
}

impl RCandidate {
    pub fn to_tensor(&self, uf: &UniqueFactorization) -> TensorElement {
        let plus = uf.plus().elements();
        let p = plus.len();
        let terms = (0..p * p).map(|k| {
            let (u, v) = (plus[k / p], plus[k % p]);
            (vec![uf.mul(u, self.phi[k]), uf.mul(v, self.psi[k])], self.r[k].clone())
        });
        TensorElement::from_terms(2, terms)
    }
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub scanned: u128,
    pub passing: Vec<RCandidate>,
}

/// Number of candidates the oracle would scan.
pub fn oracle_space_size(uf: &UniqueFactorization) -> Option<u128> {
    let p = uf.plus().len() as u32;
    (uf.minus().len() as u128).checked_pow(2 * p * p)
}

/// Scans every candidate with `r ≡ 1` and keeps those passing [`verify_qt`].
/// Independent of the pair conditions.
pub fn bruteforce_oracle(uf: &UniqueFactorization, h: &HopfData) -> Result<OracleResult, QtError> {
    let total = match oracle_space_size(uf) {
        Some(t) if t <= ORACLE_LIMIT => t,
        Some(t) => return Err(QtError::TooLarge(t)),
        None => return Err(QtError::TooLarge(u128::MAX)),
    };
    let minus = uf.minus().elements();
    let m = minus.len() as u128;
    let pp = uf.plus().len() * uf.plus().len();
    let passing = (0..total as u64)
        .into_par_iter()
        .filter_map(|idx| {
            let mut c = idx as u128;
            let mut digits = Vec::with_capacity(2 * pp);
            for _ in 0..2 * pp {
                digits.push(minus[(c % m) as usize]);
                c /= m;
            }
            let cand = RCandidate {
                phi: digits[..pp].to_vec(),
                psi: digits[pp..].to_vec(),
                r: vec![Rational::one(); pp],
            };
            verify_qt(h, &cand.to_tensor(uf)).holds().then_some(cand)
        })
        .collect();
    Ok(OracleResult { scanned: total, passing })
}

/// `(τR)R = 1⊗1`, asserted to coincide with `ξ = η`.
pub fn check_triangular(
    h: &HopfData,
    r: &TensorElement,
    xi: &Homomorphism,
    eta: &Homomorphism,
) -> Result<bool, QtError> {
    let product = h.product(&r.tau_swap(0, 1)?, r)? == h.unit_k(2);
    let equal = xi == eta;
    if product != equal {
        return Err(QtError::TriangularityMismatch { product, equal });
    }
    Ok(product)
}

/// Whether `ξ` gives a triangular structure, by two routes that must agree:
/// `A = {u ξ(u^-1)}` is an abelian normal subgroup, and the identities
/// `uv = (^ξ(u) v)(u^ξ(v))`, `ξ(^x u) x^u = x ξ(u)`.
pub fn check_triangular_datum(uf: &UniqueFactorization, xi: &Homomorphism) -> Result<bool, QtError> {
    let view = PairView::new(uf, xi, xi)?;
    let g = uf.group();
    let a: Vec<usize> = view.plus_prime().into_iter().map(|(_, a)| a).collect();
    let abelian_normal = match Subgroup::new(g, &a) {
        Ok(s) => is_normal(g, &s)? && a.iter().all(|&p| a.iter().all(|&q| g.mul(p, q) == g.mul(q, p))),
        Err(_) => false,
    };
    let identities = view.etaxi().is_none() && view.neg_prime(&view.xi).is_none();
    if abelian_normal != identities {
        return Err(QtError::DatumMismatch { abelian_normal, identities });
    }
    Ok(abelian_normal)
}
