//! Finite groupoids, bisections and groupoid sets.
//!
//! The groupoid `Γ+` of a factorization has total space `G` over `G+`:
//! `α(g) = g+`, `β(g) = bar g+`, `g h = g h-` when `β(g) = α(h)`.
//! Its linearization is the algebra structure of `H(G; G+, G-)`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::factorization::UniqueFactorization;
use crate::hopf::HopfData;
use crate::tensor::TensorElement;
use crate::ybe::ybe_failure;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("groupoid invariant fails: {0}")]
    Invalid(String),
    #[error("not a bisection: {0}")]
    NotABisection(String),
    #[error("element is not positive")]
    NotPositive,
    #[error("bisection does not satisfy the groupoid Yang-Baxter equation")]
    NotAYbeBisection,
    #[error("invalid groupoid set: {0}")]
    InvalidGammaSet(String),
    #[error("tuple of arity {0} does not fit a power of {1}")]
    Arity(usize, usize),
}

#[derive(Debug, Clone)]
enum ProductRule {
    Table(Vec<Option<usize>>),
    /// Componentwise product in `factor^k`, elements in mixed radix with
    /// the first component most significant.
    Power { factor: Box<Groupoid>, k: usize },
}

/// A finite groupoid on arrows `0..total` over objects `0..base`.
#[derive(Debug, Clone)]
pub struct Groupoid {
    base: usize,
    total: usize,
    alpha: Vec<usize>,
    beta: Vec<usize>,
    unit: Vec<usize>,
    inv: Vec<usize>,
    product: ProductRule,
}

impl Groupoid {
    /// Builds and validates a groupoid from explicit tables. `product` is
    /// `total * total`, defined exactly on composable pairs.
    pub fn from_tables(
        base: usize,
        alpha: Vec<usize>,
        beta: Vec<usize>,
        unit: Vec<usize>,
        inv: Vec<usize>,
        product: Vec<Option<usize>>,
    ) -> Result<Self, GroupoidError> {
        let total = alpha.len();
        let bad = |s: &str| GroupoidError::Invalid(s.to_string());
        if beta.len() != total || inv.len() != total || unit.len() != base || product.len() != total * total {
            return Err(bad("table sizes"));
        }
        if alpha.iter().chain(&beta).any(|&b| b >= base) || unit.iter().chain(&inv).any(|&g| g >= total) {
            return Err(bad("index out of range"));
        }
        let g = Groupoid { base, total, alpha, beta, unit, inv, product: ProductRule::Table(product) };
        g.validate()?;
        Ok(g)
    }

    pub fn base_size(&self) -> usize {
        self.base
    }

    pub fn total_size(&self) -> usize {
        self.total
    }

    pub fn alpha(&self, g: usize) -> usize {
        self.alpha[g]
    }

    pub fn beta(&self, g: usize) -> usize {
        self.beta[g]
    }

    pub fn unit(&self, b: usize) -> usize {
        self.unit[b]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// `g h`, defined when `β(g) = α(h)`.
    pub fn product(&self, g: usize, h: usize) -> Option<usize> {
        match &self.product {
            ProductRule::Table(t) => t[g * self.total + h],
            ProductRule::Power { factor, k } => {
                let (a, b) = (self.decode(g), self.decode(h));
                let parts: Option<Vec<usize>> = (0..*k).map(|i| factor.product(a[i], b[i])).collect();
                parts.map(|p| self.encode(&p))
            }
        }
    }

    /// Components of an arrow of a power groupoid; a one-element vector otherwise.
    pub fn decode(&self, g: usize) -> Vec<usize> {
        match &self.product {
            ProductRule::Table(_) => vec![g],
            ProductRule::Power { factor, k } => mixed_radix(g, factor.total, *k),
        }
    }

    pub fn encode(&self, parts: &[usize]) -> usize {
        match &self.product {
            ProductRule::Table(_) => parts[0],
            ProductRule::Power { factor, .. } => parts.iter().fold(0, |acc, &p| acc * factor.total + p),
        }
    }

    pub fn decode_base(&self, b: usize) -> Vec<usize> {
        match &self.product {
            ProductRule::Table(_) => vec![b],
            ProductRule::Power { factor, k } => mixed_radix(b, factor.base, *k),
        }
    }

    pub fn encode_base(&self, parts: &[usize]) -> usize {
        match &self.product {
            ProductRule::Table(_) => parts[0],
            ProductRule::Power { factor, .. } => parts.iter().fold(0, |acc, &p| acc * factor.base + p),
        }
    }

    /// The product groupoid `self^k` over `base^k`. Structure maps are
    /// tabulated; the product is evaluated componentwise.
    pub fn power(&self, k: usize) -> Groupoid {
        let total = self.total.pow(k as u32);
        let base = self.base.pow(k as u32);
        let f = |n: usize, radix: usize, m: &dyn Fn(usize) -> usize| {
            mixed_radix(n, radix, k).into_iter().fold(0, |acc, p| acc * radix + m(p))
        };
        let (t, b) = (self.total, self.base);
        Groupoid {
            base,
            total,
            alpha: (0..total).map(|g| recode(g, t, b, k, &|p| self.alpha[p])).collect(),
            beta: (0..total).map(|g| recode(g, t, b, k, &|p| self.beta[p])).collect(),
            unit: (0..base).map(|x| recode(x, b, t, k, &|p| self.unit[p])).collect(),
            inv: (0..total).map(|g| f(g, t, &|p| self.inv[p])).collect(),
            product: ProductRule::Power { factor: Box::new(self.clone()), k },
        }
    }

    /// Arrows grouped by source.
    pub fn by_alpha(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.base];
        for g in 0..self.total {
            out[self.alpha[g]].push(g);
        }
        out
    }

    /// Exhaustive check of the groupoid axioms.
    pub fn validate(&self) -> Result<(), GroupoidError> {
        let fail = |s: String| Err(GroupoidError::Invalid(s));
        for b in 0..self.base {
            let e = self.unit[b];
            if self.alpha[e] != b || self.beta[e] != b {
                return fail(format!("unit of {b}"));
            }
        }
        let by_alpha = self.by_alpha();
        for g in 0..self.total {
            let gi = self.inv[g];
            if self.alpha[gi] != self.beta[g] || self.beta[gi] != self.alpha[g] {
                return fail(format!("inverse of {g}"));
            }
            if self.product(g, gi) != Some(self.unit[self.alpha[g]]) {
                return fail(format!("g g^-1 for {g}"));
            }
            if self.product(self.unit[self.alpha[g]], g) != Some(g)
                || self.product(g, self.unit[self.beta[g]]) != Some(g)
            {
                return fail(format!("units act trivially on {g}"));
            }
            if let ProductRule::Table(t) = &self.product {
                let defined = t[g * self.total..(g + 1) * self.total].iter().filter(|p| p.is_some()).count();
                if defined != by_alpha[self.beta[g]].len() {
                    return fail(format!("product of {g} defined off composable pairs"));
                }
            }
            for &h in &by_alpha[self.beta[g]] {
                let Some(gh) = self.product(g, h) else {
                    return fail(format!("({g}, {h}) composable but undefined"));
                };
                if self.alpha[gh] != self.alpha[g] || self.beta[gh] != self.beta[h] {
                    return fail(format!("source/target of {g}*{h}"));
                }
                for &k in &by_alpha[self.beta[h]] {
                    let left = self.product(gh, k);
                    let right = self.product(h, k).and_then(|hk| self.product(g, hk));
                    if left != right {
                        return fail(format!("associativity at ({g}, {h}, {k})"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn mixed_radix(mut n: usize, radix: usize, k: usize) -> Vec<usize> {
    let mut parts = vec![0; k];
    for slot in parts.iter_mut().rev() {
        *slot = n % radix;
        n /= radix;
    }
    parts
}

fn recode(n: usize, from: usize, to: usize, k: usize, m: &dyn Fn(usize) -> usize) -> usize {
    mixed_radix(n, from, k).into_iter().fold(0, |acc, p| acc * to + m(p))
}

/// `Γ+` with objects indexed by position in `G+`.
pub fn build_gamma_plus(uf: &UniqueFactorization) -> Groupoid {
    let n = uf.order();
    let pos = |u: usize| uf.plus().position(u).expect("element of G+");
    let alpha: Vec<usize> = (0..n).map(|g| pos(uf.plus_part(g))).collect();
    let beta: Vec<usize> = (0..n).map(|g| pos(uf.bar_plus(g))).collect();
    let unit = uf.plus().elements().to_vec();
    let inv = (0..n).map(|g| uf.mul(uf.bar_plus(g), uf.inv(uf.minus_part(g)))).collect();
    let mut product = vec![None; n * n];
    for g in 0..n {
        for h in 0..n {
            if beta[g] == alpha[h] {
                product[g * n + h] = Some(uf.mul(g, uf.minus_part(h)));
            }
        }
    }
    Groupoid::from_tables(uf.plus().len(), alpha, beta, unit, inv, product)
        .expect("Γ+ satisfies the groupoid axioms")
}

/// The groupoid product agrees with the algebra multiplication on every basis pair.
pub fn linearization_matches(gamma: &Groupoid, h: &HopfData) -> bool {
    let n = h.dim();
    gamma.total_size() == n
        && (0..n).all(|g| (0..n).all(|k| gamma.product(g, k) == h.basis_product(g, k)))
}

/// A bisection, stored as the section `b -> γ` with `α(γ) = b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bisection {
    section: Vec<usize>,
}

impl Bisection {
    pub fn from_subset(gamma: &Groupoid, subset: &[usize]) -> Result<Self, GroupoidError> {
        let bad = |s: String| Err(GroupoidError::NotABisection(s));
        if subset.len() != gamma.base_size() {
            return bad(format!("{} elements over {} objects", subset.len(), gamma.base_size()));
        }
        let mut section = vec![usize::MAX; gamma.base_size()];
        let mut hit_beta = vec![false; gamma.base_size()];
        for &g in subset {
            if g >= gamma.total_size() {
                return bad(format!("arrow {g} out of range"));
            }
            let (a, b) = (gamma.alpha(g), gamma.beta(g));
            if section[a] != usize::MAX {
                return bad(format!("α not injective at object {a}"));
            }
            if hit_beta[b] {
                return bad(format!("β not injective at object {b}"));
            }
            section[a] = g;
            hit_beta[b] = true;
        }
        Ok(Bisection { section })
    }

    pub fn identity(gamma: &Groupoid) -> Self {
        Bisection { section: (0..gamma.base_size()).map(|b| gamma.unit(b)).collect() }
    }

    pub fn section(&self) -> &[usize] {
        &self.section
    }

    /// The arrows, sorted.
    pub fn elements(&self) -> Vec<usize> {
        let mut e = self.section.clone();
        e.sort_unstable();
        e
    }

    /// The arrow with a given target.
    pub fn by_beta(&self, gamma: &Groupoid) -> Vec<usize> {
        let mut out = vec![0; self.section.len()];
        for &g in &self.section {
            out[gamma.beta(g)] = g;
        }
        out
    }

    /// `{γ1 γ2 : β(γ1) = α(γ2)}`.
    pub fn product(&self, gamma: &Groupoid, other: &Bisection) -> Bisection {
        let section = self
            .section
            .iter()
            .map(|&g| gamma.product(g, other.section[gamma.beta(g)]).expect("composable"))
            .collect();
        Bisection { section }
    }

    pub fn inverse(&self, gamma: &Groupoid) -> Bisection {
        let mut section = vec![0; self.section.len()];
        for &g in &self.section {
            section[gamma.beta(g)] = gamma.inv(g);
        }
        Bisection { section }
    }
}

/// `{γ1 γ2 : γi in Li, β(γ1) = α(γ2)}` for arbitrary subsets.
pub fn subset_product(gamma: &Groupoid, l1: &[usize], l2: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> =
        l1.iter().flat_map(|&g| l2.iter().filter_map(move |&h| gamma.product(g, h))).collect();
    set.into_iter().collect()
}

/// Whether `subset` is a bisection, by two routes that must agree:
/// bijectivity of `α` and `β`, and `L K = K L = E` for `K = L^-1`.
pub fn is_bisection(gamma: &Groupoid, subset: &[usize]) -> bool {
    let mut l: Vec<usize> = subset.to_vec();
    l.sort_unstable();
    l.dedup();
    let by_maps = l.len() == subset.len() && Bisection::from_subset(gamma, &l).is_ok();
    let by_inverse = if l.iter().all(|&g| g < gamma.total_size()) {
        let k: Vec<usize> = l.iter().map(|&g| gamma.inv(g)).collect();
        let units: Vec<usize> = Bisection::identity(gamma).elements();
        subset_product(gamma, &l, &k) == units && subset_product(gamma, &k, &l) == units
    } else {
        false
    };
    let by_inverse = by_inverse && l.len() == subset.len();
    assert_eq!(by_maps, by_inverse, "bisection criteria disagree on {subset:?}");
    by_maps
}

/// Support of a positive element of the linearization of `Γ^k`, as arrows of `gamma_k`.
pub fn support(gamma_k: &Groupoid, a: &TensorElement) -> Result<Vec<usize>, GroupoidError> {
    if !a.is_positive() {
        return Err(GroupoidError::NotPositive);
    }
    let mut out = Vec::with_capacity(a.len());
    for (t, _) in a.terms() {
        if gamma_k.decode(0).len() != t.len() {
            return Err(GroupoidError::Arity(t.len(), gamma_k.decode(0).len()));
        }
        out.push(gamma_k.encode(t));
    }
    out.sort_unstable();
    Ok(out)
}

/// `R12 R13 R23 = R23 R13 R12` in the bisections of `Γ^3`, where `r` is a
/// bisection of `Γ^2 = gamma.power(2)`.
pub fn check_groupoid_ybe(gamma: &Groupoid, r: &Bisection) -> Result<bool, GroupoidError> {
    let g2 = gamma.power(2);
    Bisection::from_subset(&g2, r.section())?;
    let g3 = gamma.power(3);
    let leg = |i: usize, j: usize| -> Bisection {
        let section = (0..g3.base_size())
            .map(|b| {
                let objs = g3.decode_base(b);
                let pair = g2.decode(r.section()[g2.encode_base(&[objs[i], objs[j]])]);
                let mut parts: Vec<usize> = objs.iter().map(|&o| gamma.unit(o)).collect();
                parts[i] = pair[0];
                parts[j] = pair[1];
                g3.encode(&parts)
            })
            .collect();
        Bisection { section }
    };
    let (r12, r13, r23) = (leg(0, 1), leg(0, 2), leg(1, 2));
    let left = r12.product(&g3, &r13).product(&g3, &r23);
    let right = r23.product(&g3, &r13).product(&g3, &r12);
    Ok(left == right)
}

/// A set with a base map `j` and a partial action of a groupoid.
#[derive(Debug, Clone)]
pub struct GammaSet {
    pub size: usize,
    pub j: Vec<usize>,
    /// `action[γ * size + x]`, defined exactly when `β(γ) = j(x)`.
    pub action: Vec<Option<usize>>,
}

impl GammaSet {
    /// `X = B`, `J = id`, `γ x = α(γ)`.
    pub fn unit_set(gamma: &Groupoid) -> Self {
        let b = gamma.base_size();
        let action = (0..gamma.total_size())
            .flat_map(|g| (0..b).map(move |x| (gamma.beta(g) == x).then(|| gamma.alpha(g))))
            .collect();
        GammaSet { size: b, j: (0..b).collect(), action }
    }

    /// `X = Γ`, `J = α`, acting by left multiplication.
    pub fn regular_set(gamma: &Groupoid) -> Self {
        let t = gamma.total_size();
        let action = (0..t).flat_map(|g| (0..t).map(move |x| gamma.product(g, x))).collect();
        GammaSet { size: t, j: (0..t).map(|x| gamma.alpha(x)).collect(), action }
    }

    pub fn act(&self, g: usize, x: usize) -> Option<usize> {
        self.action[g * self.size + x]
    }

    pub fn validate(&self, gamma: &Groupoid) -> Result<(), GroupoidError> {
        let fail = |s: String| Err(GroupoidError::InvalidGammaSet(s));
        if self.j.len() != self.size || self.action.len() != gamma.total_size() * self.size {
            return fail("table sizes".into());
        }
        let by_alpha = gamma.by_alpha();
        for x in 0..self.size {
            if self.act(gamma.unit(self.j[x]), x) != Some(x) {
                return fail(format!("unit does not fix {x}"));
            }
            for g in 0..gamma.total_size() {
                let gx = self.act(g, x);
                if gx.is_some() != (gamma.beta(g) == self.j[x]) {
                    return fail(format!("action of {g} on {x} defined off β = J"));
                }
                let Some(gx) = gx else { continue };
                if self.j[gx] != gamma.alpha(g) {
                    return fail(format!("J({g} {x}) != α({g})"));
                }
                for &h in by_alpha[gamma.beta(g)].iter() {
                    if gamma.beta(h) != self.j[x] {
                        continue;
                    }
                    let gh = gamma.product(g, h).expect("composable");
                    let hx = self.act(h, x).expect("defined");
                    if self.act(gh, x) != self.act(g, hx) {
                        return fail(format!("({g} {h}) {x} != {g} ({h} {x})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The map `X × X -> X × X` induced by a bisection of `Γ^2`, as a table on
/// `x1 * |X| + x2`.
pub fn induced_map(gamma: &Groupoid, r: &Bisection, x: &GammaSet) -> Vec<usize> {
    let g2 = gamma.power(2);
    let by_beta = r.by_beta(&g2);
    let n = x.size;
    (0..n * n)
        .map(|p| {
            let (x1, x2) = (p / n, p % n);
            let arrow = g2.decode(by_beta[g2.encode_base(&[x.j[x1], x.j[x2]])]);
            let y1 = x.act(arrow[0], x1).expect("β matches J");
            let y2 = x.act(arrow[1], x2).expect("β matches J");
            y1 * n + y2
        })
        .collect()
}

/// The set-theoretical solution on `X` induced by a Yang-Baxter bisection.
pub fn gamma_set_solution(gamma: &Groupoid, r: &Bisection, x: &GammaSet) -> Result<Vec<usize>, GroupoidError> {
    if !check_groupoid_ybe(gamma, r)? {
        return Err(GroupoidError::NotAYbeBisection);
    }
    x.validate(gamma)?;
    let map = induced_map(gamma, r, x);
    if ybe_failure(x.size, &map).is_some() {
        return Err(GroupoidError::NotAYbeBisection);
    }
    Ok(map)
}
