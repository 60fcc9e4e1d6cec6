//! The Hopf algebra `H(G; G+, G-)` on the basis `G`.
//!
//! ```text
//! {g}{h} = δ(bar g+ = h+) {g h-}
//! 1      = Σ_{u in G+} {u}
//! Δ{g}   = Σ_{w in G+} {g+ w^-1 (^w g-)} ⊗ {w g-}
//! ε{g}   = δ(g+ = e)
//! S{g}   = {g^-1}
//! ```
//!
//! `bar g+ = g+^{g-}`, so the product condition only needs the factor tables.
//! All structure maps are precomputed as tables; tensor operations act on
//! [`TensorElement`]s slot by slot.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::factorization::UniqueFactorization;
use crate::tensor::{Rational, TensorElement, TensorError};

/// Above this many unknowns `invert_element` refuses a linear solve.
pub const MAX_DENSE_UNKNOWNS: usize = 2000;

/// Structure map applied to a single tensor slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureMap {
    Coproduct,
    Counit,
    Antipode,
}

#[derive(Clone)]
pub struct HopfData {
    uf: UniqueFactorization,
    mult: Vec<Option<usize>>,
    left_key: Vec<usize>,
    right_key: Vec<usize>,
    unit: Vec<usize>,
    comult: Vec<Vec<(usize, usize)>>,
    counit: Vec<bool>,
    antipode: Vec<usize>,
}

impl fmt::Debug for HopfData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfData").field("uf", &self.uf).finish()
    }
}

pub fn build_hopf(uf: &UniqueFactorization) -> HopfData {
    let n = uf.order();
    let plus = uf.plus().elements();
    let mut mult = vec![None; n * n];
    for g in 0..n {
        for h in 0..n {
            if uf.bar_plus(g) == uf.plus_part(h) {
                mult[g * n + h] = Some(uf.mul(g, uf.minus_part(h)));
            }
        }
    }
    let comult = (0..n)
        .map(|g| {
            let (gp, gm) = uf.pm(g);
            plus.iter()
                .map(|&w| {
                    let left = uf.mul(uf.mul(gp, uf.inv(w)), uf.act_lpm(w, gm));
                    (left, uf.mul(w, gm))
                })
                .collect()
        })
        .collect();
    HopfData {
        uf: uf.clone(),
        mult,
        left_key: (0..n).map(|g| uf.bar_plus(g)).collect(),
        right_key: (0..n).map(|g| uf.plus_part(g)).collect(),
        unit: plus.to_vec(),
        comult,
        counit: (0..n).map(|g| uf.plus_part(g) == uf.identity()).collect(),
        antipode: (0..n).map(|g| uf.inv(g)).collect(),
    }
}

/// Outcome of the exhaustive axiom check; `None` means the axiom holds,
/// `Some(w)` carries the first failing basis tuple.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub associativity: Option<Vec<usize>>,
    pub unitality: Option<Vec<usize>>,
    pub coassociativity: Option<Vec<usize>>,
    pub counitality: Option<Vec<usize>>,
    pub comultiplication_multiplicative: Option<Vec<usize>>,
    pub counit_multiplicative: Option<Vec<usize>>,
    pub antipode: Option<Vec<usize>>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<(&'static str, &Vec<usize>)> {
        [
            ("associativity", &self.associativity),
            ("unitality", &self.unitality),
            ("coassociativity", &self.coassociativity),
            ("counitality", &self.counitality),
            ("comultiplication_multiplicative", &self.comultiplication_multiplicative),
            ("counit_multiplicative", &self.counit_multiplicative),
            ("antipode", &self.antipode),
        ]
        .into_iter()
        .filter_map(|(name, w)| w.as_ref().map(|w| (name, w)))
        .collect()
    }
}

impl HopfData {
    pub fn uf(&self) -> &UniqueFactorization {
        &self.uf
    }

    pub fn dim(&self) -> usize {
        self.uf.order()
    }

    /// Product of two basis elements, `None` when it vanishes.
    #[inline]
    pub fn basis_product(&self, g: usize, h: usize) -> Option<usize> {
        self.mult[g * self.dim() + h]
    }

    pub fn coproduct_terms(&self, g: usize) -> &[(usize, usize)] {
        &self.comult[g]
    }

    pub fn counit_of(&self, g: usize) -> bool {
        self.counit[g]
    }

    pub fn antipode_of(&self, g: usize) -> usize {
        self.antipode[g]
    }

    pub fn unit_terms(&self) -> &[usize] {
        &self.unit
    }

    /// `1 ⊗ ... ⊗ 1` with `k` factors.
    pub fn unit_k(&self, k: usize) -> TensorElement {
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..k {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    self.unit.iter().map(move |&u| {
                        let mut t = t.clone();
                        t.push(u);
                        t
                    })
                })
                .collect();
        }
        TensorElement::from_tuples(k, tuples)
    }

    fn check_indices(&self, a: &TensorElement) -> Result<(), TensorError> {
        let n = self.dim();
        for (t, _) in a.terms() {
            if let Some(&bad) = t.iter().find(|&&g| g >= n) {
                return Err(TensorError::BadIndex(bad));
            }
        }
        Ok(())
    }

    /// Slot-wise product in `H^{⊗k}`.
    pub fn product(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement, TensorError> {
        a.check_arity(b)?;
        self.check_indices(a)?;
        self.check_indices(b)?;
        let k = a.arity();
        // Index b's terms by the tuple of G+ components they require on the left.
        let mut by_key: HashMap<Vec<usize>, Vec<(&Vec<usize>, &Rational)>> = HashMap::new();
        for (t, c) in b.terms() {
            let key: Vec<usize> = t.iter().map(|&h| self.right_key[h]).collect();
            by_key.entry(key).or_default().push((t, c));
        }
        let mut out = TensorElement::zero(k);
        let mut key = vec![0; k];
        for (s, c) in a.terms() {
            for (slot, &g) in s.iter().enumerate() {
                key[slot] = self.left_key[g];
            }
            let Some(matches) = by_key.get(&key) else { continue };
            for (t, d) in matches {
                let tuple: Vec<usize> = s
                    .iter()
                    .zip(t.iter())
                    .map(|(&g, &h)| self.basis_product(g, h).expect("keyed product is defined"))
                    .collect();
                out.add_term(tuple, c * *d);
            }
        }
        Ok(out)
    }

    /// Applies Δ, ε or S to one tensor slot.
    pub fn slot_map(
        &self,
        a: &TensorElement,
        slot: usize,
        which: StructureMap,
    ) -> Result<TensorElement, TensorError> {
        if slot >= a.arity() {
            return Err(TensorError::BadSlot { slot, arity: a.arity() });
        }
        self.check_indices(a)?;
        let out = match which {
            StructureMap::Antipode => a.map_tuples(|t| {
                let mut t = t.to_vec();
                t[slot] = self.antipode[t[slot]];
                t
            }),
            StructureMap::Counit => {
                let mut out = TensorElement::zero(a.arity() - 1);
                for (t, c) in a.terms() {
                    if self.counit[t[slot]] {
                        let mut t = t.clone();
                        t.remove(slot);
                        out.add_term(t, c.clone());
                    }
                }
                out
            }
            StructureMap::Coproduct => {
                let mut out = TensorElement::zero(a.arity() + 1);
                for (t, c) in a.terms() {
                    for &(p, q) in &self.comult[t[slot]] {
                        let mut tuple = Vec::with_capacity(t.len() + 1);
                        tuple.extend_from_slice(&t[..slot]);
                        tuple.push(p);
                        tuple.push(q);
                        tuple.extend_from_slice(&t[slot + 1..]);
                        out.add_term(tuple, c.clone());
                    }
                }
                out
            }
        };
        Ok(out)
    }

    /// Multiplies slots `slot` and `slot + 1` together, lowering the arity by one.
    pub fn contract(&self, a: &TensorElement, slot: usize) -> Result<TensorElement, TensorError> {
        if slot + 1 >= a.arity() {
            return Err(TensorError::BadSlot { slot: slot + 1, arity: a.arity() });
        }
        let mut out = TensorElement::zero(a.arity() - 1);
        for (t, c) in a.terms() {
            if let Some(p) = self.basis_product(t[slot], t[slot + 1]) {
                let mut tuple = t.clone();
                tuple[slot] = p;
                tuple.remove(slot + 1);
                out.add_term(tuple, c.clone());
            }
        }
        Ok(out)
    }

    /// Places `a` in the given slots of `H^{⊗k}` and the unit everywhere else,
    /// so `R13 = embed_slots(R, 3, [0, 2])`.
    pub fn embed_slots(
        &self,
        a: &TensorElement,
        k: usize,
        positions: &[usize],
    ) -> Result<TensorElement, TensorError> {
        let valid = positions.len() == a.arity()
            && k >= positions.len()
            && positions.windows(2).all(|w| w[0] < w[1])
            && positions.iter().all(|&p| p < k);
        if !valid {
            return Err(TensorError::BadPositions { positions: positions.to_vec(), arity: k });
        }
        let free: Vec<usize> = (0..k).filter(|p| !positions.contains(p)).collect();
        let fillers = self.unit_k(free.len());
        let mut out = TensorElement::zero(k);
        for (t, c) in a.terms() {
            for (fill, _) in fillers.terms() {
                let mut tuple = vec![0; k];
                for (&p, &g) in positions.iter().zip(t.iter()) {
                    tuple[p] = g;
                }
                for (&p, &g) in free.iter().zip(fill.iter()) {
                    tuple[p] = g;
                }
                out.add_term(tuple, c.clone());
            }
        }
        Ok(out)
    }

    /// True when `a b = b a = 1`.
    pub fn is_inverse_pair(&self, a: &TensorElement, b: &TensorElement) -> Result<bool, TensorError> {
        let one = self.unit_k(a.arity());
        Ok(self.product(a, b)? == one && self.product(b, a)? == one)
    }

    /// Verifies `candidate` as a two-sided inverse of `a`.
    pub fn invert_with_candidate(
        &self,
        a: &TensorElement,
        candidate: &TensorElement,
    ) -> Result<TensorElement, TensorError> {
        if self.is_inverse_pair(a, candidate)? {
            Ok(candidate.clone())
        } else {
            Err(TensorError::NotInvertible)
        }
    }

    /// Two-sided inverse by exact linear solve.
    ///
    /// Left multiplication preserves the target `bar g+` of each slot, so the
    /// system splits into one block per tuple of targets.
    pub fn invert_element(&self, a: &TensorElement) -> Result<TensorElement, TensorError> {
        self.check_indices(a)?;
        let k = a.arity();
        let n = self.dim();
        let unknowns = n.checked_pow(k as u32).unwrap_or(usize::MAX);
        if unknowns > MAX_DENSE_UNKNOWNS {
            return Err(TensorError::NotInvertible);
        }
        if a.is_zero() {
            return Err(TensorError::NotInvertible);
        }
        let uf = &self.uf;
        let minus = uf.minus().elements();
        let mut result = TensorElement::zero(k);
        for target in self.unit_k(k).support() {
            // Basis of the block: tuples x_i * b_i with x_i in G-.
            let mut block: Vec<Vec<usize>> = vec![Vec::new()];
            for &b in &target {
                block = block
                    .into_iter()
                    .flat_map(|t| {
                        minus.iter().map(move |&x| {
                            let mut t = t.clone();
                            t.push(uf.mul(x, b));
                            t
                        })
                    })
                    .collect();
            }
            let index: HashMap<&Vec<usize>, usize> =
                block.iter().enumerate().map(|(i, t)| (t, i)).collect();
            let m = block.len();
            let mut matrix = vec![vec![Rational::zero(); m + 1]; m];
            for (col, s) in block.iter().enumerate() {
                for (t, c) in a.terms() {
                    let prod: Option<Vec<usize>> =
                        t.iter().zip(s).map(|(&g, &h)| self.basis_product(g, h)).collect();
                    if let Some(p) = prod {
                        let row = index[&p];
                        matrix[row][col] += c;
                    }
                }
            }
            matrix[index[&target]][m] = Rational::one();
            let solution = solve(matrix).ok_or(TensorError::NotInvertible)?;
            for (i, v) in solution.into_iter().enumerate() {
                result.add_term(block[i].clone(), v);
            }
        }
        if !self.is_inverse_pair(a, &result)? {
            return Err(TensorError::NotInvertible);
        }
        Ok(result)
    }

    /// Exhaustive check of the Hopf algebra axioms on basis elements.
    pub fn verify_hopf_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let mut report = AxiomReport::default();
        let basis = |g: usize| TensorElement::basis(vec![g]);
        let one = self.unit_k(1);

        'assoc: for g in 0..n {
            for h in 0..n {
                let gh = self.basis_product(g, h);
                for k in 0..n {
                    let left = gh.and_then(|x| self.basis_product(x, k));
                    let right = self.basis_product(h, k).and_then(|x| self.basis_product(g, x));
                    if left != right {
                        report.associativity = Some(vec![g, h, k]);
                        break 'assoc;
                    }
                }
            }
        }

        for g in 0..n {
            let b = basis(g);
            if self.product(&one, &b).ok() != Some(b.clone())
                || self.product(&b, &one).ok() != Some(b.clone())
            {
                report.unitality = Some(vec![g]);
                break;
            }
        }

        for g in 0..n {
            let delta = self.slot_map(&basis(g), 0, StructureMap::Coproduct).expect("slot 0");
            let left = self.slot_map(&delta, 0, StructureMap::Coproduct).expect("slot 0");
            let right = self.slot_map(&delta, 1, StructureMap::Coproduct).expect("slot 1");
            if report.coassociativity.is_none() && left != right {
                report.coassociativity = Some(vec![g]);
            }
            let left = self.slot_map(&delta, 0, StructureMap::Counit).expect("slot 0");
            let right = self.slot_map(&delta, 1, StructureMap::Counit).expect("slot 1");
            if report.counitality.is_none() && (left != basis(g) || right != basis(g)) {
                report.counitality = Some(vec![g]);
            }
            let expected = if self.counit[g] { one.clone() } else { TensorElement::zero(1) };
            let left = self
                .contract(&self.slot_map(&delta, 0, StructureMap::Antipode).expect("slot 0"), 0)
                .expect("arity 2");
            let right = self
                .contract(&self.slot_map(&delta, 1, StructureMap::Antipode).expect("slot 1"), 0)
                .expect("arity 2");
            if report.antipode.is_none() && (left != expected || right != expected) {
                report.antipode = Some(vec![g]);
            }
        }

        let delta_one = self.slot_map(&one, 0, StructureMap::Coproduct).expect("slot 0");
        if delta_one != self.unit_k(2) {
            report.comultiplication_multiplicative = Some(Vec::new());
        }
        let eps_one = self.slot_map(&one, 0, StructureMap::Counit).expect("slot 0");
        if eps_one != TensorElement::basis(Vec::new()) {
            report.counit_multiplicative = Some(Vec::new());
        }
        let deltas: Vec<TensorElement> = (0..n)
            .map(|g| self.slot_map(&basis(g), 0, StructureMap::Coproduct).expect("slot 0"))
            .collect();
        'bialg: for g in 0..n {
            for h in 0..n {
                let gh = self.basis_product(g, h);
                let eps_gh = gh.is_some_and(|x| self.counit[x]);
                if report.counit_multiplicative.is_none() && eps_gh != (self.counit[g] && self.counit[h])
                {
                    report.counit_multiplicative = Some(vec![g, h]);
                }
                if report.comultiplication_multiplicative.is_none() {
                    let left = match gh {
                        Some(x) => deltas[x].clone(),
                        None => TensorElement::zero(2),
                    };
                    let right = self.product(&deltas[g], &deltas[h]).expect("arity 2");
                    if left != right {
                        report.comultiplication_multiplicative = Some(vec![g, h]);
                    }
                }
                if report.comultiplication_multiplicative.is_some()
                    && report.counit_multiplicative.is_some()
                {
                    break 'bialg;
                }
            }
        }
        report
    }

    /// True iff `τΔ{g} = Δ{g}` for every basis element.
    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|g| {
            let d = self.slot_map(&TensorElement::basis(vec![g]), 0, StructureMap::Coproduct)
                .expect("slot 0");
            d.tau_swap(0, 1).expect("arity 2") == d
        })
    }

    /// Every structure constant of the tables lies in `{0, 1}`.
    pub fn has_zero_one_structure_constants(&self) -> bool {
        let n = self.dim();
        (0..n).all(|g| {
            let d = self.slot_map(&TensorElement::basis(vec![g]), 0, StructureMap::Coproduct)
                .expect("slot 0");
            d.is_zero_one() && d.len() == self.comult[g].len()
        })
    }

    #[cfg(test)]
    pub(crate) fn corrupt_comult(&mut self, g: usize, term: usize, value: (usize, usize)) {
        self.comult[g][term] = value;
    }
}

/// Solves an augmented `m x (m+1)` system with a unique solution.
fn solve(mut a: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let m = a.len();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for v in a[col].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * p;
            }
        }
    }
    Some(a.into_iter().map(|row| row[m].clone()).collect())
}
