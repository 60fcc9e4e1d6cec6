//! Sparse elements of tensor powers `H^{⊗k}` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("slot {slot} out of range for arity {arity}")]
    BadSlot { slot: usize, arity: usize },
    #[error("invalid slot positions {positions:?} for target arity {arity}")]
    BadPositions { positions: Vec<usize>, arity: usize },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("element index {0} out of range")]
    BadIndex(usize),
    #[error("invalid coefficient record: {0}")]
    BadRecord(String),
}

/// A finitely supported map from `k`-tuples of basis indices to rationals.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor[{}]{{", self.arity)?;
        for (i, (t, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{t:?}")?;
            } else {
                write!(f, "{c}*{t:?}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Serialized coefficient: `{tuple, num, den}` with integers as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientRecord {
    pub tuple: Vec<usize>,
    pub num: String,
    pub den: String,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        TensorElement { arity, coeffs: BTreeMap::new() }
    }

    pub fn basis(tuple: Vec<usize>) -> Self {
        let mut t = Self::zero(tuple.len());
        t.coeffs.insert(tuple, Rational::one());
        t
    }

    /// Sums the given terms; repeated tuples accumulate.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> Self {
        let mut t = Self::zero(arity);
        for (tuple, c) in terms {
            t.add_term(tuple, c);
        }
        t
    }

    /// Sum of basis tuples, each with coefficient one.
    pub fn from_tuples(arity: usize, tuples: impl IntoIterator<Item = Vec<usize>>) -> Self {
        Self::from_terms(arity, tuples.into_iter().map(|t| (t, Rational::one())))
    }

    pub fn add_term(&mut self, tuple: Vec<usize>, c: Rational) {
        debug_assert_eq!(tuple.len(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(tuple) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, tuple: &[usize]) -> Rational {
        self.coeffs.get(tuple).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coeffs.iter()
    }

    /// Basis tuples with non-zero coefficient, in lexicographic order.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.coeffs.keys().cloned().collect()
    }

    /// All stored coefficients are strictly positive.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(Signed::is_positive)
    }

    /// Every coefficient equals one.
    pub fn is_zero_one(&self) -> bool {
        self.coeffs.values().all(One::is_one)
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, TensorError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement, TensorError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_term(t.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> TensorElement {
        if s.is_zero() {
            return Self::zero(self.arity);
        }
        TensorElement {
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|(t, c)| (t.clone(), c * s)).collect(),
        }
    }

    /// Exchanges tensor slots `i` and `j`.
    pub fn tau_swap(&self, i: usize, j: usize) -> Result<TensorElement, TensorError> {
        for slot in [i, j] {
            if slot >= self.arity {
                return Err(TensorError::BadSlot { slot, arity: self.arity });
            }
        }
        Ok(self.map_tuples(|t| {
            let mut t = t.to_vec();
            t.swap(i, j);
            t
        }))
    }

    /// Relabels every tuple; colliding images accumulate.
    pub fn map_tuples(&self, mut f: impl FnMut(&[usize]) -> Vec<usize>) -> TensorElement {
        let mut out = Self::zero(self.arity);
        for (t, c) in &self.coeffs {
            out.add_term(f(t), c.clone());
        }
        out
    }

    pub(crate) fn check_arity(&self, other: &TensorElement) -> Result<(), TensorError> {
        if self.arity != other.arity {
            return Err(TensorError::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    pub fn to_records(&self) -> Vec<CoefficientRecord> {
        self.coeffs
            .iter()
            .map(|(t, c)| CoefficientRecord {
                tuple: t.clone(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_records(arity: usize, records: &[CoefficientRecord]) -> Result<Self, TensorError> {
        let mut out = Self::zero(arity);
        for r in records {
            if r.tuple.len() != arity {
                return Err(TensorError::ArityMismatch(arity, r.tuple.len()));
            }
            let parse = |s: &str| {
                s.parse::<BigInt>().map_err(|e| TensorError::BadRecord(format!("{s}: {e}")))
            };
            let (num, den) = (parse(&r.num)?, parse(&r.den)?);
            if den.is_zero() {
                return Err(TensorError::BadRecord("zero denominator".into()));
            }
            out.add_term(r.tuple.clone(), Rational::new(num, den));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut t = TensorElement::basis(vec![0, 1]);
        t.add_term(vec![0, 1], q(-1, 1));
        assert!(t.is_zero());
        t.add_term(vec![2, 2], Rational::zero());
        assert!(t.is_zero());
    }

    #[test]
    fn positivity() {
        let a = TensorElement::basis(vec![0]);
        let b = TensorElement::basis(vec![1]);
        assert!(a.add(&b).unwrap().is_positive());
        assert!(!a.sub(&b).unwrap().is_positive());
    }

    #[test]
    fn swaps() {
        let t = TensorElement::basis(vec![3, 5]);
        assert_eq!(t.tau_swap(0, 1).unwrap(), TensorElement::basis(vec![5, 3]));
        assert!(matches!(t.tau_swap(0, 2), Err(TensorError::BadSlot { slot: 2, .. })));
        let sym = TensorElement::from_tuples(2, [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(sym.tau_swap(0, 1).unwrap(), sym);
    }

    proptest! {
        #[test]
        fn records_round_trip(terms in proptest::collection::vec(
            (proptest::collection::vec(0usize..6, 3), -50i64..50, 1i64..20), 0..12)
        ) {
            let t = TensorElement::from_terms(3, terms.into_iter().map(|(tu, n, d)| (tu, q(n, d))));
            let back = TensorElement::from_records(3, &t.to_records()).unwrap();
            prop_assert_eq!(&back, &t);
            let json = serde_json::to_string(&t.to_records()).unwrap();
            let parsed: Vec<CoefficientRecord> = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(TensorElement::from_records(3, &parsed).unwrap(), t);
        }

        #[test]
        fn double_swap_is_identity(terms in proptest::collection::vec(
            proptest::collection::vec(0usize..5, 3), 0..10), i in 0usize..3, j in 0usize..3
        ) {
            let t = TensorElement::from_tuples(3, terms);
            prop_assert_eq!(t.tau_swap(i, j).unwrap().tau_swap(i, j).unwrap(), t);
        }
    }
}
