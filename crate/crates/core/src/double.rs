//! The Drinfeld double of a factorization: `G × G = {(g+, g-)} · diagonal`
//! with the standard pair `ξ(g+, g-) = (g-, g-)`, `η(g+, g-) = (g+, g+)`.
//!
//! Elements of `G × G` use index `a * |G| + b`.

use crate::cycle::{to_cycle_data, CycleError};
use crate::factorization::{make_factorization, FactorizationError, UniqueFactorization};
use crate::group::{Homomorphism, Subgroup};
use crate::qt::QtError;

pub fn build_double(uf: &UniqueFactorization) -> Result<UniqueFactorization, FactorizationError> {
    let g = uf.group();
    let n = g.order();
    let gg = g.direct_product(g).with_name(format!("D({})", g.name()));
    let plus: Vec<usize> = uf
        .plus()
        .elements()
        .iter()
        .flat_map(|&u| uf.minus().elements().iter().map(move |&x| u * n + x))
        .collect();
    let diagonal: Vec<usize> = (0..n).map(|a| a * n + a).collect();
    make_factorization(&gg, &Subgroup::new(&gg, &plus)?, &Subgroup::new(&gg, &diagonal)?)
}

fn base_order(double: &UniqueFactorization) -> Result<usize, QtError> {
    let n = (double.order() as f64).sqrt().round() as usize;
    if n * n != double.order() || double.minus().len() != n {
        return Err(QtError::BadHomomorphism("input is not a double".into()));
    }
    Ok(n)
}

/// The standard pair on a factorization produced by [`build_double`].
pub fn standard_double_qt(double: &UniqueFactorization) -> Result<(Homomorphism, Homomorphism), QtError> {
    let n = base_order(double)?;
    let domain = double.plus().elements().to_vec();
    let xi = Homomorphism { domain: domain.clone(), image: domain.iter().map(|&p| (p % n) * n + p % n).collect() };
    let eta = Homomorphism { domain: domain.clone(), image: domain.iter().map(|&p| (p / n) * n + p / n).collect() };
    crate::qt::validate_homomorphism(double, &xi)?;
    crate::qt::validate_homomorphism(double, &eta)?;
    Ok((xi, eta))
}

/// `π(g+, g-) = g+ g-^-1`, as a map from `G~+` (in order) to `G`.
pub fn double_cocycle(uf: &UniqueFactorization, double: &UniqueFactorization) -> Vec<usize> {
    let n = uf.order();
    double.plus().elements().iter().map(|&p| uf.mul(p / n, uf.inv(p % n))).collect()
}

/// Outcome of comparing the cycle data of the standard pair with the
/// expected closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCycleCheck {
    /// `A = G × {e}`.
    pub a_is_first_factor: bool,
    /// `ζ(a) = a-^-1` on the diagonal.
    pub zeta_matches: bool,
    /// `(g, g) · a = g a g^-1`.
    pub action_is_conjugation: bool,
    /// `F(a ⋊ g) = a^-1 ⋊ a g`.
    pub f_matches: bool,
}

impl DoubleCycleCheck {
    pub fn all(&self) -> bool {
        self.a_is_first_factor && self.zeta_matches && self.action_is_conjugation && self.f_matches
    }
}

pub fn check_double_cycle_data(uf: &UniqueFactorization, double: &UniqueFactorization) -> Result<DoubleCycleCheck, CycleError> {
    let (xi, eta) = standard_double_qt(double)?;
    let cd = to_cycle_data(double, &xi, &eta)?;
    let g = uf.group();
    let n = g.order();
    let a_is_first_factor = cd.a.order() == n;
    // A and G- are sorted, so local index h of A is (h, e) and local x of G- is (x, x).
    let zeta_matches = a_is_first_factor
        && (0..n).all(|h| {
            let minus_inv = g.inv(uf.minus_part(h));
            cd.zeta[h] == minus_inv
        });
    let action_is_conjugation = a_is_first_factor
        && (0..n).all(|x| (0..n).all(|h| cd.action[x][h] == g.mul(g.mul(x, h), g.inv(x))));
    let m = cd.gm.order();
    let f_matches = a_is_first_factor
        && (0..n).all(|h| {
            (0..n).all(|x| {
                let expected = g.inv(h) * m + g.mul(h, x);
                cd.f[h * m + x] == expected
            })
        });
    Ok(DoubleCycleCheck { a_is_first_factor, zeta_matches, action_is_conjugation, f_matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::qt::{check_pair_conditions, classify};

    fn uf(name: &str, plus: &[usize], minus: &[usize]) -> UniqueFactorization {
        let g = catalog_group(name).unwrap();
        make_factorization(&g, &Subgroup::new(&g, plus).unwrap(), &Subgroup::new(&g, minus).unwrap())
            .unwrap()
    }

    #[test]
    fn double_orders() {
        let d = build_double(&uf("Z1", &[0], &[0])).unwrap();
        assert_eq!(d.order(), 1);
        let d = build_double(&uf("Z2", &[0, 1], &[0])).unwrap();
        assert_eq!((d.order(), d.plus().elements(), d.minus().elements()), (4, &[0, 2][..], &[0, 3][..]));
        let base = uf("S3", &[0, 1, 2], &[0, 3]);
        let d = build_double(&base).unwrap();
        assert_eq!((d.order(), d.plus().len(), d.minus().len()), (36, 6, 6));
    }

    #[test]
    fn standard_pair_of_s3_double() {
        let base = uf("S3", &[0, 1, 2], &[0, 3]);
        let d = build_double(&base).unwrap();
        let (xi, eta) = standard_double_qt(&d).unwrap();
        let report = check_pair_conditions(&d, &xi, &eta).unwrap();
        assert!(report.primary_pass() && report.is_consistent());
        assert!(classify(&d).iter().any(|p| p.xi == xi && p.eta == eta));
        assert!(check_double_cycle_data(&base, &d).unwrap().all());
        let mut pi = double_cocycle(&base, &d);
        pi.sort_unstable();
        assert_eq!(pi, (0..6).collect::<Vec<_>>());
    }
}
