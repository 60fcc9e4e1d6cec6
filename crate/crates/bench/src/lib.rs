//! Benchmark fixtures.

use qtriangle::{catalog_group, find_factorizations, make_factorization, Subgroup, UniqueFactorization};

/// A named factorization used across benchmarks.
pub struct Fixture {
    pub label: &'static str,
    pub uf: UniqueFactorization,
}

pub fn factorization(group: &str, plus: &[usize], minus: &[usize]) -> UniqueFactorization {
    let g = catalog_group(group).expect("catalog group");
    let plus = Subgroup::new(&g, plus).expect("G+ subgroup");
    let minus = Subgroup::new(&g, minus).expect("G- subgroup");
    make_factorization(&g, &plus, &minus).expect("exact factorization")
}

/// Factorizations of increasing order.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { label: "V4", uf: factorization("V4", &[0, 2], &[0, 1]) },
        Fixture { label: "S3", uf: factorization("S3", &[0, 1, 2], &[0, 3]) },
        Fixture { label: "D4", uf: factorization("D4", &[0, 1, 2, 3], &[0, 4]) },
        Fixture { label: "Z2xS3", uf: factorization("Z2xS3", &[0, 1, 2, 6, 7, 8], &[0, 3]) },
        Fixture { label: "S4", uf: first_with_orders("S4", 6, 4) },
    ]
}

/// The first factorization of `group` with `|G+| = p` and `|G-| = m`.
pub fn first_with_orders(group: &str, p: usize, m: usize) -> UniqueFactorization {
    let g = catalog_group(group).expect("catalog group");
    find_factorizations(&g)
        .expect("factorizations")
        .into_iter()
        .find(|f| f.plus().len() == p && f.minus().len() == m)
        .expect("factorization with the requested orders")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        let orders: Vec<usize> = fixtures().iter().map(|f| f.uf.order()).collect();
        assert_eq!(orders, [4, 6, 8, 12, 24]);
    }
}
