//! Built-in groups with stable element labelings.
//!
//! | name      | elements                                                  |
//! |-----------|-----------------------------------------------------------|
//! | `Z<n>`    | `k` is the residue `k mod n`                              |
//! | `D<n>`    | `b*n + a` is `r^a s^b`, order `2n`, `s r = r^-1 s`        |
//! | `S3`      | `e, (0 1 2), (0 2 1), (1 2), (0 2), (0 1)`                |
//! | `S4`      | permutations of `0..4` in lexicographic one-line order   |
//! | `Q8`      | `1, -1, i, -i, j, -j, k, -k`                              |
//! | `V4`      | `Z2xZ2`                                                   |
//! | `AxB`     | `a*|B| + b` is `(a, b)`                                   |
//!
//! Permutations compose with the right factor acting first: `(fg)(i) = f(g(i))`.

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog group `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A catalog group together with human-readable element labels.
#[derive(Debug, Clone)]
pub struct LabeledGroup {
    pub group: FiniteGroup,
    pub labels: Vec<String>,
}

pub fn catalog_group(name: &str) -> Result<FiniteGroup, CatalogError> {
    Ok(labeled_catalog_group(name)?.group)
}

pub fn labeled_catalog_group(name: &str) -> Result<LabeledGroup, CatalogError> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let mut acc = base_group(parts[0])?;
        for part in &parts[1..] {
            let next = base_group(part)?;
            let labels = acc
                .labels
                .iter()
                .flat_map(|a| next.labels.iter().map(move |b| format!("({a},{b})")))
                .collect();
            acc = LabeledGroup { group: acc.group.direct_product(&next.group), labels };
        }
        acc.group = acc.group.with_name(name);
        return Ok(acc);
    }
    base_group(name)
}

fn base_group(name: &str) -> Result<LabeledGroup, CatalogError> {
    let unknown = || CatalogError::Unknown(name.to_string());
    match name {
        "S3" => {
            let perms = vec![
                vec![0, 1, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![0, 2, 1],
                vec![2, 1, 0],
                vec![1, 0, 2],
            ];
            permutation_group("S3", perms)
        }
        "S4" => permutation_group("S4", lexicographic_permutations(4)),
        "Q8" => Ok(quaternion()),
        "V4" => {
            let mut v4 = labeled_catalog_group("Z2xZ2")?;
            v4.group = v4.group.with_name("V4");
            Ok(v4)
        }
        _ => {
            let (kind, digits) = name.split_at(1);
            let n: usize = digits.parse().map_err(|_| unknown())?;
            if n == 0 {
                return Err(unknown());
            }
            match kind {
                "Z" => Ok(cyclic(n)),
                "D" => Ok(dihedral(n)),
                _ => Err(unknown()),
            }
        }
    }
}

fn cyclic(n: usize) -> LabeledGroup {
    let table = (0..n * n).map(|t| (t / n + t % n) % n).collect();
    let group = FiniteGroup::from_flat(format!("Z{n}"), n, table).expect("cyclic group");
    LabeledGroup { group, labels: (0..n).map(|k| k.to_string()).collect() }
}

fn dihedral(n: usize) -> LabeledGroup {
    let m = 2 * n;
    let mut table = Vec::with_capacity(m * m);
    for x in 0..m {
        let (a, b) = (x % n, x / n);
        for y in 0..m {
            let (c, d) = (y % n, y / n);
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            table.push(((b + d) % 2) * n + rot);
        }
    }
    let group = FiniteGroup::from_flat(format!("D{n}"), m, table).expect("dihedral group");
    let labels = (0..m)
        .map(|x| {
            let (a, b) = (x % n, x / n);
            match (a, b) {
                (0, 0) => "e".to_string(),
                (a, 0) => format!("r^{a}"),
                (0, _) => "s".to_string(),
                (a, _) => format!("r^{a}s"),
            }
        })
        .collect();
    LabeledGroup { group, labels }
}

fn quaternion() -> LabeledGroup {
    // Units 1, i, j, k as 0..4; element index is 2*unit + (negative as usize).
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (unit, neg) = UNIT[x / 2][y / 2];
            let sign = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
            table.push(2 * unit + usize::from(sign));
        }
    }
    let group = FiniteGroup::from_flat("Q8".to_string(), 8, table).expect("quaternion group");
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    LabeledGroup { group, labels }
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn permutation_group(name: &str, perms: Vec<Vec<usize>>) -> Result<LabeledGroup, CatalogError> {
    let index = |p: &[usize]| perms.iter().position(|q| q == p);
    let n = perms.len();
    let mut table = Vec::with_capacity(n * n);
    for f in &perms {
        for g in &perms {
            let fg: Vec<usize> = g.iter().map(|&i| f[i]).collect();
            table.push(index(&fg).ok_or_else(|| CatalogError::Unknown(name.to_string()))?);
        }
    }
    let group = FiniteGroup::from_flat(name.to_string(), n, table)?;
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    Ok(LabeledGroup { group, labels })
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut cycles = Vec::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut i = p[start];
        while i != start {
            seen[i] = true;
            cycle.push(i);
            i = p[i];
        }
        let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
        cycles.push(format!("({})", body.join(" ")));
    }
    if cycles.is_empty() {
        "e".to_string()
    } else {
        cycles.concat()
    }
}

/// The fixed list of catalog groups used for exhaustive checks, up to `max_order`.
pub fn standard_catalog(max_order: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=max_order).map(|n| format!("Z{n}")).collect();
    names.extend((2..=max_order / 2).map(|n| format!("D{n}")));
    for (name, order) in [
        ("V4", 4),
        ("S3", 6),
        ("Q8", 8),
        ("Z2xZ2xZ2", 8),
        ("Z2xZ4", 8),
        ("Z3xZ3", 9),
        ("Z2xZ6", 12),
        ("Z2xS3", 12),
        ("Z2xZ8", 16),
        ("Z4xZ4", 16),
        ("Z2xZ2xZ4", 16),
        ("Z2xZ2xZ2xZ2", 16),
        ("Z2xD4", 16),
        ("Z2xQ8", 16),
        ("S4", 24),
    ] {
        if order <= max_order {
            names.push(name.to_string());
        }
    }
    names
}
