//! Finite groups given by explicit Cayley tables.
//!
//! Elements are dense indices `0..n`. The identity is located by the loader
//! and need not be `0`, so arbitrary user tables are accepted.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest ambient order accepted by subgroup enumeration.
pub const MAX_SUBGROUP_SEARCH_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is empty")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("declared order {declared} does not match table size {actual}")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("{0:?} is not a subgroup: {1}")]
    NotASubgroup(Vec<usize>, String),
    #[error("group of order {0} exceeds the subgroup search cap of {MAX_SUBGROUP_SEARCH_ORDER}")]
    TooLarge(usize),
    #[error("action of {0} is not an automorphism of the acted-upon group")]
    ActionNotAutomorphic(usize),
    #[error("action is not a homomorphism: action[{0}*{1}] != action[{0}] o action[{1}]")]
    ActionNotHomomorphic(usize, usize),
    #[error("action table has the wrong shape")]
    ActionShape,
    #[error("invalid group file: {0}")]
    File(String),
}

/// A finite group stored as a full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish()
    }
}

/// On-disk group description.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// Validates a Cayley table and returns the group it describes.
pub fn load_group(table: &[Vec<usize>], name: &str) -> Result<FiniteGroup, GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(GroupError::NotSquare { row, len: entries.len(), expected: n });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(GroupError::EntryOutOfRange { row, col, value, order: n });
            }
        }
        flat.extend_from_slice(entries);
    }
    FiniteGroup::from_flat(name.to_string(), n, flat)
}

impl FiniteGroup {
    /// Validates a row-major `n*n` table.
    pub fn from_flat(name: String, order: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        let n = order;
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != n * n {
            return Err(GroupError::OrderMismatch { declared: n * n, actual: table.len() });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(GroupError::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
                order: n,
            });
        }
        let at = |i: usize, j: usize| table[i * n + j];
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| at(e, i) == i && at(i, e) == i))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| at(i, j) == identity && at(j, i) == identity)
                .ok_or(GroupError::NoInverse(i))?;
            inverse.push(inv);
        }
        for i in 0..n {
            for j in 0..n {
                let ij = at(i, j);
                for k in 0..n {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(GroupError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(FiniteGroup { name, order, table, identity, inverse })
    }

    pub fn from_file(file: &GroupFile) -> Result<Self, GroupError> {
        if file.order != file.table.len() {
            return Err(GroupError::OrderMismatch { declared: file.order, actual: file.table.len() });
        }
        load_group(&file.table, &file.name)
    }

    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        let file: GroupFile =
            serde_json::from_str(text).map_err(|e| GroupError::File(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile { name: self.name.clone(), order: self.order, table: self.rows() }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Order of a single element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut members = vec![false; self.order];
        members[self.identity] = true;
        let mut found = vec![self.identity];
        let mut queue: VecDeque<usize> = VecDeque::from(vec![self.identity]);
        // In a finite group, closing under right multiplication by generators suffices.
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    found.push(y);
                    queue.push_back(y);
                }
            }
        }
        found.sort_unstable();
        Subgroup { elements: found }
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.closure(&[]);
        for x in 0..self.order {
            if !current.contains(x) {
                gens.push(x);
                current = self.closure(&gens);
            }
        }
        gens
    }

    /// Direct product with index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order;
        let n = self.order * m;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (a, b) = (x / m, x % m);
            for y in 0..n {
                let (c, d) = (y / m, y % m);
                table.push(self.mul(a, c) * m + other.mul(b, d));
            }
        }
        let identity = self.identity * m + other.identity;
        let inverse = (0..n).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        FiniteGroup {
            name: format!("{}x{}", self.name, other.name),
            order: n,
            table,
            identity,
            inverse,
        }
    }

    /// True when `perm` is a relabeling of `self` onto `other`.
    pub fn is_isomorphism_onto(&self, other: &FiniteGroup, perm: &[usize]) -> bool {
        if self.order != other.order || perm.len() != self.order {
            return false;
        }
        let mut seen = vec![false; other.order];
        for &p in perm {
            if p >= other.order || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..self.order).all(|a| {
            (0..self.order).all(|b| perm[self.mul(a, b)] == other.mul(perm[a], perm[b]))
        })
    }

    /// Searches for an isomorphism onto `other`; intended for small test groups.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order != other.order {
            return None;
        }
        let homs = enumerate_homomorphisms(self, other);
        homs.into_iter()
            .map(|h| h.image)
            .find(|img| self.is_isomorphism_onto(other, img))
    }
}

/// A subgroup of an ambient group, as a strictly increasing element list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates that `elements` form a subgroup of `g`.
    pub fn new(g: &FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        let elements: Vec<usize> = set.into_iter().collect();
        let bad = |why: &str| GroupError::NotASubgroup(elements.clone(), why.to_string());
        if elements.iter().any(|&x| x >= g.order()) {
            return Err(bad("element out of range"));
        }
        let mut member = vec![false; g.order()];
        for &x in &elements {
            member[x] = true;
        }
        if !member[g.identity()] {
            return Err(bad("missing identity"));
        }
        for &a in &elements {
            if !member[g.inv(a)] {
                return Err(bad(&format!("not closed under inverse at {a}")));
            }
            for &b in &elements {
                if !member[g.mul(a, b)] {
                    return Err(bad(&format!("not closed under product {a}*{b}")));
                }
            }
        }
        Ok(Subgroup { elements })
    }

    /// The whole group as a subgroup of itself.
    pub fn full(g: &FiniteGroup) -> Self {
        Subgroup { elements: g.elements().collect() }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup { elements: vec![g.identity()] }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of an ambient element in the sorted list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// The subgroup as a standalone group on local indices `0..len`.
    pub fn to_group(&self, ambient: &FiniteGroup, name: &str) -> FiniteGroup {
        let k = self.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(self.position(ambient.mul(a, b)).expect("closed subgroup"));
            }
        }
        let identity = self.position(ambient.identity()).expect("identity");
        let inverse = self
            .elements
            .iter()
            .map(|&a| self.position(ambient.inv(a)).expect("closed subgroup"))
            .collect();
        FiniteGroup { name: name.to_string(), order: k, table, identity, inverse }
    }
}

/// All subgroups, sorted lexicographically by element list.
pub fn enumerate_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>, GroupError> {
    let n = g.order();
    if n > MAX_SUBGROUP_SEARCH_ORDER {
        return Err(GroupError::TooLarge(n));
    }
    let mask_of = |s: &Subgroup| s.elements.iter().fold(0u64, |m, &x| m | (1u64 << x));
    let trivial = g.closure(&[]);
    let mut seen: HashMap<u64, Subgroup> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(mask_of(&trivial), trivial.clone());
    queue.push_back(trivial);
    // Every subgroup is reached by adjoining its elements one at a time.
    while let Some(h) = queue.pop_front() {
        let hmask = mask_of(&h);
        let mut gens = h.elements.clone();
        for x in 0..n {
            if hmask & (1u64 << x) != 0 {
                continue;
            }
            gens.push(x);
            let k = g.closure(&gens);
            gens.pop();
            let kmask = mask_of(&k);
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(kmask) {
                e.insert(k.clone());
                queue.push_back(k);
            }
        }
    }
    let mut all: Vec<Subgroup> = seen.into_values().collect();
    all.sort();
    Ok(all)
}

/// True iff `s` is invariant under conjugation by every element of `g`.
pub fn is_normal(g: &FiniteGroup, s: &Subgroup) -> Result<bool, GroupError> {
    let s = Subgroup::new(g, s.elements())?;
    Ok(g.elements().all(|x| {
        s.elements().iter().all(|&a| s.contains(g.mul(g.mul(x, a), g.inv(x))))
    }))
}

/// A group homomorphism recorded as an image table.
///
/// `domain` lists the source elements (ambient indices, increasing) and
/// `image[i]` is the target of `domain[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Homomorphism {
    pub domain: Vec<usize>,
    pub image: Vec<usize>,
}

impl Homomorphism {
    pub fn apply(&self, x: usize) -> usize {
        let i = self.domain.binary_search(&x).expect("element outside homomorphism domain");
        self.image[i]
    }

    /// Every element maps to `identity`.
    pub fn is_trivial(&self, identity: usize) -> bool {
        self.image.iter().all(|&y| y == identity)
    }

    /// Checks the homomorphism law against ambient source and target groups.
    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.domain.len() != self.image.len() {
            return false;
        }
        let Some(e_pos) = self.domain.binary_search(&source.identity()).ok() else {
            return false;
        };
        if self.image[e_pos] != target.identity() {
            return false;
        }
        for (i, &a) in self.domain.iter().enumerate() {
            for (j, &b) in self.domain.iter().enumerate() {
                let Ok(k) = self.domain.binary_search(&source.mul(a, b)) else {
                    return false;
                };
                if self.image[k] != target.mul(self.image[i], self.image[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Every homomorphism `a -> b`, ordered lexicographically by image table.
pub fn enumerate_homomorphisms(a: &FiniteGroup, b: &FiniteGroup) -> Vec<Homomorphism> {
    let gens = a.generators();
    let mut images = Vec::new();
    let mut assignment = vec![usize::MAX; a.order()];
    assignment[a.identity()] = b.identity();
    extend_homs(a, b, &gens, 0, &mut assignment, &mut images);
    let mut homs: Vec<Homomorphism> = images
        .into_iter()
        .map(|image| Homomorphism { domain: a.elements().collect(), image })
        .collect();
    homs.sort();
    homs.dedup();
    homs
}

/// Homomorphisms between subgroups of ambient groups, in ambient indices.
pub fn enumerate_subgroup_homomorphisms(
    source_ambient: &FiniteGroup,
    source: &Subgroup,
    target_ambient: &FiniteGroup,
    target: &Subgroup,
) -> Vec<Homomorphism> {
    let a = source.to_group(source_ambient, "source");
    let b = target.to_group(target_ambient, "target");
    // Local and ambient orders agree because element lists are increasing.
    enumerate_homomorphisms(&a, &b)
        .into_iter()
        .map(|h| Homomorphism {
            domain: source.elements().to_vec(),
            image: h.image.iter().map(|&y| target.elements()[y]).collect(),
        })
        .collect()
}

fn extend_homs(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    depth: usize,
    assignment: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    if depth == gens.len() {
        out.push(assignment.to_vec());
        return;
    }
    let g = gens[depth];
    let g_order = a.element_order(g);
    for y in 0..b.order() {
        if !g_order.is_multiple_of(b.element_order(y)) {
            continue;
        }
        let mut trial = assignment.to_vec();
        if propagate(a, b, &gens[..depth], g, y, &mut trial) {
            extend_homs(a, b, gens, depth + 1, &mut trial, out);
        }
    }
}

/// Extends a partial map to the subgroup generated by `gens`, with `g -> y`.
/// Returns false on any inconsistency.
fn propagate(
    a: &FiniteGroup,
    b: &FiniteGroup,
    previous: &[usize],
    g: usize,
    y: usize,
    map: &mut [usize],
) -> bool {
    let mut gen_images: Vec<(usize, usize)> = previous.iter().map(|&p| (p, map[p])).collect();
    gen_images.push((g, y));
    if map[g] != usize::MAX && map[g] != y {
        return false;
    }
    map[g] = y;
    let mut queue: VecDeque<usize> = (0..a.order()).filter(|&x| map[x] != usize::MAX).collect();
    while let Some(x) = queue.pop_front() {
        for &(s, t) in &gen_images {
            let xs = a.mul(x, s);
            let img = b.mul(map[x], t);
            if map[xs] == usize::MAX {
                map[xs] = img;
                queue.push_back(xs);
            } else if map[xs] != img {
                return false;
            }
        }
    }
    true
}

/// Semidirect product `A ⋊ H` on index set `a * |H| + x`, with product
/// `(a, x)(b, y) = (a (x·b), x y)`. `action[x][b]` is `x·b`.
pub fn semidirect_product(
    a: &FiniteGroup,
    h: &FiniteGroup,
    action: &[Vec<usize>],
) -> Result<FiniteGroup, GroupError> {
    if action.len() != h.order() || action.iter().any(|row| row.len() != a.order()) {
        return Err(GroupError::ActionShape);
    }
    for (x, row) in action.iter().enumerate() {
        let mut seen = vec![false; a.order()];
        for &v in row {
            if v >= a.order() || seen[v] {
                return Err(GroupError::ActionNotAutomorphic(x));
            }
            seen[v] = true;
        }
        for p in a.elements() {
            for q in a.elements() {
                if row[a.mul(p, q)] != a.mul(row[p], row[q]) {
                    return Err(GroupError::ActionNotAutomorphic(x));
                }
            }
        }
    }
    if (0..a.order()).any(|p| action[h.identity()][p] != p) {
        return Err(GroupError::ActionNotHomomorphic(h.identity(), h.identity()));
    }
    for x in h.elements() {
        for y in h.elements() {
            let xy = h.mul(x, y);
            if (0..a.order()).any(|p| action[xy][p] != action[x][action[y][p]]) {
                return Err(GroupError::ActionNotHomomorphic(x, y));
            }
        }
    }
    let m = h.order();
    let n = a.order() * m;
    let mut table = Vec::with_capacity(n * n);
    for s in 0..n {
        let (p, x) = (s / m, s % m);
        for t in 0..n {
            let (q, y) = (t / m, t % m);
            table.push(a.mul(p, action[x][q]) * m + h.mul(x, y));
        }
    }
    FiniteGroup::from_flat(format!("{}:{}", a.name(), h.name()), n, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        load_group(&rows, &format!("Z{n}")).unwrap()
    }

    fn s3() -> FiniteGroup {
        // r^k then r^k s.
        let rows: Vec<Vec<usize>> = (0..6)
            .map(|x| {
                (0..6)
                    .map(|y| {
                        // element b*3 + a is r^a s^b; r^a s^b r^c s^d = r^{a + (-1)^b c} s^{b+d}
                        let (a, b, c, d) = (x % 3, x / 3, y % 3, y / 3);
                        let rot = if b == 0 { (a + c) % 3 } else { (a + 3 - c) % 3 };
                        ((b + d) % 2) * 3 + rot
                    })
                    .collect()
            })
            .collect();
        load_group(&rows, "S3").unwrap()
    }

    #[test]
    fn trivial_group_loads() {
        let g = load_group(&[vec![0]], "1").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn missing_inverse_is_reported() {
        assert_eq!(load_group(&[vec![0, 1], vec![1, 1]], "bad"), Err(GroupError::NoInverse(1)));
    }

    #[test]
    fn identity_need_not_be_zero() {
        // Z2 with identity labelled 1.
        let g = load_group(&[vec![1, 0], vec![0, 1]], "Z2'").unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn non_associative_table_rejected() {
        // A Latin square with identity 0 that is not a group (order 5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(load_group(&rows, "loop"), Err(GroupError::NotAssociative(..))));
    }

    #[test]
    fn subgroups_of_small_groups() {
        let z6 = cyclic(6);
        let subs: Vec<Vec<usize>> =
            enumerate_subgroups(&z6).unwrap().iter().map(|s| s.elements().to_vec()).collect();
        assert_eq!(subs, vec![vec![0], vec![0, 1, 2, 3, 4, 5], vec![0, 2, 4], vec![0, 3]]);

        let s3 = s3();
        let subs = enumerate_subgroups(&s3).unwrap();
        let mut sizes: Vec<usize> = subs.iter().map(Subgroup::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);

        let one = load_group(&[vec![0]], "1").unwrap();
        assert_eq!(enumerate_subgroups(&one).unwrap().len(), 1);
    }

    #[test]
    fn homomorphism_counts() {
        assert_eq!(enumerate_homomorphisms(&cyclic(3), &cyclic(2)).len(), 1);
        assert_eq!(enumerate_homomorphisms(&cyclic(2), &cyclic(2)).len(), 2);
        let z2z4 = enumerate_homomorphisms(&cyclic(2), &cyclic(4));
        assert_eq!(z2z4.iter().map(|h| h.image.clone()).collect::<Vec<_>>(), vec![
            vec![0, 0],
            vec![0, 2]
        ]);
    }

    #[test]
    fn normality() {
        let z6 = cyclic(6);
        assert!(is_normal(&z6, &Subgroup::new(&z6, &[0, 2, 4]).unwrap()).unwrap());
        let s3 = s3();
        assert!(is_normal(&s3, &Subgroup::new(&s3, &[0, 1, 2]).unwrap()).unwrap());
        assert!(!is_normal(&s3, &Subgroup::new(&s3, &[0, 3]).unwrap()).unwrap());
        assert!(Subgroup::new(&s3, &[0, 3, 4]).is_err());
    }

    #[test]
    fn semidirect_products() {
        let z3 = cyclic(3);
        let z2 = cyclic(2);
        let trivial = vec![vec![0, 1, 2]; 2];
        let z6 = semidirect_product(&z3, &z2, &trivial).unwrap();
        assert!(z6.find_isomorphism(&cyclic(6)).is_some());
        assert_eq!(z6.rows(), z3.direct_product(&z2).rows());

        let inversion = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let d3 = semidirect_product(&z3, &z2, &inversion).unwrap();
        assert!(d3.find_isomorphism(&s3()).is_some());
        assert!(!d3.is_abelian());

        let v4 = semidirect_product(&z2, &z2, &[vec![0, 1], vec![0, 1]]).unwrap();
        assert!(v4.is_abelian());
        assert!((0..4).all(|x| v4.mul(x, x) == v4.identity()));

        let not_auto = vec![vec![0, 1, 2], vec![0, 0, 0]];
        assert_eq!(semidirect_product(&z3, &z2, &not_auto), Err(GroupError::ActionNotAutomorphic(1)));
        // Inversion is an automorphism of Z3 but Z3 cannot act through it faithfully.
        let bad_hom = vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]];
        assert!(matches!(
            semidirect_product(&z3, &z3, &bad_hom),
            Err(GroupError::ActionNotHomomorphic(..))
        ));
    }

    #[test]
    fn group_file_rejects_unknown_fields() {
        let ok = r#"{"name":"Z2","order":2,"table":[[0,1],[1,0]]}"#;
        assert_eq!(FiniteGroup::from_json(ok).unwrap().order(), 2);
        let extra = r#"{"name":"Z2","order":2,"table":[[0,1],[1,0]],"x":1}"#;
        assert!(matches!(FiniteGroup::from_json(extra), Err(GroupError::File(_))));
        let wrong = r#"{"name":"Z2","order":3,"table":[[0,1],[1,0]]}"#;
        assert!(matches!(FiniteGroup::from_json(wrong), Err(GroupError::OrderMismatch { .. })));
    }
}
