//! Finite sets of string atoms, functions between them, and quotients by
//! generated equivalence relations.

use std::fmt;

use crate::error::{Error, Result};

/// A finite set of atoms kept in lexicographic order.
///
/// Two sets are equal exactly when their atom lists are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinSet {
    atoms: Vec<String>,
}

impl FinSet {
    pub fn empty() -> Self {
        FinSet { atoms: Vec::new() }
    }

    /// Builds a set, sorting the atoms. Duplicates are rejected.
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        atoms.sort();
        for w in atoms.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateAtom(w[0].clone()));
            }
        }
        Ok(FinSet { atoms })
    }

    /// Builds a set from atoms, silently merging duplicates.
    pub fn from_iter_dedup<I, S>(atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        atoms.sort();
        atoms.dedup();
        FinSet { atoms }
    }

    /// The set `{0, 1, ..., n-1}` rendered as decimal atoms (in lexicographic order).
    pub fn numbered(prefix: &str, n: usize) -> Self {
        FinSet::from_iter_dedup((0..n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom(&self, i: usize) -> &str {
        &self.atoms[i]
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms
            .binary_search_by(|a| a.as_str().cmp(atom))
            .ok()
    }

    pub fn contains(&self, atom: &str) -> bool {
        self.index_of(atom).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.atoms.iter().map(String::as_str)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.atoms.join(", "))
    }
}

/// A total function between finite sets, stored as an index table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinFunction {
    source: FinSet,
    target: FinSet,
    table: Vec<usize>,
}

impl FinFunction {
    /// Builds a function from an index table, checking totality and range.
    pub fn from_indices(source: FinSet, target: FinSet, table: Vec<usize>) -> Result<Self> {
        if table.len() != source.len() {
            return Err(Error::IncompleteTable(format!(
                "function table has {} entries for a source of size {}",
                table.len(),
                source.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&j| j >= target.len()) {
            return Err(Error::Invalid(format!("image index {bad} outside target")));
        }
        Ok(FinFunction {
            source,
            target,
            table,
        })
    }

    /// Builds a function from atom pairs; every source atom must appear once.
    pub fn from_pairs<'a, I>(source: FinSet, target: FinSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut table = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            let i = source
                .index_of(a)
                .ok_or_else(|| Error::UnknownAtom(a.to_string()))?;
            let j = target
                .index_of(b)
                .ok_or_else(|| Error::UnknownAtom(b.to_string()))?;
            table[i] = j;
        }
        if let Some(i) = table.iter().position(|&j| j == usize::MAX) {
            return Err(Error::IncompleteTable(format!(
                "no image for `{}`",
                source.atom(i)
            )));
        }
        Ok(FinFunction {
            source,
            target,
            table,
        })
    }

    pub fn identity(set: &FinSet) -> Self {
        FinFunction {
            source: set.clone(),
            target: set.clone(),
            table: (0..set.len()).collect(),
        }
    }

    pub fn source(&self) -> &FinSet {
        &self.source
    }

    pub fn target(&self) -> &FinSet {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn apply(&self, atom: &str) -> Option<&str> {
        self.source
            .index_of(atom)
            .map(|i| self.target.atom(self.table[i]))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.table.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for &j in &self.table {
            seen[j] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinFunction) -> Result<FinFunction> {
        if self.target != other.source {
            return Err(Error::BoundaryMismatch(
                "codomain and domain differ".to_string(),
            ));
        }
        Ok(FinFunction {
            source: self.source.clone(),
            target: other.target.clone(),
            table: self.table.iter().map(|&i| other.table[i]).collect(),
        })
    }
}

/// Disjoint-set forest over `0..n` with union by size and path compression.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns false if they already coincided.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    /// Assigns dense class ids `0..k` ordered by the least member of each class.
    ///
    /// Returns `(class_of, k)`.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut root_class = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if root_class[r] == usize::MAX {
                root_class[r] = next;
                next += 1;
            }
            class_of[x] = root_class[r];
        }
        (class_of, next)
    }
}

/// Quotients `set` by the equivalence relation generated by `pairs`.
///
/// Each class is named by its lexicographically least atom; the returned
/// projection sends every atom to its class.
pub fn quotient<'a, I>(set: &FinSet, pairs: I) -> Result<(FinSet, FinFunction)>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let mut uf = UnionFind::new(set.len());
    for (a, b) in pairs {
        let i = set.index_of(a).ok_or_else(|| Error::UnknownAtom(a.to_string()))?;
        let j = set.index_of(b).ok_or_else(|| Error::UnknownAtom(b.to_string()))?;
        uf.union(i, j);
    }
    Ok(quotient_by(set, &mut uf))
}

/// Quotient by index pairs; used internally where atoms are already indexed.
pub fn quotient_indices(set: &FinSet, pairs: &[(usize, usize)]) -> (FinSet, FinFunction) {
    let mut uf = UnionFind::new(set.len());
    for &(i, j) in pairs {
        uf.union(i, j);
    }
    quotient_by(set, &mut uf)
}

/// Builds the quotient set and projection from a finished union-find.
///
/// The atoms of `set` are sorted, so the first member met in index order is
/// the least atom of its class; class ids from [`UnionFind::classes`] are
/// therefore already in the canonical order of the representatives.
pub fn quotient_by(set: &FinSet, uf: &mut UnionFind) -> (FinSet, FinFunction) {
    let (class_of, k) = uf.classes();
    let mut reps: Vec<Option<&str>> = vec![None; k];
    for (i, &c) in class_of.iter().enumerate() {
        if reps[c].is_none() {
            reps[c] = Some(set.atom(i));
        }
    }
    let quotient = FinSet {
        atoms: reps.into_iter().map(|a| a.unwrap().to_string()).collect(),
    };
    let projection = FinFunction {
        source: set.clone(),
        target: quotient.clone(),
        table: class_of,
    };
    (quotient, projection)
}

/// All functions `x → y` in lexicographic order of their index tables.
pub fn enumerate_functions(x: &FinSet, y: &FinSet) -> Vec<FinFunction> {
    let mut out = Vec::new();
    if x.is_empty() {
        out.push(FinFunction {
            source: x.clone(),
            target: y.clone(),
            table: Vec::new(),
        });
        return out;
    }
    if y.is_empty() {
        return out;
    }
    let mut table = vec![0usize; x.len()];
    loop {
        out.push(FinFunction {
            source: x.clone(),
            target: y.clone(),
            table: table.clone(),
        });
        // odometer, last coordinate fastest
        let mut pos = x.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < y.len() {
                break;
            }
            table[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(atoms: &[&str]) -> FinSet {
        FinSet::new(atoms.iter().copied()).unwrap()
    }

    #[test]
    fn atoms_are_sorted_and_unique() {
        let s = set(&["c", "a", "b"]);
        assert_eq!(s.atoms(), &["a", "b", "c"]);
        assert_eq!(
            FinSet::new(["a", "a"]).unwrap_err(),
            Error::DuplicateAtom("a".into())
        );
    }

    #[test]
    fn quotient_without_pairs_is_discrete() {
        let x = set(&["a", "b", "c"]);
        let (q, p) = quotient(&x, []).unwrap();
        assert_eq!(q, x);
        assert_eq!(p.table(), &[0, 1, 2]);
    }

    #[test]
    fn quotient_single_pair() {
        let x = set(&["a", "b", "c"]);
        let (q, p) = quotient(&x, [("a", "b")]).unwrap();
        assert_eq!(q.atoms(), &["a", "c"]);
        assert_eq!(p.apply("b"), Some("a"));
        assert_eq!(p.apply("c"), Some("c"));
    }

    #[test]
    fn quotient_transitive_closure() {
        let x = set(&["a", "b", "c", "d"]);
        let (q, p) = quotient(&x, [("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(q.atoms(), &["a", "d"]);
        assert_eq!(p.apply("c"), Some("a"));
        assert!(p.is_surjective());
    }

    #[test]
    fn quotient_representative_is_least_atom() {
        let x = set(&["p", "q", "r"]);
        let (q, _) = quotient(&x, [("r", "q")]).unwrap();
        assert_eq!(q.atoms(), &["p", "q"]);
    }

    #[test]
    fn quotient_rejects_unknown_atoms() {
        let x = set(&["a"]);
        assert_eq!(
            quotient(&x, [("a", "z")]).unwrap_err(),
            Error::UnknownAtom("z".into())
        );
    }

    #[test]
    fn function_counts() {
        let empty = FinSet::empty();
        let two = set(&["x", "y"]);
        let three = set(&["a", "b", "c"]);
        assert_eq!(enumerate_functions(&empty, &three).len(), 1);
        assert_eq!(enumerate_functions(&two, &three).len(), 9);
        assert_eq!(enumerate_functions(&set(&["x"]), &empty).len(), 0);
    }

    #[test]
    fn function_enumeration_is_lexicographic() {
        let two = set(&["x", "y"]);
        let fs = enumerate_functions(&two, &two);
        let tables: Vec<_> = fs.iter().map(|f| f.table().to_vec()).collect();
        assert_eq!(tables, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
