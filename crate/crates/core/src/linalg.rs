//! Sparse exact linear algebra over the rationals.
//!
//! Vectors are sparse maps from an ordered key type to [`Scalar`]. Echelon
//! forms always pivot on the smallest key of a row ("leftmost pivot"), so the
//! reduced echelon form of a span is canonical.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec<K: Ord> {
    entries: BTreeMap<K, Scalar>,
}

impl<K: Ord + Debug> Debug for SparseVec<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k, v.to_string())))
            .finish()
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        SparseVec { entries: BTreeMap::new() }
    }

    pub fn unit(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut v = Self::new();
        v.add_term(key, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.entries.get(key)
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.entries.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.entries.iter().next()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVec<K>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.entries {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec<K> {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn scale(&mut self, c: &Scalar) {
        if c.is_zero() {
            self.entries.clear();
        } else {
            for v in self.entries.values_mut() {
                *v *= c;
            }
        }
    }

    pub fn neg(&self) -> SparseVec<K> {
        self.scaled(&-Scalar::one())
    }

    pub fn sum(&self, other: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.axpy(&-Scalar::one(), other);
        out
    }

    /// Keeps only the entries whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> SparseVec<K> {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> SparseVec<J> {
        let mut out = SparseVec::new();
        for (k, v) in &self.entries {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Scales so the leading coefficient is one.
    pub fn normalized(mut self) -> SparseVec<K> {
        if let Some((_, lead)) = self.leading() {
            let inv = lead.recip();
            self.scale(&inv);
        }
        self
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for SparseVec<K> {
    fn from_iter<T: IntoIterator<Item = (K, Scalar)>>(iter: T) -> Self {
        let mut v = SparseVec::new();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

/// Two-block key used for augmented systems: every `Main` key sorts before
/// every `Tag` key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Aug<M, T> {
    Main(M),
    Tag(T),
}

/// Incremental row echelon form. Each stored row is normalised so its pivot
/// (smallest key) has coefficient one, and no two rows share a pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon<K: Ord> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn from_vectors<'a, I>(vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec<K>>,
        K: 'a,
    {
        let mut e = Self::new();
        for v in vectors {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    pub fn has_pivot(&self, key: &K) -> bool {
        self.rows.contains_key(key)
    }

    /// Reduces `v` until its leading key is not a pivot (or `stop` says to
    /// halt at that key). Returns the remainder.
    pub fn reduce_until(&self, mut v: SparseVec<K>, stop: impl Fn(&K) -> bool) -> SparseVec<K> {
        loop {
            let (key, coeff) = match v.leading() {
                Some((k, c)) => (k.clone(), c.clone()),
                None => return v,
            };
            if stop(&key) {
                return v;
            }
            match self.rows.get(&key) {
                Some(row) => v.axpy(&-coeff, row),
                None => return v,
            }
        }
    }

    /// Remainder of `v` after eliminating the leading pivots.
    pub fn reduce(&self, v: SparseVec<K>) -> SparseVec<K> {
        self.reduce_until(v, |_| false)
    }

    /// Full reduction: every pivot position is cleared, not only leading ones.
    pub fn reduce_fully(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut out = SparseVec::new();
        while let Some((key, coeff)) = v.leading().map(|(k, c)| (k.clone(), c.clone())) {
            match self.rows.get(&key) {
                Some(row) => v.axpy(&-coeff, row),
                None => {
                    v.entries.remove(&key);
                    out.add_term(key, coeff);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Inserts `v`; returns `true` when it was independent of the stored rows.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some((k, _)) => {
                let k = k.clone();
                self.rows.insert(k, r.normalized());
                true
            }
        }
    }

    /// Canonical reduced row echelon basis, ordered by pivot.
    pub fn reduced_basis(&self) -> Vec<SparseVec<K>> {
        // back-substitute from the last pivot upwards
        let mut done: BTreeMap<K, SparseVec<K>> = BTreeMap::new();
        for (pivot, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            let later: Vec<K> = r.keys().filter(|k| *k != pivot && done.contains_key(*k)).cloned().collect();
            for k in later {
                let c = r.coeff(&k);
                r.axpy(&-c, &done[&k]);
            }
            done.insert(pivot.clone(), r);
        }
        done.into_values().collect()
    }
}

/// Kernel of the linear map sending input `j` to `images[j]`, as vectors over
/// input indices (canonical reduced echelon basis).
pub fn kernel<K: Ord + Clone>(images: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut e: Echelon<Aug<K, usize>> = Echelon::new();
    for (j, img) in images.iter().enumerate() {
        let mut row = img.map_keys(|k| Aug::Main(k.clone()));
        row.add_term(Aug::Tag(j), Scalar::one());
        e.insert(row);
    }
    let tagged: Vec<SparseVec<usize>> = e
        .rows()
        .filter(|r| matches!(r.leading(), Some((Aug::Tag(_), _))))
        .map(|r| {
            r.map_keys(|k| match k {
                Aug::Tag(j) => *j,
                Aug::Main(_) => unreachable!("kernel rows have no main part"),
            })
        })
        .collect();
    Echelon::from_vectors(tagged.iter()).reduced_basis()
}

/// Solves `target = sum_j c_j * columns[j]`; returns one solution if any.
pub fn solve<K: Ord + Clone>(columns: &[SparseVec<K>], target: &SparseVec<K>) -> Option<SparseVec<usize>> {
    Solver::new(columns).express(target)
}

/// Reusable solver for expressing vectors in terms of a fixed list of columns.
#[derive(Clone, Debug)]
pub struct Solver<K: Ord> {
    echelon: Echelon<Aug<K, usize>>,
}

impl<K: Ord + Clone> Solver<K> {
    pub fn new(columns: &[SparseVec<K>]) -> Self {
        let mut echelon = Echelon::new();
        for (j, c) in columns.iter().enumerate() {
            let mut row = c.map_keys(|k| Aug::Main(k.clone()));
            row.add_term(Aug::Tag(j), Scalar::one());
            echelon.insert(row);
        }
        Solver { echelon }
    }

    pub fn express(&self, target: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let start = target.map_keys(|k| Aug::Main(k.clone()));
        let rem = self.echelon.reduce_until(start, |k| matches!(k, Aug::Tag(_)));
        match rem.leading() {
            Some((Aug::Main(_), _)) => None,
            _ => Some(
                rem.map_keys(|k| match k {
                    Aug::Tag(j) => *j,
                    Aug::Main(_) => unreachable!(),
                })
                .neg(),
            ),
        }
    }
}

/// Basis of the intersection of two spans (Zassenhaus).
pub fn intersection<K: Ord + Clone>(a: &[SparseVec<K>], b: &[SparseVec<K>]) -> Vec<SparseVec<K>> {
    let mut e: Echelon<Aug<K, K>> = Echelon::new();
    for v in a {
        let mut row = v.map_keys(|k| Aug::Main(k.clone()));
        for (k, c) in v.iter() {
            row.add_term(Aug::Tag(k.clone()), c.clone());
        }
        e.insert(row);
    }
    for v in b {
        e.insert(v.map_keys(|k| Aug::Main(k.clone())));
    }
    let rows: Vec<SparseVec<K>> = e
        .rows()
        .filter(|r| matches!(r.leading(), Some((Aug::Tag(_), _))))
        .map(|r| {
            r.map_keys(|k| match k {
                Aug::Tag(t) => t.clone(),
                Aug::Main(_) => unreachable!(),
            })
        })
        .collect();
    Echelon::from_vectors(rows.iter()).reduced_basis()
}
