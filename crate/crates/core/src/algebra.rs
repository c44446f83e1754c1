//! Finite-dimensional Lie superalgebras given by structure constants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::scalar::{int, Scalar};
use crate::subspace::{GradedIdeal, Subspace};
use crate::superdim::{Parity, SuperDim};

/// A linear combination of basis vectors, keyed by basis index.
pub type Element = SparseVec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVector {
    pub name: String,
    pub parity: Parity,
}

/// A Lie superalgebra over the rationals.
///
/// The basis lists every even vector before every odd one. Bracket values
/// are kept as supplied (`entries`) and also expanded into a dense table
/// using the graded skew-symmetry sign for any orientation not supplied.
#[derive(Debug, Clone)]
pub struct LieSuperalgebra {
    name: Option<String>,
    basis: Vec<BasisVector>,
    entries: BTreeMap<(usize, usize), Element>,
    table: Vec<Vec<Element>>,
}

/// One failed axiom, reported by [`LieSuperalgebra::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Grading { x: String, y: String },
    SkewSymmetry { x: String, y: String },
    Jacobi { x: String, y: String, z: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Grading { x, y } => write!(f, "Z2-grading violated at ({x},{y})"),
            Violation::SkewSymmetry { x, y } => write!(f, "graded skew-symmetry violated at ({x},{y})"),
            Violation::Jacobi { x, y, z } => write!(f, "graded Jacobi identity violated at ({x},{y},{z})"),
        }
    }
}

/// Incremental construction by basis names.
#[derive(Debug, Clone, Default)]
pub struct AlgebraBuilder {
    name: Option<String>,
    even: Vec<String>,
    odd: Vec<String>,
    brackets: Vec<(String, String, Vec<(String, Scalar)>)>,
}

impl AlgebraBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        AlgebraBuilder { name: Some(name.into()), ..Default::default() }
    }

    pub fn even(mut self, name: impl Into<String>) -> Self {
        self.even.push(name.into());
        self
    }

    pub fn odd(mut self, name: impl Into<String>) -> Self {
        self.odd.push(name.into());
        self
    }

    pub fn bracket(mut self, x: &str, y: &str, value: &[(&str, Scalar)]) -> Self {
        self.brackets.push((
            x.to_string(),
            y.to_string(),
            value.iter().map(|(n, c)| (n.to_string(), c.clone())).collect(),
        ));
        self
    }

    pub fn build(self) -> Result<LieSuperalgebra> {
        let mut basis: Vec<BasisVector> = self
            .even
            .into_iter()
            .map(|name| BasisVector { name, parity: Parity::Even })
            .collect();
        basis.extend(self.odd.into_iter().map(|name| BasisVector { name, parity: Parity::Odd }));
        let mut index = BTreeMap::new();
        for (i, b) in basis.iter().enumerate() {
            if index.insert(b.name.clone(), i).is_some() {
                return Err(Error::DuplicateName(b.name.clone()));
            }
        }
        let lookup = |n: &str| index.get(n).copied().ok_or_else(|| Error::UnknownName(n.to_string()));
        let mut entries = BTreeMap::new();
        for (x, y, value) in self.brackets {
            let key = (lookup(&x)?, lookup(&y)?);
            let mut v = Element::new();
            for (n, c) in value {
                v.add_term(lookup(&n)?, c);
            }
            if entries.insert(key, v).is_some() {
                return Err(Error::InvalidParameters(format!("bracket ({x},{y}) given twice")));
            }
        }
        Ok(LieSuperalgebra::from_parts(self.name, basis, entries))
    }
}

impl LieSuperalgebra {
    /// Assembles an algebra from raw parts. `basis` must list even vectors
    /// first; this is asserted.
    pub fn from_parts(
        name: Option<String>,
        basis: Vec<BasisVector>,
        entries: BTreeMap<(usize, usize), Element>,
    ) -> LieSuperalgebra {
        assert!(
            basis.windows(2).all(|w| w[0].parity <= w[1].parity),
            "even basis vectors must precede odd ones"
        );
        let entries: BTreeMap<_, _> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let n = basis.len();
        let mut table = vec![vec![Element::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = if let Some(v) = entries.get(&(i, j)) {
                    v.clone()
                } else if let Some(v) = entries.get(&(j, i)) {
                    let sign = -basis[i].parity.koszul(basis[j].parity);
                    v.scaled(&int(sign as i64))
                } else {
                    Element::new()
                };
            }
        }
        LieSuperalgebra { name, basis, entries, table }
    }

    /// Structure constants for basis pairs in canonical orientation
    /// (`i < j`, plus `i == j` for odd vectors), nonzero only.
    pub fn canonical_brackets(&self) -> Vec<((usize, usize), Element)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i..self.len() {
                if i == j && !self.parity(i).is_odd() {
                    continue;
                }
                if !self.table[i][j].is_zero() {
                    out.push(((i, j), self.table[i][j].clone()));
                }
            }
        }
        out
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn dim(&self) -> SuperDim {
        SuperDim::from_parities(self.basis.iter().map(|b| b.parity))
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn parities(&self) -> Vec<Parity> {
        self.basis.iter().map(|b| b.parity).collect()
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// The basis vector with the given name as an element.
    pub fn element(&self, name: &str) -> Result<Element> {
        Ok(Element::unit(self.index_of(name)?))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::unit(i)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(|v| v.is_zero()))
    }

    /// Bracket of two basis vectors.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Element {
        &self.table[i][j]
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        match x.keys().last() {
            Some(&k) if k >= self.len() => Err(Error::IndexOutOfRange { index: k, dim: self.len() }),
            _ => Ok(()),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let v = &self.table[*i][*j];
                if !v.is_zero() {
                    out.axpy(&(a * b), v);
                }
            }
        }
        out
    }

    /// Parity of a nonzero homogeneous element, `None` if mixed or zero.
    pub fn element_parity(&self, x: &Element) -> Option<Parity> {
        homogeneous_parity(&self.parities(), x)
    }

    /// Lists every violated axiom; empty iff the algebra is a Lie superalgebra.
    pub fn check_axioms(&self) -> Vec<Violation> {
        let mut report = Vec::new();
        let name = |i: usize| self.basis[i].name.clone();
        for (&(i, j), v) in &self.entries {
            let want = self.parity(i) + self.parity(j);
            if v.keys().any(|&k| self.parity(k) != want) {
                report.push(Violation::Grading { x: name(i), y: name(j) });
            }
            if i == j && !self.parity(i).is_odd() {
                report.push(Violation::SkewSymmetry { x: name(i), y: name(j) });
            } else if i < j {
                if let Some(w) = self.entries.get(&(j, i)) {
                    let sign = -self.parity(i).koszul(self.parity(j));
                    if *v != w.scaled(&int(sign as i64)) {
                        report.push(Violation::SkewSymmetry { x: name(i), y: name(j) });
                    }
                }
            }
        }
        let n = self.len();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    if !self.jacobiator(i, j, k).is_zero() {
                        report.push(Violation::Jacobi { x: name(i), y: name(j), z: name(k) });
                    }
                }
            }
        }
        report
    }

    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`
    /// on basis vectors.
    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Element {
        let (p, q, r) = (self.parity(i), self.parity(j), self.parity(k));
        let ei = Element::unit(i);
        let ej = Element::unit(j);
        let ek = Element::unit(k);
        let mut out = Element::new();
        out.axpy(&int(p.koszul(r) as i64), &self.bracket_unchecked(&ei, &self.table[j][k]));
        out.axpy(&int(q.koszul(p) as i64), &self.bracket_unchecked(&ej, &self.table[k][i]));
        out.axpy(&int(r.koszul(q) as i64), &self.bracket_unchecked(&ek, &self.table[i][j]));
        out
    }

    pub fn whole(&self) -> GradedIdeal {
        let all: Vec<Element> = (0..self.len()).map(Element::unit).collect();
        GradedIdeal::trusted(Subspace::span(&self.parities(), &all))
    }

    pub fn zero_ideal(&self) -> GradedIdeal {
        GradedIdeal::trusted(Subspace::span(&self.parities(), &[]))
    }

    /// Span of all brackets `[a, b]` with `a` in `a_space`, `b` in `b_space`.
    pub fn bracket_spaces(&self, a_space: &Subspace, b_space: &Subspace) -> Subspace {
        let mut e = Echelon::new();
        for a in a_space.basis() {
            for b in b_space.basis() {
                e.insert(self.bracket_unchecked(a, b));
            }
        }
        Subspace::from_echelon(&self.parities(), &e)
    }

    /// `Z(L)`: kernel of the adjoint representation.
    pub fn center(&self) -> GradedIdeal {
        GradedIdeal::trusted(self.centralizer(&self.whole(), &self.whole()))
    }

    /// Elements of `within` that commute with all of `with`.
    pub fn centralizer(&self, within: &Subspace, with: &Subspace) -> Subspace {
        let images: Vec<SparseVec<(usize, usize)>> = within
            .basis()
            .iter()
            .map(|u| {
                let mut img = SparseVec::new();
                for (t, w) in with.basis().iter().enumerate() {
                    for (k, c) in self.bracket_unchecked(u, w).iter() {
                        img.add_term((t, *k), c.clone());
                    }
                }
                img
            })
            .collect();
        let combos = kernel(&images);
        let vectors: Vec<Element> = combos.iter().map(|c| within.combine(c)).collect();
        Subspace::span(&self.parities(), &vectors)
    }

    /// `L² = [L, L]`.
    pub fn derived_subalgebra(&self) -> GradedIdeal {
        let w = self.whole();
        GradedIdeal::trusted(self.bracket_spaces(&w, &w))
    }

    /// `L = L¹ ⊇ L² ⊇ …`, ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let whole = self.whole().into_subspace();
        let mut series = vec![whole.clone()];
        loop {
            let next = self.bracket_spaces(&whole, series.last().unwrap());
            if &next == series.last().unwrap() {
                return series;
            }
            let stop = next.is_zero();
            series.push(next);
            if stop {
                return series;
            }
        }
    }

    /// Smallest `c` with `L^{c+1} = 0`.
    pub fn nilpotency_class(&self) -> Result<usize> {
        let series = self.lower_central_series();
        let last = series.last().unwrap();
        if !last.is_zero() {
            return Err(Error::NotNilpotent(last.dim()));
        }
        Ok(series.len() - 1)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let e = s.echelon();
        s.basis()
            .iter()
            .all(|v| (0..self.len()).all(|k| e.contains(&self.bracket_unchecked(v, &Element::unit(k)))))
    }

    /// Checks that `s` is a graded ideal.
    pub fn ideal(&self, s: Subspace) -> Result<GradedIdeal> {
        if !s.is_graded() {
            return Err(Error::NotGraded);
        }
        if !self.is_ideal(&s) {
            return Err(Error::NotAnIdeal("not closed under bracket with the algebra".into()));
        }
        Ok(GradedIdeal::trusted(s))
    }

    /// Graded span of elements (split into homogeneous components).
    pub fn graded_span(&self, elements: &[Element]) -> Subspace {
        Subspace::graded_span(&self.parities(), elements)
    }

    /// Ideal spanned by named basis vectors; errors unless it is an ideal.
    pub fn coordinate_ideal(&self, names: &[&str]) -> Result<GradedIdeal> {
        let mut v = Vec::new();
        for n in names {
            v.push(self.element(n)?);
        }
        self.ideal(self.graded_span(&v))
    }

    /// Smallest graded ideal containing `generators`.
    pub fn ideal_closure(&self, generators: &[Element]) -> GradedIdeal {
        let parities = self.parities();
        let mut e = Echelon::new();
        let mut queue: Vec<Element> = Vec::new();
        for g in generators {
            for part in split_homogeneous(&parities, g) {
                if e.insert(part.clone()) {
                    queue.push(part);
                }
            }
        }
        while let Some(v) = queue.pop() {
            for k in 0..self.len() {
                let w = self.bracket_unchecked(&v, &Element::unit(k));
                if e.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        GradedIdeal::trusted(Subspace::from_echelon(&parities, &e))
    }

    /// `L/I` with basis the non-pivot basis vectors of `I`'s echelon form.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        let ideal = self.ideal(ideal.clone())?;
        let e = ideal.echelon();
        let kept: Vec<usize> = (0..self.len()).filter(|i| !e.has_pivot(i)).collect();
        let mut new_index = vec![None; self.len()];
        for (n, &i) in kept.iter().enumerate() {
            new_index[i] = Some(n);
        }
        let project = |v: &Element| -> Element {
            e.reduce_fully(v.clone()).map_keys(|k| new_index[*k].expect("remainder lies on complement"))
        };
        let basis: Vec<BasisVector> = kept.iter().map(|&i| self.basis[i].clone()).collect();
        let mut entries = BTreeMap::new();
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate().skip(a) {
                if a == b && !self.parity(i).is_odd() {
                    continue;
                }
                let v = project(&self.table[i][j]);
                if !v.is_zero() {
                    entries.insert((a, b), v);
                }
            }
        }
        let name = self.name.as_ref().map(|n| format!("{n}/I"));
        let algebra = LieSuperalgebra::from_parts(name, basis, entries);
        Ok(Quotient { algebra, echelon: e, new_index })
    }

    /// `L1 ⊕ L2` with no cross brackets. Clashing names from `other` get a
    /// trailing `'`.
    pub fn direct_sum(&self, other: &LieSuperalgebra) -> LieSuperalgebra {
        let mut names: BTreeSet<String> = self.basis.iter().map(|b| b.name.clone()).collect();
        let renamed: Vec<String> = other
            .basis
            .iter()
            .map(|b| {
                let mut n = b.name.clone();
                while names.contains(&n) {
                    n.push('\'');
                }
                names.insert(n.clone());
                n
            })
            .collect();
        let (e1, e2) = (self.dim().even, other.dim().even);
        // new position of self index / other index
        let pos1 = |i: usize| if i < e1 { i } else { i + e2 };
        let pos2 = |i: usize| if i < e2 { e1 + i } else { self.len() + i };
        let mut basis = vec![None; self.len() + other.len()];
        for (i, b) in self.basis.iter().enumerate() {
            basis[pos1(i)] = Some(b.clone());
        }
        for (i, b) in other.basis.iter().enumerate() {
            basis[pos2(i)] = Some(BasisVector { name: renamed[i].clone(), parity: b.parity });
        }
        let mut entries = BTreeMap::new();
        for ((i, j), v) in self.canonical_brackets() {
            entries.insert((pos1(i), pos1(j)), v.map_keys(|k| pos1(*k)));
        }
        for ((i, j), v) in other.canonical_brackets() {
            entries.insert((pos2(i), pos2(j)), v.map_keys(|k| pos2(*k)));
        }
        let name = match (self.name(), other.name()) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        LieSuperalgebra::from_parts(name, basis.into_iter().map(Option::unwrap).collect(), entries)
    }

    /// Reports whether `I` and `J` exhibit `L` as their central product.
    pub fn central_product(&self, i: &Subspace, j: &Subspace) -> CentralProductReport {
        let sum = i.sum(j);
        let cross = self.bracket_spaces(i, j);
        let meet = i.intersection(j);
        CentralProductReport {
            spans_algebra: sum.dim() == self.dim(),
            brackets_vanish: cross.is_zero(),
            intersection_central: meet.is_subspace_of(&self.center()),
        }
    }

    /// The same algebra with its basis reordered within each parity block.
    /// `order[new] = old`.
    pub fn permuted(&self, order: &[usize]) -> LieSuperalgebra {
        let mut inverse = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        let basis = order.iter().map(|&o| self.basis[o].clone()).collect();
        let entries = self
            .canonical_brackets()
            .into_iter()
            .map(|((i, j), v)| ((inverse[i], inverse[j]), v.map_keys(|k| inverse[*k])))
            .collect();
        LieSuperalgebra::from_parts(self.name.clone(), basis, entries)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CentralProductReport {
    pub spans_algebra: bool,
    pub brackets_vanish: bool,
    pub intersection_central: bool,
}

impl CentralProductReport {
    pub fn holds(&self) -> bool {
        self.spans_algebra && self.brackets_vanish && self.intersection_central
    }
}

/// A quotient algebra together with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieSuperalgebra,
    echelon: Echelon<usize>,
    new_index: Vec<Option<usize>>,
}

impl Quotient {
    pub fn project(&self, v: &Element) -> Element {
        self.echelon
            .reduce_fully(v.clone())
            .map_keys(|k| self.new_index[*k].expect("remainder lies on complement"))
    }

    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        let images: Vec<Element> = s.basis().iter().map(|v| self.project(v)).collect();
        Subspace::span(&self.algebra.parities(), &images)
    }
}

pub(crate) fn homogeneous_parity(parities: &[Parity], x: &Element) -> Option<Parity> {
    let mut it = x.keys().map(|&k| parities[k]);
    let first = it.next()?;
    it.all(|p| p == first).then_some(first)
}

pub(crate) fn split_homogeneous(parities: &[Parity], x: &Element) -> Vec<Element> {
    [Parity::Even, Parity::Odd]
        .into_iter()
        .map(|p| x.filter(|k| parities[*k] == p))
        .filter(|v| !v.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn h10() -> LieSuperalgebra {
        AlgebraBuilder::new("H(1,0)")
            .even("x1")
            .even("x2")
            .even("z")
            .bracket("x1", "x2", &[("z", int(1))])
            .build()
            .unwrap()
    }

    fn h1() -> LieSuperalgebra {
        AlgebraBuilder::new("H1")
            .even("x")
            .odd("y")
            .odd("z")
            .bracket("x", "y", &[("z", int(1))])
            .build()
            .unwrap()
    }

    #[test]
    fn brackets_follow_sign_rule() {
        let l = h10();
        let (x1, x2, z) = (l.element("x1").unwrap(), l.element("x2").unwrap(), l.element("z").unwrap());
        assert_eq!(l.bracket(&x1, &x2).unwrap(), z);
        assert_eq!(l.bracket(&x2, &x1).unwrap(), z.neg());
        assert!(l.bracket(&z, &x1).unwrap().is_zero());
        let h = h1();
        let (x, y) = (h.element("x").unwrap(), h.element("y").unwrap());
        // odd-even: [y,x] = -[x,y]
        assert_eq!(h.bracket(&y, &x).unwrap(), h.element("z").unwrap().neg());
    }

    #[test]
    fn out_of_range_element() {
        let l = h10();
        assert!(matches!(
            l.bracket(&Element::unit(7), &Element::unit(0)),
            Err(Error::IndexOutOfRange { index: 7, dim: 3 })
        ));
    }

    #[test]
    fn sign_error_is_reported() {
        let l = AlgebraBuilder::new("bad")
            .even("x1")
            .even("x2")
            .even("z")
            .bracket("x1", "x2", &[("z", int(1))])
            .bracket("x2", "x1", &[("z", int(1))])
            .build()
            .unwrap();
        let report = l.check_axioms();
        assert!(report.contains(&Violation::SkewSymmetry { x: "x1".into(), y: "x2".into() }));
        assert_eq!(report[0].to_string(), "graded skew-symmetry violated at (x1,x2)");
    }

    #[test]
    fn grading_and_jacobi_violations() {
        let l = AlgebraBuilder::new("bad")
            .even("x")
            .odd("y")
            .bracket("x", "y", &[("x", int(1))])
            .build()
            .unwrap();
        assert!(l.check_axioms().contains(&Violation::Grading { x: "x".into(), y: "y".into() }));
        // [a,b]=b, [a,c]=b, [b,c]=a is not a Lie algebra
        let j = AlgebraBuilder::new("nonjacobi")
            .even("a")
            .even("b")
            .even("c")
            .bracket("a", "b", &[("b", int(1))])
            .bracket("b", "c", &[("a", int(1))])
            .build()
            .unwrap();
        assert!(j.check_axioms().iter().any(|v| matches!(v, Violation::Jacobi { .. })));
        assert!(h10().check_axioms().is_empty());
        assert!(h1().check_axioms().is_empty());
    }

    #[test]
    fn center_and_derived() {
        let l = h10();
        assert_eq!(l.center().dim(), SuperDim::new(1, 0));
        assert!(l.center().contains(&l.element("z").unwrap()));
        assert_eq!(l.derived_subalgebra().dim(), SuperDim::new(1, 0));
        assert_eq!(h1().center().dim(), SuperDim::new(0, 1));
        assert_eq!(l.nilpotency_class().unwrap(), 2);
    }

    #[test]
    fn ideal_closure_saturates() {
        let l = h10();
        let i = l.ideal_closure(&[l.element("x1").unwrap()]);
        assert_eq!(i.dim(), SuperDim::new(2, 0));
        assert!(i.contains(&l.element("z").unwrap()));
        let h = h1();
        let j = h.ideal_closure(&[h.element("y").unwrap()]);
        assert_eq!(j.dim(), SuperDim::new(0, 2));
        // mixed generator is split into components
        let mixed = h.element("x").unwrap().sum(&h.element("y").unwrap());
        assert_eq!(h.ideal_closure(&[mixed]).dim(), SuperDim::new(1, 2));
    }

    #[test]
    fn quotient_by_center() {
        let l = h10();
        let q = l.quotient(&l.center()).unwrap();
        assert_eq!(q.algebra.dim(), SuperDim::new(2, 0));
        assert!(q.algebra.is_abelian());
        let h = h1();
        let q = h.quotient(&h.center()).unwrap();
        assert_eq!(q.algebra.dim(), SuperDim::new(1, 1));
        assert!(q.algebra.is_abelian());
        assert!(q.algebra.check_axioms().is_empty());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let l = h10();
        let s = l.graded_span(&[l.element("x1").unwrap()]);
        assert!(matches!(l.quotient(&s), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn not_nilpotent() {
        // two-dimensional non-abelian Lie algebra [a,b]=b
        let l = AlgebraBuilder::new("aff").even("a").even("b").bracket("a", "b", &[("b", int(1))]).build().unwrap();
        assert!(matches!(l.nilpotency_class(), Err(Error::NotNilpotent(d)) if d == SuperDim::new(1, 0)));
    }
}
