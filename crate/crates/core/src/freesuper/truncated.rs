//! The free Lie superalgebra on a graded alphabet, cut off above a degree.
//!
//! Elements of degree `d` are realized as super-commutator polynomials in
//! the free associative algebra, which in characteristic zero is a faithful
//! model. Basis vectors of each multidegree are left-normed brackets
//! `[a, b]` (letter `a`, lower basis vector `b`) picked greedily by echelon
//! reduction of their word expansions.

use std::collections::BTreeMap;
use std::ops::Range;

use num_traits::One;

use super::counting::{multidegree_parity, multidegrees, super_witt};
use super::monomial::{GradedAlphabet, Monomial};
use crate::algebra::{BasisVector, Element, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Solver, SparseVec};
use crate::scalar::{int, Scalar};
use crate::superdim::{Parity, SuperDim};

/// Associative polynomial over words.
pub type WordPoly = SparseVec<Vec<u8>>;

#[derive(Debug, Clone)]
pub struct FreeBasisElement {
    pub monomial: Monomial,
    pub multidegree: Vec<usize>,
    pub parity: Parity,
    pub degree: usize,
    /// `(letter, rest)` as basis indices when this vector is `[letter, rest]`.
    pub factors: Option<(usize, usize)>,
    words: WordPoly,
}

impl FreeBasisElement {
    pub fn words(&self) -> &WordPoly {
        &self.words
    }
}

#[derive(Debug, Clone)]
struct Block {
    start: usize,
    len: usize,
    solver: Solver<Vec<u8>>,
}

#[derive(Debug, Clone)]
pub struct TruncatedFreeAlgebra {
    alphabet: GradedAlphabet,
    max_degree: usize,
    basis: Vec<FreeBasisElement>,
    blocks: BTreeMap<Vec<usize>, Block>,
    degree_starts: Vec<usize>,
    /// `ad[a][b]` = coordinates of `[letter a, basis b]`.
    ad: Vec<Vec<Element>>,
}

fn commutator(a: &WordPoly, pa: Parity, b: &WordPoly, pb: Parity) -> WordPoly {
    let mut out = WordPoly::new();
    let sign = int(pa.koszul(pb) as i64);
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            let c = cu * cv;
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            out.add_term(uv, c.clone());
            let mut vu = v.clone();
            vu.extend_from_slice(u);
            out.add_term(vu, -(c * &sign));
        }
    }
    out
}

fn add_multidegrees(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl TruncatedFreeAlgebra {
    pub fn build(alphabet: GradedAlphabet, max_degree: usize) -> Result<TruncatedFreeAlgebra> {
        if max_degree == 0 {
            return Err(Error::InvalidParameters("degree bound must be at least 1".into()));
        }
        let k = alphabet.len();
        let parities = alphabet.parities().to_vec();
        let mut basis: Vec<FreeBasisElement> = Vec::new();
        let mut blocks: BTreeMap<Vec<usize>, Block> = BTreeMap::new();
        let mut degree_starts = vec![0];
        for d in 1..=max_degree {
            for alpha in multidegrees(k, d) {
                let start = basis.len();
                let parity = multidegree_parity(&alpha, &parities);
                if d == 1 {
                    let a = alpha.iter().position(|&x| x == 1).unwrap();
                    basis.push(FreeBasisElement {
                        monomial: Monomial::letter(a, &alphabet),
                        multidegree: alpha.clone(),
                        parity,
                        degree: 1,
                        factors: None,
                        words: WordPoly::unit(vec![a as u8]),
                    });
                } else {
                    let mut echelon: Echelon<Vec<u8>> = Echelon::new();
                    for a in 0..k {
                        if alpha[a] == 0 {
                            continue;
                        }
                        let mut rest_alpha = alpha.clone();
                        rest_alpha[a] -= 1;
                        let rest = match blocks.get(&rest_alpha) {
                            Some(b) => b.start..b.start + b.len,
                            None => continue,
                        };
                        let letter_idx = blocks[&unit(k, a)].start;
                        for b in rest {
                            let poly = commutator(
                                &basis[letter_idx].words,
                                parities[a],
                                &basis[b].words,
                                basis[b].parity,
                            );
                            if echelon.insert(poly.clone()) {
                                let monomial = Monomial::bracket(
                                    basis[letter_idx].monomial.clone(),
                                    basis[b].monomial.clone(),
                                );
                                basis.push(FreeBasisElement {
                                    monomial,
                                    multidegree: alpha.clone(),
                                    parity,
                                    degree: d,
                                    factors: Some((letter_idx, b)),
                                    words: poly,
                                });
                            }
                        }
                    }
                }
                let len = basis.len() - start;
                let expected = super_witt(&alpha, &parities) as usize;
                if len != expected {
                    return Err(Error::Internal(format!(
                        "multidegree {alpha:?}: found {len} basis vectors, super-Witt count is {expected}"
                    )));
                }
                if len > 0 {
                    let cols: Vec<WordPoly> = basis[start..].iter().map(|e| e.words.clone()).collect();
                    blocks.insert(alpha, Block { start, len, solver: Solver::new(&cols) });
                }
            }
            degree_starts.push(basis.len());
        }
        let mut algebra = TruncatedFreeAlgebra { alphabet, max_degree, basis, blocks, degree_starts, ad: Vec::new() };
        let ad = (0..k)
            .map(|a| (0..algebra.basis.len()).map(|b| algebra.bracket_basis(a, b)).collect())
            .collect();
        algebra.ad = ad;
        Ok(algebra)
    }

    /// Shorthand for `build(GradedAlphabet::standard(m, n), max_degree)`.
    pub fn standard(m: usize, n: usize, max_degree: usize) -> Result<TruncatedFreeAlgebra> {
        Self::build(GradedAlphabet::standard(m, n), max_degree)
    }

    pub fn alphabet(&self) -> &GradedAlphabet {
        &self.alphabet
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn basis(&self) -> &[FreeBasisElement] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn parities(&self) -> Vec<Parity> {
        self.basis.iter().map(|b| b.parity).collect()
    }

    /// Basis index of a letter.
    pub fn letter(&self, a: usize) -> usize {
        // letters are the whole degree-one range, in alphabet order
        a
    }

    /// Basis indices of degree `d` (empty above the bound).
    pub fn degree_range(&self, d: usize) -> Range<usize> {
        if d == 0 || d > self.max_degree {
            return 0..0;
        }
        self.degree_starts[d - 1]..self.degree_starts[d]
    }

    /// Super-dimension of each degree component, degree 1 first.
    pub fn degree_dims(&self) -> Vec<SuperDim> {
        (1..=self.max_degree)
            .map(|d| SuperDim::from_parities(self.degree_range(d).map(|i| self.basis[i].parity)))
            .collect()
    }

    /// Basis count per multidegree (nonzero blocks only).
    pub fn multidegree_counts(&self) -> BTreeMap<Vec<usize>, usize> {
        self.blocks.iter().map(|(a, b)| (a.clone(), b.len)).collect()
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.basis[i].degree
    }

    /// Coordinates of a word polynomial lying in the multidegree-`alpha`
    /// component; `None` if it is not a Lie element.
    fn express(&self, alpha: &[usize], poly: &WordPoly) -> Option<Element> {
        if poly.is_zero() {
            return Some(Element::new());
        }
        let block = self.blocks.get(alpha)?;
        let local = block.solver.express(poly)?;
        Some(local.map_keys(|j| block.start + j))
    }

    fn bracket_basis(&self, i: usize, j: usize) -> Element {
        let (x, y) = (&self.basis[i], &self.basis[j]);
        if x.degree + y.degree > self.max_degree {
            return Element::new();
        }
        let alpha = add_multidegrees(&x.multidegree, &y.multidegree);
        let poly = commutator(&x.words, x.parity, &y.words, y.parity);
        self.express(&alpha, &poly).expect("commutator of Lie elements is a Lie element")
    }

    /// `[letter a, v]`, truncated.
    pub fn ad_letter(&self, a: usize, v: &Element) -> Element {
        let mut out = Element::new();
        for (b, c) in v.iter() {
            out.axpy(c, &self.ad[a][*b]);
        }
        out
    }

    /// Bracket of two elements, truncated above the degree bound.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                let b = if *i < self.alphabet.len() { self.ad[*i][*j].clone() } else { self.bracket_basis(*i, *j) };
                out.axpy(&(ci * cj), &b);
            }
        }
        out
    }

    /// Coordinates of a bracket tree over the basis.
    pub fn normal_form(&self, m: &Monomial) -> Result<Element> {
        if m.degree() > self.max_degree {
            return Err(Error::DegreeOverflow { degree: m.degree(), max: self.max_degree });
        }
        let poly = tree_poly(m);
        let alpha = m.multidegree(self.alphabet.len());
        self.express(&alpha, &poly)
            .ok_or_else(|| Error::Internal("bracket tree did not reduce to a Lie element".into()))
    }

    pub fn render_element(&self, v: &Element) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let terms: Vec<(String, Scalar)> =
            v.iter().map(|(i, c)| (self.basis[*i].monomial.render(&self.alphabet), c.clone())).collect();
        crate::scalar::format_combination(&terms)
    }

    /// The same algebra as a structure-constant table (even basis first).
    pub fn to_lie_superalgebra(&self) -> LieSuperalgebra {
        let mut order: Vec<usize> = (0..self.len()).filter(|&i| !self.basis[i].parity.is_odd()).collect();
        order.extend((0..self.len()).filter(|&i| self.basis[i].parity.is_odd()));
        let mut new_index = vec![0; self.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let basis = order
            .iter()
            .map(|&i| BasisVector {
                name: self.basis[i].monomial.render(&self.alphabet),
                parity: self.basis[i].parity,
            })
            .collect();
        let mut entries = BTreeMap::new();
        for i in 0..self.len() {
            for j in i..self.len() {
                let v = self.bracket_basis(i, j);
                if !v.is_zero() {
                    entries.insert((new_index[i], new_index[j]), v.map_keys(|k| new_index[*k]));
                }
            }
        }
        LieSuperalgebra::from_parts(Some(format!("F/F^{}", self.max_degree + 1)), basis, entries)
    }
}

fn unit(k: usize, a: usize) -> Vec<usize> {
    let mut v = vec![0; k];
    v[a] = 1;
    v
}

fn tree_poly(m: &Monomial) -> WordPoly {
    match m.children() {
        None => WordPoly::term(m.word().to_vec(), Scalar::one()),
        Some((a, b)) => commutator(&tree_poly(a), a.parity(), &tree_poly(b), b.parity()),
    }
}
