//! Subspaces in canonical reduced echelon form, and graded ideals.

use std::ops::Deref;

use crate::algebra::{homogeneous_parity, split_homogeneous, Element};
use crate::linalg::{intersection, Echelon, SparseVec};
use crate::superdim::{Parity, SuperDim};

/// A subspace of a space with a homogeneous basis.
///
/// The spanning list is the reduced echelon basis, so equal subspaces have
/// identical representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    parities: Vec<Parity>,
    basis: Vec<Element>,
}

impl Subspace {
    pub fn span(parities: &[Parity], vectors: &[Element]) -> Subspace {
        Self::from_echelon(parities, &Echelon::from_vectors(vectors.iter()))
    }

    /// Span of the homogeneous components of `vectors`.
    pub fn graded_span(parities: &[Parity], vectors: &[Element]) -> Subspace {
        let parts: Vec<Element> = vectors.iter().flat_map(|v| split_homogeneous(parities, v)).collect();
        Self::span(parities, &parts)
    }

    pub fn from_echelon(parities: &[Parity], e: &Echelon<usize>) -> Subspace {
        Subspace { parities: parities.to_vec(), basis: e.reduced_basis() }
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn ambient_dim(&self) -> usize {
        self.parities.len()
    }

    /// Superdimension, read off the pivot parities (exact for graded spans).
    pub fn dim(&self) -> SuperDim {
        SuperDim::from_parities(self.basis.iter().map(|v| self.parities[*v.leading().unwrap().0]))
    }

    pub fn total_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_graded(&self) -> bool {
        self.basis.iter().all(|v| homogeneous_parity(&self.parities, v).is_some())
    }

    /// Basis vectors of one parity (meaningful for graded spans).
    pub fn part(&self, parity: Parity) -> Vec<Element> {
        self.basis
            .iter()
            .filter(|v| self.parities[*v.leading().unwrap().0] == parity)
            .cloned()
            .collect()
    }

    pub fn echelon(&self) -> Echelon<usize> {
        Echelon::from_vectors(self.basis.iter())
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.echelon().contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        let e = other.echelon();
        self.basis.iter().all(|v| e.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v.clone());
        }
        Subspace::from_echelon(&self.parities, &e)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        Subspace { parities: self.parities.clone(), basis: intersection(&self.basis, &other.basis) }
    }

    /// `sum_j c_j * basis[j]`.
    pub fn combine(&self, coeffs: &SparseVec<usize>) -> Element {
        let mut out = Element::new();
        for (j, c) in coeffs.iter() {
            out.axpy(c, &self.basis[*j]);
        }
        out
    }
}

/// A subspace verified to be a graded ideal of its host algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal(Subspace);

impl GradedIdeal {
    /// Wraps a subspace already known to be a graded ideal.
    pub(crate) fn trusted(s: Subspace) -> GradedIdeal {
        GradedIdeal(s)
    }

    pub fn into_subspace(self) -> Subspace {
        self.0
    }

    pub fn as_subspace(&self) -> &Subspace {
        &self.0
    }
}

impl Deref for GradedIdeal {
    type Target = Subspace;

    fn deref(&self) -> &Subspace {
        &self.0
    }
}

impl AsRef<Subspace> for GradedIdeal {
    fn as_ref(&self) -> &Subspace {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn parities(n_even: usize, n_odd: usize) -> Vec<Parity> {
        let mut p = vec![Parity::Even; n_even];
        p.extend(vec![Parity::Odd; n_odd]);
        p
    }

    #[test]
    fn graded_span_splits_components() {
        let p = parities(1, 1);
        let mixed: Element = [(0, int(1)), (1, int(1))].into_iter().collect();
        let s = Subspace::span(&p, std::slice::from_ref(&mixed));
        assert!(!s.is_graded());
        let g = Subspace::graded_span(&p, &[mixed]);
        assert!(g.is_graded());
        assert_eq!(g.dim(), SuperDim::new(1, 1));
    }

    proptest! {
        // Random invertible recombination of a spanning set leaves the
        // canonical representation unchanged.
        #[test]
        fn echelon_form_is_canonical(
            rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..5),
            mix in prop::collection::vec(prop::collection::vec(-2i64..3, 5), 5),
        ) {
            let p = parities(3, 2);
            let vecs: Vec<Element> = rows
                .iter()
                .map(|r| r.iter().enumerate().map(|(k, &c)| (k, int(c))).collect())
                .collect();
            let a = Subspace::span(&p, &vecs);
            // unitriangular combination: v_i + sum_{j>i} m_ij v_j
            let mut mixed = Vec::new();
            for i in 0..vecs.len() {
                let mut v = vecs[i].clone();
                for j in (i + 1)..vecs.len() {
                    v.axpy(&int(mix[i][j % 5]), &vecs[j]);
                }
                mixed.push(v);
            }
            mixed.reverse();
            let b = Subspace::span(&p, &mixed);
            prop_assert_eq!(a, b);
        }
    }
}
