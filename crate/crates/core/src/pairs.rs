//! Free presentations `0 → R → F → L` and the invariants of a pair `(L, I)`
//! read off from them:
//!
//! * `M(L, I) = (R ∩ [F,S]) / [F,R]`
//! * `L ∧ I = [F,S] / [F,R]`
//! * `Z^∧_L(I)`: elements of `I` whose lifts `s` satisfy `[F, s] ⊆ [F,R]`
//!
//! where `S/R ≅ I`. If `L` has class `c` then `F^{c+1} ⊆ R`, so `[F,R]`
//! contains `F^{c+2}` and every quotient above is computed exactly in
//! `F/F^{c+2}`, the free algebra with degrees up to `c + 1`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{homogeneous_parity, Element, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::freesuper::{GradedAlphabet, TruncatedFreeAlgebra};
use crate::linalg::{kernel, Echelon, Solver, SparseVec};
use crate::scalar::int;
use crate::subspace::{GradedIdeal, Subspace};
use crate::superdim::{Parity, SuperDim};

#[derive(Debug, Clone)]
pub struct FreePresentation {
    target: LieSuperalgebra,
    free: TruncatedFreeAlgebra,
    class: usize,
    lifts: Vec<Element>,
    /// `pi` of every basis vector of `F`.
    images: Vec<Element>,
    relators: Subspace,
    f_r: Subspace,
    lifter: Solver<usize>,
}

/// Basis indices of `L` completing a basis of `L²` (non-pivot columns).
pub fn generator_indices(l: &LieSuperalgebra) -> Vec<usize> {
    let e = l.derived_subalgebra().echelon();
    (0..l.len()).filter(|i| !e.has_pivot(i)).collect()
}

impl FreePresentation {
    /// Presentation on the basis vectors of `L` outside the pivots of `L²`.
    pub fn present(l: &LieSuperalgebra) -> Result<FreePresentation> {
        let lifts = generator_indices(l).into_iter().map(Element::unit).collect();
        Self::present_with_lifts(l, lifts)
    }

    /// Presentation sending letter `j` to `lifts[j]`. The lifts must be
    /// homogeneous, even ones first, and form a basis of `L` modulo `L²`.
    pub fn present_with_lifts(l: &LieSuperalgebra, lifts: Vec<Element>) -> Result<FreePresentation> {
        let class = l.nilpotency_class()?;
        let parities = l.parities();
        let mut letter_parities = Vec::with_capacity(lifts.len());
        for v in &lifts {
            if let Some(&k) = v.keys().find(|&&k| k >= l.len()) {
                return Err(Error::IndexOutOfRange { index: k, dim: l.len() });
            }
            letter_parities.push(homogeneous_parity(&parities, v).ok_or(Error::NotGraded)?);
        }
        if letter_parities.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameters("even lifts must precede odd lifts".into()));
        }
        let mut modulo = l.derived_subalgebra().echelon();
        for v in &lifts {
            if !modulo.insert(v.clone()) {
                return Err(Error::InvalidParameters("lifts are dependent modulo L²".into()));
            }
        }
        if modulo.rank() != l.len() {
            return Err(Error::InvalidParameters("lifts do not generate L".into()));
        }

        let even = letter_parities.iter().filter(|p| !p.is_odd()).count();
        let names: Vec<String> = (1..=lifts.len()).map(|j| format!("g{j}")).collect();
        let alphabet = GradedAlphabet::from_names(names[..even].to_vec(), names[even..].to_vec())?;
        let free = TruncatedFreeAlgebra::build(alphabet, (class + 1).max(1))?;

        let mut images: Vec<Element> = Vec::with_capacity(free.len());
        for b in free.basis() {
            let img = match b.factors {
                None => lifts[images.len()].clone(),
                Some((a, rest)) => l.bracket(&images[a], &images[rest])?,
            };
            images.push(img);
        }
        let lifter = Solver::new(&images);
        if Echelon::from_vectors(images.iter()).rank() != l.len() {
            return Err(Error::Internal("presentation map is not onto".into()));
        }
        let f_parities = free.parities();
        let relators = Subspace::span(&f_parities, &kernel(&images));
        let mut p = FreePresentation {
            target: l.clone(),
            free,
            class,
            lifts,
            images,
            relators,
            f_r: Subspace::span(&f_parities, &[]),
            lifter,
        };
        p.f_r = p.bracket_with_free(&p.relators);
        p.check()?;
        Ok(p)
    }

    /// Presentation with lifts scrambled by a seeded random change of
    /// generators within each parity plus random elements of `L²`.
    pub fn present_randomized(l: &LieSuperalgebra, seed: u64) -> Result<FreePresentation> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = generator_indices(l);
        let parities = l.parities();
        let derived = l.derived_subalgebra();
        let mut lifts = Vec::with_capacity(gens.len());
        for (j, &g) in gens.iter().enumerate() {
            let p = parities[g];
            let mut v = Element::unit(g);
            // unit triangular mixing keeps the lifts independent mod L²
            for &h in &gens[j + 1..] {
                if parities[h] == p {
                    v.add_term(h, int(rng.gen_range(-2..=2)));
                }
            }
            for d in derived.part(p) {
                v.axpy(&int(rng.gen_range(-3..=3)), &d);
            }
            lifts.push(v);
        }
        Self::present_with_lifts(l, lifts)
    }

    fn check(&self) -> Result<()> {
        let quotient = SuperDim::from_parities(self.free.parities()).checked_sub(self.relators.dim())?;
        if quotient != self.target.dim() {
            return Err(Error::Internal(format!("dim F/R = {quotient}, expected {}", self.target.dim())));
        }
        let top = self.class + 1;
        if top <= self.free.max_degree() && self.free.degree_range(top).any(|i| !self.images[i].is_zero()) {
            return Err(Error::Internal("F^(c+1) is not inside R".into()));
        }
        Ok(())
    }

    pub fn target(&self) -> &LieSuperalgebra {
        &self.target
    }

    pub fn free(&self) -> &TruncatedFreeAlgebra {
        &self.free
    }

    pub fn class(&self) -> usize {
        self.class
    }

    /// Quotients are taken in `F/F^{truncation}`.
    pub fn truncation(&self) -> usize {
        self.class + 2
    }

    pub fn lifts(&self) -> &[Element] {
        &self.lifts
    }

    /// `R = ker pi`.
    pub fn relators(&self) -> &Subspace {
        &self.relators
    }

    /// `[F, R]`.
    pub fn relator_commutator(&self) -> &Subspace {
        &self.f_r
    }

    pub fn pi(&self, f: &Element) -> Element {
        let mut out = Element::new();
        for (i, c) in f.iter() {
            out.axpy(c, &self.images[*i]);
        }
        out
    }

    /// Some preimage of `x` under `pi`.
    pub fn lift(&self, x: &Element) -> Result<Element> {
        let coords = self.lifter.express(x).ok_or_else(|| Error::Internal("element not in the image".into()))?;
        Ok(coords)
    }

    /// `[F, X]` for an ideal `X` of `F`: spanned by `[letter, x]`.
    pub fn bracket_with_free(&self, x: &Subspace) -> Subspace {
        let mut e = Echelon::new();
        for v in x.basis() {
            for a in 0..self.free.alphabet().len() {
                e.insert(self.free.ad_letter(a, v));
            }
        }
        Subspace::from_echelon(&self.free.parities(), &e)
    }

    pub fn extend_to_pair(&self, ideal: &Subspace) -> Result<PairPresentation<'_>> {
        if ideal.ambient_dim() != self.target.len() {
            return Err(Error::IndexOutOfRange { index: ideal.ambient_dim(), dim: self.target.len() });
        }
        let ideal = self.target.ideal(ideal.clone())?;
        let reducer = ideal.echelon();
        let modulo: Vec<Element> = self.images.iter().map(|v| reducer.reduce_fully(v.clone())).collect();
        let preimage = Subspace::span(&self.free.parities(), &kernel(&modulo));
        let f_s = self.bracket_with_free(&preimage);
        Ok(PairPresentation { base: self, ideal, preimage, f_s })
    }
}

/// A presentation together with `S = pi⁻¹(I)`.
#[derive(Debug, Clone)]
pub struct PairPresentation<'a> {
    base: &'a FreePresentation,
    ideal: GradedIdeal,
    preimage: Subspace,
    f_s: Subspace,
}

impl PairPresentation<'_> {
    pub fn base(&self) -> &FreePresentation {
        self.base
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    /// `S`.
    pub fn preimage(&self) -> &Subspace {
        &self.preimage
    }

    /// `[F, S]`.
    pub fn preimage_commutator(&self) -> &Subspace {
        &self.f_s
    }

    fn multiplier_space(&self) -> Subspace {
        self.base.relators.intersection(&self.f_s)
    }

    pub fn multiplier(&self) -> SuperDim {
        self.multiplier_space()
            .dim()
            .checked_sub(self.base.f_r.dim())
            .expect("[F,R] lies inside R ∩ [F,S]")
    }

    /// Elements of `R ∩ [F,S]` (in `F` coordinates) whose classes form a
    /// basis of the multiplier.
    pub fn multiplier_representatives(&self) -> Vec<Element> {
        let mut e = self.base.f_r.echelon();
        self.multiplier_space().basis().iter().filter(|v| e.insert((*v).clone())).cloned().collect()
    }

    /// Whether `f` (in `F` coordinates) lies in `[F, R]`.
    pub fn in_relator_commutator(&self, f: &Element) -> bool {
        self.base.f_r.contains(f)
    }

    pub fn exterior_product(&self) -> SuperDim {
        self.f_s.dim().checked_sub(self.base.f_r.dim()).expect("[F,R] ⊆ [F,S]")
    }

    /// `Z^∧_L(I)` as a subspace of `L`.
    pub fn exterior_center(&self) -> Result<GradedIdeal> {
        let base = self.base;
        let reducer = base.f_r.echelon();
        let letters = base.free.alphabet().len();
        let basis = self.ideal.basis();
        let mut images: Vec<SparseVec<(usize, usize)>> = Vec::with_capacity(basis.len());
        for i in basis {
            let s = base.lift(i)?;
            let mut img = SparseVec::new();
            for a in 0..letters {
                let rem = reducer.reduce_fully(base.free.ad_letter(a, &s));
                for (k, c) in rem.iter() {
                    img.add_term((a, *k), c.clone());
                }
            }
            images.push(img);
        }
        let vectors: Vec<Element> = kernel(&images).iter().map(|c| self.ideal.combine(c)).collect();
        base.target.ideal(base.target.graded_span(&vectors))
    }

    pub fn is_capable(&self) -> Result<bool> {
        Ok(self.exterior_center()?.is_zero())
    }
}

/// All pair invariants computed from one presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub multiplier: SuperDim,
    pub exterior_product: SuperDim,
    pub exterior_center_dim: SuperDim,
    pub capable: bool,
}

pub fn analyze_pair(l: &LieSuperalgebra, ideal: &Subspace) -> Result<PairReport> {
    let p = FreePresentation::present(l)?;
    let pair = p.extend_to_pair(ideal)?;
    let center = pair.exterior_center()?;
    Ok(PairReport {
        multiplier: pair.multiplier(),
        exterior_product: pair.exterior_product(),
        exterior_center_dim: center.dim(),
        capable: center.is_zero(),
    })
}

pub fn multiplier_pair(l: &LieSuperalgebra, ideal: &Subspace) -> Result<SuperDim> {
    Ok(FreePresentation::present(l)?.extend_to_pair(ideal)?.multiplier())
}

pub fn multiplier(l: &LieSuperalgebra) -> Result<SuperDim> {
    multiplier_pair(l, &l.whole())
}

pub fn exterior_product_pair(l: &LieSuperalgebra, ideal: &Subspace) -> Result<SuperDim> {
    Ok(FreePresentation::present(l)?.extend_to_pair(ideal)?.exterior_product())
}

pub fn exterior_center(l: &LieSuperalgebra, ideal: &Subspace) -> Result<GradedIdeal> {
    FreePresentation::present(l)?.extend_to_pair(ideal)?.exterior_center()
}

pub fn is_capable_pair(l: &LieSuperalgebra, ideal: &Subspace) -> Result<bool> {
    Ok(exterior_center(l, ideal)?.is_zero())
}

/// Tensor description of `M(L, I)` for central `I`: `(L/L² ⊗ I)` modulo the
/// graded symmetrizations `x̄⊗y + (-1)^{|x||y|} ȳ⊗x` of pairs in `I`
/// (for even `x = y` this is `2 x̄⊗x`; for odd `x = y` it vanishes).
pub fn multiplier_central_ideal(l: &LieSuperalgebra, ideal: &Subspace) -> Result<SuperDim> {
    let ideal = l.ideal(ideal.clone())?;
    if !l.bracket_spaces(&l.whole(), &ideal).is_zero() {
        return Err(Error::NotCentral);
    }
    let parities = l.parities();
    let derived = l.derived_subalgebra().echelon();
    let quotient_dim = SuperDim::from_parities(generator_indices(l).into_iter().map(|g| parities[g]));
    let basis = ideal.basis();
    let basis_parity: Vec<Parity> =
        basis.iter().map(|v| homogeneous_parity(&parities, v).expect("graded ideal basis")).collect();
    let bar: Vec<Element> = basis.iter().map(|v| derived.reduce_fully(v.clone())).collect();
    let tensor = |x: &Element, t: usize| -> SparseVec<(usize, usize)> {
        x.iter().map(|(q, c)| ((*q, t), c.clone())).collect()
    };
    let mut relations = Echelon::new();
    let mut killed = SuperDim::ZERO;
    for s in 0..basis.len() {
        for t in s..basis.len() {
            let sign = int(basis_parity[s].koszul(basis_parity[t]) as i64);
            let mut r = tensor(&bar[s], t);
            r.axpy(&sign, &tensor(&bar[t], s));
            if relations.insert(r) {
                killed.bump(basis_parity[s] + basis_parity[t]);
            }
        }
    }
    quotient_dim.tensor(ideal.dim()).checked_sub(killed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{abelian, heisenberg_even, heisenberg_odd};
    use crate::freesuper::Monomial;

    #[test]
    fn heisenberg_examples() {
        let h10 = heisenberg_even(1, 0).unwrap();
        let d = h10.derived_subalgebra();
        assert_eq!(multiplier_pair(&h10, &d).unwrap(), SuperDim::new(2, 0));
        // one odd letter: [y,[y,y]] = 0 already in F, so F ≅ H(0,1) and R = 0
        let h01 = heisenberg_even(0, 1).unwrap();
        assert_eq!(multiplier_pair(&h01, &h01.derived_subalgebra()).unwrap(), SuperDim::ZERO);
        let h1 = heisenberg_odd(1).unwrap();
        assert_eq!(multiplier_pair(&h1, &h1.derived_subalgebra()).unwrap().total(), 1);
    }

    #[test]
    fn odd_heisenberg_representative() {
        let h1 = heisenberg_odd(1).unwrap();
        let p = FreePresentation::present(&h1).unwrap();
        let pair = p.extend_to_pair(&h1.derived_subalgebra()).unwrap();
        let free = p.free();
        let rep = free.normal_form(&Monomial::parse("[g1,[g1,g2]]", free.alphabet()).unwrap()).unwrap();
        assert!(p.relators().contains(&rep));
        assert!(pair.preimage_commutator().contains(&rep));
        assert!(!pair.in_relator_commutator(&rep));
    }

    #[test]
    fn abelian_multiplier() {
        assert_eq!(multiplier(&abelian(1, 1)).unwrap(), SuperDim::new(1, 1));
        assert_eq!(multiplier(&abelian(1, 0)).unwrap(), SuperDim::ZERO);
        assert_eq!(multiplier(&abelian(0, 1)).unwrap(), SuperDim::new(1, 0));
    }

    #[test]
    fn zero_ideal_and_zero_algebra() {
        let h = heisenberg_even(1, 0).unwrap();
        let r = analyze_pair(&h, &h.zero_ideal()).unwrap();
        assert_eq!(r.multiplier, SuperDim::ZERO);
        assert!(r.capable);
        let zero = abelian(0, 0);
        assert_eq!(multiplier(&zero).unwrap(), SuperDim::ZERO);
    }

    #[test]
    fn exterior_center_of_one_dim_even() {
        let a = abelian(1, 0);
        assert_eq!(exterior_center(&a, &a.whole()).unwrap().dim(), SuperDim::new(1, 0));
        assert!(!is_capable_pair(&a, &a.whole()).unwrap());
    }

    #[test]
    fn randomized_lifts_agree() {
        let h = heisenberg_even(1, 1).unwrap();
        let base = multiplier(&h).unwrap();
        for seed in 0..3 {
            let p = FreePresentation::present_randomized(&h, seed).unwrap();
            assert_eq!(p.extend_to_pair(&h.whole()).unwrap().multiplier(), base);
        }
    }

    #[test]
    fn central_ideal_tensor() {
        let h = heisenberg_even(1, 0).unwrap();
        assert_eq!(multiplier_central_ideal(&h, &h.derived_subalgebra()).unwrap(), SuperDim::new(2, 0));
        let a = abelian(1, 0);
        assert_eq!(multiplier_central_ideal(&a, &a.whole()).unwrap(), SuperDim::ZERO);
        assert!(matches!(multiplier_central_ideal(&h, &h.whole()), Err(Error::NotCentral)));
    }

    #[test]
    fn lifts_are_validated() {
        let h = heisenberg_even(1, 0).unwrap();
        let z = h.index_of("z").unwrap();
        assert!(FreePresentation::present_with_lifts(&h, vec![Element::unit(0), Element::unit(z)]).is_err());
        let one = Element::term(0, crate::scalar::one());
        assert!(FreePresentation::present_with_lifts(&h, vec![one]).is_err());
    }
}
