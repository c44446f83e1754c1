//! The abelian and Heisenberg families, Heisenberg recognition, central
//! decompositions and the structure of ideals of Heisenberg superalgebras.

use std::fmt;

use num_traits::Zero;

use serde::Serialize;

use crate::algebra::{BasisVector, Element, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subspace::{GradedIdeal, Subspace};
use crate::superdim::{Parity, SuperDim};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HeisenbergKind {
    /// `H(m, n)`, dimension `(2m+1 | n)`, even center.
    EvenCenter { m: usize, n: usize },
    /// `H_m`, dimension `(m | m+1)`, odd center.
    OddCenter { m: usize },
}

impl HeisenbergKind {
    pub fn dim(self) -> SuperDim {
        match self {
            HeisenbergKind::EvenCenter { m, n } => SuperDim::new(2 * m + 1, n),
            HeisenbergKind::OddCenter { m } => SuperDim::new(m, m + 1),
        }
    }

    pub fn build(self) -> Result<LieSuperalgebra> {
        match self {
            HeisenbergKind::EvenCenter { m, n } => heisenberg_even(m, n),
            HeisenbergKind::OddCenter { m } => heisenberg_odd(m),
        }
    }
}

impl fmt::Display for HeisenbergKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeisenbergKind::EvenCenter { m, n } => write!(f, "H({m},{n})"),
            HeisenbergKind::OddCenter { m } => write!(f, "H_{m}"),
        }
    }
}

fn basis(even: Vec<String>, odd: Vec<String>) -> Vec<BasisVector> {
    even.into_iter()
        .map(|name| BasisVector { name, parity: Parity::Even })
        .chain(odd.into_iter().map(|name| BasisVector { name, parity: Parity::Odd }))
        .collect()
}

fn names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// `A(m|n)` with basis `a1..am` (even), `b1..bn` (odd).
pub fn abelian(m: usize, n: usize) -> LieSuperalgebra {
    LieSuperalgebra::from_parts(Some(format!("A({m}|{n})")), basis(names("a", m), names("b", n)), BTreeMap::new())
}

/// `H(m, n)`: `[x_i, x_{m+i}] = z`, `[y_j, y_j] = z`.
pub fn heisenberg_even(m: usize, n: usize) -> Result<LieSuperalgebra> {
    if m + n == 0 {
        return Err(Error::InvalidParameters("H(m,n) needs m + n >= 1".into()));
    }
    let mut even = names("x", 2 * m);
    even.push("z".into());
    let z = 2 * m;
    let mut entries = BTreeMap::new();
    for i in 0..m {
        entries.insert((i, m + i), Element::unit(z));
    }
    for j in 0..n {
        let y = 2 * m + 1 + j;
        entries.insert((y, y), Element::unit(z));
    }
    Ok(LieSuperalgebra::from_parts(Some(format!("H({m},{n})")), basis(even, names("y", n)), entries))
}

/// `H_m`: `[x_j, y_j] = z` with `z` odd.
pub fn heisenberg_odd(m: usize) -> Result<LieSuperalgebra> {
    if m == 0 {
        return Err(Error::InvalidParameters("H_m needs m >= 1".into()));
    }
    let mut odd = names("y", m);
    odd.push("z".into());
    let z = 2 * m;
    let entries = (0..m).map(|j| ((j, m + j), Element::unit(z))).collect();
    Ok(LieSuperalgebra::from_parts(Some(format!("H_{m}")), basis(names("x", m), odd), entries))
}

/// Heisenberg type of `L`, if `Z(L) = L²` is one-dimensional.
pub fn recognize_heisenberg(l: &LieSuperalgebra) -> Option<HeisenbergKind> {
    let z = l.center();
    if z.total_dim() != 1 || *z != *l.derived_subalgebra() {
        return None;
    }
    let d = l.dim();
    if z.dim().even == 1 {
        (d.even % 2 == 1).then(|| HeisenbergKind::EvenCenter { m: (d.even - 1) / 2, n: d.odd })
    } else {
        (d.odd == d.even + 1 && d.even >= 1).then_some(HeisenbergKind::OddCenter { m: d.even })
    }
}

/// The bilinear form `[u, v] = B(u, v) z` of a Heisenberg superalgebra.
struct HeisenbergForm<'a> {
    algebra: &'a LieSuperalgebra,
    z: Element,
    pivot: usize,
}

impl HeisenbergForm<'_> {
    fn pair(&self, u: &Element, v: &Element) -> Scalar {
        self.algebra.bracket_unchecked(u, v).coeff(&self.pivot)
    }
}

/// Splits a Heisenberg superalgebra into a central product of ideals:
/// `m` copies of `H(1,0)` plus `<z; y_1..y_n>` for `H(m,n)`, or `m` copies
/// of `H_1` for `H_m`. Pairs are found by symplectic (resp. dual-basis)
/// reduction, so any basis works; on the standard basis the result is
/// `<x_i, x_{m+i}, z>` (resp. `<x_i; y_i, z>`).
pub fn central_decomposition(l: &LieSuperalgebra) -> Result<Vec<GradedIdeal>> {
    let kind = recognize_heisenberg(l).ok_or(Error::NotHeisenberg)?;
    let center = l.center();
    let z = center.basis()[0].clone();
    let pivot = *z.leading().unwrap().0;
    let form = HeisenbergForm { algebra: l, z: z.clone(), pivot };
    let of_parity = |p: Parity| -> Vec<Element> {
        (0..l.len()).filter(|&i| i != pivot && l.parity(i) == p).map(Element::unit).collect()
    };
    let mut ideals = Vec::new();
    let mut make = |vs: Vec<Element>| -> Result<()> {
        let mut all = vs;
        all.push(form.z.clone());
        ideals.push(l.ideal(l.graded_span(&all))?);
        Ok(())
    };
    match kind {
        HeisenbergKind::EvenCenter { n, .. } => {
            let mut rest = of_parity(Parity::Even);
            while !rest.is_empty() {
                let e = rest.remove(0);
                let k = rest
                    .iter()
                    .position(|f| !form.pair(&e, f).is_zero())
                    .ok_or(Error::NotHeisenberg)?;
                let f = rest.remove(k);
                let f = f.scaled(&form.pair(&e, &f).recip());
                for w in rest.iter_mut() {
                    let (a, b) = (form.pair(w, &f), form.pair(w, &e));
                    w.axpy(&-a, &e);
                    w.axpy(&b, &f);
                }
                make(vec![e, f])?;
            }
            if n > 0 {
                make(of_parity(Parity::Odd))?;
            }
        }
        HeisenbergKind::OddCenter { .. } => {
            let mut xs = of_parity(Parity::Even);
            let mut ys = of_parity(Parity::Odd);
            while !xs.is_empty() {
                let x = xs.remove(0);
                let k = ys.iter().position(|y| !form.pair(&x, y).is_zero()).ok_or(Error::NotHeisenberg)?;
                let y = ys.remove(k);
                let y = y.scaled(&form.pair(&x, &y).recip());
                for other in xs.iter_mut() {
                    let c = form.pair(other, &y);
                    other.axpy(&-c, &x);
                }
                for other in ys.iter_mut() {
                    let c = form.pair(&x, other);
                    other.axpy(&-c, &y);
                }
                make(vec![x, y])?;
            }
        }
    }
    Ok(ideals)
}

/// Isomorphism type of an ideal of a Heisenberg superalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum IdealStructure {
    Abelian { dim: SuperDim },
    Heisenberg { kind: HeisenbergKind },
    HeisenbergPlusAbelian { kind: HeisenbergKind, abelian: SuperDim },
}

fn kind_for(h: SuperDim, center_parity: Parity) -> Result<HeisenbergKind> {
    match center_parity {
        Parity::Even if h.even % 2 == 1 => Ok(HeisenbergKind::EvenCenter { m: (h.even - 1) / 2, n: h.odd }),
        Parity::Odd if h.odd == h.even + 1 => Ok(HeisenbergKind::OddCenter { m: h.even }),
        _ => Err(Error::Internal(format!("no Heisenberg signature of dimension {h}"))),
    }
}

/// Decides the structure of `I` from `dim I`, `dim I²` and `dim Z(I)`.
pub fn classify_ideal(l: &LieSuperalgebra, ideal: &Subspace) -> Result<IdealStructure> {
    recognize_heisenberg(l).ok_or(Error::NotHeisenberg)?;
    let ideal = l.ideal(ideal.clone())?;
    let square = l.bracket_spaces(&ideal, &ideal);
    if square.is_zero() {
        return Ok(IdealStructure::Abelian { dim: ideal.dim() });
    }
    let center_parity = if square.dim().even == 1 { Parity::Even } else { Parity::Odd };
    let center = l.centralizer(&ideal, &ideal);
    if center == square {
        return Ok(IdealStructure::Heisenberg { kind: kind_for(ideal.dim(), center_parity)? });
    }
    let abelian = center.dim().checked_sub(square.dim())?;
    let kind = kind_for(ideal.dim().checked_sub(abelian)?, center_parity)?;
    Ok(IdealStructure::HeisenbergPlusAbelian { kind, abelian })
}

/// Every nonzero ideal spanned by a subset of the basis, ordered by the
/// subset's bitmask.
pub fn coordinate_ideals(l: &LieSuperalgebra) -> Vec<(Vec<usize>, GradedIdeal)> {
    assert!(l.len() < 20, "too many basis vectors to enumerate subsets");
    let parities = l.parities();
    let mut out = Vec::new();
    for mask in 1u32..(1 << l.len()) {
        let idx: Vec<usize> = (0..l.len()).filter(|i| mask & (1 << i) != 0).collect();
        let vectors: Vec<Element> = idx.iter().map(|&i| Element::unit(i)).collect();
        if let Ok(ideal) = l.ideal(Subspace::span(&parities, &vectors)) {
            out.push((idx, ideal));
        }
    }
    out
}
