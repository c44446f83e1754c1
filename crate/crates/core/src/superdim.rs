use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Z/2 degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_bit(bit: usize) -> Parity {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        self as usize
    }

    /// The sign `(-1)^{|a||b|}` appearing in graded skew-symmetry and Jacobi.
    pub fn koszul(self, other: Parity) -> i32 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// A superdimension `(even | odd)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub const ZERO: SuperDim = SuperDim { even: 0, odd: 0 };

    pub const fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn get(self, parity: Parity) -> usize {
        match parity {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }

    pub fn bump(&mut self, parity: Parity) {
        match parity {
            Parity::Even => self.even += 1,
            Parity::Odd => self.odd += 1,
        }
    }

    pub fn checked_sub(self, rhs: SuperDim) -> Result<SuperDim> {
        match (self.even.checked_sub(rhs.even), self.odd.checked_sub(rhs.odd)) {
            (Some(even), Some(odd)) => Ok(SuperDim { even, odd }),
            _ => Err(Error::DimUnderflow { lhs: self, rhs }),
        }
    }

    /// Superdimension of the graded tensor product.
    pub fn tensor(self, rhs: SuperDim) -> SuperDim {
        SuperDim {
            even: self.even * rhs.even + self.odd * rhs.odd,
            odd: self.even * rhs.odd + self.odd * rhs.even,
        }
    }

    pub fn is_zero(self) -> bool {
        self.total() == 0
    }

    pub fn from_parities<I: IntoIterator<Item = Parity>>(parities: I) -> SuperDim {
        let mut dim = SuperDim::ZERO;
        for p in parities {
            dim.bump(p);
        }
        dim
    }
}

impl Add for SuperDim {
    type Output = SuperDim;

    fn add(self, rhs: SuperDim) -> SuperDim {
        SuperDim::new(self.even + rhs.even, self.odd + rhs.odd)
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_addition() {
        assert_eq!(Parity::Even + Parity::Even, Parity::Even);
        assert_eq!(Parity::Even + Parity::Odd, Parity::Odd);
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
    }

    #[test]
    fn sub_underflow_is_an_error() {
        let a = SuperDim::new(2, 1);
        assert_eq!(a.checked_sub(SuperDim::new(1, 1)).unwrap(), SuperDim::new(1, 0));
        assert!(a.checked_sub(SuperDim::new(0, 2)).is_err());
    }

    #[test]
    fn graded_tensor() {
        assert_eq!(SuperDim::new(1, 1).tensor(SuperDim::new(0, 1)), SuperDim::new(1, 1));
        assert_eq!(SuperDim::new(4, 1).tensor(SuperDim::new(1, 0)), SuperDim::new(4, 1));
    }
}
