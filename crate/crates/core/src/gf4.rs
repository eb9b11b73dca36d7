//! The field with four elements.
//!
//! Elements are `0, 1, w, w2` with `w2 = w + 1`. An element is a pair of
//! bits `(one, w)` packed into a byte as `one | w << 1`; addition is XOR
//! and multiplication follows from `w^2 = w + 1`.

use std::fmt;
use std::ops::{Add, Mul};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA_SQ: Gf4 = Gf4(3);

    pub const ALL: [Gf4; 4] = [Gf4(0), Gf4(1), Gf4(2), Gf4(3)];

    /// Value in 0..4; values outside the range are rejected.
    pub fn new(value: u8) -> Option<Gf4> {
        (value < 4).then_some(Gf4(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inverse(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            1 => Some(Gf4(1)),
            2 => Some(Gf4(3)),
            3 => Some(Gf4(2)),
            _ => unreachable!(),
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;

    // addition in characteristic 2 is XOR of the bit pairs
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;

    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w2",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_by_exhaustion() {
        for a in Gf4::ALL {
            assert_eq!(a + Gf4::ZERO, a);
            assert_eq!(a * Gf4::ONE, a);
            assert_eq!(a + a, Gf4::ZERO);
            assert_eq!(a * Gf4::ZERO, Gf4::ZERO);
            for b in Gf4::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in Gf4::ALL {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(Gf4::ZERO.inverse(), None);
        for a in &Gf4::ALL[1..] {
            assert_eq!(*a * a.inverse().unwrap(), Gf4::ONE);
        }
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA, Gf4::OMEGA_SQ);
        assert_eq!(Gf4::OMEGA + Gf4::ONE, Gf4::OMEGA_SQ);
    }
}
