//! Cartan data: a generalized Cartan matrix with symmetrizers `d_i`.
//!
//! Presets follow the convention `d_i a_ij = (α_i, α_j)` with the short
//! roots normalized to `d = 1`, so that `a_ij = 2 (α_i, α_j) / (α_i, α_i)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" | "G2" => Ok(Family::G2),
            other => Err(Error::Config(format!("unknown Cartan family '{other}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
        };
        f.write_str(name)
    }
}

/// A Cartan matrix together with its symmetrizers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

/// First violated invariant of a [`CartanDatum`], with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    Diagonal { i: usize, value: i64 },
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    NotSymmetrizable { i: usize, j: usize, lhs: i64, rhs: i64 },
    SymmetrizerRange { i: usize, value: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(msg) => write!(f, "{msg}"),
            Violation::Diagonal { i, value } => {
                write!(f, "a_{0}{0} = {value}, expected 2", i + 1)
            }
            Violation::PositiveOffDiagonal { i, j, value } => {
                write!(f, "a_{}{} = {value} > 0", i + 1, j + 1)
            }
            Violation::NotSymmetrizable { i, j, lhs, rhs } => write!(
                f,
                "d_{0} a_{0}{1} = {lhs} != d_{1} a_{1}{0} = {rhs} at ({0},{1})",
                i + 1,
                j + 1
            ),
            Violation::SymmetrizerRange { i, value } => {
                write!(f, "d_{} = {value} not in {{1,2,3}}", i + 1)
            }
        }
    }
}

impl CartanDatum {
    /// Builds and validates a datum.
    pub fn new(a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self> {
        let datum = CartanDatum { a, d };
        match datum.validate() {
            Ok(()) => Ok(datum),
            Err(v) => Err(Error::InvalidCartan(v.to_string())),
        }
    }

    /// Builds a datum without validating it.
    pub fn new_unchecked(a: Vec<Vec<i64>>, d: Vec<i64>) -> Self {
        CartanDatum { a, d }
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn d(&self) -> &[i64] {
        &self.d
    }

    /// `d_i a_ij`, the exponent of `q` in `K_i E_j = q^{d_i a_ij} E_j K_i`.
    pub fn da(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    /// Reports the first violated invariant in row-major order.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let t = self.d.len();
        if t == 0 {
            return Err(Violation::Shape("rank must be at least 1".into()));
        }
        if self.a.len() != t || self.a.iter().any(|row| row.len() != t) {
            return Err(Violation::Shape(format!(
                "matrix must be {t}x{t} to match {t} symmetrizers"
            )));
        }
        for (i, &value) in self.d.iter().enumerate() {
            if !(1..=3).contains(&value) {
                return Err(Violation::SymmetrizerRange { i, value });
            }
        }
        for i in 0..t {
            if self.a[i][i] != 2 {
                return Err(Violation::Diagonal { i, value: self.a[i][i] });
            }
            for j in 0..t {
                if i != j && self.a[i][j] > 0 {
                    return Err(Violation::PositiveOffDiagonal { i, j, value: self.a[i][j] });
                }
                let (lhs, rhs) = (self.d[i] * self.a[i][j], self.d[j] * self.a[j][i]);
                if lhs != rhs {
                    return Err(Violation::NotSymmetrizable { i, j, lhs, rhs });
                }
            }
        }
        Ok(())
    }
}

fn chain(rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
        if i + 1 < rank {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

/// Standard Cartan datum for a finite-type family.
pub fn preset(family: Family, rank: usize) -> Result<CartanDatum> {
    let unsupported = || Error::UnsupportedRank {
        family: family.to_string(),
        rank,
    };
    let (a, d) = match family {
        Family::A => {
            if rank < 1 {
                return Err(unsupported());
            }
            (chain(rank), vec![1; rank])
        }
        Family::B => {
            if rank < 2 {
                return Err(unsupported());
            }
            // last simple root short
            let mut a = chain(rank);
            a[rank - 1][rank - 2] = -2;
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            (a, d)
        }
        Family::C => {
            if rank < 2 {
                return Err(unsupported());
            }
            // last simple root long
            let mut a = chain(rank);
            a[rank - 2][rank - 1] = -2;
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            (a, d)
        }
        Family::D => {
            if rank < 4 {
                return Err(unsupported());
            }
            let mut a = chain(rank);
            // fork: node rank-1 hangs off rank-3 instead of rank-2
            a[rank - 2][rank - 1] = 0;
            a[rank - 1][rank - 2] = 0;
            a[rank - 3][rank - 1] = -1;
            a[rank - 1][rank - 3] = -1;
            (a, vec![1; rank])
        }
        Family::G2 => {
            if rank != 2 {
                return Err(unsupported());
            }
            (vec![vec![2, -3], vec![-1, 2]], vec![1, 3])
        }
    };
    Ok(CartanDatum { a, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_presets() {
        let a1 = preset(Family::A, 1).unwrap();
        assert_eq!(a1.matrix(), &[vec![2]]);
        assert_eq!(a1.d(), &[1]);

        let a2 = preset(Family::A, 2).unwrap();
        assert_eq!(a2.matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.d(), &[1, 1]);

        let g2 = preset(Family::G2, 2).unwrap();
        assert_eq!(g2.d(), &[1, 3]);
        assert_eq!(g2.da(0, 1), -3);
        assert_eq!(g2.da(1, 0), -3);
        assert!(g2.validate().is_ok());

        let b2 = preset(Family::B, 2).unwrap();
        assert_eq!(b2.da(0, 1), b2.da(1, 0));
    }

    #[test]
    fn every_preset_validates() {
        for rank in 1..=8 {
            for family in [Family::A, Family::B, Family::C, Family::D, Family::G2] {
                if let Ok(datum) = preset(family, rank) {
                    assert_eq!(datum.validate(), Ok(()), "{family}{rank}");
                    assert_eq!(datum.rank(), rank);
                }
            }
        }
    }

    #[test]
    fn unsupported_ranks() {
        assert!(matches!(preset(Family::A, 0), Err(Error::UnsupportedRank { .. })));
        assert!(matches!(preset(Family::B, 1), Err(Error::UnsupportedRank { .. })));
        assert!(matches!(preset(Family::D, 3), Err(Error::UnsupportedRank { .. })));
        assert!(matches!(preset(Family::G2, 3), Err(Error::UnsupportedRank { .. })));
    }

    #[test]
    fn validation_reports() {
        let bad = CartanDatum::new_unchecked(vec![vec![2, -1], vec![-2, 2]], vec![1, 1]);
        assert_eq!(
            bad.validate(),
            Err(Violation::NotSymmetrizable { i: 0, j: 1, lhs: -1, rhs: -2 })
        );
        let bad_d = CartanDatum::new_unchecked(vec![vec![2]], vec![4]);
        assert_eq!(bad_d.validate(), Err(Violation::SymmetrizerRange { i: 0, value: 4 }));
        let bad_diag = CartanDatum::new_unchecked(vec![vec![3]], vec![1]);
        assert!(matches!(bad_diag.validate(), Err(Violation::Diagonal { .. })));
        let positive = CartanDatum::new_unchecked(vec![vec![2, 1], vec![1, 2]], vec![1, 1]);
        assert!(matches!(positive.validate(), Err(Violation::PositiveOffDiagonal { .. })));
        assert!(CartanDatum::new(vec![vec![2, -1], vec![-2, 2]], vec![1, 1]).is_err());
    }
}
