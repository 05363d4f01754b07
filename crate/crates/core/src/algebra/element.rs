use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use crate::algebra::Generator;
use crate::coeffs::Scalar;

/// Basis monomial `(lower word)(upper word)(T_1^γ_1 ... T_t^γ_t)`.
///
/// Ordering is lexicographic on `(lower, upper, torus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalWord {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub torus: Vec<i64>,
}

impl NormalWord {
    pub fn new(lower: Vec<usize>, upper: Vec<usize>, torus: Vec<i64>) -> Self {
        NormalWord { lower, upper, torus }
    }

    pub fn unit(rank: usize) -> Self {
        NormalWord::new(Vec::new(), Vec::new(), vec![0; rank])
    }

    pub fn torus_only(torus: Vec<i64>) -> Self {
        NormalWord::new(Vec::new(), Vec::new(), torus)
    }

    pub fn rank(&self) -> usize {
        self.torus.len()
    }

    pub fn is_unit(&self) -> bool {
        self.lower.is_empty() && self.upper.is_empty() && self.torus.iter().all(|&g| g == 0)
    }

    pub fn is_torus(&self) -> bool {
        self.lower.is_empty() && self.upper.is_empty()
    }

    /// Number of lower and upper letters.
    pub fn root_length(&self) -> usize {
        self.lower.len() + self.upper.len()
    }

    /// The word spelled out as generators in basis order; `T_i^γ` becomes
    /// `|γ|` copies of `T_i` or `T_i^{-1}`.
    pub fn letters(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> = self.lower.iter().map(|&i| Generator::Lower(i)).collect();
        out.extend(self.upper.iter().map(|&i| Generator::Upper(i)));
        for (i, &g) in self.torus.iter().enumerate() {
            for _ in 0..g.unsigned_abs() {
                out.push(Generator::torus(i, g.signum()));
            }
        }
        out
    }
}

/// Finite linear combination of [`NormalWord`]s with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<NormalWord, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one(rank: usize) -> Self {
        Element::from_word(NormalWord::unit(rank))
    }

    pub fn scalar(c: Scalar, rank: usize) -> Self {
        Element::from_term(NormalWord::unit(rank), c)
    }

    pub fn from_word(w: NormalWord) -> Self {
        Element::from_term(w, Scalar::one())
    }

    pub fn from_term(w: NormalWord, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, NormalWord, Scalar> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &NormalWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `Some(c)` when the element is `c · 1` (including `0`).
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: NormalWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, x) in other.terms() {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies `f` to every basis word and rescales by the returned factor.
    pub fn map_terms(&self, mut f: impl FnMut(&NormalWord) -> (NormalWord, Scalar)) -> Element {
        let mut out = Element::zero();
        for (w, c) in self.terms() {
            let (v, s) = f(w);
            out.add_term(v, c * &s);
        }
        out
    }
}

impl FromIterator<(NormalWord, Scalar)> for Element {
    fn from_iter<I: IntoIterator<Item = (NormalWord, Scalar)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (w, c) in iter {
            e.add_term(w, c);
        }
        e
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let w = NormalWord::new(vec![0], vec![], vec![0]);
        let mut e = Element::from_word(w.clone());
        e.add_term(w.clone(), -Scalar::one());
        assert!(e.is_zero());
        assert_eq!(e.as_scalar(), Some(Scalar::zero()));
        e.add_term(w, Scalar::zero());
        assert_eq!(e.len(), 0);
    }

    #[test]
    fn letters_spell_the_word() {
        let w = NormalWord::new(vec![1], vec![0, 0], vec![-2, 1]);
        assert_eq!(
            w.letters(),
            vec![
                Generator::Lower(1),
                Generator::Upper(0),
                Generator::Upper(0),
                Generator::TorusInv(0),
                Generator::TorusInv(0),
                Generator::Torus(1)
            ]
        );
    }
}
