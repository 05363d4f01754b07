//! Coalgebra structure on `U` / `gr U`, and the coaction of `U` on `A_λ`.
//!
//! `Δ` and `δ` are computed on a basis word by multiplying the images of
//! its letters in the tensor algebra, so coassociativity and
//! multiplicativity are genuine properties of the computation rather than
//! of a lookup table.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraSpec, Element, Generator, Kind, NormalWord};
use crate::coeffs::Scalar;
use crate::error::{Error, Result};
use crate::linalg;

/// Finite sum of scalar multiples of `w_1 ⊗ ... ⊗ w_n`, one algebra per leg.
#[derive(Clone, Debug)]
pub struct TensorElement {
    specs: Vec<AlgebraSpec>,
    terms: BTreeMap<Vec<NormalWord>, Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.specs.len() == other.specs.len()
            && self.specs.iter().zip(&other.specs).all(|(a, b)| a.kind() == b.kind())
            && self.terms == other.terms
    }
}

impl TensorElement {
    pub fn zero(specs: Vec<AlgebraSpec>) -> Self {
        TensorElement {
            specs,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn one(specs: Vec<AlgebraSpec>) -> Self {
        let words = specs.iter().map(|s| NormalWord::unit(s.rank())).collect();
        let mut t = TensorElement::zero(specs);
        t.add_term(words, Scalar::one());
        t
    }

    /// `a_1 ⊗ ... ⊗ a_n`.
    pub fn pure(parts: &[(&Element, &AlgebraSpec)]) -> Self {
        let specs = parts.iter().map(|(_, s)| (*s).clone()).collect();
        let mut out = TensorElement::zero(specs);
        let mut acc: Vec<(Vec<NormalWord>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for (e, _) in parts {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, x) in e.terms() {
                    let mut ws = ws.clone();
                    ws.push(w.clone());
                    next.push((ws, c * x));
                }
            }
            acc = next;
        }
        for (ws, c) in acc {
            out.add_term(ws, c);
        }
        out
    }

    pub fn specs(&self) -> &[AlgebraSpec] {
        &self.specs
    }

    pub fn legs(&self) -> usize {
        self.specs.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<NormalWord>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, words: &[NormalWord]) -> Scalar {
        self.terms.get(words).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, words: Vec<NormalWord>, c: Scalar) {
        debug_assert_eq!(words.len(), self.specs.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(words) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Scalar) {
        for (ws, x) in &other.terms {
            self.add_term(ws.clone(), x * c);
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn multiply(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.specs.clone());
        for (ws1, c1) in &self.terms {
            for (ws2, c2) in &other.terms {
                let mut acc: Vec<(Vec<NormalWord>, Scalar)> = vec![(Vec::new(), c1 * c2)];
                for (k, spec) in self.specs.iter().enumerate() {
                    let prod = spec.multiply(&Element::from_word(ws1[k].clone()), &Element::from_word(ws2[k].clone()));
                    let mut next = Vec::with_capacity(acc.len() * prod.len());
                    for (prefix, c) in &acc {
                        for (w, x) in prod.terms() {
                            let mut p = prefix.clone();
                            p.push(w.clone());
                            next.push((p, c * x));
                        }
                    }
                    acc = next;
                }
                for (ws, c) in acc {
                    out.add_term(ws, c);
                }
            }
        }
        out
    }

    /// Replaces leg `k` by the legs of `f(word)`.
    pub fn map_leg(
        &self,
        k: usize,
        new_specs: &[AlgebraSpec],
        mut f: impl FnMut(&NormalWord) -> Result<TensorElement>,
    ) -> Result<TensorElement> {
        let mut specs = self.specs[..k].to_vec();
        specs.extend_from_slice(new_specs);
        specs.extend_from_slice(&self.specs[k + 1..]);
        let mut out = TensorElement::zero(specs);
        for (ws, c) in &self.terms {
            let image = f(&ws[k])?;
            for (mid, x) in &image.terms {
                let mut words = ws[..k].to_vec();
                words.extend(mid.iter().cloned());
                words.extend(ws[k + 1..].iter().cloned());
                out.add_term(words, c * x);
            }
        }
        Ok(out)
    }

    /// Replaces leg `k` by the element `f(word)` in the same or another algebra.
    pub fn map_leg_element(
        &self,
        k: usize,
        new_spec: &AlgebraSpec,
        mut f: impl FnMut(&NormalWord) -> Result<Element>,
    ) -> Result<TensorElement> {
        let spec = new_spec.clone();
        self.map_leg(k, std::slice::from_ref(new_spec), |w| {
            let e = f(w)?;
            Ok(TensorElement::pure(&[(&e, &spec)]))
        })
    }

    /// Multiplies legs `k` and `k + 1` together (they must share an algebra).
    pub fn multiply_legs(&self, k: usize) -> TensorElement {
        let spec = self.specs[k].clone();
        let mut specs = self.specs.clone();
        specs.remove(k + 1);
        let mut out = TensorElement::zero(specs);
        for (ws, c) in &self.terms {
            let prod = spec.multiply(&Element::from_word(ws[k].clone()), &Element::from_word(ws[k + 1].clone()));
            for (w, x) in prod.terms() {
                let mut words = ws.clone();
                words.remove(k + 1);
                words[k] = w.clone();
                out.add_term(words, c * x);
            }
        }
        out
    }

    /// The element of a one-leg tensor.
    pub fn into_element(self) -> Element {
        assert_eq!(self.legs(), 1, "into_element needs exactly one leg");
        self.terms.into_iter().map(|(mut ws, c)| (ws.pop().unwrap(), c)).collect()
    }

    /// The scalar of a zero-leg tensor.
    pub fn into_scalar(self) -> Scalar {
        assert_eq!(self.legs(), 0, "into_scalar needs zero legs");
        self.terms.into_values().sum()
    }
}

fn require_coalgebra(spec: &AlgebraSpec) -> Result<()> {
    match spec.kind() {
        Kind::U | Kind::GrU | Kind::GroupAlgebra => Ok(()),
        other => Err(Error::WrongAlgebra(format!("{other} carries no coalgebra structure"))),
    }
}

fn gen_elem(spec: &AlgebraSpec, g: Option<Generator>) -> Element {
    match g {
        Some(g) => spec.generator(g),
        None => spec.one(),
    }
}

/// `Σ a ⊗ b` from pairs of optional generators (`None` is the unit).
fn simple_tensor(
    left: &AlgebraSpec,
    right: &AlgebraSpec,
    pairs: &[(Option<Generator>, Option<Generator>)],
) -> TensorElement {
    let mut out = TensorElement::zero(vec![left.clone(), right.clone()]);
    for (a, b) in pairs {
        let t = TensorElement::pure(&[(&gen_elem(left, *a), left), (&gen_elem(right, *b), right)]);
        out.add_scaled(&t, &Scalar::one());
    }
    out
}

/// `Δ` on one generator of `U` / `gr U` / `k[G]`.
pub fn comultiply_generator(spec: &AlgebraSpec, g: Generator) -> TensorElement {
    use Generator::*;
    let pairs = match g {
        Upper(i) => vec![(Some(Upper(i)), None), (Some(Torus(i)), Some(Upper(i)))],
        Lower(i) => vec![(Some(Lower(i)), Some(TorusInv(i))), (None, Some(Lower(i)))],
        Torus(_) | TorusInv(_) => vec![(Some(g), Some(g))],
    };
    simple_tensor(spec, spec, &pairs)
}

/// `δ` on one generator of `A_λ`, landing in `A_λ ⊗ U`.
pub fn coact_generator(alambda: &AlgebraSpec, u: &AlgebraSpec, g: Generator) -> TensorElement {
    use Generator::*;
    let pairs = match g {
        Upper(i) => vec![(Some(Upper(i)), None), (Some(Torus(i)), Some(Upper(i)))],
        Lower(i) => vec![(Some(Lower(i)), Some(TorusInv(i))), (None, Some(Lower(i)))],
        Torus(_) | TorusInv(_) => vec![(Some(g), Some(g))],
    };
    simple_tensor(alambda, u, &pairs)
}

fn extend_multiplicatively(
    e: &Element,
    specs: Vec<AlgebraSpec>,
    image: impl Fn(Generator) -> TensorElement,
) -> TensorElement {
    let mut out = TensorElement::zero(specs.clone());
    for (w, c) in e.terms() {
        let mut acc = TensorElement::one(specs.clone());
        for g in w.letters() {
            acc = acc.multiply(&image(g));
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// `Δ(e)` in `spec ⊗ spec`.
pub fn comultiply(e: &Element, spec: &AlgebraSpec) -> Result<TensorElement> {
    require_coalgebra(spec)?;
    Ok(extend_multiplicatively(e, vec![spec.clone(), spec.clone()], |g| {
        comultiply_generator(spec, g)
    }))
}

/// `Δ(w)` for a basis word.
pub fn comultiply_word(w: &NormalWord, spec: &AlgebraSpec) -> Result<TensorElement> {
    comultiply(&Element::from_word(w.clone()), spec)
}

/// Iterated coproduct `Δ^{(n-1)}(e)` with `n` legs.
pub fn comultiply_iterated(e: &Element, spec: &AlgebraSpec, legs: usize) -> Result<TensorElement> {
    require_coalgebra(spec)?;
    assert!(legs >= 1);
    let mut t = TensorElement::pure(&[(e, spec)]);
    for k in 1..legs {
        t = t.map_leg(k - 1, &[spec.clone(), spec.clone()], |w| comultiply_word(w, spec))?;
    }
    Ok(t)
}

/// `δ(e)` in `A_λ ⊗ U`.
pub fn coact(e: &Element, alambda: &AlgebraSpec) -> Result<TensorElement> {
    if alambda.kind() != Kind::Alambda {
        return Err(Error::WrongAlgebra(format!("coaction is defined on Alambda, not {}", alambda.kind())));
    }
    let u = alambda.with_kind(Kind::U);
    Ok(extend_multiplicatively(e, vec![alambda.clone(), u.clone()], |g| {
        coact_generator(alambda, &u, g)
    }))
}

pub fn coact_word(w: &NormalWord, alambda: &AlgebraSpec) -> Result<TensorElement> {
    coact(&Element::from_word(w.clone()), alambda)
}

/// `ε` on a basis word: 1 on torus monomials, 0 otherwise.
pub fn counit_word(w: &NormalWord) -> Scalar {
    if w.is_torus() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub fn counit(e: &Element, spec: &AlgebraSpec) -> Result<Scalar> {
    require_coalgebra(spec)?;
    Ok(e.terms().filter(|(w, _)| w.is_torus()).map(|(_, c)| c.clone()).sum())
}

/// `S(e)`, anti-multiplicative. Only `U` and `gr U` carry an antipode.
pub fn antipode(e: &Element, spec: &AlgebraSpec) -> Result<Element> {
    use Generator::*;
    require_coalgebra(spec)?;
    let minus_one = -Scalar::one();
    let image = |g: Generator| -> Element {
        match g {
            Upper(i) => spec.word_product(&[TorusInv(i), Upper(i)]).scale(&minus_one),
            Lower(i) => spec.word_product(&[Lower(i), Torus(i)]).scale(&minus_one),
            Torus(i) => spec.generator(TorusInv(i)),
            TorusInv(i) => spec.generator(Torus(i)),
        }
    };
    let mut out = Element::zero();
    for (w, c) in e.terms() {
        let mut acc = spec.one();
        for g in w.letters().into_iter().rev() {
            acc = spec.multiply(&acc, &image(g));
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// Whether `δ(e) = e ⊗ 1`.
pub fn covariant_check(e: &Element, alambda: &AlgebraSpec) -> Result<bool> {
    let u = alambda.with_kind(Kind::U);
    let lhs = coact(e, alambda)?;
    let rhs = TensorElement::pure(&[(e, alambda), (&u.one(), &u)]);
    Ok(lhs == rhs)
}

/// Finite-dimensional slice of `A_λ` (or any block algebra).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap {
    /// Maximal number of lower plus upper letters.
    pub max_root_letters: usize,
    /// Torus exponents range over `[-torus_bound, torus_bound]`.
    pub torus_bound: i64,
}

/// Kernel of `a ↦ δ(a) - a ⊗ 1` restricted to the span of basis words
/// within `cap`; the result is a basis of the covariants in that slice.
pub fn covariants(alambda: &AlgebraSpec, cap: Cap) -> Result<Vec<Element>> {
    let words = crate::sample::enumerate_words(alambda.kind(), alambda.rank(), cap.max_root_letters, cap.torus_bound);
    let u = alambda.with_kind(Kind::U);
    let mut columns = Vec::with_capacity(words.len());
    for w in &words {
        let e = Element::from_word(w.clone());
        let image = coact(&e, alambda)?.sub(&TensorElement::pure(&[(&e, alambda), (&u.one(), &u)]));
        columns.push(image.terms().map(|(k, c)| (k.clone(), c.clone())).collect::<BTreeMap<_, _>>());
    }
    let (kernel, _) = linalg::kernel(&columns);
    Ok(kernel
        .into_iter()
        .map(|v| v.into_iter().map(|(i, c)| (words[i].clone(), c)).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{preset, Family};
    use crate::coeffs::make_params;
    use Generator::*;

    fn specs() -> (AlgebraSpec, AlgebraSpec) {
        let c = preset(Family::A, 2).unwrap();
        let p = make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &c).unwrap();
        (
            AlgebraSpec::new(Kind::U, &p, &c).unwrap(),
            AlgebraSpec::new(Kind::Alambda, &p, &c).unwrap(),
        )
    }

    fn w(lower: &[usize], upper: &[usize], torus: &[i64]) -> NormalWord {
        NormalWord::new(lower.to_vec(), upper.to_vec(), torus.to_vec())
    }

    #[test]
    fn delta_of_generators() {
        let (u, _) = specs();
        let d = comultiply(&u.generator(Upper(0)), &u).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coefficient(&[w(&[], &[0], &[0, 0]), w(&[], &[], &[0, 0])]), Scalar::one());
        assert_eq!(d.coefficient(&[w(&[], &[], &[1, 0]), w(&[], &[0], &[0, 0])]), Scalar::one());

        let kk = u.word_product(&[Torus(0), Torus(1)]);
        let d = comultiply(&kk, &u).unwrap();
        assert_eq!(d, TensorElement::pure(&[(&kk, &u), (&kk, &u)]));
    }

    #[test]
    fn delta_of_ef_expands_four_products() {
        let (u, _) = specs();
        let ef = u.word_product(&[Upper(0), Lower(0)]);
        let lhs = comultiply(&ef, &u).unwrap();
        let de = comultiply_generator(&u, Upper(0));
        let df = comultiply_generator(&u, Lower(0));
        assert_eq!(lhs, de.multiply(&df));
    }

    #[test]
    fn coaction_of_generators() {
        let (u, al) = specs();
        let d = coact(&al.generator(Upper(0)), &al).unwrap();
        let expected = {
            let mut t = TensorElement::pure(&[(&al.generator(Upper(0)), &al), (&u.one(), &u)]);
            t.add_scaled(
                &TensorElement::pure(&[(&al.generator(Torus(0)), &al), (&u.generator(Upper(0)), &u)]),
                &Scalar::one(),
            );
            t
        };
        assert_eq!(d, expected);
        let zi = al.generator(TorusInv(0));
        assert_eq!(
            coact(&zi, &al).unwrap(),
            TensorElement::pure(&[(&zi, &al), (&u.generator(TorusInv(0)), &u)])
        );
        assert_eq!(coact(&al.one(), &al).unwrap(), TensorElement::one(vec![al.clone(), u.clone()]));
    }

    #[test]
    fn counit_values() {
        let (u, _) = specs();
        let k = u.word_product(&[TorusInv(0), TorusInv(0), TorusInv(0), Torus(1)]);
        assert_eq!(counit(&k, &u).unwrap(), Scalar::one());
        let efk = u.word_product(&[Upper(0), Lower(1), Torus(0)]);
        assert_eq!(counit(&efk, &u).unwrap(), Scalar::zero());
        assert_eq!(counit(&u.one(), &u).unwrap(), Scalar::one());
    }

    #[test]
    fn antipode_values() {
        let (u, al) = specs();
        let s_e = antipode(&u.generator(Upper(0)), &u).unwrap();
        assert_eq!(s_e, u.word_product(&[TorusInv(0), Upper(0)]).scale(&-Scalar::one()));
        assert_eq!(antipode(&u.generator(Torus(0)), &u).unwrap(), u.generator(TorusInv(0)));
        assert!(antipode(&al.one(), &al).is_err());
    }

    #[test]
    fn covariant_examples() {
        let (_, al) = specs();
        assert!(covariant_check(&al.one(), &al).unwrap());
        assert!(!covariant_check(&al.generator(Torus(0)), &al).unwrap());
        assert!(!covariant_check(&al.word_product(&[Upper(0), Lower(0)]), &al).unwrap());
    }
}
