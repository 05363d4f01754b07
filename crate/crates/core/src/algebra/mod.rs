//! Block-presented algebras and their products.
//!
//! All algebras handled here share one shape: a "lower" family (`F` / `Y`),
//! an "upper" family (`E` / `X`) and invertible torus generators (`K` / `Z`)
//! subject to
//!
//! ```text
//! T_i T_j = c^TT_ij T_j T_i        T_i T_i^{-1} = T_i^{-1} T_i = 1
//! T_i U_j = c^TU_ij U_j T_i        T_i L_j = c^TL_ij L_j T_i
//! U_i L_j - L_j U_i = δ_ij C_i     (C_i a Laurent polynomial in the T's)
//! ```
//!
//! with no relations among the lower letters or among the upper letters.
//! Monomials `(lower word)(upper word)(T_1^γ_1 ... T_t^γ_t)` form a basis,
//! represented by [`NormalWord`].

mod element;
pub mod rewrite;
mod serre;
mod twist;

use std::fmt;
use std::sync::Arc;

pub use element::{Element, NormalWord};
pub use rewrite::{critical_pairs, normal_form, CriticalPair};
pub use serre::{serre_element, Side};
pub use twist::{phi_lambda, plain_to_twisted, psi, psi_word, twisted_basis_change_scalar, twisted_to_plain};

use crate::cartan::CartanDatum;
use crate::coeffs::{ParamSet, Scalar};
use crate::error::{Error, Result};

/// Which member of the family of block-presented algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Drinfeld-Jimbo relations without the Serre relations.
    U,
    /// Associated graded: `E_i F_j = F_j E_i`.
    GrU,
    /// The algebra `A_λ` on `X`, `Y`, `Z^{±1}`.
    Alambda,
    /// λ-quantum torus on `Z^{±1}` with `Z_i Z_j = λ_ij^2 Z_j Z_i`.
    Torus,
    /// Commutative group algebra `k[G]` on `K^{±1}`.
    GroupAlgebra,
}

impl Kind {
    pub fn parse(name: &str) -> Result<Kind> {
        match name.trim().to_ascii_lowercase().as_str() {
            "u" => Ok(Kind::U),
            "gru" | "gr" => Ok(Kind::GrU),
            "alambda" | "a" => Ok(Kind::Alambda),
            "torus" => Ok(Kind::Torus),
            "kg" | "group" => Ok(Kind::GroupAlgebra),
            other => Err(Error::Config(format!("unknown algebra '{other}'"))),
        }
    }

    /// Letters used for (lower, upper, torus) generators.
    pub fn letters(self) -> (char, char, char) {
        match self {
            Kind::U | Kind::GrU | Kind::GroupAlgebra => ('F', 'E', 'K'),
            Kind::Alambda | Kind::Torus => ('Y', 'X', 'Z'),
        }
    }

    pub fn has_root_letters(self) -> bool {
        !matches!(self, Kind::Torus | Kind::GroupAlgebra)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Kind::U => "U",
            Kind::GrU => "grU",
            Kind::Alambda => "Alambda",
            Kind::Torus => "torus",
            Kind::GroupAlgebra => "kG",
        };
        f.write_str(name)
    }
}

/// One algebra generator; indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Lower(usize),
    Upper(usize),
    Torus(usize),
    TorusInv(usize),
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::Lower(i) | Generator::Upper(i) | Generator::Torus(i) | Generator::TorusInv(i) => i,
        }
    }

    /// `Some(±1)` for torus letters.
    pub fn torus_sign(self) -> Option<i64> {
        match self {
            Generator::Torus(_) => Some(1),
            Generator::TorusInv(_) => Some(-1),
            _ => None,
        }
    }

    pub fn torus(index: usize, sign: i64) -> Generator {
        if sign > 0 {
            Generator::Torus(index)
        } else {
            Generator::TorusInv(index)
        }
    }

    /// All generators of an algebra of the given kind and rank.
    pub fn all(kind: Kind, rank: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for i in 0..rank {
            if kind.has_root_letters() {
                out.push(Generator::Lower(i));
                out.push(Generator::Upper(i));
            }
            out.push(Generator::Torus(i));
            out.push(Generator::TorusInv(i));
        }
        out
    }

    pub fn display(self, kind: Kind) -> String {
        let (l, u, t) = kind.letters();
        match self {
            Generator::Lower(i) => format!("{l}{}", i + 1),
            Generator::Upper(i) => format!("{u}{}", i + 1),
            Generator::Torus(i) => format!("{t}{}", i + 1),
            Generator::TorusInv(i) => format!("{t}{}^-1", i + 1),
        }
    }
}

/// A torus Laurent polynomial `Σ c_γ T^γ`.
pub type LaurentPoly = Vec<(Vec<i64>, Scalar)>;

struct SpecInner {
    kind: Kind,
    params: ParamSet,
    cartan: CartanDatum,
    tt: Vec<Vec<Scalar>>,
    tu: Vec<Vec<Scalar>>,
    tl: Vec<Vec<Scalar>>,
    central: Vec<LaurentPoly>,
}

/// Commutation datum of one algebra. Cheap to clone.
#[derive(Clone)]
pub struct AlgebraSpec(Arc<SpecInner>);

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraSpec")
            .field("kind", &self.0.kind)
            .field("rank", &self.rank())
            .finish()
    }
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.0.kind == other.0.kind && self.0.params == other.0.params && self.0.cartan == other.0.cartan
    }
}

/// Instantiates the structure constants of `kind` for the given parameters.
pub fn make_algebra(kind: Kind, params: &ParamSet, cartan: &CartanDatum) -> Result<AlgebraSpec> {
    AlgebraSpec::new(kind, params, cartan)
}

impl AlgebraSpec {
    pub fn new(kind: Kind, params: &ParamSet, cartan: &CartanDatum) -> Result<AlgebraSpec> {
        if let Err(v) = cartan.validate() {
            return Err(Error::InvalidCartan(v.to_string()));
        }
        let t = cartan.rank();
        if params.rank() != t || params.d() != cartan.d() {
            return Err(Error::Config("parameter set does not match the Cartan datum".into()));
        }
        let one = || vec![vec![Scalar::one(); t]; t];
        let grid = |f: &dyn Fn(usize, usize) -> Scalar| -> Vec<Vec<Scalar>> {
            (0..t).map(|i| (0..t).map(|j| f(i, j)).collect()).collect()
        };
        let lambda_sq = |i: usize, j: usize| params.lambda_pow(i, j, 2);
        let q_up = |i: usize, j: usize| params.q_pow(cartan.da(i, j));
        let q_down = |i: usize, j: usize| params.q_pow(-cartan.da(i, j));
        let unit_torus = |i: usize, e: i64| {
            let mut g = vec![0; t];
            g[i] = e;
            g
        };

        let (tt, tu, tl, central): (_, _, _, Vec<LaurentPoly>) = match kind {
            Kind::U | Kind::GrU => {
                let central = (0..t)
                    .map(|i| {
                        if kind == Kind::GrU {
                            return Vec::new();
                        }
                        let c = params.qd_difference(i).inv().expect("q^(2d) != 1");
                        vec![(unit_torus(i, 1), c.clone()), (unit_torus(i, -1), -c)]
                    })
                    .collect();
                (one(), grid(&q_up), grid(&q_down), central)
            }
            Kind::Alambda => {
                let central = (0..t)
                    .map(|i| {
                        let c = params.qd_difference(i).inv().expect("q^(2d) != 1");
                        vec![(unit_torus(i, 1), c)]
                    })
                    .collect();
                let tu = grid(&|i, j| lambda_sq(i, j) * q_up(i, j));
                (grid(&lambda_sq), tu, grid(&q_down), central)
            }
            Kind::Torus => (grid(&lambda_sq), one(), one(), vec![Vec::new(); t]),
            Kind::GroupAlgebra => (one(), one(), one(), vec![Vec::new(); t]),
        };

        Ok(AlgebraSpec(Arc::new(SpecInner {
            kind,
            params: params.clone(),
            cartan: cartan.clone(),
            tt,
            tu,
            tl,
            central,
        })))
    }

    /// Same parameters, different kind.
    pub fn with_kind(&self, kind: Kind) -> AlgebraSpec {
        AlgebraSpec::new(kind, &self.0.params, &self.0.cartan).expect("parameters already validated")
    }

    pub fn kind(&self) -> Kind {
        self.0.kind
    }

    pub fn params(&self) -> &ParamSet {
        &self.0.params
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.0.cartan
    }

    pub fn rank(&self) -> usize {
        self.0.cartan.rank()
    }

    /// `c^TT_ij` in `T_i T_j = c^TT_ij T_j T_i`.
    pub fn c_tt(&self, i: usize, j: usize) -> &Scalar {
        &self.0.tt[i][j]
    }

    /// `c^TU_ij` in `T_i U_j = c^TU_ij U_j T_i`.
    pub fn c_tu(&self, i: usize, j: usize) -> &Scalar {
        &self.0.tu[i][j]
    }

    /// `c^TL_ij` in `T_i L_j = c^TL_ij L_j T_i`.
    pub fn c_tl(&self, i: usize, j: usize) -> &Scalar {
        &self.0.tl[i][j]
    }

    /// `C_i` in `U_i L_i - L_i U_i = C_i`.
    pub fn central(&self, i: usize) -> &LaurentPoly {
        &self.0.central[i]
    }

    pub fn generator_name(&self, g: Generator) -> String {
        g.display(self.kind())
    }

    /// Scalar `s` with `T^a T^b = s T^{a+b}`.
    pub fn torus_product_scalar(&self, a: &[i64], b: &[i64]) -> Scalar {
        let mut s = Scalar::one();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate().take(i) {
                if bj != 0 {
                    s *= &self.c_tt(i, j).pow(ai * bj).expect("nonzero structure constant");
                }
            }
        }
        s
    }

    /// Scalar `s` with `T^γ U_k = s U_k T^γ` (or the lower analogue).
    fn torus_past(&self, gamma: &[i64], g: Generator) -> Scalar {
        let table = match g {
            Generator::Upper(_) => &self.0.tu,
            Generator::Lower(_) => &self.0.tl,
            _ => unreachable!("torus_past on a torus letter"),
        };
        let k = g.index();
        let mut s = Scalar::one();
        for (i, &gi) in gamma.iter().enumerate() {
            if gi != 0 {
                s *= &table[i][k].pow(gi).expect("nonzero structure constant");
            }
        }
        s
    }

    /// Accumulates `coeff · w · g` into `out`.
    pub(crate) fn push_word_times_generator(
        &self,
        w: &NormalWord,
        g: Generator,
        coeff: &Scalar,
        out: &mut Element,
    ) {
        match g {
            Generator::Torus(k) | Generator::TorusInv(k) => {
                let mut delta = vec![0; self.rank()];
                delta[k] = g.torus_sign().unwrap();
                self.push_word_times_torus(w, &delta, coeff, out);
            }
            Generator::Upper(_) => {
                let s = self.torus_past(&w.torus, g);
                let mut upper = w.upper.clone();
                upper.push(g.index());
                out.add_term(NormalWord::new(w.lower.clone(), upper, w.torus.clone()), coeff * &s);
            }
            Generator::Lower(k) => {
                let base = coeff * &self.torus_past(&w.torus, g);
                let mut lower = w.lower.clone();
                lower.push(k);
                out.add_term(NormalWord::new(lower, w.upper.clone(), w.torus.clone()), base.clone());
                // U F_k = F_k U + Σ_{u_p = k} u_1..u_{p-1} C_k u_{p+1}..u_m
                let central = self.central(k);
                if central.is_empty() {
                    return;
                }
                for p in (0..w.upper.len()).filter(|&p| w.upper[p] == k) {
                    let mut upper = w.upper.clone();
                    upper.remove(p);
                    for (delta, c) in central {
                        let mut s = &base * c;
                        for &u in &w.upper[p + 1..] {
                            s *= &self.torus_past(delta, Generator::Upper(u));
                        }
                        s *= &self.torus_product_scalar(delta, &w.torus);
                        let torus: Vec<i64> = delta.iter().zip(&w.torus).map(|(a, b)| a + b).collect();
                        out.add_term(NormalWord::new(w.lower.clone(), upper.clone(), torus), s);
                    }
                }
            }
        }
    }

    fn push_word_times_torus(&self, w: &NormalWord, delta: &[i64], coeff: &Scalar, out: &mut Element) {
        let s = self.torus_product_scalar(&w.torus, delta);
        let torus = w.torus.iter().zip(delta).map(|(a, b)| a + b).collect();
        out.add_term(NormalWord::new(w.lower.clone(), w.upper.clone(), torus), coeff * &s);
    }

    /// Right multiplication of an element by one generator.
    pub fn mul_generator(&self, e: &Element, g: Generator) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            self.push_word_times_generator(w, g, c, &mut out);
        }
        out
    }

    /// `e · w` for a basis word `w`, one letter at a time.
    fn mul_word(&self, e: &Element, w: &NormalWord) -> Element {
        let mut acc = e.clone();
        for &i in &w.lower {
            acc = self.mul_generator(&acc, Generator::Lower(i));
        }
        for &i in &w.upper {
            acc = self.mul_generator(&acc, Generator::Upper(i));
        }
        if w.torus.iter().any(|&g| g != 0) {
            let mut out = Element::zero();
            for (v, c) in acc.terms() {
                self.push_word_times_torus(v, &w.torus, c, &mut out);
            }
            acc = out;
        }
        acc
    }

    /// Product of two canonical elements.
    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in b.terms() {
            let part = self.mul_word(a, w);
            out.add_scaled(&part, c);
        }
        out
    }

    /// Product of a sequence of generators, left to right.
    pub fn word_product(&self, letters: &[Generator]) -> Element {
        letters
            .iter()
            .fold(Element::one(self.rank()), |acc, &g| self.mul_generator(&acc, g))
    }

    /// The element given by one generator.
    pub fn generator(&self, g: Generator) -> Element {
        self.word_product(&[g])
    }

    pub fn one(&self) -> Element {
        Element::one(self.rank())
    }

    /// Integer power; negative powers only for invertible elements
    /// (nonzero multiples of a torus monomial).
    pub fn pow(&self, e: &Element, n: i64) -> Result<Element> {
        if n < 0 {
            let inv = self.inverse(e)?;
            return self.pow(&inv, -n);
        }
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, e);
        }
        Ok(acc)
    }

    /// Inverse of `c T^γ`.
    pub fn inverse(&self, e: &Element) -> Result<Element> {
        let mut terms = e.terms();
        let (w, c) = match (terms.next(), terms.next()) {
            (Some(t), None) => t,
            _ => return Err(Error::NotInvertible("only nonzero multiples of torus monomials are invertible".into())),
        };
        if !w.lower.is_empty() || !w.upper.is_empty() {
            return Err(Error::NotInvertible("word contains non-torus letters".into()));
        }
        let neg: Vec<i64> = w.torus.iter().map(|g| -g).collect();
        // T^γ T^{-γ} = s · 1
        let s = self.torus_product_scalar(&w.torus, &neg);
        let coeff = (c * &s).inv()?;
        Ok(Element::from_term(NormalWord::torus_only(neg), coeff))
    }

    /// Whether every letter of `w` exists in this algebra.
    pub fn accepts(&self, w: &NormalWord) -> bool {
        w.torus.len() == self.rank()
            && w.lower.iter().chain(&w.upper).all(|&i| i < self.rank())
            && (self.kind().has_root_letters() || (w.lower.is_empty() && w.upper.is_empty()))
    }

    pub fn format_word(&self, w: &NormalWord) -> String {
        crate::cli::print::format_word(w, self.kind())
    }

    pub fn format(&self, e: &Element) -> String {
        crate::cli::print::print_canonical(e, self.kind())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{preset, Family};
    use crate::coeffs::make_params;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d).unwrap()
    }

    fn a2(kind: Kind) -> AlgebraSpec {
        let c = preset(Family::A, 2).unwrap();
        let p = make_params(s(2, 1), &[((0, 1), s(3, 1))], &c).unwrap();
        AlgebraSpec::new(kind, &p, &c).unwrap()
    }

    #[test]
    fn structure_constants() {
        let c = preset(Family::A, 1).unwrap();
        let p = make_params(s(2, 1), &[], &c).unwrap();
        let u = AlgebraSpec::new(Kind::U, &p, &c).unwrap();
        assert_eq!(u.c_tu(0, 0), &s(4, 1));
        assert_eq!(u.c_tl(0, 0), &s(1, 4));
        let gr = u.with_kind(Kind::GrU);
        assert_eq!(gr.c_tu(0, 0), &s(4, 1));
        assert!(gr.central(0).is_empty());

        let al = a2(Kind::Alambda);
        assert_eq!(al.c_tt(0, 1), &s(9, 1));
        assert_eq!(al.c_tt(1, 0), &s(1, 9));
        // λ_12^2 q^{a_12} = 9/2
        assert_eq!(al.c_tu(0, 1), &s(9, 2));
        assert_eq!(al.c_tl(0, 1), &s(2, 1));
    }

    #[test]
    fn e_times_f_in_u() {
        let u = a2(Kind::U);
        let ef = u.word_product(&[Generator::Upper(0), Generator::Lower(0)]);
        let mut expected = u.word_product(&[Generator::Lower(0), Generator::Upper(0)]);
        // (K - K^-1)/(2 - 1/2)
        expected.add_term(NormalWord::torus_only(vec![1, 0]), s(2, 3));
        expected.add_term(NormalWord::torus_only(vec![-1, 0]), s(-2, 3));
        assert_eq!(ef, expected);
    }

    #[test]
    fn torus_inverse_and_unit() {
        let al = a2(Kind::Alambda);
        let z = al.generator(Generator::Torus(0));
        let zi = al.generator(Generator::TorusInv(0));
        assert_eq!(al.multiply(&z, &zi), al.one());
        assert_eq!(al.multiply(&zi, &z), al.one());
        assert_eq!(al.multiply(&al.one(), &z), z);

        let z1z2 = al.word_product(&[Generator::Torus(0), Generator::Torus(1)]);
        let inv = al.inverse(&z1z2).unwrap();
        assert_eq!(al.multiply(&z1z2, &inv), al.one());
        assert_eq!(al.multiply(&inv, &z1z2), al.one());
        assert!(al.inverse(&al.generator(Generator::Upper(0))).is_err());
    }

    #[test]
    fn z_past_x_in_alambda() {
        let al = a2(Kind::Alambda);
        let zx = al.word_product(&[Generator::Torus(0), Generator::Upper(1)]);
        let xz = al.word_product(&[Generator::Upper(1), Generator::Torus(0)]);
        assert_eq!(zx, xz.scale(&s(9, 2)));
        let xy = al.word_product(&[Generator::Upper(0), Generator::Lower(1)]);
        let yx = al.word_product(&[Generator::Lower(1), Generator::Upper(0)]);
        assert_eq!(xy, yx);
    }

    #[test]
    fn associativity_small() {
        let u = a2(Kind::U);
        let f1 = u.generator(Generator::Lower(0));
        let e1 = u.generator(Generator::Upper(0));
        let left = u.multiply(&u.multiply(&f1, &e1), &f1);
        let right = u.multiply(&f1, &u.multiply(&e1, &f1));
        assert_eq!(left, right);
    }
}
