//! Bilinear forms on `U`, `gr U` and `k[G]`: the bicharacter `σ_λ`, its
//! pullback `σ̃_λ`, the cocycle `ρ`, the composite `σ_ρ`, convolution, and
//! twisted products computed from first principles.
//!
//! `ρ`, `ρ⁻¹` and `σ_ρ` are given by a table on generator pairs together
//! with the expansion rules
//!
//! * `f(x, yz) = f(x_(1), y) f(x_(2), z)`
//! * `f(xy, z) = f(x, z_(2)) f(y, z_(1))`
//!
//! which are only known to hold when both arguments lie in `U⁺`, both lie
//! in `U⁻`, or the first lies in `U⁻` and the second in `U⁺`. Anything else
//! is reported as [`Error::OutsideDomain`].

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::algebra::{AlgebraSpec, Element, Generator, Kind, NormalWord};
use crate::coeffs::{ParamSet, Scalar};
use crate::error::{Error, Result};
use crate::hopf::{comultiply, comultiply_iterated, counit_word};

/// A bilinear form `H × H → k`.
pub trait BilinearForm {
    fn name(&self) -> &str;

    fn eval_word(&self, x: &NormalWord, y: &NormalWord) -> Result<Scalar>;

    fn eval(&self, x: &Element, y: &Element) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (wx, cx) in x.terms() {
            for (wy, cy) in y.terms() {
                let v = self.eval_word(wx, wy)?;
                if !v.is_zero() {
                    acc += &(&v * &(cx * cy));
                }
            }
        }
        Ok(acc)
    }
}

/// `σ_λ(K^g, K^h) = ∏_{i,j} λ_ij^{g_i h_j}`.
pub fn sigma_lambda_eval(g: &[i64], h: &[i64], params: &ParamSet) -> Scalar {
    let mut acc = Scalar::one();
    for (i, &gi) in g.iter().enumerate() {
        for (j, &hj) in h.iter().enumerate() {
            if i != j && gi * hj != 0 {
                acc *= &params.lambda_pow(i, j, gi * hj);
            }
        }
    }
    acc
}

/// `σ̃_λ = σ_λ ∘ (π × π)`, where `π` kills every word with a root letter.
pub fn sigma_tilde_eval(x: &Element, y: &Element, params: &ParamSet) -> Scalar {
    let mut acc = Scalar::zero();
    for (wx, cx) in x.terms().filter(|(w, _)| w.is_torus()) {
        for (wy, cy) in y.terms().filter(|(w, _)| w.is_torus()) {
            acc += &(sigma_lambda_eval(&wx.torus, &wy.torus, params) * (cx * cy));
        }
    }
    acc
}

/// `σ_λ` as a form on the group algebra `k[G]`.
#[derive(Clone, Debug)]
pub struct SigmaLambda {
    params: ParamSet,
}

impl SigmaLambda {
    pub fn new(params: &ParamSet) -> Self {
        SigmaLambda { params: params.clone() }
    }

    /// `σ_{λ^{-1}}`, the convolution inverse.
    pub fn inverse(&self) -> Self {
        SigmaLambda {
            params: self.params.inverse_lambda(),
        }
    }
}

impl BilinearForm for SigmaLambda {
    fn name(&self) -> &str {
        "sigma_lambda"
    }

    fn eval_word(&self, x: &NormalWord, y: &NormalWord) -> Result<Scalar> {
        if !x.is_torus() || !y.is_torus() {
            return Err(Error::OutsideDomain {
                functional: self.name().into(),
                detail: "sigma_lambda lives on the group algebra".into(),
            });
        }
        Ok(sigma_lambda_eval(&x.torus, &y.torus, &self.params))
    }
}

/// `σ̃_λ` on `U` or `gr U`; total. It is a 2-cocycle on `gr U` only.
#[derive(Clone, Debug)]
pub struct SigmaTilde {
    params: ParamSet,
}

impl SigmaTilde {
    pub fn new(params: &ParamSet) -> Self {
        SigmaTilde { params: params.clone() }
    }
}

impl BilinearForm for SigmaTilde {
    fn name(&self) -> &str {
        "sigma_tilde"
    }

    fn eval_word(&self, x: &NormalWord, y: &NormalWord) -> Result<Scalar> {
        if x.is_torus() && y.is_torus() {
            Ok(sigma_lambda_eval(&x.torus, &y.torus, &self.params))
        } else {
            Ok(Scalar::zero())
        }
    }
}

/// `ε ⊗ ε`, the unit for convolution.
#[derive(Clone, Copy, Debug, Default)]
pub struct CounitForm;

impl BilinearForm for CounitForm {
    fn name(&self) -> &str {
        "counit"
    }

    fn eval_word(&self, x: &NormalWord, y: &NormalWord) -> Result<Scalar> {
        Ok(counit_word(x) * counit_word(y))
    }
}

/// Which subalgebra a word lies in. Torus words lie in both halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    Torus,
    Plus,
    Minus,
    Mixed,
}

pub fn half_of(w: &NormalWord) -> Half {
    match (w.lower.is_empty(), w.upper.is_empty()) {
        (true, true) => Half::Torus,
        (true, false) => Half::Plus,
        (false, true) => Half::Minus,
        (false, false) => Half::Mixed,
    }
}

fn half_of_letters(ls: &[Generator]) -> Half {
    let lower = ls.iter().any(|g| matches!(g, Generator::Lower(_)));
    let upper = ls.iter().any(|g| matches!(g, Generator::Upper(_)));
    match (lower, upper) {
        (false, false) => Half::Torus,
        (false, true) => Half::Plus,
        (true, false) => Half::Minus,
        (true, true) => Half::Mixed,
    }
}

/// Whether the expansion rules cover the pair `(x, y)`: both in `U⁺`, both
/// in `U⁻`, or `x ∈ U⁻` and `y ∈ U⁺`. Generator pairs and unit arguments
/// are always covered.
pub fn in_peeling_domain(x: &NormalWord, y: &NormalWord) -> bool {
    in_domain_letters(&x.letters(), &y.letters())
}

fn in_domain_letters(x: &[Generator], y: &[Generator]) -> bool {
    if x.is_empty() || y.is_empty() || (x.len() == 1 && y.len() == 1) {
        return true;
    }
    !matches!(
        (half_of_letters(x), half_of_letters(y)),
        (Half::Mixed, _) | (_, Half::Mixed) | (Half::Plus, Half::Minus)
    )
}

/// `Δ` of one generator as `(left, right)` pairs, `None` for the unit.
fn delta_pairs(g: Generator) -> Vec<(Option<Generator>, Option<Generator>)> {
    use Generator::*;
    match g {
        Upper(i) => vec![(Some(Upper(i)), None), (Some(Torus(i)), Some(Upper(i)))],
        Lower(i) => vec![(Some(Lower(i)), Some(TorusInv(i))), (None, Some(Lower(i)))],
        Torus(_) | TorusInv(_) => vec![(Some(g), Some(g))],
    }
}

/// `Δ` of a letter sequence, as letter sequences (no normal forming).
fn delta_letters(ls: &[Generator]) -> Vec<(Vec<Generator>, Vec<Generator>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for &g in ls {
        let mut next = Vec::with_capacity(out.len() * 2);
        for (l, r) in &out {
            for (a, b) in delta_pairs(g) {
                let mut l = l.clone();
                let mut r = r.clone();
                l.extend(a);
                r.extend(b);
                next.push((l, r));
            }
        }
        out = next;
    }
    out
}

fn eps_letters(ls: &[Generator]) -> Scalar {
    if ls.iter().all(|g| g.torus_sign().is_some()) {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

type Key = (Vec<Generator>, Vec<Generator>);

/// A form given by its values on generator pairs and the expansion rules.
pub struct Functional {
    name: String,
    table: BTreeMap<(Generator, Generator), Scalar>,
    cache: Mutex<HashMap<Key, Scalar>>,
}

impl Clone for Functional {
    fn clone(&self) -> Self {
        Functional::from_table(&self.name, self.table.clone())
    }
}

impl std::fmt::Debug for Functional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Functional")
            .field("name", &self.name)
            .field("table", &self.table)
            .finish()
    }
}

impl Functional {
    /// Missing generator pairs evaluate to 0.
    pub fn from_table(name: &str, table: BTreeMap<(Generator, Generator), Scalar>) -> Self {
        Functional {
            name: name.to_string(),
            table: table.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// `ρ(K, K) = 1`, `ρ(E_i, F_j) = -δ_ij/(q^{d_i} - q^{-d_i})`, else 0.
    pub fn rho(params: &ParamSet) -> Self {
        let t = params.rank();
        let mut table = torus_table(t, |_, _, _| Scalar::one());
        for i in 0..t {
            let v = -params.qd_difference(i).inv().expect("q^{2d} != 1");
            table.insert((Generator::Upper(i), Generator::Lower(i)), v);
        }
        Functional::from_table("rho", table)
    }

    /// `σ_ρ(K_i^e, K_j^f) = λ_ij^{ef}`, `σ_ρ(E_i, F_j) = δ_ij/(q^{d_i} - q^{-d_i})`, else 0.
    pub fn sigma_rho(params: &ParamSet) -> Self {
        let t = params.rank();
        let mut table = torus_table(t, |i, j, ef| params.lambda_pow(i, j, ef));
        for i in 0..t {
            let v = params.qd_difference(i).inv().expect("q^{2d} != 1");
            table.insert((Generator::Upper(i), Generator::Lower(i)), v);
        }
        Functional::from_table("sigma_rho", table)
    }

    /// `ρ⁻¹`, with its generator table solved from `ρ ∗ ρ⁻¹ = ε ⊗ ε`.
    pub fn rho_inverse(params: &ParamSet) -> Self {
        let rho = Functional::rho(params);
        let mut inv = rho.convolution_inverse(params.rank());
        inv.name = "rho_inverse".into();
        inv
    }

    pub fn table(&self) -> &BTreeMap<(Generator, Generator), Scalar> {
        &self.table
    }

    pub fn generator_value(&self, a: Generator, b: Generator) -> Scalar {
        self.table.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero)
    }

    fn value_opt(&self, a: Option<Generator>, b: Option<Generator>) -> Scalar {
        match (a, b) {
            (None, None) => Scalar::one(),
            (None, Some(g)) | (Some(g), None) => eps_letters(&[g]),
            (Some(a), Some(b)) => self.generator_value(a, b),
        }
    }

    /// Table of the convolution inverse, solved pair by pair.
    ///
    /// For generators `x, y` the equation `Σ f(x_1, y_1) h(x_2, y_2) = ε(x)ε(y)`
    /// contains `h(x, y)` exactly once, with coefficient `f(g, g')` for
    /// grouplike `g, g'`; all other unknowns involve fewer root letters.
    pub fn convolution_inverse(&self, rank: usize) -> Functional {
        let gens = Generator::all(Kind::U, rank);
        let root = |g: &Generator| usize::from(g.torus_sign().is_none());
        let mut pairs: Vec<(Generator, Generator)> =
            gens.iter().flat_map(|&a| gens.iter().map(move |&b| (a, b))).collect();
        pairs.sort_by_key(|(a, b)| root(a) + root(b));

        let mut h: BTreeMap<(Generator, Generator), Scalar> = BTreeMap::new();
        let h_value = |h: &BTreeMap<(Generator, Generator), Scalar>, a: Option<Generator>, b: Option<Generator>| match (
            a, b,
        ) {
            (None, None) => Scalar::one(),
            (None, Some(g)) | (Some(g), None) => eps_letters(&[g]),
            (Some(a), Some(b)) => h.get(&(a, b)).cloned().expect("solved in order"),
        };
        for (x, y) in pairs {
            let mut known = Scalar::zero();
            let mut coeff = Scalar::zero();
            for (x1, x2) in delta_pairs(x) {
                for (y1, y2) in delta_pairs(y) {
                    let f = self.value_opt(x1, y1);
                    if x2 == Some(x) && y2 == Some(y) {
                        coeff += &f;
                    } else if !f.is_zero() {
                        known += &(f * h_value(&h, x2, y2));
                    }
                }
            }
            let rhs = eps_letters(&[x]) * eps_letters(&[y]) - known;
            let v = rhs.checked_div(&coeff).expect("grouplike values are invertible");
            h.insert((x, y), v);
        }
        Functional::from_table(&format!("{}_inverse", self.name), h)
    }

    fn peel(&self, x: &[Generator], y: &[Generator]) -> Scalar {
        if x.is_empty() {
            return eps_letters(y);
        }
        if y.is_empty() {
            return eps_letters(x);
        }
        if x.len() == 1 && y.len() == 1 {
            return self.generator_value(x[0], y[0]);
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let mut acc = Scalar::zero();
        if x.len() >= 2 {
            // f(g·rest, z) = Σ f(g, z_2) f(rest, z_1)
            for (z1, z2) in delta_letters(y) {
                let a = self.peel(&x[..1], &z2);
                if !a.is_zero() {
                    acc += &(a * self.peel(&x[1..], &z1));
                }
            }
        } else {
            // f(g, m·rest) = Σ f(g_1, m) f(g_2, rest)
            for (g1, g2) in delta_pairs(x[0]) {
                let g1: Vec<_> = g1.into_iter().collect();
                let g2: Vec<_> = g2.into_iter().collect();
                let a = self.peel(&g1, &y[..1]);
                if !a.is_zero() {
                    acc += &(a * self.peel(&g2, &y[1..]));
                }
            }
        }
        self.cache.lock().expect("cache lock").insert(key, acc.clone());
        acc
    }

    /// Evaluates on raw letter sequences, checking the domain first.
    pub fn eval_letters(&self, x: &[Generator], y: &[Generator]) -> Result<Scalar> {
        if !in_domain_letters(x, y) {
            return Err(Error::OutsideDomain {
                functional: self.name.clone(),
                detail: format!("pattern ({:?}, {:?})", half_of_letters(x), half_of_letters(y)),
            });
        }
        Ok(self.peel(x, y))
    }
}

fn torus_table(t: usize, value: impl Fn(usize, usize, i64) -> Scalar) -> BTreeMap<(Generator, Generator), Scalar> {
    let mut table = BTreeMap::new();
    for i in 0..t {
        for j in 0..t {
            for e in [1, -1] {
                for f in [1, -1] {
                    let v = if i == j { Scalar::one() } else { value(i, j, e * f) };
                    table.insert((Generator::torus(i, e), Generator::torus(j, f)), v);
                }
            }
        }
    }
    table
}

impl BilinearForm for Functional {
    fn name(&self) -> &str {
        &self.name
    }

    fn eval_word(&self, x: &NormalWord, y: &NormalWord) -> Result<Scalar> {
        self.eval_letters(&x.letters(), &y.letters())
    }
}

/// `(f ∗ g)(x, y) = Σ f(x_1, y_1) g(x_2, y_2)`, with `Δ` taken in `spec`.
pub struct Convolution<'a> {
    f: &'a dyn BilinearForm,
    g: &'a dyn BilinearForm,
    spec: AlgebraSpec,
    name: String,
}

impl<'a> Convolution<'a> {
    pub fn new(f: &'a dyn BilinearForm, g: &'a dyn BilinearForm, spec: &AlgebraSpec) -> Self {
        let name = format!("{} * {}", f.name(), g.name());
        Convolution {
            f,
            g,
            spec: spec.clone(),
            name,
        }
    }
}

impl BilinearForm for Convolution<'_> {
    fn name(&self) -> &str {
        &self.name
    }

    fn eval_word(&self, x: &NormalWord, y: &NormalWord) -> Result<Scalar> {
        let dx = comultiply(&Element::from_word(x.clone()), &self.spec)?;
        let dy = comultiply(&Element::from_word(y.clone()), &self.spec)?;
        let mut acc = Scalar::zero();
        for (xs, cx) in dx.terms() {
            for (ys, cy) in dy.terms() {
                let a = self.f.eval_word(&xs[0], &ys[0])?;
                if a.is_zero() {
                    continue;
                }
                let b = self.g.eval_word(&xs[1], &ys[1])?;
                acc += &(a * b * cx * cy);
            }
        }
        Ok(acc)
    }
}

/// How a product is twisted.
#[derive(Clone, Copy)]
pub enum Twist<'a> {
    /// `x · y = f(x_1, y_1) x_2 y_2`.
    Left(&'a dyn BilinearForm),
    /// `a · b = a_1 b_1 g(a_2, b_2)`, where `g` is the inverse form.
    Right(&'a dyn BilinearForm),
    /// `x · y = f(x_1, y_1) x_2 y_2 g(x_3, y_3)`.
    TwoSided {
        form: &'a dyn BilinearForm,
        inverse: &'a dyn BilinearForm,
    },
}

type WordProduct<'a> = dyn Fn(&NormalWord, &NormalWord) -> Result<Element> + 'a;

fn plain_product(spec: &AlgebraSpec) -> impl Fn(&NormalWord, &NormalWord) -> Result<Element> + '_ {
    move |a, b| Ok(spec.multiply(&Element::from_word(a.clone()), &Element::from_word(b.clone())))
}

/// Left twist of an arbitrary word product `prod`.
pub fn left_twist_with(
    x: &Element,
    y: &Element,
    f: &dyn BilinearForm,
    spec: &AlgebraSpec,
    prod: &WordProduct<'_>,
) -> Result<Element> {
    let dx = comultiply(x, spec)?;
    let dy = comultiply(y, spec)?;
    let mut out = Element::zero();
    for (xs, cx) in dx.terms() {
        for (ys, cy) in dy.terms() {
            let v = f.eval_word(&xs[0], &ys[0])?;
            if v.is_zero() {
                continue;
            }
            out.add_scaled(&prod(&xs[1], &ys[1])?, &(v * cx * cy));
        }
    }
    Ok(out)
}

/// Right twist of an arbitrary word product `prod` by the inverse form `g`.
pub fn right_twist_with(
    a: &Element,
    b: &Element,
    g: &dyn BilinearForm,
    spec: &AlgebraSpec,
    prod: &WordProduct<'_>,
) -> Result<Element> {
    let da = comultiply(a, spec)?;
    let db = comultiply(b, spec)?;
    let mut out = Element::zero();
    for (xs, cx) in da.terms() {
        for (ys, cy) in db.terms() {
            let v = g.eval_word(&xs[1], &ys[1])?;
            if v.is_zero() {
                continue;
            }
            out.add_scaled(&prod(&xs[0], &ys[0])?, &(v * cx * cy));
        }
    }
    Ok(out)
}

fn two_sided(x: &Element, y: &Element, f: &dyn BilinearForm, g: &dyn BilinearForm, spec: &AlgebraSpec) -> Result<Element> {
    let dx = comultiply_iterated(x, spec, 3)?;
    let dy = comultiply_iterated(y, spec, 3)?;
    let mut out = Element::zero();
    for (xs, cx) in dx.terms() {
        for (ys, cy) in dy.terms() {
            let a = f.eval_word(&xs[0], &ys[0])?;
            if a.is_zero() {
                continue;
            }
            let b = g.eval_word(&xs[2], &ys[2])?;
            if b.is_zero() {
                continue;
            }
            let prod = spec.multiply(&Element::from_word(xs[1].clone()), &Element::from_word(ys[1].clone()));
            out.add_scaled(&prod, &(a * b * cx * cy));
        }
    }
    Ok(out)
}

/// Twisted product computed from `Δ`, the forms, and the plain product of
/// `spec`. Used as an independent oracle against structural products.
pub fn twisted_product_oracle(x: &Element, y: &Element, twist: Twist<'_>, spec: &AlgebraSpec) -> Result<Element> {
    let prod = plain_product(spec);
    match twist {
        Twist::Left(f) => left_twist_with(x, y, f, spec, &prod),
        Twist::Right(g) => right_twist_with(x, y, g, spec, &prod),
        Twist::TwoSided { form, inverse } => two_sided(x, y, form, inverse, spec),
    }
}

/// Both sides of the cocycle condition
/// `f(x_1, y_1) f(x_2 y_2, z) = f(y_1, z_1) f(x, y_2 z_2)`.
pub fn cocycle_sides(
    f: &dyn BilinearForm,
    x: &NormalWord,
    y: &NormalWord,
    z: &NormalWord,
    spec: &AlgebraSpec,
) -> Result<(Scalar, Scalar)> {
    let (ex, ey, ez) = (
        Element::from_word(x.clone()),
        Element::from_word(y.clone()),
        Element::from_word(z.clone()),
    );
    let dx = comultiply(&ex, spec)?;
    let dy = comultiply(&ey, spec)?;
    let dz = comultiply(&ez, spec)?;
    let mut lhs = Scalar::zero();
    for (xs, cx) in dx.terms() {
        for (ys, cy) in dy.terms() {
            let a = f.eval_word(&xs[0], &ys[0])?;
            if a.is_zero() {
                continue;
            }
            let xy = spec.multiply(&Element::from_word(xs[1].clone()), &Element::from_word(ys[1].clone()));
            lhs += &(a * f.eval(&xy, &ez)? * cx * cy);
        }
    }
    let mut rhs = Scalar::zero();
    for (ys, cy) in dy.terms() {
        for (zs, cz) in dz.terms() {
            let a = f.eval_word(&ys[0], &zs[0])?;
            if a.is_zero() {
                continue;
            }
            let yz = spec.multiply(&Element::from_word(ys[1].clone()), &Element::from_word(zs[1].clone()));
            rhs += &(a * f.eval(&ex, &yz)? * cy * cz);
        }
    }
    Ok((lhs, rhs))
}

pub fn cocycle_condition_check(
    f: &dyn BilinearForm,
    x: &NormalWord,
    y: &NormalWord,
    z: &NormalWord,
    spec: &AlgebraSpec,
) -> Result<bool> {
    let (l, r) = cocycle_sides(f, x, y, z, spec)?;
    Ok(l == r)
}

/// `f(1, x) = ε(x) = f(x, 1)`.
pub fn normalization_check(f: &dyn BilinearForm, x: &NormalWord) -> Result<bool> {
    let one = NormalWord::unit(x.rank());
    let e = counit_word(x);
    Ok(f.eval_word(&one, x)? == e && f.eval_word(x, &one)? == e)
}

/// Left-associated iterated twisted product `((g_1 · g_2) · g_3) ...` of
/// single letters.
pub fn twisted_letters(letters: &[Generator], f: &dyn BilinearForm, spec: &AlgebraSpec) -> Result<Element> {
    let mut acc = spec.one();
    for &g in letters {
        acc = twisted_product_oracle(&acc, &spec.generator(g), Twist::Left(f), spec)?;
    }
    Ok(acc)
}

/// The twisted monomial `F^α · (E^β · K^γ)` in plain coordinates, each
/// block an iterated twisted product of its letters.
pub fn twisted_monomial(w: &NormalWord, f: &dyn BilinearForm, spec: &AlgebraSpec) -> Result<Element> {
    let lower: Vec<_> = w.lower.iter().map(|&i| Generator::Lower(i)).collect();
    let upper: Vec<_> = w.upper.iter().map(|&i| Generator::Upper(i)).collect();
    let torus = NormalWord::torus_only(w.torus.clone()).letters();
    let fb = twisted_letters(&lower, f, spec)?;
    let eb = twisted_letters(&upper, f, spec)?;
    let kb = twisted_letters(&torus, f, spec)?;
    let ek = twisted_product_oracle(&eb, &kb, Twist::Left(f), spec)?;
    twisted_product_oracle(&fb, &ek, Twist::Left(f), spec)
}

/// Both sides of the compatibility between the two ways of twisting
/// `gr U` on a pair: the `ρ⁻¹`-right twist of the `σ̃_λ`-left twist, and
/// the `σ_ρ`-left twist of the two-sided `ρ` twist.
pub fn ms_compatibility(x: &Element, y: &Element, params: &ParamSet, gru: &AlgebraSpec) -> Result<(Element, Element)> {
    if gru.kind() != Kind::GrU {
        return Err(Error::WrongAlgebra(format!("expected grU, got {}", gru.kind())));
    }
    let st = SigmaTilde::new(params);
    let rho = Functional::rho(params);
    let rho_inv = Functional::rho_inverse(params);
    let sr = Functional::sigma_rho(params);

    let plain = plain_product(gru);
    let left_st = |a: &NormalWord, b: &NormalWord| {
        left_twist_with(
            &Element::from_word(a.clone()),
            &Element::from_word(b.clone()),
            &st,
            gru,
            &plain,
        )
    };
    let lhs = right_twist_with(x, y, &rho_inv, gru, &left_st)?;

    let rho_twist = |a: &NormalWord, b: &NormalWord| {
        two_sided(
            &Element::from_word(a.clone()),
            &Element::from_word(b.clone()),
            &rho,
            &rho_inv,
            gru,
        )
    };
    let rhs = left_twist_with(x, y, &sr, gru, &rho_twist)?;
    Ok((lhs, rhs))
}

/// `(f ∗ g)` on every pair of generators (and units), for table comparisons.
pub fn generator_pair_values(
    form: &dyn BilinearForm,
    spec: &AlgebraSpec,
) -> Result<Vec<((Generator, Generator), Scalar)>> {
    let gens = Generator::all(Kind::U, spec.rank());
    let mut out = Vec::new();
    for &a in &gens {
        for &b in &gens {
            let wa = single(spec, a);
            let wb = single(spec, b);
            out.push(((a, b), form.eval_word(&wa, &wb)?));
        }
    }
    Ok(out)
}

fn single(spec: &AlgebraSpec, g: Generator) -> NormalWord {
    let e = spec.generator(g);
    e.terms().next().expect("generator is a basis word").0.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{preset, Family};
    use crate::coeffs::make_params;
    use Generator::*;

    fn setup() -> (ParamSet, AlgebraSpec, AlgebraSpec) {
        let c = preset(Family::A, 2).unwrap();
        let p = make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &c).unwrap();
        let u = AlgebraSpec::new(Kind::U, &p, &c).unwrap();
        let g = AlgebraSpec::new(Kind::GrU, &p, &c).unwrap();
        (p, u, g)
    }

    fn w(lower: &[usize], upper: &[usize], torus: &[i64]) -> NormalWord {
        NormalWord::new(lower.to_vec(), upper.to_vec(), torus.to_vec())
    }

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d).unwrap()
    }

    #[test]
    fn sigma_tilde_cocycle_lives_on_gr_u() {
        let (p, u, g) = setup();
        let st = SigmaTilde::new(&p);
        let (x, y, z) = (w(&[], &[0], &[1, 1]), w(&[0], &[], &[0, 0]), w(&[], &[], &[-1, -1]));
        let (l, r) = cocycle_sides(&st, &x, &y, &z, &g).unwrap();
        assert_eq!(l, r);
        // on U, E1 F1 picks up a torus part that the projection does not kill
        let (l, r) = cocycle_sides(&st, &x, &y, &z, &u).unwrap();
        assert_ne!(l, r);
    }

    #[test]
    fn sigma_lambda_examples() {
        let (p, _, _) = setup();
        assert_eq!(sigma_lambda_eval(&[1, 0], &[0, 1], &p), s(3, 1));
        assert_eq!(sigma_lambda_eval(&[0, 0], &[4, -2], &p), s(1, 1));
        assert_eq!(sigma_lambda_eval(&[2, 0], &[0, 1], &p), s(9, 1));
    }

    #[test]
    fn sigma_tilde_examples() {
        let (p, u, _) = setup();
        let e1 = u.generator(Upper(0));
        let f1 = u.generator(Lower(0));
        assert_eq!(sigma_tilde_eval(&e1, &f1, &p), Scalar::zero());
        let k1 = u.generator(Torus(0));
        let k2 = u.generator(Torus(1));
        assert_eq!(sigma_tilde_eval(&k1, &k2, &p), s(3, 1));
        assert_eq!(sigma_tilde_eval(&(&k1 + &e1), &k2, &p), s(3, 1));
    }

    #[test]
    fn rho_examples() {
        let (p, _, _) = setup();
        let rho = Functional::rho(&p);
        // q = 2: q - q^{-1} = 3/2
        assert_eq!(rho.eval_word(&w(&[], &[0], &[0, 0]), &w(&[0], &[], &[0, 0])).unwrap(), s(-2, 3));
        assert_eq!(rho.eval_word(&w(&[0], &[], &[0, 0]), &w(&[], &[0], &[0, 0])).unwrap(), Scalar::zero());
        assert_eq!(rho.eval_word(&w(&[], &[], &[1, 1]), &w(&[], &[], &[1, 0])).unwrap(), Scalar::one());
    }

    #[test]
    fn rho_inverse_table_is_derived() {
        let (p, _, _) = setup();
        let inv = Functional::rho_inverse(&p);
        assert_eq!(inv.generator_value(Upper(0), Lower(0)), s(2, 3));
        assert_eq!(inv.generator_value(Upper(0), Lower(1)), Scalar::zero());
        assert_eq!(inv.generator_value(Lower(0), Upper(0)), Scalar::zero());
        assert_eq!(inv.generator_value(TorusInv(1), Torus(0)), Scalar::one());
    }

    #[test]
    fn sigma_rho_examples() {
        let (p, _, _) = setup();
        let sr = Functional::sigma_rho(&p);
        assert_eq!(sr.eval_word(&w(&[], &[0], &[0, 0]), &w(&[0], &[], &[0, 0])).unwrap(), s(2, 3));
        assert_eq!(sr.eval_word(&w(&[], &[], &[1, 0]), &w(&[], &[], &[0, 1])).unwrap(), s(3, 1));
        assert_eq!(sr.eval_word(&w(&[], &[], &[1, 1]), &w(&[], &[], &[0, 1])).unwrap(), s(3, 1));
    }

    #[test]
    fn mixed_arguments_are_rejected() {
        let (p, _, _) = setup();
        let sr = Functional::sigma_rho(&p);
        let r = sr.eval_word(&w(&[0], &[0], &[0, 0]), &w(&[], &[1], &[0, 0]));
        assert!(matches!(r, Err(Error::OutsideDomain { .. })));
        let r = sr.eval_word(&w(&[], &[0, 1], &[0, 0]), &w(&[0], &[], &[0, 0]));
        assert!(matches!(r, Err(Error::OutsideDomain { .. })));
    }

    #[test]
    fn convolution_with_inverse_bicharacter() {
        let (p, _, _) = setup();
        let c = preset(Family::A, 2).unwrap();
        let kg = AlgebraSpec::new(Kind::GroupAlgebra, &p, &c).unwrap();
        let sl = SigmaLambda::new(&p);
        let inv = sl.inverse();
        let conv = Convolution::new(&sl, &inv, &kg);
        assert_eq!(conv.eval_word(&w(&[], &[], &[1, 0]), &w(&[], &[], &[0, 1])).unwrap(), Scalar::one());
    }

    #[test]
    fn commutator_in_the_twisted_algebra() {
        let (p, u, _) = setup();
        let sr = Functional::sigma_rho(&p);
        let e1 = u.generator(Upper(0));
        let f1 = u.generator(Lower(0));
        let ef = twisted_product_oracle(&e1, &f1, Twist::Left(&sr), &u).unwrap();
        let fe = twisted_product_oracle(&f1, &e1, Twist::Left(&sr), &u).unwrap();
        let expected = u.generator(Torus(0)).scale(&s(2, 3));
        assert_eq!(&ef - &fe, expected);

        let e2 = u.generator(Upper(1));
        let e12 = twisted_product_oracle(&e1, &e2, Twist::Left(&sr), &u).unwrap();
        assert_eq!(e12, u.word_product(&[Upper(0), Upper(1)]).scale(&s(3, 1)));
    }

    #[test]
    fn two_sided_rho_twist_recovers_u() {
        let (p, u, g) = setup();
        let rho = Functional::rho(&p);
        let inv = Functional::rho_inverse(&p);
        let tw = Twist::TwoSided { form: &rho, inverse: &inv };
        let e1 = g.generator(Upper(0));
        let f1 = g.generator(Lower(0));
        let lhs = &twisted_product_oracle(&e1, &f1, tw, &g).unwrap() - &twisted_product_oracle(&f1, &e1, tw, &g).unwrap();
        let ef = u.word_product(&[Upper(0), Lower(0)]);
        let fe = u.word_product(&[Lower(0), Upper(0)]);
        assert_eq!(lhs, &ef - &fe);
    }

    #[test]
    fn ms_compatibility_on_e_f() {
        let (p, _, g) = setup();
        let (l, r) = ms_compatibility(&g.generator(Upper(0)), &g.generator(Lower(0)), &p, &g).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn sigma_tilde_cocycle_small() {
        let (p, u, _) = setup();
        let st = SigmaTilde::new(&p);
        let x = w(&[0], &[1], &[1, 0]);
        let y = w(&[], &[0], &[0, -1]);
        let z = w(&[1], &[], &[1, 1]);
        assert!(cocycle_condition_check(&st, &x, &y, &z, &u).unwrap());
        assert!(normalization_check(&st, &x).unwrap());
    }
}
