//! Verification suites. Each suite returns the number of exact checks it
//! performed, or the first counterexample.

use rand::Rng;

use crate::algebra::rewrite::to_raw;
use crate::algebra::{
    critical_pairs, normal_form, phi_lambda, serre_element, twisted_basis_change_scalar, twisted_to_plain, AlgebraSpec,
    Element, Generator, Kind, NormalWord, Side,
};
use crate::cartan::{preset, CartanDatum, Family};
use crate::cli::parse::parse_element;
use crate::cocycle::{
    cocycle_sides, generator_pair_values, half_of, in_peeling_domain, normalization_check, twisted_product_oracle,
    twisted_letters, ms_compatibility, BilinearForm, Convolution, CounitForm, Functional, Half, SigmaTilde, Twist,
};
use crate::coeffs::{ParamSet, Scalar};
use crate::galois::{cotensor_truncated, homotopy_invariant, lemma1_sides};
use crate::hopf::{antipode, coact, comultiply, counit, covariants, Cap, TensorElement};
use crate::sample::{enumerate_words, random_letters, random_params, random_word, Pattern};

pub type Outcome = std::result::Result<usize, String>;

/// Counts checks and reports the first failure.
#[derive(Default)]
pub struct Tally(usize);

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
        self.0 += 1;
        if ok {
            Ok(())
        } else {
            Err(what())
        }
    }

    pub fn done(self) -> Outcome {
        Ok(self.0)
    }
}

fn e<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|err| err.to_string())
}

fn spec(kind: Kind, params: &ParamSet, cartan: &CartanDatum) -> std::result::Result<AlgebraSpec, String> {
    e(AlgebraSpec::new(kind, params, cartan))
}

/// `φ_λ` of the weighted `A_λ` Serre element, in plain coordinates, equals
/// the unweighted Serre element of `U`; both sides, every ordered pair.
pub fn serre_transport(cartan: &CartanDatum, params: &ParamSet) -> Outcome {
    let al = spec(Kind::Alambda, params, cartan)?;
    let u = spec(Kind::U, params, cartan)?;
    let mut t = Tally::default();
    for i in 0..cartan.rank() {
        for j in 0..cartan.rank() {
            if i == j {
                continue;
            }
            for side in [Side::Upper, Side::Lower] {
                let weighted = e(serre_element(&al, side, i, j, true))?;
                let image = twisted_to_plain(&e(phi_lambda(&weighted, &al))?, params);
                let plain = e(serre_element(&u, side, i, j, false))?;
                t.check(image == plain, || {
                    format!(
                        "{side:?} Serre ({}, {}): transported {} vs {}",
                        i + 1,
                        j + 1,
                        u.format(&image),
                        u.format(&plain)
                    )
                })?;
            }
        }
    }
    t.done()
}

/// `E_i^a · E_j^b · E_i^c` (iterated twisted products of letters) equals
/// `λ_ij^{b(a-c)} E_i^a E_j^b E_i^c`, for every `a, b, c ≤ max`.
pub fn exponent_law(cartan: &CartanDatum, params: &ParamSet, max: usize) -> Outcome {
    let u = spec(Kind::U, params, cartan)?;
    let sr = Functional::sigma_rho(params);
    let mut t = Tally::default();
    for i in 0..cartan.rank() {
        for j in 0..cartan.rank() {
            if i == j {
                continue;
            }
            for a in 0..=max {
                for b in 0..=max {
                    for c in 0..=max {
                        let mut word = vec![i; a];
                        word.extend(std::iter::repeat_n(j, b));
                        word.extend(std::iter::repeat_n(i, c));
                        let letters: Vec<_> = word.iter().map(|&k| Generator::Upper(k)).collect();
                        let twisted = e(twisted_letters(&letters, &sr, &u))?;
                        let expected_scalar = params.lambda_pow(i, j, (b as i64) * (a as i64 - c as i64));
                        let plain = NormalWord::new(vec![], word.clone(), vec![0; cartan.rank()]);
                        let expected = Element::from_term(plain.clone(), expected_scalar.clone());
                        t.check(twisted == expected, || {
                            format!("exponent law ({}, {}) a={a} b={b} c={c}: {}", i + 1, j + 1, u.format(&twisted))
                        })?;
                        let s = twisted_basis_change_scalar(&[], &word, &plain.torus, params);
                        t.check(s == expected_scalar, || {
                            format!("basis change scalar a={a} b={b} c={c}: {s} vs {expected_scalar}")
                        })?;
                    }
                }
            }
        }
    }
    t.done()
}

/// `σ̃_λ ∗ ρ⁻¹` reproduces the `σ_ρ` table and `ρ ∗ ρ⁻¹ = ε ⊗ ε`, on all
/// generator pairs.
pub fn sigma_rho_table(cartan: &CartanDatum, params: &ParamSet) -> Outcome {
    let u = spec(Kind::U, params, cartan)?;
    let gru = spec(Kind::GrU, params, cartan)?;
    let st = SigmaTilde::new(params);
    let rho = Functional::rho(params);
    let rho_inv = Functional::rho_inverse(params);
    let sr = Functional::sigma_rho(params);
    let mut t = Tally::default();
    let conv = Convolution::new(&st, &rho_inv, &u);
    for ((a, b), v) in e(generator_pair_values(&conv, &u))? {
        let expected = sr.generator_value(a, b);
        t.check(v == expected, || format!("(σ̃ ∗ ρ⁻¹)({a:?}, {b:?}) = {v}, table says {expected}"))?;
    }
    let unit = Convolution::new(&rho, &rho_inv, &gru);
    for ((a, b), v) in e(generator_pair_values(&unit, &gru))? {
        let expected = e(CounitForm.eval(&gru.generator(a), &gru.generator(b)))?;
        t.check(v == expected, || format!("(ρ ∗ ρ⁻¹)({a:?}, {b:?}) = {v}"))?;
    }
    t.done()
}

fn random_in_domain<R: Rng>(rng: &mut R, kind: Kind, rank: usize, max_root: usize, bound: i64) -> (NormalWord, NormalWord) {
    let (px, py) = match rng.gen_range(0..3) {
        0 => (Pattern::Plus, Pattern::Plus),
        1 => (Pattern::Minus, Pattern::Minus),
        _ => (Pattern::Minus, Pattern::Plus),
    };
    (
        random_word(rng, kind, rank, max_root, bound, px),
        random_word(rng, kind, rank, max_root, bound, py),
    )
}

/// `ρ ∗ ρ⁻¹ = ε ⊗ ε` and `ρ ∗ (ε ⊗ ε) = ρ` on random in-domain pairs.
pub fn rho_inverse_random<R: Rng>(cartan: &CartanDatum, params: &ParamSet, rng: &mut R, n: usize) -> Outcome {
    let gru = spec(Kind::GrU, params, cartan)?;
    let rho = Functional::rho(params);
    let rho_inv = Functional::rho_inverse(params);
    let conv = Convolution::new(&rho, &rho_inv, &gru);
    let unit = Convolution::new(&rho, &CounitForm, &gru);
    let mut t = Tally::default();
    for _ in 0..n {
        let (x, y) = random_in_domain(rng, Kind::GrU, cartan.rank(), 3, 1);
        let v = e(conv.eval_word(&x, &y))?;
        let expected = e(CounitForm.eval_word(&x, &y))?;
        t.check(v == expected, || format!("(ρ ∗ ρ⁻¹)({x:?}, {y:?}) = {v}"))?;
        let v = e(unit.eval_word(&x, &y))?;
        let r = e(rho.eval_word(&x, &y))?;
        t.check(v == r, || format!("(ρ ∗ ε)({x:?}, {y:?}) = {v}, ρ = {r}"))?;
    }
    t.done()
}

/// Cocycle condition for `σ̃_λ` on random triples and normalization on
/// random words.
///
/// The products run in `gr U`: the projection killing `E` and `F` is a Hopf
/// map there, but not on `U`, where `E_i F_i` has a torus component.
pub fn cocycle<R: Rng>(cartan: &CartanDatum, params: &ParamSet, rng: &mut R, triples: usize, singles: usize) -> Outcome {
    let u = spec(Kind::GrU, params, cartan)?;
    let st = SigmaTilde::new(params);
    let r = cartan.rank();
    let mut t = Tally::default();
    for _ in 0..triples {
        let x = random_word(rng, Kind::U, r, 3, 1, Pattern::Mixed);
        let y = random_word(rng, Kind::U, r, 3, 1, Pattern::Mixed);
        let z = random_word(rng, Kind::U, r, 3, 1, Pattern::Mixed);
        let (l, rr) = e(cocycle_sides(&st, &x, &y, &z, &u))?;
        t.check(l == rr, || format!("cocycle condition at ({x:?}, {y:?}, {z:?}): {l} vs {rr}"))?;
    }
    for _ in 0..singles {
        let x = random_word(rng, Kind::U, r, 3, 2, Pattern::Mixed);
        t.check(e(normalization_check(&st, &x))?, || format!("normalization at {x:?}"))?;
    }
    t.done()
}

fn delta_word(w: &NormalWord, s: &AlgebraSpec) -> crate::Result<TensorElement> {
    comultiply(&Element::from_word(w.clone()), s)
}

/// Coassociativity and counit on all words, antipode on the short ones,
/// multiplicativity of `Δ` on random pairs.
pub fn hopf<R: Rng>(
    u: &AlgebraSpec,
    rng: &mut R,
    max_root: usize,
    antipode_root: usize,
    torus_bound: i64,
    pairs: usize,
) -> Outcome {
    let r = u.rank();
    let pair = vec![u.clone(), u.clone()];
    let mut t = Tally::default();
    for w in enumerate_words(u.kind(), r, max_root, torus_bound) {
        let d = e(delta_word(&w, u))?;
        let left = e(d.map_leg(0, &pair, |x| delta_word(x, u)))?;
        let right = e(d.map_leg(1, &pair, |x| delta_word(x, u)))?;
        t.check(left == right, || format!("coassociativity at {}", u.format_word(&w)))?;
        let ew = Element::from_word(w.clone());
        for k in 0..2 {
            let c = e(d.map_leg_element(k, u, |x| Ok(Element::scalar(counit(&Element::from_word(x.clone()), u)?, r))))?;
            let c = c.multiply_legs(0).into_element();
            t.check(c == ew, || format!("counit axiom on leg {k} at {}", u.format_word(&w)))?;
        }
    }
    for w in enumerate_words(u.kind(), r, antipode_root, torus_bound) {
        let d = e(delta_word(&w, u))?;
        let eps = e(counit(&Element::from_word(w.clone()), u))?;
        let expected = Element::scalar(eps, r);
        for k in 0..2 {
            let s = e(d.map_leg_element(k, u, |x| antipode(&Element::from_word(x.clone()), u)))?;
            let m = s.multiply_legs(0).into_element();
            t.check(m == expected, || format!("antipode axiom on leg {k} at {}", u.format_word(&w)))?;
        }
    }
    for _ in 0..pairs {
        let a = random_word(rng, u.kind(), r, 3, 1, Pattern::Mixed);
        let b = random_word(rng, u.kind(), r, 3, 1, Pattern::Mixed);
        let ab = u.multiply(&Element::from_word(a.clone()), &Element::from_word(b.clone()));
        let lhs = e(comultiply(&ab, u))?;
        let rhs = e(delta_word(&a, u))?.multiply(&e(delta_word(&b, u))?);
        t.check(lhs == rhs, || format!("Δ multiplicativity at ({}, {})", u.format_word(&a), u.format_word(&b)))?;
    }
    t.done()
}

/// `δ` is multiplicative and coassociative, the covariants of a capped
/// piece are the scalars, and `φ_λ` intertwines `δ` with `Δ`.
pub fn comodule<R: Rng>(al: &AlgebraSpec, rng: &mut R, cap: Cap, random_words: usize) -> Outcome {
    let r = al.rank();
    let u = al.with_kind(Kind::U);
    let params = al.params();
    let mut t = Tally::default();

    let short = enumerate_words(Kind::Alambda, r, 2, 1);
    for a in &short {
        for b in &short {
            if a.root_length() + b.root_length() > 2 {
                continue;
            }
            let (ea, eb) = (Element::from_word(a.clone()), Element::from_word(b.clone()));
            let lhs = e(coact(&al.multiply(&ea, &eb), al))?;
            let rhs = e(coact(&ea, al))?.multiply(&e(coact(&eb, al))?);
            t.check(lhs == rhs, || format!("δ multiplicativity at ({}, {})", al.format_word(a), al.format_word(b)))?;
        }
    }
    for a in &short {
        let d = e(coact(&Element::from_word(a.clone()), al))?;
        let left = e(d.map_leg(0, &[al.clone(), u.clone()], |x| coact(&Element::from_word(x.clone()), al)))?;
        let right = e(d.map_leg(1, &[u.clone(), u.clone()], |x| comultiply(&Element::from_word(x.clone()), &u)))?;
        t.check(left == right, || format!("coaction coassociativity at {}", al.format_word(a)))?;
    }

    let cov = e(covariants(al, cap))?;
    t.check(cov.len() == 1 && cov[0].as_scalar().is_some(), || {
        format!("covariants of {cap:?} have dimension {}", cov.len())
    })?;

    let square = |w: &NormalWord| -> std::result::Result<bool, String> {
        let phi = twisted_to_plain(&e(phi_lambda(&Element::from_word(w.clone()), al))?, params);
        let lhs = e(comultiply(&phi, &u))?;
        let rhs = e(e(coact(&Element::from_word(w.clone()), al))?
            .map_leg_element(0, &u, |x| Ok(twisted_to_plain(&Element::from_word(x.clone()), params))))?;
        Ok(lhs == rhs)
    };
    for g in Generator::all(Kind::Alambda, r) {
        let w = al.generator(g).terms().next().expect("basis word").0.clone();
        t.check(square(&w)?, || format!("φ_λ comodule square at {}", al.format_word(&w)))?;
    }
    for _ in 0..random_words {
        let w = random_word(rng, Kind::Alambda, r, 3, 2, Pattern::Mixed);
        t.check(square(&w)?, || format!("φ_λ comodule square at {}", al.format_word(&w)))?;
    }
    t.done()
}

fn oracle_pair(al: &AlgebraSpec, u: &AlgebraSpec, sr: &Functional, a: &NormalWord, b: &NormalWord) -> std::result::Result<(Element, Element), String> {
    let params = al.params();
    let to_u = |x: &Element| -> std::result::Result<Element, String> { Ok(twisted_to_plain(&e(phi_lambda(x, al))?, params)) };
    let (ea, eb) = (Element::from_word(a.clone()), Element::from_word(b.clone()));
    let structural = to_u(&al.multiply(&ea, &eb))?;
    let oracle = e(twisted_product_oracle(&to_u(&ea)?, &to_u(&eb)?, Twist::Left(sr), u))?;
    Ok((structural, oracle))
}

/// The `σ_ρ` left twist of `U`, computed from `Δ` and the cocycle, agrees
/// with the structural product of `A_λ`; the two-sided `ρ` twist of `gr U`
/// agrees with the product of `U` on generators.
pub fn oracle<R: Rng>(al: &AlgebraSpec, rng: &mut R, random_pairs: usize) -> Outcome {
    let r = al.rank();
    let params = al.params();
    let u = al.with_kind(Kind::U);
    let gru = al.with_kind(Kind::GrU);
    let sr = Functional::sigma_rho(params);
    let mut t = Tally::default();
    let gens = Generator::all(Kind::Alambda, r);
    let word = |g: Generator| al.generator(g).terms().next().expect("basis word").0.clone();
    for &a in &gens {
        for &b in &gens {
            let (s, o) = oracle_pair(al, &u, &sr, &word(a), &word(b))?;
            t.check(s == o, || format!("oracle at ({a:?}, {b:?}): {} vs {}", u.format(&s), u.format(&o)))?;
        }
    }
    for _ in 0..random_pairs {
        let (a, b) = random_in_domain(rng, Kind::Alambda, r, 3, 2);
        let (s, o) = oracle_pair(al, &u, &sr, &a, &b)?;
        t.check(s == o, || {
            format!(
                "oracle at ({}, {}): {} vs {}",
                al.format_word(&a),
                al.format_word(&b),
                u.format(&s),
                u.format(&o)
            )
        })?;
    }

    let rho = Functional::rho(params);
    let rho_inv = Functional::rho_inverse(params);
    let tw = Twist::TwoSided {
        form: &rho,
        inverse: &rho_inv,
    };
    for &a in &Generator::all(Kind::GrU, r) {
        for &b in &Generator::all(Kind::GrU, r) {
            let twisted = e(twisted_product_oracle(&gru.generator(a), &gru.generator(b), tw, &gru))?;
            let plain = u.word_product(&[a, b]);
            t.check(twisted == plain, || {
                format!("two-sided ρ twist at ({a:?}, {b:?}): {} vs {}", u.format(&twisted), u.format(&plain))
            })?;
        }
    }
    t.done()
}

/// Twisted-monomial coordinates of every in-domain word agree with the
/// diagonal basis change.
pub fn twisted_monomials(u: &AlgebraSpec, max_root: usize, bound: i64) -> Outcome {
    let params = u.params();
    let sr = Functional::sigma_rho(params);
    let mut t = Tally::default();
    for w in enumerate_words(Kind::U, u.rank(), max_root, bound) {
        let via_cocycle = e(crate::cocycle::twisted_monomial(&w, &sr, u))?;
        let expected = twisted_to_plain(&Element::from_word(w.clone()), params);
        t.check(via_cocycle == expected, || format!("twisted monomial {}", u.format_word(&w)))?;
    }
    t.done()
}

/// `μ` is multiplicative on random torus pairs, and the torus-only cotensor
/// piece has dimension `(2n+1)^t`.
pub fn lemma1<R: Rng>(al: &AlgebraSpec, rng: &mut R, pairs: usize, bound: i64) -> Outcome {
    let r = al.rank();
    let mut t = Tally::default();
    for _ in 0..pairs {
        let g: Vec<i64> = (0..r).map(|_| rng.gen_range(-bound..=bound)).collect();
        let h: Vec<i64> = (0..r).map(|_| rng.gen_range(-bound..=bound)).collect();
        let (l, rr) = e(lemma1_sides(&g, &h, al))?;
        t.check(l == rr, || format!("μ multiplicativity at ({g:?}, {h:?})"))?;
    }
    t.done()
}

/// Dimension of the torus-only cotensor piece with exponents in `[-n, n]`.
pub fn cotensor_dimension(al: &AlgebraSpec, n: i64) -> Outcome {
    let cap = Cap {
        max_root_letters: 0,
        torus_bound: n,
    };
    let ker = e(cotensor_truncated(al, cap))?;
    let expected = (2 * n as usize + 1).pow(al.rank() as u32);
    let mut t = Tally::default();
    t.check(ker.len() == expected, || format!("cotensor dimension {} vs {expected}", ker.len()))?;
    for v in &ker {
        let diagonal = v.terms().all(|(legs, _)| legs[0].torus == legs[1].torus && legs[0].is_torus());
        t.check(diagonal, || "cotensor basis element off the diagonal Z^γ ⊗ K^γ".into())?;
    }
    t.done()
}

/// The invariant separates families that differ in some `λ_ij²`, and
/// agrees on equal families.
pub fn classification<R: Rng>(cartan: &CartanDatum, rng: &mut R, pairs: usize) -> Outcome {
    let r = cartan.rank();
    let mut t = Tally::default();
    for k in 0..pairs {
        let p = random_params(rng, cartan);
        let p2 = match k % 3 {
            0 => p.clone(),
            1 => {
                // λ' = -λ on one pair: same λ², different family
                let upper: Vec<_> = (0..r)
                    .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
                    .enumerate()
                    .map(|(n, (i, j))| {
                        let v = p.lambda(i, j).clone();
                        ((i, j), if n == 0 { -v } else { v })
                    })
                    .collect();
                e(crate::coeffs::make_params(p.q().clone(), &upper, cartan))?
            }
            _ => random_params(rng, cartan),
        };
        let a = e(homotopy_invariant(&spec(Kind::Alambda, &p, cartan)?))?;
        let b = e(homotopy_invariant(&spec(Kind::Alambda, &p2, cartan)?))?;
        let squares_differ = (0..r).any(|i| {
            (0..r).any(|j| {
                let (x, y) = (p.lambda(i, j), p2.lambda(i, j));
                x * x != y * y
            })
        });
        let lambda_differ = p.lambda_table() != p2.lambda_table();
        t.check((a.commutators != b.commutators) == squares_differ, || {
            format!("commutator layer mismatch for pair {k}")
        })?;
        t.check((a != b) == lambda_differ, || format!("declared layer mismatch for pair {k}"))?;
        for i in 0..r {
            for j in 0..r {
                let l = p.lambda(i, j);
                t.check(a.commutators[i][j] == l * l, || format!("u_{}{} != λ²", i + 1, j + 1))?;
            }
        }
    }
    t.done()
}

/// Both sides of the twist compatibility agree on all generator pairs of `gr U`.
pub fn ms_twist(gru: &AlgebraSpec) -> Outcome {
    let mut t = Tally::default();
    let gens = Generator::all(Kind::GrU, gru.rank());
    for &a in &gens {
        for &b in &gens {
            let (l, r) = e(ms_compatibility(&gru.generator(a), &gru.generator(b), gru.params(), gru))?;
            t.check(l == r, || format!("twist compatibility at ({a:?}, {b:?}): {} vs {}", gru.format(&l), gru.format(&r)))?;
        }
    }
    t.done()
}

/// Idempotence, associativity, confluence and parser round trip.
pub fn engine<R: Rng>(specs: &[AlgebraSpec], rng: &mut R, idempotence: usize, triples: usize, round_trips: usize) -> Outcome {
    let mut t = Tally::default();
    let n = specs.len();
    for k in 0..idempotence {
        let s = &specs[k % n];
        let letters = random_letters(rng, s.kind(), s.rank(), 7);
        let once = normal_form(&[(letters.clone(), Scalar::one())], s);
        let twice = normal_form(&to_raw(&once), s);
        t.check(once == twice, || format!("normal form not idempotent on {letters:?} in {}", s.kind()))?;
        t.check(once == s.word_product(&letters), || format!("rewriting and product disagree on {letters:?}"))?;
    }
    for k in 0..triples {
        let s = &specs[k % n];
        let mut w = || Element::from_word(random_word(rng, s.kind(), s.rank(), 3, 1, Pattern::Mixed));
        let (a, b, c) = (w(), w(), w());
        let l = s.multiply(&s.multiply(&a, &b), &c);
        let r = s.multiply(&a, &s.multiply(&b, &c));
        t.check(l == r, || format!("associativity fails in {} at ({a:?}, {b:?}, {c:?})", s.kind()))?;
    }
    for s in specs {
        for cp in critical_pairs(s) {
            t.check(cp.joinable(), || format!("overlap {:?} not joinable in {}", cp.word, s.kind()))?;
        }
    }
    for k in 0..round_trips {
        let s = &specs[k % n];
        let x = crate::sample::random_element(rng, s.kind(), s.rank(), 4, 4, 3);
        let text = s.format(&x);
        let back = e(parse_element(&text, s))?;
        t.check(back == x, || format!("round trip failed on '{text}' in {}", s.kind()))?;
    }
    t.done()
}

/// Suites reachable from the command line.
pub const SUITES: &[&str] = &[
    "cocycle",
    "hopf",
    "comodule",
    "serre-transport",
    "oracle",
    "lemma1",
    "ms-twist",
    "exponent-law",
    "sigma-rho",
    "classification",
    "engine",
];

/// Runs a named suite at the configured parameters. `cap` bounds word
/// lengths where a suite enumerates.
pub fn run_suite<R: Rng>(name: &str, cartan: &CartanDatum, params: &ParamSet, rng: &mut R, cap: usize) -> Outcome {
    let al = spec(Kind::Alambda, params, cartan)?;
    let u = spec(Kind::U, params, cartan)?;
    let gru = spec(Kind::GrU, params, cartan)?;
    match name {
        "cocycle" => {
            let mut n = cocycle(cartan, params, rng, 100, 50)?;
            n += rho_inverse_random(cartan, params, rng, 100)?;
            Ok(n)
        }
        "hopf" => hopf(&u, rng, cap.min(3), cap.min(2), 1, 200),
        "comodule" => comodule(
            &al,
            rng,
            Cap {
                max_root_letters: cap.min(2),
                torus_bound: 2,
            },
            100,
        ),
        "serre-transport" => serre_transport(cartan, params),
        "oracle" => {
            let mut n = oracle(&al, rng, 300)?;
            n += twisted_monomials(&u, cap.min(3), 1)?;
            Ok(n)
        }
        "lemma1" => {
            let mut n = lemma1(&al, rng, 200, 3)?;
            for k in 1..=2 {
                n += cotensor_dimension(&al, k)?;
            }
            Ok(n)
        }
        "ms-twist" => ms_twist(&gru),
        "exponent-law" => exponent_law(cartan, params, cap.min(3)),
        "sigma-rho" => sigma_rho_table(cartan, params),
        "classification" => classification(cartan, rng, 50),
        "engine" => {
            let specs: Vec<_> = [Kind::U, Kind::GrU, Kind::Alambda, Kind::Torus, Kind::GroupAlgebra]
                .into_iter()
                .map(|k| spec(k, params, cartan))
                .collect::<std::result::Result<_, _>>()?;
            engine(&specs, rng, 500, 300, 500)
        }
        other => Err(format!("unknown suite '{other}'")),
    }
}

/// Presets exercised by the Serre transport criterion.
pub fn serre_presets() -> Vec<CartanDatum> {
    [(Family::A, 2), (Family::B, 2), (Family::G2, 2)]
        .into_iter()
        .map(|(f, r)| preset(f, r).expect("valid preset"))
        .collect()
}

/// Whether `(x, y)` avoids the mixed patterns. Exposed for the examples.
pub fn describe_pattern(x: &NormalWord, y: &NormalWord) -> (Half, Half, bool) {
    (half_of(x), half_of(y), in_peeling_domain(x, y))
}
