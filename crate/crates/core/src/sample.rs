//! Word enumeration and seeded random sampling for the verification sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Element, Generator, Kind, NormalWord};
use crate::cartan::CartanDatum;
use crate::coeffs::{make_params, ParamSet, Scalar};

/// Which letters a sampled word may contain besides the torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Upper and torus letters (`U⁺`).
    Plus,
    /// Lower and torus letters (`U⁻`).
    Minus,
    /// Anything.
    Mixed,
}

fn sequences(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..rank).map(move |i| {
                    let mut w = w.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

fn torus_box(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every basis word with at most `max_root_letters` lower plus upper
/// letters and torus exponents in `[-torus_bound, torus_bound]`.
pub fn enumerate_words(kind: Kind, rank: usize, max_root_letters: usize, torus_bound: i64) -> Vec<NormalWord> {
    enumerate_pattern(kind, rank, max_root_letters, torus_bound, Pattern::Mixed)
}

/// Like [`enumerate_words`], restricted to a pattern.
pub fn enumerate_pattern(
    kind: Kind,
    rank: usize,
    max_root_letters: usize,
    torus_bound: i64,
    pattern: Pattern,
) -> Vec<NormalWord> {
    if torus_bound < 0 {
        return Vec::new();
    }
    let max_root = if kind.has_root_letters() { max_root_letters } else { 0 };
    let tori = torus_box(rank, torus_bound);
    let mut out = Vec::new();
    for total in 0..=max_root {
        for nl in 0..=total {
            let nu = total - nl;
            let ok = match pattern {
                Pattern::Plus => nl == 0,
                Pattern::Minus => nu == 0,
                Pattern::Mixed => true,
            };
            if !ok {
                continue;
            }
            for lower in sequences(rank, nl) {
                for upper in sequences(rank, nu) {
                    for t in &tori {
                        out.push(NormalWord::new(lower.clone(), upper.clone(), t.clone()));
                    }
                }
            }
        }
    }
    out
}

/// A random basis word with at most `max_root` root letters.
pub fn random_word<R: Rng>(
    rng: &mut R,
    kind: Kind,
    rank: usize,
    max_root: usize,
    torus_bound: i64,
    pattern: Pattern,
) -> NormalWord {
    let n = if kind.has_root_letters() { rng.gen_range(0..=max_root) } else { 0 };
    let mut w = NormalWord::unit(rank);
    for _ in 0..n {
        let i = rng.gen_range(0..rank);
        let upper = match pattern {
            Pattern::Plus => true,
            Pattern::Minus => false,
            Pattern::Mixed => rng.gen_bool(0.5),
        };
        if upper {
            w.upper.push(i);
        } else {
            w.lower.push(i);
        }
    }
    for e in w.torus.iter_mut() {
        *e = rng.gen_range(-torus_bound..=torus_bound);
    }
    w
}

/// A random sequence of generators of length at most `max_len`.
pub fn random_letters<R: Rng>(rng: &mut R, kind: Kind, rank: usize, max_len: usize) -> Vec<Generator> {
    let gens = Generator::all(kind, rank);
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| *gens.choose(rng).expect("rank >= 1")).collect()
}

/// A small random nonzero rational.
pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let n = rng.gen_range(-7i64..=7);
        let d = rng.gen_range(1i64..=5);
        if n != 0 {
            return Scalar::new(n, d).expect("d > 0");
        }
    }
}

/// A random element with up to `max_terms` terms.
pub fn random_element<R: Rng>(
    rng: &mut R,
    kind: Kind,
    rank: usize,
    max_terms: usize,
    max_root: usize,
    torus_bound: i64,
) -> Element {
    let n = rng.gen_range(0..=max_terms);
    let mut e = Element::zero();
    for _ in 0..n {
        let w = random_word(rng, kind, rank, max_root, torus_bound, Pattern::Mixed);
        e.add_term(w, random_scalar(rng));
    }
    e
}

/// Random `q` and `λ` accepted by [`make_params`].
pub fn random_params<R: Rng>(rng: &mut R, cartan: &CartanDatum) -> ParamSet {
    let t = cartan.rank();
    loop {
        let q = random_scalar(rng);
        let lambda: Vec<_> = (0..t)
            .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
            .map(|ij| (ij, random_scalar(rng)))
            .collect();
        if let Ok(p) = make_params(q, &lambda, cartan) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumeration_counts() {
        // (lower, upper) blocks over 2 letters each, total <= 2: 1 + 2*2 + 3*4
        assert_eq!(enumerate_words(Kind::U, 2, 2, 1).len(), 17 * 9);
        assert_eq!(enumerate_words(Kind::Torus, 2, 5, 2).len(), 25);
        assert_eq!(enumerate_pattern(Kind::U, 2, 2, 0, Pattern::Plus).len(), 7);
        assert!(enumerate_words(Kind::U, 1, 1, -1).is_empty());
    }

    #[test]
    fn random_params_are_valid() {
        let c = crate::cartan::preset(crate::cartan::Family::G2, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = random_params(&mut rng, &c);
            assert!(!p.q().is_zero());
        }
    }

    #[test]
    fn patterns_are_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let w = random_word(&mut rng, Kind::U, 3, 4, 2, Pattern::Plus);
            assert!(w.lower.is_empty());
            let w = random_word(&mut rng, Kind::U, 3, 4, 2, Pattern::Minus);
            assert!(w.upper.is_empty());
        }
    }
}
