//! Literal string rewriting with the defining relations.
//!
//! This is the slow, rule-by-rule route to normal forms. It is kept
//! separate from [`AlgebraSpec::multiply`], which builds products directly
//! on basis words; the two are cross-checked in tests.
//!
//! Rules act on adjacent letters, always at the leftmost redex:
//!
//! * `T_i^e T_j^f -> c^TT_ij^{ef} T_j^f T_i^e` for `i > j`, and `T_i^e T_i^{-e} -> 1`
//! * `T_i^e U_j -> (c^TU_ij)^e U_j T_i^e`, `T_i^e L_j -> (c^TL_ij)^e L_j T_i^e`
//! * `U_i L_j -> L_j U_i + δ_ij C_i`
//!
//! Every rule lowers the pair (upper/lower inversions, torus letters to the
//! left of root letters, torus disorder) lexicographically, so reduction
//! terminates.

use crate::algebra::{AlgebraSpec, Element, Generator, NormalWord};
use crate::coeffs::Scalar;

type RawTerm = (Vec<Generator>, Scalar);

fn is_redex(spec: &AlgebraSpec, a: Generator, b: Generator) -> bool {
    use Generator::*;
    match (a, b) {
        (Torus(i) | TorusInv(i), Torus(j) | TorusInv(j)) => {
            i > j || (i == j && a.torus_sign() != b.torus_sign())
        }
        (Torus(_) | TorusInv(_), Upper(_) | Lower(_)) => true,
        (Upper(_), Lower(_)) => spec.kind().has_root_letters(),
        _ => false,
    }
}

fn leftmost_redex(spec: &AlgebraSpec, word: &[Generator]) -> Option<usize> {
    word.windows(2).position(|w| is_redex(spec, w[0], w[1]))
}

/// Applies the rule for the pair at `p, p+1`.
fn apply_at(spec: &AlgebraSpec, word: &[Generator], p: usize) -> Vec<RawTerm> {
    use Generator::*;
    let (a, b) = (word[p], word[p + 1]);
    let splice = |mid: &[Generator]| -> Vec<Generator> {
        let mut w = word[..p].to_vec();
        w.extend_from_slice(mid);
        w.extend_from_slice(&word[p + 2..]);
        w
    };
    match (a, b) {
        (Torus(i) | TorusInv(i), Torus(j) | TorusInv(j)) => {
            let (e, f) = (a.torus_sign().unwrap(), b.torus_sign().unwrap());
            if i == j {
                vec![(splice(&[]), Scalar::one())]
            } else {
                let c = spec.c_tt(i, j).pow(e * f).expect("nonzero structure constant");
                vec![(splice(&[b, a]), c)]
            }
        }
        (Torus(i) | TorusInv(i), Upper(j)) => {
            let c = spec.c_tu(i, j).pow(a.torus_sign().unwrap()).expect("nonzero");
            vec![(splice(&[b, a]), c)]
        }
        (Torus(i) | TorusInv(i), Lower(j)) => {
            let c = spec.c_tl(i, j).pow(a.torus_sign().unwrap()).expect("nonzero");
            vec![(splice(&[b, a]), c)]
        }
        (Upper(i), Lower(j)) => {
            let mut out = vec![(splice(&[b, a]), Scalar::one())];
            if i == j {
                for (delta, c) in spec.central(i) {
                    out.push((splice(&NormalWord::torus_only(delta.clone()).letters()), c.clone()));
                }
            }
            out
        }
        _ => unreachable!("apply_at on a non-redex"),
    }
}

/// Reads an irreducible letter sequence as a basis word.
fn irreducible_to_word(rank: usize, word: &[Generator]) -> NormalWord {
    let mut w = NormalWord::unit(rank);
    for &g in word {
        match g {
            Generator::Lower(i) => w.lower.push(i),
            Generator::Upper(i) => w.upper.push(i),
            Generator::Torus(i) => w.torus[i] += 1,
            Generator::TorusInv(i) => w.torus[i] -= 1,
        }
    }
    w
}

/// Rewrites a formal combination of generator words to canonical form.
pub fn normal_form(raw: &[(Vec<Generator>, Scalar)], spec: &AlgebraSpec) -> Element {
    let mut out = Element::zero();
    let mut stack: Vec<RawTerm> = raw.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
    while let Some((word, coeff)) = stack.pop() {
        match leftmost_redex(spec, &word) {
            None => out.add_term(irreducible_to_word(spec.rank(), &word), coeff),
            Some(p) => {
                for (w, c) in apply_at(spec, &word, p) {
                    let c = &coeff * &c;
                    if !c.is_zero() {
                        stack.push((w, c));
                    }
                }
            }
        }
    }
    out
}

/// Normal form of a single word.
pub fn normal_form_word(word: &[Generator], spec: &AlgebraSpec) -> Element {
    normal_form(&[(word.to_vec(), Scalar::one())], spec)
}

/// Re-expresses a canonical element as raw generator words.
pub fn to_raw(e: &Element) -> Vec<(Vec<Generator>, Scalar)> {
    e.terms().map(|(w, c)| (w.letters(), c.clone())).collect()
}

/// A three-letter overlap reduced in both possible first steps.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: [Generator; 3],
    pub via_left: Element,
    pub via_right: Element,
}

impl CriticalPair {
    pub fn joinable(&self) -> bool {
        self.via_left == self.via_right
    }
}

/// All overlaps `abc` where both `ab` and `bc` are redexes.
pub fn critical_pairs(spec: &AlgebraSpec) -> Vec<CriticalPair> {
    let gens = Generator::all(spec.kind(), spec.rank());
    let mut out = Vec::new();
    for &a in &gens {
        for &b in &gens {
            if !is_redex(spec, a, b) {
                continue;
            }
            for &c in &gens {
                if !is_redex(spec, b, c) {
                    continue;
                }
                let word = [a, b, c];
                let reduce = |p: usize| {
                    let step = apply_at(spec, &word, p);
                    normal_form(&step, spec)
                };
                out.push(CriticalPair {
                    word,
                    via_left: reduce(0),
                    via_right: reduce(1),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;
    use crate::cartan::{preset, Family};
    use crate::coeffs::make_params;

    fn spec(kind: Kind, family: Family, rank: usize) -> AlgebraSpec {
        let c = preset(family, rank).unwrap();
        let lambda: Vec<_> = (0..rank)
            .flat_map(|i| (i + 1..rank).map(move |j| ((i, j), Scalar::from_int(2 + (i + 2 * j) as i64))))
            .collect();
        let p = make_params(Scalar::new(3, 2).unwrap(), &lambda, &c).unwrap();
        AlgebraSpec::new(kind, &p, &c).unwrap()
    }

    #[test]
    fn rewriting_matches_structural_product() {
        use Generator::*;
        let u = spec(Kind::U, Family::B, 2);
        let word = [Upper(0), Upper(1), TorusInv(1), Lower(0), Torus(0), Lower(1), Upper(0)];
        assert_eq!(normal_form_word(&word, &u), u.word_product(&word));
    }

    #[test]
    fn all_overlaps_are_joinable() {
        for kind in [Kind::U, Kind::GrU, Kind::Alambda, Kind::Torus, Kind::GroupAlgebra] {
            for (family, rank) in [(Family::A, 2), (Family::G2, 2), (Family::A, 3)] {
                let s = spec(kind, family, rank);
                let pairs = critical_pairs(&s);
                assert!(!pairs.is_empty());
                for cp in pairs {
                    assert!(cp.joinable(), "{kind} {family}{rank}: {:?}", cp.word);
                }
            }
        }
    }

    #[test]
    fn cancellation() {
        let al = spec(Kind::Alambda, Family::A, 2);
        use Generator::*;
        let e = normal_form_word(&[Torus(1), Torus(0), TorusInv(1)], &al);
        // Z2 Z1 Z2^-1 = λ21^2 Z1
        let expected = Element::from_term(NormalWord::torus_only(vec![1, 0]), al.c_tt(1, 0).clone());
        assert_eq!(e, expected);
    }
}
