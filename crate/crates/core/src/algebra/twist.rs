//! The relabelings `φ_λ : A_λ → _σU` and `ψ : _σU → A_λ`, and the diagonal
//! change of basis between twisted and plain monomials of `U`.
//!
//! `_σU` is `U` with the left-twisted product `x ·σ y = σ(x_(1), y_(1)) x_(2) y_(2)`
//! for `σ = σ_ρ`. Its commutation relations are literally those of `A_λ`
//! (`K_i ·σ K_j = λ_ij² K_j ·σ K_i`, ...), so an element of `A_λ` written on
//! the basis `Y^α X^β Z^γ` maps to the element of `_σU` with the same
//! coordinates on the twisted basis `F^α ·σ E^β ·σ K^γ`. Converting to the
//! plain basis `F^α E^β K^γ` multiplies each coordinate by
//! [`twisted_basis_change_scalar`].

use crate::algebra::{AlgebraSpec, Element, Kind, NormalWord};
use crate::coeffs::{ParamSet, Scalar};
use crate::error::{Error, Result};

/// `φ_λ`: `X → E`, `Y → F`, `Z^{±1} → K^{±1}`. The result is expressed on
/// the twisted basis of `_σU`.
pub fn phi_lambda(e: &Element, source: &AlgebraSpec) -> Result<Element> {
    if source.kind() != Kind::Alambda {
        return Err(Error::WrongAlgebra(format!("φ_λ is defined on Alambda, not {}", source.kind())));
    }
    Ok(e.clone())
}

/// `ψ` on one basis word: `F → Y`, `E → X`, `K → Z`.
pub fn psi_word(w: &NormalWord) -> NormalWord {
    w.clone()
}

/// `ψ` extended linearly from the twisted basis of `_σU` to `A_λ`.
pub fn psi(e: &Element, target: &AlgebraSpec) -> Result<Element> {
    if target.kind() != Kind::Alambda {
        return Err(Error::WrongAlgebra(format!("ψ maps into Alambda, not {}", target.kind())));
    }
    Ok(e.map_terms(|w| (psi_word(w), Scalar::one())))
}

/// Scalar `s` with `F^α ·σ E^β ·σ K^γ = s · F^α E^β K^γ` in `_σU`:
///
/// `s = ∏_{m<m'} λ_{β_m β_m'} · ∏_{m,l} λ_{β_m l}^{γ_l} · ∏_{l<l'} λ_{l l'}^{γ_l γ_l'}`
///
/// where `β` is the flat upper word. The lower word contributes nothing.
pub fn twisted_basis_change_scalar(_alpha: &[usize], beta: &[usize], gamma: &[i64], params: &ParamSet) -> Scalar {
    let mut s = Scalar::one();
    for (m, &bm) in beta.iter().enumerate() {
        for &bn in &beta[m + 1..] {
            s *= params.lambda(bm, bn);
        }
        for (l, &g) in gamma.iter().enumerate() {
            if g != 0 {
                s *= &params.lambda_pow(bm, l, g);
            }
        }
    }
    for (l, &gl) in gamma.iter().enumerate() {
        for (l2, &gl2) in gamma.iter().enumerate().skip(l + 1) {
            if gl != 0 && gl2 != 0 {
                s *= &params.lambda_pow(l, l2, gl * gl2);
            }
        }
    }
    s
}

fn word_scalar(w: &NormalWord, params: &ParamSet) -> Scalar {
    twisted_basis_change_scalar(&w.lower, &w.upper, &w.torus, params)
}

/// Twisted-basis coordinates to plain-basis coordinates.
pub fn twisted_to_plain(e: &Element, params: &ParamSet) -> Element {
    e.map_terms(|w| (w.clone(), word_scalar(w, params)))
}

/// Plain-basis coordinates to twisted-basis coordinates.
pub fn plain_to_twisted(e: &Element, params: &ParamSet) -> Element {
    e.map_terms(|w| (w.clone(), word_scalar(w, params).inv().expect("λ is invertible")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{preset, Family};
    use crate::coeffs::make_params;

    fn params() -> ParamSet {
        let c = preset(Family::A, 2).unwrap();
        make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &c).unwrap()
    }

    #[test]
    fn exponent_law_examples() {
        let p = params();
        let torus = [0, 0];
        // (a, b, c) = (2, 1, 1) gives λ_12^{1·(2-1)}
        assert_eq!(twisted_basis_change_scalar(&[], &[0, 0, 1, 0], &torus, &p), Scalar::from_int(3));
        assert_eq!(twisted_basis_change_scalar(&[], &[0, 1, 0], &torus, &p), Scalar::one());
        assert_eq!(twisted_basis_change_scalar(&[0, 1, 1, 0], &[], &torus, &p), Scalar::one());
    }

    #[test]
    fn torus_cross_terms() {
        let p = params();
        // E_1 ∘ K_2 = λ_12 E_1 K_2 ; K_1 ∘ K_2 = λ_12 K_1 K_2 ; E_2 ∘ K_1^-1 = λ_21^-1
        assert_eq!(twisted_basis_change_scalar(&[], &[0], &[0, 1], &p), Scalar::from_int(3));
        assert_eq!(twisted_basis_change_scalar(&[], &[], &[1, 1], &p), Scalar::from_int(3));
        assert_eq!(twisted_basis_change_scalar(&[], &[1], &[-1, 0], &p), Scalar::from_int(3));
    }

    #[test]
    fn conversions_are_inverse() {
        let p = params();
        let mut e = Element::zero();
        e.add_term(NormalWord::new(vec![1], vec![0, 1], vec![2, -1]), Scalar::new(5, 7).unwrap());
        e.add_term(NormalWord::new(vec![], vec![1, 0], vec![0, 1]), Scalar::from_int(-2));
        assert_eq!(plain_to_twisted(&twisted_to_plain(&e, &p), &p), e);
    }
}
