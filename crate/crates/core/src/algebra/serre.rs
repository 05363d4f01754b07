use crate::algebra::{AlgebraSpec, Element, Generator, NormalWord};
use crate::coeffs::q_binomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

/// `Σ_r (-1)^r [1-a_ij; r]_{q^{d_i}} w_r · G_i^{1-a_ij-r} G_j G_i^r` with
/// `G` the upper or lower letters and `w_r = λ_ij^{a_ij+2r-1}` when
/// `lambda_weighted` and `side` is upper, else 1. The lower Serre relations
/// of `A_λ` carry no weight.
///
/// The engine never imposes these relations, so the result is a nonzero
/// element of the block basis.
pub fn serre_element(spec: &AlgebraSpec, side: Side, i: usize, j: usize, lambda_weighted: bool) -> Result<Element> {
    let t = spec.rank();
    if i >= t || j >= t {
        return Err(Error::IndexError(format!("Serre indices ({}, {}) out of rank {t}", i + 1, j + 1)));
    }
    if i == j {
        return Err(Error::IndexError(format!("Serre element needs i != j, got i = j = {}", i + 1)));
    }
    if !spec.kind().has_root_letters() {
        return Err(Error::WrongAlgebra(format!("{} has no root generators", spec.kind())));
    }
    let params = spec.params();
    let a = spec.cartan().a(i, j);
    let n = 1 - a;
    let v = params.q_pow(params.d()[i]);
    let mut out = Element::zero();
    for r in 0..=n {
        let mut c = q_binomial(n, r, &v)?;
        if r % 2 == 1 {
            c = -c;
        }
        if lambda_weighted && side == Side::Upper {
            c *= &params.lambda_pow(i, j, a + 2 * r - 1);
        }
        let mut letters = vec![i; (n - r) as usize];
        letters.push(j);
        letters.extend(std::iter::repeat_n(i, r as usize));
        let w = match side {
            Side::Upper => NormalWord::new(Vec::new(), letters, vec![0; t]),
            Side::Lower => NormalWord::new(letters, Vec::new(), vec![0; t]),
        };
        out.add_term(w, c);
    }
    debug_assert_eq!(
        out,
        serre_by_products(spec, side, i, j, lambda_weighted),
        "block words are products of their letters"
    );
    Ok(out)
}

fn serre_by_products(spec: &AlgebraSpec, side: Side, i: usize, j: usize, weighted: bool) -> Element {
    let params = spec.params();
    let a = spec.cartan().a(i, j);
    let n = 1 - a;
    let v = params.q_pow(params.d()[i]);
    let g = |k| match side {
        Side::Upper => Generator::Upper(k),
        Side::Lower => Generator::Lower(k),
    };
    let mut out = Element::zero();
    for r in 0..=n {
        let mut letters = vec![g(i); (n - r) as usize];
        letters.push(g(j));
        letters.extend(std::iter::repeat_n(g(i), r as usize));
        let mut c = q_binomial(n, r, &v).expect("checked by caller");
        if r % 2 == 1 {
            c = -c;
        }
        if weighted && side == Side::Upper {
            c *= &params.lambda_pow(i, j, a + 2 * r - 1);
        }
        out.add_scaled(&spec.word_product(&letters), &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;
    use crate::cartan::{preset, Family};
    use crate::coeffs::{make_params, Scalar};

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d).unwrap()
    }

    #[test]
    fn a2_upper_unweighted() {
        let c = preset(Family::A, 2).unwrap();
        let p = make_params(s(2, 1), &[((0, 1), s(3, 1))], &c).unwrap();
        let u = AlgebraSpec::new(Kind::U, &p, &c).unwrap();
        let e = serre_element(&u, Side::Upper, 0, 1, false).unwrap();
        let w = |up: Vec<usize>| NormalWord::new(vec![], up, vec![0, 0]);
        let mut expected = Element::zero();
        expected.add_term(w(vec![0, 0, 1]), s(1, 1));
        expected.add_term(w(vec![0, 1, 0]), -(s(2, 1) + s(1, 2)));
        expected.add_term(w(vec![1, 0, 0]), s(1, 1));
        assert_eq!(e, expected);
    }

    #[test]
    fn a2_upper_weighted_exponents() {
        let c = preset(Family::A, 2).unwrap();
        let p = make_params(s(2, 1), &[((0, 1), s(3, 1))], &c).unwrap();
        let al = AlgebraSpec::new(Kind::Alambda, &p, &c).unwrap();
        let e = serre_element(&al, Side::Upper, 0, 1, true).unwrap();
        let w = |up: Vec<usize>| NormalWord::new(vec![], up, vec![0, 0]);
        // λ^{a+2r-1} with a = -1: λ^-2, λ^0, λ^2
        assert_eq!(e.coefficient(&w(vec![0, 0, 1])), s(1, 9));
        assert_eq!(e.coefficient(&w(vec![0, 1, 0])), -s(5, 2));
        assert_eq!(e.coefficient(&w(vec![1, 0, 0])), s(9, 1));
    }

    #[test]
    fn g2_has_four_terms() {
        let c = preset(Family::G2, 2).unwrap();
        let p = make_params(s(2, 1), &[((0, 1), s(5, 1))], &c).unwrap();
        let u = AlgebraSpec::new(Kind::U, &p, &c).unwrap();
        assert_eq!(serre_element(&u, Side::Lower, 0, 1, false).unwrap().len(), 5);
        assert_eq!(serre_element(&u, Side::Upper, 1, 0, false).unwrap().len(), 3);
    }

    #[test]
    fn equal_indices_rejected() {
        let c = preset(Family::A, 1).unwrap();
        let p = make_params(s(2, 1), &[], &c).unwrap();
        let u = AlgebraSpec::new(Kind::U, &p, &c).unwrap();
        assert!(matches!(serre_element(&u, Side::Upper, 0, 0, false), Err(Error::IndexError(_))));
    }
}
