//! The group-algebra side: restriction of `A_λ` to its torus, truncated
//! cotensor products, the map `μ : g ↦ g ⊗ g`, and the homotopy invariant.

use std::collections::BTreeMap;

use crate::algebra::{rewrite, AlgebraSpec, Element, Generator, Kind, NormalWord};
use crate::cocycle::{twisted_product_oracle, Functional, SigmaLambda, Twist};
use crate::coeffs::Scalar;
use crate::error::{Error, Result};
use crate::hopf::{coact_word, Cap, TensorElement};
use crate::linalg;
use crate::sample::enumerate_words;

fn require_alambda(spec: &AlgebraSpec) -> Result<()> {
    if spec.kind() != Kind::Alambda {
        return Err(Error::WrongAlgebra(format!("expected Alambda, got {}", spec.kind())));
    }
    Ok(())
}

/// `i*(A_λ)`: the torus subalgebra, `Z_i Z_j = λ_ij² Z_j Z_i`.
pub fn restrict_i_star(spec: &AlgebraSpec) -> Result<AlgebraSpec> {
    require_alambda(spec)?;
    Ok(spec.with_kind(Kind::Torus))
}

/// Basis of the kernel of `Id ⊗ δ_K - δ_A ⊗ Id` on `A_λ ⊗ k[G]`, truncated
/// to words of `A_λ` and torus monomials of `k[G]` within `cap`.
///
/// `k[G]` is a left `U`-comodule through `K^γ ↦ K^γ ⊗ K^γ`.
pub fn cotensor_truncated(alambda: &AlgebraSpec, cap: Cap) -> Result<Vec<TensorElement>> {
    require_alambda(alambda)?;
    let t = alambda.rank();
    let kg = alambda.with_kind(Kind::GroupAlgebra);
    let a_words = enumerate_words(Kind::Alambda, t, cap.max_root_letters, cap.torus_bound);
    let k_words = enumerate_words(Kind::GroupAlgebra, t, 0, cap.torus_bound);
    if a_words.is_empty() || k_words.is_empty() {
        return Err(Error::CapTooSmall(format!("{cap:?} spans nothing")));
    }

    let mut basis = Vec::with_capacity(a_words.len() * k_words.len());
    let mut columns = Vec::with_capacity(basis.capacity());
    for a in &a_words {
        let delta_a = coact_word(a, alambda)?;
        for k in &k_words {
            let mut col: BTreeMap<Vec<NormalWord>, Scalar> = BTreeMap::new();
            let mut add = |key: Vec<NormalWord>, c: Scalar| {
                let e = col.entry(key.clone()).or_insert_with(Scalar::zero);
                *e += &c;
                if e.is_zero() {
                    col.remove(&key);
                }
            };
            // Id ⊗ δ_K
            add(vec![a.clone(), k.clone(), k.clone()], Scalar::one());
            // δ_A ⊗ Id
            for (legs, c) in delta_a.terms() {
                add(vec![legs[0].clone(), legs[1].clone(), k.clone()], -c.clone());
            }
            columns.push(col);
            basis.push((a.clone(), k.clone()));
        }
    }
    let (kernel, _) = linalg::kernel(&columns);
    let specs = vec![alambda.clone(), kg];
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut t = TensorElement::zero(specs.clone());
            for (idx, c) in v {
                let (a, k) = &basis[idx];
                t.add_term(vec![a.clone(), k.clone()], c);
            }
            t
        })
        .collect())
}

/// Whether `x ∈ A_λ ⊗ k[G]` lies in the cotensor product.
pub fn in_cotensor(x: &TensorElement) -> Result<bool> {
    let alambda = &x.specs()[0];
    require_alambda(alambda)?;
    let mut lhs: BTreeMap<Vec<NormalWord>, Scalar> = BTreeMap::new();
    for (legs, c) in x.terms() {
        let (a, k) = (&legs[0], &legs[1]);
        *lhs.entry(vec![a.clone(), k.clone(), k.clone()]).or_insert_with(Scalar::zero) += c;
        for (dl, d) in coact_word(a, alambda)?.terms() {
            *lhs.entry(vec![dl[0].clone(), dl[1].clone(), k.clone()]).or_insert_with(Scalar::zero) -= &(c * d);
        }
    }
    Ok(lhs.values().all(Scalar::is_zero))
}

/// `μ(K^γ) = K^γ ⊗ K^γ` in `U ⊗ k[G]`.
fn mu(gamma: &[i64], u: &AlgebraSpec, kg: &AlgebraSpec) -> TensorElement {
    let w = Element::from_word(NormalWord::torus_only(gamma.to_vec()));
    TensorElement::pure(&[(&w, u), (&w, kg)])
}

/// Both sides of `μ(g ·_{σ_λ} h) = μ(g) · μ(h)`, the right side computed
/// in `_{σ_ρ}U ⊗ k[G]`.
pub fn lemma1_sides(g: &[i64], h: &[i64], spec: &AlgebraSpec) -> Result<(TensorElement, TensorElement)> {
    let params = spec.params();
    let u = spec.with_kind(Kind::U);
    let kg = spec.with_kind(Kind::GroupAlgebra);
    let sl = SigmaLambda::new(params);
    let eg = Element::from_word(NormalWord::torus_only(g.to_vec()));
    let eh = Element::from_word(NormalWord::torus_only(h.to_vec()));

    let gh = twisted_product_oracle(&eg, &eh, Twist::Left(&sl), &kg)?;
    let mut lhs = TensorElement::zero(vec![u.clone(), kg.clone()]);
    for (w, c) in gh.terms() {
        lhs.add_scaled(&mu(&w.torus, &u, &kg), c);
    }

    let sr = Functional::sigma_rho(params);
    let (mg, mh) = (mu(g, &u, &kg), mu(h, &u, &kg));
    let mut rhs = TensorElement::zero(vec![u.clone(), kg.clone()]);
    for (l1, c1) in mg.terms() {
        for (l2, c2) in mh.terms() {
            let left = twisted_product_oracle(
                &Element::from_word(l1[0].clone()),
                &Element::from_word(l2[0].clone()),
                Twist::Left(&sr),
                &u,
            )?;
            let right = kg.multiply(&Element::from_word(l1[1].clone()), &Element::from_word(l2[1].clone()));
            rhs.add_scaled(&TensorElement::pure(&[(&left, &u), (&right, &kg)]), &(c1 * c2));
        }
    }
    Ok((lhs, rhs))
}

pub fn lemma1_mu_check(g: &[i64], h: &[i64], spec: &AlgebraSpec) -> Result<bool> {
    let (l, r) = lemma1_sides(g, h, spec)?;
    Ok(l == r)
}

/// Commutator table `u_ij` of the torus of `A_λ` together with the
/// declared family `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyInvariant {
    pub commutators: Vec<Vec<Scalar>>,
    pub lambda: Vec<Vec<Scalar>>,
}

/// `u_ij` is read off `Z_i Z_j Z_i⁻¹ Z_j⁻¹ = u_ij · 1`.
pub fn homotopy_invariant(spec: &AlgebraSpec) -> Result<HomotopyInvariant> {
    if !matches!(spec.kind(), Kind::Alambda | Kind::Torus) {
        return Err(Error::WrongAlgebra(format!("expected Alambda, got {}", spec.kind())));
    }
    let t = spec.rank();
    let mut commutators = vec![vec![Scalar::one(); t]; t];
    for (i, row) in commutators.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            if i == j {
                continue;
            }
            let word = [Generator::Torus(i), Generator::Torus(j), Generator::TorusInv(i), Generator::TorusInv(j)];
            let nf = rewrite::normal_form_word(&word, spec);
            *slot = nf
                .as_scalar()
                .ok_or_else(|| Error::WrongAlgebra("torus commutator is not a scalar".into()))?;
        }
    }
    Ok(HomotopyInvariant {
        commutators,
        lambda: spec.params().lambda_table().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{preset, Family};
    use crate::coeffs::make_params;

    fn alambda(rank: usize, l: i64) -> AlgebraSpec {
        let c = preset(Family::A, rank).unwrap();
        let lambda: Vec<_> = if rank > 1 { vec![((0, 1), Scalar::from_int(l))] } else { vec![] };
        let p = make_params(Scalar::from_int(2), &lambda, &c).unwrap();
        AlgebraSpec::new(Kind::Alambda, &p, &c).unwrap()
    }

    #[test]
    fn restriction_is_the_lambda_torus() {
        let a = alambda(2, 3);
        let t = restrict_i_star(&a).unwrap();
        assert_eq!(t.kind(), Kind::Torus);
        assert_eq!(t.c_tt(0, 1), &Scalar::from_int(9));
        let direct = AlgebraSpec::new(Kind::Torus, a.params(), a.cartan()).unwrap();
        assert_eq!(t, direct);
        assert!(restrict_i_star(&a.with_kind(Kind::U)).is_err());
    }

    #[test]
    fn cotensor_torus_only() {
        let a = alambda(2, 3);
        let cap = Cap {
            max_root_letters: 0,
            torus_bound: 1,
        };
        let ker = cotensor_truncated(&a, cap).unwrap();
        assert_eq!(ker.len(), 9);
        for v in &ker {
            assert!(in_cotensor(v).unwrap());
        }
        let kg = a.with_kind(Kind::GroupAlgebra);
        let z1k2 = TensorElement::pure(&[
            (&a.generator(Generator::Torus(0)), &a),
            (&kg.generator(Generator::Torus(1)), &kg),
        ]);
        assert!(!in_cotensor(&z1k2).unwrap());
        assert!(in_cotensor(&TensorElement::one(vec![a.clone(), kg])).unwrap());
        assert!(matches!(
            cotensor_truncated(&a, Cap { max_root_letters: 0, torus_bound: -1 }),
            Err(Error::CapTooSmall(_))
        ));
    }

    #[test]
    fn mu_is_multiplicative() {
        let a = alambda(2, 3);
        assert!(lemma1_mu_check(&[1, 0], &[0, 1], &a).unwrap());
        assert!(lemma1_mu_check(&[0, 0], &[2, -1], &a).unwrap());
        assert!(lemma1_mu_check(&[-2, 3], &[1, -1], &a).unwrap());
        let (l, _) = lemma1_sides(&[1, 0], &[0, 1], &a).unwrap();
        assert_eq!(l.terms().next().unwrap().1, &Scalar::from_int(3));
    }

    #[test]
    fn invariant_values() {
        let inv = homotopy_invariant(&alambda(2, 3)).unwrap();
        assert_eq!(inv.commutators[0][1], Scalar::from_int(9));
        assert_eq!(inv.commutators[1][0], Scalar::new(1, 9).unwrap());
        assert_eq!(inv.lambda[0][1], Scalar::from_int(3));
        let trivial = homotopy_invariant(&alambda(2, 1)).unwrap();
        assert!(trivial.commutators.iter().flatten().all(Scalar::is_one));
        assert_ne!(inv, homotopy_invariant(&alambda(2, 5)).unwrap());
        assert_eq!(homotopy_invariant(&alambda(1, 1)).unwrap().commutators, vec![vec![Scalar::one()]]);
    }
}
