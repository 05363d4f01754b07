//! The coaction of U on A_λ, its multiplicativity, and the covariants of a
//! truncated piece.

use qgalois::cartan::preset;
use qgalois::cli::parse_element;
use qgalois::hopf::{coact, covariants, Cap};
use qgalois::{make_params, AlgebraSpec, Family, Kind, Scalar};

fn main() -> qgalois::Result<()> {
    let cartan = preset(Family::A, 2)?;
    let params = make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &cartan)?;
    let al = AlgebraSpec::new(Kind::Alambda, &params, &cartan)?;

    let (a, b) = (parse_element("X1", &al)?, parse_element("Y2 Z1", &al)?);
    let lhs = coact(&al.multiply(&a, &b), &al)?;
    let rhs = coact(&a, &al)?.multiply(&coact(&b, &al)?);
    println!("δ(X1 · Y2 Z1) has {} terms; equals δ(X1)δ(Y2 Z1): {}", lhs.len(), lhs == rhs);

    let cap = Cap {
        max_root_letters: 1,
        torus_bound: 1,
    };
    let inv = covariants(&al, cap)?;
    println!("covariants with ≤1 root letter, torus in [-1, 1]:");
    for v in &inv {
        println!("  {}", al.format(v));
    }
    Ok(())
}
