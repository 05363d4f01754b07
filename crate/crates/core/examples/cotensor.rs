//! The map μ(K^γ) = K^γ ⊗ K^γ is multiplicative, and the torus part of the
//! cotensor product has dimension (2n+1)^t.

use qgalois::cartan::preset;
use qgalois::galois::{cotensor_truncated, lemma1_mu_check};
use qgalois::hopf::Cap;
use qgalois::{make_params, AlgebraSpec, Family, Kind, Scalar};

fn main() -> qgalois::Result<()> {
    let cartan = preset(Family::A, 2)?;
    let params = make_params(Scalar::from_int(2), &[((0, 1), Scalar::new(-1, 4)?)], &cartan)?;
    let al = AlgebraSpec::new(Kind::Alambda, &params, &cartan)?;

    for (g, h) in [([1, 0], [0, 1]), ([2, -1], [-3, 1])] {
        println!("μ multiplicative at K^{g:?}, K^{h:?}: {}", lemma1_mu_check(&g, &h, &al)?);
    }
    for n in 1..=2 {
        let cap = Cap {
            max_root_letters: 0,
            torus_bound: n,
        };
        let basis = cotensor_truncated(&al, cap)?;
        println!("n = {n}: kernel dimension {} (expected {})", basis.len(), (2 * n + 1).pow(2));
    }
    Ok(())
}
