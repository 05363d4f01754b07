//! Weighted Serre elements of A_λ mapped into U, for A2, B2 and G2.

use qgalois::algebra::{phi_lambda, serre_element, twisted_to_plain, Side};
use qgalois::cartan::preset;
use qgalois::{make_params, AlgebraSpec, Family, Kind, Scalar};

fn main() -> qgalois::Result<()> {
    for (name, family, lambda) in [("A2", Family::A, 3), ("B2", Family::B, -2), ("G2", Family::G2, 5)] {
        let cartan = preset(family, 2)?;
        let params = make_params(Scalar::new(3, 2)?, &[((0, 1), Scalar::from_int(lambda))], &cartan)?;
        let al = AlgebraSpec::new(Kind::Alambda, &params, &cartan)?;
        let u = AlgebraSpec::new(Kind::U, &params, &cartan)?;
        for (i, j) in [(0, 1), (1, 0)] {
            let weighted = serre_element(&al, Side::Upper, i, j, true)?;
            let moved = twisted_to_plain(&phi_lambda(&weighted, &al)?, &params);
            let plain = serre_element(&u, Side::Upper, i, j, false)?;
            println!("{name} ({}, {}): {} terms, transported = plain: {}", i + 1, j + 1, plain.len(), moved == plain);
        }
    }
    Ok(())
}
