//! Products and normal forms in the five algebras over A2, q = 2, λ_12 = 3.

use qgalois::cartan::preset;
use qgalois::cli::parse_element;
use qgalois::{make_params, AlgebraSpec, Family, Kind, Scalar};

fn main() -> qgalois::Result<()> {
    let cartan = preset(Family::A, 2)?;
    let params = make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &cartan)?;

    let cases = [
        (Kind::U, "E1 F1", "F1 E1"),
        (Kind::GrU, "E1 F1", "K1 E2"),
        (Kind::Alambda, "X1 Y1", "Z2 X1"),
        (Kind::Torus, "Z1 Z2", "Z1^-1"),
        (Kind::GroupAlgebra, "K1 K2^2", "K1^-1"),
    ];
    for (kind, a, b) in cases {
        let s = AlgebraSpec::new(kind, &params, &cartan)?;
        let (x, y) = (parse_element(a, &s)?, parse_element(b, &s)?);
        println!("{kind:>8}: ({a}) * ({b}) = {}", s.format(&s.multiply(&x, &y)));
    }
    Ok(())
}
