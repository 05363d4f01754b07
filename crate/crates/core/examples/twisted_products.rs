//! Twisting U by σ_ρ from first principles reproduces the product of A_λ,
//! and the two-sided ρ twist turns gr U into U.

use qgalois::algebra::{phi_lambda, twisted_to_plain};
use qgalois::cartan::preset;
use qgalois::cli::parse_element;
use qgalois::cocycle::{twisted_product_oracle, Functional, Twist};
use qgalois::{make_params, AlgebraSpec, Family, Kind, Scalar};

fn main() -> qgalois::Result<()> {
    let cartan = preset(Family::A, 2)?;
    let params = make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &cartan)?;
    let al = AlgebraSpec::new(Kind::Alambda, &params, &cartan)?;
    let u = al.with_kind(Kind::U);
    let gru = al.with_kind(Kind::GrU);

    let sr = Functional::sigma_rho(&params);
    for (a, b) in [("X1", "Y1"), ("X1", "X2"), ("Z1", "X2"), ("Y2", "Y1 Z2")] {
        let (x, y) = (parse_element(a, &al)?, parse_element(b, &al)?);
        let structural = twisted_to_plain(&phi_lambda(&al.multiply(&x, &y), &al)?, &params);
        let (xu, yu) = (
            twisted_to_plain(&phi_lambda(&x, &al)?, &params),
            twisted_to_plain(&phi_lambda(&y, &al)?, &params),
        );
        let oracle = twisted_product_oracle(&xu, &yu, Twist::Left(&sr), &u)?;
        println!("{a} · {b}: {}   agree: {}", u.format(&oracle), oracle == structural);
    }

    let rho = Functional::rho(&params);
    let rho_inv = Functional::rho_inverse(&params);
    let (e, f) = (parse_element("E1", &gru)?, parse_element("F1", &gru)?);
    let tw = Twist::TwoSided { form: &rho, inverse: &rho_inv };
    println!("E1 ·ρ F1 in gr U = {}", u.format(&twisted_product_oracle(&e, &f, tw, &gru)?));
    println!("E1 F1 in U       = {}", u.format(&u.multiply(&e, &f)));
    Ok(())
}
