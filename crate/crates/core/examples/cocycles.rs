//! The forms σ_λ, σ̃_λ, ρ, ρ⁻¹ and σ_ρ on generator pairs.

use qgalois::cartan::preset;
use qgalois::cocycle::{BilinearForm, Convolution, Functional, SigmaTilde};
use qgalois::{make_params, AlgebraSpec, Family, Generator, Kind, Scalar};

fn main() -> qgalois::Result<()> {
    let cartan = preset(Family::A, 2)?;
    let params = make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &cartan)?;
    let u = AlgebraSpec::new(Kind::U, &params, &cartan)?;

    let st = SigmaTilde::new(&params);
    let rho = Functional::rho(&params);
    let rho_inv = Functional::rho_inverse(&params);
    let sr = Functional::sigma_rho(&params);
    let conv = Convolution::new(&st, &rho_inv, &u);

    let pairs = [
        (Generator::Torus(0), Generator::Torus(1)),
        (Generator::Upper(0), Generator::Lower(0)),
        (Generator::Upper(0), Generator::Lower(1)),
        (Generator::Lower(0), Generator::Upper(0)),
    ];
    println!("{:<12} {:>8} {:>8} {:>8} {:>12}", "pair", "σ̃", "ρ", "σ_ρ", "σ̃ ∗ ρ⁻¹");
    for (a, b) in pairs {
        let (x, y) = (u.generator(a), u.generator(b));
        println!(
            "{:<12} {:>8} {:>8} {:>8} {:>12}",
            format!("{},{}", u.generator_name(a), u.generator_name(b)),
            st.eval(&x, &y)?.to_string(),
            rho.eval(&x, &y)?.to_string(),
            sr.eval(&x, &y)?.to_string(),
            conv.eval(&x, &y)?.to_string(),
        );
    }
    Ok(())
}
