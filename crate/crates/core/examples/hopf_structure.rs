//! Coproduct, counit and antipode on U, with the antipode axiom checked
//! on a sample word.

use qgalois::cartan::preset;
use qgalois::cli::parse_element;
use qgalois::hopf::{antipode, comultiply, counit};
use qgalois::{make_params, AlgebraSpec, Element, Family, Kind, Scalar};

fn main() -> qgalois::Result<()> {
    let cartan = preset(Family::A, 2)?;
    let params = make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &cartan)?;
    let u = AlgebraSpec::new(Kind::U, &params, &cartan)?;

    for text in ["E1", "F2", "K1", "E1 F1", "F1 E2 K2^-1"] {
        let x = parse_element(text, &u)?;
        let d = comultiply(&x, &u)?;
        println!("Δ({text}) has {} terms", d.len());
        println!("ε({text}) = {}", counit(&x, &u)?);
        println!("S({text}) = {}", u.format(&antipode(&x, &u)?));

        // m(S ⊗ id)Δ = ε 1
        let mut sum = Element::zero();
        for (legs, c) in d.terms() {
            let s = antipode(&Element::from_word(legs[0].clone()), &u)?;
            let p = u.multiply(&s, &Element::from_word(legs[1].clone()));
            sum.add_scaled(&p, c);
        }
        println!("  m(S ⊗ id)Δ = {}\n", u.format(&sum));
    }
    Ok(())
}
