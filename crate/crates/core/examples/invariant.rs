//! The homotopy invariant sees λ² and nothing else.

use qgalois::cartan::preset;
use qgalois::galois::homotopy_invariant;
use qgalois::{make_params, AlgebraSpec, Family, Kind, Scalar};

fn main() -> qgalois::Result<()> {
    let cartan = preset(Family::A, 3)?;
    let q = Scalar::from_int(2);
    let families = [
        [3, 2, 5],
        [-3, 2, 5],
        [3, 2, 7],
    ];
    let mut invariants = Vec::new();
    for f in families {
        let lam = [((0, 1), Scalar::from_int(f[0])), ((0, 2), Scalar::from_int(f[1])), ((1, 2), Scalar::from_int(f[2]))];
        let params = make_params(q.clone(), &lam, &cartan)?;
        let inv = homotopy_invariant(&AlgebraSpec::new(Kind::Alambda, &params, &cartan)?)?;
        println!("λ = {f:?}: u_12 = {}, u_13 = {}, u_23 = {}", inv.commutators[0][1], inv.commutators[0][2], inv.commutators[1][2]);
        invariants.push(inv);
    }
    println!("first two homotopic: {}", invariants[0].commutators == invariants[1].commutators);
    println!("first and third homotopic: {}", invariants[0].commutators == invariants[2].commutators);
    Ok(())
}
