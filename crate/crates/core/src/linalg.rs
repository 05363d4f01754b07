//! Exact sparse linear algebra over [`Scalar`].

use std::collections::BTreeMap;

use crate::coeffs::Scalar;

/// Sparse vector indexed by an ordered key.
pub type SparseVec<K> = BTreeMap<K, Scalar>;

fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Scalar, x: &SparseVec<K>) {
    for (k, v) in x {
        let entry = y.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += &(a * v);
        if entry.is_zero() {
            y.remove(k);
        }
    }
}

/// Echelon reduction of a list of columns.
///
/// Returns a basis of the kernel of the linear map sending the `i`-th unit
/// vector to `columns[i]`, each basis vector keyed by column index, together
/// with the rank.
pub fn kernel<K: Ord + Clone>(columns: &[SparseVec<K>]) -> (Vec<SparseVec<usize>>, usize) {
    // pivot key -> (column with that key as its smallest entry, scaled to 1; its combination)
    let mut pivots: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (idx, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        v.retain(|_, c| !c.is_zero());
        let mut track: SparseVec<usize> = BTreeMap::from([(idx, Scalar::one())]);
        loop {
            let Some((key, lead)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                kernel.push(track);
                break;
            };
            match pivots.get(&key) {
                Some((pcol, ptrack)) => {
                    let a = -lead;
                    axpy(&mut v, &a, pcol);
                    axpy(&mut track, &a, ptrack);
                }
                None => {
                    let inv = lead.inv().expect("nonzero lead");
                    v.values_mut().for_each(|c| *c *= &inv);
                    track.values_mut().for_each(|c| *c *= &inv);
                    pivots.insert(key, (v, track));
                    break;
                }
            }
        }
    }
    let rank = pivots.len();
    (kernel, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn small_kernel() {
        // columns (1,2), (2,4), (0,1): kernel spanned by 2 e0 - e1
        let cols: Vec<SparseVec<u8>> = vec![
            BTreeMap::from([(0, s(1)), (1, s(2))]),
            BTreeMap::from([(0, s(2)), (1, s(4))]),
            BTreeMap::from([(1, s(1))]),
        ];
        let (ker, rank) = kernel(&cols);
        assert_eq!(rank, 2);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        // apply the map to the kernel vector
        let mut image: SparseVec<u8> = BTreeMap::new();
        for (i, c) in v {
            axpy(&mut image, c, &cols[*i]);
        }
        assert!(image.is_empty());
        assert!(v.contains_key(&1));
    }

    #[test]
    fn zero_columns_are_kernel() {
        let cols: Vec<SparseVec<u8>> = vec![BTreeMap::new(), BTreeMap::from([(3, s(0))])];
        let (ker, rank) = kernel(&cols);
        assert_eq!(rank, 0);
        assert_eq!(ker.len(), 2);
    }
}
