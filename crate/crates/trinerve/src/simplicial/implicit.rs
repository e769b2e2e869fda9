//! Implicitly presented simplicial sets: an enumerable carrier per
//! dimension with computable face and degeneracy functions.  Used for
//! cocycle-style complexes whose simplices are tuples with computed faces.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::sset::{Budget, DimData, SimplexRef, TruncSSet};

/// Simplex payload of an implicit set: a coordinate tuple.
pub type Tuple = Vec<i64>;

pub trait ImplicitSSet {
    /// Complete enumeration of the `p`-simplices, duplicate-free and in a
    /// deterministic order.
    fn carrier(&self, p: usize) -> Result<Vec<Tuple>>;

    /// `d_i` on a `p`-simplex (`p >= 1`, `i <= p`).
    fn face(&self, p: usize, x: &Tuple, i: u8) -> Result<Tuple>;

    /// `s_j` on a `p`-simplex (`j <= p`).
    fn degeneracy(&self, p: usize, x: &Tuple, j: u8) -> Result<Tuple>;
}

/// Materialize an implicit set up to dimension `n`: nondegenerate simplices
/// are identified by the generic Eilenberg-Zilber test (`x` is degenerate
/// iff `s_j d_j x = x` for some `j`), faces are rewritten as
/// [`SimplexRef`]s, and carrier tuples are preserved as labels.
pub fn materialize(im: &dyn ImplicitSSet, n: usize, budget: Budget) -> Result<TruncSSet> {
    let mut dims: Vec<DimData> = Vec::with_capacity(n + 1);
    // normal form of every carrier tuple, per dimension
    let mut norm: Vec<HashMap<Tuple, SimplexRef>> = Vec::with_capacity(n + 1);

    for p in 0..=n {
        let carrier = im.carrier(p)?;
        budget.check(p, carrier.len())?;
        let mut count = 0usize;
        let mut labels: Vec<Tuple> = Vec::new();
        let mut map: HashMap<Tuple, SimplexRef> = HashMap::with_capacity(carrier.len());
        let mut nondeg_tuples: Vec<Tuple> = Vec::new();
        for x in carrier {
            if map.contains_key(&x) {
                return Err(Error::structure(format!(
                    "carrier at dimension {p} enumerates a duplicate tuple"
                )));
            }
            let mut degenerate = None;
            if p > 0 {
                for j in 0..p as u8 {
                    let y = im.face(p, &x, j)?;
                    if im.degeneracy(p - 1, &y, j)? == x {
                        degenerate = Some((j, y));
                        break;
                    }
                }
            }
            match degenerate {
                None => {
                    let id = count as u32;
                    count += 1;
                    map.insert(x.clone(), SimplexRef::nondegenerate(id));
                    labels.push(x.clone());
                    nondeg_tuples.push(x);
                }
                Some((j, y)) => {
                    let under = norm[p - 1].get(&y).cloned().ok_or_else(|| {
                        Error::structure(format!(
                            "tuple missing from carrier at dimension {}",
                            p - 1
                        ))
                    })?;
                    map.insert(x, under.degenerate(j));
                }
            }
        }
        // faces of the nondegenerate simplices
        let mut faces: Vec<SimplexRef> = Vec::new();
        if p > 0 {
            faces.reserve(count * (p + 1));
            for x in &nondeg_tuples {
                for i in 0..=p as u8 {
                    let y = im.face(p, x, i)?;
                    let r = norm[p - 1].get(&y).ok_or_else(|| {
                        Error::structure(format!(
                            "face of a {p}-simplex is missing from the carrier below"
                        ))
                    })?;
                    faces.push(r.clone());
                }
            }
        }
        dims.push(DimData { count, faces, labels: Some(labels) });
        norm.push(map);
    }
    TruncSSet::new(n, dims)
}

/// The constant one-point implicit set (every carrier is a single empty
/// tuple).
pub struct PointImplicit;

impl ImplicitSSet for PointImplicit {
    fn carrier(&self, _p: usize) -> Result<Vec<Tuple>> {
        Ok(vec![vec![]])
    }
    fn face(&self, _p: usize, _x: &Tuple, _i: u8) -> Result<Tuple> {
        Ok(vec![])
    }
    fn degeneracy(&self, _p: usize, _x: &Tuple, _j: u8) -> Result<Tuple> {
        Ok(vec![])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_materializes_to_point() {
        let x = materialize(&PointImplicit, 3, Budget::default()).unwrap();
        assert_eq!(x.counts(), vec![1, 0, 0, 0]);
        assert!(x.check_simplicial_identities().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        struct Big;
        impl ImplicitSSet for Big {
            fn carrier(&self, p: usize) -> Result<Vec<Tuple>> {
                Ok((0..(p as i64 + 1) * 10).map(|k| vec![k]).collect())
            }
            fn face(&self, _p: usize, x: &Tuple, _i: u8) -> Result<Tuple> {
                Ok(vec![x[0] / 10])
            }
            fn degeneracy(&self, _p: usize, x: &Tuple, _j: u8) -> Result<Tuple> {
                Ok(vec![x[0] * 10])
            }
        }
        let err = materialize(&Big, 2, Budget::new(15)).unwrap_err();
        match err {
            Error::Budget { dim, .. } => assert_eq!(dim, 1),
            e => panic!("expected budget error, got {e}"),
        }
    }
}
