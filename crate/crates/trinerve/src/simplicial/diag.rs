//! Diagonals of multisimplicial sets.

use crate::error::{Error, Result};

use super::implicit::{ImplicitSSet, Tuple};

/// An implicitly presented multisimplicial set of some arity.
pub trait MultiImplicit {
    fn arity(&self) -> usize;

    /// Carrier at a multi-level `(n_1, ..., n_k)`.
    fn carrier(&self, levels: &[usize]) -> Result<Vec<Tuple>>;

    /// Face along one axis; other levels unchanged.
    fn face(&self, levels: &[usize], axis: usize, i: u8, x: &Tuple) -> Result<Tuple>;

    /// Degeneracy along one axis.
    fn degeneracy(&self, levels: &[usize], axis: usize, j: u8, x: &Tuple) -> Result<Tuple>;
}

/// The diagonal simplicial set of a multisimplicial set: dimension-`n`
/// carrier is the `(n, ..., n)` level, `d_i` is the simultaneous `i`-th
/// face in every axis, degeneracies likewise.
pub struct Diagonal<'a> {
    inner: &'a dyn MultiImplicit,
}

impl<'a> Diagonal<'a> {
    /// Wraps the multisimplicial set after spot-checking that faces in
    /// distinct axes commute on the lowest interesting levels.
    pub fn new(inner: &'a dyn MultiImplicit) -> Result<Self> {
        let k = inner.arity();
        if k == 0 {
            return Err(Error::structure("multisimplicial arity must be positive"));
        }
        // spot check: axis faces commute pairwise on level (1,...,1)
        let levels = vec![1usize; k];
        for x in inner.carrier(&levels)?.iter().take(16) {
            for a in 0..k {
                for b in (a + 1)..k {
                    for i in 0..=1u8 {
                        for j in 0..=1u8 {
                            let mut la = levels.clone();
                            let ya = inner.face(&la, a, i, x)?;
                            la[a] = 0;
                            let yab = inner.face(&la, b, j, &ya)?;
                            let mut lb = levels.clone();
                            let yb = inner.face(&lb, b, j, x)?;
                            lb[b] = 0;
                            let yba = inner.face(&lb, a, i, &yb)?;
                            if yab != yba {
                                return Err(Error::structure(format!(
                                    "axis faces do not commute (axes {a},{b})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(Diagonal { inner })
    }
}

impl ImplicitSSet for Diagonal<'_> {
    fn carrier(&self, p: usize) -> Result<Vec<Tuple>> {
        self.inner.carrier(&vec![p; self.inner.arity()])
    }

    fn face(&self, p: usize, x: &Tuple, i: u8) -> Result<Tuple> {
        let k = self.inner.arity();
        let mut levels = vec![p; k];
        let mut cur = x.clone();
        for axis in 0..k {
            cur = self.inner.face(&levels, axis, i, &cur)?;
            levels[axis] = p - 1;
        }
        Ok(cur)
    }

    fn degeneracy(&self, p: usize, x: &Tuple, j: u8) -> Result<Tuple> {
        let k = self.inner.arity();
        let mut levels = vec![p; k];
        let mut cur = x.clone();
        for axis in 0..k {
            cur = self.inner.degeneracy(&levels, axis, j, &cur)?;
            levels[axis] = p + 1;
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::implicit::materialize;
    use crate::simplicial::sset::Budget;

    /// Bisimplicial set constant in the second axis, equal to the nerve of
    /// Z/2 in the first: level (p,q) carrier = (Z/2)^p.
    struct NerveZ2TimesConst;

    impl MultiImplicit for NerveZ2TimesConst {
        fn arity(&self) -> usize {
            2
        }
        fn carrier(&self, levels: &[usize]) -> Result<Vec<Tuple>> {
            let p = levels[0];
            let mut out = Vec::new();
            for bits in 0..(1u32 << p) {
                out.push((0..p).map(|i| ((bits >> i) & 1) as i64).collect());
            }
            Ok(out)
        }
        fn face(&self, levels: &[usize], axis: usize, i: u8, x: &Tuple) -> Result<Tuple> {
            if axis == 1 {
                return Ok(x.clone());
            }
            let p = levels[0];
            let i = i as usize;
            let mut y = Vec::with_capacity(p - 1);
            if i == 0 {
                y.extend_from_slice(&x[1..]);
            } else if i == p {
                y.extend_from_slice(&x[..p - 1]);
            } else {
                y.extend_from_slice(&x[..i - 1]);
                y.push((x[i - 1] + x[i]) % 2);
                y.extend_from_slice(&x[i + 1..]);
            }
            Ok(y)
        }
        fn degeneracy(&self, _levels: &[usize], axis: usize, j: u8, x: &Tuple) -> Result<Tuple> {
            if axis == 1 {
                return Ok(x.clone());
            }
            let mut y = x.clone();
            y.insert(j as usize, 0);
            Ok(y)
        }
    }

    #[test]
    fn diagonal_of_constant_axis_equals_first_axis() {
        let m = NerveZ2TimesConst;
        let d = Diagonal::new(&m).unwrap();
        let x = materialize(&d, 4, Budget::default()).unwrap();
        // nerve of Z/2 has exactly one nondegenerate simplex per dimension
        assert_eq!(x.counts(), vec![1, 1, 1, 1, 1]);
        assert!(x.check_simplicial_identities().is_empty());
    }
}
