//! Truncated simplicial sets stored by nondegenerate simplices.
//!
//! Only nondegenerate simplices are stored; every simplex of the set has a
//! unique representation as an iterated degeneracy of a nondegenerate one
//! (Eilenberg-Zilber normal form), carried by [`SimplexRef`].  This gives
//! normalized chain complexes and exact nondegenerate counts for free.

use crate::error::{Error, Result};

/// Enumeration guard: maximum number of simplices materialized per
/// dimension.  Failures are loud, never silent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub per_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { per_dim: 1 << 24 }
    }
}

impl Budget {
    pub fn new(per_dim: usize) -> Self {
        Budget { per_dim }
    }

    pub fn check(&self, dim: usize, needed: usize) -> Result<()> {
        if needed > self.per_dim {
            Err(Error::Budget { dim, needed, budget: self.per_dim })
        } else {
            Ok(())
        }
    }
}

/// A simplex in Eilenberg-Zilber form: a strictly decreasing degeneracy word
/// applied to a nondegenerate simplex `id` of the ambient set.  The
/// dimension is `(dimension of id) + degens.len()` and is tracked by
/// context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplexRef {
    pub degens: Vec<u8>,
    pub id: u32,
}

impl SimplexRef {
    pub fn nondegenerate(id: u32) -> Self {
        SimplexRef { degens: vec![], id }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.degens.is_empty()
    }

    /// Packed key for hash-indexing (degeneracy mask in the high bits).
    /// Valid while dimensions stay below 24 and ids below 2^40.
    pub fn key(&self) -> u64 {
        let mut mask: u64 = 0;
        for &d in &self.degens {
            mask |= 1 << d;
        }
        (mask << 40) | self.id as u64
    }

    /// Prepend `s_j` (the result is one dimension higher).
    pub fn degenerate(&self, j: u8) -> SimplexRef {
        let mut out = self.clone();
        // same insertion rule as for operator words
        let cur = j;
        let mut pos = 0;
        while pos < out.degens.len() && cur <= out.degens[pos] {
            out.degens[pos] += 1;
            pos += 1;
        }
        out.degens.insert(pos, cur);
        out
    }
}

/// Opaque per-simplex payload attached by builders (coordinate tuples).
pub type Label = Vec<i64>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DimData {
    pub count: usize,
    /// Faces of nondegenerate simplices, flattened: entry `id*(dim+1)+i`
    /// is `d_i` of simplex `id`, a [`SimplexRef`] one dimension lower.
    pub faces: Vec<SimplexRef>,
    pub labels: Option<Vec<Label>>,
}

/// A simplicial set truncated at dimension `trunc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSSet {
    trunc: usize,
    dims: Vec<DimData>,
}

/// One simplicial-identity violation, reported not thrown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    pub dim: usize,
    pub id: u32,
    pub i: u8,
    pub j: u8,
}

impl TruncSSet {
    pub fn new(trunc: usize, dims: Vec<DimData>) -> Result<Self> {
        if dims.len() != trunc + 1 {
            return Err(Error::structure("dims must cover 0..=trunc"));
        }
        for (d, data) in dims.iter().enumerate() {
            let expect = if d == 0 { 0 } else { data.count * (d + 1) };
            if data.faces.len() != expect {
                return Err(Error::structure(format!(
                    "dimension {d}: face table has {} entries, expected {expect}",
                    data.faces.len()
                )));
            }
            if let Some(l) = &data.labels {
                if l.len() != data.count {
                    return Err(Error::structure("label table length mismatch"));
                }
            }
        }
        let x = TruncSSet { trunc, dims };
        x.check_face_dims()?;
        Ok(x)
    }

    /// The one-point complex truncated at `trunc`.
    pub fn point(trunc: usize) -> Self {
        let mut dims = vec![DimData::default(); trunc + 1];
        dims[0].count = 1;
        TruncSSet { trunc, dims }
    }

    fn check_face_dims(&self) -> Result<()> {
        for d in 1..=self.trunc {
            for (n, f) in self.dims[d].faces.iter().enumerate() {
                let core = (d - 1).checked_sub(f.degens.len()).ok_or_else(|| {
                    Error::structure(format!("face ref too degenerate at dim {d}"))
                })?;
                if f.id as usize >= self.dims[core].count {
                    return Err(Error::structure(format!(
                        "face table entry {n} at dim {d} points past dimension {core}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn count(&self, dim: usize) -> usize {
        if dim <= self.trunc {
            self.dims[dim].count
        } else {
            0
        }
    }

    /// Nondegenerate counts per dimension 0..=trunc.
    pub fn counts(&self) -> Vec<usize> {
        (0..=self.trunc).map(|d| self.count(d)).collect()
    }

    pub fn dim_data(&self, dim: usize) -> &DimData {
        &self.dims[dim]
    }

    pub fn label(&self, dim: usize, id: u32) -> Option<&Label> {
        self.dims[dim].labels.as_ref().map(|l| &l[id as usize])
    }

    pub fn labels(&self, dim: usize) -> Option<&[Label]> {
        self.dims[dim].labels.as_deref()
    }

    /// `d_i` of a nondegenerate simplex, from the stored table.
    pub fn face_of_nondeg(&self, dim: usize, id: u32, i: u8) -> &SimplexRef {
        &self.dims[dim].faces[id as usize * (dim + 1) + i as usize]
    }

    /// `d_i` of an arbitrary simplex given in EZ form at dimension `dim`.
    pub fn face(&self, dim: usize, r: &SimplexRef, i: u8) -> Result<SimplexRef> {
        if dim == 0 || i as usize > dim {
            return Err(Error::structure(format!("d_{i} invalid on dimension {dim}")));
        }
        let mut degens = r.degens.clone();
        let mut cur = i;
        let mut idx = 0;
        while idx < degens.len() {
            let e = degens[idx];
            if cur < e {
                degens[idx] -= 1;
                idx += 1;
            } else if cur == e || cur == e + 1 {
                degens.remove(idx);
                return Ok(SimplexRef { degens, id: r.id });
            } else {
                cur -= 1;
                idx += 1;
            }
        }
        // the face hits the nondegenerate core; reapply the adjusted
        // degeneracy word on top of the stored face, innermost first
        let core_dim = dim - r.degens.len();
        let mut out = self.face_of_nondeg(core_dim, r.id, cur).clone();
        for &e in degens.iter().rev() {
            out = out.degenerate(e);
        }
        Ok(out)
    }

    /// `s_j` of an arbitrary simplex at dimension `dim`.
    pub fn degeneracy(&self, dim: usize, r: &SimplexRef, j: u8) -> Result<SimplexRef> {
        if j as usize > dim {
            return Err(Error::structure(format!("s_{j} invalid on dimension {dim}")));
        }
        Ok(r.degenerate(j))
    }

    /// All simplices of dimension `dim` (nondegenerate and degenerate) in a
    /// deterministic order: by core dimension, then core id, then word.
    pub fn all_simplices_at(&self, dim: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for core in 0..=dim.min(self.trunc) {
            let k = dim - core;
            let words = degeneracy_words(core, k);
            for id in 0..self.dims[core].count as u32 {
                for w in &words {
                    out.push(SimplexRef { degens: w.clone(), id });
                }
            }
        }
        out
    }

    /// Exhaustive `d_i d_j = d_{j-1} d_i` check on all nondegenerate
    /// simplices of dimensions `2..=trunc`.  Returns violations.
    pub fn check_simplicial_identities(&self) -> Vec<IdentityViolation> {
        let mut out = Vec::new();
        for dim in 2..=self.trunc {
            for id in 0..self.dims[dim].count as u32 {
                let x = SimplexRef::nondegenerate(id);
                for j in 1..=dim as u8 {
                    for i in 0..j {
                        let dj = self.face(dim, &x, j).unwrap();
                        let lhs = self.face(dim - 1, &dj, i).unwrap();
                        let di = self.face(dim, &x, i).unwrap();
                        let rhs = self.face(dim - 1, &di, j - 1).unwrap();
                        if lhs != rhs {
                            out.push(IdentityViolation { dim, id, i, j });
                        }
                    }
                }
            }
        }
        out
    }

    /// Truncate back to a lower dimension (faces are unaffected).
    pub fn truncate(&self, n: usize) -> Result<TruncSSet> {
        if n > self.trunc {
            return Err(Error::structure("cannot truncate upwards"));
        }
        Ok(TruncSSet { trunc: n, dims: self.dims[..=n].to_vec() })
    }

    /// Append a new top dimension (used by the coskeletal extension).
    pub fn push_dim(&mut self, data: DimData) -> Result<()> {
        self.trunc += 1;
        self.dims.push(data);
        self.check_face_dims()
    }
}

/// All EZ degeneracy words raising dimension `from` by `k` steps: strictly
/// decreasing index lists, valid at each application step.  Deterministic
/// (lexicographic in the applied order).
pub fn degeneracy_words(from: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::with_capacity(k);
    // choose applied-order indices i_1 < i_2 < ... < i_k with i_r <= from + r - 1
    fn rec(from: usize, k: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            let mut w = cur.clone();
            w.reverse(); // stored strictly decreasing
            out.push(w);
            return;
        }
        let r = cur.len() + 1;
        let max = (from + r - 1) as u8;
        for i in start..=max {
            cur.push(i);
            rec(from, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(from, k, 0, &mut cur, &mut out);
    out
}


#[cfg(test)]
mod tests {
    use super::tests_support::standard_simplex;
    use super::*;

    #[test]
    fn standard_simplex_counts_and_identities() {
        let x = standard_simplex(2, 4);
        assert_eq!(x.counts(), vec![3, 3, 1, 0, 0]);
        assert!(x.check_simplicial_identities().is_empty());
        let d3 = standard_simplex(3, 4);
        assert_eq!(d3.counts(), vec![4, 6, 4, 1, 0]);
        assert!(d3.check_simplicial_identities().is_empty());
    }

    #[test]
    fn fault_injection_is_detected() {
        let mut x = standard_simplex(2, 2);
        // corrupt one face entry of the 2-simplex
        x.dims[2].faces[1] = SimplexRef::nondegenerate(0);
        let v = x.check_simplicial_identities();
        assert!(!v.is_empty());
        // every violation touches the corrupted simplex
        assert!(v.iter().all(|viol| viol.dim == 2 && viol.id == 0));
    }

    #[test]
    fn face_through_degeneracies() {
        let x = standard_simplex(1, 3);
        // s_0 of the edge 01, then d_0, lands back on a degenerate vertex
        let e = SimplexRef::nondegenerate(0); // the edge (0,1) has id 0 at dim 1
        let s0e = x.degeneracy(1, &e, 0).unwrap();
        assert_eq!(s0e.degens, vec![0]);
        // d_1 s_0 = id
        assert_eq!(x.face(2, &s0e, 1).unwrap(), e);
        // d_0 s_0 = id
        assert_eq!(x.face(2, &s0e, 0).unwrap(), e);
        // d_2 s_0 e = s_0 d_1 e = s_0(vertex 0)
        let got = x.face(2, &s0e, 2).unwrap();
        let v0 = x.face(1, &e, 1).unwrap();
        assert_eq!(got, x.degeneracy(0, &v0, 0).unwrap());
    }

    #[test]
    fn all_simplices_counts_match_binomials() {
        // number of p-simplices of Delta[n] is C(n+1+p, p+1) .. checked
        // against direct enumeration for the point: C(p+1-1,...)=1
        let pt = TruncSSet::point(4);
        for p in 0..=4 {
            assert_eq!(pt.all_simplices_at(p).len(), 1);
        }
        // Delta[1]: all p-simplices = monotone maps [p]->[1] = p+2
        let d1 = standard_simplex(1, 4);
        for p in 0..=4 {
            assert_eq!(d1.all_simplices_at(p).len(), p + 2);
        }
    }

    #[test]
    fn degeneracy_words_count() {
        // words [c] <- [d] biject with surjections, counted by C(d, d-c)
        fn binom(n: usize, k: usize) -> usize {
            if k > n {
                return 0;
            }
            let mut r = 1usize;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        for c in 0..4usize {
            for k in 0..4usize {
                let d = c + k;
                assert_eq!(degeneracy_words(c, k).len(), binom(d, k), "c={c} k={k}");
            }
        }
    }
}
