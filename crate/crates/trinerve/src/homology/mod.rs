//! Integral and field-coefficient homology of truncated simplicial sets via
//! normalized chains and Smith normal form.

pub mod snf;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{SimplexRef, TruncSSet};

pub use snf::smith_normal_form;

/// Column-major sparse integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Per column, sorted `(row, value)` entries with nonzero values.
    pub columns: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[i as usize][j] = v;
            }
        }
        m
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }
}

/// Normalized chain complex of a truncated simplicial set: the degree-`d`
/// basis is the nondegenerate `d`-simplices and the boundary is the
/// alternating face sum with degenerate faces dropped.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    /// Basis sizes for degrees `0..=trunc`.
    pub dims: Vec<usize>,
    /// `boundaries[d-1]` is the matrix of `∂_d : C_d -> C_{d-1}`.
    pub boundaries: Vec<SparseIntMatrix>,
}

pub fn chain_complex(x: &TruncSSet) -> Result<ChainComplex> {
    let dims: Vec<usize> = (0..=x.trunc()).map(|d| x.count(d)).collect();
    let mut boundaries = Vec::with_capacity(x.trunc());
    for d in 1..=x.trunc() {
        let mut columns = Vec::with_capacity(dims[d]);
        for id in 0..dims[d] as u32 {
            let mut acc: std::collections::BTreeMap<u32, i64> = std::collections::BTreeMap::new();
            let r = SimplexRef::nondegenerate(id);
            for i in 0..=d as u8 {
                let f = x.face(d, &r, i)?;
                if f.is_nondegenerate() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    *acc.entry(f.id).or_insert(0) += sign;
                }
            }
            columns.push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
        }
        boundaries.push(SparseIntMatrix { rows: dims[d - 1], cols: dims[d], columns });
    }
    let cc = ChainComplex { dims, boundaries };
    cc.check_dd_zero()?;
    Ok(cc)
}

impl ChainComplex {
    /// Verifies `∂ ∘ ∂ = 0` in every degree where both boundaries exist.
    pub fn check_dd_zero(&self) -> Result<()> {
        for d in 1..self.boundaries.len() {
            let hi = &self.boundaries[d];
            let lo = &self.boundaries[d - 1];
            for (j, col) in hi.columns.iter().enumerate() {
                let mut acc: std::collections::BTreeMap<u32, i64> =
                    std::collections::BTreeMap::new();
                for &(i, v) in col {
                    for &(k, w) in &lo.columns[i as usize] {
                        *acc.entry(k).or_insert(0) += v * w;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return Err(Error::structure(format!(
                        "boundary squared is nonzero on basis element {j} of degree {}",
                        d + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Coefficient ring for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coeff {
    #[serde(rename = "z")]
    Z,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "zp")]
    Zp(u64),
}

impl std::fmt::Display for Coeff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coeff::Z => write!(f, "z"),
            Coeff::Q => write!(f, "q"),
            Coeff::Zp(p) => write!(f, "zp:{p}"),
        }
    }
}

/// One homology group: free rank plus torsion coefficients (empty over a
/// field).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<i64>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
}

/// Dense-equivalent size limit for integral Smith reduction.
pub const SNF_ENTRY_LIMIT: usize = 25_000_000;

/// Homology of `x` in the requested degrees.  Degree `n` requires
/// truncation at least `n+1` so the answer is exact; larger requests are
/// rejected, never silently truncated.
pub fn homology(x: &TruncSSet, degrees: &[usize], coeff: Coeff) -> Result<HomologyResult> {
    if x.count(0) == 0 {
        return Err(Error::structure("empty complex has no homology"));
    }
    let cc = chain_complex(x)?;
    let max_exact = x.trunc().saturating_sub(1);
    let mut groups = Vec::new();
    for &n in degrees {
        if n > max_exact {
            return Err(Error::DegreeRange { degree: n, max: max_exact });
        }
        let group = match coeff {
            Coeff::Z => {
                let (rank_lo, _) = snf_of_boundary(&cc, n)?;
                let (rank_hi, torsion) = snf_of_boundary(&cc, n + 1)?;
                HomologyGroup {
                    degree: n,
                    betti: cc.dims[n] - rank_lo - rank_hi,
                    torsion,
                    coeff: coeff.to_string(),
                }
            }
            Coeff::Q => {
                let rank_lo = rank_over_z(boundary(&cc, n));
                let rank_hi = rank_over_z(boundary(&cc, n + 1));
                HomologyGroup {
                    degree: n,
                    betti: cc.dims[n] - rank_lo - rank_hi,
                    torsion: vec![],
                    coeff: coeff.to_string(),
                }
            }
            Coeff::Zp(p) => {
                if p < 2 || !is_prime(p) {
                    return Err(Error::structure(format!("{p} is not a prime")));
                }
                let rank_lo = rank_mod_p(boundary(&cc, n), p);
                let rank_hi = rank_mod_p(boundary(&cc, n + 1), p);
                HomologyGroup {
                    degree: n,
                    betti: cc.dims[n] - rank_lo - rank_hi,
                    torsion: vec![],
                    coeff: coeff.to_string(),
                }
            }
        };
        groups.push(group);
    }
    Ok(HomologyResult { groups })
}

fn boundary(cc: &ChainComplex, d: usize) -> Option<&SparseIntMatrix> {
    if d == 0 || d > cc.boundaries.len() {
        None
    } else {
        Some(&cc.boundaries[d - 1])
    }
}

fn snf_of_boundary(cc: &ChainComplex, d: usize) -> Result<(usize, Vec<i64>)> {
    let m = match boundary(cc, d) {
        None => return Ok((0, vec![])),
        Some(m) => m,
    };
    if m.rows * m.cols > SNF_ENTRY_LIMIT {
        return Err(Error::structure(format!(
            "integral reduction of a {}x{} matrix exceeds the SNF budget; request field coefficients",
            m.rows, m.cols
        )));
    }
    let (diag, rank) = smith_normal_form(&m.to_dense());
    let mut torsion = Vec::new();
    for d in diag {
        if d > BigInt::from(1) {
            torsion.push(i64::try_from(d).map_err(|_| {
                Error::structure("torsion coefficient exceeds i64")
            })?);
        }
    }
    Ok((rank, torsion))
}

/// Exact rank of an integer matrix over Q (equal to the rank over Z),
/// by incremental sparse echelon with unit-pivot preference and
/// fraction-free cross-multiplication otherwise.
pub fn rank_over_z(m: Option<&SparseIntMatrix>) -> usize {
    let m = match m {
        None => return 0,
        Some(m) => m,
    };
    // echelon basis: rows sorted by leading position; each a sparse vector
    let mut basis: Vec<Vec<(u32, i128)>> = Vec::new();
    let mut lead_of: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    for col in &m.columns {
        let mut v: Vec<(u32, i128)> = col.iter().map(|&(i, x)| (i, x as i128)).collect();
        loop {
            v.retain(|&(_, x)| x != 0);
            if v.is_empty() {
                break;
            }
            reduce_content(&mut v);
            let lead = v[0].0;
            match lead_of.get(&lead) {
                None => {
                    let idx = basis.len();
                    basis.push(v);
                    lead_of.insert(lead, idx);
                    break;
                }
                Some(&idx) => {
                    let b = &basis[idx];
                    let a0 = v[0].1;
                    let b0 = b[0].1;
                    let g = gcd_i128(a0, b0);
                    let (ma, mb) = (b0 / g, a0 / g);
                    // v <- ma * v - mb * b  (clears the lead)
                    v = sparse_combine(&v, ma, b, -mb);
                }
            }
        }
        if basis.len() == m.rows {
            break;
        }
    }
    basis.len()
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn reduce_content(v: &mut [(u32, i128)]) {
    let mut g: i128 = 0;
    for &(_, x) in v.iter() {
        g = gcd_i128(g, x);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for e in v.iter_mut() {
            e.1 /= g;
        }
    }
}

fn sparse_combine(a: &[(u32, i128)], ca: i128, b: &[(u32, i128)], cb: i128) -> Vec<(u32, i128)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (pos, val) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            let e = (a[i].0, a[i].1.checked_mul(ca).expect("rank arithmetic overflow"));
            i += 1;
            e
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let e = (b[j].0, b[j].1.checked_mul(cb).expect("rank arithmetic overflow"));
            j += 1;
            e
        } else {
            let x = a[i]
                .1
                .checked_mul(ca)
                .and_then(|p| b[j].1.checked_mul(cb).and_then(|q| p.checked_add(q)))
                .expect("rank arithmetic overflow");
            i += 1;
            j += 1;
            (a[i - 1].0, x)
        };
        if val != 0 {
            out.push((pos, val));
        }
    }
    out
}

/// Rank over the prime field Z/p by dense modular row echelon (bitset rows
/// when p = 2).
pub fn rank_mod_p(m: Option<&SparseIntMatrix>, p: u64) -> usize {
    let m = match m {
        None => return 0,
        Some(m) => m,
    };
    if p == 2 {
        return rank_mod_2(m);
    }
    let mut basis: Vec<Vec<u64>> = Vec::new(); // dense rows of length m.rows
    let mut lead_of: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for col in &m.columns {
        let mut v = vec![0u64; m.rows];
        for &(i, x) in col {
            v[i as usize] = (x.rem_euclid(p as i64)) as u64;
        }
        loop {
            let lead = match v.iter().position(|&x| x != 0) {
                None => break,
                Some(l) => l,
            };
            match lead_of.get(&lead) {
                None => {
                    // normalize so the lead is 1
                    let inv = mod_inverse(v[lead], p);
                    for x in v.iter_mut() {
                        *x = *x * inv % p;
                    }
                    lead_of.insert(lead, basis.len());
                    basis.push(v);
                    break;
                }
                Some(&idx) => {
                    let c = v[lead];
                    let b = &basis[idx];
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = (*x + (p - c % p) * y) % p;
                    }
                }
            }
        }
        if basis.len() == m.rows {
            break;
        }
    }
    basis.len()
}

fn rank_mod_2(m: &SparseIntMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut lead_of: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for col in &m.columns {
        let mut v = vec![0u64; words];
        for &(i, x) in col {
            if x.rem_euclid(2) == 1 {
                v[i as usize / 64] ^= 1 << (i % 64);
            }
        }
        loop {
            let lead = match first_bit(&v) {
                None => break,
                Some(l) => l,
            };
            match lead_of.get(&lead) {
                None => {
                    lead_of.insert(lead, basis.len());
                    basis.push(v);
                    break;
                }
                Some(&idx) => {
                    let b = &basis[idx];
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
            }
        }
        if basis.len() == m.rows {
            break;
        }
    }
    basis.len()
}

fn first_bit(v: &[u64]) -> Option<usize> {
    for (w, &x) in v.iter().enumerate() {
        if x != 0 {
            return Some(w * 64 + x.trailing_zeros() as usize);
        }
    }
    None
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, fermat
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::FiniteGroup;
    use crate::cat::{nerve, ordinal_category, FiniteCategory};
    use crate::simplicial::Budget;

    fn betti_torsion(x: &TruncSSet, n: usize) -> (usize, Vec<i64>) {
        let h = homology(x, &[n], Coeff::Z).unwrap();
        (h.groups[0].betti, h.groups[0].torsion.clone())
    }

    #[test]
    fn point_homology() {
        let x = TruncSSet::point(4);
        for n in 0..=3 {
            let (b, t) = betti_torsion(&x, n);
            assert_eq!((b, t), (usize::from(n == 0), vec![]));
        }
    }

    #[test]
    fn delta1_boundary_is_difference_of_vertices() {
        let c = ordinal_category(1);
        let x = nerve(&c, 2, Budget::default()).unwrap();
        let cc = chain_complex(&x).unwrap();
        assert_eq!(cc.dims, vec![2, 1, 0]);
        let d1 = &cc.boundaries[0];
        let col = &d1.columns[0];
        let vals: Vec<i64> = col.iter().map(|&(_, v)| v).collect();
        let mut sorted = vals.clone();
        sorted.sort();
        assert_eq!(sorted, vec![-1, 1]);
    }

    #[test]
    fn cyclic_group_homology() {
        // H_*(Z/m) = Z, Z/m, 0, Z/m, 0, ... for degrees 0..3
        for m in [2usize, 3] {
            let c = FiniteCategory::from_group(&FiniteGroup::cyclic(m));
            let x = nerve(&c, 5, Budget::default()).unwrap();
            assert_eq!(betti_torsion(&x, 0), (1, vec![]));
            assert_eq!(betti_torsion(&x, 1), (0, vec![m as i64]));
            assert_eq!(betti_torsion(&x, 2), (0, vec![]));
            assert_eq!(betti_torsion(&x, 3), (0, vec![m as i64]));
        }
    }

    #[test]
    fn field_betti_numbers_of_z2_nerve() {
        let c = FiniteCategory::from_group(&FiniteGroup::cyclic(2));
        let x = nerve(&c, 5, Budget::default()).unwrap();
        let hq = homology(&x, &[0, 1, 2, 3], Coeff::Q).unwrap();
        let q: Vec<usize> = hq.groups.iter().map(|g| g.betti).collect();
        assert_eq!(q, vec![1, 0, 0, 0]);
        let h2 = homology(&x, &[0, 1, 2, 3], Coeff::Zp(2)).unwrap();
        let f2: Vec<usize> = h2.groups.iter().map(|g| g.betti).collect();
        // universal coefficients: dim H_n(X; F_2) = b_n + t_n + t_{n-1}
        assert_eq!(f2, vec![1, 1, 1, 1]);
        // F_3 sees nothing
        let h3 = homology(&x, &[0, 1, 2, 3], Coeff::Zp(3)).unwrap();
        let f3: Vec<usize> = h3.groups.iter().map(|g| g.betti).collect();
        assert_eq!(f3, vec![1, 0, 0, 0]);
    }

    #[test]
    fn degree_out_of_range_is_rejected() {
        let c = FiniteCategory::from_group(&FiniteGroup::cyclic(2));
        let x = nerve(&c, 3, Budget::default()).unwrap();
        assert!(matches!(
            homology(&x, &[3], Coeff::Z),
            Err(Error::DegreeRange { degree: 3, max: 2 })
        ));
    }

    #[test]
    fn rank_routines_agree_on_random_matrices() {
        let mut state: u64 = 7;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let rows = (next() % 6 + 1) as usize;
            let cols = (next() % 6 + 1) as usize;
            let mut dense = vec![vec![0i64; cols]; rows];
            let mut columns = vec![vec![]; cols];
            for j in 0..cols {
                for i in 0..rows {
                    let v = (next() % 5) as i64 - 2;
                    if v != 0 {
                        dense[i][j] = v;
                        columns[j].push((i as u32, v));
                    }
                }
            }
            let m = SparseIntMatrix { rows, cols, columns };
            let (_, snf_rank) = smith_normal_form(&dense);
            assert_eq!(rank_over_z(Some(&m)), snf_rank);
            // rank over F_p is at most the rational rank
            assert!(rank_mod_p(Some(&m), 2) <= snf_rank);
            assert!(rank_mod_p(Some(&m), 5) <= snf_rank);
        }
    }
}
