//! Homotopy groups of minimal reduced Kan complexes, read off directly:
//! `π_n` is the set of `n`-simplices with every face at the basepoint, the
//! group law comes from horn-composition fillers.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::abgrp::FiniteGroup;
use crate::error::{Error, Result};
use crate::homology::smith_normal_form;
use crate::simplicial::{kan_horn_check, DimDomain, HornMode, SimplexRef, TruncSSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiGroup {
    pub n: usize,
    pub order: usize,
    pub table: FiniteGroup,
    /// Invariant factors (each > 1) when the group is abelian.
    pub abelian_invariants: Option<Vec<i64>>,
}

impl PiGroup {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Isomorphic to `Z/d1 ⊕ ...` with the given invariant factors?
    pub fn is_isomorphic_to(&self, factors: &[i64]) -> bool {
        match &self.abelian_invariants {
            Some(inv) => {
                let mut want: Vec<i64> = factors.iter().copied().filter(|&d| d > 1).collect();
                want.sort();
                let mut have = inv.clone();
                have.sort();
                want == have
            }
            None => false,
        }
    }
}

/// The `m`-fold degenerate basepoint (normal form `s_{m-1} ... s_0` on the
/// unique vertex).
fn basepoint_ref(m: usize) -> SimplexRef {
    let mut r = SimplexRef::nondegenerate(0);
    for _ in 0..m {
        r = r.degenerate(0);
    }
    r
}

/// Invariant factors of a finite abelian group given by its table, via the
/// Smith normal form of the relation lattice on one generator per element.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<i64> {
    let n = g.order();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n as u32 {
        for j in 0..n as u32 {
            let mut row = vec![0i64; n];
            row[i as usize] += 1;
            row[j as usize] += 1;
            row[g.mul(i, j) as usize] -= 1;
            rows.push(row);
        }
    }
    let (diag, _) = smith_normal_form(&rows);
    diag.into_iter()
        .filter(|d| d > &BigInt::from(1))
        .map(|d| i64::try_from(d).expect("desk-scale invariant factor"))
        .collect()
}

/// Read the homotopy groups `π_1, ..., π_max_n` of a reduced minimal Kan
/// complex; preconditions (reduced, Kan in range, minimal in range) are
/// verified and failures carry a witness.
pub fn minimal_homotopy_groups(x: &TruncSSet, max_n: usize) -> Result<Vec<PiGroup>> {
    if x.count(0) != 1 {
        return Err(Error::precondition("complex is not reduced (one vertex required)"));
    }
    if max_n + 1 > x.trunc() {
        return Err(Error::precondition(format!(
            "pi_{max_n} needs truncation at least {}",
            max_n + 1
        )));
    }
    // Kan in the tested range
    for m in 2..=(max_n + 1) {
        for k in 0..=m {
            let r = kan_horn_check(x, m, k, HornMode::Exhaustive)?;
            if !r.all_fillable() {
                return Err(Error::precondition(format!(
                    "complex is not Kan: {} of {} horns at (n,k)=({m},{k}) have no filler",
                    r.horns_tested - r.fillable,
                    r.horns_tested
                )));
            }
        }
    }

    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(pi_n(x, n)?);
    }
    Ok(out)
}

fn pi_n(x: &TruncSSet, n: usize) -> Result<PiGroup> {
    let below = basepoint_ref(n - 1).key();
    let dom_n = DimDomain::build(x, n)?;
    // carrier: n-simplices all of whose faces are the degenerate basepoint
    let mut carrier: Vec<u32> = Vec::new();
    for idx in 0..dom_n.len() as u32 {
        if (0..=n).all(|i| dom_n.face_key(idx, i) == below) {
            carrier.push(idx);
        }
    }
    // basepoint first
    let bp_key = basepoint_ref(n).key();
    let bp_pos = carrier
        .iter()
        .position(|&c| dom_n.keys[c as usize] == bp_key)
        .ok_or_else(|| Error::precondition("degenerate basepoint missing from carrier"))?;
    carrier.swap(0, bp_pos);
    let index_of: HashMap<u64, usize> = carrier
        .iter()
        .enumerate()
        .map(|(i, &c)| (dom_n.keys[c as usize], i))
        .collect();

    let dom_up = DimDomain::build(x, n + 1)?;
    // fillers indexed by their faces away from position n
    let mut filler_index: HashMap<Vec<u64>, Vec<u32>> = HashMap::new();
    for idx in 0..dom_up.len() as u32 {
        let key: Vec<u64> = (0..=n + 1)
            .filter(|&i| i != n)
            .map(|i| dom_up.face_key(idx, i))
            .collect();
        filler_index.entry(key).or_default().push(idx);
    }

    // minimality: distinct carrier elements must not be homotopic rel
    // boundary; a homotopy is an (n+1)-simplex with faces
    // (*, ..., *, x, y)
    for (xi, &cx) in carrier.iter().enumerate() {
        for (yi, &cy) in carrier.iter().enumerate() {
            if xi == yi {
                continue;
            }
            // homotopy faces: d_i = basepoint (i <= n-1), d_n = x, d_{n+1} = y
            let mut full: Vec<u64> = vec![basepoint_ref(n).key(); n];
            full.push(dom_n.keys[cx as usize]);
            full.push(dom_n.keys[cy as usize]);
            // search all (n+1)-simplices with exactly this boundary
            let probe: Vec<u64> =
                (0..=n + 1).filter(|&i| i != n).map(|i| full[i]).collect();
            if let Some(cands) = filler_index.get(&probe) {
                for &z in cands {
                    if dom_up.face_key(z, n) == full[n] {
                        return Err(Error::precondition(format!(
                            "complex is not minimal at dimension {n}: two simplices share a homotopy"
                        )));
                    }
                }
            }
        }
    }

    // group law by horn composition: faces d_i = basepoint (i < n-1),
    // d_{n-1} = x, d_{n+1} = y, composite = d_n(filler)
    let size = carrier.len();
    let mut table = vec![vec![0u32; size]; size];
    for (xi, &cx) in carrier.iter().enumerate() {
        for (yi, &cy) in carrier.iter().enumerate() {
            let mut faces: Vec<u64> = vec![basepoint_ref(n).key(); n.saturating_sub(1)];
            faces.push(dom_n.keys[cx as usize]); // position n-1
            faces.push(dom_n.keys[cy as usize]); // position n+1 (slot after the gap)
            let probe = faces;
            let cands = filler_index
                .get(&probe)
                .ok_or_else(|| Error::precondition("horn composition has no filler"))?;
            let mut composite: Option<usize> = None;
            for &z in cands {
                let c = dom_up.face_key(z, n);
                let ci = *index_of
                    .get(&c)
                    .ok_or_else(|| Error::precondition("composite escapes the carrier"))?;
                match composite {
                    None => composite = Some(ci),
                    Some(prev) if prev == ci => {}
                    Some(_) => {
                        return Err(Error::precondition(
                            "horn composition is not well defined (minimality fails)",
                        ))
                    }
                }
            }
            table[xi][yi] = composite.unwrap() as u32;
        }
    }
    let group = FiniteGroup::new(table)
        .map_err(|e| Error::precondition(format!("pi_{n} law is not a group: {e}")))?;
    let abelian = group.is_abelian();
    if n >= 2 && !abelian {
        return Err(Error::precondition(format!("pi_{n} is not abelian")));
    }
    let invariants = if abelian { Some(abelian_invariants(&group)) } else { None };
    Ok(PiGroup { n, order: size, table: group, abelian_invariants: invariants })
}
