//! Boundary-compatible tuple enumeration and coskeletal extension.
//!
//! A `p`-simplex above the truncation is a `(p+1)`-tuple of `(p-1)`-simplices
//! `(w_0, ..., w_p)` satisfying the boundary incidence `d_i w_j = d_{j-1} w_i`
//! for `i < j`; faces are the projections.  The same enumerator drives the
//! coskeletal extension, streaming identity checks at the coskeletal
//! dimension, and horn-filling sweeps.

use std::collections::HashMap;

use crate::error::Result;

use super::sset::{Budget, DimData, SimplexRef, TruncSSet};

/// A snapshot of one dimension: every simplex (degenerate included) with
/// precomputed face keys, in the deterministic `all_simplices_at` order.
pub struct DimDomain {
    pub dim: usize,
    pub simplices: Vec<SimplexRef>,
    /// Packed keys of the simplices themselves.
    pub keys: Vec<u64>,
    /// Face keys, flattened `idx * (dim+1) + i`.
    pub face_keys: Vec<u64>,
}

impl DimDomain {
    pub fn build(x: &TruncSSet, dim: usize) -> Result<DimDomain> {
        let simplices = x.all_simplices_at(dim);
        let mut keys = Vec::with_capacity(simplices.len());
        let mut face_keys = Vec::new();
        if dim > 0 {
            face_keys.reserve(simplices.len() * (dim + 1));
        }
        for r in &simplices {
            keys.push(r.key());
            for i in 0..=dim as u8 {
                if dim > 0 {
                    face_keys.push(x.face(dim, r, i)?.key());
                }
            }
        }
        Ok(DimDomain { dim, simplices, keys, face_keys })
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn face_key(&self, idx: u32, i: usize) -> u64 {
        self.face_keys[idx as usize * (self.dim + 1) + i]
    }

    /// Index from full boundary vectors to the simplices with that boundary.
    pub fn boundary_index(&self) -> HashMap<Vec<u64>, Vec<u32>> {
        let mut map: HashMap<Vec<u64>, Vec<u32>> = HashMap::new();
        let w = self.dim + 1;
        for idx in 0..self.len() as u32 {
            let b = self.face_keys[idx as usize * w..(idx as usize + 1) * w].to_vec();
            map.entry(b).or_default().push(idx);
        }
        map
    }
}

/// Enumerates tuples `(w_0, ..., w_p)` over `domain` (of dimension `p-1`)
/// subject to `d_i w_j = d_{j-1} w_i`, optionally skipping one slot (horn
/// enumeration).  Slots are filled in increasing order; candidates for slot
/// `j` are looked up by their pinned faces `i < j` (`i != skip`).
pub struct TupleEnumerator<'a> {
    domain: &'a DimDomain,
    arity: usize,
    skip: Option<usize>,
    /// For each slot, the pinned face positions, and a map from the pinned
    /// face keys to candidate indices.
    slot_pins: Vec<Vec<usize>>,
    slot_maps: Vec<HashMap<Vec<u64>, Vec<u32>>>,
}

impl<'a> TupleEnumerator<'a> {
    pub fn new(domain: &'a DimDomain, arity: usize, skip: Option<usize>) -> Self {
        let mut slot_pins = Vec::with_capacity(arity);
        let mut slot_maps = Vec::with_capacity(arity);
        for j in 0..arity {
            if Some(j) == skip {
                slot_pins.push(vec![]);
                slot_maps.push(HashMap::new());
                continue;
            }
            // vertices have no faces, so tuples of them are unconstrained
            let pins: Vec<usize> = if domain.dim == 0 {
                vec![]
            } else {
                (0..j).filter(|i| Some(*i) != skip).collect()
            };
            let mut map: HashMap<Vec<u64>, Vec<u32>> = HashMap::new();
            for idx in 0..domain.len() as u32 {
                let key: Vec<u64> = pins.iter().map(|&i| domain.face_key(idx, i)).collect();
                map.entry(key).or_default().push(idx);
            }
            slot_pins.push(pins);
            slot_maps.push(map);
        }
        TupleEnumerator { domain, arity, skip, slot_pins, slot_maps }
    }

    /// Run the enumeration, calling `sink` with the slot indices (entries at
    /// a skipped slot are `u32::MAX`).  The sink returns `false` to stop.
    pub fn for_each(&self, mut sink: impl FnMut(&[u32]) -> Result<bool>) -> Result<bool> {
        let mut tuple = vec![u32::MAX; self.arity];
        self.descend(0, &mut tuple, &mut sink)
    }

    /// Candidates for slot `j` given the earlier entries of `tuple`
    /// (used by randomized horn sampling).
    pub fn slot_candidates(&self, tuple: &[u32], j: usize) -> &[u32] {
        let key: Vec<u64> = self.slot_pins[j]
            .iter()
            .map(|&i| self.domain.face_key(tuple[i], j - 1))
            .collect();
        match self.slot_maps[j].get(&key) {
            Some(v) => v,
            None => &[],
        }
    }

    fn descend(
        &self,
        j: usize,
        tuple: &mut Vec<u32>,
        sink: &mut impl FnMut(&[u32]) -> Result<bool>,
    ) -> Result<bool> {
        if j == self.arity {
            return sink(tuple);
        }
        if Some(j) == self.skip {
            return self.descend(j + 1, tuple, sink);
        }
        // pinned faces of slot j come from the earlier slots
        let key: Vec<u64> = self.slot_pins[j]
            .iter()
            .map(|&i| self.domain.face_key(tuple[i], j - 1))
            .collect();
        if let Some(cands) = self.slot_maps[j].get(&key) {
            for &c in cands {
                tuple[j] = c;
                if !self.descend(j + 1, tuple, sink)? {
                    return Ok(false);
                }
            }
        }
        tuple[j] = u32::MAX;
        Ok(true)
    }
}

/// The set of boundary vectors of degenerate `p`-simplices over `domain`
/// (dimension `p-1`), used to drop degeneracies during coskeletal
/// enumeration: the candidate tuple is degenerate iff its slot-key vector
/// equals the boundary of some `s_j y`.
pub fn degenerate_boundaries(x: &TruncSSet, domain: &DimDomain) -> Result<HashMap<Vec<u64>, ()>> {
    let p = domain.dim + 1;
    let mut set = HashMap::new();
    for y in &domain.simplices {
        for j in 0..p as u8 {
            let sy = x.degeneracy(domain.dim, y, j)?;
            let mut bod = Vec::with_capacity(p + 1);
            for i in 0..=p as u8 {
                bod.push(x.face(p, &sy, i)?.key());
            }
            set.insert(bod, ());
        }
    }
    Ok(set)
}

/// Extend a truncated simplicial set coskeletally from its truncation to
/// `target`: in each new dimension the nondegenerate simplices are the
/// boundary-compatible tuples that are not degeneracy images, with faces
/// the projections.
pub fn coskeletal_extend(x: &TruncSSet, target: usize, budget: Budget) -> Result<TruncSSet> {
    let mut x = x.clone();
    while x.trunc() < target {
        let p = x.trunc() + 1;
        let domain = DimDomain::build(&x, p - 1)?;
        let degen = degenerate_boundaries(&x, &domain)?;
        let en = TupleEnumerator::new(&domain, p + 1, None);
        let mut faces: Vec<SimplexRef> = Vec::new();
        let mut count = 0usize;
        let mut over = None;
        en.for_each(|tuple| {
            let keyvec: Vec<u64> = tuple.iter().map(|&t| domain.keys[t as usize]).collect();
            if degen.contains_key(&keyvec) {
                return Ok(true);
            }
            if count >= budget.per_dim {
                over = Some(count + 1);
                return Ok(false);
            }
            count += 1;
            for &t in tuple.iter() {
                faces.push(domain.simplices[t as usize].clone());
            }
            Ok(true)
        })?;
        if let Some(needed) = over {
            return Err(crate::error::Error::Budget { dim: p, needed, budget: budget.per_dim });
        }
        x.push_dim(DimData { count, faces, labels: None })?;
    }
    Ok(x)
}

/// Statistics from a streaming sweep over one coskeletal dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoskStreamReport {
    pub dim: usize,
    pub tuples: usize,
    pub nondegenerate: usize,
    pub identity_violations: usize,
}

/// Stream the compatible tuples of dimension `trunc+1` without storing
/// them, verifying all `d_i d_j = d_{j-1} d_i` identities on each (the
/// face of a tuple simplex is its slot, faces of slots come from the
/// domain's tables).
pub fn check_cosk_dimension_streaming(x: &TruncSSet) -> Result<CoskStreamReport> {
    let p = x.trunc() + 1;
    let domain = DimDomain::build(x, p - 1)?;
    let degen = degenerate_boundaries(x, &domain)?;
    let en = TupleEnumerator::new(&domain, p + 1, None);
    let mut tuples = 0usize;
    let mut nondeg = 0usize;
    let mut violations = 0usize;
    en.for_each(|tuple| {
        tuples += 1;
        // d_i (d_j w) = d_{j-1} (d_i w): slot faces against slot faces
        if p >= 2 {
            for j in 1..=p {
                for i in 0..j {
                    let lhs = domain.face_key(tuple[j], i);
                    let rhs = domain.face_key(tuple[i], j - 1);
                    if lhs != rhs {
                        violations += 1;
                    }
                }
            }
        }
        let keyvec: Vec<u64> = tuple.iter().map(|&t| domain.keys[t as usize]).collect();
        if !degen.contains_key(&keyvec) {
            nondeg += 1;
        }
        Ok(true)
    })?;
    Ok(CoskStreamReport { dim: p, tuples, nondegenerate: nondeg, identity_violations: violations })
}
