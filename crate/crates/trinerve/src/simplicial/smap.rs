//! Simplicial maps between truncated simplicial sets, stored on
//! nondegenerate simplices and extended to degenerate ones by naturality.

use crate::error::{Error, Result};

use super::sset::{SimplexRef, TruncSSet};

/// A simplicial map: for each dimension up to the stored depth, the image
/// of every nondegenerate source simplex as a [`SimplexRef`] of the target.
/// Degenerate simplices map by applying the same degeneracy word to the
/// image of the core, so degeneracy commutation holds by representation and
/// only face commutation is substantive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMapData {
    /// `images[d][id]` is the image of nondegenerate simplex `id` in
    /// dimension `d`.
    pub images: Vec<Vec<SimplexRef>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapViolation {
    pub dim: usize,
    pub id: u32,
    pub face: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapReport {
    pub checked_dims: usize,
    pub violations: Vec<MapViolation>,
}

impl MapReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

impl SimplicialMapData {
    pub fn depth(&self) -> usize {
        self.images.len().saturating_sub(1)
    }

    /// Image of an arbitrary simplex in EZ form at dimension `dim`.
    pub fn image(&self, dim: usize, r: &SimplexRef) -> Result<SimplexRef> {
        let core = dim - r.degens.len();
        let base = self
            .images
            .get(core)
            .and_then(|v| v.get(r.id as usize))
            .ok_or_else(|| Error::structure("simplex out of range for map data"))?;
        let mut out = base.clone();
        for &e in r.degens.iter().rev() {
            out = out.degenerate(e);
        }
        Ok(out)
    }

    /// The identity map on `x` up to its truncation.
    pub fn identity(x: &TruncSSet) -> Self {
        let images = (0..=x.trunc())
            .map(|d| (0..x.count(d) as u32).map(SimplexRef::nondegenerate).collect())
            .collect();
        SimplicialMapData { images }
    }

    /// The unique map to the one-point complex.
    pub fn to_point(x: &TruncSSet) -> Self {
        let images = (0..=x.trunc())
            .map(|d| {
                (0..x.count(d))
                    .map(|_| {
                        let mut r = SimplexRef::nondegenerate(0);
                        for j in 0..d as u8 {
                            r = r.degenerate(j);
                        }
                        r
                    })
                    .collect()
            })
            .collect();
        SimplicialMapData { images }
    }
}

/// Check that the map commutes with every face operator on all
/// nondegenerate simplices of dimensions `1..=n` (degeneracy commutation
/// holds by the representation).
pub fn verify_simplicial_map(
    f: &SimplicialMapData,
    source: &TruncSSet,
    target: &TruncSSet,
    n: usize,
) -> Result<MapReport> {
    if n > source.trunc() || n > target.trunc() || n > f.depth() {
        return Err(Error::precondition(format!(
            "verification depth {n} exceeds truncation or map depth"
        )));
    }
    let mut violations = Vec::new();
    for dim in 1..=n {
        for id in 0..source.count(dim) as u32 {
            let x = SimplexRef::nondegenerate(id);
            let fx = f.image(dim, &x)?;
            for i in 0..=dim as u8 {
                let lhs = target.face(dim, &fx, i)?;
                let rhs = f.image(dim - 1, &source.face(dim, &x, i)?)?;
                if lhs != rhs {
                    violations.push(MapViolation { dim, id, face: i });
                }
            }
        }
    }
    Ok(MapReport { checked_dims: n, violations })
}

/// True when the map commutes with faces up to dimension `n` and is a
/// bijection on nondegenerate simplices in every dimension `0..=n`.
pub fn is_iso_up_to(
    f: &SimplicialMapData,
    source: &TruncSSet,
    target: &TruncSSet,
    n: usize,
) -> Result<bool> {
    if !verify_simplicial_map(f, source, target, n)?.passes() {
        return Ok(false);
    }
    for dim in 0..=n {
        if source.count(dim) != target.count(dim) {
            return Ok(false);
        }
        let mut seen = vec![false; target.count(dim)];
        for id in 0..source.count(dim) as u32 {
            let img = f.image(dim, &SimplexRef::nondegenerate(id))?;
            if !img.is_nondegenerate() {
                return Ok(false);
            }
            if seen[img.id as usize] {
                return Ok(false);
            }
            seen[img.id as usize] = true;
        }
    }
    Ok(true)
}


/// Extend a map one dimension up when both sides are boundary-determined
/// there: the image of a top simplex is the unique target simplex whose
/// boundary is the image of the source boundary.
pub fn extend_map_by_boundary(
    f: &SimplicialMapData,
    source: &TruncSSet,
    target: &TruncSSet,
) -> Result<SimplicialMapData> {
    let dim = f.depth() + 1;
    if dim > source.trunc() || dim > target.trunc() {
        return Err(Error::precondition("no room to extend the map"));
    }
    let tgt_domain = crate::simplicial::cosk::DimDomain::build(target, dim)?;
    let index = tgt_domain.boundary_index();
    let mut images = f.images.clone();
    let mut at_dim = Vec::with_capacity(source.count(dim));
    for id in 0..source.count(dim) as u32 {
        let x = SimplexRef::nondegenerate(id);
        let mut boundary = Vec::with_capacity(dim + 1);
        for i in 0..=dim as u8 {
            let fx = f.image(dim - 1, &source.face(dim, &x, i)?)?;
            boundary.push(fx.key());
        }
        let cands = index
            .get(&boundary)
            .ok_or_else(|| Error::structure("image boundary has no filler in the target"))?;
        if cands.len() != 1 {
            return Err(Error::structure("target is not boundary-determined"));
        }
        let r = tgt_domain.simplices[cands[0] as usize].clone();
        if !r.is_nondegenerate() {
            return Err(Error::structure("image of a nondegenerate simplex is degenerate"));
        }
        at_dim.push(r);
    }
    images.push(at_dim);
    Ok(SimplicialMapData { images })
}
