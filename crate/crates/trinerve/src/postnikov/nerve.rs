//! The geometric nerve of the realized bicategorical group and the
//! comparison map onto the twisted total complex.
//!
//! A `p`-simplex carries group elements on edges (with the triangle
//! closure `F_{ij} F_{jk} = F_{ik}`), `A`-values on triangles subject to
//! the tetrahedron constraint
//! `F_{ijk} + F_{ikl} = F_{ijl} + ^{F_ij}F_{jkl} + h(F_ij,F_jk,F_kl)`,
//! and `B`-values on tetrahedra.  In dimension 4 the coherence axiom of
//! the representation reduces, through the canonical cells of the
//! bicategorical group, to the twisted cocycle equation
//! `^{s1}F_{1234} - F_{0124} + F_{0134} - F_{0234} + F_{0123} = t(x, s)`
//! with `x` the six associated base coordinates; the independent
//! certificates for this reduction are the horn-filling sweep of the
//! twisted complex and the coherence checks of the structure constants.

use std::collections::HashMap;

use crate::abgrp::Elem;
use crate::emac::MImplicit;
use crate::error::{Error, Result};
use crate::simplicial::{
    coskeletal_extend, materialize, Budget, ImplicitSSet, SimplexRef, SimplicialMapData,
    TruncSSet, Tuple,
};

use super::BicatGroup;

fn increasing(p: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(p: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=p {
            cur.push(v);
            rec(p, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(p, k, 0, &mut cur, &mut out);
    out
}

pub struct BicatNerveImplicit<'a> {
    pub bg: &'a BicatGroup,
}

pub(crate) struct NerveFamily<'a> {
    tuple: &'a [i64],
    pairs: Vec<(usize, usize)>,
    tris: Vec<(usize, usize, usize)>,
    tets: Vec<(usize, usize, usize, usize)>,
}

impl<'a> NerveFamily<'a> {
    pub(crate) fn new(p: usize, tuple: &'a [i64]) -> Self {
        let pairs = increasing(p, 2).into_iter().map(|v| (v[0], v[1])).collect();
        let tris = increasing(p, 3).into_iter().map(|v| (v[0], v[1], v[2])).collect();
        let tets =
            increasing(p, 4).into_iter().map(|v| (v[0], v[1], v[2], v[3])).collect();
        NerveFamily { tuple, pairs, tris, tets }
    }

    /// Edge value, identity on repeated indices.
    pub(crate) fn edge(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 0;
        }
        let pos = self.pairs.iter().position(|&q| q == (i, j)).unwrap();
        self.tuple[pos] as u32
    }

    pub(crate) fn tri(&self, i: usize, j: usize, k: usize) -> usize {
        if i == j || j == k {
            return 0;
        }
        let pos = self.tris.iter().position(|&q| q == (i, j, k)).unwrap();
        self.tuple[self.pairs.len() + pos] as usize
    }

    pub(crate) fn tet(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        if i == j || j == k || k == l {
            return 0;
        }
        let pos = self.tets.iter().position(|&q| q == (i, j, k, l)).unwrap();
        self.tuple[self.pairs.len() + self.tris.len() + pos] as usize
    }
}

/// The base coordinates of the comparison image of a simplex whose last
/// vertex is `m`, shared by the comparison map and the dimension-4 filter:
/// `x1 = F_{02m} - ^{F01}F_{12m} - F_{01m}`, and so on per the displayed
/// coordinate change.
fn phi_x_coords(
    bg: &BicatGroup,
    fam: &NerveFamily<'_>,
    m: usize,
) -> Result<[usize; 6]> {
    let aco = bg.data.a.coeff().clone();
    let a_at = |i: usize| aco.elem_at(i).unwrap();
    let s1 = fam.edge(0, 1);
    let s02 = fam.edge(0, 2);
    let f12m = bg.data.a.act(s1, &a_at(fam.tri(1, 2, m)))?;
    let f13m = bg.data.a.act(s1, &a_at(fam.tri(1, 3, m)))?;
    let f23m = bg.data.a.act(s02, &a_at(fam.tri(2, 3, m)))?;
    let f02m = a_at(fam.tri(0, 2, m));
    let f01m = a_at(fam.tri(0, 1, m));
    let f03m = a_at(fam.tri(0, 3, m));
    let x1 = aco.sub(&aco.sub(&f02m, &f12m)?, &f01m)?;
    let x2 = aco.sub(&aco.add(&aco.sub(&f12m, &f13m)?, &f03m)?, &f02m)?;
    let x3 = aco.sub(&f13m, &f03m)?;
    let x4 = aco.sub(&aco.sub(&f13m, &f12m)?, &f23m)?;
    let x5 = aco.sub(&f23m, &f13m)?;
    let x6 = aco.neg(&f23m)?;
    Ok([
        aco.elem_index(&x1)?,
        aco.elem_index(&x2)?,
        aco.elem_index(&x3)?,
        aco.elem_index(&x4)?,
        aco.elem_index(&x5)?,
        aco.elem_index(&x6)?,
    ])
}

impl BicatNerveImplicit<'_> {
    /// The tetrahedron constraint at `(i,j,k,l)`.
    fn tet_constraint(
        &self,
        fam: &NerveFamily<'_>,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    ) -> Result<bool> {
        let bg = self.bg;
        let lhs = bg.add_a(fam.tri(i, j, k), fam.tri(i, k, l))?;
        let h = bg.h_idx(fam.edge(i, j), fam.edge(j, k), fam.edge(k, l))?;
        let rhs = bg.add_a(
            bg.add_a(fam.tri(i, j, l), bg.act_a(fam.edge(i, j), fam.tri(j, k, l))?)?,
            h,
        )?;
        Ok(lhs == rhs)
    }

    /// The two sides of the dimension-4 coherence equation, as `B`-elements.
    pub(crate) fn cr1_sides(&self, fam: &NerveFamily<'_>) -> Result<(Elem, Elem)> {
        let bg = self.bg;
        let bco = bg.data.b.coeff().clone();
        let bval = |idx: usize| bco.elem_at(idx).unwrap();
        let s = [fam.edge(0, 1), fam.edge(1, 2), fam.edge(2, 3), fam.edge(3, 4)];
        let mut lhs = bg.act_b(s[0], &bval(fam.tet(1, 2, 3, 4)))?;
        lhs = bco.sub(&lhs, &bval(fam.tet(0, 1, 2, 4)))?;
        lhs = bco.add(&lhs, &bval(fam.tet(0, 1, 3, 4)))?;
        lhs = bco.sub(&lhs, &bval(fam.tet(0, 2, 3, 4)))?;
        lhs = bco.add(&lhs, &bval(fam.tet(0, 1, 2, 3)))?;
        let xs = phi_x_coords(bg, fam, 4)?;
        let rhs = bg.t_val(&xs, &s);
        Ok((lhs, rhs))
    }

    fn cr1_ok(&self, tuple: &[i64]) -> Result<bool> {
        let fam = NerveFamily::new(4, tuple);
        let (lhs, rhs) = self.cr1_sides(&fam)?;
        Ok(lhs == rhs)
    }
}

impl ImplicitSSet for BicatNerveImplicit<'_> {
    fn carrier(&self, p: usize) -> Result<Vec<Tuple>> {
        if p > 4 {
            return Err(Error::structure(
                "bicategorical nerve carriers are explicit only up to dimension 4",
            ));
        }
        if p == 0 {
            return Ok(vec![vec![]]);
        }
        let bg = self.bg;
        let n = bg.g().order();
        let na = bg.data.a_order();
        let nb = bg.data.b_order();
        let pairs: Vec<(usize, usize)> =
            increasing(p, 2).into_iter().map(|v| (v[0], v[1])).collect();
        let tris: Vec<(usize, usize, usize)> =
            increasing(p, 3).into_iter().map(|v| (v[0], v[1], v[2])).collect();
        let tets: Vec<(usize, usize, usize, usize)> =
            increasing(p, 4).into_iter().map(|v| (v[0], v[1], v[2], v[3])).collect();
        let len = pairs.len() + tris.len() + tets.len();
        let mut out = Vec::new();
        // spine elements determine every edge
        let mut spine = vec![0u32; p];
        loop {
            let mut tuple = vec![0i64; len];
            for (pos, &(i, j)) in pairs.iter().enumerate() {
                let mut e = 0u32;
                for sp in spine.iter().take(j).skip(i) {
                    e = bg.g().mul(e, *sp);
                }
                tuple[pos] = e as i64;
            }
            self.enum_triangles(&mut tuple, 0, &pairs, &tris, &tets, na, nb, &mut out)?;
            let mut pos = p;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                spine[pos] += 1;
                if (spine[pos] as usize) < n {
                    break;
                }
                spine[pos] = 0;
            }
        }
    }

    fn face(&self, p: usize, x: &Tuple, i: u8) -> Result<Tuple> {
        let fam = NerveFamily::new(p, x);
        let m = i as usize;
        let v = |a: usize| if a < m { a } else { a + 1 };
        let q = p - 1;
        let mut out = Vec::new();
        for t in increasing(q, 2) {
            out.push(fam.edge(v(t[0]), v(t[1])) as i64);
        }
        for t in increasing(q, 3) {
            out.push(fam.tri(v(t[0]), v(t[1]), v(t[2])) as i64);
        }
        for t in increasing(q, 4) {
            out.push(fam.tet(v(t[0]), v(t[1]), v(t[2]), v(t[3])) as i64);
        }
        Ok(out)
    }

    fn degeneracy(&self, p: usize, x: &Tuple, j: u8) -> Result<Tuple> {
        let fam = NerveFamily::new(p, x);
        let m = j as usize;
        let v = |a: usize| if a <= m { a } else { a - 1 };
        let q = p + 1;
        let mut out = Vec::new();
        for t in increasing(q, 2) {
            out.push(fam.edge(v(t[0]), v(t[1])) as i64);
        }
        for t in increasing(q, 3) {
            out.push(fam.tri(v(t[0]), v(t[1]), v(t[2])) as i64);
        }
        for t in increasing(q, 4) {
            out.push(fam.tet(v(t[0]), v(t[1]), v(t[2]), v(t[3])) as i64);
        }
        Ok(out)
    }
}

impl BicatNerveImplicit<'_> {
    #[allow(clippy::too_many_arguments)]
    fn enum_triangles(
        &self,
        tuple: &mut Vec<i64>,
        at: usize,
        pairs: &[(usize, usize)],
        tris: &[(usize, usize, usize)],
        tets: &[(usize, usize, usize, usize)],
        na: usize,
        nb: usize,
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if at == tris.len() {
            return self.enum_tets(tuple, 0, pairs, tris, tets, nb, out);
        }
        let dim = pairs.last().map(|&(_, j)| j).unwrap_or(1);
        for val in 0..na {
            tuple[pairs.len() + at] = val as i64;
            // check every tetrahedron whose triangles are all assigned
            let fam = NerveFamily::new(dim, tuple);
            let mut ok = true;
            for &(i, j, k, l) in tets.iter() {
                if last_triangle_position(tris, (i, j, k, l)) != at {
                    continue;
                }
                if !self.tet_constraint(&fam, i, j, k, l)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.enum_triangles(tuple, at + 1, pairs, tris, tets, na, nb, out)?;
            }
        }
        tuple[pairs.len() + at] = 0;
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn enum_tets(
        &self,
        tuple: &mut Vec<i64>,
        at: usize,
        pairs: &[(usize, usize)],
        tris: &[(usize, usize, usize)],
        tets: &[(usize, usize, usize, usize)],
        nb: usize,
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if at == tets.len() {
            if tets.len() == 5 && !self.cr1_ok(tuple)? {
                return Ok(());
            }
            out.push(tuple.clone());
            return Ok(());
        }
        for val in 0..nb {
            tuple[pairs.len() + tris.len() + at] = val as i64;
            self.enum_tets(tuple, at + 1, pairs, tris, tets, nb, out)?;
        }
        tuple[pairs.len() + tris.len() + at] = 0;
        Ok(())
    }
}

fn last_triangle_position(
    tris: &[(usize, usize, usize)],
    tet: (usize, usize, usize, usize),
) -> usize {
    let (i, j, k, l) = tet;
    [(j, k, l), (i, k, l), (i, j, l), (i, j, k)]
        .iter()
        .map(|t| tris.iter().position(|q| q == t).unwrap())
        .max()
        .unwrap()
}

/// The geometric nerve of the bicategorical group, truncated at `n <= 5`
/// (dimension 5 coskeletally).
pub fn bicat_nerve(bg: &BicatGroup, n: usize, budget: Budget) -> Result<TruncSSet> {
    if n > 5 {
        return Err(Error::structure("bicategorical nerve truncation capped at 5"));
    }
    let im = BicatNerveImplicit { bg };
    let x = materialize(&im, n.min(4), budget)?;
    if n == 5 {
        coskeletal_extend(&x, 5, budget)
    } else {
        Ok(x)
    }
}

/// The comparison map from the nerve of the bicategorical group to the
/// twisted total complex, given by the displayed coordinate change in
/// every dimension up to 4.
pub fn phi(bg: &BicatGroup, nerve: &TruncSSet, m: &TruncSSet) -> Result<SimplicialMapData> {
    let depth = nerve.trunc().min(m.trunc()).min(4);
    let p = &bg.data;
    let aco = p.a.coeff().clone();
    let bco = p.b.coeff().clone();
    let a_at = |idx: usize| aco.elem_at(idx).unwrap();
    // resolve an M carrier tuple to a SimplexRef of the materialized m
    let mi = MImplicit::new(p);
    let mut resolve: Vec<HashMap<Tuple, SimplexRef>> = Vec::new();
    for d in 0..=depth {
        let mut map = HashMap::new();
        for t in mi.carrier(d)? {
            let mut degens: Vec<u8> = Vec::new();
            let mut cur = t.clone();
            let mut q = d;
            'peel: loop {
                if q == 0 {
                    break;
                }
                for j in 0..q as u8 {
                    let y = mi.face(q, &cur, j)?;
                    if mi.degeneracy(q - 1, &y, j)? == cur {
                        degens.push(j);
                        cur = y;
                        q -= 1;
                        continue 'peel;
                    }
                }
                break;
            }
            let id = m
                .labels(q)
                .and_then(|ls| ls.iter().position(|l| *l == cur))
                .ok_or_else(|| Error::structure("labels missing for resolution"))?;
            let mut r = SimplexRef::nondegenerate(id as u32);
            for &j in degens.iter().rev() {
                r = r.degenerate(j);
            }
            map.insert(t, r);
        }
        resolve.push(map);
    }

    let mut images: Vec<Vec<SimplexRef>> = Vec::with_capacity(depth + 1);
    for d in 0..=depth {
        let mut at_d = Vec::with_capacity(nerve.count(d));
        for id in 0..nerve.count(d) as u32 {
            let label = nerve
                .label(d, id)
                .ok_or_else(|| Error::structure("nerve labels missing"))?;
            let fam = NerveFamily::new(d, label);
            let target: Tuple = match d {
                0 => vec![],
                1 => vec![fam.edge(0, 1) as i64],
                2 => {
                    let x1 = aco.neg(&a_at(fam.tri(0, 1, 2)))?;
                    vec![
                        aco.elem_index(&x1)? as i64,
                        fam.edge(0, 1) as i64,
                        fam.edge(1, 2) as i64,
                    ]
                }
                3 => {
                    let s1 = fam.edge(0, 1);
                    let f123 = p.a.act(s1, &a_at(fam.tri(1, 2, 3)))?;
                    let f023 = a_at(fam.tri(0, 2, 3));
                    let f013 = a_at(fam.tri(0, 1, 3));
                    let u1 = bco.neg(&bco.elem_at(fam.tet(0, 1, 2, 3))?)?;
                    let x1 = aco.sub(&aco.sub(&f023, &f123)?, &f013)?;
                    let x2 = aco.sub(&f123, &f023)?;
                    let x3 = aco.neg(&f123)?;
                    vec![
                        bco.elem_index(&u1)? as i64,
                        aco.elem_index(&x1)? as i64,
                        aco.elem_index(&x2)? as i64,
                        aco.elem_index(&x3)? as i64,
                        s1 as i64,
                        fam.edge(1, 2) as i64,
                        fam.edge(2, 3) as i64,
                    ]
                }
                4 => {
                    let s1 = fam.edge(0, 1);
                    let b_at = |idx: usize| bco.elem_at(idx).unwrap();
                    let f1234 = p.b.act(s1, &b_at(fam.tet(1, 2, 3, 4)))?;
                    let f0124 = b_at(fam.tet(0, 1, 2, 4));
                    let f0134 = b_at(fam.tet(0, 1, 3, 4));
                    let f0234 = b_at(fam.tet(0, 2, 3, 4));
                    let u1 = bco.sub(&bco.add(&bco.sub(&f1234, &f0124)?, &f0134)?, &f0234)?;
                    let u2 = bco.sub(&bco.sub(&f0234, &f0134)?, &f1234)?;
                    let u3 = bco.sub(&f1234, &f0234)?;
                    let u4 = bco.neg(&f1234)?;
                    let xs = phi_x_coords(bg, &fam, 4)?;
                    vec![
                        bco.elem_index(&u1)? as i64,
                        bco.elem_index(&u2)? as i64,
                        bco.elem_index(&u3)? as i64,
                        bco.elem_index(&u4)? as i64,
                        xs[0] as i64,
                        xs[1] as i64,
                        xs[2] as i64,
                        xs[3] as i64,
                        xs[4] as i64,
                        xs[5] as i64,
                        s1 as i64,
                        fam.edge(1, 2) as i64,
                        fam.edge(2, 3) as i64,
                        fam.edge(3, 4) as i64,
                    ]
                }
                _ => unreachable!(),
            };
            let r = resolve[d]
                .get(&target)
                .ok_or_else(|| Error::structure("comparison image escapes the target"))?;
            at_d.push(r.clone());
        }
        images.push(at_d);
    }
    Ok(SimplicialMapData { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emac::twisted::tests::z2_data;
    use crate::emac::{build_m, coboundary_w3};
    use crate::postnikov::realize;
    use crate::simplicial::{is_iso_up_to, verify_simplicial_map};

    #[test]
    fn nerve_carrier_sizes_for_z2_data() {
        let p = z2_data(true);
        let bg = realize(&p, Budget::default()).unwrap();
        let im = BicatNerveImplicit { bg: &bg };
        assert_eq!(im.carrier(1).unwrap().len(), 2);
        assert_eq!(im.carrier(2).unwrap().len(), 8);
        assert_eq!(im.carrier(3).unwrap().len(), 128);
        assert_eq!(im.carrier(4).unwrap().len(), 16384);
    }

    #[test]
    fn phi_is_an_isomorphism_for_zero_t() {
        for h_on in [false, true] {
            let p = z2_data(h_on);
            let bg = realize(&p, Budget::default()).unwrap();
            let nerve = bicat_nerve(&bg, 4, Budget::default()).unwrap();
            assert!(nerve.check_simplicial_identities().is_empty());
            let m = build_m(&p, 4, Budget::default()).unwrap();
            let f = phi(&bg, &nerve, &m).unwrap();
            let rep = verify_simplicial_map(&f, &nerve, &m, 4).unwrap();
            assert!(rep.passes(), "h_on={h_on}: {} violations", rep.violations.len());
            assert!(is_iso_up_to(&f, &nerve, &m, 4).unwrap());
        }
    }

    #[test]
    fn phi_is_an_isomorphism_for_a_nonzero_cocycle() {
        let p = z2_data(true);
        let na = p.a_order();
        let n = p.g_order();
        let mut s = vec![p.b.coeff().zero_elem(); na.pow(3) * n.pow(3)];
        let idx = ((na + 1) * na + 1) * n.pow(3) + (n + 1) * n + 1;
        s[idx] = vec![1];
        let mut q = p.clone();
        q.set_t_table(coboundary_w3(&p, &s).unwrap()).unwrap();
        let bg = realize(&q, Budget::default()).unwrap();
        let nerve = bicat_nerve(&bg, 4, Budget::default()).unwrap();
        assert!(nerve.check_simplicial_identities().is_empty());
        let m = build_m(&q, 4, Budget::default()).unwrap();
        assert_eq!(nerve.counts(), m.counts());
        let f = phi(&bg, &nerve, &m).unwrap();
        assert!(verify_simplicial_map(&f, &nerve, &m, 4).unwrap().passes());
        assert!(is_iso_up_to(&f, &nerve, &m, 4).unwrap());
    }

    #[test]
    fn basepoint_maps_to_basepoint() {
        let p = z2_data(true);
        let bg = realize(&p, Budget::default()).unwrap();
        let nerve = bicat_nerve(&bg, 3, Budget::default()).unwrap();
        let m = build_m(&p, 3, Budget::default()).unwrap();
        let f = phi(&bg, &nerve, &m).unwrap();
        for d in 1..=3usize {
            for id in 0..nerve.count(d) as u32 {
                let label = nerve.label(d, id).unwrap();
                if label.iter().all(|&v| v == 0) {
                    let img = &f.images[d][id as usize];
                    assert!(m.label(d, img.id).unwrap().iter().all(|&v| v == 0));
                }
            }
        }
    }
}
