//! Representations of graphs and free categories in a strict 3-category:
//! the iterated right-bracketed tensor, the extension/restriction pair
//! between graph representations and unitary homomorphic representations of
//! the free category, and the CR1/CR2 validator.

use std::collections::BTreeMap;

use crate::cat::{free_category, DiGraph, FiniteCategory};
use crate::error::{Error, Result};

use super::cells::Strict3Cat;
use super::pasting::{pasting_eval, Paste3};

/// Right-bracketed iterated tensor of composable 1-cells:
/// `x_1 ⊗ (x_2 ⊗ (...))`.  Equal to any other bracketing in a strict
/// target.
pub fn or_tensor1(t: &Strict3Cat, cells: &[u32]) -> Result<u32> {
    let (&last, rest) = cells
        .split_last()
        .ok_or_else(|| Error::structure("or_tensor needs at least one cell"))?;
    let mut acc = last;
    for &x in rest.iter().rev() {
        acc = t.comp1(x, acc)?;
    }
    Ok(acc)
}

/// Right-bracketed iterated tensor of 2-cells.
pub fn or_tensor2(t: &Strict3Cat, cells: &[u32]) -> Result<u32> {
    let (&last, rest) = cells
        .split_last()
        .ok_or_else(|| Error::structure("or_tensor needs at least one cell"))?;
    let mut acc = last;
    for &x in rest.iter().rev() {
        acc = t.hcomp2(x, acc)?;
    }
    Ok(acc)
}

/// Right-bracketed iterated tensor of 3-cells.
pub fn or_tensor3(t: &Strict3Cat, cells: &[u32]) -> Result<u32> {
    let (&last, rest) = cells
        .split_last()
        .ok_or_else(|| Error::structure("or_tensor needs at least one cell"))?;
    let mut acc = last;
    for &x in rest.iter().rev() {
        acc = t.comp3_0(x, acc)?;
    }
    Ok(acc)
}

/// A representation of a graph in a strict 3-category: an object per vertex
/// and a 1-cell per edge, boundaries respected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRep {
    pub on_vertices: Vec<u32>,
    pub on_edges: Vec<u32>,
}

impl GraphRep {
    pub fn validate(&self, g: &DiGraph, t: &Strict3Cat) -> Result<()> {
        if self.on_vertices.len() != g.vertices() || self.on_edges.len() != g.edges().len() {
            return Err(Error::structure("graph representation has wrong shape"));
        }
        for (&obj, _) in self.on_vertices.iter().zip(0..) {
            if obj as usize >= t.objects {
                return Err(Error::structure("vertex image out of range"));
            }
        }
        for (e, &(s, tt)) in g.edges().iter().enumerate() {
            let f = self.on_edges[e];
            // an edge a: j -> i maps to a 1-cell F_j -> F_i
            if t.cells1[f as usize] != (self.on_vertices[s], self.on_vertices[tt]) {
                return Err(Error::structure(format!("edge {e} image has wrong boundary")));
            }
        }
        Ok(())
    }
}

/// A unitary representation of a finite category in a strict 3-category,
/// with all structure cells explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep3 {
    pub on_obj: Vec<u32>,
    pub on_mor: Vec<u32>,
    /// `F_{a,b}` for composable `(a,b)`.
    pub on_pairs: BTreeMap<(u32, u32), u32>,
    /// `F_{a,b,c}` for composable `(a,b,c)`.
    pub on_triples: BTreeMap<(u32, u32, u32), u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepReport {
    pub unitarity_violations: Vec<String>,
    pub cr1_violations: Vec<(u32, u32, u32, u32)>,
}

impl RepReport {
    pub fn passes(&self) -> bool {
        self.unitarity_violations.is_empty() && self.cr1_violations.is_empty()
    }
}

impl Rep3 {
    fn pair(&self, a: u32, b: u32) -> Result<u32> {
        self.on_pairs
            .get(&(a, b))
            .copied()
            .ok_or_else(|| Error::structure(format!("missing F_{{a,b}} at ({a},{b})")))
    }

    fn triple(&self, a: u32, b: u32, c: u32) -> Result<u32> {
        self.on_triples
            .get(&(a, b, c))
            .copied()
            .ok_or_else(|| Error::structure(format!("missing F_{{a,b,c}} at ({a},{b},{c})")))
    }

    /// The source 2-cell of the CR-shaped 3-cell at `(a,b,c)`:
    /// `F_{ab,c} ∘₁ (F_{a,b} ⊗ 1_{Fc})`.
    pub fn cr_source(&self, i: &FiniteCategory, t: &Strict3Cat, a: u32, b: u32, c: u32) -> Result<u32> {
        let fab = self.pair(a, b)?;
        let fabc = self.pair(i.comp(a, b)?, c)?;
        let wh = t.hcomp2(fab, t.id2[self.on_mor[c as usize] as usize])?;
        t.vcomp2(fabc, wh)
    }

    /// The target 2-cell: `F_{a,bc} ∘₁ (1_{Fa} ⊗ F_{b,c})`.
    pub fn cr_target(&self, i: &FiniteCategory, t: &Strict3Cat, a: u32, b: u32, c: u32) -> Result<u32> {
        let fbc = self.pair(b, c)?;
        let fa_bc = self.pair(a, i.comp(b, c)?)?;
        let wh = t.hcomp2(t.id2[self.on_mor[a as usize] as usize], fbc)?;
        t.vcomp2(fa_bc, wh)
    }

    /// Validate boundaries, unitarity (the strict rendering of CR2), and
    /// the CR1 pasting equation on every composable quadruple.
    pub fn validate(&self, i: &FiniteCategory, t: &Strict3Cat) -> Result<RepReport> {
        let mut unit = Vec::new();
        if self.on_obj.len() != i.objects() || self.on_mor.len() != i.morphisms() {
            return Err(Error::structure("representation has wrong shape"));
        }
        for a in 0..i.morphisms() as u32 {
            let f = self.on_mor[a as usize];
            let j = self.on_obj[i.src(a)];
            let ii = self.on_obj[i.tgt(a)];
            if t.cells1[f as usize] != (j, ii) {
                return Err(Error::structure(format!("morphism {a} image has wrong boundary")));
            }
        }
        // unitary: F(1) = 1, F_{a,1} and F_{1,a} are identities
        for x in 0..i.objects() {
            if self.on_mor[i.identity_of(x) as usize] != t.id1[self.on_obj[x] as usize] {
                unit.push(format!("F(1_{x}) is not the identity 1-cell"));
            }
        }
        for (&(a, b), &cell) in &self.on_pairs {
            let fa = self.on_mor[a as usize];
            let fb = self.on_mor[b as usize];
            let src = t.comp1(fa, fb)?;
            let tgt = self.on_mor[i.comp(a, b)? as usize];
            if t.cells2[cell as usize] != (src, tgt) {
                return Err(Error::structure(format!(
                    "F_{{a,b}} at ({a},{b}) has wrong boundary"
                )));
            }
            if (i.is_identity(a) || i.is_identity(b)) && cell != t.id2[src as usize] {
                unit.push(format!("F_{{a,b}} at ({a},{b}) is not an identity"));
            }
        }
        for (&(a, b, c), &cell) in &self.on_triples {
            let src = self.cr_source(i, t, a, b, c)?;
            let tgt = self.cr_target(i, t, a, b, c)?;
            if t.cells3[cell as usize] != (src, tgt) {
                return Err(Error::structure(format!(
                    "F_{{a,b,c}} at ({a},{b},{c}) has wrong boundary"
                )));
            }
            if (i.is_identity(a) || i.is_identity(b) || i.is_identity(c))
                && cell != t.id3[src as usize]
            {
                unit.push(format!("F_{{a,b,c}} at ({a},{b},{c}) is not an identity"));
            }
        }
        // CR1 on every composable quadruple
        let mut cr1 = Vec::new();
        for a in 0..i.morphisms() as u32 {
            for b in 0..i.morphisms() as u32 {
                if i.src(a) != i.tgt(b) {
                    continue;
                }
                for c in 0..i.morphisms() as u32 {
                    if i.src(b) != i.tgt(c) {
                        continue;
                    }
                    for d in 0..i.morphisms() as u32 {
                        if i.src(c) != i.tgt(d) {
                            continue;
                        }
                        if !self.cr1_holds(i, t, a, b, c, d)? {
                            cr1.push((a, b, c, d));
                        }
                    }
                }
            }
        }
        Ok(RepReport { unitarity_violations: unit, cr1_violations: cr1 })
    }

    /// The two pastings of the CR1 axiom, evaluated in a strict target.
    pub fn cr1_sides(
        &self,
        i: &FiniteCategory,
        t: &Strict3Cat,
        a: u32,
        b: u32,
        c: u32,
        d: u32,
    ) -> Result<(u32, u32)> {
        let fa = self.on_mor[a as usize];
        let fb = self.on_mor[b as usize];
        let fc = self.on_mor[c as usize];
        let fd = self.on_mor[d as usize];
        let bc = i.comp(b, c)?;
        let cd = i.comp(c, d)?;
        let ab = i.comp(a, b)?;
        // A = [1_{F_{a,bcd}} ∘₁ (1_{1_Fa} ⊗ F_{b,c,d})]
        //  ·₂ [F_{a,bc,d} ∘₁ 1_{(1_{Fa} ⊗ F_{b,c}) ⊗ 1_{Fd}}]
        //  ·₂ [1_{F_{abc,d}} ∘₁ (F_{a,b,c} ⊗ 1_{1_{Fd}})]
        let f_a_bcd = self.pair(a, i.comp(bc, d)?)?;
        let whisk_mid = t.hcomp2(
            t.hcomp2(t.id2[fa as usize], self.pair(b, c)?)?,
            t.id2[fd as usize],
        )?;
        let f_abc_d = self.pair(i.comp(ab, c)?, d)?;
        let step1 = Paste3::hcomp(
            Paste3::id2(f_abc_d),
            Paste3::tensor(Paste3::cell(self.triple(a, b, c)?), Paste3::id2(t.id2[fd as usize])),
        );
        let step2 = Paste3::hcomp(
            Paste3::cell(self.triple(a, bc, d)?),
            Paste3::id2(whisk_mid),
        );
        let step3 = Paste3::hcomp(
            Paste3::id2(f_a_bcd),
            Paste3::tensor(Paste3::id2(t.id2[fa as usize]), Paste3::cell(self.triple(b, c, d)?)),
        );
        let side_a = Paste3::vcomp(step3, Paste3::vcomp(step2, step1));
        // A' = [F_{a,b,cd} ∘₁ 1_{(1_{Fa} ⊗ 1_{Fb}) ⊗ F_{c,d}}]
        //   ·₂ [F_{ab,c,d} ∘₁ 1_{(F_{a,b} ⊗ 1_{Fc}) ⊗ 1_{Fd}}]
        let whisk_r = t.hcomp2(
            t.hcomp2(t.id2[fa as usize], t.id2[fb as usize])?,
            self.pair(c, d)?,
        )?;
        let whisk_l = t.hcomp2(
            t.hcomp2(self.pair(a, b)?, t.id2[fc as usize])?,
            t.id2[fd as usize],
        )?;
        let u1 = Paste3::hcomp(Paste3::cell(self.triple(ab, c, d)?), Paste3::id2(whisk_l));
        let u2 = Paste3::hcomp(Paste3::cell(self.triple(a, b, cd)?), Paste3::id2(whisk_r));
        let side_a2 = Paste3::vcomp(u2, u1);
        Ok((pasting_eval(t, &side_a)?, pasting_eval(t, &side_a2)?))
    }

    pub fn cr1_holds(
        &self,
        i: &FiniteCategory,
        t: &Strict3Cat,
        a: u32,
        b: u32,
        c: u32,
        d: u32,
    ) -> Result<bool> {
        let (lhs, rhs) = self.cr1_sides(i, t, a, b, c, d)?;
        Ok(lhs == rhs)
    }
}

/// Extend a graph representation along the free category: the L of the
/// extension/restriction adjunction at the strict level, where every
/// structure 2- and 3-cell is an identity.  Returns the free category,
/// the edge word of each morphism, and the representation.
pub fn extend_rep_l(
    g: &DiGraph,
    t: &Strict3Cat,
    f: &GraphRep,
) -> Result<(FiniteCategory, Vec<Vec<u32>>, Rep3)> {
    f.validate(g, t)?;
    let (cat, words) = free_category(g)?;
    let mut on_mor = Vec::with_capacity(cat.morphisms());
    for (m, word) in words.iter().enumerate() {
        if word.is_empty() {
            let v = cat.src(m as u32);
            on_mor.push(t.id1[f.on_vertices[v] as usize]);
        } else {
            let cells: Vec<u32> = word.iter().map(|&e| f.on_edges[e as usize]).collect();
            on_mor.push(or_tensor1(t, &cells)?);
        }
    }
    let mut on_pairs = BTreeMap::new();
    for a in 0..cat.morphisms() as u32 {
        for b in 0..cat.morphisms() as u32 {
            if cat.src(a) != cat.tgt(b) {
                continue;
            }
            let src = t.comp1(on_mor[a as usize], on_mor[b as usize])?;
            let tgt = on_mor[cat.comp(a, b)? as usize];
            if src != tgt {
                return Err(Error::structure(
                    "strict target failed to make the extension homomorphic",
                ));
            }
            on_pairs.insert((a, b), t.id2[src as usize]);
        }
    }
    let mut on_triples = BTreeMap::new();
    for a in 0..cat.morphisms() as u32 {
        for b in 0..cat.morphisms() as u32 {
            if cat.src(a) != cat.tgt(b) {
                continue;
            }
            for c in 0..cat.morphisms() as u32 {
                if cat.src(b) != cat.tgt(c) {
                    continue;
                }
                let rep = Rep3 {
                    on_obj: f.on_vertices.clone(),
                    on_mor: on_mor.clone(),
                    on_pairs: on_pairs.clone(),
                    on_triples: BTreeMap::new(),
                };
                let src = rep.cr_source(&cat, t, a, b, c)?;
                on_triples.insert((a, b, c), t.id3[src as usize]);
            }
        }
    }
    let rep = Rep3 { on_obj: f.on_vertices.clone(), on_mor, on_pairs, on_triples };
    Ok((cat, words, rep))
}

/// Restrict a representation of the free category back to the graph.
pub fn restrict_rep_r(
    g: &DiGraph,
    words: &[Vec<u32>],
    rep: &Rep3,
) -> Result<GraphRep> {
    let mut on_edges = vec![0u32; g.edges().len()];
    for (e, _) in g.edges().iter().enumerate() {
        let m = words
            .iter()
            .position(|w| w.len() == 1 && w[0] == e as u32)
            .ok_or_else(|| Error::structure("free category is missing a single-edge path"))?;
        on_edges[e] = rep.on_mor[m];
    }
    Ok(GraphRep { on_vertices: rep.on_obj.clone(), on_edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::FgAbGroup;

    #[test]
    fn or_tensor_single_cell() {
        let t = Strict3Cat::sigma2(&FgAbGroup::cyclic(5)).unwrap();
        assert_eq!(or_tensor3(&t, &[4]).unwrap(), 4);
    }

    #[test]
    fn or_tensor_in_sigma2_is_addition() {
        let t = Strict3Cat::sigma2(&FgAbGroup::cyclic(5)).unwrap();
        // 3-cells (2),(3),(4): 2+3+4 = 9 = 4 mod 5
        assert_eq!(or_tensor3(&t, &[2, 3, 4]).unwrap(), 4);
    }

    #[test]
    fn or_tensor_matches_left_bracketing_in_strict_targets() {
        let c = crate::cat::ordinal_category(3);
        let t = Strict3Cat::from_category(&c).unwrap();
        // three composable 1-cells in [3]: (0,1), (1,2), (2,3) as arrows
        let find = |i: usize, j: usize| -> u32 {
            (0..c.morphisms() as u32)
                .find(|&m| c.src(m) == j && c.tgt(m) == i)
                .unwrap()
        };
        let x1 = find(0, 1);
        let x2 = find(1, 2);
        let x3 = find(2, 3);
        let right = or_tensor1(&t, &[x1, x2, x3]).unwrap();
        let left = t.comp1(t.comp1(x1, x2).unwrap(), x3).unwrap();
        assert_eq!(right, left);
    }

    #[test]
    fn extend_then_restrict_is_identity_on_chains() {
        let g = DiGraph::chain(2);
        let t = Strict3Cat::sigma2(&FgAbGroup::cyclic(2)).unwrap();
        // the only objects/1-cells are trivial here
        let f = GraphRep { on_vertices: vec![0, 0, 0], on_edges: vec![0, 0] };
        let (cat, words, rep) = extend_rep_l(&g, &t, &f).unwrap();
        let back = restrict_rep_r(&g, &words, &rep).unwrap();
        assert_eq!(back, f);
        let report = rep.validate(&cat, &t).unwrap();
        assert!(report.passes(), "{report:?}");
    }

    #[test]
    fn sigma2_cocycles_are_exactly_cr1_data() {
        // a unitary representation of [4] in Σ²(Z/2) is a normalized
        // 3-cochain; CR1 is the cocycle condition.  Checked against the
        // cocycle module.
        use crate::cocycle::{is_z3_category, Cochain, CochainBase};
        let i = crate::cat::ordinal_category(4);
        let a = FgAbGroup::cyclic(2);
        let t = Strict3Cat::sigma2(&a).unwrap();
        let base = CochainBase::Category(i.clone());
        // enumerate all normalized 3-cochains (32 of them)
        let triples: Vec<(u32, u32, u32)> = {
            let mut v = Vec::new();
            for x in 0..i.morphisms() as u32 {
                for y in 0..i.morphisms() as u32 {
                    if i.src(x) != i.tgt(y) {
                        continue;
                    }
                    for z in 0..i.morphisms() as u32 {
                        if i.src(y) == i.tgt(z) {
                            v.push((x, y, z));
                        }
                    }
                }
            }
            v
        };
        let nonid: Vec<&(u32, u32, u32)> = triples
            .iter()
            .filter(|(x, y, z)| {
                !i.is_identity(*x) && !i.is_identity(*y) && !i.is_identity(*z)
            })
            .collect();
        assert_eq!(nonid.len(), 5);
        let mut agree = 0;
        for bits in 0..32u32 {
            let mut rep = Rep3 {
                on_obj: vec![0; i.objects()],
                on_mor: vec![0; i.morphisms()],
                on_pairs: BTreeMap::new(),
                on_triples: BTreeMap::new(),
            };
            let mut coch = Cochain::zero(base.clone(), a.clone(), 3);
            for x in 0..i.morphisms() as u32 {
                for y in 0..i.morphisms() as u32 {
                    if i.src(x) == i.tgt(y) {
                        rep.on_pairs.insert((x, y), 0);
                    }
                }
            }
            for (n, &&(x, y, z)) in nonid.iter().enumerate() {
                let v = (bits >> n) & 1;
                coch.set(&[x, y, z], vec![v as i64]).unwrap();
            }
            for &(x, y, z) in &triples {
                let v = coch.get(&[x, y, z]);
                rep.on_triples.insert((x, y, z), v[0] as u32);
            }
            let rep_ok = rep.validate(&i, &t).unwrap().passes();
            let coc_ok = is_z3_category(&i, &a, &coch).unwrap();
            assert_eq!(rep_ok, coc_ok, "bits={bits}");
            if rep_ok {
                agree += 1;
            }
        }
        assert_eq!(agree, 16);
    }
}
