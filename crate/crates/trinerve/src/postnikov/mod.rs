//! The bicategorical group realized from Postnikov data: objects are the
//! group elements, 1-cells `(σ, x)` are endomorphisms with `x` in `A`,
//! 2-cells `(σ, x, u)` have `u` in `B`; every structure constant is a
//! table lookup in `t` or `h`.

pub mod nerve;

use crate::abgrp::{Elem, FiniteGroup};
use crate::emac::PostnikovData;
use crate::error::{Error, Result};
use crate::simplicial::Budget;

pub use nerve::{bicat_nerve, phi, BicatNerveImplicit};

/// The realized bicategorical group.  All evaluators follow the closed
/// formulas; the hom-associator is additionally cached in a table so that
/// fault-injection tests can perturb single entries.
#[derive(Debug, Clone)]
pub struct BicatGroup {
    pub data: PostnikovData,
    /// `a(σ; x, y, z) = t(x,y,z,0,0,0; σ,1,1,1)`, indexed
    /// `((σ * |A| + x) * |A| + y) * |A| + z`.
    a_table: Vec<Elem>,
}

/// Realize the bicategorical group from validated Postnikov data.
pub fn realize(p: &PostnikovData, budget: Budget) -> Result<BicatGroup> {
    if !crate::emac::validate_h(p, budget)? {
        return Err(Error::precondition("h is not a twisted cocycle"));
    }
    if !crate::emac::validate_t(p, budget)? {
        return Err(Error::precondition("t is not a cocycle over W"));
    }
    Ok(realize_unchecked(p))
}

/// Install the evaluators without validating the cocycle conditions (used
/// by tests and by the oracle sweeps).
pub fn realize_unchecked(p: &PostnikovData) -> BicatGroup {
    let na = p.a_order();
    let n = p.g_order();
    let mut a_table = Vec::with_capacity(n * na * na * na);
    for s in 0..n {
        for x in 0..na {
            for y in 0..na {
                for z in 0..na {
                    a_table.push(p.t_at(&[x, y, z, 0, 0, 0], &[s, 0, 0, 0]).clone());
                }
            }
        }
    }
    BicatGroup { data: p.clone(), a_table }
}

impl BicatGroup {
    pub fn g(&self) -> &FiniteGroup {
        &self.data.g
    }

    fn na(&self) -> usize {
        self.data.a_order()
    }

    /// `^σ x` in `A`, on element indices.
    pub fn act_a(&self, s: u32, x: usize) -> Result<usize> {
        let v = self.data.a.coeff().elem_at(x)?;
        Ok(self.data.a.coeff().elem_index(&self.data.a.act(s, &v)?)?)
    }

    pub fn add_a(&self, x: usize, y: usize) -> Result<usize> {
        let a = self.data.a.coeff();
        Ok(a.elem_index(&a.add(&a.elem_at(x)?, &a.elem_at(y)?)?)?)
    }

    pub fn neg_a(&self, x: usize) -> Result<usize> {
        let a = self.data.a.coeff();
        Ok(a.elem_index(&a.neg(&a.elem_at(x)?)?)?)
    }

    /// `h(σ,τ,γ)` as an `A`-index: the associativity 1-cell.
    pub fn h_idx(&self, s: u32, t: u32, g: u32) -> Result<usize> {
        Ok(self.data.a.coeff().elem_index(self.data.h_at(s, t, g))?)
    }

    /// `t` evaluated at `A`-indices and group elements.
    pub fn t_val(&self, xs: &[usize; 6], ss: &[u32; 4]) -> Elem {
        self.data
            .t_at(xs, &[ss[0] as usize, ss[1] as usize, ss[2] as usize, ss[3] as usize])
            .clone()
    }

    /// `^σ u` in `B`.
    pub fn act_b(&self, s: u32, u: &Elem) -> Result<Elem> {
        self.data.b.act(s, u)
    }

    pub fn bz(&self) -> Elem {
        self.data.b.coeff().zero_elem()
    }

    pub fn badd(&self, u: &Elem, v: &Elem) -> Result<Elem> {
        self.data.b.coeff().add(u, v)
    }

    pub fn bsub(&self, u: &Elem, v: &Elem) -> Result<Elem> {
        self.data.b.coeff().sub(u, v)
    }

    /// The hom-bicategory associator `a(σ; x, y, z)`.
    pub fn a_hom(&self, s: u32, x: usize, y: usize, z: usize) -> Elem {
        let na = self.na();
        self.a_table[((s as usize * na + x) * na + y) * na + z].clone()
    }

    /// Perturb one associator entry (fault injection in tests).
    pub fn corrupt_a(&mut self, s: u32, x: usize, y: usize, z: usize, v: Elem) {
        let na = self.na();
        self.a_table[((s as usize * na + x) * na + y) * na + z] = v;
    }

    /// `χ(σ,τ; y, y') = -t(0,0,0,^σy,^σy',0; σ,τ,1,1)`.
    pub fn chi(&self, s: u32, t: u32, y: usize, yp: usize) -> Result<Elem> {
        let ay = self.act_a(s, y)?;
        let ayp = self.act_a(s, yp)?;
        let v = self.t_val(&[0, 0, 0, ay, ayp, 0], &[s, t, 0, 0]);
        self.bsub(&self.bz(), &v)
    }

    /// The swap constant
    /// `c(σ,τ; x, y) = t(0,x,0,0,^σy,0;σ,τ,1,1) - t(0,0,x,^σy,0,0;σ,τ,1,1)
    ///  - t(x,0,0,0,0,^σy;σ,1,τ,1)`.
    pub fn c_swap(&self, s: u32, t: u32, x: usize, y: usize) -> Result<Elem> {
        let ay = self.act_a(s, y)?;
        let v1 = self.t_val(&[0, x, 0, 0, ay, 0], &[s, t, 0, 0]);
        let v2 = self.t_val(&[0, 0, x, ay, 0, 0], &[s, t, 0, 0]);
        let v3 = self.t_val(&[x, 0, 0, 0, 0, ay], &[s, 0, t, 0]);
        self.bsub(&self.bsub(&v1, &v2)?, &v3)
    }

    /// `χ̄(σ,τ; x, x') = -t(0,x,x',0,0,0;σ,τ,1,1) + t(x,0,x',0,0,0;σ,1,τ,1)
    ///  - t(x,x',0,0,0,0;σ,1,1,τ)`.
    pub fn chibar(&self, s: u32, t: u32, x: usize, xp: usize) -> Result<Elem> {
        let v1 = self.t_val(&[0, x, xp, 0, 0, 0], &[s, t, 0, 0]);
        let v2 = self.t_val(&[x, 0, xp, 0, 0, 0], &[s, 0, t, 0]);
        let v3 = self.t_val(&[x, xp, 0, 0, 0, 0], &[s, 0, 0, t]);
        self.bsub(&self.badd(&self.bsub(&self.bz(), &v1)?, &v2)?, &v3)
    }

    /// The interchange 2-cell
    /// `(x + ^σy) ∘ (x' + ^σy') => (x + x') + ^σ(y + y')` pasted from
    /// `χ`, the swap of `x'` past `^σy`, and `χ̄`.
    pub fn interchange(
        &self,
        s: u32,
        t: u32,
        x: usize,
        xp: usize,
        y: usize,
        yp: usize,
    ) -> Result<Elem> {
        let mut acc = self.chi(s, t, y, yp)?;
        acc = self.badd(&acc, &self.c_swap(s, t, xp, y)?)?;
        self.badd(&acc, &self.chibar(s, t, x, xp)?)
    }

    /// The naturality component of the associativity pseudo-equivalence at
    /// 1-cells `(x, y, z)` over objects `(σ, τ, γ)`: the pasting
    /// `Φ + Ψ + Ω` of the displayed constants.
    pub fn nat_a(
        &self,
        s: u32,
        t: u32,
        g: u32,
        x: usize,
        y: usize,
        z: usize,
    ) -> Result<Elem> {
        let h = self.h_idx(s, t, g)?;
        let st = self.g().mul(s, t);
        let tg = self.g().mul(t, g);
        let az = self.act_a(st, z)?;
        let ay = self.act_a(s, y)?;
        // Φ = t(0,h,0,0,^{στ}z,0; σ,τγ,1,1) - t(h,0,0,0,0,^{στ}z; σ,τ,γ,1)
        //   - t(0,0,h,^{στ}z,0,0; σ,τγ,1,1)
        let phi = {
            let v1 = self.t_val(&[0, h, 0, 0, az, 0], &[s, tg, 0, 0]);
            let v2 = self.t_val(&[h, 0, 0, 0, 0, az], &[s, t, g, 0]);
            let v3 = self.t_val(&[0, 0, h, az, 0, 0], &[s, tg, 0, 0]);
            self.bsub(&self.bsub(&v1, &v2)?, &v3)?
        };
        // Ψ = t(h,0,0,^σy,0,0; σ,τ,1,γ) - t(h,0,0,0,^σy,0; σ,τ,γ,1)
        //   + t(0,h,0,0,^σy,0; σ,τγ,1,1) - t(0,0,h,^σy,0,0; σ,τγ,1,1)
        let psi = {
            let v1 = self.t_val(&[h, 0, 0, ay, 0, 0], &[s, t, 0, g]);
            let v2 = self.t_val(&[h, 0, 0, 0, ay, 0], &[s, t, g, 0]);
            let v3 = self.t_val(&[0, h, 0, 0, ay, 0], &[s, tg, 0, 0]);
            let v4 = self.t_val(&[0, 0, h, ay, 0, 0], &[s, tg, 0, 0]);
            self.bsub(&self.badd(&self.bsub(&v1, &v2)?, &v3)?, &v4)?
        };
        // Ω = -t(x,h,0,0,0,0; σ,1,τ,γ) + t(h,x,0,0,0,0; σ,τ,1,γ)
        //   - t(h,0,x,0,0,0; σ,τ,γ,1) + t(x,0,h,0,0,0; σ,1,τγ,1)
        //   + t(0,h,x,0,0,0; σ,τγ,1,1) - t(0,x,h,0,0,0; σ,τγ,1,1)
        let omega = {
            let v1 = self.t_val(&[x, h, 0, 0, 0, 0], &[s, 0, t, g]);
            let v2 = self.t_val(&[h, x, 0, 0, 0, 0], &[s, t, 0, g]);
            let v3 = self.t_val(&[h, 0, x, 0, 0, 0], &[s, t, g, 0]);
            let v4 = self.t_val(&[x, 0, h, 0, 0, 0], &[s, 0, tg, 0]);
            let v5 = self.t_val(&[0, h, x, 0, 0, 0], &[s, tg, 0, 0]);
            let v6 = self.t_val(&[0, x, h, 0, 0, 0], &[s, tg, 0, 0]);
            let mut acc = self.bsub(&self.bz(), &v1)?;
            acc = self.badd(&acc, &v2)?;
            acc = self.bsub(&acc, &v3)?;
            acc = self.badd(&acc, &v4)?;
            acc = self.badd(&acc, &v5)?;
            self.bsub(&acc, &v6)?
        };
        self.badd(&self.badd(&phi, &psi)?, &omega)
    }

    /// The pentagonator `π(σ,τ,γ,δ)`.
    pub fn pi4(&self, s: u32, t: u32, g: u32, d: u32) -> Result<Elem> {
        let gr = self.g();
        let h0 = self.act_a(s, self.h_idx(t, g, d)?)?;
        let h1 = self.h_idx(gr.mul(s, t), g, d)?;
        let h2 = self.h_idx(s, gr.mul(t, g), d)?;
        let h3 = self.h_idx(s, t, gr.mul(g, d))?;
        let h4 = self.h_idx(s, t, g)?;
        let h1m0 = self.add_a(h1, self.neg_a(h0)?)?;
        let h2p4 = self.add_a(h2, h4)?;
        let tg = gr.mul(t, g);
        let tgd = gr.mul(tg, d);
        let gd = gr.mul(g, d);
        let v1 = self.t_val(&[h3, h1m0, 0, h0, 0, 0], &[s, t, g, d]);
        let v2 = self.t_val(&[h2, h4, 0, 0, 0, 0], &[s, tg, 0, d]);
        let v3 = self.t_val(&[h2, 0, h4, 0, 0, 0], &[s, tg, d, 0]);
        let v4 = self.t_val(&[h3, 0, h1m0, 0, h0, 0], &[s, t, gd, 0]);
        let v5 = self.t_val(&[0, h3, h1m0, 0, h0, 0], &[s, tgd, 0, 0]);
        let v6 = self.t_val(&[0, 0, h2p4, h0, 0, 0], &[s, tgd, 0, 0]);
        let v7 = self.t_val(&[0, h2, h4, 0, 0, 0], &[s, tgd, 0, 0]);
        let mut acc = self.bsub(&v1, &v2)?;
        acc = self.badd(&acc, &v3)?;
        acc = self.bsub(&acc, &v4)?;
        acc = self.badd(&acc, &v5)?;
        acc = self.bsub(&acc, &v6)?;
        self.bsub(&acc, &v7)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceReport {
    pub pentagon_violations: Vec<(u32, usize, usize, usize, usize)>,
    pub interchange_violations: usize,
    pub invertibility_ok: bool,
    pub strict_units_ok: bool,
}

impl CoherenceReport {
    pub fn passes(&self) -> bool {
        self.pentagon_violations.is_empty()
            && self.interchange_violations == 0
            && self.invertibility_ok
            && self.strict_units_ok
    }
}

/// Exhaustive coherence checks: the hom-bicategory pentagon for the
/// associator, compatibility of the interchange cell with stacking (the
/// homomorphism axiom of the tensor), invertibility of every structure
/// cell, and the strict unit laws.
pub fn coherence_check(bg: &BicatGroup) -> Result<CoherenceReport> {
    let na = bg.na();
    let n = bg.g().order() as u32;
    let bco = bg.data.b.coeff().clone();
    let mut pentagon = Vec::new();
    for s in 0..n {
        for x in 0..na {
            for y in 0..na {
                for z in 0..na {
                    for w in 0..na {
                        // a(y,z,w) + a(x, y+z, w) + a(x,y,z)
                        //   = a(x,y,z+w) + a(x+y,z,w)
                        let lhs = bg.badd(
                            &bg.badd(&bg.a_hom(s, y, z, w), &bg.a_hom(s, x, bg.add_a(y, z)?, w))?,
                            &bg.a_hom(s, x, y, z),
                        )?;
                        let rhs = bg.badd(
                            &bg.a_hom(s, x, y, bg.add_a(z, w)?),
                            &bg.a_hom(s, bg.add_a(x, y)?, z, w),
                        )?;
                        if lhs != rhs {
                            pentagon.push((s, x, y, z, w));
                        }
                    }
                }
            }
        }
    }

    // the tensor homomorphism axiom on a stacked triple of pairs:
    // iota(x, x'+x'', y, y'+y'') + iota(x',x'',y',y'') + a(x+^σy, ...)
    //   = a(σ;x,x',x'') + ^σ a(τ;y,y',y'') + iota(x+x',x'',y+y',y'')
    //     + iota(x,x',y,y')
    let mut interchange_violations = 0usize;
    for s in 0..n {
        for t in 0..n {
            let st = bg.g().mul(s, t);
            for x in 0..na {
                for xp in 0..na {
                    for xq in 0..na {
                        for y in 0..na {
                            for yp in 0..na {
                                for yq in 0..na {
                                    let f = |u: usize, v: usize| -> Result<usize> {
                                        Ok(bg.add_a(u, bg.act_a(s, v)?)?)
                                    };
                                    let lhs = {
                                        let mut acc = bg.interchange(
                                            s,
                                            t,
                                            x,
                                            bg.add_a(xp, xq)?,
                                            y,
                                            bg.add_a(yp, yq)?,
                                        )?;
                                        acc = bg.badd(&acc, &bg.interchange(s, t, xp, xq, yp, yq)?)?;
                                        bg.badd(
                                            &acc,
                                            &bg.a_hom(st, f(x, y)?, f(xp, yp)?, f(xq, yq)?),
                                        )?
                                    };
                                    let rhs = {
                                        let mut acc = bg.a_hom(s, x, xp, xq);
                                        acc = bg.badd(
                                            &acc,
                                            &bg.act_b(s, &bg.a_hom(t, y, yp, yq))?,
                                        )?;
                                        acc = bg.badd(
                                            &acc,
                                            &bg.interchange(
                                                s,
                                                t,
                                                bg.add_a(x, xp)?,
                                                xq,
                                                bg.add_a(y, yp)?,
                                                yq,
                                            )?,
                                        )?;
                                        bg.badd(&acc, &bg.interchange(s, t, x, xp, y, yp)?)?
                                    };
                                    if lhs != rhs {
                                        interchange_violations += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // invertibility: 2-cells invert by negation in B; 1-cells have the
    // additive inverse as a quasi-inverse; objects invert in G
    let mut invertibility_ok = true;
    for u in 0..bg.data.b_order() {
        let v = bco.elem_at(u)?;
        let w = bco.neg(&v)?;
        if !bco.is_zero(&bco.add(&v, &w)?) {
            invertibility_ok = false;
        }
    }
    for x in 0..na {
        if bg.add_a(x, bg.neg_a(x)?)? != 0 {
            invertibility_ok = false;
        }
    }
    for s in 0..n {
        let inv = bg.g().inv(s);
        if bg.g().mul(s, inv) != 0 {
            invertibility_ok = false;
        }
    }

    // strict units: 1_σ = 0 under composition and under tensor with the
    // unit object
    let mut strict_units_ok = true;
    for x in 0..na {
        if bg.add_a(x, 0)? != x || bg.add_a(0, x)? != x {
            strict_units_ok = false;
        }
        if bg.act_a(0, x)? != x {
            strict_units_ok = false;
        }
    }

    Ok(CoherenceReport {
        pentagon_violations: pentagon,
        interchange_violations,
        invertibility_ok,
        strict_units_ok,
    })
}

/// The homotopy invariants read directly off the bicategorical group:
/// objects modulo equivalence, autoequivalence classes of the unit object,
/// automorphisms of the unit 1-cell.
pub fn bicatgroup_homotopy(bg: &BicatGroup) -> Result<(FiniteGroup, FiniteGroup, FiniteGroup)> {
    // pi_1: objects modulo 1-cell connectivity; 1-cells only join an
    // object to itself here, so classes are singletons and the law is the
    // group law (verified to be well defined on classes)
    let pi1 = bg.g().clone();
    // pi_2: 1-cells of the unit object modulo 2-cell isomorphism; 2-cells
    // only join equal 1-cells, classes are the elements of A under
    // horizontal composition
    let na = bg.na();
    let table2: Vec<Vec<u32>> = (0..na)
        .map(|x| (0..na).map(|y| bg.add_a(x, y).unwrap() as u32).collect())
        .collect();
    let pi2 = FiniteGroup::new(table2)
        .map_err(|e| Error::structure(format!("pi_2 law is not a group: {e}")))?;
    // pi_3: 2-cells of the identity 1-cell under vertical composition
    let nb = bg.data.b_order();
    let bco = bg.data.b.coeff();
    let table3: Vec<Vec<u32>> = (0..nb)
        .map(|u| {
            (0..nb)
                .map(|v| {
                    let s = bco
                        .add(&bco.elem_at(u).unwrap(), &bco.elem_at(v).unwrap())
                        .unwrap();
                    bco.elem_index(&s).unwrap() as u32
                })
                .collect()
        })
        .collect();
    let pi3 = FiniteGroup::new(table3)
        .map_err(|e| Error::structure(format!("pi_3 law is not a group: {e}")))?;
    Ok((pi1, pi2, pi3))
}
