//! Finite strict 2- and 3-categories presented by cell tables.
//!
//! A strict 3-category is a category enriched in 2-categories: three
//! composition operations (`⊗` across objects, `∘₁` along 1-cells, `·₂`
//! along 2-cells at the top level), all strictly associative and unital,
//! with all interchange laws holding on the nose.  Everything is checked
//! exhaustively at construction.

use crate::abgrp::FgAbGroup;
use crate::error::{Error, Result};

type Table = Vec<Vec<Option<u32>>>;

fn table_get(t: &Table, a: u32, b: u32) -> Option<u32> {
    t[a as usize][b as usize]
}

/// A finite strict 2-category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strict2Cat {
    pub objects: usize,
    /// boundaries of 1-cells `(src, tgt)`
    pub cells1: Vec<(u32, u32)>,
    /// boundaries of 2-cells `(src1, tgt1)` (parallel 1-cells)
    pub cells2: Vec<(u32, u32)>,
    pub id1: Vec<u32>,
    pub id2: Vec<u32>,
    /// `⊗` on 1-cells: `comp1[f][g] = f ⊗ g` for `src f = tgt g`
    pub comp1: Table,
    /// vertical composition of 2-cells
    pub vcomp2: Table,
    /// horizontal composition of 2-cells
    pub hcomp2: Table,
}

impl Strict2Cat {
    pub fn src1(&self, f: u32) -> u32 {
        self.cells1[f as usize].0
    }
    pub fn tgt1(&self, f: u32) -> u32 {
        self.cells1[f as usize].1
    }
    pub fn src2(&self, a: u32) -> u32 {
        self.cells2[a as usize].0
    }
    pub fn tgt2(&self, a: u32) -> u32 {
        self.cells2[a as usize].1
    }

    pub fn comp1(&self, f: u32, g: u32) -> Result<u32> {
        table_get(&self.comp1, f, g)
            .ok_or_else(|| Error::structure("1-cells not composable"))
    }
    pub fn vcomp2(&self, a: u32, b: u32) -> Result<u32> {
        table_get(&self.vcomp2, a, b)
            .ok_or_else(|| Error::structure("2-cells not vertically composable"))
    }
    pub fn hcomp2(&self, a: u32, b: u32) -> Result<u32> {
        table_get(&self.hcomp2, a, b)
            .ok_or_else(|| Error::structure("2-cells not horizontally composable"))
    }

    /// One-object 2-category on a finite monoid: 1-cells are the monoid
    /// elements (unit at index 0), only identity 2-cells.
    pub fn from_monoid(table: &[Vec<u32>]) -> Result<Self> {
        let n = table.len();
        let cells1 = vec![(0u32, 0u32); n];
        let cells2: Vec<(u32, u32)> = (0..n as u32).map(|f| (f, f)).collect();
        let comp1: Table = table
            .iter()
            .map(|r| r.iter().map(|&v| Some(v)).collect())
            .collect();
        let vcomp2: Table = (0..n as u32)
            .map(|a| (0..n as u32).map(|b| if a == b { Some(a) } else { None }).collect())
            .collect();
        let hcomp2: Table = (0..n)
            .map(|a| (0..n).map(|b| Some(table[a][b])).collect())
            .collect();
        let c = Strict2Cat {
            objects: 1,
            cells1,
            cells2,
            id1: vec![0],
            id2: (0..n as u32).collect(),
            comp1,
            vcomp2,
            hcomp2,
        };
        c.validate()?;
        Ok(c)
    }

    /// One object, one 1-cell, 2-cells a finite abelian group under both
    /// compositions.
    pub fn one_object_one_arrow(a: &FgAbGroup) -> Result<Self> {
        let elems = a.enumerate()?;
        let n = elems.len();
        let mut add = vec![vec![None; n]; n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                add[i][j] = Some(a.elem_index(&a.add(x, y)?)? as u32);
            }
        }
        let c = Strict2Cat {
            objects: 1,
            cells1: vec![(0, 0)],
            cells2: vec![(0, 0); n],
            id1: vec![0],
            id2: vec![0],
            comp1: vec![vec![Some(0)]],
            vcomp2: add.clone(),
            hcomp2: add,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let n1 = self.cells1.len() as u32;
        let n2 = self.cells2.len() as u32;
        if self.id1.len() != self.objects {
            return Err(Error::structure("one identity 1-cell per object required"));
        }
        if self.id2.len() != self.cells1.len() {
            return Err(Error::structure("one identity 2-cell per 1-cell required"));
        }
        for f in 0..n1 {
            let (s, t) = self.cells1[f as usize];
            if s as usize >= self.objects || t as usize >= self.objects {
                return Err(Error::structure("1-cell boundary out of range"));
            }
        }
        for a in 0..n2 {
            let (s, t) = self.cells2[a as usize];
            if s >= n1 || t >= n1 || self.cells1[s as usize] != self.cells1[t as usize] {
                return Err(Error::structure("2-cell boundary is not a parallel pair"));
            }
        }
        // identities typed correctly
        for (x, &f) in self.id1.iter().enumerate() {
            if self.cells1[f as usize] != (x as u32, x as u32) {
                return Err(Error::structure("identity 1-cell has wrong boundary"));
            }
        }
        for (f, &a) in self.id2.iter().enumerate() {
            if self.cells2[a as usize] != (f as u32, f as u32) {
                return Err(Error::structure("identity 2-cell has wrong boundary"));
            }
        }
        // composition domains and boundaries
        for f in 0..n1 {
            for g in 0..n1 {
                let composable = self.src1(f) == self.tgt1(g);
                match table_get(&self.comp1, f, g) {
                    Some(h) => {
                        if !composable
                            || self.cells1[h as usize]
                                != (self.src1(g), self.tgt1(f))
                        {
                            return Err(Error::structure("bad 1-cell composition entry"));
                        }
                    }
                    None => {
                        if composable {
                            return Err(Error::structure("missing 1-cell composition entry"));
                        }
                    }
                }
            }
        }
        for a in 0..n2 {
            for b in 0..n2 {
                let vcomposable = self.src2(a) == self.tgt2(b);
                match table_get(&self.vcomp2, a, b) {
                    Some(c) => {
                        if !vcomposable || self.src2(c) != self.src2(b) || self.tgt2(c) != self.tgt2(a) {
                            return Err(Error::structure("bad vertical composition entry"));
                        }
                    }
                    None => {
                        if vcomposable {
                            return Err(Error::structure("missing vertical composition entry"));
                        }
                    }
                }
                let hcomposable =
                    self.src1(self.src2(a)) == self.tgt1(self.src2(b));
                match table_get(&self.hcomp2, a, b) {
                    Some(c) => {
                        if !hcomposable {
                            return Err(Error::structure("bad horizontal composition entry"));
                        }
                        let s = self.comp1(self.src2(a), self.src2(b))?;
                        let t = self.comp1(self.tgt2(a), self.tgt2(b))?;
                        if self.cells2[c as usize] != (s, t) {
                            return Err(Error::structure("horizontal composite has wrong boundary"));
                        }
                    }
                    None => {
                        if hcomposable {
                            return Err(Error::structure("missing horizontal composition entry"));
                        }
                    }
                }
            }
        }
        // units
        for f in 0..n1 {
            if self.comp1(f, self.id1[self.src1(f) as usize])? != f
                || self.comp1(self.id1[self.tgt1(f) as usize], f)? != f
            {
                return Err(Error::structure("1-cell unit law fails"));
            }
        }
        for a in 0..n2 {
            if self.vcomp2(a, self.id2[self.src2(a) as usize])? != a
                || self.vcomp2(self.id2[self.tgt2(a) as usize], a)? != a
            {
                return Err(Error::structure("vertical unit law fails"));
            }
            let sobj = self.src1(self.src2(a));
            let tobj = self.tgt1(self.src2(a));
            let ids = self.id2[self.id1[sobj as usize] as usize];
            let idt = self.id2[self.id1[tobj as usize] as usize];
            if self.hcomp2(a, ids)? != a || self.hcomp2(idt, a)? != a {
                return Err(Error::structure("horizontal unit law fails"));
            }
        }
        // associativity of the three compositions
        for f in 0..n1 {
            for g in 0..n1 {
                if self.src1(f) != self.tgt1(g) {
                    continue;
                }
                for h in 0..n1 {
                    if self.src1(g) != self.tgt1(h) {
                        continue;
                    }
                    if self.comp1(self.comp1(f, g)?, h)? != self.comp1(f, self.comp1(g, h)?)? {
                        return Err(Error::structure("1-cell composition not associative"));
                    }
                }
            }
        }
        for a in 0..n2 {
            for b in 0..n2 {
                for c in 0..n2 {
                    if self.src2(a) == self.tgt2(b) && self.src2(b) == self.tgt2(c) {
                        if self.vcomp2(self.vcomp2(a, b)?, c)?
                            != self.vcomp2(a, self.vcomp2(b, c)?)?
                        {
                            return Err(Error::structure("vertical composition not associative"));
                        }
                    }
                    if self.src1(self.src2(a)) == self.tgt1(self.src2(b))
                        && self.src1(self.src2(b)) == self.tgt1(self.src2(c))
                    {
                        if self.hcomp2(self.hcomp2(a, b)?, c)?
                            != self.hcomp2(a, self.hcomp2(b, c)?)?
                        {
                            return Err(Error::structure("horizontal composition not associative"));
                        }
                    }
                }
            }
        }
        // interchange and functoriality of horizontal composition
        for a in 0..n2 {
            for b in 0..n2 {
                if self.src1(self.src2(a)) != self.tgt1(self.src2(b)) {
                    continue;
                }
                for c in 0..n2 {
                    for d in 0..n2 {
                        if self.src2(a) != self.tgt2(c) || self.src2(b) != self.tgt2(d) {
                            continue;
                        }
                        let lhs = self.hcomp2(self.vcomp2(a, c)?, self.vcomp2(b, d)?)?;
                        let rhs = self.vcomp2(self.hcomp2(a, b)?, self.hcomp2(c, d)?)?;
                        if lhs != rhs {
                            return Err(Error::structure("interchange law fails"));
                        }
                    }
                }
            }
        }
        for f in 0..n1 {
            for g in 0..n1 {
                if self.src1(f) == self.tgt1(g) {
                    let lhs = self.hcomp2(self.id2[f as usize], self.id2[g as usize])?;
                    if lhs != self.id2[self.comp1(f, g)? as usize] {
                        return Err(Error::structure("identities are not ⊗-multiplicative"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A finite strict 3-category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strict3Cat {
    pub objects: usize,
    pub cells1: Vec<(u32, u32)>,
    pub cells2: Vec<(u32, u32)>,
    /// boundaries of 3-cells `(src2, tgt2)` (parallel 2-cells)
    pub cells3: Vec<(u32, u32)>,
    pub id1: Vec<u32>,
    pub id2: Vec<u32>,
    pub id3: Vec<u32>,
    pub comp1: Table,
    pub vcomp2: Table,
    pub hcomp2: Table,
    /// composition of 3-cells along a 2-cell
    pub comp3_2: Table,
    /// composition of 3-cells along a 1-cell
    pub comp3_1: Table,
    /// composition of 3-cells across objects
    pub comp3_0: Table,
}

impl Strict3Cat {
    pub fn src1(&self, f: u32) -> u32 {
        self.cells1[f as usize].0
    }
    pub fn tgt1(&self, f: u32) -> u32 {
        self.cells1[f as usize].1
    }
    pub fn src2(&self, a: u32) -> u32 {
        self.cells2[a as usize].0
    }
    pub fn tgt2(&self, a: u32) -> u32 {
        self.cells2[a as usize].1
    }
    pub fn src3(&self, x: u32) -> u32 {
        self.cells3[x as usize].0
    }
    pub fn tgt3(&self, x: u32) -> u32 {
        self.cells3[x as usize].1
    }

    pub fn comp1(&self, f: u32, g: u32) -> Result<u32> {
        table_get(&self.comp1, f, g).ok_or_else(|| Error::structure("1-cells not composable"))
    }
    pub fn vcomp2(&self, a: u32, b: u32) -> Result<u32> {
        table_get(&self.vcomp2, a, b)
            .ok_or_else(|| Error::structure("2-cells not vertically composable"))
    }
    pub fn hcomp2(&self, a: u32, b: u32) -> Result<u32> {
        table_get(&self.hcomp2, a, b)
            .ok_or_else(|| Error::structure("2-cells not horizontally composable"))
    }
    pub fn comp3_2(&self, x: u32, y: u32) -> Result<u32> {
        table_get(&self.comp3_2, x, y)
            .ok_or_else(|| Error::structure("3-cells not composable along a 2-cell"))
    }
    pub fn comp3_1(&self, x: u32, y: u32) -> Result<u32> {
        table_get(&self.comp3_1, x, y)
            .ok_or_else(|| Error::structure("3-cells not composable along a 1-cell"))
    }
    pub fn comp3_0(&self, x: u32, y: u32) -> Result<u32> {
        table_get(&self.comp3_0, x, y)
            .ok_or_else(|| Error::structure("3-cells not composable across objects"))
    }

    /// True when every 3-cell is an identity (the image of a 2-category).
    pub fn has_identity_3_cells(&self) -> bool {
        self.cells3.len() == self.cells2.len()
            && self.id3.iter().enumerate().all(|(a, &x)| {
                self.cells3[x as usize] == (a as u32, a as u32)
            })
            && (0..self.cells3.len() as u32).all(|x| self.src3(x) == self.tgt3(x))
    }

    /// Recover a finite category when both 2- and 3-cells are identities.
    pub fn as_category(&self) -> Option<crate::cat::FiniteCategory> {
        if !self.has_identity_3_cells() || self.cells2.len() != self.cells1.len() {
            return None;
        }
        if (0..self.cells2.len() as u32).any(|a| self.src2(a) != self.tgt2(a)) {
            return None;
        }
        let mor: Vec<(usize, usize)> = self
            .cells1
            .iter()
            .map(|&(s, t)| (s as usize, t as usize))
            .collect();
        let compose = self.comp1.clone();
        crate::cat::FiniteCategory::new(self.objects, mor, self.id1.clone(), compose).ok()
    }

    /// View a strict 2-category as a 3-category with identity 3-cells.
    pub fn from_2cat(b: &Strict2Cat) -> Result<Self> {
        let n2 = b.cells2.len();
        let cells3: Vec<(u32, u32)> = (0..n2 as u32).map(|a| (a, a)).collect();
        let only = |t: &Table, a: u32, b_: u32| -> Option<u32> { table_get(t, a, b_) };
        let mk = |f: &dyn Fn(u32, u32) -> Option<u32>| -> Table {
            (0..n2 as u32)
                .map(|x| (0..n2 as u32).map(|y| f(x, y)).collect())
                .collect()
        };
        let comp3_2: Table = mk(&|x, y| if x == y { Some(x) } else { None });
        let comp3_1: Table = mk(&|x, y| only(&b.vcomp2, x, y));
        let comp3_0: Table = mk(&|x, y| only(&b.hcomp2, x, y));
        let t = Strict3Cat {
            objects: b.objects,
            cells1: b.cells1.clone(),
            cells2: b.cells2.clone(),
            cells3,
            id1: b.id1.clone(),
            id2: b.id2.clone(),
            id3: (0..n2 as u32).collect(),
            comp1: b.comp1.clone(),
            vcomp2: b.vcomp2.clone(),
            hcomp2: b.hcomp2.clone(),
            comp3_2,
            comp3_1,
            comp3_0,
        };
        t.validate()?;
        Ok(t)
    }

    /// View a finite category as a 3-category with identity 2- and 3-cells.
    pub fn from_category(c: &crate::cat::FiniteCategory) -> Result<Self> {
        let n1 = c.morphisms();
        let cells1: Vec<(u32, u32)> =
            (0..n1 as u32).map(|a| (c.src(a) as u32, c.tgt(a) as u32)).collect();
        let comp1: Table = (0..n1 as u32)
            .map(|a| (0..n1 as u32).map(|b| c.comp(a, b).ok()).collect())
            .collect();
        let b = Strict2Cat {
            objects: c.objects(),
            cells1,
            cells2: (0..n1 as u32).map(|a| (a, a)).collect(),
            id1: (0..c.objects()).map(|x| c.identity_of(x)).collect(),
            id2: (0..n1 as u32).collect(),
            comp1: comp1.clone(),
            vcomp2: (0..n1 as u32)
                .map(|a| {
                    (0..n1 as u32).map(|b| if a == b { Some(a) } else { None }).collect()
                })
                .collect(),
            hcomp2: comp1,
        };
        Strict3Cat::from_2cat(&b)
    }

    /// The double suspension of a finite abelian group: one 0-, 1-, and
    /// 2-cell, 3-cells the elements of the group, every composition given
    /// by addition.
    pub fn sigma2(a: &FgAbGroup) -> Result<Self> {
        let elems = a.enumerate()?;
        let n = elems.len();
        let mut add: Table = vec![vec![None; n]; n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                add[i][j] = Some(a.elem_index(&a.add(x, y)?)? as u32);
            }
        }
        let t = Strict3Cat {
            objects: 1,
            cells1: vec![(0, 0)],
            cells2: vec![(0, 0)],
            cells3: vec![(0, 0); n],
            id1: vec![0],
            id2: vec![0],
            id3: vec![0],
            comp1: vec![vec![Some(0)]],
            vcomp2: vec![vec![Some(0)]],
            hcomp2: vec![vec![Some(0)]],
            comp3_2: add.clone(),
            comp3_1: add.clone(),
            comp3_0: add,
        };
        t.validate()?;
        Ok(t)
    }

    /// Componentwise product of two strict 3-categories.
    pub fn product(s: &Strict3Cat, t: &Strict3Cat) -> Result<Strict3Cat> {
        let pair = |n: usize, m: usize| (0..n).flat_map(move |i| (0..m).map(move |j| (i, j)));
        let n1 = s.cells1.len() * t.cells1.len();
        let i1 = |a: usize, b: usize| (a * t.cells1.len() + b) as u32;
        let i2 = |a: usize, b: usize| (a * t.cells2.len() + b) as u32;
        let i3 = |a: usize, b: usize| (a * t.cells3.len() + b) as u32;
        let io = |a: u32, b: u32| a as usize * t.objects + b as usize;
        let cells1: Vec<(u32, u32)> = pair(s.cells1.len(), t.cells1.len())
            .map(|(a, b)| {
                (io(s.src1(a as u32), t.src1(b as u32)) as u32,
                 io(s.tgt1(a as u32), t.tgt1(b as u32)) as u32)
            })
            .collect();
        let cells2: Vec<(u32, u32)> = pair(s.cells2.len(), t.cells2.len())
            .map(|(a, b)| {
                (i1(s.src2(a as u32) as usize, t.src2(b as u32) as usize),
                 i1(s.tgt2(a as u32) as usize, t.tgt2(b as u32) as usize))
            })
            .collect();
        let cells3: Vec<(u32, u32)> = pair(s.cells3.len(), t.cells3.len())
            .map(|(a, b)| {
                (i2(s.src3(a as u32) as usize, t.src3(b as u32) as usize),
                 i2(s.tgt3(a as u32) as usize, t.tgt3(b as u32) as usize))
            })
            .collect();
        let tab = |ns: usize, nt: usize,
                   f: &dyn Fn(u32, u32, u32, u32) -> Option<u32>|
         -> Table {
            let n = ns * nt;
            (0..n)
                .map(|x| {
                    let (xs, xt) = ((x / nt) as u32, (x % nt) as u32);
                    (0..n)
                        .map(|y| {
                            let (ys, yt) = ((y / nt) as u32, (y % nt) as u32);
                            f(xs, xt, ys, yt)
                        })
                        .collect()
                })
                .collect()
        };
        let lift = |ts: &Table, tt: &Table, nt: usize| -> Table {
            tab(ts.len(), nt, &|xs, xt, ys, yt| {
                match (table_get(ts, xs, ys), table_get(tt, xt, yt)) {
                    (Some(u), Some(v)) => Some(u * nt as u32 + v),
                    _ => None,
                }
            })
        };
        let out = Strict3Cat {
            objects: s.objects * t.objects,
            cells1,
            cells2,
            cells3,
            id1: pair(s.objects, t.objects)
                .map(|(a, b)| i1(s.id1[a] as usize, t.id1[b] as usize))
                .collect(),
            id2: (0..n1)
                .map(|f| {
                    let (fs, ft) = (f / t.cells1.len(), f % t.cells1.len());
                    i2(s.id2[fs] as usize, t.id2[ft] as usize)
                })
                .collect(),
            id3: (0..s.cells2.len() * t.cells2.len())
                .map(|a| {
                    let (as_, at) = (a / t.cells2.len(), a % t.cells2.len());
                    i3(s.id3[as_] as usize, t.id3[at] as usize)
                })
                .collect(),
            comp1: lift(&s.comp1, &t.comp1, t.cells1.len()),
            vcomp2: lift(&s.vcomp2, &t.vcomp2, t.cells2.len()),
            hcomp2: lift(&s.hcomp2, &t.hcomp2, t.cells2.len()),
            comp3_2: lift(&s.comp3_2, &t.comp3_2, t.cells3.len()),
            comp3_1: lift(&s.comp3_1, &t.comp3_1, t.cells3.len()),
            comp3_0: lift(&s.comp3_0, &t.comp3_0, t.cells3.len()),
        };
        out.validate()?;
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        let n1 = self.cells1.len() as u32;
        let n2 = self.cells2.len() as u32;
        let n3 = self.cells3.len() as u32;
        // boundary sanity
        for f in 0..n1 {
            let (s, t) = self.cells1[f as usize];
            if s as usize >= self.objects || t as usize >= self.objects {
                return Err(Error::structure("1-cell boundary out of range"));
            }
        }
        for a in 0..n2 {
            let (s, t) = self.cells2[a as usize];
            if s >= n1 || t >= n1 || self.cells1[s as usize] != self.cells1[t as usize] {
                return Err(Error::structure("2-cell boundary is not parallel"));
            }
        }
        for x in 0..n3 {
            let (s, t) = self.cells3[x as usize];
            if s >= n2 || t >= n2 || self.cells2[s as usize] != self.cells2[t as usize] {
                return Err(Error::structure("3-cell boundary is not parallel"));
            }
        }
        if self.id1.len() != self.objects
            || self.id2.len() != self.cells1.len()
            || self.id3.len() != self.cells2.len()
        {
            return Err(Error::structure("identity tables have wrong lengths"));
        }
        // the underlying 2-truncation must be a strict 2-category
        let two = Strict2Cat {
            objects: self.objects,
            cells1: self.cells1.clone(),
            cells2: self.cells2.clone(),
            id1: self.id1.clone(),
            id2: self.id2.clone(),
            comp1: self.comp1.clone(),
            vcomp2: self.vcomp2.clone(),
            hcomp2: self.hcomp2.clone(),
        };
        two.validate()?;
        // 3-cell composition typing
        for x in 0..n3 {
            for y in 0..n3 {
                // along a 2-cell
                let ok2 = self.src3(x) == self.tgt3(y);
                match table_get(&self.comp3_2, x, y) {
                    Some(z) => {
                        if !ok2
                            || self.src3(z) != self.src3(y)
                            || self.tgt3(z) != self.tgt3(x)
                        {
                            return Err(Error::structure("bad 3-cell ·₂ entry"));
                        }
                    }
                    None => {
                        if ok2 {
                            return Err(Error::structure("missing 3-cell ·₂ entry"));
                        }
                    }
                }
                // along a 1-cell
                let ok1 = self.src2(self.src3(x)) == self.tgt2(self.src3(y));
                match table_get(&self.comp3_1, x, y) {
                    Some(z) => {
                        if !ok1 {
                            return Err(Error::structure("bad 3-cell ∘₁ entry"));
                        }
                        let s = self.vcomp2(self.src3(x), self.src3(y))?;
                        let t = self.vcomp2(self.tgt3(x), self.tgt3(y))?;
                        if self.cells3[z as usize] != (s, t) {
                            return Err(Error::structure("3-cell ∘₁ has wrong boundary"));
                        }
                    }
                    None => {
                        if ok1 {
                            return Err(Error::structure("missing 3-cell ∘₁ entry"));
                        }
                    }
                }
                // across objects
                let sx = self.src1(self.src2(self.src3(x)));
                let ty = self.tgt1(self.src2(self.src3(y)));
                let ok0 = sx == ty;
                match table_get(&self.comp3_0, x, y) {
                    Some(z) => {
                        if !ok0 {
                            return Err(Error::structure("bad 3-cell ⊗ entry"));
                        }
                        let s = self.hcomp2(self.src3(x), self.src3(y))?;
                        let t = self.hcomp2(self.tgt3(x), self.tgt3(y))?;
                        if self.cells3[z as usize] != (s, t) {
                            return Err(Error::structure("3-cell ⊗ has wrong boundary"));
                        }
                    }
                    None => {
                        if ok0 {
                            return Err(Error::structure("missing 3-cell ⊗ entry"));
                        }
                    }
                }
            }
        }
        // units at the 3-cell level
        for x in 0..n3 {
            let i2s = self.id3[self.src3(x) as usize];
            let i2t = self.id3[self.tgt3(x) as usize];
            if self.comp3_2(x, i2s)? != x || self.comp3_2(i2t, x)? != x {
                return Err(Error::structure("3-cell ·₂ unit law fails"));
            }
            let f_src = self.src2(self.src3(x));
            let s1 = self.src1(f_src);
            let t1 = self.tgt1(f_src);
            let id_s = self.id3[self.id2[self.id1[s1 as usize] as usize] as usize];
            let id_t = self.id3[self.id2[self.id1[t1 as usize] as usize] as usize];
            let idf_s = self.id3[self.id2[self.src1(f_src) as usize] as usize];
            let _ = idf_s;
            if self.comp3_0(x, id_s)? != x || self.comp3_0(id_t, x)? != x {
                return Err(Error::structure("3-cell ⊗ unit law fails"));
            }
        }
        // identity 3-cells respect the lower compositions
        for a in 0..n2 {
            for b in 0..n2 {
                if self.src2(a) == self.tgt2(b) {
                    if self.comp3_1(self.id3[a as usize], self.id3[b as usize])?
                        != self.id3[self.vcomp2(a, b)? as usize]
                    {
                        return Err(Error::structure("id3 not multiplicative under ∘₁"));
                    }
                }
                if self.src1(self.src2(a)) == self.tgt1(self.src2(b)) {
                    if self.comp3_0(self.id3[a as usize], self.id3[b as usize])?
                        != self.id3[self.hcomp2(a, b)? as usize]
                    {
                        return Err(Error::structure("id3 not multiplicative under ⊗"));
                    }
                }
            }
        }
        // associativity and interchange at the 3-cell level
        for x in 0..n3 {
            for y in 0..n3 {
                for z in 0..n3 {
                    if self.src3(x) == self.tgt3(y) && self.src3(y) == self.tgt3(z) {
                        if self.comp3_2(self.comp3_2(x, y)?, z)?
                            != self.comp3_2(x, self.comp3_2(y, z)?)?
                        {
                            return Err(Error::structure("·₂ not associative"));
                        }
                    }
                    let c1 = |u: u32, v: u32| {
                        self.src2(self.src3(u)) == self.tgt2(self.src3(v))
                    };
                    if c1(x, y) && c1(y, z) {
                        if self.comp3_1(self.comp3_1(x, y)?, z)?
                            != self.comp3_1(x, self.comp3_1(y, z)?)?
                        {
                            return Err(Error::structure("∘₁ not associative on 3-cells"));
                        }
                    }
                    let c0 = |u: u32, v: u32| {
                        self.src1(self.src2(self.src3(u)))
                            == self.tgt1(self.src2(self.src3(v)))
                    };
                    if c0(x, y) && c0(y, z) {
                        if self.comp3_0(self.comp3_0(x, y)?, z)?
                            != self.comp3_0(x, self.comp3_0(y, z)?)?
                        {
                            return Err(Error::structure("⊗ not associative on 3-cells"));
                        }
                    }
                }
            }
        }
        // interchange: (·₂, ∘₁), (·₂, ⊗), (∘₁, ⊗)
        for x in 0..n3 {
            for y in 0..n3 {
                for u in 0..n3 {
                    for v in 0..n3 {
                        // (x ·₂ u) ∘₁ (y ·₂ v) = (x ∘₁ y) ·₂ (u ∘₁ v)
                        if self.src3(x) == self.tgt3(u)
                            && self.src3(y) == self.tgt3(v)
                            && self.src2(self.src3(x)) == self.tgt2(self.src3(y))
                        {
                            let lhs =
                                self.comp3_1(self.comp3_2(x, u)?, self.comp3_2(y, v)?)?;
                            let rhs =
                                self.comp3_2(self.comp3_1(x, y)?, self.comp3_1(u, v)?)?;
                            if lhs != rhs {
                                return Err(Error::structure("(·₂,∘₁) interchange fails"));
                            }
                        }
                        if self.src3(x) == self.tgt3(u)
                            && self.src3(y) == self.tgt3(v)
                            && self.src1(self.src2(self.src3(x)))
                                == self.tgt1(self.src2(self.src3(y)))
                        {
                            let lhs =
                                self.comp3_0(self.comp3_2(x, u)?, self.comp3_2(y, v)?)?;
                            let rhs =
                                self.comp3_2(self.comp3_0(x, y)?, self.comp3_0(u, v)?)?;
                            if lhs != rhs {
                                return Err(Error::structure("(·₂,⊗) interchange fails"));
                            }
                        }
                        if self.src2(self.src3(x)) == self.tgt2(self.src3(u))
                            && self.src2(self.src3(y)) == self.tgt2(self.src3(v))
                            && self.src1(self.src2(self.src3(x)))
                                == self.tgt1(self.src2(self.src3(y)))
                        {
                            let lhs =
                                self.comp3_0(self.comp3_1(x, u)?, self.comp3_1(y, v)?)?;
                            let rhs =
                                self.comp3_1(self.comp3_0(x, y)?, self.comp3_0(u, v)?)?;
                            if lhs != rhs {
                                return Err(Error::structure("(∘₁,⊗) interchange fails"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
