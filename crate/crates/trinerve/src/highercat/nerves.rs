//! Nerve constructions for strict 2- and 3-categories: the Duskin nerve,
//! the geometric nerve of a strict 3-category (simplices are unitary
//! representations of the ordinals), and the trisimplicial triple nerve.

use std::collections::{BTreeMap, HashMap};

use crate::cat::ordinal_category;
use crate::error::{Error, Result};
use crate::simplicial::{
    coskeletal_extend, materialize, Budget, ImplicitSSet, MultiImplicit, TruncSSet, Tuple,
};

use super::cells::{Strict2Cat, Strict3Cat};
use super::rep::Rep3;

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

fn pair_index(p: usize) -> BTreeMap<(usize, usize), usize> {
    increasing(p, 2)
        .into_iter()
        .enumerate()
        .map(|(n, t)| ((t[0], t[1]), n))
        .collect()
}

fn tri_index(p: usize) -> BTreeMap<(usize, usize, usize), usize> {
    increasing(p, 3)
        .into_iter()
        .enumerate()
        .map(|(n, t)| ((t[0], t[1], t[2]), n))
        .collect()
}

fn tet_index(p: usize) -> BTreeMap<(usize, usize, usize, usize), usize> {
    increasing(p, 4)
        .into_iter()
        .enumerate()
        .map(|(n, t)| ((t[0], t[1], t[2], t[3]), n))
        .collect()
}

/// Simplex data of a geometric-nerve style family, indexed by increasing
/// vertex tuples.
struct Family<'a> {
    p: usize,
    tuple: &'a [i64],
    pairs: BTreeMap<(usize, usize), usize>,
    tris: BTreeMap<(usize, usize, usize), usize>,
    tets: BTreeMap<(usize, usize, usize, usize), usize>,
}

impl<'a> Family<'a> {
    fn new(p: usize, tuple: &'a [i64]) -> Self {
        Family { p, tuple, pairs: pair_index(p), tris: tri_index(p), tets: tet_index(p) }
    }

    fn obj(&self, i: usize) -> u32 {
        self.tuple[i] as u32
    }
    fn one(&self, i: usize, j: usize) -> u32 {
        self.tuple[self.p + 1 + self.pairs[&(i, j)]] as u32
    }
    fn two(&self, i: usize, j: usize, k: usize) -> u32 {
        self.tuple[self.p + 1 + self.pairs.len() + self.tris[&(i, j, k)]] as u32
    }
    fn three(&self, i: usize, j: usize, k: usize, l: usize) -> u32 {
        self.tuple[self.p + 1 + self.pairs.len() + self.tris.len() + self.tets[&(i, j, k, l)]]
            as u32
    }
}

/// Edge value of a possibly-degenerate index pair: identities on repeats.
fn edge_of(t: &Strict3Cat, fam: &Family<'_>, i: usize, j: usize) -> u32 {
    if i == j {
        t.id1[fam.obj(i) as usize]
    } else {
        fam.one(i, j)
    }
}

/// Triangle value with identities on repeated indices.
fn triangle_of(t: &Strict3Cat, fam: &Family<'_>, i: usize, j: usize, k: usize) -> u32 {
    if i == j {
        t.id2[edge_of(t, fam, j, k) as usize]
    } else if j == k {
        t.id2[edge_of(t, fam, i, j) as usize]
    } else {
        fam.two(i, j, k)
    }
}

/// Source 2-cell of the tetrahedron 3-cell: `F_{ikl} ∘₁ (F_{ijk} ⊗ 1)`.
fn tet_source(
    t: &Strict3Cat,
    fam: &Family<'_>,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<u32> {
    let whisk = t.hcomp2(
        triangle_of(t, fam, i, j, k),
        t.id2[edge_of(t, fam, k, l) as usize],
    )?;
    t.vcomp2(triangle_of(t, fam, i, k, l), whisk)
}

/// Target 2-cell: `F_{ijl} ∘₁ (1 ⊗ F_{jkl})`.
fn tet_target(
    t: &Strict3Cat,
    fam: &Family<'_>,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<u32> {
    let whisk = t.hcomp2(
        t.id2[edge_of(t, fam, i, j) as usize],
        triangle_of(t, fam, j, k, l),
    )?;
    t.vcomp2(triangle_of(t, fam, i, j, l), whisk)
}

fn tet_of(
    t: &Strict3Cat,
    fam: &Family<'_>,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<u32> {
    if i == j || j == k || k == l {
        Ok(t.id3[tet_source(t, fam, i, j, k, l)? as usize])
    } else {
        Ok(fam.three(i, j, k, l))
    }
}

struct BoundaryMaps {
    cells1_by: HashMap<(u32, u32), Vec<u32>>,
    cells2_by: HashMap<(u32, u32), Vec<u32>>,
    cells3_by: HashMap<(u32, u32), Vec<u32>>,
}

fn boundary_maps(t: &Strict3Cat) -> BoundaryMaps {
    let mut cells1_by: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
    for (f, &b) in t.cells1.iter().enumerate() {
        cells1_by.entry(b).or_default().push(f as u32);
    }
    let mut cells2_by: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
    for (a, &b) in t.cells2.iter().enumerate() {
        cells2_by.entry(b).or_default().push(a as u32);
    }
    let mut cells3_by: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
    for (x, &b) in t.cells3.iter().enumerate() {
        cells3_by.entry(b).or_default().push(x as u32);
    }
    BoundaryMaps { cells1_by, cells2_by, cells3_by }
}

/// The geometric nerve of a strict 3-category as an implicit simplicial set
/// in dimensions `0..=4`; a `p`-simplex consists of objects on vertices,
/// 1-cells on edges, 2-cells on triangles, and 3-cells on tetrahedra,
/// boundary-compatible, with the CR1 pasting condition in dimension 4.
pub struct Geometric3Implicit<'a> {
    t: &'a Strict3Cat,
    maps: BoundaryMaps,
    ord4: crate::cat::FiniteCategory,
}

impl<'a> Geometric3Implicit<'a> {
    pub fn new(t: &'a Strict3Cat) -> Self {
        Geometric3Implicit { t, maps: boundary_maps(t), ord4: ordinal_category(4) }
    }

    fn layout(&self, p: usize) -> (usize, usize, usize, usize) {
        let pairs = p * (p + 1) / 2;
        let tris = if p >= 2 { binom(p + 1, 3) } else { 0 };
        let tets = if p >= 3 { binom(p + 1, 4) } else { 0 };
        (p + 1, pairs, tris, tets)
    }

    /// Check the CR1 pasting equation on the single 5-tuple of a 4-simplex
    /// by rebuilding it as a representation of `[4]`.
    fn cr1_ok(&self, tuple: &[i64]) -> Result<bool> {
        let rep = self.family_to_rep(tuple)?;
        let ord = &self.ord4;
        // the only all-nonidentity quadruple is ((0,1),(1,2),(2,3),(3,4))
        let find = |i: usize, j: usize| -> u32 {
            (0..ord.morphisms() as u32)
                .find(|&m| ord.tgt(m) == i && ord.src(m) == j)
                .unwrap()
        };
        rep.cr1_holds(ord, self.t, find(0, 1), find(1, 2), find(2, 3), find(3, 4))
    }

    fn family_to_rep(&self, tuple: &[i64]) -> Result<Rep3> {
        let p = 4;
        let fam = Family::new(p, tuple);
        let ord = &self.ord4;
        let t = self.t;
        let vertex = |m: u32| (ord.tgt(m), ord.src(m)); // arrow (i,j): j->i
        let mut on_mor = Vec::with_capacity(ord.morphisms());
        for m in 0..ord.morphisms() as u32 {
            let (i, j) = vertex(m);
            on_mor.push(edge_of(t, &fam, i, j));
        }
        let mut on_pairs = BTreeMap::new();
        let mut on_triples = BTreeMap::new();
        for a in 0..ord.morphisms() as u32 {
            for b in 0..ord.morphisms() as u32 {
                if ord.src(a) != ord.tgt(b) {
                    continue;
                }
                let (i, j) = vertex(a);
                let (_, k) = vertex(b);
                on_pairs.insert((a, b), triangle_of(t, &fam, i, j, k));
                for c in 0..ord.morphisms() as u32 {
                    if ord.src(b) != ord.tgt(c) {
                        continue;
                    }
                    let (_, l) = vertex(c);
                    on_triples.insert((a, b, c), tet_of(t, &fam, i, j, k, l)?);
                }
            }
        }
        Ok(Rep3 {
            on_obj: (0..=p).map(|i| fam.obj(i)).collect(),
            on_mor,
            on_pairs,
            on_triples,
        })
    }
}

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

impl ImplicitSSet for Geometric3Implicit<'_> {
    fn carrier(&self, p: usize) -> Result<Vec<Tuple>> {
        if p > 4 {
            return Err(Error::structure(
                "geometric nerve carriers are explicit only up to dimension 4",
            ));
        }
        let (nv, ne, nt, nq) = self.layout(p);
        let len = nv + ne + nt + nq;
        let pairs: Vec<(usize, usize)> =
            increasing(p, 2).into_iter().map(|v| (v[0], v[1])).collect();
        let tris: Vec<(usize, usize, usize)> =
            increasing(p, 3).into_iter().map(|v| (v[0], v[1], v[2])).collect();
        let tets: Vec<(usize, usize, usize, usize)> =
            increasing(p, 4).into_iter().map(|v| (v[0], v[1], v[2], v[3])).collect();
        let mut out = Vec::new();
        let mut tuple = vec![0i64; len];
        self.enum_objects(p, 0, &mut tuple, &pairs, &tris, &tets, &mut out)?;
        Ok(out)
    }

    fn face(&self, p: usize, x: &Tuple, i: u8) -> Result<Tuple> {
        let fam = Family::new(p, x);
        let m = i as usize;
        // vertex map of the face inclusion: skip m
        let v = |a: usize| if a < m { a } else { a + 1 };
        let q = p - 1;
        let (nv, ne, nt, nq) = self.layout(q);
        let mut out = Vec::with_capacity(nv + ne + nt + nq);
        for a in 0..=q {
            out.push(fam.obj(v(a)) as i64);
        }
        for t in increasing(q, 2) {
            out.push(fam.one(v(t[0]), v(t[1])) as i64);
        }
        for t in increasing(q, 3) {
            out.push(fam.two(v(t[0]), v(t[1]), v(t[2])) as i64);
        }
        for t in increasing(q, 4) {
            out.push(fam.three(v(t[0]), v(t[1]), v(t[2]), v(t[3])) as i64);
        }
        Ok(out)
    }

    fn degeneracy(&self, p: usize, x: &Tuple, j: u8) -> Result<Tuple> {
        let fam = Family::new(p, x);
        let m = j as usize;
        // vertex map of the collapse: repeat m
        let v = |a: usize| if a <= m { a } else { a - 1 };
        let q = p + 1;
        let (nv, ne, nt, nq) = self.layout(q);
        let mut out = Vec::with_capacity(nv + ne + nt + nq);
        let t = self.t;
        for a in 0..=q {
            out.push(fam.obj(v(a)) as i64);
        }
        for e in increasing(q, 2) {
            out.push(edge_of(t, &fam, v(e[0]), v(e[1])) as i64);
        }
        for e in increasing(q, 3) {
            out.push(triangle_of(t, &fam, v(e[0]), v(e[1]), v(e[2])) as i64);
        }
        for e in increasing(q, 4) {
            out.push(tet_of(t, &fam, v(e[0]), v(e[1]), v(e[2]), v(e[3]))? as i64);
        }
        Ok(out)
    }
}

impl Geometric3Implicit<'_> {
    #[allow(clippy::too_many_arguments)]
    fn enum_objects(
        &self,
        p: usize,
        at: usize,
        tuple: &mut Vec<i64>,
        pairs: &[(usize, usize)],
        tris: &[(usize, usize, usize)],
        tets: &[(usize, usize, usize, usize)],
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if at == p + 1 {
            return self.enum_ones(p, 0, tuple, pairs, tris, tets, out);
        }
        for o in 0..self.t.objects as i64 {
            tuple[at] = o;
            self.enum_objects(p, at + 1, tuple, pairs, tris, tets, out)?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn enum_ones(
        &self,
        p: usize,
        at: usize,
        tuple: &mut Vec<i64>,
        pairs: &[(usize, usize)],
        tris: &[(usize, usize, usize)],
        tets: &[(usize, usize, usize, usize)],
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if at == pairs.len() {
            return self.enum_twos(p, 0, tuple, pairs, tris, tets, out);
        }
        let (i, j) = pairs[at];
        let key = (tuple[j] as u32, tuple[i] as u32);
        if let Some(cands) = self.maps.cells1_by.get(&key) {
            for &f in cands {
                tuple[p + 1 + at] = f as i64;
                self.enum_ones(p, at + 1, tuple, pairs, tris, tets, out)?;
            }
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn enum_twos(
        &self,
        p: usize,
        at: usize,
        tuple: &mut Vec<i64>,
        pairs: &[(usize, usize)],
        tris: &[(usize, usize, usize)],
        tets: &[(usize, usize, usize, usize)],
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if at == tris.len() {
            return self.enum_threes(p, 0, tuple, pairs, tris, tets, out);
        }
        let base = p + 1 + pairs.len();
        let (i, j, k) = tris[at];
        let fam = Family::new(p, tuple);
        let src = self.t.comp1(fam.one(i, j), fam.one(j, k))?;
        let tgt = fam.one(i, k);
        if let Some(cands) = self.maps.cells2_by.get(&(src, tgt)) {
            let cands = cands.clone();
            for f in cands {
                tuple[base + at] = f as i64;
                self.enum_twos(p, at + 1, tuple, pairs, tris, tets, out)?;
            }
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn enum_threes(
        &self,
        p: usize,
        at: usize,
        tuple: &mut Vec<i64>,
        pairs: &[(usize, usize)],
        tris: &[(usize, usize, usize)],
        tets: &[(usize, usize, usize, usize)],
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if at == tets.len() {
            if p == 4 && !self.cr1_ok(tuple)? {
                return Ok(());
            }
            out.push(tuple.clone());
            return Ok(());
        }
        let base = p + 1 + pairs.len() + tris.len();
        let (i, j, k, l) = tets[at];
        let fam = Family::new(p, tuple);
        let src = tet_source(self.t, &fam, i, j, k, l)?;
        let tgt = tet_target(self.t, &fam, i, j, k, l)?;
        if let Some(cands) = self.maps.cells3_by.get(&(src, tgt)) {
            let cands = cands.clone();
            for f in cands {
                tuple[base + at] = f as i64;
                self.enum_threes(p, at + 1, tuple, pairs, tris, tets, out)?;
            }
        }
        Ok(())
    }
}

/// The geometric nerve of a strict 3-category, truncated at `n <= 5`
/// (dimension 5 is produced coskeletally).
pub fn geometric_nerve_3(t: &Strict3Cat, n: usize, budget: Budget) -> Result<TruncSSet> {
    if n > 5 {
        return Err(Error::structure("geometric nerve truncation capped at 5"));
    }
    let im = Geometric3Implicit::new(t);
    let x = materialize(&im, n.min(4), budget)?;
    if n == 5 {
        coskeletal_extend(&x, 5, budget)
    } else {
        Ok(x)
    }
}

/// The Duskin nerve of a strict 2-category: the geometric nerve of the
/// 2-category viewed as a 3-category with identity 3-cells.
pub fn duskin_nerve(b: &Strict2Cat, n: usize, budget: Budget) -> Result<TruncSSet> {
    let t = Strict3Cat::from_2cat(b)?;
    geometric_nerve_3(&t, n, budget)
}

/// The trisimplicial triple nerve of a strict 3-category.  The
/// `(p,q,r)`-level carries, per outer column, a `q`-chain of 1-cells
/// filled by `r`-chains of 2-cells connected by 3-cells.
pub struct TripleNerve<'a> {
    t: &'a Strict3Cat,
    maps: BoundaryMaps,
}

impl<'a> TripleNerve<'a> {
    pub fn new(t: &'a Strict3Cat) -> Self {
        TripleNerve { t, maps: boundary_maps(t) }
    }
}

/// Slot layout of a triple-nerve level tuple.
struct TripleLayout {
    p: usize,
    q: usize,
    r: usize,
}

impl TripleLayout {
    fn new(levels: &[usize]) -> Self {
        TripleLayout { p: levels[0], q: levels[1], r: levels[2] }
    }
    fn len(&self) -> usize {
        (self.p + 1)
            + self.p * (self.q + 1)
            + self.p * self.q * (self.r + 1)
            + self.p * self.q * self.r
    }
    fn t_at(&self, i: usize) -> usize {
        i
    }
    /// 1-cell `c^i_j`, `i` in `1..=p`, `j` in `0..=q`.
    fn c_at(&self, i: usize, j: usize) -> usize {
        (self.p + 1) + (i - 1) * (self.q + 1) + j
    }
    /// 2-cell `g^{i,j}_s`, `i` in `1..=p`, `j` in `1..=q`, `s` in `0..=r`.
    fn g_at(&self, i: usize, j: usize, s: usize) -> usize {
        (self.p + 1)
            + self.p * (self.q + 1)
            + ((i - 1) * self.q + (j - 1)) * (self.r + 1)
            + s
    }
    /// 3-cell `Γ^{i,j}_s`, `s` in `1..=r`.
    fn gam_at(&self, i: usize, j: usize, s: usize) -> usize {
        (self.p + 1)
            + self.p * (self.q + 1)
            + self.p * self.q * (self.r + 1)
            + ((i - 1) * self.q + (j - 1)) * self.r
            + (s - 1)
    }
}

impl MultiImplicit for TripleNerve<'_> {
    fn arity(&self) -> usize {
        3
    }

    fn carrier(&self, levels: &[usize]) -> Result<Vec<Tuple>> {
        let lay = TripleLayout::new(levels);
        let mut out = Vec::new();
        let mut tuple = vec![0i64; lay.len()];
        // enumerate objects, then per column the 1-cell chain, then per
        // (i,j) the 2-cell/3-cell ladder
        self.enum_t(&lay, 0, &mut tuple, &mut out)?;
        Ok(out)
    }

    fn face(&self, levels: &[usize], axis: usize, idx: u8, x: &Tuple) -> Result<Tuple> {
        let lay = TripleLayout::new(levels);
        let m = idx as usize;
        let t = self.t;
        let mut newlev = levels.to_vec();
        newlev[axis] -= 1;
        let nl = TripleLayout::new(&newlev);
        let mut out = vec![0i64; nl.len()];
        let get = |pos: usize| x[pos];
        match axis {
            0 => {
                // drop/merge outer columns
                for a in 0..=nl.p {
                    let src = if a < m { a } else { a + 1 };
                    out[nl.t_at(a)] = get(lay.t_at(src));
                }
                for i in 1..=nl.p {
                    // column i of the face comes from column i (i < m),
                    // merged columns m,m+1 (i = m), or column i+1 (i > m)
                    for j in 0..=nl.q {
                        let v = if m == 0 {
                            get(lay.c_at(i + 1, j))
                        } else if i < m {
                            get(lay.c_at(i, j))
                        } else if i == m && m < lay.p {
                            t.comp1(get(lay.c_at(m, j)) as u32, get(lay.c_at(m + 1, j)) as u32)?
                                as i64
                        } else {
                            get(lay.c_at(i + 1, j))
                        };
                        out[nl.c_at(i, j)] = v;
                    }
                    for j in 1..=nl.q {
                        for s in 0..=nl.r {
                            let v = if m == 0 {
                                get(lay.g_at(i + 1, j, s))
                            } else if i < m {
                                get(lay.g_at(i, j, s))
                            } else if i == m && m < lay.p {
                                t.hcomp2(
                                    get(lay.g_at(m, j, s)) as u32,
                                    get(lay.g_at(m + 1, j, s)) as u32,
                                )? as i64
                            } else {
                                get(lay.g_at(i + 1, j, s))
                            };
                            out[nl.g_at(i, j, s)] = v;
                        }
                        for s in 1..=nl.r {
                            let v = if m == 0 {
                                get(lay.gam_at(i + 1, j, s))
                            } else if i < m {
                                get(lay.gam_at(i, j, s))
                            } else if i == m && m < lay.p {
                                t.comp3_0(
                                    get(lay.gam_at(m, j, s)) as u32,
                                    get(lay.gam_at(m + 1, j, s)) as u32,
                                )? as i64
                            } else {
                                get(lay.gam_at(i + 1, j, s))
                            };
                            out[nl.gam_at(i, j, s)] = v;
                        }
                    }
                }
            }
            1 => {
                for a in 0..=nl.p {
                    out[nl.t_at(a)] = get(lay.t_at(a));
                }
                for i in 1..=nl.p {
                    for j in 0..=nl.q {
                        let src = if m == 0 { j + 1 } else if j < m { j } else { j + 1 };
                        out[nl.c_at(i, j)] = get(lay.c_at(i, src));
                    }
                    for j in 1..=nl.q {
                        for s in 0..=nl.r {
                            let v = if m == 0 {
                                get(lay.g_at(i, j + 1, s))
                            } else if j < m {
                                get(lay.g_at(i, j, s))
                            } else if j == m && m < lay.q {
                                t.vcomp2(
                                    get(lay.g_at(i, m, s)) as u32,
                                    get(lay.g_at(i, m + 1, s)) as u32,
                                )? as i64
                            } else {
                                get(lay.g_at(i, j + 1, s))
                            };
                            out[nl.g_at(i, j, s)] = v;
                        }
                        for s in 1..=nl.r {
                            let v = if m == 0 {
                                get(lay.gam_at(i, j + 1, s))
                            } else if j < m {
                                get(lay.gam_at(i, j, s))
                            } else if j == m && m < lay.q {
                                t.comp3_1(
                                    get(lay.gam_at(i, m, s)) as u32,
                                    get(lay.gam_at(i, m + 1, s)) as u32,
                                )? as i64
                            } else {
                                get(lay.gam_at(i, j + 1, s))
                            };
                            out[nl.gam_at(i, j, s)] = v;
                        }
                    }
                }
            }
            2 => {
                for a in 0..=nl.p {
                    out[nl.t_at(a)] = get(lay.t_at(a));
                }
                for i in 1..=nl.p {
                    for j in 0..=nl.q {
                        out[nl.c_at(i, j)] = get(lay.c_at(i, j));
                    }
                    for j in 1..=nl.q {
                        for s in 0..=nl.r {
                            let src = if m == 0 { s + 1 } else if s < m { s } else { s + 1 };
                            out[nl.g_at(i, j, s)] = get(lay.g_at(i, j, src));
                        }
                        for s in 1..=nl.r {
                            let v = if m == 0 {
                                get(lay.gam_at(i, j, s + 1))
                            } else if s < m {
                                get(lay.gam_at(i, j, s))
                            } else if s == m && m < lay.r {
                                t.comp3_2(
                                    get(lay.gam_at(i, j, m)) as u32,
                                    get(lay.gam_at(i, j, m + 1)) as u32,
                                )? as i64
                            } else {
                                get(lay.gam_at(i, j, s + 1))
                            };
                            out[nl.gam_at(i, j, s)] = v;
                        }
                    }
                }
            }
            _ => return Err(Error::structure("axis out of range")),
        }
        Ok(out)
    }

    fn degeneracy(&self, levels: &[usize], axis: usize, idx: u8, x: &Tuple) -> Result<Tuple> {
        let lay = TripleLayout::new(levels);
        let m = idx as usize;
        let t = self.t;
        let mut newlev = levels.to_vec();
        newlev[axis] += 1;
        let nl = TripleLayout::new(&newlev);
        let mut out = vec![0i64; nl.len()];
        let get = |pos: usize| x[pos];
        match axis {
            0 => {
                for a in 0..=nl.p {
                    let src = if a <= m { a } else { a - 1 };
                    out[nl.t_at(a)] = get(lay.t_at(src));
                }
                for i in 1..=nl.p {
                    // the inserted identity column sits at position m+1
                    for j in 0..=nl.q {
                        out[nl.c_at(i, j)] = if i == m + 1 {
                            t.id1[get(lay.t_at(m)) as usize] as i64
                        } else if i <= m {
                            get(lay.c_at(i, j))
                        } else {
                            get(lay.c_at(i - 1, j))
                        };
                    }
                    for j in 1..=nl.q {
                        let idg = |obj: i64| {
                            t.id2[t.id1[obj as usize] as usize] as i64
                        };
                        for s in 0..=nl.r {
                            out[nl.g_at(i, j, s)] = if i == m + 1 {
                                idg(get(lay.t_at(m)))
                            } else if i <= m {
                                get(lay.g_at(i, j, s))
                            } else {
                                get(lay.g_at(i - 1, j, s))
                            };
                        }
                        for s in 1..=nl.r {
                            out[nl.gam_at(i, j, s)] = if i == m + 1 {
                                t.id3[idg(get(lay.t_at(m))) as usize] as i64
                            } else if i <= m {
                                get(lay.gam_at(i, j, s))
                            } else {
                                get(lay.gam_at(i - 1, j, s))
                            };
                        }
                    }
                }
            }
            1 => {
                for a in 0..=nl.p {
                    out[nl.t_at(a)] = get(lay.t_at(a));
                }
                for i in 1..=nl.p {
                    for j in 0..=nl.q {
                        let src = if j <= m { j } else { j - 1 };
                        out[nl.c_at(i, j)] = get(lay.c_at(i, src));
                    }
                    for j in 1..=nl.q {
                        for s in 0..=nl.r {
                            out[nl.g_at(i, j, s)] = if j == m + 1 {
                                t.id2[get(lay.c_at(i, m)) as usize] as i64
                            } else if j <= m {
                                get(lay.g_at(i, j, s))
                            } else {
                                get(lay.g_at(i, j - 1, s))
                            };
                        }
                        for s in 1..=nl.r {
                            out[nl.gam_at(i, j, s)] = if j == m + 1 {
                                t.id3[t.id2[get(lay.c_at(i, m)) as usize] as usize] as i64
                            } else if j <= m {
                                get(lay.gam_at(i, j, s))
                            } else {
                                get(lay.gam_at(i, j - 1, s))
                            };
                        }
                    }
                }
            }
            2 => {
                for a in 0..=nl.p {
                    out[nl.t_at(a)] = get(lay.t_at(a));
                }
                for i in 1..=nl.p {
                    for j in 0..=nl.q {
                        out[nl.c_at(i, j)] = get(lay.c_at(i, j));
                    }
                    for j in 1..=nl.q {
                        for s in 0..=nl.r {
                            let src = if s <= m { s } else { s - 1 };
                            out[nl.g_at(i, j, s)] = get(lay.g_at(i, j, src));
                        }
                        for s in 1..=nl.r {
                            out[nl.gam_at(i, j, s)] = if s == m + 1 {
                                t.id3[get(lay.g_at(i, j, m)) as usize] as i64
                            } else if s <= m {
                                get(lay.gam_at(i, j, s))
                            } else {
                                get(lay.gam_at(i, j, s - 1))
                            };
                        }
                    }
                }
            }
            _ => return Err(Error::structure("axis out of range")),
        }
        Ok(out)
    }
}

impl TripleNerve<'_> {
    fn enum_t(
        &self,
        lay: &TripleLayout,
        at: usize,
        tuple: &mut Vec<i64>,
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if at == lay.p + 1 {
            return self.enum_c(lay, 1, 0, tuple, out);
        }
        for o in 0..self.t.objects as i64 {
            tuple[lay.t_at(at)] = o;
            self.enum_t(lay, at + 1, tuple, out)?;
        }
        Ok(())
    }

    fn enum_c(
        &self,
        lay: &TripleLayout,
        i: usize,
        j: usize,
        tuple: &mut Vec<i64>,
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if i > lay.p {
            return self.enum_g(lay, 1, 1, 0, tuple, out);
        }
        let (ni, nj) = if j == lay.q { (i + 1, 0) } else { (i, j + 1) };
        let key = (tuple[lay.t_at(i)] as u32, tuple[lay.t_at(i - 1)] as u32);
        if let Some(cands) = self.maps.cells1_by.get(&key) {
            for &f in cands {
                tuple[lay.c_at(i, j)] = f as i64;
                self.enum_c(lay, ni, nj, tuple, out)?;
            }
        }
        Ok(())
    }

    /// Enumerate the `(g, Γ)` ladder of block `(i,j)` starting at rung `s`.
    fn enum_g(
        &self,
        lay: &TripleLayout,
        i: usize,
        j: usize,
        s: usize,
        tuple: &mut Vec<i64>,
        out: &mut Vec<Tuple>,
    ) -> Result<()> {
        if lay.p == 0 || lay.q == 0 || i > lay.p {
            out.push(tuple.clone());
            return Ok(());
        }
        let advance = |s: usize| -> (usize, usize, usize) {
            if s == lay.r {
                if j == lay.q {
                    (i + 1, 1, 0)
                } else {
                    (i, j + 1, 0)
                }
            } else {
                (i, j, s + 1)
            }
        };
        let (ni, nj, ns) = advance(s);
        if s == 0 {
            let key = (tuple[lay.c_at(i, j)] as u32, tuple[lay.c_at(i, j - 1)] as u32);
            if let Some(cands) = self.maps.cells2_by.get(&key) {
                let cands = cands.clone();
                for f in cands {
                    tuple[lay.g_at(i, j, 0)] = f as i64;
                    if lay.r == 0 {
                        if ni > lay.p {
                            out.push(tuple.clone());
                        } else {
                            self.enum_g(lay, ni, nj, ns, tuple, out)?;
                        }
                    } else {
                        self.enum_g(lay, i, j, 1, tuple, out)?;
                    }
                }
            }
            return Ok(());
        }
        // choose the 3-cell into g_{s-1}; its source is g_s
        let prev = tuple[lay.g_at(i, j, s - 1)] as u32;
        for x in 0..self.t.cells3.len() as u32 {
            if self.t.tgt3(x) != prev {
                continue;
            }
            tuple[lay.gam_at(i, j, s)] = x as i64;
            tuple[lay.g_at(i, j, s)] = self.t.src3(x) as i64;
            if s == lay.r && ni > lay.p {
                out.push(tuple.clone());
            } else {
                self.enum_g(lay, ni, nj, ns, tuple, out)?;
            }
        }
        Ok(())
    }
}

/// The diagonal of the triple nerve, materialized to dimension `n`.
pub fn diag_triple_nerve(t: &Strict3Cat, n: usize, budget: Budget) -> Result<TruncSSet> {
    let tn = TripleNerve::new(t);
    let d = crate::simplicial::Diagonal::new(&tn)?;
    materialize(&d, n, budget)
}
