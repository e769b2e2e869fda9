//! Finite categories, graphs, free categories on acyclic graphs, functors,
//! and the classical nerve of a category.

use crate::error::{Error, Result};
use crate::simplicial::{
    materialize, Budget, ImplicitSSet, SimplicialMapData, TruncSSet, Tuple,
};

/// A directed graph with numbered vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    vertices: usize,
    /// `(source, target)` per edge; an edge `a: j -> i` is `(j, i)`.
    edges: Vec<(usize, usize)>,
}

impl DiGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &edges {
            if s >= vertices || t >= vertices {
                return Err(Error::structure("edge endpoint out of range"));
            }
        }
        Ok(DiGraph { vertices, edges })
    }

    /// The chain `p -> p-1 -> ... -> 1 -> 0`.
    pub fn chain(p: usize) -> Self {
        DiGraph {
            vertices: p + 1,
            edges: (0..p).map(|k| (k + 1, k)).collect(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let mut indeg = vec![0usize; self.vertices];
        for &(_, t) in &self.edges {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(s, t) in &self.edges {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        seen == self.vertices
    }
}

/// A finite category: objects `0..objects`, morphisms with source/target,
/// a composition table defined exactly on composable pairs, and an identity
/// per object.  Associativity and unit laws are checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: usize,
    /// `(source, target)` per morphism; a morphism `a: j -> i` is `(j, i)`.
    mor: Vec<(usize, usize)>,
    /// Identity morphism per object.
    identity: Vec<u32>,
    /// `compose[a][b] = a ∘ b` (apply `b` first), only for composable pairs.
    compose: Vec<Vec<Option<u32>>>,
}

impl FiniteCategory {
    pub fn new(
        objects: usize,
        mor: Vec<(usize, usize)>,
        identity: Vec<u32>,
        compose: Vec<Vec<Option<u32>>>,
    ) -> Result<Self> {
        let n = mor.len();
        if identity.len() != objects || compose.len() != n || compose.iter().any(|r| r.len() != n)
        {
            return Err(Error::structure("category table shapes are inconsistent"));
        }
        let c = FiniteCategory { objects, mor, identity, compose };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let n = self.mor.len() as u32;
        for (x, &i) in self.identity.iter().enumerate() {
            let (s, t) = self.mor[i as usize];
            if s != x || t != x {
                return Err(Error::structure(format!("identity of object {x} is not an endo")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let composable = self.src(a) == self.tgt(b);
                match self.compose[a as usize][b as usize] {
                    Some(c) => {
                        if !composable {
                            return Err(Error::structure(format!(
                                "composite defined on non-composable pair ({a},{b})"
                            )));
                        }
                        if self.src(c) != self.src(b) || self.tgt(c) != self.tgt(a) {
                            return Err(Error::structure(format!(
                                "composite of ({a},{b}) has wrong boundary"
                            )));
                        }
                    }
                    None => {
                        if composable {
                            return Err(Error::structure(format!(
                                "missing composite for composable pair ({a},{b})"
                            )));
                        }
                    }
                }
            }
        }
        // unit laws
        for a in 0..n {
            let ids = self.identity[self.src(a)];
            let idt = self.identity[self.tgt(a)];
            if self.comp(a, ids)? != a || self.comp(idt, a)? != a {
                return Err(Error::structure(format!("unit law fails at morphism {a}")));
            }
        }
        // associativity
        for a in 0..n {
            for b in 0..n {
                if self.src(a) != self.tgt(b) {
                    continue;
                }
                for c in 0..n {
                    if self.src(b) != self.tgt(c) {
                        continue;
                    }
                    let lhs = self.comp(self.comp(a, b)?, c)?;
                    let rhs = self.comp(a, self.comp(b, c)?)?;
                    if lhs != rhs {
                        return Err(Error::structure(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> usize {
        self.mor.len()
    }

    pub fn src(&self, a: u32) -> usize {
        self.mor[a as usize].0
    }

    pub fn tgt(&self, a: u32) -> usize {
        self.mor[a as usize].1
    }

    pub fn identity_of(&self, x: usize) -> u32 {
        self.identity[x]
    }

    pub fn is_identity(&self, a: u32) -> bool {
        self.identity[self.src(a)] == a && self.src(a) == self.tgt(a)
    }

    /// `a ∘ b` (apply `b` first); errors when not composable.
    pub fn comp(&self, a: u32, b: u32) -> Result<u32> {
        self.compose[a as usize][b as usize]
            .ok_or_else(|| Error::structure(format!("morphisms {a} and {b} are not composable")))
    }

    /// A finite group as a one-object category.
    pub fn from_group(g: &crate::abgrp::FiniteGroup) -> Self {
        let n = g.order();
        let mor = vec![(0usize, 0usize); n];
        let identity = vec![0u32];
        let compose = (0..n as u32)
            .map(|a| (0..n as u32).map(|b| Some(g.mul(a, b))).collect())
            .collect();
        FiniteCategory { objects: 1, mor, identity, compose }
    }
}

/// The ordinal `[p]` as a category: objects `0..=p`, one morphism
/// `(i,j): j -> i` for each `i <= j`, composition by transitivity.
pub fn ordinal_category(p: usize) -> FiniteCategory {
    // morphisms enumerated as pairs (i, j) with i <= j, lexicographic
    let mut pairs = Vec::new();
    for i in 0..=p {
        for j in i..=p {
            pairs.push((i, j));
        }
    }
    let index = |i: usize, j: usize| -> u32 {
        pairs.iter().position(|&q| q == (i, j)).unwrap() as u32
    };
    let mor: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (j, i)).collect();
    let identity: Vec<u32> = (0..=p).map(|x| index(x, x)).collect();
    let n = pairs.len();
    let mut compose = vec![vec![None; n]; n];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            // a: j -> i composed with b: l -> k needs k = j
            if k == j {
                compose[a][b] = Some(index(i, l));
            }
        }
    }
    FiniteCategory::new(p + 1, mor, identity, compose).expect("ordinal tables are a category")
}

/// The free category on an acyclic graph: morphisms are paths (empty paths
/// are the identities), composition is concatenation.
pub fn free_category(g: &DiGraph) -> Result<(FiniteCategory, Vec<Vec<u32>>)> {
    if !g.is_acyclic() {
        return Err(Error::Infinite(
            "free category on a cyclic graph is infinite".into(),
        ));
    }
    // enumerate all paths; a path is a list of edge ids composable head to
    // tail: edges (e1, e2, ...) with tgt(e_{r+1}) = src(e_r) read as the
    // composite e1 ∘ e2 ∘ ... (rightmost applied first)
    let mut paths: Vec<(usize, usize, Vec<u32>)> = Vec::new(); // (src, tgt, edges)
    for v in 0..g.vertices() {
        paths.push((v, v, vec![]));
    }
    // breadth-first extension; acyclicity bounds path length by |V|
    let mut frontier: Vec<(usize, usize, Vec<u32>)> = paths.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (s, t, p) in &frontier {
            for (e, &(es, et)) in g.edges().iter().enumerate() {
                if et == *s {
                    // extend on the source side: new path  p ∘ e
                    let mut q = p.clone();
                    q.push(e as u32);
                    next.push((es, *t, q));
                }
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    paths.sort();
    let mor: Vec<(usize, usize)> = paths.iter().map(|&(s, t, _)| (s, t)).collect();
    let identity: Vec<u32> = (0..g.vertices())
        .map(|v| paths.iter().position(|(s, t, p)| *s == v && *t == v && p.is_empty()).unwrap()
            as u32)
        .collect();
    let n = paths.len();
    let mut compose = vec![vec![None; n]; n];
    for (a, (sa, ta, pa)) in paths.iter().enumerate() {
        for (b, (sb, tb, pb)) in paths.iter().enumerate() {
            if *tb == *sa {
                // a ∘ b: apply b's edges first; concatenation a-then-b in
                // storage order (edges listed target-to-source)
                let mut q = pa.clone();
                q.extend_from_slice(pb);
                let c = paths
                    .iter()
                    .position(|(s, t, p)| *s == *sb && *t == *ta && *p == q)
                    .ok_or_else(|| Error::structure("path concatenation escaped enumeration"))?;
                compose[a][b] = Some(c as u32);
            }
        }
    }
    let cat = FiniteCategory::new(g.vertices(), mor, identity, compose)?;
    let edge_lists = paths.into_iter().map(|(_, _, p)| p).collect();
    Ok((cat, edge_lists))
}

/// The nerve of a category as an implicit simplicial set: `p`-simplices are
/// composable `p`-tuples `(x_1, ..., x_p)` with `x_r: c_r -> c_{r-1}`;
/// `d_0` drops the first morphism, `d_p` the last, inner faces compose, and
/// degeneracies insert identities.  A `0`-simplex is the single-entry tuple
/// `[object]`.
pub struct NerveImplicit<'a> {
    cat: &'a FiniteCategory,
}

impl<'a> NerveImplicit<'a> {
    pub fn new(cat: &'a FiniteCategory) -> Self {
        NerveImplicit { cat }
    }
}

impl ImplicitSSet for NerveImplicit<'_> {
    fn carrier(&self, p: usize) -> Result<Vec<Tuple>> {
        if p == 0 {
            return Ok((0..self.cat.objects() as i64).map(|x| vec![x]).collect());
        }
        let mut out = Vec::new();
        let mut cur: Vec<i64> = Vec::with_capacity(p);
        fn rec(cat: &FiniteCategory, p: usize, cur: &mut Vec<i64>, out: &mut Vec<Tuple>) {
            if cur.len() == p {
                out.push(cur.clone());
                return;
            }
            for a in 0..cat.morphisms() as u32 {
                // composability: src(previous) = tgt(a)
                if let Some(&prev) = cur.last() {
                    if cat.src(prev as u32) != cat.tgt(a) {
                        continue;
                    }
                }
                cur.push(a as i64);
                rec(cat, p, cur, out);
                cur.pop();
            }
        }
        rec(self.cat, p, &mut cur, &mut out);
        Ok(out)
    }

    fn face(&self, p: usize, x: &Tuple, i: u8) -> Result<Tuple> {
        let i = i as usize;
        if p == 1 {
            // a 1-simplex is an arrow c_1 -> c_0; d_0 drops c_0
            let a = x[0] as u32;
            let v = if i == 0 { self.cat.src(a) } else { self.cat.tgt(a) };
            return Ok(vec![v as i64]);
        }
        let mut y = Vec::with_capacity(p - 1);
        if i == 0 {
            y.extend_from_slice(&x[1..]);
        } else if i == p {
            y.extend_from_slice(&x[..p - 1]);
        } else {
            y.extend_from_slice(&x[..i - 1]);
            y.push(self.cat.comp(x[i - 1] as u32, x[i] as u32)? as i64);
            y.extend_from_slice(&x[i + 1..]);
        }
        Ok(y)
    }

    fn degeneracy(&self, p: usize, x: &Tuple, j: u8) -> Result<Tuple> {
        let j = j as usize;
        if p == 0 {
            return Ok(vec![self.cat.identity_of(x[0] as usize) as i64]);
        }
        let mut y = x.clone();
        // s_j inserts the identity of the object between x_j and x_{j+1}
        let obj = if j == 0 { self.cat.tgt(x[0] as u32) } else { self.cat.src(x[j - 1] as u32) };
        y.insert(j, self.cat.identity_of(obj) as i64);
        Ok(y)
    }
}

/// Materialized nerve truncated at `n`.
pub fn nerve(cat: &FiniteCategory, n: usize, budget: Budget) -> Result<TruncSSet> {
    materialize(&NerveImplicit::new(cat), n, budget)
}

/// Functor data between finite categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub on_objects: Vec<usize>,
    pub on_morphisms: Vec<u32>,
}

impl FunctorData {
    pub fn identity(c: &FiniteCategory) -> Self {
        FunctorData {
            on_objects: (0..c.objects()).collect(),
            on_morphisms: (0..c.morphisms() as u32).collect(),
        }
    }

    pub fn validate(&self, source: &FiniteCategory, target: &FiniteCategory) -> Result<()> {
        if self.on_objects.len() != source.objects()
            || self.on_morphisms.len() != source.morphisms()
        {
            return Err(Error::structure("functor data has wrong shape"));
        }
        for a in 0..source.morphisms() as u32 {
            let fa = self.on_morphisms[a as usize];
            if target.src(fa) != self.on_objects[source.src(a)]
                || target.tgt(fa) != self.on_objects[source.tgt(a)]
            {
                return Err(Error::structure(format!("functor breaks boundaries at {a}")));
            }
        }
        for x in 0..source.objects() {
            if self.on_morphisms[source.identity_of(x) as usize]
                != target.identity_of(self.on_objects[x])
            {
                return Err(Error::structure(format!("functor breaks identity at object {x}")));
            }
        }
        for a in 0..source.morphisms() as u32 {
            for b in 0..source.morphisms() as u32 {
                if source.src(a) != source.tgt(b) {
                    continue;
                }
                let lhs = self.on_morphisms[source.comp(a, b)? as usize];
                let rhs = target.comp(
                    self.on_morphisms[a as usize],
                    self.on_morphisms[b as usize],
                )?;
                if lhs != rhs {
                    return Err(Error::structure(format!(
                        "functor breaks composition at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The simplicial map induced on nerves by a verified functor.
pub fn apply_functor(
    f: &FunctorData,
    source_cat: &FiniteCategory,
    target_cat: &FiniteCategory,
    source: &TruncSSet,
    target: &TruncSSet,
) -> Result<SimplicialMapData> {
    f.validate(source_cat, target_cat)?;
    let n = source.trunc().min(target.trunc());
    // map each nondegenerate source tuple through the functor, then take the
    // EZ normal form in the target (recompute via target labels)
    let target_impl = NerveImplicit::new(target_cat);
    let mut norm: Vec<std::collections::HashMap<Tuple, crate::simplicial::SimplexRef>> =
        Vec::new();
    for p in 0..=n {
        let mut map = std::collections::HashMap::new();
        let carrier = target_impl.carrier(p)?;
        for t in carrier {
            // normal form by peeling degeneracies
            let mut degens: Vec<u8> = Vec::new();
            let mut cur = t.clone();
            let mut q = p;
            'outer: loop {
                if q == 0 {
                    break;
                }
                for j in 0..q as u8 {
                    let y = target_impl.face(q, &cur, j)?;
                    if target_impl.degeneracy(q - 1, &y, j)? == cur {
                        degens.push(j);
                        cur = y;
                        q -= 1;
                        continue 'outer;
                    }
                }
                break;
            }
            let id = target
                .labels(q)
                .and_then(|ls| ls.iter().position(|l| *l == cur))
                .ok_or_else(|| Error::structure("target nerve is missing labels"))?;
            let mut r = crate::simplicial::SimplexRef::nondegenerate(id as u32);
            for &j in degens.iter().rev() {
                r = r.degenerate(j);
            }
            map.insert(t, r);
        }
        norm.push(map);
    }
    let mut images = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut at_p = Vec::with_capacity(source.count(p));
        for id in 0..source.count(p) as u32 {
            let label = source
                .label(p, id)
                .ok_or_else(|| Error::structure("source nerve is missing labels"))?;
            let image_tuple: Tuple = if p == 0 {
                vec![f.on_objects[label[0] as usize] as i64]
            } else {
                label.iter().map(|&a| f.on_morphisms[a as usize] as i64).collect()
            };
            let r = norm[p]
                .get(&image_tuple)
                .ok_or_else(|| Error::structure("functor image escapes target nerve"))?;
            at_p.push(r.clone());
        }
        images.push(at_p);
    }
    Ok(SimplicialMapData { images })
}
