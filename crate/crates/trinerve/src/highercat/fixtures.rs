//! Deterministic generators of strict 3-category fixtures and graph
//! representations, used by the extension/restriction and nerve test
//! sweeps.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::abgrp::FgAbGroup;
use crate::cat::DiGraph;
use crate::error::Result;

use super::cells::{Strict2Cat, Strict3Cat};
use super::rep::GraphRep;

/// The chaotic 2-category on a monoid: every pair of objects carries the
/// monoid as parallel 1-cells with exactly one 2-cell between any two of
/// them, composition landing where the monoid says.
pub fn chaotic_2cat(objects: usize, monoid: &[Vec<u32>]) -> Result<Strict2Cat> {
    let m = monoid.len();
    let n1 = objects * objects * m;
    let i1 = |x: usize, y: usize, v: usize| (x * objects * m + y * m + v) as u32;
    let mut cells1 = Vec::with_capacity(n1);
    for x in 0..objects {
        for y in 0..objects {
            for _ in 0..m {
                cells1.push((x as u32, y as u32));
            }
        }
    }
    // one 2-cell per parallel pair of 1-cells
    let mut cells2 = Vec::new();
    let mut i2 = std::collections::HashMap::new();
    for f in 0..n1 as u32 {
        for g in 0..n1 as u32 {
            if cells1[f as usize] == cells1[g as usize] {
                i2.insert((f, g), cells2.len() as u32);
                cells2.push((f, g));
            }
        }
    }
    let comp1: Vec<Vec<Option<u32>>> = (0..n1)
        .map(|f| {
            let (fx, fy, fv) = (f / (objects * m), (f / m) % objects, f % m);
            (0..n1)
                .map(|g| {
                    let (gx, gy, gv) = (g / (objects * m), (g / m) % objects, g % m);
                    if fx == gy {
                        Some(i1(gx, fy, monoid[fv][gv] as usize))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    let vcomp2: Vec<Vec<Option<u32>>> = cells2
        .iter()
        .map(|&(s, t)| {
            cells2
                .iter()
                .map(|&(s2, t2)| {
                    if s == t2 {
                        Some(i2[&(s2, t)])
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    let hcomp2: Vec<Vec<Option<u32>>> = cells2
        .iter()
        .map(|&(s, t)| {
            cells2
                .iter()
                .map(|&(s2, t2)| {
                    let fs = comp1[s as usize][s2 as usize];
                    let ft = comp1[t as usize][t2 as usize];
                    match (fs, ft) {
                        (Some(a), Some(b)) => Some(i2[&(a, b)]),
                        _ => None,
                    }
                })
                .collect()
        })
        .collect();
    let id1: Vec<u32> = (0..objects).map(|x| i1(x, x, 0)).collect();
    let id2: Vec<u32> = (0..n1 as u32).map(|f| i2[&(f, f)]).collect();
    let b = Strict2Cat { objects, cells1, cells2, id1, id2, comp1, vcomp2, hcomp2 };
    b.validate()?;
    Ok(b)
}

/// The deterministic fixture family for representation sweeps.
pub fn fixture_3cats() -> Result<Vec<Strict3Cat>> {
    let mut out = Vec::new();
    out.push(Strict3Cat::sigma2(&FgAbGroup::cyclic(2))?);
    out.push(Strict3Cat::sigma2(&FgAbGroup::cyclic(3))?);
    // one object, 1-cells Z/3, identity 2-cells
    let z3: Vec<Vec<u32>> = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
    out.push(Strict3Cat::from_2cat(&Strict2Cat::from_monoid(&z3)?)?);
    // one object, one 1-cell, 2-cells Z/2
    out.push(Strict3Cat::from_2cat(&Strict2Cat::one_object_one_arrow(
        &FgAbGroup::cyclic(2),
    )?)?);
    // chaotic 2-category: two objects, up to 2 parallel 1-cells
    let z2: Vec<Vec<u32>> = vec![vec![0, 1], vec![1, 0]];
    out.push(Strict3Cat::from_2cat(&chaotic_2cat(2, &z2)?)?);
    // a plain poset
    out.push(Strict3Cat::from_category(&crate::cat::ordinal_category(2))?);
    // a product mixing 3-cells with several objects
    let s = Strict3Cat::sigma2(&FgAbGroup::cyclic(2))?;
    let c = Strict3Cat::from_category(&crate::cat::ordinal_category(1))?;
    out.push(Strict3Cat::product(&s, &c)?);
    Ok(out)
}

/// A seeded acyclic graph (edges always point from higher to lower vertex)
/// together with a random representation into the fixture.
pub fn random_graph_rep(
    t: &Strict3Cat,
    rng: &mut ChaCha8Rng,
) -> Result<(DiGraph, GraphRep)> {
    let vertices = rng.gen_range(2..=4usize);
    let mut edges = Vec::new();
    for j in 0..vertices {
        for i in 0..j {
            if rng.gen_bool(0.6) {
                edges.push((j, i));
            }
        }
    }
    let g = DiGraph::new(vertices, edges)?;
    // choose objects, then any edge with matching boundary
    let mut on_vertices = vec![0u32; vertices];
    let mut on_edges = vec![0u32; g.edges().len()];
    'outer: for _attempt in 0..64 {
        for v in on_vertices.iter_mut() {
            *v = rng.gen_range(0..t.objects) as u32;
        }
        for (e, &(s, tt)) in g.edges().iter().enumerate() {
            let want = (on_vertices[s], on_vertices[tt]);
            let cands: Vec<u32> = (0..t.cells1.len() as u32)
                .filter(|&f| t.cells1[f as usize] == want)
                .collect();
            if cands.is_empty() {
                continue 'outer;
            }
            on_edges[e] = cands[rng.gen_range(0..cands.len())];
        }
        return Ok((g, GraphRep { on_vertices, on_edges }));
    }
    // fall back to the everything-identity representation
    let on_edges = g
        .edges()
        .iter()
        .map(|&(s, _)| t.id1[on_vertices[s] as usize])
        .collect();
    let on_vertices = vec![0u32; vertices];
    Ok((g, GraphRep { on_vertices, on_edges }))
}
