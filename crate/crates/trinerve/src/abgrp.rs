//! Exact finitely generated abelian groups, finite groups given by
//! multiplication tables, and module actions.  These are the coefficient
//! objects for every cocycle and chain computation in the library.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An element is an integer vector of length `rank + torsion.len()`.
/// Torsion coordinate `j` is kept reduced into `[0, d_j)`.
pub type Elem = Vec<i64>;

/// A finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FgAbGroupRaw")]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<i64>,
}

#[derive(Deserialize)]
struct FgAbGroupRaw {
    rank: usize,
    torsion: Vec<i64>,
}

impl TryFrom<FgAbGroupRaw> for FgAbGroup {
    type Error = Error;
    fn try_from(raw: FgAbGroupRaw) -> Result<Self> {
        FgAbGroup::new(raw.rank, raw.torsion)
    }
}

impl FgAbGroup {
    pub fn new(rank: usize, torsion: Vec<i64>) -> Result<Self> {
        if torsion.iter().any(|&d| d < 2) {
            return Err(Error::structure("torsion coefficients must be >= 2"));
        }
        Ok(FgAbGroup { rank, torsion })
    }

    /// The zero group.
    pub fn zero() -> Self {
        FgAbGroup { rank: 0, torsion: vec![] }
    }

    /// The cyclic group `Z/m`.
    pub fn cyclic(m: i64) -> Self {
        FgAbGroup::new(0, vec![m]).expect("cyclic order must be >= 2")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    /// Coordinate length of elements.
    pub fn len(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Number of elements; only valid for finite groups.
    pub fn order(&self) -> Result<usize> {
        if self.rank > 0 {
            return Err(Error::Infinite("group has positive rank".into()));
        }
        let mut n: usize = 1;
        for &d in &self.torsion {
            n = n
                .checked_mul(d as usize)
                .ok_or_else(|| Error::structure("group order overflows"))?;
        }
        Ok(n)
    }

    pub fn zero_elem(&self) -> Elem {
        vec![0; self.len()]
    }

    /// Reduce a raw vector to canonical form (torsion coordinates mod d_j).
    pub fn canon(&self, mut v: Elem) -> Result<Elem> {
        if v.len() != self.len() {
            return Err(Error::structure(format!(
                "element length {} does not match group length {}",
                v.len(),
                self.len()
            )));
        }
        for (j, &d) in self.torsion.iter().enumerate() {
            let c = &mut v[self.rank + j];
            *c = c.rem_euclid(d);
        }
        Ok(v)
    }

    pub fn is_canonical(&self, v: &[i64]) -> bool {
        v.len() == self.len()
            && self
                .torsion
                .iter()
                .enumerate()
                .all(|(j, &d)| (0..d).contains(&v[self.rank + j]))
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Result<Elem> {
        if a.len() != self.len() || b.len() != self.len() {
            return Err(Error::structure("element length mismatch in add"));
        }
        let sum: Option<Elem> = a.iter().zip(b).map(|(x, y)| x.checked_add(*y)).collect();
        let sum = sum.ok_or_else(|| Error::structure("integer overflow in add"))?;
        self.canon(sum)
    }

    pub fn neg(&self, a: &[i64]) -> Result<Elem> {
        if a.len() != self.len() {
            return Err(Error::structure("element length mismatch in neg"));
        }
        self.canon(a.iter().map(|x| -x).collect())
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Result<Elem> {
        self.add(a, &self.neg(b)?)
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// Complete, duplicate-free enumeration in lexicographic order.
    /// Errors for groups of positive rank.
    pub fn enumerate(&self) -> Result<Vec<Elem>> {
        if self.rank > 0 {
            return Err(Error::Infinite(
                "cannot enumerate a group of positive rank".into(),
            ));
        }
        let n = self.order()?;
        let mut out = Vec::with_capacity(n);
        let mut cur = vec![0i64; self.torsion.len()];
        loop {
            out.push(cur.clone());
            // lexicographic increment, last coordinate fastest
            let mut j = self.torsion.len();
            loop {
                if j == 0 {
                    return Ok(out);
                }
                j -= 1;
                cur[j] += 1;
                if cur[j] < self.torsion[j] {
                    break;
                }
                cur[j] = 0;
            }
        }
    }

    /// Index of a canonical element in the `enumerate` order.
    pub fn elem_index(&self, v: &[i64]) -> Result<usize> {
        if self.rank > 0 {
            return Err(Error::Infinite("no index in an infinite group".into()));
        }
        if !self.is_canonical(v) {
            return Err(Error::structure("elem_index requires a canonical element"));
        }
        let mut idx = 0usize;
        for (j, &d) in self.torsion.iter().enumerate() {
            idx = idx * (d as usize) + v[j] as usize;
        }
        Ok(idx)
    }

    /// Inverse of `elem_index`.
    pub fn elem_at(&self, mut idx: usize) -> Result<Elem> {
        if self.rank > 0 {
            return Err(Error::Infinite("no index in an infinite group".into()));
        }
        let mut v = vec![0i64; self.torsion.len()];
        for j in (0..self.torsion.len()).rev() {
            let d = self.torsion[j] as usize;
            v[j] = (idx % d) as i64;
            idx /= d;
        }
        if idx != 0 {
            return Err(Error::structure("element index out of range"));
        }
        Ok(v)
    }
}

/// A finite group presented by its full multiplication table over indices
/// `0..n-1`, with the identity at index 0.  Associativity, identity and
/// inverses are checked at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FiniteGroupRaw")]
pub struct FiniteGroup {
    table: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct FiniteGroupRaw {
    table: Vec<Vec<u32>>,
}

impl TryFrom<FiniteGroupRaw> for FiniteGroup {
    type Error = Error;
    fn try_from(raw: FiniteGroupRaw) -> Result<Self> {
        FiniteGroup::new(raw.table)
    }
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<u32>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::structure("group must be nonempty"));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x as usize >= n) {
                return Err(Error::structure("multiplication table is not square over 0..n"));
            }
        }
        let g = FiniteGroup { table };
        // identity at 0
        for x in 0..n as u32 {
            if g.mul(0, x) != x || g.mul(x, 0) != x {
                return Err(Error::structure("index 0 is not a two-sided identity"));
            }
        }
        // associativity
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                for c in 0..n as u32 {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return Err(Error::structure(format!(
                            "multiplication not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        // inverses
        for a in 0..n as u32 {
            if !(0..n as u32).any(|b| g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                return Err(Error::structure(format!("element {a} has no inverse")));
            }
        }
        Ok(g)
    }

    /// The cyclic group Z/n with i+j mod n.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|i| (0..n).map(|j| ((i + j) % n) as u32).collect())
            .collect();
        FiniteGroup::new(table).expect("cyclic table is a group")
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize][b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        (0..self.order() as u32)
            .find(|&b| self.mul(a, b) == 0 && self.mul(b, a) == 0)
            .expect("inverses exist by construction")
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order() as u32
    }

    pub fn table(&self) -> &[Vec<u32>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order() as u32;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// An integer matrix acting on elements of an `FgAbGroup`, stored row-major:
/// `rows` of length `cols = coeff.len()`, applied as `v -> M v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    pub rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn apply(&self, v: &[i64]) -> Result<Elem> {
        let mut out = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            if row.len() != v.len() {
                return Err(Error::structure("matrix/vector dimension mismatch"));
            }
            let mut acc: i64 = 0;
            for (m, x) in row.iter().zip(v) {
                let p = m
                    .checked_mul(*x)
                    .ok_or_else(|| Error::structure("integer overflow in action"))?;
                acc = acc
                    .checked_add(p)
                    .ok_or_else(|| Error::structure("integer overflow in action"))?;
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// A finite group acting on a finitely generated abelian coefficient group
/// by integer matrices.  The action is validated eagerly: identity acts as
/// the identity, action is multiplicative, and every matrix is a
/// well-defined automorphism of the coefficient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModule {
    group: FiniteGroup,
    coeff: FgAbGroup,
    action: Vec<IntMatrix>,
}

impl GModule {
    pub fn new(group: FiniteGroup, coeff: FgAbGroup, action: Vec<IntMatrix>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::structure("one action matrix per group element required"));
        }
        let m = GModule { group, coeff, action };
        m.validate()?;
        Ok(m)
    }

    /// Trivial action of `group` on `coeff`.
    pub fn trivial(group: FiniteGroup, coeff: FgAbGroup) -> Self {
        let n = group.order();
        let id = IntMatrix::identity(coeff.len());
        GModule {
            group,
            coeff,
            action: vec![id; n],
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.group.order() as u32;
        let len = self.coeff.len();
        for g in 0..n {
            let m = &self.action[g as usize];
            if m.rows.len() != len || m.rows.iter().any(|r| r.len() != len) {
                return Err(Error::structure("action matrix has wrong shape"));
            }
            // well-defined: d_j * (image of torsion generator j) must vanish
            for (j, &d) in self.coeff.torsion().iter().enumerate() {
                let col = self.coeff.rank() + j;
                for (i, row) in m.rows.iter().enumerate() {
                    let e = row[col];
                    if i < self.coeff.rank() {
                        if d.checked_mul(e) != Some(0) && e != 0 {
                            return Err(Error::structure(
                                "action sends torsion into the free part",
                            ));
                        }
                    } else {
                        let di = self.coeff.torsion()[i - self.coeff.rank()];
                        if (d.checked_mul(e).ok_or_else(|| {
                            Error::structure("integer overflow validating action")
                        })?)
                        .rem_euclid(di)
                            != 0
                        {
                            return Err(Error::structure(
                                "action matrix does not respect torsion relations",
                            ));
                        }
                    }
                }
            }
        }
        // identity acts as identity; action is multiplicative; each matrix
        // is bijective.  For finite coefficients this is checked on all
        // elements, which also covers invertibility.
        if self.coeff.is_finite() {
            let elems = self.coeff.enumerate()?;
            for a in &elems {
                if &self.act(self.group.identity(), a)? != a {
                    return Err(Error::structure("identity does not act trivially"));
                }
            }
            for g in 0..n {
                let mut seen = vec![false; elems.len()];
                for a in &elems {
                    let img = self.act(g, a)?;
                    let idx = self.coeff.elem_index(&img)?;
                    if seen[idx] {
                        return Err(Error::structure(format!(
                            "action of {g} is not injective"
                        )));
                    }
                    seen[idx] = true;
                }
                for h in 0..n {
                    let gh = self.group.mul(g, h);
                    for a in &elems {
                        if self.act(g, &self.act(h, a)?)? != self.act(gh, a)? {
                            return Err(Error::structure(format!(
                                "action not multiplicative at ({g},{h})"
                            )));
                        }
                    }
                }
            }
        } else {
            // infinite coefficients: matrix-level checks only
            let id = IntMatrix::identity(len);
            if self.action[0] != id {
                return Err(Error::structure("identity does not act as identity matrix"));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coeff(&self) -> &FgAbGroup {
        &self.coeff
    }

    pub fn action_matrix(&self, g: u32) -> &IntMatrix {
        &self.action[g as usize]
    }

    /// Apply the action of `g` to a coefficient element, reduced canonically.
    pub fn act(&self, g: u32, a: &[i64]) -> Result<Elem> {
        if g as usize >= self.group.order() {
            return Err(Error::structure("group element index out of range"));
        }
        if a.len() != self.coeff.len() {
            return Err(Error::structure(
                "element length does not match coefficient group",
            ));
        }
        self.coeff.canon(self.action[g as usize].apply(a)?)
    }

    /// Apply the action of `g^{-1}`.
    pub fn act_inv(&self, g: u32, a: &[i64]) -> Result<Elem> {
        self.act(self.group.inv(g), a)
    }
}
