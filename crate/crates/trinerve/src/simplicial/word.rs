//! Composite face/degeneracy operators in Eilenberg-Zilber normal form.
//!
//! A word is `s_{i_k} ... s_{i_1} d_{j_1} ... d_{j_l}` with `i_k > ... > i_1`
//! and `j_1 < ... < j_l`; applied to a simplex it takes the faces first
//! (innermost `d_{j_l}` first) and the degeneracies afterwards.  The normal
//! form is unique, so word equality is structural equality.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    /// Input dimension (dimension of the simplex the word applies to).
    dom: usize,
    /// Degeneracy indices, strictly decreasing.
    degens: Vec<u8>,
    /// Face indices, strictly increasing.
    faces: Vec<u8>,
}

impl OperatorWord {
    pub fn identity(dom: usize) -> Self {
        OperatorWord { dom, degens: vec![], faces: vec![] }
    }

    /// The single face operator `d_i` on dimension `dom`.
    pub fn face(dom: usize, i: u8) -> Result<Self> {
        if dom == 0 || i as usize > dom {
            return Err(Error::structure(format!("d_{i} invalid on dimension {dom}")));
        }
        Ok(OperatorWord { dom, degens: vec![], faces: vec![i] })
    }

    /// The single degeneracy operator `s_i` on dimension `dom`.
    pub fn degeneracy(dom: usize, i: u8) -> Result<Self> {
        if i as usize > dom {
            return Err(Error::structure(format!("s_{i} invalid on dimension {dom}")));
        }
        Ok(OperatorWord { dom, degens: vec![i], faces: vec![] })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.dom - self.faces.len() + self.degens.len()
    }

    pub fn degens(&self) -> &[u8] {
        &self.degens
    }

    pub fn faces(&self) -> &[u8] {
        &self.faces
    }

    pub fn is_identity(&self) -> bool {
        self.degens.is_empty() && self.faces.is_empty()
    }

    /// Postcompose a face operator: normal form of `d_i ∘ self`.
    pub fn then_face(&self, i: u8) -> Result<Self> {
        let cod = self.cod();
        if cod == 0 || i as usize > cod {
            return Err(Error::structure(format!("d_{i} invalid on dimension {cod}")));
        }
        let mut out = self.clone();
        // push d_i through the degeneracy word, outermost first
        let mut cur = i;
        let mut idx = 0;
        while idx < out.degens.len() {
            let e = out.degens[idx];
            if cur < e {
                // d_i s_j = s_{j-1} d_i  (i < j)
                out.degens[idx] -= 1;
                idx += 1;
            } else if cur == e || cur == e + 1 {
                // d_i s_j = id  (i = j or j+1)
                out.degens.remove(idx);
                return Ok(out);
            } else {
                // d_i s_j = s_j d_{i-1}  (i > j+1)
                cur -= 1;
                idx += 1;
            }
        }
        // insert the surviving face into the increasing face word
        let mut pos = 0;
        while pos < out.faces.len() && out.faces[pos] <= cur {
            cur += 1;
            pos += 1;
        }
        out.faces.insert(pos, cur);
        Ok(out)
    }

    /// Postcompose a degeneracy operator: normal form of `s_i ∘ self`.
    pub fn then_degeneracy(&self, i: u8) -> Result<Self> {
        let cod = self.cod();
        if i as usize > cod {
            return Err(Error::structure(format!("s_{i} invalid on dimension {cod}")));
        }
        let mut out = self.clone();
        out.insert_outer_degeneracy(i);
        Ok(out)
    }

    pub(crate) fn insert_outer_degeneracy(&mut self, i: u8) {
        // s_i s_j = s_{j+1} s_i  (i <= j): move the new index inwards past
        // every index it is <= to, bumping those by one.
        let cur = i;
        let mut pos = 0;
        while pos < self.degens.len() && cur <= self.degens[pos] {
            self.degens[pos] += 1;
            pos += 1;
        }
        self.degens.insert(pos, cur);
    }

    /// Normal form of `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &OperatorWord) -> Result<Self> {
        if other.cod() != self.dom {
            return Err(Error::structure(format!(
                "word composition dimension mismatch: {} vs {}",
                other.cod(),
                self.dom
            )));
        }
        let mut acc = other.clone();
        for &j in self.faces.iter().rev() {
            acc = acc.then_face(j)?;
        }
        for &i in self.degens.iter().rev() {
            acc = acc.then_degeneracy(i)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: the monotone map [cod] -> [dom] represented by a
    /// word, built from coface/codegeneracy tables.  Words are equal iff
    /// their monotone maps are equal.
    fn monotone(w: &OperatorWord) -> Vec<usize> {
        // start from the identity on [dom], apply ops in application order:
        // innermost faces first, then degeneracies
        let mut map: Vec<usize> = (0..=w.dom()).collect(); // [dom] -> [dom]
        // applying d_j corresponds to precomposition with delta_j
        for &j in w.faces().iter().rev() {
            let n = map.len() - 1; // current cod dimension
            let mut next = Vec::with_capacity(n);
            for t in 0..n {
                let s = if t < j as usize { t } else { t + 1 };
                next.push(map[s]);
            }
            map = next;
        }
        for &i in w.degens().iter().rev() {
            let n = map.len() - 1;
            let mut next = Vec::with_capacity(n + 2);
            for t in 0..=(n + 1) {
                let s = if t <= i as usize { t } else { t - 1 };
                next.push(map[s]);
            }
            map = next;
        }
        map
    }

    #[test]
    fn d1_after_s0_is_identity() {
        let s0 = OperatorWord::degeneracy(1, 0).unwrap();
        let d1 = OperatorWord::face(2, 1).unwrap();
        let w = d1.compose(&s0).unwrap();
        assert!(w.is_identity());
        assert_eq!(w.dom(), 1);
    }

    #[test]
    fn d0_after_s1_is_s0_after_d0() {
        let s1 = OperatorWord::degeneracy(1, 1).unwrap();
        let d0 = OperatorWord::face(2, 0).unwrap();
        let lhs = d0.compose(&s1).unwrap();
        let s0 = OperatorWord::degeneracy(0, 0).unwrap();
        let d0lo = OperatorWord::face(1, 0).unwrap();
        let rhs = s0.compose(&d0lo).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn face_exchange_identity_family() {
        // d_i d_j = d_{j-1} d_i for i < j, on a few dimensions
        for dim in 2..=6usize {
            for j in 1..=dim as u8 {
                for i in 0..j {
                    let dj = OperatorWord::face(dim, j).unwrap();
                    let di = OperatorWord::face(dim - 1, i).unwrap();
                    let lhs = di.compose(&dj).unwrap();
                    let dio = OperatorWord::face(dim, i).unwrap();
                    let djm = OperatorWord::face(dim - 1, j - 1).unwrap();
                    let rhs = djm.compose(&dio).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn composition_matches_monotone_map_oracle() {
        // seeded pseudo-random words; compare normal-form composition with
        // composition of the underlying monotone maps
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..500 {
            let dom = (next() % 5 + 1) as usize;
            let mut w2 = OperatorWord::identity(dom);
            for _ in 0..(next() % 4) {
                let cod = w2.cod();
                if next() % 2 == 0 && cod > 0 {
                    w2 = w2.then_face((next() % (cod as u64 + 1)) as u8).unwrap();
                } else {
                    w2 = w2.then_degeneracy((next() % (cod as u64 + 1)) as u8).unwrap();
                }
            }
            let mid = w2.cod();
            let mut w1 = OperatorWord::identity(mid);
            for _ in 0..(next() % 4) {
                let cod = w1.cod();
                if next() % 2 == 0 && cod > 0 {
                    w1 = w1.then_face((next() % (cod as u64 + 1)) as u8).unwrap();
                } else {
                    w1 = w1.then_degeneracy((next() % (cod as u64 + 1)) as u8).unwrap();
                }
            }
            let comp = w1.compose(&w2).unwrap();
            // m(w1 ∘ w2) = m(w2) ∘ m(w1) by contravariance
            let m2 = monotone(&w2);
            let m1 = monotone(&w1);
            let expect: Vec<usize> = m1.iter().map(|&t| m2[t]).collect();
            assert_eq!(monotone(&comp), expect);
            // normal form shape
            assert!(comp.degens().windows(2).all(|p| p[0] > p[1]));
            assert!(comp.faces().windows(2).all(|p| p[0] < p[1]));
        }
    }
}
