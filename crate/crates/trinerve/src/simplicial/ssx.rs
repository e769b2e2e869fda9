//! The SSX on-disk format for truncated simplicial sets.
//!
//! ```text
//! { "trunc": N,
//!   "dims": [[ids ...], ...],
//!   "faces": { "d/id/i": {"degens": [...], "target": id}, ... },
//!   "labels": { "d/id": [ints ...], ... } }        (optional)
//! ```
//!
//! Writing then reading is the identity, and serialization is
//! deterministic (keys are emitted in sorted order).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::sset::{DimData, SimplexRef, TruncSSet};

#[derive(Serialize, Deserialize)]
struct SsxFace {
    degens: Vec<u8>,
    target: u32,
}

#[derive(Serialize, Deserialize)]
struct SsxFile {
    trunc: usize,
    dims: Vec<Vec<u32>>,
    faces: BTreeMap<String, SsxFace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<String, Vec<i64>>>,
}

pub fn write_ssx(x: &TruncSSet) -> Result<String> {
    let mut dims = Vec::with_capacity(x.trunc() + 1);
    let mut faces = BTreeMap::new();
    let mut labels: BTreeMap<String, Vec<i64>> = BTreeMap::new();
    for d in 0..=x.trunc() {
        dims.push((0..x.count(d) as u32).collect::<Vec<_>>());
        for id in 0..x.count(d) as u32 {
            if d > 0 {
                for i in 0..=d as u8 {
                    let f = x.face_of_nondeg(d, id, i);
                    faces.insert(
                        format!("{d}/{id}/{i}"),
                        SsxFace { degens: f.degens.clone(), target: f.id },
                    );
                }
            }
            if let Some(l) = x.label(d, id) {
                labels.insert(format!("{d}/{id}"), l.clone());
            }
        }
    }
    let file = SsxFile {
        trunc: x.trunc(),
        dims,
        faces,
        labels: if labels.is_empty() { None } else { Some(labels) },
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn read_ssx(text: &str) -> Result<TruncSSet> {
    let file: SsxFile = serde_json::from_str(text)?;
    if file.dims.len() != file.trunc + 1 {
        return Err(Error::structure("SSX dims do not cover 0..=trunc"));
    }
    let mut dims = Vec::with_capacity(file.trunc + 1);
    for (d, ids) in file.dims.iter().enumerate() {
        // ids must be exactly 0..count
        for (n, &id) in ids.iter().enumerate() {
            if id as usize != n {
                return Err(Error::structure(format!("SSX ids at dim {d} are not 0..count")));
            }
        }
        let count = ids.len();
        let mut faces = Vec::new();
        if d > 0 {
            for id in 0..count as u32 {
                for i in 0..=d as u8 {
                    let key = format!("{d}/{id}/{i}");
                    let f = file
                        .faces
                        .get(&key)
                        .ok_or_else(|| Error::structure(format!("SSX missing face {key}")))?;
                    faces.push(SimplexRef { degens: f.degens.clone(), id: f.target });
                }
            }
        }
        let labels = file.labels.as_ref().and_then(|m| {
            let mut out = Vec::with_capacity(count);
            for id in 0..count as u32 {
                match m.get(&format!("{d}/{id}")) {
                    Some(l) => out.push(l.clone()),
                    None => return None,
                }
            }
            Some(out)
        });
        dims.push(DimData { count, faces, labels });
    }
    TruncSSet::new(file.trunc, dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::sset::tests_support::standard_simplex;

    #[test]
    fn round_trip_is_identity() {
        let x = standard_simplex(2, 3);
        let text = write_ssx(&x).unwrap();
        let y = read_ssx(&text).unwrap();
        assert_eq!(x, y);
        // deterministic output
        assert_eq!(text, write_ssx(&y).unwrap());
    }

    #[test]
    fn corrupt_input_is_rejected() {
        let x = standard_simplex(1, 1);
        let text = write_ssx(&x).unwrap();
        let broken = text.replace("\"1/0/0\"", "\"1/9/0\"");
        assert!(read_ssx(&broken).is_err());
    }
}
