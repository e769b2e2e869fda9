//! Horn enumeration and Kan-condition checks.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::cosk::{DimDomain, TupleEnumerator};
use super::sset::TruncSSet;

/// How to pick horns: every horn, or a seeded sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HornMode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornReport {
    pub n: usize,
    pub k: usize,
    pub horns_tested: usize,
    pub fillable: usize,
    pub unique_fillers: usize,
}

impl HornReport {
    pub fn all_fillable(&self) -> bool {
        self.fillable == self.horns_tested
    }
}

/// Check fillability of `Λ^n_k` horns of `x`.  A horn is a compatible
/// `(n+1)`-tuple of `(n-1)`-simplices with the `k`-th omitted; a filler is
/// an `n`-simplex whose faces match the horn.
pub fn kan_horn_check(x: &TruncSSet, n: usize, k: usize, mode: HornMode) -> Result<HornReport> {
    if n == 0 || n > x.trunc() {
        return Err(Error::precondition(format!(
            "horn dimension {n} out of range for truncation {}",
            x.trunc()
        )));
    }
    if k > n {
        return Err(Error::precondition("horn index k out of range"));
    }
    let below = DimDomain::build(x, n - 1)?;
    let at = DimDomain::build(x, n)?;
    // fillers indexed by their faces away from position k
    let mut filler_index: HashMap<Vec<u64>, u32> = HashMap::new();
    for idx in 0..at.len() as u32 {
        let key: Vec<u64> = (0..=n).filter(|&i| i != k).map(|i| at.face_key(idx, i)).collect();
        *filler_index.entry(key).or_insert(0) += 1;
    }

    let mut report = HornReport { n, k, horns_tested: 0, fillable: 0, unique_fillers: 0 };
    let mut visit = |tuple: &[u32]| {
        report.horns_tested += 1;
        let key: Vec<u64> = (0..=n)
            .filter(|&i| i != k)
            .map(|i| below.keys[tuple[i] as usize])
            .collect();
        match filler_index.get(&key) {
            Some(&c) => {
                report.fillable += 1;
                if c == 1 {
                    report.unique_fillers += 1;
                }
            }
            None => {}
        }
    };

    let en = TupleEnumerator::new(&below, n + 1, Some(k));
    match mode {
        HornMode::Exhaustive => {
            en.for_each(|tuple| {
                visit(tuple);
                Ok(true)
            })?;
        }
        HornMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut produced = 0usize;
            let mut attempts = 0usize;
            while produced < count && attempts < count * 64 {
                attempts += 1;
                if let Some(tuple) = sample_horn(&en, n, k, &mut rng) {
                    visit(&tuple);
                    produced += 1;
                }
            }
        }
    }
    Ok(report)
}

/// One random compatible horn, by randomized descent over the slot maps.
fn sample_horn(
    en: &TupleEnumerator<'_>,
    n: usize,
    k: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<u32>> {
    let mut tuple = vec![u32::MAX; n + 1];
    for j in 0..=n {
        if j == k {
            continue;
        }
        let cands = en.slot_candidates(&tuple, j);
        if cands.is_empty() {
            return None;
        }
        tuple[j] = cands[rng.gen_range(0..cands.len())];
    }
    Some(tuple)
}
