use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

fn check_distinct(ids: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(ids.len());
    for id in ids {
        if !seen.insert(id.as_str()) {
            return Err(Error::Duplicate {
                what: "document id",
                key: id.clone(),
            });
        }
    }
    Ok(())
}

/// Seeded shuffle followed by round-robin assignment into `k` folds. Within a
/// fold, ids keep their shuffled order.
pub fn kfold_split(ids: &[String], k: usize, seed: u64) -> Result<Vec<Vec<String>>> {
    if k < 2 {
        return Err(Error::Range(format!("k must be at least 2, got {k}")));
    }
    if k > ids.len() {
        return Err(Error::Range(format!("k={k} exceeds the number of documents ({})", ids.len())));
    }
    check_distinct(ids)?;
    let mut shuffled = ids.to_vec();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut folds = vec![Vec::with_capacity(ids.len() / k + 1); k];
    for (i, id) in shuffled.into_iter().enumerate() {
        folds[i % k].push(id);
    }
    Ok(folds)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleSize {
    Fraction(f64),
    Count(usize),
}

impl SampleSize {
    fn resolve(self, n: usize) -> Result<usize> {
        let m = match self {
            SampleSize::Count(c) => c,
            SampleSize::Fraction(f) => {
                if !(f > 0.0 && f <= 1.0) {
                    return Err(Error::Range(format!("fraction must lie in (0, 1], got {f}")));
                }
                (f * n as f64).round() as usize
            }
        };
        if m == 0 || m > n {
            return Err(Error::Range(format!("sample size {m} outside 1..={n}")));
        }
        Ok(m)
    }
}

/// Seeded sample without replacement; the output keeps input order.
pub fn subsample(ids: &[String], size: SampleSize, seed: u64) -> Result<Vec<String>> {
    check_distinct(ids)?;
    let m = size.resolve(ids.len())?;
    let mut picked = index::sample(&mut ChaCha8Rng::seed_from_u64(seed), ids.len(), m).into_vec();
    picked.sort_unstable();
    Ok(picked.into_iter().map(|i| ids[i].clone()).collect())
}
