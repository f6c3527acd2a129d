//! Möbius function of the lattice of flats.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Flats of a loopless matroid in rank order, with `μ(∅, F)` for every flat `F`.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    flats: Vec<Subset>,
    index: HashMap<Subset, usize>,
    bottom: Vec<i64>,
}

impl MobiusTable {
    pub fn new(m: &Matroid) -> Result<Self> {
        m.require_loopless("mobius")?;
        let mut flats = m.flats()?;
        flats.sort_by_key(|&f| (m.rk(f), f));
        let index = flats.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let mut table = Self {
            flats,
            index,
            bottom: Vec::new(),
        };
        table.bottom = table.row(0);
        Ok(table)
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    fn position(&self, f: Subset) -> Result<usize> {
        self.index.get(&f).copied().ok_or(Error::NotAFlat(f))
    }

    /// `μ(F_k, G)` for every flat `G`, by `μ(F, G) = -Σ_{F ⊆ H ⊊ G} μ(F, H)`.
    fn row(&self, k: usize) -> Vec<i64> {
        let base = self.flats[k];
        let mut mu = vec![0i64; self.flats.len()];
        mu[k] = 1;
        for g in k + 1..self.flats.len() {
            let top = self.flats[g];
            if !base.is_subset_of(top) {
                continue;
            }
            mu[g] = -(k..g)
                .filter(|&h| mu[h] != 0 && self.flats[h].is_subset_of(top))
                .map(|h| mu[h])
                .sum::<i64>();
        }
        mu
    }

    /// `μ(∅, F)`; errors if `f` is not a flat.
    pub fn from_bottom(&self, f: Subset) -> Result<i64> {
        Ok(self.bottom[self.position(f)?])
    }

    /// `(F, μ(∅, F))` over all flats.
    pub fn bottom_row(&self) -> impl Iterator<Item = (Subset, BigInt)> + '_ {
        self.flats
            .iter()
            .zip(&self.bottom)
            .map(|(&f, &mu)| (f, BigInt::from(mu)))
    }

    /// `μ(F1, F2)`; zero when `F1 ⊄ F2`.
    pub fn mobius(&self, f1: Subset, f2: Subset) -> Result<i64> {
        let (k1, k2) = (self.position(f1)?, self.position(f2)?);
        if k1 == 0 {
            return Ok(self.bottom[k2]);
        }
        Ok(self.row(k1)[k2])
    }

    /// The full table `μ(F_i, F_j)` in the order of [`flats`](Self::flats).
    pub fn pairwise(&self) -> Vec<Vec<i64>> {
        (0..self.flats.len()).map(|k| self.row(k)).collect()
    }
}

fn require_flats(m: &Matroid, fs: [Subset; 2]) -> Result<()> {
    for f in fs {
        Subset::within(f.bits(), m.n())?;
        if !m.is_flat(f) {
            return Err(Error::NotAFlat(f));
        }
    }
    Ok(())
}

/// `μ(F1, F2)` by recursion over the interval.
pub fn mobius(m: &Matroid, f1: Subset, f2: Subset) -> Result<i64> {
    m.require_loopless("mobius")?;
    require_flats(m, [f1, f2])?;
    MobiusTable::new(m)?.mobius(f1, f2)
}

/// Boolean expansion: `μ(F1, F2) = Σ_{F1 ⊆ A ⊆ F2, rk(A) = rk(F2)} (-1)^{|A| - |F1|}`.
pub fn mobius_boolean_expansion(m: &Matroid, f1: Subset, f2: Subset) -> Result<i64> {
    m.require_loopless("mobius_boolean_expansion")?;
    require_flats(m, [f1, f2])?;
    if !f1.is_subset_of(f2) {
        return Ok(0);
    }
    let r2 = m.rk(f2);
    Ok(f2
        .difference(f1)
        .submasks()
        .filter(|&c| m.rk(f1.union(c)) == r2)
        .map(|c| if c.len() % 2 == 0 { 1 } else { -1 })
        .sum())
}

/// `μ(∅, F)` for `rk(F) <= 2`: `1`, `-1`, or `p(F) - 1`.
pub fn mobius_low_rank(m: &Matroid, f: Subset) -> Result<i64> {
    m.require_loopless("mobius_low_rank")?;
    require_flats(m, [f, f])?;
    match m.rk(f) {
        0 => Ok(1),
        1 => Ok(-1),
        2 => {
            let (restricted, _) = m.restrict(f)?;
            Ok(restricted.parallel_classes().count() as i64 - 1)
        }
        r => Err(Error::InvalidArgument(format!(
            "closed form needs rk(F) <= 2, got {r}"
        ))),
    }
}
