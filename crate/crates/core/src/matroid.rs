//! Matroids given by a dense rank table, together with closure, flats,
//! parallel/series classes, duality and minors.

use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{guard, ElementMap, Subset, MAX_ENUM};

/// A matroid on `{0, .., n-1}` stored as its full rank table, one entry per bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    ranks: Vec<u8>,
}

/// One failed instance of a rank axiom, with the subsets that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankViolation {
    /// `rk(A) > |A|`.
    Cardinality { set: Subset, rank: u32 },
    /// `A ⊆ B` but `rk(A) > rk(B)`.
    Monotonicity { smaller: Subset, larger: Subset },
    /// `rk(A ∪ B) + rk(A ∩ B) > rk(A) + rk(B)`.
    Submodularity { a: Subset, b: Subset },
}

impl RankViolation {
    /// Which of the three rank axioms failed (1, 2 or 3).
    pub fn axiom(&self) -> u8 {
        match self {
            RankViolation::Cardinality { .. } => 1,
            RankViolation::Monotonicity { .. } => 2,
            RankViolation::Submodularity { .. } => 3,
        }
    }
}

impl fmt::Display for RankViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankViolation::Cardinality { set, rank } => {
                write!(f, "axiom (1): rk({set}) = {rank} > {}", set.len())
            }
            RankViolation::Monotonicity { smaller, larger } => {
                write!(f, "axiom (2): {smaller} ⊆ {larger} but rank decreases")
            }
            RankViolation::Submodularity { a, b } => {
                write!(f, "axiom (3): submodularity fails for A = {a}, B = {b}")
            }
        }
    }
}

/// Checks the three rank axioms on a raw table indexed by bitmask.
///
/// Monotonicity and submodularity are checked in their local forms
/// (`A` against `A+e`, and the pair `A+e`, `A+f`), which are equivalent to
/// the global statements for any set function. The table must have length `2^n`.
pub fn validate_rank_table(n: usize, table: &[u32]) -> Result<Vec<RankViolation>> {
    guard("validate_rank_axioms", n, MAX_ENUM)?;
    if table.len() != 1 << n {
        return Err(Error::TableLength {
            expected: 1 << n,
            found: table.len(),
        });
    }
    let mut out = Vec::new();
    for a in Subset::all(n) {
        let ra = table[a.index()];
        if ra as usize > a.len() {
            out.push(RankViolation::Cardinality { set: a, rank: ra });
        }
        let outside: Vec<usize> = a.complement(n).elements().collect();
        for (k, &e) in outside.iter().enumerate() {
            let ae = a.with(e);
            let rae = table[ae.index()];
            if ra > rae {
                out.push(RankViolation::Monotonicity {
                    smaller: a,
                    larger: ae,
                });
            }
            for &f in &outside[k + 1..] {
                let af = a.with(f);
                if u64::from(table[ae.with(f).index()]) + u64::from(ra)
                    > u64::from(rae) + u64::from(table[af.index()])
                {
                    out.push(RankViolation::Submodularity { a: ae, b: af });
                }
            }
        }
    }
    Ok(out)
}

impl Matroid {
    /// Builds a matroid from a rank table, rejecting tables that break an axiom.
    pub fn from_rank_table(n: usize, table: &[u32]) -> Result<Matroid> {
        let violations = validate_rank_table(n, table)?;
        if !violations.is_empty() {
            return Err(Error::InvalidRankTable(violations));
        }
        Ok(Matroid {
            n,
            ranks: table.iter().map(|&r| r as u8).collect(),
        })
    }

    /// Builds the table from a rank oracle without re-validating it.
    ///
    /// Callers guarantee `rank` is a matroid rank function (e.g. it comes from
    /// a minor, a dual, a graph or a matrix).
    pub(crate) fn from_rank_fn(n: usize, rank: impl Fn(Subset) -> usize) -> Matroid {
        debug_assert!(n <= MAX_ENUM);
        Matroid {
            n,
            ranks: Subset::all(n).map(|a| rank(a) as u8).collect(),
        }
    }

    /// Ground-set size.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    /// Rank of `a`; panics if `a` is not inside the ground set.
    #[inline]
    pub fn rk(&self, a: Subset) -> usize {
        self.ranks[a.index()] as usize
    }

    /// Checked rank lookup.
    pub fn rank(&self, a: Subset) -> Result<usize> {
        let a = Subset::within(a.bits(), self.n)?;
        Ok(self.rk(a))
    }

    /// `rk(M) = rk(X)`.
    #[inline]
    pub fn total_rank(&self) -> usize {
        self.rk(self.ground())
    }

    /// Nullity `|A| - rk(A)`.
    #[inline]
    pub fn nullity(&self, a: Subset) -> usize {
        a.len() - self.rk(a)
    }

    pub fn rank_table(&self) -> Vec<u32> {
        self.ranks.iter().map(|&r| r as u32).collect()
    }

    pub fn violations(&self) -> Vec<RankViolation> {
        validate_rank_table(self.n, &self.rank_table()).unwrap_or_default()
    }

    pub fn closure(&self, a: Subset) -> Subset {
        let r = self.rk(a);
        Subset::from_elements((0..self.n).filter(|&e| self.rk(a.with(e)) == r))
    }

    pub fn is_flat(&self, a: Subset) -> bool {
        let r = self.rk(a);
        a.complement(self.n)
            .elements()
            .all(|e| self.rk(a.with(e)) > r)
    }

    /// All flats, ascending by bitmask.
    pub fn flats(&self) -> Result<Vec<Subset>> {
        guard("enumerate_flats", self.n, MAX_ENUM)?;
        Ok(Subset::all(self.n).filter(|&a| self.is_flat(a)).collect())
    }

    pub fn flats_of_rank(&self, i: usize) -> Result<Vec<Subset>> {
        Ok(self
            .flats()?
            .into_iter()
            .filter(|&f| self.rk(f) == i)
            .collect())
    }

    /// A flat is cyclic when its restriction has no coloops.
    pub fn is_cyclic_flat(&self, f: Subset) -> Result<bool> {
        Subset::within(f.bits(), self.n)?;
        if !self.is_flat(f) {
            return Err(Error::NotAFlat(f));
        }
        let r = self.rk(f);
        Ok(f.elements().all(|e| self.rk(f.without(e)) == r))
    }

    pub fn cyclic_flats_of_rank(&self, i: usize) -> Result<Vec<Subset>> {
        let mut out = Vec::new();
        for f in self.flats_of_rank(i)? {
            if self.is_cyclic_flat(f)? {
                out.push(f);
            }
        }
        Ok(out)
    }

    pub fn loops(&self) -> Subset {
        Subset::from_elements((0..self.n).filter(|&e| self.rk(Subset::singleton(e)) == 0))
    }

    pub fn coloops(&self) -> Subset {
        let x = self.ground();
        let r = self.rk(x);
        Subset::from_elements((0..self.n).filter(|&e| self.rk(x.without(e)) + 1 == r))
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub fn is_coloop_free(&self) -> bool {
        self.coloops().is_empty()
    }

    pub(crate) fn require_loopless(&self, op: &'static str) -> Result<()> {
        let loops = self.loops();
        if !loops.is_empty() {
            return Err(Error::HasLoops { op, loops });
        }
        Ok(())
    }

    pub(crate) fn require_coloop_free(&self, op: &'static str) -> Result<()> {
        let coloops = self.coloops();
        if !coloops.is_empty() {
            return Err(Error::HasColoops { op, coloops });
        }
        Ok(())
    }

    /// `rk*(A) = |A| + rk(X \ A) - rk(X)`.
    pub fn dual(&self) -> Matroid {
        let r = self.total_rank();
        Matroid::from_rank_fn(self.n, |a| a.len() + self.rk(a.complement(self.n)) - r)
    }

    /// `M|T`, re-indexed onto `0..|T|`.
    pub fn restrict(&self, t: Subset) -> Result<(Matroid, ElementMap)> {
        let t = Subset::within(t.bits(), self.n)?;
        let map = ElementMap::new(t);
        let m = Matroid::from_rank_fn(map.len(), |a| self.rk(map.lift(a)));
        Ok((m, map))
    }

    /// `M/T` on `X \ T` with `rk(A ∪ T) - rk(T)`, re-indexed onto `0..|X \ T|`.
    pub fn contract(&self, t: Subset) -> Result<(Matroid, ElementMap)> {
        let t = Subset::within(t.bits(), self.n)?;
        let map = ElementMap::new(t.complement(self.n));
        let rt = self.rk(t);
        let m = Matroid::from_rank_fn(map.len(), |a| self.rk(map.lift(a).union(t)) - rt);
        Ok((m, map))
    }

    /// `M \ e`.
    pub fn delete_element(&self, e: usize) -> Matroid {
        self.restrict(self.ground().without(e))
            .expect("element inside ground set")
            .0
    }

    /// `M / e`.
    pub fn contract_element(&self, e: usize) -> Matroid {
        self.contract(Subset::singleton(e))
            .expect("element inside ground set")
            .0
    }

    /// Parallel classes of the non-loop elements, ordered by least element.
    pub fn parallel_classes(&self) -> PartitionIntoClasses {
        let mut classes: Vec<Subset> = Vec::new();
        'next: for e in (0..self.n).filter(|&e| self.rk(Subset::singleton(e)) == 1) {
            for class in classes.iter_mut() {
                let rep = class.min_element().expect("classes are nonempty");
                if self.rk(Subset::from_elements([rep, e])) == 1 {
                    *class = class.with(e);
                    continue 'next;
                }
            }
            classes.push(Subset::singleton(e));
        }
        PartitionIntoClasses { classes }
    }

    /// Series classes: the parallel classes of the dual.
    pub fn series_classes(&self) -> PartitionIntoClasses {
        self.dual().parallel_classes()
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        let r = self.total_rank();
        b.len() == r && self.rk(b) == r
    }

    /// Bases in ascending bitmask order.
    pub fn bases(&self) -> Result<Vec<Subset>> {
        guard("bases", self.n, MAX_ENUM)?;
        Ok(Subset::all(self.n).filter(|&b| self.is_basis(b)).collect())
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.total_rank())
            .field("ranks", &self.ranks)
            .finish()
    }
}

/// A partition of the non-loop elements into parallel (or series) classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionIntoClasses {
    pub classes: Vec<Subset>,
}

impl PartitionIntoClasses {
    /// Number of classes (`p` or `s`).
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Number of classes with at least two elements (`p'` or `s'`).
    pub fn nontrivial(&self) -> usize {
        self.classes.iter().filter(|c| c.len() >= 2).count()
    }

    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().map(|c| c.len())
    }
}
