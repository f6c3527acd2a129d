//! Closed forms for the coefficients `b_{i,j}` of the multiplicity Tutte polynomial:
//! the general double flat sum, the six extreme coefficients next to `x^{rk}`,
//! and their six duals next to `y^{|X|-rk}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::engines::{binomial_rows, multiplicity_tutte_definition};
use crate::error::Result;
use crate::matroid::Matroid;
use crate::mobius::MobiusTable;
use crate::multiplicity::MultiplicityMatroid;
use crate::poly::BivarPoly;
use crate::subset::{guard, Subset};

pub const MAX_GENERAL_N: usize = 16;

/// `C(k, j)`, zero whenever `k < j` (including negative `k`).
pub fn binom(k: i64, j: i64) -> BigInt {
    if j < 0 || k < j {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..j {
        acc = acc * BigInt::from(k - t) / BigInt::from(t + 1);
    }
    acc
}

fn sign(parity: usize) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// One row of an extreme-coefficient table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientEntry {
    pub label: &'static str,
    /// Concrete `(i, j)`; `None` when a degree would be negative.
    pub degrees: Option<(u32, u32)>,
    #[serde(serialize_with = "ser_opt_big")]
    pub formula: Option<BigInt>,
    /// Independent second evaluation, when the family has one.
    #[serde(serialize_with = "ser_opt_big")]
    pub second_path: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_big")]
    pub brute_force: Option<BigInt>,
    pub status: EntryStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    Match,
    Mismatch,
    NotApplicable,
}

impl CoefficientEntry {
    pub fn status(&self) -> EntryStatus {
        self.status
    }

    fn compute_status(&self) -> EntryStatus {
        if self.degrees.is_none() {
            return EntryStatus::NotApplicable;
        }
        let second_ok = self.second_path.is_none() || self.second_path == self.formula;
        if second_ok && self.formula.is_some() && self.formula == self.brute_force {
            EntryStatus::Match
        } else {
            EntryStatus::Mismatch
        }
    }
}

pub(crate) fn ser_opt_big<S: serde::Serializer>(
    v: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_some(&b.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Top,
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremeCoefficientReport {
    pub family: Family,
    pub entries: Vec<CoefficientEntry>,
}

impl ExtremeCoefficientReport {
    pub fn all_match(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.status() != EntryStatus::Mismatch)
    }

    pub fn get(&self, label: &str) -> Option<&CoefficientEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

pub const TOP_LABELS: [&str; 6] = [
    "b_{rk,0}",
    "b_{rk-1,0}",
    "b_{rk-2,0}",
    "b_{rk-1,1}",
    "b_{rk-2,1}",
    "b_{rk-2,2}",
];

pub const DUAL_LABELS: [&str; 6] = [
    "b_{0,n-rk}",
    "b_{0,n-rk-1}",
    "b_{0,n-rk-2}",
    "b_{1,n-rk-1}",
    "b_{1,n-rk-2}",
    "b_{2,n-rk-2}",
];

/// Offset below the top degree and the paired low degree, per clause.
pub(crate) const CLAUSE_SHAPE: [(usize, u32); 6] = [(0, 0), (1, 0), (2, 0), (1, 1), (2, 1), (2, 2)];

pub(crate) fn clause_degrees(top: usize, clause: usize) -> Option<(u32, u32)> {
    let (drop, low) = CLAUSE_SHAPE[clause];
    top.checked_sub(drop).map(|d| (d as u32, low))
}

/// Everything the six top-family closed forms read, abstracted so the same
/// clauses serve both a matroid and the transcription of its dual statement.
struct Ingredients<'a> {
    rank: usize,
    /// Number of parallel classes of the whole matroid.
    classes: usize,
    flats1: Vec<Subset>,
    flats2: Vec<Subset>,
    cyclic1: Vec<Subset>,
    /// Parallel classes of the restriction to a flat.
    classes_in: Box<dyn Fn(Subset) -> Result<usize> + 'a>,
    /// Parallel classes of the contraction by a flat.
    classes_over: Box<dyn Fn(Subset) -> Result<usize> + 'a>,
    mult: Box<dyn Fn(Subset) -> BigInt + 'a>,
    nullity: Box<dyn Fn(Subset) -> usize + 'a>,
}

impl Ingredients<'_> {
    /// `Σ_{A ⊆ F} w(A) m(A)`.
    fn weighted(&self, f: Subset, w: impl Fn(Subset) -> i64) -> BigInt {
        f.submasks()
            .map(|a| {
                let k = w(a);
                if k == 0 {
                    BigInt::zero()
                } else {
                    BigInt::from(k) * (self.mult)(a)
                }
            })
            .sum()
    }

    fn six_clauses(&self) -> Result<[Option<BigInt>; 6]> {
        let r = self.rank as i64;
        let p = self.classes as i64;
        let m_empty = (self.mult)(Subset::EMPTY);
        let alt_plus_one = |f: Subset| self.weighted(f, |a| sign(a.len() + 1));
        let alt = |f: Subset| self.weighted(f, |a| sign(a.len()));
        let lin_tail = |f: Subset| {
            self.weighted(f, |a| {
                if a.len() >= 2 {
                    sign(a.len()) * (a.len() as i64 - 1)
                } else {
                    0
                }
            })
        };
        let quad_tail = |f: Subset| -> BigInt {
            f.submasks()
                .filter(|a| a.len() >= 3)
                .map(|a| {
                    BigInt::from(sign(a.len() + 1)) * binom(a.len() as i64 - 1, 2) * (self.mult)(a)
                })
                .sum()
        };
        let over_factor = |f: Subset| -> Result<i64> { Ok((self.classes_over)(f)? as i64 - r + 1) };

        let mut out: [Option<BigInt>; 6] = Default::default();
        out[0] = Some(m_empty.clone());
        if r >= 1 {
            let mut b = BigInt::from(p - r) * &m_empty;
            for &f in &self.flats1 {
                b += alt_plus_one(f);
            }
            out[1] = Some(b);

            let mut b = BigInt::zero();
            for &f in &self.cyclic1 {
                b += lin_tail(f);
            }
            out[3] = Some(b);
        }
        if r >= 2 {
            let mut lead = binom(r, 2) - BigInt::from((r - 1) * p);
            for &f in &self.flats2 {
                lead += BigInt::from((self.classes_in)(f)? as i64 - 1);
            }
            let mut b = lead * &m_empty;
            for &f in &self.flats1 {
                b += BigInt::from(over_factor(f)?) * alt_plus_one(f);
            }
            for &f in &self.flats2 {
                b += alt(f);
            }
            out[2] = Some(b);

            let mut b = BigInt::zero();
            for &f in &self.cyclic1 {
                b += BigInt::from(over_factor(f)?) * lin_tail(f);
            }
            for &f in &self.flats2 {
                b += self.weighted(f, |a| {
                    if a.len() >= 2 {
                        sign(a.len() + 1) * (self.nullity)(a) as i64
                    } else {
                        0
                    }
                });
            }
            out[4] = Some(b);

            let mut b = BigInt::zero();
            for &f in &self.cyclic1 {
                b += BigInt::from(over_factor(f)?) * quad_tail(f);
            }
            for &f in &self.flats2 {
                for a in f.submasks().filter(|a| a.len() >= 3) {
                    b += BigInt::from(sign(a.len()))
                        * binom((self.nullity)(a) as i64, 2)
                        * (self.mult)(a);
                }
            }
            out[5] = Some(b);
        }
        Ok(out)
    }
}

fn classes_of_restriction(m: &Matroid, f: Subset) -> Result<usize> {
    Ok(m.restrict(f)?.0.parallel_classes().count())
}

fn classes_of_contraction(m: &Matroid, f: Subset) -> Result<usize> {
    let (c, _) = m.contract(f)?;
    // contracting a flat never creates loops
    assert!(c.is_loopless(), "contraction by flat {f} has loops");
    Ok(c.parallel_classes().count())
}

fn series_of_restriction(m: &Matroid, f: Subset) -> Result<usize> {
    Ok(m.restrict(f)?.0.series_classes().count())
}

fn series_of_contraction(m: &Matroid, f: Subset) -> Result<usize> {
    Ok(m.contract(f)?.0.series_classes().count())
}

fn top_ingredients(mm: &MultiplicityMatroid) -> Result<Ingredients<'_>> {
    let m = mm.matroid();
    Ok(Ingredients {
        rank: m.total_rank(),
        classes: m.parallel_classes().count(),
        flats1: m.flats_of_rank(1)?,
        flats2: m.flats_of_rank(2)?,
        cyclic1: m.cyclic_flats_of_rank(1)?,
        classes_in: Box::new(move |f| classes_of_restriction(m, f)),
        classes_over: Box::new(move |f| classes_of_contraction(m, f)),
        mult: Box::new(move |a| mm.m(a).clone()),
        nullity: Box::new(move |a| m.nullity(a)),
    })
}

/// The six closed forms next to `x^{rk(M)}`, each paired with the coefficient
/// read off the subset-sum definition.
pub fn extreme_b_top(mm: &MultiplicityMatroid) -> Result<ExtremeCoefficientReport> {
    mm.matroid().require_loopless("extreme_b_top")?;
    let brute = multiplicity_tutte_definition(mm)?;
    let values = top_ingredients(mm)?.six_clauses()?;
    let r = mm.matroid().total_rank();
    Ok(build_report(
        Family::Top,
        &TOP_LABELS,
        values,
        None,
        &brute,
        |k| clause_degrees(r, k),
    ))
}

fn build_report(
    family: Family,
    labels: &[&'static str; 6],
    values: [Option<BigInt>; 6],
    second: Option<[Option<BigInt>; 6]>,
    brute: &BivarPoly,
    degrees: impl Fn(usize) -> Option<(u32, u32)>,
) -> ExtremeCoefficientReport {
    let entries = (0..6)
        .map(|k| {
            let degrees = degrees(k);
            let applicable = degrees.is_some();
            let mut entry = CoefficientEntry {
                label: labels[k],
                degrees,
                formula: values[k].clone().filter(|_| applicable),
                second_path: second
                    .as_ref()
                    .and_then(|s| s[k].clone())
                    .filter(|_| applicable),
                brute_force: degrees.map(|(i, j)| brute.coefficient(i, j)),
                status: EntryStatus::NotApplicable,
            };
            entry.status = entry.compute_status();
            entry
        })
        .collect();
    ExtremeCoefficientReport { family, entries }
}

/// The six closed forms next to `y^{|X|-rk(M)}` for a coloop-free multiplicity matroid.
///
/// `formula` evaluates the dual statement directly on `M`: flats of `M*`, series
/// classes of minors of `M`, `m*(A) = m(X \ A)`, and the dual nullity
/// `|A| - rk*(A) = rk(M) - rk(X \ A)`. `second_path` runs [`extreme_b_top`]'s clauses on
/// the dual and swaps the variables.
pub fn extreme_b_dual(mm: &MultiplicityMatroid) -> Result<ExtremeCoefficientReport> {
    let m = mm.matroid();
    m.require_coloop_free("extreme_b_dual")?;
    let n = m.n();
    let r = m.total_rank();
    let x = m.ground();
    let dual_matroid = m.dual();

    let transcribed = Ingredients {
        rank: n - r,
        classes: m.series_classes().count(),
        flats1: dual_matroid.flats_of_rank(1)?,
        flats2: dual_matroid.flats_of_rank(2)?,
        cyclic1: dual_matroid.cyclic_flats_of_rank(1)?,
        // s(M/F̄) and s(F̄) = s(M|F̄)
        classes_in: Box::new(move |f| series_of_contraction(m, x.difference(f))),
        classes_over: Box::new(move |f| series_of_restriction(m, x.difference(f))),
        mult: Box::new(move |a| mm.m(x.difference(a)).clone()),
        nullity: Box::new(move |a| r - m.rk(x.difference(a))),
    }
    .six_clauses()?;

    let dual_mm = mm.dual();
    let via_duality = top_ingredients(&dual_mm)?.six_clauses()?;

    let brute = multiplicity_tutte_definition(mm)?;
    Ok(build_report(
        Family::Dual,
        &DUAL_LABELS,
        transcribed,
        Some(via_duality),
        &brute,
        |k| clause_degrees(n - r, k).map(|(i, j)| (j, i)),
    ))
}

/// Precomputed pieces of the general double flat sum for `b_{i,j}`:
/// `(-1)^{rk+i+j} Σ_F (Σ_{F'} μ(∅,F') C(rk - rk(F ∪ F'), i)) (Σ_{A ⊆ F} (-1)^{|A|} C(|A|-rk(A), j) m(A))`
/// with `F` over flats of `M` and `F'` over flats of `M/F`.
pub struct GeneralCoefficients {
    rank: usize,
    n: usize,
    /// Per flat: x-side sums indexed by `i` and y-side sums indexed by `j`.
    per_flat: Vec<(Vec<BigInt>, Vec<BigInt>)>,
}

impl GeneralCoefficients {
    pub fn new(mm: &MultiplicityMatroid) -> Result<Self> {
        let m = mm.matroid();
        m.require_loopless("b_ij_general")?;
        let n = m.n();
        guard("b_ij_general", n, MAX_GENERAL_N)?;
        let r = m.total_rank();
        let binoms = binomial_rows(n);
        let choose = |k: usize, j: usize| -> BigInt {
            if j > k {
                BigInt::zero()
            } else {
                binoms[k][j].clone()
            }
        };

        let mut per_flat = Vec::new();
        for f in m.flats()? {
            let (quotient, map) = m.contract(f)?;
            let table = MobiusTable::new(&quotient)?;
            let mut xs = vec![BigInt::zero(); r + 1];
            for (g, mu) in table.bottom_row() {
                let top = r - m.rk(f.union(map.lift(g)));
                for (i, x) in xs.iter_mut().enumerate() {
                    *x += &mu * choose(top, i);
                }
            }
            let mut ys = vec![BigInt::zero(); n + 1];
            for a in f.submasks() {
                let weighted = if a.len() % 2 == 0 {
                    mm.m(a).clone()
                } else {
                    -mm.m(a)
                };
                let null = m.nullity(a);
                for (j, y) in ys.iter_mut().enumerate().take(null + 1) {
                    *y += &weighted * choose(null, j);
                }
            }
            per_flat.push((xs, ys));
        }
        Ok(Self {
            rank: r,
            n,
            per_flat,
        })
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        if i > self.rank || j > self.n {
            return BigInt::zero();
        }
        let s: BigInt = self.per_flat.iter().map(|(xs, ys)| &xs[i] * &ys[j]).sum();
        if (self.rank + i + j).is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    /// Every coefficient assembled into a polynomial.
    pub fn to_poly(&self) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for i in 0..=self.rank {
            for j in 0..=self.n {
                p.add_term(i as u32, j as u32, self.coefficient(i, j));
            }
        }
        p
    }
}

/// `b_{i,j}` from the general double flat sum.
pub fn b_ij_general(mm: &MultiplicityMatroid, i: usize, j: usize) -> Result<BigInt> {
    Ok(GeneralCoefficients::new(mm)?.coefficient(i, j))
}
