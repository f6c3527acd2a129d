//! Multiplicity matroids: a matroid plus a positive integer on every subset.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{guard, ElementMap, Subset};

/// Ceiling for the full quantifier sweep of the arithmetic axioms.
pub const MAX_AXIOM_N: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiplicityMatroid {
    matroid: Matroid,
    mult: Vec<BigInt>,
}

impl MultiplicityMatroid {
    /// Pairs a matroid with a multiplicity table indexed by bitmask; every value must be `>= 1`.
    pub fn new(matroid: Matroid, mult: Vec<BigInt>) -> Result<Self> {
        let expected = 1usize << matroid.n();
        if mult.len() != expected {
            return Err(Error::TableLength {
                expected,
                found: mult.len(),
            });
        }
        if let Some(k) = mult.iter().position(|m| !m.is_positive()) {
            return Err(Error::NonPositiveMultiplicity(Subset(k as u64)));
        }
        Ok(Self { matroid, mult })
    }

    /// `m ≡ 1`.
    pub fn trivial(matroid: Matroid) -> Self {
        let mult = vec![BigInt::one(); 1 << matroid.n()];
        Self { matroid, mult }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn n(&self) -> usize {
        self.matroid.n()
    }

    #[inline]
    pub fn m(&self, a: Subset) -> &BigInt {
        &self.mult[a.index()]
    }

    pub fn table(&self) -> &[BigInt] {
        &self.mult
    }

    pub fn is_trivial(&self) -> bool {
        self.mult.iter().all(|m| m.is_one())
    }

    /// `(rk*, m*)` with `m*(A) = m(X \ A)`.
    pub fn dual(&self) -> Self {
        let n = self.n();
        Self {
            matroid: self.matroid.dual(),
            mult: Subset::all(n)
                .map(|a| self.m(a.complement(n)).clone())
                .collect(),
        }
    }

    /// Restriction to `T`, re-indexed the same way as [`Matroid::restrict`].
    pub fn restrict(&self, t: Subset) -> Result<(Self, ElementMap)> {
        let (matroid, map) = self.matroid.restrict(t)?;
        let mult = Subset::all(map.len())
            .map(|a| self.m(map.lift(a)).clone())
            .collect();
        Ok((Self { matroid, mult }, map))
    }
}

/// Outcome of one arithmetic-matroid axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomStatus {
    pub witnesses: Vec<AxiomWitness>,
    /// Number of instances the quantifier sweep checked.
    pub checked: usize,
}

impl AxiomStatus {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomWitness {
    /// Axiom (1): the divisibility between `m(A)` and `m(A ∪ e)` fails.
    Divisibility {
        set: Subset,
        element: usize,
        rank_preserved: bool,
    },
    /// Axiom (2): `m(A) m(B) != m(A ∪ F) m(A ∪ T)` on a molecule `B = A ⊔ F ⊔ T`.
    Molecule {
        base: Subset,
        free: Subset,
        torsion: Subset,
    },
    /// Axioms (3)/(4): the alternating sum over `[lower, upper]` is negative.
    NegativeSum {
        lower: Subset,
        upper: Subset,
        value: BigInt,
    },
}

impl fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomWitness::Divisibility {
                set,
                element,
                rank_preserved: true,
            } => write!(f, "A = {set}, e = {element}: m(A ∪ e) does not divide m(A)"),
            AxiomWitness::Divisibility { set, element, .. } => {
                write!(f, "A = {set}, e = {element}: m(A) does not divide m(A ∪ e)")
            }
            AxiomWitness::Molecule {
                base,
                free,
                torsion,
            } => write!(
                f,
                "A = {base}, F = {free}, T = {torsion}: m(A)m(B) != m(A ∪ F)m(A ∪ T)"
            ),
            AxiomWitness::NegativeSum {
                lower,
                upper,
                value,
            } => write!(f, "[{lower}, {upper}]: alternating sum {value} < 0"),
        }
    }
}

/// Per-axiom results of [`check_arithmetic_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// Axioms (1) through (4), in order.
    pub axioms: [AxiomStatus; 4],
}

impl AxiomReport {
    /// Notes how axiom (2)'s molecule condition is read.
    pub const HEADER: &'static str = "axiom (2) tested with the molecule condition \
         rk(C) = rk(A) + |C ∩ F| for all A ⊆ C ⊆ B";

    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomStatus::passed)
    }

    /// Indices (1-based) of failing axioms.
    pub fn failed(&self) -> Vec<usize> {
        (0..4)
            .filter(|&k| !self.axioms[k].passed())
            .map(|k| k + 1)
            .collect()
    }
}

/// Sweeps all four arithmetic-matroid axioms and records every witness.
///
/// Axiom (2) uses `rk(C) = rk(A) + |C ∩ F|`; given `A ⊆ B`, the set `F` is forced to be
/// the elements of `B \ A` that raise the rank of `A`, so each interval is tested once.
pub fn check_arithmetic_axioms(mm: &MultiplicityMatroid) -> Result<AxiomReport> {
    let n = mm.n();
    guard("check_arithmetic_axioms", n, MAX_AXIOM_N)?;
    let m = mm.matroid();
    let dual = m.dual();
    let x = m.ground();
    let mut axioms: [AxiomStatus; 4] = Default::default();

    for a in Subset::all(n) {
        for e in a.complement(n).elements() {
            let ae = a.with(e);
            let rank_preserved = m.rk(ae) == m.rk(a);
            let ok = if rank_preserved {
                mm.m(a).is_multiple_of(mm.m(ae))
            } else {
                mm.m(ae).is_multiple_of(mm.m(a))
            };
            axioms[0].checked += 1;
            if !ok {
                axioms[0].witnesses.push(AxiomWitness::Divisibility {
                    set: a,
                    element: e,
                    rank_preserved,
                });
            }
        }
    }

    for b in Subset::all(n) {
        for a in b.submasks() {
            let gap = b.difference(a);
            let ra = m.rk(a);

            let free = Subset::from_elements(gap.elements().filter(|&e| m.rk(a.with(e)) > ra));
            let torsion = gap.difference(free);
            let is_molecule = gap
                .submasks()
                .all(|c| m.rk(a.union(c)) == ra + c.intersection(free).len());
            if is_molecule {
                axioms[1].checked += 1;
                let lhs = mm.m(a) * mm.m(b);
                let rhs = mm.m(a.union(free)) * mm.m(a.union(torsion));
                if lhs != rhs {
                    axioms[1].witnesses.push(AxiomWitness::Molecule {
                        base: a,
                        free,
                        torsion,
                    });
                }
            }

            if m.rk(a) == m.rk(b) {
                axioms[2].checked += 1;
                let value = alternating_sum(a, b, |t| mm.m(t));
                if value.is_negative() {
                    axioms[2].witnesses.push(AxiomWitness::NegativeSum {
                        lower: a,
                        upper: b,
                        value,
                    });
                }
            }

            if dual.rk(a) == dual.rk(b) {
                axioms[3].checked += 1;
                let value = alternating_sum(a, b, |t| mm.m(x.difference(t)));
                if value.is_negative() {
                    axioms[3].witnesses.push(AxiomWitness::NegativeSum {
                        lower: a,
                        upper: b,
                        value,
                    });
                }
            }
        }
    }
    Ok(AxiomReport { axioms })
}

/// `Σ_{A ⊆ T ⊆ B} (-1)^{|T|-|A|} f(T)`.
fn alternating_sum<'a>(a: Subset, b: Subset, f: impl Fn(Subset) -> &'a BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in b.difference(a).submasks() {
        let t = a.union(c);
        if c.len() % 2 == 0 {
            acc += f(t);
        } else {
            acc -= f(t);
        }
    }
    acc
}
