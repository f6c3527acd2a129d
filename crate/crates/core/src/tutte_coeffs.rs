//! Closed forms for extreme coefficients `t_{i,j}` of the ordinary Tutte polynomial.
//!
//! Several stated forms only hold when every rank-2 cyclic flat has two or three
//! parallel classes and every rank-1 cyclic flat has at least three elements.
//! Each table therefore carries the stated value, a general value that holds
//! unconditionally, and flags naming the flats that break the hypotheses.

use num_bigint::BigInt;
use serde::Serialize;

use crate::engines::{tutte_definition, tutte_x0};
use crate::error::{Error, Result};
use crate::extreme::{binom, clause_degrees, ser_opt_big};
use crate::matroid::Matroid;
use crate::subset::Subset;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `[x^{rk}]`, `[x^{rk-1}]`, `[x^{rk-2}]` of `T_M(x, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct X0Extreme {
    pub labels: [&'static str; 3],
    #[serde(serialize_with = "ser_triple")]
    pub formula: [Option<BigInt>; 3],
    #[serde(serialize_with = "ser_triple")]
    pub from_polynomial: [Option<BigInt>; 3],
}

fn ser_triple<S: serde::Serializer>(
    v: &[Option<BigInt>; 3],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for e in v {
        seq.serialize_element(&e.as_ref().map(|b| b.to_string()))?;
    }
    seq.end()
}

impl X0Extreme {
    pub fn matches(&self) -> bool {
        self.formula == self.from_polynomial
    }
}

pub fn tutte_x0_extreme(m: &Matroid) -> Result<X0Extreme> {
    m.require_loopless("tutte_x0_extreme")?;
    let r = m.total_rank() as i64;
    let p = m.parallel_classes().count() as i64;
    let slice = tutte_x0(m)?;
    let mut formula: [Option<BigInt>; 3] = [Some(big(1)), None, None];
    let mut from_polynomial: [Option<BigInt>; 3] = [Some(slice.coefficient(r)), None, None];
    if r >= 1 {
        formula[1] = Some(big(p - r));
        from_polynomial[1] = Some(slice.coefficient(r - 1));
    }
    if r >= 2 {
        let mut v = binom(r, 2) - big((r - 1) * p);
        for f in m.flats_of_rank(2)? {
            v += big(classes_in(m, f)? as i64 - 1);
        }
        formula[2] = Some(v);
        from_polynomial[2] = Some(slice.coefficient(r - 2));
    }
    Ok(X0Extreme {
        labels: ["[x^rk]", "[x^(rk-1)]", "[x^(rk-2)]"],
        formula,
        from_polynomial,
    })
}

fn classes_in(m: &Matroid, f: Subset) -> Result<usize> {
    Ok(m.restrict(f)?.0.parallel_classes().count())
}

fn classes_over(m: &Matroid, f: Subset) -> Result<usize> {
    let (c, _) = m.contract(f)?;
    assert!(c.is_loopless(), "contraction by flat {f} has loops");
    Ok(c.parallel_classes().count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TEntry {
    pub label: &'static str,
    pub degrees: Option<(u32, u32)>,
    #[serde(serialize_with = "ser_opt_big")]
    pub as_stated: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_big")]
    pub generalized: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_big")]
    pub brute_force: Option<BigInt>,
    /// The stated form is outside its domain of validity for this matroid.
    pub hypothesis_flag: bool,
}

impl TEntry {
    pub fn generalized_matches(&self) -> Option<bool> {
        self.degrees.map(|_| self.generalized == self.brute_force)
    }

    pub fn as_stated_matches(&self) -> Option<bool> {
        match (&self.degrees, &self.as_stated) {
            (Some(_), Some(v)) => Some(Some(v) == self.brute_force.as_ref()),
            _ => None,
        }
    }
}

/// Cyclic flats outside the stated forms' domain.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HypothesisFlags {
    /// Rank-2 cyclic flats with four or more parallel classes.
    pub wide_rank2: Vec<Subset>,
    /// Rank-1 cyclic flats with exactly two elements.
    pub small_rank1: Vec<Subset>,
}

impl HypothesisFlags {
    pub fn clear(&self) -> bool {
        self.wide_rank2.is_empty() && self.small_rank1.is_empty()
    }

    fn clause_flag(&self, clause: usize) -> bool {
        match clause {
            4 => !self.wide_rank2.is_empty(),
            5 => !self.clear(),
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TExtremeReport {
    pub entries: Vec<TEntry>,
    pub flags: HypothesisFlags,
}

impl TExtremeReport {
    pub fn get(&self, label: &str) -> Option<&TEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn generalized_all_match(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.generalized_matches() != Some(false))
    }

    pub fn as_stated_all_match(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.as_stated_matches() != Some(false))
    }
}

pub const T_TOP_LABELS: [&str; 6] = [
    "t_{rk,0}",
    "t_{rk-1,0}",
    "t_{rk-2,0}",
    "t_{rk-1,1}",
    "t_{rk-2,1}",
    "t_{rk-2,2}",
];

pub const T_DUAL_LABELS: [&str; 6] = [
    "t_{0,n-rk}",
    "t_{0,n-rk-1}",
    "t_{0,n-rk-2}",
    "t_{1,n-rk-1}",
    "t_{1,n-rk-2}",
    "t_{2,n-rk-2}",
];

/// Sum of `min(|P|, 3)` over parallel classes, minus the classes of size three or more, minus 3.
fn g_form(m: &Matroid) -> i64 {
    let classes = m.parallel_classes();
    let g: usize = classes.sizes().map(|s| s.min(3)).sum();
    let q = classes.sizes().filter(|&s| s >= 3).count();
    g as i64 - q as i64 - 3
}

struct Rank2Flat {
    flat: Subset,
    restricted: Matroid,
    classes: usize,
}

fn cyclic_rank2(m: &Matroid) -> Result<Vec<Rank2Flat>> {
    m.cyclic_flats_of_rank(2)?
        .into_iter()
        .map(|f| {
            let restricted = m.restrict(f)?.0;
            let classes = restricted.parallel_classes().count();
            Ok(Rank2Flat {
                flat: f,
                restricted,
                classes,
            })
        })
        .collect()
}

pub fn hypothesis_flags(m: &Matroid) -> Result<HypothesisFlags> {
    Ok(HypothesisFlags {
        wide_rank2: cyclic_rank2(m)?
            .into_iter()
            .filter(|f| f.classes >= 4)
            .map(|f| f.flat)
            .collect(),
        small_rank1: m
            .cyclic_flats_of_rank(1)?
            .into_iter()
            .filter(|f| f.len() == 2)
            .collect(),
    })
}

/// Six extreme Tutte coefficients next to `x^{rk}` of a loopless matroid.
pub fn t_extreme(m: &Matroid) -> Result<TExtremeReport> {
    m.require_loopless("t_extreme")?;
    let r = m.total_rank() as i64;
    let classes = m.parallel_classes();
    let p = classes.count() as i64;
    let p_nt = classes.nontrivial() as i64;
    let brute = tutte_definition(m)?;
    let flags = hypothesis_flags(m)?;

    let mut as_stated: [Option<BigInt>; 6] = Default::default();
    let mut general: [Option<BigInt>; 6] = Default::default();
    as_stated[0] = Some(big(1));
    if r >= 1 {
        as_stated[1] = Some(big(p - r));
        as_stated[3] = Some(big(p_nt));
    }
    if r >= 2 {
        let mut v = binom(r, 2) - big((r - 1) * p);
        for f in m.flats_of_rank(2)? {
            v += big(classes_in(m, f)? as i64 - 1);
        }
        as_stated[2] = Some(v);

        let cyclic1 = m.cyclic_flats_of_rank(1)?;
        let mut over_sum = 0i64;
        let mut over_sum_large = 0i64;
        for &f in &cyclic1 {
            let q = classes_over(m, f)? as i64;
            over_sum += q;
            if f.len() >= 3 {
                over_sum_large += q - r + 1;
            }
        }
        let rank2 = cyclic_rank2(m)?;
        let with = |k: usize| rank2.iter().filter(move |f| f.classes == k);
        let base = (1 - r) * p_nt + over_sum;

        as_stated[4] = Some(big(base + with(3).count() as i64));
        as_stated[5] = Some(big(base
            + with(2).count() as i64
            + with(3)
                .map(|f| f.restricted.parallel_classes().nontrivial() as i64)
                .sum::<i64>()));

        let mut excess = 0i64;
        for f in m.flats_of_rank(2)? {
            excess += classes_in(m, f)? as i64 - 2;
        }
        general[4] = Some(big(base + excess));
        general[5] = Some(big(
            over_sum_large + rank2.iter().map(|f| g_form(&f.restricted)).sum::<i64>()
        ));
    }
    general[..4].clone_from_slice(&as_stated[..4]);

    let entries = (0..6)
        .map(|k| {
            let degrees = clause_degrees(r as usize, k);
            TEntry {
                label: T_TOP_LABELS[k],
                degrees,
                as_stated: as_stated[k].clone().filter(|_| degrees.is_some()),
                generalized: general[k].clone().filter(|_| degrees.is_some()),
                brute_force: degrees.map(|(i, j)| brute.coefficient(i, j)),
                hypothesis_flag: degrees.is_some() && flags.clause_flag(k),
            }
        })
        .collect();
    Ok(TExtremeReport { entries, flags })
}

/// Six extreme Tutte coefficients next to `y^{|X|-rk}` of a coloop-free matroid.
///
/// `generalized` is [`t_extreme`] on the dual with the variables swapped. `as_stated`
/// transcribes the first four stated clauses directly on `M`, reading the
/// contraction in the third clause as `M/(X \ F)`; the last two are not transcribed.
pub fn t_extreme_dual(m: &Matroid) -> Result<TExtremeReport> {
    m.require_coloop_free("t_extreme_dual")?;
    let n = m.n() as i64;
    let r = m.total_rank() as i64;
    let corank = n - r;
    let x = m.ground();
    let series = m.series_classes();
    let s = series.count() as i64;
    let dual = m.dual();
    let via_dual = t_extreme(&dual)?;
    let brute = tutte_definition(m)?;

    let mut as_stated: [Option<BigInt>; 6] = Default::default();
    as_stated[0] = Some(big(1));
    if corank >= 1 {
        as_stated[1] = Some(big(s - n + r));
        as_stated[3] = Some(big(series.nontrivial() as i64));
    }
    if corank >= 2 {
        let mut v = binom(corank, 2) - big((corank - 1) * s);
        for f in dual.flats_of_rank(2)? {
            let quotient = m.contract(x.difference(f))?.0;
            v += big(quotient.series_classes().count() as i64 - 1);
        }
        as_stated[2] = Some(v);
    }

    let entries = (0..6)
        .map(|k| {
            let degrees = clause_degrees(corank as usize, k).map(|(i, j)| (j, i));
            TEntry {
                label: T_DUAL_LABELS[k],
                degrees,
                as_stated: as_stated[k].clone().filter(|_| degrees.is_some()),
                generalized: via_dual.entries[k].generalized.clone(),
                brute_force: degrees.map(|(i, j)| brute.coefficient(i, j)),
                hypothesis_flag: false,
            }
        })
        .collect();
    Ok(TExtremeReport {
        entries,
        flags: via_dual.flags,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TDifference {
    pub formula: i64,
    pub brute_force: i64,
    pub hypothesis_flag: bool,
}

impl TDifference {
    pub fn matches(&self) -> bool {
        self.formula == self.brute_force
    }
}

/// `t_{rk-2,2} - t_{rk-2,1}` against the count of rank-2 cyclic flats with two
/// classes plus `Σ (p'(F) - 1)` over those with three.
pub fn t_difference(m: &Matroid) -> Result<TDifference> {
    m.require_loopless("t_difference")?;
    let r = m.total_rank();
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "t_difference needs rank >= 2, got {r}"
        )));
    }
    let rank2 = cyclic_rank2(m)?;
    let formula = rank2.iter().filter(|f| f.classes == 2).count() as i64
        + rank2
            .iter()
            .filter(|f| f.classes == 3)
            .map(|f| f.restricted.parallel_classes().nontrivial() as i64 - 1)
            .sum::<i64>();
    let t = tutte_definition(m)?;
    let d = (r - 2) as u32;
    let diff = t.coefficient(d, 2) - t.coefficient(d, 1);
    Ok(TDifference {
        formula,
        brute_force: i64::try_from(diff).expect("Tutte coefficient fits in i64"),
        hypothesis_flag: !hypothesis_flags(m)?.clear(),
    })
}

/// One identity: an alternating subset sum against its closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub clause: u8,
    /// `None` when the rank or size condition excludes this identity.
    pub direct: Option<i64>,
    /// The stated right-hand side; `None` where its case split does not cover `M`.
    pub stated: Option<i64>,
    /// The class-size form `Σ min(|P_i|, 3) - q - 3`, last identity only.
    pub general: Option<i64>,
}

impl IdentityCheck {
    pub fn applicable(&self) -> bool {
        self.direct.is_some()
    }

    /// Agreement with every closed form that applies.
    pub fn agrees(&self) -> bool {
        let Some(d) = self.direct else { return true };
        self.stated.is_none_or(|v| v == d)
            && self.general.is_none_or(|v| v == d)
            && (self.stated.is_some() || self.general.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: [IdentityCheck; 4],
}

impl IdentityReport {
    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(IdentityCheck::agrees)
    }
}

fn signed(len: usize) -> i64 {
    if len.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The four small-rank subset-sum identities for a loopless, coloop-free matroid
/// of rank 1 or 2. Identities for the other rank are reported as not applicable.
pub fn small_rank_identities(m: &Matroid) -> Result<IdentityReport> {
    m.require_loopless("small_rank_identities")?;
    m.require_coloop_free("small_rank_identities")?;
    let r = m.total_rank();
    if !(1..=2).contains(&r) {
        return Err(Error::InvalidArgument(format!(
            "identities need rank 1 or 2, got {r}"
        )));
    }
    let x = m.ground();
    let n = m.n();
    let sum = |w: &dyn Fn(Subset) -> i64| -> i64 { x.submasks().map(w).sum() };
    let blank = |clause| IdentityCheck {
        clause,
        direct: None,
        stated: None,
        general: None,
    };
    let mut checks = [blank(1), blank(2), blank(3), blank(4)];

    if r == 1 {
        checks[0].direct = Some(sum(&|a| {
            if a.len() >= 2 {
                signed(a.len()) * (a.len() as i64 - 1)
            } else {
                0
            }
        }));
        checks[0].stated = Some(1);
        if n >= 3 {
            checks[1].direct = Some(sum(&|a| {
                if a.len() >= 3 {
                    -signed(a.len()) * (a.len() as i64 - 1) * (a.len() as i64 - 2) / 2
                } else {
                    0
                }
            }));
            checks[1].stated = Some(1);
        }
    } else {
        let classes = m.parallel_classes();
        let p = classes.count() as i64;
        checks[2].direct = Some(sum(&|a| -signed(a.len()) * m.nullity(a) as i64));
        checks[2].stated = Some(p - 2);
        checks[3].direct = Some(sum(&|a| {
            let k = m.nullity(a) as i64;
            signed(a.len()) * k * (k - 1) / 2
        }));
        checks[3].stated = match p {
            2 => Some(1),
            3 => Some(classes.nontrivial() as i64),
            _ => None,
        };
        checks[3].general = Some(g_form(m));
    }
    Ok(IdentityReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{graphic, uniform, Multigraph};

    fn b(v: i64) -> Option<BigInt> {
        Some(BigInt::from(v))
    }

    fn two_doubled_edges() -> Matroid {
        graphic(&Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2), (1, 2)]).unwrap()).unwrap()
    }

    #[test]
    fn x0_triples() {
        let u23 = tutte_x0_extreme(&uniform(2, 3).unwrap()).unwrap();
        assert_eq!(u23.formula, [b(1), b(1), b(0)]);
        assert!(u23.matches());
        let u24 = tutte_x0_extreme(&uniform(2, 4).unwrap()).unwrap();
        assert_eq!(u24.formula, [b(1), b(2), b(0)]);
        assert!(u24.matches());
        let u12 = tutte_x0_extreme(&uniform(1, 2).unwrap()).unwrap();
        assert_eq!(u12.formula, [b(1), b(0), None]);
        assert!(u12.matches());
    }

    #[test]
    fn u23_table() {
        let rep = t_extreme(&uniform(2, 3).unwrap()).unwrap();
        let e = rep.get("t_{rk-2,1}").unwrap();
        assert_eq!(e.degrees, Some((0, 1)));
        assert_eq!((e.as_stated.clone(), e.generalized.clone()), (b(1), b(1)));
        assert!(rep.flags.clear());
        assert!(rep.as_stated_all_match() && rep.generalized_all_match());
    }

    #[test]
    fn u24_diverges_as_stated() {
        let rep = t_extreme(&uniform(2, 4).unwrap()).unwrap();
        let e = rep.get("t_{rk-2,1}").unwrap();
        assert_eq!(e.as_stated, b(0));
        assert_eq!(e.generalized, b(2));
        assert_eq!(e.brute_force, b(2));
        assert!(e.hypothesis_flag);
        assert!(rep.generalized_all_match());
        assert!(!rep.as_stated_all_match());
    }

    #[test]
    fn two_doubled_edges_table() {
        let m = two_doubled_edges();
        let rep = t_extreme(&m).unwrap();
        let e = rep.get("t_{rk-2,2}").unwrap();
        assert_eq!(e.degrees, Some((0, 2)));
        assert_eq!(e.generalized, b(1));
        assert_eq!(e.brute_force, b(1));
        assert_eq!(e.as_stated, b(1));
        assert!(e.hypothesis_flag);
        assert_eq!(rep.flags.small_rank1.len(), 2);
        assert!(rep.generalized_all_match());
    }

    #[test]
    fn dual_tables() {
        let rep = t_extreme_dual(&uniform(2, 3).unwrap()).unwrap();
        let e = rep.get("t_{0,n-rk}").unwrap();
        assert_eq!((e.degrees, e.generalized.clone()), (Some((0, 1)), b(1)));
        assert!(rep.generalized_all_match() && rep.as_stated_all_match());

        let rep = t_extreme_dual(&uniform(1, 2).unwrap()).unwrap();
        let e = rep.get("t_{0,n-rk-1}").unwrap();
        assert_eq!(e.degrees, Some((0, 0)));
        let e = rep.get("t_{1,n-rk-1}").unwrap();
        assert_eq!((e.degrees, e.as_stated.clone()), (Some((1, 0)), b(1)));
        assert!(rep.generalized_all_match() && rep.as_stated_all_match());

        let rep = t_extreme_dual(&uniform(2, 4).unwrap()).unwrap();
        let e = rep.get("t_{1,n-rk-1}").unwrap();
        assert_eq!((e.degrees, e.as_stated.clone()), (Some((1, 1)), b(0)));
        assert!(rep.generalized_all_match() && rep.as_stated_all_match());
    }

    #[test]
    fn differences() {
        let d = t_difference(&uniform(2, 3).unwrap()).unwrap();
        assert_eq!((d.formula, d.brute_force), (-1, -1));
        let d = t_difference(&two_doubled_edges()).unwrap();
        assert_eq!((d.formula, d.brute_force), (1, 1));
        assert!(d.hypothesis_flag);
        assert!(t_difference(&uniform(1, 2).unwrap()).is_err());
    }

    #[test]
    fn identities() {
        let rep = small_rank_identities(&uniform(1, 2).unwrap()).unwrap();
        assert_eq!(rep.checks[0].direct, Some(1));
        assert!(!rep.checks[1].applicable());
        assert!(rep.all_agree());

        let rep = small_rank_identities(&uniform(2, 4).unwrap()).unwrap();
        assert_eq!(rep.checks[2].direct, Some(2));
        assert_eq!(rep.checks[2].stated, Some(2));
        assert_eq!(rep.checks[3].direct, Some(1));
        assert_eq!(rep.checks[3].stated, None);
        assert_eq!(rep.checks[3].general, Some(1));
        assert!(rep.all_agree());

        assert!(small_rank_identities(&uniform(3, 4).unwrap()).is_err());
        assert!(small_rank_identities(&uniform(2, 2).unwrap()).is_err());
    }
}
