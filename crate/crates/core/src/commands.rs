//! The `tutte`, `coeffs` and `verify` commands as pure functions from input text
//! to output text and an exit code.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error, 3 size guard.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::corpus::{random_order, seeded_rng};
use crate::engines::{
    char_poly, char_poly_via_flats, convolution_tutte, multiplicity_tutte_definition,
    tutte_by_activities, tutte_definition, tutte_deletion_contraction, tutte_x0,
};
use crate::error::{Error, Result};
use crate::extreme::{
    extreme_b_dual, extreme_b_top, EntryStatus, ExtremeCoefficientReport, GeneralCoefficients,
    MAX_GENERAL_N,
};
use crate::input::{check_max_n, MatroidInput};
use crate::mobius::{mobius_boolean_expansion, MobiusTable};
use crate::multiplicity::{check_arithmetic_axioms, MultiplicityMatroid, MAX_AXIOM_N};
use crate::poly::BivarPoly;
use crate::tutte_coeffs::{
    small_rank_identities, t_difference, t_extreme, t_extreme_dual, tutte_x0_extreme, TEntry,
    TExtremeReport,
};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

/// Largest ground set on which `verify` compares the Möbius recursion pairwise.
pub const MAX_MOBIUS_PAIRS_N: usize = 10;

const VERIFY_SEED: u64 = 0x7665_7269_6679;
const VERIFY_ORDERS: usize = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String, pass: bool) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: if pass { EXIT_PASS } else { EXIT_FAILURE },
        }
    }

    fn error(err: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: if err.is_size_guard() {
                EXIT_GUARD
            } else {
                EXIT_INPUT
            },
        }
    }
}

fn run(body: impl FnOnce() -> Result<Outcome>) -> Outcome {
    body().unwrap_or_else(|e| Outcome::error(&e))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    #[default]
    Definition,
    Convolution,
    Delcon,
    Activity,
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "definition" => Ok(Engine::Definition),
            "convolution" => Ok(Engine::Convolution),
            "delcon" => Ok(Engine::Delcon),
            "activity" => Ok(Engine::Activity),
            _ => Err(format!(
                "unknown engine {s:?} (expected definition, convolution, delcon or activity)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FamilyChoice {
    Top,
    Dual,
    #[default]
    Both,
}

impl FromStr for FamilyChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "top" => Ok(FamilyChoice::Top),
            "dual" => Ok(FamilyChoice::Dual),
            "both" => Ok(FamilyChoice::Both),
            _ => Err(format!("unknown family {s:?} (expected top, dual or both)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub json: bool,
    pub max_n: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            json: false,
            max_n: crate::input::DEFAULT_MAX_N,
        }
    }
}

fn load(text: &str, opts: &Options) -> Result<MultiplicityMatroid> {
    let max_n = check_max_n(opts.max_n)?;
    MatroidInput::parse(text)?.build(max_n)
}

/// Parses a comma-separated permutation such as `2,0,1`.
pub fn parse_order(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("order entry {t:?} is not an element index")))
        })
        .collect()
}

fn render_poly(p: &BivarPoly, json: bool) -> String {
    if json {
        format!("{}\n", p.to_json())
    } else {
        format!("{p}\n")
    }
}

fn require_trivial(mm: &MultiplicityMatroid, engine: &str) -> Result<()> {
    if mm.is_trivial() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "engine {engine} only handles trivial multiplicity"
        )))
    }
}

pub fn cmd_tutte(text: &str, engine: Engine, order: Option<&str>, opts: &Options) -> Outcome {
    run(|| {
        let mm = load(text, opts)?;
        let order = order.map(parse_order).transpose()?;
        if order.is_some() && engine != Engine::Activity {
            return Err(Error::InvalidArgument(
                "--order only applies to the activity engine".into(),
            ));
        }
        let poly = match engine {
            Engine::Definition => multiplicity_tutte_definition(&mm)?,
            Engine::Convolution => convolution_tutte(&mm)?,
            Engine::Delcon => {
                require_trivial(&mm, "delcon")?;
                tutte_deletion_contraction(mm.matroid())?
            }
            Engine::Activity => {
                require_trivial(&mm, "activity")?;
                let order = order.unwrap_or_else(|| (0..mm.n()).collect());
                tutte_by_activities(mm.matroid(), &order)?.0
            }
        };
        Ok(Outcome::ok(render_poly(&poly, opts.json), true))
    })
}

/// A family that could not be evaluated, with the reason.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyResult<T> {
    Report(T),
    NotApplicable(String),
}

impl<T> FamilyResult<T> {
    fn from_result(r: Result<T>) -> Result<Self> {
        match r {
            Ok(v) => Ok(FamilyResult::Report(v)),
            Err(e @ (Error::HasLoops { .. } | Error::HasColoops { .. })) => {
                Ok(FamilyResult::NotApplicable(e.to_string()))
            }
            Err(e) => Err(e),
        }
    }

    fn report(&self) -> Option<&T> {
        match self {
            FamilyResult::Report(r) => Some(r),
            FamilyResult::NotApplicable(_) => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoeffsOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top: Option<FamilyResult<ExtremeCoefficientReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<FamilyResult<ExtremeCoefficientReport>>,
    /// Tutte-coefficient tables, present for trivial multiplicity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_top: Option<FamilyResult<TExtremeReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_dual: Option<FamilyResult<TExtremeReport>>,
    pub pass: bool,
}

/// A `t` row fails when the general form misses, or the stated form misses
/// with no hypothesis flag to explain it.
fn t_entry_ok(e: &TEntry) -> bool {
    e.generalized_matches() != Some(false)
        && (e.hypothesis_flag || e.as_stated_matches() != Some(false))
}

pub fn coeffs(mm: &MultiplicityMatroid, family: FamilyChoice) -> Result<CoeffsOutput> {
    let want_top = family != FamilyChoice::Dual;
    let want_dual = family != FamilyChoice::Top;
    let trivial = mm.is_trivial();
    let m = mm.matroid();
    let top = want_top
        .then(|| FamilyResult::from_result(extreme_b_top(mm)))
        .transpose()?;
    let dual = want_dual
        .then(|| FamilyResult::from_result(extreme_b_dual(mm)))
        .transpose()?;
    let t_top = (want_top && trivial)
        .then(|| FamilyResult::from_result(t_extreme(m)))
        .transpose()?;
    let t_dual = (want_dual && trivial)
        .then(|| FamilyResult::from_result(t_extreme_dual(m)))
        .transpose()?;
    let b_ok = |f: &Option<FamilyResult<ExtremeCoefficientReport>>| {
        f.as_ref()
            .and_then(FamilyResult::report)
            .is_none_or(ExtremeCoefficientReport::all_match)
    };
    let t_ok = |f: &Option<FamilyResult<TExtremeReport>>| {
        f.as_ref()
            .and_then(FamilyResult::report)
            .is_none_or(|r| r.entries.iter().all(t_entry_ok))
    };
    let pass = b_ok(&top) && b_ok(&dual) && t_ok(&t_top) && t_ok(&t_dual);
    Ok(CoeffsOutput {
        top,
        dual,
        t_top,
        t_dual,
        pass,
    })
}

fn opt(v: &Option<num_bigint::BigInt>) -> String {
    v.as_ref()
        .map_or_else(|| "n/a".to_string(), ToString::to_string)
}

fn degrees_text(d: Option<(u32, u32)>) -> String {
    d.map_or_else(|| "n/a".to_string(), |(i, j)| format!("({i},{j})"))
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut String, cells: Vec<&str>| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if k + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                s.push_str(cell);
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        let _ = writeln!(out, "{}", s.trim_end());
    };
    line(out, header.to_vec());
    for row in rows {
        line(out, row.iter().map(String::as_str).collect());
    }
}

fn render_b(out: &mut String, title: &str, family: &FamilyResult<ExtremeCoefficientReport>) {
    let _ = writeln!(out, "{title}");
    let rep = match family {
        FamilyResult::Report(r) => r,
        FamilyResult::NotApplicable(why) => {
            let _ = writeln!(out, "  n/a: {why}");
            return;
        }
    };
    let with_second = rep.entries.iter().any(|e| e.second_path.is_some());
    let mut header = vec!["coefficient", "(i,j)", "formula"];
    if with_second {
        header.push("via dual");
    }
    header.extend(["brute force", "match"]);
    let rows: Vec<Vec<String>> = rep
        .entries
        .iter()
        .map(|e| {
            let mut row = vec![
                e.label.to_string(),
                degrees_text(e.degrees),
                opt(&e.formula),
            ];
            if with_second {
                row.push(opt(&e.second_path));
            }
            row.push(opt(&e.brute_force));
            row.push(
                match e.status() {
                    EntryStatus::Match => "yes",
                    EntryStatus::Mismatch => "NO",
                    EntryStatus::NotApplicable => "n/a",
                }
                .to_string(),
            );
            row
        })
        .collect();
    table(out, &header, &rows);
}

fn render_t(out: &mut String, title: &str, family: &FamilyResult<TExtremeReport>) {
    let _ = writeln!(out, "{title}");
    let rep = match family {
        FamilyResult::Report(r) => r,
        FamilyResult::NotApplicable(why) => {
            let _ = writeln!(out, "  n/a: {why}");
            return;
        }
    };
    let rows: Vec<Vec<String>> = rep
        .entries
        .iter()
        .map(|e| {
            let concrete = e
                .degrees
                .map_or_else(|| "n/a".to_string(), |(i, j)| format!("t_{{{i},{j}}}"));
            vec![
                e.label.to_string(),
                concrete,
                opt(&e.as_stated),
                opt(&e.generalized),
                opt(&e.brute_force),
                if e.hypothesis_flag { "flagged" } else { "" }.to_string(),
                match (e.degrees.is_some(), t_entry_ok(e)) {
                    (false, _) => "n/a",
                    (true, true) => "yes",
                    (true, false) => "NO",
                }
                .to_string(),
            ]
        })
        .collect();
    table(
        out,
        &[
            "coefficient",
            "index",
            "as stated",
            "general",
            "brute force",
            "hypothesis",
            "match",
        ],
        &rows,
    );
}

pub fn cmd_coeffs(text: &str, family: FamilyChoice, opts: &Options) -> Outcome {
    run(|| {
        let mm = load(text, opts)?;
        let result = coeffs(&mm, family)?;
        let stdout = if opts.json {
            format!(
                "{}\n",
                serde_json::to_string_pretty(&result).expect("serializable")
            )
        } else {
            let mut out = String::new();
            if let Some(f) = &result.top {
                render_b(&mut out, "multiplicity Tutte coefficients, top family", f);
            }
            if let Some(f) = &result.dual {
                render_b(&mut out, "multiplicity Tutte coefficients, dual family", f);
            }
            if let Some(f) = &result.t_top {
                render_t(&mut out, "Tutte coefficients, top family", f);
            }
            if let Some(f) = &result.t_dual {
                render_t(&mut out, "Tutte coefficients, dual family", f);
            }
            let _ = writeln!(
                out,
                "overall: {}",
                if result.pass { "PASS" } else { "FAIL" }
            );
            out
        };
        Ok(Outcome::ok(stdout, result.pass))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationEntry {
    pub identity: &'static str,
    pub anchor: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<VerificationEntry>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn get(&self, identity: &str) -> Option<&VerificationEntry> {
        self.entries.iter().find(|e| e.identity == identity)
    }
}

/// Result of one identity check: `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`.
type Check = Result<Option<String>>;

fn compare(what: &str, left: &BivarPoly, right: &BivarPoly) -> Option<String> {
    (left != right).then(|| format!("{what}: {left} != {right}"))
}

fn first_b_mismatch(rep: &ExtremeCoefficientReport) -> Option<String> {
    rep.entries
        .iter()
        .find(|e| e.status() == EntryStatus::Mismatch)
        .map(|e| {
            format!(
                "{} at {}: formula {}, second path {}, brute force {}",
                e.label,
                degrees_text(e.degrees),
                opt(&e.formula),
                opt(&e.second_path),
                opt(&e.brute_force)
            )
        })
}

fn first_t_mismatch(rep: &TExtremeReport) -> Option<String> {
    rep.entries
        .iter()
        .find(|e| e.generalized_matches() == Some(false))
        .map(|e| {
            format!(
                "{} at {}: general form {}, brute force {}",
                e.label,
                degrees_text(e.degrees),
                opt(&e.generalized),
                opt(&e.brute_force)
            )
        })
}

struct Verifier {
    entries: Vec<VerificationEntry>,
}

impl Verifier {
    fn record(
        &mut self,
        identity: &'static str,
        anchor: &'static str,
        applicable: bool,
        check: impl FnOnce() -> Check,
    ) -> Result<()> {
        let (status, witness) = if !applicable {
            (Status::NotApplicable, None)
        } else {
            match check() {
                Ok(None) => (Status::Pass, None),
                Ok(Some(w)) => (Status::Fail, Some(w)),
                Err(e) if e.is_size_guard() => (Status::NotApplicable, Some(e.to_string())),
                Err(e) => return Err(e),
            }
        };
        self.entries.push(VerificationEntry {
            identity,
            anchor,
            status,
            witness,
        });
        Ok(())
    }
}

/// Runs every identity that applies to `mm`.
pub fn verify(mm: &MultiplicityMatroid) -> Result<VerificationReport> {
    let m = mm.matroid();
    let n = m.n();
    let r = m.total_rank();
    let loopless = m.is_loopless();
    let coloop_free = m.is_coloop_free();
    let trivial = mm.is_trivial();
    let definition = multiplicity_tutte_definition(mm)?;
    let mut v = Verifier {
        entries: Vec::new(),
    };

    v.record(
        "convolution formula",
        "M(x,y) = Σ_{A ⊆ X} M_{M|A}(0,y) · T_{M/A}(x,0)",
        true,
        || {
            Ok(compare(
                "definition vs convolution",
                &definition,
                &convolution_tutte(mm)?,
            ))
        },
    )?;
    v.record(
        "duality",
        "M_M(x,y) = M_{M*}(y,x), m*(A) = m(X \\ A)",
        true,
        || {
            let dual = multiplicity_tutte_definition(&mm.dual())?;
            Ok(compare(
                "swapped vs dual",
                &definition.swap_variables(),
                &dual,
            ))
        },
    )?;
    v.record(
        "y = 0 specialization",
        "T_M(x,0) = (-1)^{rk(M)} χ_M(1-x), χ_M(λ) = Σ_F μ(∅,F) λ^{rk(M)-rk(F)}",
        loopless,
        || {
            let slice = tutte_definition(m)?.at_y_zero();
            let via_chi = tutte_x0(m)?;
            if slice != via_chi {
                return Ok(Some(format!("T(x,0) = {slice}, via χ = {via_chi}")));
            }
            let (a, b) = (char_poly(m)?, char_poly_via_flats(m)?);
            if a != b {
                return Ok(Some(format!("χ by subsets = {a}, by flats = {b}")));
            }
            let triple = tutte_x0_extreme(m)?;
            Ok((!triple.matches()).then(|| format!("extreme triple {triple:?}")))
        },
    )?;
    v.record(
        "loops kill χ",
        "χ_M(λ) = 0 when M has a loop",
        !loopless,
        || {
            let chi = char_poly(m)?;
            Ok((!chi.is_zero()).then(|| format!("χ = {chi}")))
        },
    )?;
    v.record(
        "deletion-contraction",
        "T_M = T_{M\\e} + T_{M/e}; x T_{M\\e} for a coloop, y T_{M/e} for a loop",
        trivial,
        || {
            Ok(compare(
                "definition vs deletion-contraction",
                &definition,
                &tutte_deletion_contraction(m)?,
            ))
        },
    )?;
    v.record(
        "activity expansion",
        "T_M(x,y) = Σ_B x^{i(B)} y^{e(B)}, for every order",
        trivial,
        || {
            let mut rng = seeded_rng(VERIFY_SEED);
            let mut orders = vec![(0..n).collect::<Vec<_>>()];
            orders.extend((0..VERIFY_ORDERS).map(|_| random_order(n, &mut rng)));
            for order in orders {
                let (p, _) = tutte_by_activities(m, &order)?;
                if let Some(w) = compare(&format!("order {order:?}"), &definition, &p) {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        },
    )?;
    v.record(
        "Möbius recursion",
        "μ(F1,F2) = Σ_{F1 ⊆ A ⊆ F2, rk(A) = rk(F2)} (-1)^{|A|-|F1|}",
        loopless && n <= MAX_MOBIUS_PAIRS_N,
        || {
            let table = MobiusTable::new(m)?;
            let flats = table.flats();
            for (i, row) in table.pairwise().iter().enumerate() {
                for (j, &mu) in row.iter().enumerate() {
                    if !flats[i].is_subset_of(flats[j]) {
                        continue;
                    }
                    let b = mobius_boolean_expansion(m, flats[i], flats[j])?;
                    if b != mu {
                        return Ok(Some(format!(
                            "μ({}, {}) = {mu} by recursion, {b} by expansion",
                            flats[i], flats[j]
                        )));
                    }
                }
            }
            Ok(None)
        },
    )?;
    v.record(
        "general coefficient formula",
        "b_{i,j} = (-1)^{rk+i+j} Σ_F Σ_{F'} μ(∅,F') C(rk-rk(F∪F'), i) Σ_{A ⊆ F} (-1)^{|A|} C(|A|-rk(A), j) m(A)",
        loopless && n <= MAX_GENERAL_N,
        || Ok(compare("general formula vs definition", &GeneralCoefficients::new(mm)?.to_poly(), &definition)),
    )?;
    v.record(
        "extreme coefficients, top family",
        "b_{rk,0} = m(∅), ..., b_{rk-2,2}",
        loopless,
        || Ok(first_b_mismatch(&extreme_b_top(mm)?)),
    )?;
    v.record(
        "extreme coefficients, dual family",
        "b_{0,n-rk} = m(X), ..., b_{2,n-rk-2}",
        coloop_free,
        || Ok(first_b_mismatch(&extreme_b_dual(mm)?)),
    )?;
    v.record(
        "Tutte extreme coefficients, top family",
        "t_{rk,0} = 1, t_{rk-1,0} = p - rk, ..., t_{rk-2,2}",
        trivial && loopless,
        || Ok(first_t_mismatch(&t_extreme(m)?)),
    )?;
    v.record(
        "Tutte extreme coefficients, dual family",
        "t_{0,n-rk} = 1, t_{0,n-rk-1} = s - n + rk, ..., t_{2,n-rk-2}",
        trivial && coloop_free,
        || Ok(first_t_mismatch(&t_extreme_dual(m)?)),
    )?;
    let flags_clear = loopless && r >= 2 && crate::tutte_coeffs::hypothesis_flags(m)?.clear();
    v.record(
        "Tutte coefficient difference",
        "t_{rk-2,2} - t_{rk-2,1} = |F'_{2,p=2}| + Σ_{F ∈ F'_{2,p=3}} (p'(F) - 1)",
        trivial && flags_clear,
        || {
            let d = t_difference(m)?;
            Ok((!d.matches())
                .then(|| format!("formula {}, brute force {}", d.formula, d.brute_force)))
        },
    )?;
    v.record(
        "small-rank subset sums",
        "rank 1: Σ (-1)^{|A|}(|A|-1) = 1; rank 2: Σ (-1)^{|A|} C(|A|-rk(A), 2) = Σ_i min(|P_i|,3) - q - 3",
        loopless && coloop_free && (1..=2).contains(&r),
        || {
            let rep = small_rank_identities(m)?;
            Ok(rep
                .checks
                .iter()
                .find(|c| !c.agrees())
                .map(|c| format!("identity {}: {c:?}", c.clause)))
        },
    )?;
    v.record(
        "arithmetic axioms",
        "m(A) | m(A ∪ e) or m(A ∪ e) | m(A); m(A)m(B) = m(A ∪ F)m(A ∪ T) on molecules; Σ_{A ⊆ T ⊆ B} (-1)^{|T|-|A|} m(T) ≥ 0 when rk(A) = rk(B)",
        n <= MAX_AXIOM_N,
        || {
            let rep = check_arithmetic_axioms(mm)?;
            Ok(rep.failed().first().map(|&k| {
                let status = &rep.axioms[k - 1];
                format!("axiom ({k}) fails: {}", status.witnesses[0])
            }))
        },
    )?;

    let overall = if v.entries.iter().any(|e| e.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok(VerificationReport {
        entries: v.entries,
        overall,
    })
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::NotApplicable => "n/a",
    }
}

pub fn cmd_verify(text: &str, opts: &Options) -> Outcome {
    run(|| {
        let mm = load(text, opts)?;
        let report = verify(&mm)?;
        let stdout = if opts.json {
            format!(
                "{}\n",
                serde_json::to_string_pretty(&report).expect("serializable")
            )
        } else {
            let mut out = String::new();
            for e in &report.entries {
                let _ = writeln!(out, "{:<4}  {}", status_text(e.status), e.identity);
                let _ = writeln!(out, "      {}", e.anchor);
                if let Some(w) = &e.witness {
                    let _ = writeln!(out, "      witness: {w}");
                }
            }
            let _ = writeln!(out, "overall: {}", status_text(report.overall));
            out
        };
        Ok(Outcome::ok(stdout, report.passed()))
    })
}
