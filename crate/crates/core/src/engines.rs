//! Independent computations of (multiplicity) Tutte polynomials and of the
//! characteristic polynomial. They serve as oracles for one another and for
//! the closed-form coefficients in [`crate::extreme`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::mobius::MobiusTable;
use crate::multiplicity::MultiplicityMatroid;
use crate::poly::{BivarPoly, UniPoly};
use crate::subset::{guard, Subset, MAX_ENUM};

pub const MAX_CONVOLUTION_N: usize = 20;

/// Binomial coefficients `C(k, j)` for `0 <= j <= k <= n`.
pub(crate) fn binomial_rows(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for k in 1..=n {
        let prev = &rows[k - 1];
        let mut row = vec![BigInt::one(); k + 1];
        for j in 1..k {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

/// `Σ w_{a,b} (x-1)^a (y-1)^b`.
fn expand_shifted(weights: &HashMap<(usize, usize), BigInt>, max_deg: usize) -> BivarPoly {
    let binom = binomial_rows(max_deg);
    let mut out = BivarPoly::zero();
    for (&(a, b), w) in weights {
        if w.is_zero() {
            continue;
        }
        for i in 0..=a {
            for j in 0..=b {
                let mut c = w * &binom[a][i] * &binom[b][j];
                if (a - i + b - j) % 2 == 1 {
                    c = -c;
                }
                out.add_term(i as u32, j as u32, c);
            }
        }
    }
    out
}

/// `Σ_A m(A) (x-1)^{rk(X)-rk(A)} (y-1)^{|A|-rk(A)}`, summed over all subsets.
pub fn multiplicity_tutte_definition(mm: &MultiplicityMatroid) -> Result<BivarPoly> {
    let n = mm.n();
    guard("multiplicity_tutte_definition", n, MAX_ENUM)?;
    let m = mm.matroid();
    let r = m.total_rank();
    let mut weights: HashMap<(usize, usize), BigInt> = HashMap::new();
    for a in Subset::all(n) {
        *weights.entry((r - m.rk(a), m.nullity(a))).or_default() += mm.m(a);
    }
    Ok(expand_shifted(&weights, n))
}

/// `Σ_A (x-1)^{rk(X)-rk(A)} (y-1)^{|A|-rk(A)}`.
pub fn tutte_definition(m: &Matroid) -> Result<BivarPoly> {
    let n = m.n();
    guard("tutte_definition", n, MAX_ENUM)?;
    let r = m.total_rank();
    let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
    for a in Subset::all(n) {
        *counts.entry((r - m.rk(a), m.nullity(a))).or_default() += 1;
    }
    let weights = counts
        .into_iter()
        .map(|(k, c)| (k, BigInt::from(c)))
        .collect();
    Ok(expand_shifted(&weights, n))
}

/// `T(M) = T(M \ e) + T(M / e)` on the least element that is neither a loop nor
/// a coloop; `x^{#coloops} y^{#loops}` once none is left. Subproblems are
/// memoized on their rank tables.
pub fn tutte_deletion_contraction(m: &Matroid) -> Result<BivarPoly> {
    guard("tutte_deletion_contraction", m.n(), MAX_ENUM)?;
    let mut memo = HashMap::new();
    Ok(delcon(m, &mut memo))
}

fn delcon(m: &Matroid, memo: &mut HashMap<Matroid, BivarPoly>) -> BivarPoly {
    if let Some(p) = memo.get(m) {
        return p.clone();
    }
    let loops = m.loops();
    let coloops = m.coloops();
    let pivot = m.ground().difference(loops.union(coloops)).min_element();
    let p = match pivot {
        None => BivarPoly::monomial(BigInt::one(), coloops.len() as u32, loops.len() as u32),
        Some(e) => {
            let deleted = delcon(&m.delete_element(e), memo);
            let contracted = delcon(&m.contract_element(e), memo);
            &deleted + &contracted
        }
    };
    memo.insert(m.clone(), p.clone());
    p
}

/// Activities of one basis under a total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityRecord {
    pub basis: Subset,
    pub internal_activity: usize,
    pub external_activity: usize,
}

/// `C(e, B) = {e} ∪ {f ∈ B : rk(B - f + e) = rk(B)}` for `e ∉ B`.
pub fn fundamental_circuit(m: &Matroid, basis: Subset, e: usize) -> Subset {
    let r = m.rk(basis);
    let with_e = basis.with(e);
    Subset::from_elements(basis.elements().filter(|&f| m.rk(with_e.without(f)) == r)).with(e)
}

fn check_order(n: usize, order: &[usize]) -> Result<Vec<usize>> {
    let mut position = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::InvalidArgument(format!(
            "order has {} entries for a ground set of size {n}",
            order.len()
        )));
    }
    for (k, &e) in order.iter().enumerate() {
        if e >= n || position[e] != usize::MAX {
            return Err(Error::InvalidArgument(format!(
                "order is not a permutation of 0..{n}"
            )));
        }
        position[e] = k;
    }
    Ok(position)
}

/// Crapo's expansion: `Σ_B x^{internal(B)} y^{external(B)}` over all bases.
///
/// `order` lists the ground set from least to greatest. Internal activity is
/// computed from fundamental circuits of the dual with respect to `X \ B`.
pub fn tutte_by_activities(
    m: &Matroid,
    order: &[usize],
) -> Result<(BivarPoly, Vec<ActivityRecord>)> {
    let n = m.n();
    guard("tutte_by_activities", n, MAX_ENUM)?;
    let position = check_order(n, order)?;
    let least = |c: Subset| c.elements().min_by_key(|&e| position[e]);
    let dual = m.dual();
    let mut poly = BivarPoly::zero();
    let mut records = Vec::new();
    for basis in m.bases()? {
        let cobasis = basis.complement(n);
        let external_activity = cobasis
            .elements()
            .filter(|&e| least(fundamental_circuit(m, basis, e)) == Some(e))
            .count();
        let internal_activity = basis
            .elements()
            .filter(|&f| least(fundamental_circuit(&dual, cobasis, f)) == Some(f))
            .count();
        poly.add_term(
            internal_activity as u32,
            external_activity as u32,
            BigInt::one(),
        );
        records.push(ActivityRecord {
            basis,
            internal_activity,
            external_activity,
        });
    }
    Ok((poly, records))
}

/// Which subsets the convolution formula sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ConvolutionDomain {
    /// Flats only; every other summand vanishes because `M/A` then has a loop.
    #[default]
    Flats,
    /// Every subset, re-checking that the non-flat summands are zero.
    AllSubsets,
}

/// `𝔐(0, y)` of the restriction to `A`, as a polynomial in `y`:
/// `Σ_{B ⊆ A} m(B) (-1)^{rk(A)-rk(B)} (y-1)^{|B|-rk(B)}`.
fn restriction_at_x_zero(mm: &MultiplicityMatroid, a: Subset) -> UniPoly {
    let m = mm.matroid();
    let ra = m.rk(a);
    let mut by_nullity: Vec<BigInt> = vec![BigInt::zero(); a.len() + 1];
    for b in a.submasks() {
        if (ra - m.rk(b)).is_multiple_of(2) {
            by_nullity[m.nullity(b)] += mm.m(b);
        } else {
            by_nullity[m.nullity(b)] -= mm.m(b);
        }
    }
    shifted_uni(&by_nullity)
}

/// `Σ_k w_k (t-1)^k`.
fn shifted_uni(weights: &[BigInt]) -> UniPoly {
    let binom = binomial_rows(weights.len());
    let mut out = vec![BigInt::zero(); weights.len().max(1)];
    for (k, w) in weights.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        for i in 0..=k {
            let c = w * &binom[k][i];
            if (k - i) % 2 == 0 {
                out[i] += c;
            } else {
                out[i] -= c;
            }
        }
    }
    UniPoly::from_coeffs(out)
}

/// `T(x, 0)` straight from the subset sum: `Σ_A (x-1)^{rk(X)-rk(A)} (-1)^{|A|-rk(A)}`.
pub fn tutte_at_y_zero_by_subsets(m: &Matroid) -> Result<UniPoly> {
    guard("tutte_at_y_zero", m.n(), MAX_ENUM)?;
    let r = m.total_rank();
    let mut by_corank = vec![BigInt::zero(); r + 1];
    for a in Subset::all(m.n()) {
        if m.nullity(a).is_multiple_of(2) {
            by_corank[r - m.rk(a)] += 1;
        } else {
            by_corank[r - m.rk(a)] -= 1;
        }
    }
    Ok(shifted_uni(&by_corank))
}

/// `𝔐(x, y) = Σ_A 𝔐_{M|A}(0, y) T_{M/A}(x, 0)`.
pub fn convolution_tutte(mm: &MultiplicityMatroid) -> Result<BivarPoly> {
    convolution_tutte_over(mm, ConvolutionDomain::Flats)
}

pub fn convolution_tutte_over(
    mm: &MultiplicityMatroid,
    domain: ConvolutionDomain,
) -> Result<BivarPoly> {
    let n = mm.n();
    guard("convolution_tutte", n, MAX_CONVOLUTION_N)?;
    let m = mm.matroid();
    let mut out = BivarPoly::zero();
    for a in Subset::all(n) {
        let flat = m.is_flat(a);
        if domain == ConvolutionDomain::Flats && !flat {
            continue;
        }
        let (contracted, _) = m.contract(a)?;
        let tx = tutte_at_y_zero_by_subsets(&contracted)?;
        if !flat && !tx.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "T(x, 0) of the contraction by non-flat {a} is {tx}, expected 0"
            )));
        }
        if tx.is_zero() {
            continue;
        }
        out += &BivarPoly::from_product(&tx, &restriction_at_x_zero(mm, a));
    }
    Ok(out)
}

/// `χ(λ) = Σ_A (-1)^{|A|} λ^{rk(M)-rk(A)}`.
pub fn char_poly(m: &Matroid) -> Result<UniPoly> {
    guard("char_poly", m.n(), MAX_ENUM)?;
    let r = m.total_rank();
    let mut coeffs = vec![BigInt::zero(); r + 1];
    for a in Subset::all(m.n()) {
        if a.len() % 2 == 0 {
            coeffs[r - m.rk(a)] += 1;
        } else {
            coeffs[r - m.rk(a)] -= 1;
        }
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// `χ(λ) = Σ_F μ(∅, F) λ^{rk(M)-rk(F)}` over the lattice of flats; loopless only.
pub fn char_poly_via_flats(m: &Matroid) -> Result<UniPoly> {
    m.require_loopless("char_poly_via_flats")?;
    let table = MobiusTable::new(m)?;
    let r = m.total_rank();
    let mut coeffs = vec![BigInt::zero(); r + 1];
    for (f, mu) in table.bottom_row() {
        coeffs[r - m.rk(f)] += mu;
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// `T(x, 0) = (-1)^{rk(M)} χ(1 - x)` for loopless `M`.
pub fn tutte_x0(m: &Matroid) -> Result<UniPoly> {
    m.require_loopless("tutte_x0")?;
    Ok(char_poly(m)?
        .compose_one_minus()
        .negate_by_parity(m.total_rank() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{from_integer_matrix, graphic, uniform, IntegerMatrix, Multigraph};

    fn poly(t: &str) -> BivarPoly {
        t.parse().unwrap()
    }

    fn trivial(m: Matroid) -> MultiplicityMatroid {
        MultiplicityMatroid::trivial(m)
    }

    fn loop_only() -> Matroid {
        uniform(0, 1).unwrap()
    }

    #[test]
    fn definition_examples() {
        let u23 = uniform(2, 3).unwrap();
        assert_eq!(
            multiplicity_tutte_definition(&trivial(u23.clone())).unwrap(),
            poly("x^2 + x + y")
        );
        let c2 = from_integer_matrix(&IntegerMatrix::from_i64(&[&[2]])).unwrap();
        assert_eq!(multiplicity_tutte_definition(&c2).unwrap(), poly("x + 1"));
        let c23 = from_integer_matrix(&IntegerMatrix::from_i64(&[&[2, 3]])).unwrap();
        assert_eq!(
            multiplicity_tutte_definition(&c23).unwrap(),
            poly("x + y + 3")
        );

        assert_eq!(
            tutte_definition(&uniform(1, 2).unwrap()).unwrap(),
            poly("x + y")
        );
        assert_eq!(
            tutte_definition(&uniform(2, 4).unwrap()).unwrap(),
            poly("x^2 + 2x + 2y + y^2")
        );
        assert_eq!(
            tutte_definition(&uniform(0, 0).unwrap()).unwrap(),
            BivarPoly::one()
        );
    }

    #[test]
    fn deletion_contraction_examples() {
        assert_eq!(
            tutte_deletion_contraction(&uniform(1, 2).unwrap()).unwrap(),
            poly("x + y")
        );
        assert_eq!(
            tutte_deletion_contraction(&uniform(2, 3).unwrap()).unwrap(),
            poly("x^2 + x + y")
        );
        assert_eq!(tutte_deletion_contraction(&loop_only()).unwrap(), poly("y"));
    }

    #[test]
    fn activity_examples() {
        let (p, recs) = tutte_by_activities(&uniform(1, 2).unwrap(), &[0, 1]).unwrap();
        assert_eq!(p, poly("x + y"));
        assert_eq!(
            recs,
            vec![
                ActivityRecord {
                    basis: Subset(0b01),
                    internal_activity: 1,
                    external_activity: 0
                },
                ActivityRecord {
                    basis: Subset(0b10),
                    internal_activity: 0,
                    external_activity: 1
                },
            ]
        );
        let (p, recs) = tutte_by_activities(&uniform(2, 3).unwrap(), &[0, 1, 2]).unwrap();
        assert_eq!(p, poly("x^2 + x + y"));
        assert_eq!(recs.len(), 3);
        assert!(tutte_by_activities(&uniform(1, 2).unwrap(), &[0, 0]).is_err());
        assert!(tutte_by_activities(&uniform(1, 2).unwrap(), &[0]).is_err());
    }

    #[test]
    fn activity_expansion_with_loops_and_coloops() {
        let g = Multigraph::new(3, vec![(0, 0), (0, 1), (1, 2), (1, 2)]).unwrap();
        let m = graphic(&g).unwrap();
        let expected = tutte_definition(&m).unwrap();
        for order in [[0, 1, 2, 3], [3, 2, 1, 0], [2, 0, 3, 1]] {
            assert_eq!(tutte_by_activities(&m, &order).unwrap().0, expected);
        }
        assert_eq!(expected, poly("x^2y + xy^2"));
    }

    #[test]
    fn convolution_examples() {
        let u23 = trivial(uniform(2, 3).unwrap());
        assert_eq!(convolution_tutte(&u23).unwrap(), poly("x^2 + x + y"));
        let c23 = from_integer_matrix(&IntegerMatrix::from_i64(&[&[2, 3]])).unwrap();
        assert_eq!(convolution_tutte(&c23).unwrap(), poly("x + y + 3"));
        assert_eq!(convolution_tutte(&trivial(loop_only())).unwrap(), poly("y"));
        assert_eq!(
            convolution_tutte_over(&c23, ConvolutionDomain::AllSubsets).unwrap(),
            poly("x + y + 3")
        );
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(
            char_poly(&uniform(2, 3).unwrap()).unwrap(),
            UniPoly::from_i64s(&[2, -3, 1])
        );
        let with_loop = graphic(&Multigraph::new(2, vec![(0, 1), (1, 1)]).unwrap()).unwrap();
        assert!(char_poly(&with_loop).unwrap().is_zero());
        assert_eq!(
            char_poly(&uniform(1, 2).unwrap()).unwrap(),
            UniPoly::from_i64s(&[-1, 1])
        );
        assert_eq!(
            char_poly_via_flats(&uniform(2, 3).unwrap()).unwrap(),
            UniPoly::from_i64s(&[2, -3, 1])
        );
        assert!(matches!(
            char_poly_via_flats(&with_loop),
            Err(Error::HasLoops { .. })
        ));
    }

    #[test]
    fn tutte_x0_examples() {
        assert_eq!(
            tutte_x0(&uniform(2, 3).unwrap()).unwrap(),
            UniPoly::from_i64s(&[0, 1, 1])
        );
        assert_eq!(
            tutte_x0(&uniform(1, 2).unwrap()).unwrap(),
            UniPoly::from_i64s(&[0, 1])
        );
        assert_eq!(tutte_x0(&uniform(0, 0).unwrap()).unwrap(), UniPoly::one());
        assert!(tutte_x0(&loop_only()).is_err());
    }

    #[test]
    fn guards() {
        let big = uniform(1, 21).unwrap();
        assert!(convolution_tutte(&trivial(big))
            .unwrap_err()
            .is_size_guard());
    }
}
