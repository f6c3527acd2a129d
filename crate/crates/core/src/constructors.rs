//! Building matroids from uniform parameters, multigraphs, rank tables and integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::multiplicity::MultiplicityMatroid;
use crate::subset::{guard, Subset, MAX_ENUM};

pub const MAX_MATRIX_COLS: usize = 20;
pub const MAX_MATRIX_ROWS: usize = 12;

/// `U_{r,n}`: `rk(A) = min(|A|, r)`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    guard("uniform", n, MAX_ENUM)?;
    if r > n {
        return Err(Error::InvalidArgument(format!(
            "uniform matroid needs r <= n, got r = {r}, n = {n}"
        )));
    }
    Ok(Matroid::from_rank_fn(n, |a| a.len().min(r)))
}

/// Validating constructor from an explicit rank table.
pub fn from_rank_table(n: usize, table: &[u32]) -> Result<Matroid> {
    Matroid::from_rank_table(n, table)
}

/// A multigraph; edge `k` becomes matroid element `k`. Loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{vertices}"
            )));
        }
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Spanning-forest size of the subgraph on the given edges.
    fn forest_size(&self, a: Subset) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut merged = 0;
        for e in a.elements() {
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                merged += 1;
            }
        }
        merged
    }
}

/// Cycle matroid: `rk(A) = |V| - c(V, A)`.
pub fn graphic(g: &Multigraph) -> Result<Matroid> {
    guard("graphic", g.edges.len(), MAX_ENUM)?;
    Ok(Matroid::from_rank_fn(g.edges.len(), |a| g.forest_size(a)))
}

/// Bond matroid: the dual of the cycle matroid.
pub fn bond(g: &Multigraph) -> Result<Matroid> {
    Ok(graphic(g)?.dual())
}

/// A `d × n` integer matrix whose columns are the matroid elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument(
                "matrix rows have different lengths".into(),
            ));
        }
        Ok(Self {
            rows: d,
            cols: n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    /// Row-major copy of the columns listed in `cols`.
    fn column_block(&self, cols: Subset) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| cols.elements().map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// The matrix with column `c` removed.
    pub fn without_column(&self, c: usize) -> Self {
        let keep = Subset::full(self.cols).without(c);
        Self::new(self.column_block(keep)).expect("rectangular")
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rational_rank(block: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = block.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Determinant of a square block by Bareiss elimination.
pub fn determinant(block: &[Vec<BigInt>]) -> BigInt {
    let n = block.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = block.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(c, p);
            sign = -sign;
        }
        for r in c + 1..n {
            for k in c + 1..n {
                let v = (&a[c][c] * &a[r][k] - &a[r][c] * &a[c][k]) / &prev;
                a[r][k] = v;
            }
        }
        prev = a[c][c].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Invariant factors (the nonzero diagonal of the Smith normal form), nonnegative and
/// each dividing the next.
pub fn invariant_factors(block: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = block.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero |entry| in the trailing block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i1, j1), &(i2, j2)| a[i1][j1].abs().cmp(&a[i2][j2].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    let (upper, lower) = a.split_at_mut(i);
                    for (x, p) in lower[0][t..].iter_mut().zip(&upper[t][t..]) {
                        *x -= p * &q;
                    }
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the rest; otherwise fold the offending row in
                let bad = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match bad {
                    Some(i) => {
                        let (upper, lower) = a.split_at_mut(i);
                        for (x, v) in upper[t][t..].iter_mut().zip(&lower[0][t..]) {
                            *x += v;
                        }
                    }
                    None => break,
                }
            }
            // restore a minimal pivot in row/column t before the next sweep
            let best = (t..rows)
                .map(|i| (i, t))
                .chain((t..cols).map(|j| (t, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i1, j1), &(i2, j2)| a[i1][j1].abs().cmp(&a[i2][j2].abs()))
                .expect("pivot row is nonzero");
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// gcd of all `r × r` minors, `r` the rational rank, by explicit enumeration.
pub fn gcd_of_maximal_minors(block: &[Vec<BigInt>]) -> BigInt {
    let r = rational_rank(block);
    let rows = block.len();
    let cols = block.first().map_or(0, Vec::len);
    if r == 0 {
        return BigInt::one();
    }
    let mut g = BigInt::zero();
    for rs in Subset::all(rows).filter(|s| s.len() == r) {
        for cs in Subset::all(cols).filter(|s| s.len() == r) {
            let minor: Vec<Vec<BigInt>> = rs
                .elements()
                .map(|i| cs.elements().map(|j| block[i][j].clone()).collect())
                .collect();
            g = g.gcd(&determinant(&minor));
        }
    }
    g
}

/// Realization of an arithmetic matroid by the columns of an integer matrix: rank over
/// the rationals and `m(A)` the gcd of the maximal minors of the column block (the
/// product of its invariant factors), with `m(∅) = 1`.
pub fn from_integer_matrix(matrix: &IntegerMatrix) -> Result<MultiplicityMatroid> {
    guard(
        "from_integer_matrix (columns)",
        matrix.cols,
        MAX_MATRIX_COLS,
    )?;
    guard("from_integer_matrix (rows)", matrix.rows, MAX_MATRIX_ROWS)?;
    let n = matrix.cols;
    let mut ranks = Vec::with_capacity(1 << n);
    let mut mult = Vec::with_capacity(1 << n);
    for a in Subset::all(n) {
        let block = matrix.column_block(a);
        let factors = invariant_factors(&block);
        let rank = rational_rank(&block);
        debug_assert_eq!(rank, factors.len());
        ranks.push(rank as u32);
        mult.push(factors.iter().product::<BigInt>());
    }
    let matroid = Matroid::from_rank_fn(n, |a| ranks[a.index()] as usize);
    MultiplicityMatroid::new(matroid, mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::multiplicity_tutte_definition;
    use crate::poly::BivarPoly;
    use proptest::prelude::*;

    fn s(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    fn poly(t: &str) -> BivarPoly {
        t.parse().unwrap()
    }

    #[test]
    fn uniform_examples() {
        let u = uniform(2, 3).unwrap();
        assert_eq!(
            u.flats().unwrap(),
            vec![s(&[]), s(&[0]), s(&[1]), s(&[2]), s(&[0, 1, 2])]
        );
        assert_eq!(uniform(0, 2).unwrap().loops(), s(&[0, 1]));
        assert_eq!(uniform(4, 4).unwrap().coloops(), s(&[0, 1, 2, 3]));
        assert!(uniform(3, 2).is_err());
        assert!(uniform(1, 25).unwrap_err().is_size_guard());
    }

    #[test]
    fn graphic_examples() {
        let tri = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(graphic(&tri).unwrap(), uniform(2, 3).unwrap());
        let dbl = Multigraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(graphic(&dbl).unwrap(), uniform(1, 2).unwrap());
        let lp = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(graphic(&lp).unwrap().rank_table(), vec![0, 0]);
        assert!(Multigraph::new(2, vec![(0, 2)]).is_err());
        assert_eq!(bond(&tri).unwrap(), uniform(1, 3).unwrap());
    }

    #[test]
    fn rank_table_examples() {
        assert!(from_rank_table(2, &[0, 1, 1, 1]).is_ok());
        let err = from_rank_table(2, &[0, 1, 1, 0]).unwrap_err();
        match err {
            Error::InvalidRankTable(v) => assert!(v.iter().any(|x| x.axiom() == 2)),
            other => panic!("unexpected {other}"),
        }
        match from_rank_table(1, &[1, 1]).unwrap_err() {
            Error::InvalidRankTable(v) => assert!(v.iter().any(|x| x.axiom() == 1)),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn matrix_examples() {
        let mm = from_integer_matrix(&IntegerMatrix::from_i64(&[&[2]])).unwrap();
        assert_eq!(mm.m(s(&[0])), &BigInt::from(2));
        assert_eq!(multiplicity_tutte_definition(&mm).unwrap(), poly("x + 1"));

        // columns (1,0) and (2,2)
        let mm = from_integer_matrix(&IntegerMatrix::from_i64(&[&[1, 2], &[0, 2]])).unwrap();
        assert_eq!(mm.m(s(&[0, 1])), &BigInt::from(2));
        assert_eq!(multiplicity_tutte_definition(&mm).unwrap(), poly("x^2 + x"));

        let id = from_integer_matrix(&IntegerMatrix::from_i64(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
        ]))
        .unwrap();
        assert!(id.is_trivial());

        let mm = from_integer_matrix(&IntegerMatrix::from_i64(&[&[2, 3]])).unwrap();
        assert_eq!(
            multiplicity_tutte_definition(&mm).unwrap(),
            poly("x + y + 3")
        );
    }

    #[test]
    fn smith_form_small_cases() {
        let b = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect()
        };
        let f = invariant_factors(&b(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(f, vec![2.into(), 6.into(), 12.into()]);
        assert_eq!(
            invariant_factors(&b(&[&[0, 0], &[0, 0]])),
            Vec::<BigInt>::new()
        );
        assert_eq!(invariant_factors(&b(&[&[4, 6]])), vec![BigInt::from(2)]);
        assert_eq!(determinant(&b(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(rational_rank(&b(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn matrix_guards() {
        let wide = IntegerMatrix::new(vec![vec![BigInt::one(); 21]]).unwrap();
        assert!(from_integer_matrix(&wide).unwrap_err().is_size_guard());
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=4, 0usize..=6)
            .prop_flat_map(|(d, n)| prop::collection::vec(prop::collection::vec(-5i64..=5, n), d))
    }

    proptest! {
        #[test]
        fn smith_and_minor_enumeration_agree(rows in arb_matrix()) {
            let block: Vec<Vec<BigInt>> =
                rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            let f = invariant_factors(&block);
            prop_assert_eq!(f.len(), rational_rank(&block));
            for w in f.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            prop_assert_eq!(f.iter().product::<BigInt>(), gcd_of_maximal_minors(&block));
        }

        #[test]
        fn dropping_a_column_restricts(rows in arb_matrix(), pick in 0usize..6) {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            let matrix = IntegerMatrix::from_i64(&refs);
            prop_assume!(matrix.cols() > 0);
            let c = pick % matrix.cols();
            let full = from_integer_matrix(&matrix).unwrap();
            let (restricted, _) = full.restrict(Subset::full(matrix.cols()).without(c)).unwrap();
            prop_assert_eq!(from_integer_matrix(&matrix.without_column(c)).unwrap(), restricted);
        }
    }
}
