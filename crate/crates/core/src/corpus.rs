//! A fixed, seeded collection of small (multiplicity) matroids used by the
//! property suites, plus the random generators behind it.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructors::{from_integer_matrix, graphic, uniform, IntegerMatrix, Multigraph};
use crate::error::Result;
use crate::matroid::Matroid;
use crate::multiplicity::MultiplicityMatroid;
use crate::subset::Subset;

pub const CORPUS_SEED: u64 = 0x6d74_7574_7465;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Uniform,
    Graph,
    IntegerMatrix,
    RankTable,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub source: Source,
    pub mm: MultiplicityMatroid,
}

impl Instance {
    fn new(name: impl Into<String>, source: Source, mm: MultiplicityMatroid) -> Self {
        Self {
            name: name.into(),
            source,
            mm,
        }
    }

    pub fn matroid(&self) -> &Matroid {
        self.mm.matroid()
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random total order of `0..n`.
pub fn random_order(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}

/// Multiplicity table with independent values in `lo..=hi`.
pub fn random_multiplicities(
    m: Matroid,
    lo: u32,
    hi: u32,
    rng: &mut impl Rng,
) -> Result<MultiplicityMatroid> {
    let values = (0..1usize << m.n())
        .map(|_| BigInt::from(rng.random_range(lo..=hi)))
        .collect();
    MultiplicityMatroid::new(m, values)
}

/// A random integer matrix with entries in `-bound..=bound`.
pub fn random_matrix(rows: usize, cols: usize, bound: i64, rng: &mut impl Rng) -> IntegerMatrix {
    let data = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| BigInt::from(rng.random_range(-bound..=bound)))
                .collect()
        })
        .collect();
    IntegerMatrix::new(data).expect("rectangular by construction")
}

/// A random rank table on `n` elements.
///
/// Subsets are filled in increasing bitmask order, so every `A - e` is already
/// ranked. Each rank is drawn from the window allowed by the local monotonicity and
/// submodularity constraints; an empty window restarts the draw.
pub fn random_rank_table(n: usize, rng: &mut impl Rng) -> Matroid {
    let grow = rng.random_range(0.3..0.9);
    loop {
        let mut ranks = vec![0u32; 1 << n];
        let mut ok = true;
        for bits in 1u64..1 << n {
            let a = Subset(bits);
            let below: Vec<(usize, u32)> = a
                .elements()
                .map(|e| (e, ranks[a.without(e).index()]))
                .collect();
            let lo = below.iter().map(|&(_, r)| r).max().unwrap_or(0);
            let mut hi = below.iter().map(|&(_, r)| r + 1).min().unwrap_or(0);
            for (i, &(e, re)) in below.iter().enumerate() {
                for &(f, rf) in &below[i + 1..] {
                    let both = ranks[a.without(e).without(f).index()];
                    hi = hi.min(re + rf - both);
                }
            }
            if lo > hi {
                ok = false;
                break;
            }
            ranks[bits as usize] = if hi > lo && rng.random_bool(grow) {
                hi
            } else {
                lo
            };
        }
        if ok {
            if let Ok(m) = Matroid::from_rank_table(n, &ranks) {
                return m;
            }
        }
    }
}

/// The parallel extension of `U_{r,p}` whose `i`-th class has `sizes[i]` elements.
pub fn parallel_extension(r: usize, sizes: &[usize]) -> Matroid {
    let mut class_of = Vec::new();
    for (k, &s) in sizes.iter().enumerate() {
        class_of.extend(std::iter::repeat_n(k, s));
    }
    Matroid::from_rank_fn(class_of.len(), |a| {
        let hit = a.elements().fold(0u64, |acc, e| acc | 1 << class_of[e]);
        (hit.count_ones() as usize).min(r)
    })
}

fn graph(vertices: usize, edges: &[(usize, usize)]) -> Matroid {
    graphic(&Multigraph::new(vertices, edges.to_vec()).expect("valid endpoints"))
        .expect("small graph")
}

fn doubled(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    edges.iter().flat_map(|&e| [e, e]).collect()
}

/// Named graphs: `K4`, the triangle, paths and cycles with doubled edges, and a few
/// graphs carrying loops and bridges.
pub fn graph_family() -> Vec<(String, Matroid)> {
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut out = vec![
        ("K4".to_string(), graph(4, &k4)),
        ("triangle".to_string(), graph(3, &[(0, 1), (1, 2), (0, 2)])),
    ];
    for len in 1..=3 {
        let path: Vec<_> = (0..len).map(|v| (v, v + 1)).collect();
        out.push((
            format!("doubled path P{}", len + 1),
            graph(len + 1, &doubled(&path)),
        ));
    }
    for len in 2..=4 {
        let cycle: Vec<_> = (0..len).map(|v| (v, (v + 1) % len)).collect();
        out.push((
            format!("doubled cycle C{len}"),
            graph(len, &doubled(&cycle)),
        ));
        let mut one = cycle.clone();
        one.push(cycle[0]);
        out.push((
            format!("cycle C{len} with one doubled edge"),
            graph(len, &one),
        ));
    }
    out.push((
        "triangle with a loop".to_string(),
        graph(3, &[(0, 1), (1, 2), (0, 2), (1, 1)]),
    ));
    out.push((
        "loop, bridge and parallel pair".to_string(),
        graph(3, &[(0, 0), (0, 1), (1, 2), (1, 2)]),
    ));
    out.push((
        "triangle with a pendant edge".to_string(),
        graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
    ));
    out
}

/// The seeded corpus: every `U_{r,n}` with `n <= 7` (trivial and random
/// multiplicities), the graph family, 60 random integer matrices with at most four
/// rows and eight columns, and 60 random rank tables on at most six elements with
/// multiplicities in `1..=9`.
pub fn corpus() -> Vec<Instance> {
    let mut rng = seeded_rng(CORPUS_SEED);
    let mut out = Vec::new();
    for n in 0..=7 {
        for r in 0..=n {
            let m = uniform(r, n).expect("n <= 7");
            out.push(Instance::new(
                format!("U({r},{n})"),
                Source::Uniform,
                MultiplicityMatroid::trivial(m.clone()),
            ));
            let mm = random_multiplicities(m, 1, 9, &mut rng).expect("positive values");
            out.push(Instance::new(
                format!("U({r},{n}) weighted"),
                Source::Uniform,
                mm,
            ));
        }
    }
    for (name, m) in graph_family() {
        out.push(Instance::new(
            name,
            Source::Graph,
            MultiplicityMatroid::trivial(m),
        ));
    }
    for k in 0..60 {
        let rows = rng.random_range(1..=4);
        let cols = rng.random_range(1..=8);
        let matrix = random_matrix(rows, cols, 5, &mut rng);
        let mm = from_integer_matrix(&matrix).expect("within size guards");
        out.push(Instance::new(
            format!("matrix #{k} ({rows}x{cols})"),
            Source::IntegerMatrix,
            mm,
        ));
    }
    for k in 0..60 {
        let n = rng.random_range(1..=6);
        let m = random_rank_table(n, &mut rng);
        let mm = random_multiplicities(m, 1, 9, &mut rng).expect("positive values");
        out.push(Instance::new(
            format!("rank table #{k} (n={n})"),
            Source::RankTable,
            mm,
        ));
    }
    out
}
