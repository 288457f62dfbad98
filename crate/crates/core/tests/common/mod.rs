//! Independent oracles and test corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use holokit::bits::{self, ElemSet};
use holokit::catalog;
use holokit::lie::LiePresentation;
use holokit::matroid::{Graph, GroundSet, Matroid, SetArrangement, TwoPartition};

/// Independence read straight off an encoding's definition.
pub type Indep = Box<dyn Fn(ElemSet) -> bool>;

/// A forest has, in every nonempty edge subset, fewer edges than touched
/// vertices.
pub fn graphic_independence(g: &Graph) -> Indep {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    Box::new(move |t| {
        bits::subsets(t).filter(|&s| s != 0).all(|s| {
            let mut touched = HashSet::new();
            for i in bits::elements(s) {
                touched.insert(edges[i].0);
                touched.insert(edges[i].1);
            }
            bits::size(s) < touched.len()
        })
    })
}

/// At most three elements, and three only if not inside a block.
pub fn rank3_independence(a: &SetArrangement) -> Indep {
    let blocks = a.blocks().to_vec();
    Box::new(move |t| match bits::size(t) {
        0..=2 => true,
        3 => !blocks.iter().any(|&b| bits::is_subset(t, b)),
        _ => false,
    })
}

pub fn family_independence(family: &[ElemSet]) -> Indep {
    let set: HashSet<ElemSet> = family.iter().copied().collect();
    Box::new(move |t| set.contains(&t))
}

pub fn brute_rank(indep: &Indep, t: ElemSet) -> usize {
    bits::subsets(t)
        .filter(|&s| indep(s))
        .map(bits::size)
        .max()
        .unwrap_or(0)
}

pub fn brute_closure(indep: &Indep, n: usize, t: ElemSet) -> ElemSet {
    let r = brute_rank(indep, t);
    (0..n)
        .filter(|&x| brute_rank(indep, t | bits::singleton(x)) == r)
        .fold(t, |acc, x| acc | bits::singleton(x))
}

/// Flats of each rank: sets equal to their closure.
pub fn brute_flats(indep: &Indep, n: usize) -> Vec<Vec<ElemSet>> {
    let top = brute_rank(indep, bits::full(n));
    let mut out = vec![Vec::new(); top + 1];
    for t in 0..=bits::full(n) {
        if brute_closure(indep, n, t) == t {
            out[brute_rank(indep, t)].push(t);
        }
    }
    for level in &mut out {
        level.sort_by(bits::canonical_cmp);
    }
    out
}

/// Unsigned Whitney numbers from the characteristic polynomial
/// `sum_S (-1)^|S| t^(r(E) - r(S))`.
pub fn whitney_from_rank(rank: impl Fn(ElemSet) -> usize, n: usize) -> Vec<i64> {
    let top = rank(bits::full(n));
    let mut w = vec![0i64; top + 1];
    for s in 0..=bits::full(n) {
        let sign = if bits::size(s).is_multiple_of(2) {
            1
        } else {
            -1
        };
        w[rank(s)] += sign;
    }
    w.into_iter().map(i64::abs).collect()
}

pub struct CorpusMatroid {
    pub name: String,
    pub matroid: Matroid,
    pub indep: Indep,
}

fn free(n: usize) -> (Matroid, Indep) {
    let g = GroundSet::numbered(n).unwrap();
    let fam: Vec<ElemSet> = bits::subsets(g.all()).collect();
    let indep = family_independence(&fam);
    (Matroid::explicit(g, fam).unwrap(), indep)
}

fn from_arrangement(a: SetArrangement) -> (Matroid, Indep) {
    let indep = rank3_independence(&a);
    (Matroid::from_arrangement(&a), indep)
}

fn graphic(g: Graph) -> (Matroid, Indep) {
    let indep = graphic_independence(&g);
    (Matroid::graphic(g).unwrap(), indep)
}

/// Matroids on at most eight elements, every encoding represented.
pub fn small_matroids() -> Vec<CorpusMatroid> {
    let mut out: Vec<(String, (Matroid, Indep))> = vec![
        ("free4".into(), free(4)),
        ("free5".into(), free(5)),
        ("example7".into(), from_arrangement(catalog::example7())),
        ("fano".into(), from_arrangement(catalog::fano())),
        ("nonfano".into(), from_arrangement(catalog::nonfano())),
        ("roos".into(), from_arrangement(catalog::roos())),
    ];
    let g6 = GroundSet::numbered(6).unwrap();
    let u36 = TwoPartition::completing(g6.clone(), vec![]).unwrap();
    out.push(("U(3,6)".into(), from_arrangement(u36.arrangement())));
    let g5 = GroundSet::numbered(5).unwrap();
    let line = SetArrangement::new(g5.clone(), vec![g5.all()]).unwrap();
    out.push(("line5".into(), from_arrangement(line)));

    for (name, g) in catalog::small_connected_graphs() {
        out.push((format!("graphic {name}"), graphic(g)));
    }
    out.push(("graphic bowtie".into(), graphic(catalog::bowtie())));
    out.push(("graphic W4".into(), graphic(catalog::wheel4())));

    // Dependent-triples and explicit encodings of known matroids.
    let ex = Matroid::from_arrangement(&catalog::example7());
    let triples = ex.dependent_triples_list();
    let tm = Matroid::dependent_triples(ex.ground().clone(), triples).unwrap();
    out.push((
        "example7 triples".into(),
        (tm, rank3_independence(&catalog::example7())),
    ));
    let w4 = Matroid::graphic(catalog::wheel4()).unwrap();
    let trunc = w4.truncation(3).unwrap();
    let gi = graphic_independence(&catalog::wheel4());
    let trunc_indep: Indep = Box::new(move |t| bits::size(t) <= 3 && gi(t));
    out.push(("W4 truncated to rank 3".into(), (trunc, trunc_indep)));

    out.into_iter()
        .map(|(name, (matroid, indep))| CorpusMatroid {
            name,
            matroid,
            indep,
        })
        .collect()
}

/// Arrangements used for holonomy properties.
pub fn arrangements() -> Vec<(String, SetArrangement)> {
    let mut out = vec![
        ("fano".to_string(), catalog::fano()),
        ("nonfano".to_string(), catalog::nonfano()),
        ("roos".to_string(), catalog::roos()),
        ("example7".to_string(), catalog::example7()),
    ];
    for n in 3..=5 {
        let g = GroundSet::numbered(n).unwrap();
        let all = g.all();
        out.push((
            format!("block{n}"),
            SetArrangement::new(g, vec![all]).unwrap(),
        ));
    }
    for (name, g) in graph_corpus() {
        out.push((
            format!("graph {name}"),
            holokit::holonomy::graph_arrangement(&g).unwrap(),
        ));
    }
    out
}

/// Connected graphs on at most four vertices plus bowtie, W4 and K5 - e.
pub fn graph_corpus() -> Vec<(String, Graph)> {
    let mut gs = catalog::small_connected_graphs();
    gs.push(("bowtie".into(), catalog::bowtie()));
    gs.push(("W4".into(), catalog::wheel4()));
    gs.push(("K5-e".into(), catalog::k5_minus_edge()));
    gs
}

/// Every labelled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &(a, b))| (a.to_string(), b.to_string(), format!("{a}-{b}")))
                .collect();
            Graph::new((0..n).map(|i| i.to_string()), edges, true).unwrap()
        })
        .collect()
}

/// Dense vector over all words of one degree; index is base `n`, first
/// letter most significant.
#[derive(Clone, Debug)]
pub struct Dense {
    pub degree: usize,
    pub v: Vec<i128>,
}

fn concat(n: usize, a: &Dense, b: &Dense) -> Dense {
    let size_b = n.pow(b.degree as u32);
    let mut v = vec![0i128; n.pow((a.degree + b.degree) as u32)];
    for (i, &x) in a.v.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.v.iter().enumerate() {
            if y != 0 {
                v[i * size_b + j] += x * y;
            }
        }
    }
    Dense {
        degree: a.degree + b.degree,
        v,
    }
}

pub fn dense_bracket(n: usize, a: &Dense, b: &Dense) -> Dense {
    let ab = concat(n, a, b);
    let ba = concat(n, b, a);
    Dense {
        degree: ab.degree,
        v: ab.v.iter().zip(&ba.v).map(|(x, y)| x - y).collect(),
    }
}

pub fn dense_generator(n: usize, g: usize) -> Dense {
    let mut v = vec![0; n];
    v[g] = 1;
    Dense { degree: 1, v }
}

/// Right-normed brackets `[x_a,[x_b,...]]` over every letter tuple; they
/// span the free Lie algebra in that degree.
pub fn right_normed(n: usize, k: usize) -> Vec<Dense> {
    let mut out = Vec::new();
    for code in 0..n.pow(k as u32) {
        let letters: Vec<usize> = (0..k)
            .map(|p| code / n.pow((k - 1 - p) as u32) % n)
            .collect();
        let mut acc = dense_generator(n, letters[k - 1]);
        for &l in letters[..k - 1].iter().rev() {
            acc = dense_bracket(n, &dense_generator(n, l), &acc);
        }
        out.push(acc);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Incremental dense echelon form with integer rows kept primitive.
#[derive(Default)]
pub struct DenseEchelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl DenseEchelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v`; returns the reduced row when it was independent.
    pub fn insert(&mut self, v: &[i128]) -> Option<Vec<i128>> {
        let mut r = v.to_vec();
        for (p, row) in &self.rows {
            let c = r[*p];
            if c == 0 {
                continue;
            }
            let pc = row[*p];
            let g = gcd(pc, c);
            let (fr, fp) = (pc / g, c / g);
            for (x, y) in r.iter_mut().zip(row) {
                *x = x
                    .checked_mul(fr)
                    .and_then(|a| a.checked_sub(fp * y))
                    .expect("oracle overflow");
            }
            let g = r.iter().fold(0, |acc, &x| gcd(acc, x));
            if g > 1 {
                r.iter_mut().for_each(|x| *x /= g);
            }
        }
        let p = r.iter().position(|&x| x != 0)?;
        self.rows.push((p, r.clone()));
        Some(r)
    }
}

/// Ideal dimensions in degrees `1..=max_degree` from the full word space.
/// With `two_sided`, degree `d` is spanned by `[L_k, I_(d-k)]` for every
/// `k`; otherwise only by brackets with single generators.
pub fn dense_ideal_dims(p: &LiePresentation, max_degree: usize, two_sided: bool) -> Vec<u64> {
    let n = p.generator_count();
    let mut levels: Vec<Vec<Dense>> = vec![Vec::new(), Vec::new()];
    let mut dims = vec![0u64];
    for d in 2..=max_degree {
        let mut cands: Vec<Dense> = Vec::new();
        if d == 2 {
            for r in p.relations() {
                let mut v = vec![0i128; n * n];
                for t in &r.terms {
                    v[t.i * n + t.j] += t.coeff as i128;
                    v[t.j * n + t.i] -= t.coeff as i128;
                }
                cands.push(Dense { degree: 2, v });
            }
        } else {
            let max_k = if two_sided { d - 2 } else { 1 };
            for k in 1..=max_k {
                let monos = right_normed(n, k);
                for m in &monos {
                    for b in &levels[d - k] {
                        cands.push(dense_bracket(n, m, b));
                    }
                }
            }
        }
        let mut ech = DenseEchelon::default();
        let mut basis = Vec::new();
        for c in cands {
            if let Some(r) = ech.insert(&c.v) {
                basis.push(Dense { degree: d, v: r });
            }
        }
        dims.push(ech.rank() as u64);
        levels.push(basis);
    }
    dims
}
