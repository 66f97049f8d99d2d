//! Corpora and brute-force oracles shared by the integration tests. Nothing
//! here calls into the library except to build graphs.

#![allow(dead_code)]

use std::collections::BTreeSet;

use artin_core::LabelledGraph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const LABELS: [u32; 5] = [2, 3, 4, 5, 6];

/// A graph on vertices `v0 .. v{n-1}` with its adjacency as bitmasks.
#[derive(Debug, Clone)]
pub struct Case {
    pub n: usize,
    pub adj: Vec<u16>,
    pub edges: Vec<(usize, usize, u32)>,
    pub graph: LabelledGraph,
}

pub fn name(i: usize) -> String {
    format!("v{i}")
}

impl Case {
    pub fn new(n: usize, edges: Vec<(usize, usize, u32)>) -> Case {
        let names: Vec<String> = (0..n).map(name).collect();
        let mut adj = vec![0u16; n];
        let named: Vec<(String, String, u32)> = edges.iter().map(|&(u, v, l)| (name(u), name(v), l)).collect();
        for &(u, v, _) in &edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let refs: Vec<(&str, &str, u32)> = named.iter().map(|(u, v, l)| (u.as_str(), v.as_str(), *l)).collect();
        let graph = LabelledGraph::new(names.iter().map(String::as_str), &refs).expect("valid corpus graph");
        Case { n, adj, edges, graph }
    }

    pub fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    pub fn is_connected(&self) -> bool {
        connected_within(&self.adj, self.all())
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.edges.iter().find(|&&(a, b, _)| (a, b) == (u, v) || (a, b) == (v, u)).map(|e| e.2)
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Whether the vertices of `set` induce a connected subgraph (empty sets are not connected).
pub fn connected_within(adj: &[u16], set: u16) -> bool {
    if set == 0 {
        return false;
    }
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & set;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == set
}

fn component_count(adj: &[u16], set: u16) -> usize {
    let mut rest = set;
    let mut count = 0;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] & set;
            }
            frontier = next & !seen;
            seen |= next;
        }
        rest &= !seen;
        count += 1;
    }
    count
}

fn bits(set: u16) -> Vec<usize> {
    (0..16).filter(|&i| set >> i & 1 == 1).collect()
}

/// Maximal vertex sets inducing a connected subgraph with no separating
/// vertex, found by trying every subset.
pub fn oracle_chunks(c: &Case) -> BTreeSet<Vec<usize>> {
    let good: Vec<u16> = (1..=c.all())
        .filter(|&s| {
            connected_within(&c.adj, s)
                && bits(s).iter().all(|&v| s.count_ones() <= 2 || connected_within(&c.adj, s & !(1 << v)))
        })
        .collect();
    good.iter().filter(|&&s| !good.iter().any(|&t| t != s && t & s == s)).map(|&s| bits(s)).collect()
}

/// Vertices whose deletion increases the number of components.
pub fn oracle_separating(c: &Case) -> Vec<usize> {
    let all = c.all();
    let base = component_count(&c.adj, all);
    (0..c.n).filter(|&v| component_count(&c.adj, all & !(1 << v)) > base).collect()
}

/// Components of the subgraph keeping only odd-labelled edges.
pub fn oracle_odd_components(c: &Case) -> usize {
    let mut odd = vec![0u16; c.n];
    for &(u, v, l) in &c.edges {
        if l % 2 == 1 {
            odd[u] |= 1 << v;
            odd[v] |= 1 << u;
        }
    }
    component_count(&odd, c.all())
}

/// Every connected graph on `n <= 4` vertices with every labelling from
/// [`LABELS`].
pub fn exhaustive_labelled(n: usize) -> Vec<Case> {
    let ps = pairs(n);
    let choices = LABELS.len() + 1;
    let total = choices.pow(ps.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut edges = Vec::new();
        for &(u, v) in &ps {
            let k = code % choices;
            code /= choices;
            if k > 0 {
                edges.push((u, v, LABELS[k - 1]));
            }
        }
        let c = Case::new(n, edges);
        if c.is_connected() {
            out.push(c);
        }
    }
    out
}

/// Every connected graph on `n` vertices (as an edge subset), each with
/// labels drawn from `rng`.
pub fn exhaustive_shapes(n: usize, rng: &mut ChaCha8Rng) -> Vec<Case> {
    let ps = pairs(n);
    let mut out = Vec::new();
    for mask in 0u32..1 << ps.len() {
        let edges: Vec<(usize, usize, u32)> = ps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| (u, v, *LABELS.choose(rng).unwrap()))
            .collect();
        let c = Case::new(n, edges);
        if c.is_connected() {
            out.push(c);
        }
    }
    out
}

/// A random connected graph on `n` vertices: a random spanning tree plus
/// each remaining pair with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Case {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = BTreeSet::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let (u, v) = (order[i].min(parent), order[i].max(parent));
        present.insert((u, v));
    }
    for (u, v) in pairs(n) {
        if rng.gen_bool(p) {
            present.insert((u, v));
        }
    }
    let edges = present.into_iter().map(|(u, v)| (u, v, *LABELS.choose(rng).unwrap())).collect();
    Case::new(n, edges)
}

/// The acceptance corpus: every labelled graph on at most four vertices,
/// every graph shape on five and six vertices with random labels, and
/// `random` random graphs on seven or eight vertices.
pub fn corpus(random: usize, rng: &mut ChaCha8Rng) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.extend(exhaustive_labelled(n));
    }
    for n in 5..=6 {
        out.extend(exhaustive_shapes(n, rng));
    }
    for _ in 0..random {
        let n = rng.gen_range(7..=8);
        let p = rng.gen_range(0.05..0.5);
        out.push(random_connected(n, p, rng));
    }
    out
}

/// `g` with vertex names replaced by a random injective renaming.
pub fn relabel(g: &LabelledGraph, rng: &mut ChaCha8Rng) -> LabelledGraph {
    let mut fresh: Vec<usize> = (0..g.vertex_count()).collect();
    fresh.shuffle(rng);
    let names: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
    g.renamed(|s| {
        let i = names.iter().position(|n| n == s).unwrap();
        format!("u{}", fresh[i])
    })
    .unwrap()
}

fn det(m: &[Vec<i64>]) -> BigInt {
    // Bareiss fraction-free elimination.
    let k = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for i in 0..k {
        if a[i][i].is_zero() {
            match (i + 1..k).find(|&r| !a[r][i].is_zero()) {
                Some(r) => {
                    a.swap(i, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                a[r][c] = (&a[r][c] * &a[i][i] - &a[r][i] * &a[i][c]) / &prev;
            }
        }
        prev = a[i][i].clone();
    }
    sign * &a[k - 1][k - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

/// Invariant factors `d_k / d_{k-1}`, where `d_k` is the gcd of all `k x k`
/// minors; zero once the rank is exceeded. Returns `min(rows, cols)` values.
pub fn oracle_invariant_factors(m: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut previous = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g.is_zero() {
            out.resize(rows.min(cols), BigInt::zero());
            break;
        }
        out.push((&g / &previous).abs());
        previous = g;
    }
    out
}

/// Image of a word over `a`, `b` in the Coxeter group of order `2n`, as
/// `(rotation, reflected)`: `a` and `b` act as reflections whose product
/// is the rotation by one step.
pub fn coxeter_image(n: u32, letters: &[(char, i64)]) -> (i64, bool) {
    let n = i64::from(n);
    let (mut rot, mut refl) = (0i64, false);
    for &(s, e) in letters {
        for _ in 0..e.unsigned_abs() {
            // Right-multiply by s; s is an involution so the sign of e is irrelevant.
            let s_rot = if s == 'a' { 0 } else { 1 };
            rot = if refl { rot - s_rot } else { rot + s_rot };
            rot = rot.rem_euclid(n);
            refl = !refl;
        }
    }
    (rot, refl)
}
