//! Deterministic graph family generators.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

/// A named family of graphs. Random families are infinite streams; the
/// exhaustive ones are finite and enumerate labeled graphs.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}` with center `0`.
    Star(usize),
    CompleteBipartite(usize, usize),
    /// All `2^(a*b)` graphs with every edge between `0..a` and `a..a+b`.
    AllBipartite(usize, usize),
    /// All `2^(n(n-1)/2)` labeled graphs on `0..n`.
    AllGraphs(usize),
    /// All `n^(n-2)` labeled trees on `0..n`, by Prüfer sequence.
    AllTrees(usize),
    RandomBipartite { a: usize, b: usize, p: f64, seed: u64 },
    RandomGraph { n: usize, p: f64, seed: u64 },
    RandomTree { n: usize, seed: u64 },
}

impl Family {
    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        let check_n = |n: usize| {
            if n > MAX_VERTICES {
                Err(Error::TooManyVertices(n))
            } else {
                Ok(())
            }
        };
        let check_p = |p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("probability {p} not in [0,1]")))
            }
        };
        match *self {
            Family::Path(n) | Family::RandomTree { n, .. } => check_n(n),
            Family::Cycle(n) if n < 3 => bad(format!("cycle needs at least 3 vertices, got {n}")),
            Family::Cycle(n) => check_n(n),
            Family::Star(n) => check_n(n + 1),
            Family::CompleteBipartite(a, b) => check_n(a + b),
            Family::AllBipartite(a, b) if a * b > 40 => {
                bad(format!("all_bipartite {a} {b} is too large to enumerate"))
            }
            Family::AllBipartite(a, b) => check_n(a + b),
            Family::AllGraphs(n) if n > 11 => bad(format!("all_graphs {n} is too large to enumerate")),
            Family::AllGraphs(_) => Ok(()),
            Family::AllTrees(n) if n > 12 => bad(format!("all_trees {n} is too large to enumerate")),
            Family::AllTrees(_) => Ok(()),
            Family::RandomBipartite { a, b, p, .. } => {
                check_n(a + b)?;
                check_p(p)
            }
            Family::RandomGraph { n, p, .. } => {
                check_n(n)?;
                check_p(p)
            }
        }
    }

    /// Number of graphs for finite families.
    pub fn size(&self) -> Option<u128> {
        match *self {
            Family::Path(_) | Family::Cycle(_) | Family::Star(_) | Family::CompleteBipartite(..) => {
                Some(1)
            }
            Family::AllBipartite(a, b) => Some(1u128 << (a * b)),
            Family::AllGraphs(n) => Some(1u128 << (n * n.saturating_sub(1) / 2)),
            Family::AllTrees(n) => Some(tree_count(n)),
            _ => None,
        }
    }

    pub fn graphs(&self) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
        self.validate()?;
        Ok(match *self {
            Family::Path(n) => Box::new(std::iter::once(path(n))),
            Family::Cycle(n) => Box::new(std::iter::once(cycle(n))),
            Family::Star(n) => Box::new(std::iter::once(star(n))),
            Family::CompleteBipartite(a, b) => {
                Box::new(std::iter::once(bipartite_from_mask(a, b, u64::MAX)))
            }
            Family::AllBipartite(a, b) => {
                let total = 1u64 << (a * b);
                Box::new((0..total).map(move |m| bipartite_from_mask(a, b, m)))
            }
            Family::AllGraphs(n) => {
                let total = 1u64 << (n * n.saturating_sub(1) / 2);
                Box::new((0..total).map(move |m| Graph::from_pair_mask(n, m).unwrap()))
            }
            Family::AllTrees(n) => Box::new(AllTrees::new(n)),
            Family::RandomBipartite { a, b, p, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Box::new(std::iter::from_fn(move || {
                    let mut mask = 0u64;
                    for bit in 0..a * b {
                        if rng.gen_bool(p) {
                            mask |= 1 << bit;
                        }
                    }
                    Some(bipartite_from_mask(a, b, mask))
                }))
            }
            Family::RandomGraph { n, p, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Box::new(std::iter::from_fn(move || Some(random_graph(n, p, &mut rng))))
            }
            Family::RandomTree { n, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Box::new(std::iter::from_fn(move || {
                    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
                    Some(tree_from_prufer(n, &seq))
                }))
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path {n}"),
            Family::Cycle(n) => write!(f, "cycle {n}"),
            Family::Star(n) => write!(f, "star {n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite {a} {b}"),
            Family::AllBipartite(a, b) => write!(f, "all_bipartite {a} {b}"),
            Family::AllGraphs(n) => write!(f, "all_graphs {n}"),
            Family::AllTrees(n) => write!(f, "all_trees {n}"),
            Family::RandomBipartite { a, b, p, seed } => {
                write!(f, "random_bipartite {a} {b} {p} {seed}")
            }
            Family::RandomGraph { n, p, seed } => write!(f, "random_graph {n} {p} {seed}"),
            Family::RandomTree { n, seed } => write!(f, "random_tree {n} {seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses the whitespace-separated form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let (name, args) = words
            .split_first()
            .ok_or_else(|| Error::InvalidParameter("empty family".into()))?;
        let int = |i: usize| -> Result<usize> {
            let w = args
                .get(i)
                .ok_or_else(|| Error::InvalidParameter(format!("{name}: missing argument {}", i + 1)))?;
            w.parse()
                .map_err(|_| Error::InvalidParameter(format!("{name}: bad size {w:?}")))
        };
        let float = |i: usize| -> Result<f64> {
            let w = args
                .get(i)
                .ok_or_else(|| Error::InvalidParameter(format!("{name}: missing argument {}", i + 1)))?;
            w.parse()
                .map_err(|_| Error::InvalidParameter(format!("{name}: bad probability {w:?}")))
        };
        let seed = |i: usize| -> Result<u64> { int(i).map(|x| x as u64) };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} expects {k} arguments, got {}",
                    args.len()
                )))
            }
        };
        let fam = match *name {
            "path" => arity(1).and_then(|_| Ok(Family::Path(int(0)?))),
            "cycle" => arity(1).and_then(|_| Ok(Family::Cycle(int(0)?))),
            "star" => arity(1).and_then(|_| Ok(Family::Star(int(0)?))),
            "complete_bipartite" => {
                arity(2).and_then(|_| Ok(Family::CompleteBipartite(int(0)?, int(1)?)))
            }
            "all_bipartite" => arity(2).and_then(|_| Ok(Family::AllBipartite(int(0)?, int(1)?))),
            "all_graphs" => arity(1).and_then(|_| Ok(Family::AllGraphs(int(0)?))),
            "all_trees" => arity(1).and_then(|_| Ok(Family::AllTrees(int(0)?))),
            "random_bipartite" => arity(4).and_then(|_| {
                Ok(Family::RandomBipartite {
                    a: int(0)?,
                    b: int(1)?,
                    p: float(2)?,
                    seed: seed(3)?,
                })
            }),
            "random_graph" => arity(3).and_then(|_| {
                Ok(Family::RandomGraph {
                    n: int(0)?,
                    p: float(1)?,
                    seed: seed(2)?,
                })
            }),
            "random_tree" => arity(2).and_then(|_| {
                Ok(Family::RandomTree {
                    n: int(0)?,
                    seed: seed(1)?,
                })
            }),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }?;
        fam.validate()?;
        Ok(fam)
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("valid cycle")
}

pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Graph::from_edges(n + 1, &edges).expect("valid star")
}

/// Bit `i * b + j` of `mask` selects the edge `{i, a + j}`.
pub fn bipartite_from_mask(a: usize, b: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(a + b).expect("size validated");
    for i in 0..a {
        for j in 0..b {
            if mask >> (i * b + j) & 1 == 1 {
                g.add_edge(i, a + j).unwrap();
            }
        }
    }
    g
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n).expect("size validated");
    for (u, v) in crate::graph::pairs(n) {
        if rng.gen_bool(p) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// One representative per isomorphism class of graphs on `0..n`, the
/// first one met in [`Family::AllGraphs`] order. Limited to `n <= 7`.
pub fn unlabeled_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::InvalidParameter(format!("unlabeled_graphs {n} is too large")));
    }
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for g in Family::AllGraphs(n).graphs()? {
        if seen.insert(g.canonical_form()?) {
            reps.push(g);
        }
    }
    Ok(reps)
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    let mut g = Graph::empty(n).expect("size validated");
    if n < 2 {
        return g;
    }
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, s).unwrap();
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

fn tree_count(n: usize) -> u128 {
    match n {
        0..=2 => 1,
        _ => (n as u128).pow(n as u32 - 2),
    }
}

struct AllTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl AllTrees {
    fn new(n: usize) -> Self {
        AllTrees {
            n,
            seq: vec![0; n.saturating_sub(2)],
            done: false,
        }
    }
}

impl Iterator for AllTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let g = tree_from_prufer(self.n, &self.seq);
        // odometer increment; wraps past the last sequence
        self.done = true;
        for digit in self.seq.iter_mut().rev() {
            *digit += 1;
            if *digit < self.n {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(g)
    }
}
