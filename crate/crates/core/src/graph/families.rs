//! Named and seeded random graph families.
//!
//! Random families draw from `ChaCha8Rng::seed_from_u64(seed)`; the stream is
//! platform independent, so a `(spec, seed)` pair always yields the same
//! graph. Family strings use a call syntax, e.g. `cycle(5)`, `gnm(10,20)`,
//! `ktree(20,3)` or `disjoint_union(octahedron,octahedron)`.

use super::Graph;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_n` minus a perfect matching; `n` even.
    CompleteMinusPm(usize),
    /// `K_{1,leaves}`.
    Star(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Grid(usize, usize),
    /// `C_n` times `K_2`.
    Prism(usize),
    Petersen,
    Heawood,
    Cube,
    Dodecahedron,
    Octahedron,
    /// `P_n` with every pair at path distance `< c` joined.
    PathPower(usize, usize),
    DisjointUnion(Vec<FamilySpec>),
    /// `copies` disjoint copies of one family.
    Copies(usize, Box<FamilySpec>),
    Gnm(usize, usize),
    /// Random `width`-tree on `n` vertices.
    KTree {
        n: usize,
        width: usize,
    },
    /// Random interval graph: left endpoints in `0..4n`, lengths in `0..=max_len`.
    Interval {
        n: usize,
        max_len: usize,
    },
    /// Random graph with `m` edges attempted and no degree above `cap`.
    BoundedDegree {
        n: usize,
        m: usize,
        cap: usize,
    },
    /// Uniform labelled tree (Prüfer sequence).
    RandomTree(usize),
    /// Random stacked planar triangulation.
    StackedTriangulation(usize),
}

/// Builds the graph named by `spec`; random families consume `seed`.
pub fn generate_family(spec: &FamilySpec, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build(spec, &mut rng)
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn edges_graph(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
    Graph::from_edges(n, &edges)
}

fn build(spec: &FamilySpec, rng: &mut ChaCha8Rng) -> Result<Graph> {
    use FamilySpec::*;
    match *spec {
        Empty(n) => Ok(Graph::empty(n)),
        Path(n) => edges_graph(n, (1..n).map(|i| (i - 1, i)).collect()),
        Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle needs n >= 3"));
            }
            edges_graph(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Complete(n) => edges_graph(n, pairs(n).collect()),
        CompleteMinusPm(n) => {
            if n % 2 != 0 {
                return Err(bad("complete_minus_pm needs even n"));
            }
            // matching pairs {2i, 2i+1}
            edges_graph(n, pairs(n).filter(|&(u, v)| !(u % 2 == 0 && v == u + 1)).collect())
        }
        Star(leaves) => edges_graph(leaves + 1, (1..=leaves).map(|v| (0, v)).collect()),
        CompleteBipartite(a, b) => edges_graph(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect()),
        Wheel(rim) => {
            if rim < 3 {
                return Err(bad("wheel needs a rim of at least 3 vertices"));
            }
            let mut e: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
            e.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
            edges_graph(rim + 1, e)
        }
        Grid(r, c) => {
            let id = |i: usize, j: usize| i * c + j;
            let mut e = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    if j + 1 < c {
                        e.push((id(i, j), id(i, j + 1)));
                    }
                    if i + 1 < r {
                        e.push((id(i, j), id(i + 1, j)));
                    }
                }
            }
            edges_graph(r * c, e)
        }
        Prism(n) => {
            if n < 3 {
                return Err(bad("prism needs n >= 3"));
            }
            let mut e = Vec::new();
            for i in 0..n {
                e.push((i, (i + 1) % n));
                e.push((n + i, n + (i + 1) % n));
                e.push((i, n + i));
            }
            edges_graph(2 * n, e)
        }
        Petersen => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            edges_graph(10, e)
        }
        Heawood => {
            // LCF [5,-5]^7
            let mut e: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
            for i in (0..14).step_by(2) {
                e.push((i, (i + 5) % 14));
            }
            edges_graph(14, e)
        }
        Cube => {
            let e = (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v).collect();
            edges_graph(8, e)
        }
        Dodecahedron => {
            // LCF [10,7,4,-4,-7,10,-4,7,-7,4]^2
            let lcf = [10i64, 7, 4, -4, -7, 10, -4, 7, -7, 4];
            let mut e: Vec<_> = (0..20).map(|i| (i, (i + 1) % 20)).collect();
            for i in 0..20usize {
                let j = (i as i64 + lcf[i % 10]).rem_euclid(20) as usize;
                e.push((i, j));
            }
            edges_graph(20, e)
        }
        Octahedron => edges_graph(6, pairs(6).filter(|&(u, v)| !(u % 2 == 0 && v == u + 1)).collect()),
        PathPower(n, c) => {
            if c == 0 {
                return Err(bad("path_power needs c >= 1"));
            }
            edges_graph(n, pairs(n).filter(|&(u, v)| v - u < c).collect())
        }
        DisjointUnion(ref parts) => {
            let mut g = Graph::empty(0);
            for p in parts {
                g = g.disjoint_union(&build(p, rng)?);
            }
            Ok(g)
        }
        Copies(t, ref inner) => {
            let mut g = Graph::empty(0);
            for _ in 0..t {
                g = g.disjoint_union(&build(inner, rng)?);
            }
            Ok(g)
        }
        Gnm(n, m) => {
            let mut all: Vec<_> = pairs(n).collect();
            if m > all.len() {
                return Err(bad(format!("gnm: m = {m} exceeds {} possible edges", all.len())));
            }
            all.shuffle(rng);
            all.truncate(m);
            edges_graph(n, all)
        }
        KTree { n, width } => ktree(n, width, rng),
        Interval { n, max_len } => {
            let span = 4 * n.max(1);
            let iv: Vec<(usize, usize)> = (0..n)
                .map(|_| {
                    let l = rng.gen_range(0..span);
                    (l, l + rng.gen_range(0..=max_len))
                })
                .collect();
            let e = pairs(n).filter(|&(u, v)| iv[u].0 <= iv[v].1 && iv[v].0 <= iv[u].1).collect();
            edges_graph(n, e)
        }
        BoundedDegree { n, m, cap } => {
            let mut all: Vec<_> = pairs(n).collect();
            all.shuffle(rng);
            let mut deg = vec![0usize; n];
            let mut e = Vec::new();
            for (u, v) in all {
                if e.len() == m {
                    break;
                }
                if deg[u] < cap && deg[v] < cap {
                    deg[u] += 1;
                    deg[v] += 1;
                    e.push((u, v));
                }
            }
            edges_graph(n, e)
        }
        RandomTree(n) => {
            if n <= 2 {
                return edges_graph(n, (1..n).map(|i| (0, i)).collect());
            }
            let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            edges_graph(n, prufer_decode(n, &code))
        }
        StackedTriangulation(n) => {
            if n < 3 {
                return Err(bad("stacked triangulation needs n >= 3"));
            }
            let mut e = vec![(0, 1), (1, 2), (0, 2)];
            let mut faces = vec![[0, 1, 2], [0, 1, 2]];
            for v in 3..n {
                let f = faces.swap_remove(rng.gen_range(0..faces.len()));
                e.extend(f.iter().map(|&u| (u, v)));
                faces.extend([[f[0], f[1], v], [f[0], f[2], v], [f[1], f[2], v]]);
            }
            edges_graph(n, e)
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn ktree(n: usize, width: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if width == 0 {
        return Err(bad("ktree needs width >= 1"));
    }
    let base = n.min(width + 1);
    let mut e: Vec<_> = pairs(base).collect();
    if n <= width + 1 {
        return edges_graph(n, e);
    }
    // all width-subsets of the seed clique
    let mut cliques: Vec<Vec<usize>> = (0..=width).map(|skip| (0..=width).filter(|&u| u != skip).collect()).collect();
    for v in width + 1..n {
        let c = cliques[rng.gen_range(0..cliques.len())].clone();
        e.extend(c.iter().map(|&u| (u, v)));
        for skip in 0..width {
            let mut nc: Vec<usize> = c.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &u)| u).collect();
            nc.push(v);
            cliques.push(nc);
        }
    }
    edges_graph(n, e)
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut e = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("prufer leaf");
        e.push((leaf, c));
        degree[leaf] = 0;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    e.push((rest[0], rest[1]));
    e
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Empty(n) => write!(f, "empty({n})"),
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Complete(n) => write!(f, "complete({n})"),
            CompleteMinusPm(n) => write!(f, "complete_minus_pm({n})"),
            Star(l) => write!(f, "star({l})"),
            CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            Wheel(r) => write!(f, "wheel({r})"),
            Grid(r, c) => write!(f, "grid({r},{c})"),
            Prism(n) => write!(f, "prism({n})"),
            Petersen => write!(f, "petersen"),
            Heawood => write!(f, "heawood"),
            Cube => write!(f, "cube"),
            Dodecahedron => write!(f, "dodecahedron"),
            Octahedron => write!(f, "octahedron"),
            PathPower(n, c) => write!(f, "path_power({n},{c})"),
            DisjointUnion(parts) => {
                write!(f, "disjoint_union(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            Copies(t, inner) => write!(f, "copies({t},{inner})"),
            Gnm(n, m) => write!(f, "gnm({n},{m})"),
            KTree { n, width } => write!(f, "ktree({n},{width})"),
            Interval { n, max_len } => write!(f, "interval({n},{max_len})"),
            BoundedDegree { n, m, cap } => write!(f, "bounded_degree({n},{m},{cap})"),
            RandomTree(n) => write!(f, "random_tree({n})"),
            StackedTriangulation(n) => write!(f, "stacked_triangulation({n})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(open) => {
                if !s.ends_with(')') {
                    return Err(bad(format!("unbalanced parentheses in `{s}`")));
                }
                (&s[..open], split_args(&s[open + 1..s.len() - 1])?)
            }
            None => (s, Vec::new()),
        };
        let ints = || -> Result<Vec<usize>> {
            args.iter().map(|a| a.parse::<usize>().map_err(|_| bad(format!("`{a}` is not a count")))).collect()
        };
        let arity = |want: usize| -> Result<Vec<usize>> {
            let v = ints()?;
            if v.len() != want {
                return Err(bad(format!("{name} takes {want} argument(s), got {}", v.len())));
            }
            Ok(v)
        };
        use FamilySpec::*;
        Ok(match name {
            "empty" => Empty(arity(1)?[0]),
            "path" => Path(arity(1)?[0]),
            "cycle" => Cycle(arity(1)?[0]),
            "complete" => Complete(arity(1)?[0]),
            "complete_minus_pm" => CompleteMinusPm(arity(1)?[0]),
            "star" => Star(arity(1)?[0]),
            "complete_bipartite" => {
                let v = arity(2)?;
                CompleteBipartite(v[0], v[1])
            }
            "wheel" => Wheel(arity(1)?[0]),
            "grid" => {
                let v = arity(2)?;
                Grid(v[0], v[1])
            }
            "prism" => Prism(arity(1)?[0]),
            "petersen" => {
                arity(0)?;
                Petersen
            }
            "heawood" => {
                arity(0)?;
                Heawood
            }
            "cube" => {
                arity(0)?;
                Cube
            }
            "dodecahedron" => {
                arity(0)?;
                Dodecahedron
            }
            "octahedron" => {
                arity(0)?;
                Octahedron
            }
            "path_power" => {
                let v = arity(2)?;
                PathPower(v[0], v[1])
            }
            "disjoint_union" => DisjointUnion(args.iter().map(|a| a.parse()).collect::<Result<_>>()?),
            "copies" => {
                if args.len() != 2 {
                    return Err(bad("copies takes (count, family)"));
                }
                let t = args[0].parse().map_err(|_| bad("copies: bad count"))?;
                Copies(t, Box::new(args[1].parse()?))
            }
            "gnm" => {
                let v = arity(2)?;
                Gnm(v[0], v[1])
            }
            "ktree" => {
                let v = arity(2)?;
                KTree { n: v[0], width: v[1] }
            }
            "interval" => {
                let v = arity(2)?;
                Interval { n: v[0], max_len: v[1] }
            }
            "bounded_degree" => {
                let v = arity(3)?;
                BoundedDegree { n: v[0], m: v[1], cap: v[2] }
            }
            "random_tree" => RandomTree(arity(1)?[0]),
            "stacked_triangulation" => StackedTriangulation(arity(1)?[0]),
            other => return Err(Error::UnknownName(format!("family `{other}`"))),
        })
    }
}

fn split_args(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(bad("unbalanced parentheses"));
        }
        if ch == ',' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str, seed: u64) -> Graph {
        generate_family(&s.parse().unwrap(), seed).unwrap()
    }

    #[test]
    fn named_sizes() {
        let h = gen("complete_minus_pm(6)", 0);
        assert_eq!((h.n(), h.m()), (6, 12));
        assert_eq!(gen("cycle(4)", 0).m(), 4);
        assert_eq!(gen("petersen", 0).is_regular(), Some(3));
        assert_eq!(gen("petersen", 0).girth(), Some(5));
        assert_eq!(gen("heawood", 0).is_regular(), Some(3));
        assert_eq!(gen("heawood", 0).girth(), Some(6));
        assert_eq!(gen("dodecahedron", 0).is_regular(), Some(3));
        assert_eq!(gen("dodecahedron", 0).girth(), Some(5));
        assert_eq!(gen("cube", 0).girth(), Some(4));
        assert_eq!(gen("octahedron", 0).is_regular(), Some(4));
        assert_eq!(gen("copies(3,cycle(5))", 0).components().len(), 3);
        assert!(gen("random_tree(9)", 3).is_forest());
        assert_eq!(gen("random_tree(9)", 3).m(), 8);
        let t = gen("stacked_triangulation(9)", 1);
        assert_eq!(t.m(), 3 * 9 - 6);
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["gnm(10,20)", "disjoint_union(cycle(4),octahedron)", "copies(2,ktree(7,2))", "petersen"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("cycle(4".parse::<FamilySpec>().is_err());
        assert!("nope(3)".parse::<FamilySpec>().is_err());
        assert!("cycle(3,4)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate_family(&FamilySpec::CompleteMinusPm(5), 0).is_err());
        assert!(generate_family(&FamilySpec::Gnm(4, 7), 0).is_err());
        assert!(generate_family(&FamilySpec::Cycle(2), 0).is_err());
    }

    #[test]
    fn seeded_families_are_deterministic() {
        for s in ["gnm(12,30)", "ktree(20,3)", "interval(15,6)", "bounded_degree(20,40,4)"] {
            assert_eq!(gen(s, 99), gen(s, 99));
        }
        assert_ne!(gen("gnm(12,30)", 1), gen("gnm(12,30)", 2));
    }

    #[test]
    fn bounded_degree_respects_cap() {
        for seed in 0..20 {
            assert!(gen("bounded_degree(25,80,5)", seed).max_degree() <= 5);
        }
    }
}
