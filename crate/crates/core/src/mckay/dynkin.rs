use super::McKayGraph;

/// Affine (extended) Dynkin diagrams of simply-laced type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineDynkin {
    /// Cycle on `n + 1` vertices, `n ≥ 2`.
    A(usize),
    /// `n + 1` vertices, `n ≥ 4`.
    D(usize),
    E6,
    E7,
    E8,
}

impl std::fmt::Display for AffineDynkin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AffineDynkin::A(n) => write!(f, "affine A{n}"),
            AffineDynkin::D(n) => write!(f, "affine D{n}"),
            AffineDynkin::E6 => write!(f, "affine E6"),
            AffineDynkin::E7 => write!(f, "affine E7"),
            AffineDynkin::E8 => write!(f, "affine E8"),
        }
    }
}

/// Path of `len` new vertices from `start`, hanging off `root`.
fn arm(edges: &mut Vec<(usize, usize)>, root: usize, start: usize, len: usize) {
    let mut prev = root;
    for v in start..start + len {
        edges.push((prev, v));
        prev = v;
    }
}

impl AffineDynkin {
    pub fn vertex_count(self) -> usize {
        match self {
            AffineDynkin::A(n) | AffineDynkin::D(n) => n + 1,
            AffineDynkin::E6 => 7,
            AffineDynkin::E7 => 8,
            AffineDynkin::E8 => 9,
        }
    }

    /// Symmetric adjacency without loops.
    pub fn adjacency(self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut e = Vec::new();
        match self {
            AffineDynkin::A(_) => (0..n).for_each(|i| e.push((i, (i + 1) % n))),
            AffineDynkin::D(k) => {
                // spine 0..k-3, two leaves at each end
                let spine = k - 3;
                for i in 0..spine - 1 {
                    e.push((i, i + 1));
                }
                e.push((0, spine));
                e.push((0, spine + 1));
                e.push((spine - 1, spine + 2));
                e.push((spine - 1, spine + 3));
            }
            AffineDynkin::E6 => (0..3).for_each(|a| arm(&mut e, 0, 1 + 2 * a, 2)),
            AffineDynkin::E7 => {
                arm(&mut e, 0, 1, 3);
                arm(&mut e, 0, 4, 3);
                arm(&mut e, 0, 7, 1);
            }
            AffineDynkin::E8 => {
                arm(&mut e, 0, 1, 5);
                arm(&mut e, 0, 6, 2);
                arm(&mut e, 0, 8, 1);
            }
        }
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in e {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }
}

/// Undirected simple graph: `i ~ j` iff `i ≠ j` and an edge runs either way.
pub fn underlying_simple_graph(g: &McKayGraph) -> Vec<Vec<bool>> {
    let n = g.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && (g.has_edge(i, j) || g.has_edge(j, i)))
                .collect()
        })
        .collect()
}

/// Backtracking isomorphism test for small undirected graphs.
pub fn is_isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let deg = |g: &[Vec<bool>], v: usize| g[v].iter().filter(|&&x| x).count();
    let mut da: Vec<usize> = (0..n).map(|v| deg(a, v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| deg(b, v)).collect();
    let (ka, kb) = (da.clone(), db.clone());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }

    fn extend(
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        a: &[Vec<bool>],
        b: &[Vec<bool>],
        ka: &[usize],
        kb: &[usize],
    ) -> bool {
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || ka[v] != kb[w] {
                continue;
            }
            if (0..v).any(|u| a[u][v] != b[map[u]][w]) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(v + 1, map, used, a, b, ka, kb) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(0, &mut Vec::new(), &mut vec![false; n], a, b, &ka, &kb)
}

/// Affine diagram isomorphic to the graph's underlying simple graph, if any.
pub fn identify_affine_dynkin(g: &McKayGraph) -> Option<AffineDynkin> {
    let simple = underlying_simple_graph(g);
    let n = simple.len();
    let mut candidates = vec![AffineDynkin::E6, AffineDynkin::E7, AffineDynkin::E8];
    if n >= 3 {
        candidates.push(AffineDynkin::A(n - 1));
    }
    if n >= 5 {
        candidates.push(AffineDynkin::D(n - 1));
    }
    candidates
        .into_iter()
        .filter(|c| c.vertex_count() == n)
        .find(|c| is_isomorphic(&simple, &c.adjacency()))
}
