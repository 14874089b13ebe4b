//! Precedence graphs of transition matrices and their cyclicity.

use std::collections::VecDeque;

use super::BoolMatrix;

/// Directed graph on `0..n` with an edge `i -> j` iff entry `(i, j)` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecedenceGraph {
    adj: Vec<Vec<usize>>,
}

impl PrecedenceGraph {
    pub fn from_matrix(m: &BoolMatrix) -> Self {
        let adj = (0..m.dim()).map(|i| m.row(i).ones_iter().collect()).collect();
        Self { adj }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            adj[u].push(v);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Self { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Maximal strongly connected components, each sorted, listed in the
    /// order Tarjan's algorithm completes them (reverse topological).
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        tarjan(&self.adj)
    }

    /// Gcd of cycle lengths within each component.
    ///
    /// One entry per component; `None` for a component without any cycle
    /// (a single vertex lacking a self-loop).
    pub fn component_cyclicities(&self) -> Vec<(Vec<usize>, Option<u64>)> {
        let sccs = self.strongly_connected_components();
        let mut comp = vec![usize::MAX; self.adj.len()];
        for (c, members) in sccs.iter().enumerate() {
            for &v in members {
                comp[v] = c;
            }
        }
        let mut level = vec![usize::MAX; self.adj.len()];
        sccs.into_iter()
            .enumerate()
            .map(|(c, members)| {
                let root = members[0];
                level[root] = 0;
                let mut queue = VecDeque::from([root]);
                while let Some(u) = queue.pop_front() {
                    for &v in &self.adj[u] {
                        if comp[v] == c && level[v] == usize::MAX {
                            level[v] = level[u] + 1;
                            queue.push_back(v);
                        }
                    }
                }
                let mut g = 0u64;
                for &u in &members {
                    for &v in &self.adj[u] {
                        if comp[v] == c {
                            let d = (level[u] as i64 + 1 - level[v] as i64).unsigned_abs();
                            g = gcd(g, d);
                        }
                    }
                }
                (members, (g > 0).then_some(g))
            })
            .collect()
    }

    /// Lcm over components with a cycle of each component's cycle-length gcd;
    /// 1 when the graph is acyclic.
    pub fn cyclicity(&self) -> u64 {
        self.component_cyclicities()
            .into_iter()
            .filter_map(|(_, c)| c)
            .fold(1, saturating_lcm)
    }
}

/// Cyclicity of the precedence graph.
pub fn cyclicity(g: &PrecedenceGraph) -> u64 {
    g.cyclicity()
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Lcm that pins to `u64::MAX` instead of overflowing.
pub(crate) fn saturating_lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).saturating_mul(b)
}

fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut next = 0;
    // (vertex, position of the next successor to visit)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for start in 0..n {
        if index[start] != UNSEEN {
            continue;
        }
        call.push((start, 0));
        while let Some(&(v, pos)) = call.last() {
            if pos == 0 && index[v] == UNSEEN {
                index[v] = next;
                low[v] = next;
                next += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(pos) {
                call.last_mut().expect("frame").1 += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                members.sort_unstable();
                out.push(members);
            }
        }
    }
    out
}
