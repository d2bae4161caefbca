//! Directed graph on letters: `a -> b` when b occurs in σ(a). Strongly
//! connected components, per-component periods, and the primitivity test
//! live here; the dichotomy classifier builds on these primitives.

use crate::alphabet::Letter;
use crate::substitution::Substitution;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionGraph {
    n: usize,
    /// Sorted, deduplicated successor lists; ordering is part of the
    /// deterministic contract.
    adj: Vec<Vec<Letter>>,
}

impl SubstitutionGraph {
    pub fn of(sub: &Substitution) -> Self {
        let n = sub.size();
        let mut adj: Vec<Vec<Letter>> = Vec::with_capacity(n);
        for a in 0..n {
            let mut succ: Vec<Letter> = sub.image(a as Letter).letters().to_vec();
            succ.sort_unstable();
            succ.dedup();
            adj.push(succ);
        }
        SubstitutionGraph { n, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn successors(&self, a: Letter) -> &[Letter] {
        &self.adj[a as usize]
    }
}

/// SCC partition in canonical order: components sorted by smallest member,
/// letters sorted within each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccPartition {
    pub components: Vec<Vec<Letter>>,
    pub comp_of: Vec<usize>,
}

pub fn scc(graph: &SubstitutionGraph) -> SccPartition {
    let n = graph.n;
    let mut index: Vec<Option<u32>> = vec![None; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut counter = 0u32;
    let mut raw_components: Vec<Vec<Letter>> = Vec::new();

    // Iterative Tarjan; frames carry the next edge index to resume at.
    for root in 0..n {
        if index[root].is_some() {
            continue;
        }
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = Some(counter);
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut ei)) = frames.last_mut() {
            if *ei < graph.adj[v].len() {
                let w = graph.adj[v][*ei] as usize;
                *ei += 1;
                match index[w] {
                    None => {
                        index[w] = Some(counter);
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        frames.push((w, 0));
                    }
                    Some(iw) => {
                        if on_stack[w] {
                            low[v] = low[v].min(iw);
                        }
                    }
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v].expect("visited") {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("stack holds the component");
                        on_stack[w] = false;
                        comp.push(w as Letter);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    raw_components.push(comp);
                }
            }
        }
    }

    raw_components.sort_by_key(|c| c[0]);
    let mut comp_of = vec![0usize; n];
    for (i, comp) in raw_components.iter().enumerate() {
        for &a in comp {
            comp_of[a as usize] = i;
        }
    }
    SccPartition {
        components: raw_components,
        comp_of,
    }
}

/// A component is essential when no edge leaves it.
pub fn essential_flags(graph: &SubstitutionGraph, part: &SccPartition) -> Vec<bool> {
    let mut essential = vec![true; part.components.len()];
    for v in 0..graph.n {
        for &w in &graph.adj[v] {
            if part.comp_of[v] != part.comp_of[w as usize] {
                essential[part.comp_of[v]] = false;
            }
        }
    }
    essential
}

/// Per-component periods: gcd of cycle lengths through the component,
/// computed as gcd of `level(u) + 1 - level(v)` over internal edges of a BFS
/// layering. Acyclic singletons get period 0.
pub fn periods(graph: &SubstitutionGraph, part: &SccPartition) -> Vec<u64> {
    part.components
        .iter()
        .enumerate()
        .map(|(ci, comp)| component_period(graph, part, ci, comp))
        .collect()
}

fn component_period(
    graph: &SubstitutionGraph,
    part: &SccPartition,
    ci: usize,
    comp: &[Letter],
) -> u64 {
    let root = comp[0] as usize;
    let mut level: Vec<Option<i64>> = vec![None; graph.n];
    level[root] = Some(0);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &graph.adj[v] {
            let w = w as usize;
            if part.comp_of[w] == ci && level[w].is_none() {
                level[w] = Some(level[v].expect("dequeued") + 1);
                queue.push_back(w);
            }
        }
    }
    let mut g: u64 = 0;
    for &v in comp {
        let v = v as usize;
        for &w in &graph.adj[v] {
            let w = w as usize;
            if part.comp_of[w] == ci {
                let diff = level[v].expect("in component") + 1 - level[w].expect("in component");
                g = gcd(g, diff.unsigned_abs());
            }
        }
    }
    g
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Graph characterization of primitivity: one strongly connected component
/// covering the alphabet, with cycle-length gcd 1.
pub fn is_primitive(sub: &Substitution) -> bool {
    let graph = SubstitutionGraph::of(sub);
    let part = scc(&graph);
    part.components.len() == 1 && periods(&graph, &part)[0] == 1
}
