//! Pseudocodeword decomposition for cycle codes.
//!
//! The soft output of the SPA on a cycle code is peeled into weighted walks
//! between unsatisfied checks: from each unsatisfied check, follow the
//! incident edge with the largest remaining soft mass (edges never repeat
//! within a walk, vertices may) until another unsatisfied check is reached.
//! The cheapest walk by `(1 − min-edge-mass) · length` is subtracted from
//! the soft vector and kept if it joins two distinct checks; closed walks
//! are subtracted and discarded. A check whose incident edges carry no
//! remaining mass is dropped. Every extraction zeroes at least one edge,
//! so the loop terminates after at most one iteration per edge.

use crate::lattice::{Color, CycleGraph};
use crate::gf2::BitVector;
use crate::spa::Pseudocodeword;

/// Soft mass below this threshold counts as zero.
pub const EPS_OMEGA: f64 = 1e-9;

/// One extracted path between two unsatisfied checks of a cycle code.
/// Indices are lattice-global so paths from different colors compose.
#[derive(Clone, Debug, PartialEq)]
pub struct DecomposedPath {
    /// Edge ids in traversal order; consecutive edges share a vertex.
    pub edges: Vec<usize>,
    /// Minimum soft mass along the path at extraction time, in `(0, 1]`.
    pub weight: f64,
    /// The two distinct unsatisfied checks joined, in traversal order.
    pub endpoints: [usize; 2],
    /// Color of the cycle code the path came from.
    pub color: Color,
}

impl DecomposedPath {
    /// Endpoint pair sorted ascending.
    pub fn endpoint_set(&self) -> [usize; 2] {
        let [a, b] = self.endpoints;
        [a.min(b), a.max(b)]
    }
}

/// Full decomposition output, including diagnostics for safety checks.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub paths: Vec<DecomposedPath>,
    /// Number of main-loop iterations executed.
    pub iterations: usize,
    /// Remaining soft mass per local edge after all subtractions.
    pub residual: Vec<f64>,
}

/// Decomposes a cycle-code pseudocodeword into paths between unsatisfied
/// checks. `omega` is indexed by the graph's local edges, `syndrome` by its
/// local vertices (and must have even weight).
pub fn decompose(omega: &Pseudocodeword, syndrome: &BitVector, g: &CycleGraph) -> Vec<DecomposedPath> {
    decompose_detailed(omega, syndrome, g).paths
}

/// As [`decompose`], but also reports loop iterations and the residual.
pub fn decompose_detailed(
    omega: &Pseudocodeword,
    syndrome: &BitVector,
    g: &CycleGraph,
) -> Decomposition {
    assert_eq!(omega.len(), g.num_edges(), "omega must be indexed by edges");
    assert_eq!(
        syndrome.len(),
        g.num_vertices(),
        "syndrome must be indexed by vertices"
    );
    assert_eq!(syndrome.weight() % 2, 0, "cycle-code syndromes have even weight");

    let mut residual: Vec<f64> = omega.as_slice().to_vec();
    let original_support: Vec<usize> = syndrome.support();
    let mut unsatisfied: Vec<usize> = original_support.clone();
    let mut kept: Vec<(Vec<usize>, f64, usize, usize)> = Vec::new();
    let mut used = vec![false; g.num_edges()];
    let mut iterations = 0usize;

    while !unsatisfied.is_empty() {
        iterations += 1;
        // One greedy walk per remaining unsatisfied check, all against the
        // same residual.
        let in_j: std::collections::HashSet<usize> = unsatisfied.iter().copied().collect();
        let mut walks: Vec<(usize, Vec<usize>, usize, f64)> = Vec::new();
        let mut exhausted: Vec<usize> = Vec::new();
        for &j in &unsatisfied {
            match greedy_walk(g, &residual, &in_j, j, &mut used) {
                Some((path, end, wbar)) => walks.push((j, path, end, wbar)),
                None => exhausted.push(j),
            }
        }

        if let Some(best) = walks
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let ca = (1.0 - a.3) * a.1.len() as f64;
                let cb = (1.0 - b.3) * b.1.len() as f64;
                ca.partial_cmp(&cb).unwrap().then(a.0.cmp(&b.0))
            })
            .map(|(k, _)| k)
        {
            let (start, path, end, wbar) = walks.swap_remove(best);
            for &e in &path {
                residual[e] -= wbar;
            }
            if end != start {
                kept.push((path, wbar, start, end));
            }
        }

        unsatisfied.retain(|j| !exhausted.contains(j));
    }

    let mut paths: Vec<DecomposedPath> = kept
        .into_iter()
        .map(|(edges, weight, start, end)| DecomposedPath {
            edges: edges.iter().map(|&e| g.edges[e]).collect(),
            weight,
            endpoints: [g.vertices[start], g.vertices[end]],
            color: g.color,
        })
        .collect();

    // Any unsatisfied check that never made it into a kept path still needs
    // a candidate route for the selection stage: pair it with the nearest
    // other such check (or any other unsatisfied check) along a shortest
    // path, carrying negligible weight.
    let mut captured: std::collections::HashSet<usize> = paths
        .iter()
        .flat_map(|p| p.endpoints)
        .map(|v| g.local_vertex(v).unwrap())
        .collect();
    let stranded: Vec<usize> = original_support
        .iter()
        .copied()
        .filter(|j| !captured.contains(j))
        .collect();
    for &j in &stranded {
        if captured.contains(&j) {
            continue;
        }
        let still_stranded: Vec<usize> = stranded
            .iter()
            .copied()
            .filter(|&k| k != j && !captured.contains(&k))
            .collect();
        let targets: Vec<usize> = if still_stranded.is_empty() {
            original_support.iter().copied().filter(|&k| k != j).collect()
        } else {
            still_stranded
        };
        let Some((end, edges)) = nearest_of(g, j, &targets) else {
            continue;
        };
        captured.insert(j);
        captured.insert(end);
        paths.push(DecomposedPath {
            edges: edges.iter().map(|&e| g.edges[e]).collect(),
            weight: EPS_OMEGA,
            endpoints: [g.vertices[j], g.vertices[end]],
            color: g.color,
        });
    }

    Decomposition {
        paths,
        iterations,
        residual,
    }
}

/// Follows the largest-residual unused edge from `start` until any vertex
/// of `targets` is reached. Returns `None` when `start` has no usable edge
/// or the walk dead-ends first.
fn greedy_walk(
    g: &CycleGraph,
    residual: &[f64],
    targets: &std::collections::HashSet<usize>,
    start: usize,
    used: &mut [bool],
) -> Option<(Vec<usize>, usize, f64)> {
    let mut path = Vec::new();
    let mut cur = start;
    let mut wbar = f64::INFINITY;
    let result = loop {
        let mut best: Option<usize> = None;
        for &e in &g.vertex_edges[cur] {
            if used[e] || residual[e] <= EPS_OMEGA {
                continue;
            }
            // Larger mass wins; ties go to the lower edge index.
            best = match best {
                None => Some(e),
                Some(b) if residual[e] > residual[b] => Some(e),
                other => other,
            };
        }
        let Some(e) = best else {
            break None;
        };
        used[e] = true;
        path.push(e);
        wbar = wbar.min(residual[e]);
        let [a, b] = g.edge_endpoints[e];
        cur = if a == cur { b } else { a };
        if targets.contains(&cur) {
            break Some((path.clone(), cur, wbar));
        }
    };
    for &e in &path {
        used[e] = false;
    }
    result
}

/// Nearest target by breadth-first search, with the connecting path.
fn nearest_of(g: &CycleGraph, from: usize, targets: &[usize]) -> Option<(usize, Vec<usize>)> {
    let target_set: std::collections::HashSet<usize> = targets.iter().copied().collect();
    if target_set.is_empty() {
        return None;
    }
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.num_vertices()];
    prev[from] = Some((from, usize::MAX));
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &e in &g.vertex_edges[v] {
            let [a, b] = g.edge_endpoints[e];
            let w = if a == v { b } else { a };
            if prev[w].is_none() {
                prev[w] = Some((v, e));
                if target_set.contains(&w) {
                    let mut path = Vec::new();
                    let mut cur = w;
                    while cur != from {
                        let (p, pe) = prev[cur].unwrap();
                        path.push(pe);
                        cur = p;
                    }
                    path.reverse();
                    return Some((w, path));
                }
                queue.push_back(w);
            }
        }
    }
    None
}
