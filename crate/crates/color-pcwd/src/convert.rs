//! Conversion of decomposed cycle-code paths into face vectors
//! ("generalized paths") with known residual syndromes.
//!
//! A path whose two endpoints share a color has even length; its
//! consecutive edge pairs each map to the small fan of faces between the
//! two edges around their middle vertex, and the piece syndromes telescope
//! to the path endpoints. A path with differently colored endpoints has
//! odd length and only converts jointly with a partner path of the third
//! edge color sharing exactly one endpoint: the even prefixes convert as
//! above and the two dangling edges map to the fan between them around the
//! shared vertex, which contributes that vertex itself to the syndrome.

use crate::gf2::BitVector;
use crate::lattice::TorusLattice;
use crate::pcwd::DecomposedPath;
use crate::Error;

/// Where a candidate came from: one even path or a pair of odd paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Single(usize),
    Pair(usize, usize),
}

/// A face vector together with the checks its syndrome hits and its cost.
#[derive(Clone, Debug)]
pub struct GeneralizedPath {
    /// Indicator of the face set, length `18L²`.
    pub support: BitVector,
    /// Sorted check ids hit by the support's syndrome.
    pub unsatisfied: Vec<usize>,
    /// Hamming weight of the support.
    pub cost: usize,
    pub origin: Origin,
}

/// Faces strictly between edges `a` and `b` in the rotational order around
/// vertex `u`, on the side with fewer faces. When both sides hold three
/// faces they carry identical syndromes; the side following the
/// lower-indexed edge is returned, so the result does not depend on
/// argument order.
pub fn fan_between(lat: &TorusLattice, u: usize, a: usize, b: usize) -> Result<Vec<usize>, Error> {
    if a == b {
        return Err(Error::InvalidParameter("fan of an edge with itself".into()));
    }
    let ring = lat.vertex_edges_cyclic(u);
    let faces = lat.vertex_faces_cyclic(u);
    let (lo, hi) = (a.min(b), a.max(b));
    let pos = |e: usize| ring.iter().position(|&x| x == e);
    let (Some(i), Some(j)) = (pos(lo), pos(hi)) else {
        return Err(Error::InvalidParameter(format!(
            "edges {a},{b} are not both incident on vertex {u}"
        )));
    };
    let d = (j + 6 - i) % 6;
    let take = |start: usize, len: usize| (0..len).map(|k| faces[(start + k) % 6]).collect();
    Ok(match d.cmp(&(6 - d)) {
        std::cmp::Ordering::Less | std::cmp::Ordering::Equal => take(i, d),
        std::cmp::Ordering::Greater => take(j, 6 - d),
    })
}

/// Vertex sequence of a path, starting from `endpoints[0]`.
fn vertex_sequence(lat: &TorusLattice, p: &DecomposedPath) -> Vec<usize> {
    let mut seq = vec![p.endpoints[0]];
    let mut cur = p.endpoints[0];
    for &e in &p.edges {
        let (a, b) = lat.edge_endpoints(e);
        cur = if a == cur { b } else { a };
        seq.push(cur);
    }
    debug_assert_eq!(cur, p.endpoints[1]);
    seq
}

/// XORs the fan of each consecutive edge pair into `support`; `seq` must
/// hold one more vertex than `edges`.
fn fold_pieces(
    lat: &TorusLattice,
    edges: &[usize],
    seq: &[usize],
    support: &mut BitVector,
) -> Result<(), Error> {
    for t in 0..edges.len() / 2 {
        let middle = seq[2 * t + 1];
        for f in fan_between(lat, middle, edges[2 * t], edges[2 * t + 1])? {
            support.flip(f);
        }
    }
    Ok(())
}

/// Converts a path with same-colored endpoints (even length) into a face
/// vector whose syndrome hits exactly the two endpoints.
pub fn convert_same_color(lat: &TorusLattice, p: &DecomposedPath) -> Result<GeneralizedPath, Error> {
    let [a, b] = p.endpoints;
    if lat.vertex_color(a) != lat.vertex_color(b) {
        return Err(Error::InvalidParameter(
            "path endpoints must share a color".into(),
        ));
    }
    if p.edges.len() % 2 != 0 {
        return Err(Error::InvalidParameter(
            "same-colored endpoints require an even path".into(),
        ));
    }
    let seq = vertex_sequence(lat, p);
    let mut support = BitVector::zeros(lat.num_faces());
    fold_pieces(lat, &p.edges, &seq, &mut support)?;
    let mut unsatisfied = vec![a.min(b), a.max(b)];
    unsatisfied.dedup();
    Ok(GeneralizedPath {
        cost: support.weight(),
        support,
        unsatisfied,
        origin: Origin::Single(usize::MAX),
    })
}

/// Converts two odd paths sharing exactly one endpoint into a face vector
/// whose syndrome hits the three distinct endpoints.
pub fn convert_pair(
    lat: &TorusLattice,
    p_i: &DecomposedPath,
    p_j: &DecomposedPath,
) -> Result<GeneralizedPath, Error> {
    for p in [p_i, p_j] {
        let [a, b] = p.endpoints;
        if lat.vertex_color(a) == lat.vertex_color(b) {
            return Err(Error::InvalidParameter(
                "pair conversion needs differently colored endpoints".into(),
            ));
        }
        if p.edges.len() % 2 != 1 {
            return Err(Error::InvalidParameter(
                "differently colored endpoints require an odd path".into(),
            ));
        }
    }
    let set_i = p_i.endpoint_set();
    let set_j = p_j.endpoint_set();
    let shared: Vec<usize> = set_i.iter().filter(|v| set_j.contains(v)).copied().collect();
    if shared.len() != 1 {
        return Err(Error::InvalidParameter(
            "pair conversion needs exactly one shared endpoint".into(),
        ));
    }
    let u = shared[0];

    let mut support = BitVector::zeros(lat.num_faces());
    let mut danglers = Vec::with_capacity(2);
    let mut outer = Vec::with_capacity(2);
    for p in [p_i, p_j] {
        let mut seq = vertex_sequence(lat, p);
        let mut edges = p.edges.clone();
        if *seq.last().unwrap() != u {
            seq.reverse();
            edges.reverse();
        }
        outer.push(seq[0]);
        danglers.push(*edges.last().unwrap());
        fold_pieces(lat, &edges[..edges.len() - 1], &seq, &mut support)?;
    }
    if danglers[0] != danglers[1] {
        for f in fan_between(lat, u, danglers[0], danglers[1])? {
            support.flip(f);
        }
    }
    let mut unsatisfied = vec![outer[0], outer[1], u];
    unsatisfied.sort_unstable();
    Ok(GeneralizedPath {
        cost: support.weight(),
        support,
        unsatisfied,
        origin: Origin::Pair(usize::MAX, usize::MAX),
    })
}

/// Builds the candidate list from all decomposed paths of the three colors:
/// one candidate per even path, one per admissible odd pair (three distinct
/// endpoints of three distinct colors). Duplicate supports are dropped and
/// every candidate's syndrome is re-derived from the check matrix.
pub fn enumerate_candidates(
    lat: &TorusLattice,
    paths: &[DecomposedPath],
) -> Result<Vec<GeneralizedPath>, Error> {
    let mut out: Vec<GeneralizedPath> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |mut cand: GeneralizedPath, origin: Origin| -> Result<(), Error> {
        let syndrome = lat.syndrome_of(&cand.support);
        if syndrome.support() != cand.unsatisfied {
            return Err(Error::Inconsistent(format!(
                "candidate from {origin:?}: syndrome {:?} != expected {:?}",
                syndrome.support(),
                cand.unsatisfied
            )));
        }
        cand.origin = origin;
        if seen.insert(cand.support.clone()) {
            out.push(cand);
        }
        Ok(())
    };

    let mixed: Vec<usize> = (0..paths.len())
        .filter(|&i| {
            let [a, b] = paths[i].endpoints;
            lat.vertex_color(a) != lat.vertex_color(b)
        })
        .collect();

    for (i, p) in paths.iter().enumerate() {
        let [a, b] = p.endpoints;
        if lat.vertex_color(a) == lat.vertex_color(b) {
            push(convert_same_color(lat, p)?, Origin::Single(i))?;
        }
    }
    for (k, &i) in mixed.iter().enumerate() {
        for &j in &mixed[k + 1..] {
            let set_i = paths[i].endpoint_set();
            let set_j = paths[j].endpoint_set();
            let mut union: Vec<usize> = set_i.iter().chain(set_j.iter()).copied().collect();
            union.sort_unstable();
            union.dedup();
            if union.len() != 3 {
                continue;
            }
            let mut colors: Vec<_> = union.iter().map(|&v| lat.vertex_color(v)).collect();
            colors.sort_unstable();
            colors.dedup();
            if colors.len() != 3 {
                continue;
            }
            push(convert_pair(lat, &paths[i], &paths[j])?, Origin::Pair(i, j))?;
        }
    }
    Ok(out)
}
