//! Three-colored triangulated torus and its derived code structures.
//!
//! The lattice is a `3L × 3L` grid of vertices with periodic boundaries.
//! Vertex `(r, c)` is colored `(c − r) mod 3` (0 = R, 1 = G, 2 = B) and is
//! adjacent to `(r, c±1)`, `(r±1, c)`, `(r+1, c−1)`, `(r−1, c+1)`. Every
//! grid cell carries an "up" triangle `{(r,c), (r,c+1), (r+1,c)}` and a
//! "down" triangle `{(r,c+1), (r+1,c), (r+1,c+1)}`, giving `18L²` triangular
//! faces (the qubits), `9L²` vertices (the checks), and `27L²` edges.
//!
//! Each face touches one vertex and one edge of every color; an edge takes
//! the color missing from its endpoints. The six edges around a vertex,
//! enumerated in rotational order E, SE, S, W, NW, N, strictly alternate
//! between the two non-vertex colors, with one face wedged between each
//! pair of consecutive edges. That rotational structure is what the path
//! conversion machinery consumes.
//!
//! Canonical index orders: vertices row-major, faces cell-major with "up"
//! before "down", edges sorted by `(min endpoint, max endpoint)`. All
//! derived matrices are deterministic.

use std::collections::HashMap;

use crate::gf2::{BitMatrix, BitVector, Echelon};
use crate::Error;

/// Check/edge color. The total order R < G < B fixes tie-breaking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    R,
    G,
    B,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::R, Color::G, Color::B];

    pub fn index(self) -> usize {
        match self {
            Color::R => 0,
            Color::G => 1,
            Color::B => 2,
        }
    }

    pub fn from_index(i: usize) -> Color {
        Color::ALL[i % 3]
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Color::R => write!(f, "R"),
            Color::G => write!(f, "G"),
            Color::B => write!(f, "B"),
        }
    }
}

/// Offsets of the six neighbors in rotational order: E, SE, S, W, NW, N.
const DIRS: [(isize, isize); 6] = [(0, 1), (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1)];

/// One of the three cycle codes obtained by keeping only the edges of a
/// single color. Vertices are the lattice vertices *not* of that color
/// (each of degree 3), edges are the color's `9L²` lattice edges.
#[derive(Clone)]
pub struct CycleGraph {
    pub color: Color,
    /// Global vertex ids, ascending; row order of `h`.
    pub vertices: Vec<usize>,
    /// Global edge ids, ascending; column order of `h` and row order of `m`.
    pub edges: Vec<usize>,
    /// Vertex-edge incidence matrix of the graph.
    pub h: BitMatrix,
    /// Face-to-edge projection: `m · v` maps a face vector to this color's
    /// edge coordinates of its lifting.
    pub m: BitMatrix,
    /// Local adjacency: for each local vertex, its 3 incident local edges.
    pub vertex_edges: Vec<[usize; 3]>,
    /// Local endpoints of each local edge.
    pub edge_endpoints: Vec<[usize; 2]>,
    vertex_local: HashMap<usize, usize>,
    edge_local: HashMap<usize, usize>,
}

impl CycleGraph {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Local index of a global vertex id, if the vertex belongs to this graph.
    pub fn local_vertex(&self, global: usize) -> Option<usize> {
        self.vertex_local.get(&global).copied()
    }

    /// Local index of a global edge id, if the edge has this graph's color.
    pub fn local_edge(&self, global: usize) -> Option<usize> {
        self.edge_local.get(&global).copied()
    }

    /// Breadth-first shortest path between two local vertices, as local edge
    /// indices. Exploration follows ascending edge order, so the result is
    /// deterministic. Returns `None` only if the graph is disconnected.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if from == to {
            return Some(Vec::new());
        }
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.vertices.len()];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from);
        prev[from] = Some((from, usize::MAX));
        while let Some(v) = queue.pop_front() {
            for &e in &self.vertex_edges[v] {
                let [a, b] = self.edge_endpoints[e];
                let w = if a == v { b } else { a };
                if prev[w].is_none() {
                    prev[w] = Some((v, e));
                    if w == to {
                        let mut path = Vec::new();
                        let mut cur = to;
                        while cur != from {
                            let (p, e) = prev[cur].unwrap();
                            path.push(e);
                            cur = p;
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// The colored triangulation together with its parity-check matrix and the
/// three cycle-code projections. Immutable after construction.
pub struct TorusLattice {
    side: usize,
    num_vertices: usize,
    num_faces: usize,
    num_edges: usize,
    vertex_color: Vec<Color>,
    /// Face vertices indexed by color: `face_vertices[f][c]` is the face's
    /// vertex of color `c`.
    face_vertices: Vec<[usize; 3]>,
    /// Face edges indexed by color: `face_edges[f][c]` is the face's edge of
    /// color `c`.
    face_edges: Vec<[usize; 3]>,
    edges: Vec<(usize, usize)>,
    edge_color: Vec<Color>,
    edge_faces: Vec<[usize; 2]>,
    edge_index: HashMap<(usize, usize), usize>,
    /// Incident edges in rotational order E, SE, S, W, NW, N.
    vertex_edges_cyclic: Vec<[usize; 6]>,
    /// `vertex_faces_cyclic[v][p]` sits between edges `p` and `p+1 mod 6`.
    vertex_faces_cyclic: Vec<[usize; 6]>,
    h: BitMatrix,
    h_row_space: Echelon,
    cycles: [CycleGraph; 3],
    l: usize,
}

impl TorusLattice {
    /// Builds the lattice for linear size `L ≥ 1`.
    pub fn build(l: usize) -> Result<TorusLattice, Error> {
        if l == 0 {
            return Err(Error::InvalidParameter("lattice size L must be >= 1".into()));
        }
        let side = 3 * l;
        let num_vertices = side * side;
        let num_faces = 2 * num_vertices;
        let vid = |r: usize, c: usize| r * side + c;
        let step = |r: usize, c: usize, d: (isize, isize)| {
            let rr = (r as isize + d.0).rem_euclid(side as isize) as usize;
            let cc = (c as isize + d.1).rem_euclid(side as isize) as usize;
            (rr, cc)
        };
        let color_of = |r: usize, c: usize| {
            Color::from_index((c as isize - r as isize).rem_euclid(3) as usize)
        };

        let mut vertex_color = vec![Color::R; num_vertices];
        for r in 0..side {
            for c in 0..side {
                vertex_color[vid(r, c)] = color_of(r, c);
            }
        }

        // Edges: one per vertex in each of the E, SE, S directions.
        let mut pairs = Vec::with_capacity(3 * num_vertices);
        for r in 0..side {
            for c in 0..side {
                let v = vid(r, c);
                for d in [DIRS[0], DIRS[1], DIRS[2]] {
                    let (rr, cc) = step(r, c, d);
                    let w = vid(rr, cc);
                    pairs.push((v.min(w), v.max(w)));
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), 3 * num_vertices, "torus edge generation broke");
        let num_edges = pairs.len();
        let mut edge_index = HashMap::with_capacity(num_edges);
        let mut edge_color = Vec::with_capacity(num_edges);
        for (id, &(a, b)) in pairs.iter().enumerate() {
            edge_index.insert((a, b), id);
            // The edge takes the color missing from its two endpoints.
            let missing = 3 - vertex_color[a].index() - vertex_color[b].index();
            edge_color.push(Color::from_index(missing));
        }

        // Faces: up before down within each cell, cells row-major.
        let mut face_vertices = Vec::with_capacity(num_faces);
        let mut face_edges = Vec::with_capacity(num_faces);
        let mut edge_faces_acc: Vec<Vec<usize>> = vec![Vec::new(); num_edges];
        for r in 0..side {
            for c in 0..side {
                let corners_up = [vid(r, c), vid(r, step(r, c, DIRS[0]).1), vid(step(r, c, DIRS[1]).0, c)];
                let (rd, cd) = step(r, c, DIRS[1]);
                let corners_down = [
                    vid(r, step(r, c, DIRS[0]).1),
                    vid(rd, c),
                    vid(rd, step(rd, cd, DIRS[0]).1),
                ];
                for corners in [corners_up, corners_down] {
                    let f = face_vertices.len();
                    let mut by_color = [usize::MAX; 3];
                    for &v in &corners {
                        by_color[vertex_color[v].index()] = v;
                    }
                    assert!(by_color.iter().all(|&v| v != usize::MAX), "face misses a color");
                    let mut edges_by_color = [usize::MAX; 3];
                    for i in 0..3 {
                        for j in (i + 1)..3 {
                            let (a, b) = (corners[i].min(corners[j]), corners[i].max(corners[j]));
                            let e = *edge_index.get(&(a, b)).expect("face edge missing");
                            edges_by_color[edge_color[e].index()] = e;
                            edge_faces_acc[e].push(f);
                        }
                    }
                    face_vertices.push(by_color);
                    face_edges.push(edges_by_color);
                }
            }
        }
        let edge_faces: Vec<[usize; 2]> = edge_faces_acc
            .into_iter()
            .map(|mut fs| {
                fs.sort_unstable();
                assert_eq!(fs.len(), 2, "every edge borders exactly two faces");
                [fs[0], fs[1]]
            })
            .collect();

        // Rotational edge and face order around each vertex. The face at
        // position p is wedged between the edges at positions p and p+1.
        let mut vertex_edges_cyclic = vec![[0usize; 6]; num_vertices];
        let mut vertex_faces_cyclic = vec![[0usize; 6]; num_vertices];
        let cell = |r: usize, c: usize| r * side + c;
        let up_id = |r: usize, c: usize| 2 * cell(r, c);
        let down_id = |r: usize, c: usize| 2 * cell(r, c) + 1;
        for r in 0..side {
            for c in 0..side {
                let v = vid(r, c);
                for (p, &d) in DIRS.iter().enumerate() {
                    let (rr, cc) = step(r, c, d);
                    let w = vid(rr, cc);
                    vertex_edges_cyclic[v][p] = edge_index[&(v.min(w), v.max(w))];
                }
                let (rm, _) = step(r, c, (-1, 0));
                let (_, cm) = step(r, c, (0, -1));
                vertex_faces_cyclic[v] = [
                    up_id(r, c),
                    down_id(r, cm),
                    up_id(r, cm),
                    down_id(rm, cm),
                    up_id(rm, c),
                    down_id(rm, c),
                ];
            }
        }

        // Parity-check matrix: H[v][f] = 1 iff face f touches vertex v.
        let mut h = BitMatrix::zeros(num_vertices, num_faces);
        for (f, fv) in face_vertices.iter().enumerate() {
            for &v in fv {
                h.set(v, f, true);
            }
        }
        let h_row_space = Echelon::new(&h);

        let cycles = Color::ALL.map(|color| {
            let vertices: Vec<usize> =
                (0..num_vertices).filter(|&v| vertex_color[v] != color).collect();
            let edges: Vec<usize> =
                (0..num_edges).filter(|&e| edge_color[e] == color).collect();
            let vertex_local: HashMap<usize, usize> =
                vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let edge_local: HashMap<usize, usize> =
                edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            let mut hc = BitMatrix::zeros(vertices.len(), edges.len());
            let mut vertex_edges_local: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
            let mut edge_endpoints = Vec::with_capacity(edges.len());
            for (le, &e) in edges.iter().enumerate() {
                let (a, b) = pairs[e];
                let (la, lb) = (vertex_local[&a], vertex_local[&b]);
                hc.set(la, le, true);
                hc.set(lb, le, true);
                vertex_edges_local[la].push(le);
                vertex_edges_local[lb].push(le);
                edge_endpoints.push([la, lb]);
            }
            let vertex_edges: Vec<[usize; 3]> = vertex_edges_local
                .into_iter()
                .map(|es| {
                    assert_eq!(es.len(), 3, "cycle-graph vertex degree must be 3");
                    [es[0], es[1], es[2]]
                })
                .collect();
            let mut m = BitMatrix::zeros(edges.len(), num_faces);
            for (f, fe) in face_edges.iter().enumerate() {
                let e = fe[color.index()];
                m.set(edge_local[&e], f, true);
            }
            CycleGraph {
                color,
                vertices,
                edges,
                h: hc,
                m,
                vertex_edges,
                edge_endpoints,
                vertex_local,
                edge_local,
            }
        });

        Ok(TorusLattice {
            side,
            num_vertices,
            num_faces,
            num_edges,
            vertex_color,
            face_vertices,
            face_edges,
            edges: pairs,
            edge_color,
            edge_faces,
            edge_index,
            vertex_edges_cyclic,
            vertex_faces_cyclic,
            h,
            h_row_space,
            cycles,
            l,
        })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Grid side length `3L`.
    pub fn side(&self) -> usize {
        self.side
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_faces(&self) -> usize {
        self.num_faces
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    /// Vertex id at grid position `(r, c)` (coordinates wrap).
    pub fn vertex(&self, r: usize, c: usize) -> usize {
        (r % self.side) * self.side + (c % self.side)
    }

    /// Face id of the up triangle `{(r,c), (r,c+1), (r+1,c)}`.
    pub fn up_face(&self, r: usize, c: usize) -> usize {
        2 * self.vertex(r, c)
    }

    /// Face id of the down triangle `{(r,c+1), (r+1,c), (r+1,c+1)}`.
    pub fn down_face(&self, r: usize, c: usize) -> usize {
        2 * self.vertex(r, c) + 1
    }

    pub fn vertex_color(&self, v: usize) -> Color {
        self.vertex_color[v]
    }

    pub fn edge_color(&self, e: usize) -> Color {
        self.edge_color[e]
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The two faces bordering an edge, ascending.
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        self.edge_faces[e]
    }

    /// Edge between two vertices, if they are adjacent.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    /// Face vertices indexed by color: entry `c` is the vertex of color `c`.
    pub fn face_vertices(&self, f: usize) -> [usize; 3] {
        self.face_vertices[f]
    }

    /// Face edges indexed by color: entry `c` is the edge of color `c`.
    pub fn face_edges(&self, f: usize) -> [usize; 3] {
        self.face_edges[f]
    }

    /// The six incident edges in rotational order E, SE, S, W, NW, N.
    pub fn vertex_edges_cyclic(&self, v: usize) -> [usize; 6] {
        self.vertex_edges_cyclic[v]
    }

    /// The six surrounding faces; entry `p` lies between the edges at
    /// rotational positions `p` and `p+1 mod 6`.
    pub fn vertex_faces_cyclic(&self, v: usize) -> [usize; 6] {
        self.vertex_faces_cyclic[v]
    }

    /// Parity-check matrix of the code: rows are vertices, columns faces.
    pub fn h(&self) -> &BitMatrix {
        &self.h
    }

    /// Precomputed row space of `h`, for stabilizer-equivalence tests.
    pub fn h_row_space(&self) -> &Echelon {
        &self.h_row_space
    }

    /// Syndrome of a face vector: `H · v`.
    pub fn syndrome_of(&self, v: &BitVector) -> BitVector {
        self.h.mul_vec(v)
    }

    /// The cycle code induced by the edges of one color.
    pub fn cycle(&self, color: Color) -> &CycleGraph {
        &self.cycles[color.index()]
    }

    /// Projects a face vector onto one color's edge coordinates (`M_C · v`).
    pub fn lift_color(&self, v: &BitVector, color: Color) -> BitVector {
        self.cycle(color).m.mul_vec(v)
    }

    /// Concatenated lifting of a face vector: the R, G and B edge parts in
    /// color order, one bit per lattice edge.
    ///
    /// Panics if `v.len()` differs from the face count.
    pub fn lift(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.num_faces, "lift: face vector length mismatch");
        let mut out = BitVector::zeros(self.num_edges);
        let mut offset = 0;
        for color in Color::ALL {
            let part = self.lift_color(v, color);
            for i in part.iter_ones() {
                out.set(offset + i, true);
            }
            offset += part.len();
        }
        out
    }

    /// Restriction of a syndrome to the vertices of one cycle graph (drops
    /// the bits on vertices of that color).
    pub fn restrict_syndrome(&self, s: &BitVector, color: Color) -> BitVector {
        assert_eq!(s.len(), self.num_vertices, "restrict_syndrome: length mismatch");
        let cg = self.cycle(color);
        let mut out = BitVector::zeros(cg.num_vertices());
        for (i, &v) in cg.vertices.iter().enumerate() {
            if s.get(v) {
                out.set(i, true);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_face_vector(lat: &TorusLattice, rng: &mut impl Rng) -> BitVector {
        let mut v = BitVector::zeros(lat.num_faces());
        for i in 0..v.len() {
            v.set(i, rng.gen());
        }
        v
    }

    #[test]
    fn build_rejects_zero() {
        assert!(TorusLattice::build(0).is_err());
    }

    #[test]
    fn counts_match_for_small_sizes() {
        for l in 1..=3 {
            let lat = TorusLattice::build(l).unwrap();
            assert_eq!(lat.num_vertices(), 9 * l * l);
            assert_eq!(lat.num_faces(), 18 * l * l);
            assert_eq!(lat.num_edges(), 27 * l * l);
            for color in Color::ALL {
                let n_edges = (0..lat.num_edges())
                    .filter(|&e| lat.edge_color(e) == color)
                    .count();
                assert_eq!(n_edges, 9 * l * l, "color {color} edge split");
            }
        }
    }

    #[test]
    fn h_is_3_6_regular_with_full_color_faces() {
        let lat = TorusLattice::build(2).unwrap();
        let h = lat.h();
        for r in 0..h.rows() {
            assert_eq!(h.row(r).weight(), 6, "row weight");
        }
        let mut col_weights = vec![0usize; h.cols()];
        for r in 0..h.rows() {
            for c in h.row(r).iter_ones() {
                col_weights[c] += 1;
            }
        }
        assert!(col_weights.iter().all(|&w| w == 3), "column weight");
        for f in 0..lat.num_faces() {
            let fv = lat.face_vertices(f);
            let fe = lat.face_edges(f);
            for c in Color::ALL {
                assert_eq!(lat.vertex_color(fv[c.index()]), c);
                assert_eq!(lat.edge_color(fe[c.index()]), c);
            }
        }
    }

    #[test]
    fn edge_color_differs_from_both_endpoints() {
        let lat = TorusLattice::build(2).unwrap();
        for e in 0..lat.num_edges() {
            let (a, b) = lat.edge_endpoints(e);
            let ec = lat.edge_color(e);
            assert_ne!(lat.vertex_color(a), lat.vertex_color(b));
            assert_ne!(ec, lat.vertex_color(a));
            assert_ne!(ec, lat.vertex_color(b));
        }
    }

    #[test]
    fn edges_alternate_colors_around_each_vertex() {
        let lat = TorusLattice::build(2).unwrap();
        for v in 0..lat.num_vertices() {
            let ring = lat.vertex_edges_cyclic(v);
            let colors: Vec<Color> = ring.iter().map(|&e| lat.edge_color(e)).collect();
            for p in 0..6 {
                assert_ne!(colors[p], lat.vertex_color(v));
                assert_ne!(colors[p], colors[(p + 1) % 6], "strict alternation at {v}");
                assert_eq!(colors[p], colors[(p + 2) % 6]);
            }
        }
    }

    #[test]
    fn cyclic_faces_sit_between_their_edges() {
        let lat = TorusLattice::build(2).unwrap();
        for v in 0..lat.num_vertices() {
            let ring_e = lat.vertex_edges_cyclic(v);
            let ring_f = lat.vertex_faces_cyclic(v);
            for p in 0..6 {
                let f = ring_f[p];
                let fe = lat.face_edges(f);
                assert!(fe.contains(&ring_e[p]), "face {f} misses edge at {p}");
                assert!(fe.contains(&ring_e[(p + 1) % 6]));
                assert!(lat.face_vertices(f).contains(&v));
            }
        }
    }

    /// Face separation around a vertex: same-color edge pairs are 2 apart on
    /// one side and 4 on the other; mixed pairs an odd distance apart.
    #[test]
    fn edge_pair_separation_parity() {
        let lat = TorusLattice::build(2).unwrap();
        for v in 0..lat.num_vertices() {
            let ring = lat.vertex_edges_cyclic(v);
            for i in 0..6 {
                for j in (i + 1)..6 {
                    let d = j - i;
                    let sides = (d, 6 - d);
                    if lat.edge_color(ring[i]) == lat.edge_color(ring[j]) {
                        assert!(sides == (2, 4) || sides == (4, 2), "same-color at {v}");
                    } else {
                        assert!(d % 2 == 1, "mixed-color separation must be odd");
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_graphs_are_cubic_and_connected() {
        for l in 1..=3 {
            let lat = TorusLattice::build(l).unwrap();
            for color in Color::ALL {
                let cg = lat.cycle(color);
                assert_eq!(cg.num_vertices(), 6 * l * l);
                assert_eq!(cg.num_edges(), 9 * l * l);
                // Every edge appears in exactly 2 rows of the incidence matrix.
                for le in 0..cg.num_edges() {
                    let hits = (0..cg.num_vertices()).filter(|&r| cg.h.get(r, le)).count();
                    assert_eq!(hits, 2);
                }
                // Breadth-first reachability covers the whole graph.
                let mut seen = vec![false; cg.num_vertices()];
                let mut queue = std::collections::VecDeque::from([0usize]);
                seen[0] = true;
                while let Some(v) = queue.pop_front() {
                    for &e in &cg.vertex_edges[v] {
                        let [a, b] = cg.edge_endpoints[e];
                        let w = if a == v { b } else { a };
                        if !seen[w] {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
                assert!(seen.iter().all(|&s| s), "G_{color} connected for L={l}");
            }
        }
    }

    #[test]
    fn rank_of_h_matches_span_enumeration_at_l1() {
        // Oracle: enumerate all 2^9 row combinations and count distinct sums.
        let lat = TorusLattice::build(1).unwrap();
        let h = lat.h();
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..(1 << h.rows()) {
            let mut acc = BitVector::zeros(h.cols());
            for r in 0..h.rows() {
                if (mask >> r) & 1 == 1 {
                    acc.xor_assign(&h.row(r));
                }
            }
            seen.insert(acc);
        }
        let oracle_rank = seen.len().trailing_zeros() as usize;
        assert_eq!(oracle_rank, 7);
        assert_eq!(h.rank(), oracle_rank);
        assert_eq!(lat.num_faces() - 2 * h.rank(), 4, "k = 4");
    }

    #[test]
    fn weight_one_vector_is_outside_rowspan_at_l1() {
        let lat = TorusLattice::build(1).unwrap();
        let v = BitVector::from_indices(lat.num_faces(), &[0]);
        assert!(!lat.h().in_rowspan(&v));
    }

    #[test]
    fn single_face_syndrome_weight_three() {
        let lat = TorusLattice::build(1).unwrap();
        for f in 0..lat.num_faces() {
            let v = BitVector::from_indices(lat.num_faces(), &[f]);
            let s = lat.syndrome_of(&v);
            assert_eq!(s.weight(), 3);
            assert_eq!(s.support(), {
                let mut vs = lat.face_vertices(f).to_vec();
                vs.sort_unstable();
                vs
            });
        }
    }

    #[test]
    fn lift_of_single_face_is_its_three_edges() {
        let lat = TorusLattice::build(2).unwrap();
        let f = lat.up_face(1, 1);
        let v = BitVector::from_indices(lat.num_faces(), &[f]);
        for color in Color::ALL {
            let part = lat.lift_color(&v, color);
            let cg = lat.cycle(color);
            assert_eq!(part.weight(), 1);
            let e = cg.edges[part.support()[0]];
            assert_eq!(e, lat.face_edges(f)[color.index()]);
        }
    }

    #[test]
    fn lift_cancels_shared_edge_of_adjacent_faces() {
        let lat = TorusLattice::build(2).unwrap();
        // Two faces sharing a blue edge: their blue parts cancel.
        let e = (0..lat.num_edges())
            .find(|&e| lat.edge_color(e) == Color::B)
            .unwrap();
        let [f1, f2] = lat.edge_faces(e);
        let v = BitVector::from_indices(lat.num_faces(), &[f1, f2]);
        assert!(lat.lift_color(&v, Color::B).is_zero());
        assert_eq!(lat.lift_color(&v, Color::R).weight(), 2);
        assert_eq!(lat.lift_color(&v, Color::G).weight(), 2);
    }

    #[test]
    fn lift_is_linear() {
        let lat = TorusLattice::build(1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v = random_face_vector(&lat, &mut rng);
            let w = random_face_vector(&lat, &mut rng);
            assert_eq!(lat.lift(&v.xor(&w)), lat.lift(&v).xor(&lat.lift(&w)));
        }
    }

    #[test]
    fn syndrome_equivalence_under_projection() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for l in [1usize, 2] {
            let lat = TorusLattice::build(l).unwrap();
            for _ in 0..200 {
                let v = random_face_vector(&lat, &mut rng);
                let s = lat.syndrome_of(&v);
                for color in Color::ALL {
                    let restricted = lat.restrict_syndrome(&s, color);
                    let projected = lat.cycle(color).h.mul_vec(&lat.lift_color(&v, color));
                    assert_eq!(restricted, projected);
                    assert_eq!(restricted.weight() % 2, 0, "cycle syndromes have even weight");
                }
            }
        }
    }

    #[test]
    fn restrict_zero_syndrome_is_zero() {
        let lat = TorusLattice::build(1).unwrap();
        let s = BitVector::zeros(lat.num_vertices());
        for color in Color::ALL {
            assert!(lat.restrict_syndrome(&s, color).is_zero());
        }
    }

    #[test]
    fn shortest_path_in_cycle_graph() {
        let lat = TorusLattice::build(2).unwrap();
        let cg = lat.cycle(Color::R);
        let [a, b] = cg.edge_endpoints[0];
        let p = cg.shortest_path(a, b).unwrap();
        assert_eq!(p, vec![0]);
        assert!(cg.shortest_path(a, a).unwrap().is_empty());
    }
}
