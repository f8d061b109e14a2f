//! Shared test fixture: a hand-placed error pattern on the L=2 code that
//! defeats plain sum-product decoding and exercises every stage of the
//! two-stage pipeline.
//!
//! The error consists of the three faces surrounding a central face (their
//! combined syndrome is the central face's "opposite corners") plus one
//! detached face elsewhere. Fifteen labeled vertices cover the region; the
//! tables below list, per color, the paths a cycle-code decomposition finds
//! and the face vectors they convert to.

use crate::gf2::BitVector;
use crate::lattice::{Color, TorusLattice};

/// Labeled patch region on the L=2 lattice.
pub(crate) struct DemoPatch {
    pub lat: TorusLattice,
    /// `label[k]` is the vertex id of patch label `k` (1-based, 0 unused).
    pub label: [usize; 16],
    /// The four flipped faces.
    pub error: BitVector,
    pub syndrome: BitVector,
    /// Faces of the star component: {3,4,5}, {4,8,9}, {5,9,10}.
    pub star_faces: [usize; 3],
    /// The face the star surrounds: {4,5,9}.
    pub central_face: usize,
    /// The detached face {12,13,15}.
    pub detached_face: usize,
    /// Two-face vectors with syndromes {3,15}, {10,12}, {8,13}.
    pub pair_faces_3_15: [usize; 2],
    pub pair_faces_10_12: [usize; 2],
    pub pair_faces_8_13: [usize; 2],
}

impl DemoPatch {
    pub fn build() -> Self {
        let lat = TorusLattice::build(2).unwrap();
        let coords: [(usize, usize); 16] = [
            (usize::MAX, usize::MAX), // label 0 unused
            (0, 4),
            (0, 3),
            (1, 3),
            (2, 3),
            (2, 2),
            (3, 0),
            (3, 4),
            (3, 3),
            (3, 2),
            (3, 1),
            (4, 0),
            (4, 5),
            (4, 4),
            (4, 3),
            (5, 4),
        ];
        let mut label = [usize::MAX; 16];
        for k in 1..16 {
            label[k] = lat.vertex(coords[k].0, coords[k].1);
        }

        let star_faces = [lat.down_face(1, 2), lat.down_face(2, 2), lat.down_face(2, 1)];
        let central_face = lat.up_face(2, 2);
        let detached_face = lat.up_face(4, 4);
        let pair_faces_3_15 = [lat.up_face(0, 3), lat.down_face(5, 3)];
        let pair_faces_10_12 = [lat.up_face(3, 0), lat.down_face(3, 5)];
        let pair_faces_8_13 = [lat.up_face(3, 3), lat.down_face(3, 3)];

        let mut error = BitVector::zeros(lat.num_faces());
        for &f in star_faces.iter().chain([detached_face].iter()) {
            error.flip(f);
        }
        let syndrome = lat.syndrome_of(&error);

        let patch = Self {
            lat,
            label,
            error,
            syndrome,
            star_faces,
            central_face,
            detached_face,
            pair_faces_3_15,
            pair_faces_10_12,
            pair_faces_8_13,
        };
        patch.sanity_check();
        patch
    }

    /// Vertex id for a patch label.
    pub fn v(&self, k: usize) -> usize {
        self.label[k]
    }

    /// Edge id between two patch labels; the edge must exist.
    pub fn e(&self, a: usize, b: usize) -> usize {
        self.lat
            .edge_between(self.v(a), self.v(b))
            .unwrap_or_else(|| panic!("labels {a},{b} are not adjacent"))
    }

    /// The four red paths of the decomposition, as
    /// `(global edge ids, weight, endpoint labels resolved to vertex ids)`.
    pub fn red_paths(&self) -> Vec<(Vec<usize>, f64, [usize; 2])> {
        vec![
            (vec![self.e(12, 15)], 0.7405, [self.v(12), self.v(15)]),
            (vec![self.e(3, 1), self.e(1, 15)], 0.2196, [self.v(3), self.v(15)]),
            (vec![self.e(10, 11), self.e(11, 12)], 0.2196, [self.v(10), self.v(12)]),
            (
                vec![self.e(3, 4), self.e(4, 9), self.e(9, 10)],
                0.2002,
                [self.v(3), self.v(10)],
            ),
        ]
    }

    /// All twelve decomposition paths across the three colors, as
    /// `(color, edge ids in order, weight, endpoint vertex ids in order)`.
    pub fn all_paths(&self) -> Vec<(Color, Vec<usize>, f64, [usize; 2])> {
        let w = [0.7405, 0.2196, 0.2196, 0.2002];
        let spec: [(Color, Vec<Vec<usize>>); 3] = [
            (
                Color::R,
                vec![
                    vec![12, 15],
                    vec![3, 1, 15],
                    vec![10, 11, 12],
                    vec![3, 4, 9, 10],
                ],
            ),
            (
                Color::B,
                vec![
                    vec![12, 13],
                    vec![8, 7, 13],
                    vec![10, 6, 12],
                    vec![8, 4, 5, 10],
                ],
            ),
            (
                Color::G,
                vec![
                    vec![13, 15],
                    vec![3, 2, 15],
                    vec![8, 14, 13],
                    vec![3, 5, 9, 8],
                ],
            ),
        ];
        let mut out = Vec::new();
        for (color, walks) in spec {
            for (i, labels) in walks.iter().enumerate() {
                let edges: Vec<usize> = labels
                    .windows(2)
                    .map(|ab| self.e(ab[0], ab[1]))
                    .collect();
                let ends = [self.v(labels[0]), self.v(*labels.last().unwrap())];
                out.push((color, edges, w[i], ends));
            }
        }
        out
    }

    fn sanity_check(&self) {
        // The labeled region reproduces the expected color pattern.
        let reds = [2, 5, 6, 8, 13];
        let greens = [1, 4, 7, 10, 12];
        let blues = [3, 9, 11, 14, 15];
        for &k in &reds {
            assert_eq!(self.lat.vertex_color(self.v(k)), Color::R, "label {k}");
        }
        for &k in &greens {
            assert_eq!(self.lat.vertex_color(self.v(k)), Color::G, "label {k}");
        }
        for &k in &blues {
            assert_eq!(self.lat.vertex_color(self.v(k)), Color::B, "label {k}");
        }
        // Syndrome support is the six outer checks.
        let mut want: Vec<usize> = [3, 8, 10, 12, 13, 15].iter().map(|&k| self.v(k)).collect();
        want.sort_unstable();
        assert_eq!(self.syndrome.support(), want);
        // Path edges all exist with the right colors.
        for (color, edges, _, _) in self.all_paths() {
            for e in edges {
                assert_eq!(self.lat.edge_color(e), color);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patch_is_consistent() {
        let patch = DemoPatch::build();
        assert_eq!(patch.error.weight(), 4);
        assert_eq!(patch.syndrome.weight(), 6);
        // The star faces are exactly the edge-neighbors of the central face.
        for &f in &patch.star_faces {
            let shared: Vec<usize> = patch
                .lat
                .face_edges(f)
                .iter()
                .filter(|&&e| patch.lat.face_edges(patch.central_face).contains(&e))
                .copied()
                .collect();
            assert_eq!(shared.len(), 1, "star face shares one edge with the center");
        }
    }
}
