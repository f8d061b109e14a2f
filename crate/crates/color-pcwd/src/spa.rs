//! Syndrome-based sum-product decoding over an arbitrary binary
//! parity-check matrix.
//!
//! Messages live in the log-likelihood-ratio domain and are clamped to
//! magnitude [`MAX_MESSAGE`]; the schedule is synchronous flooding with no
//! damping. Check node `i` flips the sign of its outgoing messages when
//! syndrome bit `i` is set. At the start of every iteration the current
//! hard decision is tested against the syndrome, so an all-zero syndrome
//! matches immediately with the prior marginals untouched.

use crate::gf2::{BitMatrix, BitVector};

/// Message magnitude cap; keeps `tanh`/`atanh` finite.
pub const MAX_MESSAGE: f64 = 30.0;

/// Soft output of the SPA: one posterior flip probability per variable
/// node, each in `[0, 1]`. This is the object the path decomposition
/// consumes; it is generally not a codeword.
#[derive(Clone, Debug, PartialEq)]
pub struct Pseudocodeword {
    values: Vec<f64>,
}

impl Pseudocodeword {
    /// Wraps raw probabilities. Panics if any entry leaves `[0, 1]`.
    pub fn new(values: Vec<f64>) -> Self {
        assert!(
            values.iter().all(|&x| (0.0..=1.0).contains(&x)),
            "pseudocodeword entries must lie in [0, 1]"
        );
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }
}

/// Result of one SPA run.
#[derive(Clone, Debug)]
pub struct SpaResult {
    /// Hard decision from the final beliefs.
    pub hard: BitVector,
    /// Posterior flip probabilities from the final beliefs.
    pub omega: Pseudocodeword,
    /// True iff `pcm · hard == syndrome`.
    pub matched: bool,
    /// Iteration at which the match was detected, or the iteration cap.
    pub iterations_used: usize,
}

struct TannerGraph {
    check_nbrs: Vec<Vec<usize>>,
    var_nbrs: Vec<Vec<usize>>,
    /// `var_pos_in_check[j][k]`: position of variable j in the neighbor
    /// list of check `var_nbrs[j][k]`.
    var_pos_in_check: Vec<Vec<usize>>,
    /// Mirror: position of check i in the neighbor list of its k-th variable.
    check_pos_in_var: Vec<Vec<usize>>,
}

impl TannerGraph {
    fn new(pcm: &BitMatrix) -> Self {
        let (m, n) = (pcm.rows(), pcm.cols());
        let mut check_nbrs: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut var_nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut var_pos_in_check: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut check_pos_in_var: Vec<Vec<usize>> = vec![Vec::new(); m];
        for i in 0..m {
            for j in pcm.row(i).iter_ones() {
                check_pos_in_var[i].push(var_nbrs[j].len());
                var_pos_in_check[j].push(check_nbrs[i].len());
                check_nbrs[i].push(j);
                var_nbrs[j].push(i);
            }
        }
        Self {
            check_nbrs,
            var_nbrs,
            var_pos_in_check,
            check_pos_in_var,
        }
    }
}

#[inline]
fn clamp_msg(x: f64) -> f64 {
    if x.is_nan() {
        // Should not happen with clamped inputs; recover instead of aborting.
        0.0
    } else {
        x.clamp(-MAX_MESSAGE, MAX_MESSAGE)
    }
}

/// Runs syndrome-based sum-product decoding.
///
/// `prior_flip_prob` is the marginal flip probability of each variable
/// (for a depolarizing channel of strength `p` the X-part flips with
/// probability `2p/3`). Stops at the first iteration whose hard decision
/// reproduces the syndrome.
///
/// Panics if `prior_flip_prob` is outside `(0, 0.5)` or the syndrome length
/// does not match the check count.
pub fn run_spa(
    pcm: &BitMatrix,
    syndrome: &BitVector,
    prior_flip_prob: f64,
    max_iters: usize,
) -> SpaResult {
    assert!(
        prior_flip_prob > 0.0 && prior_flip_prob < 0.5,
        "prior flip probability must lie in (0, 0.5)"
    );
    assert_eq!(
        syndrome.len(),
        pcm.rows(),
        "syndrome length must equal the check count"
    );
    let graph = TannerGraph::new(pcm);
    let n = pcm.cols();
    let m = pcm.rows();
    let prior = ((1.0 - prior_flip_prob) / prior_flip_prob).ln();

    // var-to-check messages, stored check-major to follow the check update.
    let mut v2c: Vec<Vec<f64>> = graph
        .check_nbrs
        .iter()
        .map(|nbrs| vec![prior; nbrs.len()])
        .collect();
    let mut c2v: Vec<Vec<f64>> = graph
        .check_nbrs
        .iter()
        .map(|nbrs| vec![0.0; nbrs.len()])
        .collect();
    let mut beliefs = vec![prior; n];

    let finish = |beliefs: &[f64], matched: bool, iters: usize| {
        let mut hard = BitVector::zeros(n);
        let mut omega = Vec::with_capacity(n);
        for (j, &b) in beliefs.iter().enumerate() {
            if b < 0.0 {
                hard.set(j, true);
            }
            omega.push(1.0 / (1.0 + b.exp()));
        }
        SpaResult {
            hard,
            omega: Pseudocodeword::new(omega),
            matched,
            iterations_used: iters,
        }
    };

    let mut iters = 0;
    for it in 1..=max_iters {
        iters = it;
        let mut hard = BitVector::zeros(n);
        for (j, &b) in beliefs.iter().enumerate() {
            if b < 0.0 {
                hard.set(j, true);
            }
        }
        if &pcm.mul_vec(&hard) == syndrome {
            return finish(&beliefs, true, it);
        }

        // Check update: product of tanh-halves over all other neighbors,
        // with a sign flip on unsatisfied checks.
        for i in 0..m {
            let deg = graph.check_nbrs[i].len();
            let sign = if syndrome.get(i) { -1.0 } else { 1.0 };
            let t: Vec<f64> = (0..deg).map(|k| (v2c[i][k] / 2.0).tanh()).collect();
            let mut fwd = vec![1.0; deg + 1];
            let mut bwd = vec![1.0; deg + 1];
            for k in 0..deg {
                fwd[k + 1] = fwd[k] * t[k];
                bwd[deg - 1 - k] = bwd[deg - k] * t[deg - 1 - k];
            }
            for k in 0..deg {
                let prod = fwd[k] * bwd[k + 1];
                c2v[i][k] = clamp_msg(sign * 2.0 * prod.atanh());
            }
        }

        // Variable update: totals become beliefs, extrinsic parts the
        // next round of messages.
        for j in 0..n {
            let mut total = prior;
            for (k, &i) in graph.var_nbrs[j].iter().enumerate() {
                total += c2v[i][graph.var_pos_in_check[j][k]];
            }
            beliefs[j] = total;
            for (k, &i) in graph.var_nbrs[j].iter().enumerate() {
                let pos = graph.var_pos_in_check[j][k];
                v2c[i][pos] = clamp_msg(total - c2v[i][pos]);
            }
        }
    }
    finish(&beliefs, false, iters)
}
