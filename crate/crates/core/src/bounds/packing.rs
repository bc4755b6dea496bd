use super::induced::arc_max;
use crate::graph::{arcs_of, greedy_triple_packing, Triple, TriplePacking};
use crate::instance::Instance;
use crate::preorder::ClosedPartial;

/// Max of `c_pq x_pq + c_qr x_qr + c_pr x_pr` subject to `x_pq + x_qr - x_pr <= 1`
/// and the fixings of `x̂`; the other inequalities of the triple are dropped.
pub fn relaxed_triple_max(inst: &Instance, xh: &ClosedPartial, t: Triple) -> f64 {
    let arcs = arcs_of(t);
    let mut best = f64::NEG_INFINITY;
    for mask in 0u8..8 {
        let bit = |k: usize| mask >> k & 1 == 1;
        if bit(0) && bit(1) && !bit(2) {
            continue;
        }
        if arcs
            .iter()
            .enumerate()
            .any(|(k, &(p, q))| !xh.admits(p, q, bit(k)))
        {
            continue;
        }
        let v: f64 = arcs
            .iter()
            .enumerate()
            .filter(|&(k, _)| bit(k))
            .map(|(_, &(p, q))| inst.value(p, q))
            .sum();
        best = best.max(v);
    }
    best
}

/// What packing `t` saves relative to the per-arc bound.
fn triple_gain(inst: &Instance, xh: &ClosedPartial, t: Triple) -> f64 {
    let sum: f64 = arcs_of(t)
        .iter()
        .map(|&(p, q)| arc_max(inst, xh, p, q))
        .sum();
    sum - relaxed_triple_max(inst, xh, t)
}

fn packing_on(inst: &Instance, xh: &ClosedPartial, keep: &[bool]) -> TriplePacking {
    greedy_triple_packing(inst.n(), |t| {
        if keep[t.0] && keep[t.1] && keep[t.2] {
            triple_gain(inst, xh, t)
        } else {
            0.0
        }
    })
}

/// Upper bound on `φ_c` over `X_V[x̂]` restricted to pairs avoiding `excluded`,
/// from a greedy arc-disjoint triple packing.
pub fn triple_packing_upper_bound(inst: &Instance, xh: &ClosedPartial, excluded: &[usize]) -> f64 {
    let n = inst.n();
    let mut keep = vec![true; n];
    for &v in excluded {
        keep[v] = false;
    }
    let mut total = 0.0;
    for (p, q) in inst.pairs() {
        if keep[p] && keep[q] {
            total += arc_max(inst, xh, p, q);
        }
    }
    total - packing_on(inst, xh, &keep).total_weight()
}

/// One packing over all of `V`, queried for `V ∖ {i, j}` by dropping the
/// arcs and triples that touch `i` or `j`.
#[derive(Clone, Debug)]
pub struct PackingTable {
    n: usize,
    arc: Vec<f64>,
    total_arc: f64,
    incident: Vec<f64>,
    total_gain: f64,
    touching: Vec<f64>,
    touching_both: Vec<f64>,
}

impl PackingTable {
    pub fn new(inst: &Instance, xh: &ClosedPartial) -> Self {
        let n = inst.n();
        let mut arc = vec![0.0; n * n];
        let mut incident = vec![0.0; n];
        let mut total_arc = 0.0;
        for (p, q) in inst.pairs() {
            let v = arc_max(inst, xh, p, q);
            arc[p * n + q] = v;
            incident[p] += v;
            incident[q] += v;
            total_arc += v;
        }
        let packing = packing_on(inst, xh, &vec![true; n]);
        let mut touching = vec![0.0; n];
        let mut touching_both = vec![0.0; n * n];
        for &((a, b, c), w) in &packing.triples {
            for v in [a, b, c] {
                touching[v] += w;
            }
            for (u, v) in [(a, b), (b, c), (a, c)] {
                touching_both[u.min(v) * n + u.max(v)] += w;
            }
        }
        Self {
            n,
            arc,
            total_arc,
            incident,
            total_gain: packing.total_weight(),
            touching,
            touching_both,
        }
    }

    /// Upper bound on `φ_c` over `P_{V∖{i,j}}`.
    pub fn bound_without(&self, i: usize, j: usize) -> f64 {
        let n = self.n;
        let arcs = self.total_arc - self.incident[i] - self.incident[j]
            + self.arc[i * n + j]
            + self.arc[j * n + i];
        let gain = self.total_gain - self.touching[i] - self.touching[j]
            + self.touching_both[i.min(j) * n + i.max(j)];
        arcs - gain
    }
}
