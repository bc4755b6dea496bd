//! Greedy packings of transitivity triples with pairwise disjoint arc sets.

/// A triple `(p, q, r)` of distinct elements covering the arcs `pq`, `qr`, `pr`.
pub type Triple = (usize, usize, usize);

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TriplePacking {
    /// Chosen triples with their weights, in selection order.
    pub triples: Vec<(Triple, f64)>,
}

impl TriplePacking {
    pub fn total_weight(&self) -> f64 {
        self.triples.iter().map(|t| t.1).sum()
    }
}

pub fn arcs_of((p, q, r): Triple) -> [(usize, usize); 3] {
    [(p, q), (q, r), (p, r)]
}

/// Scans all ordered triples by descending weight (ties lexicographic) and keeps
/// each one with strictly positive weight whose arcs are still unused.
pub fn greedy_triple_packing(n: usize, weight: impl Fn(Triple) -> f64) -> TriplePacking {
    let mut candidates = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if q == p {
                continue;
            }
            for r in 0..n {
                if r == p || r == q {
                    continue;
                }
                let w = weight((p, q, r));
                if w > 0.0 {
                    candidates.push(((p, q, r), w));
                }
            }
        }
    }
    candidates.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut used = vec![false; n * n];
    let mut packing = TriplePacking::default();
    for (t, w) in candidates {
        let arcs = arcs_of(t);
        if arcs.iter().all(|&(a, b)| !used[a * n + b]) {
            for (a, b) in arcs {
                used[a * n + b] = true;
            }
            packing.triples.push((t, w));
        }
    }
    packing
}
