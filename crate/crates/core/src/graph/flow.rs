//! Push-relabel maximum flow (highest label, gap heuristic, periodic global relabel).

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A directed network with nonnegative capacities; `f64::INFINITY` marks uncuttable arcs.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    n: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, f64)>,
}

impl FlowNetwork {
    pub fn new(n: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= n {
            return Err(Error::OutOfRange { index: source, n });
        }
        if sink >= n {
            return Err(Error::OutOfRange { index: sink, n });
        }
        if source == sink {
            return Err(Error::InvalidConfig("source and sink coincide".into()));
        }
        Ok(Self {
            n,
            source,
            sink,
            arcs: Vec::new(),
        })
    }

    /// Adds an arc; zero capacities and self-loops are accepted and ignored by the solver.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: f64) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::OutOfRange {
                index: u.max(v),
                n: self.n,
            });
        }
        if cap.is_nan() || cap < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "capacity {cap} on ({u}, {v})"
            )));
        }
        self.arcs.push((u, v, cap));
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[(usize, usize, f64)] {
        &self.arcs
    }

    /// Capacity of the arcs leaving `side`.
    pub fn cut_capacity(&self, side: &[bool]) -> f64 {
        self.arcs
            .iter()
            .filter(|&&(u, v, _)| side[u] && !side[v])
            .map(|&(_, _, c)| c)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinCut {
    /// Max-flow value; `f64::INFINITY` if every cut crosses an infinite arc.
    pub value: f64,
    /// Source side of a minimum cut: the nodes reachable from the source in the final residual graph.
    pub source_side: Vec<bool>,
}

pub fn min_st_cut(net: &FlowNetwork) -> MinCut {
    let finite: f64 = net
        .arcs
        .iter()
        .filter(|a| a.2.is_finite())
        .map(|a| a.2)
        .sum();
    // never part of a finite minimum cut
    let sentinel = finite + 1.0;
    let mut solver = PushRelabel::new(net, sentinel);
    solver.run();
    let value = solver.excess[net.sink];
    let source_side = solver.source_side();
    MinCut {
        value: if value >= sentinel {
            f64::INFINITY
        } else {
            value
        },
        source_side,
    }
}

struct PushRelabel {
    n: usize,
    s: usize,
    t: usize,
    start: Vec<usize>,
    to: Vec<usize>,
    rev: Vec<usize>,
    res: Vec<f64>,
    excess: Vec<f64>,
    label: Vec<usize>,
    current: Vec<usize>,
    buckets: Vec<Vec<usize>>,
    in_bucket: Vec<bool>,
    count: Vec<usize>,
    highest: usize,
    relabels: usize,
}

impl PushRelabel {
    fn new(net: &FlowNetwork, sentinel: f64) -> Self {
        let n = net.n;
        let mut degree = vec![0usize; n + 1];
        for &(u, v, c) in &net.arcs {
            if u != v && c > 0.0 {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
        let mut start = vec![0usize; n + 1];
        for p in 0..n {
            start[p + 1] = start[p] + degree[p];
        }
        let m = start[n];
        let mut fill = start.clone();
        let (mut to, mut rev, mut res) = (vec![0; m], vec![0; m], vec![0.0; m]);
        for &(u, v, c) in &net.arcs {
            if u == v || c <= 0.0 {
                continue;
            }
            let c = if c.is_finite() { c } else { sentinel };
            let (a, b) = (fill[u], fill[v]);
            fill[u] += 1;
            fill[v] += 1;
            to[a] = v;
            res[a] = c;
            rev[a] = b;
            to[b] = u;
            res[b] = 0.0;
            rev[b] = a;
        }
        Self {
            n,
            s: net.source,
            t: net.sink,
            current: start[..n].to_vec(),
            start,
            to,
            rev,
            res,
            excess: vec![0.0; n],
            label: vec![0; n],
            buckets: vec![Vec::new(); 2 * n + 1],
            in_bucket: vec![false; n],
            count: vec![0; 2 * n + 1],
            highest: 0,
            relabels: 0,
        }
    }

    fn run(&mut self) {
        let s = self.s;
        for e in self.start[s]..self.start[s + 1] {
            let delta = self.res[e];
            if delta > 0.0 {
                let v = self.to[e];
                self.res[e] = 0.0;
                self.res[self.rev[e]] += delta;
                self.excess[v] += delta;
                self.excess[s] -= delta;
            }
        }
        self.global_relabel();
        while let Some(u) = self.pop_highest() {
            self.discharge(u);
            if self.relabels >= self.n {
                self.relabels = 0;
                self.global_relabel();
            }
        }
    }

    fn activate(&mut self, v: usize) {
        if v != self.s
            && v != self.t
            && !self.in_bucket[v]
            && self.excess[v] > 0.0
            && self.label[v] < 2 * self.n
        {
            self.in_bucket[v] = true;
            let h = self.label[v];
            self.buckets[h].push(v);
            self.highest = self.highest.max(h);
        }
    }

    fn pop_highest(&mut self) -> Option<usize> {
        loop {
            if let Some(u) = self.buckets[self.highest].pop() {
                self.in_bucket[u] = false;
                if self.label[u] == self.highest && self.excess[u] > 0.0 {
                    return Some(u);
                }
                // stale entry after a relabel elsewhere; requeue under its label
                self.activate(u);
                continue;
            }
            if self.highest == 0 {
                return None;
            }
            self.highest -= 1;
        }
    }

    fn discharge(&mut self, u: usize) {
        while self.excess[u] > 0.0 {
            if self.current[u] == self.start[u + 1] {
                self.relabel(u);
                if self.label[u] >= 2 * self.n {
                    return;
                }
                continue;
            }
            let e = self.current[u];
            let v = self.to[e];
            if self.res[e] > 0.0 && self.label[u] == self.label[v] + 1 {
                let delta = self.excess[u].min(self.res[e]);
                self.res[e] -= delta;
                self.res[self.rev[e]] += delta;
                self.excess[u] -= delta;
                self.excess[v] += delta;
                self.activate(v);
            } else {
                self.current[u] += 1;
            }
        }
    }

    fn relabel(&mut self, u: usize) {
        self.relabels += 1;
        let old = self.label[u];
        self.count[old] -= 1;
        if old < self.n && self.count[old] == 0 {
            // gap: nodes above `old` can no longer reach the sink
            for v in 0..self.n {
                if v != self.s && self.label[v] > old && self.label[v] < self.n {
                    self.count[self.label[v]] -= 1;
                    self.label[v] = self.n + 1;
                    self.count[self.n + 1] += 1;
                    self.current[v] = self.start[v];
                }
            }
        }
        let mut best = 2 * self.n;
        for e in self.start[u]..self.start[u + 1] {
            if self.res[e] > 0.0 {
                best = best.min(self.label[self.to[e]] + 1);
            }
        }
        self.label[u] = best;
        self.count[best] += 1;
        self.current[u] = self.start[u];
    }

    /// Exact labels: distance to the sink, else `n +` distance to the source.
    fn global_relabel(&mut self) {
        let n = self.n;
        let unset = usize::MAX;
        let mut dist = vec![unset; n];
        for (root, base) in [(self.t, 0), (self.s, n)] {
            let mut queue = VecDeque::new();
            if dist[root] == unset {
                dist[root] = base;
                queue.push_back(root);
            }
            while let Some(w) = queue.pop_front() {
                for e in self.start[w]..self.start[w + 1] {
                    let v = self.to[e];
                    // v reaches w if the paired arc v -> w has residual capacity
                    if dist[v] == unset && self.res[self.rev[e]] > 0.0 {
                        dist[v] = dist[w] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        self.count.iter_mut().for_each(|c| *c = 0);
        for b in &mut self.buckets {
            b.clear();
        }
        self.in_bucket.iter_mut().for_each(|f| *f = false);
        self.highest = 0;
        for v in 0..n {
            let d = if v == self.s {
                n
            } else if dist[v] == unset {
                2 * n
            } else {
                dist[v].min(2 * n)
            };
            self.label[v] = d;
            self.count[d] += 1;
            self.current[v] = self.start[v];
        }
        for v in 0..n {
            self.activate(v);
        }
    }

    fn source_side(&self) -> Vec<bool> {
        let mut side = vec![false; self.n];
        let mut queue = VecDeque::from([self.s]);
        side[self.s] = true;
        while let Some(u) = queue.pop_front() {
            for e in self.start[u]..self.start[u + 1] {
                let v = self.to[e];
                if !side[v] && self.res[e] > 0.0 {
                    side[v] = true;
                    queue.push_back(v);
                }
            }
        }
        side
    }
}
