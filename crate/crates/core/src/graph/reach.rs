use crate::bits::BitMatrix;

/// Row `u` of the result holds every node reachable from `u` in the digraph
/// `adjacency`, including `u` itself.
pub fn reachability_sets(adjacency: &BitMatrix) -> BitMatrix {
    let n = adjacency.dim();
    let mut reach = BitMatrix::new(n);
    let mut stack = Vec::with_capacity(n);
    for u in 0..n {
        reach.set(u, u);
        stack.push(u);
        while let Some(w) = stack.pop() {
            for v in adjacency.row_ones(w) {
                if !reach.get(u, v) {
                    reach.set(u, v);
                    stack.push(v);
                }
            }
        }
    }
    reach
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_cycle() {
        let mut adj = BitMatrix::new(5);
        adj.set(0, 1);
        adj.set(1, 2);
        adj.set(3, 4);
        adj.set(4, 3);
        let r = reachability_sets(&adj);
        assert_eq!(r.row_ones(0).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(r.row_ones(2).collect::<Vec<_>>(), vec![2]);
        assert_eq!(r.row_ones(4).collect::<Vec<_>>(), vec![3, 4]);
    }

    #[test]
    fn agrees_with_closure() {
        let mut adj = BitMatrix::new(7);
        for (u, v) in [(0, 3), (3, 5), (5, 0), (2, 6), (6, 1), (4, 4)] {
            adj.set(u, v);
        }
        let r = reachability_sets(&adj);
        let mut closed = adj.clone();
        closed.close_transitively();
        for u in 0..7 {
            for v in 0..7 {
                if u != v {
                    assert_eq!(r.get(u, v), closed.get(u, v), "{u}->{v}");
                }
            }
        }
    }
}
