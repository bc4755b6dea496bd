//! Relations, partial assignments and their closure.

mod io;
mod merge;
mod partial;
mod relation;

pub use io::{load_partial, read_partial, save_partial, write_partial};
pub use merge::{equivalence_classes, merge_all, merge_classes, Contraction};
pub use partial::{ClosedPartial, Decision, PartialAssignment};
pub(crate) use relation::check_pair;
pub use relation::{transitive_closure, Relation};

use crate::error::{Error, Result};
use crate::oracle;

/// Decided pairs of `x̃` by exhaustive enumeration of its completions.
///
/// Test-facing ground truth for [`PartialAssignment::close`]; limited to
/// `n <= 6`. Errors with [`Error::Inconsistent`] if `x̃` has no completion.
pub fn decided_pairs_bruteforce(x: &PartialAssignment) -> Result<Vec<Vec<Decision>>> {
    let n = x.n();
    let mut seen_one = vec![vec![false; n]; n];
    let mut seen_zero = vec![vec![false; n]; n];
    let mut any = false;
    oracle::for_each_completion(x, |rel| {
        any = true;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    if rel.get(p, q) {
                        seen_one[p][q] = true;
                    } else {
                        seen_zero[p][q] = true;
                    }
                }
            }
        }
    })?;
    if !any {
        let pair = x.entries().first().map(|e| e.0).unwrap_or((0, 0));
        return Err(Error::Inconsistent(pair));
    }
    Ok((0..n)
        .map(|p| {
            (0..n)
                .map(|q| match (p == q, seen_one[p][q], seen_zero[p][q]) {
                    (true, _, _) | (false, true, false) => Decision::One,
                    (false, false, true) => Decision::Zero,
                    _ => Decision::Undecided,
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_forces_shortcut() {
        let x = PartialAssignment::from_entries(3, [((0, 1), true), ((1, 2), true)]).unwrap();
        let d = decided_pairs_bruteforce(&x).unwrap();
        assert_eq!(d[0][2], Decision::One);
        assert_eq!(d[2][0], Decision::Undecided);
    }

    #[test]
    fn empty_on_two_is_undecided() {
        let d = decided_pairs_bruteforce(&PartialAssignment::new(2)).unwrap();
        assert_eq!(d[0][1], Decision::Undecided);
        assert_eq!(d[1][0], Decision::Undecided);
    }

    #[test]
    fn rejects_large_and_inconsistent() {
        assert!(matches!(
            decided_pairs_bruteforce(&PartialAssignment::new(7)),
            Err(Error::TooLarge { .. })
        ));
        let bad =
            PartialAssignment::from_entries(3, [((0, 1), true), ((1, 2), true), ((0, 2), false)])
                .unwrap();
        assert!(decided_pairs_bruteforce(&bad).is_err());
    }
}
