use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::maps::{change_sets, change_sets_general, MapKind, MapSpec, TauVariant};
use crate::preorder::{ClosedPartial, Relation};

/// Upper bound on `Σ_{pq ∈ δ(U)} c_pq (x_pq - τ(x)_pq)` over `X_V[x̂]` for the
/// boundary map `τ` of `variant` with inner solution `y`.
///
/// With `exact` the change sets that depend on `y` are used; they require `y`
/// to be a completion of `x̂` restricted to `U`.
pub fn boundary_bound(
    inst: &Instance,
    xh: &ClosedPartial,
    u: &[bool],
    y: &Relation,
    variant: TauVariant,
    exact: bool,
) -> Result<f64> {
    let spec = MapSpec::new(MapKind::Tau {
        variant,
        u: u.to_vec(),
        y: y.clone(),
    });
    let sets = if exact {
        let (list, _) = crate::maps::members(u);
        if !xh.restrict(&list).contains(y) {
            return Err(Error::Precondition(
                "y is not a completion of x̂ on U".into(),
            ));
        }
        change_sets(&spec, xh)?
    } else {
        change_sets_general(&spec, xh)?
    };
    let mut total = 0.0;
    for (p, q) in sets.p01.ones() {
        total += inst.neg(p, q);
    }
    for (p, q) in sets.p10.ones() {
        total += inst.pos(p, q);
    }
    Ok(total)
}
