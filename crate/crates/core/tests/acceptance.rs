//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use preorder_core::bounds::{
    boundary_bound, exact_bounds_tractable, induced_value, local_search_lower_bound,
    triple_packing_upper_bound, BoundMethod, PackingTable,
};
use preorder_core::conditions::{
    alpha_beta_swap_minimize, build_join_energy, run_joint, subset_fixation_condition, EnergyModel,
    PipelineConfig, SubsetStrategy, LABEL_REST, LABEL_U, LABEL_U_PRIME,
};
use preorder_core::graph::{min_st_cut, FlowNetwork};
use preorder_core::instance::{
    five_element_example, generate_synthetic, load_ego_network, GeneratorConfig, Instance,
};
use preorder_core::maps::{
    apply_map, change_sets, change_sets_general, is_true_to, members, MapKind, MapSpec, TauVariant,
};
use preorder_core::oracle::{self, enumerate_preorders, for_each_completion, solve_exact};
use preorder_core::preorder::{
    decided_pairs_bruteforce, merge_classes, ClosedPartial, Decision, PartialAssignment, Relation,
};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Values on a 1/1024 grid so that every sum below is exact.
fn dyadic(r: &mut ChaCha8Rng) -> f64 {
    r.random_range(-2048i32..=2048) as f64 / 1024.0
}

fn random_instance(r: &mut ChaCha8Rng, n: usize, kind: usize) -> Instance {
    Instance::from_fn(n, |_, _| match kind {
        0 => dyadic(r),
        1 => {
            if r.random_bool(0.5) {
                1.0
            } else {
                -1.0
            }
        }
        _ => r.random_range(-3i32..=3) as f64,
    })
    .unwrap()
}

/// A consistent partial assignment: a random subset of the entries of a random preorder.
fn random_partial(r: &mut ChaCha8Rng, all: &[Relation], reveal: f64) -> PartialAssignment {
    let z = all.choose(r).unwrap();
    let n = z.n();
    let mut x = PartialAssignment::new(n);
    for p in 0..n {
        for q in 0..n {
            if p != q && r.random_bool(reveal) {
                x.set(p, q, Decision::from_bool(z.get(p, q))).unwrap();
            }
        }
    }
    x
}

fn random_mask(r: &mut ChaCha8Rng, n: usize) -> Vec<bool> {
    (0..n).map(|_| r.random_bool(0.5)).collect()
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

fn soundness_suite() -> Outcome {
    let mut r = rng(1);
    let configs = [
        PipelineConfig::default(),
        PipelineConfig {
            bound_method: BoundMethod::Tractable,
            subset_strategy: SubsetStrategy::NeighborhoodThenFull { k: 2 },
            ..Default::default()
        },
        PipelineConfig {
            merge: false,
            single_pass: true,
            parallel: false,
            ..Default::default()
        },
    ];
    let mut decided = 0usize;
    let total = 600;
    for k in 0..total {
        let n = 3 + k % 4;
        let inst = random_instance(&mut r, n, k % 3);
        let cfg = &configs[k % configs.len()];
        let out = run_joint(&inst, cfg).map_err(|e| format!("instance {k}: {e}"))?;
        if !oracle::certify(&inst, &out.partial).unwrap() {
            return Err(format!(
                "instance {k} (n = {n}): no optimum survives the fixations"
            ));
        }
        decided += out.stats.decided;
    }
    Ok(format!(
        "{total} instances certified, {decided} pairs fixed in total"
    ))
}

fn closure_correctness() -> Outcome {
    let mut r = rng(2);
    let by_n: Vec<Vec<Relation>> = (0..=5)
        .map(|n| enumerate_preorders(n.max(1)).unwrap())
        .collect();
    let total = 600;
    for k in 0..total {
        let n = 2 + k % 4;
        let x = {
            let reveal = r.random_range(0.1..0.6);
            random_partial(&mut r, &by_n[n], reveal)
        };
        let closed = x.close().unwrap();
        let truth = decided_pairs_bruteforce(&x).unwrap();
        for p in 0..n {
            for q in 0..n {
                if p != q && closed.get(p, q) != truth[p][q] {
                    return Err(format!(
                        "case {k}: pair ({p}, {q}) closes to {:?}, brute force {:?}",
                        closed.get(p, q),
                        truth[p][q]
                    ));
                }
            }
        }
        let mut a = HashSet::new();
        for_each_completion(&x, |z| {
            a.insert(z.clone());
        })
        .unwrap();
        let mut b = HashSet::new();
        for_each_completion(&closed.to_partial(), |z| {
            b.insert(z.clone());
        })
        .unwrap();
        if a != b {
            return Err(format!("case {k}: completion sets differ"));
        }
    }
    Ok(format!("{total} partial assignments"))
}

fn random_spec(r: &mut ChaCha8Rng, n: usize) -> MapSpec {
    let pair = |r: &mut ChaCha8Rng| {
        let i = r.random_range(0..n);
        let j = (i + r.random_range(1..n)) % n;
        (i, j)
    };
    let kind = match r.random_range(0..4) {
        0 => MapKind::Dicut {
            u: random_mask(r, n),
        },
        1 => {
            let (i, j) = pair(r);
            MapKind::Join { i, j }
        }
        2 => {
            let (i, j) = pair(r);
            let mut u = vec![false; n];
            let mut u_prime = vec![false; n];
            u[i] = true;
            u_prime[j] = true;
            for p in 0..n {
                if p != i && p != j {
                    match r.random_range(0..3) {
                        0 => u[p] = true,
                        1 => u_prime[p] = true,
                        _ => {}
                    }
                }
            }
            MapKind::Gamma { u, u_prime, i, j }
        }
        _ => {
            let u = random_mask(r, n);
            let k = u.iter().filter(|&&b| b).count();
            let y = enumerate_preorders(k.max(1))
                .unwrap()
                .choose(r)
                .unwrap()
                .clone();
            let y = if k == 0 { Relation::empty(0) } else { y };
            MapKind::Tau {
                variant: *TauVariant::ALL.choose(r).unwrap(),
                u,
                y,
            }
        }
    };
    if r.random_bool(0.5) {
        let (i, j) = pair(r);
        MapSpec::conditional(kind, (i, j), r.random_bool(0.5))
    } else {
        MapSpec::new(kind)
    }
}

fn map_invariants() -> Outcome {
    let n = 4;
    let mut r = rng(3);
    let all = enumerate_preorders(n).unwrap();
    let specs = 400;
    let mut true_cases = 0;
    for s in 0..specs {
        let spec = random_spec(&mut r, n);
        let xh = {
            let reveal = r.random_range(0.0..0.4);
            random_partial(&mut r, &all, reveal)
        }
        .close()
        .unwrap();
        let exact = change_sets(&spec, &xh).unwrap();
        let general = change_sets_general(&spec, &xh).unwrap();
        let boundary_only = match &spec.kind {
            MapKind::Tau { u, .. } => Some(u.clone()),
            _ => None,
        };
        let truth = is_true_to(&spec, &xh);
        true_cases += truth as usize;
        for x in &all {
            let out = apply_map(&spec, x).unwrap();
            if !out.is_transitive() {
                return Err(format!("spec {s}: {spec:?} breaks transitivity"));
            }
            if !xh.contains(x) {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    if p == q || x.get(p, q) == out.get(p, q) {
                        continue;
                    }
                    if let Some(u) = &boundary_only {
                        if u[p] == u[q] {
                            continue;
                        }
                    }
                    let declared = |cs: &preorder_core::maps::ChangeSets| {
                        if out.get(p, q) {
                            cs.p01.get(p, q)
                        } else {
                            cs.p10.get(p, q)
                        }
                    };
                    let y_ok = match &spec.kind {
                        MapKind::Tau { u, y, .. } => xh.restrict(&members(u).0).contains(y),
                        _ => true,
                    };
                    if (y_ok && !declared(&exact)) || !declared(&general) {
                        return Err(format!("spec {s}: change at ({p}, {q}) not declared"));
                    }
                }
            }
            if truth && !xh.contains(&out) {
                return Err(format!("spec {s}: true map leaves the constrained set"));
            }
        }
    }
    if true_cases == 0 {
        return Err("no spec was true to its partial assignment".into());
    }
    Ok(format!(
        "{specs} specs over all {} preorders, {true_cases} true",
        all.len()
    ))
}

fn four_element_instance() -> Instance {
    let (p, q, r, s) = (0, 1, 2, 3);
    Instance::from_fn(4, |a, b| match (a, b) {
        x if x == (p, q) => 5.0,
        x if x == (r, s) => 2.0,
        x if [(p, r), (p, s), (q, r), (q, s)].contains(&x) => 1.0,
        _ => 0.0,
    })
    .unwrap()
}

fn four_element_subset() -> Outcome {
    let inst = four_element_instance();
    let xh = ClosedPartial::empty(4);
    let small = subset_fixation_condition(
        &inst,
        &xh,
        (0, 1),
        true,
        &[true, true, false, false],
        TauVariant::Both,
        BoundMethod::Simple,
    )
    .map_err(|e| e.to_string())?;
    let got = (small.report.lb, small.report.ub, small.report.ub_prime);
    if got != (5.0, 0.0, Some(4.0)) {
        return Err(format!("U = {{p, q}}: (lb, ub, ub') = {got:?}"));
    }
    match small.fixation {
        Some(f) if f.pair == (0, 1) && f.value => {}
        other => return Err(format!("U = {{p, q}}: fixation {other:?}")),
    }
    let full = subset_fixation_condition(
        &inst,
        &xh,
        (0, 1),
        true,
        &[true; 4],
        TauVariant::Both,
        BoundMethod::Simple,
    )
    .map_err(|e| e.to_string())?;
    let got_full = (full.report.lb, full.report.ub, full.report.ub_prime);
    if got_full != (5.0, 6.0, Some(0.0)) || full.fixation.is_some() {
        return Err(format!(
            "U = V: (lb, ub, ub') = {got_full:?}, fixation {:?}",
            full.fixation
        ));
    }
    Ok(format!(
        "U = {{p, q}}: {got:?} fixes pq = 1; U = V: {got_full:?} does not fix"
    ))
}

fn five_element_regression() -> Outcome {
    let inst = five_element_example();
    let opt = solve_exact(&inst, &PartialAssignment::new(5)).unwrap();
    if opt.value != 10.0 {
        return Err(format!("optimum {}", opt.value));
    }
    let (i, j, k, l, m) = (0, 1, 2, 3, 4);
    let known =
        Relation::from_pairs(5, [(i, j), (j, i), (i, l), (j, l), (k, l), (k, m)]).unwrap();
    if !opt.optima.contains(&known) {
        return Err("known optimum is not among the optima".into());
    }
    let out = run_joint(&inst, &PipelineConfig::default()).map_err(|e| e.to_string())?;
    if !out.partial.contains(&known) {
        return Err("final partial assignment excludes the known optimum".into());
    }
    Ok(format!(
        "optimum 10 over {} optima, {} of 20 pairs fixed",
        opt.optima.len(),
        out.stats.decided
    ))
}

fn phase_transition() -> Outcome {
    let cfg = PipelineConfig::default();
    let mut medians = Vec::new();
    for alpha in [0.1, 0.95] {
        let mut pct = Vec::new();
        for seed in 0..20 {
            let g = GeneratorConfig {
                n: 20,
                p_e: 0.5,
                alpha,
                seed: 1000 + seed,
            };
            let (inst, _) = generate_synthetic(&g).unwrap();
            let out = run_joint(&inst, &cfg).map_err(|e| e.to_string())?;
            pct.push(out.stats.decided_percent());
        }
        medians.push(median(&mut pct));
    }
    let msg = format!(
        "median fixed: {:.1}% at alpha 0.1, {:.1}% at alpha 0.95",
        medians[0], medians[1]
    );
    if medians[0] >= 95.0 && medians[1] <= 5.0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn tractable_exactness() -> Outcome {
    let mut r = rng(7);
    let by_n: Vec<Vec<Relation>> = (0..=5)
        .map(|n| enumerate_preorders(n.max(1)).unwrap())
        .collect();
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 250 {
        attempts += 1;
        if attempts > 100_000 {
            return Err(format!("only {checked} applicable cases found"));
        }
        let n = 2 + attempts % 4;
        let z = by_n[n].choose(&mut r).unwrap().clone();
        let inst = Instance::from_fn(n, |p, q| {
            let mag = r.random_range(0i32..=2048) as f64 / 1024.0;
            if z.get(p, q) {
                mag
            } else if r.random_bool(0.1) {
                0.0
            } else {
                -mag - 1.0 / 1024.0
            }
        })
        .unwrap();
        let x = {
            let reveal = r.random_range(0.0..0.3);
            random_partial(&mut r, &by_n[n], reveal)
        };
        let Ok(xh) = x.close() else { continue };
        let cand: Vec<_> = xh
            .undecided_pairs()
            .into_iter()
            .filter(|&(i, j)| inst.value(i, j) >= 0.0)
            .collect();
        let Some(&ij) = cand.choose(&mut r) else {
            continue;
        };
        let Some(tb) = exact_bounds_tractable(&inst, &xh, ij).unwrap() else {
            continue;
        };
        let with = |b: bool| {
            let c = xh.with_fixed(&[(ij, b)]).unwrap();
            solve_exact(&inst, &c.to_partial()).unwrap().value
        };
        let (one, zero) = (with(true), with(false));
        if tb.opt != one || tb.opt_cut != zero {
            return Err(format!(
                "case {attempts}: tractable ({}, {}) vs oracle ({one}, {zero})",
                tb.opt, tb.opt_cut
            ));
        }
        if inst.evaluate(&tb.plus).unwrap() != tb.opt
            || inst.evaluate(&tb.cut_witness).unwrap() != tb.opt_cut
        {
            return Err(format!("case {attempts}: witness values disagree"));
        }
        checked += 1;
    }
    Ok(format!("{checked} applicable instances"))
}

fn max_over(x: &PartialAssignment, mut f: impl FnMut(&Relation) -> f64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for_each_completion(x, |z| best = best.max(f(z))).unwrap();
    best
}

fn bound_dominance() -> Outcome {
    let mut r = rng(8);
    let by_n: Vec<Vec<Relation>> = (0..=5)
        .map(|n| enumerate_preorders(n.max(1)).unwrap())
        .collect();
    let cases = 300;
    for k in 0..cases {
        let n = 3 + k % 3;
        let inst = random_instance(&mut r, n, k % 3);
        let xh = {
            let reveal = r.random_range(0.0..0.3);
            random_partial(&mut r, &by_n[n], reveal)
        }
        .close()
        .unwrap();
        let free = xh.undecided_pairs();
        let Some(&(i, j)) = free.choose(&mut r) else {
            continue;
        };
        let b = r.random_bool(0.5);
        let constrained = xh.with_fixed(&[((i, j), b)]).unwrap().to_partial();
        let opt_b = solve_exact(&inst, &constrained).unwrap().value;
        let value_on = |z: &Relation, keep: &dyn Fn(usize, usize) -> bool| -> f64 {
            z.ones()
                .filter(|&(p, q)| keep(p, q))
                .map(|(p, q)| inst.value(p, q))
                .sum()
        };

        let lb = local_search_lower_bound(&inst, &xh, Some(((i, j), b))).unwrap();
        if !(lb.witness.is_transitive() && xh.contains(&lb.witness) && lb.witness.get(i, j) == b) {
            return Err(format!("case {k}: lower bound witness infeasible"));
        }
        if inst.evaluate(&lb.witness).unwrap() != lb.value || lb.value > opt_b {
            return Err(format!("case {k}: lb {} above optimum {opt_b}", lb.value));
        }

        let iv = induced_value(&inst, &xh, (i, j), b).unwrap();
        let touching = max_over(&constrained, |z| {
            value_on(z, &|p, q| p == i || p == j || q == i || q == j)
        });
        if touching > iv {
            return Err(format!("case {k}: induced value {iv} below {touching}"));
        }

        let table = PackingTable::new(&inst, &xh);
        let rest = max_over(&xh.to_partial(), |z| {
            value_on(z, &|p, q| ![p, q].iter().any(|v| *v == i || *v == j))
        });
        let without = table.bound_without(i, j);
        let direct = triple_packing_upper_bound(&inst, &xh, &[i, j]);
        if rest > without || rest > direct {
            return Err(format!(
                "case {k}: packing bounds ({without}, {direct}) below {rest}"
            ));
        }
        if opt_b > iv + without {
            return Err(format!(
                "case {k}: ive/ivi plus packing {} below optimum {opt_b}",
                iv + without
            ));
        }
        let unconstrained = solve_exact(&inst, &xh.to_partial()).unwrap().value;
        if unconstrained > triple_packing_upper_bound(&inst, &xh, &[]) {
            return Err(format!(
                "case {k}: full packing bound below optimum {unconstrained}"
            ));
        }

        let u = random_mask(&mut r, n);
        let (list, _) = members(&u);
        if list.is_empty() {
            continue;
        }
        let y = lb.witness.bits();
        let y = Relation::from_pairs(
            list.len(),
            (0..list.len())
                .flat_map(|a| (0..list.len()).map(move |c| (a, c)))
                .filter(|&(a, c)| a != c && y.get(list[a], list[c])),
        )
        .unwrap();
        for variant in TauVariant::ALL {
            let spec = MapSpec::new(MapKind::Tau {
                variant,
                u: u.clone(),
                y: y.clone(),
            });
            let loss = max_over(&xh.to_partial(), |z| {
                let t = apply_map(&spec, z).unwrap();
                (0..n)
                    .flat_map(|p| (0..n).map(move |q| (p, q)))
                    .filter(|&(p, q)| u[p] != u[q])
                    .map(|(p, q)| {
                        inst.value(p, q) * (z.get(p, q) as u8 as f64 - t.get(p, q) as u8 as f64)
                    })
                    .sum()
            });
            let exact = boundary_bound(&inst, &xh, &u, &y, variant, true).unwrap();
            let general = boundary_bound(&inst, &xh, &u, &y, variant, false).unwrap();
            if loss > exact || loss > general {
                return Err(format!(
                    "case {k}: boundary bounds ({exact}, {general}) below {loss} for {variant:?}"
                ));
            }
        }
    }
    Ok(format!("{cases} constrained problems"))
}

fn exhaustive_cut(net: &FlowNetwork) -> f64 {
    let n = net.node_count();
    let others: Vec<usize> = (0..n)
        .filter(|&v| v != net.source() && v != net.sink())
        .collect();
    let mut best = f64::INFINITY;
    for mask in 0u32..1 << others.len() {
        let mut side = vec![false; n];
        side[net.source()] = true;
        for (k, &v) in others.iter().enumerate() {
            side[v] = mask >> k & 1 == 1;
        }
        best = best.min(net.cut_capacity(&side));
    }
    best
}

fn max_flow_oracle() -> Outcome {
    let mut r = rng(9);
    let total = 1500;
    for k in 0..total {
        let n = r.random_range(2..=10);
        let s = r.random_range(0..n);
        let t = (s + r.random_range(1..n)) % n;
        let mut net = FlowNetwork::new(n, s, t).unwrap();
        let density = r.random_range(0.1..0.7);
        for u in 0..n {
            for v in 0..n {
                if u != v && r.random_bool(density) {
                    let cap = if r.random_bool(0.05) {
                        f64::INFINITY
                    } else {
                        r.random_range(0.0..10.0)
                    };
                    net.add_arc(u, v, cap).unwrap();
                }
            }
        }
        let cut = min_st_cut(&net);
        let brute = exhaustive_cut(&net);
        let ok = if brute.is_infinite() {
            cut.value.is_infinite()
        } else {
            (cut.value - brute).abs() <= 1e-9 * brute.abs().max(1.0)
                && (net.cut_capacity(&cut.source_side) - brute).abs() <= 1e-9 * brute.abs().max(1.0)
        };
        if !ok {
            return Err(format!(
                "network {k}: push-relabel {} vs exhaustive {brute}",
                cut.value
            ));
        }
    }
    Ok(format!("{total} networks"))
}

fn exhaustive_energy(model: &EnergyModel) -> f64 {
    let n = model.n();
    let mut best = f64::INFINITY;
    let mut labels = vec![0usize; n];
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        for l in labels.iter_mut() {
            *l = c % 3;
            c /= 3;
        }
        best = best.min(model.energy(&labels).value());
    }
    best
}

fn swap_checks() -> Outcome {
    let mut r = rng(10);
    let mut generic = 0;
    for _ in 0..150 {
        let n = r.random_range(3..=5);
        let mut model = EnergyModel::new(n);
        for p in 0..n {
            for l in 0..3 {
                let c = if r.random_bool(0.1) {
                    f64::INFINITY
                } else {
                    r.random_range(0.0..4.0)
                };
                model.set_unary(p, l, c).unwrap();
            }
            for q in 0..n {
                for a in 0..3 {
                    for b in 0..3 {
                        if p != q && a != b && r.random_bool(0.6) {
                            let c = if r.random_bool(0.05) {
                                f64::INFINITY
                            } else {
                                r.random_range(0.0..3.0)
                            };
                            model.set_pairwise(p, q, a, b, c).unwrap();
                        }
                    }
                }
            }
        }
        let init: Vec<usize> = (0..n)
            .map(|p| (0..3).find(|&l| model.unary(p, l).is_finite()).unwrap_or(0))
            .collect();
        if (0..n).any(|p| !model.unary(p, init[p]).is_finite()) {
            continue;
        }
        let out = alpha_beta_swap_minimize(&model, &init, 20).map_err(|e| e.to_string())?;
        if out.trace.windows(2).any(|w| w[0].improves_on(&w[1])) {
            return Err("energy increased within a run".into());
        }
        if out.trace[0].improves_on(&out.energy) {
            return Err("final energy above initial".into());
        }
        generic += 1;
    }
    let mut joins = 0;
    while joins < 100 {
        let n = 3;
        let inst = random_instance(&mut r, n, 0);
        let i = r.random_range(0..n);
        let j = (i + r.random_range(1..n)) % n;
        let model =
            build_join_energy(&inst, &ClosedPartial::empty(n), i, j).map_err(|e| e.to_string())?;
        let mut init = vec![LABEL_REST; n];
        init[i] = LABEL_U;
        init[j] = LABEL_U_PRIME;
        let out = alpha_beta_swap_minimize(&model, &init, 20).map_err(|e| e.to_string())?;
        let best = exhaustive_energy(&model);
        if out.energy.value() != best {
            return Err(format!(
                "join model: swap {} vs exhaustive {best}",
                out.energy.value()
            ));
        }
        if out.trace.windows(2).any(|w| w[0].improves_on(&w[1])) {
            return Err("join model: energy increased".into());
        }
        joins += 1;
    }
    Ok(format!(
        "{generic} random models monotone, {joins} three-element join models exact"
    ))
}

fn merging_conservation() -> Outcome {
    let mut r = rng(11);
    let total = 250;
    for k in 0..total {
        let n = 3 + k % 4;
        let inst = random_instance(&mut r, n, k % 3);
        let mut elems: Vec<usize> = (0..n).collect();
        elems.shuffle(&mut r);
        let size = r.random_range(2..=n.min(3));
        let class = &elems[..size];
        let mut x = PartialAssignment::new(n);
        for &p in class {
            for &q in class {
                if p != q {
                    x.set(p, q, Decision::One).unwrap();
                }
            }
        }
        let xh = x.close().unwrap();
        let con = merge_classes(&inst, &xh, class).map_err(|e| e.to_string())?;
        let original = solve_exact(&inst, &xh.to_partial()).unwrap().value;
        let contracted = solve_exact(&con.instance, &con.partial.to_partial())
            .unwrap()
            .value;
        if original != con.offset + contracted {
            return Err(format!(
                "instance {k}: {original} vs {} + {contracted}",
                con.offset
            ));
        }
    }
    Ok(format!("{total} instances"))
}

fn ego_smoke() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/ego_small.edges");
    let ego = load_ego_network(path, None).map_err(|e| e.to_string())?;
    let n = ego.instance.n();
    if n > 60 {
        return Err(format!("fixture has {n} nodes"));
    }
    let out = run_joint(&ego.instance, &PipelineConfig::default()).map_err(|e| e.to_string())?;
    let s = &out.stats;
    let zeros: usize = s.per_condition.iter().map(|c| c.zeros).sum();
    let ones: usize = s.per_condition.iter().map(|c| c.ones).sum();
    if zeros + ones > s.decided || s.decided > s.pair_count {
        return Err("stats row inconsistent".into());
    }
    Ok(format!(
        "n = {n}, {} edges: {:.1}% fixed ({zeros} emitted zeros, {ones} emitted ones) in {} rounds",
        ego.edge_count,
        s.decided_percent(),
        s.rounds
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("soundness suite", soundness_suite),
        ("closure correctness", closure_correctness),
        ("map invariants", map_invariants),
        ("four-element subset bounds", four_element_subset),
        ("five-element regression", five_element_regression),
        ("synthetic phase transition", phase_transition),
        ("tractable exactness", tractable_exactness),
        ("bound dominance", bound_dominance),
        ("max-flow oracle", max_flow_oracle),
        ("alpha-beta swap", swap_checks),
        ("merging conservation", merging_conservation),
        ("ego-network smoke", ego_smoke),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run();
        let secs = t0.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{secs:.1}s]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{secs:.1}s]", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
