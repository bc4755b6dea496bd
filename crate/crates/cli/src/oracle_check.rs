use preorder_core::conditions::run_joint;
use preorder_core::instance::load_instance;
use preorder_core::oracle::{certify_against, solve_exact, MAX_N};
use preorder_core::preorder::{load_partial, ClosedPartial, PartialAssignment};

use crate::args::OracleCheckArgs;
use crate::failure::{CliResult, Failure};

pub fn run(a: &OracleCheckArgs) -> CliResult {
    let inst = load_instance(&a.instance)?;
    let n = inst.n();
    if n > MAX_N {
        return Err(Failure::Usage(format!(
            "oracle-check enumerates all preorders and supports at most {MAX_N} elements, got {n}"
        )));
    }
    let fixations: Vec<((usize, usize), bool)> = match &a.partial {
        Some(path) => {
            let x = load_partial(path)?;
            if x.n() != n {
                return Err(Failure::Data(format!(
                    "partial assignment has {} elements, instance has {n}",
                    x.n()
                )));
            }
            x.entries()
        }
        None => {
            let cfg = a.pipeline.config()?;
            let out = a.pipeline.with_pool(|| run_joint(&inst, &cfg))??;
            out.fixations.iter().map(|f| (f.pair, f.value)).collect()
        }
    };
    let opt = solve_exact(&inst, &PartialAssignment::new(n))?;
    let mut xh = ClosedPartial::empty(n);
    for &((p, q), v) in &fixations {
        let fits = xh.fix(p, q, v).is_ok() && certify_against(&opt, &xh);
        if !fits {
            println!("FAIL: no optimum (value {}) has x_{p}{q} = {} together with the fixations before it", opt.value, v as u8);
            println!("violated fixation: {p},{q},{}", v as u8);
            return Err(Failure::Inconsistent(format!(
                "fixation ({p}, {q}) = {} is not optimal",
                v as u8
            )));
        }
    }
    let witness = opt
        .optima
        .iter()
        .find(|x| xh.contains(x))
        .expect("certified above");
    let arcs: Vec<String> = witness.ones().map(|(p, q)| format!("{p}>{q}")).collect();
    println!(
        "PASS: {} fixations, optimum value {}, witness arcs: {}",
        fixations.len(),
        opt.value,
        if arcs.is_empty() {
            "none".to_string()
        } else {
            arcs.join(" ")
        }
    );
    Ok(())
}
