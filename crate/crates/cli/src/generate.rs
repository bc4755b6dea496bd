//! Synthetic ensembles: for every (n, alpha, p_E), `truths` planted preorders
//! with `count / truths` value draws each.

use std::fs;
use std::path::Path;

use preorder_core::instance::{draw_values, generate_truth, save_instance, GeneratorConfig};
use preorder_core::preorder::{save_partial, ClosedPartial};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::GenerateArgs;
use crate::failure::{CliResult, Failure};

pub const MANIFEST: &str = "manifest.csv";

pub const MANIFEST_HEADER: [&str; 9] = [
    "file",
    "n",
    "alpha",
    "p_e",
    "truth",
    "draw",
    "truth_seed",
    "value_seed",
    "truth_file",
];

/// Seed of the stream that hands out the truth and value seeds of one combination.
fn combination_seed(seed: u64, n: usize, alpha: f64, p_e: f64) -> u64 {
    seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ alpha.to_bits().rotate_left(17)
        ^ p_e.to_bits().rotate_left(41)
}

pub fn run(a: &GenerateArgs) -> CliResult {
    if a.truths == 0 || a.count == 0 || a.count % a.truths != 0 {
        return Err(Failure::Usage(format!(
            "--count ({}) must be a positive multiple of --truths ({})",
            a.count, a.truths
        )));
    }
    for &n in &a.n {
        for &alpha in &a.alpha {
            for &p_e in &a.p_e {
                GeneratorConfig {
                    n,
                    p_e,
                    alpha,
                    seed: a.seed,
                }
                .validate()?;
            }
        }
    }
    fs::create_dir_all(&a.out)?;
    let mut manifest = csv::Writer::from_path(a.out.join(MANIFEST))?;
    manifest.write_record(MANIFEST_HEADER)?;
    let draws = a.count / a.truths;
    let mut written = 0;
    for &n in &a.n {
        for &alpha in &a.alpha {
            for &p_e in &a.p_e {
                let mut seeds = ChaCha8Rng::seed_from_u64(combination_seed(a.seed, n, alpha, p_e));
                let stem = format!("n{n}_a{alpha}_p{p_e}");
                for t in 0..a.truths {
                    let truth_seed = seeds.next_u64();
                    let truth = generate_truth(n, p_e, &mut ChaCha8Rng::seed_from_u64(truth_seed));
                    let truth_file = format!("{stem}_t{t}.truth.csv");
                    let closed = ClosedPartial::from_relation(&truth)?;
                    save_partial(&closed.to_partial(), a.out.join(&truth_file))?;
                    for v in 0..draws {
                        let value_seed = seeds.next_u64();
                        let inst =
                            draw_values(&truth, alpha, &mut ChaCha8Rng::seed_from_u64(value_seed))?;
                        let file = format!("{stem}_t{t}_v{v}.csv");
                        save_instance(&inst, a.out.join(&file))?;
                        manifest.write_record([
                            file,
                            n.to_string(),
                            alpha.to_string(),
                            p_e.to_string(),
                            t.to_string(),
                            v.to_string(),
                            truth_seed.to_string(),
                            value_seed.to_string(),
                            truth_file.clone(),
                        ])?;
                        written += 1;
                    }
                }
            }
        }
    }
    manifest.flush()?;
    eprintln!("wrote {written} instances to {}", display(&a.out));
    Ok(())
}

fn display(p: &Path) -> String {
    p.display().to_string()
}
