use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use preorder_core::conditions::{run_joint, PipelineConfig, RunResult};
use preorder_core::instance::{load_ego_network, load_instance, Instance};
use preorder_core::preorder::save_partial;

use crate::args::FixArgs;
use crate::failure::{CliResult, Failure};
use crate::generate::MANIFEST;
use crate::stats::{summary, write_records, Provenance, StatsRecord};

struct Job {
    id: String,
    instance: Instance,
    provenance: Provenance,
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Instance files named by `inputs`; directories contribute their `*.csv`
/// files other than manifests and planted truths, sorted by name.
fn expand(inputs: &[PathBuf]) -> CliResult<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = fs::read_dir(p)?
                .map(|e| e.map(|e| e.path()))
                .collect::<Result<_, _>>()?;
            found.retain(|f| {
                let name = f
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                name.ends_with(".csv")
                    && name != MANIFEST
                    && !name.ends_with(".truth.csv")
                    && !name.ends_with(".partial.csv")
            });
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Generator parameters by file name from the manifest next to `file`, if any.
fn manifest_for(
    dir: &Path,
    cache: &mut HashMap<PathBuf, HashMap<String, Provenance>>,
) -> CliResult<HashMap<String, Provenance>> {
    if let Some(m) = cache.get(dir) {
        return Ok(m.clone());
    }
    let mut map = HashMap::new();
    let path = dir.join(MANIFEST);
    if path.is_file() {
        let mut r = csv::Reader::from_path(&path)?;
        let headers = r.headers()?.clone();
        let col = |name: &str| headers.iter().position(|h| h == name);
        let (file, alpha, p_e, seed) = (col("file"), col("alpha"), col("p_e"), col("value_seed"));
        for rec in r.records() {
            let rec = rec?;
            let get = |c: Option<usize>| c.and_then(|k| rec.get(k));
            if let Some(name) = get(file) {
                map.insert(
                    name.to_string(),
                    Provenance {
                        alpha: get(alpha).and_then(|s| s.parse().ok()),
                        p_e: get(p_e).and_then(|s| s.parse().ok()),
                        seed: get(seed).and_then(|s| s.parse().ok()),
                    },
                );
            }
        }
    }
    cache.insert(dir.to_path_buf(), map.clone());
    Ok(map)
}

fn load_jobs(a: &FixArgs) -> CliResult<Vec<Job>> {
    let mut jobs = Vec::new();
    let mut cache = HashMap::new();
    for path in expand(&a.inputs)? {
        let instance = load_instance(&path)?;
        let dir = path.parent().unwrap_or(Path::new("."));
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let provenance = manifest_for(dir, &mut cache)?
            .get(&name)
            .copied()
            .unwrap_or_default();
        jobs.push(Job {
            id: stem(&path),
            instance,
            provenance,
        });
    }
    for path in &a.ego {
        let ego = load_ego_network(path, None)?;
        jobs.push(Job {
            id: stem(path),
            instance: ego.instance,
            provenance: Provenance::default(),
        });
    }
    if jobs.is_empty() {
        return Err(Failure::Usage("no instances given".into()));
    }
    Ok(jobs)
}

fn run_all(jobs: &[Job], cfg: &PipelineConfig) -> Vec<preorder_core::Result<RunResult>> {
    #[cfg(feature = "parallel")]
    {
        if cfg.parallel {
            use rayon::prelude::*;
            return jobs
                .par_iter()
                .map(|j| run_joint(&j.instance, cfg))
                .collect();
        }
    }
    jobs.iter().map(|j| run_joint(&j.instance, cfg)).collect()
}

pub fn run(a: &FixArgs) -> CliResult {
    let cfg = a.pipeline.config()?;
    let jobs = load_jobs(a)?;
    if let Some(dir) = &a.emit_partial {
        fs::create_dir_all(dir)?;
    }
    let results = a.pipeline.with_pool(|| run_all(&jobs, &cfg))?;
    let mut records = Vec::with_capacity(jobs.len());
    for (job, result) in jobs.iter().zip(results) {
        let out = result.map_err(|e| match Failure::from(e) {
            Failure::Inconsistent(m) => Failure::Inconsistent(format!("{}: {m}", job.id)),
            other => other,
        })?;
        eprintln!(
            "{}: n={} fixed {}/{} ({:.2}%) in {} rounds, {:.3} ms",
            job.id,
            out.stats.n,
            out.stats.decided,
            out.stats.pair_count,
            out.stats.decided_percent(),
            out.stats.rounds,
            out.stats.total_nanos as f64 / 1e6
        );
        if let Some(dir) = &a.emit_partial {
            save_partial(
                &out.partial.to_partial(),
                dir.join(format!("{}.partial.csv", job.id)),
            )?;
        }
        records.push(StatsRecord {
            instance: job.id.clone(),
            stats: out.stats,
            provenance: job.provenance,
        });
    }
    write_records(&records, a.out.as_deref())?;
    if records.len() > 1 {
        let pct: Vec<f64> = records.iter().map(|r| r.stats.decided_percent()).collect();
        let secs: Vec<f64> = records
            .iter()
            .map(|r| r.stats.total_nanos as f64 / 1e9)
            .collect();
        eprintln!("{} instances", records.len());
        eprintln!("fixed percent, median (q25, q75): {}", summary(&pct));
        eprintln!("runtime seconds, median (q25, q75): {}", summary(&secs));
    }
    Ok(())
}
