//! One CSV row per processed instance, with a fixed column set.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use preorder_core::conditions::{ConditionId, RunStats};

use crate::failure::{CliResult, Failure};

/// Generator parameters echoed into the stats row when known.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Provenance {
    pub alpha: Option<f64>,
    pub p_e: Option<f64>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StatsRecord {
    pub instance: String,
    pub stats: RunStats,
    pub provenance: Provenance,
}

fn column_stem(c: ConditionId) -> String {
    c.name().replace('-', "_")
}

pub fn header() -> Vec<String> {
    let mut cols: Vec<String> = ["instance", "n", "pairs", "fixed", "fixed_percent", "rounds"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for c in ConditionId::ALL {
        let stem = column_stem(c);
        cols.push(format!("{stem}_zeros"));
        cols.push(format!("{stem}_ones"));
        cols.push(format!("{stem}_ns"));
    }
    cols.extend(
        ["total_ns", "alpha", "p_e", "seed"]
            .iter()
            .map(|s| s.to_string()),
    );
    cols
}

impl StatsRecord {
    pub fn row(&self) -> Vec<String> {
        let s = &self.stats;
        let mut row = vec![
            self.instance.clone(),
            s.n.to_string(),
            s.pair_count.to_string(),
            s.decided.to_string(),
            s.decided_percent().to_string(),
            s.rounds.to_string(),
        ];
        for c in ConditionId::ALL {
            match s.per_condition.iter().find(|x| x.condition == c) {
                Some(x) => {
                    row.push(x.zeros.to_string());
                    row.push(x.ones.to_string());
                    row.push(x.nanos.to_string());
                }
                None => row.extend(["0", "0", "0"].iter().map(|s| s.to_string())),
            }
        }
        row.push(s.total_nanos.to_string());
        let p = &self.provenance;
        row.push(p.alpha.map(|v| v.to_string()).unwrap_or_default());
        row.push(p.p_e.map(|v| v.to_string()).unwrap_or_default());
        row.push(p.seed.map(|v| v.to_string()).unwrap_or_default());
        row
    }
}

/// Writes the rows to `path`, appending when it already holds a matching header,
/// or to stdout when `path` is `None`.
pub fn write_records(records: &[StatsRecord], path: Option<&Path>) -> CliResult {
    let expected = header().join(",");
    let (sink, with_header): (Box<dyn Write>, bool) = match path {
        None => (Box::new(io::stdout().lock()), true),
        Some(path) => {
            let existing = match File::open(path) {
                Ok(f) => BufReader::new(f).lines().next().transpose()?,
                Err(e) if e.kind() == io::ErrorKind::NotFound => None,
                Err(e) => return Err(e.into()),
            };
            if let Some(first) = &existing {
                if first.trim_end() != expected {
                    return Err(Failure::Data(format!(
                        "{} has a different stats header; refusing to append",
                        path.display()
                    )));
                }
            }
            let f = OpenOptions::new().create(true).append(true).open(path)?;
            (Box::new(f), existing.is_none())
        }
    };
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(sink);
    if with_header {
        w.write_record(header())?;
    }
    for r in records {
        w.write_record(r.row())?;
    }
    w.flush()?;
    Ok(())
}

/// Linearly interpolated quantile of sorted data.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// `median (q25, q75)` of the values.
pub fn summary(values: &[f64]) -> String {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    format!(
        "{:.2} ({:.2}, {:.2})",
        quantile(&v, 0.5),
        quantile(&v, 0.25),
        quantile(&v, 0.75)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantiles_interpolate() {
        let v = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile(&v, 0.5), 2.5);
        assert_eq!(quantile(&v, 0.25), 1.75);
        assert_eq!(quantile(&v, 1.0), 4.0);
        assert_eq!(quantile(&[7.0], 0.75), 7.0);
    }

    #[test]
    fn header_and_row_align() {
        let stats = RunStats {
            n: 3,
            pair_count: 6,
            decided: 2,
            rounds: 1,
            per_condition: vec![],
            total_nanos: 5,
        };
        let r = StatsRecord {
            instance: "a".into(),
            stats,
            provenance: Provenance::default(),
        };
        assert_eq!(r.row().len(), header().len());
    }
}
