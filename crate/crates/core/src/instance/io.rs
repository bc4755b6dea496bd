//! Instance CSV: a line `n=<count>`, then the header `p,q,c`, then one row per
//! listed pair. Unlisted pairs have value 0. Values are written with the
//! shortest representation that parses back to the same bits.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use super::Instance;
use crate::error::{Error, Result};

pub fn save_instance(inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_instance(inst, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn write_instance<W: Write>(inst: &Instance, w: W) -> Result<()> {
    let rows = inst
        .pairs()
        .filter(|&(p, q)| inst.value(p, q).to_bits() != 0)
        .map(|(p, q)| (p, q, inst.value(p, q).to_string()));
    write_table(w, inst.n(), "c", rows)
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    read_instance(File::open(path)?, path)
}

/// Parses an instance; `origin` is only used in error messages.
pub fn read_instance<R: Read>(r: R, origin: impl AsRef<Path>) -> Result<Instance> {
    let origin = origin.as_ref();
    let table = read_table(r, origin, "c")?;
    let mut inst = Instance::zeros(table.n).map_err(|e| parse_err(origin, 1, e.to_string()))?;
    for row in table.rows {
        let v: f64 = row
            .field
            .trim()
            .parse()
            .map_err(|_| parse_err(origin, row.line, format!("bad value `{}`", row.field)))?;
        if !v.is_finite() {
            return Err(Error::NonFinite((row.p, row.q)));
        }
        inst.set(row.p, row.q, v)?;
    }
    Ok(inst)
}

pub(crate) struct TableRow {
    pub line: usize,
    pub p: usize,
    pub q: usize,
    pub field: String,
}

pub(crate) struct Table {
    pub n: usize,
    pub rows: Vec<TableRow>,
}

pub(crate) fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: PathBuf::from(path),
        line,
        msg: msg.into(),
    }
}

pub(crate) fn write_table<W: Write>(
    mut w: W,
    n: usize,
    value_header: &str,
    rows: impl Iterator<Item = (usize, usize, String)>,
) -> Result<()> {
    writeln!(w, "n={n}")?;
    let mut csv = csv::Writer::from_writer(w);
    let to_io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    csv.write_record(["p", "q", value_header]).map_err(to_io)?;
    for (p, q, v) in rows {
        csv.write_record([p.to_string(), q.to_string(), v])
            .map_err(to_io)?;
    }
    csv.flush()?;
    Ok(())
}

/// Reads the `n=` line and the `p,q,<value_header>` table. Checks indices,
/// the diagonal and duplicates; leaves the value field to the caller.
pub(crate) fn read_table<R: Read>(r: R, path: &Path, value_header: &str) -> Result<Table> {
    let mut reader = BufReader::new(r);
    let mut first = String::new();
    reader.read_line(&mut first)?;
    let n: usize = first
        .trim()
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| parse_err(path, 1, "expected `n=<count>` on the first line"))?;
    if n == 0 {
        return Err(parse_err(path, 1, "element count must be positive"));
    }
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = csv
        .headers()
        .map_err(|e| parse_err(path, 2, e.to_string()))?
        .clone();
    if header.iter().collect::<Vec<_>>() != ["p", "q", value_header] {
        return Err(parse_err(
            path,
            2,
            format!("expected header `p,q,{value_header}`"),
        ));
    }
    let mut seen = vec![false; n * n];
    let mut rows = Vec::new();
    for rec in csv.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize + 1);
            parse_err(path, line, e.to_string())
        })?;
        // +1 for the `n=` line that the csv reader never saw
        let line = rec.position().map_or(0, |p| p.line() as usize + 1);
        if rec.len() != 3 {
            return Err(parse_err(
                path,
                line,
                format!("expected 3 fields, found {}", rec.len()),
            ));
        }
        let idx = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(path, line, format!("bad element index `{s}`")))
        };
        let (p, q) = (idx(&rec[0])?, idx(&rec[1])?);
        crate::preorder::check_pair(n, p, q)?;
        if std::mem::replace(&mut seen[p * n + q], true) {
            return Err(Error::DuplicatePair {
                path: PathBuf::from(path),
                line,
                pair: (p, q),
            });
        }
        rows.push(TableRow {
            line,
            p,
            q,
            field: rec[2].to_string(),
        });
    }
    Ok(Table { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{generate_synthetic, GeneratorConfig};

    fn parse(s: &str) -> Result<Instance> {
        read_instance(s.as_bytes(), "mem")
    }

    #[test]
    fn unlisted_pairs_default_to_zero() {
        let inst = parse("n=2\np,q,c\n0,1,2.0\n").unwrap();
        assert_eq!(inst.value(0, 1), 2.0);
        assert_eq!(inst.value(1, 0), 0.0);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse("n=2\np,q,c\n0,0,5\n"),
            Err(Error::Diagonal(0))
        ));
        assert!(matches!(
            parse("n=2\np,q,c\n0,1,1\n0,1,2\n"),
            Err(Error::DuplicatePair { line: 4, .. })
        ));
        assert!(matches!(
            parse("n=2\np,q,c\n0,1,NaN\n"),
            Err(Error::NonFinite((0, 1)))
        ));
        assert!(matches!(
            parse("n=2\np,q,c\n0,1,x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse("n=2\np,q,c\n0,2,1\n"),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            parse("p,q,c\n0,1,1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse("n=2\np,q,c\n0,1\n").is_err());
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let cfg = GeneratorConfig {
            n: 40,
            p_e: 0.3,
            alpha: 0.7,
            seed: 3,
        };
        let (inst, _) = generate_synthetic(&cfg).unwrap();
        let mut buf = Vec::new();
        write_instance(&inst, &mut buf).unwrap();
        let back = read_instance(buf.as_slice(), "mem").unwrap();
        for (p, q) in inst.pairs() {
            assert_eq!(inst.value(p, q).to_bits(), back.value(p, q).to_bits());
        }
    }

    #[test]
    fn negative_zero_survives() {
        let mut inst = Instance::zeros(2).unwrap();
        inst.set(0, 1, -0.0).unwrap();
        let mut buf = Vec::new();
        write_instance(&inst, &mut buf).unwrap();
        let back = read_instance(buf.as_slice(), "mem").unwrap();
        assert_eq!(back.value(0, 1).to_bits(), (-0.0f64).to_bits());
    }
}
