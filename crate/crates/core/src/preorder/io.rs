//! Partial assignment CSV: `n=<count>`, header `p,q,x`, one row `p,q,{0|1}`
//! per decided pair. Undecided pairs are omitted.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::{Decision, PartialAssignment};
use crate::error::Result;
use crate::instance::io::{parse_err, read_table, write_table};

pub fn save_partial(x: &PartialAssignment, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_partial(x, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn write_partial<W: Write>(x: &PartialAssignment, w: W) -> Result<()> {
    let rows = x
        .entries()
        .into_iter()
        .map(|((p, q), v)| (p, q, if v { "1" } else { "0" }.to_string()));
    write_table(w, x.n(), "x", rows)
}

pub fn load_partial(path: impl AsRef<Path>) -> Result<PartialAssignment> {
    let path = path.as_ref();
    read_partial(File::open(path)?, path)
}

pub fn read_partial<R: Read>(r: R, origin: impl AsRef<Path>) -> Result<PartialAssignment> {
    let origin = origin.as_ref();
    let table = read_table(r, origin, "x")?;
    let mut x = PartialAssignment::new(table.n);
    for row in table.rows {
        let d = match row.field.trim() {
            "0" => Decision::Zero,
            "1" => Decision::One,
            other => {
                return Err(parse_err(
                    origin,
                    row.line,
                    format!("expected 0 or 1, found `{other}`"),
                ))
            }
        };
        x.set(row.p, row.q, d)?;
    }
    Ok(x)
}
