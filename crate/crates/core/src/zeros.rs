//! Tables of zeta-zero ordinates: parsing, structural validation, counting.

use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// A table whose first ordinate is above this cannot be a complete table
/// from height 0: the lowest ordinate is 14.1347.
const ANCHOR_MAX_FIRST: f64 = 14.2;

#[derive(Clone, Debug)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source_label: String,
    anchored_at_zero: bool,
}

impl ZeroTable {
    /// Build from an in-memory ordinate list; same validation as [`load_zeros`].
    pub fn from_ordinates(ordinates: Vec<f64>, source_label: impl Into<String>) -> Result<Self> {
        if ordinates.is_empty() {
            return Err(Error::domain("zero table is empty"));
        }
        for (i, &g) in ordinates.iter().enumerate() {
            if !(g > 0.0) {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("ordinate {g} is not positive"),
                });
            }
            if i > 0 && g <= ordinates[i - 1] {
                return Err(Error::Order { line: i + 1 });
            }
        }
        let anchored_at_zero = ordinates[0] <= ANCHOR_MAX_FIRST;
        Ok(ZeroTable {
            ordinates,
            source_label: source_label.into(),
            anchored_at_zero,
        })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn height(&self) -> f64 {
        *self.ordinates.last().expect("table is never empty")
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    /// True when the table plausibly contains every zero from height 0 up;
    /// counting operations refuse tables without this.
    pub fn anchored_at_zero(&self) -> bool {
        self.anchored_at_zero
    }
}

/// Parse a text stream: one decimal ordinate per line, '#' comments and
/// blank lines skipped, strictly ascending.
pub fn load_zeros<R: BufRead>(reader: R, source_label: &str) -> Result<ZeroTable> {
    let mut ordinates = Vec::new();
    let mut prev: Option<f64> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let s = line.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let g: f64 = s.parse().map_err(|e| Error::Parse {
            line: lineno,
            msg: format!("{e}: {s:?}"),
        })?;
        if !(g > 0.0) || !g.is_finite() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("ordinate {g} is not a positive finite number"),
            });
        }
        if let Some(p) = prev {
            // equality rejected too: zeros are simple, a duplicate means a corrupt file
            if g <= p {
                return Err(Error::Order { line: lineno });
            }
        }
        prev = Some(g);
        ordinates.push(g);
    }
    if ordinates.is_empty() {
        return Err(Error::domain(format!("no ordinates in {source_label}")));
    }
    let anchored_at_zero = ordinates[0] <= ANCHOR_MAX_FIRST;
    Ok(ZeroTable {
        ordinates,
        source_label: source_label.to_string(),
        anchored_at_zero,
    })
}

pub fn load_zeros_from_path(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let file = std::fs::File::open(path)?;
    load_zeros(
        std::io::BufReader::new(file),
        &path.display().to_string(),
    )
}

/// Write the table back out in the same format; ordinates are printed with
/// shortest round-trip formatting, so load(serialize(t)) == t bitwise.
pub fn serialize<W: Write>(table: &ZeroTable, mut out: W) -> Result<()> {
    writeln!(out, "# {}", table.source_label())?;
    for g in table.ordinates() {
        writeln!(out, "{g}")?;
    }
    Ok(())
}

/// N(T): ordinates ≤ T, valid only for tables anchored at height 0.
pub fn count_zeros(table: &ZeroTable, t: f64) -> Result<usize> {
    if !table.anchored_at_zero() {
        return Err(Error::NotAnchored);
    }
    if t > table.height() {
        return Err(Error::HeightExceeded {
            t,
            height: table.height(),
        });
    }
    Ok(table.ordinates().partition_point(|&g| g <= t))
}

/// Count zeros in the open window (t−1, t+1) against the bound log t.
/// Returns (count, bound, count < bound).
pub fn window_count_check(table: &ZeroTable, t: f64) -> Result<(usize, f64, bool)> {
    if !(t > 50.0) || !(t <= table.height() - 1.0) {
        return Err(Error::domain(format!(
            "window center {t} outside (50, height-1]"
        )));
    }
    let g = table.ordinates();
    let lo = g.partition_point(|&v| v <= t - 1.0);
    let hi = g.partition_point(|&v| v < t + 1.0);
    let count = hi - lo;
    let bound = t.ln();
    Ok((count, bound, (count as f64) < bound))
}
