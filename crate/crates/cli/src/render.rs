use std::collections::BTreeMap;

use ssp_core::Partition;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Style {
    Ferrers,
    Matrix,
}

pub fn render(p: &Partition, style: Style) -> Result<String, CliError> {
    match style {
        Style::Ferrers => ferrers(p),
        Style::Matrix => matrix(p),
    }
}

/// Rows of `#`, one per second coordinate, with row 0 printed last.
pub fn ferrers(p: &Partition) -> Result<String, CliError> {
    require_dim(p, 2, "ferrers")?;
    let mut rows: BTreeMap<u32, usize> = BTreeMap::new();
    for c in p.cells() {
        *rows.entry(c[1]).or_default() += 1;
    }
    let mut out = String::new();
    for len in rows.values().rev() {
        out.push_str(&"#".repeat(*len));
        out.push('\n');
    }
    Ok(out)
}

/// Stack heights along the third axis. Row `j` lists the heights of the
/// columns `(0, j), (1, j), ...`, without trailing zeros.
pub fn matrix(p: &Partition) -> Result<String, CliError> {
    require_dim(p, 3, "matrix")?;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for c in p.cells() {
        let (i, j) = (c[0] as usize, c[1] as usize);
        if rows.len() <= j {
            rows.resize(j + 1, Vec::new());
        }
        if rows[j].len() <= i {
            rows[j].resize(i + 1, 0);
        }
        rows[j][i] += 1;
    }
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    Ok(out)
}

fn require_dim(p: &Partition, needed: usize, style: &'static str) -> Result<(), CliError> {
    if p.dim() == needed {
        Ok(())
    } else {
        Err(CliError::UnsupportedDimension {
            style,
            needed,
            found: p.dim(),
        })
    }
}
