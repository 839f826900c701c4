use crate::compositions::is_partition;
use crate::error::{Error, Result};

/// A semistandard filling of the skew shape `outer / inner`.
///
/// Rows are stored bottom row first (French convention); `rows[r]` holds the
/// entries of cells `inner[r]..outer[r]` of row `r`, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    outer: Vec<u32>,
    inner: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn outer(&self) -> &[u32] {
        &self.outer
    }

    pub fn inner(&self) -> &[u32] {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at row `r`, column `c` (both 0-based), if that cell is filled.
    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        let start = *self.inner.get(r)? as usize;
        if c < start {
            return None;
        }
        self.rows.get(r)?.get(c - start).copied()
    }

    /// Exponent vector of `x^T` in `n` variables.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut w = vec![0; n];
        for &v in self.rows.iter().flatten() {
            w[v as usize - 1] += 1;
        }
        w
    }

    /// Rows weakly increase and columns strictly increase upward.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.rows.len()).all(|r| {
            (self.inner[r] as usize..self.outer[r] as usize).all(|c| {
                match (self.entry(r - 1, c), self.entry(r, c)) {
                    (Some(below), Some(here)) => below < here,
                    _ => true,
                }
            })
        });
        rows_ok && cols_ok
    }
}

/// Checks that `outer` is a partition and `inner` (trailing zeros allowed)
/// fits inside it; returns `inner` padded to the length of `outer`.
pub(crate) fn validate_shape(outer: &[u32], inner: &[u32]) -> Result<Vec<u32>> {
    let show = |p: &[u32]| p.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    if !is_partition(outer) {
        return Err(Error::NotAPartition(show(outer)));
    }
    let end = inner.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
    let trimmed = &inner[..end];
    if !trimmed.is_empty() && !is_partition(trimmed) {
        return Err(Error::NotAPartition(show(inner)));
    }
    if trimmed.len() > outer.len() || trimmed.iter().zip(outer).any(|(i, o)| i > o) {
        return Err(Error::NotContained { inner: show(inner), outer: show(outer) });
    }
    let mut padded = trimmed.to_vec();
    padded.resize(outer.len(), 0);
    Ok(padded)
}

/// Every semistandard tableau of shape `outer / inner` with entries in `1..=n`,
/// in lexicographic order of the filling read row by row from the bottom.
pub fn generate_ssyt(outer: &[u32], inner: &[u32], n: u32) -> Result<Vec<Tableau>> {
    let inner = validate_shape(outer, inner)?;
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner[r] as usize..outer[r] as usize).map(move |c| (r, c)))
        .collect();
    let mut fill: Vec<Vec<Option<u32>>> =
        outer.iter().map(|&o| vec![None; o as usize]).collect();
    let mut out = Vec::new();
    backtrack(&cells, 0, n, &mut fill, &mut |fill| {
        let rows = (0..outer.len())
            .map(|r| fill[r][inner[r] as usize..].iter().map(|v| v.expect("filled")).collect())
            .collect();
        out.push(Tableau { outer: outer.to_vec(), inner: inner.clone(), rows });
    });
    Ok(out)
}

type Fill = Vec<Vec<Option<u32>>>;

fn backtrack(
    cells: &[(usize, usize)],
    at: usize,
    n: u32,
    fill: &mut Fill,
    emit: &mut dyn FnMut(&Fill),
) {
    let Some(&(r, c)) = cells.get(at) else {
        emit(fill);
        return;
    };
    let mut lo = 1;
    if c > 0 {
        if let Some(left) = fill[r][c - 1] {
            lo = lo.max(left);
        }
    }
    if r > 0 {
        if let Some(below) = fill[r - 1].get(c).copied().flatten() {
            lo = lo.max(below + 1);
        }
    }
    for v in lo..=n {
        fill[r][c] = Some(v);
        backtrack(cells, at + 1, n, fill, emit);
    }
    fill[r][c] = None;
}
