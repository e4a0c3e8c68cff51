//! Exhaustive enumeration of the cells on a frame.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::cell::{Act, Cell, CellFrame};
use crate::error::{Error, Result};

/// Default bound on search nodes visited by one enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

static OVERRIDE: AtomicU64 = AtomicU64::new(0);
static FROM_ENV: OnceLock<u64> = OnceLock::new();

/// The active enumeration guard: a programmatic override, else `HVDC_MAX_ENUM`,
/// else [`DEFAULT_ENUMERATION_LIMIT`].
pub fn enumeration_limit() -> u64 {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => *FROM_ENV.get_or_init(|| {
            std::env::var("HVDC_MAX_ENUM")
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .filter(|&n| n > 0)
                .unwrap_or(DEFAULT_ENUMERATION_LIMIT)
        }),
        n => n,
    }
}

/// Overrides the enumeration guard for the whole process; `0` restores the default.
pub fn set_enumeration_limit(limit: u64) {
    OVERRIDE.store(limit, Ordering::Relaxed);
}

struct Search<'a> {
    frame: &'a CellFrame,
    domains: Vec<usize>,
    /// Constraints checked once the position is assigned (the later of `p`, `q`).
    checks: Vec<Vec<usize>>,
    /// A constraint `q = fp(φ[p])` with `p` earlier that fixes the value outright.
    forced: Vec<Option<usize>>,
    values: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn holds(&self, ci: usize) -> bool {
        let c = &self.frame.constraints()[ci];
        self.frame.apply(c.fp, self.values[c.p]) == self.frame.apply(c.fq, self.values[c.q])
    }

    fn run<F: FnMut(&[usize]) -> bool>(&mut self, k: usize, emit: &mut F) -> Result<bool> {
        if k == self.values.len() {
            return Ok(emit(&self.values));
        }
        let candidates = match self.forced[k] {
            Some(ci) => {
                let c = self.frame.constraints()[ci];
                let v = self.frame.apply(c.fp, self.values[c.p]);
                v..v + 1
            }
            None => 0..self.domains[k],
        };
        for v in candidates {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::EnumerationLimit { limit: self.limit });
            }
            self.values[k] = v;
            if (0..self.checks[k].len()).all(|i| self.holds(self.checks[k][i])) && !self.run(k + 1, emit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Visits every equivariant component family on `frame` in lexicographic
/// order of values; stops early when `visit` returns `false`.
pub fn for_each_cell<F>(frame: &Arc<CellFrame>, mut visit: F) -> Result<()>
where
    F: FnMut(Cell) -> bool,
{
    let n = frame.positions();
    let mut domains = vec![0; n];
    for (bi, b) in frame.blocks().iter().enumerate() {
        for d in &mut domains[b.offset..b.offset + b.len] {
            *d = frame.domain_of_block(bi);
        }
    }
    let mut checks = vec![Vec::new(); n];
    let mut forced = vec![None; n];
    for (ci, c) in frame.constraints().iter().enumerate() {
        let k = c.p.max(c.q);
        checks[k].push(ci);
        if c.q == k && c.p < k && c.fq == Act::Id && forced[k].is_none() {
            forced[k] = Some(ci);
        }
    }
    let mut search = Search {
        frame,
        domains,
        checks,
        forced,
        values: vec![0; n],
        nodes: 0,
        limit: enumeration_limit(),
    };
    search.run(0, &mut |vals: &[usize]| visit(Cell::from_raw(frame.clone(), vals.to_vec())))?;
    Ok(())
}

/// All cells on `frame`, in lexicographic order of component values.
pub fn enumerate_cells(frame: &Arc<CellFrame>) -> Result<Vec<Cell>> {
    let mut out = Vec::new();
    for_each_cell(frame, |c| {
        out.push(c);
        true
    })?;
    Ok(out)
}
