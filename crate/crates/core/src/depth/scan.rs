use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use super::{DegreeVector, DepthCertificate, ScanBox};
use crate::config::{Caps, OracleConfig};
use crate::error::{Error, Result};
use crate::monomial::{MembershipTable, MonomialIdeal};
use crate::simplicial::{reduced_homology_of_faces, Field};

/// Variables beyond this make the face bitsets impractical.
const MAX_SCAN_VARS: usize = 16;

/// Reduced homology memoized by face set.
#[derive(Debug)]
pub(crate) struct HomologyCache {
    field: Field,
    map: RwLock<HashMap<Vec<u64>, Arc<[usize]>>>,
}

impl HomologyCache {
    pub(crate) fn new(field: Field) -> Self {
        HomologyCache { field, map: RwLock::new(HashMap::new()) }
    }

    fn dims(&self, bits: &[u64], faces: &[u64]) -> Arc<[usize]> {
        if let Some(d) = self.map.read().unwrap_or_else(|e| e.into_inner()).get(bits) {
            return Arc::clone(d);
        }
        let d: Arc<[usize]> = reduced_homology_of_faces(faces, self.field).into();
        self.map
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .insert(bits.to_vec(), Arc::clone(&d));
        d
    }
}

#[derive(Debug, Clone)]
struct Witness {
    i: usize,
    alpha: Vec<i64>,
    dim: usize,
}

struct Scan<'a> {
    r: usize,
    rho: &'a [u32],
    strides: &'a [usize],
    table: &'a MembershipTable,
    cache: &'a HomologyCache,
}

impl Scan<'_> {
    /// Scans every `α` with `G_α = negative` whose first free coordinate is
    /// `lead`, returning the first `α` of least cohomological degree below `limit`.
    fn run(&self, negative: u64, lead: u32, mut limit: usize) -> Option<Witness> {
        let g = negative.count_ones() as usize;
        let free: Vec<usize> = (0..self.r).filter(|&j| negative >> j & 1 == 0).collect();
        if free.iter().any(|&j| self.rho[j] == 0) {
            return None;
        }
        let offset: usize = (0..self.r)
            .filter(|&j| negative >> j & 1 == 1)
            .map(|j| self.rho[j] as usize * self.strides[j])
            .sum();
        let words = ((1usize << self.r) / 64).max(1);
        let mut bits = vec![0u64; words];
        let mut faces: Vec<u64> = Vec::new();
        let mut stack: Vec<(u64, usize, usize)> = Vec::new();
        let mut alpha = vec![0u32; free.len()];
        alpha[0] = lead;
        let mut best: Option<Witness> = None;
        loop {
            let base = offset
                + free
                    .iter()
                    .zip(&alpha)
                    .map(|(&j, &a)| a as usize * self.strides[j])
                    .sum::<usize>();
            if !self.table.at(base) {
                bits.iter_mut().for_each(|w| *w = 0);
                faces.clear();
                stack.push((0, base, 0));
                while let Some((mask, idx, start)) = stack.pop() {
                    bits[(mask / 64) as usize] |= 1 << (mask % 64);
                    faces.push(mask);
                    for t in start..free.len() {
                        let j = free[t];
                        let next = idx + (self.rho[j] - alpha[t]) as usize * self.strides[j];
                        if !self.table.at(next) {
                            stack.push((mask | 1 << j, next, t + 1));
                        }
                    }
                }
                let dims = self.cache.dims(&bits, &faces);
                if let Some(k) = dims.iter().position(|&d| d != 0) {
                    if g + k < limit {
                        limit = g + k;
                        let mut full = vec![-1i64; self.r];
                        for (&j, &a) in free.iter().zip(&alpha) {
                            full[j] = i64::from(a);
                        }
                        best = Some(Witness { i: g + k, alpha: full, dim: dims[k] });
                        if k == 0 {
                            return best;
                        }
                    }
                }
            }
            // odometer over the free coordinates after the lead one
            let mut t = free.len();
            loop {
                t -= 1;
                if t == 0 {
                    return best;
                }
                alpha[t] += 1;
                if alpha[t] < self.rho[free[t]] {
                    break;
                }
                alpha[t] = 0;
            }
        }
    }
}

/// Subsets of `0..r` of size `g`, as masks, in lexicographic order of their
/// sorted element lists.
fn subsets_of_size(r: usize, g: usize) -> Vec<u64> {
    fn rec(r: usize, g: usize, start: usize, mask: u64, out: &mut Vec<u64>) {
        if g == 0 {
            out.push(mask);
            return;
        }
        for j in start..r {
            if r - j < g {
                break;
            }
            rec(r, g - 1, j + 1, mask | 1 << j, out);
        }
    }
    let mut out = Vec::new();
    rec(r, g, 0, 0, &mut out);
    out
}

/// Depth of `R/I` by scanning every degree in the finite box where the
/// local cohomology can be nonzero.
pub fn depth_bruteforce(ideal: &MonomialIdeal, config: &OracleConfig) -> Result<DepthCertificate> {
    let cache = HomologyCache::new(config.field);
    scan_with_cache(ideal, config, &cache)
}

pub(crate) fn scan_with_cache(
    ideal: &MonomialIdeal,
    config: &OracleConfig,
    cache: &HomologyCache,
) -> Result<DepthCertificate> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidIdeal("expected a nonzero proper ideal".into()));
    }
    let r = ideal.nvars();
    let caps = &config.caps;
    Caps::check("variables", r, caps.max_vars.min(MAX_SCAN_VARS))?;
    let table = MembershipTable::new(ideal, caps.max_box_cells)?;
    let scan_box = ScanBox::from_rho(table.rho());
    Caps::check("scan box cells", scan_box.cells(), caps.max_box_cells)?;
    let scan = Scan { r, rho: table.rho(), strides: table.strides(), table: &table, cache };

    let pool = if config.threads == 1 {
        None
    } else {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?,
        )
    };

    let mut best: Option<Witness> = None;
    for g in 0..r {
        let limit = best.as_ref().map_or(r + 1, |w| w.i);
        if limit <= g {
            break;
        }
        let mut tasks = Vec::new();
        for negative in subsets_of_size(r, g) {
            let lead = (0..r).find(|&j| negative >> j & 1 == 0).expect("g < r");
            tasks.extend((0..table.rho()[lead]).map(|v| (negative, v)));
        }
        let found: Vec<Option<Witness>> = match &pool {
            None => {
                let mut limit = limit;
                tasks
                    .iter()
                    .map(|&(neg, v)| {
                        let w = scan.run(neg, v, limit);
                        if let Some(w) = &w {
                            limit = w.i;
                        }
                        w
                    })
                    .collect()
            }
            Some(pool) => pool.install(|| tasks.par_iter().map(|&(neg, v)| scan.run(neg, v, limit)).collect()),
        };
        for w in found.into_iter().flatten() {
            if best.as_ref().is_none_or(|b| w.i < b.i) {
                best = Some(w);
            }
        }
    }
    let w = best.ok_or_else(|| Error::Internal("no nonvanishing local cohomology found".into()))?;
    Ok(DepthCertificate {
        depth: w.i,
        witness_i: w.i,
        witness_alpha: DegreeVector(w.alpha),
        homology_dim: w.dim,
        scan_box,
    })
}
