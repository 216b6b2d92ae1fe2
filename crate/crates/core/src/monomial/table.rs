use super::MonomialIdeal;
use crate::config::Caps;
use crate::Result;

/// Dense membership lookup for a monomial ideal over the box
/// `0..=ρ_j` per variable, where `ρ` is the lcm of the generators.
///
/// A coordinate at `ρ_j` stands for every exponent `>= ρ_j`: no generator
/// needs more, so the answer is the same. Getting `I_F` membership is then a
/// matter of pinning the coordinates in `F` to `ρ`.
#[derive(Debug, Clone)]
pub struct MembershipTable {
    rho: Vec<u32>,
    strides: Vec<usize>,
    cells: Vec<bool>,
}

impl MembershipTable {
    pub fn new(ideal: &MonomialIdeal, max_cells: usize) -> Result<MembershipTable> {
        let rho = ideal.lcm_exponents();
        let mut strides = vec![0; rho.len()];
        let mut total: usize = 1;
        for j in (0..rho.len()).rev() {
            strides[j] = total;
            total = total.saturating_mul(rho[j] as usize + 1);
        }
        Caps::check("membership box cells", total, max_cells)?;
        let mut cells = vec![false; total];
        for g in ideal.gens() {
            let idx: usize = g.exponents().iter().zip(&strides).map(|(&e, &s)| e as usize * s).sum();
            cells[idx] = true;
        }
        // upward closure, one axis at a time
        for j in 0..rho.len() {
            let stride = strides[j];
            let span = stride * (rho[j] as usize + 1);
            for block in (0..total).step_by(span) {
                for idx in block + stride..block + span {
                    if cells[idx - stride] {
                        cells[idx] = true;
                    }
                }
            }
        }
        Ok(MembershipTable { rho, strides, cells })
    }

    /// Lcm exponents `ρ`.
    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Flat index of an exponent vector, clamping each coordinate at `ρ_j`.
    pub fn index_of(&self, exps: &[u32]) -> usize {
        exps.iter()
            .zip(&self.rho)
            .zip(&self.strides)
            .map(|((&e, &cap), &s)| e.min(cap) as usize * s)
            .sum()
    }

    pub fn at(&self, index: usize) -> bool {
        self.cells[index]
    }

    pub fn contains(&self, exps: &[u32]) -> bool {
        self.cells[self.index_of(exps)]
    }
}
