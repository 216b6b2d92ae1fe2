use std::collections::BTreeSet;

use super::{MembershipTable, Monomial, MonomialIdeal};
use crate::config::Caps;
use crate::{Error, Result};

/// `Ass(R/I)` by exhaustive search: the primes among the colons `I : m`.
///
/// `I : m` only depends on `min(m_i, lcm_i)`, so `m` ranges over the box
/// below the lcm of the generators. Each prime is returned as its sorted
/// variable support; the list is sorted.
pub fn associated_primes_bruteforce(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidIdeal("associated primes need a proper nonzero ideal".into()));
    }
    let r = ideal.nvars();
    Caps::check("variables", r, caps.max_vars)?;
    let table = MembershipTable::new(ideal, caps.max_box_cells)?;
    let rho = table.rho().to_vec();
    let mut found = BTreeSet::new();
    let mut m = vec![0u32; r];
    let mut bumped = vec![0u32; r];
    loop {
        if !table.contains(&m) {
            if let Some(vars) = prime_support(ideal, &table, &m, &mut bumped) {
                found.insert(vars);
            }
        }
        // odometer over 0..=rho
        let mut j = r;
        loop {
            if j == 0 {
                return Ok(found.into_iter().collect());
            }
            j -= 1;
            if m[j] < rho[j] {
                m[j] += 1;
                break;
            }
            m[j] = 0;
        }
    }
}

fn prime_support(ideal: &MonomialIdeal, table: &MembershipTable, m: &[u32], bumped: &mut [u32]) -> Option<Vec<usize>> {
    bumped.copy_from_slice(m);
    let mut vars = Vec::new();
    for j in 0..m.len() {
        bumped[j] += 1;
        if table.contains(bumped) {
            vars.push(j);
        }
        bumped[j] -= 1;
    }
    if vars.is_empty() {
        return None;
    }
    // I:m ⊆ (x_V) iff every generator of I:m involves some x_j, j ∈ V
    let inside = ideal
        .gens()
        .iter()
        .all(|g| vars.iter().any(|&j| g.exponents()[j] > m[j]));
    inside.then_some(vars)
}

/// Whether `I : m` is a prime generated by variables, and which.
pub fn is_prime_colon(ideal: &MonomialIdeal, m: &Monomial) -> Option<Vec<usize>> {
    ideal.colon(m).as_variable_prime()
}
