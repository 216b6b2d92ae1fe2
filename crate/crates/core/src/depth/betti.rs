use std::collections::BTreeSet;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::monomial::{MembershipTable, MonomialIdeal};
use crate::simplicial::{reduced_homology_of_faces, Field};

/// Depth of `R/I` from the multigraded Betti numbers of `I`, read off the
/// upper Koszul complexes `K^b = {F ⊆ supp b : x^{b−F} ∈ I}`.
pub fn betti_depth_crosscheck(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<usize> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidIdeal("expected a nonzero proper ideal".into()));
    }
    let r = ideal.nvars();
    Caps::check("variables", r, caps.max_vars.min(16))?;
    let table = MembershipTable::new(ideal, caps.max_box_cells)?;
    // nonzero Betti numbers live on the lcm lattice
    let values: Vec<Vec<u32>> = (0..r)
        .map(|j| {
            let mut v: BTreeSet<u32> = ideal.gens().iter().map(|g| g.exponents()[j]).collect();
            v.insert(0);
            v.into_iter().collect()
        })
        .collect();
    let cells = values.iter().map(Vec::len).fold(1usize, usize::saturating_mul);
    Caps::check("lcm lattice cells", cells, caps.max_box_cells)?;

    let strides = table.strides();
    let mut pos = vec![0usize; r];
    let mut pd: Option<usize> = None;
    let mut faces = Vec::new();
    'outer: loop {
        let b: Vec<u32> = (0..r).map(|j| values[j][pos[j]]).collect();
        let base = table.index_of(&b);
        if table.at(base) {
            let support: Vec<usize> = (0..r).filter(|&j| b[j] > 0).collect();
            faces.clear();
            for mask in 0u64..1 << support.len() {
                let idx = (0..support.len())
                    .filter(|&t| mask >> t & 1 == 1)
                    .fold(base, |idx, t| idx - strides[support[t]]);
                if table.at(idx) {
                    let full = (0..support.len())
                        .filter(|&t| mask >> t & 1 == 1)
                        .fold(0u64, |m, t| m | 1 << support[t]);
                    faces.push(full);
                }
            }
            let dims = reduced_homology_of_faces(&faces, field);
            if let Some(i) = dims.iter().rposition(|&d| d != 0) {
                pd = Some(pd.map_or(i, |p| p.max(i)));
            }
        }
        let mut j = r;
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            pos[j] += 1;
            if pos[j] < values[j].len() {
                break;
            }
            pos[j] = 0;
        }
    }
    let pd = pd.ok_or_else(|| Error::Internal("no nonzero Betti number".into()))?;
    Ok(r - 1 - pd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::monomial::Monomial;

    #[test]
    fn principal_and_maximal() {
        let caps = Caps::default();
        let i = MonomialIdeal::minimalize(2, vec![Monomial::new(vec![1, 1])]).unwrap();
        assert_eq!(betti_depth_crosscheck(&i, Field::Rationals, &caps).unwrap(), 1);
        assert_eq!(betti_depth_crosscheck(&MonomialIdeal::maximal(3), Field::Rationals, &caps).unwrap(), 0);
    }

    #[test]
    fn path_square() {
        let p4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let i = MonomialIdeal::edge_ideal(&p4);
        let caps = Caps::default();
        assert_eq!(betti_depth_crosscheck(&i, Field::Rationals, &caps).unwrap(), 2);
        assert_eq!(betti_depth_crosscheck(&i.power(2).unwrap(), Field::Rationals, &caps).unwrap(), 1);
    }
}
