//! Simplicial complexes, joins and reduced homology over a field.

mod io;
mod rank;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};

pub use io::parse_facets;
pub use rank::rank;

/// Coefficient field for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    #[default]
    Rationals,
    Prime(u32),
}

impl Field {
    /// A validated prime field.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q` or `gf:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse { line: 0, message: format!("unknown field `{s}`") })?;
        Field::prime(p)
    }
}

/// A finite simplicial complex given by its facets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    universe: Vec<usize>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn from_facets(universe: &[usize], facets: &[Vec<usize>]) -> Result<Self> {
        let universe: Vec<usize> = universe.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut sets: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for f in facets {
            let s: Vec<usize> = f.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
            if let Some(&v) = s.iter().find(|v| universe.binary_search(v).is_err()) {
                return Err(Error::FacetOutsideUniverse(v));
            }
            sets.push(s);
        }
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for s in sets {
            if !kept.iter().any(|k| is_subset(&s, k)) {
                kept.push(s);
            }
        }
        kept.sort();
        Ok(SimplicialComplex { universe, facets: kept })
    }

    pub fn void(universe: &[usize]) -> Self {
        Self::from_facets(universe, &[]).expect("no facets")
    }

    pub fn irrelevant(universe: &[usize]) -> Self {
        Self::from_facets(universe, &[Vec::new()]).expect("empty facet")
    }

    /// Builds a complex from faces given as bitmasks over `universe`.
    pub fn from_face_masks(universe: &[usize], faces: impl IntoIterator<Item = u64>) -> Result<Self> {
        let facets: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|m| {
                (0..universe.len())
                    .filter(|&i| m >> i & 1 == 1)
                    .map(|i| universe[i])
                    .collect()
            })
            .collect();
        Self::from_facets(universe, &facets)
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mut s = face.to_vec();
        s.sort_unstable();
        s.dedup();
        self.facets.iter().any(|f| is_subset(&s, f))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.universe.iter().any(|v| other.universe.binary_search(v).is_ok()) {
            return Err(Error::OverlappingUniverses);
        }
        let universe: Vec<usize> = self.universe.iter().chain(&other.universe).copied().collect();
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.iter().chain(g).copied().collect());
            }
        }
        Self::from_facets(&universe, &facets)
    }

    pub fn is_cone(&self) -> Option<usize> {
        let first = self.facets.first()?;
        first
            .iter()
            .copied()
            .find(|v| self.facets.iter().all(|f| f.binary_search(v).is_ok()))
    }

    fn masks(&self, caps: &Caps) -> Result<Vec<u64>> {
        Caps::check("complex vertices", self.universe.len(), 64)?;
        let pos: HashMap<usize, usize> = self.universe.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut out = BTreeSet::new();
        for f in &self.facets {
            Caps::check("faces", 1usize.checked_shl(f.len() as u32).unwrap_or(usize::MAX), caps.max_faces)?;
            let m = f.iter().fold(0u64, |m, v| m | 1 << pos[v]);
            let mut sub = m;
            loop {
                out.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
            Caps::check("faces", out.len(), caps.max_faces)?;
        }
        Ok(out.into_iter().collect())
    }

    /// Number of faces of each dimension, starting at −1.
    pub fn f_vector(&self, caps: &Caps) -> Result<Vec<usize>> {
        let masks = self.masks(caps)?;
        let mut fv = Vec::new();
        for m in masks {
            let k = m.count_ones() as usize;
            if fv.len() <= k {
                fv.resize(k + 1, 0);
            }
            fv[k] += 1;
        }
        Ok(fv)
    }

    pub fn reduced_homology_dims(&self, field: Field, caps: &Caps) -> Result<HomologyDims> {
        let masks = self.masks(caps)?;
        Ok(HomologyDims(reduced_homology_of_faces(&masks, field)))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        write!(f, "<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = facet.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", parts.join(","))?;
        }
        write!(f, ">")
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Reduced Betti numbers, entry `k` is the dimension of the homology in degree `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyDims(pub Vec<usize>);

impl HomologyDims {
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.0.get(k).copied()).unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// Degrees with nonzero homology.
    pub fn support(&self) -> Vec<isize> {
        (0..self.0.len()).filter(|&k| self.0[k] != 0).map(|k| k as isize - 1).collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Reduced homology of the complex whose faces are `faces`. The list must be
/// closed under taking subsets and free of duplicates; an empty list is the
/// void complex.
pub fn reduced_homology_of_faces(faces: &[u64], field: Field) -> Vec<usize> {
    if faces.is_empty() {
        return vec![0];
    }
    let top = faces.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &m in faces {
        by_size[m.count_ones() as usize].push(m);
    }
    for layer in &mut by_size {
        layer.sort_unstable();
    }
    // ranks[k] is the rank of the boundary from k-element faces to (k-1)-element faces
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<u64, usize> = by_size[k - 1].iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let cols = &by_size[k];
        let mut mat = vec![vec![0i64; cols.len()]; by_size[k - 1].len()];
        for (c, &m) in cols.iter().enumerate() {
            let mut sign = 1i64;
            let mut bits = m;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                mat[index[&(m ^ b)]][c] = sign;
                sign = -sign;
                bits ^= b;
            }
        }
        ranks[k] = rank(&mat, field);
    }
    (0..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[usize]]) -> SimplicialComplex {
        let fs: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        let u: Vec<usize> = fs.iter().flatten().copied().collect();
        SimplicialComplex::from_facets(&u, &fs).unwrap()
    }

    fn dims(c: &SimplicialComplex) -> HomologyDims {
        c.reduced_homology_dims(Field::Rationals, &Caps::default()).unwrap()
    }

    #[test]
    fn pruning_and_states() {
        assert_eq!(cx(&[&[1, 2], &[1]]).facets(), &[vec![1, 2]]);
        assert_eq!(cx(&[&[2, 4], &[1, 3]]).facets(), &[vec![1, 3], vec![2, 4]]);
        let irr = SimplicialComplex::irrelevant(&[1, 2]);
        let void = SimplicialComplex::void(&[1, 2]);
        assert!(irr.is_irrelevant() && !irr.is_void());
        assert!(void.is_void() && !void.is_irrelevant());
        assert_ne!(irr, void);
        assert_eq!(
            SimplicialComplex::from_facets(&[1], &[vec![2]]),
            Err(Error::FacetOutsideUniverse(2))
        );
    }

    #[test]
    fn joins() {
        let a = cx(&[&[1], &[3]]);
        let b = cx(&[&[2], &[4]]);
        let sq = a.join(&b).unwrap();
        assert_eq!(sq, cx(&[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]));
        assert_eq!(a.join(&SimplicialComplex::irrelevant(&[])).unwrap(), a);
        assert_eq!(a.join(&a), Err(Error::OverlappingUniverses));
        let cone = cx(&[&[1]]).join(&cx(&[&[2], &[3]])).unwrap();
        assert_eq!(cone.is_cone(), Some(1));
    }

    #[test]
    fn homology_examples() {
        assert_eq!(dims(&SimplicialComplex::irrelevant(&[1])).0, vec![1]);
        assert!(dims(&SimplicialComplex::void(&[1])).is_acyclic());
        let sq = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(dims(&sq).0, vec![0, 0, 1]);
        assert_eq!(dims(&cx(&[&[1], &[2]])).0, vec![0, 1]);
        assert_eq!(sq.is_cone(), None);
        assert_eq!(cx(&[&[1, 2], &[1, 3]]).is_cone(), Some(1));
        assert_eq!(cx(&[&[1]]).is_cone(), Some(1));
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        let rp2: &[&[usize]] = &[
            &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
            &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
        ];
        let c = cx(rp2);
        assert!(dims(&c).is_acyclic());
        let d2 = c.reduced_homology_dims(Field::Prime(2), &Caps::default()).unwrap();
        assert_eq!(d2.support(), vec![1, 2]);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("gf:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("gf:8".parse::<Field>(), Err(Error::NotPrime(8)));
        assert!("r".parse::<Field>().is_err());
    }
}
