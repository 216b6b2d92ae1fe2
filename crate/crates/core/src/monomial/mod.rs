//! Monomials and monomial ideals with exact exponent arithmetic.

mod ass;
mod cache;
mod symbolic;
mod table;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

pub use ass::{associated_primes_bruteforce, is_prime_colon};
pub use cache::PowerCache;
pub use symbolic::SymbolicPower;
pub use table::MembershipTable;

/// Exponent vector `x^a` in `r` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn one(r: usize) -> Monomial {
        Monomial(vec![0; r])
    }

    pub fn var(r: usize, i: usize) -> Monomial {
        let mut e = vec![0; r];
        e[i] = 1;
        Monomial(e)
    }

    /// Squarefree product of the given variables.
    pub fn squarefree(r: usize, support: &[usize]) -> Monomial {
        let mut e = vec![0; r];
        for &i in support {
            e[i] = 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / gcd(self, other)`: exponents `max(a_i - b_i, 0)`.
    pub fn quotient_part(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Parses `x1^2*x2` style text; `1` is the unit monomial.
    pub fn parse(text: &str, r: usize) -> Result<Monomial> {
        let err = |message: String| Error::Parse { line: 1, message };
        let text = text.trim();
        let mut e = vec![0u32; r];
        if text == "1" {
            return Ok(Monomial(e));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| err(format!("factor `{factor}` does not start with x")))?;
            let (var, pow) = match body.split_once('^') {
                Some((v, p)) => (v, p.parse::<u32>().map_err(|_| err(format!("bad power in `{factor}`")))?),
                None => (body, 1),
            };
            let i: usize = var.parse().map_err(|_| err(format!("bad variable in `{factor}`")))?;
            if i == 0 || i > r {
                return Err(err(format!("variable x{i} outside x1..x{r}")));
            }
            e[i - 1] = e[i - 1].checked_add(pow).ok_or(Error::Overflow)?;
        }
        Ok(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Monomial ideal given by its minimal generators in lexicographic order.
/// No generators means the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    r: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Prunes `gens` to a minimal generating set.
    pub fn minimalize(r: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if let Some(bad) = gens.iter().find(|m| m.nvars() != r) {
            return Err(Error::DimensionMismatch { left: r, right: bad.nvars() });
        }
        Ok(Self::minimalize_unchecked(r, gens))
    }

    fn minimalize_unchecked(r: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
        gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        // only strictly lower degree can divide
        let mut lower = 0;
        let mut current_degree = None;
        for m in gens {
            if current_degree != Some(m.degree()) {
                lower = kept.len();
                current_degree = Some(m.degree());
            }
            if !kept[..lower].iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort_unstable();
        MonomialIdeal { r, gens: kept }
    }

    pub fn zero(r: usize) -> MonomialIdeal {
        MonomialIdeal { r, gens: Vec::new() }
    }

    pub fn unit(r: usize) -> MonomialIdeal {
        MonomialIdeal { r, gens: vec![Monomial::one(r)] }
    }

    /// The maximal ideal `(x_1, ..., x_r)`.
    pub fn maximal(r: usize) -> MonomialIdeal {
        Self::primes(r, &(0..r).collect::<Vec<_>>())
    }

    /// Prime ideal generated by the listed variables.
    pub fn primes(r: usize, vars: &[usize]) -> MonomialIdeal {
        Self::minimalize_unchecked(r, vars.iter().map(|&i| Monomial::var(r, i)).collect())
    }

    /// `I(G) = (x_i x_j | ij ∈ E(G))`.
    pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
        let r = g.vertex_count();
        let gens = g
            .edges()
            .into_iter()
            .map(|(u, v)| Monomial::squarefree(r, &[u, v]))
            .collect();
        Self::minimalize_unchecked(r, gens)
    }

    pub fn nvars(&self) -> usize {
        self.r
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.r == other.r {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.r, right: other.r })
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        Ok(Self::minimalize_unchecked(
            self.r,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::minimalize_unchecked(self.r, gens))
    }

    /// `I^n` for `n >= 1`, built as `I · I^(n-1)`.
    pub fn power(&self, n: usize) -> Result<MonomialIdeal> {
        if n == 0 {
            return Ok(Self::unit(self.r));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Generators are the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::minimalize_unchecked(self.r, gens))
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        Self::minimalize_unchecked(self.r, self.gens.iter().map(|g| g.quotient_part(m)).collect())
    }

    /// Sets `x_i = 1` for every `i` in `vars`.
    pub fn localize(&self, vars: &[usize]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.0.clone();
                for &i in vars {
                    e[i] = 0;
                }
                Monomial(e)
            })
            .collect();
        Self::minimalize_unchecked(self.r, gens)
    }

    /// Componentwise lcm of the generators.
    pub fn lcm_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.r];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(&g.0) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Places the ideal into `total` variables starting at `offset`.
    pub fn embed(&self, offset: usize, total: usize) -> Result<MonomialIdeal> {
        if offset + self.r > total {
            return Err(Error::DimensionMismatch { left: offset + self.r, right: total });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; total];
                e[offset..offset + self.r].copy_from_slice(&g.0);
                Monomial(e)
            })
            .collect();
        Ok(MonomialIdeal { r: total, gens })
    }

    /// Support of the ideal when every generator is a single variable.
    pub fn as_variable_prime(&self) -> Option<Vec<usize>> {
        let mut vars = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if g.degree() != 1 {
                return None;
            }
            vars.extend(g.support());
        }
        (!vars.is_empty()).then(|| {
            vars.sort_unstable();
            vars
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
