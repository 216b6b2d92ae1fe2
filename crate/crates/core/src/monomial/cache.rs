use std::sync::{Arc, RwLock};

use super::MonomialIdeal;
use crate::Result;

/// Memoized powers `I^1, I^2, ...` of one ideal.
///
/// Readers share the lock; computing a new power takes it exclusively.
#[derive(Debug)]
pub struct PowerCache {
    powers: RwLock<Vec<Arc<MonomialIdeal>>>,
}

impl PowerCache {
    pub fn new(base: MonomialIdeal) -> PowerCache {
        PowerCache {
            powers: RwLock::new(vec![Arc::new(base)]),
        }
    }

    pub fn base(&self) -> Arc<MonomialIdeal> {
        self.get(1).expect("first power is stored at construction")
    }

    /// `I^n` for `n >= 1`.
    pub fn get(&self, n: usize) -> Result<Arc<MonomialIdeal>> {
        assert!(n >= 1, "powers start at 1");
        if let Some(p) = self.powers.read().unwrap_or_else(|e| e.into_inner()).get(n - 1) {
            return Ok(Arc::clone(p));
        }
        let mut powers = self.powers.write().unwrap_or_else(|e| e.into_inner());
        while powers.len() < n {
            let next = powers[powers.len() - 1].product(&powers[0])?;
            powers.push(Arc::new(next));
        }
        Ok(Arc::clone(&powers[n - 1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn matches_direct_powers() {
        let i = MonomialIdeal::edge_ideal(&Graph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap());
        let cache = PowerCache::new(i.clone());
        assert_eq!(*cache.get(3).unwrap(), i.power(3).unwrap());
        assert_eq!(*cache.get(2).unwrap(), i.power(2).unwrap());
        assert_eq!(*cache.base(), i);
    }
}
