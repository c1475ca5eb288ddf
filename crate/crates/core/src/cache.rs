//! Memoized store for the computed bases (P, I), norms and chain
//! coefficients, plus the on-disk JSON form that makes cache files
//! human-diffable golden files.
//!
//! Population happens lazily behind shared references; values are immutable
//! once inserted and always reproduce what a fresh computation returns.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{text, Field, Mode, Scalar};
use crate::macdonald::{self, ChainCoefficients};
use crate::partition::{enumerate_partitions, OrderVariant, Partition};
use crate::sympoly::{CoeffJson, SymPoly, SymPolyJson};

pub struct BasisCache {
    n: usize,
    field: Field,
    order: OrderVariant,
    p: RefCell<BTreeMap<Partition, Rc<SymPoly>>>,
    i: RefCell<BTreeMap<Partition, Rc<SymPoly>>>,
    norms: RefCell<BTreeMap<Partition, Scalar>>,
    chains: RefCell<BTreeMap<Partition, Rc<ChainCoefficients>>>,
    p_zero: RefCell<BTreeMap<Partition, Scalar>>,
}

impl BasisCache {
    pub fn new(n: usize, field: Field) -> Self {
        BasisCache::with_order(n, field, OrderVariant::Standard)
    }

    pub fn with_order(n: usize, field: Field, order: OrderVariant) -> Self {
        BasisCache {
            n,
            field,
            order,
            p: RefCell::new(BTreeMap::new()),
            i: RefCell::new(BTreeMap::new()),
            norms: RefCell::new(BTreeMap::new()),
            chains: RefCell::new(BTreeMap::new()),
            p_zero: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> OrderVariant {
        self.order
    }

    pub fn p(&self, lambda: &Partition) -> Result<Rc<SymPoly>> {
        if let Some(v) = self.p.borrow().get(lambda) {
            return Ok(v.clone());
        }
        let poly = Rc::new(macdonald::macdonald_p(lambda, self.n, &self.field)?);
        self.p.borrow_mut().insert(lambda.clone(), poly.clone());
        Ok(poly)
    }

    pub fn i(&self, mu: &Partition) -> Result<Rc<SymPoly>> {
        if let Some(v) = self.i.borrow().get(mu) {
            return Ok(v.clone());
        }
        let poly = Rc::new(macdonald::interpolation_i(mu, self.n, self.order, &self.field)?);
        self.i.borrow_mut().insert(mu.clone(), poly.clone());
        Ok(poly)
    }

    pub fn chain(&self, mu: &Partition) -> Result<Rc<ChainCoefficients>> {
        if let Some(v) = self.chains.borrow().get(mu) {
            return Ok(v.clone());
        }
        let chain = Rc::new(macdonald::chain_coefficients(mu, self.n, &self.field)?);
        self.chains.borrow_mut().insert(mu.clone(), chain.clone());
        Ok(chain)
    }

    pub fn norm(&self, mu: &Partition) -> Result<Scalar> {
        if let Some(v) = self.norms.borrow().get(mu) {
            return Ok(v.clone());
        }
        let value = macdonald::norm_i(mu, self)?;
        self.norms.borrow_mut().insert(mu.clone(), value.clone());
        Ok(value)
    }

    pub fn p_at_zero(&self, lambda: &Partition) -> Result<Scalar> {
        if let Some(v) = self.p_zero.borrow().get(lambda) {
            return Ok(v.clone());
        }
        let value = self.p(lambda)?.eval_at(&Partition::empty(), &self.field);
        self.p_zero.borrow_mut().insert(lambda.clone(), value.clone());
        Ok(value)
    }

    /// Populates every entry for partitions of size up to `max_size`.
    /// Returns (objects computed, objects already present).
    pub fn build(&self, max_size: u32) -> Result<(usize, usize)> {
        let mut computed = 0;
        let mut hits = 0;
        let parts = enumerate_partitions(max_size, self.n);
        for lam in &parts {
            let mut miss = false;
            if !self.p.borrow().contains_key(lam) {
                miss = true;
            }
            self.p(lam)?;
            self.p_at_zero(lam)?;
            if !self.i.borrow().contains_key(lam) {
                miss = true;
            }
            self.i(lam)?;
            if !self.chains.borrow().contains_key(lam) {
                miss = true;
            }
            self.chain(lam)?;
            if !self.norms.borrow().contains_key(lam) {
                miss = true;
            }
            self.norm(lam)?;
            if miss {
                computed += 1;
            } else {
                hits += 1;
            }
        }
        Ok((computed, hits))
    }

    pub fn counts(&self) -> CacheCounts {
        CacheCounts {
            p: self.p.borrow().len(),
            i: self.i.borrow().len(),
            norms: self.norms.borrow().len(),
            chains: self.chains.borrow().len(),
        }
    }

    // -- persistence --------------------------------------------------------

    pub fn to_file_json(&self) -> CacheFileJson {
        let (mode, q0, t0) = mode_strings(&self.field);
        CacheFileJson {
            n: self.n,
            mode,
            q0,
            t0,
            order: order_name(self.order).to_string(),
            p: poly_entries(&self.p.borrow()),
            i: poly_entries(&self.i.borrow()),
            norms: self
                .norms
                .borrow()
                .iter()
                .map(|(k, v)| ScalarEntry {
                    partition: k.parts().to_vec(),
                    value: CoeffJson::of(v),
                })
                .collect(),
            chains: self
                .chains
                .borrow()
                .iter()
                .map(|(k, ch)| ChainEntry {
                    partition: k.parts().to_vec(),
                    coeffs: ch
                        .coeffs
                        .iter()
                        .map(|(nu, c)| ScalarEntry {
                            partition: nu.parts().to_vec(),
                            value: CoeffJson::of(c),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        std::fs::create_dir_all(dir)
            .map_err(|e| Error::Invalid(format!("cannot create cache dir: {e}")))?;
        let path = dir.join(cache_file_name(self.n, &self.field, self.order));
        let json = serde_json::to_string_pretty(&self.to_file_json())
            .map_err(|e| Error::Invalid(format!("cache serialization failed: {e}")))?;
        std::fs::write(&path, json + "\n")
            .map_err(|e| Error::Invalid(format!("cannot write cache file: {e}")))?;
        Ok(path)
    }

    /// Loads entries from an existing cache file for the same configuration,
    /// if one is present. Returns the number of objects loaded.
    pub fn load(&self, dir: &Path) -> Result<usize> {
        let path = dir.join(cache_file_name(self.n, &self.field, self.order));
        if !path.exists() {
            return Ok(0);
        }
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Invalid(format!("cannot read cache file: {e}")))?;
        let json: CacheFileJson = serde_json::from_str(&text)
            .map_err(|e| Error::Invalid(format!("malformed cache file {}: {e}", path.display())))?;
        let (mode, q0, t0) = mode_strings(&self.field);
        if json.n != self.n || json.mode != mode || json.q0 != q0 || json.t0 != t0
            || json.order != order_name(self.order)
        {
            return Err(Error::Invalid(format!(
                "cache file {} does not match the requested configuration",
                path.display()
            )));
        }
        let mut loaded = 0;
        for entry in &json.p {
            let lam = Partition::new(entry.partition.clone());
            let poly = Rc::new(entry.poly.parse(&self.field)?);
            self.p.borrow_mut().insert(lam, poly);
            loaded += 1;
        }
        for entry in &json.i {
            let lam = Partition::new(entry.partition.clone());
            let poly = Rc::new(entry.poly.parse(&self.field)?);
            self.i.borrow_mut().insert(lam, poly);
            loaded += 1;
        }
        for entry in &json.norms {
            let lam = Partition::new(entry.partition.clone());
            self.norms.borrow_mut().insert(lam, entry.value.parse(&self.field)?);
            loaded += 1;
        }
        for entry in &json.chains {
            let mu = Partition::new(entry.partition.clone());
            let mut coeffs = BTreeMap::new();
            for c in &entry.coeffs {
                coeffs.insert(Partition::new(c.partition.clone()), c.value.parse(&self.field)?);
            }
            let chain = ChainCoefficients { mu: mu.clone(), n: self.n, coeffs };
            self.chains.borrow_mut().insert(mu, Rc::new(chain));
            loaded += 1;
        }
        Ok(loaded)
    }

    /// Recomputes a few small entries from scratch and compares them against
    /// the cached values; guards against stale or corrupted cache files.
    pub fn spot_check(&self) -> Result<()> {
        for lam in enumerate_partitions(1.min(2), self.n) {
            if let Some(cached) = self.p.borrow().get(&lam) {
                let fresh = macdonald::macdonald_p(&lam, self.n, &self.field)?;
                if fresh != **cached {
                    return Err(Error::Inconsistent(format!(
                        "cached P_{lam} differs from fresh computation"
                    )));
                }
            }
            if let Some(cached) = self.i.borrow().get(&lam) {
                let fresh = macdonald::interpolation_i(&lam, self.n, self.order, &self.field)?;
                if fresh != **cached {
                    return Err(Error::Inconsistent(format!(
                        "cached I_{lam} differs from fresh computation"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CacheCounts {
    pub p: usize,
    pub i: usize,
    pub norms: usize,
    pub chains: usize,
}

pub fn order_name(order: OrderVariant) -> &'static str {
    match order {
        OrderVariant::Standard => "standard",
        OrderVariant::Conjugate => "conjugate",
    }
}

fn mode_strings(field: &Field) -> (String, Option<String>, Option<String>) {
    match &field.mode {
        Mode::Symbolic => ("symbolic".to_string(), None, None),
        Mode::Numeric { q0, t0 } => (
            "numeric".to_string(),
            Some(text::render_rat(q0)),
            Some(text::render_rat(t0)),
        ),
    }
}

/// File name carrying everything that keys a cache: n, mode (with the
/// numeric point), and order variant.
pub fn cache_file_name(n: usize, field: &Field, order: OrderVariant) -> String {
    let mode_key = match &field.mode {
        Mode::Symbolic => "symbolic".to_string(),
        Mode::Numeric { q0, t0 } => format!(
            "numeric-q{}_{}-t{}_{}",
            q0.numer(),
            q0.denom(),
            t0.numer(),
            t0.denom()
        ),
    };
    format!("cache-n{}-{}-{}.json", n, mode_key, order_name(order))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyEntry {
    pub partition: Vec<u32>,
    pub poly: SymPolyJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalarEntry {
    pub partition: Vec<u32>,
    pub value: CoeffJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainEntry {
    pub partition: Vec<u32>,
    pub coeffs: Vec<ScalarEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheFileJson {
    pub n: usize,
    pub mode: String,
    pub q0: Option<String>,
    pub t0: Option<String>,
    pub order: String,
    pub p: Vec<PolyEntry>,
    pub i: Vec<PolyEntry>,
    pub norms: Vec<ScalarEntry>,
    pub chains: Vec<ChainEntry>,
}

fn poly_entries(map: &BTreeMap<Partition, Rc<SymPoly>>) -> Vec<PolyEntry> {
    map.iter()
        .map(|(k, v)| PolyEntry {
            partition: k.parts().to_vec(),
            poly: SymPolyJson::of(v),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn cached_entries_match_fresh() {
        let field = Field::symbolic();
        let cache = BasisCache::new(2, field.clone());
        cache.build(3).unwrap();
        for lam in enumerate_partitions(3, 2) {
            let fresh = macdonald::macdonald_p(&lam, 2, &field).unwrap();
            assert_eq!(*cache.p(&lam).unwrap(), fresh);
            let fresh = macdonald::interpolation_i(&lam, 2, OrderVariant::Standard, &field).unwrap();
            assert_eq!(*cache.i(&lam).unwrap(), fresh);
        }
        cache.spot_check().unwrap();
    }

    #[test]
    fn save_load_round_trip() {
        let field = Field::symbolic();
        let dir = std::env::temp_dir().join(format!("macd-cache-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);

        let cache = BasisCache::new(2, field.clone());
        cache.build(3).unwrap();
        let path = cache.save(&dir).unwrap();
        let first = std::fs::read_to_string(&path).unwrap();

        let reloaded = BasisCache::new(2, field.clone());
        let loaded = reloaded.load(&dir).unwrap();
        assert!(loaded > 0);
        reloaded.spot_check().unwrap();
        assert_eq!(*reloaded.p(&p(&[2])).unwrap(), *cache.p(&p(&[2])).unwrap());
        assert_eq!(
            reloaded.norm(&p(&[1, 1])).unwrap(),
            cache.norm(&p(&[1, 1])).unwrap()
        );

        // saving the reloaded cache reproduces the file byte for byte
        let path2 = reloaded.save(&dir).unwrap();
        let second = std::fs::read_to_string(&path2).unwrap();
        assert_eq!(first, second);

        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn load_rejects_mismatched_config() {
        let field = Field::symbolic();
        let dir = std::env::temp_dir().join(format!("macd-cache-mismatch-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let cache = BasisCache::new(2, field.clone());
        cache.build(1).unwrap();
        let path = cache.save(&dir).unwrap();
        // tamper with the stored n
        let text = std::fs::read_to_string(&path).unwrap();
        let tampered = text.replace("\"n\": 2", "\"n\": 3");
        std::fs::write(&path, tampered).unwrap();
        let reloaded = BasisCache::new(2, field);
        assert!(reloaded.load(&dir).is_err());
        let _ = std::fs::remove_dir_all(&dir);
    }
}
