//! Content-addressed on-disk cache for reduced Groebner bases and minimal
//! resolutions. Entries are JSON files named by a SHA-256 key and carry a
//! checksum of their payload; a mismatch is treated as a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{AlgebraError, Result};
use crate::groebner::{FreeModule, GroebnerBasis, Ideal, Term, Vector};
use crate::monomial::{default_names, Monomial};
use crate::order::{ModuleOrder, TermOrder};
use crate::resolution::{Presentation, Resolution};

use super::ideal_file::parse_polynomial;

/// Everything that determines a cached result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CacheDescriptor {
    pub field: String,
    pub order: String,
    pub generators: Vec<String>,
    pub operation: String,
    pub params: Vec<String>,
}

impl CacheDescriptor {
    /// Generators are made monic, printed with default names, sorted and
    /// deduplicated, so different spellings of one generating set agree.
    pub fn for_ideal(ideal: &Ideal, operation: &str, params: &[String]) -> CacheDescriptor {
        let names = default_names(ideal.nvars());
        let mut generators: Vec<String> = ideal
            .generators()
            .iter()
            .map(|g| g.monic().to_string_with(&names))
            .collect();
        generators.sort();
        generators.dedup();
        CacheDescriptor {
            field: ideal.field().to_string(),
            order: format!("{}@{}", ideal.order().descriptor(), ideal.nvars()),
            generators,
            operation: operation.into(),
            params: params.to_vec(),
        }
    }
}

pub fn cache_key(d: &CacheDescriptor) -> String {
    let canonical = serde_json::to_string(d).expect("descriptor serializes");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

fn checksum(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    checksum: String,
    payload: String,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Cache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(Cache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// The stored payload, or `None` on a miss or a corrupt entry.
    pub fn load(&self, key: &str) -> Option<String> {
        let path = self.path(key);
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<Entry>(&text) {
            Ok(e) if e.key == key && e.checksum == checksum(&e.payload) => Some(e.payload),
            _ => {
                log::warn!("discarding corrupt cache entry {}", path.display());
                None
            }
        }
    }

    /// Atomic write via a temporary file in the cache directory.
    pub fn store(&self, key: &str, payload: &str) -> Result<()> {
        let entry = Entry {
            key: key.into(),
            checksum: checksum(payload),
            payload: payload.into(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&entry).expect("entry serializes").as_bytes())?;
        tmp.persist(self.path(key)).map_err(|e| AlgebraError::Io(e.error))?;
        Ok(())
    }

    /// Reduced Groebner basis of `ideal`, computed at most once.
    pub fn groebner(&self, ideal: &Ideal) -> Result<GroebnerBasis> {
        let key = cache_key(&CacheDescriptor::for_ideal(ideal, "groebner", &[]));
        let names = default_names(ideal.nvars());
        if let Some(payload) = self.load(&key) {
            let restored: Result<Vec<_>> = payload
                .lines()
                .map(|l| parse_polynomial(l, ideal.field(), ideal.order(), &names))
                .collect();
            match restored {
                Ok(elems) => return Ok(GroebnerBasis::trusted(ideal.field(), ideal.order(), elems)),
                Err(e) => log::warn!("cache entry {key} unreadable: {e}"),
            }
        }
        let gb = ideal.groebner();
        let payload: Vec<String> = gb.elements().iter().map(|g| g.to_string_with(&names)).collect();
        self.store(&key, &payload.join("\n"))?;
        Ok(gb)
    }

    /// Minimal free resolution of `B/J`, computed at most once.
    pub fn resolution(&self, ideal: &Ideal) -> Result<Resolution> {
        let key = cache_key(&CacheDescriptor::for_ideal(ideal, "resolution", &[]));
        if let Some(payload) = self.load(&key) {
            match serde_json::from_str::<ResolutionData>(&payload)
                .map_err(|e| AlgebraError::InvalidArgument(e.to_string()))
                .and_then(|d| d.restore(ideal))
            {
                Ok(res) => return Ok(res),
                Err(e) => log::warn!("cache entry {key} unreadable: {e}"),
            }
        }
        let res = Presentation::quotient(ideal)?.resolve()?;
        let data = ResolutionData::capture(&res);
        self.store(&key, &serde_json::to_string(&data).expect("resolution serializes"))?;
        Ok(res)
    }
}

type TermData = (String, Vec<u16>, u32);

#[derive(Serialize, Deserialize)]
struct ResolutionData {
    degrees: Vec<Vec<i64>>,
    maps: Vec<Vec<Vec<TermData>>>,
}

impl ResolutionData {
    fn capture(res: &Resolution) -> ResolutionData {
        ResolutionData {
            degrees: (0..=res.length()).map(|i| res.degrees(i).to_vec()).collect(),
            maps: (1..=res.length())
                .map(|i| {
                    res.map(i)
                        .iter()
                        .map(|v| {
                            v.terms
                                .iter()
                                .map(|t| (t.coeff.to_string(), t.mon.exps().to_vec(), t.comp))
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn restore(self, ideal: &Ideal) -> Result<Resolution> {
        let field = ideal.field();
        let base = TermOrder::revlex(ideal.nvars());
        let mut maps = Vec::new();
        for (k, cols) in self.maps.into_iter().enumerate() {
            let target = FreeModule::new(
                field,
                ModuleOrder::position_over_term(base.clone()),
                self.degrees.get(k).cloned().unwrap_or_default(),
            );
            let mut out: Vec<Vector> = Vec::new();
            for col in cols {
                let mut terms = Vec::new();
                for (c, e, comp) in col {
                    let q: BigRational = c
                        .parse()
                        .map_err(|_| AlgebraError::InvalidArgument(format!("bad coefficient {c:?}")))?;
                    terms.push(Term {
                        coeff: field.from_rational(&q)?,
                        mon: Monomial::from_exps(&e),
                        comp,
                    });
                }
                out.push(target.vector(terms));
            }
            maps.push(out);
        }
        Resolution::from_parts(field, &base, self.degrees, maps, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::ideal_file::{parse_ideal, ParseOptions};

    #[test]
    fn keys_are_canonical() {
        let a = parse_ideal("x1*x2 - x3^2", ParseOptions::default()).unwrap().ideal().unwrap();
        let b = parse_ideal("-x3^2 + x2*x1", ParseOptions::default()).unwrap().ideal().unwrap();
        let key = |i: &Ideal| cache_key(&CacheDescriptor::for_ideal(i, "groebner", &[]));
        assert_eq!(key(&a), key(&b));
        let c = parse_ideal("field: fp:32003\nx1*x2 - x3^2", ParseOptions::default())
            .unwrap()
            .ideal()
            .unwrap();
        assert_ne!(key(&a), key(&c));
    }

    #[test]
    fn round_trips_and_detects_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let j = parse_ideal("x1^2 - x2*x3\nx1*x2 - x3^2", ParseOptions::default())
            .unwrap()
            .ideal()
            .unwrap();
        let fresh = cache.groebner(&j).unwrap();
        let again = cache.groebner(&j).unwrap();
        assert_eq!(fresh.elements(), again.elements());

        let r1 = cache.resolution(&j).unwrap();
        let r2 = cache.resolution(&j).unwrap();
        assert_eq!(r1.betti_table(), r2.betti_table());
        assert!(r2.is_complex());
        for i in 1..=r1.length() {
            assert_eq!(r1.matrix(i), r2.matrix(i));
        }

        let key = cache_key(&CacheDescriptor::for_ideal(&j, "groebner", &[]));
        fs::write(cache.path(&key), "{\"key\":\"x\",\"checksum\":\"0\",\"payload\":\"\"}").unwrap();
        assert!(cache.load(&key).is_none());
        assert_eq!(cache.groebner(&j).unwrap().elements(), fresh.elements());
    }
}
