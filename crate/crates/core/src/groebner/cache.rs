//! On-disk cache of finished Gröbner bases.
//!
//! Entries are keyed by a SHA-256 digest of the engine version, the
//! coefficient domain, the monomial order, the truncation degree and the
//! canonical text of every generator. Only complete bases are stored.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::poly::{format_canonical, read_poly_list, write_poly_list, Coefficient};

use super::{GbStats, GroebnerBasis, IdealBasis};

/// Bumped whenever a change could alter a computed basis.
pub const ENGINE_VERSION: &str = "psdef-gb-2";

#[derive(Clone, Debug)]
pub struct GbCache {
    dir: PathBuf,
}

impl GbCache {
    pub fn new(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(GbCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key<C: Coefficient>(ideal: &IdealBasis<C>, truncation: Option<u32>) -> String {
        let mut h = Sha256::new();
        h.update(ENGINE_VERSION.as_bytes());
        h.update(format!("\n{}\n{}\n{}\n", C::DOMAIN, ideal.ring.num_vars, ideal.ring.order.name()));
        h.update(match truncation {
            Some(k) => format!("trunc {k}\n"),
            None => "trunc none\n".to_string(),
        });
        for g in &ideal.generators {
            h.update(format_canonical(g).as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.gb"))
    }

    pub fn load<C: Coefficient>(&self, ideal: &IdealBasis<C>, truncation: Option<u32>) -> Option<GroebnerBasis<C>> {
        let text = fs::read_to_string(self.path(&Self::key(ideal, truncation))).ok()?;
        let (ring, basis, meta) = read_poly_list::<C>(&text).ok()?;
        let want = match truncation {
            Some(k) => format!("truncation {k}"),
            None => "truncation none".to_string(),
        };
        if !meta.contains(&want) {
            return None;
        }
        Some(GroebnerBasis { ring, basis, truncation, reduced: true, incomplete: None, stats: GbStats::default() })
    }

    /// Writes a complete basis; incomplete ones are ignored.
    pub fn store<C: Coefficient>(&self, ideal: &IdealBasis<C>, gb: &GroebnerBasis<C>) -> io::Result<()> {
        if !gb.is_complete() {
            return Ok(());
        }
        let mut text = write_poly_list(gb.ring, &gb.basis);
        text.push_str(&format!("% engine {ENGINE_VERSION}\n"));
        text.push_str(&match gb.truncation {
            Some(k) => format!("% truncation {k}\n"),
            None => "% truncation none\n".to_string(),
        });
        let path = self.path(&Self::key(ideal, gb.truncation));
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(tmp, path)
    }

    /// Cached basis if present, otherwise computes and stores it.
    pub fn get_or_compute<C: Coefficient, E>(
        &self,
        ideal: &IdealBasis<C>,
        truncation: Option<u32>,
        compute: impl FnOnce() -> Result<GroebnerBasis<C>, E>,
    ) -> Result<(GroebnerBasis<C>, bool), E> {
        if let Some(gb) = self.load(ideal, truncation) {
            return Ok((gb, true));
        }
        let gb = compute()?;
        let _ = self.store(ideal, &gb);
        Ok((gb, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger_field;
    use crate::poly::{parse_poly, Ring, F2};

    #[test]
    fn round_trip_and_key_sensitivity() {
        let dir = tempfile::tempdir().unwrap();
        let cache = GbCache::new(dir.path()).unwrap();
        let r = Ring::grevlex(2);
        let ideal = IdealBasis::new(r, vec![parse_poly::<F2>(r, "x0^2 + x1").unwrap()], "t").unwrap();
        let gb = buchberger_field(&ideal, Some(3));
        cache.store(&ideal, &gb).unwrap();
        let back = cache.load(&ideal, Some(3)).unwrap();
        assert_eq!(back.basis, gb.basis);
        assert!(cache.load(&ideal, Some(4)).is_none());
        assert_ne!(GbCache::key(&ideal, Some(3)), GbCache::key(&ideal, None));
    }
}
