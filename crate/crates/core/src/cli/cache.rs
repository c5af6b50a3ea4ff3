//! On-disk cache of computed sequences.
//!
//! The file holds `{"version", "digest", "entries": [{h, v, n, value}]}`
//! where `digest` is the SHA-256 of the serialized entry list. A file that
//! fails to parse, has another version, a wrong digest, non-canonical values
//! or gaps in a sequence is rejected as a whole.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::QRat;
use crate::euler::CachedSequence;

const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    h: i64,
    v: u32,
    n: u32,
    value: QRat,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CacheFile {
    version: u32,
    digest: String,
    entries: Vec<Entry>,
}

fn digest(entries: &[Entry]) -> String {
    let bytes = serde_json::to_vec(entries).expect("entries serialize");
    hex::encode(Sha256::digest(&bytes))
}

/// Reads a cache file. `Ok(None)` means there is no file yet.
pub fn load(path: &Path) -> Result<Option<Vec<CachedSequence>>, String> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.to_string()),
    };
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if file.version != VERSION {
        return Err(format!("unsupported version {}", file.version));
    }
    if digest(&file.entries) != file.digest {
        return Err("digest mismatch".into());
    }
    let mut seqs: BTreeMap<(i64, u32), Vec<QRat>> = BTreeMap::new();
    for e in file.entries {
        if e.v == 0 {
            return Err("entry with order 0".into());
        }
        let seq = seqs.entry((e.h, e.v)).or_default();
        if seq.len() != e.n as usize {
            return Err(format!("gap in sequence h={} v={} at n={}", e.h, e.v, e.n));
        }
        seq.push(e.value);
    }
    Ok(Some(
        seqs.into_iter()
            .map(|((h, v), values)| CachedSequence { h, v, values })
            .collect(),
    ))
}

/// Writes the sequences, replacing any existing file.
pub fn save(path: &Path, seqs: &[CachedSequence]) -> io::Result<()> {
    let entries: Vec<Entry> = seqs
        .iter()
        .flat_map(|s| {
            s.values.iter().enumerate().map(|(n, value)| Entry {
                h: s.h,
                v: s.v,
                n: n as u32,
                value: value.clone(),
            })
        })
        .collect();
    let file = CacheFile {
        version: VERSION,
        digest: digest(&entries),
        entries,
    };
    let text = serde_json::to_string(&file).map_err(io::Error::other)?;
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::EulerEngine;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        assert_eq!(load(&path), Ok(None));

        let e = EulerEngine::new();
        let _ = e.numbers(1, 2, 4);
        let _ = e.numbers(-2, 1, 3);
        save(&path, &e.export()).unwrap();
        assert_eq!(load(&path).unwrap().unwrap(), e.export());

        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, &text[..text.len() / 2]).unwrap();
        assert!(load(&path).is_err());

        fs::write(&path, text.replacen("\"-2\"", "\"-3\"", 1)).unwrap();
        assert!(load(&path).is_err());
    }
}
