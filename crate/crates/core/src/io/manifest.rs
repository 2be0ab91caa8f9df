use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use super::{parse_polynomial, read_dfa, write_dfa};
use crate::automata::{Dfa, Word};
use crate::enumeration::NumerationSystem;
use crate::error::{Error, Result};
use crate::pipeline::{Polynomial, SystemBundle};

pub const SYSTEM_FILE: &str = "system.dfa";
pub const RECOGNIZER_FILE: &str = "recognizer.dfa";
const MANIFEST_FILE: &str = "manifest.txt";

/// The `key: value` description of a bundle directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub polynomial: Polynomial,
    pub s: BigUint,
    pub alpha: usize,
    pub system_file: String,
    pub recognizer_file: String,
    /// `(value, rendered word)` pairs.
    pub exceptional: Vec<(BigUint, String)>,
}

impl Manifest {
    pub fn from_bundle(b: &SystemBundle) -> Self {
        Manifest {
            polynomial: b.polynomial.clone(),
            s: b.s.clone(),
            alpha: b.alpha,
            system_file: SYSTEM_FILE.into(),
            recognizer_file: RECOGNIZER_FILE.into(),
            exceptional: b
                .exceptional
                .iter()
                .map(|(v, w)| (v.clone(), b.system.alphabet().render(w)))
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        let exceptional: Vec<String> = self.exceptional.iter().map(|(v, w)| format!("{v}={w}")).collect();
        format!(
            "polynomial: {}\ns: {}\nalpha: {}\nsystem_file: {}\nrecognizer_file: {}\nexceptional: {}\n",
            self.polynomial.to_coefficient_list(),
            self.s,
            self.alpha,
            self.system_file,
            self.recognizer_file,
            exceptional.join(";")
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut fields: Vec<(usize, &str, &str)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let (k, v) = raw
                .split_once(':')
                .ok_or_else(|| Error::Format { line: idx + 1, msg: "expected `key: value`".into() })?;
            fields.push((idx + 1, k.trim(), v.trim()));
        }
        let end = text.lines().count() + 1;
        let get = |key: &str| {
            fields
                .iter()
                .find(|(_, k, _)| *k == key)
                .map(|&(line, _, v)| (line, v))
                .ok_or_else(|| Error::Format { line: end, msg: format!("missing key `{key}`") })
        };
        let bad = |line: usize, what: &str| Error::Format { line, msg: format!("bad {what}") };
        let (line, poly) = get("polynomial")?;
        let polynomial = parse_polynomial(poly).map_err(|e| Error::Format { line, msg: e.to_string() })?;
        let (line, s) = get("s")?;
        let s = s.parse().map_err(|_| bad(line, "s"))?;
        let (line, alpha) = get("alpha")?;
        let alpha = alpha.parse().map_err(|_| bad(line, "alpha"))?;
        let (line, exc) = get("exceptional")?;
        let mut exceptional = Vec::new();
        for pair in exc.split(';').filter(|p| !p.is_empty()) {
            let (v, w) = pair.split_once('=').ok_or_else(|| bad(line, "exceptional pair"))?;
            exceptional.push((v.trim().parse().map_err(|_| bad(line, "exceptional value"))?, w.trim().to_string()));
        }
        Ok(Manifest {
            polynomial,
            s,
            alpha,
            system_file: get("system_file")?.1.to_string(),
            recognizer_file: get("recognizer_file")?.1.to_string(),
            exceptional,
        })
    }
}

/// A bundle directory read back from disk.
#[derive(Clone, Debug)]
pub struct LoadedBundle {
    pub manifest: Manifest,
    pub system: Dfa,
    pub recognizer: Dfa,
}

impl LoadedBundle {
    /// Decoded exceptional words, each checked to have its recorded rank.
    pub fn exceptional_words(&self) -> Result<Vec<(BigUint, Word)>> {
        let sys = NumerationSystem::new(self.system.clone())?;
        self.manifest
            .exceptional
            .iter()
            .map(|(v, text)| {
                let w = self.system.alphabet().parse_word(text)?;
                let r = sys.rank(&w)?;
                if &r != v {
                    return Err(Error::Format {
                        line: 0,
                        msg: format!("exceptional word {text:?} has rank {r}, not {v}"),
                    });
                }
                Ok((v.clone(), w))
            })
            .collect()
    }
}

pub fn save_bundle(b: &SystemBundle, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let m = Manifest::from_bundle(b);
    write_dfa(&dir.join(&m.system_file), b.system.dfa())?;
    write_dfa(&dir.join(&m.recognizer_file), &b.recognizer)?;
    fs::write(dir.join(MANIFEST_FILE), m.render())?;
    Ok(())
}

pub fn load_bundle(dir: &Path) -> Result<LoadedBundle> {
    let path: PathBuf = dir.join(MANIFEST_FILE);
    let text = fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let manifest = Manifest::parse(&text)?;
    let system = read_dfa(&dir.join(&manifest.system_file))?;
    let recognizer = read_dfa(&dir.join(&manifest.recognizer_file))?;
    Ok(LoadedBundle { manifest, system, recognizer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::build_system;

    #[test]
    fn manifest_round_trip() {
        let b = build_system(&Polynomial::from_integers(&[5, -2, -3, 0, 1])).unwrap();
        let m = Manifest::from_bundle(&b);
        assert_eq!(Manifest::parse(&m.render()).unwrap(), m);
        assert!(m.render().contains("polynomial: 1,0,-3,-2,5\n"));
        assert!(m.render().starts_with("polynomial"));
    }

    #[test]
    fn manifest_errors() {
        assert!(matches!(Manifest::parse("s: 1\n"), Err(Error::Format { .. })));
        assert!(matches!(
            Manifest::parse("polynomial: 1\ns: x\n"),
            Err(Error::Format { line: 2, .. })
        ));
    }
}
