//! Finitely supported sequences on the lattice, with CSV and JSON formats.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::{BufRead, Write};

/// A finitely supported complex sequence on `Z^2`.
///
/// Values at unlisted points are zero. Iteration order is fixed
/// (lexicographic in `(k1, k2)`) so downstream sums are deterministic.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Sequence2D {
    entries: BTreeMap<(i64, i64), Complex64>,
}

#[derive(Serialize, Deserialize)]
struct Entry2D {
    k1: i64,
    k2: i64,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct SeqJson {
    entries: Vec<Entry2D>,
}

impl Sequence2D {
    pub fn new() -> Sequence2D {
        Sequence2D::default()
    }

    pub fn from_entries<I: IntoIterator<Item = ((i64, i64), Complex64)>>(it: I) -> Sequence2D {
        let mut s = Sequence2D::new();
        for (k, v) in it {
            s.insert(k.0, k.1, v);
        }
        s
    }

    /// Sets the value at `(k1, k2)`; inserting an exact zero removes the point.
    pub fn insert(&mut self, k1: i64, k2: i64, value: Complex64) {
        if value == Complex64::ZERO {
            self.entries.remove(&(k1, k2));
        } else {
            self.entries.insert((k1, k2), value);
        }
    }

    pub fn get(&self, k1: i64, k2: i64) -> Complex64 {
        self.entries.get(&(k1, k2)).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &Complex64)> {
        self.entries.iter()
    }

    pub fn scaled(&self, factor: Complex64) -> Sequence2D {
        Sequence2D::from_entries(self.entries.iter().map(|(k, v)| (*k, factor * v)))
    }

    pub fn sum(&self, other: &Sequence2D) -> Sequence2D {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            let cur = out.get(k.0, k.1);
            out.insert(k.0, k.1, cur + v);
        }
        out
    }

    /// Writes rows `k1,k2,re,im` with a header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "k1,k2,re,im")?;
        for ((k1, k2), v) in &self.entries {
            writeln!(w, "{},{},{},{}", k1, k2, v.re, v.im)?;
        }
        Ok(())
    }

    /// Reads rows `k1,k2,re,im`; a leading header line is accepted.
    pub fn read_csv<R: BufRead>(r: R) -> std::io::Result<Sequence2D> {
        let mut s = Sequence2D::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || (i == 0 && line.starts_with("k1")) {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            let bad = || {
                std::io::Error::new(
                    std::io::ErrorKind::InvalidData,
                    format!("bad sequence row: {line:?}"),
                )
            };
            if fields.len() != 4 {
                return Err(bad());
            }
            let k1: i64 = fields[0].trim().parse().map_err(|_| bad())?;
            let k2: i64 = fields[1].trim().parse().map_err(|_| bad())?;
            let re: f64 = fields[2].trim().parse().map_err(|_| bad())?;
            let im: f64 = fields[3].trim().parse().map_err(|_| bad())?;
            s.insert(k1, k2, Complex64::new(re, im));
        }
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        let j = SeqJson {
            entries: self
                .entries
                .iter()
                .map(|((k1, k2), v)| Entry2D {
                    k1: *k1,
                    k2: *k2,
                    re: v.re,
                    im: v.im,
                })
                .collect(),
        };
        serde_json::to_string(&j).expect("sequence serialization cannot fail")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Sequence2D> {
        let j: SeqJson = serde_json::from_str(s)?;
        Ok(Sequence2D::from_entries(
            j.entries
                .into_iter()
                .map(|e| ((e.k1, e.k2), Complex64::new(e.re, e.im))),
        ))
    }
}

/// A finitely supported complex sequence on `Z`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Sequence1D {
    entries: BTreeMap<i64, Complex64>,
}

impl Sequence1D {
    pub fn new() -> Sequence1D {
        Sequence1D::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (i64, Complex64)>>(it: I) -> Sequence1D {
        let mut s = Sequence1D::new();
        for (k, v) in it {
            s.insert(k, v);
        }
        s
    }

    pub fn insert(&mut self, k: i64, value: Complex64) {
        if value == Complex64::ZERO {
            self.entries.remove(&k);
        } else {
            self.entries.insert(k, value);
        }
    }

    pub fn get(&self, k: i64) -> Complex64 {
        self.entries.get(&k).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Complex64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
