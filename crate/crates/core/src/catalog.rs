//! Built-in corpus of reference lattices plus JSON file ingestion.
//!
//! Catalog names are a stable public API. Euclidean entries are standard
//! root and unimodular lattices; Hermitian entries are the small lattices
//! over ℚ(√−d) that the certification pipelines build on. `Pc` (the rank-4
//! structure over ℚ(√−7) whose trace lattice is E8) was produced once by a
//! glue-vector search over L_K ⊥ L_K and is locked in as a fixture; its
//! pin-down checks rerun in the test suite.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermitian::{HermLattice, HermLatticeJson};
use crate::matrix::RatMat;
use crate::number_field::QuadField;
use crate::rat::{self, Rational};
use crate::zlattice::{ZLattice, ZLatticeJson};

/// Euclidean or Hermitian payload of a catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub enum LatticeData {
    Euclidean(ZLattice),
    Hermitian(HermLattice),
}

impl LatticeData {
    pub fn rank(&self) -> usize {
        match self {
            LatticeData::Euclidean(l) => l.rank(),
            LatticeData::Hermitian(l) => l.rank(),
        }
    }

    pub fn as_euclidean(&self) -> Option<&ZLattice> {
        match self {
            LatticeData::Euclidean(l) => Some(l),
            LatticeData::Hermitian(_) => None,
        }
    }

    pub fn as_hermitian(&self) -> Option<&HermLattice> {
        match self {
            LatticeData::Hermitian(l) => Some(l),
            LatticeData::Euclidean(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// The Gram matrix is printed in the source text digit-for-digit.
    Paper,
    /// Constructed here (standard lattices, fixtures, user files).
    Derived,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub data: LatticeData,
    pub provenance: Provenance,
    pub notes: String,
}

pub const CATALOG_NAMES: &[&str] = &[
    "A2", "D4", "E8", "A2perpA2", "Leech", "Pb", "T", "Pa", "Pc", "LK-d1", "LK-d2", "LK-d3",
    "LK-d7a", "LK-d7b", "LK-d11a", "LK-d11b",
];

/// Fetches a validated catalog entry by name.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let entry = match name {
        "A2" => euclidean(name, a2(), Provenance::Derived, "hexagonal root lattice"),
        "D4" => euclidean(name, d4(), Provenance::Derived, "root lattice D4"),
        "E8" => euclidean(name, e8(), Provenance::Derived, "root lattice E8"),
        "A2perpA2" => euclidean(
            name,
            a2().orthogonal_sum(&a2()),
            Provenance::Derived,
            "orthogonal sum of two hexagonal lattices",
        ),
        "Leech" => euclidean(
            name,
            leech(),
            Provenance::Derived,
            "Leech lattice; pinned by even, det 1, min 4",
        ),
        "Pb" => hermitian(name, pb(), Provenance::Paper, "Barnes lattice over Z[(1+sqrt(-7))/2]"),
        "T" => hermitian(
            name,
            t_lattice(),
            Provenance::Paper,
            "2-dimensional unimodular Hermitian lattice over Z[(1+sqrt(-11))/2]",
        ),
        "Pa" => hermitian(
            name,
            pa(),
            Provenance::Paper,
            "densest 2-dimensional Hermitian lattice over Z[(1+sqrt(-7))/2]",
        ),
        "Pc" => hermitian(
            name,
            pc(),
            Provenance::Derived,
            "rank-4 Hermitian structure over Z[(1+sqrt(-7))/2] with trace lattice E8; \
             fixture from a glue-vector search",
        ),
        "LK-d1" => hermitian(name, lk(1, (1, 2, -1, 2)), Provenance::Paper, "densest 2-dim over Z[i]"),
        "LK-d2" => hermitian(name, lk(2, (1, 2, 1, 2)), Provenance::Paper, "densest 2-dim over Z[sqrt(-2)]"),
        "LK-d3" => hermitian(name, lk(3, (0, 1, -1, 3)), Provenance::Paper, "densest 2-dim over Eisenstein integers"),
        "LK-d7a" => hermitian(name, lk(7, (0, 1, -2, 7)), Provenance::Paper, "deep hole 2/sqrt(-7)"),
        "LK-d7b" => hermitian(name, lk(7, (1, 2, 3, 14)), Provenance::Paper, "deep hole (7+3sqrt(-7))/14"),
        "LK-d11a" => hermitian(name, lk(11, (0, 1, -3, 11)), Provenance::Paper, "deep hole 3/sqrt(-11)"),
        "LK-d11b" => hermitian(name, lk(11, (1, 2, 5, 22)), Provenance::Paper, "deep hole (11+5sqrt(-11))/22"),
        _ => {
            return Err(Error::UnknownCatalog {
                name: name.to_string(),
                available: CATALOG_NAMES.join(", "),
            })
        }
    };
    Ok(entry)
}

fn euclidean(name: &str, l: ZLattice, provenance: Provenance, notes: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        data: LatticeData::Euclidean(l),
        provenance,
        notes: notes.to_string(),
    }
}

fn hermitian(name: &str, l: HermLattice, provenance: Provenance, notes: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        data: LatticeData::Hermitian(l),
        provenance,
        notes: notes.to_string(),
    }
}

fn a2() -> ZLattice {
    ZLattice::from_int_rows(&[&[2, 1], &[1, 2]]).expect("A2 Gram")
}

fn d4() -> ZLattice {
    ZLattice::from_int_rows(&[
        &[2, -1, 0, 0],
        &[-1, 2, -1, -1],
        &[0, -1, 2, 0],
        &[0, -1, 0, 2],
    ])
    .expect("D4 Gram")
}

fn e8() -> ZLattice {
    // Simple-root basis: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
    let edges = [(0usize, 2usize), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut g = RatMat::zero(8, 8);
    for i in 0..8 {
        g[(i, i)] = rat::rat(2);
    }
    for (a, b) in edges {
        g[(a, b)] = rat::rat(-1);
        g[(b, a)] = rat::rat(-1);
    }
    ZLattice::new(g).expect("E8 Gram")
}

/// Generator rows of the binary Golay code (24, 12): the cyclic length-23
/// quadratic-residue code with generator polynomial
/// 1 + x² + x⁴ + x⁵ + x⁶ + x¹⁰ + x¹¹, extended by an overall parity bit.
fn golay_generators() -> Vec<[u8; 24]> {
    const G: [usize; 7] = [0, 2, 4, 5, 6, 10, 11];
    (0..12)
        .map(|shift| {
            let mut row = [0u8; 24];
            for &e in &G {
                row[e + shift] = 1;
            }
            let weight: u8 = row[..23].iter().sum();
            row[23] = weight % 2;
            row
        })
        .collect()
}

/// Leech lattice in the 1/√8 scaling: generated by 8e₁, the 4e₁+4e_i,
/// twice the Golay codewords, and the odd glue vector (−3, 1, …, 1);
/// the Gram matrix of a Hermite-basis of that span is B·Bᵗ/8.
fn leech() -> ZLattice {
    use num_bigint::BigInt;
    let mut generators: Vec<Vec<BigInt>> = Vec::new();
    let mut row = vec![BigInt::from(0); 24];
    row[0] = BigInt::from(8);
    generators.push(row);
    for i in 1..24 {
        let mut row = vec![BigInt::from(0); 24];
        row[0] = BigInt::from(4);
        row[i] = BigInt::from(4);
        generators.push(row);
    }
    for code_row in golay_generators() {
        generators.push(code_row.iter().map(|&b| BigInt::from(2 * b as i64)).collect());
    }
    generators.push((0..24).map(|i| BigInt::from(if i == 0 { -3 } else { 1 })).collect());

    let basis = crate::matrix::hnf_row_basis(generators);
    assert_eq!(basis.len(), 24, "Leech generators span rank 24");
    let gram = RatMat::from_fn(24, 24, |i, j| {
        let mut dot = BigInt::from(0);
        for k in 0..24 {
            dot += &basis[i][k] * &basis[j][k];
        }
        Rational::new(dot, BigInt::from(8))
    });
    ZLattice::new(gram).expect("Leech Gram")
}

/// Field element re_n/re_d + (im_n/im_d)·√−d.
fn fe(field: &QuadField, re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> crate::number_field::FieldElement {
    field.element(rat::ratio(re_n, re_d), rat::ratio(im_n, im_d))
}

fn pb() -> HermLattice {
    let k = QuadField::new(7).expect("squarefree");
    let alpha = k.omega();
    let two = k.from_int(2);
    let neg_one = k.from_int(-1);
    let gram = vec![
        vec![two.clone(), alpha.clone(), neg_one.clone()],
        vec![alpha.conj(), two.clone(), alpha.clone()],
        vec![neg_one.clone(), alpha.conj(), two.clone()],
    ];
    HermLattice::new(k, gram).expect("Barnes lattice Gram")
}

fn t_lattice() -> HermLattice {
    let k = QuadField::new(11).expect("squarefree");
    let eta = k.omega();
    let two = k.from_int(2);
    let gram = vec![vec![two.clone(), eta.clone()], vec![eta.conj(), two.clone()]];
    HermLattice::new(k, gram).expect("T Gram")
}

fn pa() -> HermLattice {
    let k = QuadField::new(7).expect("squarefree");
    // 4/√−7 = −(4/7)·√−7
    let z = fe(&k, 0, 1, -4, 7);
    let two = k.from_int(2);
    let gram = vec![vec![two.clone(), z.clone()], vec![z.conj(), two.clone()]];
    HermLattice::new(k, gram).expect("Pa Gram")
}

/// L_K for a deep hole z: Gram [[1, z], [conj(z), 1]].
fn lk(d: u64, z: (i64, i64, i64, i64)) -> HermLattice {
    let k = QuadField::new(d).expect("squarefree");
    let z = fe(&k, z.0, z.1, z.2, z.3);
    let one = k.one();
    let gram = vec![vec![one.clone(), z.clone()], vec![z.conj(), one.clone()]];
    HermLattice::new(k, gram).expect("L_K Gram")
}

/// Rank-4 Hermitian structure on E8 over ℤ[(1+√−7)/2]: glue of
/// L_K ⊥ L_K (deep hole 2/√−7) along a norm-9 quotient. Pinned by
/// trace ≅ E8, min 1, P^# = √−7·P; see the fixture tests.
fn pc() -> HermLattice {
    let k = QuadField::new(7).expect("squarefree");
    let gram_rows: [[(i64, i64, i64, i64); 4]; 4] = PC_GRAM;
    let gram = gram_rows
        .iter()
        .map(|row| row.iter().map(|&(a, b, c, d)| fe(&k, a, b, c, d)).collect())
        .collect();
    HermLattice::new(k, gram).expect("Pc Gram")
}

/// Entries as (re_num, re_den, im_num, im_den) on the basis (1, √−7).
#[rustfmt::skip]
const PC_GRAM: [[(i64, i64, i64, i64); 4]; 4] = [
    [(1, 1, 0, 1),  (0, 1, -2, 7), (1, 3, -1, 21), (-1, 3, -2, 21)],
    [(0, 1, 2, 7),  (1, 1, 0, 1),  (1, 3, 5, 21),  (-2, 3, 1, 21)],
    [(1, 3, 1, 21), (1, 3, -5, 21), (1, 1, 0, 1),  (0, 1, -2, 7)],
    [(-1, 3, 2, 21), (-2, 3, -1, 21), (0, 1, 2, 7), (1, 1, 0, 1)],
];

// ---- file ingestion and serialization ----

/// JSON payload: Euclidean or Hermitian lattice, distinguished by the
/// presence of a "field" key.
pub fn load(path: &Path) -> Result<CatalogEntry> {
    let text = std::fs::read_to_string(path)?;
    let data = parse_lattice_json(&text)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "ingested".to_string());
    Ok(CatalogEntry {
        name,
        data,
        provenance: Provenance::Derived,
        notes: format!("ingested from {}", path.display()),
    })
}

pub fn parse_lattice_json(text: &str) -> Result<LatticeData> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("field").is_some() {
        let json: HermLatticeJson = serde_json::from_value(value)?;
        Ok(LatticeData::Hermitian(HermLattice::from_json(json)?))
    } else if value.get("gram").is_some() {
        let json: ZLatticeJson = serde_json::from_value(value)?;
        Ok(LatticeData::Euclidean(ZLattice::from_json(&json)?))
    } else {
        Err(Error::validation(
            "expected a lattice object with a \"gram\" key (and \"field\" for Hermitian lattices)",
        ))
    }
}

pub fn lattice_to_json_string(data: &LatticeData) -> String {
    match data {
        LatticeData::Euclidean(l) => {
            serde_json::to_string_pretty(&l.to_json()).expect("serializable")
        }
        LatticeData::Hermitian(l) => {
            serde_json::to_string_pretty(&l.to_json()).expect("serializable")
        }
    }
}

/// Writes the entry's lattice data; `load(save(e))` reproduces the Gram
/// bit-for-bit.
pub fn save(entry: &CatalogEntry, path: &Path) -> Result<()> {
    std::fs::write(path, lattice_to_json_string(&entry.data) + "\n")?;
    Ok(())
}

/// Trace-lattice determinant identity det = |d_K|^m · d_L², used as a
/// validation gate for every Hermitian entry.
pub fn trace_det_identity_holds(l: &HermLattice) -> bool {
    let m = l.rank() as i64;
    let dk = rat::rat(l.field().abs_disc() as i64);
    let mut expected = Rational::from_integer(1.into());
    for _ in 0..m {
        expected *= &dk;
    }
    let d = l.disc();
    expected *= &d * &d;
    l.trace_lattice().det() == expected
}

#[cfg(test)]
mod tests;
