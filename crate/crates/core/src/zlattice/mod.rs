//! Euclidean lattices as exact rational Gram matrices.

pub mod enumerate;
pub mod isometry;
pub mod reduce;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{integer_rank, RatMat};
use crate::rat::{self, Rational};

pub use enumerate::naive_box_scan;
pub use isometry::{isometry, unimodular_sample};

/// A Euclidean lattice with fixed basis, given by its symmetric positive
/// definite Gram matrix of exact rationals. Rank 0 is permitted (the empty
/// lattice), mostly so orthogonal sums have a neutral element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZLattice {
    gram: RatMat,
}

impl ZLattice {
    /// Validates symmetry and positive definiteness (exact leading
    /// principal minors).
    pub fn new(gram: RatMat) -> Result<ZLattice> {
        if !gram.is_square() {
            return Err(Error::validation("Gram matrix must be square"));
        }
        if !gram.is_symmetric() {
            return Err(Error::validation("Gram matrix must be symmetric"));
        }
        if !gram.is_positive_definite() {
            return Err(Error::validation("Gram matrix must be positive definite"));
        }
        Ok(ZLattice { gram })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<ZLattice> {
        let gram = RatMat::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat::rat(x)).collect()).collect(),
        )?;
        ZLattice::new(gram)
    }

    pub fn empty() -> ZLattice {
        ZLattice { gram: RatMat::zero(0, 0) }
    }

    pub fn rank(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &RatMat {
        &self.gram
    }

    pub fn det(&self) -> Rational {
        self.gram.det()
    }

    /// Dual lattice: Gram matrix is the exact inverse.
    pub fn dual(&self) -> ZLattice {
        if self.rank() == 0 {
            return self.clone();
        }
        ZLattice { gram: self.gram.inverse().expect("positive definite Gram is invertible") }
    }

    pub fn is_integral(&self) -> bool {
        self.gram.is_integral()
    }

    /// Integral with even diagonal.
    pub fn is_even(&self) -> bool {
        self.is_integral()
            && (0..self.rank()).all(|i| (&self.gram[(i, i)] / rat::rat(2)).is_integer())
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.det() == Rational::one()
    }

    /// Inner product of two coordinate vectors.
    pub fn inner(&self, x: &[BigInt], y: &[BigInt]) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                acc += &self.gram[(i, j)] * Rational::from_integer(&x[i] * &y[j]);
            }
        }
        acc
    }

    pub fn norm_of(&self, x: &[BigInt]) -> Rational {
        self.inner(x, x)
    }

    /// Complete set of vectors of norm ≤ bound, one per ± pair.
    pub fn short_vectors(&self, bound: &Rational) -> Result<ShortVectorSet> {
        if bound.is_negative() {
            return Err(Error::validation("enumeration bound must be non-negative"));
        }
        let found = enumerate::enumerate_up_to(&self.gram, bound);
        let (vectors, norms) = found.into_iter().unzip();
        Ok(ShortVectorSet { bound: bound.clone(), vectors, norms })
    }

    /// Exact minimum and kissing number (vectors counted with both signs).
    pub fn minimum(&self) -> Result<(Rational, usize)> {
        if self.rank() == 0 {
            return Err(Error::validation("the empty lattice has no minimum"));
        }
        // The smallest diagonal entry of the reduced Gram is an upper bound
        // for the minimum, so enumerating up to it finds all minimal vectors.
        let red = reduce::lll_gram(&self.gram);
        let bound = (0..self.rank()).map(|i| red.gram[(i, i)].clone()).min().unwrap();
        let sv = self.short_vectors(&bound)?;
        let min = sv.norms.first().cloned().expect("a basis vector attains the bound");
        let kissing = 2 * sv.norms.iter().take_while(|n| **n == min).count();
        Ok((min, kissing))
    }

    /// The minimal vectors, one per ± pair, as coordinate columns.
    pub fn minimal_vectors(&self) -> Result<Vec<Vec<BigInt>>> {
        let (min, _) = self.minimum()?;
        let sv = self.short_vectors(&min)?;
        Ok(sv
            .vectors
            .into_iter()
            .zip(sv.norms)
            .filter(|(_, n)| *n == min)
            .map(|(v, _)| v)
            .collect())
    }

    /// Rank over ℚ of the span of the outer products X·Xᵗ of the minimal
    /// coordinate vectors. Basis independent.
    pub fn perfection_rank(&self) -> Result<usize> {
        let n = self.rank();
        if n == 0 {
            return Ok(0);
        }
        let minimal = self.minimal_vectors()?;
        // Vectorize the upper triangle of each symmetric outer product.
        let rows: Vec<Vec<BigInt>> = minimal
            .iter()
            .map(|x| {
                let mut row = Vec::with_capacity(n * (n + 1) / 2);
                for i in 0..n {
                    for j in i..n {
                        row.push(&x[i] * &x[j]);
                    }
                }
                row
            })
            .collect();
        Ok(integer_rank(rows))
    }

    /// Perfect lattices satisfy perfection_rank = n(n+1)/2.
    pub fn is_perfect(&self) -> Result<bool> {
        let n = self.rank();
        Ok(self.perfection_rank()? == n * (n + 1) / 2)
    }

    /// Tensor product: Kronecker product of the Gram matrices.
    pub fn tensor(&self, other: &ZLattice) -> ZLattice {
        ZLattice { gram: self.gram.kronecker(&other.gram) }
    }

    /// Orthogonal sum: block diagonal Gram.
    pub fn orthogonal_sum(&self, other: &ZLattice) -> ZLattice {
        ZLattice { gram: self.gram.direct_sum(&other.gram) }
    }

    /// Whether an even unimodular lattice attains the extremal bound.
    pub fn is_extremal(&self) -> Result<bool> {
        if !self.is_even() || !self.is_unimodular() {
            return Err(Error::validation(
                "extremality is defined for even unimodular lattices",
            ));
        }
        let (min, _) = self.minimum()?;
        Ok(min == extremal_bound(self.rank()))
    }
}

/// Upper bound 2 + 2⌊n/24⌋ for the minimum of an even unimodular lattice
/// of rank n.
pub fn extremal_bound(n: usize) -> Rational {
    rat::rat(2 + 2 * (n as i64 / 24))
}

/// Splitting rule for minimal vectors of tensor products: if one factor has
/// rank ≤ 43, every minimal vector of L⊗M is split and
/// min(L⊗M) = min(L)·min(M). Used as an annotation, never to suppress
/// enumeration.
pub fn kitaoka_split_rule(rank_l: usize, rank_m: usize) -> bool {
    assert!(rank_l > 0 && rank_m > 0, "ranks must be positive");
    rank_l.min(rank_m) <= 43
}

/// Canonically ordered list of all lattice vectors with norm ≤ bound,
/// one representative per ± pair, with exact norms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortVectorSet {
    bound: Rational,
    vectors: Vec<Vec<BigInt>>,
    norms: Vec<Rational>,
}

impl ShortVectorSet {
    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn norms(&self) -> &[Rational] {
        &self.norms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<BigInt>, &Rational)> {
        self.vectors.iter().zip(self.norms.iter())
    }

    /// Streaming line format: "norm;x1,x2,...,xn".
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for (v, n) in self.iter() {
            s.push_str(&rat::format_rational(n));
            s.push(';');
            let coords: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            s.push_str(&coords.join(","));
            s.push('\n');
        }
        s
    }
}

/// JSON schema for lattices: {"gram": [[num or "p/q", ...], ...]}.
#[derive(Serialize, Deserialize)]
pub struct ZLatticeJson {
    pub gram: Vec<Vec<serde_json::Value>>,
}

impl ZLattice {
    pub fn to_json(&self) -> ZLatticeJson {
        let n = self.rank();
        ZLatticeJson {
            gram: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let r = &self.gram[(i, j)];
                            if r.is_integer() {
                                match num_traits::ToPrimitive::to_i64(r.numer()) {
                                    Some(v) => serde_json::Value::from(v),
                                    None => serde_json::Value::from(rat::format_rational(r)),
                                }
                            } else {
                                serde_json::Value::from(rat::format_rational(r))
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ZLatticeJson) -> Result<ZLattice> {
        let mut rows = Vec::new();
        for (i, row) in json.gram.iter().enumerate() {
            let mut out = Vec::new();
            for (j, v) in row.iter().enumerate() {
                let r = rat::serde_rational::value_to_rational(v).map_err(|e| {
                    Error::validation(format!("gram[{i}][{j}]: {e}"))
                })?;
                out.push(r);
            }
            rows.push(out);
        }
        ZLattice::new(RatMat::from_rows(rows)?)
    }
}

#[cfg(test)]
mod tests;
