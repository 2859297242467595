//! Free Hermitian O_K-lattices over imaginary quadratic fields.
//!
//! A lattice of rank m is O_K^m with a positive definite Hermitian form
//! given by its Gram matrix G = (h(e_i, e_j)). The form is linear in the
//! first argument and conjugate-linear in the second; Gram symmetry makes
//! every result convention-independent, but fixing it once keeps Kronecker
//! products and trace Grams reproducible.
//!
//! All five fields used in practice have class number 1, so pseudo-bases
//! degenerate to bases and free modules lose no generality.

pub mod d3;
pub mod sublattice;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RatMat;
use crate::number_field::{FieldElement, QuadField};
use crate::rat::{self, Rational};
use crate::zlattice::ZLattice;

pub use d3::{certify_d3_lower_bound, dual_is_sqrt_scaled, D3Certificate, D3Step, D3Verdict};
pub use sublattice::{
    d_r, minimal_sections, module_basis, orthogonal_decompose, sublattice_from_basis, DrEffort,
    DrResult, DrValue, HermSublattice,
};

/// Free Hermitian O_K-lattice with fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermLattice {
    field: QuadField,
    gram: Vec<Vec<FieldElement>>,
}

impl HermLattice {
    /// Validates Hermitian symmetry exactly and positive definiteness via
    /// the trace lattice.
    pub fn new(field: QuadField, gram: Vec<Vec<FieldElement>>) -> Result<HermLattice> {
        let m = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != m {
                return Err(Error::validation(format!(
                    "Gram row {i} has {} entries, expected {m}",
                    row.len()
                )));
            }
            for (j, x) in row.iter().enumerate() {
                if x.field_d() != field.d() {
                    return Err(Error::validation(format!(
                        "Gram entry [{i}][{j}] lives in Q(sqrt(-{})), lattice field is Q(sqrt(-{}))",
                        x.field_d(),
                        field.d()
                    )));
                }
            }
        }
        for i in 0..m {
            for j in 0..=i {
                if gram[j][i] != gram[i][j].conj() {
                    return Err(Error::validation(format!(
                        "not Hermitian at row {i}, column {j}: entry {} vs conjugate {}",
                        gram[i][j], gram[j][i]
                    )));
                }
            }
        }
        let lat = HermLattice { field, gram };
        if m > 0 && !lat.trace_gram().is_positive_definite() {
            return Err(Error::validation("Hermitian form is not positive definite"));
        }
        Ok(lat)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn gram(&self) -> &[Vec<FieldElement>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.gram[i][j]
    }

    /// Discriminant d_L: determinant of the Hermitian Gram matrix, a
    /// positive rational.
    pub fn disc(&self) -> Rational {
        let det = field_det(&self.field, &self.gram);
        debug_assert!(det.im().is_zero(), "Hermitian determinant must be rational");
        det.re().clone()
    }

    /// Hermitian dual L^# = {y | h(y, L) ⊆ O_K}; its Gram is the inverse of
    /// G (conjugate-transpose inverse equals inverse for Hermitian G).
    pub fn dual(&self) -> HermLattice {
        let inv = field_inverse(&self.field, &self.gram).expect("positive definite Gram");
        HermLattice { field: self.field.clone(), gram: inv }
    }

    /// h(x, y) = Σ x_i·conj(y_j)·G[i][j], linear in x.
    pub fn herm_inner(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let mut acc = self.field.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc = &acc + &(&(xi * &yj.conj()) * &self.gram[i][j]);
            }
        }
        acc
    }

    /// h(x, x), exact rational.
    pub fn norm_of(&self, x: &[FieldElement]) -> Rational {
        let h = self.herm_inner(x, x);
        debug_assert!(h.im().is_zero());
        h.re().clone()
    }

    /// Gram of the trace lattice on the ℤ-basis (e₁, ωe₁, …, e_m, ωe_m),
    /// with x·y = Tr h(x, y).
    fn trace_gram(&self) -> RatMat {
        let m = self.rank();
        let omega = self.field.omega();
        let one = self.field.one();
        RatMat::from_fn(2 * m, 2 * m, |a, b| {
            let (i, u) = (a / 2, if a % 2 == 0 { &one } else { &omega });
            let (j, v) = (b / 2, if b % 2 == 0 { &one } else { &omega });
            (&(u * &v.conj()) * &self.gram[i][j]).trace()
        })
    }

    /// The rank-2m ℤ-lattice (L, Tr∘h). Its determinant is |d_K|^m·d_L²
    /// and its minimum is twice the Hermitian minimum.
    pub fn trace_lattice(&self) -> ZLattice {
        ZLattice::new(self.trace_gram()).expect("trace form of a valid Hermitian lattice")
    }

    /// O_K-coordinates from trace-lattice coordinates (a₁, b₁, …, a_m, b_m).
    pub fn coords_from_trace(&self, v: &[BigInt]) -> Vec<FieldElement> {
        let omega = self.field.omega();
        (0..self.rank())
            .map(|i| {
                let a = self.field.from_rat(Rational::from_integer(v[2 * i].clone()));
                let b = self.field.from_rat(Rational::from_integer(v[2 * i + 1].clone()));
                &a + &(&b * &omega)
            })
            .collect()
    }

    /// Trace-lattice coordinates of an integral coordinate vector.
    pub fn coords_to_trace(&self, x: &[FieldElement]) -> Option<Vec<BigInt>> {
        let mut out = Vec::with_capacity(2 * self.rank());
        for xi in x {
            let (a, b) = xi.omega_coords()?;
            out.push(a);
            out.push(b);
        }
        Some(out)
    }

    /// Exact Hermitian minimum and the minimal vectors in O_K-coordinates,
    /// canonically ordered, one per ± pair.
    pub fn minimum(&self) -> Result<(Rational, Vec<Vec<FieldElement>>)> {
        let trace = self.trace_lattice();
        let (trace_min, _) = trace.minimum()?;
        let min = trace_min / rat::rat(2);
        let vectors = self.vectors_of_norm(&min)?;
        Ok((min, vectors))
    }

    /// All vectors with h(v,v) = t, one per ± pair, canonical order.
    pub fn vectors_of_norm(&self, t: &Rational) -> Result<Vec<Vec<FieldElement>>> {
        Ok(self
            .vectors_up_to(t)?
            .into_iter()
            .filter(|(_, n)| n == t)
            .map(|(v, _)| v)
            .collect())
    }

    /// All vectors with 0 < h(v,v) ≤ t, one per ± pair, canonical order,
    /// with exact norms.
    pub fn vectors_up_to(&self, t: &Rational) -> Result<Vec<(Vec<FieldElement>, Rational)>> {
        let trace = self.trace_lattice();
        let sv = trace.short_vectors(&(t * rat::rat(2)))?;
        Ok(sv
            .iter()
            .map(|(v, n)| (self.coords_from_trace(v), n / rat::rat(2)))
            .collect())
    }

    /// One vector per class under multiplication by units (± included).
    pub fn dedupe_by_units(&self, vectors: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
        let units = self.field.units();
        let mut kept: Vec<Vec<FieldElement>> = Vec::new();
        'outer: for v in vectors {
            for u in &units {
                let uv: Vec<FieldElement> = v.iter().map(|c| c * u).collect();
                if kept.contains(&uv) {
                    continue 'outer;
                }
            }
            kept.push(v.clone());
        }
        kept
    }

    /// Hermitian tensor product: h(x⊗y, z⊗t) = h(x,z)·h(y,t); the Gram is
    /// the Kronecker product on the basis (e_i ⊗ f_j) in row-major order.
    pub fn tensor(&self, other: &HermLattice) -> Result<HermLattice> {
        if self.field != other.field {
            return Err(Error::validation("tensor factors live over different fields"));
        }
        let (ml, mm) = (self.rank(), other.rank());
        let gram = (0..ml * mm)
            .map(|a| {
                let (i, ii) = (a / mm, a % mm);
                (0..ml * mm)
                    .map(|b| {
                        let (j, jj) = (b / mm, b % mm);
                        &self.gram[i][j] * &other.gram[ii][jj]
                    })
                    .collect()
            })
            .collect();
        Ok(HermLattice { field: self.field.clone(), gram })
    }

    /// Lattice with the form scaled by a positive rational.
    pub fn rescale(&self, c: &Rational) -> HermLattice {
        assert!(c.is_positive());
        let gram = self
            .gram
            .iter()
            .map(|row| row.iter().map(|x| x.scale(c)).collect())
            .collect();
        HermLattice { field: self.field.clone(), gram }
    }

    /// Whether every Gram entry lies in (1/√−d)·O_K, i.e. the trace form is
    /// integral.
    pub fn entries_in_inverse_different(&self) -> bool {
        let sqrt = self.field.sqrt_minus_d();
        self.gram
            .iter()
            .all(|row| row.iter().all(|x| (x * &sqrt).is_integral()))
    }

    /// Gram of the sublattice spanned by coordinate columns.
    pub fn induced_gram(&self, basis: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
        basis
            .iter()
            .map(|x| basis.iter().map(|y| self.herm_inner(x, y)).collect())
            .collect()
    }
}

/// O_K-linear isometry: columns are vectors w_i of M with
/// h_M(w_i, w_j) = G_L[i][j] exactly. Exhaustive backtracking over vectors
/// of matching norm, so `None` refutes isometry.
pub fn herm_isometry(l: &HermLattice, m: &HermLattice) -> Option<Vec<Vec<FieldElement>>> {
    if l.rank() != m.rank() || l.field() != m.field() {
        return None;
    }
    let n = l.rank();
    if n == 0 {
        return Some(Vec::new());
    }
    if l.disc() != m.disc() {
        return None;
    }
    let max_diag: Rational = (0..n)
        .map(|i| l.entry(i, i).re().clone())
        .max()
        .expect("nonempty diagonal");
    let base = m.vectors_up_to(&max_diag).ok()?;
    // Candidate images: all unit multiples (± arrive as units).
    let units = m.field().units();
    let mut candidates: Vec<(Vec<FieldElement>, Rational)> = Vec::new();
    for (v, norm) in &base {
        for u in &units {
            let uv: Vec<FieldElement> = v.iter().map(|c| c * u).collect();
            if !candidates.iter().any(|(w, _)| w == &uv) {
                candidates.push((uv, norm.clone()));
            }
        }
    }
    let mut chosen: Vec<Vec<FieldElement>> = Vec::new();
    if !herm_backtrack(l, m, &candidates, &mut chosen) {
        return None;
    }
    // Verify exactly on all pairs.
    for i in 0..n {
        for j in 0..n {
            assert_eq!(&m.herm_inner(&chosen[i], &chosen[j]), l.entry(i, j));
        }
    }
    Some(chosen)
}

fn herm_backtrack(
    l: &HermLattice,
    m: &HermLattice,
    candidates: &[(Vec<FieldElement>, Rational)],
    chosen: &mut Vec<Vec<FieldElement>>,
) -> bool {
    let k = chosen.len();
    if k == l.rank() {
        return true;
    }
    let target_norm = l.entry(k, k).re();
    'cand: for (v, norm) in candidates {
        if norm != target_norm {
            continue;
        }
        for (j, w) in chosen.iter().enumerate() {
            if &m.herm_inner(v, w) != l.entry(k, j) {
                continue 'cand;
            }
        }
        chosen.push(v.clone());
        if herm_backtrack(l, m, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

// ---- exact linear algebra over K ----

/// Determinant over K, exposed for fixture tooling.
pub fn field_det_public(field: &QuadField, m: &[Vec<FieldElement>]) -> FieldElement {
    field_det(field, m)
}

pub(crate) fn field_det(field: &QuadField, m: &[Vec<FieldElement>]) -> FieldElement {
    let n = m.len();
    if n == 0 {
        return field.one();
    }
    let mut a: Vec<Vec<FieldElement>> = m.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return field.zero();
        };
        if p != col {
            a.swap(p, col);
            det = -&det;
        }
        let pivot = a[col][col].clone();
        det = &det * &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].div(&pivot).expect("pivot is nonzero");
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] = &a[r][c] - &sub;
            }
        }
    }
    det
}

pub(crate) fn field_inverse(
    field: &QuadField,
    m: &[Vec<FieldElement>],
) -> Result<Vec<Vec<FieldElement>>> {
    let n = m.len();
    let mut a: Vec<Vec<FieldElement>> = m.to_vec();
    let mut inv: Vec<Vec<FieldElement>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::validation("singular matrix over K"));
        };
        a.swap(p, col);
        inv.swap(p, col);
        let pivot = a[col][col].clone();
        let pinv = pivot.inverse()?;
        for c in 0..n {
            a[col][c] = &a[col][c] * &pinv;
            inv[col][c] = &inv[col][c] * &pinv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let s1 = &f * &a[col][c];
                a[r][c] = &a[r][c] - &s1;
                let s2 = &f * &inv[col][c];
                inv[r][c] = &inv[r][c] - &s2;
            }
        }
    }
    Ok(inv)
}

/// Solves xᵗ·A = b over K for the row vector x (A square invertible).
pub(crate) fn field_solve_left(
    field: &QuadField,
    a: &[Vec<FieldElement>],
    b: &[FieldElement],
) -> Result<Vec<FieldElement>> {
    let inv = field_inverse(field, a)?;
    let n = b.len();
    Ok((0..n)
        .map(|j| {
            let mut acc = field.zero();
            for (k, bk) in b.iter().enumerate() {
                acc = &acc + &(bk * &inv[k][j]);
            }
            acc
        })
        .collect())
}

// ---- JSON schema ----

/// {"field": {"d": 7}, "gram": [[{"re": "p/q", "im": "r/s"}, ...], ...]}
#[derive(Serialize, Deserialize)]
pub struct HermLatticeJson {
    pub field: FieldJson,
    pub gram: Vec<Vec<FieldElement>>,
}

#[derive(Serialize, Deserialize)]
pub struct FieldJson {
    pub d: u64,
}

impl HermLattice {
    pub fn to_json(&self) -> HermLatticeJson {
        HermLatticeJson {
            field: FieldJson { d: self.field.d() },
            gram: self.gram.clone(),
        }
    }

    pub fn from_json(json: HermLatticeJson) -> Result<HermLattice> {
        let field = QuadField::new(json.field.d)?;
        let gram: Vec<Vec<FieldElement>> = json
            .gram
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.with_field(field.d())).collect())
            .collect();
        HermLattice::new(field, gram)
    }
}

#[cfg(test)]
mod tests;
