//! Minimal sublattice discriminants d_r and orthogonal decompositions.
//!
//! d_r(L) is the least discriminant of a free rank-r O_K-sublattice.
//! Ranks 1 and m are exact by definition. Rank 2 over a norm-Euclidean
//! field is certified by an exhaustive pair scan: any rank-2 sublattice of
//! discriminant ≤ D has a basis (x, y) with h(x,x)·h(y,y) ≤ D/(1−μ), so a
//! scan of all vector pairs below the implied norm bound cannot miss the
//! minimizer. Intermediate ranks get a witness search plus the
//! Hermite-type lower bound γ_h ≤ (√|d_K|/2)·γ_{2r}.

use num_traits::{One, Signed, Zero};

use crate::bound::{hermite_dr_lower_bound, SurdBound};
use crate::error::{Error, Result};
use crate::number_field::{euclidean_divide, FieldElement, QuadField};
use crate::rat::{self, Rational};

use super::{field_det, field_solve_left, HermLattice};

/// A free rank-r sublattice of a Hermitian lattice: coordinate columns in
/// the parent basis, the induced Gram, and its exact discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermSublattice {
    pub basis: Vec<Vec<FieldElement>>,
    pub gram: Vec<Vec<FieldElement>>,
    pub disc: Rational,
}

impl HermSublattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The sublattice as a Hermitian lattice in its own right.
    pub fn as_lattice(&self, field: &QuadField) -> Result<HermLattice> {
        HermLattice::new(field.clone(), self.gram.clone())
    }
}

/// Builds a sublattice from O_K-coordinate columns; errors if the columns
/// are O_K-linearly dependent or not integral.
pub fn sublattice_from_basis(
    l: &HermLattice,
    basis: Vec<Vec<FieldElement>>,
) -> Result<HermSublattice> {
    for (k, col) in basis.iter().enumerate() {
        if col.len() != l.rank() {
            return Err(Error::validation(format!("basis column {k} has wrong length")));
        }
        if !col.iter().all(|x| x.is_integral()) {
            return Err(Error::validation(format!("basis column {k} is not integral")));
        }
    }
    let gram = l.induced_gram(&basis);
    let det = field_det(l.field(), &gram);
    if !det.im().is_zero() {
        return Err(Error::validation("induced Gram has non-rational determinant"));
    }
    let disc = det.re().clone();
    if !disc.is_positive() {
        return Err(Error::validation("basis columns are linearly dependent"));
    }
    Ok(HermSublattice { basis, gram, disc })
}

/// Value part of a d_r computation.
#[derive(Debug, Clone)]
pub enum DrValue {
    /// Exact minimal discriminant, with an attaining witness.
    Exact(Rational),
    /// Proven lower bound together with the best witness value found.
    Interval { lower: SurdBound, best_found: Option<Rational> },
}

#[derive(Debug, Clone)]
pub struct DrResult {
    pub r: usize,
    pub certified: bool,
    pub value: DrValue,
    pub witness: Option<HermSublattice>,
}

impl DrResult {
    /// A rational that is certainly ≤ d_r (the exact value when certified).
    pub fn lower_bound_surd(&self) -> SurdBound {
        match &self.value {
            DrValue::Exact(v) => SurdBound::rational(v.clone()),
            DrValue::Interval { lower, .. } => lower.clone(),
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match &self.value {
            DrValue::Exact(v) => Some(v),
            DrValue::Interval { .. } => None,
        }
    }
}

/// Search-effort knobs for the uncertified ranks.
#[derive(Debug, Clone)]
pub struct DrEffort {
    /// Witness tuples are drawn from vectors of norm ≤ norm_factor·min(L).
    pub norm_factor: u32,
}

impl Default for DrEffort {
    fn default() -> Self {
        DrEffort { norm_factor: 2 }
    }
}

/// Minimal discriminant of a free rank-r sublattice.
pub fn d_r(l: &HermLattice, r: usize, effort: &DrEffort) -> Result<DrResult> {
    let m = l.rank();
    if r == 0 || r > m {
        return Err(Error::validation(format!("rank r = {r} out of range 1..={m}")));
    }
    if r == 1 {
        let (min, vectors) = l.minimum()?;
        let witness = sublattice_from_basis(l, vec![vectors[0].clone()])?;
        return Ok(DrResult {
            r,
            certified: true,
            value: DrValue::Exact(min),
            witness: Some(witness),
        });
    }
    if r == m {
        // Any full-rank sublattice has discriminant d_L·N(det T) ≥ d_L.
        let basis: Vec<Vec<FieldElement>> = (0..m)
            .map(|j| {
                (0..m)
                    .map(|i| if i == j { l.field().one() } else { l.field().zero() })
                    .collect()
            })
            .collect();
        let witness = sublattice_from_basis(l, basis)?;
        return Ok(DrResult {
            r,
            certified: true,
            value: DrValue::Exact(l.disc()),
            witness: Some(witness),
        });
    }
    if r == 2 {
        if let Some(mu) = l.field().euclidean_min().cloned() {
            let (value, witnesses) = certified_d2(l, &mu)?;
            let witness = witnesses.into_iter().next();
            return Ok(DrResult { r, certified: true, value: DrValue::Exact(value), witness });
        }
        // Non-Euclidean field: fall back to the uncertified search.
    }
    uncertified_dr(l, r, effort)
}

/// All rank-r sublattices attaining d_r, when d_r is exact.
///
/// For r = 2 these are collected by the same exhaustive scan that certifies
/// the value; for r = 1 they are the minimal vectors; for r = m the lattice
/// itself. Intermediate ranks are not supported (their d_r is not certified
/// here).
pub fn minimal_sections(l: &HermLattice, r: usize) -> Result<Vec<HermSublattice>> {
    let m = l.rank();
    if r == 0 || r > m {
        return Err(Error::validation(format!("rank r = {r} out of range 1..={m}")));
    }
    if r == 1 {
        let (_, vectors) = l.minimum()?;
        return vectors
            .into_iter()
            .map(|v| sublattice_from_basis(l, vec![v]))
            .collect();
    }
    if r == m {
        let basis: Vec<Vec<FieldElement>> = (0..m)
            .map(|j| {
                (0..m)
                    .map(|i| if i == j { l.field().one() } else { l.field().zero() })
                    .collect()
            })
            .collect();
        return Ok(vec![sublattice_from_basis(l, basis)?]);
    }
    if r == 2 {
        if let Some(mu) = l.field().euclidean_min().cloned() {
            let (_, witnesses) = certified_d2(l, &mu)?;
            return Ok(witnesses);
        }
    }
    Err(Error::unsupported(format!(
        "minimal rank-{r} sections need a certified d_{r} (rank {m}, non-Euclidean field?)"
    )))
}

/// Exhaustive certified d_2 computation over a norm-Euclidean field.
/// Returns the exact value and every scanned pair attaining it.
fn certified_d2(l: &HermLattice, mu: &Rational) -> Result<(Rational, Vec<HermSublattice>)> {
    let (min, min_vectors) = l.minimum()?;
    // Initial witness: best principal 2×2 section of the basis, improved by
    // pairs of minimal vectors (a good seed keeps the scan bound tight).
    let mut initial: Option<Rational> = None;
    for i in 0..l.rank() {
        for j in i + 1..l.rank() {
            let sub = principal_section(l, i, j);
            let d = sub.disc.clone();
            if d.is_positive() && initial.as_ref().is_none_or(|b| d < *b) {
                initial = Some(d);
            }
        }
    }
    for (a, x) in min_vectors.iter().enumerate().take(100) {
        for y in min_vectors.iter().skip(a + 1).take(100) {
            let d = &min * &min - l.herm_inner(x, y).norm();
            if d.is_positive() && initial.as_ref().is_none_or(|b| d < *b) {
                initial = Some(d);
            }
        }
    }
    let d0 = initial.ok_or_else(|| Error::validation("rank must be at least 2"))?;

    // Any sublattice of discriminant ≤ d0 has a basis (x, y) with
    // h(x,x)·h(y,y) ≤ d0/(1−μ); with h(x,x) ≥ min this bounds both norms.
    let one = Rational::one();
    let product_bound = &d0 / (&one - mu);
    let single_bound = &product_bound / &min;
    let vectors = l.vectors_up_to(&single_bound)?;

    let mut best = d0.clone();
    let mut witnesses: Vec<HermSublattice> = Vec::new();
    // Record the initial basis witness in case nothing beats it.
    for i in 0..l.rank() {
        for j in i + 1..l.rank() {
            let sub = principal_section(l, i, j);
            if sub.disc == best {
                witnesses.push(sub);
            }
        }
    }
    for (a, (x, nx)) in vectors.iter().enumerate() {
        for (y, ny) in vectors.iter().skip(a + 1).map(|p| (&p.0, &p.1)) {
            if nx * ny > product_bound {
                continue;
            }
            let h = l.herm_inner(x, y);
            let disc = nx * ny - h.norm();
            if !disc.is_positive() {
                continue; // dependent pair
            }
            if disc < best {
                best = disc.clone();
                witnesses.clear();
            }
            if disc == best {
                let gram = l.induced_gram(&[x.clone(), y.clone()]);
                witnesses.push(HermSublattice {
                    basis: vec![x.clone(), y.clone()],
                    gram,
                    disc: disc.clone(),
                });
            }
        }
    }
    Ok((best, witnesses))
}

fn principal_section(l: &HermLattice, i: usize, j: usize) -> HermSublattice {
    let mut ei = vec![l.field().zero(); l.rank()];
    ei[i] = l.field().one();
    let mut ej = vec![l.field().zero(); l.rank()];
    ej[j] = l.field().one();
    let gram = l.induced_gram(&[ei.clone(), ej.clone()]);
    let disc = field_det(l.field(), &gram).re().clone();
    HermSublattice { basis: vec![ei, ej], gram, disc }
}

/// Witness search over r-tuples of short vectors plus the Hermite-type
/// lower bound. Certified only if the two meet.
fn uncertified_dr(l: &HermLattice, r: usize, effort: &DrEffort) -> Result<DrResult> {
    let (min, _) = l.minimum()?;
    let lower = hermite_dr_lower_bound(&min, l.field().abs_disc(), r as u32);
    let search_bound = &min * rat::rat(effort.norm_factor as i64);
    let vectors = l.vectors_up_to(&search_bound)?;

    let mut best: Option<HermSublattice> = None;
    let mut tuple: Vec<usize> = Vec::with_capacity(r);
    search_tuples(l, &vectors, r, 0, &mut tuple, &mut best);

    let certified = best
        .as_ref()
        .map(|w| lower.cmp_rational(&w.disc) == std::cmp::Ordering::Equal)
        .unwrap_or(false);
    if certified {
        let w = best.unwrap();
        return Ok(DrResult {
            r,
            certified: true,
            value: DrValue::Exact(w.disc.clone()),
            witness: Some(w),
        });
    }
    Ok(DrResult {
        r,
        certified: false,
        value: DrValue::Interval {
            lower,
            best_found: best.as_ref().map(|w| w.disc.clone()),
        },
        witness: best,
    })
}

fn search_tuples(
    l: &HermLattice,
    vectors: &[(Vec<FieldElement>, Rational)],
    r: usize,
    start: usize,
    tuple: &mut Vec<usize>,
    best: &mut Option<HermSublattice>,
) {
    if tuple.len() == r {
        let basis: Vec<Vec<FieldElement>> =
            tuple.iter().map(|&i| vectors[i].0.clone()).collect();
        let gram = l.induced_gram(&basis);
        let det = field_det(l.field(), &gram);
        let disc = det.re().clone();
        if disc.is_positive() && best.as_ref().is_none_or(|b| disc < b.disc) {
            *best = Some(HermSublattice { basis, gram, disc });
        }
        return;
    }
    for i in start..vectors.len() {
        tuple.push(i);
        search_tuples(l, vectors, r, i + 1, tuple, best);
        tuple.pop();
    }
}

/// Orthogonal decomposition along a saturated sublattice S: returns the
/// section F∩L (= S) and the image of the orthogonal projection of L onto
/// F^⊥, where F = K·S. Discriminants satisfy d_L = d_section·d_projection.
pub fn orthogonal_decompose(
    l: &HermLattice,
    s: &HermSublattice,
) -> Result<(HermLattice, HermLattice)> {
    let field = l.field().clone();
    if !field.is_euclidean() {
        return Err(Error::unsupported(
            "orthogonal decomposition needs a norm-Euclidean ring of integers",
        ));
    }
    let m = l.rank();
    let r = s.rank();
    if r == 0 || r > m {
        return Err(Error::validation("sublattice rank out of range"));
    }
    // Column matrix of S's basis, diagonalized over O_K.
    let a: Vec<Vec<FieldElement>> = (0..m)
        .map(|i| (0..r).map(|j| s.basis[j][i].clone()).collect())
        .collect();
    let diag = diagonalize_over_ok(&field, a)?;
    if diag.rank < r {
        return Err(Error::validation("sublattice basis is linearly dependent"));
    }
    for (k, d) in diag.diagonal.iter().enumerate() {
        if d.norm() != Rational::one() {
            // The k-th transformed basis vector lies in F∩L but only d·v in S.
            let v: Vec<String> =
                (0..m).map(|i| diag.left[i][k].to_string()).collect();
            return Err(Error::validation(format!(
                "sublattice is not saturated: vector ({}) lies in K·S ∩ L but not in S",
                v.join(", ")
            )));
        }
    }

    // Columns of `left`: the first r span F∩L, all m form a basis of L.
    let section_basis: Vec<Vec<FieldElement>> =
        (0..r).map(|j| (0..m).map(|i| diag.left[i][j].clone()).collect()).collect();
    let section_gram = l.induced_gram(&section_basis);
    let section = HermLattice::new(field.clone(), section_gram)?;

    let tail: Vec<Vec<FieldElement>> =
        (r..m).map(|j| (0..m).map(|i| diag.left[i][j].clone()).collect()).collect();
    // Projection of t onto F: p(t) = Σ c_k s_k with Σ c_k h(s_k, s_i) = h(t, s_i).
    let gram_s = l.induced_gram(&section_basis);
    let mut proj_vectors: Vec<Vec<FieldElement>> = Vec::with_capacity(m - r);
    for t in &tail {
        let rhs: Vec<FieldElement> =
            section_basis.iter().map(|s_i| l.herm_inner(t, s_i)).collect();
        let coeffs = field_solve_left(&field, &gram_s, &rhs)?;
        let mut q = t.clone();
        for (k, c) in coeffs.iter().enumerate() {
            for i in 0..m {
                let sub = c * &section_basis[k][i];
                q[i] = &q[i] - &sub;
            }
        }
        proj_vectors.push(q);
    }
    let proj_gram = l.induced_gram(&proj_vectors);
    let projection = HermLattice::new(field, proj_gram)?;
    Ok((section, projection))
}

/// Basis of the O_K-module generated by the columns of an integral matrix
/// (rows are ambient coordinates). `None` on degenerate input.
pub fn module_basis(
    field: &QuadField,
    matrix: &[Vec<FieldElement>],
) -> Option<Vec<Vec<FieldElement>>> {
    let diag = diagonalize_over_ok(field, matrix.to_vec()).ok()?;
    let m = matrix.len();
    Some(
        (0..diag.rank)
            .map(|j| (0..m).map(|i| &diag.left[i][j] * &diag.diagonal[j]).collect())
            .collect(),
    )
}

struct Diagonalization {
    /// Unimodular m×m matrix over O_K; A = left·D·right.
    left: Vec<Vec<FieldElement>>,
    diagonal: Vec<FieldElement>,
    rank: usize,
}

/// Diagonalizes an integral matrix over the Euclidean ring O_K by row and
/// column operations (Smith-style, without the divisibility chain).
fn diagonalize_over_ok(
    field: &QuadField,
    mut a: Vec<Vec<FieldElement>>,
) -> Result<Diagonalization> {
    let m = a.len();
    let r = if m == 0 { 0 } else { a[0].len() };
    // left accumulates the inverses of the row operations, so that
    // A_original = left · A_current (column ops act on the right and are
    // absorbed; we do not need them).
    let mut left: Vec<Vec<FieldElement>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect();
    let mut t = 0usize;
    while t < m.min(r) {
        // Pivot: entry of minimal nonzero norm in the remaining block.
        let mut pivot: Option<(usize, usize, Rational)> = None;
        for i in t..m {
            for j in t..r {
                if a[i][j].is_zero() {
                    continue;
                }
                let n = a[i][j].norm();
                if pivot.as_ref().is_none_or(|(_, _, pn)| n < *pn) {
                    pivot = Some((i, j, n));
                }
            }
        }
        let Some((pi, pj, _)) = pivot else { break };
        swap_rows(&mut a, &mut left, t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        let mut clean = true;
        // Clear the column below the pivot.
        for i in t + 1..m {
            if a[i][t].is_zero() {
                continue;
            }
            let (q, rem) = euclidean_divide(field, &a[i][t], &a[t][t])?;
            row_sub(&mut a, &mut left, i, t, &q);
            if !rem.is_zero() {
                clean = false;
            }
        }
        // Clear the row right of the pivot (column ops need no tracking).
        for j in t + 1..r {
            if a[t][j].is_zero() {
                continue;
            }
            let (q, rem) = euclidean_divide(field, &a[t][j], &a[t][t])?;
            for row in a.iter_mut() {
                let sub = &q * &row[t];
                row[j] = &row[j] - &sub;
            }
            if !rem.is_zero() {
                clean = false;
            }
        }
        if clean {
            t += 1;
        }
        // Otherwise a remainder of smaller norm appeared; re-select the pivot.
    }
    let diagonal: Vec<FieldElement> = (0..t).map(|k| a[k][k].clone()).collect();
    Ok(Diagonalization { left, diagonal, rank: t })
}

fn swap_rows(
    a: &mut [Vec<FieldElement>],
    left: &mut [Vec<FieldElement>],
    i: usize,
    j: usize,
) {
    if i == j {
        return;
    }
    a.swap(i, j);
    // Row swap on A is compensated by a column swap on `left`.
    for row in left.iter_mut() {
        row.swap(i, j);
    }
}

/// Row op a_i ← a_i − q·a_t, compensated on `left` by column t ← column t + q·column i.
fn row_sub(
    a: &mut [Vec<FieldElement>],
    left: &mut [Vec<FieldElement>],
    i: usize,
    t: usize,
    q: &FieldElement,
) {
    if q.is_zero() {
        return;
    }
    let cols = a[0].len();
    for c in 0..cols {
        let sub = q * &a[t][c];
        a[i][c] = &a[i][c] - &sub;
    }
    for row in left.iter_mut() {
        let add = q * &row[i];
        row[t] = &row[t] + &add;
    }
}
