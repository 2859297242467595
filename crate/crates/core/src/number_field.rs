//! Exact arithmetic in imaginary quadratic fields K = ℚ(√−d).
//!
//! Elements are stored on the ℚ-basis (1, √−d); coordinates on (1, ω) with
//! ω the canonical integral generator are available as a view. The five
//! norm-Euclidean fields (d ∈ {1, 2, 3, 7, 11}) carry their exact Euclidean
//! minimum, and the ring of integers supports Euclidean division there.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{self, Rational};

/// Descriptor of K = ℚ(√−d) for squarefree d ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadField {
    d: u64,
    disc: i64,
    euclidean_min: Option<Rational>,
}

/// Squarefree test by trial division.
fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

impl QuadField {
    /// Builds the field descriptor. Errors on non-positive or non-squarefree d.
    pub fn new(d: u64) -> Result<QuadField> {
        if d == 0 {
            return Err(Error::validation("d must be positive"));
        }
        if !is_squarefree(d) {
            return Err(Error::validation(format!("d = {d} is not squarefree")));
        }
        if d > i64::MAX as u64 / 4 {
            return Err(Error::validation(format!("d = {d} is too large")));
        }
        let disc = if d % 4 == 3 { -(d as i64) } else { -4 * d as i64 };
        let euclidean_min = match d {
            1 => Some(rat::ratio(1, 2)),
            2 => Some(rat::ratio(3, 4)),
            3 => Some(rat::ratio(1, 3)),
            7 => Some(rat::ratio(4, 7)),
            11 => Some(rat::ratio(9, 11)),
            _ => None,
        };
        Ok(QuadField { d, disc, euclidean_min })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Field discriminant d_K (negative).
    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn abs_disc(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    /// Exact Euclidean minimum μ(O_K), populated for d ∈ {1, 2, 3, 7, 11}.
    pub fn euclidean_min(&self) -> Option<&Rational> {
        self.euclidean_min.as_ref()
    }

    /// O_K is norm-Euclidean exactly when μ(O_K) < 1.
    pub fn is_euclidean(&self) -> bool {
        self.euclidean_min.is_some()
    }

    /// Canonical integral generator: √−d, or (1+√−d)/2 when d ≡ 3 (mod 4).
    pub fn omega(&self) -> FieldElement {
        if self.d % 4 == 3 {
            self.element(rat::ratio(1, 2), rat::ratio(1, 2))
        } else {
            self.element(Rational::zero(), Rational::one())
        }
    }

    pub fn sqrt_minus_d(&self) -> FieldElement {
        self.element(Rational::zero(), Rational::one())
    }

    pub fn zero(&self) -> FieldElement {
        self.element(Rational::zero(), Rational::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.element(Rational::one(), Rational::zero())
    }

    /// Element re + im·√−d.
    pub fn element(&self, re: Rational, im: Rational) -> FieldElement {
        FieldElement { re, im, d: self.d }
    }

    pub fn from_rat(&self, r: Rational) -> FieldElement {
        self.element(r, Rational::zero())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rat(rat::rat(n))
    }

    /// Element a + b·ω on the integral basis (1, ω).
    pub fn integral(&self, a: i64, b: i64) -> FieldElement {
        &self.from_int(a) + &(&self.omega() * &self.from_int(b))
    }

    /// The unit group of O_K: sixth roots for d = 3, fourth roots for d = 1,
    /// and {±1} otherwise.
    pub fn units(&self) -> Vec<FieldElement> {
        let one = self.one();
        match self.d {
            1 => {
                let i = self.sqrt_minus_d();
                vec![one.clone(), -&one, i.clone(), -&i]
            }
            3 => {
                let zeta = self.omega(); // (1+√−3)/2, a primitive sixth root of unity
                let zeta2 = &zeta * &zeta;
                vec![one.clone(), -&one, zeta.clone(), -&zeta, zeta2.clone(), -&zeta2]
            }
            _ => vec![one.clone(), -&one],
        }
    }
}

/// Element of K = ℚ(√−d) with exact rational coordinates on (1, √−d).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldElement {
    #[serde(with = "rat::serde_rational_str")]
    re: Rational,
    #[serde(with = "rat::serde_rational_str")]
    im: Rational,
    #[serde(skip, default)]
    d: u64,
}

impl FieldElement {
    pub fn re(&self) -> &Rational {
        &self.re
    }

    /// Coefficient of √−d.
    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn field_d(&self) -> u64 {
        self.d
    }

    /// Used by deserializers, which cannot know d from the element alone.
    pub(crate) fn with_field(mut self, d: u64) -> FieldElement {
        self.d = d;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> FieldElement {
        FieldElement { re: self.re.clone(), im: -self.im.clone(), d: self.d }
    }

    /// N(x) = x·conj(x) = re² + d·im² ≥ 0, zero only at x = 0.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + rat::rat(self.d as i64) * &self.im * &self.im
    }

    /// Tr(x) = x + conj(x) = 2·re.
    pub fn trace(&self) -> Rational {
        &self.re + &self.re
    }

    pub fn scale(&self, c: &Rational) -> FieldElement {
        FieldElement { re: &self.re * c, im: &self.im * c, d: self.d }
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(self.conj().scale(&(Rational::one() / n)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self * &other.inverse()?)
    }

    /// Membership in O_K.
    pub fn is_integral(&self) -> bool {
        if self.d % 4 == 3 {
            let two_im = &self.im + &self.im;
            let diff = &self.re - &self.im;
            two_im.is_integer() && diff.is_integer()
        } else {
            self.re.is_integer() && self.im.is_integer()
        }
    }

    /// Coordinates (a, b) with x = a + b·ω, defined for integral elements.
    pub fn omega_coords(&self) -> Option<(BigInt, BigInt)> {
        if !self.is_integral() {
            return None;
        }
        if self.d % 4 == 3 {
            let b = (&self.im + &self.im).to_integer();
            let a = (&self.re - &self.im).to_integer();
            Some((a, b))
        } else {
            Some((self.re.to_integer(), self.im.to_integer()))
        }
    }

    /// Lexicographic key on (re, im); the canonical element order.
    pub fn lex_key(&self) -> (Rational, Rational) {
        (self.re.clone(), self.im.clone())
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert_eq!(self.d, other.d, "mixed-field arithmetic");
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", rat::format_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*sqrt(-{})", rat::format_rational(&self.im), self.d);
        }
        let im = if self.im.is_negative() {
            format!("-{}", rat::format_rational(&-self.im.clone()))
        } else {
            format!("+{}", rat::format_rational(&self.im))
        };
        write!(f, "{}{}*sqrt(-{})", rat::format_rational(&self.re), im, self.d)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, other: &FieldElement) -> FieldElement {
                self.assert_same_field(other);
                let ($a, $b) = (self, other);
                $body
            }
        }
    };
}

impl_binop!(Add, add, |a, b| FieldElement {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
    d: a.d
});
impl_binop!(Sub, sub, |a, b| FieldElement {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
    d: a.d
});
impl_binop!(Mul, mul, |a, b| {
    // (x + y√−d)(u + v√−d) = xu − d·yv + (xv + yu)√−d
    let dd = rat::rat(a.d as i64);
    FieldElement {
        re: &a.re * &b.re - &dd * &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
        d: a.d,
    }
});

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { re: -self.re.clone(), im: -self.im.clone(), d: self.d }
    }
}

/// Euclidean division in O_K: a = q·b + r with q ∈ O_K minimizing
/// N(a/b − q), ties broken lexicographically on (re, im) of q.
///
/// Requires a norm-Euclidean field, so that N(r)/N(b) ≤ μ(O_K) < 1.
pub fn euclidean_divide(
    field: &QuadField,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<(FieldElement, FieldElement)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !field.is_euclidean() {
        return Err(Error::unsupported(format!(
            "O_K for d = {} is not norm-Euclidean",
            field.d
        )));
    }
    let z = a.div(b)?;
    let q = nearest_integral(field, &z);
    let r = a - &(&q * b);
    Ok((q, r))
}

/// The integral element q minimizing N(z − q), ties lexicographic on (re, im).
pub fn nearest_integral(field: &QuadField, z: &FieldElement) -> FieldElement {
    // ω-coordinates of z: z = x + y·ω with x, y ∈ ℚ.
    let omega = field.omega();
    let (x, y) = if field.d % 4 == 3 {
        let y = z.im() + z.im();
        let x = z.re() - z.im();
        (x, y)
    } else {
        (z.re().clone(), z.im().clone())
    };
    let x0 = rat::round_nearest(&x);
    let y0 = rat::round_nearest(&y);
    let mut best: Option<(Rational, FieldElement)> = None;
    // A ±2 grid around the naive rounding always contains the minimizer.
    for dv in -2i64..=2 {
        for du in -2i64..=2 {
            let u = &x0 + BigInt::from(du);
            let v = &y0 + BigInt::from(dv);
            let q = &field.from_rat(Rational::from_integer(u))
                + &(&omega * &field.from_rat(Rational::from_integer(v)));
            let dist = (z - &q).norm();
            let better = match &best {
                None => true,
                Some((bd, bq)) => {
                    dist < *bd || (dist == *bd && q.lex_key() < bq.lex_key())
                }
            };
            if better {
                best = Some((dist, q));
            }
        }
    }
    best.expect("candidate grid is never empty").1
}

/// All x ∈ O_K with N(x) = target, canonically ordered by (re, im).
/// The empty list is a proof of non-representability: the search is an
/// exhaustive bounded enumeration of the rank-2 norm form.
pub fn elements_of_norm(field: &QuadField, target: &Rational) -> Result<Vec<FieldElement>> {
    if target.is_negative() {
        return Err(Error::validation("norm target must be non-negative"));
    }
    if target.is_zero() {
        return Ok(vec![field.zero()]);
    }
    // Norms of integral elements are non-negative integers.
    if !target.is_integer() {
        return Ok(Vec::new());
    }
    let t = target.to_integer();
    let d = BigInt::from(field.d);
    let mut out = Vec::new();
    if field.d % 4 == 3 {
        // x = u + v·ω, 4N(x) = (2u+v)² + d·v².
        let four_t = BigInt::from(4) * &t;
        let vmax = rat::floor_sqrt(&Rational::new(four_t.clone(), d.clone()));
        let mut v = -vmax.clone();
        while v <= vmax {
            let rem = &four_t - &d * &v * &v;
            if !rem.is_negative() {
                let s = rem.sqrt();
                if &s * &s == rem {
                    for sgn in [s.clone(), -s.clone()] {
                        let num = &sgn - &v;
                        if (&num % 2u8).is_zero() {
                            let u = num / 2;
                            let x = field.integral_big(&u, &v);
                            if !out.contains(&x) {
                                out.push(x);
                            }
                        }
                        if sgn.is_zero() {
                            break;
                        }
                    }
                }
            }
            v += 1;
        }
    } else {
        // x = u + v·√−d, N(x) = u² + d·v².
        let vmax = rat::floor_sqrt(&Rational::new(t.clone(), d.clone()));
        let mut v = -vmax.clone();
        while v <= vmax {
            let rem = &t - &d * &v * &v;
            let s = rem.sqrt();
            if &s * &s == rem {
                for sgn in [s.clone(), -s.clone()] {
                    let x = field.element(
                        Rational::from_integer(sgn.clone()),
                        Rational::from_integer(v.clone()),
                    );
                    if !out.contains(&x) {
                        out.push(x);
                    }
                    if sgn.is_zero() {
                        break;
                    }
                }
            }
            v += 1;
        }
    }
    out.sort_by(|a, b| a.lex_key().cmp(&b.lex_key()));
    Ok(out)
}

/// All x in the scaled module (1/denom)·O_K with N(x) = target.
///
/// Writing x = y/denom with y ∈ O_K reduces this to N(y) = target·N(denom);
/// taking denom = √−d searches the inverse different (1/√−d)·O_K.
pub fn elements_of_norm_scaled(
    field: &QuadField,
    target: &Rational,
    denom: &FieldElement,
) -> Result<Vec<FieldElement>> {
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !denom.is_integral() {
        return Err(Error::validation("scale denominator must lie in O_K"));
    }
    let scaled_target = target * denom.norm();
    let inv = denom.inverse()?;
    Ok(elements_of_norm(field, &scaled_target)?
        .into_iter()
        .map(|y| &y * &inv)
        .collect())
}

impl QuadField {
    fn integral_big(&self, a: &BigInt, b: &BigInt) -> FieldElement {
        let omega = self.omega();
        &self.from_rat(Rational::from_integer(a.clone()))
            + &(&omega * &self.from_rat(Rational::from_integer(b.clone())))
    }
}

/// Exact Euclidean-minimum data for O_K: μ, the deep holes of one Voronoi
/// cell, and their orbits under the group generated by unit multiplication
/// and conjugation.
#[derive(Debug, Clone)]
pub struct DeepHoleReport {
    pub mu: Rational,
    pub holes: Vec<FieldElement>,
    /// Orbit partition as indices into `holes`.
    pub orbits: Vec<Vec<usize>>,
}

impl DeepHoleReport {
    /// Lexicographically smallest element of each orbit.
    pub fn orbit_representatives(&self) -> Vec<FieldElement> {
        self.orbits
            .iter()
            .map(|orbit| {
                orbit
                    .iter()
                    .map(|&i| self.holes[i].clone())
                    .min_by(|a, b| a.lex_key().cmp(&b.lex_key()))
                    .expect("orbits are non-empty")
            })
            .collect()
    }
}

/// Bilinear form x·y = ½Tr(x·conj(y)) on K as a ℚ-plane; x·x = N(x).
fn dot(x: &FieldElement, y: &FieldElement) -> Rational {
    x.re() * y.re() + rat::rat(x.field_d() as i64) * x.im() * y.im()
}

/// Computes μ(O_K) exactly as the maximal vertex norm of the Voronoi cell
/// of the rank-2 lattice O_K, together with all vertices attaining it.
pub fn euclidean_minimum(field: &QuadField) -> DeepHoleReport {
    // Lagrange-Gauss reduce the basis (1, ω).
    let mut v1 = field.one();
    let mut v2 = field.omega();
    loop {
        if v2.norm() < v1.norm() {
            std::mem::swap(&mut v1, &mut v2);
        }
        let t = rat::round_nearest(&(dot(&v1, &v2) / v1.norm()));
        if t.is_zero() {
            break;
        }
        v2 = &v2 - &v1.scale(&Rational::from_integer(t));
        if v2.norm() >= v1.norm() {
            break;
        }
    }
    if v2.norm() < v1.norm() {
        std::mem::swap(&mut v1, &mut v2);
    }

    // Relevant vectors of a reduced 2-dimensional basis.
    let b12 = dot(&v1, &v2);
    let mut relevant = vec![v1.clone(), -&v1, v2.clone(), -&v2];
    if !b12.is_zero() {
        let w = if b12.is_positive() { &v1 - &v2 } else { &v1 + &v2 };
        relevant.push(w.clone());
        relevant.push(-&w);
    }

    // Vertices: points equidistant from 0 and two independent relevant
    // vectors, kept only if no relevant vector is closer than 0.
    let mut vertices: Vec<FieldElement> = Vec::new();
    for i in 0..relevant.len() {
        for j in i + 1..relevant.len() {
            let (u, w) = (&relevant[i], &relevant[j]);
            // Solve 2·dot(z,u) = N(u), 2·dot(z,w) = N(w).
            let d = rat::rat(field.d() as i64);
            let det = u.re() * (&d * w.im()) - w.re() * (&d * u.im());
            if det.is_zero() {
                continue;
            }
            let half = rat::ratio(1, 2);
            let (nu, nw) = (u.norm() * &half, w.norm() * &half);
            let zre = (&nu * (&d * w.im()) - &nw * (&d * u.im())) / &det;
            let zim = (u.re() * &nw - w.re() * &nu) / &det;
            let z = field.element(zre, zim);
            let inside = relevant.iter().all(|r| {
                let two_zr = dot(&z, r) + dot(&z, r);
                two_zr <= r.norm()
            });
            if inside && !vertices.contains(&z) {
                vertices.push(z);
            }
        }
    }

    let mu = vertices.iter().map(|z| z.norm()).max().expect("cell has vertices");
    let mut holes: Vec<FieldElement> =
        vertices.into_iter().filter(|z| z.norm() == mu).collect();
    holes.sort_by(|a, b| a.lex_key().cmp(&b.lex_key()));

    // Orbits under unit multiplication and conjugation. Both preserve the
    // lattice and the norm, so they permute the vertex set.
    let units = field.units();
    let find = |x: &FieldElement, hs: &[FieldElement]| -> usize {
        hs.iter()
            .position(|h| h == x)
            .expect("units and conjugation permute the deep holes")
    };
    let mut orbit_of: Vec<Option<usize>> = vec![None; holes.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..holes.len() {
        if orbit_of[start].is_some() {
            continue;
        }
        let id = orbits.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        orbit_of[start] = Some(id);
        while let Some(i) = stack.pop() {
            members.push(i);
            let z = holes[i].clone();
            let mut images: Vec<FieldElement> =
                units.iter().map(|u| u * &z).collect();
            images.push(z.conj());
            for img in images {
                let j = find(&img, &holes);
                if orbit_of[j].is_none() {
                    orbit_of[j] = Some(id);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }

    DeepHoleReport { mu, holes, orbits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn field_descriptors() {
        let k7 = QuadField::new(7).unwrap();
        assert_eq!(k7.disc(), -7);
        assert_eq!(k7.omega(), k7.element(ratio(1, 2), ratio(1, 2)));
        assert_eq!(k7.euclidean_min(), Some(&ratio(4, 7)));

        let k1 = QuadField::new(1).unwrap();
        assert_eq!(k1.disc(), -4);
        assert_eq!(k1.omega(), k1.sqrt_minus_d());
        assert_eq!(k1.euclidean_min(), Some(&ratio(1, 2)));

        let k5 = QuadField::new(5).unwrap();
        assert_eq!(k5.disc(), -20);
        assert!(k5.euclidean_min().is_none());

        assert!(QuadField::new(0).is_err());
        assert!(QuadField::new(4).is_err());
        assert!(QuadField::new(12).is_err());
    }

    #[test]
    fn norm_trace_conj() {
        let k7 = QuadField::new(7).unwrap();
        let alpha = k7.omega();
        assert_eq!(alpha.norm(), rat(2));
        assert_eq!(alpha.trace(), rat(1));
        // α² − α + 2 = 0
        let zero = &(&(&alpha * &alpha) - &alpha) + &k7.from_int(2);
        assert!(zero.is_zero());

        let k11 = QuadField::new(11).unwrap();
        let eta = k11.omega();
        assert_eq!(eta.norm(), rat(3));
        assert_eq!(eta.trace(), rat(1));

        let z = k7.zero();
        assert_eq!(z.norm(), rat(0));
        assert_eq!(z.trace(), rat(0));
        assert_eq!(z.conj(), z);

        let x = k7.element(ratio(1, 3), ratio(-2, 5));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn integrality() {
        let k7 = QuadField::new(7).unwrap();
        assert!(k7.omega().is_integral());
        assert!(k7.integral(3, -4).is_integral());
        assert!(!k7.element(ratio(1, 2), rat(0)).is_integral());
        assert_eq!(
            k7.integral(3, -4).omega_coords(),
            Some((BigInt::from(3), BigInt::from(-4)))
        );
        let k2 = QuadField::new(2).unwrap();
        assert!(!k2.element(ratio(1, 2), ratio(1, 2)).is_integral());
        assert!(k2.element(rat(1), rat(1)).is_integral());
    }

    #[test]
    fn euclidean_division_examples() {
        let k7 = QuadField::new(7).unwrap();
        let a = k7.from_int(4);
        let b = k7.sqrt_minus_d();
        let (q, r) = euclidean_divide(&k7, &a, &b).unwrap();
        assert!(q.is_integral());
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.norm() / b.norm() <= ratio(4, 7));

        // a = b gives q = 1, r = 0.
        let x = k7.integral(2, 3);
        let (q, r) = euclidean_divide(&k7, &x, &x).unwrap();
        assert_eq!(q, k7.one());
        assert!(r.is_zero());

        let (_, rr) = euclidean_divide(&k7, &k7.zero(), &x).unwrap();
        assert!(rr.is_zero());

        assert!(euclidean_divide(&k7, &a, &k7.zero()).is_err());
        let k5 = QuadField::new(5).unwrap();
        assert!(euclidean_divide(&k5, &k5.from_int(4), &k5.from_int(2)).is_err());
    }

    #[test]
    fn euclidean_division_d11_vs_exhaustive() {
        // Independent oracle: scan a wide grid of integral candidates.
        let k11 = QuadField::new(11).unwrap();
        let a = k11.from_int(3);
        let b = k11.sqrt_minus_d();
        let (q, r) = euclidean_divide(&k11, &a, &b).unwrap();
        let z = a.div(&b).unwrap();
        let mut best: Option<Rational> = None;
        for u in -5..=5 {
            for v in -5..=5 {
                let cand = k11.integral(u, v);
                let dist = (&z - &cand).norm();
                if best.as_ref().is_none_or(|b| dist < *b) {
                    best = Some(dist);
                }
            }
        }
        assert_eq!((&z - &q).norm(), best.unwrap());
        assert!(r.norm() / b.norm() <= ratio(9, 11));
    }

    #[test]
    fn norm_equation_solutions() {
        let k7 = QuadField::new(7).unwrap();
        // N = 2 in O_K: exactly ±α, ±conj(α).
        let sols = elements_of_norm(&k7, &rat(2)).unwrap();
        assert_eq!(sols.len(), 4);
        let alpha = k7.omega();
        for s in [&alpha, &-&alpha, &alpha.conj(), &-&alpha.conj()] {
            assert!(sols.contains(s));
        }
        // 15 is not a norm in Z[α].
        assert!(elements_of_norm(&k7, &rat(15)).unwrap().is_empty());

        let k11 = QuadField::new(11).unwrap();
        // No elements of norm 35/11 in (1/√−11)O_K.
        let sqrt = k11.sqrt_minus_d();
        assert!(elements_of_norm_scaled(&k11, &ratio(35, 11), &sqrt).unwrap().is_empty());
        assert!(elements_of_norm_scaled(&k11, &ratio(34, 11), &sqrt).unwrap().is_empty());
        // ... while 36/11 and 3 are represented there.
        assert!(!elements_of_norm_scaled(&k11, &ratio(36, 11), &sqrt).unwrap().is_empty());
        assert!(!elements_of_norm_scaled(&k11, &rat(3), &sqrt).unwrap().is_empty());

        assert!(elements_of_norm(&k7, &rat(-1)).is_err());
        assert_eq!(elements_of_norm(&k7, &rat(0)).unwrap(), vec![k7.zero()]);
        // Non-integral targets are not norms of integral elements.
        assert!(elements_of_norm(&k7, &ratio(1, 2)).unwrap().is_empty());
    }

    #[test]
    fn elements_of_norm_agrees_with_double_loop() {
        // |u + vω| ≤ 50 forces ω-coordinates well inside ±16.
        for d in [1u64, 3, 7, 11, 13] {
            let k = QuadField::new(d).unwrap();
            for t in [0i64, 1, 2, 3, 4, 7, 9, 15, 16, 25, 34, 35, 36, 49, 50] {
                let fast = elements_of_norm(&k, &rat(t)).unwrap();
                let mut slow = Vec::new();
                for u in -16..=16i64 {
                    for v in -16..=16i64 {
                        let x = k.integral(u, v);
                        if x.norm() == rat(t) {
                            slow.push(x);
                        }
                    }
                }
                slow.sort_by(|a, b| a.lex_key().cmp(&b.lex_key()));
                assert_eq!(fast, slow, "d={d}, t={t}");
            }
        }
    }

    #[test]
    fn deep_holes_d7() {
        let k7 = QuadField::new(7).unwrap();
        let report = euclidean_minimum(&k7);
        assert_eq!(report.mu, ratio(4, 7));
        assert_eq!(report.holes.len(), 6);
        assert_eq!(report.orbits.len(), 2);
        // Orbit representatives match 2/√−7 and (7+3√−7)/14 up to the group action.
        let two_over_sqrt = k7.element(rat(0), ratio(-2, 7)); // 2/√−7 = −(2/7)√−7
        let other = k7.element(ratio(1, 2), ratio(3, 14));
        let in_some_orbit = |x: &FieldElement| report.holes.iter().any(|h| h == x);
        assert!(in_some_orbit(&two_over_sqrt) || in_some_orbit(&-&two_over_sqrt));
        assert!(in_some_orbit(&other) || in_some_orbit(&-&other));
    }

    #[test]
    fn deep_holes_d2_d3() {
        let k2 = QuadField::new(2).unwrap();
        let report = euclidean_minimum(&k2);
        assert_eq!(report.mu, ratio(3, 4));
        assert_eq!(report.holes.len(), 4);
        let rep = k2.element(ratio(1, 2), ratio(1, 2));
        assert!(report.holes.contains(&rep));

        let k3 = QuadField::new(3).unwrap();
        let report = euclidean_minimum(&k3);
        assert_eq!(report.mu, ratio(1, 3));
        assert_eq!(report.holes.len(), 6);
    }

    #[test]
    fn deep_holes_recheck_against_nearest_points() {
        // Every reported hole z: min over nearby a ∈ O_K of N(z−a) equals μ.
        for d in [1u64, 2, 3, 7, 11] {
            let k = QuadField::new(d).unwrap();
            let report = euclidean_minimum(&k);
            for z in &report.holes {
                let mut best: Option<Rational> = None;
                for u in -3..=3 {
                    for v in -3..=3 {
                        let a = k.integral(u, v);
                        let n = (z - &a).norm();
                        if best.as_ref().is_none_or(|b| n < *b) {
                            best = Some(n);
                        }
                    }
                }
                assert_eq!(best.unwrap(), report.mu, "d={d}, hole {z}");
            }
        }
    }

    #[test]
    fn units_have_norm_one() {
        for d in [1u64, 2, 3, 7, 11, 5] {
            let k = QuadField::new(d).unwrap();
            let units = k.units();
            for u in &units {
                assert_eq!(u.norm(), rat(1));
                assert!(u.is_integral());
            }
            let expected = match d {
                1 => 4,
                3 => 6,
                _ => 2,
            };
            assert_eq!(units.len(), expected);
        }
    }
}
