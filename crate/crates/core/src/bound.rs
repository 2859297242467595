//! Exact algebraic lower bounds of the shapes q·√s and r·x^(1/r).
//!
//! Certificates must never round: comparisons against rationals are done by
//! integer powering (squaring for surds, r-th powers for root bounds).

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::rat::{self, Rational};

/// The non-negative real number coeff·√radicand, with exact comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdBound {
    coeff: Rational,
    radicand: Rational,
}

impl SurdBound {
    pub fn new(coeff: Rational, radicand: Rational) -> SurdBound {
        assert!(!coeff.is_negative() && !radicand.is_negative(), "surd bounds are non-negative");
        let mut s = SurdBound { coeff, radicand };
        s.normalize();
        s
    }

    pub fn rational(q: Rational) -> SurdBound {
        SurdBound::new(q, Rational::from_integer(1.into()))
    }

    pub fn zero() -> SurdBound {
        SurdBound::rational(Rational::zero())
    }

    fn normalize(&mut self) {
        if self.coeff.is_zero() || self.radicand.is_zero() {
            self.coeff = Rational::zero();
            self.radicand = Rational::from_integer(1.into());
            return;
        }
        // Fold perfect-square radicands into the coefficient.
        let n = rat::floor_sqrt(&self.radicand);
        let n2 = Rational::from_integer(&n * &n);
        if n2 == self.radicand {
            self.coeff *= Rational::from_integer(n);
            self.radicand = Rational::from_integer(1.into());
        }
    }

    pub fn is_rational(&self) -> Option<&Rational> {
        if self.radicand == Rational::from_integer(1.into()) {
            Some(&self.coeff)
        } else {
            None
        }
    }

    /// (coeff·√radicand)² = coeff²·radicand, exact.
    pub fn square(&self) -> Rational {
        &self.coeff * &self.coeff * &self.radicand
    }

    pub fn mul(&self, other: &SurdBound) -> SurdBound {
        SurdBound::new(&self.coeff * &other.coeff, &self.radicand * &other.radicand)
    }

    pub fn div(&self, other: &SurdBound) -> SurdBound {
        assert!(!other.coeff.is_zero(), "division by zero surd");
        // 1/(c√d) = (1/(c·d))·√d
        let inv = SurdBound::new(
            (&other.coeff * &other.radicand).recip(),
            other.radicand.clone(),
        );
        self.mul(&inv)
    }

    /// Compares coeff·√radicand with a rational, exactly.
    pub fn cmp_rational(&self, t: &Rational) -> Ordering {
        if t.is_negative() {
            return Ordering::Greater;
        }
        self.square().cmp(&(t * t))
    }

    pub fn to_f64(&self) -> f64 {
        rat::to_f64(&self.coeff) * rat::to_f64(&self.radicand).sqrt()
    }
}

impl fmt::Display for SurdBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.is_rational() {
            write!(f, "{}", rat::format_rational(q))
        } else {
            write!(
                f,
                "{}*sqrt({})",
                rat::format_rational(&self.coeff),
                rat::format_rational(&self.radicand)
            )
        }
    }
}

/// The real number r·inner^(1/r); comparisons against a rational t are done
/// by comparing r^r·inner with t^r in exact arithmetic.
#[derive(Debug, Clone)]
pub struct RankBound {
    r: u32,
    inner: SurdBound,
}

impl RankBound {
    /// Bound r·inner^(1/r); `inner` is the product of the two rank-r
    /// discriminant bounds.
    pub fn new(r: u32, inner: SurdBound) -> RankBound {
        assert!(r >= 1);
        RankBound { r, inner }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn inner(&self) -> &SurdBound {
        &self.inner
    }

    pub fn cmp_rational(&self, t: &Rational) -> Ordering {
        if !t.is_positive() {
            return if self.inner.square().is_zero() && t.is_zero() {
                Ordering::Equal
            } else {
                Ordering::Greater
            };
        }
        // r·x^(1/r) vs t  ⟺  x vs (t/r)^r
        let tr = t / rat::rat(self.r as i64);
        let mut pow = Rational::from_integer(1.into());
        for _ in 0..self.r {
            pow *= &tr;
        }
        self.inner.cmp_rational(&pow)
    }

    /// True if the bound is exactly the rational t.
    pub fn equals_rational(&self, t: &Rational) -> bool {
        self.cmp_rational(t) == Ordering::Equal
    }

    pub fn to_f64(&self) -> f64 {
        let x = self.inner.square().to_f64().unwrap_or(f64::INFINITY);
        // inner = sqrt(x), bound = r * x^(1/(2r))
        self.r as f64 * x.powf(1.0 / (2.0 * self.r as f64))
    }
}

impl fmt::Display for RankBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 1 {
            write!(f, "{}", self.inner)
        } else if let Some(q) = self.inner.is_rational() {
            write!(f, "{}*({})^(1/{})", self.r, rat::format_rational(q), self.r)
        } else {
            write!(f, "{}*({})^(1/{})", self.r, self.inner, self.r)
        }
    }
}

/// γ_{2r}^r for the classical Hermite constants γ₂ = 2/√3, γ₄ = √2,
/// γ₆ = (64/3)^(1/6), γ₈ = 2, as exact surds. Ranks above 4 never occur in
/// the pipelines here.
pub fn hermite_gamma_pow(r: u32) -> SurdBound {
    match r {
        1 => SurdBound::new(rat::ratio(2, 3), rat::rat(3)), // 2/√3
        2 => SurdBound::rational(rat::rat(2)),
        3 => SurdBound::new(rat::ratio(8, 3), rat::rat(3)), // 8/√3
        4 => SurdBound::rational(rat::rat(16)),
        _ => panic!("Hermite constant γ_{{2r}} not shipped for r = {r}"),
    }
}

/// Lower bound on the discriminant of a rank-r sublattice of minimum ≥ m:
/// d ≥ (2·m / (√|d_K|·γ_{2r}))^r, from the Hermite-type inequality
/// γ_h ≤ (√|d_K|/2)·γ_{2r}.
pub fn hermite_dr_lower_bound(min: &Rational, abs_disc: u64, r: u32) -> SurdBound {
    let mut num = Rational::from_integer(1.into());
    for _ in 0..r {
        num *= min * rat::rat(2);
    }
    let numerator = SurdBound::rational(num);
    // |d_K|^(r/2)
    let dk = rat::rat(abs_disc as i64);
    let mut dk_pow = Rational::from_integer(1.into());
    for _ in 0..r / 2 {
        dk_pow *= &dk;
    }
    let dk_surd = if r % 2 == 1 {
        SurdBound::new(dk_pow, dk)
    } else {
        SurdBound::rational(dk_pow)
    };
    numerator.div(&dk_surd).div(&hermite_gamma_pow(r))
}
