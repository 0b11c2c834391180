use std::fmt;

use super::Scalar;

/// Dense polynomial in one variable `t`, coefficients in ascending degree.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// `1 - t^k`.
    pub fn one_minus_power(k: usize) -> Self {
        let mut c = vec![Scalar::zero(); k + 1];
        c[0] = Scalar::one();
        c[k] = &c[k] - &Scalar::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Scalar {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        Self::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        Self::new((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = divisor.lead().recip();
        let mut rem = self.0.clone();
        let mut quot = vec![Scalar::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() * &inv;
            for (j, c) in divisor.0.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&q * c);
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let l = a.lead().recip();
        a.scale(&l)
    }

    /// First `n` power-series coefficients of `self / den`; needs `den(0) ≠ 0`.
    pub fn series_div(&self, den: &UniPoly, n: usize) -> Vec<Scalar> {
        let d0 = den.coeff(0);
        assert!(!d0.is_zero(), "series denominator vanishes at t = 0");
        let inv = d0.recip();
        let mut out: Vec<Scalar> = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeff(k);
            for j in 1..den.0.len().min(k + 1) {
                if !den.0[j].is_zero() {
                    c = &c - &(&den.0[j] * &out[k - j]);
                }
            }
            out.push(&c * &inv);
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if c.is_rational() => (true, rest.to_string()),
                _ => (false, if c.is_rational() { s } else { format!("({s})") }),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match (i, body.as_str()) {
                (0, _) => write!(f, "{body}")?,
                (1, "1") => write!(f, "t")?,
                (1, _) => write!(f, "{body}*t")?,
                (_, "1") => write!(f, "t^{i}")?,
                _ => write!(f, "{body}*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    #[test]
    fn gcd_and_division() {
        // (1 - t)(1 + t) and (1 - t)(2 + t)
        let a = p(&[1, 0, -1]);
        let b = p(&[2, -1, -1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (q, r) = a.div_rem(&p(&[1, -1]));
        assert_eq!((q, r), (p(&[1, 1]), UniPoly::zero()));
        assert_eq!(UniPoly::one_minus_power(3).to_string(), "1 - t^3");
    }

    #[test]
    fn geometric_series() {
        let s = UniPoly::one().series_div(&UniPoly::one_minus_power(2), 6);
        assert_eq!(s, [1, 0, 1, 0, 1, 0].map(Scalar::from_int));
    }

    proptest! {
        #[test]
        fn division_identity(a in proptest::collection::vec(-5i64..6, 0..6), b in proptest::collection::vec(-5i64..6, 1..4)) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }
    }
}
