//! Integer polynomials, Sturm chains and exact root counting.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::graph::Graph;

/// Integer polynomial, coefficients in ascending order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.0.last().expect("non-zero polynomial")
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Divides by the (positive) gcd of the coefficients.
    fn primitive(mut self) -> IntPoly {
        let content = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            for c in &mut self.0 {
                *c /= &content;
            }
        }
        self
    }

    fn negate(mut self) -> IntPoly {
        for c in &mut self.0 {
            *c = -&*c;
        }
        self
    }

    /// Pseudo-remainder `lc(b)^(deg a − deg b + 1) · a mod b`, and whether the scale factor is positive.
    fn pseudo_rem(&self, b: &IntPoly) -> (IntPoly, bool) {
        let mut r = self.0.clone();
        let db = b.degree();
        let lb = b.lead().clone();
        let mut steps = 0usize;
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.0.iter().enumerate() {
                r[dr - db + i] -= &lr * bc;
            }
            steps += 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        // every step multiplied by lb; missing steps (degree drops) are harmless for the sign bookkeeping
        let positive = lb.is_positive() || steps % 2 == 0;
        (IntPoly::new(r), positive)
    }

    /// Primitive greatest common divisor, leading coefficient positive.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.clone().primitive(), other.clone().primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        if !a.is_zero() && a.lead().is_negative() {
            a = a.negate();
        }
        a
    }

    /// Exact quotient `self / d`; panics if the division is not exact over the integers.
    pub fn exact_div(&self, d: &IntPoly) -> IntPoly {
        let mut r = self.0.clone();
        let dd = d.degree();
        if r.len() <= dd {
            return IntPoly::new(Vec::new());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (quot, rem) = r[k + dd].div_rem(d.lead());
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &quot * dc;
            }
            q[k] = quot;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPoly::new(q)
    }

    /// `self / gcd(self, self')`, leading coefficient positive.
    pub fn square_free(&self) -> IntPoly {
        let g = self.gcd(&self.derivative());
        let q = self.exact_div(&g);
        if q.lead().is_negative() {
            q.negate()
        } else {
            q
        }
    }

    /// Sign of `p(x)` at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let (a, b) = (x.numer(), x.denom());
        let d = self.degree();
        let mut bpow = BigInt::one();
        let mut acc = self.0[d].clone();
        for i in (0..d).rev() {
            bpow *= b;
            acc = acc * a + &self.0[i] * &bpow;
        }
        acc.sign_ordering()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.0.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact division by `(x − r)` for an integer root `r`.
    fn deflate(&self, r: &BigInt) -> IntPoly {
        self.exact_div(&IntPoly::new(vec![-r.clone(), BigInt::one()]))
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Sturm chain of a square-free polynomial with positive leading coefficient.
#[derive(Clone, Debug)]
pub struct Sturm {
    chain: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(q: &IntPoly) -> Sturm {
        let mut chain = vec![q.clone()];
        let d = q.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let (a, b) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
            if b.degree() == 0 {
                break;
            }
            let (r, positive) = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // Sturm needs −rem up to a positive factor
            let next = if positive { r.negate() } else { r };
            chain.push(next.primitive());
        }
        Sturm { chain }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn at_infinity(&self) -> usize {
        Sturm::variations(self.chain.iter().map(|p| p.lead().sign_ordering()))
    }

    /// Number of distinct real roots strictly greater than `x`.
    pub fn roots_above(&self, x: &BigRational) -> usize {
        let q = self.poly();
        if q.sign_at(x) == Ordering::Equal {
            // rational roots of a monic integer polynomial are integers
            debug_assert!(x.is_integer());
            let deflated = q.deflate(&x.to_integer());
            return Sturm::new(&deflated).roots_above(x);
        }
        Sturm::variations(self.chain.iter().map(|p| p.sign_at(x))) - self.at_infinity()
    }
}

/// Monic integer characteristic polynomial `det(λI − A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly(IntPoly);

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Coefficients in ascending powers of `λ`.
    pub fn coefficients(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn as_poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.0.sign_at(x)
    }
}

/// Faddeev–LeVerrier recurrence over exact integers.
pub fn char_poly(g: &Graph) -> Result<CharPoly> {
    let rows = g.fast_rows()?;
    let n = rows.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for k in 1..=n {
        if k > 1 {
            // M_k = A·M_{k−1} + c_{n−k+1} I
            let mut next: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
            for (i, row) in next.iter_mut().enumerate() {
                for w in crate::graph::Bits(rows[i]) {
                    for (x, y) in row.iter_mut().zip(&m[w]) {
                        *x += y;
                    }
                }
                row[i] += &c[n - k + 1];
            }
            m = next;
        }
        // tr(A·M_k) = Σ_i Σ_{w ∈ N(i)} M_k[w][i]
        let mut tr = BigInt::zero();
        for (i, &row) in rows.iter().enumerate() {
            for w in crate::graph::Bits(row) {
                tr += &m[w][i];
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        c[n - k] = -q;
    }
    Ok(CharPoly(IntPoly::new(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_characteristic_polynomials() {
        assert_eq!(char_poly(&Graph::complete(2)).unwrap().0, IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(char_poly(&Graph::path(3)).unwrap().0, IntPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(char_poly(&Graph::cycle(4)).unwrap().0, IntPoly::from_i64(&[0, 0, -4, 0, 1]));
        // K_4: (λ−3)(λ+1)^3
        assert_eq!(char_poly(&Graph::complete(4)).unwrap().0, IntPoly::from_i64(&[-3, -8, -6, 0, 1]));
        assert_eq!(char_poly(&Graph::empty(0)).unwrap().degree(), 0);
    }

    #[test]
    fn square_free_part_and_gcd() {
        // (x−1)^2 (x+2) = x^3 − 3x + 2
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.square_free(), IntPoly::from_i64(&[-2, 1, 1]));
        let a = IntPoly::from_i64(&[-1, 0, 1]); // x^2 − 1
        let b = IntPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn sturm_counts() {
        // x^3 − x = x(x−1)(x+1)
        let s = Sturm::new(&IntPoly::from_i64(&[0, -1, 0, 1]));
        assert_eq!(s.roots_above(&rat(-2, 1)), 3);
        assert_eq!(s.roots_above(&rat(-1, 2)), 2);
        assert_eq!(s.roots_above(&rat(1, 2)), 1);
        assert_eq!(s.roots_above(&rat(2, 1)), 0);
        // evaluation exactly at a root
        assert_eq!(s.roots_above(&rat(0, 1)), 1);
        assert_eq!(s.roots_above(&rat(-1, 1)), 2);
        assert_eq!(s.roots_above(&rat(1, 1)), 0);
    }

    #[test]
    fn sturm_with_negative_leading_remainders() {
        // x^4 − 10x^2 + 1 has four real roots ±√2 ± √3
        let s = Sturm::new(&IntPoly::from_i64(&[1, 0, -10, 0, 1]));
        assert_eq!(s.roots_above(&rat(-4, 1)), 4);
        assert_eq!(s.roots_above(&rat(0, 1)), 2);
        assert_eq!(s.roots_above(&rat(3, 1)), 1);
        assert_eq!(s.roots_above(&rat(32, 10)), 0);
    }

    #[test]
    fn sign_evaluation() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(p.sign_at(&rat(141, 100)), Ordering::Less);
        assert_eq!(p.sign_at(&rat(142, 100)), Ordering::Greater);
        assert_eq!(p.sign_at(&rat(-3, 2)), Ordering::Greater);
    }
}
