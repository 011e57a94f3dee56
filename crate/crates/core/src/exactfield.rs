//! Exact scalars, univariate polynomials over the rationals and reduced
//! rational functions in `x`, together with the degree valuation at infinity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. `BigRational` keeps `den > 0` and `gcd(num, den) = 1`.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("division by zero")]
    DivisionByZero,
    #[error("residue of the zero function is undefined")]
    ZeroResidue,
}

/// Degree of a polynomial; `NegInf` is the degree of zero and sorts below
/// every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// An integer or `+∞`, the codomain of `v_inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    Finite(i64),
    Infinity,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::Infinity => None,
        }
    }
}

impl Add for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::Infinity,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::Infinity => f.write_str("inf"),
        }
    }
}

/// Dense univariate polynomial over the rationals, `coeffs[k]` is the
/// coefficient of `x^k`. No trailing zeros are ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Builds from small integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Leading coefficient, zero for the zero polynomial.
    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * at + c)
    }

    /// Long division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), FieldError> {
        let Degree::Finite(db) = divisor.degree() else {
            return Err(FieldError::DivisionByZeroPoly);
        };
        let Degree::Finite(da) = self.degree() else {
            return Ok((UniPoly::zero(), UniPoly::zero()));
        };
        if da < db {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let inv_lc = divisor.lc().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = &rem[k + db] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            if b.is_constant() {
                return UniPoly::one();
            }
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            // Keeping remainders monic curbs coefficient growth.
            b = r.monic();
        }
        a
    }

    /// Exact division, for divisors known to divide `self`.
    fn div_exact(&self, d: &UniPoly) -> UniPoly {
        if d.is_one() {
            return self.clone();
        }
        let (q, r) = self.divmod(d).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }
}

impl fmt::Display for UniPoly {
    /// Descending powers, e.g. `x^6 - 3/2*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

/// Element of `K(x)` in lowest terms with a monic denominator; zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<UniPoly> for RatFunc {
    fn from(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> Self {
        RatFunc::from(UniPoly::constant(c))
    }
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_constant() {
            let c = den.lc();
            let num = if c.is_one() { num } else { num.scale(&c.recip()) };
            return RatFunc {
                num,
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = (num.div_exact(&g), den.div_exact(&g));
        let c = den.lc();
        if c.is_one() {
            RatFunc { num, den }
        } else {
            let inv = c.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from(UniPoly::one())
    }

    pub fn x() -> Self {
        RatFunc::from(UniPoly::x())
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from(c)
    }

    pub fn int(c: i64) -> Self {
        RatFunc::from(rat(c))
    }

    /// `c · x^k` for any integer `k`.
    pub fn x_pow(c: Rat, k: i64) -> Self {
        if k >= 0 {
            RatFunc::from(UniPoly::monomial(c, k as usize))
        } else {
            RatFunc::reduce(UniPoly::constant(c), UniPoly::monomial(Rat::one(), (-k) as usize))
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// Checks the canonical-form invariants; used by tests.
    pub fn is_canonical(&self) -> bool {
        if !self.den.is_monic() {
            return false;
        }
        if self.num.is_zero() {
            return self.den.is_one();
        }
        self.num.gcd(&self.den).is_one()
    }

    pub fn recip(&self) -> Result<RatFunc, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(RatFunc::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, FieldError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        // Powers of coprime polynomials stay coprime.
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Degree valuation at infinity: `deg den − deg num`, `∞` at zero.
    pub fn v_inf(&self) -> ExtInt {
        match (self.num.degree(), self.den.degree()) {
            (Degree::Finite(dn), Degree::Finite(dd)) => ExtInt::Finite(dd as i64 - dn as i64),
            _ => ExtInt::Infinity,
        }
    }

    /// The `v_inf`-leading coefficient `lc(num)/lc(den)`.
    pub fn residue_at_inf(&self) -> Result<Rat, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroResidue);
        }
        Ok(self.num.lc() / self.den.lc())
    }

    /// The unique `f ∈ K[x]` with `v_inf(f + self) > 0`: minus the polynomial
    /// part of `self`.
    pub fn corrector(&self) -> UniPoly {
        let (q, _) = self.num.divmod(&self.den).expect("denominator is nonzero");
        -&q
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let single = |p: &UniPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        if single(&self.num) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if single(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from(num);
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        // With g = gcd(d₁, d₂), only factors of g can survive in the sum.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let (d1, d2) = (self.den.div_exact(&g), rhs.den.div_exact(&g));
        let t = &(&self.num * &d2) + &(&rhs.num * &d1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = t.gcd(&g);
        RatFunc {
            num: t.div_exact(&g2),
            den: &d1 * &rhs.den.div_exact(&g2),
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        // Cross-cancel so the product is already in lowest terms.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        // Both denominators are monic, so their quotients by monic gcds are too.
        RatFunc { num, den }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(UniPoly, Add, add);
forward_owned_binop!(UniPoly, Sub, sub);
forward_owned_binop!(UniPoly, Mul, mul);
forward_owned_binop!(RatFunc, Add, add);
forward_owned_binop!(RatFunc, Sub, sub);
forward_owned_binop!(RatFunc, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(p(&[1, 0, 1]).divmod(&p(&[0, 1])).unwrap(), (p(&[0, 1]), p(&[1])));
        assert_eq!(p(&[0, 0, 0, 1]).divmod(&p(&[0, 0, 0, 1])).unwrap(), (p(&[1]), p(&[])));
        assert_eq!(p(&[1]).divmod(&p(&[0, 1])).unwrap(), (p(&[]), p(&[1])));
        assert_eq!(p(&[1]).divmod(&UniPoly::zero()), Err(FieldError::DivisionByZeroPoly));
    }

    #[test]
    fn zero_degree_is_below_everything() {
        assert!(UniPoly::zero().degree() < UniPoly::one().degree());
        assert_eq!(UniPoly::zero().degree(), Degree::NegInf);
    }

    #[test]
    fn v_inf_examples() {
        assert_eq!(rf(&[0, 0, 0, 1], &[1]).v_inf(), ExtInt::Finite(-3));
        // (1 - 2x^5)/x^3
        assert_eq!(rf(&[1, 0, 0, 0, 0, -2], &[0, 0, 0, 1]).v_inf(), ExtInt::Finite(-2));
        assert_eq!(RatFunc::zero().v_inf(), ExtInt::Infinity);
        assert_eq!(RatFunc::constant(ratio(7, 2)).v_inf(), ExtInt::Finite(0));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(rf(&[0, 0, 0, -1], &[1]).residue_at_inf().unwrap(), rat(-1));
        assert_eq!(
            rf(&[1, 0, 0, 0, 0, -2], &[0, 0, 0, 1]).residue_at_inf().unwrap(),
            rat(-2)
        );
        assert_eq!(RatFunc::int(5).residue_at_inf().unwrap(), rat(5));
        assert_eq!(RatFunc::zero().residue_at_inf(), Err(FieldError::ZeroResidue));
    }

    #[test]
    fn corrector_examples() {
        assert_eq!(rf(&[-1], &[0, 1]).corrector(), UniPoly::zero());
        assert_eq!(rf(&[0, 0, 0, -1], &[1]).corrector(), p(&[0, 0, 0, 1]));
        let h = rf(&[1, 0, 1], &[0, 1]);
        let c = h.corrector();
        assert_eq!(c, p(&[0, -1]));
        assert_eq!((&RatFunc::from(c) + &h).v_inf(), ExtInt::Finite(1));
        assert_eq!(RatFunc::zero().corrector(), UniPoly::zero());
    }

    #[test]
    fn arithmetic_examples() {
        let inv_x = rf(&[1], &[0, 1]);
        assert_eq!(&inv_x + &RatFunc::x(), rf(&[1, 0, 1], &[0, 1]));
        assert_eq!(&inv_x * &RatFunc::x(), RatFunc::one());
        assert_eq!(
            RatFunc::one().checked_div(&RatFunc::x_pow(rat(1), 3)).unwrap(),
            rf(&[1], &[0, 0, 0, 1])
        );
        assert_eq!(RatFunc::one().checked_div(&RatFunc::zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn normalization_is_canonical() {
        // (2x^2 - 2)/(4x - 4) = (x + 1)/2
        let h = rf(&[-2, 0, 2], &[-4, 4]);
        assert!(h.is_canonical());
        assert_eq!(h, RatFunc::from(p(&[1, 1]).scale(&ratio(1, 2))));
        let z = rf(&[], &[3, 1]);
        assert_eq!(z, RatFunc::zero());
        assert!(z.is_canonical());
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, -1, 0, 0, 0, 0, 1]).to_string(), "x^6 - x");
        assert_eq!(UniPoly::from_coeffs(vec![ratio(3, 2), ratio(-1, 3)]).to_string(), "-1/3*x + 3/2");
        assert_eq!(rf(&[1, 0, 0, 0, 0, -2], &[0, 0, 0, 1]).to_string(), "(-2*x^5 + 1)/x^3");
        assert_eq!(RatFunc::zero().to_string(), "0");
    }
}
