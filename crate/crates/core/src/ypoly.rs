//! Polynomials in `y` over `K(x)`, division by a monic `w`, w-expansions and
//! the table of w-expansion coefficients of powers of `y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactfield::{Degree, Rat, RatFunc, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YPolyError {
    #[error("divisor is not monic in y")]
    NotMonic,
    #[error("divisor must have positive degree in y")]
    ConstantDivisor,
}

/// Element of `K(x)[y]`, stored sparsely by `y`-exponent. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    terms: BTreeMap<usize, RatFunc>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(RatFunc::one())
    }

    pub fn x() -> Self {
        Self::constant(RatFunc::x())
    }

    pub fn y() -> Self {
        Self::term(RatFunc::one(), 1)
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::term(c, 0)
    }

    /// `c · y^k`.
    pub fn term(c: RatFunc, k: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        YPoly { terms }
    }

    /// `c · x^a · y^b` with a rational scalar.
    pub fn monomial(c: Rat, a: usize, b: usize) -> Self {
        Self::term(RatFunc::from(UniPoly::monomial(c, a)), b)
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, RatFunc)>>(it: I) -> Self {
        let mut out = YPoly::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    fn add_term(&mut self, k: usize, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(slot) => {
                let s = &*slot + c;
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_y(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInf, |&k| Degree::Finite(k))
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.terms.get(&k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &RatFunc)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn lc(&self) -> RatFunc {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.terms.values().next_back().is_some_and(RatFunc::is_one)
    }

    /// True when every coefficient lies in `K[x]`, i.e. the element is in `K[x,y]`.
    pub fn is_xy_polynomial(&self) -> bool {
        self.terms.values().all(RatFunc::is_polynomial)
    }

    /// Lies in `K(x)` (no positive power of `y`).
    pub fn is_y_free(&self) -> bool {
        self.deg_y() <= Degree::Finite(0)
    }

    pub fn scale(&self, c: &RatFunc) -> YPoly {
        if c.is_zero() {
            return YPoly::zero();
        }
        YPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> YPoly {
        if c.is_zero() {
            return YPoly::zero();
        }
        YPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a.scale(c))).collect(),
        }
    }

    /// Multiplies by `y^k`.
    pub fn shift_y(&self, k: usize) -> YPoly {
        YPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> YPoly {
        let mut acc = YPoly::one();
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

    /// Division by a monic `w`: `self = q·w + r` with `deg_y r < deg_y w`.
    pub fn divmod_w(&self, w: &YPoly) -> Result<(YPoly, YPoly), YPolyError> {
        let m = check_divisor(w)?;
        let mut rem = self.clone();
        let mut quot = YPoly::zero();
        while let Degree::Finite(d) = rem.deg_y() {
            if d < m {
                break;
            }
            let c = rem.lc();
            let shift = d - m;
            quot.add_term(shift, &c);
            for (k, wk) in w.terms() {
                rem.add_term(k + shift, &-&(&c * wk));
            }
            debug_assert!(rem.deg_y() < Degree::Finite(d));
        }
        Ok((quot, rem))
    }

    /// Expansion `self = Σ f_{i,j} y^j w^i`, `0 ≤ j < deg_y w`, with the minimal
    /// number of rows.
    pub fn w_expand(&self, w: &YPoly) -> Result<WExpansion, YPolyError> {
        let m = check_divisor(w)?;
        let mut rows = Vec::new();
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divmod_w(w)?;
            rows.push((0..m).map(|j| r.coeff(j)).collect());
            if q.is_zero() {
                break;
            }
            cur = q;
        }
        Ok(WExpansion { m, rows })
    }
}

fn check_divisor(w: &YPoly) -> Result<usize, YPolyError> {
    match w.deg_y() {
        Degree::Finite(m) if m >= 1 => {
            if w.is_monic() {
                Ok(m)
            } else {
                Err(YPolyError::NotMonic)
            }
        }
        _ => Err(YPolyError::ConstantDivisor),
    }
}

/// Renders a coefficient so that it multiplies correctly against `y^k`.
fn fmt_coeff_term(c: &RatFunc, k: usize, first: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let ypart = match k {
        0 => String::new(),
        1 => "y".to_owned(),
        _ => format!("y^{k}"),
    };
    let sep = |neg: bool, f: &mut fmt::Formatter<'_>| -> fmt::Result {
        match (first, neg) {
            (true, true) => f.write_str("-"),
            (true, false) => Ok(()),
            (false, true) => f.write_str(" - "),
            (false, false) => f.write_str(" + "),
        }
    };
    let single_term = c.is_polynomial() && c.num().coeffs().iter().filter(|a| !a.is_zero()).count() == 1;
    if single_term {
        let neg = c.num().lc().is_negative();
        sep(neg, f)?;
        let mag = if neg { -c.num() } else { c.num().clone() };
        if k == 0 {
            return write!(f, "{mag}");
        }
        if mag.is_one() {
            return f.write_str(&ypart);
        }
        return write!(f, "{mag}*{ypart}");
    }
    sep(false, f)?;
    if k == 0 {
        if c.is_polynomial() {
            write!(f, "{c}")
        } else {
            write!(f, "({c})")
        }
    } else {
        write!(f, "({c})*{ypart}")
    }
}

impl fmt::Display for YPoly {
    /// Canonical, re-parseable form in descending powers of `y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms().rev().enumerate() {
            fmt_coeff_term(c, k, n == 0, f)?;
        }
        Ok(())
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, &-c);
        }
        out
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        let mut out = YPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}

impl Add for YPoly {
    type Output = YPoly;
    fn add(self, rhs: YPoly) -> YPoly {
        &self + &rhs
    }
}

impl Sub for YPoly {
    type Output = YPoly;
    fn sub(self, rhs: YPoly) -> YPoly {
        &self - &rhs
    }
}

impl Mul for YPoly {
    type Output = YPoly;
    fn mul(self, rhs: YPoly) -> YPoly {
        &self * &rhs
    }
}

impl Neg for YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        -&self
    }
}

impl From<RatFunc> for YPoly {
    fn from(c: RatFunc) -> Self {
        YPoly::constant(c)
    }
}

impl From<UniPoly> for YPoly {
    fn from(p: UniPoly) -> Self {
        YPoly::constant(RatFunc::from(p))
    }
}

/// Coefficient grid `rows[i][j]` of `f = Σ rows[i][j] · y^j · w^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WExpansion {
    m: usize,
    rows: Vec<Vec<RatFunc>>,
}

impl WExpansion {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.rows
    }

    /// Index of the top row.
    pub fn ell(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn cell(&self, i: usize, j: usize) -> RatFunc {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    /// Nonzero cells as `(i, j, f_{i,j})`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &RatFunc)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.cells().next().is_none()
    }

    /// Sums the expansion back into an element of `K(x)[y]`.
    pub fn reconstruct(&self, w: &YPoly) -> YPoly {
        // Horner in w over the rows.
        let mut acc = YPoly::zero();
        for row in self.rows.iter().rev() {
            acc = &acc * w;
            for (j, c) in row.iter().enumerate() {
                acc = &acc + &YPoly::term(c.clone(), j);
            }
        }
        acc
    }
}

/// The w-expansion coefficients `y_t^{(e)}` of `y^e`, for `0 ≤ t ≤ e ≤ e_max`.
#[derive(Debug, Clone)]
pub struct YPowerTable {
    w: YPoly,
    m: usize,
    entries: Vec<Vec<RatFunc>>,
}

impl YPowerTable {
    pub fn build(w: &YPoly, e_max: usize) -> Result<Self, YPolyError> {
        let m = check_divisor(w)?;
        let mut entries = Vec::with_capacity(e_max + 1);
        for e in 0..=e_max {
            let exp = YPoly::term(RatFunc::one(), e).w_expand(w)?;
            entries.push((0..=e).map(|t| exp.cell(t / m, t % m)).collect());
        }
        Ok(YPowerTable {
            w: w.clone(),
            m,
            entries,
        })
    }

    pub fn w(&self) -> &YPoly {
        &self.w
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn e_max(&self) -> usize {
        self.entries.len() - 1
    }

    /// `y_t^{(e)}`; zero whenever `t > e`.
    pub fn get(&self, e: usize, t: usize) -> RatFunc {
        self.entries
            .get(e)
            .and_then(|row| row.get(t))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn row(&self, e: usize) -> &[RatFunc] {
        &self.entries[e]
    }
}
