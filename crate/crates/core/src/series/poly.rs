//! Sparse exact-integer bivariate polynomials and rational generating
//! functions, with coefficient extraction by linear recurrence.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A sparse polynomial in `x` and `y` with big-integer coefficients,
/// stored as exponent pair → nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial::default()
    }

    pub fn one() -> Self {
        BivariatePolynomial::from_terms(&[(1, 0, 0)])
    }

    /// Builds from `(coefficient, deg_x, deg_y)` triples.
    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        let mut p = BivariatePolynomial::default();
        for &(c, dx, dy) in terms {
            p.add_term((dx, dy), BigInt::from(c));
        }
        p
    }

    pub(crate) fn add_term(&mut self, key: (usize, usize), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^dx y^dy` (zero when absent).
    pub fn coeff(&self, dx: usize, dy: usize) -> BigInt {
        self.terms
            .get(&(dx, dy))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn deg_x(&self) -> usize {
        self.terms.keys().map(|&(dx, _)| dx).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> usize {
        self.terms.keys().map(|&(_, dy)| dy).max().unwrap_or(0)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BivariatePolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `y = 1`, collapsing to a polynomial in `x` alone.
    pub fn eval_y_one(&self) -> Self {
        let mut p = BivariatePolynomial::default();
        for (&(dx, _), c) in &self.terms {
            p.add_term((dx, 0), c.clone());
        }
        p
    }

    /// Applies `x → xy, y → 1/y`, returning terms with a signed `y`
    /// exponent: `c·x^i y^j → c·x^i y^(i−j)`.
    pub(crate) fn substitute_x_xy_y_inv(&self) -> Vec<((usize, i64), BigInt)> {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| ((dx, dx as i64 - dy as i64), c.clone()))
            .collect()
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(dx, dy), c) in &self.terms {
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if dx > 0 {
                write!(f, "*x^{dx}")?;
            }
            if dy > 0 {
                write!(f, "*y^{dy}")?;
            }
        }
        Ok(())
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.add_term(key, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.add_term(key, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::default();
        for (&(ax, ay), ac) in &self.terms {
            for (&(bx, by), bc) in &rhs.terms {
                out.add_term((ax + bx, ay + by), ac * bc);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::default();
        for (&key, c) in &self.terms {
            out.add_term(key, -c.clone());
        }
        out
    }
}

/// Errors from series expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// The denominator's constant coefficient is not 1, so the coefficient
    /// recurrence is not applicable. Catalog entries are normalized and
    /// never trip this.
    NonUnitDenominator(BigInt),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonUnitDenominator(c) => {
                write!(f, "denominator constant term is {c}, expected 1")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// A quotient of two bivariate polynomials, understood as a formal power
/// series in `x` and `y`. The denominator must have constant term 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalBgf {
    pub numerator: BivariatePolynomial,
    pub denominator: BivariatePolynomial,
}

impl RationalBgf {
    /// Normalizes the sign so the denominator has constant term exactly 1.
    /// Catalog entries arrive with constant term ±1; anything else is a
    /// transcription bug.
    pub fn normalized(numerator: BivariatePolynomial, denominator: BivariatePolynomial) -> Self {
        let c = denominator.constant_term();
        if c == BigInt::one() {
            RationalBgf {
                numerator,
                denominator,
            }
        } else if c == -BigInt::one() {
            RationalBgf {
                numerator: -&numerator,
                denominator: -&denominator,
            }
        } else {
            panic!("catalog entry with denominator constant term {c}");
        }
    }

    /// Coefficients `[x^n y^k]` for all `n ≤ max_n`, `k ≤ max_k`, by the
    /// exact recurrence `F[n,k] = N[n,k] − Σ_{(i,j)≠(0,0)} D[i,j]·F[n−i,k−j]`.
    pub fn expand(&self, max_n: usize, max_k: usize) -> Result<CoeffGrid, SeriesError> {
        let c = self.denominator.constant_term();
        if !c.is_one() {
            return Err(SeriesError::NonUnitDenominator(c));
        }
        let den: Vec<(usize, usize, BigInt)> = self
            .denominator
            .terms()
            .filter(|(&key, _)| key != (0, 0))
            .map(|(&(dx, dy), c)| (dx, dy, c.clone()))
            .collect();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = Vec::with_capacity(max_k + 1);
            for k in 0..=max_k {
                let mut acc = self.numerator.coeff(n, k);
                for (i, j, c) in &den {
                    if *i <= n && *j <= k {
                        let prev: &BigInt = if *i == 0 {
                            &row[k - j]
                        } else {
                            &rows[n - i][k - j]
                        };
                        acc -= c * prev;
                    }
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(CoeffGrid { rows })
    }
}

impl fmt::Display for RationalBgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// A dense table of extracted coefficients `[x^n y^k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffGrid {
    rows: Vec<Vec<BigInt>>,
}

impl CoeffGrid {
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn max_k(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}
