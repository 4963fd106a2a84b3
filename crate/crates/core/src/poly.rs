//! Dense integer polynomials in the variable q.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Integer coefficients indexed by degree, normalized with no trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolynomial(Vec<i64>);

impl QPolynomial {
    pub fn zero() -> QPolynomial {
        QPolynomial(Vec::new())
    }

    pub fn one() -> QPolynomial {
        QPolynomial(vec![1])
    }

    /// `q^k`
    pub fn monomial(k: usize) -> QPolynomial {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        QPolynomial(c)
    }

    pub fn from_coefficients(coeffs: Vec<i64>) -> QPolynomial {
        let mut p = QPolynomial(coeffs);
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn coefficient(&self, degree: usize) -> i64 {
        self.0.get(degree).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// Truncates to degrees `<= max_degree`.
    pub fn truncated(&self, max_degree: usize) -> QPolynomial {
        QPolynomial::from_coefficients(
            self.0
                .iter()
                .take(max_degree + 1)
                .copied()
                .collect(),
        )
    }

    /// Smallest degree at which two polynomials differ.
    pub fn first_mismatch(&self, other: &QPolynomial) -> Option<usize> {
        let top = self.0.len().max(other.0.len());
        (0..top).find(|&d| self.coefficient(d) != other.coefficient(d))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = vec![0; self.0.len().max(rhs.0.len())];
        for (d, c) in out.iter_mut().enumerate() {
            *c = self.coefficient(d) + rhs.coefficient(d);
        }
        QPolynomial::from_coefficients(out)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = vec![0; self.0.len().max(rhs.0.len())];
        for (d, c) in out.iter_mut().enumerate() {
            *c = self.coefficient(d) - rhs.coefficient(d);
        }
        QPolynomial::from_coefficients(out)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (a, &ca) in self.0.iter().enumerate() {
            for (b, &cb) in rhs.0.iter().enumerate() {
                out[a + b] += ca * cb;
            }
        }
        QPolynomial::from_coefficients(out)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c > 0 { " + " } else { " - " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let m = c.abs();
            match d {
                0 => write!(f, "{m}")?,
                _ => {
                    if m != 1 {
                        write!(f, "{m}")?;
                    }
                    if d == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
