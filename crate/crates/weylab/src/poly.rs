//! Exact polynomials with nonnegative integer coefficients.

use serde::Serialize;

/// Coefficients ascending by degree, no trailing zero. The zero polynomial is
/// the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<u64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> IntPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial { coeffs: vec![1] }
    }

    /// 1 + q + ... + q^d.
    pub fn chain(d: usize) -> IntPolynomial {
        IntPolynomial {
            coeffs: vec![1; d + 1],
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Whether the coefficient list reads the same reversed.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPolynomial::new(vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, d) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (c, 1) => write!(f, "{c}q")?,
                (1, d) => write!(f, "q^{d}")?,
                (c, d) => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palindromic() {
        assert!(IntPolynomial::new(vec![1, 2, 1]).is_palindromic());
        assert!(!IntPolynomial::new(vec![1, 3, 5, 4, 1]).is_palindromic());
        assert!(IntPolynomial::one().is_palindromic());
        assert!(IntPolynomial::chain(5).is_palindromic());
    }

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::new(vec![1, 1]);
        assert_eq!((&p * &p).coeffs(), &[1, 2, 1]);
        assert_eq!((&p * &p).eval_at_one(), 4);
        assert_eq!(IntPolynomial::new(vec![1, 0, 0]).coeffs(), &[1]);
        assert_eq!(IntPolynomial::new(vec![1, 2, 1]).degree(), 2);
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::new(vec![1, 3, 0, 1]).to_string(), "1 + 3q + q^3");
        assert_eq!(IntPolynomial::one().to_string(), "1");
    }
}
