//! Distances between probability vectors.
//!
//! Truncated variants compare only the first `k` coordinates, and `k = d`
//! gives the usual distance. Inputs are assumed to be sorted as the caller
//! needs; nothing is re-sorted here. Where a denominator vanishes under a
//! positive numerator the result is `+∞`.

use crate::error::{Error, Result};

fn check(a: &[f64], b: &[f64], k: usize) -> Result<()> {
    if k > a.len() || k > b.len() {
        return Err(Error::IndexOutOfRange { index: k, len: a.len().min(b.len()) });
    }
    if let Some(&x) = a.iter().chain(b).find(|&&x| x < 0.0) {
        return Err(Error::NegativeEntry(x));
    }
    Ok(())
}

fn check_full(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    check(a, b, a.len())
}

/// `Σ_{i≤k} (√a_i − √b_i)²`.
pub fn hellinger_sq(a: &[f64], b: &[f64], k: usize) -> Result<f64> {
    check(a, b, k)?;
    Ok(a[..k].iter().zip(&b[..k]).map(|(x, y)| (x.sqrt() - y.sqrt()).powi(2)).sum())
}

/// `Σ_{i≤k} b_i (a_i/b_i − 1)²`, written as `(a_i − b_i)² / b_i`.
pub fn chi_sq(a: &[f64], b: &[f64], k: usize) -> Result<f64> {
    check(a, b, k)?;
    Ok(a[..k]
        .iter()
        .zip(&b[..k])
        .map(|(&x, &y)| {
            if y == 0.0 {
                if x == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                (x - y).powi(2) / y
            }
        })
        .sum())
}

/// `Σ a_i ln(a_i / b_i)` with `0 ln 0 = 0`.
pub fn kl(a: &[f64], b: &[f64]) -> Result<f64> {
    check_full(a, b)?;
    Ok(a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            if x == 0.0 {
                0.0
            } else if y == 0.0 {
                f64::INFINITY
            } else {
                x * (x / y).ln()
            }
        })
        .sum())
}

/// `Σ |a_i − b_i|`.
pub fn l1(a: &[f64], b: &[f64]) -> Result<f64> {
    check_full(a, b)?;
    l1_truncated(a, b, a.len())
}

/// `Σ_{i≤k} |a_i − b_i|`.
pub fn l1_truncated(a: &[f64], b: &[f64], k: usize) -> Result<f64> {
    check(a, b, k)?;
    Ok(a[..k].iter().zip(&b[..k]).map(|(x, y)| (x - y).abs()).sum())
}

/// Total variation distance, `½ Σ |a_i − b_i|`.
pub fn total_variation(a: &[f64], b: &[f64]) -> Result<f64> {
    Ok(0.5 * l1(a, b)?)
}

/// `Σ_{i≤k} (a_i − b_i)²`.
pub fn l2_sq(a: &[f64], b: &[f64], k: usize) -> Result<f64> {
    check(a, b, k)?;
    Ok(a[..k].iter().zip(&b[..k]).map(|(x, y)| (x - y).powi(2)).sum())
}

/// Shannon entropy in nats, with `0 ln 0 = 0`.
pub fn shannon_entropy(a: &[f64]) -> f64 {
    -a.iter().filter(|&&x| x > 0.0).map(|&x| x * x.ln()).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hellinger_examples() {
        assert_eq!(hellinger_sq(&[1.0, 0.0], &[0.0, 1.0], 2).unwrap(), 2.0);
        assert_eq!(hellinger_sq(&[0.3, 0.7], &[0.3, 0.7], 1).unwrap(), 0.0);
        let v = hellinger_sq(&[0.5, 0.5], &[0.25, 0.75], 1).unwrap();
        assert!((v - 0.042893218813452).abs() < 1e-12);
        assert!(matches!(hellinger_sq(&[-0.1, 1.1], &[0.5, 0.5], 2), Err(Error::NegativeEntry(_))));
        assert!(hellinger_sq(&[1.0], &[1.0], 2).is_err());
    }

    #[test]
    fn chi_sq_examples() {
        let v = chi_sq(&[0.5, 0.5], &[0.25, 0.75], 2).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(chi_sq(&[0.2, 0.8], &[0.2, 0.8], 2).unwrap(), 0.0);
        assert!((chi_sq(&[1.0, 0.0], &[0.5, 0.5], 2).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(chi_sq(&[0.5, 0.5], &[1.0, 0.0], 2).unwrap(), f64::INFINITY);
    }

    #[test]
    fn other_distances() {
        assert_eq!(kl(&[0.4, 0.6], &[0.4, 0.6]).unwrap(), 0.0);
        assert_eq!(kl(&[0.4, 0.6], &[1.0, 0.0]).unwrap(), f64::INFINITY);
        assert!((l2_sq(&[0.5, 0.5], &[0.25, 0.75], 2).unwrap() - 0.125).abs() < 1e-15);
        assert_eq!(l1(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 2.0);
        assert_eq!(total_variation(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 1.0);
        assert!(l1(&[1.0], &[0.5, 0.5]).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(shannon_entropy(&[1.0, 0.0, 0.0]), 0.0);
        assert!((shannon_entropy(&[0.25; 4]) - 4f64.ln()).abs() < 1e-15);
        let h = -(0.75f64 * 0.75f64.ln() + 0.25 * 0.25f64.ln());
        assert!((shannon_entropy(&[0.75, 0.25]) - h).abs() < 1e-15);
        assert!((h - 0.5623351446188083).abs() < 1e-15);
    }
}
