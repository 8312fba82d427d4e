use std::collections::HashMap;

use super::parse::parse_poly;
use super::poly::{Poly, Var};
use crate::error::{Error, Result};

pub const MAX_SYMBOLIC_DIM: usize = 8;

/// Square matrix of polynomial entries, row-major.
pub type PolyMatrix = Vec<Vec<Poly>>;

/// Parses a matrix given as rows of entry strings.
pub fn parse_matrix(rows: &[&[&str]]) -> Result<PolyMatrix> {
    rows.iter()
        .map(|r| r.iter().map(|e| parse_poly(e).map_err(Error::from)).collect())
        .collect()
}

fn check_square(m: &[Vec<Poly>]) -> Result<usize> {
    let t = m.len();
    if t == 0 || t > MAX_SYMBOLIC_DIM {
        return Err(Error::Dimension(t));
    }
    if let Some(r) = m.iter().find(|r| r.len() != t) {
        return Err(Error::Invalid(format!("matrix is not square: {t} rows, a row of length {}", r.len())));
    }
    Ok(t)
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still available.
pub fn det_exact(m: &[Vec<Poly>]) -> Result<Poly> {
    let t = check_square(m)?;
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    Ok(minor(m, t, (1u32 << t) - 1, &mut memo))
}

fn minor(m: &[Vec<Poly>], t: usize, cols: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
    if cols == 0 {
        return Poly::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let row = t - cols.count_ones() as usize;
    let mut acc = Poly::zero();
    let mut sign_neg = false;
    for c in 0..t {
        if cols & (1 << c) == 0 {
            continue;
        }
        let e = &m[row][c];
        if !e.is_zero() {
            let sub = minor(m, t, cols & !(1 << c), memo);
            let term = e * &sub;
            acc = if sign_neg { &acc - &term } else { &acc + &term };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// det(xI − m).
pub fn charpoly_exact(m: &[Vec<Poly>]) -> Result<Poly> {
    let t = check_square(m)?;
    let x = Poly::var(Var::X);
    let shifted: PolyMatrix = (0..t)
        .map(|i| (0..t).map(|j| if i == j { &x - &m[i][j] } else { -&m[i][j] }).collect())
        .collect();
    det_exact(&shifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_clique_quotient() {
        let b = parse_matrix(&[&["2a+1", "2(1-a)"], &["1-a", "a+1"]]).unwrap();
        let f = charpoly_exact(&b).unwrap();
        assert_eq!(f, parse_poly("x^2 - (3a+2)x + 7a - 1").unwrap());
    }

    #[test]
    fn one_by_one() {
        let f = charpoly_exact(&parse_matrix(&[&["2a"]]).unwrap()).unwrap();
        assert_eq!(f, parse_poly("x - 2a").unwrap());
    }

    #[test]
    fn dimension_cap() {
        let big: PolyMatrix = vec![vec![Poly::zero(); 9]; 9];
        assert!(matches!(charpoly_exact(&big), Err(Error::Dimension(9))));
        assert!(charpoly_exact(&[vec![Poly::zero(); 2]]).is_err());
    }
}
