//! The α thresholds at which the small spiders T_{1,1,n−3}, T_{1,2,2},
//! T_{1,2,3} and T_{1,2,4} reach A_α spectral radius 2.

use serde::Serialize;

use crate::families::FamilySpec;

/// Bound on |p(root)| for the cubic thresholds.
pub const ROOT_RESIDUAL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdRoot {
    pub name: String,
    /// The tree whose radius equals 2 at this α.
    pub tree: FamilySpec,
    /// c₃α³ + c₂α² + c₁α + c₀ as [c₃, c₂, c₁, c₀]; absent for the closed form.
    pub cubic: Option<[f64; 4]>,
    pub closed_form: Option<String>,
    pub root: f64,
    pub bracket: (f64, f64),
    pub residual: f64,
}

/// 4 / (n + 1 + √((n+1)² − 16)), defined for n ≥ 4.
pub fn s1(n: usize) -> Option<f64> {
    if n < 4 {
        return None;
    }
    let m = n as f64 + 1.0;
    Some(4.0 / (m + (m * m - 16.0).sqrt()))
}

fn cubic(c: [f64; 4], a: f64) -> f64 {
    ((c[0] * a + c[1]) * a + c[2]) * a + c[3]
}

/// Bisection to adjacent floats; the bracket must straddle a sign change.
fn bisect(c: [f64; 4], mut lo: f64, mut hi: f64) -> Option<f64> {
    let (flo, fhi) = (cubic(c, lo), cubic(c, hi));
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    let lo_sign = flo.signum();
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = cubic(c, mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(if cubic(c, lo).abs() <= cubic(c, hi).abs() { lo } else { hi })
}

fn cubic_root(name: &str, tree: FamilySpec, c: [f64; 4]) -> ThresholdRoot {
    let bracket = (0.0, 1.0);
    let root = bisect(c, bracket.0, bracket.1).expect("each threshold cubic changes sign on (0, 1)");
    ThresholdRoot {
        name: name.into(),
        tree,
        cubic: Some(c),
        closed_form: None,
        root,
        bracket,
        residual: cubic(c, root).abs(),
    }
}

/// s₁(n) for the requested orders followed by s₂, s₃, s₄.
pub fn threshold_roots(orders: &[usize]) -> Vec<ThresholdRoot> {
    let mut out: Vec<ThresholdRoot> = orders
        .iter()
        .filter_map(|&n| {
            let root = s1(n)?;
            Some(ThresholdRoot {
                name: format!("s1({n})"),
                tree: FamilySpec::Tabc(1, 1, n - 3),
                cubic: None,
                closed_form: Some("4/(n+1+sqrt((n+1)^2-16))".into()),
                root,
                bracket: (0.0, 1.0),
                residual: 0.0,
            })
        })
        .collect();
    out.push(cubic_root("s2", FamilySpec::Tabc(1, 2, 2), [2.0, -11.0, 16.0, -3.0]));
    out.push(cubic_root("s3", FamilySpec::Tabc(1, 2, 3), [1.0, -6.0, 9.0, -1.0]));
    out.push(cubic_root("s4", FamilySpec::Tabc(1, 2, 4), [2.0, -13.0, 20.0, -1.0]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_at_four() {
        assert_eq!(s1(4), Some(0.5));
        assert_eq!(s1(3), None);
    }

    #[test]
    fn cubic_roots_are_tight() {
        for r in threshold_roots(&[]) {
            assert!(r.residual <= ROOT_RESIDUAL, "{}: {}", r.name, r.residual);
            assert!(r.root > r.bracket.0 && r.root < r.bracket.1);
        }
    }
}
