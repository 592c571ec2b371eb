//! Dissections of a convex polygon into k-gons.

use std::fmt;

use super::{check_guard, EnumOptions};
use crate::error::{Error, Result};

pub const DISSECTION_GUARD: usize = 14;

/// A dissection of the convex `n`-gon on `1..=n`, `n = (k-2) r + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissection {
    pub k: usize,
    pub r: usize,
    /// Sorted chords `(a, b)` that are not polygon sides.
    pub diagonals: Vec<(usize, usize)>,
    /// Vertex lists of the faces, each increasing.
    pub faces: Vec<Vec<usize>>,
}

impl Dissection {
    pub fn polygon_size(&self) -> usize {
        (self.k - 2) * self.r + 2
    }

    /// Edges at `p_n` minus the two polygon sides.
    pub fn root_degree(&self) -> usize {
        let n = self.polygon_size();
        self.diagonals.iter().filter(|&&(a, b)| a == n || b == n).count()
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.diagonals.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}-gon [{}]", self.polygon_size(), d.join(", "))
    }
}

/// Every dissection of the `((k-2) r + 2)`-gon into `r` k-gons, once each.
///
/// The face on the side `(1, n)` picks `k` corners; each gap between
/// consecutive corners must be a smaller polygon of size `(k-2) s + 2`
/// (a bare side when `s = 0`) and is dissected recursively.
pub fn enumerate_dissections(k: i64, r: usize, opts: &EnumOptions) -> Result<Vec<Dissection>> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("r must be >= 1".into()));
    }
    let k = k as usize;
    let n = (k - 2) * r + 2;
    check_guard("dissection polygon size", n, DISSECTION_GUARD, opts.force)?;
    let polygon: Vec<usize> = (1..=n).collect();
    Ok(dissect(&polygon, k)
        .into_iter()
        .map(|faces| {
            let mut diagonals: Vec<(usize, usize)> = faces
                .iter()
                .flat_map(|f| {
                    (0..f.len()).map(move |i| {
                        let (a, b) = (f[i], f[(i + 1) % f.len()]);
                        (a.min(b), a.max(b))
                    })
                })
                .filter(|&(a, b)| b - a > 1 && !(a == 1 && b == n))
                .collect();
            diagonals.sort_unstable();
            diagonals.dedup();
            Dissection {
                k,
                r,
                diagonals,
                faces,
            }
        })
        .collect())
}

/// All face lists of dissections of `poly` (increasing vertices).
fn dissect(poly: &[usize], k: usize) -> Vec<Vec<Vec<usize>>> {
    let m = poly.len();
    if m == 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut corners = vec![0usize];
    choose_corners(poly, k, &mut corners, &mut out);
    out
}

/// A gap spanning `steps` polygon sides holds `(k-2) s + 2` vertices.
fn gap_ok(steps: usize, k: usize) -> bool {
    (steps - 1) % (k - 2) == 0
}

fn choose_corners(poly: &[usize], k: usize, corners: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
    let m = poly.len();
    let last = *corners.last().unwrap();
    if corners.len() == k - 1 {
        // Final gap runs to the last vertex.
        if !gap_ok(m - 1 - last, k) {
            return;
        }
        corners.push(m - 1);
        let face: Vec<usize> = corners.iter().map(|&i| poly[i]).collect();
        let gaps: Vec<Vec<Vec<Vec<usize>>>> = corners
            .windows(2)
            .map(|w| dissect(&poly[w[0]..=w[1]], k))
            .collect();
        corners.pop();
        let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![face]];
        for g in gaps {
            acc = acc
                .into_iter()
                .flat_map(|faces| {
                    g.iter().map(move |sub| {
                        let mut f = faces.clone();
                        f.extend(sub.iter().cloned());
                        f
                    })
                })
                .collect();
        }
        out.extend(acc);
        return;
    }
    let remaining = k - 1 - corners.len();
    // Each later corner needs at least one step.
    for next in last + 1..m - remaining {
        if !gap_ok(next - last, k) {
            continue;
        }
        corners.push(next);
        choose_corners(poly, k, corners, out);
        corners.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(k: i64, r: usize) -> Vec<Dissection> {
        enumerate_dissections(k, r, &EnumOptions::default()).unwrap()
    }

    #[test]
    fn pentagon_triangulations() {
        let d = all(3, 3);
        assert_eq!(d.len(), 5);
        let mut hist = [0; 3];
        for x in &d {
            hist[x.root_degree()] += 1;
        }
        assert_eq!(hist, [2, 2, 1]);
    }

    #[test]
    fn quadrangulations() {
        assert_eq!(all(4, 1).len(), 1);
        assert_eq!(all(4, 2).len(), 3);
        assert_eq!(all(4, 3).len(), 12);
    }

    #[test]
    fn catalan_triangulations() {
        let counts: Vec<usize> = (1..=6).map(|r| all(3, r).len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn faces_are_k_gons() {
        for k in 3..=6 {
            for r in 1..=3 {
                for d in all(k, r) {
                    assert_eq!(d.faces.len(), r);
                    assert!(d.faces.iter().all(|f| f.len() == k as usize), "{d}");
                    assert_eq!(d.diagonals.len(), r - 1);
                }
            }
        }
    }

    #[test]
    fn guard_and_errors() {
        assert!(enumerate_dissections(3, 13, &EnumOptions::default()).is_err());
        assert!(enumerate_dissections(2, 1, &EnumOptions::default()).is_err());
    }
}
