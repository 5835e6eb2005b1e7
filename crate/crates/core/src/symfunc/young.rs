//! Young diagrams, the bounding rectangle `box(a, b)`, and the complement,
//! transpose and dual operations on diagrams inside a rectangle.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::SymfuncError;

/// A Young diagram stored as its weakly decreasing list of positive row
/// lengths. The empty diagram has no rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

/// The rectangle `box(a, b)`: at most `a` columns and at most `b` rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxBound {
    pub a: u32,
    pub b: u32,
}

impl BoxBound {
    pub fn new(a: u32, b: u32) -> Self {
        BoxBound { a, b }
    }

    /// The same rectangle with rows and columns exchanged.
    pub fn transposed(self) -> Self {
        BoxBound { a: self.b, b: self.a }
    }

    /// The full rectangle as a diagram.
    pub fn full(self) -> YoungDiagram {
        if self.a == 0 {
            return YoungDiagram::empty();
        }
        YoungDiagram { parts: vec![self.a; self.b as usize] }
    }

    /// Every diagram in `T(a, b)`, in reverse lexicographic order of parts.
    pub fn diagrams(self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(max: u32, rows_left: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            out.push(YoungDiagram { parts: cur.clone() });
            if rows_left == 0 {
                return;
            }
            for p in (1..=max).rev() {
                cur.push(p);
                rec(p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        rec(self.a, self.b, &mut cur, &mut out);
        out
    }
}

impl YoungDiagram {
    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    /// Builds from row lengths. Trailing zeros are dropped; the remaining
    /// parts must be weakly decreasing.
    pub fn new(parts: &[u32]) -> Result<Self, SymfuncError> {
        let mut v: Vec<u32> = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.contains(&0) || v.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymfuncError::NotAPartition(parts.to_vec()));
        }
        Ok(YoungDiagram { parts: v })
    }

    /// Single-row diagram `(n)`.
    pub fn row(n: u32) -> Self {
        YoungDiagram::new(&[n]).expect("single row")
    }

    /// Single-column diagram `(1^n)`.
    pub fn column(n: u32) -> Self {
        YoungDiagram { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Row length `i` (zero past the last row).
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes `|lambda|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn num_cols(&self) -> u32 {
        self.part(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Membership in `T(a, b)`.
    pub fn fits(&self, bound: BoxBound) -> bool {
        self.num_rows() <= bound.b && self.num_cols() <= bound.a
    }

    /// Containment of diagrams `mu <= self`.
    pub fn contains(&self, mu: &YoungDiagram) -> bool {
        mu.parts.len() <= self.parts.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Exchanges rows and columns.
    pub fn transpose(&self) -> YoungDiagram {
        let parts = (0..self.num_cols()).map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32).collect();
        YoungDiagram { parts }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn partitions(n: u32) -> Vec<YoungDiagram> {
        BoxBound::new(n, n).diagrams().into_iter().filter(|d| d.size() == n).collect()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn check_fits(lambda: &YoungDiagram, bound: BoxBound) -> Result<(), SymfuncError> {
    if lambda.fits(bound) {
        Ok(())
    } else {
        Err(SymfuncError::OutOfBox { diagram: lambda.clone(), a: bound.a, b: bound.b })
    }
}

/// The boxes of `box(a, b)` outside `lambda`, rotated by 180 degrees.
pub fn complement(lambda: &YoungDiagram, bound: BoxBound) -> Result<YoungDiagram, SymfuncError> {
    check_fits(lambda, bound)?;
    let parts: Vec<u32> = (0..bound.b as usize).map(|i| bound.a - lambda.part(bound.b as usize - 1 - i)).collect();
    YoungDiagram::new(&parts)
}

/// Row/column exchange.
pub fn transpose(lambda: &YoungDiagram) -> YoungDiagram {
    lambda.transpose()
}

/// The dual diagram in `T(b, a)`: transpose of the complement.
pub fn dual(lambda: &YoungDiagram, bound: BoxBound) -> Result<YoungDiagram, SymfuncError> {
    Ok(complement(lambda, bound)?.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p).unwrap()
    }

    #[test]
    fn complement_examples() {
        let b = BoxBound::new(2, 2);
        assert_eq!(complement(&YoungDiagram::empty(), b).unwrap(), yd(&[2, 2]));
        assert_eq!(complement(&yd(&[2, 2]), b).unwrap(), YoungDiagram::empty());
        assert_eq!(complement(&yd(&[2, 1]), b).unwrap(), yd(&[1]));
        assert!(complement(&yd(&[3]), b).is_err());
    }

    #[test]
    fn transpose_and_dual_examples() {
        assert_eq!(transpose(&yd(&[3, 1])), yd(&[2, 1, 1]));
        assert_eq!(dual(&YoungDiagram::empty(), BoxBound::new(3, 2)).unwrap(), BoxBound::new(2, 3).full());
        assert_eq!(dual(&yd(&[1]), BoxBound::new(1, 1)).unwrap(), YoungDiagram::empty());
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(YoungDiagram::new(&[1, 2]).is_err());
        assert!(YoungDiagram::new(&[2, 0, 1]).is_err());
        assert_eq!(YoungDiagram::new(&[2, 1, 0]).unwrap(), yd(&[2, 1]));
    }

    #[test]
    fn box_enumeration_counts() {
        // |T(a,b)| = binomial(a+b, a).
        assert_eq!(BoxBound::new(2, 2).diagrams().len(), 6);
        assert_eq!(BoxBound::new(3, 2).diagrams().len(), 10);
        assert_eq!(BoxBound::new(0, 3).diagrams().len(), 1);
        assert_eq!(YoungDiagram::partitions(5).len(), 7);
    }
}
