//! Braid words, their parsing, and the permutation of their closure.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::WebError;

/// A braid word on `strands` strands. Letter `+i` is `sigma_i` and `-i` is
/// its inverse, with `1 <= i < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates and builds a braid word.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, WebError> {
        if strands < 1 {
            return Err(WebError::NoStrands);
        }
        for (pos, &l) in letters.iter().enumerate() {
            if l == 0 {
                return Err(WebError::ZeroLetter { pos });
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(WebError::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Number of crossings `n`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn n_plus(&self) -> usize {
        self.letters.iter().filter(|&&l| l > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.letters.iter().filter(|&&l| l < 0).count()
    }

    /// `true` when crossing `c` is positive.
    pub fn is_positive(&self, c: usize) -> bool {
        self.letters[c] > 0
    }

    /// Lower lane (0-based) of the two lanes crossing `c` involves.
    pub fn lane_of(&self, c: usize) -> usize {
        self.letters[c].unsigned_abs() as usize - 1
    }

    /// The mirror image: every crossing changes sign.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }

    /// Where each starting position ends up after traversing the word once.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        pos
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        count
    }

    /// `true` when the closure is a knot.
    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Fails with [`WebError::NotAKnot`] unless the closure is a knot.
    pub fn require_knot(&self) -> Result<(), WebError> {
        match self.closure_components() {
            1 => Ok(()),
            components => Err(WebError::NotAKnot { components }),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}] on {} strands", s.join(" "), self.strands)
    }
}

/// Parses whitespace-separated nonzero signed integers.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, WebError> {
    let letters = text
        .split_whitespace()
        .map(|tok| tok.parse::<i32>().map_err(|_| WebError::BadToken(tok.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let t = parse_braid("1 1 1", 2).unwrap();
        assert_eq!((t.n_plus(), t.n_minus(), t.len()), (3, 0, 3));
        assert!(t.is_knot());
        let f = parse_braid("1 -2 1 -2", 3).unwrap();
        assert_eq!((f.n_plus(), f.n_minus()), (2, 2));
        assert!(f.is_knot());
        let u = parse_braid("", 1).unwrap();
        assert!(u.is_empty() && u.is_knot());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_braid("1 0", 2), Err(WebError::ZeroLetter { pos: 1 }));
        assert_eq!(parse_braid("2", 2), Err(WebError::LetterOutOfRange { letter: 2, strands: 2 }));
        assert_eq!(parse_braid("", 0), Err(WebError::NoStrands));
        assert!(matches!(parse_braid("1 x", 2), Err(WebError::BadToken(_))));
    }

    #[test]
    fn closure_components() {
        assert_eq!(parse_braid("1 1", 2).unwrap().closure_components(), 2);
        assert_eq!(parse_braid("", 3).unwrap().closure_components(), 3);
        assert!(parse_braid("1 2 1 2 1 2 1 2", 3).unwrap().is_knot());
        assert!(!parse_braid("1 2 1 2 1 2", 3).unwrap().is_knot());
    }
}
