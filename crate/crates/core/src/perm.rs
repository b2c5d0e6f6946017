//! Permutations of `{0, .., n-1}`, written as image tables.
//!
//! `Permutation` is the common currency for vertex symmetries of complexes,
//! node symmetries of graphs and Hasse diagrams, and vertex symmetries of
//! Morse complexes. The text form lists images in parentheses: `(2 0 1)`
//! sends 0 to 2, 1 to 0, and 2 to 1.

use std::fmt;

use thiserror::Error;

/// Errors raised when constructing a permutation.
#[derive(Debug, Error)]
pub enum PermError {
    /// The image table was not a bijection.
    #[error("image table {images:?} is not a bijection of 0..{degree}")]
    NotBijective { images: Vec<usize>, degree: usize },
    /// The text form could not be parsed.
    #[error("cannot parse permutation from {text:?}")]
    Unparseable { text: String },
}

/// A permutation of `{0, .., degree-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from an image table, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            if img >= degree || seen[img] {
                return Err(PermError::NotBijective { images, degree });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image of one point.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// The full image table.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Is this the identity?
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Functional composition `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// The `k`-th power (repeated composition).
    pub fn pow(&self, k: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// The order: the least `k >= 1` with `self^k` the identity.
    pub fn order(&self) -> usize {
        // Least common multiple of the cycle lengths.
        let mut seen = vec![false; self.degree()];
        let mut order: usize = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Parses the text form `(i0 i1 .. )`, the inverse of `Display`.
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| PermError::Unparseable {
                text: text.to_string(),
            })?;
        let images: Vec<usize> = inner
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| PermError::Unparseable {
                    text: text.to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        Permutation::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
