//! One-line permutations indexing the standard basis.

use std::fmt;

use combinatorics::perm as raw;
use serde_json::Value;

/// Permutation of 0..r; `images[p]` is the image of p.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Permutation {
        Permutation { images: raw::identity(r) }
    }

    /// 0-based images; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Permutation {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            assert!(v < images.len() && !seen[v], "not a permutation: {:?}", images);
            seen[v] = true;
        }
        Permutation { images }
    }

    /// The adjacent swap s_i exchanging i and i+1 of 1..r.
    pub fn transposition(r: usize, i: usize) -> Permutation {
        assert!(i >= 1 && i < r, "generator index out of range");
        let mut images = raw::identity(r);
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Parse a 1-based one-line list like "2,1,3".
    pub fn parse(s: &str) -> Result<Permutation, String> {
        let mut images = Vec::new();
        for piece in s.trim().split(',') {
            let v: usize = piece
                .trim()
                .parse()
                .map_err(|_| format!("bad permutation entry: {:?}", piece))?;
            if v == 0 {
                return Err("one-line entries are 1-based".into());
            }
            images.push(v - 1);
        }
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v >= images.len() || seen[v] {
                return Err(format!("not a permutation of 1..{}", images.len()));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn r(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn is_identity(&self) -> bool {
        raw::is_identity(&self.images)
    }

    /// Coxeter length = inversion count.
    pub fn length(&self) -> usize {
        raw::inversions(&self.images)
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { images: raw::inverse(&self.images) }
    }

    /// Right product with s_i: swaps the one-line entries at positions
    /// i-1 and i, changing the length by exactly one.
    pub fn right_mul_gen(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.r(), "generator index out of range");
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Lexicographically smallest [i1, ..., ik] with
    /// self * s_{i1} * ... * s_{ik} = identity; k = length().
    pub fn descent_word(&self) -> Vec<usize> {
        raw::first_descent_reduced_word(&self.images)
    }

    /// Extend by fixed points up to rank big_r, shifted right by offset.
    pub fn embed(&self, offset: usize, big_r: usize) -> Permutation {
        assert!(offset + self.r() <= big_r, "embedding does not fit");
        let mut images = raw::identity(big_r);
        for (p, &v) in self.images.iter().enumerate() {
            images[offset + p] = offset + v;
        }
        Permutation { images }
    }

    /// 1-based one-line list.
    pub fn to_json(&self) -> Value {
        Value::Array(self.images.iter().map(|&v| Value::from(v as u64 + 1)).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.images.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", strs.join(","))
    }
}

/// All permutations of rank r in lexicographic one-line order.
pub fn all_elements(r: usize) -> Vec<Permutation> {
    raw::all_permutations(r).into_iter().map(|images| Permutation { images }).collect()
}
