use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Assignment of every vertex to one of three parts.
///
/// Parts are stored as `0, 1, 2` and shown as `1, 2, 3`. Index arithmetic
/// `i + 1`, `i + 2` is taken mod 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition3 {
    parts: Vec<u8>,
}

#[inline]
pub fn next(i: usize) -> usize {
    (i + 1) % 3
}

#[inline]
pub fn prev(i: usize) -> usize {
    (i + 2) % 3
}

impl Partition3 {
    /// From 0-based part indices.
    pub fn new(parts: Vec<u8>) -> Result<Partition3> {
        if let Some(&p) = parts.iter().find(|&&p| p > 2) {
            return Err(Error::InvalidPart(p as usize + 1));
        }
        Ok(Partition3 { parts })
    }

    /// From 1-based labels in `{1,2,3}`.
    pub fn from_labels(labels: &[usize]) -> Result<Partition3> {
        let mut parts = Vec::with_capacity(labels.len());
        for &l in labels {
            if !(1..=3).contains(&l) {
                return Err(Error::InvalidPart(l));
            }
            parts.push((l - 1) as u8);
        }
        Ok(Partition3 { parts })
    }

    /// Consecutive label ranges `[0,n1)`, `[n1,n1+n2)`, `[n1+n2,n)`.
    pub fn from_sizes(n1: usize, n2: usize, n3: usize) -> Partition3 {
        let mut parts = Vec::with_capacity(n1 + n2 + n3);
        parts.resize(n1, 0);
        parts.resize(n1 + n2, 1);
        parts.resize(n1 + n2 + n3, 2);
        Partition3 { parts }
    }

    /// Balanced by label: vertex `v` goes to part `3v / n`.
    pub fn balanced(n: usize) -> Partition3 {
        let (q, r) = (n / 3, n % 3);
        Self::from_sizes(q + usize::from(r > 0), q + usize::from(r > 1), q)
    }

    /// Parses a string over `{1,2,3}`.
    pub fn parse(s: &str) -> Result<Partition3> {
        let mut labels = Vec::new();
        for ch in s.trim().chars() {
            match ch.to_digit(10) {
                Some(d @ 1..=3) => labels.push(d as usize),
                Some(d) => return Err(Error::InvalidPart(d as usize)),
                None => return Err(Error::InvalidParameter(alloc::format!("bad part character {ch:?}"))),
            }
        }
        Self::from_labels(&labels)
    }

    pub fn to_label_string(&self) -> String {
        self.parts.iter().map(|&p| char::from(b'1' + p)).collect()
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// 0-based part of `v`.
    #[inline]
    pub fn part(&self, v: usize) -> usize {
        self.parts[v] as usize
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn sizes(&self) -> [usize; 3] {
        let mut s = [0; 3];
        for &p in &self.parts {
            s[p as usize] += 1;
        }
        s
    }

    pub fn members(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.part(v) == i).collect()
    }

    pub fn set(&mut self, v: usize, part: usize) {
        self.parts[v] = part as u8;
    }

    pub fn check_covers(&self, n: usize) -> Result<()> {
        if self.n() == n {
            Ok(())
        } else {
            Err(Error::PartitionMismatch {
                expected: n,
                got: self.n(),
            })
        }
    }

    /// Relabels parts `i -> i + shift (mod 3)`.
    pub fn rotate(&self, shift: usize) -> Partition3 {
        Partition3 {
            parts: self.parts.iter().map(|&p| ((p as usize + shift) % 3) as u8).collect(),
        }
    }

    /// Part-intersection profile `(|t ∩ V1|, |t ∩ V2|, |t ∩ V3|)`.
    pub fn profile(&self, verts: &[usize]) -> [usize; 3] {
        let mut c = [0; 3];
        for &v in verts {
            c[self.part(v)] += 1;
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_labels() {
        let p = Partition3::from_sizes(2, 1, 3);
        assert_eq!(p.sizes(), [2, 1, 3]);
        assert_eq!(p.to_label_string(), "112333");
        assert_eq!(Partition3::parse("112333").unwrap(), p);
        assert!(Partition3::parse("1124").is_err());
        assert_eq!(Partition3::balanced(7).sizes(), [3, 2, 2]);
        assert_eq!(p.rotate(1).sizes(), [3, 2, 1]);
        assert_eq!(p.profile(&[0, 1, 5]), [2, 0, 1]);
    }
}
