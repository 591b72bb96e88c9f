use std::fmt;
use std::str::FromStr;

use super::LatticeError;

/// A weakly decreasing tuple of nonnegative parts `(λ₁, …, λₙ)`.
///
/// Trailing zeros are significant: they fix the length `n`, which in turn
/// fixes the number of lattice rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, LatticeError> {
        if parts.is_empty() {
            return Err(LatticeError::EmptyPartition);
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(LatticeError::NotWeaklyDecreasing {
                index: i + 1,
                parts: parts.clone(),
            });
        }
        Ok(Self { parts })
    }

    /// Parses signed parts, rejecting negatives with a dedicated error.
    pub fn from_signed(parts: &[i64]) -> Result<Self, LatticeError> {
        let parts = parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                u32::try_from(p).map_err(|_| LatticeError::NegativePart {
                    index: i + 1,
                    value: p,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }

    /// The all-zero partition of length `n`, whose lattice carries
    /// domain-wall boundary conditions.
    pub fn zero(n: usize) -> Result<Self, LatticeError> {
        Self::new(vec![0; n])
    }

    /// Hook `(m, 0, …, 0)` with `n` parts.
    pub fn hook(n: usize, m: u32) -> Result<Self, LatticeError> {
        let mut parts = vec![0; n];
        if let Some(first) = parts.first_mut() {
            *first = m;
        }
        Self::new(parts)
    }

    /// Staircase `(λ₁, n−2, …, 1, 0)`; requires `λ₁ ≥ n−1`.
    pub fn staircase(n: usize, largest: u32) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::EmptyPartition);
        }
        let mut parts: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
        parts[0] = largest;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts[0]
    }

    /// `λ₂`, or `None` for a single-part partition.
    pub fn second(&self) -> Option<u32> {
        self.parts.get(1).copied()
    }

    /// `ρ = (n, n−1, …, 1)`.
    pub fn rho(n: usize) -> Vec<u32> {
        (1..=n as u32).rev().collect()
    }

    /// The strictly decreasing sequence `λ + ρ`; its entries are the columns
    /// (numbered right to left from 1) whose upper arrow points up.
    pub fn plus_rho(&self) -> Vec<u32> {
        let n = self.len() as u32;
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + n - i as u32)
            .collect()
    }

    /// Adds `d` to every part.
    pub fn shifted(&self, d: u32) -> Self {
        Self {
            parts: self.parts.iter().map(|p| p + d).collect(),
        }
    }

    /// Same tail, different first part. Fails if the result is not a partition.
    pub fn with_largest(&self, largest: u32) -> Result<Self, LatticeError> {
        let mut parts = self.parts.clone();
        parts[0] = largest;
        Self::new(parts)
    }

    /// Recognizes `(m+d, d, …, d)` and returns the arm `m`.
    pub fn hook_arm(&self) -> Option<u32> {
        let d = *self.parts.last()?;
        if self.parts[1..].iter().all(|&p| p == d) {
            Some(self.parts[0] - d)
        } else {
            None
        }
    }

    /// Recognizes `(λ₁+d, n−2+d, …, 1+d, d)` with `λ₁ ≥ n−1` and returns the
    /// unshifted first part `λ₁`.
    pub fn staircase_largest(&self) -> Option<u32> {
        let n = self.len();
        let d = *self.parts.last()?;
        for (i, &p) in self.parts.iter().enumerate().skip(1) {
            if p != d + (n - 1 - i) as u32 {
                return None;
            }
        }
        let largest = self.parts[0] - d;
        (largest as usize >= n - 1).then_some(largest)
    }

    /// Every partition with exactly `n` parts and `λ₁ ≤ max_largest`, in
    /// lexicographic order of parts.
    pub fn all_with(n: usize, max_largest: u32) -> Vec<Partition> {
        fn rec(n: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if prefix.len() == n {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in 0..=cap {
                prefix.push(p);
                rec(n, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, max_largest, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", joined.join(","))
    }
}

impl FromStr for Partition {
    type Err = LatticeError;

    /// Comma-separated parts, largest first: `"2,2,0"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|_| LatticeError::Parse(format!("`{tok}` is not an integer part")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_signed(&parts)
    }
}
