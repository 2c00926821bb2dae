use std::fmt;

use crate::error::Error;

/// Largest nail count a [`NailSubset`] can describe.
pub const MAX_NAILS: u32 = 64;

/// A set of removed nails drawn from `1..=n`, stored as a bitmask where bit
/// `i - 1` stands for nail `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NailSubset {
    n: u32,
    mask: u64,
}

fn full_mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl NailSubset {
    pub fn empty(n: u32) -> Self {
        assert!(n <= MAX_NAILS, "at most {MAX_NAILS} nails");
        NailSubset { n, mask: 0 }
    }

    pub fn full(n: u32) -> Self {
        assert!(n <= MAX_NAILS, "at most {MAX_NAILS} nails");
        NailSubset {
            n,
            mask: full_mask(n),
        }
    }

    pub fn from_mask(n: u32, mask: u64) -> Result<Self, Error> {
        if n > MAX_NAILS {
            return Err(Error::TooManyNails { n, max: MAX_NAILS });
        }
        if mask & !full_mask(n) != 0 {
            let nail = 64 - (mask & !full_mask(n)).leading_zeros();
            return Err(Error::NailOutOfRange { nail, n });
        }
        Ok(NailSubset { n, mask })
    }

    pub fn from_nails<I: IntoIterator<Item = u32>>(n: u32, nails: I) -> Result<Self, Error> {
        if n > MAX_NAILS {
            return Err(Error::TooManyNails { n, max: MAX_NAILS });
        }
        let mut mask = 0u64;
        for nail in nails {
            if nail == 0 || nail > n {
                return Err(Error::NailOutOfRange { nail, n });
            }
            mask |= 1 << (nail - 1);
        }
        Ok(NailSubset { n, mask })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Nails outside `1..=n` are never members.
    #[inline]
    pub fn contains(&self, nail: u32) -> bool {
        nail >= 1 && nail <= self.n && self.mask >> (nail - 1) & 1 == 1
    }

    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_subset_of(&self, other: &NailSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn with(mut self, nail: u32) -> Self {
        assert!(
            nail >= 1 && nail <= self.n,
            "nail {nail} outside 1..={}",
            self.n
        );
        self.mask |= 1 << (nail - 1);
        self
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.n).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Display for NailSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, nail) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{nail}")?;
        }
        write!(f, "}}")
    }
}
