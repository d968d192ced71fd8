use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::semigroup::{Elem, Semigroup};

/// A subset of a particular semigroup's elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    owner: u64,
    bits: Bitset,
}

impl SubsetMask {
    pub fn empty(s: &Semigroup) -> SubsetMask {
        SubsetMask { owner: s.fingerprint(), bits: Bitset::new(s.order()) }
    }

    pub fn full(s: &Semigroup) -> SubsetMask {
        SubsetMask { owner: s.fingerprint(), bits: Bitset::full(s.order()) }
    }

    pub fn from_elems(s: &Semigroup, elems: impl IntoIterator<Item = Elem>) -> Result<SubsetMask> {
        let mut m = SubsetMask::empty(s);
        for e in elems {
            s.check_elem(e)?;
            m.insert(e);
        }
        Ok(m)
    }

    pub fn from_labels<'a>(s: &Semigroup, labels: impl IntoIterator<Item = &'a str>) -> Result<SubsetMask> {
        let mut m = SubsetMask::empty(s);
        for l in labels {
            m.insert(s.index_of(l)?);
        }
        Ok(m)
    }

    /// Low bits of `mask` as element membership; requires order <= 128.
    pub fn from_mask(s: &Semigroup, mask: u128) -> Result<SubsetMask> {
        let n = s.order();
        if n > 128 || (n < 128 && mask >> n != 0) {
            return Err(Error::InvalidParameters(format!("mask {mask:#x} does not fit order {n}")));
        }
        Ok(SubsetMask { owner: s.fingerprint(), bits: Bitset::from_u128(n, mask) })
    }

    pub(crate) fn from_bitset(s: &Semigroup, bits: Bitset) -> SubsetMask {
        debug_assert_eq!(bits.len(), s.order());
        SubsetMask { owner: s.fingerprint(), bits }
    }

    /// Parses a comma-separated label list or `mask:HEX`. The empty string is the empty set.
    pub fn parse(s: &Semigroup, text: &str) -> Result<SubsetMask> {
        let text = text.trim();
        if let Some(hex) = text.strip_prefix("mask:") {
            let bits = Bitset::from_hex(s.order(), hex)
                .ok_or_else(|| Error::Parse(format!("bad mask `{hex}` for order {}", s.order())))?;
            return Ok(SubsetMask::from_bitset(s, bits));
        }
        if text.is_empty() || text == "{}" {
            return Ok(SubsetMask::empty(s));
        }
        SubsetMask::from_labels(s, text.split(',').map(str::trim))
    }

    pub fn check_bound(&self, s: &Semigroup) -> Result<()> {
        if self.owner == s.fingerprint() && self.bits.len() == s.order() {
            Ok(())
        } else {
            Err(Error::SemigroupMismatch)
        }
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: Elem) {
        self.bits.insert(e);
    }

    pub fn remove(&mut self, e: Elem) {
        self.bits.remove(e);
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.iter()
    }

    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        let mut b = self.bits.clone();
        b.union_with(&other.bits);
        SubsetMask { owner: self.owner, bits: b }
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        let mut b = self.bits.clone();
        b.intersect_with(&other.bits);
        SubsetMask { owner: self.owner, bits: b }
    }

    pub fn complement(&self) -> SubsetMask {
        SubsetMask { owner: self.owner, bits: self.bits.complement() }
    }

    pub fn difference(&self, other: &SubsetMask) -> SubsetMask {
        let mut b = self.bits.clone();
        b.difference_with(&other.bits);
        SubsetMask { owner: self.owner, bits: b }
    }

    pub fn to_hex(&self) -> String {
        self.bits.to_hex()
    }

    /// Membership as a `u64`; `None` when the universe has more than 64 elements.
    pub fn as_u64(&self) -> Option<u64> {
        (self.universe() <= 64).then(|| self.bits.words().first().copied().unwrap_or(0))
    }

    pub fn labels<'a>(&self, s: &'a Semigroup) -> Vec<&'a str> {
        self.iter().map(|e| s.label(e)).collect()
    }
}

/// Every subset of `s` in ascending mask order. Requires order <= 20.
pub fn all_subsets(s: &Semigroup) -> impl Iterator<Item = SubsetMask> + '_ {
    assert!(s.order() <= 20, "refusing to enumerate 2^{} subsets", s.order());
    (0u128..1 << s.order()).map(move |m| SubsetMask::from_mask(s, m).expect("mask fits"))
}
