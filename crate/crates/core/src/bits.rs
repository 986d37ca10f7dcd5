//! Helpers for subsets of a small ground set encoded as `u32` bitmasks.

use std::cmp::Ordering;

pub type Mask = u32;

pub fn count(mask: Mask) -> usize {
    mask.count_ones() as usize
}

pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Indices of the set bits, ascending.
pub fn members(mask: Mask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Mask {
    indices.into_iter().fold(0, |m, i| m | (1 << i))
}

/// Lexicographic comparison of the ascending member sequences.
pub fn lex_cmp(a: Mask, b: Mask) -> Ordering {
    members(a).cmp(members(b))
}

/// All subsets of `mask`, including `0` and `mask` itself.
pub fn subsets(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0 as Mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask { None } else { Some(((cur | !mask).wrapping_add(1)) & mask) };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all() {
        let all: Vec<Mask> = subsets(0b1010).collect();
        assert_eq!(all, vec![0, 0b10, 0b1000, 0b1010]);
        assert_eq!(subsets(0).count(), 1);
    }

    #[test]
    fn lex_order() {
        // {0,3} < {1} < {1,2}
        assert_eq!(lex_cmp(0b1001, 0b10), Ordering::Less);
        assert_eq!(lex_cmp(0b10, 0b110), Ordering::Less);
        assert_eq!(lex_cmp(0, 0b1), Ordering::Less);
    }
}
