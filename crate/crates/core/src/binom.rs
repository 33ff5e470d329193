/// `C(a, b) mod 2`, by Lucas' theorem: odd exactly when the binary digits of
/// `b` are a subset of those of `a`. Zero when `b > a`.
#[inline]
pub fn binom_mod2(a: u64, b: u64) -> bool {
    b & !a == 0
}

/// Iterates the submasks of `a` (every `t` with `binom_mod2(a, t)`), from `a`
/// down to 0.
pub(crate) fn submasks(a: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(a);
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & a) };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn binom_exact(a: u64, b: u64) -> u128 {
        if b > a {
            return 0;
        }
        let mut row = alloc::vec![1u128];
        for n in 1..=a {
            let mut next = alloc::vec![1u128; n as usize + 1];
            for j in 1..n as usize {
                next[j] = row[j - 1] + row[j];
            }
            row = next;
        }
        row[b as usize]
    }

    #[test]
    fn examples() {
        assert!(binom_mod2(3, 2));
        assert!(binom_mod2(17, 0));
        assert!(!binom_mod2(4, 2));
        assert!(!binom_mod2(2, 3));
    }

    #[test]
    fn matches_pascal_triangle_up_to_64() {
        for a in 0..=64u64 {
            for b in 0..=64u64 {
                assert_eq!(binom_mod2(a, b), binom_exact(a, b) % 2 == 1, "C({a},{b})");
            }
        }
    }

    #[test]
    fn submask_enumeration() {
        let s: Vec<u32> = submasks(5).collect();
        assert_eq!(s, [5, 4, 1, 0]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), [0]);
        for a in 0..64u32 {
            let n = submasks(a).count();
            assert_eq!(n, 1 << a.count_ones());
        }
    }
}
