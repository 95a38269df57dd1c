/// 256-bit word-packed bit array. Bit `i` lives in word `i / 64`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bits256(pub [u64; 4]);

impl Bits256 {
    pub const BITS: usize = 256;

    pub const fn zero() -> Self {
        Bits256([0; 4])
    }

    /// Bits `lo..=hi` set (empty when `lo > hi`).
    pub fn range(lo: usize, hi: usize) -> Self {
        let mut b = Bits256::zero();
        if lo > hi {
            return b;
        }
        let hi = hi.min(255);
        for w in 0..4 {
            let base = w * 64;
            if hi < base || lo > base + 63 {
                continue;
            }
            let a = lo.saturating_sub(base);
            let z = (hi - base).min(63);
            let width = z - a + 1;
            let mask = if width == 64 { u64::MAX } else { ((1u64 << width) - 1) << a };
            b.0[w] = mask;
        }
        b
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < 256 && (self.0[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        if i < 256 {
            self.0[i >> 6] |= 1 << (i & 63);
        }
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        if i < 256 {
            self.0[i >> 6] &= !(1 << (i & 63));
        }
    }

    #[inline]
    pub fn or(self, o: Self) -> Self {
        Bits256([self.0[0] | o.0[0], self.0[1] | o.0[1], self.0[2] | o.0[2], self.0[3] | o.0[3]])
    }

    #[inline]
    pub fn and(self, o: Self) -> Self {
        Bits256([self.0[0] & o.0[0], self.0[1] & o.0[1], self.0[2] & o.0[2], self.0[3] & o.0[3]])
    }

    #[inline]
    pub fn and_not(self, o: Self) -> Self {
        Bits256([self.0[0] & !o.0[0], self.0[1] & !o.0[1], self.0[2] & !o.0[2], self.0[3] & !o.0[3]])
    }

    #[inline]
    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// Logical shift towards higher indices; bits pushed past 255 are lost.
    #[inline]
    pub fn shl(self, k: usize) -> Self {
        if k >= 256 {
            return Bits256::zero();
        }
        let words = k >> 6;
        let bits = k & 63;
        let mut out = [0u64; 4];
        for i in (words..4).rev() {
            let src = i - words;
            let mut v = self.0[src] << bits;
            if bits != 0 && src > 0 {
                v |= self.0[src - 1] >> (64 - bits);
            }
            out[i] = v;
        }
        Bits256(out)
    }

    /// Iterates over set bit indices in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..4).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let t = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_and_shift() {
        let r = Bits256::range(3, 130);
        assert_eq!(r.count(), 128);
        assert!(r.get(3) && r.get(130) && !r.get(2) && !r.get(131));
        let s = r.shl(100);
        assert_eq!(s.iter_ones().next(), Some(103));
        assert_eq!(s.count(), 128);
        assert!(Bits256::range(5, 4).is_zero());
        assert_eq!(Bits256::range(0, 255).count(), 256);
        assert_eq!(Bits256::range(0, 255).shl(64).count(), 192);
        assert!(Bits256::range(0, 255).shl(256).is_zero());
    }

    #[test]
    fn iter_matches_get() {
        let mut b = Bits256::zero();
        for i in [0, 1, 63, 64, 65, 127, 128, 200, 255] {
            b.set(i);
        }
        let v: Vec<usize> = b.iter_ones().collect();
        assert_eq!(v, vec![0, 1, 63, 64, 65, 127, 128, 200, 255]);
        b.clear(64);
        assert!(!b.get(64));
    }
}
