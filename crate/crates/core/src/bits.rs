//! Fixed-length bit windows backing the finite part of a relative ideal.
//!
//! Bits past `len` are never stored as set; readers that need the
//! "everything beyond the window is a member" convention ask for it
//! explicitly through [`Bits::word_at_filled`].

const WORD: usize = 64;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub(crate) fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut bits = Bits::zeros(len);
        for i in 0..len {
            if f(i) {
                bits.set(i);
            }
        }
        bits
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[cfg(test)]
    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + tz)
            })
        })
    }

    pub(crate) fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub(crate) fn last_zero(&self) -> Option<usize> {
        for k in (0..self.words.len()).rev() {
            let inverted = !self.words[k] & self.mask(k);
            if inverted != 0 {
                return Some(k * WORD + (WORD - 1 - inverted.leading_zeros() as usize));
            }
        }
        None
    }

    /// Mask of the valid bit positions in word `k`.
    #[inline]
    fn mask(&self, k: usize) -> u64 {
        let rem = self.len - k * WORD;
        if rem >= WORD {
            u64::MAX
        } else {
            (1u64 << rem) - 1
        }
    }

    /// Stored word `k`, with positions at or past `len` reading as `fill`.
    #[inline]
    fn word_filled(&self, k: usize, fill: bool) -> u64 {
        if k >= self.words.len() {
            return if fill { u64::MAX } else { 0 };
        }
        let w = self.words[k];
        if fill {
            w | !self.mask(k)
        } else {
            w
        }
    }

    /// The 64 bits starting at `pos`; positions at or past `len` read as 1.
    #[inline]
    pub(crate) fn word_at_filled(&self, pos: usize) -> u64 {
        self.word_at(pos, true)
    }

    #[inline]
    fn word_at(&self, pos: usize, fill: bool) -> u64 {
        let (k, s) = (pos / WORD, pos % WORD);
        let lo = self.word_filled(k, fill);
        if s == 0 {
            lo
        } else {
            (lo >> s) | (self.word_filled(k + 1, fill) << (WORD - s))
        }
    }

    /// Bits `start..end` as a new window.
    pub(crate) fn slice(&self, start: usize, end: usize) -> Bits {
        debug_assert!(start <= end && end <= self.len);
        let len = end - start;
        let mut out = Bits::zeros(len);
        for k in 0..out.words.len() {
            out.words[k] = self.word_at(start + k * WORD, false) & out.mask(k);
        }
        out
    }

    /// `self[i + shift] |= src[i]`; positions landing past `self.len` are dropped.
    pub(crate) fn or_shifted(&mut self, src: &Bits, shift: usize) {
        let (dk, s) = (shift / WORD, shift % WORD);
        for (k, &w) in src.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let target = dk + k;
            if target >= self.words.len() {
                break;
            }
            self.words[target] |= w << s;
            if s != 0 && target + 1 < self.words.len() {
                self.words[target + 1] |= w >> (WORD - s);
            }
        }
        if let Some(last) = self.words.len().checked_sub(1) {
            self.words[last] &= self.mask(last);
        }
    }
}

/// True when `a[i]` implies `b[i + shift]` for every `i < n`, with positions
/// of `b` at or past its length counting as set.
pub(crate) fn shifted_subset(a: &Bits, b: &Bits, shift: usize, n: usize) -> bool {
    let n = n.min(a.len);
    let mut k = 0;
    while k * WORD < n {
        let mut aw = a.words[k];
        let rem = n - k * WORD;
        if rem < WORD {
            aw &= (1u64 << rem) - 1;
        }
        if aw != 0 && aw & !b.word_at_filled(shift + k * WORD) != 0 {
            return false;
        }
        k += 1;
    }
    true
}
