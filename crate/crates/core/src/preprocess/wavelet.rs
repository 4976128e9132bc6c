//! Wavelet matrix over a sequence of small non-negative integers.
//!
//! Supports counting the values below a threshold in a position range and
//! extracting the i-th smallest value of a range, both in `O(log σ)` where σ
//! is the alphabet size. Space is `n ⌈log σ⌉` bits plus rank directories.

#[derive(Debug, Clone, Default)]
struct BitLevel {
    words: Vec<u64>,
    /// `ones_before[w]` = number of set bits in `words[..w]`.
    ones_before: Vec<u32>,
    zeros: usize,
}

impl BitLevel {
    fn from_words(words: Vec<u64>, len: usize) -> Self {
        let mut ones_before = Vec::with_capacity(words.len() + 1);
        let mut acc = 0u32;
        for w in &words {
            ones_before.push(acc);
            acc += w.count_ones();
        }
        ones_before.push(acc);
        BitLevel {
            zeros: len - acc as usize,
            words,
            ones_before,
        }
    }

    /// Set bits in positions `..i`.
    #[inline]
    fn rank1(&self, i: usize) -> usize {
        let (w, b) = (i / 64, i % 64);
        let mut r = self.ones_before[w] as usize;
        if b != 0 {
            r += (self.words[w] & ((1u64 << b) - 1)).count_ones() as usize;
        }
        r
    }

    #[inline]
    fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }
}

#[derive(Debug, Clone, Default)]
pub struct WaveletMatrix {
    len: usize,
    /// Most significant bit first.
    levels: Vec<BitLevel>,
}

impl WaveletMatrix {
    pub fn new(values: &[usize]) -> Self {
        let max = values.iter().copied().max().unwrap_or(0);
        let height = (usize::BITS - max.leading_zeros()).max(1) as usize;
        let mut cur = values.to_vec();
        let mut next = vec![0; values.len()];
        let mut levels = Vec::with_capacity(height);
        for level in 0..height {
            let shift = height - 1 - level;
            let mut words = vec![0u64; values.len().div_ceil(64)];
            let mut zeros = 0;
            for (i, &v) in cur.iter().enumerate() {
                let bit = (v >> shift) & 1;
                words[i / 64] |= (bit as u64) << (i % 64);
                zeros += 1 - bit;
            }
            // stable partition into `next`, zeros first; branch-free since
            // the bits are close to random
            let (mut z, mut o) = (0, zeros);
            for &v in &cur {
                let bit = (v >> shift) & 1;
                let pos = if bit == 1 { o } else { z };
                next[pos] = v;
                z += 1 - bit;
                o += bit;
            }
            levels.push(BitLevel::from_words(words, values.len()));
            std::mem::swap(&mut cur, &mut next);
        }
        WaveletMatrix {
            len: values.len(),
            levels,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of values `< bound` among positions `lo..hi`.
    pub fn count_less(&self, mut lo: usize, mut hi: usize, bound: usize) -> usize {
        debug_assert!(lo <= hi && hi <= self.len);
        let height = self.levels.len();
        if bound >= 1usize << height.min(usize::BITS as usize - 1) {
            return hi - lo;
        }
        let mut count = 0;
        for (level, bits) in self.levels.iter().enumerate() {
            if lo >= hi {
                break;
            }
            let bit = (bound >> (height - 1 - level)) & 1;
            let (l0, h0) = (bits.rank0(lo), bits.rank0(hi));
            if bit == 1 {
                count += h0 - l0;
                lo = bits.zeros + (lo - l0);
                hi = bits.zeros + (hi - h0);
            } else {
                lo = l0;
                hi = h0;
            }
        }
        count
    }

    /// The `nth` smallest (0-based) value among positions `lo..hi`.
    ///
    /// # Panics
    /// If `nth >= hi - lo`.
    pub fn nth_smallest(&self, mut lo: usize, mut hi: usize, mut nth: usize) -> usize {
        assert!(nth < hi.saturating_sub(lo), "rank out of range");
        let mut value = 0;
        for bits in &self.levels {
            let (l0, h0) = (bits.rank0(lo), bits.rank0(hi));
            let zeros_here = h0 - l0;
            value <<= 1;
            if nth < zeros_here {
                lo = l0;
                hi = h0;
            } else {
                nth -= zeros_here;
                value |= 1;
                lo = bits.zeros + (lo - l0);
                hi = bits.zeros + (hi - h0);
            }
        }
        value
    }
}
