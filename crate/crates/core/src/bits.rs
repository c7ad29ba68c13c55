//! Bit strings and boolean oracles over `{0, …, 2^n - 1}`.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest register width an oracle may have; keeps truth tables in memory.
pub const MAX_ORACLE_BITS: usize = 24;

/// An `n`-bit value whose bits are addressed MSB-first: `bit(1)` is the most
/// significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitString {
    value: u64,
    width: usize,
}

impl BitString {
    pub fn new(value: u64, width: usize) -> Result<Self> {
        if width == 0 || width > 63 {
            return Err(Error::InvalidArgument(format!(
                "bit-string width must be in 1..=63, got {width}"
            )));
        }
        if value >> width != 0 {
            return Err(Error::InvalidArgument(format!(
                "value {value} does not fit in {width} bits"
            )));
        }
        Ok(Self { value, width })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Bit `i` for `1 <= i <= width`, most significant first.
    pub fn bit(&self, i: usize) -> u8 {
        assert!(
            (1..=self.width).contains(&i),
            "bit index {i} out of 1..={}",
            self.width
        );
        ((self.value >> (self.width - i)) & 1) as u8
    }

    /// Bitwise XOR, i.e. addition in (ℤ/2)^n.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: other.width,
            });
        }
        Ok(Self {
            value: self.value ^ other.value,
            width: self.width,
        })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.width)
    }
}

/// A function `f: {0,…,2^n-1} → {0,1}` stored as a packed truth table
/// (bit `k` of the table is `f(k)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanOracle {
    n: usize,
    words: Vec<u64>,
}

impl BooleanOracle {
    fn check_width(n: usize) -> Result<()> {
        if n == 0 || n > MAX_ORACLE_BITS {
            return Err(Error::InvalidArgument(format!(
                "oracle width must be in 1..={MAX_ORACLE_BITS}, got {n}"
            )));
        }
        Ok(())
    }

    fn word_count(n: usize) -> usize {
        (1usize << n).div_ceil(64)
    }

    /// The constant-zero oracle.
    pub fn zero(n: usize) -> Result<Self> {
        Self::check_width(n)?;
        Ok(Self {
            n,
            words: vec![0; Self::word_count(n)],
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        let mut oracle = Self::zero(n)?;
        for k in 0..oracle.domain_size() {
            if f(k) {
                oracle.set(k);
            }
        }
        Ok(oracle)
    }

    pub fn from_marked(n: usize, marked: &[usize]) -> Result<Self> {
        let mut oracle = Self::zero(n)?;
        for &k in marked {
            if k >= oracle.domain_size() {
                return Err(Error::InvalidArgument(format!(
                    "marked element {k} outside domain of size {}",
                    oracle.domain_size()
                )));
            }
            oracle.set(k);
        }
        Ok(oracle)
    }

    /// Oracle whose truth table, read as an integer with `f(0)` in the least
    /// significant bit, equals `table`. Enumerating `table` over
    /// `0..2^(2^n)` visits every oracle once.
    pub fn from_index(n: usize, table: u64) -> Result<Self> {
        Self::check_width(n)?;
        let size = 1usize << n;
        if size < 64 && table >> size != 0 {
            return Err(Error::InvalidArgument(format!(
                "truth table {table:#x} has bits beyond the {size}-entry domain"
            )));
        }
        let mut words = vec![0; Self::word_count(n)];
        words[0] = table;
        Ok(Self { n, words })
    }

    /// Parses a hexadecimal truth table (`0x` prefix optional), LSB = `f(0)`.
    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        let mut oracle = Self::zero(n)?;
        let digits = hex
            .strip_prefix("0x")
            .or_else(|| hex.strip_prefix("0X"))
            .unwrap_or(hex);
        if digits.is_empty() {
            return Err(Error::InvalidArgument("empty truth table".into()));
        }
        for (pos, c) in digits.chars().rev().enumerate() {
            let nibble = c.to_digit(16).ok_or_else(|| {
                Error::InvalidArgument(format!("invalid hex digit {c:?} in truth table"))
            })?;
            for bit in 0..4 {
                if nibble >> bit & 1 == 1 {
                    let k = pos * 4 + bit;
                    if k >= oracle.domain_size() {
                        return Err(Error::InvalidArgument(format!(
                            "truth table sets f({k}) outside domain of size {}",
                            oracle.domain_size()
                        )));
                    }
                    oracle.set(k);
                }
            }
        }
        Ok(oracle)
    }

    /// Uniformly random truth table.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let mut oracle = Self::zero(n)?;
        for w in oracle.words.iter_mut() {
            *w = rng.random();
        }
        let size = oracle.domain_size();
        if size < 64 {
            oracle.words[0] &= (1u64 << size) - 1;
        }
        Ok(oracle)
    }

    fn set(&mut self, k: usize) {
        self.words[k / 64] |= 1 << (k % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain_size(&self) -> usize {
        1 << self.n
    }

    pub fn eval(&self, k: usize) -> bool {
        debug_assert!(k < self.domain_size());
        self.words[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn marked(&self) -> Vec<usize> {
        (0..self.domain_size()).filter(|&k| self.eval(k)).collect()
    }

    pub fn marked_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Truth table as lowercase hex with `0x` prefix, zero-padded to the
    /// domain size. Round-trips through [`BooleanOracle::from_hex`].
    pub fn to_hex(&self) -> String {
        let digits = self.domain_size().div_ceil(4);
        let mut s = String::with_capacity(digits + 2);
        s.push_str("0x");
        for d in (0..digits).rev() {
            let bit0 = d * 4;
            let nibble = (self.words[bit0 / 64] >> (bit0 % 64)) & 0xf;
            s.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        s
    }
}

impl fmt::Display for BooleanOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bit_accessor_is_msb_first() {
        let j = BitString::new(0b101, 3).unwrap();
        assert_eq!((j.bit(1), j.bit(2), j.bit(3)), (1, 0, 1));
        let k = BitString::new(0b100, 3).unwrap();
        assert_eq!(k.bit(1), 1);
        assert_eq!(k.bit(3), 0);
        assert_eq!(k.to_string(), "100");
    }

    #[test]
    fn bit_string_rejects_oversized_values() {
        assert!(BitString::new(4, 2).is_err());
        assert!(BitString::new(0, 0).is_err());
    }

    #[test]
    fn oracle_forms_agree() {
        let a = BooleanOracle::from_marked(2, &[1, 3]).unwrap();
        let b = BooleanOracle::from_index(2, 0b1010).unwrap();
        let c = BooleanOracle::from_hex(2, "0xa").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_hex(), "0xa");
        assert_eq!(a.marked(), vec![1, 3]);
        assert_eq!(a.marked_count(), 2);
    }

    #[test]
    fn oracle_rejects_out_of_domain() {
        assert!(BooleanOracle::from_marked(2, &[4]).is_err());
        assert!(BooleanOracle::from_index(2, 1 << 4).is_err());
        assert!(BooleanOracle::from_hex(2, "0x10").is_err());
        assert!(BooleanOracle::from_hex(2, "0xg").is_err());
        assert!(BooleanOracle::zero(0).is_err());
    }

    #[test]
    fn wide_oracle_hex() {
        let o = BooleanOracle::from_marked(8, &[0, 37, 255]).unwrap();
        assert_eq!(o.to_hex().len(), 2 + 64);
        assert_eq!(BooleanOracle::from_hex(8, &o.to_hex()).unwrap(), o);
    }

    proptest! {
        #[test]
        fn hex_round_trip(n in 1usize..=10, seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let o = BooleanOracle::random(n, &mut rng).unwrap();
            prop_assert_eq!(BooleanOracle::from_hex(n, &o.to_hex()).unwrap(), o);
        }
    }
}
