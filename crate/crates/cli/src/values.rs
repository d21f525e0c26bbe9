//! Numeric flag values: a single number, an inclusive range `lo..hi`, or a
//! comma-separated list of either.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Values<T>(pub Vec<T>);

impl<T> Values<T> {
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.0.iter()
    }
}

pub trait Stepped: Copy + PartialOrd + FromStr + fmt::Display {
    fn next(self) -> Option<Self>;
}

macro_rules! stepped {
    ($($t:ty),*) => {$(
        impl Stepped for $t {
            fn next(self) -> Option<Self> {
                self.checked_add(1)
            }
        }
    )*};
}

stepped!(u32, u64, i64);

const MAX_EXPANSION: usize = 10_000_000;

impl<T: Stepped> FromStr for Values<T> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            if let Some((lo, hi)) = part.split_once("..") {
                let lo: T = lo
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad range start in {part:?}"))?;
                let hi: T = hi
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad range end in {part:?}"))?;
                if lo > hi {
                    return Err(format!("empty range {part:?}"));
                }
                let mut x = lo;
                loop {
                    out.push(x);
                    if out.len() > MAX_EXPANSION {
                        return Err(format!("range {part:?} is too long"));
                    }
                    if x >= hi {
                        break;
                    }
                    x = x.next().expect("bounded by hi");
                }
            } else {
                out.push(
                    part.parse()
                        .map_err(|_| format!("not a number: {part:?}"))?,
                );
            }
        }
        Ok(Values(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges_and_lists() {
        assert_eq!("1..4".parse::<Values<u64>>().unwrap().0, vec![1, 2, 3, 4]);
        assert_eq!("3,5,7".parse::<Values<u64>>().unwrap().0, vec![3, 5, 7]);
        assert_eq!("1,4..5".parse::<Values<u32>>().unwrap().0, vec![1, 4, 5]);
        assert_eq!("-3..-1".parse::<Values<i64>>().unwrap().0, vec![-3, -2, -1]);
        assert_eq!("7".parse::<Values<u64>>().unwrap().0, vec![7]);
        assert!("5..1".parse::<Values<u64>>().is_err());
        assert!("x".parse::<Values<u64>>().is_err());
        assert!("1..".parse::<Values<u64>>().is_err());
    }
}
