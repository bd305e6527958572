//! Exact integer and rational scalars.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rats_of_ints(v: &[Int]) -> Vec<Rat> {
    v.iter().map(rat_int).collect()
}

/// Integer vector if every entry is integral.
pub fn integral(v: &[Rat]) -> Option<Vec<Int>> {
    v.iter()
        .map(|x| if x.is_integer() { Some(x.to_integer()) } else { None })
        .collect()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(s.to_string());
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: Int = p.parse().map_err(|_| bad())?;
    let q: Int = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn fmt_vec_rat(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_rat).collect();
    format!("({})", parts.join(","))
}

pub fn fmt_vec_int(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn lcm(a: &Int, b: &Int) -> Int {
    a.lcm(b)
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: &Rat) -> Rat {
    r - rat_int(&r.floor().to_integer())
}

/// Least common multiple of denominators.
pub fn denom_lcm(v: &[Rat]) -> Int {
    v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()))
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat_int(a: &[Rat], b: &[Int]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * rat_int(y)).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add_vec(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(a: &[Int], k: &Int) -> Vec<Int> {
    a.iter().map(|x| x * k).collect()
}

pub fn is_zero_vec(a: &[Int]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Divides out the content and returns the primitive vector.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let g = gcd_all(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn abs(x: &Int) -> Int {
    x.abs()
}

/// Smallest representative of `x` modulo `m` in `[0, m)`.
pub fn modulo(x: &Int, m: &Int) -> Int {
    x.mod_floor(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3/4", "1/2", "10/5"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&fmt_rat(&r)).unwrap(), r);
        }
        assert_eq!(fmt_rat(&parse_rat("10/5").unwrap()), "2");
        assert_eq!(fmt_rat(&parse_rat("6/-4").unwrap()), "-3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn fractional_part_is_in_unit_interval() {
        assert_eq!(frac(&rat(-1, 3)), rat(2, 3));
        assert_eq!(frac(&rat(7, 2)), rat(1, 2));
        assert_eq!(frac(&rat(-4, 1)), rat(0, 1));
    }

    #[test]
    fn primitive_divides_content() {
        assert_eq!(primitive(&ints(&[4, -6, 0])), ints(&[2, -3, 0]));
        assert_eq!(primitive(&ints(&[0, 0])), ints(&[0, 0]));
    }
}
