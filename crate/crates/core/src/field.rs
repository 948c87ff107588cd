//! Exact arithmetic in `Q(√2, √3, √5)`.
//!
//! An element is `(Σ num[k]·√p(k)) / den` where `k` is a bit mask over the
//! primes `{2, 3, 5}` and `√p(k)` is the square root of the product of the
//! primes in `k`. Elements are kept in lowest terms with `den > 0`, so
//! structural equality (and hashing) is field equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

const PRIMES: [i64; 3] = [2, 3, 5];

/// Product of the primes selected by each mask.
const RADICAND: [i64; 8] = [1, 2, 3, 6, 5, 10, 15, 30];

/// Order in which coefficients are reported: 1, √2, √3, √5, √6, √10, √15, √30.
pub const BASIS_ORDER: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

const BASIS_NAMES: [&str; 8] = ["", "√2", "√3", "√6", "√5", "√10", "√15", "√30"];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    num: [i64; 8],
    den: i64,
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("field coefficient overflow")
}

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement { num: [0; 8], den: 1 };
    pub const ONE: FieldElement = FieldElement {
        num: [1, 0, 0, 0, 0, 0, 0, 0],
        den: 1,
    };

    fn reduce(num: [i128; 8], den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let mut g = den.abs();
        for &x in &num {
            if g == 1 {
                break;
            }
            g = g.gcd(&x);
        }
        if num.iter().all(|&x| x == 0) {
            return FieldElement::ZERO;
        }
        let g = if den < 0 { -g } else { g };
        FieldElement {
            num: num.map(|x| narrow(x / g)),
            den: narrow(den / g),
        }
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement::ratio(n, 1)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        let mut num = [0i128; 8];
        num[0] = n as i128;
        FieldElement::reduce(num, d as i128)
    }

    /// `√(product of the primes in mask)`, mask over `{2, 3, 5}`.
    pub fn sqrt_basis(mask: usize) -> Self {
        let mut num = [0i64; 8];
        num[mask] = 1;
        FieldElement { num, den: 1 }
    }

    pub fn sqrt2() -> Self {
        FieldElement::sqrt_basis(1)
    }

    pub fn sqrt3() -> Self {
        FieldElement::sqrt_basis(2)
    }

    pub fn sqrt5() -> Self {
        FieldElement::sqrt_basis(4)
    }

    /// Coefficients over `1, √2, √3, √5, √6, √10, √15, √30` as reduced
    /// `(numerator, denominator)` pairs.
    pub fn coefficients(&self) -> [(i64, i64); 8] {
        BASIS_ORDER.map(|k| {
            let g = self.num[k].gcd(&self.den).max(1);
            (self.num[k] / g, self.den / g)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&x| x == 0)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|&x| x == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        FieldElement::reduce(self.num.map(|x| x as i128 * k as i128), self.den as i128)
    }

    pub fn to_f64(&self) -> f64 {
        let s: f64 = (0..8)
            .map(|k| self.num[k] as f64 * (RADICAND[k] as f64).sqrt())
            .sum();
        s / self.den as f64
    }

    /// Exact sign.
    ///
    /// A floating-point enclosure settles almost every case; values whose
    /// enclosure contains zero go through exact elimination of one radical at
    /// a time.
    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut sum = 0.0f64;
        let mut mag = 0.0f64;
        for k in 0..8 {
            let t = self.num[k] as f64 * (RADICAND[k] as f64).sqrt();
            sum += t;
            mag += t.abs();
        }
        if sum.abs() > mag * 1e-12 {
            return if sum > 0.0 { Ordering::Greater } else { Ordering::Less };
        }
        let v: Vec<BigInt> = self.num.iter().map(|&x| BigInt::from(x)).collect();
        exact_sign(&v)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }
}

/// Sign of `Σ v[k]·√p(k)` for `v.len()` a power of two.
fn exact_sign(v: &[BigInt]) -> Ordering {
    let sign = |x: &BigInt| x.sign_cmp();
    if v.len() == 1 {
        return sign(&v[0]);
    }
    let h = v.len() / 2;
    let d = PRIMES[h.trailing_zeros() as usize];
    let (p, q) = v.split_at(h);
    let sp = exact_sign(p);
    let sq = exact_sign(q);
    if sq == Ordering::Equal || sp == sq {
        return if sp == Ordering::Equal { sq } else { sp };
    }
    if sp == Ordering::Equal {
        return sq;
    }
    // Opposite signs: compare p^2 against d q^2.
    let p2 = big_mul(p, p);
    let q2 = big_mul(q, q);
    let diff: Vec<BigInt> = p2.iter().zip(&q2).map(|(a, b)| a - b * d).collect();
    match exact_sign(&diff) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => sp,
        Ordering::Less => sq,
    }
}

fn big_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i ^ j] += x * y * RADICAND[i & j];
            }
        }
    }
    out
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl Default for FieldElement {
    fn default() -> Self {
        FieldElement::ZERO
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs;
        }
        let (da, db) = (self.den as i128, rhs.den as i128);
        if da == db {
            let mut num = [0i128; 8];
            for k in 0..8 {
                num[k] = self.num[k] as i128 + rhs.num[k] as i128;
            }
            return FieldElement::reduce(num, da);
        }
        let l = da.lcm(&db);
        let (fa, fb) = (l / da, l / db);
        let mut num = [0i128; 8];
        for k in 0..8 {
            num[k] = self.num[k] as i128 * fa + rhs.num[k] as i128 * fb;
        }
        FieldElement::reduce(num, l)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement {
            num: self.num.map(|x| -x),
            den: self.den,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return FieldElement::ZERO;
        }
        let mut num = [0i128; 8];
        for i in 0..8 {
            let x = self.num[i] as i128;
            if x == 0 {
                continue;
            }
            for j in 0..8 {
                let y = rhs.num[j] as i128;
                if y != 0 {
                    num[i ^ j] += x * y * RADICAND[i & j] as i128;
                }
            }
        }
        FieldElement::reduce(num, self.den as i128 * rhs.den as i128)
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl std::iter::Sum for FieldElement {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(FieldElement::ZERO, Add::add)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in BASIS_ORDER {
            let n = self.num[k];
            if n == 0 {
                continue;
            }
            let g = n.gcd(&self.den);
            let (n, d) = (n / g, self.den / g);
            let sign = if n < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                f.write_str(" ")?;
            }
            if !first || n < 0 {
                write!(f, "{sign}")?;
                if !first {
                    f.write_str(" ")?;
                }
            }
            let a = n.abs();
            match (a, BASIS_NAMES[k]) {
                (1, "") => f.write_str("1")?,
                (1, r) => f.write_str(r)?,
                (a, r) => write!(f, "{a}{r}")?,
            }
            if d != 1 {
                write!(f, "/{d}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
