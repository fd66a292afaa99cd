//! Scalar arithmetic for the three coefficient fields the kernel supports.
//!
//! * `Q`: arbitrary-precision rationals, always in lowest terms.
//! * `Fp(p)`: the prime field F_p for a configured prime `p < 2^31`; values
//!   are canonical representatives in `0..p`.
//! * `Ext`: the degree-4 extension ℚ(i, √2) with fixed basis
//!   {1, i, √2, i√2}. This hosts the finitary basis change, which needs both a
//!   square root of -1 and 1/√2.
//!
//! Mixing towers is a caller bug; the arithmetic methods panic on a mismatch,
//! and module boundaries (matrix construction, fixture loading) validate tower
//! consistency up front and return proper errors instead.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgError, Result};

/// Tag identifying which coefficient field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTower {
    /// The rationals.
    Q,
    /// The prime field with the given modulus.
    Fp(u64),
    /// ℚ(i, √2) with basis {1, i, √2, i√2}.
    Ext,
}

impl FieldTower {
    /// 0 for the characteristic-zero towers, `p` for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldTower::Fp(p) => *p,
            _ => 0,
        }
    }

    /// Validates that a modulus is prime and small enough that products fit
    /// in u64 arithmetic.
    pub fn fp(p: u64) -> Result<FieldTower> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(AlgError::BadModulus(p));
        }
        Ok(FieldTower::Fp(p))
    }
}

impl fmt::Display for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTower::Q => write!(f, "Q"),
            FieldTower::Fp(p) => write!(f, "F_{p}"),
            FieldTower::Ext => write!(f, "Q(i,sqrt2)"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact scalar in one of the supported towers.
///
/// Invariants: rationals are reduced (num-rational maintains this), F_p values
/// lie in `0..p`, and extension coordinates are reduced rationals on the basis
/// {1, i, √2, i√2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
    Ext(Box<[BigRational; 4]>),
}

impl Scalar {
    pub fn zero(field: FieldTower) -> Scalar {
        match field {
            FieldTower::Q => Scalar::Q(BigRational::zero()),
            FieldTower::Fp(p) => Scalar::Fp { v: 0, p },
            FieldTower::Ext => Scalar::Ext(Box::new([
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ])),
        }
    }

    pub fn one(field: FieldTower) -> Scalar {
        Scalar::from_i64(1, field)
    }

    pub fn from_i64(n: i64, field: FieldTower) -> Scalar {
        match field {
            FieldTower::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldTower::Fp(p) => {
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { v, p }
            }
            FieldTower::Ext => {
                let mut c = [
                    BigRational::zero(),
                    BigRational::zero(),
                    BigRational::zero(),
                    BigRational::zero(),
                ];
                c[0] = BigRational::from_integer(BigInt::from(n));
                Scalar::Ext(Box::new(c))
            }
        }
    }

    /// num/den as a rational (or its image mod p). `den` must be nonzero.
    pub fn ratio(num: i64, den: i64, field: FieldTower) -> Result<Scalar> {
        if den == 0 {
            return Err(AlgError::DivisionByZero);
        }
        let q = BigRational::new(BigInt::from(num), BigInt::from(den));
        Scalar::from_rational(q, field)
    }

    /// Embeds a rational into the requested tower.
    pub fn from_rational(q: BigRational, field: FieldTower) -> Result<Scalar> {
        match field {
            FieldTower::Q => Ok(Scalar::Q(q)),
            FieldTower::Fp(p) => {
                let num = mod_bigint(q.numer(), p);
                let den = mod_bigint(q.denom(), p);
                if den == 0 {
                    return Err(AlgError::Parse(format!(
                        "denominator of {q} vanishes mod {p}"
                    )));
                }
                Ok(Scalar::Fp {
                    v: mulmod(num, invmod(den, p)?, p),
                    p,
                })
            }
            FieldTower::Ext => {
                let mut c = [
                    BigRational::zero(),
                    BigRational::zero(),
                    BigRational::zero(),
                    BigRational::zero(),
                ];
                c[0] = q;
                Ok(Scalar::Ext(Box::new(c)))
            }
        }
    }

    /// The extension element a + b·i + c·√2 + d·i√2.
    pub fn ext(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Scalar {
        Scalar::Ext(Box::new([a, b, c, d]))
    }

    /// i in the extension tower.
    pub fn ext_i() -> Scalar {
        Scalar::ext(
            BigRational::zero(),
            BigRational::one(),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    /// √2 in the extension tower.
    pub fn ext_sqrt2() -> Scalar {
        Scalar::ext(
            BigRational::zero(),
            BigRational::zero(),
            BigRational::one(),
            BigRational::zero(),
        )
    }

    pub fn tower(&self) -> FieldTower {
        match self {
            Scalar::Q(_) => FieldTower::Q,
            Scalar::Fp { p, .. } => FieldTower::Fp(*p),
            Scalar::Ext(_) => FieldTower::Ext,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Ext(c) => c.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Ext(c) => c[0].is_one() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(),
        }
    }

    fn expect_same(&self, other: &Scalar) {
        debug_assert!(
            self.tower() == other.tower(),
            "mixed field towers: {} vs {}",
            self.tower(),
            other.tower()
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.expect_same(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: (a + b) % p,
                p: *p,
            },
            (Scalar::Ext(a), Scalar::Ext(b)) => Scalar::Ext(Box::new([
                &a[0] + &b[0],
                &a[1] + &b[1],
                &a[2] + &b[2],
                &a[3] + &b[3],
            ])),
            _ => unreachable!("mixed field towers"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
            Scalar::Ext(a) => Scalar::Ext(Box::new([-&a[0], -&a[1], -&a[2], -&a[3]])),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.expect_same(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: mulmod(*a, *b, *p),
                p: *p,
            },
            (Scalar::Ext(a), Scalar::Ext(b)) => {
                // Multiplication table of {1, i, √2, i√2}: i² = -1, (√2)² = 2,
                // i·√2 = i√2, (i√2)² = -2.
                let two = BigRational::from_integer(BigInt::from(2));
                let c0 = &(&a[0] * &b[0]) - &(&a[1] * &b[1]);
                let c0 = &c0 + &(&two * &(&(&a[2] * &b[2]) - &(&a[3] * &b[3])));
                let c1 = &(&a[0] * &b[1]) + &(&a[1] * &b[0]);
                let c1 = &c1 + &(&two * &(&(&a[2] * &b[3]) + &(&a[3] * &b[2])));
                let c2 = &(&(&a[0] * &b[2]) + &(&a[2] * &b[0]))
                    - &(&(&a[1] * &b[3]) + &(&a[3] * &b[1]));
                let c3 = &(&(&a[0] * &b[3]) + &(&a[3] * &b[0]))
                    + &(&(&a[1] * &b[2]) + &(&a[2] * &b[1]));
                Scalar::Ext(Box::new([c0, c1, c2, c3]))
            }
            _ => unreachable!("mixed field towers"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        match self {
            Scalar::Q(a) => Ok(Scalar::Q(a.recip())),
            Scalar::Fp { v, p } => Ok(Scalar::Fp {
                v: invmod(*v, *p)?,
                p: *p,
            }),
            Scalar::Ext(a) => ext_inverse(a),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    /// Parses the canonical fixture form: an optionally signed integer or
    /// `num/den`, interpreted in the given tower.
    pub fn parse(s: &str, field: FieldTower) -> Result<Scalar> {
        let s = s.trim();
        let bad = || AlgError::Parse(format!("invalid scalar literal {s:?}"));
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num_str.parse().map_err(|_| bad())?;
        let den: BigInt = den_str.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Scalar::from_rational(BigRational::new(num, den), field)
    }

    /// Canonical rendering: lowest-terms `num/den` (bare integer when the
    /// denominator is 1), the representative in `0..p` for F_p, and
    /// semicolon-joined coordinates for the extension tower.
    pub fn render(&self) -> String {
        match self {
            Scalar::Q(q) => render_rational(q),
            Scalar::Fp { v, .. } => v.to_string(),
            Scalar::Ext(c) => {
                if c[1].is_zero() && c[2].is_zero() && c[3].is_zero() {
                    render_rational(&c[0])
                } else {
                    format!(
                        "{};{};{};{}",
                        render_rational(&c[0]),
                        render_rational(&c[1]),
                        render_rational(&c[2]),
                        render_rational(&c[3])
                    )
                }
            }
        }
    }

    /// The rational value, when the scalar is a plain rational (including an
    /// extension element with no i/√2 part).
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Ext(c) if c[1].is_zero() && c[2].is_zero() && c[3].is_zero() => Some(&c[0]),
            _ => None,
        }
    }
}

fn render_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn mod_bigint(n: &BigInt, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let mut r = n % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    let (_, digits) = r.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => unreachable!("residue exceeds modulus"),
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^31, so the product fits in u64.
    (a * b) % p
}

fn invmod(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Err(AlgError::DivisionByZero);
    }
    // Extended Euclid on (a, p).
    let (mut r0, mut r1) = (a as i64, p as i64);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Ok(s0.rem_euclid(p as i64) as u64)
}

/// Inverse in ℚ(i, √2) by solving M_x · y = 1, where M_x is the
/// multiplication-by-x matrix on the basis {1, i, √2, i√2}.
fn ext_inverse(a: &[BigRational; 4]) -> Result<Scalar> {
    let two = BigRational::from_integer(BigInt::from(2));
    // Columns are x·1, x·i, x·√2, x·i√2.
    let mut m = [
        [a[0].clone(), -&a[1], &two * &a[2], -&(&two * &a[3])],
        [a[1].clone(), a[0].clone(), &two * &a[3], &two * &a[2]],
        [a[2].clone(), -&a[3], a[0].clone(), -&a[1]],
        [a[3].clone(), a[2].clone(), a[1].clone(), a[0].clone()],
    ];
    let mut rhs = [
        BigRational::one(),
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    ];
    // Gaussian elimination on the 4x4 system.
    for col in 0..4 {
        let pivot = (col..4)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(AlgError::DivisionByZero)?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in 0..4 {
            m[col][c] = &m[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..4 {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..4 {
                    m[r][c] = &m[r][c] - &(&f * &m[col][c]);
                }
                rhs[r] = &rhs[r] - &(&f * &rhs[col]);
            }
        }
    }
    Ok(Scalar::Ext(Box::new(rhs)))
}
