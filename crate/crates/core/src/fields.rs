//! Exact scalars over ℚ, ℚ(√d) and 𝔽_p.
//!
//! A [`Scalar`] carries its [`Field`] descriptor. Arithmetic between scalars of
//! different descriptors is rejected: the `try_*` methods return
//! [`Error::DescriptorMismatch`], and the operator impls panic, since mixing
//! fields inside one algebra is always a construction bug.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FieldRepr", into = "FieldRepr")]
pub enum Field {
    Rationals,
    /// ℚ(√d) with d square-free, d ∉ {0, 1}.
    QuadExt(i64),
    /// 𝔽_p with p an odd prime.
    Prime(u64),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "field")]
enum FieldRepr {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "Q_sqrt")]
    QSqrt { d: i64 },
    #[serde(rename = "Fp")]
    Fp { p: u64 },
}

impl TryFrom<FieldRepr> for Field {
    type Error = Error;
    fn try_from(r: FieldRepr) -> Result<Field> {
        match r {
            FieldRepr::Q => Ok(Field::Rationals),
            FieldRepr::QSqrt { d } => Field::quadratic(d),
            FieldRepr::Fp { p } => Field::prime(p),
        }
    }
}

impl From<Field> for FieldRepr {
    fn from(f: Field) -> FieldRepr {
        match f {
            Field::Rationals => FieldRepr::Q,
            Field::QuadExt(d) => FieldRepr::QSqrt { d },
            Field::Prime(p) => FieldRepr::Fp { p },
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn is_square_free(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Field {
    pub fn quadratic(d: i64) -> Result<Field> {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(Error::InvalidField(format!(
                "d = {d} must be square-free and not 0 or 1"
            )));
        }
        Ok(Field::QuadExt(d))
    }

    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} must be an odd prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("p = {p} is too large")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses the short CLI spellings: `Q`, `Q(sqrt3)`, `Qsqrt3`, `Q_sqrt:3`, `F5`, `Fp:5`.
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "Q" {
            return Ok(Field::Rationals);
        }
        let bad = || Error::Parse(format!("unknown field '{s}'"));
        if let Some(rest) = t.strip_prefix("Fp:").or_else(|| t.strip_prefix('F')) {
            let p: u64 = rest.parse().map_err(|_| bad())?;
            return Field::prime(p);
        }
        if let Some(rest) = t
            .strip_prefix("Q_sqrt:")
            .or_else(|| t.strip_prefix("Qsqrt"))
            .or_else(|| t.strip_prefix("Q(sqrt").and_then(|r| r.strip_suffix(')')))
        {
            let inner = rest.trim_start_matches('(').trim_end_matches(')');
            let d: i64 = inner.parse().map_err(|_| bad())?;
            return Field::quadratic(d);
        }
        Err(bad())
    }

    /// 0 for characteristic zero.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// All elements in residue order, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Some((0..*p).map(|r| Scalar::residue(*self, r)).collect()),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::rat(*self, BigRational::from_integer(n.into())),
            Field::QuadExt(_) => Scalar::quad(
                *self,
                BigRational::from_integer(n.into()),
                BigRational::zero(),
            ),
            Field::Prime(p) => {
                Scalar::residue(*self, n.rem_euclid(*p as i64) as u64)
            }
        }
    }

    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.int(num).try_div(&self.int(den))
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::rat(*self, q.clone())),
            Field::QuadExt(_) => Ok(Scalar::quad(*self, q.clone(), BigRational::zero())),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let n = q.numer().mod_floor(&m).to_u64().unwrap();
                let d = q.denom().mod_floor(&m).to_u64().unwrap();
                Scalar::residue(*self, n).try_div(&Scalar::residue(*self, d))
            }
        }
    }

    /// The adjoined generator √d of ℚ(√d).
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            Field::QuadExt(_) => Some(Scalar::quad(
                *self,
                BigRational::zero(),
                BigRational::one(),
            )),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::QuadExt(d) => write!(f, "Q(sqrt({d}))"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Val {
    Rat(BigRational),
    Quad(BigRational, BigRational),
    Res(u64),
}

/// Exact field element in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    field: Field,
    val: Val,
}

/// Arithmetic operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Single entry point for binary/unary arithmetic; `Neg` ignores `y`.
pub fn field_arith(op: ArithOp, x: &Scalar, y: &Scalar) -> Result<Scalar> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
        ArithOp::Neg => Ok(-x),
    }
}

/// Square root inside the field, if one exists.
pub fn sqrt_in_field(c: &Scalar) -> Option<Scalar> {
    c.sqrt()
}

fn rat_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

impl Scalar {
    fn rat(field: Field, q: BigRational) -> Scalar {
        Scalar { field, val: Val::Rat(q) }
    }

    fn quad(field: Field, a: BigRational, b: BigRational) -> Scalar {
        Scalar { field, val: Val::Quad(a, b) }
    }

    pub fn residue(field: Field, r: u64) -> Scalar {
        Scalar { field, val: Val::Res(r) }
    }

    /// a + b√d from rational coordinates.
    pub fn from_quad_parts(field: Field, a: BigRational, b: BigRational) -> Result<Scalar> {
        match field {
            Field::QuadExt(_) => Ok(Scalar::quad(field, a, b)),
            _ => Err(Error::InvalidField(format!("{field} is not a quadratic extension"))),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Rational coordinates: (q, 0) for ℚ, (a, b) for ℚ(√d); `None` over 𝔽_p.
    pub fn rational_parts(&self) -> Option<(BigRational, BigRational)> {
        match &self.val {
            Val::Rat(q) => Some((q.clone(), BigRational::zero())),
            Val::Quad(a, b) => Some((a.clone(), b.clone())),
            Val::Res(_) => None,
        }
    }

    pub fn residue_value(&self) -> Option<u64> {
        match self.val {
            Val::Res(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.val {
            Val::Rat(q) => q.is_zero(),
            Val::Quad(a, b) => a.is_zero() && b.is_zero(),
            Val::Res(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.val {
            Val::Rat(q) => q.is_one(),
            Val::Quad(a, b) => a.is_one() && b.is_zero(),
            Val::Res(r) => *r == 1,
        }
    }

    fn same(&self, o: &Scalar) -> Result<()> {
        if self.field == o.field {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch(self.field, o.field))
        }
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar> {
        self.same(o)?;
        if o.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(o.clone());
        }
        let val = match (&self.val, &o.val) {
            (Val::Rat(x), Val::Rat(y)) => Val::Rat(x + y),
            (Val::Quad(a, b), Val::Quad(c, d)) => Val::Quad(a + c, b + d),
            (Val::Res(x), Val::Res(y)) => Val::Res((x + y) % self.field.characteristic()),
            _ => unreachable!("descriptor checked"),
        };
        Ok(Scalar { field: self.field, val })
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar> {
        self.same(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(self.field.zero());
        }
        let val = match (&self.val, &o.val) {
            (Val::Rat(x), Val::Rat(y)) => Val::Rat(x * y),
            (Val::Quad(a, b), Val::Quad(c, e)) => {
                let d = match self.field {
                    Field::QuadExt(d) => BigRational::from_integer(d.into()),
                    _ => unreachable!(),
                };
                if b.is_zero() && e.is_zero() {
                    Val::Quad(a * c, BigRational::zero())
                } else {
                    Val::Quad(a * c + d * b * e, a * e + b * c)
                }
            }
            (Val::Res(x), Val::Res(y)) => {
                let p = self.field.characteristic() as u128;
                Val::Res(((*x as u128 * *y as u128) % p) as u64)
            }
            _ => unreachable!("descriptor checked"),
        };
        Ok(Scalar { field: self.field, val })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let val = match &self.val {
            Val::Rat(q) => Val::Rat(q.recip()),
            Val::Quad(a, b) => {
                // (a - b√d) / (a² - d b²)
                let d = match self.field {
                    Field::QuadExt(d) => BigRational::from_integer(d.into()),
                    _ => unreachable!(),
                };
                let n = a * a - d * b * b;
                Val::Quad(a / &n, -(b / &n))
            }
            Val::Res(r) => {
                let p = self.field.characteristic();
                Val::Res(mod_pow(*r, p - 2, p))
            }
        };
        Ok(Scalar { field: self.field, val })
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar> {
        self.same(o)?;
        self.try_mul(&o.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = self.field.one();
        for _ in 0..e.unsigned_abs() {
            r = &r * &base;
        }
        Ok(r)
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn sqrt(&self) -> Option<Scalar> {
        let f = self.field;
        match &self.val {
            Val::Rat(q) => rat_sqrt(q).map(|r| Scalar::rat(f, r)),
            Val::Res(c) => {
                let p = f.characteristic();
                if *c == 0 {
                    return Some(self.clone());
                }
                if mod_pow(*c, (p - 1) / 2, p) != 1 {
                    return None;
                }
                let r = (1..p)
                    .find(|r| ((*r as u128 * *r as u128) % p as u128) as u64 == *c)
                    .expect("Euler criterion guarantees a root");
                Some(Scalar::residue(f, r.min(p - r)))
            }
            Val::Quad(u, v) => {
                let d = match f {
                    Field::QuadExt(d) => BigRational::from_integer(d.into()),
                    _ => unreachable!(),
                };
                let mut found: Vec<Scalar> = Vec::new();
                if v.is_zero() {
                    if let Some(a) = rat_sqrt(u) {
                        found.push(Scalar::quad(f, a, BigRational::zero()));
                    }
                    if let Some(b) = rat_sqrt(&(u / &d)) {
                        found.push(Scalar::quad(f, BigRational::zero(), b));
                    }
                } else {
                    // a = v/(2b) and a² + d b² = u  =>  b² = (u ± √(u² − d v²)) / (2d)
                    if let Some(s) = rat_sqrt(&(u * u - &d * v * v)) {
                        for sign in [1i64, -1] {
                            let b2 = (u + BigRational::from_integer(sign.into()) * &s)
                                / (BigRational::from_integer(2.into()) * &d);
                            if let Some(b) = rat_sqrt(&b2) {
                                if !b.is_zero() {
                                    let a = v / (BigRational::from_integer(2.into()) * &b);
                                    found.push(Scalar::quad(f, a, b));
                                }
                            }
                        }
                    }
                }
                let r = found.into_iter().next()?;
                debug_assert_eq!(&r.square(), self);
                // canonical sign: first nonzero coordinate positive
                let (a, b) = r.rational_parts().unwrap();
                if a.is_negative() || (a.is_zero() && b.is_negative()) {
                    Some(-r)
                } else {
                    Some(r)
                }
            }
        }
    }

    /// Real embedding (√d taken positive); `None` over 𝔽_p or for d < 0.
    pub fn to_f64(&self) -> Option<f64> {
        match (&self.val, self.field) {
            (Val::Rat(q), _) => q.to_f64(),
            (Val::Quad(a, b), Field::QuadExt(d)) if d > 0 => {
                Some(a.to_f64()? + b.to_f64()? * (d as f64).sqrt())
            }
            _ => None,
        }
    }

    /// Parses the exact encodings `num/den`, `a+b*sqrt(d)` (also `b*sqrt(d)`, `-sqrt(d)`)
    /// and plain residues.
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad scalar '{s}' for {field}"));
        if let Some(pos) = t.find("sqrt(") {
            let d = match field {
                Field::QuadExt(d) => d,
                _ => return Err(bad()),
            };
            let close = t[pos..].find(')').ok_or_else(bad)? + pos;
            let dd: i64 = t[pos + 5..close].parse().map_err(|_| bad())?;
            if dd != d || close + 1 != t.len() {
                return Err(bad());
            }
            let head = &t[..pos];
            // head = [a] (+|-) [b*]
            let coeff_end = head.strip_suffix('*').unwrap_or(head);
            let split = coeff_end
                .char_indices()
                .rev()
                .find(|&(i, c)| (c == '+' || c == '-') && i > 0 && !coeff_end[..i].ends_with(['+', '-', '/']))
                .map(|(i, _)| i);
            let (a_str, b_str) = match split {
                Some(i) => (&coeff_end[..i], &coeff_end[i..]),
                None => ("0", coeff_end),
            };
            let b_str = b_str.strip_prefix('+').unwrap_or(b_str);
            let b_str = match b_str {
                "" => "1",
                "-" => "-1",
                other => other,
            };
            let b_str = b_str.replace("+-", "-").replace("--", "");
            let a = parse_rational(a_str).ok_or_else(bad)?;
            let b = parse_rational(&b_str).ok_or_else(bad)?;
            return Ok(Scalar::quad(field, a, b));
        }
        let q = parse_rational(&t).ok_or_else(bad)?;
        field.from_rational(&q)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

fn fmt_rat(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.val, self.field) {
            (Val::Rat(q), _) => write!(f, "{}", fmt_rat(q)),
            (Val::Res(r), _) => write!(f, "{r}"),
            (Val::Quad(a, b), Field::QuadExt(d)) => {
                if b.is_zero() {
                    write!(f, "{}", fmt_rat(a))
                } else if a.is_zero() {
                    write!(f, "{}*sqrt({d})", fmt_rat(b))
                } else if b.is_negative() {
                    write!(f, "{}-{}*sqrt({d})", fmt_rat(a), fmt_rat(&-b))
                } else {
                    write!(f, "{}+{}*sqrt({d})", fmt_rat(a), fmt_rat(b))
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let val = match &self.val {
            Val::Rat(q) => Val::Rat(-q),
            Val::Quad(a, b) => Val::Quad(-a, -b),
            Val::Res(r) => {
                let p = self.field.characteristic();
                Val::Res((p - r) % p)
            }
        };
        Scalar { field: self.field, val }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);
forward_op!(Div, div, try_div);
