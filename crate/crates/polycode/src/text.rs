//! Plain-text formats for fields, elements, vectors and polynomials.
//!
//! * field: `p^s`, a bare prime `p`, or `p^s:c0,c1,...` with an explicit
//!   modulus (constant term first, monic leading term optional).
//! * element: `0`, an integer (reduced into the prime field), `z` or `z^k`
//!   (powers of the primitive element), or a product like `2z^3`.
//! * polynomial: either a comma-separated coefficient list, constant term
//!   first (`z^1,z^1,0,1`), or an expression such as `x^12 - x^7 - x - 1`
//!   or `x^3 + z^2*x^2 + 2`.

use polycode_core::{Elem, FieldRef, GaloisField, Poly};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TextError {
    #[error("bad field spec `{0}`")]
    Field(String),
    #[error("bad field element `{0}`")]
    Element(String),
    #[error("bad polynomial `{0}`")]
    Poly(String),
    #[error("bad index list `{0}`")]
    Indices(String),
    #[error(transparent)]
    Core(#[from] polycode_core::Error),
}

pub type Result<T> = std::result::Result<T, TextError>;

pub fn parse_field(spec: &str) -> Result<FieldRef> {
    let bad = || TextError::Field(spec.to_string());
    let (order, modulus) = match spec.split_once(':') {
        Some((o, m)) => (o.trim(), Some(m)),
        None => (spec.trim(), None),
    };
    let (p, s) = match order.split_once('^') {
        Some((p, s)) => (p.trim().parse().map_err(|_| bad())?, s.trim().parse().map_err(|_| bad())?),
        None => (order.parse().map_err(|_| bad())?, 1),
    };
    let coeffs: Option<Vec<u32>> = modulus
        .map(|m| m.split(',').map(|c| c.trim().parse().map_err(|_| bad())).collect())
        .transpose()?;
    Ok(GaloisField::new(p, s, coeffs.as_deref())?)
}

/// Inverse of [`parse_field`]; the modulus is spelled out only when it
/// differs from the bundled default.
pub fn format_field(f: &GaloisField) -> String {
    let base = format!("{}^{}", f.characteristic(), f.degree());
    let default = GaloisField::with_order(f.characteristic(), f.degree()).ok();
    if default.is_some_and(|d| d.modulus() == f.modulus()) {
        base
    } else {
        let m: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
        format!("{base}:{}", m.join(","))
    }
}

/// Integers for prime fields, `0`/`z^k` otherwise.
pub fn format_elem(f: &GaloisField, a: Elem) -> String {
    if f.degree() == 1 {
        a.0.to_string()
    } else {
        f.fmt_elem(a)
    }
}

pub fn parse_elem(f: &FieldRef, s: &str) -> Result<Elem> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(&t)),
    };
    let mut cur = Cursor::new(body);
    let v = cur.coefficient(f).flatten().filter(|_| cur.done());
    let v = v.ok_or_else(|| TextError::Element(s.to_string()))?;
    Ok(if neg { f.neg(v) } else { v })
}

pub fn format_elems(f: &GaloisField, v: &[Elem]) -> String {
    v.iter().map(|&a| format_elem(f, a)).collect::<Vec<_>>().join(",")
}

pub fn parse_elems(f: &FieldRef, s: &str) -> Result<Vec<Elem>> {
    s.split(',').map(|t| parse_elem(f, t)).collect()
}

pub fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| TextError::Indices(s.to_string())))
        .collect()
}

/// Accepts both the coefficient-list and the expression forms.
pub fn parse_poly(f: &FieldRef, s: &str) -> Result<Poly> {
    if s.contains('x') {
        parse_expression(f, s)
    } else {
        Ok(Poly::new(f, parse_elems(f, s)?))
    }
}

/// The expression form, e.g. `x^3 + 2x + 2` or `x^3 + z^2*x + z^0`.
pub fn format_poly(p: &Poly) -> String {
    p.to_string()
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn done(&self) -> bool {
        self.pos == self.s.len()
    }

    fn number(&mut self) -> Option<u64> {
        let braced = self.eat(b'{');
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let v = std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok();
        if braced && !self.eat(b'}') {
            return None;
        }
        v
    }

    fn exponent(&mut self) -> Option<u64> {
        if self.eat(b'^') {
            self.number()
        } else {
            Some(1)
        }
    }

    /// `[int][z[^k]]`; `Some(None)` when neither part is present.
    fn coefficient(&mut self, f: &FieldRef) -> Option<Option<Elem>> {
        let mut value = None;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.number()?;
            value = Some(f.from_int((n % f.characteristic() as u64) as i64));
        }
        if self.eat(b'z') {
            let k = self.exponent()?;
            let zk = f.exp(k);
            value = Some(value.map_or(zk, |v| f.mul(v, zk)));
        }
        Some(value)
    }
}

fn parse_expression(f: &FieldRef, s: &str) -> Result<Poly> {
    let bad = || TextError::Poly(s.to_string());
    let cleaned: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let mut cur = Cursor::new(&cleaned);
    let mut coeffs: Vec<Elem> = Vec::new();
    let mut first = true;
    while !cur.done() {
        let neg = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            return Err(bad());
        };
        first = false;
        let coef = cur.coefficient(f).ok_or_else(bad)?;
        let has_star = cur.eat(b'*');
        let deg = if cur.eat(b'x') {
            cur.exponent().ok_or_else(bad)? as usize
        } else if coef.is_none() || has_star {
            return Err(bad());
        } else {
            0
        };
        let mut c = coef.unwrap_or(Elem::ONE);
        if neg {
            c = f.neg(c);
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Elem::ZERO);
        }
        coeffs[deg] = f.add(coeffs[deg], c);
    }
    if first {
        return Err(bad());
    }
    Ok(Poly::new(f, coeffs))
}
