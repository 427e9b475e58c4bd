//! Text forms of polynomials.
//!
//! The canonical form writes every term as `c*x<i>^<e>*...` (coefficient and
//! exponents always explicit, constants as bare `c`), terms joined by ` + `
//! in descending order, and `0` for the zero polynomial. A polynomial list
//! file starts with a header recording domain, variable count and order.

use std::fmt::Write as _;

use super::coeff::Coefficient;
use super::monomial::{Monomial, MonomialOrder, Var};
use super::polynomial::{Polynomial, Ring};
use super::PolyError;

pub const LIST_MAGIC: &str = "#psdef-polys v1";

/// Human-readable form: unit coefficients and exponents omitted.
pub fn format_poly<C: Coefficient>(p: &Polynomial<C>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            s.push_str(&mag);
        } else {
            if mag != "1" {
                let _ = write!(s, "{mag}*");
            }
            let _ = write!(s, "{m}");
        }
    }
    s
}

/// Canonical, bit-exact serialization.
pub fn format_canonical<C: Coefficient>(p: &Polynomial<C>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        if k > 0 {
            s.push_str(" + ");
        }
        let _ = write!(s, "{c}");
        for &(v, e) in m.factors() {
            let _ = write!(s, "*x{v}^{e}");
        }
    }
    s
}

/// Parses either text form (and any mix of `+`/`-` separators).
pub fn parse_poly<C: Coefficient>(ring: Ring, src: &str) -> Result<Polynomial<C>, PolyError> {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyError::Parse("empty polynomial".into()));
    }
    let bytes = compact.as_bytes();
    let mut pieces = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'^' | b'*' | b'+' | b'-') {
            pieces.push(&compact[start..i]);
            start = i;
        }
    }
    pieces.push(&compact[start..]);

    let mut terms = Vec::with_capacity(pieces.len());
    for piece in pieces {
        let (neg, body) = match piece.as_bytes()[0] {
            b'+' => (false, &piece[1..]),
            b'-' => (true, &piece[1..]),
            _ => (false, piece),
        };
        if body.is_empty() {
            return Err(PolyError::Parse(format!("dangling sign in `{src}`")));
        }
        let mut coeff = C::one();
        let mut pairs: Vec<(Var, u16)> = Vec::new();
        for factor in body.split('*') {
            if let Some(rest) = factor.strip_prefix('x') {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (rest, "1"),
                };
                let v: u32 = idx.parse().map_err(|_| PolyError::Parse(format!("bad variable `{factor}`")))?;
                if v >= ring.num_vars {
                    return Err(PolyError::Parse(format!("variable x{v} outside ring of {} vars", ring.num_vars)));
                }
                let e: u16 = exp.parse().map_err(|_| PolyError::Parse(format!("bad exponent `{factor}`")))?;
                pairs.push((v as Var, e));
            } else {
                let c: C = factor.parse().map_err(|_| PolyError::Parse(format!("bad coefficient `{factor}`")))?;
                coeff = coeff.mul(&c);
            }
        }
        if neg {
            coeff = coeff.neg();
        }
        terms.push((coeff, Monomial::from_pairs(pairs)));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Serializes a list of polynomials with the ring header.
pub fn write_poly_list<C: Coefficient>(ring: Ring, polys: &[Polynomial<C>]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{LIST_MAGIC}");
    let _ = writeln!(s, "domain {}", C::DOMAIN);
    let _ = writeln!(s, "num_vars {}", ring.num_vars);
    let _ = writeln!(s, "order {}", ring.order.name());
    for p in polys {
        let _ = writeln!(s, "{}", format_canonical(p));
    }
    s
}

/// Ring, polynomials and the `%` comment lines of a list file.
pub type PolyList<C> = (Ring, Vec<Polynomial<C>>, Vec<String>);

/// Reads a list written by [`write_poly_list`]. Lines starting with `%`
/// after the header are returned separately as metadata.
pub fn read_poly_list<C: Coefficient>(src: &str) -> Result<PolyList<C>, PolyError> {
    let mut lines = src.lines();
    if lines.next() != Some(LIST_MAGIC) {
        return Err(PolyError::Parse("missing polynomial-list header".into()));
    }
    let mut field = |key: &str| -> Result<String, PolyError> {
        let line = lines.next().ok_or_else(|| PolyError::Parse(format!("missing `{key}`")))?;
        line.strip_prefix(key)
            .map(|v| v.trim().to_string())
            .ok_or_else(|| PolyError::Parse(format!("expected `{key}`, got `{line}`")))
    };
    let domain = field("domain")?;
    if domain != C::DOMAIN.to_string() {
        return Err(PolyError::DomainMismatch { left: C::DOMAIN.to_string(), right: domain });
    }
    let num_vars: u32 = field("num_vars")?.parse().map_err(|_| PolyError::Parse("bad num_vars".into()))?;
    let order_name = field("order")?;
    let order = MonomialOrder::from_name(&order_name)
        .ok_or_else(|| PolyError::Parse(format!("unknown order `{order_name}`")))?;
    let ring = Ring { num_vars, order };
    let mut polys = Vec::new();
    let mut meta = Vec::new();
    for line in lines {
        if let Some(m) = line.strip_prefix('%') {
            meta.push(m.trim().to_string());
        } else if !line.trim().is_empty() {
            polys.push(parse_poly(ring, line)?);
        }
    }
    Ok((ring, polys, meta))
}
