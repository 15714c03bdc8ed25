use num_bigint::BigInt;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::Poly;
use crate::error::{MfError, Result};

/// A polynomial ring K[v_1, ..., v_n] with named variables. It owns the
/// text format: parsing and printing of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: &[&str]) -> Self {
        PolyRing {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn with_names(field: F, vars: Vec<String>) -> Self {
        PolyRing { field, vars }
    }

    /// The ring K[x, y, z] every catalog entry lives in.
    pub fn xyz(field: F) -> Self {
        PolyRing::new(field, &["x", "y", "z"])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn zero(&self) -> Poly<F> {
        Poly::zero(&self.field, self.nvars())
    }

    pub fn one(&self) -> Poly<F> {
        Poly::one(&self.field, self.nvars())
    }

    pub fn var(&self, v: usize) -> Poly<F> {
        Poly::var(&self.field, self.nvars(), v)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        Poly::constant(&self.field, self.nvars(), c)
    }

    pub fn format(&self, p: &Poly<F>) -> String {
        p.format_with(&self.vars)
    }

    /// Parses `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
    /// `factor := INT | VAR | VAR '^' UINT`. Whitespace is ignored and the
    /// first term may carry a unary minus.
    pub fn parse(&self, text: &str) -> Result<Poly<F>> {
        Parser {
            ring: self,
            chars: text.char_indices().collect(),
            pos: 0,
            len: text.len(),
        }
        .expr()
    }
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl<F: Field> Parser<'_, F> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.len)
    }

    fn syntax<T>(&self, message: &str) -> Result<T> {
        Err(MfError::Syntax {
            message: message.to_string(),
            position: self.offset(),
        })
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let k = self.ring.field();
        let negate_first = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add_scaled(&t, &k.one());
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add_scaled(&t, &k.neg(&k.one()));
                }
                Some(_) => return self.syntax("expected '+', '-', '*' or end of input"),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<F>> {
        let ring = self.ring;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                if matches!(self.chars.get(self.pos), Some((_, '/')) | Some((_, '.'))) {
                    return Err(MfError::NonIntegerCoefficient {
                        position: self.offset(),
                    });
                }
                let n: BigInt = digits.parse().expect("digits");
                Ok(ring.constant(ring.field().from_bigint(&n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.offset();
                let mut name = String::new();
                while let Some((_, c)) = self.chars.get(self.pos) {
                    if c.is_alphanumeric() || *c == '_' {
                        name.push(*c);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let v = ring.var_names().iter().position(|n| *n == name).ok_or(
                    MfError::UnknownVariable {
                        name,
                        position: start,
                    },
                )?;
                let mut e = 1u32;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    match self.peek() {
                        Some(c) if c.is_ascii_digit() => {}
                        _ => return self.syntax("expected exponent after '^'"),
                    }
                    let digits = self.digits();
                    e = match digits.parse() {
                        Ok(e) => e,
                        Err(_) => return self.syntax("exponent too large"),
                    };
                }
                let mut exps = vec![0u32; ring.nvars()];
                exps[v] = e;
                Ok(Poly::term(
                    ring.field(),
                    Monomial::from_exponents(&exps),
                    ring.field().one(),
                ))
            }
            Some(_) => self.syntax("expected integer or variable"),
            None => self.syntax("unexpected end of input"),
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some((_, c)) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                s.push(*c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};

    #[test]
    fn parses_catalog_style_text() {
        let r = PolyRing::xyz(PrimeField::new(5).unwrap());
        let p = r.parse("z^2+x*y").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(r.format(&p), "x*y+z^2");
        let r3 = PolyRing::xyz(PrimeField::new(3).unwrap());
        let e61 = r3.parse("z^2+x^3+y^2*z+x*y*z").unwrap();
        assert_eq!(e61.num_terms(), 4);
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse(" - x * y ").unwrap() == -&r.parse("x*y").unwrap());
    }

    #[test]
    fn reduces_coefficients_into_the_field() {
        let r = PolyRing::xyz(PrimeField::new(3).unwrap());
        assert_eq!(r.parse("4*x+3*y").unwrap(), r.parse("x").unwrap());
        assert_eq!(r.format(&r.parse("2*x").unwrap()), "-x");
    }

    #[test]
    fn reports_errors_with_positions() {
        let r = PolyRing::xyz(Rationals);
        assert_eq!(
            r.parse("x+w"),
            Err(MfError::UnknownVariable {
                name: "w".into(),
                position: 2
            })
        );
        assert_eq!(
            r.parse("1/2*x"),
            Err(MfError::NonIntegerCoefficient { position: 1 })
        );
        assert!(matches!(
            r.parse("x^"),
            Err(MfError::Syntax { position: 2, .. })
        ));
        assert!(matches!(r.parse("x y"), Err(MfError::Syntax { .. })));
        assert!(matches!(r.parse("x+-y"), Err(MfError::Syntax { .. })));
    }
}
