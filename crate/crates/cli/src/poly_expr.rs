//! Parser for polynomial expressions:
//! expr := term (('+'|'-') term)*; term := coef ('*' var ('^' nat)?)*.
//! A term may also start directly with a variable (coefficient 1), which is
//! how the printer writes unit coefficients.

use leibniz_forge::linalg::{parse_rational, Rational};
use leibniz_forge::poly::Poly;
use num_traits::One;

use crate::error::CliError;

struct Parser<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    /// 1-based column of the current character.
    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error(&self, message: impl Into<String>) -> CliError {
        CliError::Poly { text: self.text.to_string(), column: self.column(), message: message.into() }
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                out.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        out
    }

    fn coefficient(&mut self) -> Result<Rational, CliError> {
        self.skip_ws();
        let start = self.column();
        let num = self.digits();
        if num.is_empty() {
            return Err(self.error("expected a coefficient or variable"));
        }
        let mut literal = num;
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let den = self.digits();
            if den.is_empty() {
                return Err(self.error("expected a denominator"));
            }
            literal = format!("{literal}/{den}");
        }
        parse_rational(&literal).map_err(|_| CliError::Poly {
            text: self.text.to_string(),
            column: start,
            message: format!("invalid coefficient `{literal}`"),
        })
    }

    fn variable(&mut self) -> Result<usize, CliError> {
        self.skip_ws();
        let start = self.pos;
        let mut name = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            if c.is_alphanumeric() || c == '_' {
                name.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if name.is_empty() || !name.starts_with(|c: char| c.is_alphabetic() || c == '_') {
            self.pos = start;
            return Err(self.error("expected a variable"));
        }
        match self.vars.iter().position(|v| *v == name) {
            Some(i) => Ok(i),
            None => Err(CliError::UnknownVariable { name, column: start + 1 }),
        }
    }

    fn power(&mut self) -> Result<u32, CliError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let d = self.digits();
        d.parse::<u32>().map_err(|_| self.error("expected a natural exponent"))
    }

    fn term(&mut self) -> Result<Poly, CliError> {
        let n = self.vars.len();
        let starts_with_var = matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_');
        let coef = if starts_with_var { Rational::one() } else { self.coefficient()? };
        let mut exps = vec![0u32; n];
        if starts_with_var {
            let v = self.variable()?;
            exps[v] += self.power()?;
        }
        while self.peek() == Some('*') {
            self.pos += 1;
            let v = self.variable()?;
            exps[v] += self.power()?;
        }
        Ok(Poly::monomial(n, exps, coef))
    }

    fn expr(&mut self) -> Result<Poly, CliError> {
        let n = self.vars.len();
        let mut acc = Poly::zero(n);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                None => return Ok(acc),
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            }
            self.pos += 1;
        }
    }
}

/// Parses `text` as a polynomial in `vars`.
pub fn parse_poly_expr(text: &str, vars: &[String]) -> Result<Poly, CliError> {
    let mut p = Parser { text, chars: text.char_indices().collect(), pos: 0, vars };
    if p.peek().is_none() {
        return Err(p.error("empty expression"));
    }
    p.expr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_forge::linalg::{int, rat};

    fn vars(n: usize) -> Vec<String> {
        leibniz_forge::poly::default_var_names(n)
    }

    #[test]
    fn examples() {
        assert!(parse_poly_expr("0", &vars(2)).unwrap().is_zero());
        let p = parse_poly_expr("3/2*x1^2*x2 - x2", &vars(2)).unwrap();
        assert_eq!(p.term_count(), 2);
        assert_eq!(p.coefficient(&[2, 1]), rat(3, 2));
        assert_eq!(p.coefficient(&[0, 1]), int(-1));
        let err = parse_poly_expr("x3", &vars(2)).unwrap_err();
        assert!(matches!(err, CliError::UnknownVariable { ref name, column: 1 } if name == "x3"));
    }

    #[test]
    fn positions_and_whitespace() {
        let p = parse_poly_expr(" 2 * x1 ^ 3 + 1/3 ", &vars(1)).unwrap();
        assert_eq!(p.coefficient(&[3]), int(2));
        assert_eq!(p.constant_term(), rat(1, 3));
        match parse_poly_expr("x1 + * x2", &vars(2)).unwrap_err() {
            CliError::Poly { column, .. } => assert_eq!(column, 6),
            e => panic!("{e:?}"),
        }
        assert!(parse_poly_expr("1/0", &vars(1)).is_err());
        assert!(parse_poly_expr("", &vars(1)).is_err());
        assert!(parse_poly_expr("1.5", &vars(1)).is_err());
    }

    #[test]
    fn parse_print_parse() {
        let names = vars(3);
        for text in ["-x1", "3/2*x1^2*x2 - x2", "x1*x2*x3 + 4 - 7/3*x3^2", "-1/2*x2"] {
            let p = parse_poly_expr(text, &names).unwrap();
            let printed = p.format_with(&names);
            assert_eq!(parse_poly_expr(&printed, &names).unwrap(), p, "{text} -> {printed}");
        }
    }
}
