//! Recursive-descent parser for polynomials and map files.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := '0' | '1' | 'g' | name | '(' expr ')'
//! ```
//!
//! `g` is the generator of GF(2^m); names depend on the [`VarContext`].

use thiserror::Error;
use trinv::algebra::{AlgebraError, FieldSpec, Polynomial, VarNames, NVARS};
use trinv::autmap::PolyMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at offset {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("invalid field tag '{0}' (expected gf2 or gf2^m:modulus-bits)")]
    InvalidField(String),
    #[error("variable {0} is assigned more than once")]
    DuplicateAssignment(String),
    #[error("variable {0} is not assigned")]
    MissingVariable(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which names an expression may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarContext {
    /// x, y, z, w
    Standard,
    /// x, y and the slot t (form (ii) eta)
    Eta,
    /// g1, g2, g3, g4 (form (iii) gamma)
    Gamma,
}

impl VarContext {
    pub fn names(self) -> VarNames {
        match self {
            VarContext::Standard => VarNames::STANDARD,
            VarContext::Eta => VarNames::ETA,
            VarContext::Gamma => VarNames::GAMMA,
        }
    }

    fn lookup(self, name: &str) -> Option<usize> {
        let nvars = match self {
            VarContext::Eta => 3,
            _ => NVARS,
        };
        self.names().0[..nvars].iter().position(|n| *n == name)
    }
}

/// `gf2` or `gf2^m:bits`, bits being the modulus from the leading coefficient down.
pub fn parse_field_tag(tag: &str) -> Result<FieldSpec, ParseError> {
    let tag = tag.trim();
    if tag == "gf2" {
        return Ok(FieldSpec::gf2());
    }
    let invalid = || ParseError::InvalidField(tag.to_string());
    let rest = tag.strip_prefix("gf2^").ok_or_else(invalid)?;
    let (m, bits) = rest.split_once(':').ok_or_else(invalid)?;
    let m: u32 = m.parse().map_err(|_| invalid())?;
    let modulus = u32::from_str_radix(bits, 2).map_err(|_| invalid())?;
    Ok(FieldSpec::new(m, modulus)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, pos)),
            '*' => out.push((Tok::Star, pos)),
            '^' => out.push((Tok::Caret, pos)),
            '(' => out.push((Tok::LParen, pos)),
            ')' => out.push((Tok::RParen, pos)),
            c if c.is_ascii_digit() || c.is_ascii_alphabetic() => {
                let digits = c.is_ascii_digit();
                let mut j = i;
                while j < chars.len()
                    && (chars[j].1.is_ascii_digit() || (!digits && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_')))
                {
                    j += 1;
                }
                let word: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                out.push((if digits { Tok::Num(word) } else { Tok::Ident(word) }, pos));
                i = j;
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    spec: FieldSpec,
    ctx: VarContext,
    _text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while self.peek().0 == Tok::Plus {
            self.bump();
            acc = acc.add(&self.term()?)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().0 == Tok::Star {
            self.bump();
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek().0 != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Num(n), pos) => {
                let e: u32 = n.parse().map_err(|_| ParseError::Syntax {
                    pos,
                    msg: format!("exponent {n} is too large"),
                })?;
                Ok(base.pow(e)?)
            }
            (_, pos) => Err(ParseError::Syntax {
                pos,
                msg: "expected a non-negative integer exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.bump() {
            (Tok::Num(n), pos) => match n.as_str() {
                "0" => Ok(Polynomial::zero(self.spec)),
                "1" => Ok(Polynomial::one(self.spec)),
                _ => Err(ParseError::Syntax {
                    pos,
                    msg: format!("constant {n} is not 0 or 1; write field elements with g"),
                }),
            },
            (Tok::Ident(name), pos) => {
                if name == "g" {
                    if self.spec.is_prime_field() {
                        return Err(ParseError::FieldMismatch(
                            "the generator g is only available over gf2^m with m > 1".into(),
                        ));
                    }
                    return Ok(Polynomial::constant(self.spec.generator()));
                }
                match self.ctx.lookup(&name) {
                    Some(i) => Ok(Polynomial::var(self.spec, i)),
                    None => Err(ParseError::UnknownVariable { name, pos }),
                }
            }
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, pos) => Err(ParseError::Syntax {
                        pos,
                        msg: "expected ')'".into(),
                    }),
                }
            }
            (Tok::End, pos) => Err(ParseError::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
            (_, pos) => Err(ParseError::Syntax {
                pos,
                msg: "expected a variable, a constant or '('".into(),
            }),
        }
    }
}

/// Parses one polynomial over `spec` with the names allowed by `ctx`.
pub fn parse_poly(text: &str, spec: FieldSpec, ctx: VarContext) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        spec,
        ctx,
        _text: text,
    };
    let out = p.expr()?;
    match p.peek() {
        (Tok::End, _) => Ok(out),
        (_, pos) => Err(ParseError::Syntax {
            pos: *pos,
            msg: "unexpected token after expression".into(),
        }),
    }
}

/// A parsed map file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSource {
    /// Field named by a `field:` header, if any.
    pub field: Option<FieldSpec>,
    pub map: PolyMap,
}

/// Parses `var -> expr` entries separated by `;` or newlines, with `#`
/// comments and an optional `field: tag` entry. `default_field` applies
/// when there is no header; a header that disagrees with an explicitly
/// requested field is a [`ParseError::FieldMismatch`].
pub fn parse_map(text: &str, requested: Option<FieldSpec>) -> Result<MapSource, ParseError> {
    let mut entries = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for entry in line.split(';') {
            let entry = entry.trim();
            if !entry.is_empty() {
                entries.push(entry);
            }
        }
    }

    let mut header = None;
    let mut assignments = Vec::new();
    for entry in entries {
        if let Some(tag) = entry.strip_prefix("field:") {
            if header.is_some() {
                return Err(ParseError::DuplicateAssignment("field".into()));
            }
            header = Some(parse_field_tag(tag)?);
        } else {
            assignments.push(entry);
        }
    }
    let spec = match (header, requested) {
        (Some(h), Some(r)) if h != r => {
            return Err(ParseError::FieldMismatch(format!("map declares {h} but {r} was requested")))
        }
        (Some(h), _) => h,
        (None, Some(r)) => r,
        (None, None) => FieldSpec::gf2(),
    };

    let mut images: [Option<Polynomial>; NVARS] = Default::default();
    for entry in assignments {
        let (lhs, rhs) = entry.split_once("->").ok_or_else(|| ParseError::Syntax {
            pos: 0,
            msg: format!("expected 'var -> expression' in '{entry}'"),
        })?;
        let var = lhs.trim();
        let index = VarContext::Standard
            .lookup(var)
            .ok_or_else(|| ParseError::UnknownVariable {
                name: var.to_string(),
                pos: 0,
            })?;
        if images[index].is_some() {
            return Err(ParseError::DuplicateAssignment(var.to_string()));
        }
        images[index] = Some(parse_poly(rhs, spec, VarContext::Standard)?);
    }
    let names = VarNames::STANDARD;
    let mut out: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(spec));
    for (i, img) in images.into_iter().enumerate() {
        out[i] = img.ok_or_else(|| ParseError::MissingVariable(names.0[i].to_string()))?;
    }
    Ok(MapSource {
        field: header,
        map: PolyMap::new(out)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use trinv::algebra::{Monomial, X, Y, Z};

    fn gf2() -> FieldSpec {
        FieldSpec::gf2()
    }

    fn std(text: &str) -> Result<Polynomial, ParseError> {
        parse_poly(text, gf2(), VarContext::Standard)
    }

    #[test]
    fn parses_and_prints_canonically() {
        let p = std("z^2 + x*z + y").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coefficient(&Monomial::new([1, 0, 1, 0])), gf2().one());
        assert_eq!(p.to_string(), "z^2 + x*z + y");
        let f2 = std("y^2 + y").unwrap();
        assert_eq!(f2, Polynomial::var(gf2(), Y).square().unwrap().add(&Polynomial::var(gf2(), Y)).unwrap());
        assert_eq!(std("  (x + y)^2 ").unwrap().to_string(), "y^2 + x^2");
        assert_eq!(std("x*x + x^2").unwrap().to_string(), "0");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            std("x + + y"),
            Err(ParseError::Syntax {
                pos: 4,
                msg: "expected a variable, a constant or '('".into()
            })
        );
        assert!(matches!(std("x y"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(std("(x + y"), Err(ParseError::Syntax { pos: 6, .. })));
        assert!(matches!(std("x^y"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(std("2*x"), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(matches!(std("x - y"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(std(""), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn contexts_and_fields() {
        assert_eq!(std("t"), Err(ParseError::UnknownVariable { name: "t".into(), pos: 0 }));
        assert_eq!(
            parse_poly("t + y", gf2(), VarContext::Eta).unwrap(),
            Polynomial::var(gf2(), Z).add(&Polynomial::var(gf2(), Y)).unwrap()
        );
        assert!(parse_poly("w", gf2(), VarContext::Eta).is_err());
        let g = parse_poly("g3 + g4 + g2", gf2(), VarContext::Gamma).unwrap();
        assert_eq!(g.render(&VarNames::GAMMA), "g4 + g3 + g2");
        assert!(matches!(std("g*x"), Err(ParseError::FieldMismatch(_))));
        let f4 = parse_field_tag("gf2^2:111").unwrap();
        let p = parse_poly("(g + 1)*x + g", f4, VarContext::Standard).unwrap();
        assert_eq!(p.to_string(), "(g + 1)*x + g");
        assert_eq!(parse_poly("g^3", f4, VarContext::Standard).unwrap(), Polynomial::one(f4));
    }

    #[test]
    fn field_tags() {
        assert_eq!(parse_field_tag("gf2").unwrap(), gf2());
        assert_eq!(parse_field_tag("gf2^2:111").unwrap(), FieldSpec::gf4());
        assert!(matches!(parse_field_tag("gf2^2:101"), Err(ParseError::Algebra(_))));
        assert!(matches!(parse_field_tag("gf3"), Err(ParseError::InvalidField(_))));
        assert_eq!(parse_field_tag("gf2^2:111").unwrap().to_string(), "gf2^2:111");
    }

    #[test]
    fn maps() {
        let src = parse_map("x->x; y->y; z->z; w->w+x*y*z", None).unwrap();
        assert_eq!(src.map.image(3).to_string(), "w + x*y*z");
        let src = parse_map("x->x+1; y->y; z->z; w->w", None).unwrap();
        assert!(src.map.is_involution().unwrap());
        let src = parse_map("x->y; y->x; z->z; w->w", None).unwrap();
        assert!(!src.map.is_triangular());

        let file = "# a form (i) map\nfield: gf2^2:111\nx -> x\ny -> y  # fixed\nz -> z\nw -> w + g*z^2\n";
        let src = parse_map(file, None).unwrap();
        assert_eq!(src.field, Some(FieldSpec::gf4()));
        assert!(matches!(parse_map(file, Some(gf2())), Err(ParseError::FieldMismatch(_))));

        assert_eq!(
            parse_map("x->x; x->y; z->z; w->w", None),
            Err(ParseError::DuplicateAssignment("x".into()))
        );
        assert_eq!(parse_map("x->x; y->y; z->z", None), Err(ParseError::MissingVariable("w".into())));
        assert!(matches!(parse_map("x->x; y->y; z->z; v->w", None), Err(ParseError::UnknownVariable { .. })));
        assert!(parse_map("x x", None).is_err());
        let _ = X;
    }
}
