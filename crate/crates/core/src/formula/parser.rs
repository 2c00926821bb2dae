//! Formula text to [`MonotoneCircuit`].
//!
//! ```text
//! or      := and ( '|' and )*
//! and     := atom ( '&' atom )*
//! atom    := 'r' INDEX | 'true' | 'false' | '(' or ')'
//!          | 'atleast' '(' K ';' or ( ',' or )* ')'
//! ```
//!
//! Chains associate to the left. `atleast(k; ...)` expands into the
//! comparator-network threshold circuit over its arguments.

use super::circuit::{CircuitBuilder, MonotoneCircuit, NodeId};
use crate::error::Error;
use crate::sortnet;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(u64),
    Num(u64),
    Ident(String),
    And,
    Or,
    LParen,
    RParen,
    Semi,
    Comma,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'&' => out.push((Tok::And, start)),
            b'|' => out.push((Tok::Or, start)),
            b'(' => out.push((Tok::LParen, start)),
            b')' => out.push((Tok::RParen, start)),
            b';' => out.push((Tok::Semi, start)),
            b',' => out.push((Tok::Comma, start)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value = text[start..i].parse().map_err(|_| Error::FormulaSyntax {
                    position: start,
                    message: "number too large".into(),
                })?;
                out.push((Tok::Num(value), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word.strip_prefix('r') {
                    Some(digits)
                        if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) =>
                    {
                        Tok::Var(digits.parse().map_err(|_| Error::FormulaSyntax {
                            position: start,
                            message: "variable index too large".into(),
                        })?)
                    }
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((tok, start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::FormulaSyntax {
                    position: start,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        }
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    builder: CircuitBuilder,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, Error> {
        Err(Error::FormulaSyntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), Error> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn parse_or(&mut self) -> Result<NodeId, Error> {
        let mut operands = vec![self.parse_and()?];
        while *self.peek() == Tok::Or {
            self.bump();
            operands.push(self.parse_and()?);
        }
        Ok(self.builder.or_chain(&operands))
    }

    fn parse_and(&mut self) -> Result<NodeId, Error> {
        let mut operands = vec![self.parse_atom()?];
        while *self.peek() == Tok::And {
            self.bump();
            operands.push(self.parse_atom()?);
        }
        Ok(self.builder.and_chain(&operands))
    }

    fn parse_atom(&mut self) -> Result<NodeId, Error> {
        let position = self.offset();
        match self.bump().0 {
            Tok::Var(index) => {
                let n = self.builder.n();
                if index < 1 || index > n as u64 {
                    return Err(Error::VariableIndex { index, position, n });
                }
                Ok(self.builder.input(index as u32))
            }
            Tok::LParen => {
                let inner = self.parse_or()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "true" => Ok(self.builder.constant(true)),
            Tok::Ident(name) if name == "false" => Ok(self.builder.constant(false)),
            Tok::Ident(name) if name == "atleast" => self.parse_atleast(),
            Tok::Ident(name) => Err(Error::FormulaSyntax {
                position,
                message: format!("unknown identifier {name:?}"),
            }),
            Tok::End => Err(Error::FormulaSyntax {
                position,
                message: "unexpected end of formula".into(),
            }),
            _ => Err(Error::FormulaSyntax {
                position,
                message: "expected a variable, '(' or atleast(...)".into(),
            }),
        }
    }

    fn parse_atleast(&mut self) -> Result<NodeId, Error> {
        self.expect(Tok::LParen, "'(' after atleast")?;
        let k_position = self.offset();
        let k = match self.bump().0 {
            Tok::Num(k) => k,
            _ => {
                return Err(Error::FormulaSyntax {
                    position: k_position,
                    message: "expected threshold count".into(),
                })
            }
        };
        self.expect(Tok::Semi, "';' after threshold count")?;
        let mut args = vec![self.parse_or()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.parse_or()?);
        }
        self.expect(Tok::RParen, "')' closing atleast")?;
        if k < 1 || k > args.len() as u64 {
            return Err(Error::ThresholdRange {
                k,
                count: args.len(),
                position: k_position,
            });
        }
        Ok(sortnet::threshold_node(
            &mut self.builder,
            &args,
            k as usize,
        ))
    }
}

/// Parses with `n` set to the largest variable index that appears.
pub fn parse_formula(text: &str) -> Result<MonotoneCircuit, Error> {
    let max_var = tokenize(text)?
        .iter()
        .filter_map(|(t, _)| match t {
            Tok::Var(i) => Some(*i),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let n = u32::try_from(max_var.clamp(1, u32::MAX as u64)).unwrap();
    parse_formula_with_n(text, n)
}

/// Parses over exactly `n` variables; larger indices are rejected.
pub fn parse_formula_with_n(text: &str, n: u32) -> Result<MonotoneCircuit, Error> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        pos: 0,
        builder: CircuitBuilder::new(n),
    };
    let out = parser.parse_or()?;
    if *parser.peek() != Tok::End {
        return parser.error("unexpected trailing input");
    }
    Ok(parser.builder.finish(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Gate;
    use crate::freegroup::NailSubset;

    #[test]
    fn simple_or() {
        let c = parse_formula("r1 | r2").unwrap();
        assert_eq!(c.gate(c.output()), Gate::Or(0, 1));
        assert_eq!(c.n(), 2);
    }

    #[test]
    fn and_binds_tighter() {
        let c = parse_formula("r1 | r2 & r3").unwrap();
        match c.gate(c.output()) {
            Gate::Or(a, b) => {
                assert_eq!(c.gate(a), Gate::Input(1));
                assert!(matches!(c.gate(b), Gate::And(..)));
            }
            g => panic!("{g:?}"),
        }
    }

    #[test]
    fn chains_associate_left() {
        let c = parse_formula("r1 | r2 | r3").unwrap();
        match c.gate(c.output()) {
            Gate::Or(a, b) => {
                assert!(matches!(c.gate(a), Gate::Or(..)));
                assert_eq!(c.gate(b), Gate::Input(3));
            }
            g => panic!("{g:?}"),
        }
    }

    #[test]
    fn atleast_two_of_three() {
        let c = parse_formula("atleast(2; r1, r2, r3)").unwrap();
        for mask in 0..8u64 {
            let s = NailSubset::from_mask(3, mask).unwrap();
            assert_eq!(c.eval(&s), mask.count_ones() >= 2, "{s}");
        }
    }

    #[test]
    fn atleast_over_subformulas() {
        let c = parse_formula("atleast(2; r1 & r2, r3, r4 | r5)").unwrap();
        for mask in 0..32u64 {
            let s = NailSubset::from_mask(5, mask).unwrap();
            let hits = [
                s.contains(1) && s.contains(2),
                s.contains(3),
                s.contains(4) || s.contains(5),
            ];
            assert_eq!(c.eval(&s), hits.iter().filter(|&&h| h).count() >= 2);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_formula("r1 | "),
            Err(Error::FormulaSyntax { position: 5, .. })
        ));
        assert!(matches!(
            parse_formula("r1 & r0"),
            Err(Error::VariableIndex {
                index: 0,
                position: 5,
                ..
            })
        ));
        assert!(matches!(
            parse_formula_with_n("r1 & r3", 2),
            Err(Error::VariableIndex { index: 3, .. })
        ));
        assert!(matches!(
            parse_formula("atleast(4; r1, r2, r3)"),
            Err(Error::ThresholdRange {
                k: 4,
                count: 3,
                position: 8
            })
        ));
        assert!(matches!(
            parse_formula("atleast(0; r1)"),
            Err(Error::ThresholdRange { k: 0, .. })
        ));
        assert!(matches!(
            parse_formula("(r1 | r2"),
            Err(Error::FormulaSyntax { position: 8, .. })
        ));
        assert!(matches!(
            parse_formula("r1 ! r2"),
            Err(Error::FormulaSyntax { position: 3, .. })
        ));
        assert!(parse_formula("r1 r2").is_err());
        assert!(parse_formula("foo").is_err());
    }

    #[test]
    fn constants_fold() {
        let c = parse_formula_with_n("r1 & true | false", 1).unwrap();
        assert_eq!(c.gates(), &[Gate::Input(1)]);
        assert_eq!(
            parse_formula_with_n("r1 | true", 1).unwrap().as_constant(),
            Some(true)
        );
    }
}
