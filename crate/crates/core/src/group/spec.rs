//! Group-spec grammar.
//!
//! ```text
//! spec    := "cyclic" N | "dihedral" N | "symmetric" K | "dicyclic" M
//!          | "product" spec (";" spec)+
//!          | "perm" "degree" "=" D "gens" "=" "[" [gen ("," gen)*] "]"
//! gen     := "(" image+ ")"          one-line images of 1..=D
//! ```
//!
//! A spec file holds one spec per line; `#` starts a comment.

use std::fmt;

use crate::error::{Error, Position, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// Integers mod `n`.
    Cyclic(usize),
    /// Symmetries of a regular `n`-gon; order `2n`.
    Dihedral(usize),
    /// All permutations of `k` points, `k <= 5`.
    Symmetric(usize),
    /// Dicyclic group of order `4m`; `m = 2` is the quaternion group.
    Dicyclic(usize),
    /// Direct product of two or more factors (none of them a product).
    Product(Vec<GroupSpec>),
    /// Closure of permutation generators given as one-line images of `1..=degree`.
    Perm { degree: usize, gens: Vec<Vec<usize>> },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral {n}"),
            GroupSpec::Symmetric(k) => write!(f, "symmetric {k}"),
            GroupSpec::Dicyclic(m) => write!(f, "dicyclic {m}"),
            GroupSpec::Product(factors) => {
                f.write_str("product ")?;
                for (i, s) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ; ")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            GroupSpec::Perm { degree, gens } => {
                write!(f, "perm degree={degree} gens=[")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("(")?;
                    for (j, v) in g.iter().enumerate() {
                        if j > 0 {
                            f.write_str(" ")?;
                        }
                        write!(f, "{v}")?;
                    }
                    f.write_str(")")?;
                }
                f.write_str("]")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Position,
}

fn tokenize(line: &str, line_no: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Position {
            line: line_no,
            column: i + 1,
        };
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if "=[](),;".contains(c) {
            out.push(Token { tok: Tok::Sym(c), pos });
            i += 1;
        } else if c.is_alphanumeric() || c == '-' || c == '_' || c == '+' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || "-_+".contains(chars[i])) {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Word(chars[start..i].iter().collect()),
                pos,
            });
        } else {
            return Err(Error::Syntax {
                position: pos,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: Position,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.at)
    }

    fn pos(&self) -> Position {
        self.peek().map(|t| t.pos).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.at).cloned();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(Token { tok: Tok::Sym(s), .. }) if *s == c => {
                self.at += 1;
                Ok(())
            }
            Some(Token { tok, .. }) => self.err(format!("expected `{c}`, found {}", describe(tok))),
            None => self.err(format!("expected `{c}`, found end of input")),
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<()> {
        match self.peek() {
            Some(Token { tok: Tok::Word(s), .. }) if s == w => {
                self.at += 1;
                Ok(())
            }
            Some(Token { tok, .. }) => self.err(format!("expected `{w}`, found {}", describe(tok))),
            None => self.err(format!("expected `{w}`, found end of input")),
        }
    }

    /// A positive integer at least `min`.
    fn integer(&mut self, what: &str, min: usize) -> Result<usize> {
        let pos = self.pos();
        match self.next() {
            Some(Token { tok: Tok::Word(w), .. }) => match w.parse::<usize>() {
                Ok(v) if v >= min => Ok(v),
                Ok(v) => Err(Error::Syntax {
                    position: pos,
                    message: format!("{what} must be at least {min}, found {v}"),
                }),
                Err(_) => Err(Error::Syntax {
                    position: pos,
                    message: format!("expected a positive integer for {what}, found `{w}`"),
                }),
            },
            Some(Token { tok, .. }) => Err(Error::Syntax {
                position: pos,
                message: format!("expected a positive integer for {what}, found {}", describe(&tok)),
            }),
            None => Err(Error::Syntax {
                position: pos,
                message: format!("expected a positive integer for {what}, found end of input"),
            }),
        }
    }

    fn spec(&mut self, in_product: bool) -> Result<GroupSpec> {
        let pos = self.pos();
        let family = match self.next() {
            Some(Token { tok: Tok::Word(w), .. }) => w,
            Some(Token { tok, .. }) => {
                return Err(Error::Syntax {
                    position: pos,
                    message: format!("expected a group family, found {}", describe(&tok)),
                })
            }
            None => {
                return Err(Error::Syntax {
                    position: pos,
                    message: "empty group spec".into(),
                })
            }
        };
        match family.as_str() {
            "cyclic" => Ok(GroupSpec::Cyclic(self.integer("cyclic order", 1)?)),
            "dihedral" => Ok(GroupSpec::Dihedral(self.integer("dihedral rotation order", 1)?)),
            "dicyclic" => Ok(GroupSpec::Dicyclic(self.integer("dicyclic parameter", 2)?)),
            "symmetric" => {
                let at = self.pos();
                let k = self.integer("symmetric degree", 1)?;
                if k > 5 {
                    return Err(Error::Syntax {
                        position: at,
                        message: format!("symmetric degree must be at most 5, found {k}"),
                    });
                }
                Ok(GroupSpec::Symmetric(k))
            }
            "product" if in_product => Err(Error::Syntax {
                position: pos,
                message: "nested product; list all factors separated by `;`".into(),
            }),
            "product" => {
                let mut factors = vec![self.spec(true)?];
                while self.peek().is_some() {
                    self.expect_sym(';')?;
                    factors.push(self.spec(true)?);
                }
                if factors.len() < 2 {
                    return self.err("a product needs at least two factors separated by `;`");
                }
                Ok(GroupSpec::Product(factors))
            }
            "perm" => self.perm(),
            _ => Err(Error::UnknownFamily {
                family,
                position: pos,
            }),
        }
    }

    fn perm(&mut self) -> Result<GroupSpec> {
        self.expect_word("degree")?;
        self.expect_sym('=')?;
        let degree = self.integer("permutation degree", 1)?;
        self.expect_word("gens")?;
        self.expect_sym('=')?;
        self.expect_sym('[')?;
        let mut gens = Vec::new();
        if matches!(self.peek(), Some(Token { tok: Tok::Sym(']'), .. })) {
            self.at += 1;
            return Ok(GroupSpec::Perm { degree, gens });
        }
        loop {
            self.expect_sym('(')?;
            let mut images = Vec::new();
            loop {
                match self.peek() {
                    Some(Token { tok: Tok::Sym(')'), .. }) => {
                        self.at += 1;
                        break;
                    }
                    Some(Token { tok: Tok::Sym(','), .. }) => self.at += 1,
                    _ => images.push(self.integer("permutation image", 1)?),
                }
            }
            gens.push(images);
            match self.next() {
                Some(Token { tok: Tok::Sym(','), .. }) => continue,
                Some(Token { tok: Tok::Sym(']'), .. }) => break,
                Some(t) => {
                    return Err(Error::Syntax {
                        position: t.pos,
                        message: format!("expected `,` or `]`, found {}", describe(&t.tok)),
                    })
                }
                None => return self.err("unterminated generator list"),
            }
        }
        Ok(GroupSpec::Perm { degree, gens })
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Word(w) => format!("`{w}`"),
        Tok::Sym(c) => format!("`{c}`"),
    }
}

fn parse_line(line: &str, line_no: usize) -> Result<Option<GroupSpec>> {
    let toks = tokenize(line, line_no)?;
    if toks.is_empty() {
        return Ok(None);
    }
    let content_end = line.split('#').next().unwrap_or("").trim_end().chars().count();
    let mut p = Parser {
        toks,
        at: 0,
        end: Position {
            line: line_no,
            column: content_end + 1,
        },
    };
    let spec = p.spec(false)?;
    if let Some(t) = p.peek() {
        return Err(Error::Syntax {
            position: t.pos,
            message: format!("unexpected trailing {}", describe(&t.tok)),
        });
    }
    Ok(Some(spec))
}

/// Parses text holding exactly one group spec (comments and blank lines allowed).
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut specs = parse_group_specs(text)?;
    match specs.len() {
        1 => Ok(specs.remove(0).1),
        0 => Err(Error::Syntax {
            position: Position { line: 1, column: 1 },
            message: "empty group spec".into(),
        }),
        _ => Err(Error::Syntax {
            position: Position {
                line: specs[1].0,
                column: 1,
            },
            message: "expected a single group spec".into(),
        }),
    }
}

/// Parses a spec file: one spec per line, `#` comments. Returns `(line, spec)` pairs.
pub fn parse_group_specs(text: &str) -> Result<Vec<(usize, GroupSpec)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(spec) = parse_line(line, i + 1)? {
            out.push((i + 1, spec));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_group_spec("cyclic 12").unwrap(), GroupSpec::Cyclic(12));
        assert_eq!(
            parse_group_spec("  product cyclic 2 ;cyclic 6 # comment").unwrap(),
            GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(6)])
        );
        assert_eq!(
            parse_group_spec("perm degree=3 gens=[(2 1 3), (2,3,1)]").unwrap(),
            GroupSpec::Perm {
                degree: 3,
                gens: vec![vec![2, 1, 3], vec![2, 3, 1]]
            }
        );
    }

    #[test]
    fn negative_order_reports_position() {
        match parse_group_spec("cyclic -3") {
            Err(Error::Syntax { position, .. }) => {
                assert_eq!(position, Position { line: 1, column: 8 })
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_group_spec("alternating 4"),
            Err(Error::UnknownFamily { .. })
        ));
        assert!(matches!(parse_group_spec("symmetric 6"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec("dicyclic 1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec("cyclic"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec("cyclic 3 4"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec("product cyclic 2"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_group_spec("product cyclic 2 ; product cyclic 2 ; cyclic 2"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_group_spec("perm degree=3 gens=[(1 2 3)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn file_with_comments() {
        let text = "# catalog\ncyclic 4\n\n dihedral 3  # S3\n";
        let specs = parse_group_specs(text).unwrap();
        assert_eq!(specs, vec![(2, GroupSpec::Cyclic(4)), (4, GroupSpec::Dihedral(3))]);
        match parse_group_specs("cyclic 2\ncyclic x\n") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position.line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn normalized_display() {
        let s = parse_group_spec("perm  degree = 3 gens = [ (2 1 3) ,(2 3 1) ]").unwrap();
        assert_eq!(s.to_string(), "perm degree=3 gens=[(2 1 3),(2 3 1)]");
        assert_eq!(parse_group_spec(&s.to_string()).unwrap(), s);
    }
}
