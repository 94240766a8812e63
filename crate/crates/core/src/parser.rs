//! A small definition language for Lie superalgebras.
//!
//! ```text
//! # comments run to end of line
//! algebra C1_p {
//!     bosons: X1 X2;
//!     fermions: X3;
//!     param p in (-inf,inf) \ {0};
//!     [X1,X2] = X2;
//!     [X1,X3] = p*X3;
//! }
//! algebra "(A11+2A)^1" {
//!     bosons: X1;
//!     fermions: X2 X3;
//!     {X2,X2} = i*X1;
//!     {X3,X3} = i*X1;
//! }
//! ```
//!
//! Right-hand sides are arithmetic expressions (`+ - * / ^`, parentheses,
//! rational literals, imaginary literals such as `3i`, the unit `i`,
//! parameter names and generator names) that must expand to a sum of
//! generators with coefficients polynomial in the parameters.  Parsing
//! rejects unknown names, brackets that break grading, bosonic
//! self-brackets and conflicting duplicates, reporting line and column.
//! The reality rule is left to
//! [`LieSuperAlgebra::validate_structure`], so unphysical inputs can still be
//! loaded and inspected.
//!
//! [`format_algebra`] prints the canonical form; parsing it back yields an
//! identical algebra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, ParseError, Result};
use crate::grading::GradedDims;
use crate::params::{ParamDecl, ParamRange};
use crate::poly::{Monomial, MultiPoly};
use crate::ring::Ring;
use crate::scalar::GScalar;
use crate::superalgebra::LieSuperAlgebra;

/// Arithmetic expression over scalars and named variables.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// A literal scalar.
    Num(GScalar),
    /// A named variable (parameter or generator).
    Var(String),
    /// Negation.
    Neg(Box<Expr>),
    /// Sum.
    Add(Box<Expr>, Box<Expr>),
    /// Difference.
    Sub(Box<Expr>, Box<Expr>),
    /// Product.
    Mul(Box<Expr>, Box<Expr>),
    /// Quotient.
    Div(Box<Expr>, Box<Expr>),
    /// Non-negative integer power.
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Names of all variables.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                out.insert(v.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Evaluates with every variable bound; division by zero is an error.
    pub fn eval(&self, env: &BTreeMap<String, GScalar>) -> Result<GScalar> {
        Ok(match self {
            Expr::Num(c) => c.clone(),
            Expr::Var(v) => env.get(v).cloned().ok_or_else(|| Error::MissingParameter(v.clone()))?,
            Expr::Neg(a) => -a.eval(env)?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            Expr::Div(a, b) => a.eval(env)?.checked_div(&b.eval(env)?)?,
            Expr::Pow(a, e) => a.eval(env)?.pow(*e),
        })
    }

    /// Expands into a polynomial; only division by nonzero constants is
    /// allowed.
    pub fn to_poly(&self) -> Result<MultiPoly> {
        Ok(match self {
            Expr::Num(c) => MultiPoly::constant(c.clone()),
            Expr::Var(v) => MultiPoly::var(v),
            Expr::Neg(a) => -a.to_poly()?,
            Expr::Add(a, b) => a.to_poly()? + b.to_poly()?,
            Expr::Sub(a, b) => a.to_poly()? - b.to_poly()?,
            Expr::Mul(a, b) => a.to_poly()? * b.to_poly()?,
            Expr::Div(a, b) => {
                let d = b.to_poly()?;
                let c = d
                    .constant_value()
                    .ok_or_else(|| Error::Unsupported(format!("division by the non-constant `{d}`")))?;
                a.to_poly()?.scale(&c.inv()?)
            }
            Expr::Pow(a, e) => a.to_poly()?.pow(*e),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(c) => write!(f, "({c})"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Pow(a, e) => write!(f, "{a}^{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Str(String),
    Num(BigRational),
    Imag(BigRational),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::Num(q) => write!(f, "`{q}`"),
            Tok::Imag(q) => write!(f, "`{q}i`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

/// Character scanner producing tokens on demand (so raw text such as a
/// parameter range can be captured verbatim).
struct Scanner<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0, line: 1, col: 1 }
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_char()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek_char() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek_char() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn err(&self, line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse(ParseError { line, column, message: message.into() })
    }

    /// Next token with its 1-based position.
    fn next(&mut self) -> Result<(Tok, usize, usize)> {
        self.skip_trivia();
        let (line, col) = (self.line, self.col);
        let Some(c) = self.peek_char() else { return Ok((Tok::Eof, line, col)) };
        if c.is_ascii_alphabetic() || c == '_' {
            let start = self.pos;
            while self.peek_char().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                self.bump();
            }
            return Ok((Tok::Ident(self.src[start..self.pos].to_string()), line, col));
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.peek_char().is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
            }
            let n: BigInt = self.src[start..self.pos].parse().map_err(|_| self.err(line, col, "bad number"))?;
            let q = BigRational::from_integer(n);
            if self.peek_char() == Some('i')
                && !self.src[self.pos + 1..].chars().next().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                self.bump();
                return Ok((Tok::Imag(q), line, col));
            }
            return Ok((Tok::Num(q), line, col));
        }
        if c == '"' {
            self.bump();
            let start = self.pos;
            loop {
                match self.bump() {
                    Some('"') => break,
                    Some('\n') | None => return Err(self.err(line, col, "unterminated string")),
                    Some(_) => {}
                }
            }
            return Ok((Tok::Str(self.src[start..self.pos - 1].to_string()), line, col));
        }
        if "{}[]()*,;:=+-/^".contains(c) {
            self.bump();
            return Ok((Tok::Punct(c), line, col));
        }
        Err(self.err(line, col, format!("unexpected character `{c}`")))
    }

    fn peek(&mut self) -> Result<Tok> {
        let save = (self.pos, self.line, self.col);
        let t = self.next()?.0;
        (self.pos, self.line, self.col) = save;
        Ok(t)
    }

    fn expect(&mut self, p: char) -> Result<(usize, usize)> {
        let (t, l, c) = self.next()?;
        if t == Tok::Punct(p) {
            Ok((l, c))
        } else {
            Err(self.err(l, c, format!("expected `{p}`, found {t}")))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        match self.next()? {
            (Tok::Ident(s), l, c) => Ok((s, l, c)),
            (t, l, c) => Err(self.err(l, c, format!("expected a name, found {t}"))),
        }
    }

    /// Raw text up to (not including) the next `;`, which is consumed.
    fn raw_until_semicolon(&mut self) -> Result<String> {
        let (l, c) = (self.line, self.col);
        let start = self.pos;
        loop {
            match self.peek_char() {
                Some(';') => {
                    let text = self.src[start..self.pos].trim().to_string();
                    self.bump();
                    return Ok(text);
                }
                Some(_) => {
                    self.bump();
                }
                None => return Err(self.err(l, c, "missing `;`")),
            }
        }
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek()? {
                Tok::Punct('+') => {
                    self.next()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Punct('-') => {
                    self.next()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // term := unary (('*'|'/') unary)*
    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek()? {
                Tok::Punct('*') => {
                    self.next()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Punct('/') => {
                    self.next()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // unary := ('-'|'+') unary | power
    fn unary(&mut self) -> Result<Expr> {
        match self.peek()? {
            Tok::Punct('-') => {
                self.next()?;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Tok::Punct('+') => {
                self.next()?;
                self.unary()
            }
            _ => self.power(),
        }
    }

    // power := atom ('^' integer)?
    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek()? == Tok::Punct('^') {
            self.next()?;
            match self.next()? {
                (Tok::Num(q), l, c) => {
                    let e: u32 = q
                        .to_integer()
                        .try_into()
                        .ok()
                        .filter(|_| q.is_integer())
                        .ok_or_else(|| self.err(l, c, "exponent must be a small non-negative integer"))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                (t, l, c) => Err(self.err(l, c, format!("expected an integer exponent, found {t}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next()? {
            (Tok::Num(q), ..) => Ok(Expr::Num(GScalar::real(q))),
            (Tok::Imag(q), ..) => Ok(Expr::Num(GScalar::imag(q))),
            (Tok::Ident(s), ..) if s == "i" => Ok(Expr::Num(GScalar::i())),
            (Tok::Ident(s), ..) => Ok(Expr::Var(s)),
            (Tok::Punct('('), ..) => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            (t, l, c) => Err(self.err(l, c, format!("expected an expression, found {t}"))),
        }
    }
}

/// Parses a standalone arithmetic expression.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut s = Scanner::new(text);
    let e = s.expr()?;
    match s.next()? {
        (Tok::Eof, ..) => Ok(e),
        (t, l, c) => Err(s.err(l, c, format!("unexpected {t} after expression"))),
    }
}

/// Parses `[e11, e12; e21, e22]` where each entry is an expression.
pub fn parse_expr_matrix(text: &str) -> Result<Vec<Vec<Expr>>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::InvalidStructure(format!("matrix literal must be bracketed: `{text}`")))?;
    let rows: Vec<Vec<Expr>> =
        inner.split(';').map(|row| split_top_level(row).iter().map(|e| parse_expr(e)).collect()).collect::<Result<_>>()?;
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::InvalidStructure(format!("ragged matrix literal `{text}`")));
    }
    Ok(rows)
}

/// Evaluates a matrix of expressions.
pub fn eval_matrix(m: &[Vec<Expr>], env: &BTreeMap<String, GScalar>) -> Result<Vec<Vec<GScalar>>> {
    m.iter().map(|r| r.iter().map(|e| e.eval(env)).collect()).collect()
}

fn split_top_level(row: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in row.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out
}

/// Parses every `algebra` block in a definition file.
pub fn parse_algebras(text: &str) -> Result<Vec<LieSuperAlgebra<MultiPoly>>> {
    let mut s = Scanner::new(text);
    let mut out = Vec::new();
    loop {
        match s.next()? {
            (Tok::Eof, ..) => return Ok(out),
            (Tok::Ident(k), ..) if k == "algebra" => out.push(parse_block(&mut s)?),
            (t, l, c) => return Err(s.err(l, c, format!("expected `algebra`, found {t}"))),
        }
    }
}

/// Parses a file holding exactly one algebra.
pub fn parse_algebra(text: &str) -> Result<LieSuperAlgebra<MultiPoly>> {
    let mut all = parse_algebras(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        n => Err(Error::Parse(ParseError { line: 1, column: 1, message: format!("expected one algebra, found {n}") })),
    }
}

struct PendingBracket {
    i: String,
    j: String,
    anti: bool,
    rhs: Expr,
    line: usize,
    col: usize,
    text: String,
}

fn parse_block(s: &mut Scanner<'_>) -> Result<LieSuperAlgebra<MultiPoly>> {
    let name = match s.next()? {
        (Tok::Ident(n) | Tok::Str(n), ..) => n,
        (t, l, c) => return Err(s.err(l, c, format!("expected an algebra name, found {t}"))),
    };
    s.expect('{')?;
    let mut bosons: Option<Vec<String>> = None;
    let mut fermions: Option<Vec<String>> = None;
    let mut params: Vec<ParamDecl> = Vec::new();
    let mut brackets: Vec<PendingBracket> = Vec::new();
    loop {
        let stmt_start = s.pos;
        let (t, l, c) = s.next()?;
        match t {
            Tok::Punct('}') => break,
            Tok::Ident(k) if k == "bosons" || k == "fermions" => {
                s.expect(':')?;
                let mut names = Vec::new();
                // Names are whitespace-separated; commas are accepted too.
                while s.peek()? != Tok::Punct(';') {
                    if !names.is_empty() && s.peek()? == Tok::Punct(',') {
                        s.next()?;
                    }
                    names.push(s.ident()?.0);
                }
                s.expect(';')?;
                let slot = if k == "bosons" { &mut bosons } else { &mut fermions };
                if slot.replace(names).is_some() {
                    return Err(s.err(l, c, format!("`{k}` declared twice")));
                }
            }
            Tok::Ident(k) if k == "param" => {
                let (pname, ..) = s.ident()?;
                match s.next()? {
                    (Tok::Ident(w), ..) if w == "in" => {}
                    (t, l2, c2) => return Err(s.err(l2, c2, format!("expected `in`, found {t}"))),
                }
                let raw = s.raw_until_semicolon()?;
                let range: ParamRange =
                    raw.parse().map_err(|e: Error| s.err(l, c, format!("{e} in `param {pname} in {raw};`")))?;
                if params.iter().any(|p| p.name == pname) {
                    return Err(s.err(l, c, format!("parameter `{pname}` declared twice")));
                }
                params.push(ParamDecl::new(&pname, range));
            }
            Tok::Punct(open @ ('[' | '{')) => {
                let close = if open == '[' { ']' } else { '}' };
                let (a, ..) = s.ident()?;
                s.expect(',')?;
                let (b, ..) = s.ident()?;
                s.expect(close)?;
                s.expect('=')?;
                let rhs = s.expr()?;
                s.expect(';')?;
                let text = s.src[stmt_start..s.pos].trim().to_string();
                brackets.push(PendingBracket { i: a, j: b, anti: open == '{', rhs, line: l, col: c, text });
            }
            Tok::Eof => return Err(s.err(l, c, format!("unterminated algebra `{name}`"))),
            t => return Err(s.err(l, c, format!("unexpected {t} in algebra body"))),
        }
    }
    let bosons = bosons.unwrap_or_default();
    let fermions = fermions.unwrap_or_default();
    let generators: Vec<String> = bosons.iter().chain(&fermions).cloned().collect();
    let dims = GradedDims::new(bosons.len(), fermions.len())
        .map_err(|e| s.err(s.line, s.col, format!("algebra `{name}`: {e}")))?;
    let mut seen = BTreeSet::new();
    for g in &generators {
        if !seen.insert(g.as_str()) || g == "i" {
            return Err(s.err(s.line, s.col, format!("algebra `{name}`: generator name `{g}` repeated or reserved")));
        }
        if params.iter().any(|p| &p.name == g) {
            return Err(s.err(s.line, s.col, format!("algebra `{name}`: `{g}` is both a generator and a parameter")));
        }
    }
    let index: BTreeMap<&str, usize> = generators.iter().enumerate().map(|(k, g)| (g.as_str(), k)).collect();
    let param_names: BTreeSet<&str> = params.iter().map(|p| p.name.as_str()).collect();
    let mut entries: BTreeMap<(usize, usize), BTreeMap<usize, MultiPoly>> = BTreeMap::new();
    for br in &brackets {
        let at = |msg: String| s.err(br.line, br.col, format!("{msg} in `{}`", br.text));
        let lookup = |g: &str| index.get(g).copied().ok_or_else(|| at(format!("unknown generator `{g}`")));
        let (i, j) = (lookup(&br.i)?, lookup(&br.j)?);
        let both_odd = dims.is_odd(i) && dims.is_odd(j);
        if br.anti != both_odd {
            return Err(at(if both_odd {
                "two odd generators need an anticommutator `{..}`".into()
            } else {
                "an anticommutator `{..}` needs two odd generators".into()
            }));
        }
        if i == j && !dims.is_odd(i) {
            return Err(at(format!("bosonic generator `{}` bracketed with itself", br.i)));
        }
        for v in br.rhs.variables() {
            if !index.contains_key(v.as_str()) && !param_names.contains(v.as_str()) {
                return Err(at(format!("unknown name `{v}`")));
            }
        }
        let poly = br.rhs.to_poly().map_err(|e| at(e.to_string()))?;
        let mut rhs: BTreeMap<usize, MultiPoly> = BTreeMap::new();
        for (m, c) in poly.terms() {
            let gens: Vec<(&str, u32)> =
                m.pairs().iter().filter(|(v, _)| index.contains_key(v.as_str())).map(|(v, e)| (v.as_str(), *e)).collect();
            let [(g, 1)] = gens.as_slice() else {
                return Err(at("each term must contain exactly one generator to the first power".into()));
            };
            let k = index[g];
            let coeff_m = Monomial::from_pairs(m.pairs().iter().filter(|(v, _)| v != g).cloned());
            let slot = rhs.entry(k).or_insert_with(MultiPoly::zero);
            *slot = &*slot + &MultiPoly::monomial(coeff_m, c.clone());
        }
        rhs.retain(|_, v| !v.is_zero());
        for &k in rhs.keys() {
            if (dims.parity(i) + dims.parity(j)) % 2 != dims.parity(k) {
                return Err(at(format!("grading violation: `{}` has the wrong parity", generators[k])));
            }
        }
        let (key, rhs) = if i <= j {
            ((i, j), rhs)
        } else {
            let sign = -dims.sign(i, j);
            ((j, i), rhs.into_iter().map(|(k, v)| (k, v.signed(sign))).collect())
        };
        if let Some(prev) = entries.get(&key) {
            if *prev != rhs {
                return Err(at("conflicts with an earlier bracket of the same pair".into()));
            }
        }
        entries.insert(key, rhs);
    }
    let flat = entries.into_iter().flat_map(|((i, j), rhs)| rhs.into_iter().map(move |(k, v)| (i, j, k, v)));
    Ok(LieSuperAlgebra::from_brackets(&name, dims, flat)?.with_generators(generators)?.with_params(params))
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(s, "algebra" | "bosons" | "fermions" | "param" | "in" | "i")
}

/// A coefficient times a generator, canonical spelling.
fn format_term<R: Ring>(c: &R, gen: &str) -> String {
    if let Some(s) = c.as_scalar() {
        if s.is_one() {
            return gen.to_string();
        }
        if (-s.clone()).is_one() {
            return format!("-{gen}");
        }
        if s.is_real() || s.is_pure_imaginary() {
            return format!("{s}*{gen}");
        }
        return format!("({s})*{gen}");
    }
    if c.term_count() == 1 {
        format!("{c}*{gen}")
    } else {
        format!("({c})*{gen}")
    }
}

/// Right-hand side of one bracket, e.g. `X2 - p*X3`.
pub fn format_rhs<R: Ring>(g: &LieSuperAlgebra<R>, rhs: &[(usize, R)]) -> String {
    let mut out = String::new();
    for (idx, (k, c)) in rhs.iter().enumerate() {
        let t = format_term(c, &g.generators()[*k]);
        if idx == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

/// One-line statements `[X1,X2] = X2; {X3,X3} = i*X1;` (or `0` if abelian).
pub fn format_statements<R: Ring>(g: &LieSuperAlgebra<R>) -> String {
    let parts: Vec<String> = g
        .canonical_brackets()
        .into_iter()
        .map(|(i, j, rhs)| {
            let (a, b) = (&g.generators()[i], &g.generators()[j]);
            let (o, c) = if g.dims().is_odd(i) && g.dims().is_odd(j) { ('{', '}') } else { ('[', ']') };
            format!("{o}{a},{b}{c} = {};", format_rhs(g, &rhs))
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

/// The canonical definition-file form of an algebra.
pub fn format_algebra<R: Ring>(g: &LieSuperAlgebra<R>) -> String {
    let d = g.dims();
    let name = if is_ident(g.name()) { g.name().to_string() } else { format!("\"{}\"", g.name()) };
    let mut out = format!("algebra {name} {{\n");
    let gens = g.generators();
    out.push_str(&format!("    bosons: {};\n", gens[..d.m].join(" ")));
    out.push_str(&format!("    fermions: {};\n", gens[d.m..].join(" ")));
    for p in g.params() {
        out.push_str(&format!("    param {} in {};\n", p.name, p.range));
    }
    for stmt in format_statements(g).split("; ").filter(|s| *s != "0") {
        let stmt = stmt.trim_end_matches(';');
        out.push_str(&format!("    {stmt};\n"));
    }
    out.push_str("}\n");
    out
}

/// Parses a rational written as an integer, fraction or decimal-free
/// literal with optional sign (a convenience for CLI options).
pub fn parse_signed_rational(text: &str) -> Result<BigRational> {
    let v = parse_expr(text)?.eval(&BTreeMap::new())?;
    v.to_rational().ok_or_else(|| Error::InvalidStructure(format!("`{text}` is not a real rational")))
}

/// `true` iff the expression denotes the constant zero.
pub fn is_zero_expr(e: &Expr) -> bool {
    e.to_poly().is_ok_and(|p| p.is_zero())
}
