use crate::field::Field;
use crate::ncalg::Flavor;

use super::ast::*;
use super::lexer::{tokenize, Pos, Tok, Token};
use super::ParseError;

const ALGEBRA_SECTIONS: &[&str] = &["relations", "superpotential", "invertible", "flavor"];
const REP_SECTIONS: &[&str] = &["dim", "field"];
const FAMILY_SECTIONS: &[&str] = &["pattern", "K", "symbols"];

pub struct Parser {
    toks: Vec<Token>,
    i: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    pub fn new(src: &str) -> PResult<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            i: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.i + k).min(self.toks.len() - 1)].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].tok.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        Err(ParseError::new(
            self.pos(),
            format!("expected {expected}, found {}", self.peek()),
        ))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> PResult<()> {
        if self.eat(t) {
            Ok(())
        } else {
            self.error(&t.to_string())
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.error("an identifier"),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => self.error(&format!("`{kw}`")),
        }
    }

    /// Identifier or integer, used for vertex names.
    fn name(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) | Tok::Int(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.error("a name"),
        }
    }

    fn int(&mut self) -> PResult<u64> {
        match self.peek().clone() {
            Tok::Int(s) => {
                let pos = self.pos();
                self.bump();
                s.parse()
                    .map_err(|_| ParseError::new(pos, format!("integer `{s}` is too large")))
            }
            _ => self.error("an integer"),
        }
    }

    /// Arrow name, optionally followed by `^-1`.
    fn arrow_name(&mut self) -> PResult<String> {
        let name = self.ident()?;
        if self.peek() == &Tok::Caret && self.peek_at(1) == &Tok::Minus {
            self.bump();
            self.bump();
            match self.peek() {
                Tok::Int(s) if s == "1" => {
                    self.bump();
                    return Ok(format!("{name}^-1"));
                }
                _ => return self.error("`1` after `^-`"),
            }
        }
        Ok(name)
    }

    fn at_section(&self, names: &[&str]) -> bool {
        matches!(self.peek(), Tok::Ident(s) if names.contains(&s.as_str()))
            && self.peek_at(1) == &Tok::Colon
    }

    pub fn session(&mut self) -> PResult<SessionFile> {
        let mut items = Vec::new();
        while self.peek() != &Tok::Eof {
            let pos = self.pos();
            let node = self.item()?;
            items.push(Located { pos, node });
        }
        Ok(SessionFile { items })
    }

    fn item(&mut self) -> PResult<Item> {
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.error("a declaration or command"),
        };
        match kw.as_str() {
            "quiver" => {
                self.bump();
                let name = self.ident()?;
                let body = self.quiver_body()?;
                Ok(Item::Quiver { name, body })
            }
            "algebra" => {
                self.bump();
                let name = self.ident()?;
                let body = self.algebra_body()?;
                Ok(Item::Algebra { name, body })
            }
            "rep" => {
                self.bump();
                let name = self.ident()?;
                let body = self.rep_body()?;
                Ok(Item::Rep { name, body })
            }
            "family" => {
                self.bump();
                let name = self.ident()?;
                let decl = self.family_body()?;
                Ok(Item::Family { name, decl })
            }
            _ => self.command(),
        }
    }

    fn quiver_body(&mut self) -> PResult<QuiverBody> {
        if self.eat(&Tok::Eq) {
            let which = self.ident()?;
            self.expect(&Tok::LParen)?;
            let body = match which.as_str() {
                "double" => QuiverBody::Double(self.ident()?),
                "restrict" => {
                    let q = self.ident()?;
                    let mut keep = Vec::new();
                    while self.eat(&Tok::Comma) {
                        keep.push(self.name()?);
                    }
                    QuiverBody::Restrict(q, keep)
                }
                "surface" => {
                    let genus = self.int()?;
                    self.expect(&Tok::Comma)?;
                    let dims = self.int_list()?;
                    QuiverBody::Surface { genus, dims }
                }
                _ => {
                    return Err(ParseError::new(
                        self.toks[self.i - 2].pos,
                        format!("unknown quiver constructor `{which}`"),
                    ))
                }
            };
            self.expect(&Tok::RParen)?;
            self.eat(&Tok::Semi);
            return Ok(body);
        }
        self.expect(&Tok::LBrace)?;
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let section = self.ident()?;
            self.expect(&Tok::Colon)?;
            match section.as_str() {
                "vertices" => {
                    while matches!(self.peek(), Tok::Ident(_) | Tok::Int(_)) {
                        vertices.push(self.name()?);
                        self.eat(&Tok::Comma);
                    }
                }
                "arrows" => {
                    while matches!(self.peek(), Tok::Ident(_)) {
                        let name = self.ident()?;
                        self.expect(&Tok::Colon)?;
                        let tail = self.name()?;
                        self.expect(&Tok::Arrow)?;
                        let head = self.name()?;
                        arrows.push(ArrowDecl { name, tail, head });
                        self.eat(&Tok::Comma);
                    }
                }
                other => {
                    return Err(ParseError::new(
                        self.toks[self.i - 2].pos,
                        format!("unknown quiver section `{other}`"),
                    ))
                }
            }
            if !self.eat(&Tok::Semi) && self.peek() != &Tok::RBrace {
                return self.error("`;` or `}`");
            }
        }
        Ok(QuiverBody::Explicit { vertices, arrows })
    }

    fn int_list(&mut self) -> PResult<Vec<u64>> {
        self.expect(&Tok::LBracket)?;
        let mut out = Vec::new();
        if !self.eat(&Tok::RBracket) {
            loop {
                out.push(self.int()?);
                if self.eat(&Tok::RBracket) {
                    break;
                }
                self.expect(&Tok::Comma)?;
            }
        }
        Ok(out)
    }

    fn algebra_body(&mut self) -> PResult<AlgebraBody> {
        if self.eat(&Tok::Eq) {
            let which = self.ident()?;
            let body = match which.as_str() {
                "heisenberg" => AlgebraBody::Heisenberg,
                "surface" => {
                    self.expect(&Tok::LParen)?;
                    let g = self.int()?;
                    self.expect(&Tok::RParen)?;
                    AlgebraBody::Surface(g)
                }
                "preproj" => {
                    self.expect(&Tok::LParen)?;
                    let q = self.ident()?;
                    self.expect(&Tok::RParen)?;
                    AlgebraBody::Preproj(q)
                }
                _ => {
                    return Err(ParseError::new(
                        self.toks[self.i - 1].pos,
                        format!("unknown algebra constructor `{which}`"),
                    ))
                }
            };
            self.eat(&Tok::Semi);
            return Ok(body);
        }
        self.keyword("over")?;
        let quiver = self.ident()?;
        self.expect(&Tok::LBrace)?;
        let mut relations = Vec::new();
        let mut superpotential = None;
        let mut invertible = Vec::new();
        let mut flavor = None;
        while !self.eat(&Tok::RBrace) {
            if !self.at_section(ALGEBRA_SECTIONS) {
                return self.error("`relations:`, `superpotential:`, `invertible:` or `flavor:`");
            }
            let section = self.ident()?;
            self.bump();
            match section.as_str() {
                "relations" => loop {
                    if self.peek() == &Tok::RBrace || self.at_section(ALGEBRA_SECTIONS) {
                        break;
                    }
                    let label = if matches!(self.peek(), Tok::Ident(_)) && self.peek_at(1) == &Tok::Eq
                    {
                        let l = self.ident()?;
                        self.bump();
                        Some(l)
                    } else {
                        None
                    };
                    let expr = self.expr()?;
                    relations.push(RelationDecl { label, expr });
                    if !self.eat(&Tok::Semi) {
                        break;
                    }
                },
                "superpotential" => {
                    superpotential = Some(self.expr()?);
                    self.end_section()?;
                }
                "invertible" => {
                    while matches!(self.peek(), Tok::Ident(_)) {
                        invertible.push(self.ident()?);
                        self.eat(&Tok::Comma);
                    }
                    self.end_section()?;
                }
                _ => {
                    let f = self.ident()?;
                    flavor = Some(match f.as_str() {
                        "graded" => Flavor::Graded,
                        "complete" => Flavor::Complete,
                        _ => {
                            return Err(ParseError::new(
                                self.toks[self.i - 1].pos,
                                format!("unknown flavor `{f}` (expected graded or complete)"),
                            ))
                        }
                    });
                    self.end_section()?;
                }
            }
        }
        Ok(AlgebraBody::Explicit {
            quiver,
            relations,
            superpotential,
            invertible,
            flavor,
        })
    }

    fn end_section(&mut self) -> PResult<()> {
        if self.eat(&Tok::Semi) || self.peek() == &Tok::RBrace {
            Ok(())
        } else {
            self.error("`;` or `}`")
        }
    }

    fn field(&mut self) -> PResult<Field> {
        let pos = self.pos();
        let f = self.ident()?;
        match f.as_str() {
            "q" | "Q" => Ok(Field::Rational),
            "cyclo" => {
                self.expect(&Tok::Colon)?;
                let m = self.int()?;
                if m == 0 || m > u32::MAX as u64 {
                    return Err(ParseError::new(pos, "cyclotomic order out of range"));
                }
                Ok(Field::Cyclotomic(m as u32))
            }
            _ => Err(ParseError::new(
                pos,
                format!("unknown field `{f}` (expected q or cyclo:m)"),
            )),
        }
    }

    fn rep_body(&mut self) -> PResult<RepBody> {
        if self.eat(&Tok::Eq) {
            let pos = self.pos();
            let which = self.ident()?;
            self.expect(&Tok::LParen)?;
            let body = match which.as_str() {
                "rho" => {
                    let algebra = self.ident()?;
                    self.expect(&Tok::Comma)?;
                    let n = self.int()?;
                    self.expect(&Tok::Comma)?;
                    let a = self.expr()?;
                    self.expect(&Tok::Comma)?;
                    let b = self.expr()?;
                    RepBody::Rho { algebra, n, a, b }
                }
                "sum" => {
                    let mut parts = vec![self.ident()?];
                    while self.eat(&Tok::Comma) {
                        parts.push(self.ident()?);
                    }
                    RepBody::DirectSum(parts)
                }
                _ => {
                    return Err(ParseError::new(
                        pos,
                        format!("unknown representation constructor `{which}`"),
                    ))
                }
            };
            self.expect(&Tok::RParen)?;
            self.eat(&Tok::Semi);
            return Ok(body);
        }
        self.keyword("of")?;
        let algebra = self.ident()?;
        self.expect(&Tok::LBrace)?;
        let mut dims = Vec::new();
        let mut matrices = Vec::new();
        let mut field = None;
        while !self.eat(&Tok::RBrace) {
            if self.at_section(REP_SECTIONS) {
                let section = self.ident()?;
                self.bump();
                if section == "dim" {
                    while matches!(self.peek(), Tok::Ident(_) | Tok::Int(_)) {
                        let v = self.name()?;
                        self.expect(&Tok::Eq)?;
                        dims.push((v, self.int()?));
                        self.eat(&Tok::Comma);
                    }
                } else {
                    field = Some(self.field()?);
                }
            } else {
                let a = self.arrow_name()?;
                self.expect(&Tok::Eq)?;
                matrices.push((a, self.matrix()?));
            }
            self.end_section()?;
        }
        Ok(RepBody::Explicit {
            algebra,
            dims,
            matrices,
            field,
        })
    }

    fn matrix(&mut self) -> PResult<MatrixExpr> {
        self.expect(&Tok::LBracket)?;
        let mut rows = Vec::new();
        if self.eat(&Tok::RBracket) {
            return Ok(rows);
        }
        loop {
            self.expect(&Tok::LBracket)?;
            let mut row = Vec::new();
            if !self.eat(&Tok::RBracket) {
                loop {
                    row.push(self.expr()?);
                    if self.eat(&Tok::RBracket) {
                        break;
                    }
                    self.expect(&Tok::Comma)?;
                }
            }
            rows.push(row);
            if self.eat(&Tok::RBracket) {
                break;
            }
            self.expect(&Tok::Comma)?;
        }
        Ok(rows)
    }

    fn family_body(&mut self) -> PResult<FamilyDecl> {
        self.keyword("at")?;
        let base = self.ident()?;
        self.expect(&Tok::LBrace)?;
        let mut unit = false;
        let mut entries = Vec::new();
        let mut order = None;
        let mut symbols = Vec::new();
        while !self.eat(&Tok::RBrace) {
            if self.at_section(FAMILY_SECTIONS) {
                let section = self.ident()?;
                self.bump();
                match section.as_str() {
                    "pattern" => {
                        self.keyword("unit")?;
                        unit = true;
                    }
                    "K" => order = Some(self.int()?),
                    _ => {
                        while matches!(self.peek(), Tok::Ident(_)) {
                            symbols.push(self.ident()?);
                            self.eat(&Tok::Comma);
                        }
                    }
                }
            } else {
                let arrow = self.arrow_name()?;
                self.expect(&Tok::LBracket)?;
                let mut word = Vec::new();
                loop {
                    let s = self.ident()?;
                    let mut k = 1;
                    if self.eat(&Tok::Caret) {
                        k = self.int()?;
                    }
                    for _ in 0..k {
                        word.push(s.clone());
                    }
                    if !self.eat(&Tok::Star) {
                        break;
                    }
                }
                self.expect(&Tok::RBracket)?;
                self.expect(&Tok::Eq)?;
                let matrix = self.matrix()?;
                entries.push(SeriesEntry {
                    arrow,
                    word,
                    matrix,
                });
            }
            self.end_section()?;
        }
        let Some(order) = order else {
            return Err(ParseError::new(self.toks[self.i - 1].pos, "family lacks `K:`"));
        };
        let pattern = match (unit, entries.is_empty()) {
            (true, true) => Pattern::Unit,
            (false, _) => Pattern::Table(entries),
            (true, false) => {
                return Err(ParseError::new(
                    self.toks[self.i - 1].pos,
                    "a family is either `pattern: unit` or an explicit table, not both",
                ))
            }
        };
        Ok(FamilyDecl {
            base,
            pattern,
            order,
            symbols,
        })
    }

    fn command(&mut self) -> PResult<Item> {
        let name = self.ident()?;
        let mut args = Vec::new();
        while !self.eat(&Tok::Semi) {
            if self.peek() == &Tok::Eof {
                return self.error("`;` to end the command");
            }
            args.push(self.arg()?);
        }
        Ok(Item::Command { name, args })
    }

    fn arg(&mut self) -> PResult<Arg> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                if self.eat(&Tok::Caret) {
                    return Ok(Arg::Power(s, self.int()?));
                }
                if self.eat(&Tok::Eq) {
                    let v = self.arg()?;
                    if matches!(v, Arg::KeyVal(..)) {
                        return self.error("a value");
                    }
                    return Ok(Arg::KeyVal(s, Box::new(v)));
                }
                Ok(Arg::Ident(s))
            }
            Tok::Int(_) => Ok(Arg::Int(self.int()?)),
            Tok::Str(s) => {
                self.bump();
                Ok(Arg::Str(s))
            }
            Tok::LBracket => {
                self.bump();
                let mut items = Vec::new();
                if !self.eat(&Tok::RBracket) {
                    loop {
                        items.push(self.arg()?);
                        if self.eat(&Tok::RBracket) {
                            break;
                        }
                        self.expect(&Tok::Comma)?;
                    }
                }
                Ok(Arg::List(items))
            }
            _ => self.error("a command argument"),
        }
    }

    pub fn expr(&mut self) -> PResult<Expr> {
        let mut terms = Vec::new();
        let mut neg = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        loop {
            terms.push((neg, self.product()?));
            if self.eat(&Tok::Plus) {
                neg = false;
            } else if self.eat(&Tok::Minus) {
                neg = true;
            } else {
                break;
            }
        }
        if terms.len() == 1 && !terms[0].0 {
            Ok(terms.pop().unwrap().1)
        } else {
            Ok(Expr::Sum(terms))
        }
    }

    fn product(&mut self) -> PResult<Expr> {
        let mut factors = vec![self.factor()?];
        while self.eat(&Tok::Star) {
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            Ok(Expr::Product(factors))
        }
    }

    fn factor(&mut self) -> PResult<Expr> {
        let mut base = self.atom()?;
        while self.peek() == &Tok::Caret {
            if self.peek_at(1) == &Tok::Minus {
                let Expr::Name(n) = &base else {
                    self.bump();
                    return Err(ParseError::new(
                        self.pos(),
                        "only arrows can be inverted with `^-1`",
                    ));
                };
                let n = n.clone();
                self.bump();
                self.bump();
                match self.peek() {
                    Tok::Int(s) if s == "1" => {
                        self.bump();
                    }
                    _ => return self.error("`1` after `^-`"),
                }
                base = Expr::Inverse(n);
                continue;
            }
            self.bump();
            let pos = self.pos();
            let k = self.int()?;
            let k = u32::try_from(k).map_err(|_| ParseError::new(pos, "exponent too large"))?;
            base = Expr::Pow(Box::new(base), k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if self.peek() == &Tok::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Int(d) => {
                            if d.chars().all(|c| c == '0') {
                                return Err(ParseError::new(self.pos(), "zero denominator"));
                            }
                            self.bump();
                            Ok(Expr::Ratio(n, d))
                        }
                        _ => self.error("a denominator"),
                    }
                } else {
                    Ok(Expr::Int(n))
                }
            }
            Tok::Ident(s) => {
                self.bump();
                if s == "zeta" {
                    Ok(Expr::Zeta)
                } else {
                    Ok(Expr::Name(s))
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(Expr::Group(Box::new(e)))
            }
            _ => self.error("a number, arrow, or `(`"),
        }
    }

    pub fn expect_eof(&mut self) -> PResult<()> {
        if self.peek() == &Tok::Eof {
            Ok(())
        } else {
            self.error("end of input")
        }
    }
}
