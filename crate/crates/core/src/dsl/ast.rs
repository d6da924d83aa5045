use crate::field::Field;
use crate::ncalg::Flavor;

use super::lexer::Pos;

/// Polynomial and scalar expressions, kept unresolved so sessions print back verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(String),
    Ratio(String, String),
    Zeta,
    /// Arrow name or vertex idempotent `e_v`.
    Name(String),
    /// `g^-1`.
    Inverse(String),
    Pow(Box<Expr>, u32),
    /// At least two factors.
    Product(Vec<Expr>),
    /// Signed terms (`true` = subtracted); a single term is always negated.
    Sum(Vec<(bool, Expr)>),
    Group(Box<Expr>),
}

pub type MatrixExpr = Vec<Vec<Expr>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverBody {
    Explicit {
        vertices: Vec<String>,
        arrows: Vec<ArrowDecl>,
    },
    Double(String),
    Restrict(String, Vec<String>),
    Surface { genus: u64, dims: Vec<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationDecl {
    pub label: Option<String>,
    pub expr: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraBody {
    Explicit {
        quiver: String,
        relations: Vec<RelationDecl>,
        superpotential: Option<Expr>,
        invertible: Vec<String>,
        flavor: Option<Flavor>,
    },
    Surface(u64),
    Heisenberg,
    Preproj(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepBody {
    Explicit {
        algebra: String,
        dims: Vec<(String, u64)>,
        matrices: Vec<(String, MatrixExpr)>,
        field: Option<Field>,
    },
    /// Heisenberg representation `ρ_{a,b}` of size `n`.
    Rho {
        algebra: String,
        n: u64,
        a: Expr,
        b: Expr,
    },
    DirectSum(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesEntry {
    pub arrow: String,
    pub word: Vec<String>,
    pub matrix: MatrixExpr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Unit,
    Table(Vec<SeriesEntry>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDecl {
    pub base: String,
    pub pattern: Pattern,
    pub order: u64,
    pub symbols: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Ident(String),
    Int(u64),
    Str(String),
    /// `R^3`: a module with multiplicity.
    Power(String, u64),
    KeyVal(String, Box<Arg>),
    List(Vec<Arg>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Quiver { name: String, body: QuiverBody },
    Algebra { name: String, body: AlgebraBody },
    Rep { name: String, body: RepBody },
    Family { name: String, decl: FamilyDecl },
    Command { name: String, args: Vec<Arg> },
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Quiver { name, .. }
            | Item::Algebra { name, .. }
            | Item::Rep { name, .. }
            | Item::Family { name, .. }
            | Item::Command { name, .. } => name,
        }
    }
}

/// An item with its source position; positions are ignored by equality.
#[derive(Clone, Debug)]
pub struct Located<T> {
    pub pos: Pos,
    pub node: T,
}

impl<T: PartialEq> PartialEq for Located<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T: Eq> Eq for Located<T> {}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SessionFile {
    pub items: Vec<Located<Item>>,
}

impl SessionFile {
    pub fn commands(&self) -> impl Iterator<Item = &Located<Item>> {
        self.items
            .iter()
            .filter(|i| matches!(i.node, Item::Command { .. }))
    }
}
