use std::fmt::{self, Write as _};

use crate::field::Field;

use super::ast::*;

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => f.write_str(n),
            Expr::Ratio(n, d) => write!(f, "{n}/{d}"),
            Expr::Zeta => f.write_str("zeta"),
            Expr::Name(s) => f.write_str(s),
            Expr::Inverse(s) => write!(f, "{s}^-1"),
            Expr::Pow(b, k) => write!(f, "{b}^{k}"),
            Expr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Expr::Sum(ts) => {
                for (i, (neg, t)) in ts.iter().enumerate() {
                    match (i, neg) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            Expr::Group(e) => write!(f, "({e})"),
        }
    }
}

fn matrix(m: &MatrixExpr) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn field(f: &Field) -> String {
    f.to_string()
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Ident(s) => f.write_str(s),
            Arg::Int(n) => write!(f, "{n}"),
            Arg::Str(s) => write!(f, "\"{s}\""),
            Arg::Power(s, k) => write!(f, "{s}^{k}"),
            Arg::KeyVal(k, v) => write!(f, "{k}={v}"),
            Arg::List(items) => {
                let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        match self {
            Item::Quiver { name, body } => match body {
                QuiverBody::Explicit { vertices, arrows } => {
                    let _ = writeln!(s, "quiver {name} {{");
                    let _ = writeln!(s, "  vertices: {};", vertices.join(" "));
                    if !arrows.is_empty() {
                        let a: Vec<String> = arrows
                            .iter()
                            .map(|a| format!("{}: {} -> {}", a.name, a.tail, a.head))
                            .collect();
                        let _ = writeln!(s, "  arrows: {};", a.join(", "));
                    }
                    s.push('}');
                }
                QuiverBody::Double(q) => {
                    let _ = write!(s, "quiver {name} = double({q});");
                }
                QuiverBody::Restrict(q, keep) => {
                    let _ = write!(s, "quiver {name} = restrict({q}");
                    for v in keep {
                        let _ = write!(s, ", {v}");
                    }
                    s.push_str(");");
                }
                QuiverBody::Surface { genus, dims } => {
                    let d: Vec<String> = dims.iter().map(ToString::to_string).collect();
                    let _ = write!(s, "quiver {name} = surface({genus}, [{}]);", d.join(", "));
                }
            },
            Item::Algebra { name, body } => match body {
                AlgebraBody::Explicit {
                    quiver,
                    relations,
                    superpotential,
                    invertible,
                    flavor,
                } => {
                    let _ = writeln!(s, "algebra {name} over {quiver} {{");
                    if !relations.is_empty() {
                        s.push_str("  relations:");
                        for r in relations {
                            match &r.label {
                                Some(l) => {
                                    let _ = write!(s, "\n    {l} = {};", r.expr);
                                }
                                None => {
                                    let _ = write!(s, "\n    {};", r.expr);
                                }
                            }
                        }
                        s.push('\n');
                    }
                    if let Some(w) = superpotential {
                        let _ = writeln!(s, "  superpotential: {w};");
                    }
                    if !invertible.is_empty() {
                        let _ = writeln!(s, "  invertible: {};", invertible.join(" "));
                    }
                    if let Some(fl) = flavor {
                        let _ = writeln!(s, "  flavor: {};", fl.as_str());
                    }
                    s.push('}');
                }
                AlgebraBody::Surface(g) => {
                    let _ = write!(s, "algebra {name} = surface({g});");
                }
                AlgebraBody::Heisenberg => {
                    let _ = write!(s, "algebra {name} = heisenberg;");
                }
                AlgebraBody::Preproj(q) => {
                    let _ = write!(s, "algebra {name} = preproj({q});");
                }
            },
            Item::Rep { name, body } => match body {
                RepBody::Explicit {
                    algebra,
                    dims,
                    matrices,
                    field: fld,
                } => {
                    let _ = writeln!(s, "rep {name} of {algebra} {{");
                    if !dims.is_empty() {
                        let d: Vec<String> = dims.iter().map(|(v, n)| format!("{v}={n}")).collect();
                        let _ = writeln!(s, "  dim: {};", d.join(" "));
                    }
                    for (a, m) in matrices {
                        let _ = writeln!(s, "  {a} = {};", matrix(m));
                    }
                    if let Some(fl) = fld {
                        let _ = writeln!(s, "  field: {};", field(fl));
                    }
                    s.push('}');
                }
                RepBody::Rho { algebra, n, a, b } => {
                    let _ = write!(s, "rep {name} = rho({algebra}, {n}, {a}, {b});");
                }
                RepBody::DirectSum(parts) => {
                    let _ = write!(s, "rep {name} = sum({});", parts.join(", "));
                }
            },
            Item::Family { name, decl } => {
                let _ = writeln!(s, "family {name} at {} {{", decl.base);
                match &decl.pattern {
                    Pattern::Unit => s.push_str("  pattern: unit;\n"),
                    Pattern::Table(entries) => {
                        for e in entries {
                            let _ = writeln!(
                                s,
                                "  {}[{}] = {};",
                                e.arrow,
                                e.word.join("*"),
                                matrix(&e.matrix)
                            );
                        }
                    }
                }
                if !decl.symbols.is_empty() {
                    let _ = writeln!(s, "  symbols: {};", decl.symbols.join(" "));
                }
                let _ = writeln!(s, "  K: {};", decl.order);
                s.push('}');
            }
            Item::Command { name, args } => {
                s.push_str(name);
                for a in args {
                    let _ = write!(s, " {a}");
                }
                s.push(';');
            }
        }
        f.write_str(&s)
    }
}

impl fmt::Display for SessionFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{}", item.node)?;
        }
        Ok(())
    }
}
