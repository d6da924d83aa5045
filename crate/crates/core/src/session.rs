//! Resolution of parsed sessions and command dispatch.
//!
//! Declarations are resolved in order of appearance; commands then run in
//! order and each produces one report. Output is deterministic: maps are
//! ordered and numbers that may be non-integral are rendered as strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::deform::{deform, FamilyPattern, FamilySpec};
use crate::dsl::{self, AlgebraBody, Arg, FamilyDecl, Item, Pattern, QuiverBody, RepBody, SessionFile};
use crate::error::{Error, Result};
use crate::extcalc::{
    check_representation, ext1, hom_dim, local_quiver, Representation, SemisimpleModule,
};
use crate::field::Field;
use crate::ncalg::{
    adjoin_inverses, group_algebra_presentation, preprojective_presentation,
    preprojective_relations, Flavor, GroupKind, NCPoly, Presentation, Superpotential,
};
use crate::quiver::{
    cb_arrow_count, dim_rep_preproj, gl_dim, rep_space_dim, surface_local_quiver, DimVector,
    Quiver,
};
use crate::repvariety::{orbit_dim, rep_ideal, tangent_space_dim};
use crate::rewrite::{complete, gr_ideal, is_gradable, minimal_relation_counts};
use crate::structure::{preprojective_form, superpotential_form};

/// Session-wide settings, usually from the command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Truncation degree for commands that do not give `degree=`.
    pub degree: Option<usize>,
    /// Field for scalar literals; representations may not contradict it.
    pub field: Option<Field>,
}

/// The value computed by one command.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Value,
    /// Graphviz text for quiver-valued results.
    pub dot: Option<String>,
    /// Plain-text rendering.
    pub text: String,
}

impl Output {
    fn json(v: Value) -> Self {
        let text = v.to_string();
        Output {
            json: v,
            dot: None,
            text,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    /// 0-based position among the session's commands.
    pub index: usize,
    pub command: String,
    pub args: Vec<String>,
    pub outcome: std::result::Result<Output, String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        m.insert("index".into(), json!(self.index));
        m.insert("command".into(), json!(self.command));
        m.insert("args".into(), json!(self.args));
        match &self.outcome {
            Ok(o) => m.insert("result".into(), o.json.clone()),
            Err(e) => m.insert("error".into(), json!(e)),
        };
        Value::Object(m)
    }
}

/// `{"schema": 1, "reports": [...]}`.
pub fn reports_to_json(reports: &[Report]) -> Value {
    json!({"schema": 1, "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>()})
}

/// Plain-text rendering: one block per report.
pub fn reports_to_text(reports: &[Report]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = write!(s, "[{}] {}", r.index, r.command);
        for a in &r.args {
            let _ = write!(s, " {a}");
        }
        s.push('\n');
        match &r.outcome {
            Ok(o) => {
                for line in o.text.lines() {
                    let _ = writeln!(s, "  {line}");
                }
            }
            Err(e) => {
                let _ = writeln!(s, "  error: {e}");
            }
        }
    }
    s
}

/// DOT blocks of all quiver-valued results.
pub fn reports_to_dot(reports: &[Report]) -> String {
    reports
        .iter()
        .filter_map(|r| r.outcome.as_ref().ok()?.dot.clone())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Resolved declarations.
#[derive(Clone, Debug, Default)]
pub struct Session {
    options: Options,
    quivers: BTreeMap<String, Arc<Quiver>>,
    algebras: BTreeMap<String, Arc<Presentation>>,
    reps: BTreeMap<String, Representation>,
    families: BTreeMap<String, FamilySpec>,
    commands: Vec<(String, Vec<Arg>)>,
}

fn located(pos: dsl::Pos, e: Error) -> Error {
    Error::Session(format!("line {}, column {}: {e}", pos.line, pos.col))
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| Error::Session(format!("unknown {kind} `{name}`")))
}

impl Session {
    /// Parses and resolves a session text.
    pub fn from_source(src: &str, options: Options) -> Result<Self> {
        let file = dsl::parse(src)?;
        Self::load(&file, options)
    }

    /// Resolves every declaration; the first failure is reported with its position.
    pub fn load(file: &SessionFile, options: Options) -> Result<Self> {
        let mut s = Session {
            options,
            ..Default::default()
        };
        for item in &file.items {
            let name = item.node.name().to_string();
            let taken = s.quivers.contains_key(&name)
                || s.algebras.contains_key(&name)
                || s.reps.contains_key(&name)
                || s.families.contains_key(&name);
            let res = match &item.node {
                Item::Command { name, args } => {
                    s.commands.push((name.clone(), args.clone()));
                    Ok(())
                }
                _ if taken => Err(Error::DuplicateId(name.clone())),
                Item::Quiver { body, .. } => s.quiver(body).map(|q| {
                    s.quivers.insert(name, Arc::new(q));
                }),
                Item::Algebra { body, .. } => s.algebra(body).map(|p| {
                    s.algebras.insert(name, Arc::new(p));
                }),
                Item::Rep { body, .. } => s.rep(body).map(|r| {
                    s.reps.insert(name, r);
                }),
                Item::Family { decl, .. } => s.family(decl).map(|f| {
                    s.families.insert(name, f);
                }),
            };
            res.map_err(|e| located(item.pos, e))?;
        }
        Ok(s)
    }

    fn default_field(&self) -> Field {
        self.options.field.unwrap_or(Field::Rational)
    }

    fn quiver(&self, body: &QuiverBody) -> Result<Quiver> {
        match body {
            QuiverBody::Explicit { vertices, arrows } => {
                let mut q = Quiver::new();
                for v in vertices {
                    q.add_vertex(v)?;
                }
                for a in arrows {
                    q.add_arrow(&a.name, &a.tail, &a.head)?;
                }
                Ok(q)
            }
            QuiverBody::Double(name) => Ok(lookup(&self.quivers, "quiver", name)?.double()),
            QuiverBody::Restrict(name, keep) => {
                let keep: Vec<&str> = keep.iter().map(String::as_str).collect();
                lookup(&self.quivers, "quiver", name)?.restrict(&keep)
            }
            QuiverBody::Surface { genus, dims } => Ok(surface_local_quiver(*genus, dims)?.0),
        }
    }

    fn algebra(&self, body: &AlgebraBody) -> Result<Presentation> {
        match body {
            AlgebraBody::Explicit {
                quiver,
                relations,
                superpotential,
                invertible,
                flavor,
            } => {
                let base = lookup(&self.quivers, "quiver", quiver)?;
                let inv: Vec<&str> = invertible.iter().map(String::as_str).collect();
                let (q, inverses) = if inv.is_empty() {
                    ((**base).clone(), Vec::new())
                } else {
                    adjoin_inverses(base, &inv)?
                };
                let q = Arc::new(q);
                let field = self.default_field();
                let mut rels = Vec::new();
                for (i, r) in relations.iter().enumerate() {
                    let label = r.label.clone().unwrap_or_else(|| format!("r{}", i + 1));
                    rels.push((label, dsl::eval_poly(&r.expr, &q, field)?));
                }
                if let Some(w) = superpotential {
                    let w = Superpotential::from_poly(&dsl::eval_poly(w, &q, field)?)?;
                    for (a, arr) in q.arrows().iter().enumerate() {
                        rels.push((arr.name.clone(), w.cyclic_derivative(a)));
                    }
                }
                let flavor = flavor.unwrap_or(
                    if inverses.is_empty() && rels.iter().all(|(_, r)| r.is_homogeneous()) {
                        Flavor::Graded
                    } else {
                        Flavor::Complete
                    },
                );
                Presentation::new(q, rels, inverses, flavor)
            }
            AlgebraBody::Surface(g) => {
                let g = u32::try_from(*g).map_err(|_| Error::Inconsistent("genus too large".into()))?;
                group_algebra_presentation(GroupKind::Surface(g))
            }
            AlgebraBody::Heisenberg => group_algebra_presentation(GroupKind::Heisenberg),
            AlgebraBody::Preproj(q) => preprojective_presentation(lookup(&self.quivers, "quiver", q)?),
        }
    }

    fn rep(&self, body: &RepBody) -> Result<Representation> {
        match body {
            RepBody::Explicit {
                algebra,
                dims,
                matrices,
                field,
            } => {
                let p = lookup(&self.algebras, "algebra", algebra)?.clone();
                if let (Some(f), Some(g)) = (field, self.options.field) {
                    if *f != g {
                        return Err(Error::Field(format!(
                            "representation declares {f}, session uses {g}"
                        )));
                    }
                }
                let f = field.unwrap_or(self.default_field());
                let q = p.quiver().clone();
                let mut alpha = vec![0; q.num_vertices()];
                for (v, n) in dims {
                    alpha[q.require_vertex(v)?] = *n;
                }
                let mut given = BTreeMap::new();
                for (a, m) in matrices {
                    q.require_arrow(a)?;
                    let mut m = dsl::eval_matrix(m, f)?;
                    if m.rows() == 0 {
                        let arr = q.arrow(q.require_arrow(a)?);
                        m = crate::linalg::Matrix::zeros(0, alpha[arr.tail] as usize);
                    }
                    if given.insert(a.clone(), m).is_some() {
                        return Err(Error::DuplicateId(a.clone()));
                    }
                }
                let r = Representation::new(p, DimVector(alpha), given)?;
                match field {
                    Some(f) => r.with_field(*f),
                    None => Ok(r),
                }
            }
            RepBody::Rho { algebra, n, a, b } => {
                let p = lookup(&self.algebras, "algebra", algebra)?.clone();
                let n = u32::try_from(*n).map_err(|_| Error::Inconsistent("size too large".into()))?;
                let f = Field::Cyclotomic(n);
                let (a, b) = (dsl::eval_scalar(a, f)?, dsl::eval_scalar(b, f)?);
                Representation::heisenberg_rho(p, n as usize, a, b)
            }
            RepBody::DirectSum(parts) => {
                let mut acc = lookup(&self.reps, "representation", &parts[0])?.clone();
                for name in &parts[1..] {
                    acc = acc.direct_sum(lookup(&self.reps, "representation", name)?)?;
                }
                Ok(acc)
            }
        }
    }

    fn family(&self, decl: &FamilyDecl) -> Result<FamilySpec> {
        let base = lookup(&self.reps, "representation", &decl.base)?.clone();
        let pattern = match &decl.pattern {
            Pattern::Unit => FamilyPattern::Unit,
            Pattern::Table(entries) => FamilyPattern::Table(
                entries
                    .iter()
                    .map(|e| Ok((e.arrow.clone(), e.word.clone(), dsl::eval_matrix(&e.matrix, base.field())?)))
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let symbols = (!decl.symbols.is_empty()).then(|| decl.symbols.clone());
        FamilySpec::new(base, pattern, decl.order as usize, symbols)
    }

    pub fn quiver_named(&self, name: &str) -> Option<&Arc<Quiver>> {
        self.quivers.get(name)
    }

    pub fn algebra_named(&self, name: &str) -> Option<&Arc<Presentation>> {
        self.algebras.get(name)
    }

    pub fn rep_named(&self, name: &str) -> Option<&Representation> {
        self.reps.get(name)
    }

    pub fn family_named(&self, name: &str) -> Option<&FamilySpec> {
        self.families.get(name)
    }

    pub fn num_commands(&self) -> usize {
        self.commands.len()
    }

    /// Runs every command in order.
    pub fn run(&self) -> Vec<Report> {
        self.commands
            .iter()
            .enumerate()
            .map(|(index, (command, args))| Report {
                index,
                command: command.clone(),
                args: args.iter().map(ToString::to_string).collect(),
                outcome: self.dispatch(command, args).map_err(|e| e.to_string()),
            })
            .collect()
    }

    /// Runs a single command given as arguments.
    pub fn dispatch(&self, command: &str, args: &[Arg]) -> Result<Output> {
        let a = Args::new(args);
        match command {
            "double" => {
                a.expect(1)?;
                Ok(quiver_output(a.ident(0)?, &self.q(&a, 0)?.double()))
            }
            "restrict" => {
                let q = self.q(&a, 0)?;
                let keep = (1..a.positional.len())
                    .map(|i| a.name(i))
                    .collect::<Result<Vec<_>>>()?;
                let keep: Vec<&str> = keep.iter().map(String::as_str).collect();
                Ok(quiver_output(a.ident(0)?, &q.restrict(&keep)?))
            }
            "preproj" => {
                a.expect(1)?;
                let q = self.q(&a, 0)?;
                let rels = preprojective_relations(q)?;
                Ok(Output::json(json!({
                    "relations": q.vertices().iter().zip(&rels)
                        .map(|(v, r)| (v.clone(), json!(r.to_string())))
                        .collect::<serde_json::Map<_, _>>(),
                })))
            }
            "ext1" => {
                a.expect(2)?;
                Ok(Output::json(ext1(self.r(&a, 0)?, self.r(&a, 1)?)?.to_json()))
            }
            "hom" => {
                a.expect(2)?;
                Ok(Output::json(json!({"dim": hom_dim(self.r(&a, 0)?, self.r(&a, 1)?)?})))
            }
            "check" => {
                a.expect(1)?;
                Ok(Output::json(check_representation(self.r(&a, 0)?)?.to_json()))
            }
            "localquiver" => self.local_quiver_cmd(&a),
            "grideal" => {
                a.expect(1)?;
                let p = self.p(&a, 0)?;
                Ok(Output::json(gr_ideal(p, self.degree(&a, p)?)?.to_json()))
            }
            "gradable" => {
                a.expect(1)?;
                let p = self.p(&a, 0)?;
                let d = self.degree(&a, p)?;
                let rep = is_gradable(p, d)?;
                let gr = gr_ideal(p, d)?;
                let mut v = rep.to_json();
                v["gr_generators"] = json!(gr.generators.iter().map(ToString::to_string).collect::<Vec<_>>());
                Ok(Output::json(v))
            }
            "normalform" => {
                a.expect(2)?;
                let p = self.p(&a, 0)?;
                let f = dsl::parse_poly(p.quiver(), a.string(1)?, self.default_field())?;
                let sys = complete(p, self.degree(&a, p)?)?;
                let nf = sys.normal_form(&f)?;
                Ok(Output::json(json!({
                    "normal_form": nf.to_string(),
                    "in_ideal": nf.is_zero(),
                    "membership_bound": sys.membership_bound(),
                })))
            }
            "dims" => {
                a.expect(1)?;
                let p = self.p(&a, 0)?;
                let sys = complete(p, self.degree(&a, p)?)?;
                Ok(Output::json(json!({
                    "dims": sys.graded_dims(),
                    "complete_up_to": sys.complete_up_to(),
                    "rules": sys.rules().len(),
                })))
            }
            "mincounts" => {
                a.expect(1)?;
                let p = self.p(&a, 0)?;
                let counts = minimal_relation_counts(p, self.degree(&a, p)?)?;
                Ok(Output::json(json!({
                    "counts": counts.iter()
                        .map(|((h, t), n)| json!({"head": h, "tail": t, "count": n}))
                        .collect::<Vec<_>>(),
                })))
            }
            "repideal" => {
                a.expect(2)?;
                let p = self.p(&a, 0)?;
                let alpha = self.dims_arg(&a, 1, p.quiver())?;
                let ideal = rep_ideal(p, &alpha)?;
                Ok(Output {
                    json: ideal.to_json(),
                    dot: None,
                    text: ideal.to_text(),
                })
            }
            "tangent" => {
                a.expect(1)?;
                let r = self.r(&a, 0)?;
                let p = r.presentation();
                let t = tangent_space_dim(p, r)?;
                let z1 = ext1(r, r)?.z1;
                Ok(Output::json(json!({
                    "tangent_dim": t,
                    "cocycle_dim": z1,
                    "orbit_dim": orbit_dim(r)?,
                    "rep_space_dim": rep_space_dim(p.quiver(), r.alpha())?,
                    "gl_dim": gl_dim(r.alpha()),
                })))
            }
            "deform" => {
                let f = lookup(&self.families, "family", a.ident(0)?)?;
                let mut f = f.clone();
                match a.positional.get(1) {
                    None => {}
                    Some(Arg::Ident(s)) if s == "assert" => f.hypotheses_asserted = true,
                    Some(other) => {
                        return Err(Error::Session(format!("unexpected argument `{other}`")))
                    }
                }
                Ok(Output::json(deform(&f)?.to_json()))
            }
            "preprojform" => {
                a.expect(1)?;
                let p = self.p(&a, 0)?;
                let rels = non_unit_relations(p);
                Ok(Output::json(preprojective_form(p.quiver(), &rels)?.to_json()))
            }
            "spform" => {
                a.expect(1)?;
                let p = self.p(&a, 0)?;
                self.spform_cmd(&a, p)
            }
            "spderiv" => {
                a.expect(2)?;
                let q = match self.quivers.get(a.ident(0)?) {
                    Some(q) => q.clone(),
                    None => self.p(&a, 0)?.quiver().clone(),
                };
                let w = Superpotential::from_poly(&dsl::parse_poly(&q, a.string(1)?, self.default_field())?)?;
                let mut m = serde_json::Map::new();
                let mut text = String::new();
                for (i, arr) in q.arrows().iter().enumerate() {
                    let d = w.cyclic_derivative(i).to_string();
                    let _ = writeln!(text, "d_{} = {d}", arr.name);
                    m.insert(arr.name.clone(), json!(d));
                }
                Ok(Output {
                    json: json!({"superpotential": w.to_string(), "derivatives": m}),
                    dot: None,
                    text,
                })
            }
            "cbcount" => {
                a.expect(4)?;
                let q = self.q(&a, 0)?;
                let Arg::List(items) = &a.positional[1] else {
                    return Err(Error::Session("expected a list of dimension vectors".into()));
                };
                let dims = items
                    .iter()
                    .map(|it| match it {
                        Arg::List(xs) => Ok(DimVector(xs.iter().map(int_of).collect::<Result<_>>()?)),
                        _ => Err(Error::Session("dimension vectors are lists of integers".into())),
                    })
                    .collect::<Result<Vec<_>>>()?;
                let (i, j) = (a.index(2)?, a.index(3)?);
                Ok(Output::json(json!({"arrows": cb_arrow_count(q, &dims, i, j)?})))
            }
            "surfacequiver" => {
                a.expect(2)?;
                let g = a.int(0)?;
                let dims = a.int_list(1)?;
                let (q, alpha) = surface_local_quiver(g, &dims)?;
                let mut out = quiver_output(&format!("surface_{g}"), &q);
                out.json["alpha"] = json!(alpha.0);
                out.text = out.json.to_string();
                Ok(out)
            }
            "preprojdim" => {
                a.expect(2)?;
                Ok(Output::json(json!({"dim": dim_rep_preproj(a.int(0)?, a.int(1)?)?})))
            }
            _ => Err(Error::Session(format!("unknown command `{command}`"))),
        }
    }

    fn q(&self, a: &Args, i: usize) -> Result<&Arc<Quiver>> {
        lookup(&self.quivers, "quiver", a.ident(i)?)
    }

    fn p(&self, a: &Args, i: usize) -> Result<&Arc<Presentation>> {
        lookup(&self.algebras, "algebra", a.ident(i)?)
    }

    fn r(&self, a: &Args, i: usize) -> Result<&Representation> {
        lookup(&self.reps, "representation", a.ident(i)?)
    }

    fn degree(&self, a: &Args, p: &Presentation) -> Result<usize> {
        if let Some(v) = a.keyed.get("degree") {
            return Ok(int_of(v)? as usize);
        }
        Ok(self
            .options
            .degree
            .unwrap_or_else(|| (p.max_relation_degree() + 2).max(4)))
    }

    fn dims_arg(&self, a: &Args, i: usize, q: &Quiver) -> Result<DimVector> {
        match a.positional.get(i) {
            Some(Arg::List(xs)) => {
                let d = DimVector(xs.iter().map(int_of).collect::<Result<_>>()?);
                d.check_for(q)?;
                Ok(d)
            }
            Some(Arg::Int(n)) if q.num_vertices() == 1 => Ok(DimVector(vec![*n])),
            _ => Err(Error::Session("expected a dimension vector `[n, …]`".into())),
        }
    }

    fn local_quiver_cmd(&self, a: &Args) -> Result<Output> {
        let mut factors = Vec::new();
        for arg in &a.positional {
            let (name, k) = match arg {
                Arg::Ident(s) => (s, 1),
                Arg::Power(s, k) => (s, *k as usize),
                other => return Err(Error::Session(format!("unexpected argument `{other}`"))),
            };
            factors.push((lookup(&self.reps, "representation", name)?.clone(), k));
        }
        let m = SemisimpleModule::new(factors)?;
        let mut res = local_quiver(&m)?;
        if let Some(cone) = a.keyed.get("cone") {
            let Arg::Ident(cone) = cone else {
                return Err(Error::Session("`cone=` takes an algebra name".into()));
            };
            let p = lookup(&self.algebras, "algebra", cone)?;
            let d = self.degree(a, p)?;
            res.attach_ext2_lower(p, d)?;
        }
        let mut out = Output::json(res.to_json());
        out.dot = Some(res.quiver.to_dot("local"));
        Ok(out)
    }

    fn spform_cmd(&self, a: &Args, p: &Presentation) -> Result<Output> {
        let q = p.quiver();
        let mut by_arrow = vec![NCPoly::zero(q); q.num_arrows()];
        for r in p.relations().iter().filter(|r| !r.unit) {
            let arrow = q.arrow_index(&r.label).ok_or_else(|| {
                Error::Session(format!(
                    "relation `{}` is not labelled by an arrow name",
                    r.label
                ))
            })?;
            by_arrow[arrow] = r.poly.clone();
        }
        let verdict = superpotential_form(q, &by_arrow)?;
        let mut v = verdict.to_json();
        // gradability of the relations, reported alongside
        v["gradable"] = match is_gradable(p, self.degree(a, p)?) {
            Ok(g) => json!(g.gradable),
            Err(_) => Value::Null,
        };
        Ok(Output::json(v))
    }
}

fn non_unit_relations(p: &Presentation) -> Vec<NCPoly> {
    p.relations()
        .iter()
        .filter(|r| !r.unit)
        .map(|r| r.poly.clone())
        .collect()
}

fn quiver_output(name: &str, q: &Quiver) -> Output {
    let json = json!({
        "vertices": q.vertices(),
        "arrows": q.arrows().iter().map(|a| json!({
            "name": a.name,
            "tail": q.vertices()[a.tail],
            "head": q.vertices()[a.head],
        })).collect::<Vec<_>>(),
        "pairing": q.pairing().map(|ps| ps.iter()
            .map(|&(a, b)| json!([q.arrow(a).name, q.arrow(b).name]))
            .collect::<Vec<_>>()),
    });
    Output {
        text: json.to_string(),
        json,
        dot: Some(q.to_dot(name)),
    }
}

fn int_of(a: &Arg) -> Result<u64> {
    match a {
        Arg::Int(n) => Ok(*n),
        other => Err(Error::Session(format!("expected an integer, found `{other}`"))),
    }
}

/// Positional arguments and `key=value` options of a command.
struct Args<'a> {
    positional: Vec<&'a Arg>,
    keyed: BTreeMap<&'a str, &'a Arg>,
}

impl<'a> Args<'a> {
    fn new(args: &'a [Arg]) -> Self {
        let mut positional = Vec::new();
        let mut keyed = BTreeMap::new();
        for a in args {
            match a {
                Arg::KeyVal(k, v) => {
                    keyed.insert(k.as_str(), &**v);
                }
                other => positional.push(other),
            }
        }
        Args { positional, keyed }
    }

    fn expect(&self, n: usize) -> Result<()> {
        if self.positional.len() == n {
            Ok(())
        } else {
            Err(Error::Session(format!(
                "expected {n} argument(s), found {}",
                self.positional.len()
            )))
        }
    }

    fn get(&self, i: usize) -> Result<&'a Arg> {
        self.positional
            .get(i)
            .copied()
            .ok_or_else(|| Error::Session(format!("missing argument {}", i + 1)))
    }

    fn ident(&self, i: usize) -> Result<&'a str> {
        match self.get(i)? {
            Arg::Ident(s) => Ok(s),
            other => Err(Error::Session(format!("expected a name, found `{other}`"))),
        }
    }

    fn name(&self, i: usize) -> Result<String> {
        match self.get(i)? {
            Arg::Ident(s) => Ok(s.clone()),
            Arg::Int(n) => Ok(n.to_string()),
            other => Err(Error::Session(format!("expected a name, found `{other}`"))),
        }
    }

    fn string(&self, i: usize) -> Result<&'a str> {
        match self.get(i)? {
            Arg::Str(s) => Ok(s),
            other => Err(Error::Session(format!("expected a quoted string, found `{other}`"))),
        }
    }

    fn int(&self, i: usize) -> Result<u64> {
        int_of(self.get(i)?)
    }

    /// 1-based index argument converted to 0-based.
    fn index(&self, i: usize) -> Result<usize> {
        match self.int(i)? {
            0 => Err(Error::Session("indices start at 1".into())),
            n => Ok(n as usize - 1),
        }
    }

    fn int_list(&self, i: usize) -> Result<Vec<u64>> {
        match self.get(i)? {
            Arg::List(xs) => xs.iter().map(int_of).collect(),
            other => Err(Error::Session(format!("expected a list, found `{other}`"))),
        }
    }
}
