//! Front end: checks a parsed program and lowers it to trees and interface
//! calls for a single function, `main`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use super::ir::{Interface, Node, NodeKind, Symbol, SymbolArena, SymbolId, TypeArena, TypeId, Unit};
use super::lang::{self, Base, BinOp, Expr, ExprKind, Pos, Stmt};
use super::metrics::TargetMetrics;
use super::tables::{flags, op_code, sclass, scope, Suffix};
use super::uid::METRICS_FLAG;
use super::DemoError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CType {
    pub base: Base,
    pub pointers: u32,
}

impl CType {
    pub const INT: CType = CType {
        base: Base::Int,
        pointers: 0,
    };
    pub const CHAR: CType = CType {
        base: Base::Char,
        pointers: 0,
    };

    pub fn is_pointer(self) -> bool {
        self.pointers > 0
    }

    pub fn pointee(self) -> Option<CType> {
        self.is_pointer().then(|| CType {
            base: self.base,
            pointers: self.pointers - 1,
        })
    }
}

impl fmt::Display for CType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.base {
            Base::Int => "int",
            Base::Char => "char",
        })?;
        if self.is_pointer() {
            write!(f, " {}", "*".repeat(self.pointers as usize))?;
        }
        Ok(())
    }
}

fn op(name: &str) -> i64 {
    op_code(name).expect("known operator")
}

fn type_error(pos: Pos, message: String) -> DemoError {
    DemoError::Type {
        line: pos.line,
        col: pos.col,
        message,
    }
}

struct Var {
    sym: SymbolId,
    ty: CType,
}

struct Front<'m> {
    m: &'m TargetMetrics,
    types: TypeArena,
    symbols: SymbolArena,
    ctypes: HashMap<CType, TypeId>,
    vars: HashMap<String, Var>,
    /// Source type of every local, including temporaries.
    local_types: HashMap<SymbolId, CType>,
    locals: Vec<SymbolId>,
    /// Every name the program declares; temporaries avoid them.
    reserved: HashSet<String>,
    ntemps: u32,
    print: Option<SymbolId>,
    ncalls: i64,
    /// Trees hoisted out of the statement being lowered.
    pending: Vec<Node>,
    forests: Vec<Interface>,
}

impl<'m> Front<'m> {
    fn new(m: &'m TargetMetrics, reserved: HashSet<String>) -> Self {
        let mut f = Front {
            m,
            types: TypeArena::new(),
            symbols: SymbolArena::new(),
            ctypes: HashMap::new(),
            vars: HashMap::new(),
            local_types: HashMap::new(),
            locals: Vec::new(),
            reserved,
            ntemps: 0,
            print: None,
            ncalls: 0,
            pending: Vec::new(),
            forests: Vec::new(),
        };
        f.type_id(CType::INT);
        f.type_id(CType::CHAR);
        f
    }

    fn type_id(&mut self, ct: CType) -> TypeId {
        if let Some(&id) = self.ctypes.get(&ct) {
            return id;
        }
        let id = match ct.pointee() {
            Some(p) => {
                let to = self.type_id(p);
                self.types.pointer(to, self.m)
            }
            None if ct.base == Base::Int => self.types.int(self.m),
            None => self.types.char_(self.m),
        };
        self.ctypes.insert(ct, id);
        id
    }

    fn shape(&self, ct: CType) -> (Suffix, i64) {
        let size = if ct.is_pointer() {
            self.m.pointer.size
        } else if ct.base == Base::Int {
            self.m.int.size
        } else {
            self.m.char_.size
        };
        (if ct.is_pointer() { Suffix::P } else { Suffix::I }, size as i64)
    }

    fn align(&self, ct: CType) -> i64 {
        let a = if ct.is_pointer() {
            self.m.pointer.align
        } else if ct.base == Base::Int {
            self.m.int.align
        } else {
            self.m.char_.align
        };
        a as i64
    }

    fn node(&self, ct: CType, kind: NodeKind) -> Node {
        let (suffix, size) = self.shape(ct);
        Node::new(suffix, size, kind)
    }

    fn addrl(&self, sym: SymbolId) -> Node {
        Node::new(Suffix::P, self.m.pointer.size as i64, NodeKind::Addrl(sym))
    }

    fn indir(&self, ct: CType, addr: Node) -> Node {
        self.node(
            ct,
            NodeKind::Unary {
                op: op("INDIR"),
                left: Box::new(addr),
            },
        )
    }

    fn cnst(&self, v: i64) -> Node {
        self.node(CType::INT, NodeKind::Cnst(v))
    }

    fn binary(&self, ct: CType, name: &str, left: Node, right: Node) -> Node {
        self.node(
            ct,
            NodeKind::Binary {
                op: op(name),
                left: Box::new(left),
                right: Box::new(right),
            },
        )
    }

    fn assign(&self, ct: CType, addr: Node, value: Node) -> Node {
        self.node(
            ct,
            NodeKind::Asgn {
                left: Box::new(addr),
                right: Box::new(value),
                len: 0,
                align: 0,
            },
        )
    }

    fn add_local(&mut self, name: String, ty: CType, flags: i64) -> SymbolId {
        let tid = self.type_id(ty);
        let sym = self.symbols.add(Symbol {
            name,
            ty: tid,
            scope: scope::LOCAL,
            sclass: sclass::AUTO,
            refs: 0,
            flags,
        });
        self.locals.push(sym);
        self.local_types.insert(sym, ty);
        sym
    }

    fn temp(&mut self, ty: CType) -> SymbolId {
        let name = loop {
            self.ntemps += 1;
            let name = format!("t{}", self.ntemps);
            if !self.reserved.contains(&name) {
                break name;
            }
        };
        self.add_local(name, ty, flags::TEMPORARY | flags::GENERATED)
    }

    fn var(&self, pos: Pos, name: &str) -> Result<(SymbolId, CType), DemoError> {
        self.vars
            .get(name)
            .map(|v| (v.sym, v.ty))
            .ok_or_else(|| DemoError::Undeclared {
                line: pos.line,
                col: pos.col,
                name: name.to_string(),
            })
    }

    /// Widens a `char` value to `int`.
    fn promote(&self, node: Node, ct: CType) -> (Node, CType) {
        if ct == CType::CHAR {
            let n = self.node(
                CType::INT,
                NodeKind::Cvt {
                    op: op("CVI"),
                    left: Box::new(node),
                    fromsize: self.m.char_.size as i64,
                },
            );
            (n, CType::INT)
        } else {
            (node, ct)
        }
    }

    fn convert(&self, pos: Pos, node: Node, from: CType, to: CType) -> Result<Node, DemoError> {
        if from == to {
            Ok(node)
        } else if from == CType::INT && to == CType::CHAR {
            Ok(self.node(
                CType::CHAR,
                NodeKind::Cvt {
                    op: op("CVI"),
                    left: Box::new(node),
                    fromsize: self.m.int.size as i64,
                },
            ))
        } else {
            Err(type_error(pos, format!("cannot assign {from} to {to}")))
        }
    }

    /// `index` scaled by the size of `pointee`.
    fn scale(&self, index: Node, pointee: CType) -> Node {
        let size = self.shape(pointee).1;
        match index.kind {
            _ if size == 1 => index,
            NodeKind::Cnst(v) => self.cnst(v * size),
            _ => self.binary(CType::INT, "MUL", index, self.cnst(size)),
        }
    }

    fn rvalue(&mut self, e: &Expr) -> Result<(Node, CType), DemoError> {
        match &e.kind {
            ExprKind::Int(v) => Ok((self.cnst(*v), CType::INT)),
            ExprKind::Var(name) => {
                let (sym, ty) = self.var(e.pos, name)?;
                let read = self.indir(ty, self.addrl(sym));
                Ok(self.promote(read, ty))
            }
            ExprKind::PostInc(name) => {
                let (sym, ty) = self.var(e.pos, name)?;
                let Some(pointee) = ty.pointee() else {
                    return Err(type_error(
                        e.pos,
                        format!("`{name}` has type {ty}; only pointers can be incremented"),
                    ));
                };
                let t = self.temp(ty);
                let save = self.assign(ty, self.addrl(t), self.indir(ty, self.addrl(sym)));
                let step = self.scale(self.cnst(1), pointee);
                let bumped = self.binary(ty, "ADD", self.indir(ty, self.addrl(t)), step);
                let store = self.assign(ty, self.addrl(sym), bumped);
                self.pending.push(save);
                self.pending.push(store);
                Ok((self.indir(ty, self.addrl(t)), ty))
            }
            ExprKind::Deref(inner) => {
                let (addr, ty) = self.rvalue(inner)?;
                let Some(pointee) = ty.pointee() else {
                    return Err(type_error(e.pos, format!("cannot dereference {ty}")));
                };
                let read = self.indir(pointee, addr);
                Ok(self.promote(read, pointee))
            }
            ExprKind::Neg(inner) => {
                let (n, ty) = self.rvalue(inner)?;
                if ty != CType::INT {
                    return Err(type_error(e.pos, format!("cannot negate {ty}")));
                }
                let neg = self.node(
                    CType::INT,
                    NodeKind::Unary {
                        op: op("NEG"),
                        left: Box::new(n),
                    },
                );
                Ok((neg, CType::INT))
            }
            ExprKind::Binary(bop, l, r) => {
                let (ln, lt) = self.rvalue(l)?;
                let (rn, rt) = self.rvalue(r)?;
                let name = match bop {
                    BinOp::Add => "ADD",
                    BinOp::Sub => "SUB",
                    BinOp::Mul => "MUL",
                    BinOp::Div => "DIV",
                };
                match (bop, lt.pointee(), rt.pointee()) {
                    (_, None, None) => Ok((self.binary(CType::INT, name, ln, rn), CType::INT)),
                    (BinOp::Add | BinOp::Sub, Some(p), None) => {
                        let offset = self.scale(rn, p);
                        Ok((self.binary(lt, name, ln, offset), lt))
                    }
                    (BinOp::Add, None, Some(p)) => {
                        let offset = self.scale(ln, p);
                        Ok((self.binary(rt, name, rn, offset), rt))
                    }
                    _ => Err(type_error(e.pos, format!("invalid operands {lt} and {rt}"))),
                }
            }
        }
    }

    fn lvalue(&mut self, e: &Expr) -> Result<(Node, CType), DemoError> {
        match &e.kind {
            ExprKind::Var(name) => {
                let (sym, ty) = self.var(e.pos, name)?;
                Ok((self.addrl(sym), ty))
            }
            ExprKind::Deref(inner) => {
                let (addr, ty) = self.rvalue(inner)?;
                match ty.pointee() {
                    Some(p) => Ok((addr, p)),
                    None => Err(type_error(e.pos, format!("cannot dereference {ty}"))),
                }
            }
            _ => Err(type_error(e.pos, "left side of `=` is not assignable".into())),
        }
    }

    fn print_symbol(&mut self) -> SymbolId {
        if let Some(p) = self.print {
            return p;
        }
        let int = self.type_id(CType::INT);
        let ty = self.types.function(int, vec![int]);
        let p = self.symbols.add(Symbol {
            name: "print".into(),
            ty,
            scope: scope::GLOBAL,
            sclass: sclass::EXTERN,
            refs: 0,
            flags: 0,
        });
        self.print = Some(p);
        p
    }

    fn stmt(&mut self, s: &Stmt) -> Result<(), DemoError> {
        let mut trees = Vec::new();
        match s {
            Stmt::Decl(decls) => {
                for d in decls {
                    if self.vars.contains_key(&d.name) {
                        return Err(DemoError::Redeclared {
                            line: d.pos.line,
                            col: d.pos.col,
                            name: d.name.clone(),
                        });
                    }
                    let ty = CType {
                        base: d.base,
                        pointers: d.pointers,
                    };
                    let sym = self.add_local(d.name.clone(), ty, flags::DEFINED);
                    self.vars.insert(d.name.clone(), Var { sym, ty });
                }
            }
            Stmt::Print(_, e) => {
                let (n, ty) = self.rvalue(e)?;
                let (_, size) = self.shape(ty);
                let arg = self.node(
                    ty,
                    NodeKind::Arg {
                        left: Box::new(n),
                        len: size,
                        align: self.align(ty),
                    },
                );
                let p = self.print_symbol();
                let callee = Node::new(Suffix::P, self.m.pointer.size as i64, NodeKind::Addrg(p));
                let fty = self.symbols.get(p).ty;
                let call = self.node(
                    CType::INT,
                    NodeKind::Call {
                        left: Box::new(callee),
                        ty: fty,
                    },
                );
                self.ncalls += 1;
                trees.push(arg);
                trees.push(call);
            }
            Stmt::Assign { pos, target, value } => {
                let (addr, lt) = self.lvalue(target)?;
                let (v, rt) = self.rvalue(value)?;
                let v = self.convert(*pos, v, rt, lt)?;
                trees.push(self.assign(lt, addr, v));
            }
            Stmt::Expr(e) => {
                self.rvalue(e)?;
            }
        }
        let mut forest = std::mem::take(&mut self.pending);
        forest.extend(trees);
        for tree in &mut forest {
            self.share_reads(tree);
        }
        if !forest.is_empty() {
            self.forests.push(Interface::Forest(forest));
        }
        Ok(())
    }

    /// Within one tree, the first of several reads of the same local becomes
    /// a `CSE` into a fresh temporary and the later ones read that temporary.
    fn share_reads(&mut self, tree: &mut Node) {
        let mut counts: HashMap<SymbolId, usize> = HashMap::new();
        count_reads(tree, &mut counts);
        let mut shared: Vec<SymbolId> = counts.into_iter().filter(|&(_, n)| n > 1).map(|(s, _)| s).collect();
        shared.sort();
        let mut temps = HashMap::new();
        for sym in shared {
            let ty = self.local_types[&sym];
            temps.insert(sym, (self.temp(ty), false));
        }
        if !temps.is_empty() {
            self.rewrite_reads(tree, &mut temps);
        }
    }

    fn rewrite_reads(&self, n: &mut Node, temps: &mut HashMap<SymbolId, (SymbolId, bool)>) {
        if let Some(sym) = read_of(n) {
            if let Some((temp, seen)) = temps.get_mut(&sym) {
                let (temp, first) = (*temp, !*seen);
                *seen = true;
                let ty = self.local_types[&sym];
                *n = if first {
                    let original = n.clone();
                    Node::new(
                        n.suffix,
                        n.size,
                        NodeKind::Cse {
                            temp,
                            node: Box::new(original),
                        },
                    )
                } else {
                    self.indir(ty, self.addrl(temp))
                };
            }
            return;
        }
        match &mut n.kind {
            NodeKind::Arg { left, .. }
            | NodeKind::Cvt { left, .. }
            | NodeKind::Call { left, .. }
            | NodeKind::Unary { left, .. } => self.rewrite_reads(left, temps),
            NodeKind::Cse { node, .. } => self.rewrite_reads(node, temps),
            NodeKind::Asgn { left, right, .. }
            | NodeKind::Callb { left, right, .. }
            | NodeKind::Binary { left, right, .. }
            | NodeKind::Compare { left, right, .. } => {
                self.rewrite_reads(left, temps);
                self.rewrite_reads(right, temps);
            }
            _ => {}
        }
    }
}

/// The local that `n` reads, when `n` is `INDIR(ADDRL x)`.
fn read_of(n: &Node) -> Option<SymbolId> {
    match &n.kind {
        NodeKind::Unary { op: o, left } if *o == op("INDIR") => match left.kind {
            NodeKind::Addrl(s) => Some(s),
            _ => None,
        },
        _ => None,
    }
}

fn count_reads(n: &Node, counts: &mut HashMap<SymbolId, usize>) {
    if let Some(s) = read_of(n) {
        *counts.entry(s).or_default() += 1;
        return;
    }
    for c in n.children() {
        count_reads(c, counts);
    }
}

fn count_refs(n: &Node, refs: &mut HashMap<SymbolId, i64>) {
    match n.kind {
        NodeKind::Addrg(s) | NodeKind::Addrl(s) | NodeKind::Addrf(s) => *refs.entry(s).or_default() += 1,
        _ => {}
    }
    for c in n.children() {
        count_refs(c, refs);
    }
}

/// Argument vector recorded in every pickle; carries the target metrics.
pub fn argv_for(m: &TargetMetrics) -> Vec<String> {
    vec!["minircc".to_string(), format!("{METRICS_FLAG}{m}")]
}

/// Lowers a whole source program.
pub fn lower(src: &str, m: &TargetMetrics) -> Result<Unit, DemoError> {
    let stmts = lang::parse(src)?;
    let reserved = stmts
        .iter()
        .flat_map(|s| match s {
            Stmt::Decl(ds) => ds.iter().map(|d| d.name.clone()).collect(),
            _ => Vec::new(),
        })
        .collect();
    let mut f = Front::new(m, reserved);
    for s in &stmts {
        f.stmt(s)?;
    }
    let predefined = vec![f.ctypes[&CType::INT], f.ctypes[&CType::CHAR]];
    let argv = argv_for(m);
    if stmts.is_empty() {
        return Ok(Unit {
            metrics: *m,
            types: f.types,
            symbols: f.symbols,
            predefined,
            interfaces: Vec::new(),
            nlabels: 0,
            argv,
        });
    }

    let mut refs = HashMap::new();
    for forest in &f.forests {
        if let Interface::Forest(nodes) = forest {
            for n in nodes {
                count_refs(n, &mut refs);
            }
        }
    }
    for (sym, n) in refs {
        f.symbols.get_mut(sym).refs = n;
    }

    let int = f.ctypes[&CType::INT];
    let main_ty = f.types.function(int, Vec::new());
    let main = f.symbols.add(Symbol {
        name: "main".into(),
        ty: main_ty,
        scope: scope::GLOBAL,
        sclass: sclass::EXTERN,
        refs: 0,
        flags: flags::DEFINED,
    });
    let exit = 1;
    let mut codelist = vec![Interface::Blockbeg];
    codelist.extend(f.locals.iter().map(|&s| Interface::Local(s)));
    codelist.append(&mut f.forests);
    codelist.push(Interface::Blockend);
    codelist.push(Interface::Forest(vec![Node::new(Suffix::V, 0, NodeKind::Label(exit))]));

    let mut interfaces = Vec::new();
    if let Some(p) = f.print {
        interfaces.push(Interface::Import(p));
    }
    interfaces.push(Interface::Export(main));
    interfaces.push(Interface::Function {
        f: main,
        caller: Vec::new(),
        callee: Vec::new(),
        ncalls: f.ncalls,
        codelist,
    });
    Ok(Unit {
        metrics: *m,
        types: f.types,
        symbols: f.symbols,
        predefined,
        interfaces,
        nlabels: exit,
        argv,
    })
}
