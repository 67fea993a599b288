//! Conversion between a [`Unit`] and a `program` value.
//!
//! Types and symbols referenced from several places are written once, as
//! items carrying a uid, and referred to by that uid everywhere else. Locals
//! and relative symbols get their uids from the `Local` and `Address`
//! interface calls that define them instead of from items.

use std::collections::{HashMap, HashSet};

use super::ir::{
    Field, Interface, Node, NodeKind, Symbol, SymbolArena, SymbolId, Type, TypeArena, TypeId, TypeKind, Unit,
};
use super::metrics::TargetMetrics;
use super::tables::Suffix;
use super::DemoError;
use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Object {
    Type(TypeId),
    Symbol(SymbolId),
}

/// Assigns dense uids, starting at 1, in first-intern order.
#[derive(Debug, Default)]
pub struct UidTable {
    uids: HashMap<Object, i64>,
    /// Items indexed by `uid - 1`; `None` for uids defined by interface calls.
    items: Vec<Option<Value>>,
    /// Symbols that interface calls define.
    interface_defined: HashSet<SymbolId>,
}

fn int(n: impl Into<i64>) -> Value {
    Value::int(n.into())
}

impl UidTable {
    pub fn new() -> Self {
        UidTable::default()
    }

    /// Uids handed out so far.
    pub fn nuids(&self) -> i64 {
        self.items.len() as i64
    }

    fn reserve(&mut self, obj: Object) -> (i64, bool) {
        if let Some(&uid) = self.uids.get(&obj) {
            return (uid, false);
        }
        self.items.push(None);
        let uid = self.items.len() as i64;
        self.uids.insert(obj, uid);
        (uid, true)
    }

    pub fn intern_type(&mut self, types: &TypeArena, id: TypeId) -> i64 {
        let (uid, fresh) = self.reserve(Object::Type(id));
        if fresh {
            let t = self.encode_type(types, types.get(id));
            self.items[uid as usize - 1] = Some(Value::sum("item", "Type", vec![int(uid)], vec![t]));
        }
        uid
    }

    pub fn intern_symbol(&mut self, types: &TypeArena, symbols: &SymbolArena, id: SymbolId) -> i64 {
        let (uid, fresh) = self.reserve(Object::Symbol(id));
        if fresh && !self.interface_defined.contains(&id) {
            let s = self.encode_symbol(types, symbols.get(id));
            self.items[uid as usize - 1] = Some(Value::sum("item", "Symbol", vec![int(uid)], vec![s]));
        }
        uid
    }

    /// Marks `id` as defined by a `Local` or `Address` call: it gets a uid
    /// but no item.
    pub fn defer_to_interface(&mut self, id: SymbolId) {
        self.interface_defined.insert(id);
    }

    pub fn encode_symbol(&mut self, types: &TypeArena, s: &Symbol) -> Value {
        let ty = self.intern_type(types, s.ty);
        Value::product(
            "symbol",
            vec![
                Value::ident(&s.name),
                int(ty),
                int(s.scope),
                int(s.sclass),
                int(s.refs),
                int(s.flags),
            ],
        )
    }

    fn encode_fields(&mut self, types: &TypeArena, fields: &[Field]) -> Value {
        Value::List(
            fields
                .iter()
                .map(|f| {
                    let ty = self.intern_type(types, f.ty);
                    Value::product(
                        "field",
                        vec![
                            Value::ident(&f.name),
                            int(ty),
                            int(f.offset),
                            int(f.bitsize),
                            int(f.lsb),
                        ],
                    )
                })
                .collect(),
        )
    }

    fn encode_type(&mut self, types: &TypeArena, t: &Type) -> Value {
        let (ctor, fields) = match &t.kind {
            TypeKind::Int => ("INT", vec![]),
            TypeKind::Unsigned => ("UNSIGNED", vec![]),
            TypeKind::Float => ("FLOAT", vec![]),
            TypeKind::Void => ("VOID", vec![]),
            TypeKind::Pointer(r) => ("POINTER", vec![int(self.intern_type(types, *r))]),
            TypeKind::Array(r) => ("ARRAY", vec![int(self.intern_type(types, *r))]),
            TypeKind::Const(r) => ("CONST", vec![int(self.intern_type(types, *r))]),
            TypeKind::Volatile(r) => ("VOLATILE", vec![int(self.intern_type(types, *r))]),
            TypeKind::Enum { tag, ids } => (
                "ENUM",
                vec![
                    Value::ident(tag),
                    Value::List(
                        ids.iter()
                            .map(|(id, v)| Value::product("enum", vec![Value::ident(id), int(*v)]))
                            .collect(),
                    ),
                ],
            ),
            TypeKind::Struct { tag, fields } => ("STRUCT", vec![Value::ident(tag), self.encode_fields(types, fields)]),
            TypeKind::Union { tag, fields } => ("UNION", vec![Value::ident(tag), self.encode_fields(types, fields)]),
            TypeKind::Function { ret, formals } => {
                let ret = int(self.intern_type(types, *ret));
                let formals = formals.iter().map(|f| int(self.intern_type(types, *f))).collect();
                ("FUNCTION", vec![ret, Value::List(formals)])
            }
        };
        Value::sum("type", ctor, vec![int(t.size), int(t.align)], fields)
    }

    /// The emitted items, in uid order.
    pub fn into_items(self) -> Vec<Value> {
        self.items.into_iter().flatten().collect()
    }
}

struct Flattener<'u> {
    unit: &'u Unit,
    table: UidTable,
}

impl Flattener<'_> {
    fn sym(&mut self, id: SymbolId) -> Value {
        int(self.table.intern_symbol(&self.unit.types, &self.unit.symbols, id))
    }

    fn ty(&mut self, id: TypeId) -> Value {
        int(self.table.intern_type(&self.unit.types, id))
    }

    fn node(&mut self, n: &Node) -> Value {
        let attrs = vec![int(n.suffix.code()), int(n.size)];
        let (ctor, fields) = match &n.kind {
            NodeKind::Cnst(v) => ("CNST", vec![int(*v)]),
            NodeKind::Cnstf { msb, lsb } => ("CNSTF", vec![Value::product("real", vec![int(*msb), int(*lsb)])]),
            NodeKind::Arg { left, len, align } => ("ARG", vec![self.node(left), int(*len), int(*align)]),
            NodeKind::Asgn {
                left,
                right,
                len,
                align,
            } => ("ASGN", vec![self.node(left), self.node(right), int(*len), int(*align)]),
            NodeKind::Cvt { op, left, fromsize } => ("CVT", vec![int(*op), self.node(left), int(*fromsize)]),
            NodeKind::Call { left, ty } => ("CALL", vec![self.node(left), self.ty(*ty)]),
            NodeKind::Callb { left, right, ty } => ("CALLB", vec![self.node(left), self.node(right), self.ty(*ty)]),
            NodeKind::Ret => ("RET", vec![]),
            NodeKind::Addrg(s) => ("ADDRG", vec![self.sym(*s)]),
            NodeKind::Addrl(s) => ("ADDRL", vec![self.sym(*s)]),
            NodeKind::Addrf(s) => ("ADDRF", vec![self.sym(*s)]),
            NodeKind::Unary { op, left } => ("Unary", vec![int(*op), self.node(left)]),
            NodeKind::Binary { op, left, right } => ("Binary", vec![int(*op), self.node(left), self.node(right)]),
            NodeKind::Compare { op, left, right, label } => (
                "Compare",
                vec![int(*op), self.node(left), self.node(right), int(*label)],
            ),
            NodeKind::Label(l) => ("LABEL", vec![int(*l)]),
            NodeKind::Branch(l) => ("BRANCH", vec![int(*l)]),
            NodeKind::Cse { temp, node } => ("CSE", vec![self.sym(*temp), self.node(node)]),
        };
        Value::sum("node", ctor, attrs, fields)
    }

    fn local_symbol(&mut self, id: SymbolId) -> (Value, Value) {
        let uid = self.sym(id);
        let s = self.table.encode_symbol(&self.unit.types, self.unit.symbols.get(id));
        (uid, s)
    }

    fn interface(&mut self, i: &Interface) -> Value {
        let (ctor, fields) = match i {
            Interface::Export(p) => ("Export", vec![self.sym(*p)]),
            Interface::Import(p) => ("Import", vec![self.sym(*p)]),
            Interface::Global { sym, seg } => ("Global", vec![self.sym(*sym), int(*seg)]),
            Interface::Local(s) => {
                let (uid, s) = self.local_symbol(*s);
                ("Local", vec![uid, s])
            }
            Interface::Address { sym, base, offset } => {
                let (uid, q) = self.local_symbol(*sym);
                ("Address", vec![uid, q, self.sym(*base), int(*offset)])
            }
            Interface::Segment(s) => ("Segment", vec![int(*s)]),
            Interface::Defaddress(p) => ("Defaddress", vec![self.sym(*p)]),
            Interface::Deflabel(l) => ("Deflabel", vec![int(*l)]),
            Interface::Defconst { suffix, size, value } => {
                ("Defconst", vec![int(suffix.code()), int(*size), int(*value)])
            }
            Interface::Defconstf { size, msb, lsb } => (
                "Defconstf",
                vec![int(*size), Value::product("real", vec![int(*msb), int(*lsb)])],
            ),
            Interface::Defstring(s) => ("Defstring", vec![Value::string(s.clone())]),
            Interface::Space(n) => ("Space", vec![int(*n)]),
            Interface::Function {
                f,
                caller,
                callee,
                ncalls,
                codelist,
            } => {
                let f = self.sym(*f);
                let caller = Value::List(caller.iter().map(|s| self.sym(*s)).collect());
                let callee = Value::List(callee.iter().map(|s| self.sym(*s)).collect());
                let codelist = Value::List(codelist.iter().map(|c| self.interface(c)).collect());
                ("Function", vec![f, caller, callee, int(*ncalls), codelist])
            }
            Interface::Blockbeg => ("Blockbeg", vec![]),
            Interface::Blockend => ("Blockend", vec![]),
            Interface::Forest(nodes) => (
                "Forest",
                vec![Value::List(nodes.iter().map(|n| self.node(n)).collect())],
            ),
        };
        Value::sum("interface", ctor, vec![], fields)
    }
}

fn interface_defined(interfaces: &[Interface], out: &mut Vec<SymbolId>) {
    for i in interfaces {
        match i {
            Interface::Local(s) | Interface::Address { sym: s, .. } => out.push(*s),
            Interface::Function { codelist, .. } => interface_defined(codelist, out),
            _ => {}
        }
    }
}

/// Encodes `unit` as a value of `rcc.program`.
pub fn flatten(unit: &Unit) -> Value {
    let mut table = UidTable::new();
    let mut deferred = Vec::new();
    interface_defined(&unit.interfaces, &mut deferred);
    for s in deferred {
        table.defer_to_interface(s);
    }
    for &t in &unit.predefined {
        table.intern_type(&unit.types, t);
    }
    let mut fl = Flattener { unit, table };
    let interfaces: Vec<Value> = unit.interfaces.iter().map(|i| fl.interface(i)).collect();
    let nuids = fl.table.nuids();
    let items = fl.table.into_items();
    Value::product(
        "program",
        vec![
            int(nuids),
            int(unit.nlabels),
            Value::List(items),
            Value::List(interfaces),
            int(unit.argv.len() as i64),
            Value::List(unit.argv.iter().map(|a| Value::string(a.clone())).collect()),
        ],
    )
}

pub const METRICS_FLAG: &str = "-target=";

/// Target metrics recorded in a program's arguments.
pub fn metrics_from_argv(argv: &[String]) -> Result<TargetMetrics, DemoError> {
    match argv.iter().find_map(|a| a.strip_prefix(METRICS_FLAG)) {
        None => Ok(TargetMetrics::default()),
        Some(text) => TargetMetrics::parse(text).ok_or_else(|| DemoError::Malformed(format!("bad target `{text}`"))),
    }
}

fn malformed(what: &str) -> DemoError {
    DemoError::Malformed(format!("expected {what}"))
}

fn as_int(v: &Value) -> Result<i64, DemoError> {
    v.as_i64().ok_or_else(|| malformed("an integer"))
}

fn as_list(v: &Value) -> Result<&[Value], DemoError> {
    v.as_list().ok_or_else(|| malformed("a list"))
}

fn parts(v: &Value) -> Result<(&str, &[Value], &[Value]), DemoError> {
    match v {
        Value::Sum {
            ctor, attrs, fields, ..
        } => Ok((ctor.as_str(), attrs, fields)),
        Value::Product { ty, fields } => Ok((ty.as_str(), &[], fields)),
        _ => Err(malformed("a constructor")),
    }
}

#[derive(Default)]
struct Rebuilder {
    types: TypeArena,
    symbols: SymbolArena,
    type_uids: HashMap<i64, TypeId>,
    symbol_uids: HashMap<i64, SymbolId>,
}

impl Rebuilder {
    fn define(&mut self, uid: i64, obj: Object) -> Result<(), DemoError> {
        if self.type_uids.contains_key(&uid) || self.symbol_uids.contains_key(&uid) {
            return Err(DemoError::DuplicateUid(uid));
        }
        match obj {
            Object::Type(t) => {
                self.type_uids.insert(uid, t);
            }
            Object::Symbol(s) => {
                self.symbol_uids.insert(uid, s);
            }
        }
        Ok(())
    }

    fn placeholder_symbol(&mut self) -> SymbolId {
        self.symbols.add(Symbol {
            name: String::new(),
            ty: TypeId(0),
            scope: 0,
            sclass: 0,
            refs: 0,
            flags: 0,
        })
    }

    fn ty(&self, v: &Value) -> Result<TypeId, DemoError> {
        let uid = as_int(v)?;
        self.type_uids.get(&uid).copied().ok_or(DemoError::DanglingUid(uid))
    }

    fn sym(&self, v: &Value) -> Result<SymbolId, DemoError> {
        let uid = as_int(v)?;
        self.symbol_uids.get(&uid).copied().ok_or(DemoError::DanglingUid(uid))
    }

    fn scan_interfaces(&mut self, interfaces: &[Value]) -> Result<(), DemoError> {
        for i in interfaces {
            let (ctor, _, fields) = parts(i)?;
            match ctor {
                "Local" | "Address" => {
                    let s = self.placeholder_symbol();
                    self.define(as_int(&fields[0])?, Object::Symbol(s))?;
                }
                "Function" => self.scan_interfaces(as_list(&fields[4])?)?,
                _ => {}
            }
        }
        Ok(())
    }

    fn symbol(&self, v: &Value) -> Result<Symbol, DemoError> {
        let (_, _, f) = parts(v)?;
        Ok(Symbol {
            name: f[0].as_str().ok_or_else(|| malformed("a name"))?.to_string(),
            ty: self.ty(&f[1])?,
            scope: as_int(&f[2])?,
            sclass: as_int(&f[3])?,
            refs: as_int(&f[4])?,
            flags: as_int(&f[5])?,
        })
    }

    fn fields(&self, v: &Value) -> Result<Vec<Field>, DemoError> {
        as_list(v)?
            .iter()
            .map(|f| {
                let (_, _, f) = parts(f)?;
                let small = |v: &Value| -> Result<u32, DemoError> {
                    u32::try_from(as_int(v)?).map_err(|_| malformed("a field offset"))
                };
                Ok(Field {
                    name: f[0].as_str().ok_or_else(|| malformed("a name"))?.to_string(),
                    ty: self.ty(&f[1])?,
                    offset: small(&f[2])?,
                    bitsize: small(&f[3])?,
                    lsb: small(&f[4])?,
                })
            })
            .collect()
    }

    fn type_(&self, v: &Value) -> Result<Type, DemoError> {
        let (ctor, attrs, f) = parts(v)?;
        let ident =
            |v: &Value| -> Result<String, DemoError> { Ok(v.as_str().ok_or_else(|| malformed("a tag"))?.to_string()) };
        let kind = match ctor {
            "INT" => TypeKind::Int,
            "UNSIGNED" => TypeKind::Unsigned,
            "FLOAT" => TypeKind::Float,
            "VOID" => TypeKind::Void,
            "POINTER" => TypeKind::Pointer(self.ty(&f[0])?),
            "ARRAY" => TypeKind::Array(self.ty(&f[0])?),
            "CONST" => TypeKind::Const(self.ty(&f[0])?),
            "VOLATILE" => TypeKind::Volatile(self.ty(&f[0])?),
            "ENUM" => TypeKind::Enum {
                tag: ident(&f[0])?,
                ids: as_list(&f[1])?
                    .iter()
                    .map(|e| {
                        let (_, _, e) = parts(e)?;
                        Ok((ident(&e[0])?, as_int(&e[1])?))
                    })
                    .collect::<Result<_, DemoError>>()?,
            },
            "STRUCT" => TypeKind::Struct {
                tag: ident(&f[0])?,
                fields: self.fields(&f[1])?,
            },
            "UNION" => TypeKind::Union {
                tag: ident(&f[0])?,
                fields: self.fields(&f[1])?,
            },
            "FUNCTION" => TypeKind::Function {
                ret: self.ty(&f[0])?,
                formals: as_list(&f[1])?.iter().map(|t| self.ty(t)).collect::<Result<_, _>>()?,
            },
            other => return Err(DemoError::Malformed(format!("unknown type constructor {other}"))),
        };
        let dim = |v: &Value| u32::try_from(as_int(v)?).map_err(|_| malformed("a type size"));
        Ok(Type {
            kind,
            size: dim(&attrs[0])?,
            align: dim(&attrs[1])?,
        })
    }

    fn node(&self, v: &Value) -> Result<Node, DemoError> {
        let (ctor, attrs, f) = parts(v)?;
        let code = as_int(&attrs[0])?;
        let suffix = Suffix::from_code(code).ok_or_else(|| DemoError::Malformed(format!("bad suffix {code}")))?;
        let child = |v: &Value| self.node(v).map(Box::new);
        let op = |v: &Value| -> Result<i64, DemoError> {
            let op = as_int(v)?;
            super::tables::op_name(op)
                .map(|_| op)
                .ok_or_else(|| DemoError::Malformed(format!("bad operator {op}")))
        };
        let kind = match ctor {
            "CNST" => NodeKind::Cnst(as_int(&f[0])?),
            "CNSTF" => {
                let (_, _, r) = parts(&f[0])?;
                NodeKind::Cnstf {
                    msb: as_int(&r[0])?,
                    lsb: as_int(&r[1])?,
                }
            }
            "ARG" => NodeKind::Arg {
                left: child(&f[0])?,
                len: as_int(&f[1])?,
                align: as_int(&f[2])?,
            },
            "ASGN" => NodeKind::Asgn {
                left: child(&f[0])?,
                right: child(&f[1])?,
                len: as_int(&f[2])?,
                align: as_int(&f[3])?,
            },
            "CVT" => NodeKind::Cvt {
                op: op(&f[0])?,
                left: child(&f[1])?,
                fromsize: as_int(&f[2])?,
            },
            "CALL" => NodeKind::Call {
                left: child(&f[0])?,
                ty: self.ty(&f[1])?,
            },
            "CALLB" => NodeKind::Callb {
                left: child(&f[0])?,
                right: child(&f[1])?,
                ty: self.ty(&f[2])?,
            },
            "RET" => NodeKind::Ret,
            "ADDRG" => NodeKind::Addrg(self.sym(&f[0])?),
            "ADDRL" => NodeKind::Addrl(self.sym(&f[0])?),
            "ADDRF" => NodeKind::Addrf(self.sym(&f[0])?),
            "Unary" => NodeKind::Unary {
                op: op(&f[0])?,
                left: child(&f[1])?,
            },
            "Binary" => NodeKind::Binary {
                op: op(&f[0])?,
                left: child(&f[1])?,
                right: child(&f[2])?,
            },
            "Compare" => NodeKind::Compare {
                op: op(&f[0])?,
                left: child(&f[1])?,
                right: child(&f[2])?,
                label: as_int(&f[3])?,
            },
            "LABEL" => NodeKind::Label(as_int(&f[0])?),
            "BRANCH" => NodeKind::Branch(as_int(&f[0])?),
            "CSE" => NodeKind::Cse {
                temp: self.sym(&f[0])?,
                node: child(&f[1])?,
            },
            other => return Err(DemoError::Malformed(format!("unknown node constructor {other}"))),
        };
        Ok(Node::new(suffix, as_int(&attrs[1])?, kind))
    }

    fn interface(&mut self, v: &Value) -> Result<Interface, DemoError> {
        let (ctor, _, f) = parts(v)?;
        Ok(match ctor {
            "Export" => Interface::Export(self.sym(&f[0])?),
            "Import" => Interface::Import(self.sym(&f[0])?),
            "Global" => Interface::Global {
                sym: self.sym(&f[0])?,
                seg: as_int(&f[1])?,
            },
            "Local" => {
                let id = self.sym(&f[0])?;
                *self.symbols.get_mut(id) = self.symbol(&f[1])?;
                Interface::Local(id)
            }
            "Address" => {
                let id = self.sym(&f[0])?;
                *self.symbols.get_mut(id) = self.symbol(&f[1])?;
                Interface::Address {
                    sym: id,
                    base: self.sym(&f[2])?,
                    offset: as_int(&f[3])?,
                }
            }
            "Segment" => Interface::Segment(as_int(&f[0])?),
            "Defaddress" => Interface::Defaddress(self.sym(&f[0])?),
            "Deflabel" => Interface::Deflabel(as_int(&f[0])?),
            "Defconst" => {
                let code = as_int(&f[0])?;
                Interface::Defconst {
                    suffix: Suffix::from_code(code)
                        .ok_or_else(|| DemoError::Malformed(format!("bad suffix {code}")))?,
                    size: as_int(&f[1])?,
                    value: as_int(&f[2])?,
                }
            }
            "Defconstf" => {
                let (_, _, r) = parts(&f[1])?;
                Interface::Defconstf {
                    size: as_int(&f[0])?,
                    msb: as_int(&r[0])?,
                    lsb: as_int(&r[1])?,
                }
            }
            "Defstring" => Interface::Defstring(f[0].as_str().ok_or_else(|| malformed("a string"))?.to_string()),
            "Space" => Interface::Space(as_int(&f[0])?),
            "Function" => Interface::Function {
                f: self.sym(&f[0])?,
                caller: as_list(&f[1])?.iter().map(|s| self.sym(s)).collect::<Result<_, _>>()?,
                callee: as_list(&f[2])?.iter().map(|s| self.sym(s)).collect::<Result<_, _>>()?,
                ncalls: as_int(&f[3])?,
                codelist: as_list(&f[4])?
                    .iter()
                    .map(|c| self.interface(c))
                    .collect::<Result<_, _>>()?,
            },
            "Blockbeg" => Interface::Blockbeg,
            "Blockend" => Interface::Blockend,
            "Forest" => Interface::Forest(as_list(&f[0])?.iter().map(|n| self.node(n)).collect::<Result<_, _>>()?),
            other => return Err(DemoError::Malformed(format!("unknown interface constructor {other}"))),
        })
    }
}

/// Recreates a [`Unit`] from a `program` value: first every uid definition,
/// then the contents of types and symbols, then the interface calls.
pub fn rebuild(program: &Value) -> Result<Unit, DemoError> {
    let (_, _, f) = parts(program)?;
    let [_nuids, nlabels, items, interfaces, _argc, argv] = f else {
        return Err(malformed("a program"));
    };
    let items = as_list(items)?;
    let interfaces = as_list(interfaces)?;
    let argv: Vec<String> = as_list(argv)?
        .iter()
        .map(|a| a.as_str().map(str::to_string).ok_or_else(|| malformed("a string")))
        .collect::<Result<_, _>>()?;

    let mut r = Rebuilder::default();
    let mut type_items = Vec::new();
    let mut symbol_items = Vec::new();
    for item in items {
        let (ctor, attrs, fields) = parts(item)?;
        let uid = as_int(&attrs[0])?;
        match ctor {
            "Type" => {
                let id = r.types.add(TypeKind::Void, 0, 0);
                r.define(uid, Object::Type(id))?;
                type_items.push((id, &fields[0]));
            }
            _ => {
                let id = r.placeholder_symbol();
                r.define(uid, Object::Symbol(id))?;
                symbol_items.push((id, &fields[0]));
            }
        }
    }
    r.scan_interfaces(interfaces)?;
    for (id, v) in type_items {
        *r.types.get_mut(id) = r.type_(v)?;
    }
    for (id, v) in symbol_items {
        *r.symbols.get_mut(id) = r.symbol(v)?;
    }
    let interfaces = interfaces
        .iter()
        .map(|i| r.interface(i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Unit {
        metrics: metrics_from_argv(&argv)?,
        types: r.types,
        symbols: r.symbols,
        predefined: Vec::new(),
        interfaces,
        nlabels: as_int(nlabels)?,
        argv,
    })
}
