//! In-memory form of the code-generation interface: types, symbols, trees
//! and interface calls. Types and symbols live in arenas and are compared by
//! identity, so two symbols with equal contents stay distinct.

use super::metrics::{Metric, TargetMetrics};
use super::tables::Suffix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolId(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    pub name: String,
    pub ty: TypeId,
    pub offset: u32,
    pub bitsize: u32,
    pub lsb: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeKind {
    Int,
    Unsigned,
    Float,
    Void,
    Pointer(TypeId),
    Enum { tag: String, ids: Vec<(String, i64)> },
    Struct { tag: String, fields: Vec<Field> },
    Union { tag: String, fields: Vec<Field> },
    Array(TypeId),
    Function { ret: TypeId, formals: Vec<TypeId> },
    Const(TypeId),
    Volatile(TypeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Type {
    pub kind: TypeKind,
    pub size: u32,
    pub align: u32,
}

/// Size, alignment and field offsets of a record whose fields have the
/// given size and alignment, in declaration order.
pub fn layout_record(fields: &[Metric]) -> (u32, u32, Vec<u32>) {
    let mut offset = 0u32;
    let mut align = 1u32;
    let mut offsets = Vec::with_capacity(fields.len());
    for f in fields {
        offset = offset.next_multiple_of(f.align.max(1));
        offsets.push(offset);
        offset += f.size;
        align = align.max(f.align);
    }
    (offset.next_multiple_of(align), align, offsets)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeArena {
    types: Vec<Type>,
}

impl TypeArena {
    pub fn new() -> Self {
        TypeArena::default()
    }

    pub fn add(&mut self, kind: TypeKind, size: u32, align: u32) -> TypeId {
        self.types.push(Type { kind, size, align });
        TypeId(self.types.len() as u32 - 1)
    }

    pub fn get(&self, id: TypeId) -> &Type {
        &self.types[id.0 as usize]
    }

    pub fn get_mut(&mut self, id: TypeId) -> &mut Type {
        &mut self.types[id.0 as usize]
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn int(&mut self, m: &TargetMetrics) -> TypeId {
        self.add(TypeKind::Int, m.int.size, m.int.align)
    }

    /// Plain `char`, a one-byte integer.
    pub fn char_(&mut self, m: &TargetMetrics) -> TypeId {
        self.add(TypeKind::Int, m.char_.size, m.char_.align)
    }

    pub fn pointer(&mut self, to: TypeId, m: &TargetMetrics) -> TypeId {
        self.add(TypeKind::Pointer(to), m.pointer.size, m.pointer.align)
    }

    pub fn function(&mut self, ret: TypeId, formals: Vec<TypeId>) -> TypeId {
        self.add(TypeKind::Function { ret, formals }, 0, 0)
    }

    /// An incomplete struct, to be finished by [`TypeArena::complete_struct`].
    pub fn new_struct(&mut self, tag: &str) -> TypeId {
        self.add(
            TypeKind::Struct {
                tag: tag.to_string(),
                fields: Vec::new(),
            },
            0,
            0,
        )
    }

    /// Lays out `fields` and stores them in the struct `id`.
    pub fn complete_struct(&mut self, id: TypeId, fields: &[(&str, TypeId)]) {
        let metrics: Vec<Metric> = fields
            .iter()
            .map(|(_, t)| {
                let t = self.get(*t);
                Metric {
                    size: t.size,
                    align: t.align,
                }
            })
            .collect();
        let (size, align, offsets) = layout_record(&metrics);
        let laid: Vec<Field> = fields
            .iter()
            .zip(offsets)
            .map(|((name, ty), offset)| Field {
                name: name.to_string(),
                ty: *ty,
                offset,
                bitsize: 0,
                lsb: 0,
            })
            .collect();
        let t = self.get_mut(id);
        t.size = size;
        t.align = align;
        if let TypeKind::Struct { fields, .. } = &mut t.kind {
            *fields = laid;
        }
    }

    /// Node suffix for values of this type.
    pub fn suffix(&self, id: TypeId) -> Suffix {
        match &self.get(id).kind {
            TypeKind::Int | TypeKind::Enum { .. } => Suffix::I,
            TypeKind::Unsigned => Suffix::U,
            TypeKind::Float => Suffix::F,
            TypeKind::Pointer(_) | TypeKind::Array(_) | TypeKind::Function { .. } => Suffix::P,
            TypeKind::Struct { .. } | TypeKind::Union { .. } => Suffix::B,
            TypeKind::Void => Suffix::V,
            TypeKind::Const(t) | TypeKind::Volatile(t) => self.suffix(*t),
        }
    }

    pub fn pointee(&self, id: TypeId) -> Option<TypeId> {
        match self.get(id).kind {
            TypeKind::Pointer(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symbol {
    pub name: String,
    pub ty: TypeId,
    pub scope: i64,
    pub sclass: i64,
    pub refs: i64,
    pub flags: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolArena {
    symbols: Vec<Symbol>,
}

impl SymbolArena {
    pub fn new() -> Self {
        SymbolArena::default()
    }

    pub fn add(&mut self, sym: Symbol) -> SymbolId {
        self.symbols.push(sym);
        SymbolId(self.symbols.len() as u32 - 1)
    }

    pub fn get(&self, id: SymbolId) -> &Symbol {
        &self.symbols[id.0 as usize]
    }

    pub fn get_mut(&mut self, id: SymbolId) -> &mut Symbol {
        &mut self.symbols[id.0 as usize]
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub suffix: Suffix,
    pub size: i64,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    Cnst(i64),
    Cnstf {
        msb: i64,
        lsb: i64,
    },
    Arg {
        left: Box<Node>,
        len: i64,
        align: i64,
    },
    Asgn {
        left: Box<Node>,
        right: Box<Node>,
        len: i64,
        align: i64,
    },
    Cvt {
        op: i64,
        left: Box<Node>,
        fromsize: i64,
    },
    Call {
        left: Box<Node>,
        ty: TypeId,
    },
    Callb {
        left: Box<Node>,
        right: Box<Node>,
        ty: TypeId,
    },
    Ret,
    Addrg(SymbolId),
    Addrl(SymbolId),
    Addrf(SymbolId),
    Unary {
        op: i64,
        left: Box<Node>,
    },
    Binary {
        op: i64,
        left: Box<Node>,
        right: Box<Node>,
    },
    Compare {
        op: i64,
        left: Box<Node>,
        right: Box<Node>,
        label: i64,
    },
    Label(i64),
    Branch(i64),
    Cse {
        temp: SymbolId,
        node: Box<Node>,
    },
}

impl Node {
    pub fn new(suffix: Suffix, size: i64, kind: NodeKind) -> Node {
        Node { suffix, size, kind }
    }

    /// Direct children, left to right.
    pub fn children(&self) -> Vec<&Node> {
        match &self.kind {
            NodeKind::Arg { left, .. }
            | NodeKind::Cvt { left, .. }
            | NodeKind::Call { left, .. }
            | NodeKind::Unary { left, .. } => vec![left],
            NodeKind::Cse { node, .. } => vec![node],
            NodeKind::Asgn { left, right, .. }
            | NodeKind::Callb { left, right, .. }
            | NodeKind::Binary { left, right, .. }
            | NodeKind::Compare { left, right, .. } => vec![left, right],
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Interface {
    Export(SymbolId),
    Import(SymbolId),
    Global {
        sym: SymbolId,
        seg: i64,
    },
    /// Defines a local or parameter.
    Local(SymbolId),
    /// Defines `sym` as `base` plus `offset`.
    Address {
        sym: SymbolId,
        base: SymbolId,
        offset: i64,
    },
    Segment(i64),
    Defaddress(SymbolId),
    Deflabel(i64),
    Defconst {
        suffix: Suffix,
        size: i64,
        value: i64,
    },
    Defconstf {
        size: i64,
        msb: i64,
        lsb: i64,
    },
    Defstring(String),
    Space(i64),
    Function {
        f: SymbolId,
        caller: Vec<SymbolId>,
        callee: Vec<SymbolId>,
        ncalls: i64,
        codelist: Vec<Interface>,
    },
    Blockbeg,
    Blockend,
    Forest(Vec<Node>),
}

/// Everything the front end hands to the back end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    pub metrics: TargetMetrics,
    pub types: TypeArena,
    pub symbols: SymbolArena,
    /// Types every pickle defines first, in order.
    pub predefined: Vec<TypeId>,
    pub interfaces: Vec<Interface>,
    pub nlabels: i64,
    pub argv: Vec<String>,
}
