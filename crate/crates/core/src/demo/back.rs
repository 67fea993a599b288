//! Back end: renders a [`Unit`] as assembly for a simple stack machine.
//!
//! Trees are emitted in postorder, one instruction per line, so each
//! operator finds its operands on the stack. Function bodies are indented
//! by block depth.

use std::fmt::Write;

use super::ir::{Interface, Node, NodeKind, SymbolId, TypeId, TypeKind, Unit};
use super::tables::{op_name, segment};

struct Emitter<'u> {
    unit: &'u Unit,
    out: String,
    depth: usize,
    frame: u32,
    framesize: u32,
}

fn lower_op(op: i64) -> String {
    op_name(op).map_or_else(|| format!("op{op}"), str::to_ascii_lowercase)
}

impl Emitter<'_> {
    fn line(&mut self, text: impl AsRef<str>) {
        for _ in 0..self.depth {
            self.out.push_str("    ");
        }
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }

    fn name(&self, s: SymbolId) -> &str {
        &self.unit.symbols.get(s).name
    }

    fn type_text(&self, id: TypeId) -> String {
        let t = self.unit.types.get(id);
        match &t.kind {
            TypeKind::Int => format!("i{}", t.size),
            TypeKind::Unsigned => format!("u{}", t.size),
            TypeKind::Float => format!("f{}", t.size),
            TypeKind::Void => "void".into(),
            TypeKind::Pointer(to) => format!("*{}", self.type_text(*to)),
            TypeKind::Array(of) => format!("[{}]{}", t.size, self.type_text(*of)),
            TypeKind::Const(of) => format!("const {}", self.type_text(*of)),
            TypeKind::Volatile(of) => format!("volatile {}", self.type_text(*of)),
            TypeKind::Enum { tag, .. } => format!("enum {tag}"),
            TypeKind::Struct { tag, .. } => format!("struct {tag}"),
            TypeKind::Union { tag, .. } => format!("union {tag}"),
            TypeKind::Function { ret, formals } => {
                let args: Vec<String> = formals.iter().map(|f| self.type_text(*f)).collect();
                format!("fn({}) {}", args.join(","), self.type_text(*ret))
            }
        }
    }

    fn node(&mut self, n: &Node) {
        for c in n.children() {
            self.node(c);
        }
        let ty = format!("{}{}", n.suffix.letter().to_ascii_lowercase(), n.size);
        let text = match &n.kind {
            NodeKind::Cnst(v) => format!("cnst.{ty} {v}"),
            NodeKind::Cnstf { msb, lsb } => format!("cnst.{ty} {msb:#x}:{lsb:#x}"),
            NodeKind::Arg { len, align, .. } => format!("arg.{ty} {len} {align}"),
            NodeKind::Asgn { len, align, .. } if *len != 0 => format!("asgn.{ty} {len} {align}"),
            NodeKind::Asgn { .. } => format!("asgn.{ty}"),
            NodeKind::Cvt { op, fromsize, .. } => format!("{}.{ty} {fromsize}", lower_op(*op)),
            NodeKind::Call { ty: fty, .. } => format!("call.{ty} {}", self.type_text(*fty)),
            NodeKind::Callb { ty: fty, .. } => format!("callb.{ty} {}", self.type_text(*fty)),
            NodeKind::Ret => format!("ret.{ty}"),
            NodeKind::Addrg(s) => format!("addrg {}", self.name(*s)),
            NodeKind::Addrl(s) => format!("addrl {}", self.name(*s)),
            NodeKind::Addrf(s) => format!("addrf {}", self.name(*s)),
            NodeKind::Unary { op, .. } | NodeKind::Binary { op, .. } => format!("{}.{ty}", lower_op(*op)),
            NodeKind::Compare { op, label, .. } => format!("{}.{ty} L{label}", lower_op(*op)),
            NodeKind::Label(l) => format!("label L{l}"),
            NodeKind::Branch(l) => format!("jump L{l}"),
            NodeKind::Cse { temp, .. } => format!("cse {}", self.name(*temp)),
        };
        self.line(text);
    }

    fn interface(&mut self, i: &Interface) {
        match i {
            Interface::Export(p) => self.line(format!("export {}", self.name(*p))),
            Interface::Import(p) => self.line(format!("import {}", self.name(*p))),
            Interface::Global { sym, seg } => {
                let s = self.unit.symbols.get(*sym);
                let t = self.unit.types.get(s.ty);
                let seg = segment::name(*seg).map_or_else(|| seg.to_string(), str::to_string);
                self.line(format!(
                    "global {} segment={seg} size={} align={}",
                    s.name, t.size, t.align
                ));
            }
            Interface::Local(sym) => {
                let s = self.unit.symbols.get(*sym);
                let t = self.unit.types.get(s.ty);
                let offset = self.frame.next_multiple_of(t.align.max(1));
                self.frame = offset + t.size;
                self.framesize = self.framesize.max(self.frame);
                self.line(format!("local {} offset={offset} size={}", s.name, t.size));
            }
            Interface::Address { sym, base, offset } => {
                self.line(format!("address {} = {}{offset:+}", self.name(*sym), self.name(*base)))
            }
            Interface::Segment(seg) => {
                let seg = segment::name(*seg).map_or_else(|| seg.to_string(), str::to_string);
                self.line(format!("segment {seg}"));
            }
            Interface::Defaddress(p) => self.line(format!(".address {}", self.name(*p))),
            Interface::Deflabel(l) => self.line(format!("L{l}:")),
            Interface::Defconst { suffix, size, value } => {
                self.line(format!(".const.{}{size} {value}", suffix.letter().to_ascii_lowercase()))
            }
            Interface::Defconstf { size, msb, lsb } => self.line(format!(".const.f{size} {msb:#x}:{lsb:#x}")),
            Interface::Defstring(s) => self.line(format!(".string {s:?}")),
            Interface::Space(n) => self.line(format!(".space {n}")),
            Interface::Function {
                f,
                caller,
                callee,
                ncalls,
                codelist,
            } => {
                let names = |ids: &[SymbolId]| ids.iter().map(|s| self.name(*s)).collect::<Vec<_>>().join(",");
                let header = format!(
                    "function {} ncalls={ncalls} caller=[{}] callee=[{}]",
                    self.name(*f),
                    names(caller),
                    names(callee)
                );
                self.line(header);
                let (frame, framesize) = (self.frame, self.framesize);
                self.frame = 0;
                self.framesize = 0;
                self.depth += 1;
                for c in codelist {
                    self.interface(c);
                }
                self.depth -= 1;
                let size = self.framesize.next_multiple_of(self.unit.metrics.pointer.align.max(1));
                self.line(format!("end {} framesize={size}", self.name(*f)));
                self.frame = frame;
                self.framesize = framesize;
            }
            Interface::Blockbeg => {
                self.line(format!("blockbeg level={}", self.depth));
                self.depth += 1;
            }
            Interface::Blockend => {
                self.depth = self.depth.saturating_sub(1);
                self.line(format!("blockend level={}", self.depth));
            }
            Interface::Forest(nodes) => {
                for n in nodes {
                    self.node(n);
                }
            }
        }
    }
}

/// Assembly for a whole unit.
pub fn emit(unit: &Unit) -> String {
    let mut e = Emitter {
        unit,
        out: String::new(),
        depth: 0,
        frame: 0,
        framesize: 0,
    };
    let _ = writeln!(e.out, "progbeg target={}", unit.metrics);
    for i in &unit.interfaces {
        e.interface(i);
    }
    e.out.push_str("progend\n");
    e.out
}
