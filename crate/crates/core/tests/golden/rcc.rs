// Generated from module rcc by asdl. Do not edit.
#![allow(non_camel_case_types, non_snake_case, dead_code, clippy::all)]

use asdl::runtime::{self, InStream, OutStream};

pub type rcc_program_ty = Box<rcc_program_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_program_s {
    pub nuids: i64,
    pub nlabels: i64,
    pub items: Vec<rcc_item_ty>,
    pub interfaces: Vec<rcc_interface_ty>,
    pub argc: i64,
    pub argv: Vec<String>,
}

pub type rcc_item_ty = Box<rcc_item_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_item_s {
    pub uid: i64,
    pub kind: rcc_item_kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum rcc_item_kind {
    rcc_Symbol { symbol: rcc_symbol_ty },
    rcc_Type { r#type: rcc_type_ty },
}

impl rcc_item_kind {
    pub fn tag(&self) -> u32 {
        match self {
            rcc_item_kind::rcc_Symbol { .. } => 1,
            rcc_item_kind::rcc_Type { .. } => 2,
        }
    }
}

pub type rcc_symbol_ty = Box<rcc_symbol_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_symbol_s {
    pub id: runtime::Identifier,
    pub r#type: i64,
    pub scope: i64,
    pub sclass: i64,
    pub r#ref: i64,
    pub flags: i64,
}

pub type rcc_field_ty = Box<rcc_field_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_field_s {
    pub id: runtime::Identifier,
    pub r#type: i64,
    pub offset: i64,
    pub bitsize: i64,
    pub lsb: i64,
}

pub type rcc_enum_ty = Box<rcc_enum_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_enum_s {
    pub id: runtime::Identifier,
    pub value: i64,
}

pub type rcc_type_ty = Box<rcc_type_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_type_s {
    pub size: i64,
    pub align: i64,
    pub kind: rcc_type_kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum rcc_type_kind {
    rcc_INT,
    rcc_UNSIGNED,
    rcc_FLOAT,
    rcc_VOID,
    rcc_POINTER { r#type: i64 },
    rcc_ENUM { tag: runtime::Identifier, ids: Vec<rcc_enum_ty> },
    rcc_STRUCT { tag: runtime::Identifier, fields: Vec<rcc_field_ty> },
    rcc_UNION { tag: runtime::Identifier, fields: Vec<rcc_field_ty> },
    rcc_ARRAY { r#type: i64 },
    rcc_FUNCTION { r#type: i64, formals: Vec<i64> },
    rcc_CONST { r#type: i64 },
    rcc_VOLATILE { r#type: i64 },
}

impl rcc_type_kind {
    pub fn tag(&self) -> u32 {
        match self {
            rcc_type_kind::rcc_INT => 1,
            rcc_type_kind::rcc_UNSIGNED => 2,
            rcc_type_kind::rcc_FLOAT => 3,
            rcc_type_kind::rcc_VOID => 4,
            rcc_type_kind::rcc_POINTER { .. } => 5,
            rcc_type_kind::rcc_ENUM { .. } => 6,
            rcc_type_kind::rcc_STRUCT { .. } => 7,
            rcc_type_kind::rcc_UNION { .. } => 8,
            rcc_type_kind::rcc_ARRAY { .. } => 9,
            rcc_type_kind::rcc_FUNCTION { .. } => 10,
            rcc_type_kind::rcc_CONST { .. } => 11,
            rcc_type_kind::rcc_VOLATILE { .. } => 12,
        }
    }
}

pub type rcc_node_ty = Box<rcc_node_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_node_s {
    pub suffix: i64,
    pub size: i64,
    pub kind: rcc_node_kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum rcc_node_kind {
    rcc_CNST { value: i64 },
    rcc_CNSTF { value: rcc_real_ty },
    rcc_ARG { left: rcc_node_ty, len: i64, align: i64 },
    rcc_ASGN { left: rcc_node_ty, right: rcc_node_ty, len: i64, align: i64 },
    rcc_CVT { op: i64, left: rcc_node_ty, fromsize: i64 },
    rcc_CALL { left: rcc_node_ty, r#type: i64 },
    rcc_CALLB { left: rcc_node_ty, right: rcc_node_ty, r#type: i64 },
    rcc_RET,
    rcc_ADDRG { uid: i64 },
    rcc_ADDRL { uid: i64 },
    rcc_ADDRF { uid: i64 },
    rcc_Unary { op: i64, left: rcc_node_ty },
    rcc_Binary { op: i64, left: rcc_node_ty, right: rcc_node_ty },
    rcc_Compare { op: i64, left: rcc_node_ty, right: rcc_node_ty, label: i64 },
    rcc_LABEL { label: i64 },
    rcc_BRANCH { label: i64 },
    rcc_CSE { uid: i64, node: rcc_node_ty },
}

impl rcc_node_kind {
    pub fn tag(&self) -> u32 {
        match self {
            rcc_node_kind::rcc_CNST { .. } => 1,
            rcc_node_kind::rcc_CNSTF { .. } => 2,
            rcc_node_kind::rcc_ARG { .. } => 3,
            rcc_node_kind::rcc_ASGN { .. } => 4,
            rcc_node_kind::rcc_CVT { .. } => 5,
            rcc_node_kind::rcc_CALL { .. } => 6,
            rcc_node_kind::rcc_CALLB { .. } => 7,
            rcc_node_kind::rcc_RET => 8,
            rcc_node_kind::rcc_ADDRG { .. } => 9,
            rcc_node_kind::rcc_ADDRL { .. } => 10,
            rcc_node_kind::rcc_ADDRF { .. } => 11,
            rcc_node_kind::rcc_Unary { .. } => 12,
            rcc_node_kind::rcc_Binary { .. } => 13,
            rcc_node_kind::rcc_Compare { .. } => 14,
            rcc_node_kind::rcc_LABEL { .. } => 15,
            rcc_node_kind::rcc_BRANCH { .. } => 16,
            rcc_node_kind::rcc_CSE { .. } => 17,
        }
    }
}

pub type rcc_real_ty = Box<rcc_real_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_real_s {
    pub msb: i64,
    pub lsb: i64,
}

pub type rcc_interface_ty = Box<rcc_interface_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct rcc_interface_s {
    pub kind: rcc_interface_kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum rcc_interface_kind {
    rcc_Export { p: i64 },
    rcc_Import { p: i64 },
    rcc_Global { p: i64, seg: i64 },
    rcc_Local { uid: i64, p: rcc_symbol_ty },
    rcc_Address { uid: i64, q: rcc_symbol_ty, p: i64, n: i64 },
    rcc_Segment { seg: i64 },
    rcc_Defaddress { p: i64 },
    rcc_Deflabel { label: i64 },
    rcc_Defconst { suffix: i64, size: i64, value: i64 },
    rcc_Defconstf { size: i64, value: rcc_real_ty },
    rcc_Defstring { s: String },
    rcc_Space { n: i64 },
    rcc_Function { f: i64, caller: Vec<i64>, callee: Vec<i64>, ncalls: i64, codelist: Vec<rcc_interface_ty> },
    rcc_Blockbeg,
    rcc_Blockend,
    rcc_Forest { nodes: Vec<rcc_node_ty> },
}

impl rcc_interface_kind {
    pub fn tag(&self) -> u32 {
        match self {
            rcc_interface_kind::rcc_Export { .. } => 1,
            rcc_interface_kind::rcc_Import { .. } => 2,
            rcc_interface_kind::rcc_Global { .. } => 3,
            rcc_interface_kind::rcc_Local { .. } => 4,
            rcc_interface_kind::rcc_Address { .. } => 5,
            rcc_interface_kind::rcc_Segment { .. } => 6,
            rcc_interface_kind::rcc_Defaddress { .. } => 7,
            rcc_interface_kind::rcc_Deflabel { .. } => 8,
            rcc_interface_kind::rcc_Defconst { .. } => 9,
            rcc_interface_kind::rcc_Defconstf { .. } => 10,
            rcc_interface_kind::rcc_Defstring { .. } => 11,
            rcc_interface_kind::rcc_Space { .. } => 12,
            rcc_interface_kind::rcc_Function { .. } => 13,
            rcc_interface_kind::rcc_Blockbeg => 14,
            rcc_interface_kind::rcc_Blockend => 15,
            rcc_interface_kind::rcc_Forest { .. } => 16,
        }
    }
}

pub fn rcc_program(nuids: i64, nlabels: i64, items: Vec<rcc_item_ty>, interfaces: Vec<rcc_interface_ty>, argc: i64, argv: Vec<String>) -> rcc_program_ty {
    Box::new(rcc_program_s { nuids, nlabels, items, interfaces, argc, argv })
}

pub fn rcc_read_program(_s: &mut InStream<'_>) -> runtime::Result<rcc_program_ty> {
    let nuids = runtime::read_int(_s)?;
    let nlabels = runtime::read_int(_s)?;
    let items = runtime::read_list(_s, rcc_read_item)?;
    let interfaces = runtime::read_list(_s, rcc_read_interface)?;
    let argc = runtime::read_int(_s)?;
    let argv = runtime::read_list(_s, runtime::read_string)?;
    Ok(rcc_program(nuids, nlabels, items, interfaces, argc, argv))
}

pub fn rcc_write_program(_x: &rcc_program_ty, _s: &mut OutStream) {
    runtime::write_int(&_x.nuids, _s);
    runtime::write_int(&_x.nlabels, _s);
    runtime::write_list(&_x.items, _s, |_v, _s| rcc_write_item(_v, _s));
    runtime::write_list(&_x.interfaces, _s, |_v, _s| rcc_write_interface(_v, _s));
    runtime::write_int(&_x.argc, _s);
    runtime::write_list(&_x.argv, _s, |_v, _s| runtime::write_string(_v, _s));
}

pub fn rcc_Symbol(uid: i64, symbol: rcc_symbol_ty) -> rcc_item_ty {
    Box::new(rcc_item_s { uid, kind: rcc_item_kind::rcc_Symbol { symbol } })
}

pub fn rcc_Type(uid: i64, r#type: rcc_type_ty) -> rcc_item_ty {
    Box::new(rcc_item_s { uid, kind: rcc_item_kind::rcc_Type { r#type } })
}

pub fn rcc_read_item(_s: &mut InStream<'_>) -> runtime::Result<rcc_item_ty> {
    let _offset = _s.position();
    let _tag = runtime::read_tag(_s)?;
    let uid = runtime::read_int(_s)?;
    Ok(match _tag {
        1 => {
            let symbol = rcc_read_symbol(_s)?;
            rcc_Symbol(uid, symbol)
        }
        2 => {
            let r#type = rcc_read_type(_s)?;
            rcc_Type(uid, r#type)
        }
        _ => return Err(runtime::bad_tag("item", _tag, _offset)),
    })
}

pub fn rcc_write_item(_x: &rcc_item_ty, _s: &mut OutStream) {
    runtime::write_tag(_x.kind.tag(), _s);
    runtime::write_int(&_x.uid, _s);
    match &_x.kind {
        rcc_item_kind::rcc_Symbol { symbol } => {
            rcc_write_symbol(symbol, _s);
        }
        rcc_item_kind::rcc_Type { r#type } => {
            rcc_write_type(r#type, _s);
        }
    }
}

pub fn rcc_symbol(id: runtime::Identifier, r#type: i64, scope: i64, sclass: i64, r#ref: i64, flags: i64) -> rcc_symbol_ty {
    Box::new(rcc_symbol_s { id, r#type, scope, sclass, r#ref, flags })
}

pub fn rcc_read_symbol(_s: &mut InStream<'_>) -> runtime::Result<rcc_symbol_ty> {
    let id = runtime::read_identifier(_s)?;
    let r#type = runtime::read_int(_s)?;
    let scope = runtime::read_int(_s)?;
    let sclass = runtime::read_int(_s)?;
    let r#ref = runtime::read_int(_s)?;
    let flags = runtime::read_int(_s)?;
    Ok(rcc_symbol(id, r#type, scope, sclass, r#ref, flags))
}

pub fn rcc_write_symbol(_x: &rcc_symbol_ty, _s: &mut OutStream) {
    runtime::write_identifier(&_x.id, _s);
    runtime::write_int(&_x.r#type, _s);
    runtime::write_int(&_x.scope, _s);
    runtime::write_int(&_x.sclass, _s);
    runtime::write_int(&_x.r#ref, _s);
    runtime::write_int(&_x.flags, _s);
}

pub fn rcc_field(id: runtime::Identifier, r#type: i64, offset: i64, bitsize: i64, lsb: i64) -> rcc_field_ty {
    Box::new(rcc_field_s { id, r#type, offset, bitsize, lsb })
}

pub fn rcc_read_field(_s: &mut InStream<'_>) -> runtime::Result<rcc_field_ty> {
    let id = runtime::read_identifier(_s)?;
    let r#type = runtime::read_int(_s)?;
    let offset = runtime::read_int(_s)?;
    let bitsize = runtime::read_int(_s)?;
    let lsb = runtime::read_int(_s)?;
    Ok(rcc_field(id, r#type, offset, bitsize, lsb))
}

pub fn rcc_write_field(_x: &rcc_field_ty, _s: &mut OutStream) {
    runtime::write_identifier(&_x.id, _s);
    runtime::write_int(&_x.r#type, _s);
    runtime::write_int(&_x.offset, _s);
    runtime::write_int(&_x.bitsize, _s);
    runtime::write_int(&_x.lsb, _s);
}

pub fn rcc_enum(id: runtime::Identifier, value: i64) -> rcc_enum_ty {
    Box::new(rcc_enum_s { id, value })
}

pub fn rcc_read_enum(_s: &mut InStream<'_>) -> runtime::Result<rcc_enum_ty> {
    let id = runtime::read_identifier(_s)?;
    let value = runtime::read_int(_s)?;
    Ok(rcc_enum(id, value))
}

pub fn rcc_write_enum(_x: &rcc_enum_ty, _s: &mut OutStream) {
    runtime::write_identifier(&_x.id, _s);
    runtime::write_int(&_x.value, _s);
}

pub fn rcc_INT(size: i64, align: i64) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_INT })
}

pub fn rcc_UNSIGNED(size: i64, align: i64) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_UNSIGNED })
}

pub fn rcc_FLOAT(size: i64, align: i64) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_FLOAT })
}

pub fn rcc_VOID(size: i64, align: i64) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_VOID })
}

pub fn rcc_POINTER(size: i64, align: i64, r#type: i64) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_POINTER { r#type } })
}

pub fn rcc_ENUM(size: i64, align: i64, tag: runtime::Identifier, ids: Vec<rcc_enum_ty>) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_ENUM { tag, ids } })
}

pub fn rcc_STRUCT(size: i64, align: i64, tag: runtime::Identifier, fields: Vec<rcc_field_ty>) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_STRUCT { tag, fields } })
}

pub fn rcc_UNION(size: i64, align: i64, tag: runtime::Identifier, fields: Vec<rcc_field_ty>) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_UNION { tag, fields } })
}

pub fn rcc_ARRAY(size: i64, align: i64, r#type: i64) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_ARRAY { r#type } })
}

pub fn rcc_FUNCTION(size: i64, align: i64, r#type: i64, formals: Vec<i64>) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_FUNCTION { r#type, formals } })
}

pub fn rcc_CONST(size: i64, align: i64, r#type: i64) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_CONST { r#type } })
}

pub fn rcc_VOLATILE(size: i64, align: i64, r#type: i64) -> rcc_type_ty {
    Box::new(rcc_type_s { size, align, kind: rcc_type_kind::rcc_VOLATILE { r#type } })
}

pub fn rcc_read_type(_s: &mut InStream<'_>) -> runtime::Result<rcc_type_ty> {
    let _offset = _s.position();
    let _tag = runtime::read_tag(_s)?;
    let size = runtime::read_int(_s)?;
    let align = runtime::read_int(_s)?;
    Ok(match _tag {
        1 => {
            rcc_INT(size, align)
        }
        2 => {
            rcc_UNSIGNED(size, align)
        }
        3 => {
            rcc_FLOAT(size, align)
        }
        4 => {
            rcc_VOID(size, align)
        }
        5 => {
            let r#type = runtime::read_int(_s)?;
            rcc_POINTER(size, align, r#type)
        }
        6 => {
            let tag = runtime::read_identifier(_s)?;
            let ids = runtime::read_list(_s, rcc_read_enum)?;
            rcc_ENUM(size, align, tag, ids)
        }
        7 => {
            let tag = runtime::read_identifier(_s)?;
            let fields = runtime::read_list(_s, rcc_read_field)?;
            rcc_STRUCT(size, align, tag, fields)
        }
        8 => {
            let tag = runtime::read_identifier(_s)?;
            let fields = runtime::read_list(_s, rcc_read_field)?;
            rcc_UNION(size, align, tag, fields)
        }
        9 => {
            let r#type = runtime::read_int(_s)?;
            rcc_ARRAY(size, align, r#type)
        }
        10 => {
            let r#type = runtime::read_int(_s)?;
            let formals = runtime::read_list(_s, runtime::read_int)?;
            rcc_FUNCTION(size, align, r#type, formals)
        }
        11 => {
            let r#type = runtime::read_int(_s)?;
            rcc_CONST(size, align, r#type)
        }
        12 => {
            let r#type = runtime::read_int(_s)?;
            rcc_VOLATILE(size, align, r#type)
        }
        _ => return Err(runtime::bad_tag("type", _tag, _offset)),
    })
}

pub fn rcc_write_type(_x: &rcc_type_ty, _s: &mut OutStream) {
    runtime::write_tag(_x.kind.tag(), _s);
    runtime::write_int(&_x.size, _s);
    runtime::write_int(&_x.align, _s);
    match &_x.kind {
        rcc_type_kind::rcc_INT => {}
        rcc_type_kind::rcc_UNSIGNED => {}
        rcc_type_kind::rcc_FLOAT => {}
        rcc_type_kind::rcc_VOID => {}
        rcc_type_kind::rcc_POINTER { r#type } => {
            runtime::write_int(r#type, _s);
        }
        rcc_type_kind::rcc_ENUM { tag, ids } => {
            runtime::write_identifier(tag, _s);
            runtime::write_list(ids, _s, |_v, _s| rcc_write_enum(_v, _s));
        }
        rcc_type_kind::rcc_STRUCT { tag, fields } => {
            runtime::write_identifier(tag, _s);
            runtime::write_list(fields, _s, |_v, _s| rcc_write_field(_v, _s));
        }
        rcc_type_kind::rcc_UNION { tag, fields } => {
            runtime::write_identifier(tag, _s);
            runtime::write_list(fields, _s, |_v, _s| rcc_write_field(_v, _s));
        }
        rcc_type_kind::rcc_ARRAY { r#type } => {
            runtime::write_int(r#type, _s);
        }
        rcc_type_kind::rcc_FUNCTION { r#type, formals } => {
            runtime::write_int(r#type, _s);
            runtime::write_list(formals, _s, |_v, _s| runtime::write_int(_v, _s));
        }
        rcc_type_kind::rcc_CONST { r#type } => {
            runtime::write_int(r#type, _s);
        }
        rcc_type_kind::rcc_VOLATILE { r#type } => {
            runtime::write_int(r#type, _s);
        }
    }
}

pub fn rcc_CNST(suffix: i64, size: i64, value: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_CNST { value } })
}

pub fn rcc_CNSTF(suffix: i64, size: i64, value: rcc_real_ty) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_CNSTF { value } })
}

pub fn rcc_ARG(suffix: i64, size: i64, left: rcc_node_ty, len: i64, align: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_ARG { left, len, align } })
}

pub fn rcc_ASGN(suffix: i64, size: i64, left: rcc_node_ty, right: rcc_node_ty, len: i64, align: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_ASGN { left, right, len, align } })
}

pub fn rcc_CVT(suffix: i64, size: i64, op: i64, left: rcc_node_ty, fromsize: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_CVT { op, left, fromsize } })
}

pub fn rcc_CALL(suffix: i64, size: i64, left: rcc_node_ty, r#type: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_CALL { left, r#type } })
}

pub fn rcc_CALLB(suffix: i64, size: i64, left: rcc_node_ty, right: rcc_node_ty, r#type: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_CALLB { left, right, r#type } })
}

pub fn rcc_RET(suffix: i64, size: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_RET })
}

pub fn rcc_ADDRG(suffix: i64, size: i64, uid: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_ADDRG { uid } })
}

pub fn rcc_ADDRL(suffix: i64, size: i64, uid: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_ADDRL { uid } })
}

pub fn rcc_ADDRF(suffix: i64, size: i64, uid: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_ADDRF { uid } })
}

pub fn rcc_Unary(suffix: i64, size: i64, op: i64, left: rcc_node_ty) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_Unary { op, left } })
}

pub fn rcc_Binary(suffix: i64, size: i64, op: i64, left: rcc_node_ty, right: rcc_node_ty) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_Binary { op, left, right } })
}

pub fn rcc_Compare(suffix: i64, size: i64, op: i64, left: rcc_node_ty, right: rcc_node_ty, label: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_Compare { op, left, right, label } })
}

pub fn rcc_LABEL(suffix: i64, size: i64, label: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_LABEL { label } })
}

pub fn rcc_BRANCH(suffix: i64, size: i64, label: i64) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_BRANCH { label } })
}

pub fn rcc_CSE(suffix: i64, size: i64, uid: i64, node: rcc_node_ty) -> rcc_node_ty {
    Box::new(rcc_node_s { suffix, size, kind: rcc_node_kind::rcc_CSE { uid, node } })
}

pub fn rcc_read_node(_s: &mut InStream<'_>) -> runtime::Result<rcc_node_ty> {
    let _offset = _s.position();
    let _tag = runtime::read_tag(_s)?;
    let suffix = runtime::read_int(_s)?;
    let size = runtime::read_int(_s)?;
    Ok(match _tag {
        1 => {
            let value = runtime::read_int(_s)?;
            rcc_CNST(suffix, size, value)
        }
        2 => {
            let value = rcc_read_real(_s)?;
            rcc_CNSTF(suffix, size, value)
        }
        3 => {
            let left = rcc_read_node(_s)?;
            let len = runtime::read_int(_s)?;
            let align = runtime::read_int(_s)?;
            rcc_ARG(suffix, size, left, len, align)
        }
        4 => {
            let left = rcc_read_node(_s)?;
            let right = rcc_read_node(_s)?;
            let len = runtime::read_int(_s)?;
            let align = runtime::read_int(_s)?;
            rcc_ASGN(suffix, size, left, right, len, align)
        }
        5 => {
            let op = runtime::read_int(_s)?;
            let left = rcc_read_node(_s)?;
            let fromsize = runtime::read_int(_s)?;
            rcc_CVT(suffix, size, op, left, fromsize)
        }
        6 => {
            let left = rcc_read_node(_s)?;
            let r#type = runtime::read_int(_s)?;
            rcc_CALL(suffix, size, left, r#type)
        }
        7 => {
            let left = rcc_read_node(_s)?;
            let right = rcc_read_node(_s)?;
            let r#type = runtime::read_int(_s)?;
            rcc_CALLB(suffix, size, left, right, r#type)
        }
        8 => {
            rcc_RET(suffix, size)
        }
        9 => {
            let uid = runtime::read_int(_s)?;
            rcc_ADDRG(suffix, size, uid)
        }
        10 => {
            let uid = runtime::read_int(_s)?;
            rcc_ADDRL(suffix, size, uid)
        }
        11 => {
            let uid = runtime::read_int(_s)?;
            rcc_ADDRF(suffix, size, uid)
        }
        12 => {
            let op = runtime::read_int(_s)?;
            let left = rcc_read_node(_s)?;
            rcc_Unary(suffix, size, op, left)
        }
        13 => {
            let op = runtime::read_int(_s)?;
            let left = rcc_read_node(_s)?;
            let right = rcc_read_node(_s)?;
            rcc_Binary(suffix, size, op, left, right)
        }
        14 => {
            let op = runtime::read_int(_s)?;
            let left = rcc_read_node(_s)?;
            let right = rcc_read_node(_s)?;
            let label = runtime::read_int(_s)?;
            rcc_Compare(suffix, size, op, left, right, label)
        }
        15 => {
            let label = runtime::read_int(_s)?;
            rcc_LABEL(suffix, size, label)
        }
        16 => {
            let label = runtime::read_int(_s)?;
            rcc_BRANCH(suffix, size, label)
        }
        17 => {
            let uid = runtime::read_int(_s)?;
            let node = rcc_read_node(_s)?;
            rcc_CSE(suffix, size, uid, node)
        }
        _ => return Err(runtime::bad_tag("node", _tag, _offset)),
    })
}

pub fn rcc_write_node(_x: &rcc_node_ty, _s: &mut OutStream) {
    runtime::write_tag(_x.kind.tag(), _s);
    runtime::write_int(&_x.suffix, _s);
    runtime::write_int(&_x.size, _s);
    match &_x.kind {
        rcc_node_kind::rcc_CNST { value } => {
            runtime::write_int(value, _s);
        }
        rcc_node_kind::rcc_CNSTF { value } => {
            rcc_write_real(value, _s);
        }
        rcc_node_kind::rcc_ARG { left, len, align } => {
            rcc_write_node(left, _s);
            runtime::write_int(len, _s);
            runtime::write_int(align, _s);
        }
        rcc_node_kind::rcc_ASGN { left, right, len, align } => {
            rcc_write_node(left, _s);
            rcc_write_node(right, _s);
            runtime::write_int(len, _s);
            runtime::write_int(align, _s);
        }
        rcc_node_kind::rcc_CVT { op, left, fromsize } => {
            runtime::write_int(op, _s);
            rcc_write_node(left, _s);
            runtime::write_int(fromsize, _s);
        }
        rcc_node_kind::rcc_CALL { left, r#type } => {
            rcc_write_node(left, _s);
            runtime::write_int(r#type, _s);
        }
        rcc_node_kind::rcc_CALLB { left, right, r#type } => {
            rcc_write_node(left, _s);
            rcc_write_node(right, _s);
            runtime::write_int(r#type, _s);
        }
        rcc_node_kind::rcc_RET => {}
        rcc_node_kind::rcc_ADDRG { uid } => {
            runtime::write_int(uid, _s);
        }
        rcc_node_kind::rcc_ADDRL { uid } => {
            runtime::write_int(uid, _s);
        }
        rcc_node_kind::rcc_ADDRF { uid } => {
            runtime::write_int(uid, _s);
        }
        rcc_node_kind::rcc_Unary { op, left } => {
            runtime::write_int(op, _s);
            rcc_write_node(left, _s);
        }
        rcc_node_kind::rcc_Binary { op, left, right } => {
            runtime::write_int(op, _s);
            rcc_write_node(left, _s);
            rcc_write_node(right, _s);
        }
        rcc_node_kind::rcc_Compare { op, left, right, label } => {
            runtime::write_int(op, _s);
            rcc_write_node(left, _s);
            rcc_write_node(right, _s);
            runtime::write_int(label, _s);
        }
        rcc_node_kind::rcc_LABEL { label } => {
            runtime::write_int(label, _s);
        }
        rcc_node_kind::rcc_BRANCH { label } => {
            runtime::write_int(label, _s);
        }
        rcc_node_kind::rcc_CSE { uid, node } => {
            runtime::write_int(uid, _s);
            rcc_write_node(node, _s);
        }
    }
}

pub fn rcc_real(msb: i64, lsb: i64) -> rcc_real_ty {
    Box::new(rcc_real_s { msb, lsb })
}

pub fn rcc_read_real(_s: &mut InStream<'_>) -> runtime::Result<rcc_real_ty> {
    let msb = runtime::read_int(_s)?;
    let lsb = runtime::read_int(_s)?;
    Ok(rcc_real(msb, lsb))
}

pub fn rcc_write_real(_x: &rcc_real_ty, _s: &mut OutStream) {
    runtime::write_int(&_x.msb, _s);
    runtime::write_int(&_x.lsb, _s);
}

pub fn rcc_Export(p: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Export { p } })
}

pub fn rcc_Import(p: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Import { p } })
}

pub fn rcc_Global(p: i64, seg: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Global { p, seg } })
}

pub fn rcc_Local(uid: i64, p: rcc_symbol_ty) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Local { uid, p } })
}

pub fn rcc_Address(uid: i64, q: rcc_symbol_ty, p: i64, n: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Address { uid, q, p, n } })
}

pub fn rcc_Segment(seg: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Segment { seg } })
}

pub fn rcc_Defaddress(p: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Defaddress { p } })
}

pub fn rcc_Deflabel(label: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Deflabel { label } })
}

pub fn rcc_Defconst(suffix: i64, size: i64, value: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Defconst { suffix, size, value } })
}

pub fn rcc_Defconstf(size: i64, value: rcc_real_ty) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Defconstf { size, value } })
}

pub fn rcc_Defstring(s: String) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Defstring { s } })
}

pub fn rcc_Space(n: i64) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Space { n } })
}

pub fn rcc_Function(f: i64, caller: Vec<i64>, callee: Vec<i64>, ncalls: i64, codelist: Vec<rcc_interface_ty>) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Function { f, caller, callee, ncalls, codelist } })
}

pub fn rcc_Blockbeg() -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Blockbeg })
}

pub fn rcc_Blockend() -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Blockend })
}

pub fn rcc_Forest(nodes: Vec<rcc_node_ty>) -> rcc_interface_ty {
    Box::new(rcc_interface_s { kind: rcc_interface_kind::rcc_Forest { nodes } })
}

pub fn rcc_read_interface(_s: &mut InStream<'_>) -> runtime::Result<rcc_interface_ty> {
    let _offset = _s.position();
    let _tag = runtime::read_tag(_s)?;
    Ok(match _tag {
        1 => {
            let p = runtime::read_int(_s)?;
            rcc_Export(p)
        }
        2 => {
            let p = runtime::read_int(_s)?;
            rcc_Import(p)
        }
        3 => {
            let p = runtime::read_int(_s)?;
            let seg = runtime::read_int(_s)?;
            rcc_Global(p, seg)
        }
        4 => {
            let uid = runtime::read_int(_s)?;
            let p = rcc_read_symbol(_s)?;
            rcc_Local(uid, p)
        }
        5 => {
            let uid = runtime::read_int(_s)?;
            let q = rcc_read_symbol(_s)?;
            let p = runtime::read_int(_s)?;
            let n = runtime::read_int(_s)?;
            rcc_Address(uid, q, p, n)
        }
        6 => {
            let seg = runtime::read_int(_s)?;
            rcc_Segment(seg)
        }
        7 => {
            let p = runtime::read_int(_s)?;
            rcc_Defaddress(p)
        }
        8 => {
            let label = runtime::read_int(_s)?;
            rcc_Deflabel(label)
        }
        9 => {
            let suffix = runtime::read_int(_s)?;
            let size = runtime::read_int(_s)?;
            let value = runtime::read_int(_s)?;
            rcc_Defconst(suffix, size, value)
        }
        10 => {
            let size = runtime::read_int(_s)?;
            let value = rcc_read_real(_s)?;
            rcc_Defconstf(size, value)
        }
        11 => {
            let s = runtime::read_string(_s)?;
            rcc_Defstring(s)
        }
        12 => {
            let n = runtime::read_int(_s)?;
            rcc_Space(n)
        }
        13 => {
            let f = runtime::read_int(_s)?;
            let caller = runtime::read_list(_s, runtime::read_int)?;
            let callee = runtime::read_list(_s, runtime::read_int)?;
            let ncalls = runtime::read_int(_s)?;
            let codelist = runtime::read_list(_s, rcc_read_interface)?;
            rcc_Function(f, caller, callee, ncalls, codelist)
        }
        14 => {
            rcc_Blockbeg()
        }
        15 => {
            rcc_Blockend()
        }
        16 => {
            let nodes = runtime::read_list(_s, rcc_read_node)?;
            rcc_Forest(nodes)
        }
        _ => return Err(runtime::bad_tag("interface", _tag, _offset)),
    })
}

pub fn rcc_write_interface(_x: &rcc_interface_ty, _s: &mut OutStream) {
    runtime::write_tag(_x.kind.tag(), _s);
    match &_x.kind {
        rcc_interface_kind::rcc_Export { p } => {
            runtime::write_int(p, _s);
        }
        rcc_interface_kind::rcc_Import { p } => {
            runtime::write_int(p, _s);
        }
        rcc_interface_kind::rcc_Global { p, seg } => {
            runtime::write_int(p, _s);
            runtime::write_int(seg, _s);
        }
        rcc_interface_kind::rcc_Local { uid, p } => {
            runtime::write_int(uid, _s);
            rcc_write_symbol(p, _s);
        }
        rcc_interface_kind::rcc_Address { uid, q, p, n } => {
            runtime::write_int(uid, _s);
            rcc_write_symbol(q, _s);
            runtime::write_int(p, _s);
            runtime::write_int(n, _s);
        }
        rcc_interface_kind::rcc_Segment { seg } => {
            runtime::write_int(seg, _s);
        }
        rcc_interface_kind::rcc_Defaddress { p } => {
            runtime::write_int(p, _s);
        }
        rcc_interface_kind::rcc_Deflabel { label } => {
            runtime::write_int(label, _s);
        }
        rcc_interface_kind::rcc_Defconst { suffix, size, value } => {
            runtime::write_int(suffix, _s);
            runtime::write_int(size, _s);
            runtime::write_int(value, _s);
        }
        rcc_interface_kind::rcc_Defconstf { size, value } => {
            runtime::write_int(size, _s);
            rcc_write_real(value, _s);
        }
        rcc_interface_kind::rcc_Defstring { s } => {
            runtime::write_string(s, _s);
        }
        rcc_interface_kind::rcc_Space { n } => {
            runtime::write_int(n, _s);
        }
        rcc_interface_kind::rcc_Function { f, caller, callee, ncalls, codelist } => {
            runtime::write_int(f, _s);
            runtime::write_list(caller, _s, |_v, _s| runtime::write_int(_v, _s));
            runtime::write_list(callee, _s, |_v, _s| runtime::write_int(_v, _s));
            runtime::write_int(ncalls, _s);
            runtime::write_list(codelist, _s, |_v, _s| rcc_write_interface(_v, _s));
        }
        rcc_interface_kind::rcc_Blockbeg => {}
        rcc_interface_kind::rcc_Blockend => {}
        rcc_interface_kind::rcc_Forest { nodes } => {
            runtime::write_list(nodes, _s, |_v, _s| rcc_write_node(_v, _s));
        }
    }
}
