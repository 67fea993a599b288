// Generated from module fig9 by asdl. Do not edit.
#![allow(non_camel_case_types, non_snake_case, dead_code, clippy::all)]

use asdl::runtime::{self, InStream, OutStream};

pub type fig9_node_ty = Box<fig9_node_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct fig9_node_s {
    pub suffix: i64,
    pub size: i64,
    pub kind: fig9_node_kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum fig9_node_kind {
    fig9_CNST { value: i64 },
    fig9_CNSTF { value: fig9_real_ty },
    fig9_ARG { left: fig9_node_ty, len: i64, align: i64 },
    fig9_ASGN { left: fig9_node_ty, right: fig9_node_ty },
    fig9_CVT { op: i64, left: fig9_node_ty, fromsize: i64 },
    fig9_CALL { left: fig9_node_ty, r#type: i64 },
    fig9_CALLB { left: fig9_node_ty, right: fig9_node_ty, r#type: i64 },
    fig9_RET,
    fig9_ADDRG { uid: i64 },
    fig9_ADDRL { uid: i64 },
    fig9_ADDRF { uid: i64 },
    fig9_Unary { op: i64, left: fig9_node_ty },
    fig9_Binary { op: i64, left: fig9_node_ty, right: fig9_node_ty },
    fig9_Compare { op: i64, left: fig9_node_ty, right: fig9_node_ty, label: i64 },
    fig9_LABEL { label: i64 },
    fig9_BRANCH { label: i64 },
    fig9_CSE { uid: i64, node: fig9_node_ty },
}

impl fig9_node_kind {
    pub fn tag(&self) -> u32 {
        match self {
            fig9_node_kind::fig9_CNST { .. } => 1,
            fig9_node_kind::fig9_CNSTF { .. } => 2,
            fig9_node_kind::fig9_ARG { .. } => 3,
            fig9_node_kind::fig9_ASGN { .. } => 4,
            fig9_node_kind::fig9_CVT { .. } => 5,
            fig9_node_kind::fig9_CALL { .. } => 6,
            fig9_node_kind::fig9_CALLB { .. } => 7,
            fig9_node_kind::fig9_RET => 8,
            fig9_node_kind::fig9_ADDRG { .. } => 9,
            fig9_node_kind::fig9_ADDRL { .. } => 10,
            fig9_node_kind::fig9_ADDRF { .. } => 11,
            fig9_node_kind::fig9_Unary { .. } => 12,
            fig9_node_kind::fig9_Binary { .. } => 13,
            fig9_node_kind::fig9_Compare { .. } => 14,
            fig9_node_kind::fig9_LABEL { .. } => 15,
            fig9_node_kind::fig9_BRANCH { .. } => 16,
            fig9_node_kind::fig9_CSE { .. } => 17,
        }
    }
}

pub type fig9_real_ty = Box<fig9_real_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct fig9_real_s {
    pub msb: i64,
    pub lsb: i64,
}

pub fn fig9_CNST(suffix: i64, size: i64, value: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_CNST { value } })
}

pub fn fig9_CNSTF(suffix: i64, size: i64, value: fig9_real_ty) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_CNSTF { value } })
}

pub fn fig9_ARG(suffix: i64, size: i64, left: fig9_node_ty, len: i64, align: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_ARG { left, len, align } })
}

pub fn fig9_ASGN(suffix: i64, size: i64, left: fig9_node_ty, right: fig9_node_ty) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_ASGN { left, right } })
}

pub fn fig9_CVT(suffix: i64, size: i64, op: i64, left: fig9_node_ty, fromsize: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_CVT { op, left, fromsize } })
}

pub fn fig9_CALL(suffix: i64, size: i64, left: fig9_node_ty, r#type: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_CALL { left, r#type } })
}

pub fn fig9_CALLB(suffix: i64, size: i64, left: fig9_node_ty, right: fig9_node_ty, r#type: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_CALLB { left, right, r#type } })
}

pub fn fig9_RET(suffix: i64, size: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_RET })
}

pub fn fig9_ADDRG(suffix: i64, size: i64, uid: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_ADDRG { uid } })
}

pub fn fig9_ADDRL(suffix: i64, size: i64, uid: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_ADDRL { uid } })
}

pub fn fig9_ADDRF(suffix: i64, size: i64, uid: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_ADDRF { uid } })
}

pub fn fig9_Unary(suffix: i64, size: i64, op: i64, left: fig9_node_ty) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_Unary { op, left } })
}

pub fn fig9_Binary(suffix: i64, size: i64, op: i64, left: fig9_node_ty, right: fig9_node_ty) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_Binary { op, left, right } })
}

pub fn fig9_Compare(suffix: i64, size: i64, op: i64, left: fig9_node_ty, right: fig9_node_ty, label: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_Compare { op, left, right, label } })
}

pub fn fig9_LABEL(suffix: i64, size: i64, label: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_LABEL { label } })
}

pub fn fig9_BRANCH(suffix: i64, size: i64, label: i64) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_BRANCH { label } })
}

pub fn fig9_CSE(suffix: i64, size: i64, uid: i64, node: fig9_node_ty) -> fig9_node_ty {
    Box::new(fig9_node_s { suffix, size, kind: fig9_node_kind::fig9_CSE { uid, node } })
}

pub fn fig9_read_node(_s: &mut InStream<'_>) -> runtime::Result<fig9_node_ty> {
    let _offset = _s.position();
    let _tag = runtime::read_tag(_s)?;
    let suffix = runtime::read_int(_s)?;
    let size = runtime::read_int(_s)?;
    Ok(match _tag {
        1 => {
            let value = runtime::read_int(_s)?;
            fig9_CNST(suffix, size, value)
        }
        2 => {
            let value = fig9_read_real(_s)?;
            fig9_CNSTF(suffix, size, value)
        }
        3 => {
            let left = fig9_read_node(_s)?;
            let len = runtime::read_int(_s)?;
            let align = runtime::read_int(_s)?;
            fig9_ARG(suffix, size, left, len, align)
        }
        4 => {
            let left = fig9_read_node(_s)?;
            let right = fig9_read_node(_s)?;
            fig9_ASGN(suffix, size, left, right)
        }
        5 => {
            let op = runtime::read_int(_s)?;
            let left = fig9_read_node(_s)?;
            let fromsize = runtime::read_int(_s)?;
            fig9_CVT(suffix, size, op, left, fromsize)
        }
        6 => {
            let left = fig9_read_node(_s)?;
            let r#type = runtime::read_int(_s)?;
            fig9_CALL(suffix, size, left, r#type)
        }
        7 => {
            let left = fig9_read_node(_s)?;
            let right = fig9_read_node(_s)?;
            let r#type = runtime::read_int(_s)?;
            fig9_CALLB(suffix, size, left, right, r#type)
        }
        8 => {
            fig9_RET(suffix, size)
        }
        9 => {
            let uid = runtime::read_int(_s)?;
            fig9_ADDRG(suffix, size, uid)
        }
        10 => {
            let uid = runtime::read_int(_s)?;
            fig9_ADDRL(suffix, size, uid)
        }
        11 => {
            let uid = runtime::read_int(_s)?;
            fig9_ADDRF(suffix, size, uid)
        }
        12 => {
            let op = runtime::read_int(_s)?;
            let left = fig9_read_node(_s)?;
            fig9_Unary(suffix, size, op, left)
        }
        13 => {
            let op = runtime::read_int(_s)?;
            let left = fig9_read_node(_s)?;
            let right = fig9_read_node(_s)?;
            fig9_Binary(suffix, size, op, left, right)
        }
        14 => {
            let op = runtime::read_int(_s)?;
            let left = fig9_read_node(_s)?;
            let right = fig9_read_node(_s)?;
            let label = runtime::read_int(_s)?;
            fig9_Compare(suffix, size, op, left, right, label)
        }
        15 => {
            let label = runtime::read_int(_s)?;
            fig9_LABEL(suffix, size, label)
        }
        16 => {
            let label = runtime::read_int(_s)?;
            fig9_BRANCH(suffix, size, label)
        }
        17 => {
            let uid = runtime::read_int(_s)?;
            let node = fig9_read_node(_s)?;
            fig9_CSE(suffix, size, uid, node)
        }
        _ => return Err(runtime::bad_tag("node", _tag, _offset)),
    })
}

pub fn fig9_write_node(_x: &fig9_node_ty, _s: &mut OutStream) {
    runtime::write_tag(_x.kind.tag(), _s);
    runtime::write_int(&_x.suffix, _s);
    runtime::write_int(&_x.size, _s);
    match &_x.kind {
        fig9_node_kind::fig9_CNST { value } => {
            runtime::write_int(value, _s);
        }
        fig9_node_kind::fig9_CNSTF { value } => {
            fig9_write_real(value, _s);
        }
        fig9_node_kind::fig9_ARG { left, len, align } => {
            fig9_write_node(left, _s);
            runtime::write_int(len, _s);
            runtime::write_int(align, _s);
        }
        fig9_node_kind::fig9_ASGN { left, right } => {
            fig9_write_node(left, _s);
            fig9_write_node(right, _s);
        }
        fig9_node_kind::fig9_CVT { op, left, fromsize } => {
            runtime::write_int(op, _s);
            fig9_write_node(left, _s);
            runtime::write_int(fromsize, _s);
        }
        fig9_node_kind::fig9_CALL { left, r#type } => {
            fig9_write_node(left, _s);
            runtime::write_int(r#type, _s);
        }
        fig9_node_kind::fig9_CALLB { left, right, r#type } => {
            fig9_write_node(left, _s);
            fig9_write_node(right, _s);
            runtime::write_int(r#type, _s);
        }
        fig9_node_kind::fig9_RET => {}
        fig9_node_kind::fig9_ADDRG { uid } => {
            runtime::write_int(uid, _s);
        }
        fig9_node_kind::fig9_ADDRL { uid } => {
            runtime::write_int(uid, _s);
        }
        fig9_node_kind::fig9_ADDRF { uid } => {
            runtime::write_int(uid, _s);
        }
        fig9_node_kind::fig9_Unary { op, left } => {
            runtime::write_int(op, _s);
            fig9_write_node(left, _s);
        }
        fig9_node_kind::fig9_Binary { op, left, right } => {
            runtime::write_int(op, _s);
            fig9_write_node(left, _s);
            fig9_write_node(right, _s);
        }
        fig9_node_kind::fig9_Compare { op, left, right, label } => {
            runtime::write_int(op, _s);
            fig9_write_node(left, _s);
            fig9_write_node(right, _s);
            runtime::write_int(label, _s);
        }
        fig9_node_kind::fig9_LABEL { label } => {
            runtime::write_int(label, _s);
        }
        fig9_node_kind::fig9_BRANCH { label } => {
            runtime::write_int(label, _s);
        }
        fig9_node_kind::fig9_CSE { uid, node } => {
            runtime::write_int(uid, _s);
            fig9_write_node(node, _s);
        }
    }
}

pub fn fig9_real(msb: i64, lsb: i64) -> fig9_real_ty {
    Box::new(fig9_real_s { msb, lsb })
}

pub fn fig9_read_real(_s: &mut InStream<'_>) -> runtime::Result<fig9_real_ty> {
    let msb = runtime::read_int(_s)?;
    let lsb = runtime::read_int(_s)?;
    Ok(fig9_real(msb, lsb))
}

pub fn fig9_write_real(_x: &fig9_real_ty, _s: &mut OutStream) {
    runtime::write_int(&_x.msb, _s);
    runtime::write_int(&_x.lsb, _s);
}
