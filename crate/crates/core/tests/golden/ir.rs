// Generated from module IR by asdl. Do not edit.
#![allow(non_camel_case_types, non_snake_case, dead_code, clippy::all)]

use asdl::runtime::{self, InStream, OutStream};

pub type IR_stm_ty = Box<IR_stm_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IR_stm_s {
    pub kind: IR_stm_kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IR_stm_kind {
    IR_SEQ { stm1: IR_stm_ty, stm2: IR_stm_ty },
    IR_ASGN { identifier1: runtime::Identifier, exp1: IR_exp_ty },
    IR_PRINT { exp_list1: Vec<IR_exp_ty> },
}

impl IR_stm_kind {
    pub fn tag(&self) -> u32 {
        match self {
            IR_stm_kind::IR_SEQ { .. } => 1,
            IR_stm_kind::IR_ASGN { .. } => 2,
            IR_stm_kind::IR_PRINT { .. } => 3,
        }
    }
}

pub type IR_exp_ty = Box<IR_exp_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IR_exp_s {
    pub kind: IR_exp_kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IR_exp_kind {
    IR_OP { binop1: IR_binop_ty, exp1: IR_exp_ty, exp2: IR_exp_ty },
    IR_ID { identifier1: runtime::Identifier },
    IR_ICON { int1: i64 },
    IR_RCON { real1: IR_real_ty },
}

impl IR_exp_kind {
    pub fn tag(&self) -> u32 {
        match self {
            IR_exp_kind::IR_OP { .. } => 1,
            IR_exp_kind::IR_ID { .. } => 2,
            IR_exp_kind::IR_ICON { .. } => 3,
            IR_exp_kind::IR_RCON { .. } => 4,
        }
    }
}

pub type IR_real_ty = Box<IR_real_s>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IR_real_s {
    pub int1: i64,
    pub int2: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u32)]
pub enum IR_binop_ty {
    IR_ADD = 1,
    IR_SUB = 2,
    IR_MUL = 3,
    IR_DIV = 4,
}

pub fn IR_SEQ(stm1: IR_stm_ty, stm2: IR_stm_ty) -> IR_stm_ty {
    Box::new(IR_stm_s { kind: IR_stm_kind::IR_SEQ { stm1, stm2 } })
}

pub fn IR_ASGN(identifier1: runtime::Identifier, exp1: IR_exp_ty) -> IR_stm_ty {
    Box::new(IR_stm_s { kind: IR_stm_kind::IR_ASGN { identifier1, exp1 } })
}

pub fn IR_PRINT(exp_list1: Vec<IR_exp_ty>) -> IR_stm_ty {
    Box::new(IR_stm_s { kind: IR_stm_kind::IR_PRINT { exp_list1 } })
}

pub fn IR_read_stm(_s: &mut InStream<'_>) -> runtime::Result<IR_stm_ty> {
    let _offset = _s.position();
    let _tag = runtime::read_tag(_s)?;
    Ok(match _tag {
        1 => {
            let stm1 = IR_read_stm(_s)?;
            let stm2 = IR_read_stm(_s)?;
            IR_SEQ(stm1, stm2)
        }
        2 => {
            let identifier1 = runtime::read_identifier(_s)?;
            let exp1 = IR_read_exp(_s)?;
            IR_ASGN(identifier1, exp1)
        }
        3 => {
            let exp_list1 = runtime::read_list(_s, IR_read_exp)?;
            IR_PRINT(exp_list1)
        }
        _ => return Err(runtime::bad_tag("stm", _tag, _offset)),
    })
}

pub fn IR_write_stm(_x: &IR_stm_ty, _s: &mut OutStream) {
    runtime::write_tag(_x.kind.tag(), _s);
    match &_x.kind {
        IR_stm_kind::IR_SEQ { stm1, stm2 } => {
            IR_write_stm(stm1, _s);
            IR_write_stm(stm2, _s);
        }
        IR_stm_kind::IR_ASGN { identifier1, exp1 } => {
            runtime::write_identifier(identifier1, _s);
            IR_write_exp(exp1, _s);
        }
        IR_stm_kind::IR_PRINT { exp_list1 } => {
            runtime::write_list(exp_list1, _s, |_v, _s| IR_write_exp(_v, _s));
        }
    }
}

pub fn IR_OP(binop1: IR_binop_ty, exp1: IR_exp_ty, exp2: IR_exp_ty) -> IR_exp_ty {
    Box::new(IR_exp_s { kind: IR_exp_kind::IR_OP { binop1, exp1, exp2 } })
}

pub fn IR_ID(identifier1: runtime::Identifier) -> IR_exp_ty {
    Box::new(IR_exp_s { kind: IR_exp_kind::IR_ID { identifier1 } })
}

pub fn IR_ICON(int1: i64) -> IR_exp_ty {
    Box::new(IR_exp_s { kind: IR_exp_kind::IR_ICON { int1 } })
}

pub fn IR_RCON(real1: IR_real_ty) -> IR_exp_ty {
    Box::new(IR_exp_s { kind: IR_exp_kind::IR_RCON { real1 } })
}

pub fn IR_read_exp(_s: &mut InStream<'_>) -> runtime::Result<IR_exp_ty> {
    let _offset = _s.position();
    let _tag = runtime::read_tag(_s)?;
    Ok(match _tag {
        1 => {
            let binop1 = IR_read_binop(_s)?;
            let exp1 = IR_read_exp(_s)?;
            let exp2 = IR_read_exp(_s)?;
            IR_OP(binop1, exp1, exp2)
        }
        2 => {
            let identifier1 = runtime::read_identifier(_s)?;
            IR_ID(identifier1)
        }
        3 => {
            let int1 = runtime::read_int(_s)?;
            IR_ICON(int1)
        }
        4 => {
            let real1 = IR_read_real(_s)?;
            IR_RCON(real1)
        }
        _ => return Err(runtime::bad_tag("exp", _tag, _offset)),
    })
}

pub fn IR_write_exp(_x: &IR_exp_ty, _s: &mut OutStream) {
    runtime::write_tag(_x.kind.tag(), _s);
    match &_x.kind {
        IR_exp_kind::IR_OP { binop1, exp1, exp2 } => {
            IR_write_binop(binop1, _s);
            IR_write_exp(exp1, _s);
            IR_write_exp(exp2, _s);
        }
        IR_exp_kind::IR_ID { identifier1 } => {
            runtime::write_identifier(identifier1, _s);
        }
        IR_exp_kind::IR_ICON { int1 } => {
            runtime::write_int(int1, _s);
        }
        IR_exp_kind::IR_RCON { real1 } => {
            IR_write_real(real1, _s);
        }
    }
}

pub fn IR_real(int1: i64, int2: i64) -> IR_real_ty {
    Box::new(IR_real_s { int1, int2 })
}

pub fn IR_read_real(_s: &mut InStream<'_>) -> runtime::Result<IR_real_ty> {
    let int1 = runtime::read_int(_s)?;
    let int2 = runtime::read_int(_s)?;
    Ok(IR_real(int1, int2))
}

pub fn IR_write_real(_x: &IR_real_ty, _s: &mut OutStream) {
    runtime::write_int(&_x.int1, _s);
    runtime::write_int(&_x.int2, _s);
}

pub fn IR_ADD() -> IR_binop_ty {
    IR_binop_ty::IR_ADD
}

pub fn IR_SUB() -> IR_binop_ty {
    IR_binop_ty::IR_SUB
}

pub fn IR_MUL() -> IR_binop_ty {
    IR_binop_ty::IR_MUL
}

pub fn IR_DIV() -> IR_binop_ty {
    IR_binop_ty::IR_DIV
}

pub fn IR_read_binop(_s: &mut InStream<'_>) -> runtime::Result<IR_binop_ty> {
    let _offset = _s.position();
    let _tag = runtime::read_tag(_s)?;
    Ok(match _tag {
        1 => IR_binop_ty::IR_ADD,
        2 => IR_binop_ty::IR_SUB,
        3 => IR_binop_ty::IR_MUL,
        4 => IR_binop_ty::IR_DIV,
        _ => return Err(runtime::bad_tag("binop", _tag, _offset)),
    })
}

pub fn IR_write_binop(_x: &IR_binop_ty, _s: &mut OutStream) {
    runtime::write_tag(*_x as u32, _s);
}
