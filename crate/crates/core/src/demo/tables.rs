//! Integer codes used in `rcc` pickles.

/// Generic operators, coded 1..=33 in this order.
pub const OPERATORS: [&str; 33] = [
    "CNST", "ARG", "ASGN", "INDIR", "CVF", "CVI", "CVP", "CVU", "NEG", "CALL", "RET", "ADDRG", "ADDRF", "ADDRL", "ADD",
    "SUB", "LSH", "MOD", "RSH", "BAND", "BCOM", "BOR", "BXOR", "DIV", "MUL", "EQ", "GE", "GT", "LE", "LT", "NE",
    "JUMP", "LABEL",
];

pub fn op_code(name: &str) -> Option<i64> {
    OPERATORS.iter().position(|&o| o == name).map(|i| i as i64 + 1)
}

pub fn op_name(code: i64) -> Option<&'static str> {
    usize::try_from(code)
        .ok()
        .and_then(|c| c.checked_sub(1))
        .and_then(|i| OPERATORS.get(i).copied())
}

/// Type suffixes of operators and nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suffix {
    F = 0,
    I = 1,
    U = 2,
    P = 3,
    B = 4,
    V = 5,
}

impl Suffix {
    pub const ALL: [Suffix; 6] = [Suffix::F, Suffix::I, Suffix::U, Suffix::P, Suffix::B, Suffix::V];

    pub fn code(self) -> i64 {
        self as i64
    }

    pub fn from_code(code: i64) -> Option<Suffix> {
        usize::try_from(code).ok().and_then(|i| Suffix::ALL.get(i).copied())
    }

    pub fn letter(self) -> char {
        match self {
            Suffix::F => 'F',
            Suffix::I => 'I',
            Suffix::U => 'U',
            Suffix::P => 'P',
            Suffix::B => 'B',
            Suffix::V => 'V',
        }
    }
}

pub mod scope {
    pub const CONSTANTS: i64 = 1;
    pub const LABELS: i64 = 2;
    pub const GLOBAL: i64 = 3;
    pub const PARAM: i64 = 4;
    pub const LOCAL: i64 = 5;
}

pub mod sclass {
    pub const AUTO: i64 = 1;
    pub const REGISTER: i64 = 2;
    pub const STATIC: i64 = 3;
    pub const EXTERN: i64 = 4;
    pub const TYPEDEF: i64 = 5;
}

/// Bits of a symbol's `flags` field.
pub mod flags {
    pub const ADDRESSED: i64 = 1;
    pub const TEMPORARY: i64 = 2;
    pub const GENERATED: i64 = 4;
    pub const DEFINED: i64 = 8;
}

pub mod segment {
    pub const CODE: i64 = 1;
    pub const BSS: i64 = 2;
    pub const DATA: i64 = 3;
    pub const LIT: i64 = 4;

    pub fn name(seg: i64) -> Option<&'static str> {
        match seg {
            CODE => Some("CODE"),
            BSS => Some("BSS"),
            DATA => Some("DATA"),
            LIT => Some("LIT"),
            _ => None,
        }
    }
}

/// Symbolic names for the `suffix` attribute of `node`, for XML output.
pub fn xml_options() -> crate::pickle::XmlOptions {
    let mut options = crate::pickle::XmlOptions::default();
    let names = Suffix::ALL.map(|s| (s.code(), s.letter().to_string()));
    options.symbols.insert("node", "suffix", names.clone());
    options.symbols.insert("Defconst", "suffix", names);
    options
}
