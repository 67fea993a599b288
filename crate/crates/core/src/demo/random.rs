//! Random well-typed source programs, for comparing the split and
//! monolithic compilers.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::front::CType;
use super::lang::Base;

struct Gen {
    rng: ChaCha8Rng,
    vars: Vec<(String, CType)>,
}

const TYPES: [CType; 6] = [
    CType::INT,
    CType::CHAR,
    CType {
        base: Base::Int,
        pointers: 1,
    },
    CType {
        base: Base::Char,
        pointers: 1,
    },
    CType {
        base: Base::Char,
        pointers: 2,
    },
    CType {
        base: Base::Int,
        pointers: 2,
    },
];

fn decl(name: &str, ty: CType) -> String {
    let base = match ty.base {
        Base::Int => "int",
        Base::Char => "char",
    };
    format!("{base} {}{name};", "*".repeat(ty.pointers as usize))
}

impl Gen {
    fn vars_of(&self, pred: impl Fn(CType) -> bool) -> Vec<(String, CType)> {
        self.vars.iter().filter(|(_, t)| pred(*t)).cloned().collect()
    }

    fn pick(&mut self, pred: impl Fn(CType) -> bool) -> Option<(String, CType)> {
        let vs = self.vars_of(pred);
        vs.choose(&mut self.rng).cloned()
    }

    /// An expression of type `int` (chars promote).
    fn int_expr(&mut self, depth: u32) -> String {
        let choice = if depth == 0 {
            self.rng.gen_range(0..3)
        } else {
            self.rng.gen_range(0..8)
        };
        match choice {
            1 | 2 => {
                if let Some((v, _)) = self.pick(|t| !t.is_pointer()) {
                    return v;
                }
            }
            3 => {
                if let Some((p, _)) = self.pick(|t| t.pointers == 1) {
                    return if self.rng.gen_bool(0.5) {
                        format!("*{p}")
                    } else {
                        format!("*{p}++")
                    };
                }
            }
            4 => return format!("-{}", self.int_expr(depth - 1)),
            5..=7 => {
                let op = ["+", "-", "*", "/"].choose(&mut self.rng).copied().unwrap_or("+");
                let l = self.int_expr(depth - 1);
                let r = self.int_expr(depth - 1);
                return format!("({l} {op} {r})");
            }
            _ => {}
        }
        self.rng.gen_range(0..100).to_string()
    }

    /// An expression of pointer type `ty`, if one can be formed.
    fn pointer_expr(&mut self, ty: CType, depth: u32) -> Option<String> {
        let same = self.pick(|t| t == ty);
        let to_ty = self.pick(|t| t.pointee() == Some(ty));
        match (self.rng.gen_range(0..4), same, to_ty) {
            (0, Some((v, _)), _) => Some(v),
            (1, Some((v, _)), _) => Some(format!("{v}++")),
            (2, Some((v, _)), _) => Some(format!("{v} + {}", self.int_expr(depth.min(1)))),
            (3, _, Some((pp, _))) => Some(format!("*{pp}")),
            (_, Some((v, _)), _) => Some(v),
            (_, None, Some((pp, _))) => Some(format!("*{pp}")),
            _ => None,
        }
    }

    fn stmt(&mut self) -> Option<String> {
        match self.rng.gen_range(0..5) {
            0 => Some(format!("print({});", self.int_expr(2))),
            1 => {
                let (v, ty) = self.pick(|_| true)?;
                let e = if ty.is_pointer() {
                    self.pointer_expr(ty, 2)?
                } else {
                    self.int_expr(2)
                };
                Some(format!("{v} = {e};"))
            }
            2 => {
                let (p, ty) = self.pick(CType::is_pointer)?;
                let to = ty.pointee()?;
                let e = if to.is_pointer() {
                    self.pointer_expr(to, 1)?
                } else {
                    self.int_expr(2)
                };
                let inc = if self.rng.gen_bool(0.5) { "++" } else { "" };
                Some(format!("*{p}{inc} = {e};"))
            }
            3 => {
                let (p, _) = self.pick(CType::is_pointer)?;
                Some(format!("{p}++;"))
            }
            _ => {
                let (v, _) = self.pick(|t| !t.is_pointer())?;
                Some(format!("{v} = {v} + {v};"))
            }
        }
    }
}

/// A random program determined by `seed`. Some seeds give the empty program.
pub fn random_program(seed: u64) -> String {
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        vars: Vec::new(),
    };
    if g.rng.gen_ratio(1, 20) {
        return String::new();
    }
    let mut lines = Vec::new();
    let nvars = g.rng.gen_range(1..=6);
    for i in 0..nvars {
        // Some programs declare names that look like temporaries.
        let name = if i == 0 && g.rng.gen_bool(0.2) {
            "t1".to_string()
        } else {
            format!("v{i}")
        };
        let ty = *TYPES.choose(&mut g.rng).unwrap_or(&CType::INT);
        lines.push(decl(&name, ty));
        g.vars.push((name, ty));
    }
    for _ in 0..g.rng.gen_range(0..10) {
        if let Some(s) = g.stmt() {
            lines.push(s);
        }
    }
    lines.join("\n") + "\n"
}
