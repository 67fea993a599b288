//! Seeded random generation of conforming values, for property tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Atom, Value};
use crate::sema::{Builtin, FieldDef, SchemaEnv, TypeKind, TypeRef};

pub const DEFAULT_MAX_DEPTH: u32 = 12;

/// Probability of allowing a deeper-than-necessary constructor shrinks by
/// this factor per level.
const DEPTH_DECAY: f64 = 0.7;
const MAX_LIST_LEN: usize = 4;
const STRING_ALPHABET: &[char] = &[
    'a', 'b', 'z', 'Q', '0', '9', ' ', '_', '-', '<', '>', '&', '"', '\'', '\t', '\n', 'é', 'λ', '字', '🦀',
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("unknown type `{0}`")]
    UnknownType(String),
    #[error("type `{0}` has no finite values within depth {1}")]
    Uninhabited(String, u32),
}

pub struct ValueGenerator<'a> {
    env: &'a SchemaEnv,
    rng: ChaCha8Rng,
    max_depth: u32,
    /// Minimum nesting depth of any value of each defined type; absent means
    /// the type has no finite values.
    min_height: HashMap<String, u32>,
}

impl<'a> ValueGenerator<'a> {
    pub fn new(env: &'a SchemaEnv, seed: u64) -> Self {
        ValueGenerator {
            env,
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_depth: DEFAULT_MAX_DEPTH,
            min_height: min_heights(env),
        }
    }

    pub fn with_max_depth(mut self, depth: u32) -> Self {
        self.max_depth = depth;
        self
    }

    pub fn generate(&mut self, type_name: &str) -> Result<Value, GenError> {
        let ty = match Builtin::from_name(type_name) {
            Some(b) => TypeRef::Builtin(b),
            None => {
                let def = self
                    .env
                    .resolve_type_name(type_name)
                    .ok_or_else(|| GenError::UnknownType(type_name.to_string()))?;
                TypeRef::Defined(def.name.clone())
            }
        };
        if self.height(&ty).is_none_or(|h| h > self.max_depth) {
            return Err(GenError::Uninhabited(type_name.to_string(), self.max_depth));
        }
        Ok(self.value(&ty, 0))
    }

    fn height(&self, ty: &TypeRef) -> Option<u32> {
        match ty {
            TypeRef::Builtin(_) => Some(0),
            TypeRef::Defined(name) => self.min_height.get(name).copied(),
        }
    }

    fn field_height(&self, field: &FieldDef) -> Option<u32> {
        if field.sequence {
            Some(0)
        } else {
            self.height(&field.ty)
        }
    }

    fn value(&mut self, ty: &TypeRef, depth: u32) -> Value {
        match ty {
            TypeRef::Builtin(Builtin::Int) => Value::Int(self.int()),
            TypeRef::Builtin(Builtin::String) => Value::String(self.text(STRING_ALPHABET)),
            TypeRef::Builtin(Builtin::Identifier) => Value::Identifier(self.identifier()),
            TypeRef::Defined(name) => {
                let env = self.env;
                let def = env.get(name).expect("checked schema");
                match &def.kind {
                    TypeKind::Product { fields } => Value::Product {
                        ty: Atom::new(name),
                        fields: fields.iter().map(|f| self.field(f, depth + 1)).collect(),
                    },
                    TypeKind::Sum {
                        constructors,
                        attributes,
                    } => {
                        let budget = self.max_depth.saturating_sub(depth);
                        let heights: Vec<u32> = constructors
                            .iter()
                            .map(|c| {
                                def.effective_fields(c)
                                    .map(|f| self.field_height(f))
                                    .try_fold(0, |acc, h| h.map(|h| acc.max(h)))
                                    .map_or(u32::MAX, |h| h + 1)
                            })
                            .collect();
                        let lowest = *heights.iter().min().expect("sum has constructors");
                        let explore = self.rng.gen_bool(DEPTH_DECAY.powi(depth as i32));
                        let choices: Vec<usize> = (0..constructors.len())
                            .filter(|&i| heights[i] <= budget && (explore || heights[i] == lowest))
                            .collect();
                        let pick = choices[self.rng.gen_range(0..choices.len())];
                        let ctor = &constructors[pick];
                        Value::Sum {
                            ty: Atom::new(name),
                            ctor: Atom::new(&ctor.name),
                            attrs: attributes.iter().map(|f| self.field(f, depth + 1)).collect(),
                            fields: ctor.fields.iter().map(|f| self.field(f, depth + 1)).collect(),
                        }
                    }
                }
            }
        }
    }

    fn field(&mut self, field: &FieldDef, depth: u32) -> Value {
        if !field.sequence {
            return self.value(&field.ty, depth);
        }
        let room = self.height(&field.ty).is_some_and(|h| depth + h <= self.max_depth);
        let len = if room {
            let cap = if depth > self.max_depth / 2 { 2 } else { MAX_LIST_LEN };
            self.rng.gen_range(0..=cap)
        } else {
            0
        };
        Value::List((0..len).map(|_| self.value(&field.ty, depth)).collect())
    }

    fn int(&mut self) -> BigInt {
        match self.rng.gen_range(0..10) {
            0 => BigInt::from(self.rng.gen::<i64>()),
            1 => BigInt::from(self.rng.gen_range(-100_000i64..100_000)),
            2 => BigInt::from(
                *[i64::MIN, i64::MAX, -65, -64, 63, 64, 127, 128]
                    .get(self.rng.gen_range(0..8))
                    .unwrap(),
            ),
            _ => BigInt::from(self.rng.gen_range(-64i64..64)),
        }
    }

    fn text(&mut self, alphabet: &[char]) -> String {
        let len = self.rng.gen_range(0..8);
        (0..len)
            .map(|_| alphabet[self.rng.gen_range(0..alphabet.len())])
            .collect()
    }

    fn identifier(&mut self) -> Atom {
        const FIRST: &[char] = &['a', 'e', 'r', 's', 'x', '_'];
        const REST: &[char] = &['a', 'b', '1', '2', '_', 'z'];
        let mut s = String::new();
        s.push(FIRST[self.rng.gen_range(0..FIRST.len())]);
        s.push_str(&self.text(REST));
        Atom::new(&s)
    }
}

/// Fixpoint over the schema: a product is one deeper than its deepest field;
/// a sum is one deeper than its shallowest constructor. Lists may be empty.
fn min_heights(env: &SchemaEnv) -> HashMap<String, u32> {
    let mut heights: HashMap<String, u32> = HashMap::new();
    loop {
        let mut changed = false;
        for def in env.types() {
            let field_h = |f: &FieldDef, heights: &HashMap<String, u32>| -> Option<u32> {
                if f.sequence {
                    return Some(0);
                }
                match &f.ty {
                    TypeRef::Builtin(_) => Some(0),
                    TypeRef::Defined(n) => heights.get(n).copied(),
                }
            };
            let all = |fields: &[&FieldDef], heights: &HashMap<String, u32>| {
                fields
                    .iter()
                    .try_fold(0u32, |acc, f| field_h(f, heights).map(|h| acc.max(h)))
            };
            let h = match &def.kind {
                TypeKind::Product { fields } => all(&fields.iter().collect::<Vec<_>>(), &heights).map(|h| h + 1),
                TypeKind::Sum { constructors, .. } => constructors
                    .iter()
                    .filter_map(|c| all(&def.effective_fields(c).collect::<Vec<_>>(), &heights))
                    .min()
                    .map(|h| h + 1),
            };
            if let Some(h) = h {
                if heights.get(&def.name).is_none_or(|&old| h < old) {
                    heights.insert(def.name.clone(), h);
                    changed = true;
                }
            }
        }
        if !changed {
            return heights;
        }
    }
}
