//! Closure check for `program` values: every uid in `1..=nuids` is defined
//! exactly once, and every reference names a definition of the right kind.

use std::collections::BTreeMap;

use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Type,
    Symbol,
}

impl Kind {
    fn noun(self) -> &'static str {
        match self {
            Kind::Type => "type",
            Kind::Symbol => "symbol",
        }
    }
}

#[derive(Default)]
struct Lint {
    defs: BTreeMap<i64, Kind>,
    refs: Vec<(i64, Kind, String)>,
    problems: Vec<String>,
}

fn fields(v: &Value) -> &[Value] {
    match v {
        Value::Sum { fields, .. } | Value::Product { fields, .. } => fields,
        _ => &[],
    }
}

fn list(v: &Value) -> &[Value] {
    v.as_list().unwrap_or(&[])
}

impl Lint {
    fn define(&mut self, uid: Option<i64>, kind: Kind, site: &str) {
        let Some(uid) = uid else {
            self.problems.push(format!("{site}: uid is not a small integer"));
            return;
        };
        if self.defs.insert(uid, kind).is_some() {
            self.problems
                .push(format!("{site}: uid {uid} is defined more than once"));
        }
    }

    fn refer(&mut self, v: &Value, kind: Kind, site: String) {
        match v.as_i64() {
            Some(uid) => self.refs.push((uid, kind, site)),
            None => self.problems.push(format!("{site}: uid is not a small integer")),
        }
    }

    fn symbol(&mut self, s: &Value, site: &str) {
        if let Some(ty) = fields(s).get(1) {
            self.refer(ty, Kind::Type, format!("{site}/symbol"));
        }
    }

    fn type_(&mut self, t: &Value, site: &str) {
        let ctor = t.ctor().unwrap_or("?");
        let f = fields(t);
        let site = format!("{site}/{ctor}");
        match ctor {
            "POINTER" | "ARRAY" | "CONST" | "VOLATILE" => self.refer(&f[0], Kind::Type, site),
            "FUNCTION" => {
                self.refer(&f[0], Kind::Type, site.clone());
                for formal in list(&f[1]) {
                    self.refer(formal, Kind::Type, site.clone());
                }
            }
            "STRUCT" | "UNION" => {
                for field in list(&f[1]) {
                    self.refer(&fields(field)[1], Kind::Type, format!("{site}/field"));
                }
            }
            _ => {}
        }
    }

    fn node(&mut self, n: &Value, site: &str) {
        let ctor = n.ctor().unwrap_or("?");
        let site = format!("{site}/{ctor}");
        let f = fields(n);
        match ctor {
            "ADDRG" | "ADDRL" | "ADDRF" | "CSE" => self.refer(&f[0], Kind::Symbol, site.clone()),
            "CALL" => self.refer(&f[1], Kind::Type, site.clone()),
            "CALLB" => self.refer(&f[2], Kind::Type, site.clone()),
            _ => {}
        }
        for child in f.iter().filter(|c| matches!(c, Value::Sum { .. })) {
            self.node(child, &site);
        }
    }

    fn interface(&mut self, i: &Value, site: &str) {
        let ctor = i.ctor().unwrap_or("?");
        let site = format!("{site}/{ctor}");
        let f = fields(i);
        match ctor {
            "Export" | "Import" | "Global" | "Defaddress" => self.refer(&f[0], Kind::Symbol, site),
            "Local" => {
                self.define(f[0].as_i64(), Kind::Symbol, &site);
                self.symbol(&f[1], &site);
            }
            "Address" => {
                self.define(f[0].as_i64(), Kind::Symbol, &site);
                self.symbol(&f[1], &site);
                self.refer(&f[2], Kind::Symbol, site);
            }
            "Function" => {
                self.refer(&f[0], Kind::Symbol, site.clone());
                if list(&f[1]).len() != list(&f[2]).len() {
                    self.problems
                        .push(format!("{site}: caller and callee lists differ in length"));
                }
                for s in list(&f[1]).iter().chain(list(&f[2])) {
                    self.refer(s, Kind::Symbol, site.clone());
                }
                for c in list(&f[4]) {
                    self.interface(c, &site);
                }
            }
            "Forest" => {
                for n in list(&f[0]) {
                    self.node(n, &site);
                }
            }
            _ => {}
        }
    }
}

/// Problems with the uid structure of a `program` value; empty when closed.
pub fn uid_closure_violations(program: &Value) -> Vec<String> {
    let f = fields(program);
    if f.len() != 6 {
        return vec!["not a program".to_string()];
    }
    let mut lint = Lint::default();
    for item in list(&f[2]) {
        let uid = match item {
            Value::Sum { attrs, .. } => attrs.first().and_then(Value::as_i64),
            _ => None,
        };
        match item.ctor() {
            Some("Type") => {
                lint.define(uid, Kind::Type, "items/Type");
                lint.type_(&fields(item)[0], "items/Type");
            }
            _ => {
                lint.define(uid, Kind::Symbol, "items/Symbol");
                lint.symbol(&fields(item)[0], "items/Symbol");
            }
        }
    }
    for i in list(&f[3]) {
        lint.interface(i, "interfaces");
    }

    let mut problems = std::mem::take(&mut lint.problems);
    match f[0].as_i64() {
        Some(nuids) => {
            for (&uid, _) in lint.defs.range(..1).chain(lint.defs.range(nuids + 1..)) {
                problems.push(format!("uid {uid} is outside 1..={nuids}"));
            }
            let missing: Vec<String> = (1..=nuids)
                .filter(|u| !lint.defs.contains_key(u))
                .map(|u| u.to_string())
                .collect();
            if !missing.is_empty() {
                problems.push(format!("uids {} are never defined", missing.join(", ")));
            }
        }
        None => problems.push("nuids is not a small integer".into()),
    }
    for (uid, kind, site) in &lint.refs {
        match lint.defs.get(uid) {
            None => problems.push(format!("{site}: uid {uid} is never defined")),
            Some(k) if k != kind => problems.push(format!(
                "{site}: uid {uid} names a {} where a {} is expected",
                k.noun(),
                kind.noun()
            )),
            Some(_) => {}
        }
    }
    if f[4].as_i64() != Some(list(&f[5]).len() as i64) {
        problems.push("argc does not match the length of argv".into());
    }
    problems
}
