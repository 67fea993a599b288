use std::fmt::Write;

use super::ast::{Qualifier, RawField, RawSpec, RawTypeBody};

/// Renders `spec` in canonical layout: one constructor per line with the
/// `|` of each alternative aligned under the `=` of its definition.
pub fn pretty_print(spec: &RawSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "module {} {{", spec.module);
    for (i, def) in spec.definitions.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let pad = " ".repeat(def.name.len() + 1);
        match &def.body {
            RawTypeBody::Product { fields, attributes } => {
                let _ = writeln!(out, "{} = {}", def.name, field_list(fields));
                if !attributes.is_empty() {
                    let _ = writeln!(out, "{pad}  attributes{}", field_list(attributes));
                }
            }
            RawTypeBody::Sum {
                constructors,
                attributes,
            } => {
                for (j, ctor) in constructors.iter().enumerate() {
                    let lead = if j == 0 {
                        format!("{} =", def.name)
                    } else {
                        format!("{pad}|")
                    };
                    if ctor.fields.is_empty() {
                        let _ = writeln!(out, "{lead} {}", ctor.name);
                    } else {
                        let _ = writeln!(out, "{lead} {}{}", ctor.name, field_list(&ctor.fields));
                    }
                }
                if !attributes.is_empty() {
                    let _ = writeln!(out, "{pad}  attributes{}", field_list(attributes));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

fn field_list(fields: &[RawField]) -> String {
    let parts: Vec<String> = fields
        .iter()
        .map(|f| {
            let star = if f.qualifier == Qualifier::Sequence { "*" } else { "" };
            match &f.name {
                Some(name) => format!("{}{star} {name}", f.type_name),
                None => format!("{}{star}", f.type_name),
            }
        })
        .collect();
    format!("({})", parts.join(", "))
}
