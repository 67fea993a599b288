use super::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Qualifier {
    Single,
    /// Written as a trailing `*`.
    Sequence,
}

#[derive(Debug, Clone)]
pub struct RawField {
    pub type_name: String,
    pub qualifier: Qualifier,
    pub name: Option<String>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone)]
pub struct RawConstructor {
    pub name: String,
    pub fields: Vec<RawField>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone)]
pub enum RawTypeBody {
    Sum {
        constructors: Vec<RawConstructor>,
        attributes: Vec<RawField>,
    },
    /// `attributes` is always rejected by the checker; it is kept here so the
    /// diagnostic can point at it.
    Product {
        fields: Vec<RawField>,
        attributes: Vec<RawField>,
    },
}

#[derive(Debug, Clone)]
pub struct RawTypeDef {
    pub name: String,
    pub body: RawTypeBody,
    pub span: SourceSpan,
}

#[derive(Debug, Clone)]
pub struct RawSpec {
    pub module: String,
    pub definitions: Vec<RawTypeDef>,
    pub span: SourceSpan,
}

// Structural equality ignores spans: a re-parsed pretty print has different
// positions but the same tree.

impl PartialEq for RawField {
    fn eq(&self, other: &Self) -> bool {
        self.type_name == other.type_name && self.qualifier == other.qualifier && self.name == other.name
    }
}

impl PartialEq for RawConstructor {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.fields == other.fields
    }
}

impl PartialEq for RawTypeBody {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (
                RawTypeBody::Sum {
                    constructors: c1,
                    attributes: a1,
                },
                RawTypeBody::Sum {
                    constructors: c2,
                    attributes: a2,
                },
            ) => c1 == c2 && a1 == a2,
            (
                RawTypeBody::Product {
                    fields: f1,
                    attributes: a1,
                },
                RawTypeBody::Product {
                    fields: f2,
                    attributes: a2,
                },
            ) => f1 == f2 && a1 == a2,
            _ => false,
        }
    }
}

impl PartialEq for RawTypeDef {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.body == other.body
    }
}

impl PartialEq for RawSpec {
    fn eq(&self, other: &Self) -> bool {
        self.module == other.module && self.definitions == other.definitions
    }
}

impl RawTypeDef {
    pub fn is_sum(&self) -> bool {
        matches!(self.body, RawTypeBody::Sum { .. })
    }
}
