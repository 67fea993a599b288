//! Toolchain for the Abstract Syntax Description Language.
//!
//! * [`syntax`] parses `.asdl` text into an unresolved AST.
//! * [`sema`] resolves and classifies it into a [`sema::SchemaEnv`].
//! * [`value`] is a generic runtime model of schema instances.
//! * [`pickle`] reads and writes the binary and XML pickle formats.
//! * [`codegen`] emits typed constructors, readers and writers.
//! * [`runtime`] is the support library generated code links against.
//! * [`demo`] is a small split compiler (`minircc` + `pass2`) that talks
//!   through pickles of the bundled `rcc` grammar.

pub mod codegen;
pub mod demo;
pub mod pickle;
pub mod runtime;
pub mod sema;
pub mod syntax;
pub mod value;

pub mod fixtures {
    //! Specifications bundled with the crate.

    pub const IR: &str = include_str!("../fixtures/IR.asdl");
    pub const IR_NAMED: &str = include_str!("../fixtures/IR_named.asdl");
    pub const IR_ATTRIBUTES: &str = include_str!("../fixtures/IR_attributes.asdl");
    pub const RCC: &str = include_str!("../fixtures/rcc.asdl");
    /// IR trees whose `ASGN` carries only its two children.
    pub const FIG9_SUBSET: &str = include_str!("../fixtures/fig9_subset.asdl");

    pub const ALL: &[(&str, &str)] = &[
        ("IR.asdl", IR),
        ("IR_named.asdl", IR_NAMED),
        ("IR_attributes.asdl", IR_ATTRIBUTES),
        ("rcc.asdl", RCC),
        ("fig9_subset.asdl", FIG9_SUBSET),
    ];

    /// Parses and checks `text`, panicking on error. Meant for bundled
    /// fixtures and tests.
    pub fn env(text: &str) -> crate::sema::SchemaEnv {
        load(text).unwrap_or_else(|e| panic!("bundled specification is invalid: {e}"))
    }

    pub fn load(text: &str) -> Result<crate::sema::SchemaEnv, crate::Error> {
        let raw = crate::syntax::parse_spec(text)?;
        Ok(crate::sema::check(&raw)?)
    }
}

/// Any error the library can report.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Syntax(#[from] syntax::SyntaxError),
    #[error(transparent)]
    Sema(#[from] sema::SemaError),
    #[error(transparent)]
    Text(#[from] value::TextError),
    #[error("value does not conform: {0}")]
    Conformance(#[from] value::Violations),
    #[error(transparent)]
    Pickle(#[from] pickle::PickleError),
    #[error(transparent)]
    Xml(#[from] pickle::XmlError),
    #[error(transparent)]
    Codegen(#[from] codegen::BackendError),
    #[error(transparent)]
    Demo(#[from] demo::DemoError),
}
