use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use asdl::codegen::{backend_named, generate, BACKENDS};
use asdl::pickle::{self, XmlOptions};
use asdl::sema::{self, SchemaEnv};
use asdl::syntax;
use asdl::value::{self, Value};

#[derive(Parser)]
#[command(
    name = "asdl",
    version,
    about = "Check ASDL specifications, generate code and convert pickles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and check a specification and print a summary.
    Check { file: PathBuf },
    /// Generate constructors, readers and writers.
    Gen {
        file: PathBuf,
        #[arg(long, default_value = "rust")]
        backend: String,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Text form to binary pickle.
    Encode(Stream),
    /// Binary pickle to text form, one instance per line.
    Decode(Stream),
    /// Binary pickle to XML.
    ToXml(Stream),
    /// XML to binary pickle.
    FromXml(Stream),
    /// Append one instance, given in text form, to an existing pickle.
    Append {
        #[command(flatten)]
        schema: Schema,
        /// Pickle file to extend.
        pickle: PathBuf,
        /// Text input; standard input when absent.
        input: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Schema {
    #[arg(long)]
    schema: PathBuf,
    /// `Module.type`, or a bare type name.
    #[arg(long = "type")]
    ty: String,
}

#[derive(Args)]
struct Stream {
    #[command(flatten)]
    schema: Schema,
    /// Input file; standard input when absent.
    input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

enum Failure {
    /// Bad invocation: exit status 2.
    Usage(String),
    /// The input was read but is wrong: exit status 1.
    Domain(String),
}

type Outcome<T> = Result<T, Failure>;

fn read_input(path: Option<&Path>) -> Outcome<(String, Vec<u8>)> {
    match path {
        Some(p) => fs::read(p)
            .map(|b| (p.display().to_string(), b))
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut buf = Vec::new();
            io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Failure::Domain(format!("<stdin>: {e}")))?;
            Ok(("<stdin>".into(), buf))
        }
    }
}

fn utf8(name: &str, bytes: Vec<u8>) -> Outcome<String> {
    String::from_utf8(bytes).map_err(|_| Failure::Domain(format!("{name}: input is not UTF-8")))
}

fn load_schema(path: &Path) -> Outcome<SchemaEnv> {
    let (name, bytes) = read_input(Some(path))?;
    let text = utf8(&name, bytes)?;
    let raw = syntax::parse_spec(&text).map_err(|e| Failure::Domain(format!("{name}:{}: {e}", e.span())))?;
    sema::check(&raw).map_err(|e| match e.span() {
        Some(span) => Failure::Domain(format!("{name}:{span}: {e}")),
        None => Failure::Domain(format!("{name}: {e}")),
    })
}

fn resolve(schema: &Schema) -> Outcome<(SchemaEnv, String)> {
    let env = load_schema(&schema.schema)?;
    let ty = env
        .resolve_type_name(&schema.ty)
        .map(|t| t.name.clone())
        .ok_or_else(|| Failure::Usage(format!("module {} has no type `{}`", env.module, schema.ty)))?;
    Ok((env, ty))
}

fn domain<E: std::fmt::Display>(name: &str) -> impl Fn(E) -> Failure + '_ {
    move |e| Failure::Domain(format!("{name}: {e}"))
}

fn text_error(name: &str) -> impl Fn(value::TextError) -> Failure + '_ {
    move |e| Failure::Domain(format!("{name}:{e}"))
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Outcome<()> {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Domain(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Domain(format!("<stdout>: {e}")))
        }
    }
}

fn run(cli: Cli) -> Outcome<()> {
    match cli.command {
        Command::Check { file } => {
            let env = load_schema(&file)?;
            let summary = format!(
                "module {}: {} types, {} constructors\n",
                env.module,
                env.type_count(),
                env.constructor_count()
            );
            emit(None, summary.as_bytes())
        }
        Command::Gen { file, backend, out } => {
            let be = backend_named(&backend).ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown backend `{backend}`; available: {}",
                    BACKENDS.join(", ")
                ))
            })?;
            let env = load_schema(&file)?;
            let unit = generate(&env, be.as_ref()).map_err(|e| Failure::Domain(format!("{}: {e}", file.display())))?;
            unit.write_to(&out)
                .map_err(|e| Failure::Domain(format!("{}: {e}", out.display())))
        }
        Command::Encode(s) => {
            let (env, ty) = resolve(&s.schema)?;
            let (name, bytes) = read_input(s.input.as_deref())?;
            let text = utf8(&name, bytes)?;
            let values = value::parse_text_all(&env, &ty, &text).map_err(text_error(&name))?;
            let mut out = Vec::new();
            for v in &values {
                let bytes = pickle::write_instance(&env, &ty, v).map_err(domain(&name))?;
                out.extend(bytes);
            }
            emit(s.out.as_deref(), &out)
        }
        Command::Decode(s) => {
            let (env, ty) = resolve(&s.schema)?;
            let (name, bytes) = read_input(s.input.as_deref())?;
            let values = pickle::read_all(&env, &ty, &bytes).map_err(domain(&name))?;
            let mut out = String::new();
            for v in &values {
                out.push_str(&value::print_text(&env, v));
                out.push('\n');
            }
            emit(s.out.as_deref(), out.as_bytes())
        }
        Command::ToXml(s) => {
            let (env, ty) = resolve(&s.schema)?;
            let (name, bytes) = read_input(s.input.as_deref())?;
            let xml = pickle::pickle_to_xml(&env, &[&ty], &bytes, &XmlOptions::default()).map_err(domain(&name))?;
            emit(s.out.as_deref(), xml.as_bytes())
        }
        Command::FromXml(s) => {
            let (env, ty) = resolve(&s.schema)?;
            let (name, bytes) = read_input(s.input.as_deref())?;
            let text = utf8(&name, bytes)?;
            let out = pickle::xml_to_pickle(&env, &[&ty], &text, &XmlOptions::default()).map_err(domain(&name))?;
            emit(s.out.as_deref(), &out)
        }
        Command::Append {
            schema,
            pickle: target,
            input,
        } => {
            let (env, ty) = resolve(&schema)?;
            if !target.is_file() {
                return Err(Failure::Usage(format!("{}: no such pickle", target.display())));
            }
            let (name, bytes) = read_input(input.as_deref())?;
            let text = utf8(&name, bytes)?;
            let v: Value = value::parse_text(&env, &ty, &text).map_err(text_error(&name))?;
            pickle::append_instance(&env, &ty, &v, &target).map_err(domain(&target.display().to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("asdl: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
