//! C interface to the asdl toolchain.
//!
//! Every entry point returns an [`AsdlStatus`]. On failure the message is
//! available from [`asdl_last_error`] on the same thread until the next call.
//! Buffers handed out by the library are released with [`asdl_bytes_free`]
//! and [`asdl_string_free`]; schemas with [`asdl_schema_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use asdl::demo::{self, DemoError, TargetMetrics};
use asdl::pickle::{self, XmlOptions};
use asdl::sema::{self, Classification, SchemaEnv};
use asdl::value;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsdlStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// The specification or the text form does not parse.
    Syntax = 3,
    /// The specification is ill-formed, or a name is unknown.
    Semantic = 4,
    /// A value does not match its type.
    Conformance = 5,
    /// Malformed binary pickle.
    Pickle = 6,
    Xml = 7,
    /// The mini C front end rejected its input.
    Demo = 8,
    Panic = 9,
}

/// A checked specification.
pub struct AsdlSchema {
    env: SchemaEnv,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(AsdlStatus, String);

type Outcome<T> = Result<T, Failure>;

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Outcome<()>) -> AsdlStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AsdlStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AsdlStatus::Panic
        }
    }
}

fn fail<E: std::fmt::Display>(status: AsdlStatus) -> impl Fn(E) -> Failure {
    move |e| Failure(status, e.to_string())
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(AsdlStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(AsdlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn bytes<'a>(p: *const u8, len: usize) -> Outcome<&'a [u8]> {
    match (p.is_null(), len) {
        (_, 0) => Ok(&[]),
        (true, _) => Err(Failure(AsdlStatus::NullArgument, "bytes is null".into())),
        (false, _) => Ok(std::slice::from_raw_parts(p, len)),
    }
}

unsafe fn schema<'a>(s: *const AsdlSchema) -> Outcome<&'a SchemaEnv> {
    s.as_ref()
        .map(|s| &s.env)
        .ok_or_else(|| Failure(AsdlStatus::NullArgument, "schema is null".into()))
}

unsafe fn out<'a, T>(p: *mut T) -> Outcome<&'a mut T> {
    p.as_mut()
        .ok_or_else(|| Failure(AsdlStatus::NullArgument, "output pointer is null".into()))
}

unsafe fn resolve(env: &SchemaEnv, p: *const c_char) -> Outcome<String> {
    let name = c_str(p, "type")?;
    env.resolve_type_name(name).map(|t| t.name.clone()).ok_or_else(|| {
        Failure(
            AsdlStatus::Semantic,
            format!("module {} has no type `{name}`", env.module),
        )
    })
}

unsafe fn give_bytes(v: Vec<u8>, data: *mut *mut u8, len: *mut usize) -> Outcome<()> {
    let (data, len) = (out(data)?, out(len)?);
    *len = v.len();
    *data = Box::into_raw(v.into_boxed_slice()) as *mut u8;
    Ok(())
}

unsafe fn give_string(s: String, dst: *mut *mut c_char) -> Outcome<()> {
    let dst = out(dst)?;
    let c = CString::new(s).map_err(fail(AsdlStatus::InvalidUtf8))?;
    *dst = c.into_raw();
    Ok(())
}

fn demo_status(e: &DemoError) -> AsdlStatus {
    match e {
        DemoError::Pickle(_) => AsdlStatus::Pickle,
        _ => AsdlStatus::Demo,
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn asdl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses and checks a specification.
///
/// # Safety
/// `text` must be a NUL-terminated string and `schema` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asdl_schema_from_text(text: *const c_char, schema: *mut *mut AsdlSchema) -> AsdlStatus {
    guard(|| {
        let dst = out(schema)?;
        let src = c_str(text, "text")?;
        let raw =
            asdl::syntax::parse_spec(src).map_err(|e| Failure(AsdlStatus::Syntax, format!("{}: {e}", e.span())))?;
        let env = sema::check(&raw).map_err(|e| match e.span() {
            Some(span) => Failure(AsdlStatus::Semantic, format!("{span}: {e}")),
            None => Failure(AsdlStatus::Semantic, e.to_string()),
        })?;
        *dst = Box::into_raw(Box::new(AsdlSchema { env }));
        Ok(())
    })
}

/// # Safety
/// `schema` must come from [`asdl_schema_from_text`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn asdl_schema_free(schema: *mut AsdlSchema) {
    if !schema.is_null() {
        drop(Box::from_raw(schema));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn asdl_schema_type_count(schema: *const AsdlSchema, count: *mut usize) -> AsdlStatus {
    guard(|| {
        *out(count)? = self::schema(schema)?.type_count();
        Ok(())
    })
}

/// Whether the named type is a sum of nullary constructors without
/// attributes.
///
/// # Safety
/// Pointers must be valid and `type_name` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn asdl_schema_is_enum_like(
    schema: *const AsdlSchema,
    type_name: *const c_char,
    result: *mut bool,
) -> AsdlStatus {
    guard(|| {
        let env = self::schema(schema)?;
        let name = resolve(env, type_name)?;
        *out(result)? = env.classification(&name) == Some(Classification::EnumLike);
        Ok(())
    })
}

/// The 1-based wire tag of constructor `ctor` of sum type `type_name`.
///
/// # Safety
/// Pointers must be valid and strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn asdl_schema_tag_of(
    schema: *const AsdlSchema,
    type_name: *const c_char,
    ctor: *const c_char,
    tag: *mut u32,
) -> AsdlStatus {
    guard(|| {
        let env = self::schema(schema)?;
        let name = resolve(env, type_name)?;
        let ctor = c_str(ctor, "ctor")?;
        *out(tag)? = sema::tag_of(env, &name, ctor).map_err(fail(AsdlStatus::Semantic))?;
        Ok(())
    })
}

/// Encodes every instance in the text form `text` as one pickle.
///
/// # Safety
/// Pointers must be valid and strings NUL-terminated. Free the result with
/// [`asdl_bytes_free`].
#[no_mangle]
pub unsafe extern "C" fn asdl_encode_text(
    schema: *const AsdlSchema,
    type_name: *const c_char,
    text: *const c_char,
    data: *mut *mut u8,
    len: *mut usize,
) -> AsdlStatus {
    guard(|| {
        let env = self::schema(schema)?;
        let name = resolve(env, type_name)?;
        let values = value::parse_text_all(env, &name, c_str(text, "text")?).map_err(fail(AsdlStatus::Syntax))?;
        let mut bytes = Vec::new();
        for v in &values {
            bytes.extend(pickle::write_instance(env, &name, v).map_err(fail(AsdlStatus::Conformance))?);
        }
        give_bytes(bytes, data, len)
    })
}

/// Decodes a pickle to text form, one instance per line.
///
/// # Safety
/// `data` must point to `len` readable bytes. Free the result with
/// [`asdl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn asdl_decode_text(
    schema: *const AsdlSchema,
    type_name: *const c_char,
    data: *const u8,
    len: usize,
    text: *mut *mut c_char,
) -> AsdlStatus {
    guard(|| {
        let env = self::schema(schema)?;
        let name = resolve(env, type_name)?;
        let values = pickle::read_all(env, &name, bytes(data, len)?).map_err(fail(AsdlStatus::Pickle))?;
        let mut s = String::new();
        for v in &values {
            s.push_str(&value::print_text(env, v));
            s.push('\n');
        }
        give_string(s, text)
    })
}

/// # Safety
/// `data` must point to `len` readable bytes. Free the result with
/// [`asdl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn asdl_pickle_to_xml(
    schema: *const AsdlSchema,
    type_name: *const c_char,
    data: *const u8,
    len: usize,
    xml: *mut *mut c_char,
) -> AsdlStatus {
    guard(|| {
        let env = self::schema(schema)?;
        let name = resolve(env, type_name)?;
        let s = pickle::pickle_to_xml(env, &[&name], bytes(data, len)?, &XmlOptions::default())
            .map_err(fail(AsdlStatus::Xml))?;
        give_string(s, xml)
    })
}

/// # Safety
/// Pointers must be valid and `xml` NUL-terminated. Free the result with
/// [`asdl_bytes_free`].
#[no_mangle]
pub unsafe extern "C" fn asdl_xml_to_pickle(
    schema: *const AsdlSchema,
    type_name: *const c_char,
    xml: *const c_char,
    data: *mut *mut u8,
    len: *mut usize,
) -> AsdlStatus {
    guard(|| {
        let env = self::schema(schema)?;
        let name = resolve(env, type_name)?;
        let bytes = pickle::xml_to_pickle(env, &[&name], c_str(xml, "xml")?, &XmlOptions::default())
            .map_err(fail(AsdlStatus::Xml))?;
        give_bytes(bytes, data, len)
    })
}

/// Compiles mini C source to a `program` pickle. `pointer_bits` is 32 or 64.
///
/// # Safety
/// Pointers must be valid and `source` NUL-terminated. Free the result with
/// [`asdl_bytes_free`].
#[no_mangle]
pub unsafe extern "C" fn asdl_minircc_compile(
    source: *const c_char,
    pointer_bits: u32,
    data: *mut *mut u8,
    len: *mut usize,
) -> AsdlStatus {
    guard(|| {
        let m = match pointer_bits {
            32 => TargetMetrics::ILP32,
            64 => TargetMetrics::LP64,
            n => return Err(Failure(AsdlStatus::Demo, format!("no target with {n}-bit pointers"))),
        };
        let bytes = demo::compile(c_str(source, "source")?, &m).map_err(|e| Failure(demo_status(&e), e.to_string()))?;
        give_bytes(bytes, data, len)
    })
}

/// Assembly for the first `program` in a pickle.
///
/// # Safety
/// `data` must point to `len` readable bytes. Free the result with
/// [`asdl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn asdl_pass2(data: *const u8, len: usize, assembly: *mut *mut c_char) -> AsdlStatus {
    guard(|| {
        let asm = demo::pass2(bytes(data, len)?).map_err(|e| Failure(demo_status(&e), e.to_string()))?;
        give_string(asm, assembly)
    })
}

/// # Safety
/// `data` and `len` must be exactly as returned by the library.
#[no_mangle]
pub unsafe extern "C" fn asdl_bytes_free(data: *mut u8, len: usize) {
    if !data.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(data, len)));
    }
}

/// # Safety
/// `s` must come from the library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn asdl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
