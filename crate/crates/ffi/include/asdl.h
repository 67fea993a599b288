#ifndef ASDL_H
#define ASDL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AsdlStatus {
  ASDL_STATUS_OK = 0,
  ASDL_STATUS_NULL_ARGUMENT = 1,
  ASDL_STATUS_INVALID_UTF8 = 2,
  /**
   * The specification or the text form does not parse.
   */
  ASDL_STATUS_SYNTAX = 3,
  /**
   * The specification is ill-formed, or a name is unknown.
   */
  ASDL_STATUS_SEMANTIC = 4,
  /**
   * A value does not match its type.
   */
  ASDL_STATUS_CONFORMANCE = 5,
  /**
   * Malformed binary pickle.
   */
  ASDL_STATUS_PICKLE = 6,
  ASDL_STATUS_XML = 7,
  /**
   * The mini C front end rejected its input.
   */
  ASDL_STATUS_DEMO = 8,
  ASDL_STATUS_PANIC = 9,
} AsdlStatus;

/**
 * A checked specification.
 */
typedef struct AsdlSchema AsdlSchema;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into the library.
 */
const char *asdl_last_error(void);

/**
 * Parses and checks a specification.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `schema` a valid pointer.
 */
enum AsdlStatus asdl_schema_from_text(const char *text, struct AsdlSchema **schema);

/**
 * # Safety
 * `schema` must come from [`asdl_schema_from_text`] and not be freed twice.
 */
void asdl_schema_free(struct AsdlSchema *schema);

/**
 * # Safety
 * Pointers must be valid.
 */
enum AsdlStatus asdl_schema_type_count(const struct AsdlSchema *schema, size_t *count);

/**
 * Whether the named type is a sum of nullary constructors without
 * attributes.
 *
 * # Safety
 * Pointers must be valid and `type_name` NUL-terminated.
 */
enum AsdlStatus asdl_schema_is_enum_like(const struct AsdlSchema *schema,
                                         const char *type_name,
                                         bool *result);

/**
 * The 1-based wire tag of constructor `ctor` of sum type `type_name`.
 *
 * # Safety
 * Pointers must be valid and strings NUL-terminated.
 */
enum AsdlStatus asdl_schema_tag_of(const struct AsdlSchema *schema,
                                   const char *type_name,
                                   const char *ctor,
                                   uint32_t *tag);

/**
 * Encodes every instance in the text form `text` as one pickle.
 *
 * # Safety
 * Pointers must be valid and strings NUL-terminated. Free the result with
 * [`asdl_bytes_free`].
 */
enum AsdlStatus asdl_encode_text(const struct AsdlSchema *schema,
                                 const char *type_name,
                                 const char *text,
                                 uint8_t **data,
                                 size_t *len);

/**
 * Decodes a pickle to text form, one instance per line.
 *
 * # Safety
 * `data` must point to `len` readable bytes. Free the result with
 * [`asdl_string_free`].
 */
enum AsdlStatus asdl_decode_text(const struct AsdlSchema *schema,
                                 const char *type_name,
                                 const uint8_t *data,
                                 size_t len,
                                 char **text);

/**
 * # Safety
 * `data` must point to `len` readable bytes. Free the result with
 * [`asdl_string_free`].
 */
enum AsdlStatus asdl_pickle_to_xml(const struct AsdlSchema *schema,
                                   const char *type_name,
                                   const uint8_t *data,
                                   size_t len,
                                   char **xml);

/**
 * # Safety
 * Pointers must be valid and `xml` NUL-terminated. Free the result with
 * [`asdl_bytes_free`].
 */
enum AsdlStatus asdl_xml_to_pickle(const struct AsdlSchema *schema,
                                   const char *type_name,
                                   const char *xml,
                                   uint8_t **data,
                                   size_t *len);

/**
 * Compiles mini C source to a `program` pickle. `pointer_bits` is 32 or 64.
 *
 * # Safety
 * Pointers must be valid and `source` NUL-terminated. Free the result with
 * [`asdl_bytes_free`].
 */
enum AsdlStatus asdl_minircc_compile(const char *source,
                                     uint32_t pointer_bits,
                                     uint8_t **data,
                                     size_t *len);

/**
 * Assembly for the first `program` in a pickle.
 *
 * # Safety
 * `data` must point to `len` readable bytes. Free the result with
 * [`asdl_string_free`].
 */
enum AsdlStatus asdl_pass2(const uint8_t *data, size_t len, char **assembly);

/**
 * # Safety
 * `data` and `len` must be exactly as returned by the library.
 */
void asdl_bytes_free(uint8_t *data, size_t len);

/**
 * # Safety
 * `s` must come from the library and not be freed twice.
 */
void asdl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ASDL_H */
