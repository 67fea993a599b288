//! Byte-level primitives of the wire format.
//!
//! Unsigned integers are base-128 varints: seven data bits per byte, least
//! significant group first, high bit set on every byte but the last. Signed
//! integers are zigzag-mapped first (`n >= 0 -> 2n`, `n < 0 -> -2n - 1`), so
//! values in `-64..=63` take one byte. The encoding is canonical: a reader
//! rejects varints longer than ten bytes, varints that overflow 64 bits and
//! varints ending in a redundant zero group.

use super::PickleError;

/// Longest accepted varint; ten groups cover 64 bits.
pub const MAX_VARINT_LEN: usize = 10;

#[derive(Debug, Default, Clone)]
pub struct OutStream {
    buf: Vec<u8>,
}

impl OutStream {
    pub fn new() -> Self {
        OutStream::default()
    }

    pub fn position(&self) -> usize {
        self.buf.len()
    }

    pub fn bytes(&self) -> &[u8] {
        &self.buf
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.buf
    }

    pub fn write_byte(&mut self, b: u8) {
        self.buf.push(b);
    }

    pub fn write_raw(&mut self, bytes: &[u8]) {
        self.buf.extend_from_slice(bytes);
    }

    pub fn write_uint(&mut self, mut n: u64) {
        loop {
            let group = (n & 0x7f) as u8;
            n >>= 7;
            if n == 0 {
                self.buf.push(group);
                return;
            }
            self.buf.push(group | 0x80);
        }
    }

    pub fn write_int(&mut self, n: i64) {
        self.write_uint(zigzag(n));
    }

    /// Byte length, then UTF-8 bytes.
    pub fn write_str(&mut self, s: &str) {
        self.write_uint(s.len() as u64);
        self.buf.extend_from_slice(s.as_bytes());
    }
}

pub fn zigzag(n: i64) -> u64 {
    ((n << 1) ^ (n >> 63)) as u64
}

pub fn unzigzag(n: u64) -> i64 {
    ((n >> 1) as i64) ^ -((n & 1) as i64)
}

#[derive(Debug, Clone)]
pub struct InStream<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> InStream<'a> {
    pub fn new(data: &'a [u8]) -> Self {
        InStream { data, pos: 0 }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn remaining(&self) -> usize {
        self.data.len() - self.pos
    }

    pub fn is_exhausted(&self) -> bool {
        self.pos >= self.data.len()
    }

    pub fn read_byte(&mut self) -> Result<u8, PickleError> {
        let b = *self
            .data
            .get(self.pos)
            .ok_or(PickleError::TruncatedStream { offset: self.pos })?;
        self.pos += 1;
        Ok(b)
    }

    pub fn read_raw(&mut self, len: usize) -> Result<&'a [u8], PickleError> {
        if self.remaining() < len {
            return Err(PickleError::TruncatedStream {
                offset: self.data.len(),
            });
        }
        let out = &self.data[self.pos..self.pos + len];
        self.pos += len;
        Ok(out)
    }

    pub fn read_uint(&mut self) -> Result<u64, PickleError> {
        let start = self.pos;
        let mut value: u64 = 0;
        for i in 0..MAX_VARINT_LEN {
            let b = self.read_byte()?;
            let group = u64::from(b & 0x7f);
            if i == MAX_VARINT_LEN - 1 && group > 1 {
                return Err(PickleError::MalformedVarint { offset: start });
            }
            value |= group << (7 * i);
            if b & 0x80 == 0 {
                if i > 0 && b == 0 {
                    return Err(PickleError::MalformedVarint { offset: start });
                }
                return Ok(value);
            }
        }
        Err(PickleError::MalformedVarint { offset: start })
    }

    pub fn read_int(&mut self) -> Result<i64, PickleError> {
        self.read_uint().map(unzigzag)
    }

    pub fn read_str(&mut self) -> Result<&'a str, PickleError> {
        let len = self.read_uint()?;
        let offset = self.pos;
        let len = usize::try_from(len).map_err(|_| PickleError::TruncatedStream {
            offset: self.data.len(),
        })?;
        let bytes = self.read_raw(len)?;
        std::str::from_utf8(bytes).map_err(|_| PickleError::InvalidUtf8 { offset })
    }
}
