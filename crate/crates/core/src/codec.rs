//! Little-endian binary encoding shared by every serializable structure.
//!
//! Each structure starts with a four-byte magic tag and a version byte,
//! followed by its scalar fields and length-prefixed word arrays.

use std::io::{Read, Write};

use crate::error::{Error, Result};

pub(crate) fn write_header<W: Write>(w: &mut W, magic: &[u8; 4], version: u8) -> Result<()> {
    w.write_all(magic)?;
    w.write_all(&[version])?;
    Ok(())
}

pub(crate) fn read_header<R: Read>(r: &mut R, magic: &[u8; 4], version: u8) -> Result<()> {
    let mut tag = [0u8; 4];
    r.read_exact(&mut tag)?;
    if &tag != magic {
        return Err(Error::Format(format!(
            "expected magic {:?}, found {:?}",
            String::from_utf8_lossy(magic),
            String::from_utf8_lossy(&tag)
        )));
    }
    let found = read_u8(r)?;
    if found != version {
        return Err(Error::Format(format!(
            "{} version {found} unsupported (expected {version})",
            String::from_utf8_lossy(magic)
        )));
    }
    Ok(())
}

pub(crate) fn write_u8<W: Write>(w: &mut W, v: u8) -> Result<()> {
    w.write_all(&[v])?;
    Ok(())
}

pub(crate) fn write_u64<W: Write>(w: &mut W, v: u64) -> Result<()> {
    w.write_all(&v.to_le_bytes())?;
    Ok(())
}

pub(crate) fn read_u8<R: Read>(r: &mut R) -> Result<u8> {
    let mut b = [0u8; 1];
    r.read_exact(&mut b)?;
    Ok(b[0])
}

pub(crate) fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

pub(crate) fn read_usize<R: Read>(r: &mut R) -> Result<usize> {
    let v = read_u64(r)?;
    usize::try_from(v).map_err(|_| Error::Format(format!("length {v} does not fit in usize")))
}

pub(crate) fn write_words<W: Write>(w: &mut W, words: &[u64]) -> Result<()> {
    write_u64(w, words.len() as u64)?;
    for &word in words {
        w.write_all(&word.to_le_bytes())?;
    }
    Ok(())
}

/// Reads a length-prefixed word array, refusing lengths above `max_words`.
pub(crate) fn read_words<R: Read>(r: &mut R, max_words: usize) -> Result<Vec<u64>> {
    let len = read_usize(r)?;
    if len > max_words {
        return Err(Error::Format(format!(
            "word array of length {len} exceeds expected {max_words}"
        )));
    }
    let mut words = Vec::with_capacity(len);
    for _ in 0..len {
        words.push(read_u64(r)?);
    }
    Ok(words)
}
