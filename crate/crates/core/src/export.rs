//! Generator matrix serialization.
//!
//! Two formats, both tagged with [`POINT_ORDER_VERSION`]:
//!
//! * JSON: `{"point_order", "family", "q", "n", "d", "length", "dimension",
//!   "basis_monomials", "rows"}` with rows as arrays of residues.
//! * Raw bits (q = 2 only), all integers little-endian:
//!
//! ```text
//! magic        8 bytes  "PRMWBITS"
//! version_len  u32
//! version      version_len bytes of UTF-8
//! rows         u64
//! cols         u64
//! words_per_row u64
//! words        rows * words_per_row u64, row-major, bit j of a row in
//!              word j / 64 at position j % 64
//! ```

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::matrix::BitMatrix;
use crate::points::POINT_ORDER_VERSION;

pub const BITS_MAGIC: &[u8; 8] = b"PRMWBITS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub point_order: String,
    pub family: String,
    pub q: u32,
    pub n: usize,
    pub d: u32,
    pub length: usize,
    pub dimension: usize,
    pub basis_monomials: Vec<Vec<u32>>,
    pub rows: Vec<Vec<u8>>,
}

pub fn generator_json(code: &Code) -> GeneratorJson {
    GeneratorJson {
        point_order: POINT_ORDER_VERSION.to_string(),
        family: code.params.family.to_string(),
        q: code.params.q(),
        n: code.params.n,
        d: code.params.d,
        length: code.length,
        dimension: code.dimension,
        basis_monomials: code.basis_monomials.clone(),
        rows: code.gen.to_u8_rows(),
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Format(e.to_string())
}

pub fn write_bits<W: Write>(code: &Code, mut out: W) -> Result<()> {
    let bits = code
        .packed()
        .ok_or_else(|| Error::Format("raw bit dump is only defined for q = 2".into()))?;
    out.write_all(BITS_MAGIC).map_err(io_err)?;
    out.write_all(&(POINT_ORDER_VERSION.len() as u32).to_le_bytes())
        .map_err(io_err)?;
    out.write_all(POINT_ORDER_VERSION.as_bytes())
        .map_err(io_err)?;
    for v in [bits.rows(), bits.cols(), bits.words_per_row()] {
        out.write_all(&(v as u64).to_le_bytes()).map_err(io_err)?;
    }
    for w in bits.words() {
        out.write_all(&w.to_le_bytes()).map_err(io_err)?;
    }
    Ok(())
}

/// Read a raw bit dump, returning the version tag and the matrix.
pub fn read_bits<R: Read>(mut input: R) -> Result<(String, BitMatrix)> {
    let mut magic = [0u8; 8];
    input.read_exact(&mut magic).map_err(io_err)?;
    if &magic != BITS_MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let mut u32b = [0u8; 4];
    input.read_exact(&mut u32b).map_err(io_err)?;
    let mut version = vec![0u8; u32::from_le_bytes(u32b) as usize];
    input.read_exact(&mut version).map_err(io_err)?;
    let version = String::from_utf8(version).map_err(|e| Error::Format(e.to_string()))?;
    let mut u64b = [0u8; 8];
    let mut header = [0usize; 3];
    for h in header.iter_mut() {
        input.read_exact(&mut u64b).map_err(io_err)?;
        *h = u64::from_le_bytes(u64b) as usize;
    }
    let [rows, cols, wpr] = header;
    if wpr != cols.div_ceil(64) {
        return Err(Error::Format("words_per_row does not match cols".into()));
    }
    let mut words = Vec::with_capacity(rows * wpr);
    for _ in 0..rows * wpr {
        input.read_exact(&mut u64b).map_err(io_err)?;
        words.push(u64::from_le_bytes(u64b));
    }
    let m = BitMatrix::from_words(rows, cols, words)
        .ok_or_else(|| Error::Format("inconsistent matrix size".into()))?;
    Ok((version, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_prm, build_rm, CodeParams};

    #[test]
    fn bits_round_trip() {
        let code = build_rm(CodeParams::rm(2, 7, 2).unwrap()).unwrap();
        let mut buf = Vec::new();
        write_bits(&code, &mut buf).unwrap();
        let (v, m) = read_bits(buf.as_slice()).unwrap();
        assert_eq!(v, POINT_ORDER_VERSION);
        assert_eq!(m.to_matrix(), code.gen);
        assert_eq!(m.words_per_row(), 2);
        assert_eq!(&buf[..8], BITS_MAGIC);

        buf[0] = b'X';
        assert!(read_bits(buf.as_slice()).is_err());
        let ternary = build_prm(CodeParams::prm(3, 2, 2).unwrap()).unwrap();
        assert!(write_bits(&ternary, Vec::new()).is_err());
    }

    #[test]
    fn json_carries_order_tag() {
        let code = build_prm(CodeParams::prm(3, 2, 2).unwrap()).unwrap();
        let j = generator_json(&code);
        assert_eq!(j.point_order, POINT_ORDER_VERSION);
        assert_eq!(j.rows.len(), code.dimension);
        let text = serde_json::to_string(&j).unwrap();
        let back: GeneratorJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
    }
}
