//! Parsers for partition and boundary-condition specifications.
//!
//! A partition is written as comma-separated parts ("3,1,1"); a boundary
//! specification is a semicolon-separated list of partitions ("2,1;3").
//! Parts may carry surrounding whitespace and are canonicalized to
//! weakly decreasing order. Errors cite the byte offset of the offending
//! token in the original string.

use gwtqft::partitions::Partition;
use gwtqft::{Error, Result};

/// Parse a single partition such as "3,1,1".
pub fn parse_partition(spec: &str) -> Result<Partition> {
    parse_chunk(spec, 0, spec)
}

/// Parse a boundary specification such as "2,1;3" into partitions of d.
pub fn parse_boundaries(spec: &str, d: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for chunk in spec.split(';') {
        let p = parse_chunk(chunk, offset, spec)?;
        if p.size() != d {
            return Err(Error::Domain(format!(
                "boundary {p} at byte {offset} of '{spec}' has size {}, expected {d}",
                p.size()
            )));
        }
        out.push(p);
        offset += chunk.len() + 1;
    }
    Ok(out)
}

fn parse_chunk(chunk: &str, base: usize, whole: &str) -> Result<Partition> {
    let mut parts = Vec::new();
    let mut offset = base;
    for tok in chunk.split(',') {
        let trimmed = tok.trim();
        let tok_offset = offset + (tok.len() - tok.trim_start().len());
        let n: usize = trimmed.parse().map_err(|_| {
            Error::Domain(format!(
                "invalid part '{trimmed}' at byte {tok_offset} of '{whole}'"
            ))
        })?;
        parts.push(n);
        offset += tok.len() + 1;
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_are_canonicalized() {
        assert_eq!(parse_partition("1,3,1").unwrap().to_string(), "(3,1,1)");
        assert_eq!(parse_partition(" 2 , 2 ").unwrap().to_string(), "(2,2)");
    }

    #[test]
    fn boundaries_split_on_semicolons() {
        let bs = parse_boundaries("2,1;3", 3).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].to_string(), "(2,1)");
        assert_eq!(bs[1].to_string(), "(3)");
    }

    #[test]
    fn errors_cite_byte_offsets() {
        let err = parse_boundaries("2,1;x", 3).unwrap_err().to_string();
        assert!(err.contains("byte 4"), "{err}");
        let err = parse_partition("3,,1").unwrap_err().to_string();
        assert!(err.contains("byte 2"), "{err}");
    }

    #[test]
    fn sizes_must_match_the_degree() {
        let err = parse_boundaries("2,1;2", 3).unwrap_err().to_string();
        assert!(err.contains("size 2, expected 3"), "{err}");
    }

    #[test]
    fn zero_parts_are_rejected() {
        assert!(parse_partition("2,0").is_err());
        assert!(parse_partition("").is_err());
    }
}
