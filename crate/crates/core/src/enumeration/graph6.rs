//! graph6 text encoding for orders up to 62.
//!
//! Order byte `63 + n`, then the upper triangle in column-major order
//! `(0,1), (0,2), (1,2), (0,3), …` packed big-endian six bits per byte, each
//! byte offset by 63, zero padded.

use std::fs::File;
use std::io::{BufRead, BufReader, Lines};
use std::path::Path;

use crate::error::{Error, FormatError};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;
pub const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(FormatError::LongHeader);
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode(line: &str) -> Result<Graph, FormatError> {
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(FormatError::EmptyLine)?;
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::BadByte { byte, pos });
        }
    }
    if head == 126 {
        return Err(FormatError::LongHeader);
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(FormatError::Parse("graph6 order 0 is not a graph".into()));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(FormatError::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(FormatError::Trailing(body.len() - expected));
    }
    let bit_at = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    let mut rows = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(idx) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    if (nbits..expected * 6).any(bit_at) {
        return Err(FormatError::Padding);
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Lazily decoded graph6 file. Header lines (`>…`) and blank lines are
/// skipped; decode errors carry their 1-based line number.
pub struct Graph6Reader<R> {
    lines: Lines<R>,
    line_no: usize,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Self { lines: reader.lines(), line_no: 0 }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph, Error>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(l) => l,
                Err(e) => return Some(Err(e.into())),
            };
            self.line_no += 1;
            let mut text = line.trim_end_matches(['\r', '\n']);
            if let Some(rest) = text.strip_prefix(HEADER) {
                text = rest;
            } else if text.starts_with('>') {
                continue;
            }
            if text.is_empty() {
                continue;
            }
            return Some(decode(text).map_err(|e| {
                FormatError::AtLine { line: self.line_no, source: Box::new(e) }.into()
            }));
        }
    }
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Graph6Reader<BufReader<File>>, Error> {
    Ok(Graph6Reader::new(BufReader::new(File::open(path)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_codes() {
        assert_eq!(encode(&Graph::complete(1).unwrap()).unwrap(), "@");
        assert_eq!(encode(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        let k3 = decode("Bw").unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3).unwrap());
        // P4 0-1-2-3: bits (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=0 (1,3)=0 (2,3)=1
        assert_eq!(encode(&Graph::path(4).unwrap()).unwrap(), "Ch");
    }

    #[test]
    fn header_prefix_is_tolerated() {
        assert_eq!(decode(">>graph6<<Bw").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn malformed_input() {
        assert_eq!(decode(""), Err(FormatError::EmptyLine));
        assert!(matches!(decode("B "), Err(FormatError::BadByte { byte: b' ', pos: 1 })));
        assert_eq!(decode("~??"), Err(FormatError::LongHeader));
        assert_eq!(decode("C"), Err(FormatError::Truncated { expected: 1, found: 0 }));
        assert_eq!(decode("Bww"), Err(FormatError::Trailing(1)));
        // K3 uses 3 of 6 bits; a set padding bit is rejected
        assert_eq!(decode("Bx"), Err(FormatError::Padding));
        let big = Graph::empty(63).unwrap();
        assert_eq!(encode(&big), Err(FormatError::LongHeader));
    }

    #[test]
    fn reader_reports_positioned_errors() {
        let data = ">>graph6<<\n@\nB!\nBw\n";
        let items: Vec<_> = Graph6Reader::new(data.as_bytes()).collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[0].as_ref().unwrap(), &Graph::complete(1).unwrap());
        match &items[1] {
            Err(Error::Format(FormatError::AtLine { line, .. })) => assert_eq!(*line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(items[2].as_ref().unwrap(), &Graph::complete(3).unwrap());
        assert_eq!(Graph6Reader::new("".as_bytes()).count(), 0);
    }
}
