//! Text grammar for monomials, ideals and decomposition files.
//!
//! Ideals are written `n=<dim>; <gen>, <gen>, ...` with monomials like
//! `x1^3*x2`. The identity monomial is `1`; the zero ideal's generator
//! list is `0`. Decomposition files carry a header line
//! `target: ideal|quotient; ideal: <generators>; n: <dim>` followed by one
//! slab per line in the form `x1^3*x2 K[x1,x3]`. Blank lines and lines
//! starting with `#` are ignored.
//!
//! Parse errors report 1-based line and column positions.

use itertools::Itertools;

use crate::decomp::{Slab, StanleyDecomposition, Target};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MAX_EXPONENT};

/// Guard against absurd ambient dimensions (exponent vectors are dense).
const MAX_DIM: u64 = 1 << 16;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col_base: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str, line: usize, col_base: usize) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
            line,
            col_base,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        self.err_at(self.pos, msg)
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col_base + pos + 1,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.pos), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            Ok(())
        } else {
            Err(self.err(format!("expected `{kw}`")))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        digits
            .parse::<u64>()
            .map_err(|_| self.err(format!("number `{digits}` is too large")))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    /// `x<i>` with optional `^<e>`; adds the exponent into `exps`.
    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        self.expect(b'x')?;
        self.skip_ws();
        let num_start = self.pos;
        let idx = self.uint()?;
        if idx == 0 || idx as usize > exps.len() {
            return Err(self.err_at(
                num_start,
                format!("variable x{idx} outside x1..x{}", exps.len()),
            ));
        }
        let e = if self.eat(b'^') { self.uint()? } else { 1 };
        if e > MAX_EXPONENT {
            return Err(self.err(format!("exponent {e} exceeds 2^31")));
        }
        let slot = &mut exps[idx as usize - 1];
        let sum = *slot as u64 + e;
        if sum > MAX_EXPONENT {
            return Err(self.err(format!("exponent {sum} exceeds 2^31")));
        }
        *slot = sum as u32;
        Ok(())
    }

    fn monomial(&mut self, n: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; n];
        if self.eat(b'1') {
            return Ok(Monomial::new(exps));
        }
        self.factor(&mut exps)?;
        while self.eat(b'*') {
            self.factor(&mut exps)?;
        }
        Ok(Monomial::new(exps))
    }

    /// Generator list: `0` for the zero ideal, else comma-separated
    /// monomials.
    fn gens(&mut self, n: usize) -> Result<Vec<Monomial>> {
        if self.eat(b'0') {
            return Ok(vec![]);
        }
        let mut gens = vec![self.monomial(n)?];
        while self.eat(b',') {
            gens.push(self.monomial(n)?);
        }
        Ok(gens)
    }

    fn dimension(&mut self) -> Result<usize> {
        let n = self.uint()?;
        if n == 0 {
            return Err(self.err("ambient dimension must be at least 1"));
        }
        if n > MAX_DIM {
            return Err(self.err(format!("ambient dimension {n} exceeds {MAX_DIM}")));
        }
        Ok(n as usize)
    }
}

/// Parses a single monomial against a known ambient dimension.
pub fn parse_monomial(s: &str, n: usize) -> Result<Monomial> {
    let mut c = Cursor::new(s, 1, 0);
    let m = c.monomial(n)?;
    c.expect_end()?;
    Ok(m)
}

/// Parses the full ideal form `n=<dim>; <generators>`.
pub fn parse_ideal(s: &str) -> Result<MonomialIdeal> {
    let mut c = Cursor::new(s, 1, 0);
    c.expect_keyword("n")?;
    c.expect(b'=')?;
    let n = c.dimension()?;
    c.expect(b';')?;
    let gens = c.gens(n)?;
    c.expect_end()?;
    MonomialIdeal::new(n, gens)
}

/// Canonical text of an ideal, parseable by [`parse_ideal`].
pub fn ideal_text(i: &MonomialIdeal) -> String {
    format!("n={}; {}", i.dim(), i)
}

fn slab_text(s: &Slab) -> String {
    format!(
        "{} K[{}]",
        s.origin,
        s.free.iter().map(|j| format!("x{}", j + 1)).join(",")
    )
}

/// Serializes a decomposition in the file format described in the module
/// docs. The output ends with a newline and parses back identically.
pub fn decomposition_text(d: &StanleyDecomposition) -> String {
    let (kind, ideal) = match &d.target {
        Target::Ideal(i) => ("ideal", i),
        Target::Quotient(i) => ("quotient", i),
    };
    let mut out = format!("target: {kind}; ideal: {ideal}; n: {}\n", d.dim());
    for s in &d.slabs {
        out.push_str(&slab_text(s));
        out.push('\n');
    }
    out
}

fn parse_header(line: &str, line_no: usize) -> Result<Target> {
    let parts: Vec<&str> = line.splitn(3, ';').collect();
    if parts.len() != 3 {
        return Err(Error::Parse {
            line: line_no,
            col: 1,
            msg: "header must be `target: ...; ideal: ...; n: ...`".into(),
        });
    }
    let off1 = parts[0].len() + 1;
    let off2 = off1 + parts[1].len() + 1;

    let mut c = Cursor::new(parts[0], line_no, 0);
    c.expect_keyword("target")?;
    c.expect(b':')?;
    c.skip_ws();
    let kind = if c.expect_keyword("ideal").is_ok() {
        true
    } else if c.expect_keyword("quotient").is_ok() {
        false
    } else {
        return Err(c.err("expected `ideal` or `quotient`"));
    };
    c.expect_end()?;

    let mut c = Cursor::new(parts[2], line_no, off2);
    c.expect_keyword("n")?;
    c.expect(b':')?;
    let n = c.dimension()?;
    c.expect_end()?;

    let mut c = Cursor::new(parts[1], line_no, off1);
    c.expect_keyword("ideal")?;
    c.expect(b':')?;
    let gens = c.gens(n)?;
    c.expect_end()?;
    let ideal = MonomialIdeal::new(n, gens)?;

    Ok(if kind {
        Target::Ideal(ideal)
    } else {
        Target::Quotient(ideal)
    })
}

fn parse_slab(line: &str, line_no: usize, n: usize) -> Result<Slab> {
    let mut c = Cursor::new(line, line_no, 0);
    let origin = c.monomial(n)?;
    c.skip_ws();
    c.expect_keyword("K")?;
    c.expect(b'[')?;
    let mut free = Vec::new();
    if c.peek() != Some(b']') {
        loop {
            c.expect(b'x')?;
            let idx = c.uint()?;
            if idx == 0 || idx as usize > n {
                return Err(c.err(format!("variable x{idx} outside x1..x{n}")));
            }
            free.push(idx as usize - 1);
            if !c.eat(b',') {
                break;
            }
        }
    }
    c.expect(b']')?;
    c.expect_end()?;
    Ok(Slab::new(origin, free))
}

/// Parses a decomposition file (header plus slab lines).
pub fn parse_decomposition(s: &str) -> Result<StanleyDecomposition> {
    let mut target: Option<Target> = None;
    let mut slabs = Vec::new();
    for (idx, raw) in s.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end();
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        match &target {
            None => target = Some(parse_header(line, line_no)?),
            Some(t) => slabs.push(parse_slab(line, line_no, t.dim())?),
        }
    }
    let target = target.ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "missing header line".into(),
    })?;
    Ok(StanleyDecomposition::new(target, slabs))
}
