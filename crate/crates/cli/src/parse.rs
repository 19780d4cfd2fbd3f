//! Text form of a monomial ideal: generators separated by commas, each a
//! `*`-separated product of `x<index>` or `x<index>^<exp>` factors, indices
//! 1-based. Whitespace (including newlines, so files work unchanged) is
//! ignored between tokens. A bare `1` is the unit generator, so rendered
//! ideals parse back. Errors carry the byte offset of the first violation.

use monomult::{Error, Monomial, MonomialIdeal, Result};

/// Largest accepted variable index; keeps exponent vectors of sane size.
const MAX_INDEX: usize = 4096;
/// Largest accepted exponent.
const MAX_EXP: u64 = 1_000_000;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn err(&self, msg: &str) -> Error {
        Error::input(format!("syntax error at byte {}: {msg}", self.pos))
    }

    fn number(&mut self, what: &str) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(&format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse::<u64>()
            .map_err(|_| Error::input(format!("syntax error at byte {start}: {what} out of range")))
    }

    /// One factor: `x<index>` with optional `^<exp>`, or the literal `1`.
    /// Returns (index, exponent) with index 0 for the unit factor.
    fn factor(&mut self) -> Result<(usize, u64)> {
        match self.peek() {
            Some(b'1') => {
                self.bump();
                Ok((0, 0))
            }
            Some(b'x') => {
                self.bump();
                let at = self.pos;
                let idx = self.number("variable index after 'x'")?;
                if idx == 0 {
                    return Err(Error::input(format!(
                        "syntax error at byte {at}: variable index must be at least 1"
                    )));
                }
                if idx > MAX_INDEX as u64 {
                    return Err(Error::input(format!(
                        "syntax error at byte {at}: variable index {idx} exceeds the limit of {MAX_INDEX}"
                    )));
                }
                let mut exp = 1;
                if self.peek() == Some(b'^') {
                    self.bump();
                    let at = self.pos;
                    exp = self.number("exponent after '^'")?;
                    if exp > MAX_EXP {
                        return Err(Error::input(format!(
                            "syntax error at byte {at}: exponent {exp} exceeds the limit of {MAX_EXP}"
                        )));
                    }
                }
                Ok((idx as usize, exp))
            }
            _ => Err(self.err("expected 'x<index>' or '1'")),
        }
    }

    /// One generator: factors joined by '*'. Repeated variables multiply.
    fn generator(&mut self) -> Result<Vec<(usize, u64)>> {
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                self.skip_ws();
                factors.push(self.factor()?);
            } else {
                return Ok(factors);
            }
        }
    }
}

/// Parse ideal text into a canonical (minimalized) ideal. The variable count
/// defaults to the largest index used; `n_override` widens the ring and must
/// not be smaller than any index.
pub fn parse_ideal(text: &str, n_override: Option<usize>) -> Result<MonomialIdeal> {
    let mut sc = Scanner::new(text);
    let mut raw_gens: Vec<Vec<(usize, u64)>> = Vec::new();
    let mut max_index = 0usize;

    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(sc.err("empty input, expected at least one generator"));
    }
    loop {
        let gen = sc.generator()?;
        for &(idx, _) in &gen {
            max_index = max_index.max(idx);
        }
        raw_gens.push(gen);
        sc.skip_ws();
        match sc.bump() {
            None => break,
            Some(b',') => {
                sc.skip_ws();
                if sc.peek().is_none() {
                    return Err(sc.err("expected a generator after ','"));
                }
            }
            Some(_) => {
                sc.pos -= 1;
                return Err(sc.err("expected ',' between generators"));
            }
        }
    }

    // A pure-unit ideal mentions no variables; give it one so the ring is a
    // polynomial ring.
    let n_min = max_index.max(1);
    let n = match n_override {
        None => n_min,
        Some(n) if n >= n_min => n,
        Some(n) => {
            return Err(Error::input(format!(
                "variable count {n} is smaller than the largest index {max_index} used"
            )));
        }
    };

    let mut gens = Vec::with_capacity(raw_gens.len());
    for factors in raw_gens {
        let mut exps = vec![0u32; n];
        for (idx, exp) in factors {
            if idx > 0 {
                let slot = &mut exps[idx - 1];
                *slot = slot
                    .checked_add(u32::try_from(exp).expect("bounded by MAX_EXP"))
                    .filter(|&e| e as u64 <= MAX_EXP)
                    .ok_or_else(|| {
                        Error::input(format!("combined exponent of x{idx} exceeds {MAX_EXP}"))
                    })?;
            }
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(n, gens)
}
