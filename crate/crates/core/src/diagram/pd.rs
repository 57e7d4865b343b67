//! PD text: `X[a,b,c,d]` entries separated by whitespace or commas, an
//! optional `PD[...]` wrapper, `B[...]` for open endpoints and `#` comments.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Crossing, DiagramError, Label, PdDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct PdParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        Lexer {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn err(&self, message: impl Into<String>) -> PdParseError {
        PdParseError {
            line: self.line,
            column: self.col,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_separators(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() || c == ',' {
                self.bump();
            } else if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<(), PdParseError> {
        self.skip_separators_no_comma();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn skip_separators_no_comma(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn number(&mut self) -> Result<(Label, usize, usize), PdParseError> {
        self.skip_separators_no_comma();
        let (line, col) = (self.line, self.col);
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            return Err(self.err("expected an edge label"));
        }
        let v = s.parse().map_err(|_| PdParseError {
            line,
            column: col,
            message: format!("edge label {s} is too large"),
        })?;
        Ok((v, line, col))
    }

    /// Reads `[n, n, ...]` with exactly `arity` entries when given.
    fn label_list(&mut self, arity: Option<usize>) -> Result<Vec<(Label, usize, usize)>, PdParseError> {
        self.expect('[')?;
        let mut out = Vec::new();
        loop {
            self.skip_separators_no_comma();
            if self.peek() == Some(']') {
                self.bump();
                break;
            }
            if !out.is_empty() {
                self.expect(',')?;
            }
            out.push(self.number()?);
        }
        if let Some(n) = arity {
            if out.len() != n {
                return Err(self.err(format!("crossing needs {n} labels, found {}", out.len())));
            }
        }
        Ok(out)
    }
}

/// Parses PD text into a validated diagram.
pub fn parse_pd(text: &str) -> Result<PdDiagram, DiagramError> {
    let mut lx = Lexer::new(text);
    let mut crossings = Vec::new();
    let mut boundary = Vec::new();
    let mut positions: HashMap<Label, Vec<(usize, usize)>> = HashMap::new();
    let mut wrapped = false;
    loop {
        lx.skip_separators();
        let Some(c) = lx.peek() else { break };
        match c {
            'X' => {
                lx.bump();
                let labels = lx.label_list(Some(4))?;
                let mut arr = [0; 4];
                for (slot, (l, line, col)) in labels.into_iter().enumerate() {
                    arr[slot] = l;
                    positions.entry(l).or_default().push((line, col));
                }
                crossings.push(Crossing(arr));
            }
            'B' => {
                lx.bump();
                for (l, line, col) in lx.label_list(None)? {
                    boundary.push((l, line, col));
                }
            }
            'P' if !wrapped => {
                lx.bump();
                if lx.bump() != Some('D') {
                    return Err(lx.err("expected 'PD['").into());
                }
                lx.expect('[')?;
                wrapped = true;
            }
            ']' if wrapped => {
                lx.bump();
                wrapped = false;
                lx.skip_separators();
                if lx.peek().is_some() {
                    return Err(lx.err("unexpected text after closing ']'").into());
                }
            }
            other => return Err(lx.err(format!("unexpected character '{other}'")).into()),
        }
    }
    if wrapped {
        return Err(lx.err("missing closing ']' for PD[").into());
    }
    for &(l, line, col) in &boundary {
        let n = positions.get(&l).map_or(0, Vec::len);
        if n != 1 {
            return Err(PdParseError {
                line,
                column: col,
                message: format!("boundary label {l} must appear in exactly one crossing, found {n}"),
            }
            .into());
        }
    }
    let boundary: Vec<Label> = boundary.into_iter().map(|(l, _, _)| l).collect();
    let mut bad: Vec<(usize, usize, Label, usize)> = positions
        .iter()
        .filter(|(l, p)| !boundary.contains(l) && p.len() != 2)
        .map(|(&l, p)| {
            let (line, col) = if p.len() > 2 { p[2] } else { p[0] };
            (line, col, l, p.len())
        })
        .collect();
    bad.sort_unstable();
    if let Some(&(line, column, l, n)) = bad.first() {
        return Err(PdParseError {
            line,
            column,
            message: format!("edge label {l} appears {n} time(s); interior labels must appear exactly twice"),
        }
        .into());
    }
    PdDiagram::new(crossings, boundary)
}

impl FromStr for PdDiagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

/// One crossing per line; a `B[...]` line first when the diagram is open.
impl fmt::Display for PdDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.boundary.is_empty() {
            let b: Vec<String> = self.boundary.iter().map(Label::to_string).collect();
            writeln!(f, "B[{}]", b.join(","))?;
        }
        for x in &self.crossings {
            let [a, b, c, d] = x.0;
            writeln!(f, "X[{a},{b},{c},{d}]")?;
        }
        Ok(())
    }
}
