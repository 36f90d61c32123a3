//! Textual format for braid and slice words.
//!
//! Grammar: the first meaningful line is `strands <n>`, followed by
//! whitespace-separated tokens. Braid mode uses `s<i>` and `s<i>'`; slice
//! mode uses `X+<p>`, `X-<p>`, `U<p>` and `A<p>`. The two modes cannot mix.
//! `#` starts a comment running to end of line. Printing normalizes
//! layout, so parse -> print -> parse is the identity on token streams.

use crate::braid::{BraidLetter, BraidWord, Sign};
use crate::diagram::{SliceEvent, SliceWord};
use crate::{Error, Result};

/// Result of parsing: the mode is inferred from the tokens. A header with
/// no tokens parses as the empty slice word, which converts to either
/// identity downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Braid(BraidWord),
    Slice(SliceWord),
}

impl Parsed {
    /// View as a slice word, converting braids through their crossings.
    pub fn into_slice_word(self) -> SliceWord {
        match self {
            Parsed::Braid(w) => w.to_slice_word(),
            Parsed::Slice(w) => w,
        }
    }

    pub fn strands(&self) -> u32 {
        match self {
            Parsed::Braid(w) => w.strands(),
            Parsed::Slice(w) => w.strands(),
        }
    }
}

struct Token {
    text: String,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let body = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let mut col = 0;
        for piece in body.split_whitespace() {
            col = body[col..].find(piece).map(|i| i + col).unwrap_or(col);
            out.push(Token {
                text: piece.to_string(),
                line: ln + 1,
                col: col + 1,
            });
            col += piece.len();
        }
    }
    out
}

fn syntax(t: &Token, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line: t.line,
        col: t.col,
        msg: msg.into(),
    }
}

fn parse_number(t: &Token, digits: &str, what: &str) -> Result<u32> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(t, format!("expected {what}, got `{}`", t.text)));
    }
    digits
        .parse::<u32>()
        .map_err(|_| syntax(t, format!("{what} out of range in `{}`", t.text)))
}

/// Parse the shared format, inferring braid or slice mode.
pub fn parse(text: &str) -> Result<Parsed> {
    let tokens = tokenize(text);
    if tokens.len() < 2 || tokens[0].text != "strands" {
        let t = tokens.first().map(|t| (t.line, t.col)).unwrap_or((1, 1));
        return Err(Error::Syntax {
            line: t.0,
            col: t.1,
            msg: "input must start with `strands <n>`".into(),
        });
    }
    let n = parse_number(&tokens[1], &tokens[1].text, "strand count")?;

    enum Mode {
        Unknown,
        Braid(Vec<BraidLetter>),
        Slice(Vec<SliceEvent>),
    }
    let mut mode = Mode::Unknown;

    for t in &tokens[2..] {
        let text = t.text.as_str();
        let braid_token = text.starts_with('s');
        let slice_token =
            text.starts_with("X+") || text.starts_with("X-") || text.starts_with('U') || text.starts_with('A');
        if !braid_token && !slice_token {
            return Err(syntax(t, format!("unrecognized token `{text}`")));
        }
        match (&mut mode, braid_token) {
            (Mode::Unknown, true) => mode = Mode::Braid(Vec::new()),
            (Mode::Unknown, false) => mode = Mode::Slice(Vec::new()),
            (Mode::Braid(_), false) | (Mode::Slice(_), true) => {
                return Err(Error::MixedMode {
                    line: t.line,
                    col: t.col,
                });
            }
            _ => {}
        }
        match &mut mode {
            Mode::Braid(letters) => {
                let (digits, sign) = match text.strip_suffix('\'') {
                    Some(rest) => (&rest[1..], Sign::Neg),
                    None => (&text[1..], Sign::Pos),
                };
                let index = parse_number(t, digits, "generator index")?;
                letters.push(BraidLetter::new(index, sign));
            }
            Mode::Slice(events) => {
                let ev = if let Some(rest) = text.strip_prefix("X+") {
                    SliceEvent::Cross {
                        pos: parse_number(t, rest, "position")?,
                        sign: Sign::Pos,
                    }
                } else if let Some(rest) = text.strip_prefix("X-") {
                    SliceEvent::Cross {
                        pos: parse_number(t, rest, "position")?,
                        sign: Sign::Neg,
                    }
                } else if let Some(rest) = text.strip_prefix('U') {
                    SliceEvent::Cup {
                        pos: parse_number(t, rest, "position")?,
                    }
                } else {
                    let rest = text.strip_prefix('A').expect("token shape checked");
                    SliceEvent::Cap {
                        pos: parse_number(t, rest, "position")?,
                    }
                };
                events.push(ev);
            }
            Mode::Unknown => unreachable!(),
        }
    }

    match mode {
        Mode::Braid(letters) => Ok(Parsed::Braid(BraidWord::new(n, letters)?)),
        Mode::Slice(events) => Ok(Parsed::Slice(SliceWord::new(n, events))),
        Mode::Unknown => Ok(Parsed::Slice(SliceWord::new(n, Vec::new()))),
    }
}

/// Canonical text for a braid word.
pub fn print_braid(w: &BraidWord) -> String {
    let mut out = format!("strands {}", w.strands());
    if !w.letters().is_empty() {
        out.push('\n');
        let tokens: Vec<String> = w
            .letters()
            .iter()
            .map(|l| match l.sign {
                Sign::Pos => format!("s{}", l.index),
                Sign::Neg => format!("s{}'", l.index),
            })
            .collect();
        out.push_str(&tokens.join(" "));
    }
    out.push('\n');
    out
}

/// Canonical text for a slice word.
pub fn print_slice(w: &SliceWord) -> String {
    let mut out = format!("strands {}", w.strands());
    if !w.events().is_empty() {
        out.push('\n');
        let tokens: Vec<String> = w
            .events()
            .iter()
            .map(|e| match *e {
                SliceEvent::Cross {
                    pos,
                    sign: Sign::Pos,
                } => format!("X+{pos}"),
                SliceEvent::Cross {
                    pos,
                    sign: Sign::Neg,
                } => format!("X-{pos}"),
                SliceEvent::Cup { pos } => format!("U{pos}"),
                SliceEvent::Cap { pos } => format!("A{pos}"),
            })
            .collect();
        out.push_str(&tokens.join(" "));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{hopf, whitehead};

    #[test]
    fn parses_slice_words() {
        let p = parse("strands 2\nX+1 X+1").unwrap();
        assert_eq!(p, Parsed::Slice(hopf().word().clone()));
    }

    #[test]
    fn parses_braid_words() {
        let p = parse("strands 2\ns1 s1").unwrap();
        match p {
            Parsed::Braid(w) => {
                assert_eq!(w.strands(), 2);
                assert_eq!(w.letters().len(), 2);
            }
            _ => panic!("expected braid mode"),
        }
        let p = parse("strands 3\ns1 s2' # comment\n").unwrap();
        match p {
            Parsed::Braid(w) => assert_eq!(w.letters()[1].sign, Sign::Neg),
            _ => panic!("expected braid mode"),
        }
    }

    #[test]
    fn rejects_mixed_modes() {
        let err = parse("strands 2\nX+1 s1").unwrap_err();
        assert!(matches!(err, Error::MixedMode { line: 2, .. }));
        let err = parse("strands 2\ns1 U1").unwrap_err();
        assert!(matches!(err, Error::MixedMode { .. }));
    }

    #[test]
    fn reports_syntax_errors_with_position() {
        let err = parse("strands 2\nX+1 X?2").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }));
        assert!(parse("").is_err());
        assert!(parse("strands").is_err());
        assert!(parse("strands x").is_err());
    }

    #[test]
    fn round_trips_are_identities_on_token_streams() {
        for text in [
            "strands 2\nX+1 X+1\n",
            "strands 3\ns1 s2' s1'\n",
            "strands 4\n",
        ] {
            let once = parse(text).unwrap();
            let printed = match &once {
                Parsed::Braid(w) => print_braid(w),
                Parsed::Slice(w) => print_slice(w),
            };
            let twice = parse(&printed).unwrap();
            assert_eq!(once, twice);
        }
        let wh = whitehead();
        let printed = print_slice(wh.word());
        assert_eq!(parse(&printed).unwrap().into_slice_word(), *wh.word());
    }

    #[test]
    fn comments_and_whitespace_are_ignored() {
        let p = parse("# heading\nstrands 2 # two strands\n\n  X+1\tX+1  # twist\n").unwrap();
        assert_eq!(p, Parsed::Slice(hopf().word().clone()));
    }
}
