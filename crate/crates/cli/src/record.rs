//! The line-oriented response format and its human-readable rendering.

use std::fmt::Display;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    pub op: String,
    pub fields: Vec<(String, String)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Structured,
    Plain,
}

impl Record {
    pub fn new(op: impl Into<String>) -> Record {
        Record { op: op.into(), fields: Vec::new() }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.fields.push((key.into(), value.to_string()));
    }

    pub fn push_list<T: Display>(&mut self, key: impl Into<String>, items: impl IntoIterator<Item = T>) {
        self.push(key, list(items));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn is_error(&self) -> bool {
        self.get("error").is_some()
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Structured => {
                out.push_str(&format!("schema: {SCHEMA}\nop: {}\n", self.op));
                for (k, v) in &self.fields {
                    out.push_str(&format!("{k}: {v}\n"));
                }
            }
            Format::Plain => {
                out.push_str(&self.op);
                out.push('\n');
                for (k, v) in &self.fields {
                    out.push_str(&format!("  {k} = {}\n", to_plain(v)));
                }
            }
        }
        out
    }

    /// Reads back a rendered record in either format.
    pub fn parse(text: &str) -> Option<Record> {
        let mut lines = text.lines();
        let first = lines.next()?;
        if let Some(schema) = first.strip_prefix("schema: ") {
            if schema.trim() != SCHEMA.to_string() {
                return None;
            }
            let op = lines.next()?.strip_prefix("op: ")?.to_string();
            let mut fields = Vec::new();
            for l in lines {
                let (k, v) = l.split_once(": ")?;
                fields.push((k.to_string(), v.to_string()));
            }
            Some(Record { op, fields })
        } else {
            let mut fields = Vec::new();
            for l in lines {
                let (k, v) = l.strip_prefix("  ")?.split_once(" = ")?;
                fields.push((k.to_string(), from_plain(v)));
            }
            Some(Record { op: first.to_string(), fields })
        }
    }
}

pub fn list<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", v.join(", "))
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

/// Exponents as superscripts, `z` roots of unity as ζ, `*` as a centred dot.
pub fn to_plain(s: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let prev_alpha = i > 0 && chars[i - 1].is_ascii_alphabetic();
        let next_digit = chars.get(i + 1).is_some_and(|n| n.is_ascii_digit());
        if c == '^' && next_digit {
            i += 1;
            while let Some(d) = chars.get(i).and_then(|c| c.to_digit(10)) {
                out.push(SUPERSCRIPTS[d as usize]);
                i += 1;
            }
            continue;
        }
        match c {
            'z' if next_digit && !prev_alpha => out.push('ζ'),
            '*' => out.push('·'),
            _ => out.push(c),
        }
        i += 1;
    }
    out
}

pub fn from_plain(s: &str) -> String {
    let mut out = String::new();
    let mut in_sup = false;
    for c in s.chars() {
        if let Some(d) = SUPERSCRIPTS.iter().position(|&x| x == c) {
            if !in_sup {
                out.push('^');
                in_sup = true;
            }
            out.push(char::from(b'0' + d as u8));
            continue;
        }
        in_sup = false;
        match c {
            'ζ' => out.push('z'),
            '·' => out.push('*'),
            _ => out.push(c),
        }
    }
    out
}
