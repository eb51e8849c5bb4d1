//! Line-oriented text formats.
//!
//! All formats share the same conventions: UTF-8, `#` starts a comment,
//! blank lines are ignored, and key lines look like `key: tokens...`.
//! Serialization is deterministic, so fixed seeds reproduce byte-identical
//! files.

pub mod bqt;
pub mod dsys;
pub mod matrix;
pub mod poly;
pub mod rgs;

use std::fmt::Display;

/// Errors from the text-format layer.
#[derive(Debug, thiserror::Error)]
pub enum FmtError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error(transparent)]
    Core(#[from] ribbonkit_core::Error),
}

pub type FmtResult<T> = Result<T, FmtError>;

pub(crate) fn syntax<T>(line: usize, col: usize, msg: impl Display) -> FmtResult<T> {
    Err(FmtError::Syntax {
        line,
        col,
        msg: msg.to_string(),
    })
}

/// One logical line: 1-based number, the content with comments stripped.
pub(crate) struct Line<'a> {
    pub number: usize,
    pub content: &'a str,
}

/// Strips comments and blank lines, keeping line numbers.
pub(crate) fn logical_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim_end();
            if content.trim().is_empty() {
                None
            } else {
                Some(Line {
                    number: i + 1,
                    content,
                })
            }
        })
        .collect()
}

/// Splits `key: rest` or `key arg: rest`; returns (key, optional arg, rest,
/// column of rest).
pub(crate) fn split_key(line: &Line<'_>) -> FmtResult<(String, Option<String>, String)> {
    let Some((head, rest)) = line.content.split_once(':') else {
        return syntax(
            line.number,
            1,
            format!("expected `key: ...`, got `{}`", line.content.trim()),
        );
    };
    let mut parts = head.split_whitespace();
    let Some(key) = parts.next() else {
        return syntax(line.number, 1, "missing key before `:`");
    };
    let arg = parts.next().map(str::to_string);
    if parts.next().is_some() {
        return syntax(
            line.number,
            1,
            format!("too many tokens before `:` in `{head}`"),
        );
    }
    Ok((key.to_string(), arg, rest.trim().to_string()))
}
