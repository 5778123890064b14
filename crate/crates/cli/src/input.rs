use std::io::Read;
use std::path::Path;

use crate::error::{CliError, Result};

/// Collects whitespace-separated tokens from inline arguments, a file, or
/// standard input (`-`, or when neither of the others is given).
pub fn read_tokens(inline: &[String], file: Option<&Path>) -> Result<Vec<String>> {
    let text = match file {
        Some(path) if path == Path::new("-") => read_stdin()?,
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        None if inline.is_empty() => read_stdin()?,
        None => inline.join(" "),
    };
    let mut tokens: Vec<String> = text.split_whitespace().map(str::to_owned).collect();
    if file.is_some() {
        tokens.extend(inline.iter().flat_map(|s| s.split_whitespace().map(str::to_owned)));
    }
    Ok(tokens)
}

fn read_stdin() -> Result<String> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| CliError::Input(format!("standard input: {e}")))?;
    Ok(text)
}
