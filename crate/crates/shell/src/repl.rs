//! Read-evaluate-print loop. Statements end with `;`; a trailing statement
//! without one runs at end of input. Lines starting with `#` are comments.

use std::io::{self, BufRead, Write};

use crate::session::{Outcome, Session};

/// Runs statements from `input` until end of input or `quit`.
pub fn repl(input: impl BufRead, out: &mut impl Write, prompt: bool) -> io::Result<()> {
    let mut session = Session::new();
    let mut pending = String::new();
    if prompt {
        write!(out, "> ")?;
        out.flush()?;
    }
    for line in input.lines() {
        let line = line?;
        if line.trim_start().starts_with('#') {
            continue;
        }
        pending.push_str(&line);
        pending.push('\n');
        while let Some(i) = pending.find(';') {
            let stmt: String = pending.drain(..=i).collect();
            if !execute(&mut session, &stmt[..stmt.len() - 1], out)? {
                return Ok(());
            }
        }
        if prompt {
            write!(out, "{}", if pending.trim().is_empty() { "> " } else { "  " })?;
            out.flush()?;
        }
    }
    execute(&mut session, &pending, out)?;
    Ok(())
}

/// Runs one statement; `false` once the session should end.
fn execute(session: &mut Session, stmt: &str, out: &mut impl Write) -> io::Result<bool> {
    if stmt.trim().is_empty() {
        return Ok(true);
    }
    match session.run(stmt.trim()) {
        Ok(Outcome::Value(e)) => writeln!(out, "{e}")?,
        Ok(Outcome::Quit) => return Ok(false),
        Err(e) => writeln!(out, "error: {e}")?,
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn transcript(src: &str) -> String {
        let mut out = Vec::new();
        repl(src.as_bytes(), &mut out, false).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn statements_split_on_semicolons() {
        assert_eq!(transcript("1/2+1/3; %-%;\nx+\n1;"), "5/6\n0\n1+x\n");
        assert_eq!(transcript("2^10"), "1024\n");
        assert_eq!(transcript("# note\nx +;\ny;"), "error: syntax error at position 4: unexpected end of input\ny\n");
        assert_eq!(transcript("1; quit; 2;"), "1\n");
    }
}
