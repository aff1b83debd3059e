//! The matrix file format.
//!
//! A header line `m n`, followed by `m` rows of `n` whitespace-separated
//! entries. `#` starts a comment running to end of line; blank lines are
//! ignored. Entries are exact: integers, `p/q` fractions, finite decimals
//! and scientific decimals (converted to rationals without any float
//! round-trip).

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{format_rational, parse_rational, Rat};

/// Parses the matrix file format from text.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix> {
    let mut shape: Option<(usize, usize)> = None;
    let mut entries: Vec<Rat> = Vec::new();
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        last_line = line_no;
        let mut tokens = line.split_whitespace();
        if shape.is_none() {
            let m = parse_dim(tokens.next(), line_no, "row count")?;
            let n = parse_dim(tokens.next(), line_no, "column count")?;
            if let Some(extra) = tokens.next() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unexpected token `{extra}` after the header"),
                });
            }
            shape = Some((m, n));
            continue;
        }
        let (m, n) = shape.unwrap();
        for token in tokens {
            if entries.len() == m * n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("more than {} entries for a {m}x{n} matrix", m * n),
                });
            }
            entries.push(parse_rational(token).map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?);
        }
    }
    let Some((m, n)) = shape else {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: "missing `m n` header".into(),
        });
    };
    if entries.len() != m * n {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: format!(
                "expected {} entries for a {m}x{n} matrix, found {}",
                m * n,
                entries.len()
            ),
        });
    }
    RationalMatrix::new(m, n, entries)
}

fn parse_dim(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what} in header"),
    })?;
    let value: usize = token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{what} `{token}` is not a positive integer"),
    })?;
    if value == 0 {
        return Err(Error::Parse {
            line,
            message: format!("{what} must be at least 1"),
        });
    }
    Ok(value)
}

/// Serializes a matrix in the file format; `parse_matrix` inverts this
/// exactly.
pub fn format_matrix(a: &RationalMatrix) -> String {
    let mut out = format!("{} {}\n", a.rows(), a.cols());
    for i in 1..=a.rows() {
        let row: Vec<String> = (1..=a.cols())
            .map(|j| format_rational(a.at(i, j)))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::testgen::fixture;

    #[test]
    fn parses_mixed_entry_grammar() {
        let text = "# demo\n2 3\n1 -2/4 0.5\n-1e-6 3.25 7\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(a.at(1, 2), &rat(-1, 2));
        assert_eq!(a.at(1, 3), &rat(1, 2));
        assert_eq!(a.at(2, 1), &rat(-1, 1_000_000));
        assert_eq!(a.at(2, 3), &rat(7, 1));
    }

    #[test]
    fn entries_may_wrap_lines() {
        let a = parse_matrix("2 2\n1 2 3\n4\n").unwrap();
        assert_eq!(a.at(2, 1), &rat(3, 1));
    }

    #[test]
    fn round_trips_fixtures() {
        for name in crate::testgen::FIXTURE_NAMES {
            let a = fixture(name).unwrap();
            assert_eq!(parse_matrix(&format_matrix(&a)).unwrap(), a);
        }
    }

    #[test]
    fn reports_offending_line() {
        let err = parse_matrix("2 2\n1 2\nx 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse_matrix("2 2\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_matrix("2 2\n1 2 3 4 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_matrix("0 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_matrix("# nothing\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}
