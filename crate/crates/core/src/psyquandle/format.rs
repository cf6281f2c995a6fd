//! `.psy` files: the order `n`, then `n` rows of `4n` entries.

use super::Tables;
use crate::error::{Error, Result};

pub fn parse_psy(text: &str) -> Result<Tables> {
    let mut n: Option<usize> = None;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut last_line = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        last_line = lineno + 1;
        let mut vals = Vec::new();
        let mut col = 0;
        for tok in line.split_whitespace() {
            col = line[col..].find(tok).map(|i| i + col).unwrap_or(col);
            let v: i64 = tok.parse().map_err(|_| Error::Syntax {
                line: lineno + 1,
                column: col + 1,
                message: format!("expected an integer, found `{tok}`"),
            })?;
            vals.push((col, v));
            col += tok.len();
        }
        match n {
            None => {
                if vals.len() != 1 || vals[0].1 < 1 {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        column: 1,
                        message: "first line must hold the order n >= 1".into(),
                    });
                }
                n = Some(vals[0].1 as usize);
            }
            Some(n) => {
                if rows.len() == n {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        column: 1,
                        message: format!("more than {n} rows"),
                    });
                }
                if vals.len() != 4 * n {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        column: vals.get(4 * n).map(|v| v.0 + 1).unwrap_or(line.len() + 1),
                        message: format!("expected {} entries, found {}", 4 * n, vals.len()),
                    });
                }
                if let Some(&(c, v)) = vals.iter().find(|(_, v)| *v < 1 || *v as usize > n) {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        column: c + 1,
                        message: format!("entry {v} outside 1..={n}"),
                    });
                }
                rows.push(vals.into_iter().map(|v| v.1).collect());
            }
        }
    }
    let n = n.ok_or(Error::EmptyInput)?;
    if rows.len() != n {
        return Err(Error::Syntax {
            line: last_line + 1,
            column: 1,
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    Tables::from_rows(&rows)
}

pub fn emit_psy(t: &Tables) -> String {
    let n = t.order();
    let width = n.to_string().len();
    let mut s = format!("{n}\n");
    for row in t.rows() {
        let blocks: Vec<String> = row
            .chunks(n)
            .map(|b| {
                b.iter()
                    .map(|v| format!("{v:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        s.push_str(&blocks.join("   "));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let t = crate::psyquandle::alexander_tables(5, 2, 3, 4, 1).unwrap();
        assert_eq!(parse_psy(&emit_psy(&t)).unwrap(), t);
    }

    #[test]
    fn bad_entry_located() {
        let e = parse_psy("2\n1 1 1 1 1 1 1 1\n2 2 2 7 2 2 2 2\n").unwrap_err();
        assert_eq!(
            e,
            Error::Syntax {
                line: 3,
                column: 7,
                message: "entry 7 outside 1..=2".into()
            }
        );
    }

    #[test]
    fn comments_and_short_input() {
        let t =
            parse_psy("# two elements\n2\n2 2 2 2 2 2 2 2 # row one\n1 1 1 1 1 1 1 1\n").unwrap();
        assert_eq!(t.order(), 2);
        assert!(parse_psy("2\n1 1 1 1 1 1 1 1\n").is_err());
    }
}
