//! Matrix literals of the form `[[a, b], [c, d]]`.

use crate::matrix::{ComplexMatrix2, C64};

/// Parses `[[a, b], [c, d]]` where each entry is a complex number such as
/// `1`, `-i`, `0.5+2i` or `2.5e-3-1i`.
pub fn parse_matrix(src: &str) -> Result<ComplexMatrix2, String> {
    let compact: String = src.chars().filter(|ch| !ch.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .ok_or_else(|| format!("expected [[a,b],[c,d]], got {src:?}"))?;
    let rows: Vec<&str> = inner.split("],[").collect();
    if rows.len() != 2 {
        return Err(format!("expected two rows in {src:?}"));
    }
    let mut entries = [C64::new(0.0, 0.0); 4];
    for (r, row) in rows.iter().enumerate() {
        let cols: Vec<&str> = row.split(',').collect();
        if cols.len() != 2 {
            return Err(format!("row {} must have two entries", r + 1));
        }
        for (k, token) in cols.iter().enumerate() {
            entries[2 * r + k] = token
                .parse::<C64>()
                .map_err(|_| format!("bad complex entry {token:?}"))?;
        }
    }
    let [a, b, c, d] = entries;
    ComplexMatrix2::try_new([[a, b], [c, d]]).map_err(|e| e.to_string())
}

fn format_entry(x: C64) -> String {
    format!("{:?}{:+?}i", x.re, x.im)
}

/// Inverse of [`parse_matrix`]; round-trips exactly.
pub fn format_matrix(m: &ComplexMatrix2) -> String {
    let [[a, b], [c, d]] = m.rows();
    format!(
        "[[{},{}],[{},{}]]",
        format_entry(a),
        format_entry(b),
        format_entry(c),
        format_entry(d)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_entries() {
        let m = parse_matrix("[[1, -i], [0.5+2i, 2.5e-3-1i]]").unwrap();
        assert_eq!(m.get(0, 0), C64::new(1.0, 0.0));
        assert_eq!(m.get(0, 1), C64::new(0.0, -1.0));
        assert_eq!(m.get(1, 0), C64::new(0.5, 2.0));
        assert_eq!(m.get(1, 1), C64::new(2.5e-3, -1.0));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "",
            "[[1,0],[0]]",
            "[1,0,0,1]",
            "[[1,0],[0,x]]",
            "[[1,0],[0,1],[0,0]]",
            "[[nan,0],[0,1]]",
        ] {
            assert!(parse_matrix(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn format_round_trips() {
        let m = parse_matrix("[[0.1-0.2i, 1e-17+3i], [-0, -7.25e300i]]").unwrap();
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }
}
