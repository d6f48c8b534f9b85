//! Plain-text PGM (P2) rendering: one pixel per entry, three gray levels so
//! zero entries (conference matrices, Paley cores) stay visible.
//!
//! Pixel mapping: -1 → 0, 0 → 1, +1 → 2, with maxval 2. Output is
//! deterministic byte for byte.

use std::fs;
use std::io;
use std::path::Path;

use crate::matrix::SignMatrix;

pub fn pgm_string(m: &SignMatrix) -> String {
    let n = m.order();
    let mut out = String::with_capacity(16 + 2 * n * n);
    out.push_str("P2\n");
    out.push_str(&format!("{n} {n}\n2\n"));
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            out.push(char::from(b'0' + (m.get(i, j) + 1) as u8));
        }
        out.push('\n');
    }
    out
}

pub fn write_pgm(m: &SignMatrix, path: &Path) -> io::Result<()> {
    fs::write(path, pgm_string(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::{assemble_p, PropusTriple};
    use crate::field::{build_field, paley_core};

    #[test]
    fn order_four_hadamard_pixels() {
        let one = SignMatrix::all_ones(1);
        let t = PropusTriple::new(one.clone(), one.clone(), one.neg()).unwrap();
        let h = assemble_p(&t).unwrap();
        let pgm = pgm_string(&h);
        assert!(pgm.starts_with("P2\n4 4\n2\n"));
        let pixels: Vec<&str> = pgm
            .lines()
            .skip(3)
            .flat_map(|l| l.split_whitespace())
            .collect();
        assert_eq!(pixels.len(), 16);
        assert!(pixels.iter().all(|&p| p == "0" || p == "2"));
    }

    #[test]
    fn paley_core_q5_has_five_mid_gray_diagonal_pixels() {
        let f = build_field(5, 1).unwrap();
        let q = paley_core(&f).unwrap();
        let pgm = pgm_string(&q);
        let rows: Vec<Vec<&str>> = pgm
            .lines()
            .skip(3)
            .map(|l| l.split_whitespace().collect())
            .collect();
        assert_eq!(rows.len(), 5);
        let ones = rows
            .iter()
            .flatten()
            .filter(|&&p| p == "1")
            .count();
        assert_eq!(ones, 5);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row[i], "1");
        }
    }

    #[test]
    fn output_is_stable() {
        let f = build_field(3, 1).unwrap();
        let q = paley_core(&f).unwrap();
        assert_eq!(pgm_string(&q), "P2\n3 3\n2\n1 2 0\n0 1 2\n2 0 1\n");
    }
}
