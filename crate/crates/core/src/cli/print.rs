//! Canonical text form of elements.
//!
//! Terms are printed in descending basis order, so in `U` the normal form
//! of `E1 F1` at `q = 2` reads `F1 E1 + 2/3 K1 - 2/3 K1^-1`. Runs of equal
//! root letters are grouped as powers. The output parses back to the same
//! element.

use crate::algebra::{Element, Kind, NormalWord};
use crate::coeffs::Scalar;

fn push_run(out: &mut Vec<String>, letter: char, index: usize, count: usize) {
    if count == 1 {
        out.push(format!("{letter}{}", index + 1));
    } else {
        out.push(format!("{letter}{}^{count}", index + 1));
    }
}

fn block(out: &mut Vec<String>, letter: char, word: &[usize]) {
    let mut iter = word.iter().peekable();
    while let Some(&i) = iter.next() {
        let mut n = 1;
        while iter.peek() == Some(&&i) {
            iter.next();
            n += 1;
        }
        push_run(out, letter, i, n);
    }
}

/// `1` for the unit word, otherwise space-separated letters.
pub fn format_word(w: &NormalWord, kind: Kind) -> String {
    let (l, u, t) = kind.letters();
    let mut parts = Vec::new();
    block(&mut parts, l, &w.lower);
    block(&mut parts, u, &w.upper);
    for (i, &g) in w.torus.iter().enumerate() {
        match g {
            0 => {}
            1 => parts.push(format!("{t}{}", i + 1)),
            _ => parts.push(format!("{t}{}^{g}", i + 1)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn term(c: &Scalar, w: &NormalWord, kind: Kind) -> String {
    if w.is_unit() {
        c.to_string()
    } else if c.is_one() {
        format_word(w, kind)
    } else {
        format!("{c} {}", format_word(w, kind))
    }
}

pub fn print_canonical(e: &Element, kind: Kind) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (w, c)) in e.terms().rev().enumerate() {
        let neg = c.is_negative();
        let body = term(&c.abs(), w, kind);
        match (k, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        let w = NormalWord::new(vec![0, 0, 1], vec![1], vec![-1, 2]);
        assert_eq!(format_word(&w, Kind::U), "F1^2 F2 E2 K1^-1 K2^2");
        assert_eq!(format_word(&w, Kind::Alambda), "Y1^2 Y2 X2 Z1^-1 Z2^2");
        assert_eq!(format_word(&NormalWord::unit(2), Kind::U), "1");
    }

    #[test]
    fn elements() {
        assert_eq!(print_canonical(&Element::zero(), Kind::U), "0");
        let mut e = Element::zero();
        e.add_term(NormalWord::new(vec![0], vec![0], vec![0]), Scalar::one());
        e.add_term(NormalWord::torus_only(vec![1]), Scalar::new(2, 3).unwrap());
        e.add_term(NormalWord::torus_only(vec![-1]), Scalar::new(-2, 3).unwrap());
        assert_eq!(print_canonical(&e, Kind::U), "F1 E1 + 2/3 K1 - 2/3 K1^-1");
        let e = Element::scalar(Scalar::from_int(-5), 1);
        assert_eq!(print_canonical(&e, Kind::U), "-5");
    }
}
