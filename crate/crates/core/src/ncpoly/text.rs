//! Plain-text relation lists.
//!
//! One relation per line; `#` starts a comment. A relation is a sum of
//! terms; each term is an optional rational coefficient followed by factors
//! separated by spaces or `*`. A factor is a generator name or a formal
//! parameter `$name`, optionally with `^exponent`. Examples:
//!
//! ```text
//! x12^2
//! x12 x13 + x13 x23 + x23 x12
//! x13 x12 - $q * x12 x13 - 1/2
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::NCPoly;
use super::scalar::ParamScalar;
use super::word::Word;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Number(BigRational),
    Ident(String),
    Param(String),
}

fn lex(line: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '$' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                if j == start {
                    return Err(Error::Parse(format!("`$` without a name in `{line}`")));
                }
                toks.push(Tok::Param(chars[start..j].iter().collect()));
                i = j;
            }
            _ if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let num: String = chars[i..j].iter().collect();
                let mut value = BigRational::from_integer(
                    num.parse::<BigInt>()
                        .map_err(|e| Error::Parse(format!("bad integer `{num}`: {e}")))?,
                );
                if j < chars.len() && chars[j] == '/' {
                    let dstart = j + 1;
                    let mut k = dstart;
                    while k < chars.len() && chars[k].is_ascii_digit() {
                        k += 1;
                    }
                    if k == dstart {
                        return Err(Error::Parse(format!("`/` without denominator in `{line}`")));
                    }
                    let den: String = chars[dstart..k].iter().collect();
                    let den: BigInt = den
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad denominator: {e}")))?;
                    value /= BigRational::from_integer(den);
                    j = k;
                }
                toks.push(Tok::Number(value));
                i = j;
            }
            _ if c.is_alphanumeric() || c == '_' || c == '(' => {
                // generator names may contain parentheses and digits, e.g.
                // `x12` or `(12)`; read a maximal name-ish run
                let mut j = i;
                while j < chars.len()
                    && (chars[j].is_alphanumeric()
                        || matches!(chars[j], '_' | '(' | ')'))
                {
                    j += 1;
                }
                toks.push(Tok::Ident(chars[i..j].iter().collect()));
                i = j;
            }
            _ => {
                return Err(Error::Parse(format!("unexpected character `{c}` in `{line}`")));
            }
        }
    }
    Ok(toks)
}

/// Parse one relation. `gen_names` maps generator names to indices by
/// position.
pub fn parse_relation(line: &str, gen_names: &[&str]) -> Result<NCPoly> {
    let toks = lex(line)?;
    let mut poly = NCPoly::zero();
    let mut i = 0;
    let mut first_term = true;
    while i < toks.len() {
        // sign
        let mut sign = BigRational::from_integer(BigInt::from(1));
        match toks.get(i) {
            Some(Tok::Plus) => {
                i += 1;
            }
            Some(Tok::Minus) => {
                sign = -sign;
                i += 1;
            }
            _ if first_term => {}
            _ => {
                return Err(Error::Parse(format!("expected `+` or `-` in `{line}`")));
            }
        }
        first_term = false;
        // term: factors separated by optional `*`
        let mut coeff = ParamScalar::from_ratio(sign);
        let mut word = Word::empty();
        let mut saw_factor = false;
        loop {
            match toks.get(i) {
                Some(Tok::Number(n)) => {
                    coeff = coeff.mul(&ParamScalar::from_ratio(n.clone()));
                    i += 1;
                }
                Some(Tok::Param(p)) => {
                    let mut exp = 1u32;
                    if toks.get(i + 1) == Some(&Tok::Caret) {
                        exp = expect_exponent(&toks, i + 2, line)?;
                        i += 2;
                    }
                    coeff = coeff.mul(&ParamScalar::param(p).pow(exp));
                    i += 1;
                }
                Some(Tok::Ident(name)) => {
                    let g = gen_names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| {
                            Error::Parse(format!("unknown generator `{name}` in `{line}`"))
                        })?;
                    let mut exp = 1u32;
                    if toks.get(i + 1) == Some(&Tok::Caret) {
                        exp = expect_exponent(&toks, i + 2, line)?;
                        i += 2;
                    }
                    for _ in 0..exp {
                        word.push(g as u8);
                    }
                    i += 1;
                }
                Some(Tok::Star) => {
                    i += 1;
                    continue;
                }
                _ => break,
            }
            saw_factor = true;
        }
        if !saw_factor {
            return Err(Error::Parse(format!("empty term in `{line}`")));
        }
        poly.add_term(word, &coeff);
    }
    Ok(poly)
}

fn expect_exponent(toks: &[Tok], at: usize, line: &str) -> Result<u32> {
    match toks.get(at) {
        Some(Tok::Number(n)) if n.is_integer() => {
            let v = n.to_integer();
            u32::try_from(v).map_err(|_| Error::Parse(format!("bad exponent in `{line}`")))
        }
        _ => Err(Error::Parse(format!("`^` must be followed by an integer in `{line}`"))),
    }
}

/// Parse a whole relation file: one relation per line, `#` comments and
/// blank lines ignored.
pub fn parse_relations(text: &str, gen_names: &[&str]) -> Result<Vec<NCPoly>> {
    let mut out = Vec::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_relation(line, gen_names)?);
    }
    Ok(out)
}

/// Render a relation in the same parseable format: parameters carry their
/// `$` sigil and composite coefficients are distributed, so
/// `parse_relation(print_relation(p)) == p`. Terms are printed in
/// descending order of their words.
pub fn print_relation(p: &NCPoly, gen_names: &[&str]) -> String {
    use num_traits::{One, Signed};
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (w, c) in p.terms().rev() {
        for (mono, r) in c.terms() {
            let neg = r.is_negative();
            let mag = if neg { -r.clone() } else { r.clone() };
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (mono.is_one() && w.is_empty()) {
                factors.push(mag.to_string());
            }
            for (name, exp) in mono.exponents() {
                if exp == 1 {
                    factors.push(format!("${name}"));
                } else {
                    factors.push(format!("${name}^{exp}"));
                }
            }
            for &g in &w.0 {
                factors.push(gen_names[g as usize].to_string());
            }
            parts.push((neg, factors.join(" ")));
        }
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (neg, body)) in parts.iter().enumerate() {
        if k == 0 {
            if *neg {
                out.push_str("- ");
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let names = ["x12", "x13", "x23"];
        let rels = parse_relations(
            "x12^2\nx12 x13 + x13 x23 + x23 x12\nx13*x12 - $q x12 x13 - 1/2\n# comment\n",
            &names,
        )
        .unwrap();
        assert_eq!(rels.len(), 3);
        assert_eq!(print_relation(&rels[0], &names), "x12 x12");
        assert_eq!(
            print_relation(&rels[1], &names),
            "x23 x12 + x13 x23 + x12 x13"
        );
        assert_eq!(
            print_relation(&rels[2], &names),
            "x13 x12 - $q x12 x13 - 1/2"
        );
        // reparse the printed form
        for r in &rels {
            let printed = print_relation(r, &names);
            let back = parse_relation(&printed, &names).unwrap();
            assert_eq!(&back, r);
        }
        // composite coefficients distribute but still roundtrip
        let p = parse_relation("x12 x13 - $q x12 x13 + 2 x13", &names).unwrap();
        assert_eq!(print_relation(&p, &names), "x12 x13 - $q x12 x13 + 2 x13");
        assert_eq!(parse_relation(&print_relation(&p, &names), &names).unwrap(), p);
    }

    #[test]
    fn errors() {
        let names = ["x"];
        assert!(parse_relation("y", &names).is_err());
        assert!(parse_relation("x ^ q", &names).is_err());
        assert!(parse_relation("$ x", &names).is_err());
    }
}
