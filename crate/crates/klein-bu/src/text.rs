//! Text formats: the word grammar, group-element literals, and the
//! expression language of `eval`.
//!
//! Word grammar: `word := term (WS term)* | "1"` with
//! `term := ("u" | "v" | "B") ("^" INT)?`; `B` expands to `u v u v^-1` at
//! parse time. Output uses the same grammar without `B`.

use klein_braid::p2::{l_sigma, rho, theta, P2Elem};
use klein_braid::pi1k::Pi1K;
use klein_braid::word::{word_b, FreeWord, Gen};

fn parse_int(s: &str) -> Result<i64, String> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| format!("expected an integer, found {s:?}"))
}

fn parse_term(tok: &str) -> Result<FreeWord, String> {
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => (b, parse_int(e)?),
        None => (tok, 1),
    };
    match base {
        "u" => Ok(FreeWord::gen_pow(Gen::U, exp)),
        "v" => Ok(FreeWord::gen_pow(Gen::V, exp)),
        "B" => Ok(word_b().pow(exp)),
        _ => Err(format!("unknown term {tok:?} (expected u, v or B)")),
    }
}

/// Parses a word in the grammar above.
pub fn parse_word(s: &str) -> Result<FreeWord, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty word (write 1 for the identity)".into());
    }
    if s == "1" {
        return Ok(FreeWord::identity());
    }
    let mut acc = FreeWord::identity();
    for tok in s.split_whitespace() {
        acc = acc.mul(&parse_term(tok)?);
    }
    Ok(acc)
}

/// Parses a `(m,n)` pair.
pub fn parse_pi1k(s: &str) -> Result<Pi1K, String> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected (m,n), found {s:?}"))?;
    let (m, n) = inner
        .split_once(',')
        .ok_or_else(|| format!("expected (m,n), found {s:?}"))?;
    Ok(Pi1K::new(parse_int(m)?, parse_int(n)?))
}

/// Parses a `(word; m, n)` element of `P₂(K²)`.
pub fn parse_p2elem(s: &str) -> Result<P2Elem, String> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected (word; m, n), found {s:?}"))?;
    let (word, pair) = inner
        .split_once(';')
        .ok_or_else(|| format!("expected (word; m, n), found {s:?}"))?;
    let (m, n) = pair
        .split_once(',')
        .ok_or_else(|| format!("expected (word; m, n), found {s:?}"))?;
    Ok(P2Elem::new(
        parse_word(word)?,
        Pi1K::new(parse_int(m)?, parse_int(n)?),
    ))
}

/// Value of an `eval` expression: either a braid element or a bare word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalValue {
    P2(P2Elem),
    Word(FreeWord),
}

impl std::fmt::Display for EvalValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EvalValue::P2(e) => write!(f, "{e}"),
            EvalValue::Word(w) => write!(f, "{w}"),
        }
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Cursor<'a> {
        Cursor { s, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        self.pos += self.rest().len() - self.rest().trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// The maximal ASCII-alphabetic run at the cursor, not consumed.
    fn peek_ident(&self) -> &'a str {
        let rest = self.rest();
        let end = rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(rest.len());
        &rest[..end]
    }

    fn advance(&mut self, n: usize) {
        self.pos += n;
    }

    fn take_int(&mut self) -> Result<i64, String> {
        self.skip_ws();
        let rest = self.rest();
        let mut end = 0;
        for (i, c) in rest.char_indices() {
            if c == '-' && i == 0 || c.is_ascii_digit() {
                end = i + c.len_utf8();
            } else {
                break;
            }
        }
        if end == 0 {
            return Err(format!("expected an integer at {rest:?}"));
        }
        let out = parse_int(&rest[..end]);
        self.advance(end);
        out
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.rest().is_empty()
    }
}

fn expect_p2(v: EvalValue) -> Result<P2Elem, String> {
    match v {
        EvalValue::P2(e) => Ok(e),
        EvalValue::Word(w) => Err(format!(
            "expected a braid element (word; m, n), found the word {w}"
        )),
    }
}

fn expect_word(v: EvalValue) -> Result<FreeWord, String> {
    match v {
        EvalValue::Word(w) => Ok(w),
        EvalValue::P2(e) => Err(format!("expected a word, found the element {e}")),
    }
}

fn parse_word_terms(cur: &mut Cursor) -> Result<FreeWord, String> {
    let mut acc = FreeWord::identity();
    let mut any = false;
    loop {
        cur.skip_ws();
        let id = cur.peek_ident();
        let is_term = matches!(id, "u" | "v" | "B");
        if is_term {
            cur.advance(id.len());
            let exp = if cur.eat('^') { cur.take_int()? } else { 1 };
            let base = match id {
                "u" => FreeWord::gen_pow(Gen::U, exp),
                "v" => FreeWord::gen_pow(Gen::V, exp),
                _ => word_b().pow(exp),
            };
            acc = acc.mul(&base);
            any = true;
        } else if cur.peek() == Some('1') {
            cur.advance(1);
            any = true;
        } else {
            break;
        }
    }
    if any {
        Ok(acc)
    } else {
        Err(format!("expected a word at {:?}", cur.rest()))
    }
}

fn parse_expr(cur: &mut Cursor) -> Result<EvalValue, String> {
    cur.skip_ws();
    if cur.peek() == Some('(') {
        let rest = cur.rest();
        let close = rest
            .find(')')
            .ok_or_else(|| format!("unclosed ( at {rest:?}"))?;
        let lit = &rest[..=close];
        cur.advance(close + 1);
        return Ok(EvalValue::P2(parse_p2elem(lit)?));
    }
    match cur.peek_ident() {
        "mul" => {
            cur.advance(3);
            let a = expect_p2(parse_expr(cur)?)?;
            let b = expect_p2(parse_expr(cur)?)?;
            Ok(EvalValue::P2(a.mul(&b)))
        }
        "inv" => {
            cur.advance(3);
            let a = expect_p2(parse_expr(cur)?)?;
            Ok(EvalValue::P2(a.inv()))
        }
        "lsigma" => {
            cur.advance(6);
            let a = expect_p2(parse_expr(cur)?)?;
            Ok(EvalValue::P2(l_sigma(&a)))
        }
        "theta" => {
            cur.advance(5);
            cur.skip_ws();
            if !cur.eat('[') {
                return Err(format!("expected [m,n] after theta at {:?}", cur.rest()));
            }
            let m = cur.take_int()?;
            cur.skip_ws();
            if !cur.eat(',') {
                return Err(format!("expected , in theta[m,n] at {:?}", cur.rest()));
            }
            let n = cur.take_int()?;
            cur.skip_ws();
            if !cur.eat(']') {
                return Err(format!("expected ] in theta[m,n] at {:?}", cur.rest()));
            }
            let w = expect_word(parse_expr(cur)?)?;
            Ok(EvalValue::Word(theta(m, n, &w)))
        }
        "rho" => {
            cur.advance(3);
            let w = expect_word(parse_expr(cur)?)?;
            Ok(EvalValue::Word(rho(&w)))
        }
        _ => Ok(EvalValue::Word(parse_word_terms(cur)?)),
    }
}

/// Evaluates an `eval` expression: prefix operators `mul`, `inv`, `lsigma`
/// over `(word; m, n)` literals, and `theta[m,n]`, `rho` over words.
pub fn eval_expr(s: &str) -> Result<EvalValue, String> {
    let mut cur = Cursor::new(s);
    let v = parse_expr(&mut cur)?;
    if !cur.at_end() {
        return Err(format!("trailing input at {:?}", cur.rest()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use klein_braid::word::word_bkl;

    #[test]
    fn word_round_trip() {
        for s in ["1", "u", "u v^-1 u^2", "B", "v B v^-1", "B^-2 u"] {
            let w = parse_word(s).unwrap();
            let printed = format!("{w}");
            assert_eq!(parse_word(&printed).unwrap(), w);
        }
        assert_eq!(parse_word("B").unwrap(), word_b());
        assert_eq!(parse_word("v B v^-1").unwrap(), word_bkl(1, 0));
        assert!(parse_word("x").is_err());
        assert!(parse_word("").is_err());
    }

    #[test]
    fn pi1k_format() {
        assert_eq!(parse_pi1k("(2,-1)").unwrap(), Pi1K::new(2, -1));
        assert_eq!(parse_pi1k(" ( 0 , 3 ) ").unwrap(), Pi1K::new(0, 3));
        assert!(parse_pi1k("2,-1").is_err());
        let p = Pi1K::new(-4, 7);
        assert_eq!(parse_pi1k(&format!("{p}")).unwrap(), p);
    }

    #[test]
    fn p2elem_format() {
        let e = parse_p2elem("(u v^-1 B; 2, -1)").unwrap();
        assert_eq!(e.q, Pi1K::new(2, -1));
        let printed = format!("{e}");
        assert_eq!(parse_p2elem(&printed).unwrap(), e);
        assert_eq!(parse_p2elem("(1; 0, 0)").unwrap(), P2Elem::identity());
        assert!(parse_p2elem("(u; 0)").is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            format!("{}", eval_expr("lsigma (B; 0, 0)").unwrap()),
            "(u v u v^-1; 0, 0)"
        );
        assert_eq!(
            format!("{}", eval_expr("mul (u; 0, 0) (u^-1; 0, 0)").unwrap()),
            "(1; 0, 0)"
        );
        assert_eq!(
            format!("{}", eval_expr("theta[0,1] v").unwrap()),
            "v u v u v^-1"
        );
        assert_eq!(
            format!("{}", eval_expr("rho u").unwrap()),
            format!("{}", rho(&FreeWord::u()))
        );
        // Nested operators.
        let nested = eval_expr("mul (v; 0, 0) inv (v; 0, 0)").unwrap();
        assert_eq!(nested, EvalValue::P2(P2Elem::identity()));
        assert_eq!(
            eval_expr("theta[1,0] rho u").unwrap(),
            EvalValue::Word(theta(1, 0, &rho(&FreeWord::u())))
        );
        // Type errors.
        assert!(eval_expr("mul u v").is_err());
        assert!(eval_expr("rho (u; 0, 0)").is_err());
        assert!(eval_expr("lsigma (B; 0, 0) u").is_err());
    }
}
