//! Eventually periodic digit words and their lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// What follows the explicit prefix of a [`DigitWord`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Tail {
    /// `0^ω`: the word is finite.
    Zeros,
    /// `(period)^ω`, with a nonempty period.
    Periodic(Vec<u32>),
    /// The continuation is not known (expansion cut at a horizon).
    Unknown,
}

/// A digit sequence `d_1 d_2 …` given by an explicit prefix and a tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DigitWord {
    prefix: Vec<u32>,
    tail: Tail,
}

impl DigitWord {
    pub fn finite(digits: Vec<u32>) -> Self {
        DigitWord {
            prefix: digits,
            tail: Tail::Zeros,
        }
    }

    /// `prefix (period)^ω`; an empty period means a finite word.
    pub fn periodic(prefix: Vec<u32>, period: Vec<u32>) -> Self {
        let tail = if period.is_empty() || period.iter().all(|&d| d == 0) {
            Tail::Zeros
        } else {
            Tail::Periodic(period)
        };
        DigitWord { prefix, tail }
    }

    pub fn truncated(prefix: Vec<u32>) -> Self {
        DigitWord {
            prefix,
            tail: Tail::Unknown,
        }
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn period(&self) -> &[u32] {
        match &self.tail {
            Tail::Periodic(p) => p,
            _ => &[],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.tail == Tail::Zeros
    }

    pub fn is_known(&self) -> bool {
        self.tail != Tail::Unknown
    }

    /// Digit at 0-based position `i`, `None` past a truncation.
    pub fn get(&self, i: usize) -> Option<u32> {
        if let Some(&d) = self.prefix.get(i) {
            return Some(d);
        }
        match &self.tail {
            Tail::Zeros => Some(0),
            Tail::Periodic(p) => Some(p[(i - self.prefix.len()) % p.len()]),
            Tail::Unknown => None,
        }
    }

    /// Digit `t_i` with the 1-based indexing of expansions.
    pub fn t(&self, i: usize) -> Option<u32> {
        assert!(i >= 1, "digits are indexed from 1");
        self.get(i - 1)
    }

    /// The first `n` digits (fewer if the word is truncated earlier).
    pub fn take(&self, n: usize) -> Vec<u32> {
        (0..n).map_while(|i| self.get(i)).collect()
    }

    fn tail_len(&self) -> usize {
        match &self.tail {
            Tail::Periodic(p) => p.len(),
            _ => 1,
        }
    }

    /// Number of distinct shifts `σ^k`, `k ≥ 0`, of an eventually periodic
    /// word (for a truncated word, the number of explicit positions).
    fn shift_count(&self) -> usize {
        match &self.tail {
            Tail::Unknown => self.prefix.len(),
            _ => self.prefix.len() + self.tail_len(),
        }
    }

    /// Index of the last nonzero digit (1-based), for finite words.
    pub fn finite_length(&self) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        Some(self.prefix.iter().rposition(|&d| d != 0).map_or(0, |i| i + 1))
    }

    /// Maximal runs `(digit, length)` of the explicit part: the prefix, then
    /// one copy of the period.
    fn runs(digits: &[u32]) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &d in digits {
            match out.last_mut() {
                Some((c, r)) if *c == d => *r += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

fn fmt_runs(digits: &[u32]) -> String {
    DigitWord::runs(digits)
        .into_iter()
        .map(|(d, r)| match (d, r) {
            (_, 1) => d.to_string(),
            (0, _) => format!("0^{r}"),
            _ => vec![d.to_string(); r].join(" "),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Zero runs in exponent notation, e.g. `0.1(0^5 1 0^5 1 0^7)^ω` or `0.1 0^3 1`.
impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: &[u32] = match self.tail {
            Tail::Zeros => &self.prefix[..self.finite_length().unwrap_or(0)],
            _ => &self.prefix,
        };
        write!(f, "0.{}", fmt_runs(prefix))?;
        match &self.tail {
            Tail::Zeros => Ok(()),
            Tail::Periodic(p) => write!(f, "({})^ω", fmt_runs(p)),
            Tail::Unknown => write!(f, "…"),
        }
    }
}

/// Parses plain digit strings with an optional parenthesised period:
/// `"10001"`, `"1(0000010000010000000)"`, and comma-separated digits for
/// alphabets beyond 9: `"2,0,1(1,0)"`.
impl FromStr for DigitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches("0.");
        let (pre, per) = match s.find('(') {
            Some(i) => {
                let close = s
                    .rfind(')')
                    .filter(|&j| j > i)
                    .ok_or_else(|| Error::Parse(format!("unbalanced period in {s:?}")))?;
                (&s[..i], Some(&s[i + 1..close]))
            }
            None => (s, None),
        };
        let digits = |t: &str| -> Result<Vec<u32>> {
            let t = t.trim().trim_end_matches(',');
            if t.is_empty() {
                return Ok(Vec::new());
            }
            if t.contains(',') {
                t.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(format!("digit {x:?}: {e}")))
                    })
                    .collect()
            } else {
                t.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| {
                        c.to_digit(10)
                            .ok_or_else(|| Error::Parse(format!("digit {c:?} in {t:?}")))
                    })
                    .collect()
            }
        };
        let prefix = digits(pre)?;
        match per {
            Some(p) => {
                let period = digits(p)?;
                if period.is_empty() {
                    return Err(Error::Parse("empty period".into()));
                }
                Ok(DigitWord::periodic(prefix, period))
            }
            None => Ok(DigitWord::finite(prefix)),
        }
    }
}

/// Compares `σ^a(u)` with `σ^b(v)`. `None` when a truncation is reached
/// before the words differ.
pub fn compare_shifted(u: &DigitWord, a: usize, v: &DigitWord, b: usize) -> Option<Ordering> {
    // Past `horizon` both shifted words are periodic with period lcm, so
    // agreement on the first `horizon + lcm` symbols means equality.
    let horizon = u.prefix.len().saturating_sub(a).max(v.prefix.len().saturating_sub(b));
    let span = horizon + u.tail_len().lcm(&v.tail_len());
    for i in 0..span {
        let (x, y) = (u.get(a + i)?, v.get(b + i)?);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            o => return Some(o),
        }
    }
    Some(Ordering::Equal)
}

/// Lexicographic comparison of complete words.
pub fn lex_cmp(u: &DigitWord, v: &DigitWord) -> Option<Ordering> {
    compare_shifted(u, 0, v, 0)
}

/// Self-admissibility: `σ^n(w) <_lex w` for every `n ≥ 1`.
///
/// On a truncated word only the comparisons decided inside the known
/// prefix are used.
pub fn is_lyndon(w: &DigitWord) -> bool {
    if w.get(0).is_none() {
        return false;
    }
    let last = match w.tail {
        Tail::Unknown => w.prefix.len().saturating_sub(1),
        _ => w.shift_count(),
    };
    (1..=last).all(|k| {
        !matches!(
            compare_shifted(w, k, w, 0),
            Some(Ordering::Equal | Ordering::Greater)
        )
    })
}

/// Parry's condition: `σ^j(y) <_lex c` for every `j ≥ 0`.
pub fn is_admissible(y: &DigitWord, c: &DigitWord) -> bool {
    (0..y.shift_count().max(1)).all(|j| {
        !matches!(
            compare_shifted(y, j, c, 0),
            Some(Ordering::Equal | Ordering::Greater)
        )
    })
}

/// The word `(c_i)` governing admissibility: `t` itself when `d_β(1)` is
/// infinite, `(t_1 … t_{q−1} (t_q − 1))^ω` when it is finite of length `q`.
/// Trailing zeros of a finite input are trimmed first.
pub fn c_word(t: &DigitWord) -> Result<DigitWord> {
    match t.finite_length() {
        None => Ok(t.clone()),
        Some(0) => Err(Error::Precondition(
            "the zero word is not the expansion of 1".into(),
        )),
        Some(q) => {
            let mut p = t.prefix[..q].to_vec();
            p[q - 1] -= 1;
            Ok(DigitWord::periodic(Vec::new(), p))
        }
    }
}

/// Gaps of zeros after the first digit: the lengths of maximal zero runs
/// strictly between consecutive nonzero digits, with the 1-based position
/// of the nonzero digit opening each gap. Looks at the first `limit` digits.
pub fn zero_gaps(w: &DigitWord, limit: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut last: Option<usize> = None;
    for i in 0..limit {
        match w.get(i) {
            Some(0) => {}
            Some(_) => {
                if let Some(l) = last {
                    out.push((l + 1, i - l - 1));
                }
                last = Some(i);
            }
            None => break,
        }
    }
    out
}
