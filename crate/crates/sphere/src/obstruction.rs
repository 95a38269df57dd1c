//! Necessary conditions on the norm offsets of a 3-term progression
//! `x + z = 2y` among lattice points with `|x|^2 = s+a`, `|z|^2 = s+b`,
//! `|y|^2 = s+c`.

use num_integer::Integer;
use serde::Serialize;

/// The conditions a progression must satisfy, in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// `D > 0`
    Positive,
    /// `a + b <= 4c + 2s + 2 sqrt((s+a)(s+b))`
    Cauchy,
    /// `a + b` even
    Parity,
    /// `D = 0 (mod 4)`
    Mod4,
    /// `c < max(a, b)`
    CBelowMax,
    /// `D` is a sum of even squares meeting the divisibility tests
    EvenSquares,
}

/// When `D` is a single even square, which shape the progression must have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SingleSquareCase {
    /// `a < b`: no further constraint.
    ALessB,
    /// `c < a = b`: some coordinate has `z_i = -x_i > 0` and `y_i = 0`.
    MiddleZero,
    /// `a > b`: some coordinate of `x` is negative.
    NegativeX,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Positive even parts, non-increasing, with squares summing to `D`.
    pub parts: Vec<i64>,
    pub gcd: i64,
    /// `gcd` divides `(b - a + D) / 2`.
    pub gcd_divides: bool,
    /// For a single part `p`: does `2p` divide `b - a + D`.
    pub single_divides: Option<bool>,
    pub single_case: Option<SingleSquareCase>,
}

impl Decomposition {
    pub fn admissible(&self) -> bool {
        self.gcd_divides && self.single_divides != Some(false) && (self.parts.len() != 1 || self.single_case.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub s: i64,
    #[serde(rename = "D")]
    pub d: i64,
    pub violated: Vec<Clause>,
    pub decompositions: Vec<Decomposition>,
}

impl ObstructionReport {
    /// No progression with these offsets can exist.
    pub fn excluded(&self) -> bool {
        !self.violated.is_empty()
    }
}

fn even_square_sums(target: i64, max_part: i64, parts_left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if target == 0 {
        out.push(cur.clone());
        return;
    }
    if parts_left == 0 {
        return;
    }
    let mut p = max_part;
    while p >= 2 {
        if p * p <= target {
            cur.push(p);
            even_square_sums(target - p * p, p, parts_left - 1, cur, out);
            cur.pop();
        }
        p -= 2;
    }
}

/// Evaluates every clause for offsets `(a, b, c)` around norm `s` in
/// dimension `k` (at most `k` squares in a decomposition).
pub fn obstruction_check(a: i64, b: i64, c: i64, s: i64, k: usize) -> ObstructionReport {
    let d = 2 * a + 2 * b - 4 * c;
    let mut violated = Vec::new();
    if d <= 0 {
        violated.push(Clause::Positive);
    }
    // a+b-4c-2s <= 2 sqrt((s+a)(s+b)), squared when the left side is positive
    let lhs = a + b - 4 * c - 2 * s;
    if lhs > 0 && (lhs as i128).pow(2) > 4 * ((s + a) as i128) * ((s + b) as i128) {
        violated.push(Clause::Cauchy);
    }
    if (a + b).is_odd() {
        violated.push(Clause::Parity);
    }
    if d.rem_euclid(4) != 0 {
        violated.push(Clause::Mod4);
    }
    if c >= a.max(b) {
        violated.push(Clause::CBelowMax);
    }
    let mut decompositions = Vec::new();
    if d > 0 {
        let mut raw = Vec::new();
        let top = ((d as f64).sqrt() as i64) & !1;
        even_square_sums(d, top, k, &mut Vec::new(), &mut raw);
        let num = b - a + d;
        for parts in raw {
            let g = parts.iter().fold(0, |g, &p| g.gcd(&p));
            let gcd_divides = num % (2 * g) == 0;
            let (single_divides, single_case) = if parts.len() == 1 {
                let case = if a < b {
                    Some(SingleSquareCase::ALessB)
                } else if a > b {
                    Some(SingleSquareCase::NegativeX)
                } else if c < a {
                    Some(SingleSquareCase::MiddleZero)
                } else {
                    None
                };
                (Some(num % (2 * parts[0]) == 0), case)
            } else {
                (None, None)
            };
            decompositions.push(Decomposition { parts, gcd: g, gcd_divides, single_divides, single_case });
        }
        if !decompositions.iter().any(Decomposition::admissible) {
            violated.push(Clause::EvenSquares);
        }
    }
    ObstructionReport { a, b, c, s, d, violated, decompositions }
}
