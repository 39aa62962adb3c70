//! Partitions, semistandard tableaux, cocharge and modified Kostka–Foulkes
//! polynomials.
//!
//! Young diagrams use the English convention: row 1 is the top row.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Zero parts are dropped
/// on construction, so `(2,1,0)` and `(2,1)` are the same value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition: part `i` counts rows of length at least `i`.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect();
        Partition { parts }
    }

    /// Dominance order `self ⊴ other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        check_sizes(self, other)?;
        let k = self.len().max(other.len());
        let mut a = 0;
        let mut b = 0;
        for i in 0..k {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of boxes in rows `n+1, …, ℓ(λ)`.
    pub fn m_lambda(&self, n: usize) -> Result<usize> {
        if n >= self.len() {
            return Err(Error::OutOfRange { index: n, bound: self.len() });
        }
        Ok(self.parts[n..].iter().sum())
    }

    /// `n(μ) = Σ_j μ_j (j − 1)`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(j, &p)| p * j).sum()
    }

    /// Product of the hook lengths of the diagram.
    pub fn hook_product(&self) -> u128 {
        let conj = self.transpose();
        let mut prod: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.part(j) - i - 1;
                prod *= (arm + leg + 1) as u128;
            }
        }
        prod
    }

    /// All partitions of `d`, starting at `(d)` and descending in
    /// lexicographic order.
    pub fn all(d: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, &mut Vec::new(), &mut out);
        out
    }

    /// Comma-separated parts, e.g. `3,2,1`. The empty partition is `""`.
    pub fn to_comma(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn check_sizes(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_comma())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `(3,2,1)` or `3 2 1`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p = tok.parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {tok:?}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_comma())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A word in the alphabet of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Parse("word letters must be positive".into()));
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Raw occurrence counts `(#1, #2, …)` up to the largest letter.
    pub fn content_counts(&self) -> Vec<usize> {
        let max = self.letters.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &l in &self.letters {
            counts[l - 1] += 1;
        }
        counts
    }

    /// The content as a partition; fails unless the counts weakly decrease.
    pub fn content(&self) -> Result<Partition> {
        let counts = self.content_counts();
        if counts.windows(2).any(|w| w[0] < w[1]) || counts.contains(&0) {
            return Err(Error::ContentNotPartition(counts));
        }
        Ok(Partition { parts: counts })
    }

    /// Splits the word into standard subwords by repeatedly selecting the
    /// rightmost `1`, then for each next letter the rightmost copy to the left
    /// of the previous pick, wrapping around to the rightmost copy overall.
    pub fn standard_subwords(&self) -> Result<Vec<Word>> {
        let content = self.content()?;
        let mut alive = vec![true; self.letters.len()];
        let mut out = Vec::with_capacity(content.part(0));
        for _ in 0..content.part(0) {
            let mut picked = Vec::new();
            let mut letter = 1;
            let mut pos = self.letters.len();
            loop {
                let rightmost_before = (0..pos).rev().find(|&i| alive[i] && self.letters[i] == letter);
                let choice = rightmost_before
                    .or_else(|| (0..self.letters.len()).rev().find(|&i| alive[i] && self.letters[i] == letter));
                match choice {
                    Some(i) => {
                        picked.push(i);
                        pos = i;
                        letter += 1;
                    }
                    None => break,
                }
            }
            for &i in &picked {
                alive[i] = false;
            }
            picked.sort_unstable();
            out.push(Word { letters: picked.iter().map(|&i| self.letters[i]).collect() });
        }
        Ok(out)
    }

    /// Cocharge of a word with partition content: the sum of the cocharges
    /// of its standard subwords.
    pub fn cocharge(&self) -> Result<usize> {
        Ok(self.standard_subwords()?.iter().map(standard_cocharge).sum())
    }
}

/// Cocharge of a standard word (content `(1,…,1)`).
fn standard_cocharge(w: &Word) -> usize {
    let k = w.letters.len();
    let mut pos = vec![0; k + 1];
    for (i, &l) in w.letters.iter().enumerate() {
        pos[l] = i;
    }
    let mut label = 0;
    let mut total = 0;
    for i in 2..=k {
        if pos[i] < pos[i - 1] {
            label += 1;
        }
        total += label;
    }
    total
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

/// A filling of a Young diagram, stored row by row from the top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau and checks it is semistandard.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::Invalid(format!("{:?} is not semistandard", t.rows)));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.iter().all(|&x| x > 0) && r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok
    }

    /// Rows concatenated left to right, bottom row first.
    pub fn reading_word(&self) -> Word {
        Word { letters: self.rows.iter().rev().flatten().copied().collect() }
    }

    pub fn cocharge(&self) -> Result<usize> {
        self.reading_word().cocharge()
    }
}

/// All semistandard tableaux of the given shape and content.
///
/// Cells are filled in row-major order. A letter `v` may only sit in rows
/// `1..=v`, so once row `r` is complete every copy of the letter `r` must
/// already be placed; branches violating this are cut immediately.
pub fn enumerate_ssyt(shape: &Partition, content: &Partition) -> Result<Vec<Tableau>> {
    check_sizes(shape, content)?;
    let mut remaining: Vec<usize> = content.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    fill(shape, 0, 0, &mut rows, &mut remaining, &mut out);
    Ok(out)
}

fn fill(
    shape: &Partition,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    out: &mut Vec<Tableau>,
) {
    if r == shape.len() {
        out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    if c == shape.part(r) {
        // Letter r+1 cannot appear below row r+1.
        if remaining.get(r).copied().unwrap_or(0) > 0 {
            return;
        }
        fill(shape, r + 1, 0, rows, remaining, out);
        return;
    }
    let mut lo = r + 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for v in lo..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        remaining[v - 1] -= 1;
        rows[r].push(v);
        fill(shape, r, c + 1, rows, remaining, out);
        rows[r].pop();
        remaining[v - 1] += 1;
    }
}

/// `K_{λ,μ}`, the number of SSYT of shape `λ` and content `μ`.
pub fn kostka_number(shape: &Partition, content: &Partition) -> Result<u64> {
    Ok(enumerate_ssyt(shape, content)?.len() as u64)
}

/// Univariate polynomial in `q` with non-negative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<u64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// `c·q^k`.
    pub fn monomial(k: usize, c: u64) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        QPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    fn add_term(&mut self, k: usize, c: u64) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as `{"degree": coefficient}` with zero coefficients omitted.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<usize, u64> =
            self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c)).collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<usize, u64>::deserialize(d)?;
        let mut q = QPoly::zero();
        for (k, c) in map {
            q.add_term(k, c);
        }
        Ok(QPoly::from_coeffs(q.coeffs))
    }
}

/// `K̃_{λ,μ}(q) = Σ_{T ∈ SSYT(λ,μ)} q^{coch(T)}`.
pub fn modified_kostka(shape: &Partition, content: &Partition) -> Result<QPoly> {
    let mut q = QPoly::zero();
    for t in enumerate_ssyt(shape, content)? {
        q.add_term(t.cocharge()?, 1);
    }
    Ok(QPoly::from_coeffs(q.coeffs))
}

/// Multinomial `d!/∏ k_i!` over the given block sizes.
pub fn multinomial(blocks: &[usize]) -> u128 {
    let mut acc: u128 = 1;
    let mut n: u128 = 0;
    for &k in blocks {
        for i in 1..=k as u128 {
            n += 1;
            acc = acc * n / i;
        }
    }
    acc
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
