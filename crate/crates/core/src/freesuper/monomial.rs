//! Graded alphabets and non-associative monomials (binary bracket trees).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::superdim::{Parity, SuperDim};

/// A totally ordered alphabet; even letters come first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlphabet {
    names: Vec<String>,
    parities: Vec<Parity>,
}

impl GradedAlphabet {
    pub fn new(even: &[&str], odd: &[&str]) -> Result<GradedAlphabet> {
        Self::from_names(
            even.iter().map(|s| s.to_string()).collect(),
            odd.iter().map(|s| s.to_string()).collect(),
        )
    }

    pub fn from_names(even: Vec<String>, odd: Vec<String>) -> Result<GradedAlphabet> {
        let mut seen = BTreeSet::new();
        for n in even.iter().chain(&odd) {
            if !seen.insert(n.clone()) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        if even.len() + odd.len() > u8::MAX as usize {
            return Err(Error::InvalidParameters("alphabet too large".into()));
        }
        let parities = std::iter::repeat_n(Parity::Even, even.len())
            .chain(std::iter::repeat_n(Parity::Odd, odd.len()))
            .collect();
        let mut names = even;
        names.extend(odd);
        Ok(GradedAlphabet { names, parities })
    }

    /// Letters `x1..xm` (even) and `y1..yn` (odd).
    pub fn standard(m: usize, n: usize) -> GradedAlphabet {
        let even = (1..=m).map(|i| format!("x{i}")).collect();
        let odd = (1..=n).map(|i| format!("y{i}")).collect();
        Self::from_names(even, odd).expect("standard names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, letter: usize) -> &str {
        &self.names[letter]
    }

    pub fn parity(&self, letter: usize) -> Parity {
        self.parities[letter]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn dim(&self) -> SuperDim {
        SuperDim::from_parities(self.parities.iter().copied())
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownName(name.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Node {
    Letter(usize),
    Bracket(Box<Monomial>, Box<Monomial>),
}

/// A bracket tree over letters, with its flattened word and parity cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    node: Node,
    word: Vec<u8>,
    parity: Parity,
}

impl Monomial {
    pub fn letter(letter: usize, alphabet: &GradedAlphabet) -> Monomial {
        Monomial { node: Node::Letter(letter), word: vec![letter as u8], parity: alphabet.parity(letter) }
    }

    /// `(left)(right)`
    pub fn bracket(left: Monomial, right: Monomial) -> Monomial {
        let mut word = left.word.clone();
        word.extend_from_slice(&right.word);
        let parity = left.parity + right.parity;
        Monomial { node: Node::Bracket(Box::new(left), Box::new(right)), word, parity }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn multidegree(&self, letters: usize) -> Vec<usize> {
        let mut alpha = vec![0; letters];
        for &l in &self.word {
            alpha[l as usize] += 1;
        }
        alpha
    }

    pub fn as_letter(&self) -> Option<usize> {
        match self.node {
            Node::Letter(l) => Some(l),
            Node::Bracket(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&Monomial, &Monomial)> {
        match &self.node {
            Node::Letter(_) => None,
            Node::Bracket(a, b) => Some((a, b)),
        }
    }

    /// Regular (Hall–Shirshov) monomial: a letter, or `u1∘u2` with both
    /// parts regular, `word(u1) > word(u2)`, and, when `u1 = v1∘v2`,
    /// `word(v2) <= word(u2)`.
    pub fn is_regular(&self) -> bool {
        match self.children() {
            None => true,
            Some((u1, u2)) => {
                if !(u1.is_regular() && u2.is_regular()) || u1.word <= u2.word {
                    return false;
                }
                match u1.children() {
                    None => true,
                    Some((_, v2)) => v2.word <= u2.word,
                }
            }
        }
    }

    /// Regular, or the square `(v)(v)` of an odd regular monomial.
    pub fn is_s_regular(&self) -> bool {
        if self.is_regular() {
            return true;
        }
        match self.children() {
            Some((a, b)) => a == b && a.parity.is_odd() && a.is_regular(),
            None => false,
        }
    }

    pub fn render(&self, alphabet: &GradedAlphabet) -> String {
        match self.children() {
            None => alphabet.name(self.word[0] as usize).to_string(),
            Some((a, b)) => format!("[{},{}]", a.render(alphabet), b.render(alphabet)),
        }
    }

    /// Parses `x`, `[u,v]` (whitespace allowed) over the alphabet's names.
    pub fn parse(text: &str, alphabet: &GradedAlphabet) -> Result<Monomial> {
        let tokens = tokenize(text);
        let mut pos = 0;
        let m = parse_tree(&tokens, &mut pos, alphabet)?;
        if pos != tokens.len() {
            return Err(Error::BadExpression(format!("trailing input in `{text}`")));
        }
        Ok(m)
    }
}

fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        if ch == '[' || ch == ']' || ch == ',' || ch.is_whitespace() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            if !ch.is_whitespace() {
                out.push(ch.to_string());
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_tree(tokens: &[String], pos: &mut usize, alphabet: &GradedAlphabet) -> Result<Monomial> {
    let tok = tokens.get(*pos).ok_or_else(|| Error::BadExpression("unexpected end".into()))?;
    *pos += 1;
    if tok != "[" {
        return Ok(Monomial::letter(alphabet.index_of(tok)?, alphabet));
    }
    let left = parse_tree(tokens, pos, alphabet)?;
    expect(tokens, pos, ",")?;
    let right = parse_tree(tokens, pos, alphabet)?;
    expect(tokens, pos, "]")?;
    Ok(Monomial::bracket(left, right))
}

fn expect(tokens: &[String], pos: &mut usize, want: &str) -> Result<()> {
    match tokens.get(*pos) {
        Some(t) if t == want => {
            *pos += 1;
            Ok(())
        }
        other => Err(Error::BadExpression(format!("expected `{want}`, found {other:?}"))),
    }
}

impl Ord for Monomial {
    /// Multidegree (as sorted letter word), then word, then subtrees.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.word.clone();
        let mut b = other.word.clone();
        a.sort_unstable();
        b.sort_unstable();
        self.degree()
            .cmp(&other.degree())
            .then_with(|| a.cmp(&b))
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| match (&self.node, &other.node) {
                (Node::Bracket(l1, r1), Node::Bracket(l2, r2)) => l1.cmp(l2).then_with(|| r1.cmp(r2)),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.children() {
            None => write!(f, "#{}", self.word[0]),
            Some((a, b)) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Every binary bracketing of every word of length `d`:
/// `Catalan(d-1) * |X|^d` trees.
pub fn generate_monomials(alphabet: &GradedAlphabet, d: usize) -> Vec<Monomial> {
    assert!(d >= 1);
    let mut by_degree: Vec<Vec<Monomial>> = vec![Vec::new()];
    by_degree.push((0..alphabet.len()).map(|l| Monomial::letter(l, alphabet)).collect());
    for k in 2..=d {
        let mut level = Vec::new();
        for a in 1..k {
            for left in &by_degree[a] {
                for right in &by_degree[k - a] {
                    level.push(Monomial::bracket(left.clone(), right.clone()));
                }
            }
        }
        by_degree.push(level);
    }
    by_degree.swap_remove(d)
}
