//! Reduced words, the root sequences they induce, heaps and commutation classes.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Kind, RootId, RootSystem};

/// A reduced word `s_{i_1} ⋯ s_{i_t}` with its induced roots `β_1, …, β_t`.
///
/// Letters are 0-based node indices; text input and output are 1-based.
#[derive(Clone)]
pub struct ReducedWord {
    system: Arc<RootSystem>,
    letters: Vec<usize>,
    roots: Vec<RootId>,
    positions: Vec<Option<usize>>,
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord({} {})", self.system.type_name(), self.format())
    }
}

impl PartialEq for ReducedWord {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
            && self.system.kind() == other.system.kind()
            && self.system.rank() == other.system.rank()
    }
}

impl Eq for ReducedWord {}

impl ReducedWord {
    pub fn new(system: &Arc<RootSystem>, letters: Vec<usize>) -> Result<Self> {
        let roots = roots_of_word(system, &letters)?;
        Ok(Self::from_parts(system.clone(), letters, roots))
    }

    pub(crate) fn from_parts(system: Arc<RootSystem>, letters: Vec<usize>, roots: Vec<RootId>) -> Self {
        let mut positions = vec![None; system.len()];
        for (k, r) in roots.iter().enumerate() {
            positions[r.index()] = Some(k);
        }
        Self {
            system,
            letters,
            roots,
            positions,
        }
    }

    /// Parses 1-based letters such as `"1 3 2"`, `"1,3,2"` or `"s1s3s2"`.
    pub fn parse(system: &Arc<RootSystem>, text: &str) -> Result<Self> {
        Self::new(system, parse_letters(system.rank(), text)?)
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `β_1, …, β_t` in word order.
    pub fn roots(&self) -> &[RootId] {
        &self.roots
    }

    pub fn root_set(&self) -> RootSet {
        self.roots.iter().copied().collect()
    }

    pub fn position(&self, root: RootId) -> Option<usize> {
        self.positions[root.index()]
    }

    pub fn require_position(&self, root: RootId) -> Result<usize> {
        self.position(root)
            .ok_or_else(|| Error::RootNotInWord(self.system.format_root(root)))
    }

    pub fn is_longest(&self) -> bool {
        self.len() == self.system.len()
    }

    /// 1-based letters separated by spaces.
    pub fn format(&self) -> String {
        format_letters(&self.letters)
    }
}

pub fn format_letters(letters: &[usize]) -> String {
    letters
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses 1-based letters. Accepts separators (spaces, commas) and an optional
/// `s` before each letter. Without separators every digit is its own letter.
pub fn parse_letters(rank: usize, text: &str) -> Result<Vec<usize>> {
    let err = || Error::Parse {
        what: "word",
        text: text.to_string(),
    };
    let cleaned = text.replace(['s', 'S'], " ");
    let tokens: Vec<&str> = cleaned
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let mut letters = Vec::new();
    let explode = tokens.len() == 1 && text.chars().filter(|c| c.is_ascii_digit()).count() > 1
        && !text.contains(['s', 'S']);
    for tok in tokens {
        if explode {
            for c in tok.chars() {
                letters.push(c.to_digit(10).ok_or_else(err)? as usize);
            }
        } else {
            letters.push(tok.parse::<usize>().map_err(|_| err())?);
        }
    }
    if letters.iter().any(|&i| i == 0 || i > rank) {
        return Err(err());
    }
    Ok(letters.into_iter().map(|i| i - 1).collect())
}

/// `β_k = s_{i_1} ⋯ s_{i_{k-1}}(α_{i_k})`, failing with `NotReduced` when some
/// `β_k` is negative or repeats.
pub fn roots_of_word(system: &RootSystem, letters: &[usize]) -> Result<Vec<RootId>> {
    let n = system.rank();
    let mut seen = RootSet::empty();
    let mut out = Vec::with_capacity(letters.len());
    for (k, &i) in letters.iter().enumerate() {
        if i >= n {
            return Err(Error::InvalidNode(i + 1));
        }
        let mut v = vec![0; n];
        v[i] = 1;
        for &j in letters[..k].iter().rev() {
            system.reflect_vec(j, &mut v);
        }
        let id = system.id_of(&v).ok_or(Error::NotReduced)?;
        if seen.contains(id) {
            return Err(Error::NotReduced);
        }
        seen.insert(id);
        out.push(id);
    }
    Ok(out)
}

pub fn is_reduced(system: &RootSystem, letters: &[usize]) -> bool {
    roots_of_word(system, letters).is_ok()
}

/// Orientation used for canonical words: every arrow points away from node 1
/// in types A and D, and the appendix orientations in type E.
pub fn canonical_orientation(system: &RootSystem) -> Vec<(usize, usize)> {
    match (system.kind(), system.rank()) {
        (Kind::E, 6) => vec![(0, 1), (1, 2), (2, 3), (3, 4), (5, 2)],
        (Kind::E, n) => {
            let mut arrows = vec![(0, 2), (1, 3)];
            arrows.extend((2..n - 1).map(|i| (i, i + 1)));
            arrows
        }
        _ => {
            let d = system.datum();
            d.edges()
                .iter()
                .map(|&(a, b)| {
                    if d.distance(0, a) < d.distance(0, b) {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect()
        }
    }
}

/// Repeatedly takes the smallest source of the current orientation whose
/// letter keeps the word reduced, and reflects there.
pub fn source_peeling(system: &RootSystem, arrows: &[(usize, usize)], length: usize) -> Vec<usize> {
    let mut arrows = arrows.to_vec();
    let mut word: Vec<usize> = Vec::with_capacity(length);
    while word.len() < length {
        let Some(source) = (0..system.rank()).find(|&i| {
            if arrows.iter().any(|&(_, head)| head == i) {
                return false;
            }
            word.push(i);
            let ok = is_reduced(system, &word);
            word.pop();
            ok
        }) else {
            break;
        };
        word.push(source);
        for arrow in arrows.iter_mut() {
            if arrow.0 == source || arrow.1 == source {
                *arrow = (arrow.1, arrow.0);
            }
        }
    }
    word
}

/// The canonical reduced word of the longest element.
pub fn longest_word(system: &Arc<RootSystem>) -> ReducedWord {
    let letters = source_peeling(system, &canonical_orientation(system), system.len());
    ReducedWord::new(system, letters).expect("source peeling yields a reduced word")
}

/// The heap of a reduced word, which represents its commutation class.
#[derive(Clone, Debug)]
pub struct CommClass {
    word: ReducedWord,
    below_pos: Vec<u128>,
    covers: Vec<(usize, usize)>,
    below: Vec<RootSet>,
    above: Vec<RootSet>,
    members: RootSet,
}

impl PartialEq for CommClass {
    fn eq(&self, other: &Self) -> bool {
        self.word.system.kind() == other.word.system.kind()
            && self.word.system.rank() == other.word.system.rank()
            && self.members == other.members
            && self.below == other.below
    }
}

impl Eq for CommClass {}

pub fn heap_of(word: &ReducedWord) -> CommClass {
    CommClass::new(word.clone())
}

impl CommClass {
    pub fn new(word: ReducedWord) -> Self {
        let t = word.len();
        assert!(t <= 128, "heaps are limited to 128 letters");
        let datum = word.system.datum();
        let letters = &word.letters;
        let mut below_pos = vec![0u128; t];
        for q in 0..t {
            let mut mask = 0u128;
            for p in 0..q {
                if !datum.commute(letters[p], letters[q]) {
                    mask |= below_pos[p] | (1u128 << p);
                }
            }
            below_pos[q] = mask;
        }
        let mut covers = Vec::new();
        for q in 0..t {
            for p in 0..q {
                if below_pos[q] >> p & 1 == 1 {
                    let via = (p + 1..q).any(|r| below_pos[q] >> r & 1 == 1 && below_pos[r] >> p & 1 == 1);
                    if !via {
                        covers.push((p, q));
                    }
                }
            }
        }
        let n_roots = word.system.len();
        let mut below = vec![RootSet::empty(); n_roots];
        let mut above = vec![RootSet::empty(); n_roots];
        for q in 0..t {
            for p in 0..q {
                if below_pos[q] >> p & 1 == 1 {
                    below[word.roots[q].index()].insert(word.roots[p]);
                    above[word.roots[p].index()].insert(word.roots[q]);
                }
            }
        }
        let members = word.root_set();
        Self {
            word,
            below_pos,
            covers,
            below,
            above,
            members,
        }
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.word.system
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Cover relations `(p, q)` between positions of the representative.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Whether position `p` precedes position `q` in the heap.
    pub fn precedes(&self, p: usize, q: usize) -> bool {
        self.below_pos[q] >> p & 1 == 1
    }

    /// The roots `Φ⁺_w` of the class.
    pub fn roots(&self) -> RootSet {
        self.members
    }

    pub fn contains(&self, root: RootId) -> bool {
        self.members.contains(root)
    }

    /// `α ≺ β` in the convex partial order of the class.
    pub fn prec(&self, alpha: RootId, beta: RootId) -> bool {
        self.below[beta.index()].contains(alpha)
    }

    pub fn comparable(&self, alpha: RootId, beta: RootId) -> bool {
        self.prec(alpha, beta) || self.prec(beta, alpha)
    }

    /// Roots strictly below `β`.
    pub fn below(&self, beta: RootId) -> RootSet {
        self.below[beta.index()]
    }

    /// Roots strictly above `α`.
    pub fn above(&self, alpha: RootId) -> RootSet {
        self.above[alpha.index()]
    }

    /// Roots `γ` with `α ≺ γ ≺ β`.
    pub fn open_interval(&self, alpha: RootId, beta: RootId) -> RootSet {
        self.above(alpha) & self.below(beta)
    }

    /// A class member placing `first` before `second`; the two roots must be
    /// incomparable or already ordered that way.
    pub fn extension_with(&self, first: RootId, second: RootId) -> Option<ReducedWord> {
        if self.prec(second, first) {
            return None;
        }
        let p_first = self.word.position(first)?;
        let p_second = self.word.position(second)?;
        let t = self.len();
        let mut indegree = vec![0usize; t];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); t];
        for &(p, q) in &self.covers {
            succ[p].push(q);
            indegree[q] += 1;
        }
        succ[p_first].push(p_second);
        indegree[p_second] += 1;
        let mut order = Vec::with_capacity(t);
        let mut ready: std::collections::BTreeSet<usize> =
            (0..t).filter(|&p| indegree[p] == 0).collect();
        while let Some(p) = ready.pop_first() {
            order.push(p);
            for &q in &succ[p] {
                indegree[q] -= 1;
                if indegree[q] == 0 {
                    ready.insert(q);
                }
            }
        }
        Some(self.member_from_order(&order))
    }

    /// The class member obtained by listing positions of the representative in
    /// the given order, which must be a linear extension of the heap.
    pub fn member_from_order(&self, order: &[usize]) -> ReducedWord {
        let letters = order.iter().map(|&p| self.word.letters[p]).collect();
        let roots = order.iter().map(|&p| self.word.roots[p]).collect();
        ReducedWord::from_parts(self.word.system.clone(), letters, roots)
    }

    /// All members of the class, in lexicographic order of their letters.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<ReducedWord>> {
        let datum = self.word.system.datum();
        let start: Vec<usize> = (0..self.len()).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([self.word.letters.clone()]);
        let mut members: Vec<Vec<usize>> = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(order) = queue.pop_front() {
            for k in 0..order.len().saturating_sub(1) {
                let (a, b) = (self.word.letters[order[k]], self.word.letters[order[k + 1]]);
                if !datum.commute(a, b) {
                    continue;
                }
                let mut next = order.clone();
                next.swap(k, k + 1);
                let letters: Vec<usize> = next.iter().map(|&p| self.word.letters[p]).collect();
                if seen.insert(letters) {
                    if members.len() >= cap {
                        return Err(Error::ClassTooLarge {
                            cap,
                            count: members.len() + 1,
                        });
                    }
                    members.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut words: Vec<ReducedWord> =
            members.iter().map(|o| self.member_from_order(o)).collect();
        words.sort_by(|a, b| a.letters.cmp(&b.letters));
        Ok(words)
    }

    /// Whether `other` is a member of this class.
    pub fn contains_word(&self, other: &ReducedWord) -> bool {
        if other.len() != self.len() || other.root_set() != self.members {
            return false;
        }
        let heap = CommClass::new(other.clone());
        heap.below == self.below
    }

    pub fn heap_json(&self) -> serde_json::Value {
        let sys = &self.word.system;
        serde_json::to_value(HeapJson {
            nodes: (0..self.len())
                .map(|p| HeapNode {
                    position: p + 1,
                    letter: self.word.letters[p] + 1,
                    root: sys.coeffs(self.word.roots[p]).to_vec(),
                })
                .collect(),
            covers: self.covers.iter().map(|&(p, q)| [p + 1, q + 1]).collect(),
        })
        .expect("heap serializes")
    }

    /// Rebuilds the class from the JSON form of its heap.
    pub fn from_heap_json(system: &Arc<RootSystem>, value: &serde_json::Value) -> Result<Self> {
        let heap: HeapJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse {
            what: "heap json",
            text: e.to_string(),
        })?;
        let letters: Vec<usize> = heap.nodes.iter().map(|n| n.letter.wrapping_sub(1)).collect();
        let class = CommClass::new(ReducedWord::new(system, letters)?);
        let covers: Vec<(usize, usize)> = heap.covers.iter().map(|c| (c[0] - 1, c[1] - 1)).collect();
        if covers != class.covers {
            return Err(Error::Parse {
                what: "heap json",
                text: "covers do not match the letters".to_string(),
            });
        }
        Ok(class)
    }
}

#[derive(Serialize, Deserialize)]
struct HeapNode {
    position: usize,
    letter: usize,
    root: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct HeapJson {
    nodes: Vec<HeapNode>,
    covers: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(kind: Kind, rank: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(kind, rank).unwrap())
    }

    const A5_WORD: &str = "1 3 2 1 4 3 2 1 5 4 3 2 1 5 4";

    #[test]
    fn a5_word_roots() {
        let s = sys(Kind::A, 5);
        let w = ReducedWord::parse(&s, A5_WORD).unwrap();
        let names: Vec<String> = w.roots().iter().map(|&r| s.format_root(r)).collect();
        assert_eq!(
            names,
            [
                "[1]", "[3]", "[1,3]", "[2,3]", "[3,4]", "[1,4]", "[2,4]", "[4]", "[3,5]", "[1,5]",
                "[2,5]", "[4,5]", "[5]", "[1,2]", "[2]"
            ]
        );
        assert!(w.is_longest());
    }

    #[test]
    fn single_letter() {
        let s = sys(Kind::A, 3);
        let w = ReducedWord::parse(&s, "2").unwrap();
        assert_eq!(w.roots(), &[s.simple(1)]);
    }

    #[test]
    fn d4_word_starts() {
        let s = sys(Kind::D, 4);
        let w = ReducedWord::parse(&s, "3 2 1 4 3 2 1 4 3 2 1 4").unwrap();
        assert_eq!(s.format_root(w.roots()[0]), "{3|-4}");
        assert_eq!(s.format_root(w.roots()[1]), "{2|-4}");
        assert_eq!(s.format_root(w.roots()[2]), "{1|-4}");
    }

    #[test]
    fn reducedness() {
        let a2 = sys(Kind::A, 2);
        assert!(!is_reduced(&a2, &[0, 0]));
        assert!(is_reduced(&a2, &[0, 1, 0]));
        assert!(!is_reduced(&a2, &[0, 1, 0, 1]));
        let a5 = sys(Kind::A, 5);
        assert!(is_reduced(&a5, &parse_letters(5, A5_WORD).unwrap()));
        assert!(matches!(ReducedWord::parse(&a2, "1 1"), Err(Error::NotReduced)));
    }

    #[test]
    fn letter_syntax() {
        assert_eq!(parse_letters(5, "1 3 2").unwrap(), vec![0, 2, 1]);
        assert_eq!(parse_letters(5, "1,3,2").unwrap(), vec![0, 2, 1]);
        assert_eq!(parse_letters(5, "s1s3s2").unwrap(), vec![0, 2, 1]);
        assert_eq!(parse_letters(5, "132").unwrap(), vec![0, 2, 1]);
        assert!(parse_letters(3, "1 4").is_err());
        assert!(parse_letters(3, "1 x").is_err());
    }

    #[test]
    fn longest_words_and_involution() {
        for (k, n) in [(Kind::A, 1), (Kind::A, 2), (Kind::A, 6), (Kind::D, 4), (Kind::D, 5), (Kind::E, 6), (Kind::E, 7), (Kind::E, 8)] {
            let s = sys(k, n);
            let w = longest_word(&s);
            assert_eq!(w.len(), s.len());
            // w0(α_i) = −α_{i*}
            for i in 0..n {
                let mut v = vec![0; n];
                v[i] = 1;
                for &j in w.letters().iter().rev() {
                    s.reflect_vec(j, &mut v);
                }
                let mut expected = vec![0; n];
                expected[s.star(i)] = -1;
                assert_eq!(v, expected);
                assert_eq!(s.star(s.star(i)), i);
            }
        }
        let d4 = sys(Kind::D, 4);
        assert_eq!(longest_word(&d4).len(), 12);
        let e6 = sys(Kind::E, 6);
        assert_eq!(e6.star_map(), &[4, 3, 2, 1, 0, 5]);
    }

    #[test]
    fn small_heaps() {
        let a5 = sys(Kind::A, 5);
        let c = heap_of(&ReducedWord::parse(&a5, "1 3").unwrap());
        assert!(c.covers().is_empty());
        assert!(!c.precedes(0, 1));
        let a2 = sys(Kind::A, 2);
        let c = heap_of(&ReducedWord::parse(&a2, "1 2").unwrap());
        assert_eq!(c.covers(), &[(0, 1)]);
    }

    #[test]
    fn d4_heap_letter_chain() {
        let s = sys(Kind::D, 4);
        let c = heap_of(&ReducedWord::parse(&s, "3 2 1 4 3 2 1 4 3 2 1 4").unwrap());
        assert_eq!(c.len(), 12);
        assert!(c.precedes(2, 6) && c.precedes(6, 10) && c.precedes(2, 10));
    }

    #[test]
    fn small_classes() {
        let a2 = sys(Kind::A, 2);
        let c = heap_of(&ReducedWord::parse(&a2, "1 2").unwrap());
        assert_eq!(c.enumerate(10).unwrap().len(), 1);
        let a5 = sys(Kind::A, 5);
        let c = heap_of(&ReducedWord::parse(&a5, "1 3").unwrap());
        let members: Vec<String> = c.enumerate(10).unwrap().iter().map(|w| w.format()).collect();
        assert_eq!(members, ["1 3", "3 1"]);
    }

    #[test]
    fn d4_class_size_regression() {
        let s = sys(Kind::D, 4);
        let c = heap_of(&ReducedWord::parse(&s, "3 2 1 4 3 2 1 4 3 2 1 4").unwrap());
        let members = c.enumerate(1_000_000).unwrap();
        assert_eq!(members.len(), 72);
        assert!(matches!(c.enumerate(5), Err(Error::ClassTooLarge { cap: 5, .. })));
    }

    /// Linear extensions of the heap, listed independently by brute force.
    fn brute_extensions(c: &CommClass) -> Vec<Vec<usize>> {
        fn go(c: &CommClass, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.iter().map(|&p| c.word().letters()[p]).collect());
                return;
            }
            for p in 0..used.len() {
                if !used[p] && (0..used.len()).all(|q| used[q] || !c.precedes(q, p)) {
                    used[p] = true;
                    cur.push(p);
                    go(c, used, cur, out);
                    cur.pop();
                    used[p] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(c, &mut vec![false; c.len()], &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn heap_extensions_equal_class() {
        let s = sys(Kind::D, 4);
        let c = heap_of(&ReducedWord::parse(&s, "3 2 1 4 3 2 1 4 3 2 1 4").unwrap());
        let members: Vec<Vec<usize>> = c.enumerate(1000).unwrap().iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(members, brute_extensions(&c));
        for m in c.enumerate(1000).unwrap() {
            assert_eq!(m.roots(), roots_of_word(&s, m.letters()).unwrap());
            assert!(c.contains_word(&m));
        }
    }

    #[test]
    fn heap_json_round_trip() {
        let s = sys(Kind::A, 4);
        let c = heap_of(&longest_word(&s));
        let json = c.heap_json();
        let back = CommClass::from_heap_json(&s, &json).unwrap();
        assert_eq!(back.covers(), c.covers());
    }

    fn random_longest_word(s: &RootSystem, seed: u64) -> Vec<usize> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut word: Vec<usize> = Vec::new();
        while word.len() < s.len() {
            let options: Vec<usize> = (0..s.rank())
                .filter(|&i| {
                    let mut w = word.clone();
                    w.push(i);
                    is_reduced(s, &w)
                })
                .collect();
            word.push(options[rng.gen_range(0..options.len())]);
        }
        word
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn convexity_of_total_orders(seed in any::<u64>(), pick in 0usize..4) {
            let (k, n) = [(Kind::A, 4), (Kind::A, 5), (Kind::D, 4), (Kind::D, 5)][pick];
            let s = sys(k, n);
            let w = ReducedWord::new(&s, random_longest_word(&s, seed)).unwrap();
            for a in s.ids() {
                for b in s.ids() {
                    if let Some(g) = s.sum(a, b) {
                        let (pa, pb, pg) = (w.position(a).unwrap(), w.position(b).unwrap(), w.position(g).unwrap());
                        prop_assert!(pa.min(pb) < pg && pg < pa.max(pb));
                    }
                }
            }
        }

        #[test]
        fn class_members_share_roots_and_order(seed in any::<u64>()) {
            let s = sys(Kind::A, 4);
            let w = ReducedWord::new(&s, random_longest_word(&s, seed)).unwrap();
            let c = heap_of(&w);
            let members = c.enumerate(100_000).unwrap();
            for m in &members {
                prop_assert_eq!(m.root_set(), w.root_set());
            }
            for p in 0..c.len() {
                for q in 0..c.len() {
                    if p == q { continue; }
                    let (rp, rq) = (w.roots()[p], w.roots()[q]);
                    let always = members.iter().all(|m| m.position(rp) < m.position(rq));
                    prop_assert_eq!(always, c.precedes(p, q));
                }
            }
        }
    }
}
