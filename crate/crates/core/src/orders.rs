//! Root sequences and the four orders on roots and sequences: the total order
//! of a word, the convex partial order of its class, the bi-lexicographic
//! order of a word and its class-wide coarsening.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Kind, RootId, RootSystem};
use crate::words::{CommClass, ReducedWord};

/// A finitely supported multiset of positive roots.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSequence {
    parts: Vec<(RootId, u32)>,
}

impl RootSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(root: RootId) -> Self {
        Self {
            parts: vec![(root, 1)],
        }
    }

    pub fn pair(alpha: RootId, beta: RootId) -> Self {
        [alpha, beta].into_iter().collect()
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (RootId, u32)>) -> Self {
        let mut map: BTreeMap<RootId, u32> = BTreeMap::new();
        for (r, c) in counts {
            *map.entry(r).or_default() += c;
        }
        Self {
            parts: map.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }

    /// Nonzero counts sorted by root id.
    pub fn parts(&self) -> &[(RootId, u32)] {
        &self.parts
    }

    pub fn count(&self, root: RootId) -> u32 {
        self.parts
            .binary_search_by_key(&root, |&(r, _)| r)
            .map(|k| self.parts[k].1)
            .unwrap_or(0)
    }

    pub fn add(&mut self, root: RootId, count: u32) {
        if count == 0 {
            return;
        }
        match self.parts.binary_search_by_key(&root, |&(r, _)| r) {
            Ok(k) => self.parts[k].1 += count,
            Err(k) => self.parts.insert(k, (root, count)),
        }
    }

    /// `|m|`, the number of parts counted with multiplicity.
    pub fn size(&self) -> u32 {
        self.parts.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_basic(&self) -> bool {
        self.parts.iter().all(|&(_, c)| c <= 1)
    }

    pub fn is_pair(&self) -> bool {
        self.is_basic() && self.size() == 2
    }

    pub fn support(&self) -> RootSet {
        self.parts.iter().map(|&(r, _)| r).collect()
    }

    /// Roots listed with multiplicity, by increasing id.
    pub fn roots(&self) -> impl Iterator<Item = RootId> + '_ {
        self.parts
            .iter()
            .flat_map(|&(r, c)| std::iter::repeat_n(r, c as usize))
    }

    /// `wt(m)`, the sum of the parts as a vector of simple-root coefficients.
    pub fn weight(&self, system: &RootSystem) -> Vec<i32> {
        let mut w = vec![0; system.rank()];
        for &(r, c) in &self.parts {
            for (x, y) in w.iter_mut().zip(system.coeffs(r)) {
                *x += c as i32 * y;
            }
        }
        w
    }

    /// Roots listed with multiplicity in the order they occur in `word`.
    /// Roots outside the word come last.
    pub fn in_word_order(&self, word: &ReducedWord) -> Vec<RootId> {
        let mut roots: Vec<RootId> = self.roots().collect();
        roots.sort_by_key(|&r| (word.position(r).unwrap_or(usize::MAX), r));
        roots
    }

    /// Formats as `(r1,r2,...)` with parts in the order of `word`.
    pub fn format(&self, word: &ReducedWord) -> String {
        let sys = word.system();
        let mut out = String::from("(");
        for (k, r) in self.in_word_order(word).into_iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            let name = sys.format_root(r);
            let name = match sys.kind() {
                Kind::E => name.trim_start_matches('(').trim_end_matches(')').to_string(),
                _ => name,
            };
            let _ = write!(out, "{name}");
        }
        out.push(')');
        out
    }

    /// Parses a comma separated list of roots, optionally wrapped in
    /// parentheses, such as `({1|-4},{2|3})`, `[1],[2,5]` or `(111001,123212)`.
    pub fn parse(system: &RootSystem, text: &str) -> Result<Self> {
        let t = text.trim();
        let err = || Error::Parse {
            what: "root sequence",
            text: text.to_string(),
        };
        if t.is_empty() || t == "()" {
            return Ok(Self::new());
        }
        let pieces = split_top_level(t).ok_or_else(err)?;
        if pieces.len() == 1 {
            if let Ok(r) = system.parse_root(pieces[0]) {
                return Ok(Self::single(r));
            }
            let inner = t
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(err)?;
            return Self::parse(system, inner);
        }
        let roots = pieces
            .iter()
            .map(|p| system.parse_root(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(roots.into_iter().collect())
    }
}

impl FromIterator<RootId> for RootSequence {
    fn from_iter<T: IntoIterator<Item = RootId>>(iter: T) -> Self {
        Self::from_counts(iter.into_iter().map(|r| (r, 1)))
    }
}

fn split_top_level(text: &str) -> Option<Vec<&str>> {
    let mut depth = 0i32;
    let mut pieces = Vec::new();
    let mut start = 0;
    for (k, c) in text.char_indices() {
        match c {
            '(' | '[' | '{' | '<' | '⟨' => depth += 1,
            ')' | ']' | '}' | '>' | '⟩' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push(text[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    if depth != 0 {
        return None;
    }
    pieces.push(text[start..].trim());
    if pieces.iter().any(|p| p.is_empty()) {
        return None;
    }
    Some(pieces)
}

/// `α <_w β`: α occurs before β in the root list of `word`.
pub fn total_less(word: &ReducedWord, alpha: RootId, beta: RootId) -> Result<bool> {
    Ok(word.require_position(alpha)? < word.require_position(beta)?)
}

/// `α ≺ β` in the convex partial order of the class.
pub fn partial_less(class: &CommClass, alpha: RootId, beta: RootId) -> Result<bool> {
    let word = class.word();
    word.require_position(alpha)?;
    word.require_position(beta)?;
    Ok(class.prec(alpha, beta))
}

/// Positions in `word` where the two sequences differ, with the comparison of
/// their counts there. `None` if a differing root is not in the word.
fn differences(word: &ReducedWord, lower: &RootSequence, upper: &RootSequence) -> Option<Vec<(usize, Ordering)>> {
    let mut diffs = Vec::new();
    for r in (lower.support() | upper.support()).iter() {
        let ord = lower.count(r).cmp(&upper.count(r));
        if ord != Ordering::Equal {
            diffs.push((word.position(r)?, ord));
        }
    }
    diffs.sort_unstable();
    Some(diffs)
}

/// `m' <ᵇ_w m`: at the first and at the last position where the sequences
/// differ, `m'` has the smaller count. A single differing position serves as
/// both.
pub fn bilex_less(word: &ReducedWord, lower: &RootSequence, upper: &RootSequence) -> bool {
    match differences(word, lower, upper) {
        Some(d) => match (d.first(), d.last()) {
            (Some(first), Some(last)) => first.1 == Ordering::Less && last.1 == Ordering::Less,
            _ => false,
        },
        None => false,
    }
}

/// `m' ≺ᵇ m` for the class: `m' <ᵇ m` for every member of the class.
///
/// Every minimal and every maximal element (for the convex partial order) of
/// the set of roots where the sequences differ must carry a smaller count in
/// `m'`.
pub fn coarse_less(class: &CommClass, lower: &RootSequence, upper: &RootSequence) -> bool {
    let mut diff = RootSet::empty();
    let mut less = RootSet::empty();
    for r in (lower.support() | upper.support()).iter() {
        if !class.contains(r) {
            return false;
        }
        match lower.count(r).cmp(&upper.count(r)) {
            Ordering::Less => {
                diff.insert(r);
                less.insert(r);
            }
            Ordering::Greater => diff.insert(r),
            Ordering::Equal => {}
        }
    }
    coarse_less_sets(class, diff, less)
}

/// The extremal-element test behind [`coarse_less`], given the difference
/// set and the subset where the lower sequence has the smaller count.
pub(crate) fn coarse_less_sets(class: &CommClass, diff: RootSet, less: RootSet) -> bool {
    if diff.is_empty() {
        return false;
    }
    let greater = diff - less;
    greater
        .iter()
        .all(|r| !(class.below(r) & diff).is_empty() && !(class.above(r) & diff).is_empty())
}

/// [`coarse_less`] by brute force over an explicit list of class members.
pub fn coarse_less_brute(members: &[ReducedWord], lower: &RootSequence, upper: &RootSequence) -> bool {
    members.iter().all(|w| bilex_less(w, lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::ReducedWord;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn a5() -> ReducedWord {
        let sys = Arc::new(RootSystem::new(Kind::A, 5).unwrap());
        ReducedWord::parse(&sys, "1 3 2 1 4 3 2 1 5 4 3 2 1 5 4").unwrap()
    }

    fn d4_class() -> CommClass {
        let sys = Arc::new(RootSystem::new(Kind::D, 4).unwrap());
        CommClass::new(ReducedWord::parse(&sys, "3 2 1 4 3 2 1 4 3 2 1 4").unwrap())
    }

    fn seq(sys: &RootSystem, text: &str) -> RootSequence {
        RootSequence::parse(sys, text).unwrap()
    }

    #[test]
    fn parse_and_format() {
        let w = a5();
        let sys = w.system();
        let m = seq(sys, "([2,3],[1,5])");
        assert_eq!(m.size(), 2);
        assert!(m.is_pair());
        assert_eq!(m.format(&w), "([2,3],[1,5])");
        assert_eq!(seq(sys, "[1,5], [2,3]"), m);
        let d = d4_class();
        let dsys = d.system();
        let s = seq(dsys, "(⟨1|−4⟩,⟨2|3⟩,⟨2|−3⟩)");
        assert_eq!(s.size(), 3);
        assert_eq!(seq(dsys, "{2|-3},{1|-4},{2|3}"), s);
        let e = Arc::new(RootSystem::new(Kind::E, 6).unwrap());
        let p = seq(&e, "(111001,123212)");
        assert_eq!(p.weight(&e), vec![2, 3, 4, 2, 1, 3]);
        assert_eq!(seq(&e, "(123212)").size(), 1);
        let w = crate::words::longest_word(&e);
        assert_eq!(RootSequence::parse(&e, &p.format(&w)).unwrap(), p);
        assert!(p.format(&w).starts_with("(1"));
        assert!(RootSequence::parse(&e, "(111001,").is_err());
        assert!(RootSequence::parse(&e, "(111002)").is_err());
    }

    #[test]
    fn counts_and_weight() {
        let w = a5();
        let sys = w.system();
        let r = sys.parse_root("[2,3]").unwrap();
        let mut m = RootSequence::single(r);
        m.add(r, 1);
        assert!(!m.is_basic());
        assert_eq!(m.count(r), 2);
        assert_eq!(m.weight(sys), vec![0, 2, 2, 0, 0]);
        assert_eq!(m.format(&w), "([2,3],[2,3])");
    }

    #[test]
    fn total_order_of_word() {
        let w = a5();
        let sys = w.system();
        let r = |t: &str| sys.parse_root(t).unwrap();
        assert!(total_less(&w, r("[1]"), r("[3]")).unwrap());
        assert!(!total_less(&w, r("[1]"), r("[1]")).unwrap());
        let d = d4_class();
        let ds = d.system();
        let rd = |t: &str| ds.parse_root(t).unwrap();
        assert!(total_less(d.word(), rd("{3|-4}"), rd("{1|2}")).unwrap());
        let short = ReducedWord::parse(ds, "1 2").unwrap();
        assert!(matches!(
            total_less(&short, rd("{1|2}"), rd("{1|-2}")),
            Err(Error::RootNotInWord(_))
        ));
    }

    #[test]
    fn partial_order_examples() {
        let d = d4_class();
        let ds = d.system();
        let r = |t: &str| ds.parse_root(t).unwrap();
        assert!(partial_less(&d, r("{2|3}"), r("{1|2}")).unwrap());
        assert!(partial_less(&d, r("{1|2}"), r("{1|-3}")).unwrap());
        assert!(!partial_less(&d, r("{1|2}"), r("{1|2}")).unwrap());
    }

    #[test]
    fn bilex_examples() {
        let w = a5();
        let sys = w.system();
        let lower = seq(sys, "([2,3],[1,5])");
        let upper = seq(sys, "([1,3],[2,5])");
        assert!(bilex_less(&w, &lower, &upper));
        assert!(!bilex_less(&w, &upper, &lower));
        assert!(!bilex_less(&w, &upper, &upper));
        let d = d4_class();
        let ds = d.system();
        let s = seq(ds, "(⟨1|−4⟩,⟨2|3⟩,⟨2|−3⟩)");
        let p = seq(ds, "(⟨2|−4⟩,⟨1|2⟩)");
        assert!(bilex_less(d.word(), &s, &p));
        assert!(coarse_less(&d, &s, &p));
        assert!(!coarse_less(&d, &p, &p));
    }

    /// All multisets of roots of `sys` with the given weight, by brute force.
    fn partitions(sys: &RootSystem, weight: &[i32]) -> Vec<RootSequence> {
        fn go(sys: &RootSystem, rem: &mut Vec<i32>, from: usize, cur: &mut Vec<RootId>, out: &mut Vec<RootSequence>) {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.iter().copied().collect());
                return;
            }
            for k in from..sys.len() {
                let id = sys.ids().nth(k).unwrap();
                let c = sys.coeffs(id);
                if rem.iter().zip(c).all(|(a, b)| a >= b) {
                    rem.iter_mut().zip(c).for_each(|(a, b)| *a -= b);
                    cur.push(id);
                    go(sys, rem, k, cur, out);
                    cur.pop();
                    rem.iter_mut().zip(c).for_each(|(a, b)| *a += b);
                }
            }
        }
        let mut out = Vec::new();
        go(sys, &mut weight.to_vec(), 0, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn coarse_matches_brute_force_on_d4() {
        let d = d4_class();
        let sys = d.system().clone();
        let members = d.enumerate(1000).unwrap();
        assert_eq!(members.len(), 72);
        let p = seq(&sys, "(⟨2|−4⟩,⟨1|2⟩)");
        let seqs = partitions(&sys, &p.weight(&sys));
        assert!(seqs.len() > 5);
        let mut hits = 0;
        for a in &seqs {
            for b in &seqs {
                let fast = coarse_less(&d, a, b);
                assert_eq!(fast, coarse_less_brute(&members, a, b), "{a:?} {b:?}");
                if fast {
                    assert!(bilex_less(d.word(), a, b));
                    hits += 1;
                }
            }
        }
        assert!(hits > 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn coarse_matches_brute_force_on_a4_classes(seed in any::<u64>(), i in 0usize..10, j in 0usize..10) {
            use rand::{Rng, SeedableRng};
            let sys = Arc::new(RootSystem::new(Kind::A, 4).unwrap());
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut letters = Vec::new();
            while letters.len() < sys.len() {
                let i = rng.gen_range(0..4);
                letters.push(i);
                if !crate::words::is_reduced(&sys, &letters) {
                    letters.pop();
                }
            }
            let class = CommClass::new(ReducedWord::new(&sys, letters).unwrap());
            let members = class.enumerate(100_000).unwrap();
            let a = RootId(i as u16);
            let b = RootId(j as u16);
            prop_assume!(a != b);
            let w = RootSequence::pair(a, b).weight(&sys);
            let seqs = partitions(&sys, &w);
            for x in &seqs {
                for y in &seqs {
                    prop_assert_eq!(coarse_less(&class, x, y), coarse_less_brute(&members, x, y));
                }
            }
        }
    }
}
