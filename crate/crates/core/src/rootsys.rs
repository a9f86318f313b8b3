//! Simply-laced Cartan data, positive roots and the three textual root notations.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    D,
    E,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::D => "D",
            Kind::E => "E",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Kind::A),
            "D" | "d" => Ok(Kind::D),
            "E" | "e" => Ok(Kind::E),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

/// Parses `"D4"`, `"E6"`, `"A5"` and similar into a kind and a rank.
pub fn parse_type(text: &str) -> Result<(Kind, usize)> {
    let text = text.trim();
    let mut chars = text.chars();
    let kind: Kind = chars
        .next()
        .ok_or_else(|| Error::UnsupportedType(text.to_string()))?
        .to_string()
        .parse()?;
    let rank = chars
        .as_str()
        .parse::<usize>()
        .map_err(|_| Error::UnsupportedType(text.to_string()))?;
    Ok((kind, rank))
}

/// The Dynkin diagram together with its Cartan matrix.
///
/// Nodes are stored 0-based. Node `i` here is node `i + 1` in the textual notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    kind: Kind,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    edges: Vec<(usize, usize)>,
    distance: Vec<Vec<usize>>,
}

impl CartanDatum {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = match kind {
            Kind::A if rank >= 1 => (0..rank - 1).map(|i| (i, i + 1)).collect(),
            Kind::D if rank >= 4 => {
                let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
                e.push((rank - 3, rank - 1));
                e
            }
            Kind::E if rank == 6 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
            Kind::E if (7..=8).contains(&rank) => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..rank - 1).map(|i| (i, i + 1)));
                e
            }
            _ => return Err(Error::UnsupportedType(format!("{kind}{rank}"))),
        };
        let mut cartan = vec![vec![0; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &edges {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }
        let mut distance = vec![vec![usize::MAX; rank]; rank];
        for (start, row) in distance.iter_mut().enumerate() {
            row[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in 0..rank {
                    if cartan[v][w] == -1 && row[w] == usize::MAX {
                        row[w] = row[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(Self {
            kind,
            rank,
            cartan,
            edges,
            distance,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Unordered Dynkin edges, each stored with the smaller node first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == -1
    }

    /// Two letters commute exactly when their nodes are distinct and not adjacent.
    pub fn commute(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == 0
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| self.cartan[i][j] == -1)
    }

    pub fn distance(&self, i: usize, j: usize) -> usize {
        self.distance[i][j]
    }
}

/// Index of a positive root inside its [`RootSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootId(pub u16);

impl RootId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        RootId(i as u16)
    }
}

/// A positive root written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PosRoot {
    coeffs: Vec<i32>,
}

impl PosRoot {
    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self) -> i32 {
        self.coeffs.iter().copied().max().unwrap_or(0)
    }

    pub fn supp(&self) -> Vec<usize> {
        self.supp_ge(1)
    }

    /// Nodes (0-based) whose coefficient is at least `k`.
    pub fn supp_ge(&self, k: i32) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i] >= k)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

/// The positive roots of a finite ADE root system.
///
/// Roots are ordered by height and, within a height, by decreasing coefficient
/// vector, so the simple roots `α_1, …, α_n` receive ids `0, …, n-1`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    roots: Vec<PosRoot>,
    index: HashMap<Vec<i32>, RootId>,
    sums: Vec<Option<RootId>>,
    reflections: Vec<Vec<Option<RootId>>>,
    star: Vec<usize>,
    epsilon: Vec<Vec<i32>>,
    epsilon_index: HashMap<Vec<i32>, RootId>,
}

impl RootSystem {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let datum = CartanDatum::new(kind, rank)?;
        let n = rank;
        let mut found: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i32>> = found.iter().cloned().collect();
        let mut frontier = 0;
        while frontier < found.len() {
            let v = found[frontier].clone();
            frontier += 1;
            for i in 0..n {
                let mut w = v.clone();
                reflect_in_place(&datum, i, &mut w);
                if w.iter().all(|&c| c >= 0) && seen.insert(w.clone()) {
                    found.push(w);
                }
            }
        }
        found.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let roots: Vec<PosRoot> = found.into_iter().map(|coeffs| PosRoot { coeffs }).collect();
        let index: HashMap<Vec<i32>, RootId> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coeffs.clone(), RootId::from_index(k)))
            .collect();
        let count = roots.len();
        let mut sums = vec![None; count * count];
        for a in 0..count {
            for b in 0..count {
                let s: Vec<i32> = roots[a]
                    .coeffs
                    .iter()
                    .zip(&roots[b].coeffs)
                    .map(|(x, y)| x + y)
                    .collect();
                sums[a * count + b] = index.get(&s).copied();
            }
        }
        let reflections = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        let mut w = r.coeffs.clone();
                        reflect_in_place(&datum, i, &mut w);
                        index.get(&w).copied()
                    })
                    .collect()
            })
            .collect();
        let (epsilon, epsilon_index) = if kind == Kind::D {
            let eps: Vec<Vec<i32>> = roots.iter().map(|r| d_alpha_to_epsilon(&r.coeffs)).collect();
            let idx = eps
                .iter()
                .enumerate()
                .map(|(k, e)| (e.clone(), RootId::from_index(k)))
                .collect();
            (eps, idx)
        } else {
            (Vec::new(), HashMap::new())
        };
        let mut system = Self {
            datum,
            roots,
            index,
            sums,
            reflections,
            star: Vec::new(),
            epsilon,
            epsilon_index,
        };
        system.star = system.compute_star();
        Ok(system)
    }

    /// Computes `i ↦ i*` from a greedily built reduced word of the longest element.
    fn compute_star(&self) -> Vec<usize> {
        let n = self.rank();
        let mut word: Vec<usize> = Vec::new();
        while word.len() < self.len() {
            let next = (0..n)
                .find(|&i| {
                    let mut v = self.simple_vec(i);
                    for &j in word.iter().rev() {
                        reflect_in_place(&self.datum, j, &mut v);
                    }
                    v.iter().all(|&c| c >= 0)
                })
                .expect("an element shorter than w0 has an ascent");
            word.push(next);
        }
        (0..n)
            .map(|i| {
                let mut v = self.simple_vec(i);
                for &j in word.iter().rev() {
                    reflect_in_place(&self.datum, j, &mut v);
                }
                let neg: Vec<i32> = v.iter().map(|c| -c).collect();
                let id = self.index[&neg];
                id.index()
            })
            .collect()
    }

    fn simple_vec(&self, i: usize) -> Vec<i32> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn kind(&self) -> Kind {
        self.datum.kind
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    /// Short type name such as `"D4"`.
    pub fn type_name(&self) -> String {
        format!("{}{}", self.kind(), self.rank())
    }

    /// Number of positive roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[PosRoot] {
        &self.roots
    }

    pub fn ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(RootId::from_index)
    }

    pub fn root(&self, id: RootId) -> &PosRoot {
        &self.roots[id.index()]
    }

    pub fn coeffs(&self, id: RootId) -> &[i32] {
        &self.roots[id.index()].coeffs
    }

    pub fn id_of(&self, coeffs: &[i32]) -> Option<RootId> {
        self.index.get(coeffs).copied()
    }

    pub fn simple(&self, i: usize) -> RootId {
        RootId::from_index(i)
    }

    pub fn is_simple_root(&self, id: RootId) -> bool {
        id.index() < self.rank()
    }

    /// For a simple root, the node it belongs to.
    pub fn simple_node(&self, id: RootId) -> Option<usize> {
        self.is_simple_root(id).then_some(id.index())
    }

    pub fn highest_root(&self) -> RootId {
        RootId::from_index(self.roots.len() - 1)
    }

    pub fn star(&self, i: usize) -> usize {
        self.star[i]
    }

    pub fn star_map(&self) -> &[usize] {
        &self.star
    }

    /// The (dual) Coxeter number `h∨`.
    pub fn dual_coxeter(&self) -> usize {
        match (self.kind(), self.rank()) {
            (Kind::A, n) => n + 1,
            (Kind::D, n) => 2 * n - 2,
            (Kind::E, 6) => 12,
            (Kind::E, 7) => 18,
            (Kind::E, _) => 30,
        }
    }

    /// `a + b` when it is a positive root.
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a.index() * self.roots.len() + b.index()]
    }

    /// `s_i(β)` when it is a positive root, which fails only for `β = α_i`.
    pub fn reflect(&self, i: usize, id: RootId) -> Option<RootId> {
        self.reflections[i][id.index()]
    }

    pub fn reflect_vec(&self, i: usize, v: &mut [i32]) {
        reflect_in_place(&self.datum, i, v);
    }

    /// The symmetric bilinear form `(a, b)` given by the Cartan matrix.
    pub fn bilinear(&self, a: &[i32], b: &[i32]) -> i32 {
        let n = self.rank();
        let mut total = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                total += a[i] * self.datum.cartan[i][j] * b[j];
            }
        }
        total
    }

    /// ε-coordinates of a root of type D.
    pub fn epsilon(&self, id: RootId) -> Option<&[i32]> {
        self.epsilon.get(id.index()).map(Vec::as_slice)
    }

    pub fn parse_root(&self, text: &str) -> Result<RootId> {
        let t = text.trim();
        let err = || Error::Parse {
            what: "root",
            text: text.to_string(),
        };
        match self.kind() {
            Kind::A => {
                let inner = t
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(err)?;
                let parts: Vec<usize> = inner
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err())?;
                let (a, b) = match parts.as_slice() {
                    [a] => (*a, *a),
                    [a, b] => (*a, *b),
                    _ => return Err(err()),
                };
                if a == 0 || b > self.rank() || a > b {
                    return Err(Error::NotARoot(t.to_string()));
                }
                let mut v = vec![0; self.rank()];
                for c in &mut v[a - 1..b] {
                    *c = 1;
                }
                self.id_of(&v).ok_or_else(|| Error::NotARoot(t.to_string()))
            }
            Kind::D => {
                let inner = ["{", "<", "⟨"]
                    .iter()
                    .zip(["}", ">", "⟩"])
                    .find_map(|(open, close)| t.strip_prefix(open)?.strip_suffix(close))
                    .ok_or_else(err)?;
                let (left, right) = inner.split_once('|').ok_or_else(err)?;
                let parse_signed = |s: &str| -> Result<i64> {
                    s.trim().replace('−', "-").parse::<i64>().map_err(|_| err())
                };
                let a = parse_signed(left)?;
                let b = parse_signed(right)?;
                let n = self.rank() as i64;
                if a == 0 || b == 0 || a.abs() > n || b.abs() > n || a.abs() == b.abs() {
                    return Err(Error::NotARoot(t.to_string()));
                }
                let mut e = vec![0; self.rank()];
                e[(a.abs() - 1) as usize] += a.signum() as i32;
                e[(b.abs() - 1) as usize] += b.signum() as i32;
                self.epsilon_index
                    .get(&e)
                    .copied()
                    .ok_or_else(|| Error::NotARoot(t.to_string()))
            }
            Kind::E => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .unwrap_or(t);
                let digits: Vec<i32> = inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as i32))
                    .collect::<Option<_>>()
                    .ok_or_else(err)?;
                if digits.len() != self.rank() {
                    return Err(err());
                }
                self.id_of(&digits)
                    .ok_or_else(|| Error::NotARoot(t.to_string()))
            }
        }
    }

    pub fn format_root(&self, id: RootId) -> String {
        let c = self.coeffs(id);
        match self.kind() {
            Kind::A => {
                let s = c.iter().position(|&x| x != 0).unwrap_or(0) + 1;
                let e = c.iter().rposition(|&x| x != 0).unwrap_or(0) + 1;
                if s == e {
                    format!("[{s}]")
                } else {
                    format!("[{s},{e}]")
                }
            }
            Kind::D => {
                let e = &self.epsilon[id.index()];
                let nz: Vec<usize> = (0..e.len()).filter(|&i| e[i] != 0).collect();
                let (a, b) = (nz[0], nz[1]);
                if e[b] > 0 {
                    format!("{{{}|{}}}", a + 1, b + 1)
                } else {
                    format!("{{{}|-{}}}", a + 1, b + 1)
                }
            }
            Kind::E => {
                let digits: String = c.iter().map(|d| d.to_string()).collect();
                format!("({digits})")
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RootSystemJson {
            kind: self.kind(),
            rank: self.rank(),
            roots: self.roots.iter().map(|r| r.coeffs.clone()).collect(),
        })
        .expect("root system serializes")
    }

    /// Rebuilds a system from its JSON form, checking the stored root list.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: RootSystemJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse {
                what: "root system json",
                text: e.to_string(),
            })?;
        let system = Self::new(parsed.kind, parsed.rank)?;
        let expected: Vec<Vec<i32>> = system.roots.iter().map(|r| r.coeffs.clone()).collect();
        if expected != parsed.roots {
            return Err(Error::Parse {
                what: "root system json",
                text: "root list does not match the Cartan type".to_string(),
            });
        }
        Ok(system)
    }
}

#[derive(Serialize, Deserialize)]
struct RootSystemJson {
    kind: Kind,
    rank: usize,
    roots: Vec<Vec<i32>>,
}

fn reflect_in_place(datum: &CartanDatum, i: usize, v: &mut [i32]) {
    let pairing: i32 = (0..datum.rank).map(|j| datum.cartan[i][j] * v[j]).sum();
    v[i] -= pairing;
}

/// `α_i = ε_i − ε_{i+1}` for `i < n` and `α_n = ε_{n−1} + ε_n`.
fn d_alpha_to_epsilon(c: &[i32]) -> Vec<i32> {
    let n = c.len();
    let mut e = vec![0; n];
    for i in 0..n - 1 {
        e[i] += c[i];
        e[i + 1] -= c[i];
    }
    e[n - 2] += c[n - 1];
    e[n - 1] += c[n - 1];
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(kind: Kind, rank: usize) -> RootSystem {
        RootSystem::new(kind, rank).unwrap()
    }

    #[test]
    fn root_counts() {
        for n in 1..=8 {
            assert_eq!(sys(Kind::A, n).len(), n * (n + 1) / 2);
        }
        for n in 4..=8 {
            assert_eq!(sys(Kind::D, n).len(), n * (n - 1));
        }
        assert_eq!(sys(Kind::E, 6).len(), 36);
        assert_eq!(sys(Kind::E, 7).len(), 63);
        assert_eq!(sys(Kind::E, 8).len(), 120);
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(RootSystem::new(Kind::A, 0), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::new(Kind::D, 3), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::new(Kind::E, 5), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::new(Kind::E, 9), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn a2_roots() {
        let s = sys(Kind::A, 2);
        let names: Vec<_> = s.ids().map(|r| s.format_root(r)).collect();
        assert_eq!(names, ["[1]", "[2]", "[1,2]"]);
    }

    #[test]
    fn simple_roots_come_first() {
        for (k, n) in [(Kind::A, 5), (Kind::D, 5), (Kind::E, 7)] {
            let s = sys(k, n);
            for i in 0..n {
                let mut v = vec![0; n];
                v[i] = 1;
                assert_eq!(s.id_of(&v), Some(s.simple(i)));
            }
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(sys(Kind::E, 6).format_root(sys(Kind::E, 6).highest_root()), "(123212)");
        assert_eq!(sys(Kind::E, 7).format_root(sys(Kind::E, 7).highest_root()), "(2234321)");
        assert_eq!(sys(Kind::E, 8).format_root(sys(Kind::E, 8).highest_root()), "(23465432)");
        let d4 = sys(Kind::D, 4);
        assert_eq!(d4.coeffs(d4.highest_root()), &[1, 2, 1, 1]);
    }

    #[test]
    fn cartan_is_symmetric_tree() {
        for (k, n) in [(Kind::A, 6), (Kind::D, 6), (Kind::E, 6), (Kind::E, 7), (Kind::E, 8)] {
            let d = CartanDatum::new(k, n).unwrap();
            assert_eq!(d.edges().len(), n - 1);
            for i in 0..n {
                assert_eq!(d.entry(i, i), 2);
                for j in 0..n {
                    assert_eq!(d.entry(i, j), d.entry(j, i));
                    assert_eq!(d.distance(i, j), d.distance(j, i));
                    assert!(d.distance(i, j) < n);
                }
            }
        }
    }

    #[test]
    fn dual_coxeter_matches_height_of_highest_root() {
        for (k, n) in [(Kind::A, 3), (Kind::D, 5), (Kind::E, 6), (Kind::E, 7), (Kind::E, 8)] {
            let s = sys(k, n);
            assert_eq!(s.root(s.highest_root()).height() as usize + 1, s.dual_coxeter());
        }
    }

    #[test]
    fn involution_known_values() {
        assert_eq!(sys(Kind::A, 2).star_map(), &[1, 0]);
        assert_eq!(sys(Kind::A, 5).star_map(), &[4, 3, 2, 1, 0]);
        assert_eq!(sys(Kind::D, 4).star_map(), &[0, 1, 2, 3]);
        assert_eq!(sys(Kind::D, 5).star_map(), &[0, 1, 2, 4, 3]);
        assert_eq!(sys(Kind::E, 6).star_map(), &[4, 3, 2, 1, 0, 5]);
        assert_eq!(sys(Kind::E, 7).star_map(), &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(sys(Kind::E, 8).star_map(), &[0, 1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn statistics() {
        let d4 = sys(Kind::D, 4);
        let r = d4.parse_root("{1|2}").unwrap();
        assert_eq!(d4.coeffs(r), &[1, 2, 1, 1]);
        assert_eq!(d4.root(r).mul(), 2);
        for i in 0..4 {
            assert_eq!(d4.root(d4.simple(i)).mul(), 1);
        }
        let e8 = sys(Kind::E, 8);
        let g = e8.parse_root("(23465431)").unwrap();
        assert_eq!(e8.root(g).supp_ge(4), vec![2, 3, 4, 5]);
        assert_eq!(e8.root(g).supp_ge(5), vec![3, 4]);
        assert_eq!(e8.root(g).height(), 28);
    }

    #[test]
    fn parse_examples() {
        let a5 = sys(Kind::A, 5);
        assert_eq!(a5.coeffs(a5.parse_root("[1,3]").unwrap()), &[1, 1, 1, 0, 0]);
        assert_eq!(a5.coeffs(a5.parse_root("[4]").unwrap()), &[0, 0, 0, 1, 0]);
        let d4 = sys(Kind::D, 4);
        assert_eq!(d4.coeffs(d4.parse_root("{2|-4}").unwrap()), &[0, 1, 1, 0]);
        assert_eq!(d4.coeffs(d4.parse_root("⟨2|−4⟩").unwrap()), &[0, 1, 1, 0]);
        assert_eq!(d4.coeffs(d4.parse_root("{2|4}").unwrap()), &[0, 1, 0, 1]);
        assert_eq!(d4.coeffs(d4.parse_root("{3|-4}").unwrap()), &[0, 0, 1, 0]);
        assert_eq!(d4.coeffs(d4.parse_root("{3|4}").unwrap()), &[0, 0, 0, 1]);
        let e6 = sys(Kind::E, 6);
        assert_eq!(e6.coeffs(e6.parse_root("(123212)").unwrap()), &[1, 2, 3, 2, 1, 2]);
    }

    #[test]
    fn parse_errors() {
        let a5 = sys(Kind::A, 5);
        assert!(matches!(a5.parse_root("[3,1]"), Err(Error::NotARoot(_))));
        assert!(matches!(a5.parse_root("[1,7]"), Err(Error::NotARoot(_))));
        assert!(matches!(a5.parse_root("1,3"), Err(Error::Parse { .. })));
        let d4 = sys(Kind::D, 4);
        assert!(matches!(d4.parse_root("{-1|-2}"), Err(Error::NotARoot(_))));
        assert!(matches!(d4.parse_root("{1|1}"), Err(Error::NotARoot(_))));
        assert!(matches!(d4.parse_root("{1,2}"), Err(Error::Parse { .. })));
        let e6 = sys(Kind::E, 6);
        assert!(matches!(e6.parse_root("(101000)"), Err(Error::NotARoot(_))));
        assert!(matches!(e6.parse_root("(1010)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn negative_first_index_shorthand() {
        let d5 = sys(Kind::D, 5);
        let a = d5.parse_root("{-4|2}").unwrap();
        assert_eq!(d5.format_root(a), "{2|-4}");
    }

    #[test]
    fn format_parse_round_trip() {
        let types = [
            (Kind::A, 1),
            (Kind::A, 6),
            (Kind::D, 4),
            (Kind::D, 7),
            (Kind::E, 6),
            (Kind::E, 7),
            (Kind::E, 8),
        ];
        for (k, n) in types {
            let s = sys(k, n);
            for id in s.ids() {
                assert_eq!(s.parse_root(&s.format_root(id)).unwrap(), id);
            }
        }
    }

    #[test]
    fn every_non_simple_root_decomposes() {
        for (k, n) in [(Kind::A, 6), (Kind::D, 6), (Kind::E, 6), (Kind::E, 7), (Kind::E, 8)] {
            let s = sys(k, n);
            for g in s.ids().filter(|&g| !s.is_simple_root(g)) {
                assert!(
                    s.ids().any(|a| s.ids().any(|b| s.sum(a, b) == Some(g))),
                    "{} has no decomposition",
                    s.format_root(g)
                );
            }
        }
    }

    #[test]
    fn roots_have_norm_two() {
        for (k, n) in [(Kind::D, 5), (Kind::E, 8)] {
            let s = sys(k, n);
            for r in s.roots() {
                assert_eq!(s.bilinear(r.coeffs(), r.coeffs()), 2);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let s = sys(Kind::D, 5);
        let v = s.to_json();
        let back = RootSystem::from_json(&v).unwrap();
        assert_eq!(back.roots(), s.roots());
    }

    #[test]
    fn parse_type_names() {
        assert_eq!(parse_type("E6").unwrap(), (Kind::E, 6));
        assert_eq!(parse_type("d4").unwrap(), (Kind::D, 4));
        assert!(parse_type("B3").is_err());
    }
}
