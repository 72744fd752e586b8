use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigUint;
use serde::Serialize;

use super::encode::bits_to_string;
use crate::dyadic::{DyadicRational, DyadicWord, Tail};
use crate::error::{Error, Result};
use crate::pascal::successor_mut;

/// Default refinement bound for a table of length-`n` words.
pub fn default_max_depth(n: usize) -> usize {
    n + 24
}

/// Known prefix `0^a 1^b` of the current point and `r` symbols still to emit.
type State = (u32, u32, u32);

enum Expansion {
    /// The remaining `r` symbols are fixed.
    Done(u64),
    /// Same output distribution as another state.
    Same(State),
    /// Reveal one more bit. A zero after ones completes a "10", so the orbit
    /// runs deterministically: `word` (of `len` symbols) is emitted, then it
    /// continues from `then` unless everything was emitted.
    Split { one: State, zero: Zero },
}

enum Zero {
    State(State),
    Emit { word: u64, len: u32, then: Option<State> },
}

fn expand((a, b, r): State) -> Expansion {
    let first = u64::from(a == 0);
    if r == 0 {
        return Expansion::Done(0);
    }
    if r == 1 {
        return Expansion::Done(first);
    }
    if b == 0 && a >= r {
        // once the zeros cover every output, one more zero changes nothing
        return Expansion::Same((a, 1, r));
    }
    if b >= 1 && b >= r {
        // P runs down the ones: first symbol, then all ones
        let ones = ((1u64 << (r - 1)) - 1) << 1;
        return Expansion::Done(first | ones);
    }
    let one = if b == 0 { (a, 1, r) } else { (a, b + 1, r) };
    if b == 0 {
        return Expansion::Split { one, zero: Zero::State((a + 1, 0, r)) };
    }
    let mut bits = vec![0u8; a as usize];
    bits.extend(std::iter::repeat_n(1, b as usize));
    bits.push(0);
    let mut y = DyadicWord::new(&bits, Tail::Unknown).expect("0-1 bits");
    let (mut word, mut len) = (0u64, 0u32);
    loop {
        word |= u64::from(y.explicit_bit(0)) << len;
        len += 1;
        if len == r {
            return Expansion::Split { one, zero: Zero::Emit { word, len, then: None } };
        }
        if successor_mut(&mut y).is_err() {
            // stuck at 0^a2 1^b2: its first symbol belongs to the next state
            len -= 1;
            word &= !(1u64 << len);
            let a2 = (0..y.len()).take_while(|&i| y.explicit_bit(i) == 0).count() as u32;
            let b2 = y.len() as u32 - a2;
            return Expansion::Split { one, zero: Zero::Emit { word, len, then: Some((a2, b2, r - len)) } };
        }
    }
}

/// Output distribution of a state: masses are numerators over `2^scale`.
struct Dist {
    words: Vec<(u64, u128)>,
    residual: u128,
}

struct MeasureEngine {
    max_depth: u32,
    scale: u32,
    memo: HashMap<State, Rc<Dist>>,
}

impl MeasureEngine {
    fn new(max_depth: usize) -> Result<MeasureEngine> {
        if max_depth > 126 {
            return Err(Error::TooLarge(format!("max_depth {max_depth} > 126")));
        }
        Ok(MeasureEngine { max_depth: max_depth as u32, scale: max_depth as u32, memo: HashMap::new() })
    }

    fn dist(&mut self, s: State) -> Rc<Dist> {
        if let Some(d) = self.memo.get(&s) {
            return d.clone();
        }
        let full = 1u128 << self.scale;
        let d = match expand(s) {
            Expansion::Done(w) => Dist { words: vec![(w, full)], residual: 0 },
            Expansion::Same(t) => {
                let d = self.dist(t);
                self.memo.insert(s, d.clone());
                return d;
            }
            Expansion::Split { .. } if s.0 + s.1 >= self.max_depth => Dist { words: vec![], residual: full },
            Expansion::Split { one, zero } => {
                let mut acc: HashMap<u64, u128> = HashMap::new();
                let d1 = self.dist(one);
                let mut residual = d1.residual / 2;
                for &(w, p) in &d1.words {
                    *acc.entry(w).or_default() += p / 2;
                }
                match zero {
                    Zero::State(t) => {
                        let d0 = self.dist(t);
                        residual += d0.residual / 2;
                        for &(w, p) in &d0.words {
                            *acc.entry(w).or_default() += p / 2;
                        }
                    }
                    Zero::Emit { word, then: None, .. } => {
                        *acc.entry(word).or_default() += full / 2;
                    }
                    Zero::Emit { word, len, then: Some(t) } => {
                        let d0 = self.dist(t);
                        residual += d0.residual / 2;
                        for &(w, p) in &d0.words {
                            *acc.entry(word | (w << len)).or_default() += p / 2;
                        }
                    }
                }
                let mut words: Vec<(u64, u128)> = acc.into_iter().collect();
                words.sort_unstable();
                Dist { words, residual }
            }
        };
        let d = Rc::new(d);
        self.memo.insert(s, d.clone());
        d
    }
}

/// Same recursion, tracking only which words occur.
struct SupportEngine {
    max_depth: u32,
    memo: HashMap<State, Rc<(Vec<u64>, bool)>>,
}

impl SupportEngine {
    fn support(&mut self, s: State) -> Rc<(Vec<u64>, bool)> {
        if let Some(d) = self.memo.get(&s) {
            return d.clone();
        }
        let d = match expand(s) {
            Expansion::Done(w) => (vec![w], false),
            Expansion::Same(t) => {
                let d = self.support(t);
                self.memo.insert(s, d.clone());
                return d;
            }
            Expansion::Split { .. } if s.0 + s.1 >= self.max_depth => (vec![], true),
            Expansion::Split { one, zero } => {
                let d1 = self.support(one);
                let mut words = d1.0.clone();
                let mut cut = d1.1;
                match zero {
                    Zero::State(t) => {
                        let d0 = self.support(t);
                        words.extend_from_slice(&d0.0);
                        cut |= d0.1;
                    }
                    Zero::Emit { word, then: None, .. } => words.push(word),
                    Zero::Emit { word, len, then: Some(t) } => {
                        let d0 = self.support(t);
                        words.extend(d0.0.iter().map(|&w| word | (w << len)));
                        cut |= d0.1;
                    }
                }
                words.sort_unstable();
                words.dedup();
                (words, cut)
            }
        };
        let d = Rc::new(d);
        self.memo.insert(s, d.clone());
        d
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadParameter("word length must be at least 1".into()));
    }
    if n > 64 {
        return Err(Error::TooLarge(format!("word length {n} > 64")));
    }
    Ok(())
}

fn unpack(w: u64, n: usize) -> Vec<u8> {
    (0..n).map(|i| ((w >> i) & 1) as u8).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CylinderEntry {
    #[serde(serialize_with = "ser_word")]
    pub word: Vec<u8>,
    pub measure: DyadicRational,
    pub group_id: usize,
}

fn ser_word<S: serde::Serializer>(w: &[u8], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&bits_to_string(w))
}

/// Words sharing one measure; `measure` is per word, `total` the group sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CylinderGroup {
    pub group_id: usize,
    pub measure: DyadicRational,
    pub cardinality: usize,
    pub total: DyadicRational,
}

/// Exact measures of the length-`n` cylinders of the coded process.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CylinderTable {
    pub word_length: usize,
    pub max_depth: usize,
    /// Sorted by word, compared as strings.
    pub entries: Vec<CylinderEntry>,
    /// Sorted by decreasing per-word measure.
    pub groups: Vec<CylinderGroup>,
    pub residual_mass: DyadicRational,
}

impl CylinderTable {
    fn build(n: usize, max_depth: usize, masses: Vec<(Vec<u8>, DyadicRational)>, residual: DyadicRational) -> CylinderTable {
        let mut by_measure: BTreeMap<DyadicRational, usize> = BTreeMap::new();
        for (_, m) in &masses {
            *by_measure.entry(m.clone()).or_default() += 1;
        }
        let groups: Vec<CylinderGroup> = by_measure
            .into_iter()
            .rev()
            .enumerate()
            .map(|(group_id, (measure, cardinality))| CylinderGroup {
                group_id,
                total: &measure * &DyadicRational::from_int(BigUint::from(cardinality)),
                measure,
                cardinality,
            })
            .collect();
        let mut entries: Vec<CylinderEntry> = masses
            .into_iter()
            .map(|(word, measure)| {
                let group_id = groups.iter().find(|g| g.measure == measure).unwrap().group_id;
                CylinderEntry { word, measure, group_id }
            })
            .collect();
        entries.sort_by(|a, b| a.word.cmp(&b.word));
        CylinderTable { word_length: n, max_depth, entries, groups, residual_mass: residual }
    }

    pub fn total_mass(&self) -> DyadicRational {
        self.entries.iter().map(|e| &e.measure).sum()
    }
}

/// Exact cylinder table. Cells are refined one revealed bit at a time;
/// cells with identical futures are shared, and the two unbounded runs
/// (leading zeros covering all outputs, or ones covering them) are closed
/// exactly. Cells needing more than `max_depth` bits go to the residual.
pub fn cylinder_table(n: usize, max_depth: usize) -> Result<CylinderTable> {
    check_n(n)?;
    let mut eng = MeasureEngine::new(max_depth)?;
    let mut acc: BTreeMap<u64, u128> = BTreeMap::new();
    let mut residual = 0u128;
    for s in [(1, 0, n as u32), (0, 1, n as u32)] {
        let d = eng.dist(s);
        residual += d.residual / 2;
        for &(w, p) in &d.words {
            *acc.entry(w).or_default() += p / 2;
        }
    }
    let to_rat = |p: u128| DyadicRational::new(BigUint::from(p), eng.scale as u64);
    let masses = acc.into_iter().map(|(w, p)| (unpack(w, n), to_rat(p))).collect();
    Ok(CylinderTable::build(n, max_depth, masses, to_rat(residual)))
}

/// A base cylinder of the dyadic integers and, if determined, its first
/// `n` output symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinementCell {
    #[serde(serialize_with = "ser_word")]
    pub fixed_prefix: Vec<u8>,
    pub mass: DyadicRational,
    pub resolved_output: Option<Vec<u8>>,
}

fn resolve(prefix: &[u8], n: usize) -> Option<Vec<u8>> {
    let mut y = DyadicWord::new(prefix, Tail::Unknown).ok()?;
    let mut out = Vec::with_capacity(n);
    loop {
        out.push(y.bit(0)?);
        if out.len() == n {
            return Some(out);
        }
        successor_mut(&mut y).ok()?;
    }
}

/// Plain refinement without sharing or closure: every base cylinder is
/// split until its outputs are fixed or it reaches `max_depth` bits.
/// Returns the resolved cells and the unresolved ones at the depth bound.
pub fn refine_cells(n: usize, max_depth: usize) -> Result<Vec<RefinementCell>> {
    check_n(n)?;
    let mut cells = Vec::new();
    let mut stack = vec![vec![1u8], vec![0u8]];
    while let Some(p) = stack.pop() {
        let out = resolve(&p, n);
        if out.is_some() || p.len() >= max_depth {
            let mass = DyadicRational::pow2_neg(p.len() as u64);
            cells.push(RefinementCell { fixed_prefix: p, mass, resolved_output: out });
        } else {
            let mut p1 = p.clone();
            p1.push(1);
            let mut p0 = p;
            p0.push(0);
            stack.push(p1);
            stack.push(p0);
        }
    }
    Ok(cells)
}

/// Cylinder table built from [`refine_cells`].
pub fn cylinder_table_truncated(n: usize, max_depth: usize) -> Result<CylinderTable> {
    let mut acc: BTreeMap<Vec<u8>, DyadicRational> = BTreeMap::new();
    let mut residual = DyadicRational::zero();
    for c in refine_cells(n, max_depth)? {
        match c.resolved_output {
            Some(w) => {
                let e = acc.entry(w).or_insert_with(DyadicRational::zero);
                *e = &*e + &c.mass;
            }
            None => residual = &residual + &c.mass,
        }
    }
    Ok(CylinderTable::build(n, max_depth, acc.into_iter().collect(), residual))
}

/// Distribution of the first `l` bits of `P x` for uniform `x`, with the
/// mass of cells still undetermined at `max_depth`.
pub fn successor_pushforward(l: usize, max_depth: usize) -> Result<(BTreeMap<Vec<u8>, DyadicRational>, DyadicRational)> {
    let mut acc: BTreeMap<Vec<u8>, DyadicRational> = BTreeMap::new();
    let mut residual = DyadicRational::zero();
    let mut stack = vec![vec![]];
    while let Some(p) = stack.pop() {
        let mass = DyadicRational::pow2_neg(p.len() as u64);
        let image = if p.len() >= l {
            let mut y = DyadicWord::new(&p, Tail::Unknown)?;
            successor_mut(&mut y).ok().map(|_| y.bits()[..l].to_vec())
        } else {
            None
        };
        match image {
            Some(w) => {
                let e = acc.entry(w).or_insert_with(DyadicRational::zero);
                *e = &*e + &mass;
            }
            None if p.len() >= max_depth => residual = &residual + &mass,
            None => {
                for b in [1u8, 0] {
                    let mut q = p.clone();
                    q.push(b);
                    stack.push(q);
                }
            }
        }
    }
    Ok((acc, residual))
}

/// Number of positive-measure words of each length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityReport {
    pub entries: Vec<(usize, u64)>,
}

impl ComplexityReport {
    pub fn p(&self, n: usize) -> Option<u64> {
        self.entries.iter().find(|e| e.0 == n).map(|e| e.1)
    }
}

/// Refinement depth that resolves every cell for words up to length `n`.
pub fn complexity_depth(n: usize) -> usize {
    2 * n
}

/// `p(n)` for `1 <= n <= n_max`, failing if the depth bound could hide words.
pub fn complexity(n_max: usize, max_depth: usize) -> Result<ComplexityReport> {
    check_n(n_max)?;
    let mut eng = SupportEngine { max_depth: max_depth as u32, memo: HashMap::new() };
    let mut entries = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let a = eng.support((1, 0, n as u32));
        let b = eng.support((0, 1, n as u32));
        if a.1 || b.1 {
            return Err(Error::DepthInsufficient(format!(
                "length-{n} words need more than {max_depth} refinement bits"
            )));
        }
        let mut words = a.0.clone();
        words.extend_from_slice(&b.0);
        words.sort_unstable();
        words.dedup();
        entries.push((n, words.len() as u64));
    }
    Ok(ComplexityReport { entries })
}

/// The words of positive measure, as strings.
pub fn language(n: usize, max_depth: usize) -> Result<Vec<String>> {
    check_n(n)?;
    let mut eng = SupportEngine { max_depth: max_depth as u32, memo: HashMap::new() };
    let (a, b) = (eng.support((1, 0, n as u32)), eng.support((0, 1, n as u32)));
    if a.1 || b.1 {
        return Err(Error::DepthInsufficient(format!("depth {max_depth} for length {n}")));
    }
    let mut out: Vec<String> = a.0.iter().chain(b.0.iter()).map(|&w| bits_to_string(&unpack(w, n))).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn groups(t: &CylinderTable) -> Vec<(u64, usize)> {
        t.groups.iter().map(|g| (g.measure.exp(), g.cardinality)).collect()
    }

    #[test]
    fn length_six() {
        let t = cylinder_table(6, default_max_depth(6)).unwrap();
        assert_eq!(t.entries.len(), 37);
        assert_eq!(groups(&t), vec![(4, 5), (5, 12), (6, 20)]);
        assert!(t.residual_mass.is_zero());
        assert_eq!(t.total_mass(), DyadicRational::one());
    }

    #[test]
    fn short_lengths_by_hand() {
        // y0 is the first bit: 1/2 each
        let t = cylinder_table(1, 30).unwrap();
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.groups[0].measure, DyadicRational::pow2_neg(1));
        assert_eq!(complexity(3, 6).unwrap().entries, vec![(1, 2), (2, 4), (3, 8)]);
    }

    #[test]
    fn truncation_brackets_closed_form() {
        for n in 2..=6 {
            let exact = cylinder_table(n, default_max_depth(n)).unwrap();
            let trunc = cylinder_table_truncated(n, 22).unwrap();
            assert_eq!(&trunc.total_mass() + &trunc.residual_mass, DyadicRational::one());
            for e in &exact.entries {
                let lower = trunc
                    .entries
                    .iter()
                    .find(|t| t.word == e.word)
                    .map_or(DyadicRational::zero(), |t| t.measure.clone());
                assert!(lower <= e.measure);
                assert!(e.measure <= &lower + &trunc.residual_mass);
            }
            assert!(trunc.entries.iter().all(|t| exact.entries.iter().any(|e| e.word == t.word)));
        }
    }

    #[test]
    fn shallow_depth_leaves_residual() {
        let t = cylinder_table(8, 9).unwrap();
        assert!(!t.residual_mass.is_zero());
        assert_eq!(&t.total_mass() + &t.residual_mass, DyadicRational::one());
        assert!(matches!(complexity(8, 9), Err(Error::DepthInsufficient(_))));
    }

    #[test]
    fn complexity_matches_table() {
        let c = complexity(10, complexity_depth(10)).unwrap();
        for n in 1..=10 {
            let t = cylinder_table(n, default_max_depth(n)).unwrap();
            assert_eq!(c.p(n), Some(t.entries.len() as u64));
        }
    }

    #[test]
    fn one_step_preserves_measure() {
        for l in 1..=8 {
            let (img, residual) = successor_pushforward(l, l + 14).unwrap();
            let target = DyadicRational::pow2_neg(l as u64);
            let total: DyadicRational = img.values().sum();
            assert_eq!(&total + &residual, DyadicRational::one());
            assert_eq!(img.len(), 1 << l);
            for m in img.values() {
                assert!(*m <= target && target <= m + &residual);
            }
        }
    }
}
