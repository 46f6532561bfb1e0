//! Colored set partitions and the combinatorial primitives that the
//! integration formulas consume: kernels, joins, the noncrossing test, the
//! signature map, twisted Kronecker symbols, and the category operations
//! (tensor, composition, involution, rotation).
//!
//! A partition lives on two rows of legs. Legs are indexed `0..k` for the
//! upper row (left to right) and `k..k+l` for the lower row. Partitions used
//! by the integration pipeline have no upper legs; two-row partitions only
//! show up in the category axiom checks.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Leg color: white legs carry a coordinate, black legs its conjugate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::White => 'w',
            Color::Black => 'b',
        }
    }
}

/// A finite word of leg colors. The empty word is allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct ColoredWord(pub Vec<Color>);

impl ColoredWord {
    pub fn empty() -> Self {
        ColoredWord(Vec::new())
    }

    pub fn all_white(n: usize) -> Self {
        ColoredWord(vec![Color::White; n])
    }

    /// `w b w b ...` of the given length, starting white.
    pub fn alternating(n: usize) -> Self {
        ColoredWord(
            (0..n)
                .map(|i| if i % 2 == 0 { Color::White } else { Color::Black })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().copied()
    }
}

impl FromStr for ColoredWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'w' | 'o' => Ok(Color::White),
                'b' => Ok(Color::Black),
                other => Err(Error::Parse(format!("bad color character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ColoredWord)
    }
}

impl fmt::Display for ColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.iter() {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

/// Twisting parameter q.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Twist {
    Plus,
    Minus,
}

/// A tuple of 1-based indices bounded by an ambient dimension.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex {
    entries: Vec<u64>,
    bound: u64,
}

impl MultiIndex {
    pub fn new(entries: Vec<u64>, bound: u64) -> Result<Self> {
        for &v in &entries {
            if v < 1 || v > bound {
                return Err(Error::IndexOutOfRange { value: v, bound });
            }
        }
        Ok(MultiIndex { entries, bound })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

/// A set partition of colored legs, kept in canonical form: every block
/// sorted ascending, blocks ordered by least element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    upper: ColoredWord,
    lower: ColoredWord,
    blocks: Vec<Vec<usize>>,
}

fn canonicalize(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

fn validate(blocks: &[Vec<usize>], legs: usize) -> Result<()> {
    let mut seen = vec![false; legs];
    for b in blocks {
        if b.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for &leg in b {
            if leg >= legs {
                return Err(Error::InvalidPartition(format!(
                    "leg {leg} out of range for {legs} legs"
                )));
            }
            if seen[leg] {
                return Err(Error::InvalidPartition(format!("leg {leg} repeated")));
            }
            seen[leg] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::InvalidPartition("blocks do not cover all legs".into()));
    }
    Ok(())
}

impl Partition {
    /// Partition with no upper legs, the shape used by all integration
    /// formulas. Legs are `0..colors.len()`.
    pub fn single_row(colors: ColoredWord, blocks: Vec<Vec<usize>>) -> Result<Self> {
        validate(&blocks, colors.len())?;
        Ok(Partition {
            upper: ColoredWord::empty(),
            lower: colors,
            blocks: canonicalize(blocks),
        })
    }

    /// General two-row partition. Upper legs come first (`0..upper.len()`),
    /// then the lower legs.
    pub fn two_row(upper: ColoredWord, lower: ColoredWord, blocks: Vec<Vec<usize>>) -> Result<Self> {
        validate(&blocks, upper.len() + lower.len())?;
        Ok(Partition {
            upper,
            lower,
            blocks: canonicalize(blocks),
        })
    }

    pub fn upper(&self) -> &ColoredWord {
        &self.upper
    }

    pub fn lower(&self) -> &ColoredWord {
        &self.lower
    }

    pub fn legs(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    pub fn is_single_row(&self) -> bool {
        self.upper.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn color(&self, leg: usize) -> Color {
        if leg < self.upper.len() {
            self.upper.0[leg]
        } else {
            self.lower.0[leg - self.upper.len()]
        }
    }

    /// Block id of every leg.
    pub fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0usize; self.legs()];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &leg in b {
                ids[leg] = bi;
            }
        }
        ids
    }

    pub fn all_blocks_even(&self) -> bool {
        self.blocks.iter().all(|b| b.len() % 2 == 0)
    }

    pub fn is_pairing(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    /// The kernel of a multi-index: legs carrying equal values end up in the
    /// same block. The kernel is color-blind, so the result is all white.
    pub fn kernel(index: &MultiIndex) -> Partition {
        let mut groups: Vec<(u64, Vec<usize>)> = Vec::new();
        for (pos, &v) in index.entries().iter().enumerate() {
            match groups.iter_mut().find(|(val, _)| *val == v) {
                Some((_, legs)) => legs.push(pos),
                None => groups.push((v, vec![pos])),
            }
        }
        let blocks = groups.into_iter().map(|(_, legs)| legs).collect();
        Partition {
            upper: ColoredWord::empty(),
            lower: ColoredWord::all_white(index.len()),
            blocks: canonicalize(blocks),
        }
    }

    /// Lattice join: the finest partition coarser than both. Colors are
    /// taken from `self`; both operands must have the same shape.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        if self.legs() != other.legs() || self.upper.len() != other.upper.len() {
            return Err(Error::LengthMismatch {
                expected: self.legs(),
                got: other.legs(),
            });
        }
        let mut uf = UnionFind::new(self.legs());
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        Ok(Partition {
            upper: self.upper.clone(),
            lower: self.lower.clone(),
            blocks: uf.into_blocks(),
        })
    }

    /// One-line reading order of the legs: upper row right to left, then
    /// lower row left to right (the order obtained by rotating every upper
    /// leg down). Returned as leg indices.
    fn one_line_order(&self) -> Vec<usize> {
        let k = self.upper.len();
        let mut order: Vec<usize> = (0..k).rev().collect();
        order.extend(k..self.legs());
        order
    }

    /// Rotate the whole partition onto a single row: upper legs move down in
    /// front (rightmost upper leg first), flipping their colors.
    pub fn to_single_row(&self) -> Partition {
        let order = self.one_line_order();
        let mut position = vec![0usize; self.legs()];
        let mut colors = Vec::with_capacity(self.legs());
        for (pos, &leg) in order.iter().enumerate() {
            position[leg] = pos;
            let c = self.color(leg);
            colors.push(if leg < self.upper.len() { c.flip() } else { c });
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&leg| position[leg]).collect())
            .collect();
        Partition {
            upper: ColoredWord::empty(),
            lower: ColoredWord(colors),
            blocks: canonicalize(blocks),
        }
    }

    /// No legs `a < b < c < d` (in the one-line order) with `a, c` in one
    /// block and `b, d` in a different block.
    pub fn is_noncrossing(&self) -> bool {
        let flat = if self.is_single_row() {
            self.clone()
        } else {
            self.to_single_row()
        };
        let ids = flat.block_ids();
        let n = ids.len();
        let mut last = vec![0usize; flat.block_count()];
        for (pos, &b) in ids.iter().enumerate() {
            last[b] = pos;
        }
        let mut open: Vec<usize> = Vec::new();
        let mut seen = vec![false; flat.block_count()];
        for pos in 0..n {
            let b = ids[pos];
            if !seen[b] {
                seen[b] = true;
                open.push(b);
            } else if *open.last().unwrap() != b {
                return false;
            }
            if last[b] == pos {
                // a block closes only when it is on top of the stack
                if *open.last().unwrap() != b {
                    return false;
                }
                open.pop();
            }
        }
        true
    }

    /// Signature of an even partition: reduce to a noncrossing partition by
    /// switching neighboring legs of distinct blocks and count switches.
    /// Computed as the inversion parity of the leg sequence relative to the
    /// grouped form with blocks in order of first appearance; order
    /// independence is covered by property tests.
    pub fn signature(&self) -> Result<i8> {
        if !self.all_blocks_even() {
            return Err(Error::OddBlock);
        }
        Ok(signature_with_target(self, &first_appearance_order(self)))
    }

    /// Twisted Kronecker symbol. Nonzero only when the index is constant on
    /// every block; at q = -1 the value is the signature of the kernel, or 0
    /// if the kernel has an odd block.
    pub fn delta(&self, index: &MultiIndex, q: Twist) -> Result<i8> {
        if index.len() != self.legs() {
            return Err(Error::LengthMismatch {
                expected: self.legs(),
                got: index.len(),
            });
        }
        let vals = index.entries();
        for b in &self.blocks {
            let first = vals[b[0]];
            if b.iter().any(|&leg| vals[leg] != first) {
                return Ok(0);
            }
        }
        match q {
            Twist::Plus => Ok(1),
            Twist::Minus => {
                let ker = Partition::kernel(index);
                if ker.all_blocks_even() {
                    ker.signature()
                } else {
                    Ok(0)
                }
            }
        }
    }

    /// Horizontal concatenation.
    pub fn tensor(&self, other: &Partition) -> Partition {
        let (k1, l1) = (self.upper.len(), self.lower.len());
        let (k2, l2) = (other.upper.len(), other.lower.len());
        // new ids: self upper 0..k1, other upper k1..k1+k2,
        //          self lower k1+k2..k1+k2+l1, other lower after that
        let map_self = |leg: usize| if leg < k1 { leg } else { leg + k2 };
        let map_other = |leg: usize| {
            if leg < k2 {
                k1 + leg
            } else {
                k1 + k2 + l1 + (leg - k2)
            }
        };
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| map_self(x)).collect())
            .collect();
        blocks.extend(
            other
                .blocks
                .iter()
                .map(|b| b.iter().map(|&x| map_other(x)).collect::<Vec<_>>()),
        );
        let mut upper = self.upper.clone();
        upper.0.extend(other.upper.iter());
        let mut lower = self.lower.clone();
        lower.0.extend(other.lower.iter());
        Partition {
            upper,
            lower,
            blocks: canonicalize(blocks),
        }
    }

    /// Vertical concatenation: `self` on top of `other`, gluing the lower
    /// row of `self` to the upper row of `other`. Middle strings are traced
    /// out; the number of closed loops is returned alongside the result.
    pub fn compose(&self, other: &Partition) -> Result<(Partition, usize)> {
        if self.lower != other.upper {
            return Err(Error::ComposeWordMismatch);
        }
        let k = self.upper.len();
        let mid = self.lower.len();
        let m = other.lower.len();
        // nodes: 0..k upper, k..k+mid middle, k+mid.. lower
        let mut uf = UnionFind::new(k + mid + m);
        for b in &self.blocks {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        for b in &other.blocks {
            let map = |leg: usize| if leg < mid { k + leg } else { k + (leg - mid) + mid };
            for w in b.windows(2) {
                uf.union(map(w[0]), map(w[1]));
            }
        }
        let mut class_members: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for node in 0..k + mid + m {
            class_members.entry(uf.find(node)).or_default().push(node);
        }
        let visible = |node: usize| node < k || node >= k + mid;
        let mut loops = 0;
        let mut blocks = Vec::new();
        for (_, members) in class_members {
            let kept: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&n| visible(n))
                .map(|n| if n < k { n } else { n - mid })
                .collect();
            if kept.is_empty() {
                loops += 1;
            } else {
                blocks.push(kept);
            }
        }
        Ok((
            Partition {
                upper: self.upper.clone(),
                lower: other.lower.clone(),
                blocks: canonicalize(blocks),
            },
            loops,
        ))
    }

    /// Upside-down turn: rows swap (keeping left-to-right order) and every
    /// color flips.
    pub fn involve(&self) -> Partition {
        let k = self.upper.len();
        let l = self.lower.len();
        let map = |leg: usize| if leg < k { l + leg } else { leg - k };
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| map(x)).collect())
            .collect();
        Partition {
            upper: ColoredWord(self.lower.iter().map(Color::flip).collect()),
            lower: ColoredWord(self.upper.iter().map(Color::flip).collect()),
            blocks: canonicalize(blocks),
        }
    }

    /// Move the first upper leg to the first lower position, flipping its
    /// color.
    pub fn rotate(&self) -> Result<Partition> {
        let k = self.upper.len();
        if k == 0 {
            return Err(Error::NothingToRotate);
        }
        // old upper leg 0 -> new leg k-1 (front of the lower row);
        // old upper leg u >= 1 -> u-1; old lower legs keep their ids.
        let map = |leg: usize| {
            if leg == 0 {
                k - 1
            } else if leg < k {
                leg - 1
            } else {
                leg
            }
        };
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| map(x)).collect())
            .collect();
        let mut lower = ColoredWord(vec![self.upper.0[0].flip()]);
        lower.0.extend(self.lower.iter());
        Ok(Partition {
            upper: ColoredWord(self.upper.0[1..].to_vec()),
            lower,
            blocks: canonicalize(blocks),
        })
    }

    /// Remove one block; remaining legs are renumbered order-preservingly
    /// and keep their colors.
    pub fn remove_block(&self, block: &[usize]) -> Result<Partition> {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        if !self.blocks.iter().any(|b| *b == sorted) {
            return Err(Error::NotABlock(sorted));
        }
        let removed: std::collections::BTreeSet<usize> = sorted.iter().copied().collect();
        let mut new_id = vec![usize::MAX; self.legs()];
        let mut next = 0;
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        for leg in 0..self.legs() {
            if removed.contains(&leg) {
                continue;
            }
            new_id[leg] = next;
            next += 1;
            if leg < self.upper.len() {
                upper.push(self.color(leg));
            } else {
                lower.push(self.color(leg));
            }
        }
        let blocks = self
            .blocks
            .iter()
            .filter(|b| **b != sorted)
            .map(|b| b.iter().map(|&x| new_id[x]).collect())
            .collect();
        Ok(Partition {
            upper: ColoredWord(upper),
            lower: ColoredWord(lower),
            blocks: canonicalize(blocks),
        })
    }

    /// Parse the single-row text form: blocks as sorted 1-based integer
    /// lists, e.g. `[[1,4],[2,3]]`, with a parallel color string `"wbwb"`.
    pub fn parse(blocks_text: &str, colors: &str) -> Result<Partition> {
        let word: ColoredWord = colors.parse()?;
        let trimmed = blocks_text.trim();
        let inner = trimmed
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("bad partition text {trimmed:?}")))?;
        let mut blocks = Vec::new();
        if !inner.is_empty() {
            for chunk in inner.split("],[") {
                let legs = chunk
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad leg {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let zero_based = legs
                    .into_iter()
                    .map(|v| {
                        v.checked_sub(1)
                            .ok_or_else(|| Error::Parse("legs are 1-based".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                blocks.push(zero_based);
            }
        } else if word.len() != 0 {
            return Err(Error::Parse("empty block list for a nonempty word".into()));
        }
        Partition::single_row(word, blocks)
    }
}

/// Blocks listed in order of first appearance along the one-line order.
fn first_appearance_order(p: &Partition) -> Vec<usize> {
    let flat_ids = if p.is_single_row() {
        p.block_ids()
    } else {
        p.to_single_row().block_ids()
    };
    let mut order = Vec::new();
    for id in flat_ids {
        if !order.contains(&id) {
            order.push(id);
        }
    }
    order
}

/// Inversion parity of the leg sequence relative to the interval form with
/// blocks arranged in `target` order. Equal-block legs never switch, so this
/// is the parity of any reduction that groups the blocks in that order.
pub(crate) fn signature_with_target(p: &Partition, target: &[usize]) -> i8 {
    let flat_ids = if p.is_single_row() {
        p.block_ids()
    } else {
        p.to_single_row().block_ids()
    };
    let mut rank = vec![0usize; p.block_count()];
    for (r, &b) in target.iter().enumerate() {
        rank[b] = r;
    }
    let keys: Vec<usize> = flat_ids.into_iter().map(|b| rank[b]).collect();
    let mut inversions = 0usize;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl fmt::Display for Partition {
    /// Single-row partitions print as `[[1,4],[2,3]]` (1-based legs).
    /// Two-row partitions get an explicit `upper=..` prefix.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_single_row() {
            write!(f, "upper={} lower={} ", self.upper, self.lower)?;
        }
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, leg) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", leg + 1)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Partition", 2)?;
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| x + 1).collect())
            .collect();
        st.serialize_field("blocks", &blocks)?;
        let colors: String = (0..self.legs()).map(|l| self.color(l).as_char()).collect();
        st.serialize_field("colors", &colors)?;
        st.end()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn into_blocks(mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        canonicalize(by_root.into_values().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(vals: &[u64], bound: u64) -> MultiIndex {
        MultiIndex::new(vals.to_vec(), bound).unwrap()
    }

    fn row(blocks: &[&[usize]]) -> Partition {
        let legs: usize = blocks.iter().map(|b| b.len()).sum();
        // test helper takes 1-based legs, matching the text format
        let zero: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| b.iter().map(|&x| x - 1).collect())
            .collect();
        Partition::single_row(ColoredWord::all_white(legs), zero).unwrap()
    }

    #[test]
    fn kernel_groups_equal_indices() {
        assert_eq!(Partition::kernel(&idx(&[1, 2, 1], 5)), row(&[&[1, 3], &[2]]));
        assert_eq!(Partition::kernel(&idx(&[5, 5, 5], 5)), row(&[&[1, 2, 3]]));
        assert_eq!(
            Partition::kernel(&idx(&[1, 2, 3, 2], 5)),
            row(&[&[1], &[2, 4], &[3]])
        );
    }

    #[test]
    fn join_is_transitive_closure() {
        let a = row(&[&[1, 2], &[3, 4]]);
        let b = row(&[&[1, 4], &[2, 3]]);
        assert_eq!(a.join(&b).unwrap(), row(&[&[1, 2, 3, 4]]));
        assert_eq!(a.join(&a).unwrap(), a);
        let c = row(&[&[1, 3], &[2, 4]]);
        assert_eq!(a.join(&c).unwrap(), row(&[&[1, 2, 3, 4]]));
    }

    #[test]
    fn join_rejects_length_mismatch() {
        let a = row(&[&[1, 2]]);
        let b = row(&[&[1, 2], &[3, 4]]);
        assert!(a.join(&b).is_err());
    }

    #[test]
    fn block_counts() {
        assert_eq!(row(&[&[1, 2], &[3, 4]]).block_count(), 2);
        assert_eq!(row(&[&[1, 2, 3, 4]]).block_count(), 1);
        assert_eq!(Partition::kernel(&idx(&[1, 2, 1, 3], 5)).block_count(), 3);
    }

    #[test]
    fn noncrossing_detection() {
        assert!(row(&[&[1, 4], &[2, 3]]).is_noncrossing());
        assert!(!row(&[&[1, 3], &[2, 4]]).is_noncrossing());
        assert!(row(&[&[1, 2, 5, 6], &[3, 4]]).is_noncrossing());
        assert!(!row(&[&[1, 2, 4], &[3, 5]]).is_noncrossing());
        assert!(row(&[&[1, 3, 5], &[2], &[4]]).is_noncrossing());
    }

    #[test]
    fn signature_values() {
        assert_eq!(row(&[&[1, 2], &[3, 4]]).signature().unwrap(), 1);
        assert_eq!(row(&[&[1, 4], &[2, 3]]).signature().unwrap(), 1);
        assert_eq!(row(&[&[1, 3], &[2, 4]]).signature().unwrap(), -1);
        assert_eq!(row(&[&[1, 2, 3, 4]]).signature().unwrap(), 1);
        // two disjoint crossings multiply
        assert_eq!(
            row(&[&[1, 3], &[2, 4], &[5, 7], &[6, 8]]).signature().unwrap(),
            1
        );
        assert!(row(&[&[1, 2, 3]]).signature().is_err());
    }

    #[test]
    fn delta_untwisted_is_constancy_indicator() {
        let pair = row(&[&[1, 2]]);
        assert_eq!(pair.delta(&idx(&[3, 3], 5), Twist::Plus).unwrap(), 1);
        assert_eq!(pair.delta(&idx(&[3, 4], 5), Twist::Plus).unwrap(), 0);
        let four = row(&[&[1, 2, 3, 4]]);
        assert_eq!(four.delta(&idx(&[1, 1, 1, 1], 2), Twist::Plus).unwrap(), 1);
        assert_eq!(four.delta(&idx(&[1, 2, 1, 2], 2), Twist::Plus).unwrap(), 0);
    }

    #[test]
    fn delta_twisted_uses_kernel_signature() {
        // the crossing pairing is its own kernel under (1,2,1,2)
        let crossing = row(&[&[1, 3], &[2, 4]]);
        assert_eq!(crossing.delta(&idx(&[1, 2, 1, 2], 2), Twist::Minus).unwrap(), -1);
        // constant index: kernel is one block, noncrossing, sign +1
        assert_eq!(crossing.delta(&idx(&[2, 2, 2, 2], 2), Twist::Minus).unwrap(), 1);
        // odd kernel inside an even partition gives 0 under the twist
        let four = row(&[&[1, 2, 3, 4]]);
        assert_eq!(four.delta(&idx(&[1, 1, 1, 1], 2), Twist::Minus).unwrap(), 1);
        let six = row(&[&[1, 2, 3, 4, 5, 6]]);
        assert_eq!(six.delta(&idx(&[1; 6], 2), Twist::Minus).unwrap(), 1);
    }

    #[test]
    fn tensor_places_side_by_side() {
        let pair = row(&[&[1, 2]]);
        assert_eq!(pair.tensor(&pair), row(&[&[1, 2], &[3, 4]]));
    }

    #[test]
    fn compose_traces_loops() {
        // cap: no upper legs, two lower; cup: two upper, no lower
        let cap = Partition::single_row(ColoredWord::all_white(2), vec![vec![0, 1]]).unwrap();
        let cup = Partition::two_row(ColoredWord::all_white(2), ColoredWord::empty(), vec![vec![0, 1]])
            .unwrap();
        let (result, loops) = cap.compose(&cup).unwrap();
        assert_eq!(loops, 1);
        assert_eq!(result.legs(), 0);
        assert_eq!(result.block_count(), 0);
    }

    #[test]
    fn compose_checks_words() {
        let cap = Partition::single_row("wb".parse().unwrap(), vec![vec![0, 1]]).unwrap();
        let cup = Partition::two_row("ww".parse().unwrap(), ColoredWord::empty(), vec![vec![0, 1]])
            .unwrap();
        assert!(matches!(cap.compose(&cup), Err(Error::ComposeWordMismatch)));
    }

    #[test]
    fn involve_swaps_rows_and_flips_colors() {
        let p = Partition::single_row("wb".parse().unwrap(), vec![vec![0, 1]]).unwrap();
        let q = p.involve();
        assert_eq!(q.upper(), &"bw".parse::<ColoredWord>().unwrap());
        assert_eq!(q.lower().len(), 0);
        assert_eq!(q.blocks(), &[vec![0, 1]]);
        assert_eq!(q.involve(), p);
    }

    #[test]
    fn rotate_moves_first_upper_leg_down() {
        // identity string on one white leg: upper w, lower w, joined
        let id = Partition::two_row("w".parse().unwrap(), "w".parse().unwrap(), vec![vec![0, 1]])
            .unwrap();
        let r = id.rotate().unwrap();
        assert!(r.is_single_row());
        assert_eq!(r.lower(), &"bw".parse::<ColoredWord>().unwrap());
        assert_eq!(r.blocks(), &[vec![0, 1]]);
        assert!(id.to_single_row().is_noncrossing());
    }

    #[test]
    fn remove_block_renumbers() {
        let p = row(&[&[1, 2], &[3, 4]]);
        assert_eq!(p.remove_block(&[2, 3]).unwrap(), row(&[&[1, 2]]));
        let q = row(&[&[1, 2, 3, 4]]);
        let empty = q.remove_block(&[0, 1, 2, 3]).unwrap();
        assert_eq!(empty.legs(), 0);
        let r = row(&[&[1, 6], &[2, 5], &[3, 4]]);
        assert_eq!(r.remove_block(&[1, 4]).unwrap(), row(&[&[1, 4], &[2, 3]]));
        assert!(r.remove_block(&[0, 1]).is_err());
    }

    #[test]
    fn parse_print_round_trip() {
        let p = Partition::parse("[[1,4],[2,3]]", "wbwb").unwrap();
        assert_eq!(p.to_string(), "[[1,4],[2,3]]");
        assert_eq!(p.lower(), &"wbwb".parse::<ColoredWord>().unwrap());
        let q = Partition::parse(&p.to_string(), "wbwb").unwrap();
        assert_eq!(p, q);
        assert!(Partition::parse("[1,2]", "ww").is_err());
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = Partition::single_row(ColoredWord::all_white(4), vec![vec![2, 3], vec![1, 0]])
            .unwrap();
        let b = Partition::single_row(ColoredWord::all_white(4), vec![vec![0, 1], vec![3, 2]])
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.blocks(), &[vec![0, 1], vec![2, 3]]);
    }
}
