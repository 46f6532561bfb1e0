//! Partition categories and the uniform quantum-group families they encode.
//!
//! Membership is a pure predicate on colored partitions; enumeration lists
//! the single-row members of a category on a given word, in canonical order,
//! behind a shared memo table.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::{Color, ColoredWord, Partition, Twist};

/// Default cap on enumeration word length (Bell(10) = 115975 partitions in
/// the worst, color-blind case).
pub const ENUMERATION_LIMIT: usize = 10;

/// Modulus for the per-block color balance: finite (even) or infinite
/// (exact balance).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SParam {
    Finite(u32),
    Infinite,
}

impl fmt::Display for SParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SParam::Finite(s) => write!(f, "{s}"),
            SParam::Infinite => write!(f, "inf"),
        }
    }
}

/// One partition category from the classification of uniform families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CategoryId {
    /// All pairings.
    P2,
    /// Noncrossing pairings.
    Nc2,
    /// Matching pairings: same-row strings connect opposite colors, through
    /// strings equal colors.
    MatchP2,
    /// Noncrossing matching pairings.
    MatchNc2,
    /// All blocks of even size.
    PEven,
    /// Even blocks, noncrossing.
    NcEven,
    /// Per block, the signed white count equals the signed black count.
    MatchPEven,
    /// Same, noncrossing.
    MatchNcEven,
    /// Per block, white and black counts agree modulo s (signed by row).
    PEvenS(SParam),
    /// Same, noncrossing.
    NcEvenS(SParam),
    /// Noncrossing, even, with alternating colors in each block once
    /// rotated on one line.
    NcEvenMinus,
}

impl CategoryId {
    pub fn token(&self) -> String {
        match self {
            CategoryId::P2 => "p2".into(),
            CategoryId::Nc2 => "nc2".into(),
            CategoryId::MatchP2 => "match-p2".into(),
            CategoryId::MatchNc2 => "match-nc2".into(),
            CategoryId::PEven => "peven".into(),
            CategoryId::NcEven => "nceven".into(),
            CategoryId::MatchPEven => "match-peven".into(),
            CategoryId::MatchNcEven => "match-nceven".into(),
            CategoryId::PEvenS(s) => format!("peven-s({s})"),
            CategoryId::NcEvenS(s) => format!("nceven-s({s})"),
            CategoryId::NcEvenMinus => "nceven-minus".into(),
        }
    }

    /// Whether membership depends on leg colors at all.
    pub fn color_sensitive(&self) -> bool {
        !matches!(
            self,
            CategoryId::P2 | CategoryId::Nc2 | CategoryId::PEven | CategoryId::NcEven
        )
    }
}

impl fmt::Display for CategoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Per-block signed color balance. Legs count with coefficient +1 on the
/// upper row and -1 on the lower row; white and black totals must agree
/// modulo s (exactly, for the infinite parameter).
fn balanced(p: &Partition, s: SParam) -> bool {
    let k = p.upper().len();
    for block in p.blocks() {
        let mut diff: i64 = 0;
        for &leg in block {
            let coeff: i64 = if leg < k { 1 } else { -1 };
            match p.color(leg) {
                Color::White => diff += coeff,
                Color::Black => diff -= coeff,
            }
        }
        let ok = match s {
            SParam::Infinite => diff == 0,
            SParam::Finite(m) => diff.rem_euclid(m as i64) == 0,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Alternating colors within every block, read along the one-line order.
fn alternating_blocks(p: &Partition) -> bool {
    let flat = p.to_single_row();
    for block in flat.blocks() {
        for w in block.windows(2) {
            if flat.color(w[0]) == flat.color(w[1]) {
                return false;
            }
        }
    }
    true
}

/// Membership predicate of a category, for one- or two-row partitions.
pub fn contains(cat: CategoryId, p: &Partition) -> bool {
    match cat {
        CategoryId::P2 => p.is_pairing(),
        CategoryId::Nc2 => p.is_pairing() && p.is_noncrossing(),
        CategoryId::MatchP2 => p.is_pairing() && balanced(p, SParam::Infinite),
        CategoryId::MatchNc2 => {
            p.is_pairing() && balanced(p, SParam::Infinite) && p.is_noncrossing()
        }
        CategoryId::PEven => p.all_blocks_even(),
        CategoryId::NcEven => p.all_blocks_even() && p.is_noncrossing(),
        CategoryId::MatchPEven => balanced(p, SParam::Infinite),
        CategoryId::MatchNcEven => balanced(p, SParam::Infinite) && p.is_noncrossing(),
        CategoryId::PEvenS(s) => balanced(p, s),
        CategoryId::NcEvenS(s) => balanced(p, s) && p.is_noncrossing(),
        CategoryId::NcEvenMinus => {
            p.all_blocks_even() && p.is_noncrossing() && alternating_blocks(p)
        }
    }
}

/// All set partitions of `0..n` in canonical order, via restricted growth
/// strings.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(pos: usize, max_used: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = rgs.len();
        if pos == n {
            let blocks_count = max_used;
            let mut blocks = vec![Vec::new(); blocks_count];
            for (leg, &b) in rgs.iter().enumerate() {
                blocks[b].push(leg);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=max_used {
            rgs[pos] = b;
            rec(pos + 1, max_used.max(b + 1), rgs, out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(0, 0, &mut rgs, &mut out);
    }
    out
}

type EnumKey = (CategoryId, ColoredWord);

fn enum_cache() -> &'static Mutex<HashMap<EnumKey, Arc<Vec<Partition>>>> {
    static CACHE: OnceLock<Mutex<HashMap<EnumKey, Arc<Vec<Partition>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All single-row members of a category on the given word, sorted
/// lexicographically by block structure. Results are memoized.
pub fn enumerate(cat: CategoryId, word: &ColoredWord) -> Result<Arc<Vec<Partition>>> {
    enumerate_with_limit(cat, word, ENUMERATION_LIMIT)
}

pub fn enumerate_with_limit(
    cat: CategoryId,
    word: &ColoredWord,
    limit: usize,
) -> Result<Arc<Vec<Partition>>> {
    if word.len() > limit {
        return Err(Error::SizeLimitExceeded {
            legs: word.len(),
            limit,
        });
    }
    let key = (cat, word.clone());
    if let Some(hit) = enum_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut members: Vec<Partition> = set_partitions(word.len())
        .into_iter()
        .map(|blocks| Partition::single_row(word.clone(), blocks).expect("generated blocks"))
        .filter(|p| contains(cat, p))
        .collect();
    members.sort_by(|a, b| a.blocks().cmp(b.blocks()));
    let arc = Arc::new(members);
    enum_cache()
        .lock()
        .unwrap()
        .insert(key, arc.clone());
    Ok(arc)
}

/// The uniform quantum-group families, each naming its partition category
/// and twist.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyKind {
    O,
    OBar,
    OPlus,
    U,
    UBar,
    UPlus,
    /// Reflection family of level s (even), `h` being level 2.
    Hs(u32),
    HsPlus(u32),
    K,
    KPlus,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QuantumFamily {
    pub kind: FamilyKind,
    pub twist: Twist,
}

impl QuantumFamily {
    /// Family with its canonical twist (classical families untwisted, bar
    /// families twisted).
    pub fn new(kind: FamilyKind) -> Result<Self> {
        let twist = match kind {
            FamilyKind::OBar | FamilyKind::UBar => Twist::Minus,
            _ => Twist::Plus,
        };
        QuantumFamily::with_twist(kind, twist)
    }

    /// Reflection and complex-reflection families exist at both twists; the
    /// others force theirs.
    pub fn with_twist(kind: FamilyKind, twist: Twist) -> Result<Self> {
        match kind {
            FamilyKind::Hs(s) | FamilyKind::HsPlus(s) => {
                if s < 2 || s % 2 != 0 {
                    return Err(Error::BadFamily(format!(
                        "level parameter must be even and >= 2, got {s}"
                    )));
                }
            }
            FamilyKind::OBar | FamilyKind::UBar => {
                if twist != Twist::Minus {
                    return Err(Error::BadFamily("bar families are twisted".into()));
                }
            }
            _ => {
                if twist != Twist::Plus {
                    return Err(Error::BadFamily(format!(
                        "{kind:?} only exists untwisted"
                    )));
                }
            }
        }
        Ok(QuantumFamily { kind, twist })
    }

    pub fn category(&self) -> CategoryId {
        match self.kind {
            FamilyKind::O | FamilyKind::OBar => CategoryId::P2,
            FamilyKind::OPlus => CategoryId::Nc2,
            FamilyKind::U | FamilyKind::UBar => CategoryId::MatchP2,
            FamilyKind::UPlus => CategoryId::MatchNc2,
            FamilyKind::Hs(s) => CategoryId::PEvenS(SParam::Finite(s)),
            FamilyKind::HsPlus(s) => CategoryId::NcEvenS(SParam::Finite(s)),
            FamilyKind::K => CategoryId::MatchPEven,
            FamilyKind::KPlus => CategoryId::MatchNcEven,
        }
    }

    /// Classical compact groups that the Monte Carlo oracle can sample.
    pub fn is_classical(&self) -> bool {
        matches!(self.kind, FamilyKind::O | FamilyKind::U)
    }

    pub fn token(&self) -> String {
        match self.kind {
            FamilyKind::O => "o".into(),
            FamilyKind::OBar => "o-bar".into(),
            FamilyKind::OPlus => "o+".into(),
            FamilyKind::U => "u".into(),
            FamilyKind::UBar => "u-bar".into(),
            FamilyKind::UPlus => "u+".into(),
            FamilyKind::Hs(2) => "h".into(),
            FamilyKind::Hs(s) => format!("h^{s}"),
            FamilyKind::HsPlus(2) => "h+".into(),
            FamilyKind::HsPlus(s) => format!("h^{s}+"),
            FamilyKind::K => "k".into(),
            FamilyKind::KPlus => "k+".into(),
        }
    }
}

impl fmt::Display for QuantumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

pub fn family_category(f: &QuantumFamily) -> CategoryId {
    f.category()
}

/// Every word of the given length over {w, b}.
pub fn all_words(len: usize) -> Vec<ColoredWord> {
    let mut out = Vec::with_capacity(1 << len);
    for mask in 0u32..(1 << len) {
        let colors = (0..len)
            .map(|i| {
                if mask >> i & 1 == 0 {
                    Color::White
                } else {
                    Color::Black
                }
            })
            .collect();
        out.push(ColoredWord(colors));
    }
    out
}

/// Words to enumerate for a category: all colorings when colors matter,
/// all white otherwise.
fn words_for(cat: CategoryId, len: usize) -> Vec<ColoredWord> {
    if cat.color_sensitive() {
        all_words(len)
    } else {
        vec![ColoredWord::all_white(len)]
    }
}

/// Block-removal closure on single-row enumerations up to `max_legs`.
pub fn uniformity_check(cat: CategoryId, max_legs: usize) -> Result<bool> {
    uniformity_check_with(|p| contains(cat, p), |len| words_for(cat, len), max_legs)
}

/// Same check against an arbitrary membership predicate (used to exercise
/// the failure path on truncated pseudo-categories).
pub fn uniformity_check_with<P, W>(pred: P, words: W, max_legs: usize) -> Result<bool>
where
    P: Fn(&Partition) -> bool,
    W: Fn(usize) -> Vec<ColoredWord>,
{
    for len in 0..=max_legs {
        for word in words(len) {
            for blocks in set_partitions(len) {
                let p = Partition::single_row(word.clone(), blocks)?;
                if !pred(&p) {
                    continue;
                }
                for block in p.blocks() {
                    if !pred(&p.remove_block(block)?) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// One axiom violation found by `axioms_check`.
#[derive(Clone, Debug)]
pub struct AxiomViolation {
    pub operation: &'static str,
    pub detail: String,
}

/// Result of checking category closure under tensor, composition and
/// involution on all members up to a leg bound.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub members_checked: usize,
    pub tensor_pairs: usize,
    pub compose_pairs: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerate all two-row members with at most `max_legs` legs and verify
/// closure under the category operations.
pub fn axioms_check(cat: CategoryId, max_legs: usize) -> Result<AxiomReport> {
    let mut members: Vec<Partition> = Vec::new();
    for upper_len in 0..=max_legs {
        for lower_len in 0..=(max_legs - upper_len) {
            let total = upper_len + lower_len;
            let upper_words = if cat.color_sensitive() {
                all_words(upper_len)
            } else {
                vec![ColoredWord::all_white(upper_len)]
            };
            let lower_words = if cat.color_sensitive() {
                all_words(lower_len)
            } else {
                vec![ColoredWord::all_white(lower_len)]
            };
            for uw in &upper_words {
                for lw in &lower_words {
                    for blocks in set_partitions(total) {
                        let p = Partition::two_row(uw.clone(), lw.clone(), blocks)?;
                        if contains(cat, &p) {
                            members.push(p);
                        }
                    }
                }
            }
        }
    }

    let mut report = AxiomReport {
        members_checked: members.len(),
        ..Default::default()
    };

    for p in &members {
        let inv = p.involve();
        if !contains(cat, &inv) {
            report.violations.push(AxiomViolation {
                operation: "involve",
                detail: format!("{p} -> {inv}"),
            });
        }
    }

    for p in &members {
        for q in &members {
            if p.legs() + q.legs() <= max_legs {
                report.tensor_pairs += 1;
                let t = p.tensor(q);
                if !contains(cat, &t) {
                    report.violations.push(AxiomViolation {
                        operation: "tensor",
                        detail: format!("{p} (x) {q} -> {t}"),
                    });
                }
            }
            if p.lower() == q.upper() {
                report.compose_pairs += 1;
                let (c, _loops) = p.compose(q)?;
                if !contains(cat, &c) {
                    report.violations.push(AxiomViolation {
                        operation: "compose",
                        detail: format!("{p} o {q} -> {c}"),
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(cat: CategoryId, word: &str) -> usize {
        enumerate(cat, &word.parse().unwrap()).unwrap().len()
    }

    #[test]
    fn pairing_counts() {
        // (2k-1)!! pairings, Catalan(k) noncrossing ones
        assert_eq!(count(CategoryId::P2, "ww"), 1);
        assert_eq!(count(CategoryId::P2, "wwww"), 3);
        assert_eq!(count(CategoryId::P2, "wwwwww"), 15);
        assert_eq!(count(CategoryId::P2, "wwwwwwww"), 105);
        assert_eq!(count(CategoryId::Nc2, "wwww"), 2);
        assert_eq!(count(CategoryId::Nc2, "wwwwww"), 5);
        assert_eq!(count(CategoryId::Nc2, "wwwwwwww"), 14);
        assert_eq!(count(CategoryId::Nc2, "www"), 0);
    }

    #[test]
    fn even_counts() {
        assert_eq!(count(CategoryId::PEven, "wwww"), 4);
        assert_eq!(count(CategoryId::NcEven, "wwww"), 3);
        // even partitions of 6 points: 15 pairings + 15 of type [4,2] + 1 six-block
        assert_eq!(count(CategoryId::PEven, "wwwwww"), 31);
    }

    #[test]
    fn matching_pairings_respect_colors() {
        assert_eq!(count(CategoryId::MatchNc2, "wb"), 1);
        assert_eq!(count(CategoryId::MatchNc2, "ww"), 0);
        assert_eq!(count(CategoryId::MatchP2, "wbwb"), 2);
        assert_eq!(count(CategoryId::MatchNc2, "wbwb"), 2);
        assert_eq!(count(CategoryId::MatchP2, "wwbb"), 2);
        assert_eq!(count(CategoryId::MatchNc2, "wwbb"), 1);
        // alternating words of length 2k: k! matchings, Catalan(k) noncrossing
        assert_eq!(count(CategoryId::MatchP2, "wbwbwb"), 6);
        assert_eq!(count(CategoryId::MatchNc2, "wbwbwb"), 5);
    }

    #[test]
    fn modular_balance() {
        // a 4-block is even and balanced mod 2 under any coloring
        let p = Partition::single_row("wwbw".parse().unwrap(), vec![vec![0, 1, 2, 3]]).unwrap();
        assert!(contains(CategoryId::PEvenS(SParam::Finite(2)), &p));
        // all-white 4-block balances mod 4 but an all-white pair does not
        let q = Partition::single_row(ColoredWord::all_white(4), vec![vec![0, 1, 2, 3]]).unwrap();
        assert!(contains(CategoryId::PEvenS(SParam::Finite(4)), &q));
        let pair = Partition::single_row(ColoredWord::all_white(2), vec![vec![0, 1]]).unwrap();
        assert!(!contains(CategoryId::PEvenS(SParam::Finite(4)), &pair));
        // mixed pair balances at any level
        let wb = Partition::single_row("wb".parse().unwrap(), vec![vec![0, 1]]).unwrap();
        assert!(contains(CategoryId::PEvenS(SParam::Finite(4)), &wb));
    }

    #[test]
    fn level_two_is_peven() {
        for len in 0..=6 {
            for word in all_words(len) {
                let a = enumerate(CategoryId::PEvenS(SParam::Finite(2)), &word).unwrap();
                let b = enumerate(CategoryId::PEven, &word).unwrap();
                assert_eq!(*a, *b, "word {word}");
            }
        }
    }

    #[test]
    fn infinite_level_is_exact_balance() {
        for len in 0..=6 {
            for word in all_words(len) {
                let a = enumerate(CategoryId::PEvenS(SParam::Infinite), &word).unwrap();
                let b = enumerate(CategoryId::MatchPEven, &word).unwrap();
                assert_eq!(*a, *b, "word {word}");
            }
        }
    }

    #[test]
    fn inclusion_chain_on_enumerations() {
        for len in 0..=6 {
            for word in all_words(len) {
                let nc2 = enumerate(CategoryId::MatchNc2, &word).unwrap();
                let minus = enumerate(CategoryId::NcEvenMinus, &word).unwrap();
                let even = enumerate(CategoryId::MatchNcEven, &word).unwrap();
                for p in nc2.iter() {
                    assert!(minus.contains(p), "{p} missing from nceven-minus on {word}");
                }
                for p in minus.iter() {
                    assert!(even.contains(p), "{p} missing from match-nceven on {word}");
                }
            }
        }
    }

    #[test]
    fn family_categories() {
        let o = QuantumFamily::new(FamilyKind::O).unwrap();
        assert_eq!(o.category(), CategoryId::P2);
        assert_eq!(o.twist, Twist::Plus);
        let obar = QuantumFamily::new(FamilyKind::OBar).unwrap();
        assert_eq!(obar.category(), CategoryId::P2);
        assert_eq!(obar.twist, Twist::Minus);
        let uplus = QuantumFamily::new(FamilyKind::UPlus).unwrap();
        assert_eq!(uplus.category(), CategoryId::MatchNc2);
        let h2p = QuantumFamily::new(FamilyKind::HsPlus(2)).unwrap();
        assert_eq!(h2p.category(), CategoryId::NcEvenS(SParam::Finite(2)));
        assert!(QuantumFamily::new(FamilyKind::Hs(3)).is_err());
        assert!(QuantumFamily::with_twist(FamilyKind::O, Twist::Minus).is_err());
    }

    #[test]
    fn uniformity_holds_for_classified_categories() {
        assert!(uniformity_check(CategoryId::Nc2, 6).unwrap());
        assert!(uniformity_check(CategoryId::PEvenS(SParam::Finite(4)), 6).unwrap());
        assert!(uniformity_check(CategoryId::MatchP2, 6).unwrap());
    }

    #[test]
    fn truncated_category_fails_uniformity() {
        // pairings with 4-leg members removed: removing a block from a
        // 6-leg pairing lands on 4 legs, outside the set
        let pred = |p: &Partition| p.is_pairing() && p.legs() != 4;
        let ok = uniformity_check_with(pred, |len| vec![ColoredWord::all_white(len)], 6).unwrap();
        assert!(!ok);
    }

    #[test]
    fn axioms_pass_for_small_categories() {
        for cat in [CategoryId::P2, CategoryId::MatchNc2, CategoryId::NcEvenMinus] {
            let report = axioms_check(cat, 4).unwrap();
            assert!(report.passed(), "{cat}: {:?}", report.violations);
            assert!(report.members_checked > 0);
        }
    }

    #[test]
    fn enumeration_limit_enforced() {
        let word = ColoredWord::all_white(11);
        assert!(matches!(
            enumerate(CategoryId::P2, &word),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn empty_word_has_the_empty_partition() {
        let members = enumerate(CategoryId::P2, &ColoredWord::empty()).unwrap();
        assert_eq!(members.len(), 1);
        assert_eq!(members[0].legs(), 0);
    }
}
