//! Exhaustive enumeration of finite topologies, dense subsets, and maps.
//!
//! Topologies are enumerated through their specialization preorders: a
//! depth-first search assigns each off-diagonal pair of the relation matrix
//! in row-major order, propagating transitive-closure consequences and
//! backtracking on contradiction. Every reflexive transitive matrix is
//! reached exactly once, in lexicographic matrix order, so streams are
//! deterministic. Expected labeled counts start 1, 1, 4, 29, 355, 6942,
//! 209527 for n = 0..6.

use crate::error::{Error, Result};
use crate::map::PointMap;
use crate::point_set::PointSet;
use crate::space::{FiniteSpace, Preorder};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

/// Hard bound on enumeration carrier size; counts explode beyond it.
pub const ENUM_HARD_CAP: usize = 6;

/// Scale caps shared across modules. Exceeding one is always a reported
/// error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Carrier size for topology enumeration.
    pub max_enum_points: usize,
    /// Carrier size for full-subset scans (dense subsets, hereditary checks).
    pub max_subset_points: usize,
    /// Total map tables a map enumeration may walk.
    pub max_map_tables: u64,
    /// Group order for group-theorem sweeps.
    pub max_group_order: usize,
    /// Window radius for symbolic cross-validation.
    pub max_window_radius: i64,
    /// Carrier size of a product space.
    pub max_product_points: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_enum_points: ENUM_HARD_CAP,
            max_subset_points: 16,
            max_map_tables: 1_000_000,
            max_group_order: 6,
            max_window_radius: 64,
            max_product_points: 16,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Labeled,
    /// One representative per homeomorphism class (first in labeled order).
    Classes,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Labeled => write!(f, "labeled"),
            Mode::Classes => write!(f, "classes"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "labeled" => Ok(Mode::Labeled),
            "classes" | "up-to-homeomorphism" => Ok(Mode::Classes),
            other => Err(Error::Malformed(format!(
                "mode must be labeled or classes, got `{other}`"
            ))),
        }
    }
}

/// All preorders on `{0..n-1}` in lexicographic matrix order.
pub fn enumerate_preorders(n: usize) -> Vec<Preorder> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Preorder::from_rows_unchecked(0, Vec::new()));
        return out;
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let diag: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let mut forbidden = vec![0u64; n];
    dfs(n, &pairs, 0, diag.clone(), diag, &mut forbidden, &mut out);
    out
}

// rows[x] = {y : x <= y}, cols[y] = {x : x <= y}; both kept transitively
// closed at every node. forbidden[i] records pairs decided absent.
fn dfs(
    n: usize,
    pairs: &[(usize, usize)],
    k: usize,
    rows: Vec<u64>,
    cols: Vec<u64>,
    forbidden: &mut [u64],
    out: &mut Vec<Preorder>,
) {
    if k == pairs.len() {
        out.push(Preorder::from_rows_unchecked(n, rows));
        return;
    }
    let (i, j) = pairs[k];
    if rows[i] >> j & 1 == 1 {
        dfs(n, pairs, k + 1, rows, cols, forbidden, out);
        return;
    }

    // Absent branch first: emission stays lexicographic.
    forbidden[i] |= 1 << j;
    dfs(n, pairs, k + 1, rows.clone(), cols.clone(), forbidden, out);
    forbidden[i] &= !(1u64 << j);

    // Present branch: i <= j forces a <= b for every a <= i and j <= b.
    let pred = cols[i];
    let succ = rows[j];
    let mut bits = pred;
    while bits != 0 {
        let a = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if succ & forbidden[a] & !rows[a] != 0 {
            return;
        }
    }
    let mut rows2 = rows;
    let mut cols2 = cols;
    let mut bits = pred;
    while bits != 0 {
        let a = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        rows2[a] |= succ;
    }
    let mut bits = succ;
    while bits != 0 {
        let b = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        cols2[b] |= pred;
    }
    dfs(n, pairs, k + 1, rows2, cols2, forbidden, out);
}

/// The Alexandrov topology of a preorder: opens are exactly the up-sets.
/// Inverse of [`FiniteSpace::specialization_preorder`].
pub fn topology_from_preorder(pre: &Preorder) -> FiniteSpace {
    FiniteSpace::from_up_set_rows(pre.n(), pre.rows())
}

/// Deterministic stream of topologies on `n` points.
///
/// Classes mode yields the first labeled member of each homeomorphism class
/// and skips the rest by marking the whole relabeling orbit of every new
/// class as seen — far cheaper than computing a canonical key per labeled
/// space when orbits are large.
pub struct TopologyStream {
    pres: std::vec::IntoIter<Preorder>,
    mode: Mode,
    n: usize,
    seen: HashSet<Box<[u64]>>,
}

impl Iterator for TopologyStream {
    type Item = FiniteSpace;

    fn next(&mut self) -> Option<FiniteSpace> {
        loop {
            let pre = self.pres.next()?;
            let space = topology_from_preorder(&pre);
            match self.mode {
                Mode::Labeled => return Some(space),
                Mode::Classes => {
                    let key: Box<[u64]> = space.opens().iter().map(|o| o.bits()).collect();
                    if self.seen.contains(&key) {
                        continue;
                    }
                    let mut perm: Vec<usize> = (0..self.n).collect();
                    loop {
                        let mut relabeled: Vec<u64> = space
                            .opens()
                            .iter()
                            .map(|o| o.iter().fold(0u64, |acc, p| acc | 1u64 << perm[p]))
                            .collect();
                        relabeled.sort_unstable();
                        self.seen.insert(relabeled.into_boxed_slice());
                        if !next_permutation(&mut perm) {
                            break;
                        }
                    }
                    return Some(space);
                }
            }
        }
    }
}

pub fn enumerate_topologies(n: usize, mode: Mode, caps: &Caps) -> Result<TopologyStream> {
    if n > caps.max_enum_points {
        return Err(Error::CapExceeded {
            what: "enumeration points",
            requested: n as u64,
            cap: caps.max_enum_points as u64,
        });
    }
    Ok(TopologyStream {
        pres: enumerate_preorders(n).into_iter(),
        mode,
        n,
        seen: HashSet::new(),
    })
}

/// All dense subsets in ascending mask order. A set is dense iff it meets
/// the minimal neighborhood of every point.
pub fn dense_subsets(space: &FiniteSpace, caps: &Caps) -> Result<Vec<PointSet>> {
    if space.n() > caps.max_subset_points {
        return Err(Error::CapExceeded {
            what: "subset scan points",
            requested: space.n() as u64,
            cap: caps.max_subset_points as u64,
        });
    }
    Ok(space
        .carrier()
        .subsets()
        .filter(|&s| space.is_dense_unchecked(s))
        .collect())
}

/// Conjunctive filter on map profiles; `true` fields are required.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MapFilter {
    pub continuous: bool,
    pub open: bool,
    pub almost_open: bool,
    pub surjective: bool,
}

impl MapFilter {
    pub fn continuous() -> Self {
        MapFilter {
            continuous: true,
            ..Default::default()
        }
    }

    fn admits(&self, map: &PointMap) -> bool {
        (!self.continuous || map.is_continuous())
            && (!self.open || map.is_open_map())
            && (!self.almost_open || map.is_almost_open())
            && (!self.surjective || map.is_surjective())
    }
}

/// Lazy stream over all `n_Y ^ n_X` tables in odometer order, filtered.
pub struct MapStream {
    domain: FiniteSpace,
    codomain: FiniteSpace,
    filter: MapFilter,
    table: Vec<usize>,
    done: bool,
}

impl Iterator for MapStream {
    type Item = PointMap;

    fn next(&mut self) -> Option<PointMap> {
        while !self.done {
            let map = PointMap {
                domain: self.domain.clone(),
                codomain: self.codomain.clone(),
                table: self.table.clone(),
            };
            self.advance();
            if self.filter.admits(&map) {
                return Some(map);
            }
        }
        None
    }
}

impl MapStream {
    fn advance(&mut self) {
        let base = self.codomain.n();
        for digit in self.table.iter_mut().rev() {
            *digit += 1;
            if *digit < base {
                return;
            }
            *digit = 0;
        }
        self.done = true;
    }
}

pub fn maps_between(
    domain: &FiniteSpace,
    codomain: &FiniteSpace,
    filter: MapFilter,
    caps: &Caps,
) -> Result<MapStream> {
    let total = (codomain.n() as u64)
        .checked_pow(domain.n() as u32)
        .unwrap_or(u64::MAX);
    if total > caps.max_map_tables {
        return Err(Error::CapExceeded {
            what: "map tables",
            requested: total,
            cap: caps.max_map_tables,
        });
    }
    // No maps exist into an empty codomain from a nonempty domain; the empty
    // domain has exactly the empty table.
    let done = codomain.n() == 0 && domain.n() > 0;
    Ok(MapStream {
        domain: domain.clone(),
        codomain: codomain.clone(),
        filter,
        table: vec![0; domain.n()],
        done,
    })
}

/// Homeomorphism-invariant key: the lexicographically least sorted open-set
/// family over all relabelings of the carrier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub Vec<u64>);

pub fn canonical_form(space: &FiniteSpace) -> CanonicalKey {
    let n = space.n();
    debug_assert!(n <= 8, "canonical form walks n! relabelings");
    let mut best: Option<Vec<u64>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut relabeled: Vec<u64> = space
            .opens()
            .iter()
            .map(|o| o.iter().fold(0u64, |acc, p| acc | 1u64 << perm[p]))
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().map_or(true, |b| relabeled < *b) {
            best = Some(relabeled);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    CanonicalKey(best.unwrap_or_default())
}

pub fn homeomorphic(a: &FiniteSpace, b: &FiniteSpace) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
