//! Finite topological spaces with extensionally stored open-set families.
//!
//! A space on `n` points keeps its complete family of open sets as sorted bit
//! masks, so every operation (closure, interior, subspace, product, ...) is a
//! direct transcription of its set-theoretic definition. Finite topologies
//! correspond to preorders: the opens are exactly the up-sets of the
//! specialization preorder `x <= y  iff  x in cl{y}  iff  y in U_x`, where
//! `U_x` is the smallest open set containing `x`. Both views are exposed and
//! round-trip through [`FiniteSpace::specialization_preorder`] and
//! [`crate::enumerate::topology_from_preorder`].

use crate::error::{Error, Result, TopologyDefect};
use crate::point_set::PointSet;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Hard representation bound: subsets are stored in single machine words.
pub const MAX_POINTS: usize = 64;

/// Default cap on the carrier size of a product space.
pub const DEFAULT_PRODUCT_CAP: usize = 16;

/// A reflexive, transitive relation on `{0..n-1}`.
///
/// Row `x` is the bit mask `{y : x <= y}`; reflexivity and transitivity are
/// established at construction and preserved by every producer in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    rows: Vec<u64>,
}

impl Preorder {
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::CapExceeded {
                what: "preorder points",
                requested: n as u64,
                cap: MAX_POINTS as u64,
            });
        }
        if rows.len() != n {
            return Err(Error::Malformed(format!(
                "preorder on {n} points needs {n} rows, got {}",
                rows.len()
            )));
        }
        let full = PointSet::full(n).bits();
        for (x, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::OutOfCarrier {
                    set: PointSet::from_bits(row),
                    n,
                });
            }
            if row >> x & 1 == 0 {
                return Err(Error::Malformed(format!("relation is not reflexive at {x}")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if rows[x] >> y & 1 == 1 && rows[y] & !rows[x] != 0 {
                    return Err(Error::Malformed(format!(
                        "relation is not transitive through {x} <= {y}"
                    )));
                }
            }
        }
        Ok(Preorder { n, rows })
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<u64>) -> Self {
        debug_assert!(Preorder::new(n, rows.clone()).is_ok());
        Preorder { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    /// `{y : x <= y}`, which is also the minimal open neighborhood of `x` in
    /// the topology this preorder generates.
    pub fn up_set(&self, x: usize) -> PointSet {
        PointSet::from_bits(self.rows[x])
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Every pair of points is comparable.
    pub fn is_total(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| self.comparable(x, y)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| !(self.leq(x, y) && self.leq(y, x))))
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Preorder(n={}", self.n)?;
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && self.leq(x, y) {
                    write!(f, ", {x}<={y}")?;
                }
            }
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityProfile {
    pub connected: bool,
    pub hyperconnected: bool,
    pub ultraconnected: bool,
    pub path_connected: bool,
    pub non_separated_points: bool,
}

/// A subspace together with its re-indexing: `points[i]` is the ambient index
/// of the subspace point `i` (ambient order is preserved).
#[derive(Debug, Clone)]
pub struct Subspace {
    pub space: FiniteSpace,
    pub points: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SpaceDto {
    n: usize,
    opens: Vec<Vec<usize>>,
}

/// A finite topological space: carrier `{0..n-1}` plus its full open-set
/// family, sorted ascending by bit mask and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<PointSet>,
    // min_nbhd[x] is the intersection of all opens containing x; it is itself
    // open because the family is closed under (finite) intersections.
    min_nbhd: Vec<PointSet>,
}

impl FiniteSpace {
    /// The single entry point for untrusted open-set families: checks carrier
    /// membership, presence of the empty and full sets, and closure under
    /// pairwise unions and intersections.
    pub fn validate(n: usize, family: Vec<PointSet>) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::CapExceeded {
                what: "carrier points",
                requested: n as u64,
                cap: MAX_POINTS as u64,
            });
        }
        let mut opens = family;
        opens.sort();
        opens.dedup();
        let full = PointSet::full(n);
        for &o in &opens {
            if !o.is_subset(full) {
                return Err(Error::OutOfCarrier { set: o, n });
            }
        }
        if opens.binary_search(&PointSet::EMPTY).is_err() {
            return Err(Error::NotATopology(TopologyDefect::MissingEmpty));
        }
        if opens.binary_search(&full).is_err() {
            return Err(Error::NotATopology(TopologyDefect::MissingFull));
        }
        for i in 0..opens.len() {
            for j in i + 1..opens.len() {
                let (u, v) = (opens[i], opens[j]);
                if opens.binary_search(&u.union(v)).is_err() {
                    return Err(Error::NotATopology(TopologyDefect::UnionEscape(u, v)));
                }
                if opens.binary_search(&u.intersect(v)).is_err() {
                    return Err(Error::NotATopology(TopologyDefect::IntersectionEscape(u, v)));
                }
            }
        }
        Ok(Self::from_valid(n, opens))
    }

    // `opens` must already be a sorted, deduplicated, valid topology.
    pub(crate) fn from_valid(n: usize, opens: Vec<PointSet>) -> Self {
        let min_nbhd = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|o| o.contains(x))
                    .fold(PointSet::full(n), |acc, &o| acc.intersect(o))
            })
            .collect();
        FiniteSpace { n, opens, min_nbhd }
    }

    /// Builds the topology whose opens are the up-sets of the preorder rows.
    pub(crate) fn from_up_set_rows(n: usize, rows: &[u64]) -> Self {
        debug_assert!(n <= 22, "up-set enumeration walks 2^n masks");
        let mut opens = Vec::new();
        for mask in 0..(1u64 << n) {
            let mut up = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                up |= rows[p];
            }
            if up == mask {
                opens.push(PointSet::from_bits(mask));
            }
        }
        Self::from_valid(n, opens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(s.complement(self.n))
    }

    /// Closed sets, complements of the opens (ascending by mask).
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut cs: Vec<PointSet> = self.opens.iter().map(|o| o.complement(self.n)).collect();
        cs.sort();
        cs
    }

    fn check_subset(&self, s: PointSet) -> Result<()> {
        if s.is_subset(self.carrier()) {
            Ok(())
        } else {
            Err(Error::OutOfCarrier { set: s, n: self.n })
        }
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::PointOutOfCarrier { point: x, n: self.n })
        }
    }

    /// Smallest closed superset: `x` is in the closure of `s` iff every open
    /// set containing `x` meets `s`, and the minimal neighborhood suffices.
    pub fn closure(&self, s: PointSet) -> Result<PointSet> {
        self.check_subset(s)?;
        Ok(self.closure_unchecked(s))
    }

    pub(crate) fn closure_unchecked(&self, s: PointSet) -> PointSet {
        (0..self.n)
            .filter(|&x| !self.min_nbhd[x].intersect(s).is_empty())
            .collect()
    }

    /// Largest open subset: union of the opens contained in `s`.
    pub fn interior(&self, s: PointSet) -> Result<PointSet> {
        self.check_subset(s)?;
        Ok(self
            .opens
            .iter()
            .filter(|o| o.is_subset(s))
            .fold(PointSet::EMPTY, |acc, &o| acc.union(o)))
    }

    /// `s` is dense iff it meets every nonempty open set; the minimal
    /// neighborhoods are exactly the inclusion-minimal nonempty opens, so
    /// density is equivalent to being a transversal of all of them.
    pub fn is_dense(&self, s: PointSet) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self.is_dense_unchecked(s))
    }

    pub(crate) fn is_dense_unchecked(&self, s: PointSet) -> bool {
        (0..self.n).all(|x| !self.min_nbhd[x].intersect(s).is_empty())
    }

    /// The intersection of all opens containing `x` (open, since the family
    /// is intersection-closed). Equals `{y : x <= y}` in the specialization
    /// preorder.
    pub fn minimal_open_neighborhood(&self, x: usize) -> Result<PointSet> {
        self.check_point(x)?;
        Ok(self.min_nbhd[x])
    }

    pub(crate) fn min_neighborhood_unchecked(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    /// `x <= y iff x in cl{y} iff y in U_x`.
    pub fn specialization_preorder(&self) -> Preorder {
        Preorder {
            n: self.n,
            rows: self.min_nbhd.iter().map(|m| m.bits()).collect(),
        }
    }

    /// Subspace on `s`: traces of the opens, with points re-indexed in
    /// ascending ambient order. The re-indexing map is returned alongside.
    pub fn subspace(&self, s: PointSet) -> Result<Subspace> {
        self.check_subset(s)?;
        let points: Vec<usize> = s.iter().collect();
        let mut traces: Vec<PointSet> = self
            .opens
            .iter()
            .map(|o| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| o.contains(p))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        traces.sort();
        traces.dedup();
        Ok(Subspace {
            space: FiniteSpace::from_valid(points.len(), traces),
            points,
        })
    }

    /// Product space on pairs `(x, y) -> x * n_Y + y` (lexicographic). The
    /// opens are all unions of open boxes `U x V`; equivalently the up-sets
    /// of the componentwise specialization preorder, which is how they are
    /// materialized (each box is a union of minimal-neighborhood boxes, and
    /// each up-set is a union of boxes, so the families coincide).
    pub fn product(&self, other: &FiniteSpace) -> Result<FiniteSpace> {
        self.product_capped(other, DEFAULT_PRODUCT_CAP)
    }

    pub fn product_capped(&self, other: &FiniteSpace, cap: usize) -> Result<FiniteSpace> {
        let nm = self.n * other.n;
        if nm > cap {
            return Err(Error::CapExceeded {
                what: "product points",
                requested: nm as u64,
                cap: cap as u64,
            });
        }
        let m = other.n;
        let mut rows = vec![0u64; nm];
        for x in 0..self.n {
            for y in 0..m {
                let mut r = 0u64;
                for x2 in self.min_nbhd[x].iter() {
                    for y2 in other.min_nbhd[y].iter() {
                        r |= 1u64 << (x2 * m + y2);
                    }
                }
                rows[x * m + y] = r;
            }
        }
        Ok(FiniteSpace::from_up_set_rows(nm, &rows))
    }

    /// Disjoint union: parts are laid out consecutively and the opens are all
    /// unions of one open per part. An empty list yields the empty space.
    pub fn topological_sum(parts: &[FiniteSpace]) -> Result<FiniteSpace> {
        let n: usize = parts.iter().map(|p| p.n).sum();
        if n > MAX_POINTS {
            return Err(Error::CapExceeded {
                what: "sum carrier points",
                requested: n as u64,
                cap: MAX_POINTS as u64,
            });
        }
        let mut opens: Vec<u64> = vec![0];
        let mut offset = 0;
        for part in parts {
            let mut next = Vec::with_capacity(opens.len() * part.opens.len());
            for &acc in &opens {
                for o in &part.opens {
                    next.push(acc | (o.bits() << offset));
                }
            }
            opens = next;
            offset += part.n;
        }
        opens.sort_unstable();
        opens.dedup();
        Ok(FiniteSpace::from_valid(
            n,
            opens.into_iter().map(PointSet::from_bits).collect(),
        ))
    }

    /// Connected components, ordered by their smallest point. Connectivity in
    /// a finite space is reachability under specialization comparability.
    pub fn connected_components(&self) -> Vec<PointSet> {
        let mut adj = vec![0u64; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                if self.min_nbhd[x].contains(y) || self.min_nbhd[y].contains(x) {
                    adj[x] |= 1u64 << y;
                }
            }
        }
        let mut seen = PointSet::EMPTY;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::singleton(start);
            loop {
                let grown = comp
                    .iter()
                    .fold(comp, |acc, p| acc.union(PointSet::from_bits(adj[p])));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn separation_profile(&self) -> SeparationProfile {
        let pre = self.specialization_preorder();
        let t0 = pre.is_antisymmetric();
        let t1 = (0..self.n).all(|x| self.min_nbhd[x] == PointSet::singleton(x));
        let hausdorff = (0..self.n).all(|x| {
            (0..x).all(|y| self.min_nbhd[x].intersect(self.min_nbhd[y]).is_empty())
        });
        SeparationProfile { t0, t1, hausdorff }
    }

    pub fn classify_connectivity(&self) -> ConnectivityProfile {
        let connected = self.connected_components().len() <= 1;
        let hyperconnected = self.pairwise_meet(&self.opens);
        let ultraconnected = self.pairwise_meet(&self.closed_sets());
        // In a finite space every pair of specialization-comparable points is
        // joined by a path, so path components and components coincide.
        let path_connected = connected;
        let pre = self.specialization_preorder();
        ConnectivityProfile {
            connected,
            hyperconnected,
            ultraconnected,
            path_connected,
            non_separated_points: pre.is_total(),
        }
    }

    // No two disjoint nonempty members.
    fn pairwise_meet(&self, family: &[PointSet]) -> bool {
        for (i, &a) in family.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            for &b in &family[i + 1..] {
                if !b.is_empty() && a.intersect(b).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Number of distinct values a continuous map into a discrete space (a
    /// "real-valued" map at finite scale) can attain: one per component.
    pub fn max_real_range(&self) -> usize {
        self.connected_components().len()
    }

    /// Splits the carrier by proper clopen partitions `(U_i, V_i)`, emitting
    /// the smallest clopen piece and recursing on the rest until no proper
    /// clopen subset remains. Every clopen set is a union of components, so
    /// the smallest one is a single component and the result equals
    /// [`FiniteSpace::connected_components`] as a partition.
    pub fn clopen_splitting_decomposition(&self) -> Vec<PointSet> {
        let mut parts = Vec::new();
        let mut current = self.carrier();
        while !current.is_empty() {
            let mut traces: Vec<PointSet> =
                self.opens.iter().map(|o| o.intersect(current)).collect();
            traces.sort();
            traces.dedup();
            let mut best: Option<PointSet> = None;
            for &t in &traces {
                if t.is_empty() || t == current {
                    continue;
                }
                if traces.binary_search(&current.minus(t)).is_ok()
                    && best.map_or(true, |b| (t.len(), t) < (b.len(), b))
                {
                    best = Some(t);
                }
            }
            match best {
                Some(v) => {
                    parts.push(v);
                    current = current.minus(v);
                }
                None => {
                    parts.push(current);
                    break;
                }
            }
        }
        parts
    }

    // ---- named spaces ----

    pub fn point() -> Self {
        Self::discrete(1)
    }

    /// All subsets open.
    pub fn discrete(n: usize) -> Self {
        assert!(n <= 16, "discrete space materializes 2^n opens");
        let opens = (0..(1u64 << n)).map(PointSet::from_bits).collect();
        Self::from_valid(n, opens)
    }

    /// Only the empty and full sets open.
    pub fn indiscrete(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        let mut opens = vec![PointSet::EMPTY];
        if n > 0 {
            opens.push(PointSet::full(n));
        }
        Self::from_valid(n, opens)
    }

    /// Two points with exactly one of them open: opens are {}, {1}, {0,1}.
    pub fn sierpinski() -> Self {
        Self::from_valid(
            2,
            vec![
                PointSet::EMPTY,
                PointSet::singleton(1),
                PointSet::full(2),
            ],
        )
    }

    /// Three points: a bottom point 0 under two incomparable open points 1
    /// and 2 (opens {}, {1}, {2}, {1,2}, X). The smallest space that is
    /// ultraconnected but not dense-ultraconnected.
    pub fn h_analogue() -> Self {
        Self::from_valid(
            3,
            [0b000u64, 0b010, 0b100, 0b110, 0b111]
                .into_iter()
                .map(PointSet::from_bits)
                .collect(),
        )
    }

    // ---- JSON interchange: {"n": int, "opens": [[int, ...], ...]} ----

    pub fn to_json_value(&self) -> serde_json::Value {
        let dto = SpaceDto {
            n: self.n,
            opens: self.opens.iter().map(|o| o.iter().collect()).collect(),
        };
        serde_json::to_value(dto).expect("space serializes")
    }

    pub fn to_json_string(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let dto: SpaceDto = serde_json::from_value(v.clone())?;
        let mut family = Vec::with_capacity(dto.opens.len());
        for open in &dto.opens {
            if !open.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Malformed(format!(
                    "open {open:?} is not a strictly increasing point list"
                )));
            }
            if let Some(&p) = open.iter().find(|&&p| p >= dto.n) {
                return Err(Error::PointOutOfCarrier { point: p, n: dto.n });
            }
            family.push(open.iter().copied().collect());
        }
        Self::validate(dto.n, family)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json_value(&serde_json::from_str(s)?)
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} opens=[", self.n)?;
        for (i, o) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
