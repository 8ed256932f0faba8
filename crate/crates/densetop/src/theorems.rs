//! Machine verification of the registered statements at desk scale.
//!
//! `verify_theorem` quantifies each statement over exhaustively enumerated
//! universes — spaces, subsets, coarsenings, maps, products, topologized
//! groups — and returns a replayable report. Zero failures means "verified
//! at this scale", never "proved"; every failure carries the full witness
//! (space JSON, subset, map table, ...) so it can be replayed.

use crate::dense::{
    dc_decomposition, dc_of_point, dense_connected_component, dense_p, dense_ultraconnected_witness,
    heredity_class, hereditarily_p, is_dense_connected_fast, is_dense_pathwise_fast,
    is_dense_pseudocompact, is_dense_ultraconnected_fast, is_locally_dense_connected_fast,
    locally_dense_p, subspace_on, BASE_PROPERTIES, CONNECTED, HYPERCONNECTED, PATH_CONNECTED,
    PSEUDOCOMPACT, ULTRACONNECTED,
};
use crate::enumerate::{dense_subsets, enumerate_topologies, maps_between, Caps, MapFilter, Mode};
use crate::error::{Error, Result};
use crate::group;
use crate::map::PointMap;
use crate::point_set::PointSet;
use crate::space::FiniteSpace;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremKind {
    /// Quantified over finite spaces (and their subsets, maps, products).
    Space,
    /// Quantified over catalogued groups with candidate topologies; the
    /// scale parameter is the group order.
    Group,
}

pub struct TheoremInfo {
    pub id: &'static str,
    pub kind: TheoremKind,
    pub default_scale: usize,
    pub statement: &'static str,
}

pub const THEOREMS: &[TheoremInfo] = &[
    TheoremInfo {
        id: "t1",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Equivalent on every space: dense-connected; no two nonempty opens disjoint; \
                    dense-hyperconnected; every nonempty open set is dense. (Universe: spaces on \
                    exactly n points.)",
    },
    TheoremInfo {
        id: "t22",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Dense-ultraconnected iff the specialization preorder is total iff every point \
                    either closes to the whole space or is trapped: its only neighborhood inside \
                    itself-plus-non-closure is the whole subspace. (Universe: spaces on exactly n \
                    points.)",
    },
    TheoremInfo {
        id: "c0",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "A dense-connected space with at least two points is not Hausdorff.",
    },
    TheoremInfo {
        id: "p0",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Passing to a coarser topology preserves dense-connectedness.",
    },
    TheoremInfo {
        id: "l3",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Passing to a coarser topology preserves path-connectedness.",
    },
    TheoremInfo {
        id: "p1",
        kind: TheoremKind::Space,
        default_scale: 3,
        statement: "Continuous surjections preserve dense-connectedness.",
    },
    TheoremInfo {
        id: "p3",
        kind: TheoremKind::Space,
        default_scale: 3,
        statement: "Continuous open surjections preserve local dense-connectedness.",
    },
    TheoremInfo {
        id: "almost-open-prop",
        kind: TheoremKind::Space,
        default_scale: 3,
        statement: "A continuous almost-open surjection carries dense-P to dense-P whenever it \
                    preserves P itself (preservation certified empirically at the same scale).",
    },
    TheoremInfo {
        id: "p2",
        kind: TheoremKind::Space,
        default_scale: 12,
        statement: "A binary product of nonempty spaces is dense-connected iff both factors are. \
                    (Scale: maximal product size.)",
    },
    TheoremInfo {
        id: "product-local",
        kind: TheoremKind::Space,
        default_scale: 12,
        statement: "A binary product of nonempty spaces is locally dense-connected iff both \
                    factors are; the finite-exception form collapses to this because \
                    dense-connected implies locally dense-connected. (Scale: maximal product \
                    size.)",
    },
    TheoremInfo {
        id: "t44",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "If P passes to closed subspaces, every dense-P space is hereditarily P. \
                    (Closed-heredity certified empirically at the same scale.)",
    },
    TheoremInfo {
        id: "p566",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Dense subspaces of a dense-P space are dense-P.",
    },
    TheoremInfo {
        id: "clopen-prop",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "If P passes to clopen subspaces, open subspaces of a dense-P space are \
                    dense-P. (Clopen-heredity certified empirically at the same scale.)",
    },
    TheoremInfo {
        id: "p11",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "A space is dense-pseudocompact iff all its open subspaces are (identically \
                    true at finite scale, where pseudocompactness is automatic).",
    },
    TheoremInfo {
        id: "t4-finite",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Repeated clopen splitting bottoms out at the connected components, and the \
                    value count of any continuous map into a discrete codomain is bounded by the \
                    component count and attained.",
    },
    TheoremInfo {
        id: "union-prop",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "A union of dense-connected subspaces is dense-connected provided every \
                    nonempty open set either misses the union or meets every member (binary and \
                    ternary families instantiated).",
    },
    TheoremInfo {
        id: "p4",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "A pairwise-intersecting family of dense-connected open subspaces has a \
                    dense-connected union (binary and ternary families instantiated).",
    },
    TheoremInfo {
        id: "p5",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Every set squeezed between a dense-connected subspace and its closure is \
                    itself dense-connected.",
    },
    TheoremInfo {
        id: "p9-open",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Open subspaces of a dense-connected space are dense-connected.",
    },
    TheoremInfo {
        id: "p6",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "In a locally dense-connected space every dense-connected component is clopen; \
                    elsewhere the component operators signal the missing hypothesis.",
    },
    TheoremInfo {
        id: "p7",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "In a locally dense-connected space dense-connected components are equal or \
                    disjoint.",
    },
    TheoremInfo {
        id: "p10",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Locally dense-connected iff in every open subspace all maximal \
                    dense-connected subsets are open.",
    },
    TheoremInfo {
        id: "t233",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Locally dense-connected iff the space is the topological sum of its \
                    dense-connected components (sum instances rebuilt and compared; converse \
                    instantiated on binary and ternary sums).",
    },
    TheoremInfo {
        id: "t5555",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "A space in which no two points have disjoint neighborhoods is \
                    dense-pathwise-connected.",
    },
    TheoremInfo {
        id: "l2",
        kind: TheoremKind::Space,
        default_scale: 4,
        statement: "Having no two points with disjoint neighborhoods is hereditary.",
    },
    TheoremInfo {
        id: "t2",
        kind: TheoremKind::Group,
        default_scale: 4,
        statement: "Paratopological group: dense-connected iff U*V^-1 covers the group for all \
                    open U, V at the identity.",
    },
    TheoremInfo {
        id: "t3",
        kind: TheoremKind::Group,
        default_scale: 4,
        statement: "Quasitopological group: dense-connected iff U*V covers the group for all \
                    open U, V at the identity.",
    },
    TheoremInfo {
        id: "c1",
        kind: TheoremKind::Group,
        default_scale: 4,
        statement: "Topological group: dense-connected iff indiscrete.",
    },
    TheoremInfo {
        id: "ultra",
        kind: TheoremKind::Group,
        default_scale: 4,
        statement: "Quasitopological group: dense-ultraconnected iff indiscrete.",
    },
    TheoremInfo {
        id: "dsg-remark",
        kind: TheoremKind::Group,
        default_scale: 4,
        statement: "Semitopological and dense-connected: every dense subgroup is connected.",
    },
    TheoremInfo {
        id: "para-obs",
        kind: TheoremKind::Group,
        default_scale: 4,
        statement: "Finite-scale observation: every paratopological instance is topological.",
    },
];

pub fn theorem_info(id: &str) -> Result<&'static TheoremInfo> {
    THEOREMS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

pub fn theorem_ids() -> Vec<&'static str> {
    THEOREMS.iter().map(|t| t.id).collect()
}

/// One refuted instance: `item` replays through the CLI (`check`), `detail`
/// says what broke.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub item: Value,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub n: usize,
    pub mode: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    pub(crate) fn new(id: &str, n: usize, mode: &str) -> Self {
        TheoremReport {
            theorem: id.to_string(),
            n,
            mode: mode.to_string(),
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub(crate) fn fail(&mut self, item: Value, detail: impl Into<String>) {
        self.failures.push(Failure {
            item,
            detail: detail.into(),
        });
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn verified(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Verify a registered statement at the given scale (carrier size, maximal
/// product size, or group order, depending on the statement).
pub fn verify_theorem(id: &str, scale: usize, mode: Mode, caps: &Caps) -> Result<TheoremReport> {
    let info = theorem_info(id)?;
    if info.kind == TheoremKind::Group {
        return group::verify_group_theorem(id, scale, caps);
    }
    let start = Instant::now();
    let mut r = TheoremReport::new(id, scale, &mode.to_string());
    match id {
        "t1" => check_t1(scale, mode, caps, &mut r)?,
        "t22" => check_t22(scale, mode, caps, &mut r)?,
        "c0" => check_c0(scale, mode, caps, &mut r)?,
        "p0" => check_coarsening(scale, mode, caps, &mut r, CoarseningFlavor::DenseConnected)?,
        "l3" => check_coarsening(scale, mode, caps, &mut r, CoarseningFlavor::PathConnected)?,
        "p1" => check_p1(scale, mode, caps, &mut r)?,
        "p3" => check_p3(scale, mode, caps, &mut r)?,
        "almost-open-prop" => check_almost_open(scale, mode, caps, &mut r)?,
        "p2" => check_product(scale, mode, caps, &mut r, ProductFlavor::DenseConnected)?,
        "product-local" => check_product(scale, mode, caps, &mut r, ProductFlavor::Locally)?,
        "t44" => check_t44(scale, mode, caps, &mut r)?,
        "p566" => check_p566(scale, mode, caps, &mut r)?,
        "clopen-prop" => check_clopen_prop(scale, mode, caps, &mut r)?,
        "p11" => check_p11(scale, mode, caps, &mut r)?,
        "t4-finite" => check_t4_finite(scale, mode, caps, &mut r)?,
        "union-prop" => check_union_prop(scale, mode, caps, &mut r)?,
        "p4" => check_p4(scale, mode, caps, &mut r)?,
        "p5" => check_p5(scale, mode, caps, &mut r)?,
        "p9-open" => check_p9_open(scale, mode, caps, &mut r)?,
        "p6" => check_p6(scale, mode, caps, &mut r)?,
        "p7" => check_p7(scale, mode, caps, &mut r)?,
        "p10" => check_p10(scale, mode, caps, &mut r)?,
        "t233" => check_t233(scale, mode, caps, &mut r)?,
        "t5555" => check_t5555(scale, mode, caps, &mut r)?,
        "l2" => check_l2(scale, mode, caps, &mut r)?,
        _ => unreachable!("registry and dispatch are in sync"),
    }
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

fn spaces_at(n: usize, mode: Mode, caps: &Caps) -> Result<Vec<FiniteSpace>> {
    Ok(enumerate_topologies(n, mode, caps)?.collect())
}

fn space_item(x: &FiniteSpace) -> Value {
    json!({ "space": x.to_json_value() })
}

fn map_item(f: &PointMap) -> Value {
    json!({
        "domain": f.domain.to_json_value(),
        "codomain": f.codomain.to_json_value(),
        "table": f.table,
    })
}

fn points_of(s: PointSet) -> Vec<usize> {
    s.iter().collect()
}

/// Brute dense-connected verdict, cross-checked against the
/// minimal-neighborhood decider; a disagreement is itself a failure.
fn dense_connected_checked(x: &FiniteSpace, caps: &Caps, r: &mut TheoremReport) -> Result<bool> {
    let brute = dense_p(x, &CONNECTED, caps)?;
    if brute != is_dense_connected_fast(x) {
        r.fail(space_item(x), "dense-connected deciders disagree");
    }
    Ok(brute)
}

fn locally_checked(x: &FiniteSpace, caps: &Caps, r: &mut TheoremReport) -> Result<bool> {
    let brute = locally_dense_p(x, &CONNECTED, caps)?;
    if brute != is_locally_dense_connected_fast(x) {
        r.fail(space_item(x), "local dense-connectedness deciders disagree");
    }
    Ok(brute)
}

fn check_t1(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for x in enumerate_topologies(n, mode, caps)? {
        r.checked += 1;
        let brute_connected = dense_p(&x, &CONNECTED, caps)?;
        let brute_hyper = dense_p(&x, &HYPERCONNECTED, caps)?;
        let fast = is_dense_connected_fast(&x);
        let literal_hyper = x.classify_connectivity().hyperconnected;
        let every_open_dense = x
            .opens()
            .iter()
            .all(|&u| u.is_empty() || x.is_dense_unchecked(u));
        if !(brute_connected == fast
            && fast == literal_hyper
            && literal_hyper == brute_hyper
            && brute_hyper == every_open_dense)
        {
            r.fail(
                json!({
                    "space": x.to_json_value(),
                    "dense_connected": brute_connected,
                    "pairwise_minimal_neighborhoods": fast,
                    "hyperconnected": literal_hyper,
                    "dense_hyperconnected": brute_hyper,
                    "every_nonempty_open_dense": every_open_dense,
                }),
                "four-way equivalence broken",
            );
        }
    }
    r.note(format!("universe: all {mode} topologies on exactly {n} points"));
    Ok(())
}

/// Literal per-point form: p closes to everything, or inside
/// Y = {p} plus the complement of cl{p} the only open set containing p is Y.
fn trapped_point_criterion(x: &FiniteSpace, p: usize) -> bool {
    let clp = x.closure_unchecked(PointSet::singleton(p));
    if clp == x.carrier() {
        return true;
    }
    let y = PointSet::singleton(p).union(x.carrier().minus(clp));
    let sub = x.subspace(y).expect("subset of the carrier");
    let pi = sub.points.iter().position(|&q| q == p).expect("p is in y");
    sub.space.min_neighborhood_unchecked(pi) == sub.space.carrier()
}

fn check_t22(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for x in enumerate_topologies(n, mode, caps)? {
        r.checked += 1;
        let brute = dense_p(&x, &ULTRACONNECTED, caps)?;
        let total = is_dense_ultraconnected_fast(&x);
        let trapped = (0..x.n()).all(|p| trapped_point_criterion(&x, p));
        let witness = dense_ultraconnected_witness(&x);
        if !(brute == total && total == trapped && witness.is_none() == total) {
            r.fail(
                json!({
                    "space": x.to_json_value(),
                    "dense_ultraconnected": brute,
                    "total_specialization": total,
                    "trapped_point_criterion": trapped,
                    "witness": witness.map(|(a, b)| vec![a, b]),
                }),
                "three-way equivalence or witness consistency broken",
            );
        }
    }
    r.note(format!("universe: all {mode} topologies on exactly {n} points"));
    Ok(())
}

fn check_c0(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    let mut substantive = 0u64;
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            r.checked += 1;
            if m >= 2 && dense_connected_checked(&x, caps, r)? {
                substantive += 1;
                if x.separation_profile().hausdorff {
                    r.fail(
                        space_item(&x),
                        "dense-connected with at least two points yet Hausdorff",
                    );
                }
            }
        }
    }
    r.note(format!(
        "substantive instances (dense-connected, at least two points): {substantive}"
    ));
    Ok(())
}

enum CoarseningFlavor {
    DenseConnected,
    PathConnected,
}

fn check_coarsening(
    n: usize,
    mode: Mode,
    caps: &Caps,
    r: &mut TheoremReport,
    flavor: CoarseningFlavor,
) -> Result<()> {
    if mode == Mode::Classes {
        r.note(
            "coarsening compares literal open families, which relabeling does not respect; the \
             labeled universe is used regardless of mode"
                .to_string(),
        );
    }
    for m in 0..=n {
        let spaces = spaces_at(m, Mode::Labeled, caps)?;
        let mut flags = Vec::with_capacity(spaces.len());
        for x in &spaces {
            flags.push(match flavor {
                CoarseningFlavor::DenseConnected => dense_connected_checked(x, caps, r)?,
                CoarseningFlavor::PathConnected => x.classify_connectivity().path_connected,
            });
        }
        for (si, sigma) in spaces.iter().enumerate() {
            if !flags[si] {
                continue;
            }
            for (ti, tau) in spaces.iter().enumerate() {
                if tau.opens().iter().all(|&o| sigma.is_open(o)) {
                    r.checked += 1;
                    if !flags[ti] {
                        r.fail(
                            json!({
                                "finer": sigma.to_json_value(),
                                "coarser": tau.to_json_value(),
                            }),
                            match flavor {
                                CoarseningFlavor::DenseConnected => {
                                    "coarsening lost dense-connectedness"
                                }
                                CoarseningFlavor::PathConnected => {
                                    "coarsening lost path-connectedness"
                                }
                            },
                        );
                    }
                }
            }
        }
    }
    r.note("checked counts coarser-finer pairs whose finer side satisfies the premise".to_string());
    Ok(())
}

fn check_p1(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    let filter = MapFilter {
        continuous: true,
        surjective: true,
        ..MapFilter::default()
    };
    let mut tiers: Vec<Vec<(FiniteSpace, bool)>> = Vec::new();
    for m in 0..=n {
        let mut tier = Vec::new();
        for x in enumerate_topologies(m, mode, caps)? {
            let flag = dense_connected_checked(&x, caps, r)?;
            tier.push((x, flag));
        }
        tiers.push(tier);
    }
    for domain_tier in &tiers {
        for (x, dx) in domain_tier {
            if !dx {
                continue;
            }
            for codomain_tier in &tiers {
                for (y, dy) in codomain_tier {
                    for f in maps_between(x, y, filter, caps)? {
                        r.checked += 1;
                        if !dy {
                            r.fail(
                                map_item(&f),
                                "continuous surjection maps a dense-connected space onto a \
                                 non-dense-connected one",
                            );
                        }
                    }
                }
            }
        }
    }
    r.note(format!(
        "checked counts continuous surjections out of dense-connected domains, sizes up to {n}"
    ));
    Ok(())
}

fn check_p3(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    let filter = MapFilter {
        continuous: true,
        open: true,
        surjective: true,
        ..MapFilter::default()
    };
    let mut tiers: Vec<Vec<(FiniteSpace, bool)>> = Vec::new();
    for m in 0..=n {
        let mut tier = Vec::new();
        for x in enumerate_topologies(m, mode, caps)? {
            let flag = locally_checked(&x, caps, r)?;
            tier.push((x, flag));
        }
        tiers.push(tier);
    }
    for domain_tier in &tiers {
        for (x, lx) in domain_tier {
            if !lx {
                continue;
            }
            for codomain_tier in &tiers {
                for (y, ly) in codomain_tier {
                    for f in maps_between(x, y, filter, caps)? {
                        r.checked += 1;
                        if !ly {
                            r.fail(
                                map_item(&f),
                                "continuous open surjection loses local dense-connectedness",
                            );
                        }
                    }
                }
            }
        }
    }
    r.note(
        "open maps are taken to be continuous open surjections; dropping continuity admits \
         counterexamples"
            .to_string(),
    );
    Ok(())
}

fn check_almost_open(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    let filter = MapFilter {
        continuous: true,
        almost_open: true,
        surjective: true,
        ..MapFilter::default()
    };
    struct Entry {
        space: FiniteSpace,
        plain: Vec<bool>,
        dense: Vec<bool>,
    }
    let mut tiers: Vec<Vec<Entry>> = Vec::new();
    for m in 0..=n {
        let mut tier = Vec::new();
        for x in enumerate_topologies(m, mode, caps)? {
            let plain = BASE_PROPERTIES.iter().map(|p| (p.predicate)(&x)).collect();
            let dense = BASE_PROPERTIES
                .iter()
                .map(|p| dense_p(&x, p, caps))
                .collect::<Result<Vec<bool>>>()?;
            tier.push(Entry {
                space: x,
                plain,
                dense,
            });
        }
        tiers.push(tier);
    }
    // Phase 1: which properties do these maps preserve at this scale?
    let mut preserved = vec![true; BASE_PROPERTIES.len()];
    for domain_tier in &tiers {
        for ex in domain_tier {
            for codomain_tier in &tiers {
                for ey in codomain_tier {
                    for _f in maps_between(&ex.space, &ey.space, filter, caps)? {
                        for (i, keep) in preserved.iter_mut().enumerate() {
                            if ex.plain[i] && !ey.plain[i] {
                                *keep = false;
                            }
                        }
                    }
                }
            }
        }
    }
    let certified: Vec<&str> = BASE_PROPERTIES
        .iter()
        .zip(&preserved)
        .filter(|(_, &keep)| keep)
        .map(|(p, _)| p.name)
        .collect();
    let excluded: Vec<&str> = BASE_PROPERTIES
        .iter()
        .zip(&preserved)
        .filter(|(_, &keep)| !keep)
        .map(|(p, _)| p.name)
        .collect();
    r.note(format!(
        "properties preserved by continuous almost-open surjections at this scale: {}",
        certified.join(", ")
    ));
    r.note(format!(
        "properties excluded by an explicit non-preserving map: {}",
        excluded.join(", ")
    ));
    // Phase 2: for the preserved properties, dense-P must transfer too.
    for domain_tier in &tiers {
        for ex in domain_tier {
            for codomain_tier in &tiers {
                for ey in codomain_tier {
                    for f in maps_between(&ex.space, &ey.space, filter, caps)? {
                        for (i, p) in BASE_PROPERTIES.iter().enumerate() {
                            if preserved[i] && ex.dense[i] {
                                r.checked += 1;
                                if !ey.dense[i] {
                                    let mut item = map_item(&f);
                                    item["property"] = json!(p.name);
                                    r.fail(
                                        item,
                                        "continuous almost-open surjection loses the dense \
                                         property",
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

enum ProductFlavor {
    DenseConnected,
    Locally,
}

fn check_product(
    scale: usize,
    mode: Mode,
    caps: &Caps,
    r: &mut TheoremReport,
    flavor: ProductFlavor,
) -> Result<()> {
    let max_factor = scale.min(caps.max_enum_points);
    // Factor tables: flag per space; sizes up to 5 get the subset-exhaustive
    // verdict (cross-checked against the fast decider), size 6 the fast one.
    let mut sides: Vec<Vec<(FiniteSpace, bool)>> = vec![Vec::new()];
    for a in 1..=max_factor {
        let side_mode = if a >= 6 { Mode::Classes } else { mode };
        let mut side = Vec::new();
        for x in enumerate_topologies(a, side_mode, caps)? {
            let flag = match flavor {
                ProductFlavor::DenseConnected => {
                    if a <= 5 {
                        dense_connected_checked(&x, caps, r)?
                    } else {
                        is_dense_connected_fast(&x)
                    }
                }
                ProductFlavor::Locally => {
                    if a <= 5 {
                        locally_checked(&x, caps, r)?
                    } else {
                        is_locally_dense_connected_fast(&x)
                    }
                }
            };
            side.push((x, flag));
        }
        sides.push(side);
    }
    for a in 1..=max_factor {
        for b in 1..=max_factor {
            if a * b > scale {
                continue;
            }
            for (x, dx) in &sides[a] {
                for (y, dy) in &sides[b] {
                    r.checked += 1;
                    let product = x.product_capped(y, caps.max_product_points)?;
                    let lhs = match flavor {
                        ProductFlavor::DenseConnected => is_dense_connected_fast(&product),
                        ProductFlavor::Locally => is_locally_dense_connected_fast(&product),
                    };
                    if lhs != (*dx && *dy) {
                        r.fail(
                            json!({
                                "left": x.to_json_value(),
                                "right": y.to_json_value(),
                                "product": product.to_json_value(),
                                "product_verdict": lhs,
                                "factor_verdicts": [dx, dy],
                            }),
                            "product verdict differs from the factor conjunction",
                        );
                    }
                    if a * b <= 6 {
                        let brute = match flavor {
                            ProductFlavor::DenseConnected => dense_p(&product, &CONNECTED, caps)?,
                            ProductFlavor::Locally => locally_dense_p(&product, &CONNECTED, caps)?,
                        };
                        if brute != lhs {
                            r.fail(
                                json!({
                                    "left": x.to_json_value(),
                                    "right": y.to_json_value(),
                                    "product": product.to_json_value(),
                                }),
                                "subset-exhaustive product verdict disagrees with the fast one",
                            );
                        }
                    }
                }
            }
        }
    }
    r.note(
        "empty factors are excluded: a product with an empty factor is empty, satisfying the \
         product side vacuously while the factor side can fail"
            .to_string(),
    );
    r.note(
        "factors of six points are quantified over homeomorphism-class representatives, sound \
         because both sides of the statement are homeomorphism-invariant"
            .to_string(),
    );
    r.note("products of at most six points are re-verified subset-exhaustively".to_string());
    if let ProductFlavor::Locally = flavor {
        r.note(
            "the finite-exception form collapses for two factors: dense-connected implies \
             locally dense-connected, so both factors must simply be locally dense-connected"
                .to_string(),
        );
    }
    Ok(())
}

fn check_t44(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    let mut certified = Vec::new();
    let mut excluded = Vec::new();
    for p in BASE_PROPERTIES.iter() {
        let h = heredity_class(p, n, caps)?;
        if !h.closed_hereditary {
            excluded.push(p.name);
            continue;
        }
        certified.push(p.name);
        for m in 0..=n {
            for x in enumerate_topologies(m, mode, caps)? {
                if dense_p(&x, p, caps)? {
                    r.checked += 1;
                    if !hereditarily_p(&x, p, caps)? {
                        let mut item = space_item(&x);
                        item["property"] = json!(p.name);
                        r.fail(item, "dense-P space that is not hereditarily P");
                    }
                }
            }
        }
    }
    r.note(format!(
        "closed-hereditary at this scale (certified empirically): {}",
        certified.join(", ")
    ));
    r.note(format!(
        "not closed-hereditary, so out of scope: {}",
        excluded.join(", ")
    ));
    Ok(())
}

fn check_p566(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            for p in BASE_PROPERTIES.iter() {
                if !dense_p(&x, p, caps)? {
                    continue;
                }
                for s in dense_subsets(&x, caps)? {
                    r.checked += 1;
                    if !dense_p(&subspace_on(&x, s), p, caps)? {
                        r.fail(
                            json!({
                                "space": x.to_json_value(),
                                "property": p.name,
                                "dense_subset": points_of(s),
                            }),
                            "dense subspace of a dense-P space is not dense-P",
                        );
                    }
                }
            }
        }
    }
    r.note("checked counts (space, property, dense subset) triples with the premise true".to_string());
    Ok(())
}

fn check_clopen_prop(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    let mut certified = Vec::new();
    let mut excluded = Vec::new();
    for p in BASE_PROPERTIES.iter() {
        let h = heredity_class(p, n, caps)?;
        if !h.clopen_hereditary {
            excluded.push(p.name);
            continue;
        }
        certified.push(p.name);
        for m in 0..=n {
            for x in enumerate_topologies(m, mode, caps)? {
                if !dense_p(&x, p, caps)? {
                    continue;
                }
                for &u in x.opens() {
                    r.checked += 1;
                    if !dense_p(&subspace_on(&x, u), p, caps)? {
                        r.fail(
                            json!({
                                "space": x.to_json_value(),
                                "property": p.name,
                                "open_subset": points_of(u),
                            }),
                            "open subspace of a dense-P space is not dense-P",
                        );
                    }
                }
            }
        }
    }
    r.note(format!(
        "clopen-hereditary at this scale (certified empirically): {}",
        certified.join(", ")
    ));
    r.note(format!(
        "not clopen-hereditary, so out of scope: {}",
        excluded.join(", ")
    ));
    Ok(())
}

fn check_p11(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            r.checked += 1;
            let whole = dense_p(&x, &PSEUDOCOMPACT, caps)?;
            let fast = is_dense_pseudocompact(&x);
            let mut opens_ok = true;
            for &u in x.opens() {
                if !dense_p(&subspace_on(&x, u), &PSEUDOCOMPACT, caps)? {
                    opens_ok = false;
                }
            }
            if !(whole && fast && opens_ok) {
                r.fail(
                    json!({
                        "space": x.to_json_value(),
                        "dense_pseudocompact": whole,
                        "all_open_subspaces": opens_ok,
                    }),
                    "dense-pseudocompact biconditional broken",
                );
            }
        }
    }
    r.note(
        "finite spaces are pseudocompact, so both sides hold identically; the sweep exercises \
         the subset-exhaustive combinator"
            .to_string(),
    );
    Ok(())
}

fn check_t4_finite(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            r.checked += 1;
            let comps = x.connected_components();
            // The splitter peels minimal clopen pieces; equality is as a
            // partition, so align both orders by smallest member.
            let mut split = x.clopen_splitting_decomposition();
            split.sort_by_key(|p| PointSet::min(*p));
            if split != comps {
                r.fail(
                    space_item(&x),
                    "repeated clopen splitting does not bottom out at the components",
                );
            }
            if x.max_real_range() != comps.len() {
                r.fail(
                    json!({
                        "space": x.to_json_value(),
                        "max_real_range": x.max_real_range(),
                        "components": comps.len(),
                    }),
                    "maximal discrete range differs from the component count",
                );
            }
        }
    }
    let map_scale = n.min(4);
    for m in 0..=map_scale {
        for x in enumerate_topologies(m, mode, caps)? {
            let k = x.connected_components().len();
            for c in 1..=3usize {
                let codomain = FiniteSpace::discrete(c);
                let mut best = 0usize;
                for f in maps_between(&x, &codomain, MapFilter::continuous(), caps)? {
                    let mut values = PointSet::EMPTY;
                    for &v in &f.table {
                        values.insert(v);
                    }
                    if values.len() > k {
                        r.fail(
                            map_item(&f),
                            "continuous map takes more values than there are components",
                        );
                    }
                    best = best.max(values.len());
                }
                if best != k.min(c) {
                    r.fail(
                        json!({
                            "space": x.to_json_value(),
                            "codomain_points": c,
                            "max_values": best,
                        }),
                        "maximal value count of continuous maps is not the component bound",
                    );
                }
            }
        }
    }
    r.note(format!(
        "value-count cross-check enumerates continuous maps into discrete codomains of up to 3 \
         points for domains of up to {map_scale} points"
    ));
    Ok(())
}

/// Subset verdicts (brute) for all subsets of the carrier, memoized per mask.
fn subset_dc_flags(x: &FiniteSpace, caps: &Caps) -> Result<HashMap<u64, bool>> {
    let mut flags = HashMap::new();
    for s in x.carrier().subsets() {
        flags.insert(s.bits(), dense_p(&subspace_on(x, s), &CONNECTED, caps)?);
    }
    Ok(flags)
}

fn union_premise(x: &FiniteSpace, members: &[PointSet]) -> bool {
    let union = members
        .iter()
        .fold(PointSet::EMPTY, |acc, &s| acc.union(s));
    x.opens().iter().all(|&u| {
        u.is_empty()
            || u.intersect(union).is_empty()
            || members.iter().all(|&s| !u.intersect(s).is_empty())
    })
}

fn check_union_prop(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            let flags = subset_dc_flags(&x, caps)?;
            let dc_subsets: Vec<PointSet> = x
                .carrier()
                .subsets()
                .filter(|s| !s.is_empty() && flags[&s.bits()])
                .collect();
            for (i, &a) in dc_subsets.iter().enumerate() {
                for &b in &dc_subsets[i + 1..] {
                    if union_premise(&x, &[a, b]) {
                        r.checked += 1;
                        if !flags[&a.union(b).bits()] {
                            r.fail(
                                json!({
                                    "space": x.to_json_value(),
                                    "members": [points_of(a), points_of(b)],
                                }),
                                "aligned union of dense-connected subspaces is not dense-connected",
                            );
                        }
                    }
                }
            }
            if m <= 4 {
                for (i, &a) in dc_subsets.iter().enumerate() {
                    for (j, &b) in dc_subsets.iter().enumerate().skip(i + 1) {
                        for &c in &dc_subsets[j + 1..] {
                            if union_premise(&x, &[a, b, c]) {
                                r.checked += 1;
                                if !flags[&a.union(b).union(c).bits()] {
                                    r.fail(
                                        json!({
                                            "space": x.to_json_value(),
                                            "members": [points_of(a), points_of(b), points_of(c)],
                                        }),
                                        "aligned ternary union is not dense-connected",
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    r.note("binary families at all sizes; ternary families for carriers of up to 4 points".to_string());
    Ok(())
}

fn check_p4(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            let flags = subset_dc_flags(&x, caps)?;
            let dc_opens: Vec<PointSet> = x
                .opens()
                .iter()
                .copied()
                .filter(|u| !u.is_empty() && flags[&u.bits()])
                .collect();
            for (i, &u) in dc_opens.iter().enumerate() {
                for &v in &dc_opens[i + 1..] {
                    if !u.intersect(v).is_empty() {
                        r.checked += 1;
                        if !flags[&u.union(v).bits()] {
                            r.fail(
                                json!({
                                    "space": x.to_json_value(),
                                    "members": [points_of(u), points_of(v)],
                                }),
                                "union of intersecting dense-connected opens is not dense-connected",
                            );
                        }
                    }
                }
            }
            if m <= 4 {
                for (i, &u) in dc_opens.iter().enumerate() {
                    for (j, &v) in dc_opens.iter().enumerate().skip(i + 1) {
                        for &w in &dc_opens[j + 1..] {
                            if !u.intersect(v).is_empty()
                                && !u.intersect(w).is_empty()
                                && !v.intersect(w).is_empty()
                            {
                                r.checked += 1;
                                if !flags[&u.union(v).union(w).bits()] {
                                    r.fail(
                                        json!({
                                            "space": x.to_json_value(),
                                            "members": [points_of(u), points_of(v), points_of(w)],
                                        }),
                                        "ternary union of pairwise-intersecting dense-connected \
                                         opens is not dense-connected",
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    r.note("binary families at all sizes; ternary families for carriers of up to 4 points".to_string());
    Ok(())
}

fn check_p5(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            let flags = subset_dc_flags(&x, caps)?;
            for x0 in x.carrier().subsets() {
                if !flags[&x0.bits()] {
                    continue;
                }
                let cl = x.closure_unchecked(x0);
                for extra in cl.minus(x0).subsets() {
                    let z = x0.union(extra);
                    r.checked += 1;
                    if !flags[&z.bits()] {
                        r.fail(
                            json!({
                                "space": x.to_json_value(),
                                "inner": points_of(x0),
                                "between": points_of(z),
                            }),
                            "set between a dense-connected subspace and its closure is not \
                             dense-connected",
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_p9_open(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            if !dense_connected_checked(&x, caps, r)? {
                continue;
            }
            for &u in x.opens() {
                r.checked += 1;
                if !dense_p(&subspace_on(&x, u), &CONNECTED, caps)? {
                    r.fail(
                        json!({
                            "space": x.to_json_value(),
                            "open_subset": points_of(u),
                        }),
                        "open subspace of a dense-connected space is not dense-connected",
                    );
                }
            }
        }
    }
    Ok(())
}

fn check_p6(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    let mut locally_count = 0u64;
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            if locally_checked(&x, caps, r)? {
                locally_count += 1;
                for p in 0..x.n() {
                    r.checked += 1;
                    let w = dc_of_point(&x, p);
                    if !(x.is_open(w) && x.is_closed(w) && w.contains(p)) {
                        r.fail(
                            json!({
                                "space": x.to_json_value(),
                                "point": p,
                                "component": points_of(w),
                            }),
                            "dense-connected component is not clopen",
                        );
                    }
                }
                if dc_decomposition(&x, caps).is_err() {
                    r.fail(
                        space_item(&x),
                        "decomposition refused on a locally dense-connected space",
                    );
                }
            } else {
                r.checked += 1;
                let refused = matches!(
                    dc_decomposition(&x, caps),
                    Err(Error::NotLocallyDenseConnected)
                ) && (x.n() == 0
                    || matches!(
                        dense_connected_component(&x, 0, caps),
                        Err(Error::NotLocallyDenseConnected)
                    ));
                if !refused {
                    r.fail(
                        space_item(&x),
                        "component operators must signal the missing hypothesis",
                    );
                }
            }
        }
    }
    r.note(format!(
        "locally dense-connected spaces encountered: {locally_count}"
    ));
    Ok(())
}

fn check_p7(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            if !locally_checked(&x, caps, r)? {
                continue;
            }
            let components: Vec<PointSet> = (0..x.n()).map(|p| dc_of_point(&x, p)).collect();
            for (p, &a) in components.iter().enumerate() {
                for &b in &components[p + 1..] {
                    r.checked += 1;
                    if a != b && !a.intersect(b).is_empty() {
                        r.fail(
                            json!({
                                "space": x.to_json_value(),
                                "components": [points_of(a), points_of(b)],
                            }),
                            "two dense-connected components overlap without being equal",
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

/// Inclusion-maximal nonempty subsets whose subspace is dense-connected.
fn maximal_dense_connected_subsets(space: &FiniteSpace) -> Vec<PointSet> {
    let candidates: Vec<PointSet> = space
        .carrier()
        .subsets()
        .filter(|&s| !s.is_empty() && is_dense_connected_fast(&subspace_on(space, s)))
        .collect();
    candidates
        .iter()
        .copied()
        .filter(|&s| !candidates.iter().any(|&t| s != t && s.is_subset(t)))
        .collect()
}

fn check_p10(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            r.checked += 1;
            let lhs = locally_checked(&x, caps, r)?;
            let rhs = x.opens().iter().all(|&u| {
                let sub = subspace_on(&x, u);
                maximal_dense_connected_subsets(&sub)
                    .iter()
                    .all(|&s| sub.is_open(s))
            });
            if lhs != rhs {
                r.fail(
                    json!({
                        "space": x.to_json_value(),
                        "locally_dense_connected": lhs,
                        "open_components_in_open_subspaces": rhs,
                    }),
                    "open-components criterion disagrees with local dense-connectedness",
                );
            }
        }
    }
    r.note(
        "components of a subspace are read as its inclusion-maximal dense-connected subsets, \
         which need not be unique per point when the hypothesis fails"
            .to_string(),
    );
    Ok(())
}

fn check_t233(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    // Forward: a locally dense-connected space is the sum of its components.
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            if !locally_checked(&x, caps, r)? {
                continue;
            }
            r.checked += 1;
            let parts = dc_decomposition(&x, caps)?;
            let union = parts.iter().fold(PointSet::EMPTY, |acc, &p| acc.union(p));
            let disjoint = parts
                .iter()
                .enumerate()
                .all(|(i, &a)| parts[i + 1..].iter().all(|&b| a.intersect(b).is_empty()));
            if union != x.carrier() || !disjoint {
                r.fail(space_item(&x), "components do not partition the carrier");
                continue;
            }
            let mut parts_ok = true;
            for &part in &parts {
                if !dense_p(&subspace_on(&x, part), &CONNECTED, caps)? {
                    parts_ok = false;
                    r.fail(
                        json!({
                            "space": x.to_json_value(),
                            "component": points_of(part),
                        }),
                        "component subspace is not dense-connected",
                    );
                }
            }
            if !parts_ok {
                continue;
            }
            let part_spaces: Vec<FiniteSpace> =
                parts.iter().map(|&p| subspace_on(&x, p)).collect();
            let sum = FiniteSpace::topological_sum(&part_spaces)?;
            let order: Vec<usize> = parts.iter().flat_map(|p| p.iter()).collect();
            let mut relabeled: Vec<u64> = x
                .opens()
                .iter()
                .map(|o| {
                    order
                        .iter()
                        .enumerate()
                        .filter(|(_, &amb)| o.contains(amb))
                        .fold(0u64, |acc, (i, _)| acc | 1u64 << i)
                })
                .collect();
            relabeled.sort_unstable();
            let sum_opens: Vec<u64> = sum.opens().iter().map(|o| o.bits()).collect();
            if relabeled != sum_opens {
                r.fail(
                    json!({
                        "space": x.to_json_value(),
                        "components": parts.iter().map(|&p| points_of(p)).collect::<Vec<_>>(),
                        "sum": sum.to_json_value(),
                    }),
                    "sum of the components is not the original space",
                );
            }
        }
    }
    // Converse: sums of dense-connected spaces are locally dense-connected.
    let mut dc_spaces: Vec<Vec<FiniteSpace>> = vec![Vec::new()];
    for a in 1..=n.saturating_sub(1) {
        let mut tier = Vec::new();
        for x in enumerate_topologies(a, mode, caps)? {
            if dense_p(&x, &CONNECTED, caps)? {
                tier.push(x);
            }
        }
        dc_spaces.push(tier);
    }
    for a in 1..dc_spaces.len() {
        for b in 1..dc_spaces.len() {
            if a + b > n {
                continue;
            }
            for fa in &dc_spaces[a] {
                for fb in &dc_spaces[b] {
                    r.checked += 1;
                    let sum = FiniteSpace::topological_sum(&[fa.clone(), fb.clone()])?;
                    if !locally_dense_p(&sum, &CONNECTED, caps)? {
                        r.fail(
                            json!({ "parts": [fa.to_json_value(), fb.to_json_value()] }),
                            "binary sum of dense-connected spaces is not locally dense-connected",
                        );
                    }
                    for fc in dc_spaces.iter().skip(1).flatten() {
                        if a + b + fc.n() > n {
                            continue;
                        }
                        r.checked += 1;
                        let sum3 =
                            FiniteSpace::topological_sum(&[fa.clone(), fb.clone(), fc.clone()])?;
                        if !locally_dense_p(&sum3, &CONNECTED, caps)? {
                            r.fail(
                                json!({
                                    "parts": [
                                        fa.to_json_value(),
                                        fb.to_json_value(),
                                        fc.to_json_value(),
                                    ]
                                }),
                                "ternary sum of dense-connected spaces is not locally \
                                 dense-connected",
                            );
                        }
                    }
                }
            }
        }
    }
    r.note("converse instantiated on binary and ternary sums".to_string());
    Ok(())
}

fn check_t5555(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    let mut scanned = 0u64;
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            scanned += 1;
            if !x.classify_connectivity().non_separated_points {
                continue;
            }
            r.checked += 1;
            if !(is_dense_pathwise_fast(&x) && dense_p(&x, &PATH_CONNECTED, caps)?) {
                r.fail(
                    space_item(&x),
                    "no two points separated, yet not dense-pathwise-connected",
                );
            }
        }
    }
    r.note(format!(
        "spaces scanned: {scanned}; checked counts those with no two points separated"
    ));
    Ok(())
}

fn check_l2(n: usize, mode: Mode, caps: &Caps, r: &mut TheoremReport) -> Result<()> {
    for m in 0..=n {
        for x in enumerate_topologies(m, mode, caps)? {
            if !x.classify_connectivity().non_separated_points {
                continue;
            }
            for s in x.carrier().subsets() {
                r.checked += 1;
                if !subspace_on(&x, s)
                    .classify_connectivity()
                    .non_separated_points
                {
                    r.fail(
                        json!({
                            "space": x.to_json_value(),
                            "subset": points_of(s),
                        }),
                        "subspace separates two points of a space that separates none",
                    );
                }
            }
        }
    }
    Ok(())
}
