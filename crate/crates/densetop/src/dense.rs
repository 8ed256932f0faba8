//! Dense-subset property combinators, their fast characterizations, and
//! dense-connected components.
//!
//! For a property P of spaces, a space is *dense-P* when every dense subset,
//! viewed as a subspace, has P. This module provides the brute-force
//! combinators (`dense_p`, `one_dense_p`, `proper_one_dense_p`,
//! `locally_dense_p`, `hereditarily_p`), the fast deciders they are
//! cross-checked against, and the clopen decomposition into dense-connected
//! components that exists exactly on locally dense-connected spaces.

use crate::enumerate::{dense_subsets, enumerate_topologies, Caps, Mode};
use crate::error::{Error, Result};
use crate::point_set::PointSet;
use crate::space::FiniteSpace;
use std::collections::HashMap;

pub type SpacePredicate = fn(&FiniteSpace) -> bool;

/// A named, total, deterministic predicate on finite spaces.
#[derive(Debug, Clone, Copy)]
pub struct Property {
    pub name: &'static str,
    pub predicate: SpacePredicate,
}

fn pred_connected(x: &FiniteSpace) -> bool {
    x.connected_components().len() <= 1
}

fn pred_hyperconnected(x: &FiniteSpace) -> bool {
    x.classify_connectivity().hyperconnected
}

fn pred_ultraconnected(x: &FiniteSpace) -> bool {
    x.classify_connectivity().ultraconnected
}

fn pred_path_connected(x: &FiniteSpace) -> bool {
    x.classify_connectivity().path_connected
}

fn pred_t0(x: &FiniteSpace) -> bool {
    x.separation_profile().t0
}

fn pred_t1(x: &FiniteSpace) -> bool {
    x.separation_profile().t1
}

fn pred_hausdorff(x: &FiniteSpace) -> bool {
    x.separation_profile().hausdorff
}

// Every finite space is pseudocompact: continuous real-valued images are
// finite, hence bounded. Shipped as a named predicate so the combinators
// cover it uniformly.
fn pred_pseudocompact(_: &FiniteSpace) -> bool {
    true
}

fn pred_non_separated_points(x: &FiniteSpace) -> bool {
    x.classify_connectivity().non_separated_points
}

pub const CONNECTED: Property = Property {
    name: "connected",
    predicate: pred_connected,
};
pub const HYPERCONNECTED: Property = Property {
    name: "hyperconnected",
    predicate: pred_hyperconnected,
};
pub const ULTRACONNECTED: Property = Property {
    name: "ultraconnected",
    predicate: pred_ultraconnected,
};
pub const PATH_CONNECTED: Property = Property {
    name: "path_connected",
    predicate: pred_path_connected,
};
pub const T0: Property = Property {
    name: "t0",
    predicate: pred_t0,
};
pub const T1: Property = Property {
    name: "t1",
    predicate: pred_t1,
};
pub const HAUSDORFF: Property = Property {
    name: "hausdorff",
    predicate: pred_hausdorff,
};
pub const PSEUDOCOMPACT: Property = Property {
    name: "pseudocompact",
    predicate: pred_pseudocompact,
};
pub const NON_SEPARATED_POINTS: Property = Property {
    name: "non_separated_points",
    predicate: pred_non_separated_points,
};

pub const BASE_PROPERTIES: [Property; 9] = [
    CONNECTED,
    HYPERCONNECTED,
    ULTRACONNECTED,
    PATH_CONNECTED,
    T0,
    T1,
    HAUSDORFF,
    PSEUDOCOMPACT,
    NON_SEPARATED_POINTS,
];

pub fn base_property(name: &str) -> Result<&'static Property> {
    BASE_PROPERTIES
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownProperty(name.to_string()))
}

pub(crate) fn subspace_on(space: &FiniteSpace, s: PointSet) -> FiniteSpace {
    space
        .subspace(s)
        .expect("subset taken from the carrier")
        .space
}

/// Every dense subset has P as a subspace.
pub fn dense_p(space: &FiniteSpace, p: &Property, caps: &Caps) -> Result<bool> {
    Ok(dense_subsets(space, caps)?
        .into_iter()
        .all(|s| (p.predicate)(&subspace_on(space, s))))
}

/// Some dense subset has P as a subspace.
pub fn one_dense_p(space: &FiniteSpace, p: &Property, caps: &Caps) -> Result<bool> {
    Ok(dense_subsets(space, caps)?
        .into_iter()
        .any(|s| (p.predicate)(&subspace_on(space, s))))
}

/// Some proper dense subset has P as a subspace.
pub fn proper_one_dense_p(space: &FiniteSpace, p: &Property, caps: &Caps) -> Result<bool> {
    let carrier = space.carrier();
    Ok(dense_subsets(space, caps)?
        .into_iter()
        .filter(|&s| s != carrier)
        .any(|s| (p.predicate)(&subspace_on(space, s))))
}

/// For every point x and every neighborhood U of x there is a neighborhood
/// V of x with V ⊆ U whose subspace is dense-P.
///
/// Neighborhoods are arbitrary sets containing an open set containing x, so
/// it suffices to quantify U over open sets and V over the sets sandwiched
/// between the minimal open neighborhood of x and U. Subspace verdicts are
/// memoized per subset mask.
pub fn locally_dense_p(space: &FiniteSpace, p: &Property, caps: &Caps) -> Result<bool> {
    if space.n() > caps.max_subset_points {
        return Err(Error::CapExceeded {
            what: "subset scan points",
            requested: space.n() as u64,
            cap: caps.max_subset_points as u64,
        });
    }
    let mut memo: HashMap<u64, bool> = HashMap::new();
    for x in 0..space.n() {
        let ux = space
            .minimal_open_neighborhood(x)
            .expect("point in carrier");
        for &u in space.opens().iter().filter(|o| o.contains(x)) {
            let mut found = false;
            // subsets() ascends from the empty set, so V = U_x is tried first.
            for extra in u.minus(ux).subsets() {
                let v = ux.union(extra);
                let ok = match memo.get(&v.bits()) {
                    Some(&b) => b,
                    None => {
                        let b = dense_p(&subspace_on(space, v), p, caps)?;
                        memo.insert(v.bits(), b);
                        b
                    }
                };
                if ok {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every subspace (all 2^n of them) has P.
pub fn hereditarily_p(space: &FiniteSpace, p: &Property, caps: &Caps) -> Result<bool> {
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
        .all(|s| (p.predicate)(&subspace_on(space, s))))
}

/// A space with P and a closed / clopen / open subset whose subspace lacks P.
#[derive(Debug, Clone)]
pub struct HeredityCounterexample {
    pub space: FiniteSpace,
    pub subset: PointSet,
}

/// Empirical classification of how P passes to subspaces, over every labeled
/// space with at most `max_points` points. Evidence at scale, not a proof.
#[derive(Debug, Clone)]
pub struct HeredityReport {
    pub property: &'static str,
    pub max_points: usize,
    pub closed_hereditary: bool,
    pub clopen_hereditary: bool,
    pub open_hereditary: bool,
    pub closed_counterexample: Option<HeredityCounterexample>,
    pub clopen_counterexample: Option<HeredityCounterexample>,
    pub open_counterexample: Option<HeredityCounterexample>,
}

pub fn heredity_class(p: &Property, max_points: usize, caps: &Caps) -> Result<HeredityReport> {
    let mut report = HeredityReport {
        property: p.name,
        max_points,
        closed_hereditary: true,
        clopen_hereditary: true,
        open_hereditary: true,
        closed_counterexample: None,
        clopen_counterexample: None,
        open_counterexample: None,
    };
    for n in 0..=max_points {
        for space in enumerate_topologies(n, Mode::Labeled, caps)? {
            if !(p.predicate)(&space) {
                continue;
            }
            let opens: Vec<PointSet> = space.opens().to_vec();
            for s in space.closed_sets() {
                let holds = (p.predicate)(&subspace_on(&space, s));
                if !holds && report.closed_hereditary {
                    report.closed_hereditary = false;
                    report.closed_counterexample = Some(HeredityCounterexample {
                        space: space.clone(),
                        subset: s,
                    });
                }
                if !holds && space.is_open(s) && report.clopen_hereditary {
                    report.clopen_hereditary = false;
                    report.clopen_counterexample = Some(HeredityCounterexample {
                        space: space.clone(),
                        subset: s,
                    });
                }
            }
            for &s in &opens {
                if !(p.predicate)(&subspace_on(&space, s)) && report.open_hereditary {
                    report.open_hereditary = false;
                    report.open_counterexample = Some(HeredityCounterexample {
                        space: space.clone(),
                        subset: s,
                    });
                }
            }
            if !report.closed_hereditary && !report.clopen_hereditary && !report.open_hereditary {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// No two nonempty open sets are disjoint, decided through minimal
/// neighborhoods: every open containing x contains U_x, so disjoint opens
/// exist iff some pair of minimal neighborhoods is disjoint. Deliberately a
/// different formulation from the literal pairwise-opens check in
/// `classify_connectivity`, so the two can cross-validate.
pub fn is_dense_connected_fast(space: &FiniteSpace) -> bool {
    for x in 0..space.n() {
        for y in x + 1..space.n() {
            if space
                .min_neighborhood_unchecked(x)
                .intersect(space.min_neighborhood_unchecked(y))
                .is_empty()
            {
                return false;
            }
        }
    }
    true
}

/// Minimal-neighborhood form of local dense-connectedness.
///
/// Taking U = U_x in the sandwich definition forces V = U_x, so U_x must be a
/// dense-connected subspace; conversely V = U_x works inside every open
/// U ∋ x. Hence locally dense-P reduces to "every minimal neighborhood is a
/// dense-P subspace". Minimal neighborhoods of points inside U_x are already
/// contained in U_x, so for P = connected the subspace check collapses to
/// pairwise intersection of minimal neighborhoods within each U_x.
pub fn is_locally_dense_connected_fast(space: &FiniteSpace) -> bool {
    (0..space.n()).all(|x| {
        let ux = space.min_neighborhood_unchecked(x);
        ux.iter().all(|y| {
            ux.iter()
                .filter(|&z| z > y)
                .all(|z| {
                    !space
                        .min_neighborhood_unchecked(y)
                        .intersect(space.min_neighborhood_unchecked(z))
                        .is_empty()
                })
        })
    })
}

/// The specialization preorder is total: every pair of points is comparable.
pub fn is_dense_ultraconnected_fast(space: &FiniteSpace) -> bool {
    space.specialization_preorder().is_total()
}

/// First (lexicographic) incomparable pair, if any — the witness that the
/// space is not dense-ultraconnected.
pub fn dense_ultraconnected_witness(space: &FiniteSpace) -> Option<(usize, usize)> {
    let pre = space.specialization_preorder();
    for x in 0..space.n() {
        for y in x + 1..space.n() {
            if !pre.comparable(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// At finite scale path-connected coincides with connected on every
/// subspace, so dense-pathwise-connected is decided as dense-connected.
/// Totality of the specialization preorder (`non_separated_points`) is the
/// sufficient condition and must imply this value.
pub fn is_dense_pathwise_fast(space: &FiniteSpace) -> bool {
    is_dense_connected_fast(space)
}

/// Every finite space is dense-pseudocompact: all subspaces are finite,
/// hence pseudocompact. Kept as a named decider for uniform reporting and
/// for consistency checks against `max_real_range` and the clopen splitting.
pub fn is_dense_pseudocompact(_space: &FiniteSpace) -> bool {
    true
}

/// The dense-connected component of `x`: the union of all open
/// dense-connected sets containing `x`. Requires the space to be locally
/// dense-connected; elsewhere maximal dense-connected sets need not be
/// well-behaved and the call is refused.
pub fn dense_connected_component(space: &FiniteSpace, x: usize, caps: &Caps) -> Result<PointSet> {
    if x >= space.n() {
        return Err(Error::PointOutOfCarrier {
            point: x,
            n: space.n(),
        });
    }
    if !locally_dense_p(space, &CONNECTED, caps)? {
        return Err(Error::NotLocallyDenseConnected);
    }
    Ok(dc_of_point(space, x))
}

pub(crate) fn dc_of_point(space: &FiniteSpace, x: usize) -> PointSet {
    space
        .opens()
        .iter()
        .filter(|u| u.contains(x) && is_dense_connected_fast(&subspace_on(space, **u)))
        .fold(PointSet::EMPTY, |acc, &u| acc.union(u))
}

/// The partition of a locally dense-connected space into its dense-connected
/// components, ordered by smallest member. Errors with
/// `NotLocallyDenseConnected` when the hypothesis fails.
pub fn dc_decomposition(space: &FiniteSpace, caps: &Caps) -> Result<Vec<PointSet>> {
    if !locally_dense_p(space, &CONNECTED, caps)? {
        return Err(Error::NotLocallyDenseConnected);
    }
    let mut parts: Vec<PointSet> = Vec::new();
    let mut covered = PointSet::EMPTY;
    for x in 0..space.n() {
        if covered.contains(x) {
            continue;
        }
        let part = dc_of_point(space, x);
        covered = covered.union(part);
        parts.push(part);
    }
    Ok(parts)
}

/// Evaluates one of the named predicates available to `search` expressions:
/// the base property registry plus the dense-variant deciders, their
/// brute-force twins, and the shape shorthands.
pub fn eval_named_predicate(name: &str, space: &FiniteSpace, caps: &Caps) -> Result<bool> {
    if let Ok(p) = base_property(name) {
        return Ok((p.predicate)(space));
    }
    match name {
        "dense_connected" => Ok(is_dense_connected_fast(space)),
        "dense_connected_brute" => dense_p(space, &CONNECTED, caps),
        "dense_ultraconnected" => Ok(is_dense_ultraconnected_fast(space)),
        "dense_ultraconnected_brute" => dense_p(space, &ULTRACONNECTED, caps),
        "dense_pathwise_connected" => Ok(is_dense_pathwise_fast(space)),
        "dense_pseudocompact" => Ok(is_dense_pseudocompact(space)),
        "locally_dense_connected" => locally_dense_p(space, &CONNECTED, caps),
        "discrete" => Ok(space.opens().len() == 1usize << space.n()),
        "indiscrete" => Ok(space.opens().len() <= 2),
        other => Err(Error::UnknownProperty(other.to_string())),
    }
}

/// Names accepted by [`eval_named_predicate`].
pub fn predicate_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = BASE_PROPERTIES.iter().map(|p| p.name).collect();
    names.extend([
        "dense_connected",
        "dense_connected_brute",
        "dense_ultraconnected",
        "dense_ultraconnected_brute",
        "dense_pathwise_connected",
        "dense_pseudocompact",
        "locally_dense_connected",
        "discrete",
        "indiscrete",
    ]);
    names
}
