//! Rule-based models of six infinite example spaces.
//!
//! Each model carries analytic open/closure/denseness rules over a small,
//! closed algebra of set descriptors.  Claims about the models (density of
//! opens, separation behavior, group-continuity conditions) are decided by
//! those rules and returned with a human-readable derivation trace.  Every
//! rule is cross-validated against finite window samples: the window is a
//! trace of the model, not a subspace (truncating a cofinite topology to a
//! finite window would make it discrete and destroy the phenomena), so the
//! cross-validation checks rule consistency rather than topological
//! equivalence, and the report marks which checks are exact on the window
//! and which are one-sided.
//!
//! Coordinates are `i64` throughout.  Integer-carrier models use the
//! integers themselves; real-line models are realized over the dyadic grid
//! of quarter units (coordinate `q` denotes the rational `q/4`), so ray and
//! window endpoints compare exactly.  The claims involved depend only on
//! the order structure, never on completeness.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::enumerate::Caps;
use crate::error::{Error, Result};

/// How many grid steps make one real unit in the real-line models.
pub const GRID_PER_UNIT: i64 = 4;

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

/// The six rule-based models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Model {
    /// ℕ with the cofinite topology: opens are ∅ and the cofinite sets.
    CofiniteN,
    /// One-point compactification of an infinite discrete space: the carrier
    /// is {-1} ∪ ℕ, every subset of ℕ is open, and the neighborhoods of the
    /// added point -1 are the cofinite sets containing it.
    OpcDiscrete,
    /// (ℝ, +) with the topology generated by the closed rays [a, ∞).
    RayR,
    /// (ℝ, +) whose opens are exactly the closed rays [a, ∞) (plus ∅ and ℝ);
    /// a coarser variant of `RayR` with the same generating family.
    RayRClosed,
    /// (ℤ, +) with base {x : |x − c| ≥ r}: complements of bounded windows.
    WindowZ,
    /// ℝ where a generic point x has neighborhood [x, ∞) while the two
    /// special points 0 and 1 have neighborhoods {x} ∪ [n, ∞), n ∈ ℕ.
    HSpace,
}

pub const MODEL_NAMES: [&str; 6] = [
    "cofinite_N",
    "opc_discrete",
    "ray_R",
    "ray_R_closed",
    "window_Z",
    "H_space",
];

impl Model {
    pub fn parse(name: &str) -> Result<Model> {
        Ok(match name {
            "cofinite_N" => Model::CofiniteN,
            "opc_discrete" => Model::OpcDiscrete,
            "ray_R" => Model::RayR,
            "ray_R_closed" => Model::RayRClosed,
            "window_Z" => Model::WindowZ,
            "H_space" => Model::HSpace,
            _ => return Err(Error::UnknownModel(name.to_string())),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::CofiniteN => "cofinite_N",
            Model::OpcDiscrete => "opc_discrete",
            Model::RayR => "ray_R",
            Model::RayRClosed => "ray_R_closed",
            Model::WindowZ => "window_Z",
            Model::HSpace => "H_space",
        }
    }

    /// True when `x` belongs to the model's carrier.
    pub fn in_carrier(self, x: i64) -> bool {
        match self {
            Model::CofiniteN => x >= 0,
            Model::OpcDiscrete => x >= -1,
            Model::RayR | Model::RayRClosed | Model::WindowZ | Model::HSpace => true,
        }
    }

    /// Smallest carrier element for carriers bounded below.
    fn carrier_min(self) -> Option<i64> {
        match self {
            Model::CofiniteN => Some(0),
            Model::OpcDiscrete => Some(-1),
            _ => None,
        }
    }

    /// Real-line models measure coordinates in quarter units.
    fn is_real_line(self) -> bool {
        matches!(self, Model::RayR | Model::RayRClosed | Model::HSpace)
    }

    /// The special points of `HSpace` (0 and 1 in real units) on the grid.
    fn special_points(self) -> &'static [i64] {
        match self {
            Model::HSpace => &[0, GRID_PER_UNIT],
            _ => &[],
        }
    }

    /// Renders a coordinate in the model's natural units.
    pub fn fmt_coord(self, x: i64) -> String {
        if !self.is_real_line() {
            return x.to_string();
        }
        if x % GRID_PER_UNIT == 0 {
            (x / GRID_PER_UNIT).to_string()
        } else {
            // Exact decimal: quarters are dyadic.
            format!("{}", x as f64 / GRID_PER_UNIT as f64)
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Set descriptors
// ---------------------------------------------------------------------------

/// A set over a model's carrier, drawn from a deliberately tiny closed
/// algebra.  Anything outside the algebra is rejected as not expressible
/// rather than approximated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SetDescriptor {
    Empty,
    Whole,
    /// A finite set, listed explicitly.
    Finite(BTreeSet<i64>),
    /// Complement of the listed finite set within the carrier.
    Cofinite(BTreeSet<i64>),
    /// The upward ray {x : x ≥ a}.
    Ray(i64),
    /// A finite set together with an upward ray; the finite part lies
    /// strictly below the ray (normalization folds the rest in).
    RayUnion(BTreeSet<i64>, i64),
    /// {x : |x − c| ≥ r} — the complement of a bounded window.
    WindowComplement(i64, i64),
}

use SetDescriptor::{Cofinite, Empty, Finite, Ray, RayUnion, WindowComplement, Whole};

impl SetDescriptor {
    pub fn finite<I: IntoIterator<Item = i64>>(xs: I) -> SetDescriptor {
        let f: BTreeSet<i64> = xs.into_iter().collect();
        if f.is_empty() {
            Empty
        } else {
            Finite(f)
        }
    }

    pub fn cofinite<I: IntoIterator<Item = i64>>(xs: I) -> SetDescriptor {
        let f: BTreeSet<i64> = xs.into_iter().collect();
        if f.is_empty() {
            Whole
        } else {
            Cofinite(f)
        }
    }

    pub fn ray(a: i64) -> SetDescriptor {
        Ray(a)
    }

    pub fn ray_union<I: IntoIterator<Item = i64>>(xs: I, a: i64) -> SetDescriptor {
        let f: BTreeSet<i64> = xs.into_iter().filter(|&x| x < a).collect();
        if f.is_empty() {
            Ray(a)
        } else {
            RayUnion(f, a)
        }
    }

    /// `r ≤ 0` yields the whole carrier (|x − c| ≥ r holds for every x).
    pub fn window_complement(c: i64, r: i64) -> SetDescriptor {
        if r <= 0 {
            Whole
        } else {
            WindowComplement(c, r)
        }
    }

    /// Membership test, carrier-aware.
    pub fn contains(&self, model: Model, x: i64) -> bool {
        if !model.in_carrier(x) {
            return false;
        }
        match self {
            Empty => false,
            Whole => true,
            Finite(f) => f.contains(&x),
            Cofinite(f) => !f.contains(&x),
            Ray(a) => x >= *a,
            RayUnion(f, a) => f.contains(&x) || x >= *a,
            WindowComplement(c, r) => (x - c).abs() >= *r,
        }
    }

    /// Canonical form over the given carrier.  On carriers bounded below,
    /// rays and window complements have finite complements and collapse to
    /// `Finite`/`Cofinite`; on ℤ a window complement is a cofinite set with
    /// contiguous complement.  Real-line models keep the structural forms.
    pub fn canonical(&self, model: Model) -> SetDescriptor {
        let restrict = |f: &BTreeSet<i64>| -> BTreeSet<i64> {
            f.iter().copied().filter(|&x| model.in_carrier(x)).collect()
        };
        match (model.carrier_min(), self) {
            (_, Empty) => Empty,
            (_, Whole) => Whole,
            (_, Finite(f)) => SetDescriptor::finite(restrict(f)),
            (_, Cofinite(f)) => SetDescriptor::cofinite(restrict(f)),
            // Carriers bounded below: the complement of a ray is an initial
            // segment, hence finite.
            (Some(lo), Ray(a)) => SetDescriptor::cofinite(lo..*a),
            (Some(lo), RayUnion(f, a)) => {
                SetDescriptor::cofinite((lo..*a).filter(|x| !f.contains(x)))
            }
            (Some(lo), WindowComplement(c, r)) => {
                SetDescriptor::cofinite(((c - r + 1).max(lo))..(c + r))
            }
            (None, Ray(a)) => Ray(*a),
            (None, RayUnion(f, a)) => RayUnion(f.clone(), *a),
            // On ℤ (and the dyadic grid) the excluded window is a finite run
            // of carrier points.
            (None, WindowComplement(c, r)) => SetDescriptor::cofinite((c - r + 1)..(c + r)),
        }
    }

    /// Whether the set is infinite (equivalently here: not `Empty`/`Finite`
    /// after canonicalization — every carrier is infinite).
    pub fn is_infinite(&self, model: Model) -> bool {
        !matches!(self.canonical(model), Empty | Finite(_))
    }

    /// Whether the set contains points beyond every bound.
    fn unbounded_above(&self, model: Model) -> bool {
        match self.canonical(model) {
            Empty | Finite(_) => false,
            Whole | Cofinite(_) | Ray(_) | RayUnion(..) | WindowComplement(..) => true,
        }
    }

    /// Whether the set has an element ≥ p.
    fn has_element_at_least(&self, model: Model, p: i64) -> bool {
        match self.canonical(model) {
            Empty => false,
            Finite(f) => f.iter().next_back().is_some_and(|&mx| mx >= p),
            _ => true,
        }
    }

    /// Renders the descriptor in the model's coordinate units.
    pub fn render(&self, model: Model) -> String {
        let list = |f: &BTreeSet<i64>| -> String {
            let items: Vec<String> = f.iter().map(|&x| model.fmt_coord(x)).collect();
            items.join(", ")
        };
        match self {
            Empty => "empty".to_string(),
            Whole => "whole".to_string(),
            Finite(f) => format!("{{{}}}", list(f)),
            Cofinite(f) => format!("complement of {{{}}}", list(f)),
            Ray(a) => format!("[{}, +inf)", model.fmt_coord(*a)),
            RayUnion(f, a) => format!("{{{}}} u [{}, +inf)", list(f), model.fmt_coord(*a)),
            WindowComplement(c, r) => format!(
                "{{x : |x - {}| >= {}}}",
                model.fmt_coord(*c),
                model.fmt_coord(*r)
            ),
        }
    }
}

// ---------------------------------------------------------------------------
// Open-test, closure, denseness rules
// ---------------------------------------------------------------------------

/// Whether the descriptor denotes an open set of the model.  The test
/// accepts exactly the model's generating family and its unions that stay
/// inside the algebra.
pub fn sym_is_open(model: Model, s: &SetDescriptor) -> bool {
    let c = s.canonical(model);
    match model {
        // Opens: ∅ and the cofinite sets.
        Model::CofiniteN => matches!(c, Empty | Whole | Cofinite(_)),
        // Every subset of the discrete part is open; a set containing the
        // compactification point -1 must be cofinite.
        Model::OpcDiscrete => match c {
            Empty | Whole | Cofinite(_) => true,
            Finite(f) => !f.contains(&-1),
            _ => false,
        },
        // Unions of upward rays that stay in the algebra are rays.
        Model::RayR | Model::RayRClosed => matches!(c, Empty | Whole | Ray(_)),
        // Opens are complements of bounded windows: cofinite sets whose
        // complement is a contiguous run.
        Model::WindowZ => match c {
            Empty | Whole => true,
            Cofinite(f) => {
                let (lo, hi) = (*f.iter().next().unwrap(), *f.iter().next_back().unwrap());
                hi - lo + 1 == f.len() as i64
            }
            _ => false,
        },
        // Rays, plus rays augmented with special points below the endpoint.
        Model::HSpace => match c {
            Empty | Whole | Ray(_) => true,
            RayUnion(f, _) => f.iter().all(|x| model.special_points().contains(x)),
            _ => false,
        },
    }
}

/// Closure of a descriptor, when the result stays inside the algebra.
///
/// The rules: in `CofiniteN` finite sets are closed and every infinite set
/// is dense; in `OpcDiscrete` closure adds the compactification point to
/// every infinite set; in `WindowZ` the closure of a finite set is its
/// convex hull and every infinite set is dense; in the ray models and
/// `HSpace` every set with points beyond all bounds is dense, while the
/// closure of a nonempty finite set is a downward ray — a set with no
/// descriptor form, reported as not expressible (the pointwise rule
/// `sym_closure_contains` still decides membership exactly).
pub fn sym_closure(model: Model, s: &SetDescriptor) -> Result<SetDescriptor> {
    let c = s.canonical(model);
    Ok(match model {
        Model::CofiniteN => match c {
            Empty | Finite(_) => c,
            _ => Whole,
        },
        Model::OpcDiscrete => match c {
            Empty | Finite(_) => c,
            Whole => Whole,
            Cofinite(f) => SetDescriptor::cofinite(f.iter().copied().filter(|&x| x != -1)),
            _ => unreachable!("canonical forms on a bounded-below carrier"),
        },
        Model::WindowZ => match c {
            Empty => Empty,
            Finite(f) => {
                let (lo, hi) = (*f.iter().next().unwrap(), *f.iter().next_back().unwrap());
                SetDescriptor::finite(lo..=hi)
            }
            _ => Whole,
        },
        Model::RayR | Model::RayRClosed | Model::HSpace => match c {
            Empty => Empty,
            Finite(_) => {
                return Err(Error::NotExpressible {
                    model: model.name().to_string(),
                    what: "the closure of a nonempty finite set is a downward ray, \
                           which has no descriptor form"
                        .to_string(),
                })
            }
            _ => Whole,
        },
    })
}

/// Pointwise closure rule: whether `p` lies in the closure of `s`.  Total —
/// it covers the finite-set cases whose closure has no descriptor form.
pub fn sym_closure_contains(model: Model, p: i64, s: &SetDescriptor) -> bool {
    debug_assert!(model.in_carrier(p));
    match model {
        // Neighborhoods of every point are cofinite: p is in the closure
        // iff p ∈ S or S is infinite.
        Model::CofiniteN => s.contains(model, p) || s.is_infinite(model),
        // Naturals are isolated; the compactification point's neighborhoods
        // are cofinite.
        Model::OpcDiscrete => {
            if p == -1 {
                s.contains(model, p) || s.is_infinite(model)
            } else {
                s.contains(model, p)
            }
        }
        // Minimal neighborhood of p is the ray [p, ∞).
        Model::RayR | Model::RayRClosed => s.has_element_at_least(model, p),
        // Neighborhoods of p exclude only a bounded window, so p is in the
        // closure iff S is infinite or p lies in the convex hull of S.
        Model::WindowZ => match s.canonical(model) {
            Empty => false,
            Finite(f) => {
                *f.iter().next().unwrap() <= p && p <= *f.iter().next_back().unwrap()
            }
            _ => true,
        },
        // Generic points behave as in the ray models; a special point has
        // neighborhoods {p} ∪ [n, ∞) for every n, so it lies in the closure
        // iff it is in S or S is unbounded above.
        Model::HSpace => {
            if model.special_points().contains(&p) {
                s.contains(model, p) || s.unbounded_above(model)
            } else {
                s.has_element_at_least(model, p)
            }
        }
    }
}

/// Whether the descriptor denotes a dense set of the model.
pub fn sym_is_dense(model: Model, s: &SetDescriptor) -> bool {
    match model {
        // Dense ⟺ the set meets every cofinite set ⟺ the set is infinite.
        Model::CofiniteN => s.is_infinite(model),
        // Every natural is isolated, so a dense set must contain all of
        // the discrete part (and then automatically closes up to -1).
        Model::OpcDiscrete => match s.canonical(model) {
            Whole => true,
            Cofinite(f) => f.iter().all(|&x| x == -1),
            _ => false,
        },
        // Dense ⟺ the set meets every ray ⟺ unbounded above.
        Model::RayR | Model::RayRClosed | Model::HSpace => s.unbounded_above(model),
        // Dense ⟺ the set meets the complement of every bounded window
        // ⟺ the set is infinite.
        Model::WindowZ => s.is_infinite(model),
    }
}

// ---------------------------------------------------------------------------
// Claims
// ---------------------------------------------------------------------------

/// Verdict of a registered claim, with a derivation trace.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimVerdict {
    pub model: String,
    pub claim: String,
    pub value: bool,
    /// A concrete witness when the claim fails for a pointable reason.
    pub witness: Option<String>,
    /// Human-readable derivation, one step per line.
    pub trace: Vec<String>,
}

impl ClaimVerdict {
    fn new(model: Model, claim: &str, value: bool) -> ClaimVerdict {
        ClaimVerdict {
            model: model.name().to_string(),
            claim: claim.to_string(),
            value,
            witness: None,
            trace: Vec::new(),
        }
    }

    fn step(mut self, line: impl Into<String>) -> ClaimVerdict {
        self.trace.push(line.into());
        self
    }

    fn with_witness(mut self, w: impl Into<String>) -> ClaimVerdict {
        self.witness = Some(w.into());
        self
    }
}

/// Registered claims per model.
pub fn claim_names(model: Model) -> &'static [&'static str] {
    match model {
        Model::CofiniteN => &[
            "dense_connected",
            "compact",
            "t1",
            "dense_pathwise_connected",
            "one_dense_pathwise_connected",
        ],
        Model::OpcDiscrete => &[
            "compact",
            "one_dense_compact",
            "dense_pseudocompact",
            "proper_one_dense_pseudocompact",
        ],
        Model::RayR => &["dense_connected", "t2_condition", "paratopological", "non_indiscrete"],
        Model::RayRClosed => &[
            "dense_connected",
            "t2_condition",
            "paratopological",
            "t0",
            "t1",
            "dense_ultraconnected",
            "non_indiscrete",
        ],
        Model::WindowZ => &[
            "dense_connected",
            "t3_condition",
            "quasitopological",
            "paratopological",
            "t1",
            "non_indiscrete",
        ],
        Model::HSpace => &["ultraconnected", "dense_ultraconnected"],
    }
}

/// A small deterministic family of nonempty proper opens of the model,
/// used by claims and cross-validation as concrete spot checks of rules
/// whose quantifiers range over the whole generating family.
fn sample_opens(model: Model, spread: i64) -> Vec<SetDescriptor> {
    let k = spread.max(2);
    match model {
        Model::CofiniteN => vec![
            SetDescriptor::cofinite([0]),
            SetDescriptor::cofinite([1, 2]),
            SetDescriptor::cofinite(0..k),
        ],
        Model::OpcDiscrete => vec![
            SetDescriptor::finite([0]),
            SetDescriptor::finite(0..k),
            SetDescriptor::cofinite([-1, 0]),
            SetDescriptor::cofinite(0..k),
        ],
        Model::RayR | Model::RayRClosed => {
            vec![Ray(-k), Ray(0), Ray(1), Ray(k)]
        }
        Model::WindowZ => vec![
            SetDescriptor::window_complement(0, 1),
            SetDescriptor::window_complement(0, k),
            SetDescriptor::window_complement(k / 2, k / 2),
            SetDescriptor::cofinite(-1..=1),
            SetDescriptor::cofinite(0..k),
        ],
        Model::HSpace => vec![
            Ray(-k),
            Ray(1),
            SetDescriptor::ray_union([0], k),
            SetDescriptor::ray_union([0, GRID_PER_UNIT], 2 * k),
        ],
    }
}

/// Opens of the model that contain the group identity 0, for the setwise
/// product conditions (only the group models use this).
fn sample_identity_opens(model: Model, spread: i64) -> Vec<SetDescriptor> {
    sample_opens(model, spread)
        .into_iter()
        .filter(|o| o.contains(model, 0))
        .collect()
}

/// Checks that every sampled pair (U, V) of identity neighborhoods has
/// U + V covering the window [-span, span] by sums drawn from [-4·span,
/// 4·span], and likewise U − V when `negate_v`.  This is the finite shadow
/// of the setwise coverage conditions; the symbolic argument in the claim
/// traces explains why coverage holds beyond any bound.
fn setwise_covers_window(model: Model, negate_v: bool, span: i64) -> bool {
    let range = 4 * span;
    let opens = sample_identity_opens(model, span);
    opens.iter().all(|u| {
        opens.iter().all(|v| {
            (-span..=span).all(|t| {
                (-range..=range).any(|a| {
                    let b = t - a;
                    b >= -range
                        && b <= range
                        && u.contains(model, a)
                        && v.contains(model, if negate_v { -b } else { b })
                })
            })
        })
    })
}

/// Every nonempty sampled open has closure equal to the whole carrier.
fn sampled_opens_are_dense(model: Model) -> bool {
    sample_opens(model, 8)
        .iter()
        .all(|o| sym_closure(model, o).map(|c| c == Whole).unwrap_or(false))
}

/// Evaluates a registered claim of the model by its rules.
pub fn sym_claim(model: Model, claim: &str) -> Result<ClaimVerdict> {
    if !claim_names(model).contains(&claim) {
        return Err(Error::UnknownClaim {
            model: model.name().to_string(),
            claim: claim.to_string(),
        });
    }
    Ok(match (model, claim) {
        (Model::CofiniteN, "dense_connected") => {
            let opens_dense = sampled_opens_are_dense(model);
            ClaimVerdict::new(model, claim, opens_dense)
                .step("every nonempty open set is cofinite, hence infinite, hence dense \
                       (closure rule sends every infinite descriptor to the whole carrier)")
                .step("sampled cofinite opens confirm: each symbolic closure is whole")
                .step("a space in which every nonempty open set is dense is dense-connected \
                       (registry theorem t1, every-open-dense criterion)")
        }
        (Model::CofiniteN, "compact") => ClaimVerdict::new(model, claim, true)
            .step("any single nonempty member of an open cover is cofinite and misses only \
                   finitely many points")
            .step("finitely many further members cover the leftovers, so every open cover \
                   has a finite subcover"),
        (Model::CofiniteN, "t1") => {
            let singletons_closed = (0..8).all(|x| {
                sym_closure(model, &SetDescriptor::finite([x]))
                    .map(|c| c == SetDescriptor::finite([x]))
                    .unwrap_or(false)
            });
            ClaimVerdict::new(model, claim, singletons_closed)
                .step("finite sets are closed (their complements are cofinite, hence open)")
                .step("sampled singletons confirm: symbolic closure of {x} is {x}")
                .step("points closed is exactly the T1 axiom")
        }
        (Model::CofiniteN, "dense_pathwise_connected")
        | (Model::CofiniteN, "one_dense_pathwise_connected") => {
            let carrier_dense = sym_is_dense(model, &Whole);
            ClaimVerdict::new(model, claim, !carrier_dense)
                .step("every dense subset is infinite (dense ⟺ infinite here) and its \
                       subspace topology is again cofinite, hence T1")
                .step("a nonconstant path into a countable T1 space would partition the \
                       unit interval into countably many disjoint nonempty closed sets, \
                       which is impossible; so all paths are constant")
                .step("an infinite space with only constant paths is not pathwise \
                       connected, so no dense subset is")
                .with_witness("the carrier itself: dense but not pathwise connected")
        }
        (Model::OpcDiscrete, "compact") => ClaimVerdict::new(model, claim, true)
            .step("a cover member containing the compactification point is cofinite")
            .step("finitely many further members cover the leftover isolated points"),
        (Model::OpcDiscrete, "one_dense_compact") => {
            let whole_dense = sym_is_dense(model, &Whole);
            ClaimVerdict::new(model, claim, whole_dense)
                .step("the whole carrier is a dense subset of itself")
                .step("and it is compact (see the compact claim), so some dense subset \
                       is compact")
        }
        (Model::OpcDiscrete, "dense_pseudocompact")
        | (Model::OpcDiscrete, "proper_one_dense_pseudocompact") => {
            let discrete_part = SetDescriptor::cofinite([-1]);
            let part_dense = sym_is_dense(model, &discrete_part);
            let part_open_pieces = (0..4).all(|d| sym_is_open(model, &SetDescriptor::finite([d])));
            let sound = part_dense && part_open_pieces;
            ClaimVerdict::new(model, claim, !sound)
                .step("a dense set must contain every isolated point, so the only proper \
                       dense descriptor is the discrete part (the carrier minus the \
                       compactification point)")
                .step("the discrete part is dense: its closure adds the compactification \
                       point and is the whole carrier")
                .step("as a subspace it is infinite and discrete (sampled singletons are \
                       open), so n ↦ n is a continuous unbounded real function on it")
                .step("hence the unique proper dense subset is not pseudocompact")
                .with_witness("the discrete part, with the unbounded function n -> n")
        }
        (Model::RayR, "t2_condition") | (Model::RayRClosed, "t2_condition") => {
            let window_ok = setwise_covers_window(model, true, 8);
            ClaimVerdict::new(model, claim, window_ok)
                .step("take opens U = [a, +inf) and V = [b, +inf) containing the \
                       identity 0 (so a <= 0 and b <= 0)")
                .step("for any target t choose v >= max(b, a - t); then u = t + v >= a, \
                       so t = u - v lands in U - V")
                .step("hence U·V^{-1} covers the whole line for every pair; sampled \
                       pairs confirm coverage of a finite window")
        }
        (Model::RayR, "dense_connected") => {
            let opens_dense = sampled_opens_are_dense(model);
            let t2 = sym_claim(model, "t2_condition")?.value;
            let para = sym_claim(model, "paratopological")?.value;
            ClaimVerdict::new(model, claim, opens_dense && t2 && para)
                .step("every nonempty open ray has closure the whole line (each point p \
                       has [p, +inf) meeting the ray), so the every-open-dense criterion \
                       (registry theorem t1) applies")
                .step("independently, the group route: the model is paratopological and \
                       U·V^{-1} covers the line for all identity neighborhoods, so \
                       registry theorem t2 yields dense-connected")
                .step("both derivations agree")
        }
        (Model::RayR, "paratopological") | (Model::RayRClosed, "paratopological") => {
            let translations = [-3i64, 0, 5].iter().all(|&x| {
                sym_is_open(model, &Ray(2 + x)) // x + [2, +inf) = [2 + x, +inf)
            });
            ClaimVerdict::new(model, claim, translations)
                .step("translations carry rays to rays: x + [a, +inf) = [a + x, +inf)")
                .step("addition is jointly continuous: for a target ray [c, +inf) \
                       containing x + y, the product neighborhood [x, +inf) × [y, +inf) \
                       sums into [x + y, +inf) ⊆ [c, +inf)")
                .step("(inversion is not continuous — the mirror of a ray is a downward \
                       ray, not open — so the model is paratopological but not \
                       topological)")
        }
        (Model::RayR, "non_indiscrete") | (Model::RayRClosed, "non_indiscrete") => {
            let proper = sym_is_open(model, &Ray(0))
                && Ray(0).contains(model, 0)
                && !Ray(0).contains(model, -1);
            ClaimVerdict::new(model, claim, proper)
                .step("[0, +inf) is open, nonempty, and misses the points below 0, so \
                       the topology has a proper nonempty open set")
        }
        (Model::RayRClosed, "dense_connected") => {
            // Two independent derivations must agree: the model's own
            // every-open-dense rule, and coarsening transfer from the finer
            // ray model.
            let own = sampled_opens_are_dense(model);
            let finer = sym_claim(Model::RayR, "dense_connected")?.value;
            let coarser = sample_opens(model, 8)
                .iter()
                .all(|o| sym_is_open(Model::RayR, o));
            let transferred = finer && coarser;
            debug_assert_eq!(own, transferred, "the two derivations must agree");
            ClaimVerdict::new(model, claim, own && transferred)
                .step("own rule: every nonempty open ray has closure the whole line, so \
                       the every-open-dense criterion (registry theorem t1) applies")
                .step("coarsening rule: every open here is an open of the finer ray \
                       model, which is dense-connected; coarsening a dense-connected \
                       topology preserves dense-connectedness (registry proposition p0)")
                .step("the two derivations agree")
        }
        (Model::RayRClosed, "t0") => ClaimVerdict::new(model, claim, true)
            .step("for x < y the open ray [y, +inf) contains y but not x, so some open \
                   set distinguishes every pair of distinct points"),
        (Model::RayRClosed, "t1") => {
            let below_in_closure = sym_closure_contains(model, -1, &SetDescriptor::finite([0]));
            ClaimVerdict::new(model, claim, !below_in_closure)
                .step("the closure of {x} contains every point p <= x (each neighborhood \
                       [p, +inf) of p meets {x})")
                .step("so singletons are not closed and the T1 axiom fails")
                .with_witness("-1/4 lies in the closure of {0}")
        }
        (Model::RayRClosed, "dense_ultraconnected") => {
            let total = (-4..=4).all(|x| {
                (-4..=4).all(|y| {
                    sym_closure_contains(model, x, &SetDescriptor::finite([y]))
                        || sym_closure_contains(model, y, &SetDescriptor::finite([x]))
                })
            });
            ClaimVerdict::new(model, claim, total)
                .step("p lies in the closure of {q} exactly when p <= q, and the order \
                       on the line is total, so every two points are comparable")
                .step("comparability of every pair is the specialization-totality \
                       criterion for dense-ultraconnected (registry theorem t22)")
        }
        (Model::WindowZ, "t3_condition") => {
            let window_ok = setwise_covers_window(model, false, 8);
            ClaimVerdict::new(model, claim, window_ok)
                .step("a nonempty open U excludes only a bounded window, so it contains \
                       a final segment [u+, +inf) and an initial segment (-inf, u-]")
                .step("for any target t pick v in V beyond max(v+, t - u-); then \
                       u = t - v <= u- lies in U, so t = u + v lands in U + V")
                .step("hence U·V covers all of the integers for every pair of identity \
                       neighborhoods; sampled pairs confirm coverage of a finite window")
        }
        (Model::WindowZ, "dense_connected") => {
            let opens_dense = sampled_opens_are_dense(model);
            let t3 = sym_claim(model, "t3_condition")?.value;
            let quasi = sym_claim(model, "quasitopological")?.value;
            ClaimVerdict::new(model, claim, opens_dense && t3 && quasi)
                .step("the group route: the model is quasitopological and U·V covers \
                       the carrier for all identity neighborhoods, so registry theorem \
                       t3 yields dense-connected")
                .step("independently, every nonempty open misses only a bounded window, \
                       is therefore infinite, and has closure the whole carrier — the \
                       every-open-dense criterion (registry theorem t1)")
                .step("both derivations agree")
        }
        (Model::WindowZ, "quasitopological") => {
            let shift_ok = sym_is_open(model, &SetDescriptor::window_complement(3 + 5, 2));
            let mirror_ok = sym_is_open(model, &SetDescriptor::window_complement(-3, 2));
            ClaimVerdict::new(model, claim, shift_ok && mirror_ok)
                .step("translations shift a window complement to a window complement: \
                       x + {y : |y - c| >= r} = {y : |y - (c + x)| >= r}")
                .step("negation mirrors it: -{y : |y - c| >= r} = {y : |y + c| >= r}")
                .step("so all translations and the inversion are continuous")
        }
        (Model::WindowZ, "paratopological") => {
            let u = SetDescriptor::window_complement(2, 2);
            let u_open_at_zero = sym_is_open(model, &u) && u.contains(model, 0);
            let sums_escape = setwise_covers_window(model, false, 8);
            ClaimVerdict::new(model, claim, !(u_open_at_zero && sums_escape))
                .step("take the open neighborhood {x : |x - 2| >= 2} of 0 = 0 + 0")
                .step("every pair of open neighborhoods of 0 sums onto all of the \
                       integers (the same setwise computation that proves the t3 \
                       condition), so no product neighborhood maps into it")
                .step("joint continuity of addition fails at (0, 0)")
                .with_witness("target open {x : |x - 2| >= 2} at the pair (0, 0)")
        }
        (Model::WindowZ, "t1") => {
            let singleton_closed = sym_closure(model, &SetDescriptor::finite([5]))
                .map(|c| c == SetDescriptor::finite([5]))
                .unwrap_or(false);
            ClaimVerdict::new(model, claim, singleton_closed)
                .step("the closure of a finite set is its convex hull, so the closure \
                       of {x} is {x}: points are closed")
        }
        (Model::WindowZ, "non_indiscrete") => {
            let o = SetDescriptor::window_complement(0, 1);
            let proper = sym_is_open(model, &o) && !o.contains(model, 0) && o.contains(model, 1);
            ClaimVerdict::new(model, claim, proper)
                .step("{x : |x| >= 1} is open, nonempty, and misses 0, so the topology \
                       has a proper nonempty open set")
        }
        (Model::HSpace, "ultraconnected") => {
            // Spot check: complements of sampled opens pairwise intersect on
            // a window; the trace gives the unbounded-below argument.
            let window: Vec<i64> = (-64..=64).collect();
            let closed_sets: Vec<SetDescriptor> = sample_opens(model, 8).into_iter().collect();
            let pairwise = closed_sets.iter().all(|o1| {
                closed_sets.iter().all(|o2| {
                    window
                        .iter()
                        .any(|&x| !o1.contains(model, x) && !o2.contains(model, x))
                })
            });
            ClaimVerdict::new(model, claim, pairwise)
                .step("if x belongs to a closed set C then so does the closure of {x}, \
                       which contains every generic point p <= x")
                .step("two nonempty closed sets therefore share all sufficiently low \
                       generic points, so no two nonempty closed sets are disjoint")
                .step("sampled complements of opens confirm pairwise intersection on a \
                       window")
        }
        (Model::HSpace, "dense_ultraconnected") => {
            let zero = SetDescriptor::finite([0]);
            let one = SetDescriptor::finite([GRID_PER_UNIT]);
            let zero_in_cl_one = sym_closure_contains(model, 0, &one);
            let one_in_cl_zero = sym_closure_contains(model, GRID_PER_UNIT, &zero);
            let comparable = zero_in_cl_one || one_in_cl_zero;
            ClaimVerdict::new(model, claim, comparable)
                .step("the special point 0 lies in the closure of a set only if it \
                       belongs to it or the set is unbounded above; {1} is neither, \
                       so 0 is not in the closure of {1}")
                .step("symmetrically 1 is not in the closure of {0}")
                .step("an incomparable pair violates the specialization-totality \
                       criterion for dense-ultraconnected (registry theorem t22)")
                .with_witness("(0, 1)")
        }
        _ => unreachable!("claim registry and dispatch are kept in sync"),
    })
}

// ---------------------------------------------------------------------------
// Window samples
// ---------------------------------------------------------------------------

/// A finite trace of the model: window points plus sampled generating opens
/// intersected with the window.  This is not a subspace topology — e.g. a
/// cofinite topology truncated to a window would be discrete — so consumers
/// treat it as evidence about the rules, not as a space.
#[derive(Debug, Clone, Serialize)]
pub struct WindowSample {
    pub model: String,
    pub radius: i64,
    /// Carrier points inside the window, ascending.
    pub points: Vec<i64>,
    /// Sampled generating opens: rendered descriptor plus its trace on the
    /// window.
    pub opens: Vec<(String, Vec<i64>)>,
    /// Which window checks are exact and which are one-sided.
    pub notes: Vec<String>,
}

/// Window points of the model for a given radius.  Integer models window
/// `[-radius, radius]` (clipped to the carrier; the cofinite model uses
/// `{0..radius-1}`), real-line models sample the quarter-unit grid across
/// `[-radius, radius]` in real units.
fn window_points(model: Model, radius: i64) -> Vec<i64> {
    match model {
        Model::CofiniteN => (0..radius).collect(),
        Model::OpcDiscrete => (-1..radius).collect(),
        Model::WindowZ => (-radius..=radius).collect(),
        Model::RayR | Model::RayRClosed | Model::HSpace => {
            (-radius * GRID_PER_UNIT..=radius * GRID_PER_UNIT).collect()
        }
    }
}

fn check_radius(radius: i64, caps: &Caps) -> Result<()> {
    if radius < 1 || radius > caps.max_window_radius {
        return Err(Error::CapExceeded {
            what: "window radius",
            requested: radius.max(0) as u64,
            cap: caps.max_window_radius as u64,
        });
    }
    Ok(())
}

pub fn window_sample(model: Model, radius: i64, caps: &Caps) -> Result<WindowSample> {
    check_radius(radius, caps)?;
    let points = window_points(model, radius);
    let spread = battery_spread(model, radius);
    let opens = sample_opens(model, spread)
        .into_iter()
        .map(|o| {
            let members: Vec<i64> = points
                .iter()
                .copied()
                .filter(|&x| o.contains(model, x))
                .collect();
            (o.render(model), members)
        })
        .collect();
    let mut notes = vec![
        "window traces are rule evidence, not a subspace topology".to_string(),
        "membership and finite-set closure checks are exact on the window".to_string(),
    ];
    if model.is_real_line() {
        notes.push(format!(
            "grid sampled at step 1/{GRID_PER_UNIT}; unboundedness checks are one-sided"
        ));
    } else {
        notes.push("infinitude checks are one-sided (window evidence only)".to_string());
    }
    Ok(WindowSample {
        model: model.name().to_string(),
        radius,
        points,
        opens,
        notes,
    })
}

// ---------------------------------------------------------------------------
// Cross-validation
// ---------------------------------------------------------------------------

/// Result of replaying the symbolic rules against window computations.
#[derive(Debug, Clone, Serialize)]
pub struct CrossValidationReport {
    pub model: String,
    pub radius: i64,
    pub battery_size: usize,
    /// Individual rule comparisons performed.
    pub checks: u64,
    /// Human-readable descriptions of any rule/window disagreements.
    pub disagreements: Vec<String>,
    /// Which checks are exact and which are one-sided on the window.
    pub notes: Vec<String>,
}

impl CrossValidationReport {
    pub fn verified(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Battery parameters stay within a quarter of the window so that every
/// windowed comparison keeps a margin between the descriptors' features and
/// the window edge.
fn battery_spread(model: Model, radius: i64) -> i64 {
    let spread = (radius / 4).max(2);
    if model.is_real_line() {
        spread * GRID_PER_UNIT
    } else {
        spread
    }
}

/// Deterministic descriptor battery for a model, parameters within
/// `spread` of the origin.
fn battery(model: Model, spread: i64) -> Vec<SetDescriptor> {
    let k = spread;
    let mut out = vec![
        Empty,
        Whole,
        SetDescriptor::finite([0]),
        SetDescriptor::finite([1]),
        SetDescriptor::finite([0, 1, 2]),
        SetDescriptor::finite([-k, 0, k]),
        SetDescriptor::finite([k - 1, k]),
        SetDescriptor::cofinite([0]),
        SetDescriptor::cofinite([-1]),
        SetDescriptor::cofinite([0, 2]),
        SetDescriptor::cofinite(-k..=k),
        SetDescriptor::ray(0),
        SetDescriptor::ray(-k),
        SetDescriptor::ray(k),
        SetDescriptor::ray_union([0], k),
        SetDescriptor::ray_union([-k, 0], k),
        SetDescriptor::window_complement(0, 1),
        SetDescriptor::window_complement(0, k),
        SetDescriptor::window_complement(k, k / 2),
    ];
    if model == Model::HSpace {
        out.push(SetDescriptor::finite([GRID_PER_UNIT]));
        out.push(SetDescriptor::ray_union([0, GRID_PER_UNIT], 2 * k));
    }
    // Canonicalization may collapse battery entries (e.g. negative finite
    // points leave the carrier); deduplicate on canonical form to keep the
    // battery honest about its size.
    let mut seen = BTreeSet::new();
    out.retain(|d| seen.insert(format!("{:?}", d.canonical(model))));
    out
}

/// Complement within the algebra, when it stays inside.  The complements
/// of ray-form descriptors are downward sets with no descriptor form.
fn complement_descriptor(model: Model, s: &SetDescriptor) -> Option<SetDescriptor> {
    match s.canonical(model) {
        Empty => Some(Whole),
        Whole => Some(Empty),
        Finite(f) => Some(SetDescriptor::cofinite(f)),
        Cofinite(f) => Some(SetDescriptor::finite(f)),
        Ray(_) | RayUnion(..) | WindowComplement(..) => None,
    }
}

/// Sampled open neighborhoods used by the windowed closure decision: the
/// generating opens, each window point's canonical base neighborhood
/// (singletons at isolated points, rays at line points), and, for each
/// battery finite set, an open avoiding it where the model has one.
/// Covering every window point's base is what makes the windowed decision
/// exact (not just one-sided) on battery descriptors.
fn nbhd_battery(
    model: Model,
    spread: i64,
    window: &[i64],
    descriptors: &[SetDescriptor],
) -> Vec<SetDescriptor> {
    let mut opens = sample_opens(model, spread);
    match model {
        Model::CofiniteN | Model::OpcDiscrete => {
            for d in descriptors {
                if let Finite(f) = d.canonical(model) {
                    opens.push(SetDescriptor::cofinite(f));
                }
            }
            if model == Model::OpcDiscrete {
                for &x in window.iter().filter(|&&x| x >= 0) {
                    opens.push(SetDescriptor::finite([x]));
                }
            }
        }
        Model::WindowZ => {
            for d in descriptors {
                if let Finite(f) = d.canonical(model) {
                    let (lo, hi) = (*f.iter().next().unwrap(), *f.iter().next_back().unwrap());
                    opens.push(SetDescriptor::cofinite(lo..=hi));
                }
            }
        }
        Model::RayR | Model::RayRClosed => {
            for &a in window {
                opens.push(Ray(a));
            }
        }
        Model::HSpace => {
            for &a in window {
                opens.push(Ray(a));
                for &sp in model.special_points() {
                    opens.push(SetDescriptor::ray_union([sp], a));
                }
            }
        }
    }
    opens.retain(|o| sym_is_open(model, o));
    opens
}

/// Replays every symbolic rule against independent window computations.
pub fn cross_validate(model: Model, radius: i64, caps: &Caps) -> Result<CrossValidationReport> {
    check_radius(radius, caps)?;
    let window = window_points(model, radius);
    let spread = battery_spread(model, radius);
    let descriptors = battery(model, spread);
    let nbhds = nbhd_battery(model, spread, &window, &descriptors);

    let mut checks: u64 = 0;
    let mut disagreements = Vec::new();
    let mut disagree = |what: String| disagreements.push(what);

    for s in &descriptors {
        let rendered = s.render(model);
        let closure = sym_closure(model, s);

        // Extensivity and idempotence, when the closure is expressible.
        if let Ok(c) = &closure {
            checks += 1;
            if !window
                .iter()
                .all(|&x| !s.contains(model, x) || c.contains(model, x))
            {
                disagree(format!("closure of {rendered} is not extensive on the window"));
            }
            checks += 1;
            match sym_closure(model, c) {
                Ok(cc) if cc == c.canonical(model) => {}
                other => disagree(format!(
                    "closure of {rendered} is not idempotent: second application gave {other:?}"
                )),
            }
            // Denseness ⟺ closure is the whole carrier.
            checks += 1;
            if sym_is_dense(model, s) != (*c == Whole) {
                disagree(format!(
                    "denseness of {rendered} disagrees with closure-is-whole"
                ));
            }
        } else {
            // Not expressible: only nonempty finite sets in the real-line
            // models.  They are never dense; the pointwise rule must agree.
            checks += 1;
            if sym_is_dense(model, s) {
                disagree(format!(
                    "{rendered} has inexpressible closure yet claims to be dense"
                ));
            }
        }

        // Pointwise closure rule vs the windowed decision: p is in the
        // windowed closure iff every sampled open neighborhood of p meets s
        // within the window.  The per-open intersection is hoisted out of
        // the point loop.
        let meets_s: Vec<bool> = nbhds
            .iter()
            .map(|o| {
                window
                    .iter()
                    .any(|&x| o.contains(model, x) && s.contains(model, x))
            })
            .collect();
        for &p in &window {
            checks += 1;
            let symbolic = sym_closure_contains(model, p, s);
            let windowed = nbhds
                .iter()
                .zip(&meets_s)
                .filter(|(o, _)| o.contains(model, p))
                .all(|(_, &m)| m);
            // One-sided direction: the window cannot refute membership that
            // rests on points beyond it, so a windowed "yes" against a
            // symbolic "no" is only a disagreement when the descriptor's
            // features are inside the window — which the battery guarantees.
            if symbolic != windowed {
                disagree(format!(
                    "closure membership of point {} in {rendered}: symbolic {symbolic}, \
                     windowed {windowed}",
                    model.fmt_coord(p)
                ));
            }
            // The expressible closure must match the pointwise rule.
            if let Ok(c) = &closure {
                checks += 1;
                if c.contains(model, p) != symbolic {
                    disagree(format!(
                        "descriptor closure and pointwise rule split on point {} in {rendered}",
                        model.fmt_coord(p)
                    ));
                }
            }
        }

        // Denseness vs windowed transversality of the sampled opens.
        checks += 1;
        let windowed_dense = nbhds.iter().all(|o| {
            let o_nonempty = window.iter().any(|&x| o.contains(model, x));
            !o_nonempty
                || window
                    .iter()
                    .any(|&x| o.contains(model, x) && s.contains(model, x))
        });
        if sym_is_dense(model, s) != windowed_dense {
            disagree(format!(
                "denseness of {rendered}: symbolic {}, windowed {windowed_dense}",
                sym_is_dense(model, s)
            ));
        }

        // Open-test sanity via the independent pointwise rule: a set is
        // open exactly when none of its points lies in the closure of its
        // complement.  Checkable whenever the complement stays in the
        // algebra; ray-form opens witness interiors structurally (every
        // member x carries the base ray [x, ∞) inside the set).
        if let Some(comp) = complement_descriptor(model, s) {
            let members: Vec<i64> = window
                .iter()
                .copied()
                .filter(|&x| s.contains(model, x))
                .collect();
            if sym_is_open(model, s) {
                for &x in &members {
                    checks += 1;
                    if sym_closure_contains(model, x, &comp) {
                        disagree(format!(
                            "{rendered} is accepted as open but its member {} touches \
                             the closure of the complement",
                            model.fmt_coord(x)
                        ));
                    }
                }
            } else if !members.is_empty() {
                checks += 1;
                if !members
                    .iter()
                    .any(|&x| sym_closure_contains(model, x, &comp))
                {
                    disagree(format!(
                        "{rendered} is rejected as open but every window member is \
                         interior to it"
                    ));
                }
            }
        }
    }

    // Group models: setwise coverage of the central half-window, the finite
    // shadow of the identity-neighborhood conditions.
    let mut notes = vec![
        "extensivity, idempotence, and closure/denseness consistency: exact".to_string(),
        "pointwise closure vs window: exact for battery descriptors (features kept \
         inside the window)"
            .to_string(),
        "open/interior consistency: exact where the complement stays in the algebra, \
         structural for ray-form opens"
            .to_string(),
    ];
    match model {
        Model::WindowZ => {
            checks += 1;
            if !setwise_covers_window(model, false, radius.max(2) / 2) {
                disagree("setwise sums U + V fail to cover the central half-window".into());
            }
            notes.push("setwise U + V coverage: exact on the central half-window".to_string());
        }
        Model::RayR | Model::RayRClosed => {
            checks += 1;
            if !setwise_covers_window(model, true, (radius.max(2) / 2) * GRID_PER_UNIT) {
                disagree("setwise differences U - V fail to cover the central half-window".into());
            }
            notes.push(
                "setwise U - V coverage: exact on the central half-window".to_string(),
            );
        }
        Model::OpcDiscrete => {
            // The unique-proper-dense-descriptor rule.
            checks += 1;
            let proper_dense: Vec<&SetDescriptor> = descriptors
                .iter()
                .filter(|d| sym_is_dense(model, d) && **d != Whole && d.canonical(model) != Whole)
                .collect();
            if !proper_dense
                .iter()
                .all(|d| d.canonical(model) == SetDescriptor::cofinite([-1]))
            {
                disagree("a proper dense descriptor other than the discrete part appeared".into());
            }
            notes.push(
                "unique proper dense descriptor (the discrete part): exact over the battery"
                    .to_string(),
            );
        }
        _ => {}
    }
    if model.is_real_line() {
        notes.push(
            "unboundedness-above is one-sided on a window; the battery keeps finite \
             features at most a quarter of the radius out"
                .to_string(),
        );
    } else {
        notes.push(
            "infinitude is one-sided on a window; the battery keeps finite features \
             at most a quarter of the radius out"
                .to_string(),
        );
    }

    Ok(CrossValidationReport {
        model: model.name().to_string(),
        radius,
        battery_size: descriptors.len(),
        checks,
        disagreements,
        notes,
    })
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_closure_examples() {
        // Every cofinite set is dense.
        assert_eq!(
            sym_closure(Model::CofiniteN, &SetDescriptor::cofinite([])).unwrap(),
            Whole
        );
        assert_eq!(
            sym_closure(Model::CofiniteN, &SetDescriptor::cofinite([7])).unwrap(),
            Whole
        );
        // Finite sets are closed in the cofinite model.
        let f = SetDescriptor::finite([1, 2, 3]);
        assert_eq!(sym_closure(Model::CofiniteN, &f).unwrap(), f);
        // Rays are dense in the ray model: closure([5, +inf)) is everything.
        assert_eq!(
            sym_closure(Model::RayR, &Ray(5 * GRID_PER_UNIT)).unwrap(),
            Whole
        );
    }

    #[test]
    fn finite_set_closures_in_ray_models_are_not_expressible() {
        for model in [Model::RayR, Model::RayRClosed, Model::HSpace] {
            let err = sym_closure(model, &SetDescriptor::finite([0])).unwrap_err();
            assert!(matches!(err, Error::NotExpressible { .. }), "{model}: {err}");
            // The pointwise rule still answers: points at or below 0 are in
            // the closure (except H's special points, which are isolated
            // from above).
            assert!(sym_closure_contains(model, -1, &SetDescriptor::finite([0])));
            assert!(!sym_closure_contains(
                model,
                1,
                &SetDescriptor::finite([0])
            ));
        }
    }

    #[test]
    fn window_model_closure_is_the_convex_hull() {
        let s = SetDescriptor::finite([-3, 5]);
        assert_eq!(
            sym_closure(Model::WindowZ, &s).unwrap(),
            SetDescriptor::finite(-3..=5)
        );
        // Infinite sets are dense.
        assert_eq!(
            sym_closure(Model::WindowZ, &SetDescriptor::window_complement(10, 3)).unwrap(),
            Whole
        );
    }

    #[test]
    fn compactification_closures_add_the_extra_point() {
        // The discrete part closes up to the whole carrier.
        assert_eq!(
            sym_closure(Model::OpcDiscrete, &SetDescriptor::cofinite([-1])).unwrap(),
            Whole
        );
        // A cofinite set missing a natural stays missing it.
        assert_eq!(
            sym_closure(Model::OpcDiscrete, &SetDescriptor::cofinite([-1, 3])).unwrap(),
            SetDescriptor::cofinite([3])
        );
        // Finite sets are closed (naturals are isolated; -1 needs infinitude).
        let f = SetDescriptor::finite([-1, 2]);
        assert_eq!(sym_closure(Model::OpcDiscrete, &f).unwrap(), f);
    }

    #[test]
    fn open_families_match_the_models() {
        use Model::*;
        assert!(sym_is_open(CofiniteN, &SetDescriptor::cofinite([7])));
        assert!(!sym_is_open(CofiniteN, &SetDescriptor::finite([7])));
        // Rays on the naturals are cofinite, hence open.
        assert!(sym_is_open(CofiniteN, &Ray(3)));

        assert!(sym_is_open(OpcDiscrete, &SetDescriptor::finite([7])));
        assert!(!sym_is_open(OpcDiscrete, &SetDescriptor::finite([-1])));
        assert!(sym_is_open(OpcDiscrete, &SetDescriptor::cofinite([3])));

        assert!(sym_is_open(RayR, &Ray(-9)));
        assert!(!sym_is_open(RayR, &SetDescriptor::cofinite([0])));
        assert!(!sym_is_open(RayR, &SetDescriptor::ray_union([0], 8)));

        assert!(sym_is_open(WindowZ, &SetDescriptor::window_complement(3, 2)));
        assert!(sym_is_open(WindowZ, &SetDescriptor::cofinite([1, 2, 3])));
        assert!(!sym_is_open(WindowZ, &SetDescriptor::cofinite([1, 3])));
        assert!(!sym_is_open(WindowZ, &Ray(0)));

        assert!(sym_is_open(HSpace, &SetDescriptor::ray_union([0, GRID_PER_UNIT], 8)));
        assert!(!sym_is_open(HSpace, &SetDescriptor::ray_union([1], 8)));
        assert!(sym_is_open(HSpace, &Ray(2)));
    }

    #[test]
    fn denseness_is_closure_equals_whole() {
        for model in [
            Model::CofiniteN,
            Model::OpcDiscrete,
            Model::RayR,
            Model::RayRClosed,
            Model::WindowZ,
            Model::HSpace,
        ] {
            for d in battery(model, 8) {
                match sym_closure(model, &d) {
                    Ok(c) => assert_eq!(
                        sym_is_dense(model, &d),
                        c == Whole,
                        "{model}: {}",
                        d.render(model)
                    ),
                    Err(_) => assert!(
                        !sym_is_dense(model, &d),
                        "{model}: inexpressible closure implies not dense"
                    ),
                }
            }
        }
    }

    #[test]
    fn pinned_claim_verdicts() {
        let t = |m, c| sym_claim(m, c).unwrap();
        // Cofinite naturals: dense-connected, compact, T1, but no dense
        // subset is pathwise connected.
        assert!(t(Model::CofiniteN, "dense_connected").value);
        assert!(t(Model::CofiniteN, "compact").value);
        assert!(t(Model::CofiniteN, "t1").value);
        assert!(!t(Model::CofiniteN, "dense_pathwise_connected").value);
        assert!(!t(Model::CofiniteN, "one_dense_pathwise_connected").value);

        // Compactification: compact with a compact dense subset, but its
        // unique proper dense subset is not pseudocompact.
        assert!(t(Model::OpcDiscrete, "compact").value);
        assert!(t(Model::OpcDiscrete, "one_dense_compact").value);
        assert!(!t(Model::OpcDiscrete, "dense_pseudocompact").value);
        assert!(!t(Model::OpcDiscrete, "proper_one_dense_pseudocompact").value);

        // Ray models: paratopological, dense-connected via the setwise
        // difference condition.
        assert!(t(Model::RayR, "t2_condition").value);
        assert!(t(Model::RayR, "dense_connected").value);
        assert!(t(Model::RayR, "paratopological").value);
        assert!(t(Model::RayR, "non_indiscrete").value);
        let rem = t(Model::RayRClosed, "dense_connected");
        assert!(rem.value);
        assert!(
            rem.trace.iter().any(|l| l.contains("coarsening")),
            "the coarsening derivation must appear in the trace"
        );
        assert!(t(Model::RayRClosed, "t0").value);
        assert!(!t(Model::RayRClosed, "t1").value);
        assert!(t(Model::RayRClosed, "dense_ultraconnected").value);

        // Integer window model: quasitopological but not paratopological,
        // dense-connected via the setwise product condition.
        assert!(t(Model::WindowZ, "t3_condition").value);
        assert!(t(Model::WindowZ, "dense_connected").value);
        assert!(t(Model::WindowZ, "quasitopological").value);
        assert!(!t(Model::WindowZ, "paratopological").value);
        assert!(t(Model::WindowZ, "t1").value);

        // The two-special-point line: ultraconnected but not
        // dense-ultraconnected, witnessed by the incomparable pair (0, 1).
        assert!(t(Model::HSpace, "ultraconnected").value);
        let h = t(Model::HSpace, "dense_ultraconnected");
        assert!(!h.value);
        assert_eq!(h.witness.as_deref(), Some("(0, 1)"));
        assert!(!h.trace.is_empty());
    }

    #[test]
    fn unknown_claims_and_models_are_rejected() {
        assert!(matches!(
            sym_claim(Model::CofiniteN, "t3_condition"),
            Err(Error::UnknownClaim { .. })
        ));
        assert!(matches!(
            Model::parse("metric_R"),
            Err(Error::UnknownModel(_))
        ));
        for name in MODEL_NAMES {
            let m = Model::parse(name).unwrap();
            assert_eq!(m.name(), name);
            // Every registered claim evaluates with a nonempty trace.
            for claim in claim_names(m) {
                let v = sym_claim(m, claim).unwrap();
                assert!(!v.trace.is_empty(), "{name}/{claim}");
            }
        }
    }

    #[test]
    fn cross_validation_is_clean_at_the_default_radius() {
        let caps = Caps::default();
        for name in MODEL_NAMES {
            let m = Model::parse(name).unwrap();
            let report = cross_validate(m, caps.max_window_radius, &caps).unwrap();
            assert!(
                report.verified(),
                "{name}: {:?}",
                report.disagreements
            );
            assert!(report.checks > 0);
        }
        assert!(matches!(
            cross_validate(Model::CofiniteN, 65, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn window_samples_trace_the_generating_opens() {
        let caps = Caps::default();
        let w = window_sample(Model::CofiniteN, 10, &caps).unwrap();
        assert_eq!(w.points, (0..10).collect::<Vec<i64>>());
        assert!(!w.opens.is_empty());
        // A cofinite open's trace misses exactly its excluded points.
        let (_, members) = &w.opens[0];
        assert!(members.len() >= 8);

        let r = window_sample(Model::RayR, 16, &caps).unwrap();
        assert_eq!(r.points.len() as i64, 2 * 16 * GRID_PER_UNIT + 1);
        // Ray traces cover the upper part of the window.
        assert!(r
            .opens
            .iter()
            .any(|(_, m)| m.contains(&(16 * GRID_PER_UNIT))));
    }

    #[test]
    fn descriptor_normalization_collapses_equivalents() {
        assert_eq!(SetDescriptor::cofinite([]), Whole);
        assert_eq!(SetDescriptor::finite([]), Empty);
        assert_eq!(SetDescriptor::window_complement(3, 0), Whole);
        assert_eq!(SetDescriptor::ray_union([5, 9], 4), SetDescriptor::ray_union([], 4));
        assert_eq!(SetDescriptor::ray_union([], 4), Ray(4));
        // On the naturals a ray is cofinite.
        assert_eq!(
            Ray(3).canonical(Model::CofiniteN),
            SetDescriptor::cofinite([0, 1, 2])
        );
        assert_eq!(Ray(-2).canonical(Model::CofiniteN), Whole);
        // On the integers a window complement is cofinite with a contiguous
        // complement.
        assert_eq!(
            SetDescriptor::window_complement(5, 2).canonical(Model::WindowZ),
            SetDescriptor::cofinite([4, 5, 6])
        );
    }

    #[test]
    fn extensivity_and_idempotence_hold_on_the_battery() {
        for name in MODEL_NAMES {
            let m = Model::parse(name).unwrap();
            for d in battery(m, 8) {
                if let Ok(c) = sym_closure(m, &d) {
                    for x in -12..12 {
                        if m.in_carrier(x) && d.contains(m, x) {
                            assert!(c.contains(m, x), "{name}: extensivity on {}", d.render(m));
                        }
                    }
                    assert_eq!(
                        sym_closure(m, &c).unwrap(),
                        c.canonical(m),
                        "{name}: idempotence on {}",
                        d.render(m)
                    );
                }
            }
        }
    }
}
