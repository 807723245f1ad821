//! Combinatorial and parametric descriptions of pointed genus-two (and
//! tail) curves: genus bookkeeping, stability classification, and
//! construction of embedded curve ideals from explicit monomial
//! parametrizations.

use crate::error::{Error, Result};
use crate::poly::{eliminate, intersect, Ideal, Polynomial};
use crate::rational::{int, Rat};
use num_traits::Zero;

/// Singularity kinds the classifier knows about.
///
/// Delta invariants: node 1, cusp 1, tacnode 2, ramphoid cusp 2. The
/// triple point enters classification only; its delta is taken as 3
/// (three pairwise transverse branches) for genus bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityKind {
    Node,
    Cusp,
    Tacnode,
    RamphoidCusp,
    TriplePoint,
}

impl SingularityKind {
    pub fn delta(self) -> i64 {
        match self {
            SingularityKind::Node => 1,
            SingularityKind::Cusp => 1,
            SingularityKind::Tacnode => 2,
            SingularityKind::RamphoidCusp => 2,
            SingularityKind::TriplePoint => 3,
        }
    }

    /// Allowed by the c-semistable / h-stable singularity clause.
    pub fn is_admissible(self) -> bool {
        matches!(
            self,
            SingularityKind::Node | SingularityKind::Cusp | SingularityKind::Tacnode
        )
    }

    /// Special-point count contributed per branch, counting
    /// multiplicity: node branch 1, cusp 2, tacnode branch 2.
    pub fn branch_multiplicity(self) -> i64 {
        match self {
            SingularityKind::Node => 1,
            SingularityKind::Cusp => 2,
            SingularityKind::Tacnode => 2,
            SingularityKind::RamphoidCusp => 2,
            SingularityKind::TriplePoint => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SingularityKind::Node => "node",
            SingularityKind::Cusp => "cusp",
            SingularityKind::Tacnode => "tacnode",
            SingularityKind::RamphoidCusp => "ramphoid_cusp",
            SingularityKind::TriplePoint => "triple_point",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "node" => Some(SingularityKind::Node),
            "cusp" => Some(SingularityKind::Cusp),
            "tacnode" => Some(SingularityKind::Tacnode),
            "ramphoid_cusp" => Some(SingularityKind::RamphoidCusp),
            "triple_point" => Some(SingularityKind::TriplePoint),
            _ => None,
        }
    }
}

/// One incidence of a singularity with a component: `branches` branches
/// of the singular point lie on that component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incidence {
    pub component: usize,
    pub branches: u32,
}

#[derive(Debug, Clone)]
pub struct Singularity {
    pub kind: SingularityKind,
    pub incidences: Vec<Incidence>,
    /// Coordinates of the singular point in P^4, when the model is
    /// embedded (used to check that the point lies on all incident
    /// components).
    pub coords: Option<Vec<Rat>>,
}

/// Coordinate i maps to s^a t^b, or is identically zero.
pub type ComponentParam = [Option<(u32, u32)>; 5];

#[derive(Debug, Clone)]
pub struct Component {
    pub genus: i64,
    pub multiplicity: i64,
    pub param: Option<ComponentParam>,
}

#[derive(Debug, Clone)]
pub struct MarkedPoint {
    pub component: usize,
    /// False when the marked point sits at a singular point; the
    /// classifier rejects such models ("p is simple").
    pub smooth: bool,
    pub coords: Option<Vec<Rat>>,
}

/// Pointed curve model: components, singularities, marked point, and
/// optional per-component monomial parametrizations.
#[derive(Debug, Clone)]
pub struct CurveModel {
    pub components: Vec<Component>,
    pub singularities: Vec<Singularity>,
    pub marked_point: Option<MarkedPoint>,
}

/// Stability verdict with a reason trace for every failed clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub h_stable: bool,
    pub c_stable: bool,
    pub c_semistable: bool,
    pub reasons: Vec<String>,
}

impl CurveModel {
    fn has_multiple_component(&self) -> bool {
        self.components.iter().any(|c| c.multiplicity > 1)
    }

    /// Components adjacent to component `i` through singularities
    /// restricted to the subset `within`.
    fn is_connected_subset(&self, within: &[usize]) -> bool {
        if within.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.components.len()];
        let mut stack = vec![within[0]];
        seen[within[0]] = true;
        while let Some(c) = stack.pop() {
            for s in &self.singularities {
                if !s.incidences.iter().any(|b| b.component == c) {
                    continue;
                }
                for b in &s.incidences {
                    if within.contains(&b.component) && !seen[b.component] {
                        seen[b.component] = true;
                        stack.push(b.component);
                    }
                }
            }
        }
        within.iter().all(|&c| seen[c])
    }

    /// Arithmetic genus of the subcurve supported on `within`.
    /// Singularities count only when every branch lies inside.
    fn subcurve_genus(&self, within: &[usize]) -> Result<i64> {
        if !self.is_connected_subset(within) {
            return Err(Error::Disconnected);
        }
        let comp_genus: i64 = within.iter().map(|&i| self.components[i].genus).sum();
        let internal_delta: i64 = self
            .singularities
            .iter()
            .filter(|s| s.incidences.iter().all(|b| within.contains(&b.component)))
            .map(|s| s.kind.delta())
            .sum();
        Ok(comp_genus - within.len() as i64 + 1 + internal_delta)
    }

    /// Meeting data of the subcurve `within` with the rest: (number of
    /// distinct meeting points, total counting multiplicity).
    fn meeting_counts(&self, within: &[usize]) -> (i64, i64) {
        let mut points = 0;
        let mut with_mult = 0;
        for s in &self.singularities {
            let inside = s
                .incidences
                .iter()
                .any(|b| within.contains(&b.component));
            let outside = s
                .incidences
                .iter()
                .any(|b| !within.contains(&b.component));
            if inside && outside {
                points += 1;
                for b in &s.incidences {
                    if within.contains(&b.component) {
                        with_mult += s.kind.branch_multiplicity() * b.branches as i64;
                    }
                }
            }
        }
        (points, with_mult)
    }

    /// All connected proper nonempty component subsets.
    fn proper_connected_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.components.len();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            if mask == (1 << n) - 1 {
                continue;
            }
            let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if self.is_connected_subset(&subset) {
                out.push(subset);
            }
        }
        out
    }

    /// Special points of component `i` counting multiplicity: branches
    /// through singular points plus the marked point.
    fn special_points_with_multiplicity(&self, i: usize) -> i64 {
        let mut count = 0;
        for s in &self.singularities {
            for b in &s.incidences {
                if b.component == i {
                    count += s.kind.branch_multiplicity() * b.branches as i64;
                }
            }
        }
        if let Some(mp) = &self.marked_point {
            if mp.component == i && mp.smooth {
                count += 1;
            }
        }
        count
    }
}

/// Arithmetic genus: sum of component genera − #components + 1 + sum of
/// delta invariants. Errors when the configuration is disconnected or
/// a component has multiplicity above one.
pub fn curve_genus(model: &CurveModel) -> Result<i64> {
    if model.has_multiple_component() {
        return Err(Error::UnsupportedModel(
            "genus bookkeeping supports multiplicity-one components only".into(),
        ));
    }
    let all: Vec<usize> = (0..model.components.len()).collect();
    model.subcurve_genus(&all)
}

/// Evaluates the h-stable / c-stable / c-semistable clauses.
pub fn classify(model: &CurveModel) -> Result<StabilityVerdict> {
    let mut reasons = Vec::new();

    if model.has_multiple_component() {
        return Ok(StabilityVerdict {
            h_stable: false,
            c_stable: false,
            c_semistable: false,
            reasons: vec!["multiple component".into()],
        });
    }

    let g = curve_genus(model)?;
    if g != 2 {
        return Err(Error::WrongGenus { found: g });
    }

    // clause: allowed singularity kinds
    let admissible = model
        .singularities
        .iter()
        .all(|s| s.kind.is_admissible());
    if !admissible {
        for s in &model.singularities {
            if !s.kind.is_admissible() {
                reasons.push(format!("inadmissible singularity: {}", s.kind.name()));
            }
        }
    }

    // clause: rational components need >= 3 special points counting
    // multiplicity
    let mut rational_ok = true;
    for (i, c) in model.components.iter().enumerate() {
        if c.genus == 0 && model.components.len() > 1 {
            let sp = model.special_points_with_multiplicity(i);
            if sp < 3 {
                rational_ok = false;
                reasons.push(format!(
                    "rational component {i} has only {sp} special points counting multiplicity"
                ));
            }
        }
    }

    // clause: marked point simple
    let point_ok = match &model.marked_point {
        Some(mp) => mp.smooth,
        None => false,
    };
    if !point_ok {
        reasons.push("marked point is missing or not simple".into());
    }

    // genus-one subcurve conditions
    let mut has_genus_one_subcurve = false;
    let mut genus_one_meets_two = true;
    for subset in model.proper_connected_subsets() {
        if model.subcurve_genus(&subset)? == 1 {
            has_genus_one_subcurve = true;
            let (points, _) = model.meeting_counts(&subset);
            if points < 2 {
                genus_one_meets_two = false;
                reasons.push(format!(
                    "genus-one subcurve {subset:?} meets the rest in {points} point(s)"
                ));
            }
        }
    }

    let has_tacnode = model
        .singularities
        .iter()
        .any(|s| s.kind == SingularityKind::Tacnode);

    let c_semistable = admissible && rational_ok && point_ok && genus_one_meets_two;
    let c_stable = c_semistable && !has_tacnode && !has_genus_one_subcurve;
    let h_stable = admissible && rational_ok && point_ok && !has_genus_one_subcurve;
    if has_genus_one_subcurve && !h_stable {
        reasons.push("genus-one subcurve present (h-stability excludes these)".into());
    }

    Ok(StabilityVerdict {
        h_stable,
        c_stable,
        c_semistable,
        reasons,
    })
}

/// Prime ideal of the image of a monomial parametrization
/// [s^{a_0} t^{b_0}, ...] in P^4 (toric kernel via elimination).
pub fn implicitize(param: &ComponentParam) -> Result<Ideal> {
    let nonzero = param.iter().filter(|c| c.is_some()).count();
    if nonzero < 2 {
        return Err(Error::Degenerate);
    }
    // variables: x0..x4, s = 5, t = 6
    let n = 7;
    let s = Polynomial::var(5, n);
    let t = Polynomial::var(6, n);
    let mut gens = Vec::new();
    for (i, coord) in param.iter().enumerate() {
        let xi = Polynomial::var(i, n);
        match coord {
            None => gens.push(xi),
            Some((a, b)) => {
                let mut mono = Polynomial::constant(int(1), n);
                for _ in 0..*a {
                    mono = mono.mul(&s);
                }
                for _ in 0..*b {
                    mono = mono.mul(&t);
                }
                gens.push(xi.sub(&mono));
            }
        }
    }
    let big = Ideal::new(gens, n);
    Ok(eliminate(&big, &[0, 1, 2, 3, 4]))
}

/// Substitutes the parametrization into a 5-variable polynomial;
/// returns the resulting bivariate polynomial in (s, t).
pub fn substitute_param(p: &Polynomial, param: &ComponentParam) -> Polynomial {
    let s = Polynomial::var(0, 2);
    let t = Polynomial::var(1, 2);
    let subs: Vec<Polynomial> = param
        .iter()
        .map(|c| match c {
            None => Polynomial::zero(2),
            Some((a, b)) => {
                let mut mono = Polynomial::constant(int(1), 2);
                for _ in 0..*a {
                    mono = mono.mul(&s);
                }
                for _ in 0..*b {
                    mono = mono.mul(&t);
                }
                mono
            }
        })
        .collect();
    p.substitute(&subs, 2)
}

/// Ideal of the embedded curve: intersection of the component ideals.
pub fn curve_ideal(model: &CurveModel) -> Result<Ideal> {
    let mut component_ideals = Vec::new();
    for c in &model.components {
        let param = c
            .param
            .as_ref()
            .ok_or_else(|| Error::UnsupportedModel("component lacks a parametrization".into()))?;
        component_ideals.push(implicitize(param)?);
    }
    let mut acc = component_ideals[0].clone();
    for next in &component_ideals[1..] {
        acc = intersect(&acc, next);
    }
    // sanity: recorded singular points lie on every incident component
    for s in &model.singularities {
        if let Some(coords) = &s.coords {
            for b in &s.incidences {
                let ideal = &component_ideals[b.component];
                for g in ideal.generators() {
                    if !g.eval(coords).is_zero() {
                        return Err(Error::UnsupportedModel(format!(
                            "declared singular point does not lie on component {}",
                            b.component
                        )));
                    }
                }
            }
        }
    }
    Ok(acc)
}

/// The built-in models from the regression corpus.
pub mod samples {
    use super::*;

    /// Tacnodal elliptic bridge: three rational components R0, R1, R
    /// with a tacnode joining R0 and R1 and two nodes joining R to
    /// each, marked point generic on R.
    ///
    /// Parametrizations:
    ///   R0: [s^2, s t, t^2, 0, 0]
    ///   R1: [0, s t, s^2, t^2, 0]
    ///   R : [s^2, 0, 0, t^2, s t]
    pub fn c_star() -> CurveModel {
        let comp = |param: ComponentParam| Component {
            genus: 0,
            multiplicity: 1,
            param: Some(param),
        };
        let r0 = comp([Some((2, 0)), Some((1, 1)), Some((0, 2)), None, None]);
        let r1 = comp([None, Some((1, 1)), Some((2, 0)), Some((0, 2)), None]);
        let r = comp([Some((2, 0)), None, None, Some((0, 2)), Some((1, 1))]);
        let coords = |v: [i64; 5]| Some(v.iter().map(|&c| int(c)).collect());
        CurveModel {
            components: vec![r0, r1, r],
            singularities: vec![
                Singularity {
                    kind: SingularityKind::Tacnode,
                    incidences: vec![
                        Incidence { component: 0, branches: 1 },
                        Incidence { component: 1, branches: 1 },
                    ],
                    coords: coords([0, 0, 1, 0, 0]),
                },
                Singularity {
                    kind: SingularityKind::Node,
                    incidences: vec![
                        Incidence { component: 0, branches: 1 },
                        Incidence { component: 2, branches: 1 },
                    ],
                    coords: coords([1, 0, 0, 0, 0]),
                },
                Singularity {
                    kind: SingularityKind::Node,
                    incidences: vec![
                        Incidence { component: 1, branches: 1 },
                        Incidence { component: 2, branches: 1 },
                    ],
                    coords: coords([0, 0, 0, 1, 0]),
                },
            ],
            // generic simple point of R: [a^2, 0, 0, b^2, a b] at a=b=1
            marked_point: Some(MarkedPoint {
                component: 2,
                smooth: true,
                coords: coords([1, 0, 0, 1, 1]),
            }),
        }
    }

    /// Rational cuspidal curve E and a smooth rational curve R meeting
    /// in one tacnode.
    ///
    /// Parametrizations:
    ///   E: [s^4, s^2 t^2, s t^3, t^4, 0]
    ///   R: [0, 0, u v, u^2, v^2]
    pub fn one_tacnode() -> CurveModel {
        let coords = |v: [i64; 5]| Some(v.iter().map(|&c| int(c)).collect());
        let e = Component {
            genus: 0,
            multiplicity: 1,
            param: Some([
                Some((4, 0)),
                Some((2, 2)),
                Some((1, 3)),
                Some((0, 4)),
                None,
            ]),
        };
        let r = Component {
            genus: 0,
            multiplicity: 1,
            param: Some([None, None, Some((1, 1)), Some((2, 0)), Some((0, 2))]),
        };
        CurveModel {
            components: vec![e, r],
            singularities: vec![
                Singularity {
                    kind: SingularityKind::Cusp,
                    incidences: vec![Incidence { component: 0, branches: 1 }],
                    coords: coords([1, 0, 0, 0, 0]),
                },
                Singularity {
                    kind: SingularityKind::Tacnode,
                    incidences: vec![
                        Incidence { component: 0, branches: 1 },
                        Incidence { component: 1, branches: 1 },
                    ],
                    coords: coords([0, 0, 0, 1, 0]),
                },
            ],
            // generic simple point of R
            marked_point: Some(MarkedPoint {
                component: 1,
                smooth: true,
                coords: coords([0, 0, 1, 1, 1]),
            }),
        }
    }

    /// Irreducible genus-two curve with one node and a smooth marked
    /// point (combinatorial model only; no embedding).
    pub fn irreducible_nodal() -> CurveModel {
        CurveModel {
            components: vec![Component {
                genus: 1,
                multiplicity: 1,
                param: None,
            }],
            singularities: vec![Singularity {
                kind: SingularityKind::Node,
                incidences: vec![Incidence { component: 0, branches: 2 }],
                coords: None,
            }],
            marked_point: Some(MarkedPoint {
                component: 0,
                smooth: true,
                coords: None,
            }),
        }
    }

    /// Irreducible curve with a ramphoid cusp (combinatorial only).
    pub fn ramphoid() -> CurveModel {
        CurveModel {
            components: vec![Component {
                genus: 0,
                multiplicity: 1,
                param: None,
            }],
            singularities: vec![Singularity {
                kind: SingularityKind::RamphoidCusp,
                incidences: vec![Incidence { component: 0, branches: 1 }],
                coords: None,
            }],
            marked_point: Some(MarkedPoint {
                component: 0,
                smooth: true,
                coords: None,
            }),
        }
    }
}
