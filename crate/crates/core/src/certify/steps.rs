use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::Certifier;
use crate::model::{delta2_denominator, SymbolicModel};
use crate::poly::{Bindings, Poly, RationalFn};
use crate::Result;

pub(crate) const Q1_ABOVE: &str = "q1 y0>x0";

/// Where a step's region sits relative to the equilibrium `(u, u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quadrant {
    /// Whole open positive quadrant.
    Global,
    /// `x >= u, y >= u`.
    Q1,
    /// `x <= u, y >= u`.
    Q2,
    /// `x <= u, y <= u`.
    Q3,
    /// `x >= u, y <= u`.
    Q4,
    /// `x = u, 0 < y < u`.
    SegmentX,
    /// `y = u, 0 < x < u`.
    SegmentY,
}

impl Quadrant {
    pub fn label(self) -> &'static str {
        match self {
            Quadrant::Global => "global",
            Quadrant::Q1 => "Q1",
            Quadrant::Q2 => "Q2",
            Quadrant::Q3 => "Q3",
            Quadrant::Q4 => "Q4",
            Quadrant::SegmentX => "segment x=u",
            Quadrant::SegmentY => "segment y=u",
        }
    }
}

/// A polynomial, the region it must be positive on, and the chain of
/// substitutions that parameterizes the region by positive variables.
///
/// Parameters listed in `nonnegative` may also be zero; every other
/// parameter is strictly positive.
#[derive(Clone, Debug)]
pub struct SubstitutionStep {
    name: String,
    region: String,
    quadrant: Quadrant,
    source_name: &'static str,
    source: Poly,
    stages: Vec<Bindings>,
    nonnegative: Vec<String>,
    require_integer: bool,
}

impl SubstitutionStep {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn region(&self) -> &str {
        &self.region
    }

    pub fn quadrant(&self) -> Quadrant {
        self.quadrant
    }

    /// Short name of the polynomial being certified.
    pub fn source_name(&self) -> &'static str {
        self.source_name
    }

    /// Polynomial in `x, y, u, A` that must be positive on the region.
    pub fn source(&self) -> &Poly {
        &self.source
    }

    pub fn stages(&self) -> &[Bindings] {
        &self.stages
    }

    pub fn nonnegative(&self) -> &[String] {
        &self.nonnegative
    }

    pub fn require_integer(&self) -> bool {
        self.require_integer
    }

    /// The stages collapsed into one substitution from the source variables.
    pub fn composed_bindings(&self) -> Result<Bindings> {
        self.stages
            .iter()
            .try_fold(Bindings::new(), |acc, stage| acc.then(stage))
    }

    /// Free variables after all stages, sorted by name.
    pub fn parameters(&self) -> Result<Vec<String>> {
        let composed = self.composed_bindings()?;
        let mut names = BTreeSet::new();
        for (_, value) in composed.iter() {
            for v in value
                .num()
                .variables()
                .into_iter()
                .chain(value.den().variables())
            {
                names.insert(v.to_string());
            }
        }
        for v in self.source.variables() {
            if composed.get(v).is_none() {
                names.insert(v.to_string());
            }
        }
        Ok(names.into_iter().collect())
    }

    /// Applies the stages in order. The numerator is the certified
    /// expansion; the denominator collects the cleared binding denominators.
    pub fn expand(&self) -> Result<RationalFn> {
        self.stages
            .iter()
            .try_fold(RationalFn::from_poly(self.source.clone()), |acc, stage| {
                acc.substitute(stage)
            })
    }
}

/// Subcases that jointly cover one quadrant or segment.
#[derive(Clone, Debug)]
pub struct CaseDecomposition {
    pub quadrant: Quadrant,
    pub subcases: Vec<SubstitutionStep>,
}

fn poly(text: &str) -> Poly {
    text.parse().expect("built-in polynomial literal")
}

fn moebius(param: &str) -> RationalFn {
    let num = Poly::var("u") * Poly::var(param);
    RationalFn::new(num, Poly::var(param) + Poly::one()).expect("w + 1 is nonzero")
}

/// `x -> x0 + u, y -> y0 + u`.
pub(crate) fn shift_to_equilibrium() -> Bindings {
    Bindings::new()
        .bind("x", poly("x0 + u"))
        .bind("y", poly("y0 + u"))
}

struct Spec<'a> {
    name: &'a str,
    region: &'a str,
    quadrant: Quadrant,
    source_name: &'static str,
    source: Poly,
    stages: Vec<Bindings>,
    nonnegative: &'a [&'a str],
    require_integer: bool,
}

impl Certifier<'_> {
    fn u_stage(&self) -> Bindings {
        Bindings::new().bind("u", self.u_shift.clone())
    }

    fn make(&self, spec: Spec<'_>) -> SubstitutionStep {
        let mut stages = spec.stages;
        stages.push(self.u_stage());
        SubstitutionStep {
            name: spec.name.to_string(),
            region: spec.region.to_string(),
            quadrant: spec.quadrant,
            source_name: spec.source_name,
            source: spec.source,
            stages,
            nonnegative: spec.nonnegative.iter().map(|s| s.to_string()).collect(),
            require_integer: spec.require_integer,
        }
    }

    pub(crate) fn steps_delta1_global(&self) -> Vec<SubstitutionStep> {
        vec![
            self.make(Spec {
                name: "delta1 prefactor",
                region: "x, y > 0",
                quadrant: Quadrant::Global,
                source_name: "A (1 + y)",
                source: SymbolicModel::delta1_prefactor(),
                stages: vec![],
                nonnegative: &[],
                require_integer: false,
            }),
            self.make(Spec {
                name: "delta1 denominator",
                region: "x, y > 0",
                quadrant: Quadrant::Global,
                source_name: "x (A + x) y (-u + A u + u^2 + y)",
                source: SymbolicModel::delta1_denominator(),
                stages: vec![],
                nonnegative: &[],
                require_integer: false,
            }),
        ]
    }

    /// `-F1, -F2` on the second quadrant and `F1, F2` on the fourth, where
    /// `F1, F2` are the line and parabola factors of `g - g∘T`.
    pub(crate) fn steps_q2q4(&self) -> Vec<SubstitutionStep> {
        let (f1, f2) = SymbolicModel::delta1_factors();
        let q2 = Bindings::new()
            .bind("x", moebius("w"))
            .bind("y", poly("u + y0"));
        let q2_edge = Bindings::new()
            .bind("x", Poly::var("u"))
            .bind("y", poly("u + y0"));
        let q4 = Bindings::new()
            .bind("x", poly("u + x0"))
            .bind("y", moebius("v"));
        let q4_edge = Bindings::new()
            .bind("x", poly("u + x0"))
            .bind("y", Poly::var("u"));

        let mut out = Vec::new();
        for (label, source) in [("-F1", -&f1), ("-F2", -&f2)] {
            out.push(self.make(Spec {
                name: &alloc::format!("q2 {label}"),
                region: "0 < x < u <= y: x = u w/(w + 1), y = u + y0, w > 0, y0 >= 0",
                quadrant: Quadrant::Q2,
                source_name: label,
                source: source.clone(),
                stages: vec![q2.clone()],
                nonnegative: &["y0"],
                require_integer: false,
            }));
            out.push(self.make(Spec {
                name: &alloc::format!("q2 edge x=u {label}"),
                region: "x = u < y: y = u + y0, y0 > 0",
                quadrant: Quadrant::Q2,
                source_name: label,
                source,
                stages: vec![q2_edge.clone()],
                nonnegative: &[],
                require_integer: false,
            }));
        }
        for (label, source) in [("F1", f1), ("F2", f2)] {
            out.push(self.make(Spec {
                name: &alloc::format!("q4 {label}"),
                region: "0 < y < u <= x: x = u + x0, y = u v/(v + 1), x0 >= 0, v > 0",
                quadrant: Quadrant::Q4,
                source_name: label,
                source: source.clone(),
                stages: vec![q4.clone()],
                nonnegative: &["x0"],
                require_integer: false,
            }));
            out.push(self.make(Spec {
                name: &alloc::format!("q4 edge y=u {label}"),
                region: "y = u < x: x = u + x0, x0 > 0",
                quadrant: Quadrant::Q4,
                source_name: label,
                source,
                stages: vec![q4_edge.clone()],
                nonnegative: &[],
                require_integer: false,
            }));
        }
        out
    }

    pub(crate) fn step_delta2_denominator(&self) -> SubstitutionStep {
        self.make(Spec {
            name: "delta2 denominator",
            region: "x, y > 0",
            quadrant: Quadrant::Global,
            source_name: "delta2 denominator",
            source: delta2_denominator(),
            stages: vec![],
            nonnegative: &[],
            require_integer: false,
        })
    }

    /// Numerator of `g - g∘T∘T` shifted to `(u, u)` and split along the
    /// diagonal and the two boundary lines.
    pub(crate) fn steps_q1(&self) -> Vec<SubstitutionStep> {
        let numerator = self.model.delta2_numerator().clone();
        let cases: [(&str, &str, Bindings); 5] = [
            (
                Q1_ABOVE,
                "u < x < y: x = u + x0, y = u + x0 + k, x0, k > 0",
                Bindings::new().bind("y0", poly("x0 + k")),
            ),
            (
                "q1 x0>y0",
                "u < y < x: x = u + y0 + k, y = u + y0, y0, k > 0",
                Bindings::new().bind("x0", poly("y0 + k")),
            ),
            (
                "q1 y0=x0",
                "u < x = y: x = y = u + x0, x0 > 0",
                Bindings::new().bind("y0", Poly::var("x0")),
            ),
            (
                "q1 line x0=0",
                "x = u < y: y = u + y0, y0 > 0",
                Bindings::new().bind("x0", Poly::zero()),
            ),
            (
                "q1 line y0=0",
                "y = u < x: x = u + x0, x0 > 0",
                Bindings::new().bind("y0", Poly::zero()),
            ),
        ];
        cases
            .into_iter()
            .map(|(name, region, case)| {
                self.make(Spec {
                    name,
                    region,
                    quadrant: Quadrant::Q1,
                    source_name: "delta2 numerator",
                    source: numerator.clone(),
                    stages: vec![shift_to_equilibrium(), case],
                    nonnegative: &[],
                    require_integer: true,
                })
            })
            .collect()
    }

    /// Interior of the third quadrant through `x = u w/(w+1), y = u v/(v+1)`,
    /// split along `v = w`.
    pub(crate) fn steps_q3(&self) -> Vec<SubstitutionStep> {
        let numerator = self.model.delta2_numerator().clone();
        let moebius_xy = Bindings::new()
            .bind("x", moebius("w"))
            .bind("y", moebius("v"));
        let cases: [(&str, &str, Bindings); 3] = [
            (
                "q3 v>w",
                "0 < x < y < u: v = w + k, w, k > 0",
                Bindings::new().bind("v", poly("w + k")),
            ),
            (
                "q3 v<w",
                "0 < y < x < u: w = v + k, v, k > 0",
                Bindings::new().bind("w", poly("v + k")),
            ),
            (
                "q3 v=w",
                "0 < x = y < u: v = w > 0",
                Bindings::new().bind("v", Poly::var("w")),
            ),
        ];
        cases
            .into_iter()
            .map(|(name, region, case)| {
                self.make(Spec {
                    name,
                    region,
                    quadrant: Quadrant::Q3,
                    source_name: "delta2 numerator",
                    source: numerator.clone(),
                    stages: vec![moebius_xy.clone(), case],
                    nonnegative: &[],
                    require_integer: false,
                })
            })
            .collect()
    }

    /// The two open segments joining `(u, u)` to the axes.
    pub(crate) fn steps_segments(&self) -> Vec<SubstitutionStep> {
        let numerator = self.model.delta2_numerator().clone();
        vec![
            self.make(Spec {
                name: "segment y=u",
                region: "0 < x < u = y: x = u w/(w + 1), w > 0",
                quadrant: Quadrant::SegmentY,
                source_name: "delta2 numerator",
                source: numerator.clone(),
                stages: vec![Bindings::new()
                    .bind("x", moebius("w"))
                    .bind("y", Poly::var("u"))],
                nonnegative: &[],
                require_integer: false,
            }),
            self.make(Spec {
                name: "segment x=u",
                region: "0 < y < u = x: y = u v/(v + 1), v > 0",
                quadrant: Quadrant::SegmentX,
                source_name: "delta2 numerator",
                source: numerator,
                stages: vec![Bindings::new()
                    .bind("x", Poly::var("u"))
                    .bind("y", moebius("v"))],
                nonnegative: &[],
                require_integer: false,
            }),
        ]
    }

    /// Subcases grouped by the quadrant or segment they cover.
    pub fn decompositions(&self) -> Vec<CaseDecomposition> {
        let mut out: Vec<CaseDecomposition> = Vec::new();
        for step in self.all_steps() {
            match out.iter_mut().find(|d| d.quadrant == step.quadrant()) {
                Some(d) => d.subcases.push(step),
                None => out.push(CaseDecomposition {
                    quadrant: step.quadrant(),
                    subcases: vec![step],
                }),
            }
        }
        out
    }
}
