use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use crate::model::{exact_equilibrium, ParamsPQ, QuadraticSurd};
use crate::rational::to_f64;

/// Parameter regions where global attractivity was known before.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    A,
    B,
    C,
    D,
    E,
}

impl Region {
    pub const ALL: [Region; 5] = [Region::A, Region::B, Region::C, Region::D, Region::E];

    pub fn letter(self) -> char {
        match self {
            Region::A => 'a',
            Region::B => 'b',
            Region::C => 'c',
            Region::D => 'd',
            Region::E => 'e',
        }
    }

    /// `lhs <=> rhs` as tested.
    pub fn formula(self) -> &'static str {
        match self {
            Region::A => "q >= p",
            Region::B => "2(q + 1) >= p",
            Region::C => "q > 1 and 2(q^3 - q^2 + q + sqrt(q^4 - 1) - 1)/(q - 1)^2 >= p",
            Region::D => "q > 1 and xbar <= (q^2 + 1)/(q - 1)",
            Region::E => "4 p (q - 1)^2 <= 25",
        }
    }
}

/// One region test. `lhs` and `rhs` are the compared quantities rounded to
/// `f64`; `holds` is decided exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionTest {
    pub region: Region,
    /// False when the formula is undefined (`q <= 1` for `c` and `d`).
    pub applicable: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegionCoverage {
    pub flags: Vec<Region>,
    pub tests: [RegionTest; 5],
}

impl RegionCoverage {
    pub fn contains(&self, region: Region) -> bool {
        self.flags.contains(&region)
    }

    /// `{a,b,c,d}` style.
    pub fn flags_text(&self) -> String {
        let mut s = String::from("{");
        for (i, r) in self.flags.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push(r.letter());
        }
        s.push('}');
        s
    }
}

pub fn classify_regions(params: &ParamsPQ) -> RegionCoverage {
    let (p, q) = (params.p(), params.q());
    let one = BigRational::one();
    let int = |n: i64| BigRational::from_integer(n.into());
    let test = |region, applicable, lhs: f64, rhs: f64, holds| RegionTest {
        region,
        applicable,
        lhs,
        rhs,
        holds: applicable && holds,
    };

    let a = test(Region::A, true, to_f64(q), to_f64(p), q >= p);
    let b_lhs = int(2) * (q + &one);
    let b = test(Region::B, true, to_f64(&b_lhs), to_f64(p), &b_lhs >= p);

    let above_one = q > &one;
    let (c, d) = if above_one {
        let qm1 = q - &one;
        let q2 = q * q;
        let polynomial = &q2 * q - &q2 + q - &one;
        let root = QuadraticSurd::sqrt(&(&q2 * &q2 - &one));
        let scale = QuadraticSurd::rational(int(2) / (&qm1 * &qm1));
        let c_lhs = &(&QuadraticSurd::rational(polynomial) + &root) * &scale;
        let c_holds = c_lhs >= QuadraticSurd::rational(p.clone());
        let c = test(Region::C, true, c_lhs.to_f64(), to_f64(p), c_holds);

        let xbar = exact_equilibrium(params).xbar;
        let bound = (&q2 + &one) / &qm1;
        let d_holds = xbar <= QuadraticSurd::rational(bound.clone());
        let d = test(Region::D, true, xbar.to_f64(), to_f64(&bound), d_holds);
        (c, d)
    } else {
        let nan = f64::NAN;
        (
            test(Region::C, false, nan, to_f64(p), false),
            test(Region::D, false, nan, nan, false),
        )
    };

    let qm1 = q - &one;
    let e_lhs = int(4) * p * &qm1 * &qm1;
    let e = test(Region::E, true, to_f64(&e_lhs), 25.0, e_lhs <= int(25));

    let tests = [a, b, c, d, e];
    let flags = tests.iter().filter(|t| t.holds).map(|t| t.region).collect();
    RegionCoverage { flags, tests }
}
