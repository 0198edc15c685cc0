//! Tabulated closed-form values the generated coefficients are checked against.

use num_rational::BigRational;

use crate::airy::BetaKind;
use crate::exact::q;
use crate::kernels::AreaKind;

/// Four leading corrections as `(numerator, denominator)`.
pub type Corrections = [(i64, i64); 4];

/// One area's density and tail expansions: prefactors of the unscaled
/// variable and the first four corrections.
#[derive(Debug, Clone, Copy)]
pub struct ExpansionTable {
    pub kind: AreaKind,
    pub density_prefactor: &'static str,
    pub density: Corrections,
    pub tail_prefactor: &'static str,
    pub tail: Corrections,
}

pub const EXPANSIONS: [ExpansionTable; 7] = [
    ExpansionTable {
        kind: AreaKind::Excursion,
        density_prefactor: "72*sqrt(6)/sqrt(pi)",
        density: [(1, 1), (-1, 9), (-5, 1296), (-25, 46656)],
        tail_prefactor: "6*sqrt(6)/sqrt(pi)",
        tail: [(1, 1), (-1, 36), (-1, 648), (-7, 46656)],
    },
    ExpansionTable {
        kind: AreaKind::Bridge,
        density_prefactor: "2*sqrt(6)/sqrt(pi)",
        density: [(1, 1), (1, 18), (1, 432), (25, 46656)],
        tail_prefactor: "sqrt(6)/(6*sqrt(pi))",
        tail: [(1, 1), (-1, 36), (1, 108), (-155, 46656)],
    },
    ExpansionTable {
        kind: AreaKind::Motion,
        density_prefactor: "sqrt(6)/sqrt(pi)",
        density: [(1, 1), (1, 18), (-1, 162), (49, 5832)],
        tail_prefactor: "sqrt(6)/(3*sqrt(pi))",
        tail: [(1, 1), (-5, 18), (22, 81), (-2591, 5832)],
    },
    ExpansionTable {
        kind: AreaKind::Meander,
        density_prefactor: "3*sqrt(3)",
        density: [(1, 1), (-1, 18), (-1, 162), (5, 5832)],
        tail_prefactor: "sqrt(3)",
        tail: [(1, 1), (-1, 18), (5, 162), (-235, 5832)],
    },
    ExpansionTable {
        kind: AreaKind::DoubleMeander,
        density_prefactor: "2*sqrt(6)/sqrt(pi)",
        density: [(1, 1), (1, 6), (1, 18), (29, 648)],
        tail_prefactor: "2*sqrt(6)/(3*sqrt(pi))",
        tail: [(1, 1), (-1, 6), (2, 9), (-211, 648)],
    },
    ExpansionTable {
        kind: AreaKind::BridgePositive,
        density_prefactor: "sqrt(6)/sqrt(pi)",
        density: [(1, 1), (1, 36), (-7, 5184), (17, 46656)],
        tail_prefactor: "sqrt(6)/(12*sqrt(pi))",
        tail: [(1, 1), (-1, 18), (65, 5184), (-907, 186624)],
    },
    ExpansionTable {
        kind: AreaKind::MotionPositive,
        density_prefactor: "sqrt(6)/(2*sqrt(pi))",
        density: [(1, 1), (1, 36), (-5, 648), (109, 15552)],
        tail_prefactor: "sqrt(6)/(6*sqrt(pi))",
        tail: [(1, 1), (-11, 36), (193, 648), (-2537, 5184)],
    },
];

/// Coefficients of `t` and `t^2` in the normalised asymptotic series of `Bi`, `Bi'` and `BI`.
pub const BETA: [(BetaKind, [(i64, i64); 2]); 3] = [
    (BetaKind::Zero, [(5, 48), (385, 4608)]),
    (BetaKind::One, [(-7, 48), (-455, 4608)]),
    (BetaKind::MinusOne, [(41, 48), (9241, 4608)]),
];

/// Coefficient of `t` in the correction series of each kernel.
pub const HHAT_FIRST: [(AreaKind, (i64, i64)); 7] = [
    (AreaKind::Bridge, (7, 24)),
    (AreaKind::Excursion, (-11, 24)),
    (AreaKind::Motion, (7, 48)),
    (AreaKind::Meander, (-5, 48)),
    (AreaKind::DoubleMeander, (31, 48)),
    (AreaKind::BridgePositive, (1, 24)),
    (AreaKind::MotionPositive, (1, 48)),
];

/// The table entry of one area.
pub fn expansion_table(kind: AreaKind) -> &'static ExpansionTable {
    EXPANSIONS.iter().find(|t| t.kind == kind).expect("every kind is tabulated")
}

pub fn rationals(pairs: &[(i64, i64)]) -> Vec<BigRational> {
    pairs.iter().map(|&(n, d)| q(n, d)).collect()
}

/// Leading constants of the moment asymptotics as
/// `(kind, coefficient, powers of sqrt 2, sqrt 3, sqrt pi)`.
pub const MOMENT_CONSTANTS: [(AreaKind, (i64, i64), i32, i32, i32); 7] = [
    (AreaKind::Excursion, (3, 1), 1, 0, 0),
    (AreaKind::Bridge, (1, 1), 1, 0, 0),
    (AreaKind::Motion, (1, 1), 1, 0, 0),
    (AreaKind::Meander, (1, 1), 0, 1, 1),
    (AreaKind::DoubleMeander, (2, 1), 1, 0, 0),
    (AreaKind::BridgePositive, (1, 2), 1, 0, 0),
    (AreaKind::MotionPositive, (1, 2), 1, 0, 0),
];

/// Density of the excursion area at a few points, to 17 significant digits.
pub const EXCURSION_DENSITY: [(f64, f64); 3] = [
    (0.5, 2.4295478730963648),
    (1.0, 0.21811908409571694),
    (1.5, 0.00029152382780443158),
];
