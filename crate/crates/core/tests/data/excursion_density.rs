// Generated by gen_excursion_density.py; do not edit.
// (x, density of the excursion area at x)
pub const EXCURSION_DENSITY: &[(f64, f64)] = &[
    (0.2, 0.00000071012843922405794),
    (0.3, 0.045491105729716751),
    (0.4, 0.9910857454382035),
    (0.5, 2.4295478730963648),
    (0.6, 2.6301346495765307),
    (0.8, 1.1139124749617294),
    (1.0, 0.21811908409571694),
    (1.2, 0.023336884669731265),
    (1.5, 0.00029152382780443158),
    (1.8, 0.0000011229637905615349),
    (2.0, 0.000000014604258102041404),
    (2.2, 0.00000000011497545613312907),
];
