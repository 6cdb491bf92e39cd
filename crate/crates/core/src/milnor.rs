//! The Milnor number `mu(f) = dim K[[x,y]]/(f_x, f_y)` over `F_p`, computed
//! exactly by truncated local-algebra dimensions.
//!
//! `truncated_dim(g1, g2, D)` is the dimension of `K[x,y]/(g1, g2, m^D)`;
//! since the ideal contains `m^D` the quotient is supported at the origin
//! only, so this equals the dimension of `K[[x,y]]/(g1, g2, m^D)`. The
//! dimension is non-decreasing in `D`, and by Nakayama a single equality
//! `d(D) = d(D+1)` already certifies `m^D` lies inside `(g1, g2)`, so the
//! value has converged to `mu`.

use serde::{Deserialize, Serialize};

use crate::field::PrimeField;
use crate::poly::{BivarPoly, Order};

/// Hard cap on the monomial-basis size of a single truncation step; above
/// this the run reports `Unknown` instead of exhausting memory.
const MAX_COLUMNS: usize = 12_000;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum MilnorResult {
    Finite { value: u64, stabilized_at: u64 },
    Infinite { reason: String },
    Unknown { reason: String },
}

impl MilnorResult {
    pub fn value(&self) -> Option<u64> {
        match self {
            MilnorResult::Finite { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, MilnorResult::Finite { .. })
    }
}

impl std::fmt::Display for MilnorResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MilnorResult::Finite {
                value,
                stabilized_at,
            } => write!(f, "{} (stabilized at truncation degree {})", value, stabilized_at),
            MilnorResult::Infinite { reason } => write!(f, "infinite ({})", reason),
            MilnorResult::Unknown { reason } => write!(f, "unknown ({})", reason),
        }
    }
}

/// Row-echelon accumulator over `F_p`; rows are dense in the monomial basis.
struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Option<Vec<u64>>>, // indexed by pivot column, normalized
    rank: usize,
}

impl Echelon {
    fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: vec![None; ncols],
            rank: 0,
        }
    }

    fn insert(&mut self, mut row: Vec<u64>) {
        let f = self.field;
        let mut col = 0;
        while col < self.ncols {
            if row[col] == 0 {
                col += 1;
                continue;
            }
            match &self.rows[col] {
                Some(pivot) => {
                    let c = row[col];
                    for j in col..self.ncols {
                        if pivot[j] != 0 {
                            row[j] = f.sub(row[j], f.mul(c, pivot[j]));
                        }
                    }
                }
                None => {
                    let inv = f.inv(row[col]).expect("pivot entry is nonzero");
                    for v in row.iter_mut().skip(col) {
                        if *v != 0 {
                            *v = f.mul(*v, inv);
                        }
                    }
                    self.rows[col] = Some(row);
                    self.rank += 1;
                    return;
                }
            }
            col += 1;
        }
    }
}

/// Index of the monomial `x^a y^b` in the graded basis of total degree < D:
/// degrees ascending, and within degree `s` sorted by `b`.
fn monomial_index(a: u64, b: u64) -> usize {
    let s = (a + b) as usize;
    s * (s + 1) / 2 + b as usize
}

/// `dim K[x,y]/(g1, g2, m^D)` over `F_p`, by exact Gaussian elimination on
/// the matrix of all monomial multiples of `g1`, `g2` truncated below total
/// degree `D`.
pub fn truncated_dim(g1: &BivarPoly, g2: &BivarPoly, trunc: u64) -> u64 {
    assert!(trunc >= 1, "truncation degree must be positive");
    let field = g1.field();
    assert_eq!(field, g2.field(), "mixed moduli");
    let d = trunc as usize;
    let ncols = d * (d + 1) / 2;
    let mut ech = Echelon::new(field, ncols);
    for g in [g1, g2] {
        let og = match g.ord() {
            Order::Finite(o) => o,
            Order::Infinite => continue,
        };
        if og >= trunc {
            continue;
        }
        // Multiples x^a y^b * g with a + b + ord(g) < D; anything beyond
        // truncates to zero.
        let max_s = trunc - og;
        for s in 0..max_s {
            for a in 0..=s {
                let b = s - a;
                let mut row = vec![0u64; ncols];
                let mut nonzero = false;
                for ((i, j), c) in g.terms() {
                    if i + a + j + b < trunc {
                        row[monomial_index(i + a, j + b)] = c;
                        nonzero = true;
                    }
                }
                if nonzero {
                    ech.insert(row);
                }
            }
        }
    }
    (ncols - ech.rank) as u64
}

/// Computes `mu(f)` by increasing truncation degree until the dimension
/// stabilizes (Nakayama), up to `d_max`.
///
/// A vanishing partial makes the Jacobian ideal principal and the quotient
/// infinite-dimensional, reported immediately. A run that neither
/// stabilizes nor exceeds the column cap by `d_max` is `Unknown`, never
/// coerced to `Infinite`.
pub fn milnor_number(f: &BivarPoly, d_max: u64) -> MilnorResult {
    let fx = f.partial_x();
    let fy = f.partial_y();
    match (fx.is_zero(), fy.is_zero()) {
        (true, true) => {
            return MilnorResult::Infinite {
                reason: "both partial derivatives vanish identically".into(),
            }
        }
        (true, false) => {
            return MilnorResult::Infinite {
                reason: "the x-partial vanishes identically; the Jacobian ideal is principal"
                    .into(),
            }
        }
        (false, true) => {
            return MilnorResult::Infinite {
                reason: "the y-partial vanishes identically; the Jacobian ideal is principal"
                    .into(),
            }
        }
        (false, false) => {}
    }
    let mut prev = truncated_dim(&fx, &fy, 2);
    for d in 3..=d_max {
        let ncols = (d as usize) * (d as usize + 1) / 2;
        if ncols > MAX_COLUMNS {
            return MilnorResult::Unknown {
                reason: format!(
                    "no stabilization before the memory guard at truncation degree {}",
                    d
                ),
            };
        }
        let cur = truncated_dim(&fx, &fy, d);
        assert!(cur >= prev, "truncated dimension must be non-decreasing");
        if cur == prev {
            return MilnorResult::Finite {
                value: cur,
                stabilized_at: d - 1,
            };
        }
        prev = cur;
    }
    MilnorResult::Unknown {
        reason: format!("no stabilization up to truncation degree {}", d_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_bivar;

    fn poly(p: u64, src: &str) -> BivarPoly {
        parse_bivar(src).unwrap().reduce(PrimeField::new(p).unwrap())
    }

    #[test]
    fn truncated_dim_examples() {
        let fp = PrimeField::new(5).unwrap();
        let x = BivarPoly::monomial(fp, 1, 0, 1);
        let y = BivarPoly::monomial(fp, 0, 1, 1);
        assert_eq!(truncated_dim(&x, &y, 3), 1);

        let x2 = BivarPoly::monomial(fp, 2, 0, 1);
        assert_eq!(truncated_dim(&x2, &y, 4), 2);

        // partials of x^3 + y^2 over F_5: units do not change the ideal
        let g1 = BivarPoly::monomial(fp, 2, 0, 3);
        let g2 = BivarPoly::monomial(fp, 0, 1, 2);
        assert_eq!(truncated_dim(&g1, &g2, 4), 2);
    }

    #[test]
    fn monomial_ideal_closed_form() {
        // dim K[[x,y]]/(x^a, y^b) = a*b, read off at a stabilized truncation
        let fp = PrimeField::new(7).unwrap();
        for a in 1..=6u64 {
            for b in 1..=6u64 {
                let g1 = BivarPoly::monomial(fp, a, 0, 1);
                let g2 = BivarPoly::monomial(fp, 0, b, 1);
                let d = a + b;
                assert_eq!(truncated_dim(&g1, &g2, d), a * b);
                assert_eq!(truncated_dim(&g1, &g2, d + 1), a * b);
            }
        }
    }

    #[test]
    fn milnor_cusp() {
        let m = milnor_number(&poly(5, "x^3 + y^2"), 64);
        assert_eq!(m.value(), Some(2));
    }

    #[test]
    fn milnor_of_quartic_with_colliding_generator() {
        let f = poly(13, "(y^2 + x^3)^2 + x^5*y");
        assert_eq!(milnor_number(&f, 96).value(), Some(17));
        let f = poly(5, "(y^2 + x^3)^2 + x^5*y");
        assert_eq!(milnor_number(&f, 96).value(), Some(16));
    }

    #[test]
    fn milnor_infinite_on_vanishing_partial() {
        let f = poly(5, "x^5 + y^4");
        assert!(matches!(
            milnor_number(&f, 64),
            MilnorResult::Infinite { .. }
        ));
    }

    #[test]
    fn milnor_of_unit_multiple() {
        // (1+x)(x^5+y^4) over F_5 has mu = 15 even though x^5+y^4 does not
        // have a finite Milnor number there.
        let f = poly(5, "(1+x)(x^5+y^4)");
        assert_eq!(milnor_number(&f, 96).value(), Some(15));
    }

    #[test]
    fn milnor_unknown_when_not_stabilizing() {
        // f = x^2*y: f_x = 2xy, f_y = x^2; all powers of y survive.
        let f = poly(7, "x^2*y");
        assert!(matches!(
            milnor_number(&f, 12),
            MilnorResult::Unknown { .. }
        ));
    }

    #[test]
    fn milnor_invariant_under_units_and_swap() {
        let f = poly(7, "(y^2 + x^3)^2 + x^5*y");
        let m = milnor_number(&f, 96);
        assert_eq!(m.value(), Some(16));
        assert_eq!(milnor_number(&f.scale(3), 96).value(), m.value());
        assert_eq!(milnor_number(&f.swap_xy(), 96).value(), m.value());
    }
}
