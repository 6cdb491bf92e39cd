//! The numerical semigroup of a branch: minimal generators via the Zariski
//! recursion, conductor formula, gap counting, structural verification,
//! Merle factorization data for the polar curve, and the roots-of-unity
//! polar sum computed three independent ways.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{divisors, euler_phi, gcd};
use crate::branch::{CharExponents, Parametrization};

/// Gap/conductor enumeration bound; generators whose conductor exceeds this
/// are rejected at construction instead of exhausting memory.
const MAX_ENUMERATION: u64 = 1 << 22;

/// Minimal generators `betabar_0, ..., betabar_g` of the semigroup together
/// with the derived sequences and the two basic invariants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemigroupData {
    betabar: Vec<u64>,
    eseq: Vec<u64>,
    nseq: Vec<u64>,
    conductor: u64,
    delta: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SemigroupError {
    Empty,
    ZeroGenerator,
    NotStrictlyIncreasing,
    /// The conductor formula value is too large to enumerate gaps.
    TooLarge(u64),
    Overflow,
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::Empty => write!(f, "generator list is empty"),
            SemigroupError::ZeroGenerator => write!(f, "generators must be positive"),
            SemigroupError::NotStrictlyIncreasing => {
                write!(f, "generators must be strictly increasing")
            }
            SemigroupError::TooLarge(c) => {
                write!(f, "conductor {} is too large for gap enumeration", c)
            }
            SemigroupError::Overflow => write!(f, "overflow while evaluating the conductor formula"),
        }
    }
}

impl std::error::Error for SemigroupError {}

/// Membership table for `<gens>` on `[0, bound)` by the coin-problem
/// dynamic program.
pub fn membership_table(gens: &[u64], bound: u64) -> Vec<bool> {
    let bound = bound as usize;
    if bound == 0 {
        return Vec::new();
    }
    let mut table = vec![false; bound];
    table[0] = true;
    for s in 1..bound {
        table[s] = gens
            .iter()
            .any(|&g| g as usize <= s && table[s - g as usize]);
    }
    table
}

/// Is `s` a non-negative integer combination of `gens`?
pub fn membership(gens: &[u64], s: u64) -> bool {
    *membership_table(gens, s + 1).last().unwrap()
}

fn gcd_prefixes(gens: &[u64]) -> Vec<u64> {
    let mut eseq = Vec::with_capacity(gens.len());
    let mut e = 0;
    for &g in gens {
        e = gcd(e, g);
        eseq.push(e);
    }
    eseq
}

/// Conductor formula `c = sum_k (n_k - 1) * betabar_k - betabar_0 + 1`.
fn conductor_formula(betabar: &[u64], nseq: &[u64]) -> Result<u64, SemigroupError> {
    let mut acc: i128 = 1 - betabar[0] as i128;
    for (k, &nk) in nseq.iter().enumerate() {
        let term = (nk as i128 - 1)
            .checked_mul(betabar[k + 1] as i128)
            .ok_or(SemigroupError::Overflow)?;
        acc = acc.checked_add(term).ok_or(SemigroupError::Overflow)?;
    }
    // Nonnegative for every strictly increasing generator sequence: the
    // k = g term alone is at least (n_g - 1) * betabar_g >= betabar_0.
    u64::try_from(acc).map_err(|_| SemigroupError::Overflow)
}

fn delta_by_gap_count(betabar: &[u64], conductor: u64) -> u64 {
    membership_table(betabar, conductor)
        .iter()
        .filter(|&&m| !m)
        .count() as u64
}

impl SemigroupData {
    /// Zariski recursion from characteristic exponents:
    /// `betabar_0 = beta_0`, `betabar_1 = beta_1`, and
    /// `betabar_{k+1} = n_k * betabar_k + beta_{k+1} - beta_k`.
    ///
    /// The gcd sequence recomputed from the generators is cross-checked
    /// against the one carried by the characteristic exponents.
    pub fn from_char_exponents(ce: &CharExponents) -> Self {
        let beta = ce.beta();
        let eseq = ce.eseq();
        let g = ce.genus();
        let mut betabar = vec![beta[0]];
        if g >= 1 {
            betabar.push(beta[1]);
            for k in 1..g {
                let nk = eseq[k - 1] / eseq[k];
                betabar.push(nk * betabar[k] + beta[k + 1] - beta[k]);
            }
        }
        let recomputed = gcd_prefixes(&betabar);
        assert_eq!(
            recomputed, eseq,
            "gcd sequence of the generators must match the characteristic exponents"
        );
        let nseq: Vec<u64> = (1..eseq.len()).map(|k| eseq[k - 1] / eseq[k]).collect();
        let conductor = conductor_formula(&betabar, &nseq)
            .expect("conductor formula cannot overflow for branch-scale data");
        let delta = delta_by_gap_count(&betabar, conductor);
        SemigroupData {
            betabar,
            eseq: recomputed,
            nseq,
            conductor,
            delta,
        }
    }

    /// Builds from a raw (e.g. user-asserted) generator list. Only basic
    /// sanity is enforced here; deeper structure (minimality, conductor
    /// boundary, symmetry) is reported by [`SemigroupData::verify_structure`]
    /// so that corrupted inputs produce diagnoses instead of panics.
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        if !gens.windows(2).all(|w| w[0] < w[1]) {
            return Err(SemigroupError::NotStrictlyIncreasing);
        }
        let betabar = gens.to_vec();
        let eseq = gcd_prefixes(&betabar);
        let nseq: Vec<u64> = (1..eseq.len()).map(|k| eseq[k - 1] / eseq[k]).collect();
        let conductor = conductor_formula(&betabar, &nseq)?;
        if conductor > MAX_ENUMERATION {
            return Err(SemigroupError::TooLarge(conductor));
        }
        let delta = delta_by_gap_count(&betabar, conductor);
        Ok(SemigroupData {
            betabar,
            eseq,
            nseq,
            conductor,
            delta,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.betabar
    }

    pub fn eseq(&self) -> &[u64] {
        &self.eseq
    }

    /// Quotients `n_k = e_{k-1} / e_k`, one per generator past the first.
    pub fn nseq(&self) -> &[u64] {
        &self.nseq
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of gaps below the conductor, computed independently of the
    /// conductor formula by brute-force membership.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn genus(&self) -> usize {
        self.betabar.len() - 1
    }

    pub fn contains(&self, s: u64) -> bool {
        if s >= self.conductor {
            return true;
        }
        membership(&self.betabar, s)
    }

    /// Brute-force verification of the structural facts the rest of the
    /// pipeline relies on:
    ///
    /// (a) each generator is minimal outside the semigroup of its
    ///     predecessors (scan up to `c + betabar_0`);
    /// (b) `c - 1` is a gap and `[c, c + betabar_0)` lies in the semigroup
    ///     (which forces everything above `c` in);
    /// (c) `c = 2 * delta`;
    /// (d) `n_k * betabar_k < betabar_{k+1}` and every `n_k > 1`.
    pub fn verify_structure(&self) -> StructureReport {
        let mut failures = Vec::new();
        let bound = self.conductor + self.betabar[0] + 1;
        let full = membership_table(&self.betabar, bound);

        let mut generator_minimality = true;
        for k in 0..self.betabar.len() {
            let sub = membership_table(&self.betabar[..k], bound);
            let min_outside = (1..bound as usize).find(|&s| full[s] && !sub[s]);
            if min_outside != Some(self.betabar[k] as usize) {
                generator_minimality = false;
                failures.push(match min_outside {
                    Some(m) => format!(
                        "generator {} is not minimal outside <{:?}>: found {}",
                        self.betabar[k],
                        &self.betabar[..k],
                        m
                    ),
                    None => format!(
                        "generator {} is redundant: nothing lies outside <{:?}>",
                        self.betabar[k],
                        &self.betabar[..k]
                    ),
                });
            }
        }

        let below_is_gap = self.conductor == 0 || !full[(self.conductor - 1) as usize];
        let window_inside =
            (self.conductor..self.conductor + self.betabar[0]).all(|s| full[s as usize]);
        let conductor_boundary = below_is_gap && window_inside;
        if !below_is_gap {
            failures.push(format!("{} is not a gap", self.conductor - 1));
        }
        if !window_inside {
            failures.push(format!(
                "[{}, {}) is not contained in the semigroup",
                self.conductor,
                self.conductor + self.betabar[0]
            ));
        }

        let symmetry = self.conductor == 2 * self.delta;
        if !symmetry {
            failures.push(format!(
                "c = {} but 2*delta = {}",
                self.conductor,
                2 * self.delta
            ));
        }

        let mut chain_inequalities = self.nseq.iter().all(|&nk| nk > 1);
        if !chain_inequalities {
            failures.push("some quotient n_k equals 1".into());
        }
        for k in 1..self.betabar.len() - 1 {
            if self.nseq[k - 1] * self.betabar[k] >= self.betabar[k + 1] {
                chain_inequalities = false;
                failures.push(format!(
                    "n_{} * betabar_{} = {} is not below betabar_{} = {}",
                    k,
                    k,
                    self.nseq[k - 1] * self.betabar[k],
                    k + 1,
                    self.betabar[k + 1]
                ));
            }
        }

        StructureReport {
            generator_minimality,
            conductor_boundary,
            symmetry,
            chain_inequalities,
            failures,
        }
    }

    /// Per-package data of the Merle factorization of the polar curve:
    /// predicted order `o_k = n/e_k - n/e_{k-1}`, contact quotient
    /// `q_k = e_{k-1} * betabar_k / n`, and divisibility modulus
    /// `d_k = n/e_{k-1}`.
    ///
    /// Returns `None` when the gcd sequence does not reach 1 (possible only
    /// for corrupted user-asserted generators) or when there is a single
    /// generator.
    pub fn merle(&self) -> Option<MerleData> {
        if self.genus() == 0 || *self.eseq.last().unwrap() != 1 {
            return None;
        }
        let n = self.betabar[0];
        let g = self.genus();
        let mut orders = Vec::with_capacity(g);
        let mut contacts = Vec::with_capacity(g);
        let mut moduli = Vec::with_capacity(g);
        for k in 1..=g {
            let o = n / self.eseq[k] - n / self.eseq[k - 1];
            let d = n / self.eseq[k - 1];
            orders.push(o);
            moduli.push(d);
            contacts.push(Rational::new(self.eseq[k - 1] * self.betabar[k], n));
            debug_assert_eq!(o % d, 0, "package order is a multiple of its modulus");
        }
        assert_eq!(
            orders.iter().sum::<u64>(),
            n - 1,
            "package orders telescope to n - 1"
        );
        Some(MerleData {
            orders,
            contacts,
            moduli,
        })
    }
}

/// Outcome of [`SemigroupData::verify_structure`]; each failed assertion is
/// reported individually in `failures`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureReport {
    pub generator_minimality: bool,
    pub conductor_boundary: bool,
    pub symmetry: bool,
    pub chain_inequalities: bool,
    pub failures: Vec<String>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.generator_minimality
            && self.conductor_boundary
            && self.symmetry
            && self.chain_inequalities
    }
}

/// A reduced non-negative rational; contact quotients are genuinely
/// non-integral (e.g. 13/2), so they are stored exactly.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Merle factorization data, one entry per package `k = 1..=g`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MerleData {
    pub orders: Vec<u64>,
    pub contacts: Vec<Rational>,
    pub moduli: Vec<u64>,
}

/// The polar intersection number computed three independent ways; all three
/// agree whenever `p` does not divide `n` (guaranteed by a validated
/// parametrization).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PolarTriple {
    /// Sum over nontrivial n-th roots of unity of `ord(y(t) - y(eps t))`,
    /// evaluated combinatorially: roots of a given order `d | n` contribute
    /// `phi(d) * min { j in supp(y) : d does not divide j }`. The
    /// coefficient `y_j (1 - eps^j)` is nonzero exactly when `y_j != 0` and
    /// `ord(eps)` does not divide `j`, so only support membership matters
    /// and no extension field is ever constructed.
    pub unity_sum: u64,
    /// `sum_k (e_{k-1} - e_k) * beta_k` over the characteristic exponents.
    pub exponent_sum: u64,
    /// `sum_k (n_k - 1) * betabar_k` over the minimal generators.
    pub generator_sum: u64,
}

impl PolarTriple {
    pub fn values(&self) -> [u64; 3] {
        [self.unity_sum, self.exponent_sum, self.generator_sum]
    }

    pub fn agree(&self) -> bool {
        self.unity_sum == self.exponent_sum && self.exponent_sum == self.generator_sum
    }
}

pub fn polar_intersection_triple(
    param: &Parametrization,
    ce: &CharExponents,
    sd: &SemigroupData,
) -> PolarTriple {
    let n = param.n();
    let supp = param.support();

    let mut unity_sum = 0;
    for d in divisors(n) {
        if d == 1 {
            continue;
        }
        let j = supp
            .iter()
            .copied()
            .find(|&j| j % d != 0)
            .expect("primitivity: some exponent escapes every divisor > 1");
        unity_sum += euler_phi(d) * j;
    }

    let beta = ce.beta();
    let eseq = ce.eseq();
    let exponent_sum = (1..beta.len())
        .map(|k| (eseq[k - 1] - eseq[k]) * beta[k])
        .sum();

    let generator_sum = (1..sd.generators().len())
        .map(|k| (sd.nseq()[k - 1] - 1) * sd.generators()[k])
        .sum();

    PolarTriple {
        unity_sum,
        exponent_sum,
        generator_sum,
    }
}
