//! Exact truncated p-adic arithmetic: unit actions on `Z/p^k` as finite
//! shadows of procyclic module actions.
//!
//! A unit `b` acting by multiplication on `Z/p^k` models conjugation on
//! a procyclic pro-p subgroup at precision `k`. The images of the
//! iterated action commutators are the submodules `{x (b-1)^n}`, whose
//! index grows linearly in `n` with slope `v_p(b-1)` until the precision
//! ceiling; operations return an explicit marker instead of silently
//! truncating at that ceiling.

mod snf;

pub use snf::{min_generators, smith_invariant_factors, ModuleSpan};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PadicError;

/// Hard ceiling on the precision exponent.
pub const MAX_PRECISION: u32 = 64;

/// Moduli up to this bound get the exhaustive unit-group treatment.
pub const EXHAUSTIVE_UNIT_LIMIT: u64 = 1 << 20;

/// A p-adic valuation: the exponent of `p` in an integer, infinite for 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinite => None,
        }
    }
}

/// Largest `e` with `p^e | m`; infinite for `m = 0`.
pub fn valuation(p: u64, m: i64) -> Valuation {
    valuation_big(p, &BigInt::from(m))
}

pub fn valuation_big(p: u64, m: &BigInt) -> Valuation {
    assert!(p >= 2, "valuation needs p >= 2");
    if m.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    let mut m = m.abs();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        m = q;
        v += 1;
    }
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// An automorphism of the procyclic module at precision `p^k`: the map
/// `x -> x * b` for a unit residue `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPadicUnit {
    p: u64,
    k: u32,
    b: BigUint,
}

impl TruncatedPadicUnit {
    pub fn new(p: u64, k: u32, b: BigUint) -> Result<Self, PadicError> {
        if !is_prime(p) {
            return Err(PadicError::NotPrime { p });
        }
        if k == 0 || k > MAX_PRECISION {
            return Err(PadicError::BadPrecision {
                k,
                max: MAX_PRECISION,
            });
        }
        let modulus = BigUint::from(p).pow(k);
        let b = b % &modulus;
        if (&b % p).is_zero() {
            return Err(PadicError::NotAUnit {
                b: b.to_string(),
                p,
                k,
            });
        }
        Ok(TruncatedPadicUnit { p, k, b })
    }

    pub fn from_u64(p: u64, k: u32, b: u64) -> Result<Self, PadicError> {
        TruncatedPadicUnit::new(p, k, BigUint::from(b))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.p).pow(self.k)
    }

    /// Is this the identity action?
    pub fn is_central(&self) -> bool {
        self.b.is_one()
    }

    /// `v_p(b - 1)`; `None` for the identity action.
    pub fn displacement_valuation(&self) -> Option<u64> {
        if self.is_central() {
            return None;
        }
        let diff = BigInt::from(self.b.clone()) - BigInt::one();
        valuation_big(self.p, &diff).finite()
    }

    /// The same unit re-read at a different precision (the residue is
    /// reduced or zero-extended as appropriate).
    pub fn at_precision(&self, k: u32) -> Result<Self, PadicError> {
        TruncatedPadicUnit::new(self.p, k, self.b.clone())
    }
}

/// Index data of the submodule `{x (b-1)^n}` of `Z/p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubmoduleIndex {
    /// `b = 1`: the action is central and every commutator vanishes.
    Central,
    /// The submodule is `p^e (Z/p^k)`, of index `p^e`.
    Exponent(u64),
    /// `n * v_p(b-1) >= k`: the submodule is invisible at this
    /// precision; retry with a larger `k`.
    PrecisionExhausted,
}

/// Index exponent of the n-th iterated action-commutator submodule:
/// exactly `n * v_p(b-1)` whenever that stays below the precision.
pub fn commutator_submodule_index(unit: &TruncatedPadicUnit, n: u64) -> SubmoduleIndex {
    assert!(n >= 1, "the commutator chain starts at n = 1");
    match unit.displacement_valuation() {
        None => SubmoduleIndex::Central,
        Some(v) => {
            let e = v.saturating_mul(n);
            if e >= unit.k() as u64 {
                SubmoduleIndex::PrecisionExhausted
            } else {
                SubmoduleIndex::Exponent(e)
            }
        }
    }
}

/// Structure of the unit group `(Z/p^k)^*` in both canonical shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroupStructure {
    pub p: u64,
    pub k: u32,
    /// `phi(p^k)`.
    pub order: BigUint,
    /// Invariant factors `d_1 | d_2 | ... | d_r` (ascending).
    pub invariant_factors: Vec<BigUint>,
    /// Elementary divisors: prime powers, ascending.
    pub elementary_divisors: Vec<BigUint>,
}

impl UnitGroupStructure {
    /// Rendering like `C2 x C9`; the trivial group renders `C1`.
    pub fn display(&self) -> String {
        if self.elementary_divisors.is_empty() {
            return "C1".to_string();
        }
        self.elementary_divisors
            .iter()
            .map(|d| format!("C{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Computes the structure of `(Z/p^k)^*`: exhaustively below
/// [`EXHAUSTIVE_UNIT_LIMIT`], by verified generator tests above it.
pub fn unit_group_structure(p: u64, k: u32) -> Result<UnitGroupStructure, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime { p });
    }
    if k == 0 || k > MAX_PRECISION {
        return Err(PadicError::BadPrecision {
            k,
            max: MAX_PRECISION,
        });
    }
    let modulus_big = BigUint::from(p).pow(k);
    if let Some(modulus) = modulus_big.to_u64().filter(|&m| m <= EXHAUSTIVE_UNIT_LIMIT) {
        return Ok(unit_group_exhaustive(p, k, modulus));
    }
    unit_group_by_generators(p, k, &modulus_big)
}

/// Element-order census of `(Z/p^k)^*` for small moduli.
fn unit_group_exhaustive(p: u64, k: u32, modulus: u64) -> UnitGroupStructure {
    let phi = modulus / p * (p - 1);
    let phi_factors = factor_u64(phi);
    let mut orders = Vec::with_capacity(phi as usize);
    for x in 1..modulus {
        if x % p == 0 {
            continue;
        }
        orders.push(element_order_u64(x, phi, &phi_factors, modulus));
    }
    debug_assert_eq!(orders.len() as u64, phi);

    // per prime q: exponent partition of the Sylow q-part, read off the
    // counts of elements whose order has q-part dividing q^j (each count
    // carries a constant factor of phi / q^a from the coprime part)
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for &(q, a) in &phi_factors {
        let coprime_count = phi / q.pow(a);
        let mut counts_ge = Vec::new(); // count of cyclic factors with exponent >= j
        let mut prev_log = 0u32;
        for j in 1..=a {
            let qj = q.pow(j);
            let n_j = orders
                .iter()
                .filter(|&&o| {
                    let mut qpart = 1u64;
                    let mut o = o;
                    while o % q == 0 {
                        o /= q;
                        qpart *= q;
                    }
                    qpart <= qj
                })
                .count() as u64;
            debug_assert_eq!(n_j % coprime_count, 0);
            let log = log_exact(n_j / coprime_count, q);
            counts_ge.push(log - prev_log);
            prev_log = log;
        }
        // conjugate partition: exponent of the i-th largest factor
        let factor_count = counts_ge.first().copied().unwrap_or(0);
        let mut exponents = Vec::new();
        for i in 1..=factor_count {
            let e = counts_ge.iter().filter(|&&c| c >= i).count() as u32;
            exponents.push(e);
        }
        exponents.sort_unstable_by(|x, y| y.cmp(x)); // descending
        if !exponents.is_empty() {
            per_prime.push((q, exponents));
        }
    }
    assemble_structure(p, k, BigUint::from(phi), per_prime)
}

/// Large moduli: find and verify generators instead of enumerating.
fn unit_group_by_generators(
    p: u64,
    k: u32,
    modulus: &BigUint,
) -> Result<UnitGroupStructure, PadicError> {
    let phi = modulus / p * (p - 1);
    if p == 2 {
        // k >= 3 wherever this path is reached with p = 2 (small k falls
        // under the exhaustive limit). (Z/2^k)^* = <-1> x <3>: powers of
        // 3 are 1 or 3 mod 8, so -1 is not among them, and 3 has order
        // 2^(k-2), verified below.
        let ord = multiplicative_order(&BigUint::from(3u8), &phi, &[(2, k - 1)], modulus);
        let expected = BigUint::from(2u8).pow(k - 2);
        assert_eq!(ord, expected, "order of 3 mod 2^k");
        let per_prime = vec![(2u64, vec![k - 2, 1])];
        return Ok(assemble_structure(p, k, phi, per_prime));
    }
    if p >= (1 << 32) {
        // factoring p - 1 by trial division stops being cheap
        return Err(PadicError::UnsupportedModulus { p, k });
    }
    let mut phi_factors: Vec<(u64, u32)> = factor_u64(p - 1);
    if k > 1 {
        phi_factors.push((p, k - 1));
        phi_factors.sort_unstable();
    }
    // search for a primitive root: its existence is the verification
    let mut root = None;
    for g in 2..p {
        let ord = multiplicative_order(&BigUint::from(g), &phi, &phi_factors, modulus);
        if ord == phi {
            root = Some(g);
            break;
        }
    }
    assert!(root.is_some(), "odd prime-power unit groups are cyclic");
    let per_prime = phi_factors
        .iter()
        .map(|&(q, a)| (q, vec![a]))
        .collect();
    Ok(assemble_structure(p, k, phi, per_prime))
}

fn assemble_structure(
    p: u64,
    k: u32,
    order: BigUint,
    per_prime: Vec<(u64, Vec<u32>)>,
) -> UnitGroupStructure {
    let rank = per_prime.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
    let mut invariant_factors = Vec::new();
    for t in 0..rank {
        let mut d = BigUint::one();
        for (q, exponents) in &per_prime {
            if let Some(&e) = exponents.get(t) {
                d *= BigUint::from(*q).pow(e);
            }
        }
        invariant_factors.push(d);
    }
    invariant_factors.reverse(); // ascending, d_i | d_{i+1}
    let mut elementary_divisors: Vec<BigUint> = per_prime
        .iter()
        .flat_map(|(q, exponents)| {
            exponents
                .iter()
                .map(|&e| BigUint::from(*q).pow(e))
                .collect::<Vec<_>>()
        })
        .collect();
    elementary_divisors.sort();
    UnitGroupStructure {
        p,
        k,
        order,
        invariant_factors,
        elementary_divisors,
    }
}

/// Order of `x` in a group of exponent dividing `bound` with known
/// factorization.
fn multiplicative_order(
    x: &BigUint,
    bound: &BigUint,
    bound_factors: &[(u64, u32)],
    modulus: &BigUint,
) -> BigUint {
    let mut order = bound.clone();
    for &(q, a) in bound_factors {
        let q = BigUint::from(q);
        for _ in 0..a {
            let candidate = &order / &q;
            if x.modpow(&candidate, modulus).is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    order
}

fn element_order_u64(x: u64, phi: u64, phi_factors: &[(u64, u32)], modulus: u64) -> u64 {
    let mut order = phi;
    for &(q, a) in phi_factors {
        for _ in 0..a {
            if order % q != 0 {
                break;
            }
            let candidate = order / q;
            if mod_pow_u64(x, candidate, modulus) == 1 {
                order = candidate;
            } else {
                break;
            }
        }
    }
    order
}

fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn log_exact(n: u64, base: u64) -> u32 {
    let mut n = n;
    let mut log = 0;
    while n > 1 {
        debug_assert_eq!(n % base, 0, "count is a power of the prime");
        n /= base;
        log += 1;
    }
    log
}

/// Result of a rank probe at finite precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankOutcome {
    Rank(usize),
    /// Some nontrivial component vanished at this precision.
    PrecisionExhausted,
}

/// Minimal generator count of the span
/// `{((b_a - 1)^n, 0), (0, (b_b - 1)^n)}` inside `(Z/p^k)^2`: the
/// diagonal-action obstruction. Whenever both units act nontrivially and
/// the precision clears `n * max(v_a, v_b)`, the rank is 2.
pub fn diagonal_sink_rank(
    unit_a: &TruncatedPadicUnit,
    unit_b: &TruncatedPadicUnit,
    n: u64,
) -> Result<RankOutcome, PadicError> {
    if unit_a.p() != unit_b.p() || unit_a.k() != unit_b.k() {
        return Err(PadicError::ModulusMismatch {
            p1: unit_a.p(),
            k1: unit_a.k(),
            p2: unit_b.p(),
            k2: unit_b.k(),
        });
    }
    assert!(n >= 1);
    for unit in [unit_a, unit_b] {
        if let Some(v) = unit.displacement_valuation() {
            if v.saturating_mul(n) >= unit.k() as u64 {
                return Ok(RankOutcome::PrecisionExhausted);
            }
        }
    }
    let modulus = BigInt::from(unit_a.modulus());
    let component = |unit: &TruncatedPadicUnit| -> BigInt {
        if unit.is_central() {
            BigInt::zero()
        } else {
            let base = BigInt::from(unit.b().clone()) - BigInt::one();
            base.modpow(&BigInt::from(n), &modulus)
        }
    };
    let da = component(unit_a);
    let db = component(unit_b);
    let span = ModuleSpan::new(
        unit_a.p(),
        unit_a.k(),
        vec![
            vec![da, BigInt::zero()],
            vec![BigInt::zero(), db],
        ],
    );
    Ok(RankOutcome::Rank(min_generators(&span)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(valuation(3, 9), Valuation::Finite(2));
        assert_eq!(valuation(2, 12), Valuation::Finite(2));
        assert_eq!(valuation(5, 0), Valuation::Infinite);
        assert_eq!(valuation(7, 1), Valuation::Finite(0));
        assert_eq!(valuation(3, -27), Valuation::Finite(3));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97) && is_prime(2_147_483_647));
        // 3215031751 is a strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime(1) && !is_prime(91) && !is_prime(3_215_031_751));
    }

    #[test]
    fn unit_validation() {
        assert!(TruncatedPadicUnit::from_u64(3, 8, 4).is_ok());
        assert!(matches!(
            TruncatedPadicUnit::from_u64(3, 8, 6),
            Err(PadicError::NotAUnit { .. })
        ));
        assert!(matches!(
            TruncatedPadicUnit::from_u64(4, 8, 3),
            Err(PadicError::NotPrime { p: 4 })
        ));
        assert!(matches!(
            TruncatedPadicUnit::from_u64(3, 0, 1),
            Err(PadicError::BadPrecision { .. })
        ));
    }

    #[test]
    fn index_growth_examples() {
        // v_3(4 - 1) = 1, so n = 2 gives index exponent 2
        let u = TruncatedPadicUnit::from_u64(3, 8, 4).unwrap();
        assert_eq!(commutator_submodule_index(&u, 2), SubmoduleIndex::Exponent(2));
        // central action
        let one = TruncatedPadicUnit::from_u64(3, 8, 1).unwrap();
        assert_eq!(commutator_submodule_index(&one, 5), SubmoduleIndex::Central);
        // v_2(3 - 1) = 1, n = 3 -> e = 3
        let u2 = TruncatedPadicUnit::from_u64(2, 10, 3).unwrap();
        assert_eq!(commutator_submodule_index(&u2, 3), SubmoduleIndex::Exponent(3));
    }

    #[test]
    fn index_hits_precision_ceiling() {
        let u = TruncatedPadicUnit::from_u64(3, 4, 10).unwrap(); // v = 2
        assert_eq!(commutator_submodule_index(&u, 1), SubmoduleIndex::Exponent(2));
        assert_eq!(
            commutator_submodule_index(&u, 2),
            SubmoduleIndex::PrecisionExhausted
        );
    }

    #[test]
    fn additivity_below_precision() {
        let u = TruncatedPadicUnit::from_u64(5, 12, 6).unwrap(); // v = 1
        let (SubmoduleIndex::Exponent(e2), SubmoduleIndex::Exponent(e3)) =
            (commutator_submodule_index(&u, 2), commutator_submodule_index(&u, 3))
        else {
            panic!("both below precision");
        };
        let SubmoduleIndex::Exponent(e5) = commutator_submodule_index(&u, 5) else {
            panic!("still below precision");
        };
        assert_eq!(e2 + e3, e5);
    }

    #[test]
    fn unit_group_structures_match_truncated_pattern() {
        // (Z/27)^* = C2 x C9
        let s = unit_group_structure(3, 3).unwrap();
        assert_eq!(s.order, BigUint::from(18u8));
        assert_eq!(s.invariant_factors, vec![BigUint::from(18u8)]);
        assert_eq!(
            s.elementary_divisors,
            vec![BigUint::from(2u8), BigUint::from(9u8)]
        );
        assert_eq!(s.display(), "C2 x C9");
        // (Z/8)^* is the Klein group
        let s = unit_group_structure(2, 3).unwrap();
        assert_eq!(s.invariant_factors, vec![BigUint::from(2u8), BigUint::from(2u8)]);
        assert_eq!(s.display(), "C2 x C2");
        // (Z/5)^* is cyclic of order 4
        let s = unit_group_structure(5, 1).unwrap();
        assert_eq!(s.invariant_factors, vec![BigUint::from(4u8)]);
        assert_eq!(s.display(), "C4");
    }

    #[test]
    fn unit_group_small_two_power_exceptions() {
        // the stable pattern C2 x C_{2^(k-2)} only starts at k = 3
        let s = unit_group_structure(2, 1).unwrap();
        assert!(s.invariant_factors.is_empty());
        assert_eq!(s.display(), "C1");
        let s = unit_group_structure(2, 2).unwrap();
        assert_eq!(s.invariant_factors, vec![BigUint::from(2u8)]);
    }

    #[test]
    fn generator_path_agrees_with_exhaustive() {
        // force both paths at a modulus that the exhaustive path covers
        let exhaustive = unit_group_exhaustive(3, 7, 3u64.pow(7));
        let by_generators =
            unit_group_by_generators(3, 7, &BigUint::from(3u64.pow(7))).unwrap();
        assert_eq!(exhaustive, by_generators);
        let exhaustive = unit_group_exhaustive(2, 9, 512);
        let by_generators = unit_group_by_generators(2, 9, &BigUint::from(512u32)).unwrap();
        assert_eq!(exhaustive, by_generators);
    }

    #[test]
    fn big_modulus_goes_through_generator_path() {
        let s = unit_group_structure(3, 40).unwrap();
        assert_eq!(s.order, BigUint::from(3u64).pow(39) * 2u8);
        assert_eq!(s.invariant_factors.len(), 1);
        let s2 = unit_group_structure(2, 40).unwrap();
        assert_eq!(
            s2.invariant_factors,
            vec![BigUint::from(2u8), BigUint::from(2u64).pow(38)]
        );
    }

    #[test]
    fn diagonal_rank_examples() {
        let ua = TruncatedPadicUnit::from_u64(3, 6, 4).unwrap();
        let ub = TruncatedPadicUnit::from_u64(3, 6, 7).unwrap();
        assert_eq!(diagonal_sink_rank(&ua, &ub, 1), Ok(RankOutcome::Rank(2)));
        let one = TruncatedPadicUnit::from_u64(3, 6, 1).unwrap();
        assert_eq!(diagonal_sink_rank(&one, &ub, 1), Ok(RankOutcome::Rank(1)));
        assert_eq!(diagonal_sink_rank(&one, &one, 1), Ok(RankOutcome::Rank(0)));
    }

    #[test]
    fn diagonal_rank_respects_precision() {
        let ua = TruncatedPadicUnit::from_u64(3, 2, 4).unwrap(); // v = 1
        let ub = TruncatedPadicUnit::from_u64(3, 2, 7).unwrap();
        assert_eq!(
            diagonal_sink_rank(&ua, &ub, 2),
            Ok(RankOutcome::PrecisionExhausted)
        );
        // doubling the precision resolves it
        let ua = ua.at_precision(5).unwrap();
        let ub = ub.at_precision(5).unwrap();
        assert_eq!(diagonal_sink_rank(&ua, &ub, 2), Ok(RankOutcome::Rank(2)));
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let ua = TruncatedPadicUnit::from_u64(3, 6, 4).unwrap();
        let ub = TruncatedPadicUnit::from_u64(3, 7, 4).unwrap();
        assert!(matches!(
            diagonal_sink_rank(&ua, &ub, 1),
            Err(PadicError::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn precision_refinement_consistency() {
        let coarse = TruncatedPadicUnit::from_u64(3, 5, 4).unwrap();
        let fine = coarse.at_precision(9).unwrap();
        for n in 1..4 {
            let a = commutator_submodule_index(&coarse, n);
            let b = commutator_submodule_index(&fine, n);
            if let (SubmoduleIndex::Exponent(x), SubmoduleIndex::Exponent(y)) = (a, b) {
                assert_eq!(x, y);
            }
        }
    }
}
