//! Casimir eigenvalues of Sp(n) and SU(n) representations, the bounded
//! highest-weight search, adjoint modules and intertwiner spaces
//! `Hom_H(U, Λ³₂₇m*)`.

mod module;

pub use module::{adjoint_module, intertwiner_space, AdjointModule, Intertwiner};

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sp,
    SU,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sp => "Sp",
            Family::SU => "SU",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Sp" => Ok(Family::Sp),
            "SU" => Ok(Family::SU),
            other => Err(Error::Parse(format!("unknown group family `{other}` (expected Sp or SU)"))),
        }
    }
}

/// A compact simple factor `Sp(n)` or `SU(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupFactor {
    pub family: Family,
    pub rank: usize,
}

impl GroupFactor {
    pub fn new(family: Family, rank: usize) -> Self {
        GroupFactor { family, rank }
    }

    /// Real dimension of the group.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::Sp => n * (2 * n + 1),
            Family::SU => n * n - 1,
        }
    }

    /// Highest weight of the adjoint representation.
    pub fn adjoint_weight(&self) -> Weight {
        let n = self.rank;
        let mut w = vec![0; n];
        match self.family {
            Family::Sp => w[0] = 2,
            Family::SU => {
                w[0] = 1;
                w[n - 1] = -1;
            }
        }
        w
    }

    pub fn casimir(&self, weight: &[i64]) -> Result<Rational> {
        match self.family {
            Family::Sp => cas_sp(self.rank, weight),
            Family::SU => cas_su(self.rank, weight),
        }
    }
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.rank)
    }
}

pub type Weight = Vec<i64>;

/// A product of simple factors, in the order of the simple ideals of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<GroupFactor>,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" × "))
    }
}

fn check_len(n: usize, weight: &[i64]) -> Result<()> {
    if n == 0 || weight.len() != n {
        return Err(Error::BadWeight(format!("expected {n} entries, got {}", weight.len())));
    }
    if weight.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadWeight(format!("{weight:?} is not non-increasing")));
    }
    Ok(())
}

/// Casimir eigenvalue of `V(k₁, …, k_n)` of `Sp(n)`:
/// `−(1/(4(n+1))) Σ (2(n−i+1)kᵢ + kᵢ²)`.
pub fn cas_sp(n: usize, weight: &[i64]) -> Result<Rational> {
    check_len(n, weight)?;
    if weight[n - 1] < 0 {
        return Err(Error::BadWeight(format!("{weight:?}: Sp weights must be non-negative")));
    }
    let n = n as i64;
    let sum: i64 = weight.iter().enumerate().map(|(i, &k)| 2 * (n - i as i64) * k + k * k).sum();
    Ok(rat(-sum, 4 * (n + 1)))
}

/// Shifts an SU(n) weight by a multiple of `(1, …, 1)` into the window
/// `−n/2 < Σkᵢ ≤ n/2`.
pub fn normalize_su(n: usize, weight: &[i64]) -> Result<Weight> {
    check_len(n, weight)?;
    let n = n as i64;
    let s: i64 = weight.iter().sum();
    // Smallest shift t with Σk − n t ≤ n/2, i.e. 2(s − n t) ≤ n.
    let t = (2 * s - n).div_euclid(2 * n) + i64::from((2 * s - n).rem_euclid(2 * n) != 0);
    Ok(weight.iter().map(|k| k - t).collect())
}

/// Casimir eigenvalue of `V(k₁, …, k_n)` of `SU(n)`:
/// `−(1/(2n)) Σ ((n+1−2i)kᵢ + kᵢ²) + (1/(2n²)) (Σkᵢ)²`, after normalization.
pub fn cas_su(n: usize, weight: &[i64]) -> Result<Rational> {
    let w = normalize_su(n, weight)?;
    let n = n as i64;
    let lin: i64 = w.iter().enumerate().map(|(i, &k)| (n - 1 - 2 * i as i64) * k + k * k).sum();
    let s: i64 = w.iter().sum();
    Ok(rat(-lin, 2 * n) + rat(s * s, 2 * n * n))
}

/// Casimir of an outer tensor product: the sum of the factor values.
pub fn cas_product(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::zero(), |a, b| a + b)
}

/// The Casimir eigenvalues `−1, −2/5, −3/5` that can carry deformations.
pub fn deformation_targets() -> Vec<Rational> {
    vec![rat(-1, 1), rat(-2, 5), rat(-3, 5)]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    /// One highest weight per factor.
    pub weights: Vec<Weight>,
    pub casimir: Rational,
    /// Index of the factor whose adjoint representation this is, if any.
    pub adjoint_of: Option<usize>,
}

impl Candidate {
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .weights
            .iter()
            .map(|w| format!("V({})", w.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        parts.join(" ⊗ ")
    }
}

/// Enumeration result together with the search-box bounds that prove
/// completeness.
#[derive(Clone, Debug)]
pub struct CandidateSearch {
    pub candidates: Vec<Candidate>,
    pub bounds: Vec<String>,
}

/// All weights of one factor with Casimir `≥ −t`, plus the bound used.
///
/// Every Casimir value is `≤ 0`, so a product can only reach `−t` if each
/// factor does. Sp: each term is non-negative, so `k₁² + 2k₁ ≤ 4(n+1)t`.
/// SU: with `k̄` the mean, `−2n Cas = Σ(n+1−2i)(kᵢ−k̄) + Σ(kᵢ−k̄)²` and the
/// first sum is non-negative for non-increasing weights, so
/// `|kᵢ| ≤ √(2nt) + 1/2`.
fn factor_weights(f: &GroupFactor, t: &Rational) -> Result<(Vec<(Weight, Rational)>, String)> {
    let n = f.rank;
    let min = -t.clone();
    let (ranges, bound, note): (Vec<i64>, i64, String) = match f.family {
        Family::Sp => {
            let lim = t * Rational::from_integer((4 * (n + 1)).into());
            let mut k: i64 = 0;
            while Rational::from_integer(((k + 1) * (k + 1) + 2 * (k + 1)).into()) <= lim {
                k += 1;
            }
            let note = format!(
                "{f}: 0 ≤ kᵢ ≤ {k}, because k₁² + 2k₁ ≤ 4(n+1)·{t} = {lim} fails for k₁ = {}",
                k + 1
            );
            ((0..=k).collect(), k, note)
        }
        Family::SU => {
            let lim = t * Rational::from_integer((2 * n).into());
            let mut b: i64 = 0;
            // (b + 1/2)² ≤ 2nt  ⇔  (2b+1)² ≤ 8nt
            while Rational::from_integer(((2 * b + 1) * (2 * b + 1)).into()) <= lim.clone() * Rational::from_integer(4.into()) {
                b += 1;
            }
            let note = format!(
                "{f}: |kᵢ| ≤ {b}, because |kᵢ| ≤ √(2n·{t}) + 1/2 and ({} − 1/2)² > 2n·{t} = {lim}",
                b + 1
            );
            ((-b..=b).collect(), b, note)
        }
    };
    let mut out = Vec::new();
    let mut shell_ok = true;
    for w in nonincreasing(n, bound + 1, f.family) {
        let on_shell = w.iter().any(|k| k.abs() == bound + 1);
        if f.family == Family::SU {
            let s: i64 = w.iter().sum();
            if 2 * s <= -(n as i64) || 2 * s > n as i64 {
                continue;
            }
        }
        let c = f.casimir(&w)?;
        if on_shell {
            shell_ok &= c < min;
        } else if c >= min && w.iter().all(|k| ranges.contains(k)) {
            out.push((w, c));
        }
    }
    if !shell_ok {
        return Err(Error::InvariantViolation(format!("search box for {f} is not conclusive")));
    }
    Ok((out, note))
}

/// Non-increasing integer sequences of length `n` with entries in
/// `[0, m]` (Sp) or `[−m, m]` (SU).
fn nonincreasing(n: usize, m: i64, family: Family) -> Vec<Weight> {
    let lo = if family == Family::Sp { 0 } else { -m };
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, lo: i64, hi: i64, cur: &mut Weight, out: &mut Vec<Weight>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in (lo..=hi).rev() {
            cur.push(k);
            rec(n, lo, k, cur, out);
            cur.pop();
        }
    }
    rec(n, lo, m, &mut cur, &mut out);
    out
}

/// Every irreducible representation of the product group whose Casimir
/// eigenvalue lies in `targets` (all targets must be negative).
pub fn enumerate_candidates(spec: &GroupSpec, targets: &[Rational]) -> Result<CandidateSearch> {
    if targets.is_empty() {
        return Ok(CandidateSearch { candidates: Vec::new(), bounds: Vec::new() });
    }
    if targets.iter().any(|t| !t.is_negative()) {
        return Err(Error::InvariantViolation("Casimir targets must be negative".into()));
    }
    let t = targets.iter().map(|x| -x.clone()).max().expect("nonempty");
    let mut per_factor = Vec::new();
    let mut bounds = Vec::new();
    for f in &spec.factors {
        let (ws, note) = factor_weights(f, &t)?;
        per_factor.push(ws);
        bounds.push(note);
    }
    let mut combos: Vec<(Vec<Weight>, Rational)> = vec![(Vec::new(), Rational::zero())];
    for ws in &per_factor {
        let mut next = Vec::new();
        for (prefix, c) in &combos {
            for (w, cw) in ws {
                let total = c + cw;
                if total >= -t.clone() {
                    let mut p = prefix.clone();
                    p.push(w.clone());
                    next.push((p, total));
                }
            }
        }
        combos = next;
    }
    let mut candidates: Vec<Candidate> = combos
        .into_iter()
        .filter(|(_, c)| targets.contains(c))
        .map(|(weights, casimir)| {
            let adjoint_of = adjoint_index(spec, &weights);
            Candidate { weights, casimir, adjoint_of }
        })
        .collect();
    candidates.sort_by_key(|c| std::cmp::Reverse(c.weights.concat()));
    Ok(CandidateSearch { candidates, bounds })
}

fn adjoint_index(spec: &GroupSpec, weights: &[Weight]) -> Option<usize> {
    let nontrivial: Vec<usize> = (0..weights.len()).filter(|&i| weights[i].iter().any(|&k| k != 0)).collect();
    match nontrivial.as_slice() {
        [i] if weights[*i] == spec.factors[*i].adjoint_weight() => Some(*i),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: &[(Family, usize)]) -> GroupSpec {
        GroupSpec { factors: f.iter().map(|&(a, n)| GroupFactor::new(a, n)).collect() }
    }

    #[test]
    fn casimir_values() {
        assert_eq!(cas_sp(2, &[2, 0]).unwrap(), rat(-1, 1));
        assert_eq!(cas_sp(1, &[2]).unwrap(), rat(-1, 1));
        assert_eq!(cas_sp(2, &[0, 0]).unwrap(), rat(0, 1));
        assert_eq!(cas_su(3, &[1, 0, -1]).unwrap(), rat(-1, 1));
        assert_eq!(cas_su(2, &[1, -1]).unwrap(), rat(-1, 1));
        assert_eq!(cas_su(3, &[0, 0, 0]).unwrap(), rat(0, 1));
        assert_eq!(cas_sp(1, &[2]).unwrap(), cas_su(2, &[1, -1]).unwrap());
        // Fundamental representations: Sp(n) −(2n+1)/(4(n+1)), SU(n) −(n²−1)/(2n²).
        assert_eq!(cas_sp(2, &[1, 0]).unwrap(), rat(-5, 12));
        assert_eq!(cas_su(3, &[1, 0, 0]).unwrap(), rat(-4, 9));
        assert!(cas_sp(2, &[0, 1]).is_err());
        assert!(cas_sp(2, &[1, -1]).is_err());
    }

    #[test]
    fn su_normalization() {
        assert_eq!(normalize_su(2, &[2, 0]).unwrap(), vec![1, -1]);
        assert_eq!(normalize_su(3, &[2, 1, 0]).unwrap(), vec![1, 0, -1]);
        assert_eq!(normalize_su(3, &[0, -1, -2]).unwrap(), vec![1, 0, -1]);
        assert_eq!(normalize_su(2, &[1, 0]).unwrap(), vec![1, 0]);
        assert_eq!(normalize_su(2, &[0, -1]).unwrap(), vec![1, 0]);
        assert_eq!(cas_su(3, &[2, 1, 0]).unwrap(), rat(-1, 1));
    }

    #[test]
    fn product() {
        assert_eq!(cas_product(&[rat(-1, 1), rat(0, 1)]), rat(-1, 1));
    }

    #[test]
    fn enumerations() {
        let targets = deformation_targets();
        let c = enumerate_candidates(&spec(&[(Family::Sp, 2)]), &targets).unwrap().candidates;
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].weights, vec![vec![2, 0]]);
        assert_eq!(c[0].adjoint_of, Some(0));

        let c = enumerate_candidates(&spec(&[(Family::Sp, 2), (Family::Sp, 1)]), &targets).unwrap().candidates;
        let ws: Vec<_> = c.iter().map(|x| x.weights.clone()).collect();
        assert_eq!(ws, vec![vec![vec![2, 0], vec![0]], vec![vec![0, 0], vec![2]]]);

        let c = enumerate_candidates(&spec(&[(Family::SU, 3), (Family::SU, 2)]), &targets).unwrap().candidates;
        let ws: Vec<_> = c.iter().map(|x| x.weights.clone()).collect();
        assert_eq!(ws, vec![vec![vec![1, 0, -1], vec![0, 0]], vec![vec![0, 0, 0], vec![1, -1]]]);
        assert!(c.iter().all(|x| x.casimir == rat(-1, 1)));
        assert_eq!(c[1].adjoint_of, Some(1));
    }

    #[test]
    fn target_order_irrelevant() {
        let s = spec(&[(Family::SU, 3), (Family::SU, 2)]);
        let a = enumerate_candidates(&s, &[rat(-1, 1), rat(-2, 5), rat(-3, 5)]).unwrap().candidates;
        let b = enumerate_candidates(&s, &[rat(-3, 5), rat(-1, 1), rat(-2, 5)]).unwrap().candidates;
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Wider box, direct evaluation.
        let t = rat(1, 1);
        for f in [GroupFactor::new(Family::Sp, 2), GroupFactor::new(Family::SU, 3)] {
            let (ws, _) = factor_weights(&f, &t).unwrap();
            let brute: Vec<Weight> = nonincreasing(f.rank, 8, f.family)
                .into_iter()
                .filter(|w| {
                    let s: i64 = w.iter().sum();
                    f.family == Family::Sp || (2 * s > -(f.rank as i64) && 2 * s <= f.rank as i64)
                })
                .filter(|w| f.casimir(w).unwrap() >= -t.clone())
                .collect();
            let got: Vec<Weight> = ws.into_iter().map(|(w, _)| w).collect();
            assert_eq!(got, brute, "{f}");
        }
    }
}
