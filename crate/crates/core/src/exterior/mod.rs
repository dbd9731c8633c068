//! Sparse exterior algebra on ℝⁿ with an orthonormal frame `e_1, …, e_n`.
//!
//! Forms are evaluated by `e^{i_1…i_k}(e_{j_1},…,e_{j_k}) = det(δ_{i_a j_b})`,
//! which fixes the signs of contraction and wedge. Vectors and 1-forms are
//! identified through the frame metric.

mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldMatrix};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 31;

/// A strictly increasing tuple of frame indices, stored as a bitmask
/// (bit `i` set ⇔ index `i + 1` present).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    /// From 1-based indices; they must be strictly increasing.
    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut last = 0;
        for &i in indices {
            if i <= last || i > MAX_DIM {
                return Err(Error::InvariantViolation(format!(
                    "multi-index {indices:?} is not strictly increasing within 1..={MAX_DIM}"
                )));
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(MultiIndex(bits))
    }

    /// From 0-based positions in any order; `None` if a position repeats.
    pub fn from_positions(positions: impl IntoIterator<Item = usize>) -> Option<Self> {
        let mut bits = 0u32;
        for p in positions {
            if bits & (1 << p) != 0 {
                return None;
            }
            bits |= 1 << p;
        }
        Some(MultiIndex(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_bits(bits: u32) -> Self {
        MultiIndex(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// 0-based positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |p| bits & (1 << p) != 0)
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        self.positions().map(|p| p + 1).collect()
    }

    pub fn contains(self, pos: usize) -> bool {
        self.0 & (1 << pos) != 0
    }

    /// Largest index (1-based), or 0 for the empty index.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Complement inside `{1, …, n}`.
    pub fn complement(self, n: usize) -> Self {
        MultiIndex(full_mask(n) & !self.0)
    }

    /// Number of elements strictly below 0-based position `pos`.
    pub fn count_below(self, pos: usize) -> usize {
        (self.0 & ((1u32 << pos) - 1)).count_ones() as usize
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Sign of the shuffle `(I, J)` → sorted, for disjoint `I`, `J`.
pub fn shuffle_sign(i: MultiIndex, j: MultiIndex) -> i32 {
    let mut inversions = 0;
    for p in j.positions() {
        inversions += (i.0 >> (p + 1)).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Lexicographic order on the sorted index tuples, so that
/// `e^{123} < e^{124} < … < e^{567}` and `e^{12} < e^{123}`.
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        if self.0 & low != 0 {
            // self continues with the smaller index, unless other has ended.
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", text::index_string(*self))
    }
}

/// The lexicographically ordered basis of `Λᵏ(ℝⁿ)*` with a reverse lookup.
#[derive(Clone, Debug)]
pub struct FormBasis {
    n: usize,
    k: usize,
    list: Vec<MultiIndex>,
    pos: HashMap<MultiIndex, usize>,
}

impl FormBasis {
    pub fn new(n: usize, k: usize) -> Self {
        let mut list = Vec::new();
        fn rec(n: usize, k: usize, start: usize, bits: u32, out: &mut Vec<MultiIndex>) {
            if k == 0 {
                out.push(MultiIndex(bits));
                return;
            }
            for p in start..n {
                if n - p >= k {
                    rec(n, k - 1, p + 1, bits | (1 << p), out);
                }
            }
        }
        if k <= n {
            rec(n, k, 0, 0, &mut list);
        }
        let pos = list.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        FormBasis { n, k, list, pos }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        self.list.iter().copied()
    }

    pub fn position(&self, m: MultiIndex) -> Option<usize> {
        self.pos.get(&m).copied()
    }

    /// Coordinates of a form of this degree.
    pub fn coords(&self, w: &KForm) -> Vec<FieldElem> {
        debug_assert_eq!(w.k, self.k);
        let mut v = vec![FieldElem::zero(); self.len()];
        for (m, c) in &w.terms {
            v[self.pos[m]] = c.clone();
        }
        v
    }

    pub fn form(&self, coords: &[FieldElem]) -> KForm {
        let mut w = KForm::zero(self.n, self.k);
        for (m, c) in self.list.iter().zip(coords) {
            if !c.is_zero() {
                w.terms.insert(*m, c.clone());
            }
        }
        w
    }

    pub fn unit(&self, i: usize) -> KForm {
        KForm::monomial(self.n, self.list[i], FieldElem::one())
    }
}

impl Index<usize> for FormBasis {
    type Output = MultiIndex;
    fn index(&self, i: usize) -> &MultiIndex {
        &self.list[i]
    }
}

/// A vector in ℝⁿ ⊗ K, identified with a 1-form through the frame metric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<FieldElem>);

impl Vector {
    pub fn zero(n: usize) -> Self {
        Vector(vec![FieldElem::zero(); n])
    }

    /// The frame vector `e_{i+1}` (0-based position `i`).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = FieldElem::one();
        v
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElem::is_zero)
    }

    pub fn scale(&self, s: &FieldElem) -> Self {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    /// Bilinear frame inner product.
    pub fn dot(&self, other: &Self) -> FieldElem {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn to_form(&self) -> KForm {
        let mut w = KForm::zero(self.n(), 1);
        for (p, c) in self.0.iter().enumerate() {
            w.add_term(MultiIndex(1 << p), c.clone());
        }
        w
    }

    /// The 1-form's vector; errors unless `w` has degree 1.
    pub fn from_form(w: &KForm) -> Result<Self> {
        if w.k != 1 {
            return Err(Error::DimensionMismatch(format!("expected a 1-form, got degree {}", w.k)));
        }
        let mut v = Self::zero(w.n);
        for (m, c) in &w.terms {
            v.0[m.0.trailing_zeros() as usize] = c.clone();
        }
        Ok(v)
    }

    pub fn apply(m: &FieldMatrix, v: &Vector) -> Result<Vector> {
        Ok(Vector(m.mul_vec(&v.0)?))
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A sparse exterior k-form on ℝⁿ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    n: usize,
    k: usize,
    terms: BTreeMap<MultiIndex, FieldElem>,
}

impl KForm {
    pub fn zero(n: usize, k: usize) -> Self {
        KForm { n, k, terms: BTreeMap::new() }
    }

    pub fn monomial(n: usize, m: MultiIndex, c: FieldElem) -> Self {
        let mut w = Self::zero(n, m.len());
        w.add_term(m, c);
        w
    }

    /// `c · e^{indices}` with 1-based strictly increasing indices.
    pub fn term(n: usize, indices: &[usize], c: FieldElem) -> Result<Self> {
        let m = MultiIndex::new(indices)?;
        if m.max_index() > n {
            return Err(Error::DimensionMismatch(format!("index {} exceeds n = {n}", m.max_index())));
        }
        Ok(Self::monomial(n, m, c))
    }

    /// Builds a form from `(indices, coefficient)` pairs.
    pub fn from_terms(n: usize, k: usize, terms: &[(&[usize], FieldElem)]) -> Result<Self> {
        let mut w = Self::zero(n, k);
        for (idx, c) in terms {
            let t = Self::term(n, idx, c.clone())?;
            w = w.checked_add(&t)?;
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: MultiIndex) -> FieldElem {
        self.terms.get(&m).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// Coefficient of `e^{indices}` (1-based).
    pub fn coeff_of(&self, indices: &[usize]) -> FieldElem {
        MultiIndex::new(indices).map(|m| self.coeff(m)).unwrap_or_else(|_| FieldElem::zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &FieldElem)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Adds `c · e^m` in place (`m` must have length `k`).
    pub fn add_term(&mut self, m: MultiIndex, c: FieldElem) {
        debug_assert_eq!(m.len(), self.k);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DimensionMismatch(format!(
                "Λ^{}(ℝ^{}) vs Λ^{}(ℝ^{})",
                self.k, self.n, other.k, other.n
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// In-place `self += s · other`.
    pub fn axpy(&mut self, s: &FieldElem, other: &Self) {
        assert!(self.n == other.n && self.k == other.k, "axpy on forms of different type");
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, s * c);
        }
    }

    pub fn scale(&self, s: &FieldElem) -> Self {
        let mut out = Self::zero(self.n, self.k);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (*m, c * s)).collect();
        out
    }

    /// Exterior product; the result is zero when the degree exceeds `n`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("wedge on ℝ^{} and ℝ^{}", self.n, other.n)));
        }
        let mut out = Self::zero(self.n, self.k + other.k);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.0 & b.0 != 0 {
                    continue;
                }
                let s = shuffle_sign(*a, *b);
                let v = x * y;
                out.add_term(MultiIndex(a.0 | b.0), if s > 0 { v } else { -v });
            }
        }
        Ok(out)
    }

    /// Interior product `X ⌟ w`.
    pub fn contract(&self, x: &Vector) -> Result<Self> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch(format!("vector in ℝ^{} on form over ℝ^{}", x.n(), self.n)));
        }
        if self.k == 0 {
            return Ok(Self::zero(self.n, 0));
        }
        let mut out = Self::zero(self.n, self.k - 1);
        for (m, c) in &self.terms {
            for (rank, p) in m.positions().enumerate() {
                let xp = &x.0[p];
                if xp.is_zero() {
                    continue;
                }
                let v = xp * c;
                out.add_term(MultiIndex(m.0 & !(1 << p)), if rank % 2 == 0 { v } else { -v });
            }
        }
        Ok(out)
    }

    /// Contraction with the frame vector at 0-based position `p`.
    pub fn contract_basis(&self, p: usize) -> Self {
        let mut out = Self::zero(self.n, self.k.saturating_sub(1));
        for (m, c) in &self.terms {
            if m.contains(p) {
                let v = c.clone();
                out.add_term(MultiIndex(m.0 & !(1 << p)), if m.count_below(p) % 2 == 0 { v } else { -v });
            }
        }
        out
    }

    /// Hodge star: `∗e^I = orientation · sign(I, I^c) · e^{I^c}`.
    pub fn hodge(&self, orientation: i32) -> Self {
        let mut out = Self::zero(self.n, self.n - self.k);
        for (m, c) in &self.terms {
            let comp = m.complement(self.n);
            let s = shuffle_sign(*m, comp) * orientation.signum();
            out.add_term(comp, if s > 0 { c.clone() } else { -c });
        }
        out
    }

    /// Bilinear inner product making the monomials orthonormal.
    pub fn inner(&self, other: &Self) -> Result<FieldElem> {
        self.check_same(other)?;
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        Ok(small
            .terms
            .iter()
            .filter_map(|(m, c)| large.terms.get(m).map(|d| c * d))
            .sum())
    }

    pub fn norm_squared(&self) -> FieldElem {
        self.terms.values().map(|c| c * c).sum()
    }

    /// Coefficient of the volume form `e^{1…n}` (zero unless `k = n`).
    pub fn top_coeff(&self) -> FieldElem {
        if self.k != self.n {
            return FieldElem::zero();
        }
        self.coeff(MultiIndex(full_mask(self.n)))
    }

    /// Action of the endomorphism `D` (`D e_j = Σ_k D_kj e_k`) as a
    /// derivation on forms, through the contragredient
    /// `e^j ↦ −Σ_k D_jk e^k`.
    pub fn derive(&self, d: &FieldMatrix) -> Self {
        assert!(d.rows() == self.n && d.cols() == self.n, "derivation matrix has wrong size");
        let mut out = Self::zero(self.n, self.k);
        for (m, c) in &self.terms {
            for (rank, j) in m.positions().enumerate() {
                let rest = MultiIndex(m.0 & !(1 << j));
                for kk in 0..self.n {
                    let djk = &d[(j, kk)];
                    if djk.is_zero() || rest.contains(kk) {
                        continue;
                    }
                    // e^{I} = (−1)^rank e^j ∧ e^{rest}; replace e^j by e^kk.
                    let sign = (rank + rest.count_below(kk)) % 2;
                    let v = djk * c;
                    out.add_term(MultiIndex(rest.0 | (1 << kk)), if sign == 0 { -v } else { v });
                }
            }
        }
        out
    }

    /// Matrix of `w ↦ w.derive(D)` on `Λᵏ` in the lexicographic basis.
    pub fn derivation_matrix(d: &FieldMatrix, basis: &FormBasis) -> FieldMatrix {
        let cols: Vec<Vec<FieldElem>> =
            (0..basis.len()).map(|c| basis.coords(&basis.unit(c).derive(d))).collect();
        FieldMatrix::from_columns(&cols, basis.len()).expect("consistent sizes")
    }

    /// Writes the form in the text encoding `c*e123 + …`.
    pub fn to_text(&self) -> String {
        text::format_form(self)
    }

    /// Parses the text encoding for a form of degree `k` on ℝⁿ.
    pub fn parse(s: &str, n: usize, k: usize) -> Result<Self> {
        text::parse_form(s, n, k)
    }
}

impl Add for &KForm {
    type Output = KForm;
    fn add(self, rhs: &KForm) -> KForm {
        self.checked_add(rhs).expect("adding forms of different type")
    }
}

impl Sub for &KForm {
    type Output = KForm;
    fn sub(self, rhs: &KForm) -> KForm {
        self.checked_sub(rhs).expect("subtracting forms of different type")
    }
}

impl Add for KForm {
    type Output = KForm;
    fn add(self, rhs: KForm) -> KForm {
        &self + &rhs
    }
}

impl Sub for KForm {
    type Output = KForm;
    fn sub(self, rhs: KForm) -> KForm {
        &self - &rhs
    }
}

impl Neg for &KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        KForm { n: self.n, k: self.k, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        -&self
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// An element of `T* ⊗ Λˢ`: the i-th component sits in the `e^i` slot.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormValuedCovector {
    components: Vec<KForm>,
}

impl FormValuedCovector {
    pub fn new(components: Vec<KForm>) -> Result<Self> {
        let n = components.len();
        if let Some(first) = components.first() {
            let s = first.degree();
            if components.iter().any(|c| c.n() != n || c.degree() != s) {
                return Err(Error::DimensionMismatch(
                    "components must be forms of one degree on ℝⁿ with n = number of components".into(),
                ));
            }
        }
        Ok(FormValuedCovector { components })
    }

    pub fn zero(n: usize, s: usize) -> Self {
        FormValuedCovector { components: vec![KForm::zero(n, s); n] }
    }

    pub fn components(&self) -> &[KForm] {
        &self.components
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn degree(&self) -> usize {
        self.components.first().map_or(0, KForm::degree)
    }

    /// The wedging map `ε(F) = Σ_i e^i ∧ F_i`.
    pub fn eps(&self) -> KForm {
        let n = self.n();
        let mut out = KForm::zero(n, self.degree() + 1);
        for (i, f) in self.components.iter().enumerate() {
            let ei = KForm::monomial(n, MultiIndex(1 << i), FieldElem::one());
            out = &out + &ei.wedge(f).expect("same dimension");
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(KForm::is_zero)
    }

    /// Coordinates in `Tⁿ ⊗ Λˢ`, component-major.
    pub fn coords(&self, basis: &FormBasis) -> Vec<FieldElem> {
        self.components.iter().flat_map(|c| basis.coords(c)).collect()
    }

    pub fn from_coords(basis: &FormBasis, coords: &[FieldElem]) -> Self {
        let len = basis.len();
        FormValuedCovector {
            components: (0..basis.n()).map(|i| basis.form(&coords[i * len..(i + 1) * len])).collect(),
        }
    }
}

/// The wedging map `ε` as a free function.
pub fn eps(f: &FormValuedCovector) -> KForm {
    f.eps()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(idx: &[usize]) -> KForm {
        KForm::term(7, idx, FieldElem::one()).unwrap()
    }

    #[test]
    fn multi_index_order_is_lexicographic() {
        let b = FormBasis::new(7, 3);
        let as_tuples: Vec<Vec<usize>> = b.iter().map(MultiIndex::indices).collect();
        let mut sorted = as_tuples.clone();
        sorted.sort();
        assert_eq!(as_tuples, sorted);
        assert_eq!(b.len(), 35);
        let mut all: Vec<MultiIndex> = (0u32..128).map(MultiIndex::from_bits).collect();
        all.sort();
        let tuples: Vec<Vec<usize>> = all.iter().map(|m| m.indices()).collect();
        let mut expect = tuples.clone();
        expect.sort();
        assert_eq!(tuples, expect);
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(e(&[1]).wedge(&e(&[2])).unwrap(), e(&[1, 2]));
        assert_eq!(e(&[2]).wedge(&e(&[1])).unwrap(), -e(&[1, 2]));
        let lhs = (&e(&[1, 2, 3]) + &e(&[1, 4, 5])).wedge(&e(&[6, 7])).unwrap();
        assert_eq!(lhs, &e(&[1, 2, 3, 6, 7]) + &e(&[1, 4, 5, 6, 7]));
        assert!(e(&[1, 2, 3, 4]).wedge(&e(&[4, 5, 6, 7])).unwrap().is_zero());
    }

    #[test]
    fn contraction_examples() {
        let e1 = Vector::basis(7, 0);
        let e3 = Vector::basis(7, 2);
        assert_eq!(e(&[1, 2]).contract(&e1).unwrap(), e(&[2]));
        assert!(e(&[1, 2]).contract(&e3).unwrap().is_zero());
        assert_eq!(e(&[1, 2]).contract_basis(1), -e(&[1]));
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(e(&[1, 2, 3]).hodge(1), e(&[4, 5, 6, 7]));
        let w = &e(&[2, 5, 7]) + &e(&[1, 3, 6]).scale(&FieldElem::sqrt_of(3));
        assert_eq!(w.hodge(1).hodge(1), w);
    }

    #[test]
    fn eps_examples() {
        let mut comps = vec![KForm::zero(7, 1); 7];
        comps[0] = e(&[2]);
        let f = FormValuedCovector::new(comps).unwrap();
        assert_eq!(f.eps(), e(&[1, 2]));
        assert!(FormValuedCovector::zero(7, 3).eps().is_zero());
    }

    #[test]
    fn derivation_of_basic_rotation() {
        // D = e^{12} as an endomorphism: D e_1 = e_2, D e_2 = -e_1.
        let mut d = FieldMatrix::zeros(7, 7);
        d[(1, 0)] = FieldElem::one();
        d[(0, 1)] = -FieldElem::one();
        assert_eq!(e(&[1]).derive(&d), e(&[2]));
        assert_eq!(e(&[2]).derive(&d), -e(&[1]));
        assert!(e(&[1, 2]).derive(&d).is_zero());
        assert_eq!(e(&[1, 3]).derive(&d), e(&[2, 3]));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = KForm::term(5, &[1], FieldElem::one()).unwrap();
        assert!(matches!(a.wedge(&e(&[1])), Err(Error::DimensionMismatch(_))));
        assert!(e(&[1]).inner(&e(&[1, 2])).is_err());
    }
}
