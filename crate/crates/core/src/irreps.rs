//! Isotropy classes of the irreducible representations `Hⁿ` and `Hⁿ*`, and a
//! small algebra of formal sums of them (⊕, ⊗, S², Λ²).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{ClassSet, SubgroupClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrrepError {
    #[error("-I acts as +Id on {0}; use the SO(3) table and lift to type II")]
    PlusIdentity(HarmonicLabel),
    #[error("degree 0 has no entry in the O(3) table")]
    DegreeZero,
}

/// The harmonic space `Hⁿ`, with `star` selecting the action twisted by
/// `det(g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HarmonicLabel {
    pub n: u32,
    pub star: bool,
}

impl HarmonicLabel {
    pub fn new(n: u32, star: bool) -> Self {
        HarmonicLabel { n, star }
    }

    pub fn plain(n: u32) -> Self {
        HarmonicLabel { n, star: false }
    }

    pub fn starred(n: u32) -> Self {
        HarmonicLabel { n, star: true }
    }

    pub fn dim(self) -> u64 {
        2 * self.n as u64 + 1
    }

    /// Scalar by which `-I` acts: `(-1)ⁿ`, negated for the twisted action.
    pub fn minus_one_sign(self) -> i8 {
        let s = if self.n.is_multiple_of(2) { 1 } else { -1 };
        if self.star {
            -s
        } else {
            s
        }
    }

    /// The label of degree `n` on which `-I` acts by `sign`.
    fn with_sign(n: u32, sign: i8) -> Self {
        let plain = HarmonicLabel::plain(n);
        HarmonicLabel::new(n, plain.minus_one_sign() != sign)
    }

    /// The same label with the twist dropped, as seen by SO(3).
    pub fn unstarred(self) -> Self {
        HarmonicLabel::plain(self.n)
    }
}

impl fmt::Display for HarmonicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}{}", self.n, if self.star { "*" } else { "" })
    }
}

/// Formal direct sum `⊕ mᵢ Lᵢ` of harmonic labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HarmonicSum(BTreeMap<HarmonicLabel, u64>);

impl HarmonicSum {
    pub fn new() -> Self {
        HarmonicSum::default()
    }

    pub fn single(label: HarmonicLabel) -> Self {
        HarmonicSum::from_terms([(label, 1)])
    }

    /// Sum of `(label, multiplicity)` terms; zero multiplicities are dropped.
    pub fn from_terms<I: IntoIterator<Item = (HarmonicLabel, u64)>>(terms: I) -> Self {
        let mut s = HarmonicSum::new();
        for (label, k) in terms {
            s.add(label, k);
        }
        s
    }

    pub fn add(&mut self, label: HarmonicLabel, multiplicity: u64) {
        if multiplicity > 0 {
            *self.0.entry(label).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, label: HarmonicLabel) -> u64 {
        self.0.get(&label).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct labels with multiplicities, by increasing degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (HarmonicLabel, u64)> + '_ {
        self.0.iter().map(|(l, k)| (*l, *k))
    }

    pub fn dim(&self) -> u64 {
        self.terms().map(|(l, k)| l.dim() * k).sum()
    }

    pub fn plus(&self, other: &HarmonicSum) -> HarmonicSum {
        let mut out = self.clone();
        for (l, k) in other.terms() {
            out.add(l, k);
        }
        out
    }

    pub fn scaled(&self, factor: u64) -> HarmonicSum {
        HarmonicSum::from_terms(self.terms().map(|(l, k)| (l, k * factor)))
    }

    /// Every label with its twist dropped.
    pub fn unstarred(&self) -> HarmonicSum {
        HarmonicSum::from_terms(self.terms().map(|(l, k)| (l.unstarred(), k)))
    }

    pub fn has_star(&self) -> bool {
        self.0.keys().any(|l| l.star)
    }
}

impl fmt::Display for HarmonicSum {
    /// Highest degree first, e.g. `H4 + 2*H2 + 2*H0`; the empty sum is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, k)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if k == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{k}*{l}")?;
            }
        }
        Ok(())
    }
}

impl FromIterator<HarmonicLabel> for HarmonicSum {
    fn from_iter<T: IntoIterator<Item = HarmonicLabel>>(iter: T) -> Self {
        HarmonicSum::from_terms(iter.into_iter().map(|l| (l, 1)))
    }
}

/// Isotropy classes of `Hⁿ` under SO(3), the zero vector included.
pub fn isotropy_irrep_so3(n: u32) -> ClassSet {
    use SubgroupClass::*;
    let mut raw = vec![SO3];
    if n == 0 {
        return ClassSet::singleton(SO3);
    }
    if n >= 3 {
        raw.push(Triv);
    }
    let zmax = if n % 2 == 1 { n } else { n / 2 };
    raw.extend((2..=zmax).map(Cyclic));
    raw.extend((2..=n).map(Dihedral));
    if n == 3 || n == 6 || n == 7 || n >= 9 {
        raw.push(Tetra);
    }
    if ![1, 2, 3, 5, 7, 11].contains(&n) {
        raw.push(Octa);
    }
    if has_ico(n) {
        raw.push(Ico);
    }
    raw.push(if n % 2 == 1 { SO2 } else { O2 });
    raw.into_iter().collect()
}

fn has_ico(n: u32) -> bool {
    [6, 10, 12, 15, 16, 18].contains(&n) || (n >= 20 && n != 23 && n != 29)
}

/// Isotropy classes of an O(3) irreducible on which `-I` acts as `-Id`
/// (`Hⁿ` with n odd, `Hⁿ*` with n even, n ≥ 1), the zero vector included.
pub fn isotropy_irrep_o3(label: HarmonicLabel) -> Result<ClassSet, IrrepError> {
    use SubgroupClass::*;
    if label.minus_one_sign() != -1 {
        return Err(IrrepError::PlusIdentity(label));
    }
    let n = label.n;
    if n == 0 {
        return Err(IrrepError::DegreeZero);
    }
    let odd = n % 2 == 1;
    let mut raw = vec![SubgroupClass::O3_FULL];
    if n >= 3 {
        raw.push(Triv);
    }
    raw.extend((2..=n / 2).map(Cyclic));
    raw.extend((1..).take_while(|k| 3 * k <= n).map(|k| ZMinus(2 * k)));
    raw.extend((2..=if odd { n / 2 } else { n }).map(Dihedral));
    raw.extend((2..=if odd { n } else { n / 2 }).map(DV));
    raw.extend((2..=n).filter(|&k| !(n == 3 && k == 2)).map(|k| DH(2 * k)));
    if ![1, 2, 3, 5, 7, 8, 11].contains(&n) {
        raw.push(Tetra);
    }
    if ![1, 2, 3, 5, 7, 11].contains(&n) {
        raw.push(Octa);
    }
    if ![1, 2, 4, 5, 8].contains(&n) {
        raw.push(OctaMinus);
    }
    if has_ico(n) {
        raw.push(Ico);
    }
    raw.push(if odd { O2Minus } else { O2 });
    Ok(raw.into_iter().collect())
}

fn label_tensor(a: HarmonicLabel, b: HarmonicLabel, out: &mut HarmonicSum, times: u64) {
    let sign = a.minus_one_sign() * b.minus_one_sign();
    for k in a.n.abs_diff(b.n)..=a.n + b.n {
        out.add(HarmonicLabel::with_sign(k, sign), times);
    }
}

/// `s1 ⊗ s2`, with `Hᵃ ⊗ Hᵇ = ⊕_{|a-b| ≤ k ≤ a+b} Hᵏ` and the action of
/// `-I` multiplying.
pub fn tensor_product(s1: &HarmonicSum, s2: &HarmonicSum) -> HarmonicSum {
    let mut out = HarmonicSum::new();
    for (a, ka) in s1.terms() {
        for (b, kb) in s2.terms() {
            label_tensor(a, b, &mut out, ka * kb);
        }
    }
    out
}

// S²(Hⁿ) = H⁰ ⊕ H² ⊕ ... ⊕ H²ⁿ and Λ²(Hⁿ) = H¹ ⊕ H³ ⊕ ... ⊕ H²ⁿ⁻¹, on which
// -I acts trivially whatever the twist of Hⁿ.
fn label_square(l: HarmonicLabel, symmetric: bool, out: &mut HarmonicSum, times: u64) {
    let degrees = if symmetric {
        (0..=l.n).map(|j| 2 * j).collect::<Vec<_>>()
    } else {
        (1..=l.n).map(|j| 2 * j - 1).collect()
    };
    for k in degrees {
        out.add(HarmonicLabel::with_sign(k, 1), times);
    }
}

fn square(s: &HarmonicSum, symmetric: bool) -> HarmonicSum {
    let terms: Vec<_> = s.terms().collect();
    let mut out = HarmonicSum::new();
    for (i, &(a, ka)) in terms.iter().enumerate() {
        // square of m·A: m copies of the square of A, plus one A ⊗ A per
        // unordered pair of copies
        label_square(a, symmetric, &mut out, ka);
        label_tensor(a, a, &mut out, ka * (ka - 1) / 2);
        for &(b, kb) in &terms[i + 1..] {
            label_tensor(a, b, &mut out, ka * kb);
        }
    }
    out
}

/// Symmetric square `S²(s)`.
pub fn sym_square(s: &HarmonicSum) -> HarmonicSum {
    square(s, true)
}

/// Exterior square `Λ²(s)`.
pub fn alt_square(s: &HarmonicSum) -> HarmonicSum {
    square(s, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use SubgroupClass::*;

    fn h(n: u32) -> HarmonicSum {
        HarmonicSum::single(HarmonicLabel::plain(n))
    }

    #[test]
    fn so3_small_degrees() {
        assert_eq!(isotropy_irrep_so3(0), ClassSet::singleton(SO3));
        assert_eq!(isotropy_irrep_so3(1).to_string(), "SO(2), SO(3)");
        assert_eq!(isotropy_irrep_so3(2).to_string(), "D2, O(2), SO(3)");
        assert_eq!(
            isotropy_irrep_so3(4).to_string(),
            "1, Z2, D2, D3, D4, O, O(2), SO(3)"
        );
        assert!(isotropy_irrep_so3(3).contains(&Tetra));
        assert!(!isotropy_irrep_so3(4).contains(&Tetra));
        assert!(isotropy_irrep_so3(6).contains(&Ico));
        assert!(!isotropy_irrep_so3(23).contains(&Ico));
    }

    #[test]
    fn o3_small_degrees() {
        let s = |n, star| {
            isotropy_irrep_o3(HarmonicLabel::new(n, star))
                .unwrap()
                .to_string()
        };
        assert_eq!(s(1, false), "O(2)^-, O(3)");
        assert_eq!(s(2, true), "D2, O(2), D4^h, O(3)");
        assert_eq!(s(3, false), "1, Z2^-, D2^v, D3^v, D6^h, O^-, O(2)^-, O(3)");
    }

    #[test]
    fn o3_rejects_plus_identity() {
        assert!(isotropy_irrep_o3(HarmonicLabel::plain(2)).is_err());
        assert!(isotropy_irrep_o3(HarmonicLabel::starred(3)).is_err());
        assert_eq!(
            isotropy_irrep_o3(HarmonicLabel::starred(0)),
            Err(IrrepError::DegreeZero)
        );
    }

    #[test]
    fn tetra_in_o3_table() {
        let has = |n: u32| {
            let l = HarmonicLabel::new(n, n.is_multiple_of(2));
            isotropy_irrep_o3(l).unwrap().contains(&Tetra)
        };
        assert!(!has(3));
        assert!(!has(8));
        assert!(has(4));
        assert!(has(9));
    }

    #[test]
    fn products() {
        assert_eq!(tensor_product(&h(1), &h(1)).to_string(), "H2 + H1* + H0");
        assert_eq!(tensor_product(&h(2), &h(1)).to_string(), "H3 + H2* + H1");
        assert_eq!(tensor_product(&h(0), &h(5)), h(5));
        assert_eq!(sym_square(&h(1)).to_string(), "H2 + H0");
        assert_eq!(alt_square(&h(1)).to_string(), "H1*");
        assert_eq!(
            sym_square(&sym_square(&h(1))).to_string(),
            "H4 + 2*H2 + 2*H0"
        );
    }

    #[test]
    fn square_of_multiple() {
        // S²(2·H1) = 2·S²(H1) ⊕ H1 ⊗ H1
        let s = sym_square(&h(1).scaled(2));
        assert_eq!(s.dim(), 21);
        assert_eq!(s.to_string(), "3*H2 + H1* + 3*H0");
        assert_eq!(alt_square(&h(1).scaled(2)).dim(), 15);
    }

    #[test]
    fn display() {
        let s = HarmonicSum::from_terms([
            (HarmonicLabel::plain(3), 1),
            (HarmonicLabel::starred(2), 1),
            (HarmonicLabel::plain(1), 2),
        ]);
        assert_eq!(s.to_string(), "H3 + H2* + 2*H1");
        assert_eq!(HarmonicSum::new().to_string(), "0");
    }
}
