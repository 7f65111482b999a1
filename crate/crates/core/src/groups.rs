//! Conjugacy classes of closed subgroups of SO(3) and O(3).
//!
//! Classes are stored in canonical form only: degenerate members of a family
//! (`Z1`, `D1`, `Z1^-`, `D1^v`, `D2^h`) collapse to the trivial class when
//! they are built through [`SubgroupClass::normalize`] or the checked
//! constructors.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::clips;

/// The ambient group the classes live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupContext {
    SO3,
    O3,
}

impl GroupContext {
    pub fn full_group(self) -> SubgroupClass {
        match self {
            GroupContext::SO3 => SubgroupClass::SO3,
            GroupContext::O3 => SubgroupClass::O3_FULL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupContext::SO3 => "so3",
            GroupContext::O3 => "o3",
        }
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupContext {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "so3" => Ok(GroupContext::SO3),
            "o3" => Ok(GroupContext::O3),
            _ => Err(ClassError::Parse(format!("unknown context `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("parameter of {family} must be positive")]
    ZeroParameter { family: &'static str },
    #[error("parameter of {family} must be even, got {value}")]
    OddParameter { family: &'static str, value: u32 },
    #[error("class {class} is not admissible in {ctx} context")]
    Inadmissible {
        class: SubgroupClass,
        ctx: GroupContext,
    },
    #[error("cannot parse class name: {0}")]
    Parse(String),
}

/// A closed subgroup of SO(3), up to conjugacy (type I).
///
/// Also the inner part `K` of a type II class `K x Zc2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProperClass {
    Triv,
    Cyclic(u32),
    Dihedral(u32),
    Tetra,
    Octa,
    Ico,
    SO2,
    O2,
    SO3,
}

impl ProperClass {
    pub fn normalize(self) -> Result<Self, ClassError> {
        match SubgroupClass::from(self).normalize()? {
            SubgroupClass::TypeII(_) => unreachable!("type I classes never normalize to type II"),
            other => Ok(other.proper().expect("type I class")),
        }
    }
}

impl From<ProperClass> for SubgroupClass {
    fn from(p: ProperClass) -> Self {
        match p {
            ProperClass::Triv => SubgroupClass::Triv,
            ProperClass::Cyclic(n) => SubgroupClass::Cyclic(n),
            ProperClass::Dihedral(n) => SubgroupClass::Dihedral(n),
            ProperClass::Tetra => SubgroupClass::Tetra,
            ProperClass::Octa => SubgroupClass::Octa,
            ProperClass::Ico => SubgroupClass::Ico,
            ProperClass::SO2 => SubgroupClass::SO2,
            ProperClass::O2 => SubgroupClass::O2,
            ProperClass::SO3 => SubgroupClass::SO3,
        }
    }
}

/// Conjugacy class of a closed subgroup of O(3).
///
/// Parameters follow the usual subscripts: `ZMinus(2n)` is `Z_{2n}^-` of order
/// `2n`, `DV(n)` is `D_n^v` of order `2n`, `DH(2n)` is `D_{2n}^h` of order `4n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupClass {
    Triv,
    Cyclic(u32),
    Dihedral(u32),
    Tetra,
    Octa,
    Ico,
    SO2,
    O2,
    SO3,
    ZMinus(u32),
    DV(u32),
    DH(u32),
    OctaMinus,
    O2Minus,
    /// `K x Zc2`, the group generated by `K` and `-I`.
    TypeII(ProperClass),
}

/// The three O(3) subgroup types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupType {
    /// Contained in SO(3).
    I,
    /// Contains `-I`.
    II,
    /// Neither.
    III,
}

impl SubgroupClass {
    pub const O3_FULL: SubgroupClass = SubgroupClass::TypeII(ProperClass::SO3);

    pub fn cyclic(n: u32) -> Result<Self, ClassError> {
        SubgroupClass::Cyclic(n).normalize()
    }

    pub fn dihedral(n: u32) -> Result<Self, ClassError> {
        SubgroupClass::Dihedral(n).normalize()
    }

    pub fn z_minus(p: u32) -> Result<Self, ClassError> {
        SubgroupClass::ZMinus(p).normalize()
    }

    pub fn dv(n: u32) -> Result<Self, ClassError> {
        SubgroupClass::DV(n).normalize()
    }

    pub fn dh(p: u32) -> Result<Self, ClassError> {
        SubgroupClass::DH(p).normalize()
    }

    /// Returns the canonical representative of this descriptor.
    pub fn normalize(self) -> Result<Self, ClassError> {
        use SubgroupClass::*;
        let out = match self {
            Cyclic(0) => return Err(ClassError::ZeroParameter { family: "Z" }),
            Dihedral(0) => return Err(ClassError::ZeroParameter { family: "D" }),
            ZMinus(0) => return Err(ClassError::ZeroParameter { family: "Z^-" }),
            DV(0) => return Err(ClassError::ZeroParameter { family: "D^v" }),
            DH(0) => return Err(ClassError::ZeroParameter { family: "D^h" }),
            Cyclic(1) | Dihedral(1) | ZMinus(1) | DV(1) | DH(2) => Triv,
            ZMinus(p) if p % 2 == 1 => {
                return Err(ClassError::OddParameter {
                    family: "Z^-",
                    value: p,
                })
            }
            DH(p) if p % 2 == 1 => {
                return Err(ClassError::OddParameter {
                    family: "D^h",
                    value: p,
                })
            }
            TypeII(inner) => TypeII(inner.normalize()?),
            other => other,
        };
        Ok(out)
    }

    pub fn is_canonical(self) -> bool {
        self.normalize() == Ok(self)
    }

    pub fn subgroup_type(self) -> SubgroupType {
        use SubgroupClass::*;
        match self {
            Triv | Cyclic(_) | Dihedral(_) | Tetra | Octa | Ico | SO2 | O2 | SO3 => SubgroupType::I,
            ZMinus(_) | DV(_) | DH(_) | OctaMinus | O2Minus => SubgroupType::III,
            TypeII(_) => SubgroupType::II,
        }
    }

    /// The type I class, if this is one.
    pub fn proper(self) -> Option<ProperClass> {
        use SubgroupClass::*;
        Some(match self {
            Triv => ProperClass::Triv,
            Cyclic(n) => ProperClass::Cyclic(n),
            Dihedral(n) => ProperClass::Dihedral(n),
            Tetra => ProperClass::Tetra,
            Octa => ProperClass::Octa,
            Ico => ProperClass::Ico,
            SO2 => ProperClass::SO2,
            O2 => ProperClass::O2,
            SO3 => ProperClass::SO3,
            _ => return None,
        })
    }

    pub fn is_admissible(self, ctx: GroupContext) -> bool {
        match ctx {
            GroupContext::SO3 => self.subgroup_type() == SubgroupType::I,
            GroupContext::O3 => true,
        }
    }

    pub fn check_admissible(self, ctx: GroupContext) -> Result<(), ClassError> {
        if self.is_admissible(ctx) {
            Ok(())
        } else {
            Err(ClassError::Inadmissible { class: self, ctx })
        }
    }

    pub fn is_finite(self) -> bool {
        self.order().is_some()
    }

    /// Group order, `None` for the infinite classes.
    pub fn order(self) -> Option<u32> {
        use SubgroupClass::*;
        match self {
            Triv => Some(1),
            Cyclic(n) => Some(n),
            Dihedral(n) => Some(2 * n),
            Tetra => Some(12),
            Octa | OctaMinus => Some(24),
            Ico => Some(60),
            SO2 | O2 | SO3 | O2Minus => None,
            ZMinus(p) => Some(p),
            DV(n) => Some(2 * n),
            DH(p) => Some(2 * p),
            TypeII(k) => SubgroupClass::from(k).order().map(|o| 2 * o),
        }
    }

    /// Characteristic couple `(L, H)` of a type III class: `L = G ∩ SO(3)` and
    /// `H` the image of `g ↦ det(g) g`.
    pub fn characteristic_couple(self) -> Option<(SubgroupClass, SubgroupClass)> {
        use SubgroupClass::*;
        let couple = match self {
            ZMinus(2) => (Triv, Cyclic(2)),
            ZMinus(p) => (Cyclic(p / 2), Cyclic(p)),
            DV(n) => (Cyclic(n), Dihedral(n)),
            DH(p) => (Dihedral(p / 2), Dihedral(p)),
            OctaMinus => (Tetra, Octa),
            O2Minus => (SO2, O2),
            _ => return None,
        };
        Some(couple)
    }

    /// Rotation subgroup `G ∩ SO(3)`.
    pub fn rotation_part(self) -> SubgroupClass {
        match self.subgroup_type() {
            SubgroupType::I => self,
            SubgroupType::II => match self {
                SubgroupClass::TypeII(k) => k.into(),
                _ => unreachable!(),
            },
            SubgroupType::III => self.characteristic_couple().expect("type III").0,
        }
    }

    /// Image under `g ↦ det(g) g`.
    pub fn projection(self) -> SubgroupClass {
        match self.subgroup_type() {
            SubgroupType::I => self,
            SubgroupType::II => self.rotation_part(),
            SubgroupType::III => self.characteristic_couple().expect("type III").1,
        }
    }

    fn rank(self) -> u8 {
        use SubgroupClass::*;
        match self {
            Triv => 0,
            Cyclic(_) => 1,
            Dihedral(_) => 2,
            Tetra => 3,
            Octa => 4,
            Ico => 5,
            SO2 => 6,
            O2 => 7,
            SO3 => 8,
            ZMinus(_) => 9,
            DV(_) => 10,
            DH(_) => 11,
            OctaMinus => 12,
            O2Minus => 13,
            TypeII(_) => 14,
        }
    }

    fn param(self) -> u32 {
        use SubgroupClass::*;
        match self {
            Cyclic(n) | Dihedral(n) | ZMinus(n) | DV(n) | DH(n) => n,
            _ => 0,
        }
    }

    fn sort_key(self) -> (u8, u32, u8, u32) {
        match self {
            SubgroupClass::TypeII(k) => {
                let inner = SubgroupClass::from(k);
                (self.rank(), 0, inner.rank(), inner.param())
            }
            _ => (self.rank(), self.param(), 0, 0),
        }
    }

    /// Every canonical class of `ctx` whose integer parameter is at most
    /// `max_param`, in canonical order.
    pub fn enumerate(ctx: GroupContext, max_param: u32) -> Vec<SubgroupClass> {
        use SubgroupClass::*;
        let mut out = vec![Triv];
        out.extend((2..=max_param).map(Cyclic));
        out.extend((2..=max_param).map(Dihedral));
        out.extend([Tetra, Octa, Ico, SO2, O2, SO3]);
        if ctx == GroupContext::O3 {
            out.extend((1..=max_param / 2).map(|n| ZMinus(2 * n)));
            out.extend((2..=max_param).map(DV));
            out.extend((2..=max_param / 2).map(|n| DH(2 * n)));
            out.extend([OctaMinus, O2Minus]);
            let inner: Vec<_> = out.iter().filter_map(|c| c.proper()).map(TypeII).collect();
            out.extend(inner);
        }
        out.sort();
        out
    }
}

impl PartialOrd for SubgroupClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubgroupClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for SubgroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SubgroupClass::*;
        match *self {
            Triv => f.write_str("1"),
            Cyclic(n) => write!(f, "Z{n}"),
            Dihedral(n) => write!(f, "D{n}"),
            Tetra => f.write_str("T"),
            Octa => f.write_str("O"),
            Ico => f.write_str("I"),
            SO2 => f.write_str("SO(2)"),
            O2 => f.write_str("O(2)"),
            SO3 => f.write_str("SO(3)"),
            ZMinus(p) => write!(f, "Z{p}^-"),
            DV(n) => write!(f, "D{n}^v"),
            DH(p) => write!(f, "D{p}^h"),
            OctaMinus => f.write_str("O^-"),
            O2Minus => f.write_str("O(2)^-"),
            TypeII(ProperClass::SO3) => f.write_str("O(3)"),
            TypeII(k) => write!(f, "[{} x Zc2]", SubgroupClass::from(k)),
        }
    }
}

impl FromStr for SubgroupClass {
    type Err = ClassError;

    /// Parses exactly the strings produced by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use SubgroupClass::*;
        let bad = || ClassError::Parse(format!("`{s}`"));
        let t = s.trim();
        let fixed = match t {
            "1" => Some(Triv),
            "T" => Some(Tetra),
            "O" => Some(Octa),
            "I" => Some(Ico),
            "SO(2)" => Some(SO2),
            "O(2)" => Some(O2),
            "SO(3)" => Some(SO3),
            "O^-" => Some(OctaMinus),
            "O(2)^-" => Some(O2Minus),
            "O(3)" => Some(SubgroupClass::O3_FULL),
            _ => None,
        };
        if let Some(c) = fixed {
            return Ok(c);
        }
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(" x Zc2]")) {
            let k = inner.parse::<SubgroupClass>()?.proper().ok_or_else(bad)?;
            if k == ProperClass::SO3 {
                // rendered as O(3)
                return Err(bad());
            }
            return Ok(TypeII(k));
        }
        let (family, rest) = if let Some(r) = t.strip_prefix('Z') {
            ('Z', r)
        } else if let Some(r) = t.strip_prefix('D') {
            ('D', r)
        } else {
            return Err(bad());
        };
        let digits_end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let (digits, suffix) = rest.split_at(digits_end);
        if digits.is_empty() || digits.starts_with('0') {
            return Err(bad());
        }
        let n: u32 = digits.parse().map_err(|_| bad())?;
        let raw = match (family, suffix) {
            ('Z', "") => Cyclic(n),
            ('D', "") => Dihedral(n),
            ('Z', "^-") => ZMinus(n),
            ('D', "^v") => DV(n),
            ('D', "^h") => DH(n),
            _ => return Err(bad()),
        };
        let canonical = raw.normalize()?;
        if canonical != raw {
            return Err(ClassError::Parse(format!(
                "`{s}` is not canonical, write `{canonical}`"
            )));
        }
        Ok(canonical)
    }
}

impl Serialize for SubgroupClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SubgroupClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A duplicate-free, canonically ordered set of classes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassSet(BTreeSet<SubgroupClass>);

impl ClassSet {
    pub fn new() -> Self {
        ClassSet(BTreeSet::new())
    }

    pub fn singleton(c: SubgroupClass) -> Self {
        ClassSet(BTreeSet::from([c]))
    }

    /// Builds a set from raw descriptors, normalizing each one.
    pub fn from_raw<I>(raw: I) -> Result<Self, ClassError>
    where
        I: IntoIterator<Item = SubgroupClass>,
    {
        raw.into_iter().map(SubgroupClass::normalize).collect()
    }

    pub fn insert(&mut self, c: SubgroupClass) -> Result<bool, ClassError> {
        Ok(self.0.insert(c.normalize()?))
    }

    pub fn contains(&self, c: &SubgroupClass) -> bool {
        self.0.contains(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SubgroupClass> + '_ {
        self.0.iter()
    }

    pub fn union_with(&mut self, other: &ClassSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn is_subset(&self, other: &ClassSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn difference(&self, other: &ClassSet) -> ClassSet {
        ClassSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<SubgroupClass> {
        self.0.iter().copied().collect()
    }

    pub fn check_admissible(&self, ctx: GroupContext) -> Result<(), ClassError> {
        self.iter().try_for_each(|c| c.check_admissible(ctx))
    }

    /// Applies `f` to every member and re-canonicalizes.
    pub fn map<F>(&self, f: F) -> ClassSet
    where
        F: Fn(SubgroupClass) -> SubgroupClass,
    {
        ClassSet(self.0.iter().map(|&c| f(c)).collect())
    }
}

impl FromIterator<SubgroupClass> for ClassSet {
    /// Collects already-canonical classes. Use [`ClassSet::from_raw`] for raw
    /// descriptors.
    fn from_iter<T: IntoIterator<Item = SubgroupClass>>(iter: T) -> Self {
        ClassSet(
            iter.into_iter()
                .map(|c| c.normalize().expect("canonical class"))
                .collect(),
        )
    }
}

impl<'a> IntoIterator for &'a ClassSet {
    type Item = &'a SubgroupClass;
    type IntoIter = std::collections::btree_set::Iter<'a, SubgroupClass>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ClassSet {
    type Err = ClassError;

    /// Parses the comma separated rendering of `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(ClassSet::new());
        }
        split_top_level(s)
            .into_iter()
            .map(str::parse::<SubgroupClass>)
            .collect()
    }
}

// Splits on commas that are not inside brackets or parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// `a ≼ b`: `a` is conjugate to a subgroup of `b`.
///
/// Between type I and type III classes this is read off the clips tables:
/// `a ≼ b` exactly when `a ∈ a ∘ b`. Type II classes reduce to SO(3) through
/// `K x Zc2 ⊂ K' x Zc2 ⇔ K ≼ K'` and `Γ ⊂ K' x Zc2 ⇔ π(Γ) ≼ K'`.
pub fn is_leq(a: SubgroupClass, b: SubgroupClass, ctx: GroupContext) -> Result<bool, ClassError> {
    a.check_admissible(ctx)?;
    b.check_admissible(ctx)?;
    let a = a.normalize()?;
    let b = b.normalize()?;
    if a == b {
        return Ok(true);
    }
    match (a.subgroup_type(), b.subgroup_type()) {
        (SubgroupType::II, SubgroupType::II) => {
            is_leq(a.rotation_part(), b.rotation_part(), GroupContext::SO3)
        }
        (SubgroupType::II, _) => Ok(false),
        (_, SubgroupType::II) => is_leq(a.projection(), b.rotation_part(), GroupContext::SO3),
        _ => {
            let set = clips::clips_pair(ctx, a, b).expect("type I/III clips are always defined");
            Ok(set.contains(&a))
        }
    }
}

/// Covering relations of `≼` restricted to a class set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HasseEdges(pub Vec<(SubgroupClass, SubgroupClass)>);

impl HasseEdges {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(SubgroupClass, SubgroupClass)> + '_ {
        self.0.iter()
    }

    /// Graphviz rendering with class names quoted.
    pub fn to_dot(&self, nodes: &ClassSet) -> String {
        let mut out = String::from("digraph {\n");
        for c in nodes {
            out.push_str(&format!("  \"{c}\";\n"));
        }
        for (lo, hi) in &self.0 {
            out.push_str(&format!("  \"{lo}\" -> \"{hi}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Transitive reduction of `≼` on `classes`, edges ordered by (lower, upper).
pub fn hasse(classes: &ClassSet, ctx: GroupContext) -> Result<HasseEdges, ClassError> {
    classes.check_admissible(ctx)?;
    let items = classes.to_vec();
    let n = items.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = i == j || is_leq(items[i], items[j], ctx)?;
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            let covered = (0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !covered {
                edges.push((items[i], items[j]));
            }
        }
    }
    Ok(HasseEdges(edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use SubgroupClass::*;

    #[test]
    fn degenerate_members_collapse() {
        assert_eq!(Cyclic(1).normalize(), Ok(Triv));
        assert_eq!(Dihedral(1).normalize(), Ok(Triv));
        assert_eq!(ZMinus(1).normalize(), Ok(Triv));
        assert_eq!(DV(1).normalize(), Ok(Triv));
        assert_eq!(DH(2).normalize(), Ok(Triv));
        assert_eq!(Dihedral(6).normalize(), Ok(Dihedral(6)));
        assert_eq!(
            TypeII(ProperClass::Cyclic(1)).normalize(),
            Ok(TypeII(ProperClass::Triv))
        );
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(matches!(
            ZMinus(3).normalize(),
            Err(ClassError::OddParameter { .. })
        ));
        assert!(matches!(
            DH(7).normalize(),
            Err(ClassError::OddParameter { .. })
        ));
        assert!(matches!(
            Cyclic(0).normalize(),
            Err(ClassError::ZeroParameter { .. })
        ));
        assert!(matches!(
            DV(0).normalize(),
            Err(ClassError::ZeroParameter { .. })
        ));
    }

    #[test]
    fn rendering_matches_grammar() {
        let cases = [
            (Triv, "1"),
            (Cyclic(4), "Z4"),
            (Dihedral(3), "D3"),
            (ZMinus(2), "Z2^-"),
            (DV(3), "D3^v"),
            (DH(8), "D8^h"),
            (OctaMinus, "O^-"),
            (O2Minus, "O(2)^-"),
            (TypeII(ProperClass::Dihedral(2)), "[D2 x Zc2]"),
            (SubgroupClass::O3_FULL, "O(3)"),
        ];
        for (c, s) in cases {
            assert_eq!(c.to_string(), s);
            assert_eq!(s.parse::<SubgroupClass>().unwrap(), c);
        }
    }

    #[test]
    fn non_canonical_names_are_rejected() {
        for s in [
            "Z1",
            "D1",
            "D2^h",
            "Z3^-",
            "Z04",
            "[SO(3) x Zc2]",
            "[O^- x Zc2]",
            "Q",
        ] {
            assert!(s.parse::<SubgroupClass>().is_err(), "{s}");
        }
    }

    #[test]
    fn type_rank_order() {
        let mut v = vec![
            O2Minus,
            Cyclic(3),
            Triv,
            SO3,
            Dihedral(2),
            Cyclic(12),
            ZMinus(4),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Triv,
                Cyclic(3),
                Cyclic(12),
                Dihedral(2),
                SO3,
                ZMinus(4),
                O2Minus
            ]
        );
    }

    #[test]
    fn class_set_round_trip() {
        let set: ClassSet = [Dihedral(2), Triv, TypeII(ProperClass::O2), Dihedral(2)]
            .into_iter()
            .collect();
        assert_eq!(set.len(), 3);
        assert_eq!(set.to_string(), "1, D2, [O(2) x Zc2]");
        assert_eq!(set.to_string().parse::<ClassSet>().unwrap(), set);
    }

    #[test]
    fn order_examples() {
        let so3 = GroupContext::SO3;
        assert!(is_leq(Cyclic(3), Cyclic(6), so3).unwrap());
        assert!(is_leq(Tetra, Octa, so3).unwrap());
        assert!(!is_leq(Dihedral(4), Cyclic(4), so3).unwrap());
        assert!(is_leq(Dihedral(3), Ico, so3).unwrap());
        assert!(is_leq(Cyclic(2), Dihedral(5), so3).unwrap());
        assert!(!is_leq(Cyclic(4), Cyclic(6), so3).unwrap());
    }

    #[test]
    fn type_two_order_reduces_to_rotations() {
        let o3 = GroupContext::O3;
        let d2 = TypeII(ProperClass::Dihedral(2));
        let d4 = TypeII(ProperClass::Dihedral(4));
        assert!(is_leq(d2, d4, o3).unwrap());
        assert!(is_leq(DH(4), d4, o3).unwrap());
        assert!(!is_leq(d2, Dihedral(4), o3).unwrap());
        assert!(is_leq(OctaMinus, SubgroupClass::O3_FULL, o3).unwrap());
    }

    #[test]
    fn inadmissible_in_so3() {
        assert!(is_leq(ZMinus(2), SO3, GroupContext::SO3).is_err());
    }

    #[test]
    fn hasse_small_chain() {
        let set: ClassSet = [Triv, Cyclic(2), Dihedral(2)].into_iter().collect();
        let edges = hasse(&set, GroupContext::SO3).unwrap();
        assert_eq!(edges.0, vec![(Triv, Cyclic(2)), (Cyclic(2), Dihedral(2))]);
        let single = ClassSet::singleton(SO3);
        assert!(hasse(&single, GroupContext::SO3).unwrap().is_empty());
    }
}
