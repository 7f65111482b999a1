//! The clips operation `[H1] ∘ [H2] = {[H1 ∩ g H2 g⁻¹] : g}` on conjugacy
//! classes of closed subgroups of SO(3) and O(3), given in closed form.
//!
//! Every unordered pair of class families is handled by exactly one rule.
//! Rules produce raw descriptors (`Z_d` with `d = 1` and so on); the result is
//! canonicalized at the [`ClassSet`] boundary.

use serde::Serialize;
use thiserror::Error;

use crate::groups::{ClassError, ClassSet, GroupContext, SubgroupClass, SubgroupType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClipsError {
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error("unsupported: type II clips are not tabulated ({0} with {1})")]
    TypeII(SubgroupClass, SubgroupClass),
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Arithmetic shorthands used by the clips tables for a pair `(n, m)`.
///
/// Single-argument quantities (`d2`, `d3`, `d4`, `d5`, `k2`, `i_n`) depend on
/// `n` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClipsParameters {
    pub d: u32,
    pub d2: u32,
    pub d3: u32,
    pub d5: u32,
    pub k2: u32,
    pub dz: u32,
    pub d4: u32,
    pub i_n: u32,
    pub i_mn: u32,
}

pub fn clips_params(n: u32, m: u32) -> ClipsParameters {
    assert!(n >= 1 && m >= 1, "clips parameters need positive integers");
    let d2 = gcd(n, 2);
    ClipsParameters {
        d: gcd(m, n),
        d2,
        d3: gcd(n, 3),
        d5: gcd(n, 5),
        k2: 3 - d2,
        dz: if n.is_multiple_of(2) && m.is_multiple_of(2) {
            2
        } else {
            1
        },
        d4: if n.is_multiple_of(4) { 4 } else { 1 },
        i_n: 3 - d2,
        i_mn: if m.is_multiple_of(2) && n % 2 == 1 {
            2
        } else {
            1
        },
    }
}

fn d2(n: u32) -> u32 {
    gcd(n, 2)
}

fn d3(n: u32) -> u32 {
    gcd(n, 3)
}

fn d5(n: u32) -> u32 {
    gcd(n, 5)
}

fn d4(n: u32) -> u32 {
    if n.is_multiple_of(4) {
        4
    } else {
        1
    }
}

// 1 if n even, 2 if n odd
fn i1(n: u32) -> u32 {
    3 - d2(n)
}

fn odd(n: u32) -> bool {
    n % 2 == 1
}

/// Result of one clips evaluation, with the table cell or lemma that produced
/// it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClipsRuleOutcome {
    pub result: ClassSet,
    pub rule_id: &'static str,
}

/// `[a] ∘ [b]` in context `ctx`.
pub fn clips_pair(
    ctx: GroupContext,
    a: SubgroupClass,
    b: SubgroupClass,
) -> Result<ClassSet, ClipsError> {
    clips_rule(ctx, a, b).map(|o| o.result)
}

/// `F1 ∘ F2`: union of the pairwise clips.
pub fn clips_sets(ctx: GroupContext, f1: &ClassSet, f2: &ClassSet) -> Result<ClassSet, ClipsError> {
    let mut out = ClassSet::new();
    for &a in f1 {
        for &b in f2 {
            out.union_with(&clips_pair(ctx, a, b)?);
        }
    }
    Ok(out)
}

/// `[a] ∘ [b]` together with the identifier of the rule applied.
pub fn clips_rule(
    ctx: GroupContext,
    a: SubgroupClass,
    b: SubgroupClass,
) -> Result<ClipsRuleOutcome, ClipsError> {
    a.check_admissible(ctx)?;
    b.check_admissible(ctx)?;
    let a = a.normalize()?;
    let b = b.normalize()?;
    let (rule_id, raw) = dispatch(ctx, a, b)?;
    Ok(ClipsRuleOutcome {
        result: ClassSet::from_raw(raw)?,
        rule_id,
    })
}

type Rule = (&'static str, Vec<SubgroupClass>);

fn dispatch(ctx: GroupContext, a: SubgroupClass, b: SubgroupClass) -> Result<Rule, ClipsError> {
    use SubgroupClass::*;
    let full = ctx.full_group();
    if a == full {
        return Ok(("full-group", vec![b]));
    }
    if b == full {
        return Ok(("full-group", vec![a]));
    }
    if a.subgroup_type() == SubgroupType::II || b.subgroup_type() == SubgroupType::II {
        return Err(ClipsError::TypeII(a, b));
    }
    if a == Triv || b == Triv {
        return Ok(("trivial", vec![Triv]));
    }
    // lower rank first, so each unordered pair hits one arm
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match (a.subgroup_type(), b.subgroup_type()) {
        (SubgroupType::I, SubgroupType::I) => Ok(so3_rule(a, b)),
        (SubgroupType::I, SubgroupType::III) => Ok(type_three_with_rotations(b, a)),
        (SubgroupType::III, SubgroupType::III) => Ok(type_three_rule(a, b)),
        _ => unreachable!("pairs are sorted by type rank"),
    }
}

/// Clips of two closed subgroups of SO(3), `a <= b` in the canonical order.
fn so3_rule(a: SubgroupClass, b: SubgroupClass) -> Rule {
    use SubgroupClass::*;
    // SO(3) is a proper subgroup only in O(3) context
    if b == SO3 {
        return ("so3/SO3", vec![a]);
    }
    match (a, b) {
        (Cyclic(m), Cyclic(n)) => ("so3/Zn-Zm", vec![Triv, Cyclic(gcd(m, n))]),
        (Cyclic(n), Dihedral(m)) => ("so3/Dm-Zn", vec![Triv, Cyclic(d2(n)), Cyclic(gcd(m, n))]),
        (Dihedral(m), Dihedral(n)) => {
            let p = clips_params(n, m);
            (
                "so3/Dn-Dm",
                vec![Triv, Cyclic(2), Dihedral(p.dz), Cyclic(p.d), Dihedral(p.d)],
            )
        }
        (Cyclic(n), Tetra) => ("so3/T-Zn", vec![Triv, Cyclic(d2(n)), Cyclic(d3(n))]),
        (Dihedral(n), Tetra) => (
            "so3/T-Dn",
            vec![Triv, Cyclic(2), Cyclic(d3(n)), Dihedral(d2(n))],
        ),
        // T has a single Klein subgroup, normalized only by O, which also
        // normalizes T: no intersection stops at D2.
        (Tetra, Tetra) => ("so3/T-T", vec![Triv, Cyclic(2), Cyclic(3), Tetra]),
        (Cyclic(n), Octa) => (
            "so3/O-Zn",
            vec![Triv, Cyclic(d2(n)), Cyclic(d3(n)), Cyclic(d4(n))],
        ),
        (Dihedral(n), Octa) => (
            "so3/O-Dn",
            vec![
                Triv,
                Cyclic(2),
                Cyclic(d3(n)),
                Cyclic(d4(n)),
                Dihedral(d2(n)),
                Dihedral(d3(n)),
                Dihedral(d4(n)),
            ],
        ),
        (Tetra, Octa) => (
            "so3/O-T",
            vec![Triv, Cyclic(2), Dihedral(2), Cyclic(3), Tetra],
        ),
        (Octa, Octa) => (
            "so3/O-O",
            vec![
                Triv,
                Cyclic(2),
                Dihedral(2),
                Cyclic(3),
                Dihedral(3),
                Cyclic(4),
                Dihedral(4),
                Octa,
            ],
        ),
        (Cyclic(n), Ico) => (
            "so3/I-Zn",
            vec![Triv, Cyclic(d2(n)), Cyclic(d3(n)), Cyclic(d5(n))],
        ),
        (Dihedral(n), Ico) => (
            "so3/I-Dn",
            vec![
                Triv,
                Cyclic(2),
                Cyclic(d3(n)),
                Cyclic(d5(n)),
                Dihedral(d2(n)),
                Dihedral(d3(n)),
                Dihedral(d5(n)),
            ],
        ),
        (Tetra, Ico) => ("so3/I-T", vec![Triv, Cyclic(2), Cyclic(3), Tetra]),
        // D2 from a non-normal Klein subgroup of O placed on one of I
        (Octa, Ico) => (
            "so3/O-I",
            vec![Triv, Cyclic(2), Dihedral(2), Cyclic(3), Dihedral(3), Tetra],
        ),
        // a quarter turn normalizing one of the five T inside I
        (Ico, Ico) => (
            "so3/I-I",
            vec![
                Triv,
                Cyclic(2),
                Cyclic(3),
                Dihedral(3),
                Cyclic(5),
                Dihedral(5),
                Tetra,
                Ico,
            ],
        ),
        (Cyclic(n), SO2) => ("so3/SO2-Zn", vec![Triv, Cyclic(n)]),
        (Dihedral(n), SO2) => ("so3/SO2-Dn", vec![Triv, Cyclic(2), Cyclic(n)]),
        (Tetra, SO2) => ("so3/SO2-T", vec![Triv, Cyclic(2), Cyclic(3)]),
        (Octa, SO2) => ("so3/SO2-O", vec![Triv, Cyclic(2), Cyclic(3), Cyclic(4)]),
        (Ico, SO2) => ("so3/SO2-I", vec![Triv, Cyclic(2), Cyclic(3), Cyclic(5)]),
        (SO2, SO2) => ("so3/SO2-SO2", vec![Triv, SO2]),
        (Cyclic(n), O2) => ("so3/O2-Zn", vec![Triv, Cyclic(d2(n)), Cyclic(n)]),
        // An O(2) secondary axis on a secondary axis of D_n leaves a D_2
        // exactly when n is even, hence D_{d2(n)}.
        (Dihedral(n), O2) => (
            "so3/O2-Dn",
            vec![Triv, Cyclic(2), Dihedral(d2(n)), Dihedral(n)],
        ),
        (Tetra, O2) => ("so3/O2-T", vec![Triv, Cyclic(2), Dihedral(2), Cyclic(3)]),
        (Octa, O2) => (
            "so3/O2-O",
            vec![Triv, Cyclic(2), Dihedral(2), Dihedral(3), Dihedral(4)],
        ),
        (Ico, O2) => (
            "so3/O2-I",
            vec![Triv, Cyclic(2), Dihedral(2), Dihedral(3), Dihedral(5)],
        ),
        (SO2, O2) => ("so3/O2-SO2", vec![Triv, Cyclic(2), SO2]),
        (O2, O2) => ("so3/O2-O2", vec![Cyclic(2), Dihedral(2), O2]),
        _ => unreachable!("unhandled SO(3) pair {a} {b}"),
    }
}

/// A type III class against a closed subgroup of SO(3): only the rotation
/// part `L` of the type III group can meet a rotation group.
fn type_three_with_rotations(t: SubgroupClass, h: SubgroupClass) -> Rule {
    use SubgroupClass::*;
    let rule_id = match t {
        ZMinus(2) => "rotation-part/Z2^-",
        ZMinus(_) => "rotation-part/Z2n^-",
        DV(_) => "rotation-part/Dn^v",
        DH(_) => "rotation-part/D2n^h",
        OctaMinus => "rotation-part/O^-",
        O2Minus => "rotation-part/O(2)^-",
        _ => unreachable!(),
    };
    let l = t.rotation_part();
    if l == Triv || h == SO3 {
        return (rule_id, vec![l]);
    }
    let (lo, hi) = if l <= h { (l, h) } else { (h, l) };
    (rule_id, so3_rule(lo, hi).1)
}

// Collapsed forms that keep the geometry when the parameter is 1: a single
// half-turn, a single mirror, and a half-turn with two perpendicular mirrors.
fn dihedral_or_half_turn(d: u32) -> SubgroupClass {
    if d == 1 {
        SubgroupClass::Cyclic(2)
    } else {
        SubgroupClass::Dihedral(d)
    }
}

fn dv_or_mirror(d: u32) -> SubgroupClass {
    if d == 1 {
        SubgroupClass::ZMinus(2)
    } else {
        SubgroupClass::DV(d)
    }
}

fn dh_or_d2v(d: u32) -> SubgroupClass {
    if d == 1 {
        SubgroupClass::DV(2)
    } else {
        SubgroupClass::DH(2 * d)
    }
}

/// Clips of two type III classes, `a <= b` in the canonical order.
fn type_three_rule(a: SubgroupClass, b: SubgroupClass) -> Rule {
    use SubgroupClass::*;
    match (a, b) {
        (ZMinus(p), ZMinus(q)) => {
            let (n, m) = (p / 2, q / 2);
            let d = gcd(n, m);
            if odd(n / d) && odd(m / d) {
                ("type3/Z^--Z^-", vec![Triv, ZMinus(2 * d)])
            } else {
                ("type3/Z^--Z^-", vec![Triv, Cyclic(d)])
            }
        }
        (ZMinus(q), DV(n)) => {
            let m = q / 2;
            (
                "type3/Z^--D^v",
                vec![Triv, ZMinus(i1(m)), Cyclic(gcd(n, m))],
            )
        }
        (DV(n), DV(m)) => {
            let d = gcd(n, m);
            ("type3/D^v-D^v", vec![Triv, ZMinus(2), DV(d), Cyclic(d)])
        }
        (ZMinus(q), DH(p)) => {
            let (n, m) = (p / 2, q / 2);
            let d = gcd(n, m);
            let mut out = vec![Triv, Cyclic(d2(m)), ZMinus(i1(m))];
            if odd(n / d) && odd(m / d) {
                out.push(ZMinus(2 * d));
            } else {
                out.push(Cyclic(d));
            }
            ("type3/Z^--D^h", out)
        }
        (DV(m), DH(p)) => ("type3/D^v-D^h", dv_dh(m, p / 2)),
        (DH(p), DH(q)) => ("type3/D^h-D^h", dh_dh(p / 2, q / 2)),
        (ZMinus(q), OctaMinus) => {
            let n = q / 2;
            let extra = if odd(n) {
                ZMinus(2)
            } else if n % 4 == 2 {
                ZMinus(4)
            } else {
                Cyclic(2)
            };
            ("type3/Z^--O^-", vec![Triv, extra, Cyclic(d3(n))])
        }
        (DV(n), OctaMinus) => (
            "type3/D^v-O^-",
            vec![
                Triv,
                ZMinus(2),
                Cyclic(d3(n)),
                DV(d3(n)),
                Cyclic(d2(n)),
                DV(d2(n)),
            ],
        ),
        (DH(p), OctaMinus) => ("type3/D^h-O^-", dh_octa_minus(p / 2)),
        // a vertex axis of the cube on a vertex axis, with a turn by π/3,
        // keeps the three mirrors through it
        (OctaMinus, OctaMinus) => (
            "type3/O^--O^-",
            vec![Triv, ZMinus(2), ZMinus(4), Cyclic(3), DV(3), OctaMinus],
        ),
        (ZMinus(2), O2Minus) => ("type3/Z^--O(2)^-", vec![Triv, ZMinus(2)]),
        (ZMinus(q), O2Minus) => {
            let n = q / 2;
            ("type3/Z^--O(2)^-", vec![Triv, ZMinus(i1(n)), Cyclic(n)])
        }
        (DV(n), O2Minus) => ("type3/D^v-O(2)^-", vec![Triv, ZMinus(2), DV(n)]),
        (DH(p), O2Minus) => {
            let n = p / 2;
            (
                "type3/D^h-O(2)^-",
                vec![Triv, Cyclic(d2(n)), ZMinus(2), DV(i1(n)), DV(n)],
            )
        }
        (OctaMinus, O2Minus) => ("type3/O^--O(2)^-", vec![Triv, ZMinus(2), DV(3), DV(2)]),
        (O2Minus, O2Minus) => ("type3/O(2)^--O(2)^-", vec![ZMinus(2), O2Minus]),
        _ => unreachable!("unhandled type III pair {a} {b}"),
    }
}

/// `[D_m^v] ∘ [D_2n^h]`.
///
/// Sharing the principal axis gives the common rotations `Z_d` plus, for a
/// suitable turn, `d` common mirrors. Otherwise a mirror of `D_m^v` can sit on
/// a mirror of `D_2n^h`, and for even `m` its principal half-turn can sit on
/// a secondary half-turn of `D_n`; with `n` odd the two mirrors through that
/// axis then also match.
fn dv_dh(m: u32, n: u32) -> Vec<SubgroupClass> {
    use SubgroupClass::*;
    let d = gcd(n, m);
    let mut out = vec![Triv, ZMinus(2), Cyclic(d), dv_or_mirror(d)];
    if !odd(m) {
        out.push(Cyclic(2));
        if odd(n) {
            out.push(DV(2));
        }
    }
    out
}

/// `[D_2n^h] ∘ [D_2m^h]`.
///
/// With distinct principal axes only half-turn axes can be shared: a single
/// one (proper or a mirror normal) or a perpendicular triple, all proper when
/// `n` and `m` are even and one proper otherwise. With a common principal
/// axis the rotations about it give `Z_2d^-` when `n/d` and `m/d` are both
/// odd, `Z_d` otherwise, and a suitable turn adds the matching secondary axes.
fn dh_dh(n: u32, m: u32) -> Vec<SubgroupClass> {
    use SubgroupClass::*;
    let d = gcd(n, m);
    let mut out = vec![Triv, Cyclic(2), ZMinus(2)];
    if !odd(n) && !odd(m) {
        out.push(Dihedral(2));
    } else {
        out.push(DV(2));
    }
    if odd(n / d) && odd(m / d) {
        out.extend([ZMinus(2 * d), dh_or_d2v(d)]);
    } else {
        out.extend([Cyclic(d), dihedral_or_half_turn(d), dv_or_mirror(d)]);
    }
    out
}

/// `[D_2n^h] ∘ [O^-]`, by the axis of the cube carrying the principal axis.
fn dh_octa_minus(n: u32) -> Vec<SubgroupClass> {
    use SubgroupClass::*;
    // principal axis off the cube axes: one shared half-turn or mirror
    let mut out = vec![Triv, Cyclic(2), ZMinus(2)];
    // on a face axis
    match n % 4 {
        2 => out.extend([ZMinus(4), DH(4)]),
        0 => out.extend([Dihedral(2), DV(2)]),
        _ => {}
    }
    // on an edge axis, whose half-turn is a mirror of O^-
    if odd(n) {
        out.push(DV(2));
    }
    // on a vertex axis
    if n.is_multiple_of(3) {
        out.extend([Cyclic(3), DV(3)]);
    }
    out
}
