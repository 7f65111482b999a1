//! Brute-force check of the clips tables on explicit matrix groups.
//!
//! Finite subgroups are realized as sets of 3×3 orthogonal matrices, a second
//! group is placed in many orientations, and each intersection is classified
//! from its element structure. Infinite classes are out of reach here.
//!
//! Orientations come from two sources. *Alignment frames* place the second
//! group so that one characteristic axis, or an ordered pair of axes,
//! coincides with axes of the first group; a non-trivial intersection always
//! shares such axes, so these frames reach every intersection class.
//! *Random frames* are drawn uniformly on SO(3) from a fixed seed and can
//! only confirm that nothing outside the table shows up.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use nalgebra::{Matrix3, Rotation3, Unit, UnitQuaternion, Vector3};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::clips::{self, ClipsError};
use crate::groups::{ClassSet, GroupContext, SubgroupClass};

pub type Mat3 = Matrix3<f64>;

/// Element matching tolerance (entrywise max norm).
pub const MATCH_TOL: f64 = 1e-6;
/// Orthogonality tolerance for element matrices.
pub const ORTHO_TOL: f64 = 1e-9;

const MAX_ORDER: usize = 240;
// Spin angles for single-axis alignments; far from every rational multiple
// of π with small denominator.
const GENERIC_SPINS: [f64; 2] = [0.713_958_123_4, 2.141_592_653_1];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("matrix is not orthogonal (deviation {0:e})")]
    NotOrthogonal(f64),
    #[error("class {0} has no finite realization")]
    Infinite(SubgroupClass),
    #[error("element set is not closed under products (size {0})")]
    NotClosed(usize),
    #[error("generated group exceeds {MAX_ORDER} elements")]
    TooLarge,
    #[error("unrecognized group: {0}")]
    Unrecognized(String),
    #[error(transparent)]
    Clips(#[from] ClipsError),
}

/// An orthogonal 3×3 matrix with its determinant sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementMatrix {
    m: Mat3,
    det: i8,
}

impl ElementMatrix {
    pub fn new(m: Mat3) -> Result<Self, OracleError> {
        let dev = (m.transpose() * m - Mat3::identity()).amax();
        if dev > ORTHO_TOL {
            return Err(OracleError::NotOrthogonal(dev));
        }
        let det = m.determinant();
        if (det.abs() - 1.0).abs() > ORTHO_TOL {
            return Err(OracleError::NotOrthogonal((det.abs() - 1.0).abs()));
        }
        Ok(ElementMatrix {
            m,
            det: if det > 0.0 { 1 } else { -1 },
        })
    }

    fn from_parts(m: Mat3, det: i8) -> Self {
        ElementMatrix { m, det }
    }

    pub fn identity() -> Self {
        ElementMatrix::from_parts(Mat3::identity(), 1)
    }

    pub fn rotation(axis: Vector3<f64>, angle: f64) -> Self {
        let r = Rotation3::from_axis_angle(&Unit::new_normalize(axis), angle);
        ElementMatrix::from_parts(*r.matrix(), 1)
    }

    /// `-Q(axis, angle)`.
    pub fn rotoreflection(axis: Vector3<f64>, angle: f64) -> Self {
        let r = ElementMatrix::rotation(axis, angle);
        ElementMatrix::from_parts(-r.m, -1)
    }

    pub fn minus_identity() -> Self {
        ElementMatrix::from_parts(-Mat3::identity(), -1)
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn det(&self) -> i8 {
        self.det
    }

    pub fn is_proper(&self) -> bool {
        self.det > 0
    }

    /// `det(g) g`, always a rotation.
    pub fn projected(&self) -> Mat3 {
        if self.det > 0 {
            self.m
        } else {
            -self.m
        }
    }

    pub fn approx_eq(&self, other: &ElementMatrix, tol: f64) -> bool {
        self.det == other.det && (self.m - other.m).amax() <= tol
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&ElementMatrix::identity(), tol)
    }

    fn mul(&self, other: &ElementMatrix) -> ElementMatrix {
        ElementMatrix::from_parts(self.m * other.m, self.det * other.det)
    }

    fn conjugated(&self, frame: &AxisFrame) -> ElementMatrix {
        let f = frame.rot.matrix();
        ElementMatrix::from_parts(f * self.m * f.transpose(), self.det)
    }

    /// Rotation angle of the projected rotation, in `[0, π]`.
    fn angle(&self) -> f64 {
        let c = ((self.projected().trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
        c.acos()
    }

    /// Order of the element in O(3).
    fn order(&self) -> usize {
        let theta = self.angle();
        let rot_order = (1..=MAX_ORDER)
            .find(|&k| {
                let turns = k as f64 * theta / (2.0 * PI);
                (turns - turns.round()).abs() < 1e-6
            })
            .unwrap_or(usize::MAX);
        // -R has order lcm(ord R, 2)
        if self.det < 0 && rot_order % 2 == 1 {
            2 * rot_order
        } else {
            rot_order
        }
    }

    /// Unit axis of the projected rotation, `None` for `±I`.
    fn axis(&self) -> Option<Vector3<f64>> {
        let r = self.projected();
        let theta = self.angle();
        // acos amplifies rounding near the identity to about 1e-8
        if theta < 1e-5 {
            return None;
        }
        let v = if theta < PI - 1e-4 {
            Vector3::new(
                r[(2, 1)] - r[(1, 2)],
                r[(0, 2)] - r[(2, 0)],
                r[(1, 0)] - r[(0, 1)],
            )
        } else {
            let s = (r + Mat3::identity()) / 2.0;
            let j = (0..3)
                .max_by(|&a, &b| s[(a, a)].total_cmp(&s[(b, b)]))
                .expect("three columns");
            s.column(j).into_owned()
        };
        Some(v.normalize())
    }
}

/// Placement of a group: the rotation that carries the canonical frame
/// `(i, j, k)` to the desired orientation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisFrame {
    rot: Rotation3<f64>,
}

impl Default for AxisFrame {
    fn default() -> Self {
        AxisFrame::identity()
    }
}

impl AxisFrame {
    pub fn identity() -> Self {
        AxisFrame {
            rot: Rotation3::identity(),
        }
    }

    pub fn from_axis_angle(axis: Vector3<f64>, angle: f64) -> Self {
        AxisFrame {
            rot: Rotation3::from_axis_angle(&Unit::new_normalize(axis), angle),
        }
    }

    pub fn from_rotation(rot: Rotation3<f64>) -> Self {
        AxisFrame { rot }
    }

    pub fn random<R: RngExt + ?Sized>(rng: &mut R) -> Self {
        let q: UnitQuaternion<f64> = rng.random();
        AxisFrame {
            rot: q.to_rotation_matrix(),
        }
    }

    pub fn rotation(&self) -> &Rotation3<f64> {
        &self.rot
    }

    pub fn then(&self, other: &AxisFrame) -> AxisFrame {
        AxisFrame {
            rot: other.rot * self.rot,
        }
    }

    /// `(axis, angle)` with the angle in radians; the identity reports the
    /// `z` axis and angle 0.
    pub fn axis_angle(&self) -> ([f64; 3], f64) {
        match self.rot.axis_angle() {
            Some((axis, angle)) => ([axis.x, axis.y, axis.z], angle),
            None => ([0.0, 0.0, 1.0], 0.0),
        }
    }

    // Rotation taking unit u2 onto unit u1.
    fn aligning(u2: &Vector3<f64>, u1: &Vector3<f64>) -> AxisFrame {
        let rot = Rotation3::rotation_between(u2, u1).unwrap_or_else(|| {
            // antiparallel: half turn about any perpendicular axis
            let perp = if u2.x.abs() < 0.9 {
                u2.cross(&Vector3::x())
            } else {
                u2.cross(&Vector3::y())
            };
            Rotation3::from_axis_angle(&Unit::new_normalize(perp), PI)
        });
        AxisFrame { rot }
    }

    // Rotation taking the ordered pair (u2, v2) onto (u1, v1); the angles
    // between the pairs must agree.
    fn aligning_pair(
        u2: &Vector3<f64>,
        v2: &Vector3<f64>,
        u1: &Vector3<f64>,
        v1: &Vector3<f64>,
    ) -> AxisFrame {
        let basis = |u: &Vector3<f64>, v: &Vector3<f64>| {
            let e1 = u.normalize();
            let e2 = (v - e1 * e1.dot(v)).normalize();
            let e3 = e1.cross(&e2);
            Mat3::from_columns(&[e1, e2, e3])
        };
        let m = basis(u1, v1) * basis(u2, v2).transpose();
        AxisFrame {
            rot: Rotation3::from_matrix_unchecked(m),
        }
    }
}

/// An explicit finite subgroup of O(3).
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    elements: Vec<ElementMatrix>,
    provenance: String,
    class: Option<SubgroupClass>,
}

impl MatrixGroup {
    /// Closure of a generator list.
    pub fn generated(
        generators: &[ElementMatrix],
        provenance: impl Into<String>,
    ) -> Result<Self, OracleError> {
        let mut elements = vec![ElementMatrix::identity()];
        let mut frontier = vec![ElementMatrix::identity()];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = x.mul(g);
                if !elements.iter().any(|e| e.approx_eq(&y, MATCH_TOL)) {
                    if elements.len() >= MAX_ORDER {
                        return Err(OracleError::TooLarge);
                    }
                    elements.push(y);
                    frontier.push(y);
                }
            }
        }
        Ok(MatrixGroup {
            elements,
            provenance: provenance.into(),
            class: None,
        })
    }

    pub fn from_elements(
        elements: Vec<ElementMatrix>,
        provenance: impl Into<String>,
    ) -> Result<Self, OracleError> {
        let g = MatrixGroup {
            elements,
            provenance: provenance.into(),
            class: None,
        };
        g.check_closed(MATCH_TOL)?;
        Ok(g)
    }

    pub fn elements(&self) -> &[ElementMatrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// The class this group was built for, if it came from [`realize`].
    pub fn claimed_class(&self) -> Option<SubgroupClass> {
        self.class
    }

    pub fn contains(&self, x: &ElementMatrix, tol: f64) -> bool {
        self.elements.iter().any(|e| e.approx_eq(x, tol))
    }

    pub fn check_closed(&self, tol: f64) -> Result<(), OracleError> {
        let err = || OracleError::NotClosed(self.elements.len());
        if !self.elements.iter().any(|e| e.is_identity(tol)) {
            return Err(err());
        }
        for a in &self.elements {
            let inv = ElementMatrix::from_parts(a.m.transpose(), a.det);
            if !self.contains(&inv, tol) {
                return Err(err());
            }
            for b in &self.elements {
                if !self.contains(&a.mul(b), tol) {
                    return Err(err());
                }
            }
        }
        Ok(())
    }

    pub fn conjugated(&self, frame: &AxisFrame) -> MatrixGroup {
        MatrixGroup {
            elements: self.elements.iter().map(|e| e.conjugated(frame)).collect(),
            provenance: self.provenance.clone(),
            class: self.class,
        }
    }

    fn intersection_unchecked(&self, other: &MatrixGroup, tol: f64) -> MatrixGroup {
        let elements = self
            .elements
            .iter()
            .filter(|e| other.contains(e, tol))
            .copied()
            .collect();
        MatrixGroup {
            elements,
            provenance: format!("{} ∩ {}", self.provenance, other.provenance),
            class: None,
        }
    }

    /// Distinct lines through the origin carrying a rotation axis of some
    /// element's projected rotation.
    fn axes(&self) -> Vec<Vector3<f64>> {
        let mut out: Vec<Vector3<f64>> = Vec::new();
        for e in &self.elements {
            if let Some(a) = e.axis() {
                if !out.iter().any(|b| same_line(&a, b)) {
                    out.push(a);
                }
            }
        }
        out
    }

    /// One axis per orbit of the group acting on its axes.
    fn axis_orbit_representatives(&self) -> Vec<Vector3<f64>> {
        let axes = self.axes();
        let mut seen = vec![false; axes.len()];
        let mut reps = Vec::new();
        for i in 0..axes.len() {
            if seen[i] {
                continue;
            }
            reps.push(axes[i]);
            for e in &self.elements {
                let image = e.projected() * axes[i];
                for (j, b) in axes.iter().enumerate() {
                    if same_line(&image, b) {
                        seen[j] = true;
                    }
                }
            }
        }
        reps
    }
}

fn same_line(a: &Vector3<f64>, b: &Vector3<f64>) -> bool {
    (a.dot(b).abs() - 1.0).abs() < 1e-9
}

fn golden() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

fn proper_generators(class: SubgroupClass) -> Result<Vec<ElementMatrix>, OracleError> {
    use SubgroupClass::*;
    let z = Vector3::z();
    let x = Vector3::x();
    let vertex = Vector3::new(1.0, 1.0, 1.0);
    let gens = match class {
        Triv => vec![],
        Cyclic(n) => vec![ElementMatrix::rotation(z, 2.0 * PI / n as f64)],
        Dihedral(n) => vec![
            ElementMatrix::rotation(z, 2.0 * PI / n as f64),
            ElementMatrix::rotation(x, PI),
        ],
        // tetrahedron A1 A3 A7 A5 inscribed in the cube (±1, ±1, ±1)
        Tetra => vec![
            ElementMatrix::rotation(z, PI),
            ElementMatrix::rotation(vertex, 2.0 * PI / 3.0),
        ],
        Octa => vec![
            ElementMatrix::rotation(z, PI / 2.0),
            ElementMatrix::rotation(vertex, 2.0 * PI / 3.0),
        ],
        // dodecahedron with vertices (±φ, ±1/φ, 0), (±1/φ, 0, ±φ),
        // (0, ±φ, ±1/φ) and the cube; (φ, 0, 1) is a face axis
        Ico => vec![
            ElementMatrix::rotation(z, PI),
            ElementMatrix::rotation(vertex, 2.0 * PI / 3.0),
            ElementMatrix::rotation(Vector3::new(golden(), 0.0, 1.0), 2.0 * PI / 5.0),
        ],
        other => return Err(OracleError::Infinite(other)),
    };
    Ok(gens)
}

/// Explicit matrix group of a finite class, oriented by `frame`.
pub fn realize(class: SubgroupClass, frame: &AxisFrame) -> Result<MatrixGroup, OracleError> {
    use SubgroupClass::*;
    let class = class
        .normalize()
        .map_err(|e| OracleError::Unrecognized(e.to_string()))?;
    let z = Vector3::z();
    let x = Vector3::x();
    let gens = match class {
        ZMinus(p) => {
            // Z_n ∪ (-r_n Z_n), r_n = Q(k, π/n)
            let n = p / 2;
            vec![ElementMatrix::rotoreflection(z, PI / n as f64)]
        }
        DV(n) => vec![
            ElementMatrix::rotation(z, 2.0 * PI / n as f64),
            ElementMatrix::rotoreflection(x, PI),
        ],
        DH(p) => {
            // D_n ∪ (-r_n D_n)
            let n = p / 2;
            let mut g = proper_generators(Dihedral(n))?;
            g.push(ElementMatrix::rotoreflection(z, PI / n as f64));
            g
        }
        OctaMinus => {
            // T ∪ -(O \ T)
            let mut g = proper_generators(Tetra)?;
            g.push(ElementMatrix::rotoreflection(z, PI / 2.0));
            g
        }
        TypeII(k) => {
            let mut g = proper_generators(k.into())?;
            g.push(ElementMatrix::minus_identity());
            g
        }
        O2Minus => return Err(OracleError::Infinite(class)),
        proper => proper_generators(proper)?,
    };
    let mut group = MatrixGroup::generated(&gens, class.to_string())?;
    group.class = Some(class);
    Ok(group.conjugated(frame))
}

/// `g1 ∩ g2` up to `tol`; fails if the result is not a group.
pub fn intersect(g1: &MatrixGroup, g2: &MatrixGroup, tol: f64) -> Result<MatrixGroup, OracleError> {
    let out = g1.intersection_unchecked(g2, tol);
    out.check_closed(tol)?;
    Ok(out)
}

fn max_order(elements: &[ElementMatrix]) -> usize {
    elements.iter().map(|e| e.order()).max().unwrap_or(1)
}

fn classify_proper(elements: &[ElementMatrix]) -> Result<SubgroupClass, OracleError> {
    use SubgroupClass::*;
    let n = elements.len();
    let top = max_order(elements);
    let axes: Vec<Vector3<f64>> = {
        let mut out: Vec<Vector3<f64>> = Vec::new();
        for a in elements.iter().filter_map(|e| e.axis()) {
            if !out.iter().any(|b| same_line(&a, b)) {
                out.push(a);
            }
        }
        out
    };
    let unrecognized = || {
        OracleError::Unrecognized(format!(
            "rotation group of order {n}, max element order {top}, {} axes",
            axes.len()
        ))
    };
    let class = if n == 1 {
        Triv
    } else if top == n {
        if axes.len() != 1 {
            return Err(unrecognized());
        }
        Cyclic(n as u32)
    } else if n == 2 * top {
        // principal axis plus `top` perpendicular half-turn axes
        let expected = if top == 2 { 3 } else { top + 1 };
        if axes.len() != expected {
            return Err(unrecognized());
        }
        Dihedral(top as u32)
    } else {
        match (n, top) {
            (12, 3) => Tetra,
            (24, 4) => Octa,
            (60, 5) => Ico,
            _ => return Err(unrecognized()),
        }
    };
    Ok(class)
}

/// Class of an explicit finite group, read from its element structure.
pub fn classify(g: &MatrixGroup) -> Result<SubgroupClass, OracleError> {
    use SubgroupClass::*;
    let proper: Vec<ElementMatrix> = g
        .elements
        .iter()
        .filter(|e| e.is_proper())
        .copied()
        .collect();
    if proper.len() == g.elements.len() {
        return classify_proper(&proper);
    }
    let kernel = classify_proper(&proper)?;
    if g.contains(&ElementMatrix::minus_identity(), MATCH_TOL) {
        let k = kernel.proper().expect("rotation group");
        return Ok(TypeII(k));
    }
    let projected: Vec<ElementMatrix> = g
        .elements
        .iter()
        .map(|e| ElementMatrix::from_parts(e.projected(), 1))
        .collect();
    let image = classify_proper(&projected)?;
    let class = match (kernel, image) {
        (Triv, Cyclic(2)) => ZMinus(2),
        (Cyclic(n), Cyclic(m)) if m == 2 * n => ZMinus(m),
        (Cyclic(n), Dihedral(m)) if m == n => DV(n),
        (Dihedral(n), Dihedral(m)) if m == 2 * n => DH(m),
        (Tetra, Octa) => OctaMinus,
        (l, h) => {
            return Err(OracleError::Unrecognized(format!(
                "type III couple ({l}, {h})"
            )))
        }
    };
    Ok(class)
}

/// Frames that bring characteristic axes of `b` onto axes of `a`, both
/// realized in the identity frame.
///
/// Every orbit representative axis of `b` is placed on every orbit
/// representative axis of `a` with two generic spins, and every ordered pair
/// of axes of `b` is matched onto every congruent ordered pair of axes of `a`
/// (first member taken up to the group action).
pub fn standard_alignments(a: &MatrixGroup, b: &MatrixGroup) -> Vec<AxisFrame> {
    let reps_a = a.axis_orbit_representatives();
    let reps_b = b.axis_orbit_representatives();
    let axes_a = a.axes();
    let axes_b = b.axes();
    let mut frames = Vec::new();
    for u1 in &reps_a {
        for u2 in &reps_b {
            let base = AxisFrame::aligning(u2, u1);
            for spin in GENERIC_SPINS {
                frames.push(base.then(&AxisFrame::from_axis_angle(*u1, spin)));
            }
        }
    }
    for u1 in &reps_a {
        for v1 in axes_a.iter().filter(|v| !same_line(u1, v)) {
            for u2 in &reps_b {
                for v2 in axes_b.iter().filter(|v| !same_line(u2, v)) {
                    for s in [1.0, -1.0] {
                        let v1s = v1 * s;
                        if (u1.dot(&v1s) - u2.dot(v2)).abs() < 1e-9 {
                            frames.push(AxisFrame::aligning_pair(u2, v2, u1, &v1s));
                        }
                    }
                }
            }
        }
    }
    frames
}

/// Uniform random frames from a fixed seed.
pub fn random_frames(count: usize, seed: u64) -> Vec<AxisFrame> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| AxisFrame::random(&mut rng)).collect()
}

/// A frame as recorded in reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameRecord {
    pub axis: [f64; 3],
    pub angle: f64,
    pub aligned: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Comparison of one clips table cell with the brute-force intersections.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub pair: (SubgroupClass, SubgroupClass),
    pub table: ClassSet,
    pub observed: ClassSet,
    pub witnesses: BTreeMap<String, FrameRecord>,
    /// Observed but not in the table.
    pub extra: ClassSet,
    /// In the table but never observed.
    pub missing: ClassSet,
    /// Classes that only random frames reached; must be empty for a sound
    /// alignment list.
    pub random_only: ClassSet,
    pub alignments: usize,
    pub samples: usize,
    pub seed: u64,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Classifies `a ∩ f(b)` for every alignment and `random_samples` random
/// frames, and compares the observed classes with the clips table.
pub fn verify_clips(
    a: SubgroupClass,
    b: SubgroupClass,
    random_samples: usize,
    seed: u64,
    alignments: &[AxisFrame],
) -> Result<VerificationReport, OracleError> {
    let ga = realize(a, &AxisFrame::identity())?;
    let gb = realize(b, &AxisFrame::identity())?;
    let ctx = if a.is_admissible(GroupContext::SO3) && b.is_admissible(GroupContext::SO3) {
        GroupContext::SO3
    } else {
        GroupContext::O3
    };
    let table = clips::clips_pair(ctx, a, b)?;
    let randoms = random_frames(random_samples, seed);
    let frames: Vec<(AxisFrame, bool)> = alignments
        .iter()
        .map(|f| (*f, true))
        .chain(randoms.into_iter().map(|f| (f, false)))
        .collect();
    let classes: Vec<Result<SubgroupClass, OracleError>> = frames
        .par_iter()
        .map(|(f, _)| {
            let moved = gb.conjugated(f);
            classify(&intersect(&ga, &moved, MATCH_TOL)?)
        })
        .collect();
    let mut observed = ClassSet::new();
    let mut aligned_seen = ClassSet::new();
    let mut witnesses = BTreeMap::new();
    for ((frame, aligned), class) in frames.iter().zip(classes) {
        let class = class?;
        observed.insert(class).expect("canonical");
        if *aligned {
            aligned_seen.insert(class).expect("canonical");
        }
        witnesses.entry(class.to_string()).or_insert_with(|| {
            let (axis, angle) = frame.axis_angle();
            FrameRecord {
                axis,
                angle,
                aligned: *aligned,
            }
        });
    }
    let extra = observed.difference(&table);
    let missing = table.difference(&observed);
    let random_only = observed.difference(&aligned_seen);
    let verdict = if extra.is_empty() && missing.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerificationReport {
        pair: (a, b),
        table,
        observed,
        witnesses,
        extra,
        missing,
        random_only,
        alignments: alignments.len(),
        samples: random_samples,
        seed,
        verdict,
    })
}

/// [`verify_clips`] with [`standard_alignments`] of the two realized groups.
pub fn verify_clips_standard(
    a: SubgroupClass,
    b: SubgroupClass,
    random_samples: usize,
    seed: u64,
) -> Result<VerificationReport, OracleError> {
    let ga = realize(a, &AxisFrame::identity())?;
    let gb = realize(b, &AxisFrame::identity())?;
    let frames = standard_alignments(&ga, &gb);
    verify_clips(a, b, random_samples, seed, &frames)
}

/// Whether some orientation of `a` lies inside `b`, by direct search over
/// alignment frames.
pub fn embeds(a: SubgroupClass, b: SubgroupClass) -> Result<bool, OracleError> {
    let ga = realize(a, &AxisFrame::identity())?;
    let gb = realize(b, &AxisFrame::identity())?;
    if ga.order() > gb.order() || gb.order() % ga.order() != 0 {
        return Ok(false);
    }
    if ga.order() == 1 {
        return Ok(true);
    }
    // frames placing `a` relative to `b`
    let frames = standard_alignments(&gb, &ga);
    Ok(frames.iter().any(|f| {
        let moved = ga.conjugated(f);
        moved.elements.iter().all(|e| gb.contains(e, MATCH_TOL))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use SubgroupClass::*;

    #[test]
    fn realized_orders() {
        let id = AxisFrame::identity();
        let cases = [
            (Triv, 1),
            (Cyclic(5), 5),
            (Dihedral(6), 12),
            (Tetra, 12),
            (Octa, 24),
            (Ico, 60),
            (ZMinus(2), 2),
            (ZMinus(8), 8),
            (DV(5), 10),
            (DH(12), 24),
            (OctaMinus, 24),
            (TypeII(crate::groups::ProperClass::Octa), 48),
        ];
        for (c, n) in cases {
            let g = realize(c, &id).unwrap();
            assert_eq!(g.order(), n, "{c}");
            g.check_closed(MATCH_TOL).unwrap();
        }
    }

    #[test]
    fn z4_minus_elements() {
        // {Id, R_z(π), -R_z(π/2), -R_z(3π/2)}
        let g = realize(ZMinus(4), &AxisFrame::identity()).unwrap();
        let z = Vector3::z();
        let expected = [
            ElementMatrix::identity(),
            ElementMatrix::rotation(z, PI),
            ElementMatrix::rotoreflection(z, PI / 2.0),
            ElementMatrix::rotoreflection(z, 3.0 * PI / 2.0),
        ];
        assert_eq!(g.order(), 4);
        for e in &expected {
            assert!(g.contains(e, MATCH_TOL));
        }
    }

    #[test]
    fn type_three_groups_avoid_minus_identity() {
        for c in [ZMinus(2), ZMinus(6), DV(3), DH(4), DH(6), OctaMinus] {
            let g = realize(c, &AxisFrame::identity()).unwrap();
            assert!(
                !g.contains(&ElementMatrix::minus_identity(), MATCH_TOL),
                "{c}"
            );
            assert!(g.elements().iter().any(|e| !e.is_proper()), "{c}");
        }
    }

    #[test]
    fn infinite_classes_are_rejected() {
        for c in [SO2, O2, SO3, O2Minus, SubgroupClass::O3_FULL] {
            assert!(matches!(
                realize(c, &AxisFrame::identity()),
                Err(OracleError::Infinite(_))
            ));
        }
    }

    #[test]
    fn rejects_non_orthogonal() {
        let m = Mat3::new(1.0, 0.1, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0);
        assert!(ElementMatrix::new(m).is_err());
    }

    #[test]
    fn intersection_examples() {
        let id = AxisFrame::identity();
        let o = realize(Octa, &id).unwrap();
        assert_eq!(
            classify(&intersect(&o, &o, MATCH_TOL).unwrap()).unwrap(),
            Octa
        );
        let turned = realize(Octa, &AxisFrame::from_axis_angle(Vector3::z(), PI / 6.0)).unwrap();
        let g = intersect(&o, &turned, MATCH_TOL).unwrap();
        assert_eq!(classify(&g).unwrap(), Cyclic(4));

        // the quarter turn normalizes T, so T meets its image in all of T
        let t = realize(Tetra, &id).unwrap();
        let quarter = realize(Tetra, &AxisFrame::from_axis_angle(Vector3::z(), PI / 2.0)).unwrap();
        assert_eq!(
            classify(&intersect(&t, &quarter, MATCH_TOL).unwrap()).unwrap(),
            Tetra
        );

        // an eighth turn sends the coordinate axes of O to z and the diagonals
        let eighth = realize(Octa, &AxisFrame::from_axis_angle(Vector3::z(), PI / 4.0)).unwrap();
        let g = intersect(&t, &eighth, MATCH_TOL).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(classify(&g).unwrap(), Dihedral(2));
    }

    #[test]
    fn round_trip_identity_frame() {
        for c in SubgroupClass::enumerate(GroupContext::O3, 16)
            .into_iter()
            .filter(|c| c.is_finite())
        {
            let g = realize(c, &AxisFrame::identity()).unwrap();
            assert_eq!(classify(&g).unwrap(), c);
        }
    }
}
